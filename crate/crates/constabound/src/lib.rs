//! Hamming-distance bounds for simple-rooted constacyclic codes, driven by
//! equal-difference structure in the defining sets of their generator
//! polynomials.
//!
//! The pipeline: a generator polynomial over GF(q) determines a defining set
//! of exponents modulo its order n; every partition of that set into
//! arithmetic progressions sharing one common difference yields an upper
//! bound on the minimum distance of the code; the family of all such bounds
//! is classified by the translation stabilizer of the set, with the classical
//! Singleton bound as its weakest member. A brute-force minimum-distance
//! oracle validates every bound at desk scale.

pub mod bounds;
pub mod cli;
pub mod codes;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod medrep;
pub mod numtheory;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
