use thiserror::Error;

/// Errors reported by the library.
///
/// Precondition violations carry enough context to explain which hypothesis
/// failed; internal cross-check failures (identities that are theorems) panic
/// instead, since they indicate a bug rather than bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input must be a positive integer, got {0}")]
    NonPositive(i128),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{m} and {n} are not coprime")]
    NotCoprime { m: u64, n: u64 },

    #[error("lift-the-exponent hypothesis violated: {0}")]
    LteHypothesis(String),

    #[error("field cardinality {p}^{k} does not fit in 63 bits")]
    CardinalityOverflow { p: u64, k: u32 },

    #[error("cannot invert zero")]
    ZeroInversion,

    #[error("the zero element has no multiplicative order")]
    ZeroOrder,

    #[error("division by zero polynomial")]
    ZeroPolyDivision,

    #[error("{n} does not divide the multiplicative group order {group_order}")]
    NoSuchRootOfUnity { n: u64, group_order: u64 },

    #[error("no embedding GF({p}^{j}) -> GF({p}^{k}): {j} does not divide {k}")]
    NoEmbedding { p: u64, j: u32, k: u32 },

    #[error("subfield with {0} elements is too large to enumerate")]
    SubfieldTooLarge(u64),

    #[error("element does not lie in the embedded subfield")]
    NotInSubfield,

    #[error("polynomial is constant")]
    ConstantPolynomial,

    #[error("polynomial is not simple-rooted: {0}")]
    NotSimpleRooted(&'static str),

    #[error("set {{...}} mod {n} is not stable under multiplication by {q}")]
    NotGaloisStable { n: u64, q: u64 },

    #[error("defining set must be nonempty")]
    EmptyDefiningSet,

    #[error("{d} is not an admissible common difference (not in the stabilizer divisor set)")]
    NoSuchMedRepresentation { d: u64 },

    #[error("equal-difference set expected: {0}")]
    NotEqualDifference(String),

    #[error("MED representations have different base sets")]
    BaseMismatch,

    #[error("bound integrality violated: tau*d = {taud} is not divisible by n = {n}")]
    BoundIntegrality { taud: u64, n: u64 },

    #[error("lambda must be nonzero")]
    ZeroLambda,

    #[error("generator polynomial must be monic")]
    NonMonicGenerator,

    #[error("length {m} is divisible by the field characteristic {p} (repeated-root case)")]
    RepeatedRootLength { m: u64, p: u64 },

    #[error("generator polynomial does not divide X^{m} - lambda")]
    NotADivisor { m: u64 },

    #[error("zero code has no nonzero codeword")]
    ZeroCode,

    #[error("exhaustive search needs {required} codeword evaluations, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("alphabet of size {0} is too large for the distance search tables")]
    AlphabetTooLarge(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
