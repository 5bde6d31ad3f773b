//! Construction of and exact arithmetic in GF(p^k): deterministic moduli,
//! generators, element orders, roots of unity and subfield embeddings.
//!
//! A [`FieldCtx`] is immutable after construction and shared through `Arc`.
//! Elements are dense coefficient vectors over GF(p); no log tables. All
//! computations for a fixed analysis happen in a single ambient field, with
//! intermediate fields represented implicitly as Frobenius-closed subsets.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::numtheory::{self, factorize, is_prime, mod_mul};

/// Polynomial helpers over GF(p) on raw coefficient vectors (low-to-high,
/// trimmed). Used for modulus search and element inversion.
pub(crate) mod fp {
    use crate::numtheory::{mod_inverse, mod_mul};

    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn deg(v: &[u64]) -> Option<usize> {
        if v.is_empty() {
            None
        } else {
            Some(v.len() - 1)
        }
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mod_mul(x, y, p)) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of `a` modulo nonzero `b`.
    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let db = deg(b).expect("division by zero polynomial");
        let lead_inv = mod_inverse(b[db], p).expect("leading coefficient invertible");
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        while let Some(dr) = deg(&r) {
            if dr < db {
                break;
            }
            let c = mod_mul(r[dr], lead_inv, p);
            let shift = dr - db;
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - mod_mul(c, bj, p)) % p;
            }
            trim(&mut r);
        }
        r
    }

    /// Monic gcd of `a` and `b`.
    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        if let Some(d) = deg(&x) {
            let inv = mod_inverse(x[d], p).expect("nonzero lead");
            for c in &mut x {
                *c = mod_mul(*c, inv, p);
            }
        }
        x
    }

    /// `base^e mod m`, all over GF(p).
    pub fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            e >>= 1;
        }
        acc
    }

    /// Extended gcd: returns `(g, u)` with `u*a = g (mod m)`, `g` monic.
    pub fn egcd_inverse(a: &[u64], m: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        trim(&mut r0);
        trim(&mut r1);
        let (mut s0, mut s1) = (vec![], vec![1u64]);
        while !r1.is_empty() {
            // one division step
            let db = deg(&r1).unwrap();
            let lead_inv = mod_inverse(r1[db], p).expect("nonzero lead");
            let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
            let mut r = r0.clone();
            while let Some(dr) = deg(&r) {
                if dr < db {
                    break;
                }
                let c = mod_mul(r[dr], lead_inv, p);
                q[dr - db] = c;
                for (j, &bj) in r1.iter().enumerate() {
                    r[dr - db + j] = (r[dr - db + j] + p - mod_mul(c, bj, p)) % p;
                }
                trim(&mut r);
            }
            trim(&mut q);
            let s2 = sub(&s0, &mul(&q, &s1, p), p);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
        }
        // normalize g monic, scale u accordingly
        if let Some(d) = deg(&r0) {
            let inv = mod_inverse(r0[d], p).expect("nonzero lead");
            for c in &mut r0 {
                *c = mod_mul(*c, inv, p);
            }
            for c in &mut s0 {
                *c = mod_mul(*c, inv, p);
            }
        }
        (r0, s0)
    }
}

/// Irreducibility over GF(p): `X^{p^k} = X (mod f)` and
/// `gcd(X^{p^{k/l}} - X, f) = 1` for every prime `l | k`.
fn fp_is_irreducible(f: &[u64], p: u64) -> bool {
    let k = fp::deg(f).expect("nonzero polynomial");
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let checkpoints: Vec<usize> = factorize(k as u64)
        .expect("degree factorization")
        .factors
        .iter()
        .map(|&(l, _)| k / l as usize)
        .collect();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    for i in 1..=k {
        h = fp::powmod(&h, p, f, p);
        if checkpoints.contains(&i) {
            let g = fp::gcd(&fp::sub(&h, &x, p), f, p);
            if fp::deg(&g) != Some(0) {
                return false;
            }
        }
    }
    h == x
}

/// A finite field GF(p^k), carrying its defining modulus.
///
/// The modulus is the lexicographically smallest monic irreducible of degree
/// `k` over GF(p), comparing low-to-high coefficient lists entry by entry, so
/// repeated constructions agree.
#[derive(Debug)]
pub struct FieldCtx {
    p: u64,
    k: u32,
    /// Monic irreducible of degree k, coefficients low-to-high (length k+1).
    modulus: Vec<u64>,
    cardinality: u64,
    generator_index: OnceLock<u64>,
    group_factors: OnceLock<Vec<(u64, u32)>>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for FieldCtx {}

impl FieldCtx {
    /// Constructs GF(p^k) with the deterministic modulus.
    pub fn new(p: u64, k: u32) -> Result<Arc<FieldCtx>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::NonPositive(0));
        }
        let mut cardinality = 1u64;
        for _ in 0..k {
            cardinality = cardinality
                .checked_mul(p)
                .filter(|&c| c < 1 << 63)
                .ok_or(Error::CardinalityOverflow { p, k })?;
        }
        let modulus = Self::minimal_irreducible(p, k as usize);
        Ok(Arc::new(FieldCtx {
            p,
            k,
            modulus,
            cardinality,
            generator_index: OnceLock::new(),
            group_factors: OnceLock::new(),
        }))
    }

    /// From a prime power `q = p^e`; errors when `q` is not a prime power.
    pub fn from_prime_power(q: u64) -> Result<Arc<FieldCtx>> {
        let f = factorize(q)?;
        match f.factors.as_slice() {
            [(p, e)] => FieldCtx::new(*p, *e),
            _ => Err(Error::NotPrime(q)),
        }
    }

    fn minimal_irreducible(p: u64, k: usize) -> Vec<u64> {
        // Enumerate lower-coefficient tuples (c0,...,c_{k-1}) in lexicographic
        // order, c0 most significant. For k >= 2 a zero constant term is
        // divisible by X, so start with c0 = 1.
        let mut coeffs = vec![0u64; k];
        if k >= 2 {
            coeffs[0] = 1;
        }
        loop {
            let mut f = coeffs.clone();
            f.push(1);
            if fp_is_irreducible(&f, p) {
                return f;
            }
            // odometer with the last index fastest
            let mut i = k;
            loop {
                assert!(i > 0, "no irreducible of degree {k} over GF({p})");
                i -= 1;
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Prime factorization of `cardinality - 1`, computed once per context.
    fn group_order_factors(&self) -> &[(u64, u32)] {
        self.group_factors.get_or_init(|| {
            if self.cardinality == 2 {
                return vec![];
            }
            factorize(self.cardinality - 1)
                .expect("group order is positive")
                .factors
        })
    }
}

/// Operations needing an `Arc<FieldCtx>` receiver.
pub trait FieldCtxExt {
    fn zero(&self) -> FieldElement;
    fn one(&self) -> FieldElement;
    /// The residue `a mod p` as a constant element.
    fn from_int(&self, a: u64) -> FieldElement;
    fn from_coeffs(&self, coeffs: Vec<u64>) -> FieldElement;
    /// Element number `u` in the enumeration order: coefficient `i` is the
    /// `i`-th base-p digit of `u`.
    fn element_from_index(&self, u: u64) -> FieldElement;
    /// The class of X modulo the field modulus.
    fn modulus_root(&self) -> FieldElement;
    /// Deterministic generator of the multiplicative group: the first element
    /// in enumeration order whose order is `cardinality - 1`.
    fn find_generator(&self) -> FieldElement;
    /// `zeta_n = g^{(cardinality-1)/n}`; within one context this family is
    /// compatible: `zeta_n^{n/m} = zeta_m` whenever `m | n`.
    fn primitive_root_of_unity(&self, n: u64) -> Result<FieldElement>;
}

impl FieldCtxExt for Arc<FieldCtx> {
    fn zero(&self) -> FieldElement {
        FieldElement {
            ctx: Arc::clone(self),
            coeffs: vec![0; self.k as usize],
        }
    }

    fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    fn from_int(&self, a: u64) -> FieldElement {
        let mut coeffs = vec![0; self.k as usize];
        coeffs[0] = a % self.p;
        FieldElement {
            ctx: Arc::clone(self),
            coeffs,
        }
    }

    fn from_coeffs(&self, mut coeffs: Vec<u64>) -> FieldElement {
        assert!(
            coeffs.len() <= self.k as usize,
            "coefficient vector longer than extension degree"
        );
        coeffs.resize(self.k as usize, 0);
        for c in &mut coeffs {
            *c %= self.p;
        }
        FieldElement {
            ctx: Arc::clone(self),
            coeffs,
        }
    }

    fn element_from_index(&self, mut u: u64) -> FieldElement {
        assert!(u < self.cardinality, "element index out of range");
        let mut coeffs = vec![0; self.k as usize];
        for c in coeffs.iter_mut() {
            *c = u % self.p;
            u /= self.p;
        }
        FieldElement {
            ctx: Arc::clone(self),
            coeffs,
        }
    }

    fn modulus_root(&self) -> FieldElement {
        if self.k == 1 {
            // X = -c0 in GF(p)[X]/(X + c0)
            return self.from_int(self.p - self.modulus[0] % self.p);
        }
        let mut coeffs = vec![0; self.k as usize];
        coeffs[1] = 1;
        FieldElement {
            ctx: Arc::clone(self),
            coeffs,
        }
    }

    fn find_generator(&self) -> FieldElement {
        let idx = *self.generator_index.get_or_init(|| {
            let target = self.cardinality - 1;
            for u in 1..self.cardinality {
                let g = self.element_from_index(u);
                if g.order().expect("nonzero candidate") == target {
                    return u;
                }
            }
            unreachable!("multiplicative group of a finite field is cyclic")
        });
        self.element_from_index(idx)
    }

    fn primitive_root_of_unity(&self, n: u64) -> Result<FieldElement> {
        let group_order = self.cardinality - 1;
        if n == 0 || group_order % n != 0 {
            return Err(Error::NoSuchRootOfUnity { n, group_order });
        }
        Ok(self.find_generator().pow(group_order / n))
    }
}

/// An element of GF(p^k): a reduced coefficient vector over GF(p), low-to-high.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    ctx: Arc<FieldCtx>,
    coeffs: Vec<u64>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctx.k == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "[")?;
            for (i, c) in self.coeffs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")
        }
    }
}

impl FieldElement {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Position in the enumeration order (inverse of `element_from_index`).
    pub fn index(&self) -> u64 {
        let mut u = 0u64;
        for &c in self.coeffs.iter().rev() {
            u = u * self.ctx.p + c;
        }
        u
    }

    fn assert_same_ctx(&self, other: &FieldElement) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx,
            "field context mismatch: GF({}^{}) vs GF({}^{})",
            self.ctx.p,
            self.ctx.k,
            other.ctx.p,
            other.ctx.k
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_ctx(other);
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_ctx(other);
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        }
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.ctx.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_ctx(other);
        let p = self.ctx.p;
        let k = self.ctx.k as usize;
        if k == 1 {
            return FieldElement {
                ctx: Arc::clone(&self.ctx),
                coeffs: vec![mod_mul(self.coeffs[0], other.coeffs[0], p)],
            };
        }
        let mut buf = vec![0u64; 2 * k - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                buf[i + j] = (buf[i + j] + mod_mul(a, b, p)) % p;
            }
        }
        // reduce X^{k+i} via the monic modulus
        for i in (k..2 * k - 1).rev() {
            let c = buf[i];
            if c == 0 {
                continue;
            }
            buf[i] = 0;
            for (j, &mj) in self.ctx.modulus[..k].iter().enumerate() {
                buf[i - k + j] = (buf[i - k + j] + p - mod_mul(c, mj, p)) % p;
            }
        }
        buf.truncate(k);
        FieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs: buf,
        }
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut acc = self.ctx.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroInversion);
        }
        let p = self.ctx.p;
        let mut a = self.coeffs.clone();
        fp::trim(&mut a);
        let (g, u) = fp::egcd_inverse(&a, &self.ctx.modulus, p);
        assert_eq!(g, vec![1], "element coprime to an irreducible modulus");
        Ok(self.ctx.from_coeffs(u))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    /// Frobenius endomorphism x -> x^p.
    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.ctx.p)
    }

    /// The multiplicative order, by divisor descent on `cardinality - 1`.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroOrder);
        }
        let group = self.ctx.cardinality - 1;
        if group == 0 {
            return Ok(1);
        }
        let mut t = group;
        for &(p, _) in self.ctx.group_order_factors() {
            while t % p == 0 && self.pow(t / p).is_one() {
                t /= p;
            }
        }
        assert!(self.pow(t).is_one(), "descent must land on an annihilator");
        Ok(t)
    }
}

/// A ring embedding GF(p^j) -> GF(p^k) for j | k.
///
/// The image of the source modulus root is the root with the smallest element
/// index in the target; roots are located inside the degree-j subfield (the
/// kernel of Frobenius^j - id), so no full-field scan is needed.
#[derive(Debug, Clone)]
pub struct Embedding {
    src: Arc<FieldCtx>,
    dst: Arc<FieldCtx>,
    /// r^0, ..., r^{j-1} where r is the chosen image of the source root.
    root_powers: Vec<FieldElement>,
    /// Row-reduced matrix for solving preimages, rows of length j + k.
    solver: Lin,
}

/// Row echelon data over GF(p) for repeated consistent-system solves.
#[derive(Debug, Clone)]
struct Lin {
    p: u64,
    cols: usize,
    /// Echelon rows of the (k x j) coordinate matrix, augmented on the fly.
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Lin {
    /// Builds echelon form of the k x j matrix whose columns are `cols`.
    fn new(p: u64, k: usize, col_vecs: &[Vec<u64>]) -> Lin {
        let j = col_vecs.len();
        let mut rows: Vec<Vec<u64>> = (0..k)
            .map(|r| col_vecs.iter().map(|c| c[r]).collect())
            .collect();
        // record row operations by augmenting with the identity
        for (r, row) in rows.iter_mut().enumerate() {
            row.resize(j + k, 0);
            row[j + r] = 1;
        }
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..j {
            let Some(pr) = (rank..k).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pr);
            let inv = numtheory::mod_inverse(rows[rank][col], p).expect("pivot invertible");
            for c in col..j + k {
                rows[rank][c] = mod_mul(rows[rank][c], inv, p);
            }
            for r in 0..k {
                if r != rank && rows[r][col] != 0 {
                    let f = rows[r][col];
                    for c in col..j + k {
                        rows[r][c] = (rows[r][c] + p - mod_mul(f, rows[rank][c], p)) % p;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Lin {
            p,
            cols: j,
            rows,
            pivots,
        }
    }

    /// Solves `M x = y`; `None` when inconsistent.
    fn solve(&self, y: &[u64]) -> Option<Vec<u64>> {
        let j = self.cols;
        let mut x = vec![0u64; j];
        // transformed rhs entry for row r is the augmented part applied to y
        for (r, row) in self.rows.iter().enumerate() {
            let mut rhs = 0u64;
            for (i, &yi) in y.iter().enumerate() {
                rhs = (rhs + mod_mul(row[j + i], yi, self.p)) % self.p;
            }
            if r < self.pivots.len() {
                x[self.pivots[r]] = rhs;
            } else if rhs != 0 {
                return None;
            }
        }
        Some(x)
    }
}

impl Embedding {
    pub fn new(src: &Arc<FieldCtx>, dst: &Arc<FieldCtx>) -> Result<Embedding> {
        let p = src.p;
        let (j, k) = (src.k, dst.k);
        if p != dst.p || k % j != 0 {
            return Err(Error::NoEmbedding { p, j, k });
        }
        let root = if src == dst {
            dst.modulus_root()
        } else {
            Self::minimal_root_in_subfield(src, dst)?
        };
        let mut root_powers = Vec::with_capacity(j as usize);
        let mut acc = dst.one();
        for _ in 0..j {
            root_powers.push(acc.clone());
            acc = acc.mul(&root);
        }
        let cols: Vec<Vec<u64>> = root_powers.iter().map(|e| e.coeffs.clone()).collect();
        let solver = Lin::new(p, k as usize, &cols);
        assert_eq!(
            solver.pivots.len(),
            j as usize,
            "root powers are linearly independent over GF(p)"
        );
        Ok(Embedding {
            src: Arc::clone(src),
            dst: Arc::clone(dst),
            root_powers,
            solver,
        })
    }

    /// The smallest-index root of the source modulus among the elements of
    /// the degree-j subfield of `dst`.
    fn minimal_root_in_subfield(src: &Arc<FieldCtx>, dst: &Arc<FieldCtx>) -> Result<FieldElement> {
        let p = dst.p;
        let (j, k) = (src.k as usize, dst.k as usize);
        let subfield_size = (p as u128).pow(j as u32);
        if subfield_size > 1 << 20 {
            return Err(Error::SubfieldTooLarge(subfield_size as u64));
        }
        // kernel of Frobenius^j - id as a GF(p)-linear map on dst
        let mut basis_images: Vec<Vec<u64>> = Vec::with_capacity(k);
        for i in 0..k {
            let mut coeffs = vec![0u64; k];
            coeffs[i] = 1;
            let mut b = dst.from_coeffs(coeffs);
            for _ in 0..j {
                b = b.frobenius();
            }
            let mut col = b.coeffs;
            col[i] = (col[i] + p - 1) % p;
            basis_images.push(col);
        }
        let kernel = kernel_basis(p, k, &basis_images);
        assert_eq!(kernel.len(), j, "fixed field of Frobenius^j has degree j");

        // enumerate the subfield, evaluate the source modulus, keep roots
        let modulus: Vec<FieldElement> = src.modulus.iter().map(|&c| dst.from_int(c)).collect();
        let mut best: Option<FieldElement> = None;
        let mut combo = vec![0u64; j];
        loop {
            let mut coeffs = vec![0u64; k];
            for (ci, kv) in combo.iter().zip(&kernel) {
                if *ci == 0 {
                    continue;
                }
                for (t, &kc) in kv.iter().enumerate() {
                    coeffs[t] = (coeffs[t] + mod_mul(*ci, kc, p)) % p;
                }
            }
            let cand = dst.from_coeffs(coeffs);
            // Horner evaluation of the source modulus at cand
            let mut val = dst.zero();
            for c in modulus.iter().rev() {
                val = val.mul(&cand).add(c);
            }
            if val.is_zero() {
                let idx = cand.index();
                if best.as_ref().map_or(true, |b| idx < b.index()) {
                    best = Some(cand);
                }
            }
            // odometer over GF(p)^j
            let mut pos = 0;
            loop {
                if pos == j {
                    return Ok(best.expect("irreducible modulus splits in its subfield"));
                }
                combo[pos] += 1;
                if combo[pos] < p {
                    break;
                }
                combo[pos] = 0;
                pos += 1;
            }
        }
    }

    pub fn src(&self) -> &Arc<FieldCtx> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<FieldCtx> {
        &self.dst
    }

    /// Image of `a` in the target field.
    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        assert!(a.ctx() == &self.src, "element not in the embedding source");
        let p = self.dst.p;
        let mut out = self.dst.zero();
        for (&c, rp) in a.coeffs.iter().zip(&self.root_powers) {
            if c == 0 {
                continue;
            }
            for (o, &r) in out.coeffs.iter_mut().zip(&rp.coeffs) {
                *o = (*o + mod_mul(c, r, p)) % p;
            }
        }
        out
    }

    /// Preimage of `y` when it lies in the embedded subfield.
    pub fn preimage(&self, y: &FieldElement) -> Result<FieldElement> {
        assert!(y.ctx() == &self.dst, "element not in the embedding target");
        let x = self.solver.solve(&y.coeffs).ok_or(Error::NotInSubfield)?;
        let cand = self.src.from_coeffs(x);
        Ok(cand)
    }
}

/// Basis of the kernel of the k x k matrix with the given columns over GF(p).
fn kernel_basis(p: u64, k: usize, columns: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = (0..k)
        .map(|r| columns.iter().map(|c| c[r]).collect())
        .collect();
    let mut pivot_col_of_row = Vec::new();
    let mut rank = 0;
    for col in 0..k {
        let Some(pr) = (rank..k).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = numtheory::mod_inverse(rows[rank][col], p).expect("pivot invertible");
        for c in 0..k {
            rows[rank][c] = mod_mul(rows[rank][c], inv, p);
        }
        for r in 0..k {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in 0..k {
                    rows[r][c] = (rows[r][c] + p - mod_mul(f, rows[rank][c], p)) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let mut kernel = Vec::new();
    for free in (0..k).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0u64; k];
        v[free] = 1;
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = (p - rows[r][free] % p) % p;
        }
        kernel.push(v);
    }
    kernel
}

/// Convenience wrapper: embeds `a` into `target`, building the embedding on
/// the fly.
pub fn embed(a: &FieldElement, target: &Arc<FieldCtx>) -> Result<FieldElement> {
    Embedding::new(a.ctx(), target).map(|e| e.apply(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn prime_field_basics() {
        let f7 = FieldCtx::new(7, 1).unwrap();
        assert_eq!(f7.cardinality(), 7);
        // 3 * 5 = 15 = 1 mod 7
        assert!(f7.from_int(3).mul(&f7.from_int(5)).is_one());
        // inv(2) = 4
        assert_eq!(f7.from_int(2).inv().unwrap(), f7.from_int(4));
        assert!(f7.from_int(0).inv().is_err());
    }

    #[test]
    fn make_field_rejects_bad_inputs() {
        assert!(FieldCtx::new(6, 1).is_err());
        assert!(FieldCtx::new(2, 64).is_err());
        assert!(FieldCtx::new(3, 0).is_err());
    }

    #[test]
    fn gf343_modulus_is_minimal_irreducible_cubic() {
        let f = FieldCtx::new(7, 3).unwrap();
        // independent check: a cubic over GF(7) is irreducible iff it has no
        // root; every lex-smaller monic cubic must have a root.
        let m = f.modulus().to_vec();
        let has_root = |lower: &[u64]| {
            (0..7u64).any(|x| {
                let mut v = 1u64; // monic leading coefficient
                for &c in lower.iter().rev() {
                    v = (v * x + c) % 7;
                }
                v == 0
            })
        };
        assert!(!has_root(&m[..3]), "modulus must be irreducible");
        for u in 0..343u64 {
            // decode big-endian so ascending u is lex order, c0 first
            let cand = [u / 49, (u / 7) % 7, u % 7];
            if cand[..] >= m[..3] {
                break;
            }
            assert!(has_root(&cand), "lex-smaller cubic {cand:?} must be reducible");
        }
        // repeated construction agrees
        assert_eq!(FieldCtx::new(7, 3).unwrap().modulus(), f.modulus());
    }

    #[test]
    fn gf16_exists() {
        let f = FieldCtx::new(2, 4).unwrap();
        assert_eq!(f.cardinality(), 16);
        let g = f.find_generator();
        assert_eq!(g.order().unwrap(), 15);
    }

    #[test]
    fn fermat_in_gf343() {
        let f = FieldCtx::new(7, 3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let g = f.element_from_index(rng.gen_range(1..f.cardinality()));
            assert!(g.pow(342).is_one());
        }
    }

    #[test]
    fn element_orders() {
        let f7 = FieldCtx::new(7, 1).unwrap();
        assert_eq!(f7.one().order().unwrap(), 1);
        // 2^3 = 8 = 1, 2^1 and 2^2 nontrivial
        assert_eq!(f7.from_int(2).order().unwrap(), 3);
        assert_eq!(f7.from_int(6).order().unwrap(), 2); // -1
        assert!(f7.zero().order().is_err());
    }

    #[test]
    fn generator_examples() {
        // smallest integer generator of (Z/7Z)^* is 3: ord(3) = 6
        let f7 = FieldCtx::new(7, 1).unwrap();
        assert_eq!(f7.find_generator(), f7.from_int(3));
        let f2 = FieldCtx::new(2, 1).unwrap();
        assert_eq!(f2.find_generator(), f2.one());
        let f343 = FieldCtx::new(7, 3).unwrap();
        assert_eq!(f343.find_generator().order().unwrap(), 342);
    }

    #[test]
    fn roots_of_unity() {
        let f7 = FieldCtx::new(7, 1).unwrap();
        assert!(f7.primitive_root_of_unity(1).unwrap().is_one());
        // g = 3, (7-1)/3 = 2, 3^2 = 2; ord(2) = 3
        let z3 = f7.primitive_root_of_unity(3).unwrap();
        assert_eq!(z3, f7.from_int(2));
        assert_eq!(z3.order().unwrap(), 3);
        assert!(f7.primitive_root_of_unity(4).is_err());

        let f343 = FieldCtx::new(7, 3).unwrap();
        let z9 = f343.primitive_root_of_unity(9).unwrap();
        assert_eq!(z9.order().unwrap(), 9);
    }

    #[test]
    fn root_of_unity_family_compatible() {
        // zeta_m = zeta_n^{n/m} for all m | n within one context
        let f343 = FieldCtx::new(7, 3).unwrap();
        let group = f343.cardinality() - 1; // 342 = 2 * 3^2 * 19
        for n in crate::numtheory::divisors(group).unwrap() {
            let zn = f343.primitive_root_of_unity(n).unwrap();
            for m in crate::numtheory::divisors(n).unwrap() {
                let zm = f343.primitive_root_of_unity(m).unwrap();
                assert_eq!(zn.pow(n / m), zm, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn frobenius_is_homomorphic() {
        for (p, k) in [(2u64, 8u32), (3, 4), (7, 3), (13, 2)] {
            let f = FieldCtx::new(p, k).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(p * 100 + k as u64);
            for _ in 0..100 {
                let a = f.element_from_index(rng.gen_range(0..f.cardinality()));
                let b = f.element_from_index(rng.gen_range(0..f.cardinality()));
                assert_eq!(a.add(&b).frobenius(), a.frobenius().add(&b.frobenius()));
                assert_eq!(a.mul(&b).frobenius(), a.frobenius().mul(&b.frobenius()));
            }
        }
    }

    #[test]
    fn embedding_is_ring_homomorphic() {
        let src = FieldCtx::new(3, 2).unwrap();
        let dst = FieldCtx::new(3, 6).unwrap();
        let e = Embedding::new(&src, &dst).unwrap();
        assert!(e.apply(&src.zero()).is_zero());
        assert!(e.apply(&src.one()).is_one());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(36);
        for _ in 0..100 {
            let a = src.element_from_index(rng.gen_range(0..src.cardinality()));
            let b = src.element_from_index(rng.gen_range(0..src.cardinality()));
            assert_eq!(e.apply(&a.mul(&b)), e.apply(&a).mul(&e.apply(&b)));
            assert_eq!(e.apply(&a.add(&b)), e.apply(&a).add(&e.apply(&b)));
            // round trip
            assert_eq!(e.preimage(&e.apply(&a)).unwrap(), a);
        }
    }

    #[test]
    fn embedding_of_prime_field_is_constant() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let f125 = FieldCtx::new(5, 3).unwrap();
        let e = Embedding::new(&f5, &f125).unwrap();
        for a in 0..5 {
            assert_eq!(e.apply(&f5.from_int(a)), f125.from_int(a));
        }
    }

    #[test]
    fn embedding_composes() {
        // GF(p) -> GF(p^2) -> GF(p^6) equals GF(p) -> GF(p^6) on constants
        let base = FieldCtx::new(5, 1).unwrap();
        let mid = FieldCtx::new(5, 2).unwrap();
        let top = FieldCtx::new(5, 6).unwrap();
        let e1 = Embedding::new(&base, &mid).unwrap();
        let e2 = Embedding::new(&mid, &top).unwrap();
        let direct = Embedding::new(&base, &top).unwrap();
        for a in 0..5 {
            let x = base.from_int(a);
            assert_eq!(e2.apply(&e1.apply(&x)), direct.apply(&x));
        }
    }

    #[test]
    fn preimage_rejects_outsiders() {
        let src = FieldCtx::new(2, 2).unwrap();
        let dst = FieldCtx::new(2, 4).unwrap();
        let e = Embedding::new(&src, &dst).unwrap();
        let image: std::collections::HashSet<u64> =
            (0..4).map(|u| e.apply(&src.element_from_index(u)).index()).collect();
        let mut outside = 0;
        for u in 0..16 {
            let y = dst.element_from_index(u);
            let pre = e.preimage(&y);
            if image.contains(&u) {
                assert!(pre.is_ok());
            } else {
                assert_eq!(pre.unwrap_err(), Error::NotInSubfield);
                outside += 1;
            }
        }
        assert_eq!(outside, 12);
    }

    #[test]
    fn big_ambient_embedding_avoids_full_scan() {
        // GF(2^2) inside GF(2^36): full scan would be infeasible, the
        // subfield kernel path must handle it.
        let src = FieldCtx::new(2, 2).unwrap();
        let dst = FieldCtx::new(2, 36).unwrap();
        let e = Embedding::new(&src, &dst).unwrap();
        let a = src.element_from_index(2);
        let b = src.element_from_index(3);
        assert_eq!(e.apply(&a.mul(&b)), e.apply(&a).mul(&e.apply(&b)));
        assert_eq!(e.preimage(&e.apply(&a)).unwrap(), a);
    }
}
