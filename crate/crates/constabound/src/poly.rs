//! Univariate polynomials over a field context: arithmetic, polynomial order,
//! defining sets, minimal polynomials of cyclotomic cosets, binomials from
//! equal-difference sets and cyclotomic polynomials.
//!
//! Text format (shared with the CLI): comma-separated coefficients
//! low-to-high over the prime field, e.g. `5,0,1` is X^2 + 5;
//! extension-field coefficients as bracketed vectors, e.g. `[1,2],0,[0,1]`.

use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::Coset;
use crate::error::{Error, Result};
use crate::field::{Embedding, FieldCtx, FieldCtxExt, FieldElement};
use crate::numtheory::{divisors, factorize, gcd, lcm, mult_order};

/// Dense univariate polynomial; no trailing zeros, the zero polynomial has an
/// empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ctx: Arc<FieldCtx>,
    coeffs: Vec<FieldElement>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Poly {
    pub fn zero(ctx: &Arc<FieldCtx>) -> Poly {
        Poly {
            ctx: Arc::clone(ctx),
            coeffs: vec![],
        }
    }

    pub fn one(ctx: &Arc<FieldCtx>) -> Poly {
        Poly::from_elems(ctx, vec![ctx.one()])
    }

    pub fn x(ctx: &Arc<FieldCtx>) -> Poly {
        Poly::from_elems(ctx, vec![ctx.zero(), ctx.one()])
    }

    pub fn from_elems(ctx: &Arc<FieldCtx>, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        for c in &coeffs {
            assert!(c.ctx() == ctx, "coefficient from a different field");
        }
        Poly {
            ctx: Arc::clone(ctx),
            coeffs,
        }
    }

    /// Integer coefficients, reduced into the prime subfield.
    pub fn from_ints(ctx: &Arc<FieldCtx>, coeffs: &[i64]) -> Poly {
        let p = ctx.characteristic() as i64;
        let elems = coeffs
            .iter()
            .map(|&c| ctx.from_int(c.rem_euclid(p) as u64))
            .collect();
        Poly::from_elems(ctx, elems)
    }

    /// `X^e - c`.
    pub fn binomial(ctx: &Arc<FieldCtx>, e: usize, c: &FieldElement) -> Poly {
        let mut coeffs = vec![ctx.zero(); e + 1];
        coeffs[0] = c.neg();
        coeffs[e] = ctx.one();
        Poly::from_elems(ctx, coeffs)
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(FieldElement::is_one)
    }

    /// Number of nonzero coefficients.
    pub fn hamming_weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Divides by the leading coefficient; the flag reports whether anything
    /// changed (callers surface it as a warning).
    pub fn monic_normalized(&self) -> Result<(Poly, bool)> {
        let Some(lead) = self.coeffs.last() else {
            return Err(Error::ZeroPolyDivision);
        };
        if lead.is_one() {
            return Ok((self.clone(), false));
        }
        let inv = lead.inv()?;
        let coeffs = self.coeffs.iter().map(|c| c.mul(&inv)).collect();
        Ok((Poly::from_elems(&self.ctx, coeffs), true))
    }

    fn assert_same_ctx(&self, other: &Poly) {
        assert!(self.ctx == other.ctx, "polynomial context mismatch");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_ctx(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Poly::from_elems(&self.ctx, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.assert_same_ctx(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        Poly::from_elems(&self.ctx, coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly::from_elems(&self.ctx, self.coeffs.iter().map(FieldElement::neg).collect())
    }

    pub fn scale(&self, s: &FieldElement) -> Poly {
        Poly::from_elems(&self.ctx, self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same_ctx(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut out = vec![self.ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::from_elems(&self.ctx, out)
    }

    /// `(quotient, remainder)` with `deg(rem) < deg(divisor)`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.assert_same_ctx(divisor);
        let Some(db) = divisor.degree() else {
            return Err(Error::ZeroPolyDivision);
        };
        let lead_inv = divisor.coeffs[db].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.ctx.zero(); self.coeffs.len().saturating_sub(db)];
        while rem.len() > db {
            let dr = rem.len() - 1;
            let c = rem[dr].mul(&lead_inv);
            if !c.is_zero() {
                quot[dr - db] = c.clone();
                for (j, bj) in divisor.coeffs.iter().enumerate() {
                    rem[dr - db + j] = rem[dr - db + j].sub(&c.mul(bj));
                }
            }
            rem.pop();
            while rem.last().is_some_and(FieldElement::is_zero) {
                rem.pop();
            }
        }
        Ok((
            Poly::from_elems(&self.ctx, quot),
            Poly::from_elems(&self.ctx, rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.assert_same_ctx(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        a.monic_normalized().expect("nonzero").0
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.ctx.from_int(i as u64)))
            .collect();
        Poly::from_elems(&self.ctx, coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        let mut acc = self.ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// `self^e mod modulus`.
    pub fn powmod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut acc = Poly::one(&self.ctx).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Text form parse; see the module docs for the format.
    pub fn parse(ctx: &Arc<FieldCtx>, text: &str) -> Result<Poly> {
        let mut coeffs = Vec::new();
        for token in split_top_level(text)? {
            coeffs.push(parse_element(ctx, token.trim())?);
        }
        Ok(Poly::from_elems(ctx, coeffs))
    }
}

/// Splits on commas that are not inside brackets.
fn split_top_level(text: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse("unbalanced ']'".into()))?
            }
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced '['".into()));
    }
    parts.push(&text[start..]);
    Ok(parts)
}

/// Parses one coefficient: a bare residue or a bracketed vector over GF(p).
pub fn parse_element(ctx: &Arc<FieldCtx>, token: &str) -> Result<FieldElement> {
    let token = token.trim();
    if token.is_empty() {
        return Err(Error::Parse("empty coefficient".into()));
    }
    let p = ctx.characteristic() as i64;
    if let Some(inner) = token.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("malformed vector '{token}'")))?;
        let mut digits = Vec::new();
        for part in inner.split(',') {
            let v: i64 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer '{part}'")))?;
            digits.push(v.rem_euclid(p) as u64);
        }
        if digits.len() > ctx.degree() as usize {
            return Err(Error::Parse(format!(
                "vector '{token}' longer than the extension degree {}",
                ctx.degree()
            )));
        }
        Ok(ctx.from_coeffs(digits))
    } else {
        let v: i64 = token
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer '{token}'")))?;
        Ok(ctx.from_int(v.rem_euclid(p) as u64))
    }
}

/// Simple-rooted check: monic, nonzero constant term, and coprime to its
/// derivative. Errors on constant input.
pub fn is_simple_rooted(f: &Poly) -> Result<bool> {
    match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(_) => {}
    }
    if !f.is_monic() || f.coeff(0).is_zero() {
        return Ok(false);
    }
    let g = f.gcd(&f.derivative());
    Ok(g.degree() == Some(0))
}

fn require_simple_rooted(f: &Poly) -> Result<()> {
    if !is_simple_rooted(f)? {
        return Err(Error::NotSimpleRooted(
            "needs a monic squarefree polynomial with nonzero constant term",
        ));
    }
    Ok(())
}

/// The order of `f`: the smallest n with `f | X^n - 1`.
///
/// Computed as the lcm, over the distinct-degree parts of `f`, of the
/// multiplicative order of X in the corresponding quotient ring (divisor
/// descent on `q^d - 1`), then verified by the explicit divisibility check.
pub fn poly_order(f: &Poly) -> Result<u64> {
    require_simple_rooted(f)?;
    let q = f.ctx().cardinality();
    let x = Poly::x(f.ctx());
    let mut remaining = f.clone();
    let mut h = x.rem(&remaining)?;
    let mut n = 1u64;
    let mut d = 0u32;
    while remaining.degree() > Some(0) {
        d += 1;
        h = h.powmod(q, &remaining)?;
        let part = remaining.gcd(&h.sub(&x.rem(&remaining)?));
        if part.degree() > Some(0) {
            let group = q
                .checked_pow(d)
                .filter(|&c| c < 1 << 63)
                .ok_or(Error::Overflow("polynomial order beyond the 63-bit range"))?
                - 1;
            let mut t = group;
            for &(pf, _) in &factorize(group)?.factors {
                while t % pf == 0 && x.powmod(t / pf, &part)? == Poly::one(f.ctx()) {
                    t /= pf;
                }
            }
            assert!(
                x.powmod(t, &part)? == Poly::one(f.ctx()),
                "descent must land on an annihilator"
            );
            n = lcm(n, t)?;
            remaining = remaining.divmod(&part)?.0;
            if remaining.degree() > Some(0) {
                h = h.rem(&remaining)?;
            }
        }
    }
    // explicit divisibility check
    let xn = x.powmod(n, f)?;
    assert!(
        xn == Poly::one(f.ctx()),
        "computed order must annihilate: f does not divide X^n - 1"
    );
    Ok(n)
}

/// A subset of Z/nZ stable under multiplication by q, recording the base
/// prime power and, when derived from a polynomial, the ambient context used
/// to pin the root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    n: u64,
    q: u64,
    elems: Vec<u64>,
    ctx: Option<Arc<FieldCtx>>,
}

impl DefiningSet {
    /// Validates range, Galois stability and nonemptiness.
    pub fn new(n: u64, q: u64, mut elems: Vec<u64>) -> Result<DefiningSet> {
        if n == 0 {
            return Err(Error::NonPositive(0));
        }
        if gcd(n, q) != 1 {
            return Err(Error::NotCoprime { m: q, n });
        }
        elems.sort_unstable();
        elems.dedup();
        if elems.is_empty() {
            return Err(Error::EmptyDefiningSet);
        }
        if elems.last().is_some_and(|&g| g >= n) {
            return Err(Error::Parse(format!("element out of range mod {n}")));
        }
        for &g in &elems {
            let img = (g as u128 * q as u128 % n as u128) as u64;
            if elems.binary_search(&img).is_err() {
                return Err(Error::NotGaloisStable { n, q });
            }
        }
        Ok(DefiningSet {
            n,
            q,
            elems,
            ctx: None,
        })
    }

    pub fn with_ctx(mut self, ctx: Arc<FieldCtx>) -> DefiningSet {
        self.ctx = Some(ctx);
        self
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, g: u64) -> bool {
        self.elems.binary_search(&(g % self.n)).is_ok()
    }

    pub fn ctx(&self) -> Option<&Arc<FieldCtx>> {
        self.ctx.as_ref()
    }

    /// lcm of n_gamma over the elements: the order of the polynomial this set
    /// defines. Equals `n` exactly when the set is a genuine defining set at
    /// its own modulus.
    pub fn order(&self) -> u64 {
        self.elems
            .iter()
            .map(|&g| self.n / gcd(self.n, g))
            .fold(1u64, |a, b| lcm(a, b).expect("divisors of n"))
    }

    /// Partition into cyclotomic cosets, ascending by representative.
    pub fn cosets(&self) -> Vec<Coset> {
        let mut seen = vec![false; self.elems.len()];
        let mut out = Vec::new();
        for (i, &g) in self.elems.iter().enumerate() {
            if seen[i] {
                continue;
            }
            let c = Coset::new(self.n, self.q, g).expect("validated coprime");
            for e in c.elems() {
                let idx = self
                    .elems
                    .binary_search(e)
                    .expect("Galois-stable set contains the whole orbit");
                seen[idx] = true;
            }
            out.push(c);
        }
        out
    }
}

/// The splitting field of X^n - 1 over GF(q): the ambient context holding a
/// pinned primitive n-th root of unity, with the base-field embedding.
pub struct SplittingField {
    q: u64,
    n: u64,
    base: Arc<FieldCtx>,
    ambient: Arc<FieldCtx>,
    embedding: Embedding,
    /// zeta^0 .. zeta^{n-1}
    zeta_pows: Vec<FieldElement>,
}

impl SplittingField {
    pub fn new(q: u64, n: u64) -> Result<SplittingField> {
        let base = FieldCtx::from_prime_power(q)?;
        Self::over(base, n)
    }

    pub fn over(base: Arc<FieldCtx>, n: u64) -> Result<SplittingField> {
        let q = base.cardinality();
        if n == 0 {
            return Err(Error::NonPositive(0));
        }
        if gcd(n, q) != 1 {
            return Err(Error::NotCoprime { m: q, n });
        }
        let t = mult_order(q, n)?;
        let p = base.characteristic();
        let e = base.degree();
        let k = (e as u64)
            .checked_mul(t)
            .filter(|&k| k <= u32::MAX as u64)
            .ok_or(Error::CardinalityOverflow { p, k: u32::MAX })?;
        let ambient = if k == e as u64 {
            Arc::clone(&base)
        } else {
            FieldCtx::new(p, k as u32)?
        };
        let embedding = Embedding::new(&base, &ambient)?;
        let zeta = ambient.primitive_root_of_unity(n)?;
        let mut zeta_pows = Vec::with_capacity(n as usize);
        let mut acc = ambient.one();
        for _ in 0..n {
            zeta_pows.push(acc.clone());
            acc = acc.mul(&zeta);
        }
        assert!(acc.is_one(), "zeta has exact order n");
        Ok(SplittingField {
            q,
            n,
            base,
            ambient,
            embedding,
            zeta_pows,
        })
    }

    /// Splitting field sized for a specific polynomial: n = ord(f).
    pub fn for_poly(f: &Poly) -> Result<SplittingField> {
        let n = poly_order(f)?;
        Self::over(Arc::clone(f.ctx()), n)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn base(&self) -> &Arc<FieldCtx> {
        &self.base
    }

    pub fn ambient(&self) -> &Arc<FieldCtx> {
        &self.ambient
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    /// `zeta_n^g` with the exponent reduced mod n.
    pub fn zeta_pow(&self, g: u64) -> &FieldElement {
        &self.zeta_pows[(g % self.n) as usize]
    }

    /// Lifts a base-field polynomial into the ambient field.
    pub fn lift(&self, f: &Poly) -> Poly {
        assert!(f.ctx() == &self.base, "polynomial not over the base field");
        let coeffs = f.coeffs().iter().map(|c| self.embedding.apply(c)).collect();
        Poly::from_elems(&self.ambient, coeffs)
    }

    /// Maps an ambient polynomial with base-field coefficients back down.
    pub fn lower(&self, f: &Poly) -> Result<Poly> {
        assert!(
            f.ctx() == &self.ambient,
            "polynomial not over the ambient field"
        );
        let coeffs: Result<Vec<_>> = f
            .coeffs()
            .iter()
            .map(|c| self.embedding.preimage(c))
            .collect();
        Ok(Poly::from_elems(&self.base, coeffs?))
    }

    /// The defining set of `f`: exponents g with `f(zeta^g) = 0`, by direct
    /// evaluation at every power of zeta. Requires `ord(f) = n`.
    pub fn defining_set(&self, f: &Poly) -> Result<DefiningSet> {
        require_simple_rooted(f)?;
        let lifted = self.lift(f);
        let mut elems = Vec::new();
        for g in 0..self.n {
            if lifted.eval(self.zeta_pow(g)).is_zero() {
                elems.push(g);
            }
        }
        let deg = f.degree().expect("nonconstant");
        assert_eq!(
            elems.len(),
            deg,
            "a simple-rooted polynomial of order n has deg(f) roots among the n-th roots of unity"
        );
        let t = DefiningSet::new(self.n, self.q, elems)?.with_ctx(Arc::clone(&self.ambient));
        assert_eq!(t.order(), self.n, "defining set must have full order n");
        Ok(t)
    }

    /// `M_gamma(X) = prod_i (X - zeta^{gamma q^i})` over the ambient field;
    /// its coefficients are checked to lie in the embedded base field.
    pub fn minimal_polynomial(&self, c: &Coset) -> Poly {
        assert_eq!(c.n(), self.n, "coset modulus must match the splitting field");
        let mut m = Poly::one(&self.ambient);
        for &g in c.elems() {
            let lin = Poly::from_elems(
                &self.ambient,
                vec![self.zeta_pow(g).neg(), self.ambient.one()],
            );
            m = m.mul(&lin);
        }
        for coeff in m.coeffs() {
            assert!(
                self.embedding.preimage(coeff).is_ok(),
                "minimal polynomial coefficients lie in the base field"
            );
        }
        m
    }

    /// `M_gamma` expressed over the base field.
    pub fn minimal_polynomial_base(&self, c: &Coset) -> Poly {
        self.lower(&self.minimal_polynomial(c))
            .expect("coefficients checked in the base field")
    }

    /// Binomial attached to an equal-difference set `E` with difference `d`:
    /// `X^{n/d} - zeta^{gamma n/d}` together with the rationality flag
    /// `gamma q = gamma (mod d)` deciding whether it is over the base field.
    pub fn binomial_from_ed_set(&self, elems: &[u64], d: u64) -> Result<(Poly, bool)> {
        if d == 0 || self.n % d != 0 {
            return Err(Error::NotEqualDifference(format!(
                "difference {d} does not divide {}",
                self.n
            )));
        }
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let Some(&gamma) = sorted.first() else {
            return Err(Error::NotEqualDifference("empty set".into()));
        };
        let len = self.n / d;
        let mut expected: Vec<u64> = (0..len).map(|j| (gamma + j * d) % self.n).collect();
        expected.sort_unstable();
        if sorted != expected {
            return Err(Error::NotEqualDifference(format!(
                "set is not the difference-{d} progression through {gamma} mod {}",
                self.n
            )));
        }
        let exponent = (gamma as u128 * (self.n / d) as u128 % self.n as u128) as u64;
        let poly = Poly::binomial(&self.ambient, len as usize, self.zeta_pow(exponent));
        let rational = (gamma as u128 * self.q as u128) % d as u128 == (gamma % d) as u128;
        Ok((poly, rational))
    }

    /// The binomial factorization of `M_gamma` induced by the coset
    /// decomposition with common difference `d`; the product is checked to
    /// reproduce `M_gamma` exactly.
    pub fn binomial_factorization(&self, c: &Coset, d: u64) -> Result<Vec<Poly>> {
        let classes = crate::cyclotomic::coset_med(c, d)?;
        let mut factors = Vec::new();
        for class in classes.classes() {
            factors.push(self.binomial_from_ed_set(class, d)?.0);
        }
        let product = factors
            .iter()
            .fold(Poly::one(&self.ambient), |acc, b| acc.mul(b));
        assert_eq!(
            product,
            self.minimal_polynomial(c),
            "binomial factors must multiply back to the minimal polynomial"
        );
        Ok(factors)
    }
}

/// The cosets whose minimal polynomials multiply to `f`; the product is
/// checked exactly.
pub fn factor_into_cosets(f: &Poly) -> Result<(SplittingField, Vec<Coset>)> {
    let sf = SplittingField::for_poly(f)?;
    let t = sf.defining_set(f)?;
    let cosets = t.cosets();
    let product = cosets.iter().fold(Poly::one(sf.ambient()), |acc, c| {
        acc.mul(&sf.minimal_polynomial(c))
    });
    assert_eq!(
        product,
        sf.lift(f),
        "coset minimal polynomials must multiply to f"
    );
    Ok((sf, cosets))
}

/// The defining set of `f` at n = ord(f), with the ambient context attached.
pub fn defining_set(f: &Poly) -> Result<DefiningSet> {
    let sf = SplittingField::for_poly(f)?;
    sf.defining_set(f)
}

/// The n-th cyclotomic polynomial with coefficients reduced into `ctx`,
/// by the quotient recursion `Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic_polynomial(n: u64, ctx: &Arc<FieldCtx>) -> Result<Poly> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    if n % ctx.characteristic() == 0 {
        return Err(Error::NotCoprime {
            m: ctx.characteristic(),
            n,
        });
    }
    let mut memo: Vec<(u64, Poly)> = Vec::new();
    for d in divisors(n)? {
        let xd_minus_1 = Poly::binomial(ctx, d as usize, &ctx.one());
        let mut quot = xd_minus_1;
        for (e, phi) in &memo {
            if d % e == 0 {
                let (q, r) = quot.divmod(phi)?;
                assert!(r.is_zero(), "cyclotomic recursion divides exactly");
                quot = q;
            }
        }
        memo.push((d, quot));
    }
    Ok(memo.pop().expect("n is its own divisor").1)
}
