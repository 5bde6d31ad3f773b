//! Constacyclic code model: construction from (q, m, lambda, f), the
//! constacyclic shift, divisor enumeration through the root-index system of
//! X^m - lambda, and a budget-bounded exhaustive minimum-distance oracle that
//! validates every bound empirically.

use std::sync::Arc;

use crate::bounds::{bound_report, BoundReport};
use crate::cyclotomic::Coset;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldCtxExt, FieldElement};
use crate::numtheory::gcd;
use crate::poly::{defining_set, DefiningSet, Poly, SplittingField};

/// Default cap on exhaustive codeword enumeration.
pub const DEFAULT_DISTANCE_BUDGET: u128 = 10_000_000;

/// A lambda-constacyclic code of length m over GF(q), as the ideal generated
/// by a monic divisor of X^m - lambda.
#[derive(Debug, Clone)]
pub struct ConstacyclicCode {
    m: u64,
    lambda: FieldElement,
    generator: Poly,
    dimension: u64,
}

/// Validates and assembles a code: lambda nonzero, length coprime to the
/// characteristic (the simple-rooted regime), generator monic and an exact
/// divisor of X^m - lambda.
pub fn build_code(m: u64, lambda: &FieldElement, f: &Poly) -> Result<ConstacyclicCode> {
    let ctx = f.ctx();
    assert!(lambda.ctx() == ctx, "lambda and generator fields must match");
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    if m == 0 {
        return Err(Error::NonPositive(0));
    }
    let p = ctx.characteristic();
    if m % p == 0 {
        return Err(Error::RepeatedRootLength { m, p });
    }
    if !f.is_monic() {
        return Err(Error::NonMonicGenerator);
    }
    let deg = f.degree().expect("monic implies nonzero") as u64;
    let modulus = Poly::binomial(ctx, m as usize, lambda);
    if deg > m || !f.divides(&modulus)? {
        return Err(Error::NotADivisor { m });
    }
    Ok(ConstacyclicCode {
        m,
        lambda: lambda.clone(),
        generator: f.clone(),
        dimension: m - deg,
    })
}

impl ConstacyclicCode {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.generator.ctx()
    }

    pub fn q(&self) -> u64 {
        self.ctx().cardinality()
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn lambda(&self) -> &FieldElement {
        &self.lambda
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn dimension(&self) -> u64 {
        self.dimension
    }

    /// The lambda-constacyclic shift `(c_0,...,c_{m-1}) -> (lambda c_{m-1},
    /// c_0,...,c_{m-2})`.
    pub fn shift(&self, word: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(word.len() as u64, self.m, "word length must be m");
        let mut out = Vec::with_capacity(word.len());
        out.push(self.lambda.mul(&word[word.len() - 1]));
        out.extend_from_slice(&word[..word.len() - 1]);
        out
    }

    /// Ideal membership: a length-m word lies in the code iff its polynomial
    /// is divisible by the generator.
    pub fn contains(&self, word: &[FieldElement]) -> bool {
        assert_eq!(word.len() as u64, self.m, "word length must be m");
        let w = Poly::from_elems(self.ctx(), word.to_vec());
        self.generator.divides(&w).expect("nonzero generator")
    }
}

/// Outcome of an exhaustive distance search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    pub distance: u64,
    /// Always true: the search covers every nonzero codeword (up to scalar
    /// multiples, which preserve weight) or refuses to run.
    pub exhaustive: bool,
    /// A minimum-weight codeword, length m.
    pub witness: Vec<FieldElement>,
}

/// Add/mul tables over element indices for small fields; the inner loop of
/// the distance search runs entirely on these.
struct SmallField {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

impl SmallField {
    fn build(ctx: &Arc<FieldCtx>) -> Result<SmallField> {
        let q64 = ctx.cardinality();
        if q64 > 2048 {
            return Err(Error::AlphabetTooLarge(q64));
        }
        let q = q64 as usize;
        let elems: Vec<FieldElement> = (0..q64).map(|u| ctx.element_from_index(u)).collect();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * q + j] = a.add(b).index() as u16;
                mul[i * q + j] = a.mul(b).index() as u16;
            }
        }
        Ok(SmallField { q, add, mul })
    }

    #[inline]
    fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q + b as usize]
    }
}

/// Exact minimum Hamming weight over all nonzero codewords, by exhaustive
/// enumeration of monic message polynomials (scalar multiples share weight,
/// giving a (q-1)-fold reduction with the identical minimum).
///
/// Refuses (rather than sampling) when `q^k - 1` exceeds the budget.
pub fn brute_force_distance(code: &ConstacyclicCode, budget: u128) -> Result<DistanceResult> {
    let ctx = code.ctx();
    let k = code.dimension;
    if code.generator.degree() == Some(0) {
        // unit generator: the whole space, so the weight-1 word (1,0,...,0)
        let mut witness = vec![ctx.zero(); code.m as usize];
        witness[0] = ctx.one();
        return Ok(DistanceResult {
            distance: 1,
            exhaustive: true,
            witness,
        });
    }
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let q = ctx.cardinality();
    let required = (q as u128)
        .checked_pow(u32::try_from(k).map_err(|_| Error::Overflow("dimension"))?)
        .map(|v| v - 1)
        .unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let table = SmallField::build(ctx)?;
    let gen_idx: Vec<u16> = code
        .generator
        .coeffs()
        .iter()
        .map(|c| c.index() as u16)
        .collect();
    let tau = gen_idx.len() - 1;

    let mut best_weight = u64::MAX;
    let mut best_word: Vec<u16> = Vec::new();
    let mut conv = vec![0u16; code.m as usize];
    // messages in lexicographic coefficient order within each degree
    for da in 0..k as usize {
        let mut digits = vec![0u16; da]; // lower coefficients; leading is 1
        loop {
            // conv(a, f) has degree da + tau < m: no reduction needed
            let len = da + tau + 1;
            conv[..len].fill(0);
            for (i, &ai) in digits.iter().chain(std::iter::once(&1u16)).enumerate() {
                if ai == 0 {
                    continue;
                }
                for (j, &fj) in gen_idx.iter().enumerate() {
                    if fj == 0 {
                        continue;
                    }
                    conv[i + j] = table.add(conv[i + j], table.mul(ai, fj));
                }
            }
            let weight = conv[..len].iter().filter(|&&c| c != 0).count() as u64;
            if weight < best_weight {
                best_weight = weight;
                best_word = conv[..len].to_vec();
            }
            // odometer, lowest digit fastest
            let mut pos = 0;
            loop {
                if pos == da {
                    break;
                }
                digits[pos] += 1;
                if (digits[pos] as u64) < q {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == da {
                break;
            }
        }
    }
    // weight-1 codewords exist only for a unit generator, handled above
    assert!(
        best_weight >= 2,
        "nonunit generator admits no weight-1 codeword"
    );
    let mut witness: Vec<FieldElement> = best_word
        .iter()
        .map(|&i| ctx.element_from_index(i as u64))
        .collect();
    witness.resize(code.m as usize, ctx.zero());
    debug_assert!(code.contains(&witness));
    Ok(DistanceResult {
        distance: best_weight,
        exhaustive: true,
        witness,
    })
}

/// How the distance landed for a bound report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistanceStatus {
    Computed(DistanceResult),
    BudgetExceeded { required: u128, budget: u128 },
}

/// Bounds plus (budget permitting) the exact distance for one code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeAnalysis {
    /// Generator X^m - lambda: no nonzero codewords, report suppressed.
    ZeroCode,
    /// Unit generator: the full space, distance 1.
    FullSpace { distance: DistanceResult },
    Proper {
        defining_set: DefiningSet,
        report: BoundReport,
        distance: DistanceStatus,
    },
}

/// Runs the full pipeline on a code: order, defining set, bound family, and
/// the distance oracle under the given budget. A computed distance is
/// asserted against every bound in the family.
pub fn code_bound_report(code: &ConstacyclicCode, budget: u128) -> Result<CodeAnalysis> {
    if code.generator.degree() == Some(0) {
        return Ok(CodeAnalysis::FullSpace {
            distance: brute_force_distance(code, budget)?,
        });
    }
    if code.dimension == 0 {
        return Ok(CodeAnalysis::ZeroCode);
    }
    let t = defining_set(&code.generator)?;
    let report = bound_report(&t);
    let distance = match brute_force_distance(code, budget) {
        Ok(res) => {
            for &(d, bound) in &report.gamma_family {
                assert!(
                    res.distance <= bound,
                    "distance {} violates the bound {} at difference {}",
                    res.distance,
                    bound,
                    d
                );
            }
            DistanceStatus::Computed(res)
        }
        Err(Error::BudgetExceeded { required, budget }) => {
            DistanceStatus::BudgetExceeded { required, budget }
        }
        Err(e) => return Err(e),
    };
    Ok(CodeAnalysis::Proper {
        defining_set: t,
        report,
        distance,
    })
}

/// The root-index system of X^m - lambda: its roots are the powers
/// `zeta_N^g` for g in one residue class modulo ord(lambda), inside Z/NZ
/// with N = m * ord(lambda). Monic divisors over the base field correspond
/// to subsets of the cyclotomic cosets contained in that class.
pub struct RootIndexSystem {
    sf: SplittingField,
    m: u64,
    rho: u64,
    offset: u64,
}

impl RootIndexSystem {
    pub fn new(base: &Arc<FieldCtx>, m: u64, lambda: &FieldElement) -> Result<RootIndexSystem> {
        assert!(lambda.ctx() == base, "lambda must live in the base field");
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        if m == 0 {
            return Err(Error::NonPositive(0));
        }
        let p = base.characteristic();
        if m % p == 0 {
            return Err(Error::RepeatedRootLength { m, p });
        }
        let rho = lambda.order()?;
        let n = m.checked_mul(rho).ok_or(Error::Overflow("m * ord(lambda)"))?;
        let sf = SplittingField::over(Arc::clone(base), n)?;
        let lambda_img = sf.embedding().apply(lambda);
        let zeta_m = sf.zeta_pow(m % n);
        let mut offset = None;
        let mut acc = sf.ambient().one();
        for j in 0..rho {
            if acc == lambda_img {
                offset = Some(j);
                break;
            }
            acc = acc.mul(zeta_m);
        }
        let offset = offset.expect("lambda lies in the order-rho subgroup generated by zeta^m");
        debug_assert!(
            rho == 1 || gcd(offset, rho) == 1,
            "an element of exact order rho has an exponent coprime to rho"
        );
        Ok(RootIndexSystem {
            sf,
            m,
            rho,
            offset,
        })
    }

    pub fn splitting_field(&self) -> &SplittingField {
        &self.sf
    }

    /// N = m * ord(lambda).
    pub fn modulus(&self) -> u64 {
        self.sf.n()
    }

    /// The exponents g with `zeta_N^g` a root of X^m - lambda, ascending.
    pub fn root_indices(&self) -> Vec<u64> {
        (0..self.m).map(|i| self.offset + i * self.rho).collect()
    }

    /// The cyclotomic cosets partitioning the root indices.
    pub fn cosets(&self) -> Vec<Coset> {
        DefiningSet::new(self.modulus(), self.sf.q(), self.root_indices())
            .expect("root indices are Galois-stable")
            .cosets()
    }

    /// The minimal polynomial of each coset, over the base field, in the
    /// order returned by `cosets`.
    pub fn coset_minimal_polys(&self) -> Vec<Poly> {
        self.cosets()
            .iter()
            .map(|c| self.sf.minimal_polynomial_base(c))
            .collect()
    }

    /// X^m - lambda itself must be the product of all coset polynomials.
    pub fn check_complete_factorization(&self, lambda: &FieldElement) -> bool {
        let product = self
            .coset_minimal_polys()
            .iter()
            .fold(Poly::one(self.sf.base()), |acc, f| acc.mul(f));
        product == Poly::binomial(self.sf.base(), self.m as usize, lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn gf7_code(m: u64, lambda: u64, coeffs: &[i64]) -> Result<ConstacyclicCode> {
        let ctx = FieldCtx::new(7, 1).unwrap();
        build_code(m, &ctx.from_int(lambda), &Poly::from_ints(&ctx, coeffs))
    }

    #[test]
    fn build_code_examples() {
        // X^3 - 2 divides X^9 - 1 over GF(7) since 2^3 = 8 = 1
        let code = gf7_code(9, 1, &[-2, 0, 0, 1]).unwrap();
        assert_eq!(code.dimension(), 6);
        // the whole modulus: zero code
        let code = gf7_code(9, 1, &[-1, 0, 0, 0, 0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(code.dimension(), 0);
        // unit generator: full space
        let code = gf7_code(9, 1, &[1]).unwrap();
        assert_eq!(code.dimension(), 9);
        // rejections
        assert!(matches!(gf7_code(9, 0, &[1]), Err(Error::ZeroLambda)));
        assert!(matches!(
            gf7_code(14, 1, &[1]),
            Err(Error::RepeatedRootLength { .. })
        ));
        assert!(matches!(
            gf7_code(9, 1, &[1, 1]),
            Err(Error::NotADivisor { .. })
        ));
        assert!(matches!(
            gf7_code(9, 1, &[1, 2]),
            Err(Error::NonMonicGenerator)
        ));
    }

    #[test]
    fn shift_examples() {
        let ctx = FieldCtx::new(7, 1).unwrap();
        let code = build_code(3, &ctx.one(), &Poly::from_ints(&ctx, &[1])).unwrap();
        let word: Vec<_> = [1, 2, 3].iter().map(|&v| ctx.from_int(v)).collect();
        let shifted = code.shift(&word);
        assert_eq!(shifted, vec![ctx.from_int(3), ctx.from_int(1), ctx.from_int(2)]);
        // negacyclic: lambda = -1 = 6 over GF(7), (1,0,3) -> (-3,1,0) = (4,1,0)
        let neg = build_code(3, &ctx.from_int(6), &Poly::from_ints(&ctx, &[1])).unwrap();
        let word: Vec<_> = [1, 0, 3].iter().map(|&v| ctx.from_int(v)).collect();
        assert_eq!(
            neg.shift(&word),
            vec![ctx.from_int(4), ctx.from_int(1), ctx.from_int(0)]
        );
    }

    #[test]
    fn shift_preserves_membership() {
        let code = gf7_code(9, 1, &[-2, 0, 0, 1]).unwrap();
        let ctx = code.ctx().clone();
        // the generator itself, padded to length 9
        let mut word: Vec<_> = code.generator().coeffs().to_vec();
        word.resize(9, ctx.zero());
        assert!(code.contains(&word));
        let mut w = word;
        for _ in 0..12 {
            w = code.shift(&w);
            assert!(code.contains(&w));
        }
    }

    #[test]
    fn distance_of_x3_minus_2() {
        // generator weight 2 and no weight-1 codewords: distance exactly 2
        let code = gf7_code(9, 1, &[-2, 0, 0, 1]).unwrap();
        let res = brute_force_distance(&code, DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!(res.distance, 2);
        assert!(res.exhaustive);
        assert!(code.contains(&res.witness));
        assert_eq!(
            res.witness.iter().filter(|c| !c.is_zero()).count(),
            2
        );
    }

    #[test]
    fn distance_full_space_and_budget() {
        let code = gf7_code(9, 1, &[1]).unwrap();
        let res = brute_force_distance(&code, DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!(res.distance, 1);
        // zero code refuses
        let zero = gf7_code(9, 1, &[-1, 0, 0, 0, 0, 0, 0, 0, 0, 1]).unwrap();
        assert!(matches!(
            brute_force_distance(&zero, DEFAULT_DISTANCE_BUDGET),
            Err(Error::ZeroCode)
        ));
        // tiny budget refuses loudly
        let code = gf7_code(9, 1, &[-2, 0, 0, 1]).unwrap();
        assert!(matches!(
            brute_force_distance(&code, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn distance_product_generator() {
        // (X^3-2)(X^3-4) = X^6 + X^3 + 1 over GF(7): 7^3 - 1 = 342 codewords
        let ctx = FieldCtx::new(7, 1).unwrap();
        let f = Poly::from_ints(&ctx, &[-2, 0, 0, 1]).mul(&Poly::from_ints(&ctx, &[-4, 0, 0, 1]));
        assert_eq!(f, Poly::from_ints(&ctx, &[1, 0, 0, 1, 0, 0, 1]));
        let code = build_code(9, &ctx.one(), &f).unwrap();
        let analysis = code_bound_report(&code, DEFAULT_DISTANCE_BUDGET).unwrap();
        let CodeAnalysis::Proper {
            report, distance, ..
        } = analysis
        else {
            panic!("proper code expected");
        };
        let DistanceStatus::Computed(res) = distance else {
            panic!("within budget");
        };
        // every bound in the family dominates the true distance (also
        // asserted inside code_bound_report)
        for &(_, b) in &report.gamma_family {
            assert!(res.distance <= b);
        }
    }

    #[test]
    fn report_statuses() {
        let zero = gf7_code(9, 1, &[-1, 0, 0, 0, 0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(
            code_bound_report(&zero, DEFAULT_DISTANCE_BUDGET).unwrap(),
            CodeAnalysis::ZeroCode
        );
        let full = gf7_code(9, 1, &[1]).unwrap();
        assert!(matches!(
            code_bound_report(&full, DEFAULT_DISTANCE_BUDGET).unwrap(),
            CodeAnalysis::FullSpace { .. }
        ));
        // over budget: status, not an error
        let code = gf7_code(9, 1, &[-2, 0, 0, 1]).unwrap();
        let analysis = code_bound_report(&code, 10).unwrap();
        assert!(matches!(
            analysis,
            CodeAnalysis::Proper {
                distance: DistanceStatus::BudgetExceeded { .. },
                ..
            }
        ));
    }

    #[test]
    fn root_index_system_cyclic() {
        // lambda = 1: N = m, offset 0, cosets of Z/9Z
        let ctx = FieldCtx::new(7, 1).unwrap();
        let sys = RootIndexSystem::new(&ctx, 9, &ctx.one()).unwrap();
        assert_eq!(sys.modulus(), 9);
        assert_eq!(sys.root_indices(), (0..9).collect::<Vec<_>>());
        assert_eq!(sys.cosets().len(), 5);
        assert!(sys.check_complete_factorization(&ctx.one()));
    }

    #[test]
    fn root_index_system_negacyclic() {
        // lambda = -1 over GF(7): rho = 2, N = 8, roots at odd indices
        let ctx = FieldCtx::new(7, 1).unwrap();
        let lam = ctx.from_int(6);
        let sys = RootIndexSystem::new(&ctx, 4, &lam).unwrap();
        assert_eq!(sys.modulus(), 8);
        assert_eq!(sys.root_indices(), vec![1, 3, 5, 7]);
        assert!(sys.check_complete_factorization(&lam));
        // each coset polynomial divides X^4 + 1
        let modulus = Poly::binomial(&ctx, 4, &lam);
        for f in sys.coset_minimal_polys() {
            assert!(f.divides(&modulus).unwrap());
        }
    }
}
