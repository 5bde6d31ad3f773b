//! Cyclotomic cosets and their equal-difference structure: the
//! equal-difference criterion, the coarsest-partition constant omega, the
//! admissible common differences, the induced partitions and the extension
//! degrees over which a coset's minimal polynomial splits into binomials.

use crate::error::{Error, Result};
use crate::medrep::MedRep;
use crate::numtheory::{gcd, mod_pow, mult_order, radical};
use crate::poly::DefiningSet;

/// The q-cyclotomic coset modulo n containing a representative: the orbit of
/// `rep` under multiplication by q. `rep` is the smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    n: u64,
    q: u64,
    rep: u64,
    elems: Vec<u64>,
}

impl Coset {
    pub fn new(n: u64, q: u64, gamma: u64) -> Result<Coset> {
        if n == 0 {
            return Err(Error::NonPositive(0));
        }
        if gcd(n, q) != 1 {
            return Err(Error::NotCoprime { m: q, n });
        }
        let start = gamma % n;
        let mut elems = vec![start];
        let mut cur = mod_mul_n(start, q, n);
        while cur != start {
            elems.push(cur);
            cur = mod_mul_n(cur, q, n);
        }
        elems.sort_unstable();
        let rep = elems[0];
        let c = Coset { n, q, rep, elems };
        debug_assert_eq!(c.tau() as u64, mult_order(q, c.n_gamma()).unwrap());
        Ok(c)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rep(&self) -> u64 {
        self.rep
    }

    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    /// Coset size.
    pub fn tau(&self) -> usize {
        self.elems.len()
    }

    /// `n / gcd(n, rep)`: the order of any root the coset indexes. The same
    /// for every member of the coset.
    pub fn n_gamma(&self) -> u64 {
        self.n / gcd(self.n, self.rep)
    }

    pub fn contains(&self, g: u64) -> bool {
        self.elems.binary_search(&(g % self.n)).is_ok()
    }

    /// The coset of `rep / gcd(n, rep)` modulo `n_gamma`; idempotent and
    /// size-preserving.
    pub fn primitive_form(&self) -> Coset {
        let g = gcd(self.n, self.rep);
        let reduced = if self.rep == 0 { 0 } else { self.rep / g };
        Coset::new(self.n_gamma(), self.q, reduced).expect("q stays coprime to a divisor of n")
    }

    /// The defining set this coset is, viewed at its ambient modulus.
    pub fn to_defining_set(&self) -> DefiningSet {
        DefiningSet::new(self.n, self.q, self.elems.clone()).expect("cosets are Galois-stable")
    }
}

fn mod_mul_n(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// All q-cyclotomic cosets modulo n, ascending by representative. Their sizes
/// sum to n.
pub fn all_cosets(n: u64, q: u64) -> Result<Vec<Coset>> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    if gcd(n, q) != 1 {
        return Err(Error::NotCoprime { m: q, n });
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for g in 0..n {
        if seen[g as usize] {
            continue;
        }
        let c = Coset::new(n, q, g)?;
        for &e in c.elems() {
            seen[e as usize] = true;
        }
        out.push(c);
    }
    debug_assert_eq!(out.iter().map(Coset::tau).sum::<usize>(), n as usize);
    Ok(out)
}

/// Whether the coset is an arithmetic progression with difference `n / tau`
/// covering a full residue class.
fn equal_difference_direct(c: &Coset) -> bool {
    let tau = c.tau() as u64;
    if c.n() % tau != 0 {
        return false;
    }
    let d = c.n() / tau;
    let mut expected: Vec<u64> = (0..tau).map(|j| (c.rep() + j * d) % c.n()).collect();
    expected.sort_unstable();
    expected == c.elems()
}

/// Equal-difference criterion: `rad(n_gamma) | q - 1`, and `q = 1 (mod 4)`
/// whenever `8 | n_gamma`. Cross-checked against the direct progression test.
pub fn is_equal_difference(c: &Coset) -> bool {
    let ng = c.n_gamma();
    let rad = radical(ng).expect("positive n_gamma");
    let criterion = (c.q() - 1) % rad == 0 && (ng % 8 != 0 || c.q() % 4 == 1);
    let direct = equal_difference_direct(c);
    assert_eq!(
        criterion, direct,
        "equal-difference criterion must agree with the direct test for {c:?}"
    );
    criterion
}

/// The number of classes in the coarsest equal-difference partition:
/// `ord_{rad(n_gamma)}(q)`, doubled when `q^ord = 3 (mod 4)` and
/// `8 | n_gamma`. Conventions `rad(1) = 1`, `ord_1(q) = 1` keep it total.
pub fn omega(c: &Coset) -> u64 {
    let ng = c.n_gamma();
    let rad = radical(ng).expect("positive n_gamma");
    let ord = mult_order(c.q(), rad).expect("q coprime to rad");
    if ng % 8 == 0 && mod_pow(c.q(), ord, 4) == 3 {
        2 * ord
    } else {
        ord
    }
}

/// A coset together with its admissible common differences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetMedIndex {
    pub coset: Coset,
    pub omega: u64,
    /// Admissible common differences `d = n t / tau` for `omega | t | tau`,
    /// ascending.
    pub sigma: Vec<u64>,
}

/// Enumerates the admissible common differences of the coset's
/// equal-difference partitions.
pub fn sigma_gamma(c: &Coset) -> CosetMedIndex {
    let tau = c.tau() as u64;
    let om = omega(c);
    assert_eq!(tau % om, 0, "omega divides tau");
    let mut sigma = Vec::new();
    let mut t = om;
    while t <= tau {
        if tau % t == 0 {
            let taud = c.n() * t;
            assert_eq!(taud % tau, 0, "admissible differences are integers");
            sigma.push(taud / tau);
        }
        t += om;
    }
    sigma.sort_unstable();
    CosetMedIndex {
        coset: c.clone(),
        omega: om,
        sigma,
    }
}

/// The equal-difference partition of the coset with common difference `d`:
/// `t = d tau / n` classes, each the orbit of `rep q^i` under multiplication
/// by `q^t`.
pub fn coset_med(c: &Coset, d: u64) -> Result<MedRep> {
    let idx = sigma_gamma(c);
    if !idx.sigma.contains(&d) {
        return Err(Error::NoSuchMedRepresentation { d });
    }
    let tau = c.tau() as u64;
    let t = d * tau / c.n();
    let qt = mod_pow(c.q(), t, c.n());
    let mut classes = Vec::with_capacity(t as usize);
    let mut start = c.rep() % c.n();
    for _ in 0..t {
        let mut class = vec![start];
        let mut cur = mod_mul_n(start, qt, c.n());
        while cur != start {
            class.push(cur);
            cur = mod_mul_n(cur, qt, c.n());
        }
        class.sort_unstable();
        classes.push(class);
        start = mod_mul_n(start, c.q(), c.n());
    }
    classes.sort_by_key(|cl| cl[0]);
    Ok(MedRep::assemble(c.to_defining_set(), d, classes))
}

/// The extension degrees t over which the coset's minimal polynomial factors
/// into binomials, one per admissible difference, ascending.
pub fn binomial_fields(c: &Coset) -> Vec<u64> {
    let tau = c.tau() as u64;
    sigma_gamma(c)
        .sigma
        .iter()
        .map(|&d| d * tau / c.n())
        .collect()
}
