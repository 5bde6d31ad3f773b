//! Partitions of a defining set into arithmetic progressions sharing one
//! common difference, classified by the set's translation stabilizer: the
//! stabilizer group, the divisor set of admissible differences, the greedy
//! constructive bijection, the coarseness order and relabeling invariance.

use crate::error::{Error, Result};
use crate::numtheory::{divisors, mod_inverse};
use crate::poly::DefiningSet;

/// A partition of a defining set into equal-difference classes sharing the
/// common difference `d`; classes ascend by smallest member, members ascend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedRep {
    base: DefiningSet,
    d: u64,
    classes: Vec<Vec<u64>>,
}

impl MedRep {
    /// Builds a representation after the constructing code has done the
    /// partition math, re-validating every structural invariant.
    pub(crate) fn assemble(base: DefiningSet, d: u64, classes: Vec<Vec<u64>>) -> MedRep {
        let n = base.n();
        assert!(d >= 1 && n % d == 0, "common difference must divide n");
        let class_size = (n / d) as usize;
        let mut covered = Vec::with_capacity(base.len());
        for class in &classes {
            assert_eq!(class.len(), class_size, "every class has n/d elements");
            let start = class[0];
            let mut expected: Vec<u64> = (0..n / d).map(|j| (start + j * d) % n).collect();
            expected.sort_unstable();
            assert_eq!(
                class, &expected,
                "class must be the full difference-{d} progression"
            );
            covered.extend_from_slice(class);
        }
        covered.sort_unstable();
        assert_eq!(
            covered,
            base.elems(),
            "classes must partition the base set exactly"
        );
        let r = base.len() as u64 * d;
        assert_eq!(r % n, 0, "class count |T| d / n must be an integer");
        MedRep { base, d, classes }
    }

    pub fn base(&self) -> &DefiningSet {
        &self.base
    }

    /// The common difference.
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn classes(&self) -> &[Vec<u64>] {
        &self.classes
    }

    /// Number of classes, `|T| d / n`.
    pub fn r(&self) -> usize {
        self.classes.len()
    }
}

/// The translation stabilizer of a defining set: the divisors of n whose
/// translations fix the set, the smallest one, and the group order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilizer {
    pub n: u64,
    /// Smallest stabilizing divisor.
    pub d0: u64,
    /// All stabilizing divisors of n, ascending.
    pub sigma_f: Vec<u64>,
    /// `n / d0`: the size of the full translation-stabilizer subgroup.
    pub group_order: u64,
}

/// Computes the stabilizer by testing each divisor of n, then cross-checks
/// that the full residue scan recovers exactly the multiples of the smallest
/// stabilizing divisor (the stabilizer is a subgroup of Z/nZ).
pub fn stabilizer(t: &DefiningSet) -> Stabilizer {
    let n = t.n();
    // dense membership for n of desk scale, binary search beyond
    let dense: Option<Vec<bool>> = (n <= 1 << 20).then(|| {
        let mut member = vec![false; n as usize];
        for &g in t.elems() {
            member[g as usize] = true;
        }
        member
    });
    let fixes = |a: u64| -> bool {
        match &dense {
            Some(member) => t.elems().iter().all(|&g| member[((g + a) % n) as usize]),
            None => t.elems().iter().all(|&g| t.contains((g + a) % n)),
        }
    };
    let sigma_f: Vec<u64> = divisors(n)
        .expect("positive n")
        .into_iter()
        .filter(|&d| fixes(d % n))
        .collect();
    let d0 = *sigma_f.first().expect("translation by n always fixes T");
    for &d in &sigma_f {
        assert_eq!(d % d0, 0, "stabilizing divisors are multiples of d0");
    }
    // full-scan cross-check of the subgroup identity
    for a in 0..n {
        assert_eq!(
            fixes(a),
            a % d0 == 0,
            "stabilizer must be exactly d0 * Z/nZ (a = {a})"
        );
    }
    Stabilizer {
        n,
        d0,
        sigma_f,
        group_order: n / d0,
    }
}

/// The unique partition of `t` into difference-`d` progressions, built
/// greedily from the smallest uncovered element. Errors when no partition
/// with that difference exists.
pub fn med_representation(t: &DefiningSet, d: u64) -> Result<MedRep> {
    let n = t.n();
    if d == 0 || n % d != 0 {
        return Err(Error::NoSuchMedRepresentation { d });
    }
    let mut covered = vec![false; t.len()];
    let mut classes = Vec::new();
    for (i, &g) in t.elems().iter().enumerate() {
        if covered[i] {
            continue;
        }
        let mut class: Vec<u64> = (0..n / d).map(|j| (g + j * d) % n).collect();
        class.sort_unstable();
        for e in &class {
            match t.elems().binary_search(e) {
                Ok(idx) => covered[idx] = true,
                Err(_) => return Err(Error::NoSuchMedRepresentation { d }),
            }
        }
        classes.push(class);
    }
    Ok(MedRep::assemble(t.clone(), d, classes))
}

/// One representation per admissible difference, ascending by difference.
pub fn all_med_representations(t: &DefiningSet) -> Vec<MedRep> {
    stabilizer(t)
        .sigma_f
        .iter()
        .map(|&d| med_representation(t, d).expect("stabilizing divisors admit partitions"))
        .collect()
}

/// The representation with the smallest admissible difference.
pub fn coarsest_med(t: &DefiningSet) -> MedRep {
    let d0 = stabilizer(t).d0;
    med_representation(t, d0).expect("d0 stabilizes T")
}

/// Whether `a` is coarser than `b`: every class of `b` lies inside a class of
/// `a`. Cross-checked against the divisibility test `a.d | b.d`.
pub fn is_coarser(a: &MedRep, b: &MedRep) -> Result<bool> {
    if a.base() != b.base() {
        return Err(Error::BaseMismatch);
    }
    let by_subsets = b.classes().iter().all(|small| {
        a.classes()
            .iter()
            .any(|big| small.iter().all(|e| big.binary_search(e).is_ok()))
    });
    let by_divisibility = b.d() % a.d() == 0;
    assert_eq!(
        by_subsets, by_divisibility,
        "coarseness by refinement must match coarseness by divisibility"
    );
    Ok(by_subsets)
}

/// The defining set relabeled through the unit r: `{r^{-1} g mod n}`. The
/// stabilizer data is invariant under this relabeling.
pub fn relabel_by_unit(t: &DefiningSet, r: u64) -> Result<DefiningSet> {
    let n = t.n();
    let r_inv = mod_inverse(r, n)?;
    let elems = t
        .elems()
        .iter()
        .map(|&g| ((g as u128 * r_inv as u128) % n as u128) as u64)
        .collect();
    let relabeled = DefiningSet::new(n, t.q(), elems)?;
    Ok(match t.ctx() {
        Some(ctx) => relabeled.with_ctx(ctx.clone()),
        None => relabeled,
    })
}
