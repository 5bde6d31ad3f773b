//! Independent oracles for the acceptance suite. Nothing here calls the
//! library paths it is used to check.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

/// Counts, for every divisor d of n, the partitions of `elems` (a subset of
/// Z/nZ) into equal-difference sets all sharing the common difference d. An
/// equal-difference set with difference d is a full progression
/// `{g, g+d, ..., g+(n/d-1)d}`; the census enumerates the candidate
/// progressions inside the set and counts exact covers by backtracking.
///
/// Differences admitting no partition are absent from the result.
pub fn med_partition_census(n: u64, elems: &[u64]) -> BTreeMap<u64, u64> {
    let target: BTreeSet<u64> = elems.iter().copied().collect();
    let mut out = BTreeMap::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mut candidates: Vec<Vec<u64>> = Vec::new();
        let mut seen_reps = BTreeSet::new();
        for &g in elems {
            let rep = g % d;
            if !seen_reps.insert(rep) {
                continue;
            }
            let class: Vec<u64> = (0..n / d).map(|j| (rep + j * d) % n).collect();
            if class.iter().all(|e| target.contains(e)) {
                candidates.push(class);
            }
        }
        let count = count_exact_covers(&target, &candidates);
        if count > 0 {
            out.insert(d, count);
        }
    }
    out
}

fn count_exact_covers(target: &BTreeSet<u64>, candidates: &[Vec<u64>]) -> u64 {
    fn recurse(remaining: &mut BTreeSet<u64>, candidates: &[Vec<u64>]) -> u64 {
        let Some(&pivot) = remaining.iter().next() else {
            return 1;
        };
        let mut total = 0;
        for cand in candidates.iter().filter(|c| c.contains(&pivot)) {
            if !cand.iter().all(|e| remaining.contains(e)) {
                continue;
            }
            for e in cand {
                remaining.remove(e);
            }
            total += recurse(remaining, candidates);
            for e in cand {
                remaining.insert(*e);
            }
        }
        total
    }
    let mut remaining = target.clone();
    recurse(&mut remaining, candidates)
}

/// `v_l(m^d - 1)` by big-integer powering and repeated division.
pub fn lte_valuation_bigint(l: u64, m: u64, d: u64) -> u32 {
    let x = BigUint::from(m).pow(u32::try_from(d).expect("small exponent")) - 1u32;
    let l = BigUint::from(l);
    let zero = BigUint::from(0u32);
    let mut v = 0;
    let mut rem = x;
    while (&rem % &l) == zero {
        rem /= &l;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_of_trivial_cases() {
        // a full residue ring partitions for every divisor
        let census = med_partition_census(6, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(
            census.keys().copied().collect::<Vec<_>>(),
            vec![1, 2, 3, 6]
        );
        assert!(census.values().all(|&c| c == 1));
        // a singleton admits only the trivial partition
        let census = med_partition_census(6, &[4]);
        assert_eq!(census, BTreeMap::from([(6, 1)]));
        // {1,4,7} mod 9 partitions at d = 3 and d = 9
        let census = med_partition_census(9, &[1, 4, 7]);
        assert_eq!(census, BTreeMap::from([(3, 1), (9, 1)]));
    }
}
