use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::finite::FiniteGroup;
use super::hom::quotient;
use super::subgroup::{center, derived_subgroup};

/// Cheap isomorphism invariants of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IsoFingerprint {
    pub order: usize,
    /// element order -> number of elements of that order
    pub order_histogram: BTreeMap<usize, usize>,
    /// Invariant factors `d1 | d2 | ...` of the abelianization, ascending.
    pub abelian_invariants: Vec<usize>,
    pub center_order: usize,
    pub derived_order: usize,
}

pub fn fingerprint(group: &FiniteGroup) -> IsoFingerprint {
    let mut order_histogram = BTreeMap::new();
    for x in group.elements() {
        *order_histogram.entry(group.element_order(x)).or_insert(0) += 1;
    }
    let derived = derived_subgroup(group);
    let (ab, _) = quotient(group, &derived).expect("derived subgroup is normal");
    IsoFingerprint {
        order: group.order(),
        order_histogram,
        abelian_invariants: abelian_invariants(&ab),
        center_order: center(group).order(),
        derived_order: derived.order(),
    }
}

/// Invariant factors of an abelian group, read off from element orders.
///
/// For each prime `p`, the number of elements killed by `p^k` is `p^(sum_i min(k, e_i))`,
/// which determines the exponents `e_i` of the `p`-primary part.
pub fn abelian_invariants(group: &FiniteGroup) -> Vec<usize> {
    debug_assert!(group.is_abelian());
    let n = group.order();
    let orders: Vec<usize> = group.elements().map(|x| group.element_order(x)).collect();
    let mut primary: Vec<Vec<usize>> = Vec::new(); // per prime: prime powers, descending
    for p in prime_factors(n) {
        let mut prev_log = 0u32;
        let mut k = 1u32;
        let mut counts_ge: Vec<usize> = Vec::new(); // counts_ge[k-1] = #{i : e_i >= k}
        loop {
            let pk = p.pow(k);
            let killed = orders.iter().filter(|&&o| pk % o == 0).count();
            let log = ilog(killed, p);
            if log == prev_log {
                break;
            }
            counts_ge.push((log - prev_log) as usize);
            prev_log = log;
            k += 1;
        }
        // exponent e_i for i-th largest factor is the number of k with counts_ge[k-1] > i
        let parts = counts_ge.first().copied().unwrap_or(0);
        let powers: Vec<usize> = (0..parts)
            .map(|i| {
                let e = counts_ge.iter().filter(|&&c| c > i).count() as u32;
                p.pow(e)
            })
            .collect();
        primary.push(powers);
    }
    let len = primary.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<usize> = (0..len)
        .map(|i| primary.iter().map(|ps| ps.get(i).copied().unwrap_or(1)).product())
        .collect();
    factors.reverse();
    factors
}

fn ilog(mut x: usize, p: usize) -> u32 {
    let mut k = 0;
    while x > 1 {
        debug_assert_eq!(x % p, 0);
        x /= p;
        k += 1;
    }
    k
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct::*;

    #[test]
    fn klein_four_fingerprint() {
        let f = fingerprint(&klein_four());
        assert_eq!(f.order, 4);
        assert_eq!(f.order_histogram, BTreeMap::from([(1, 1), (2, 3)]));
        assert_eq!(f.abelian_invariants, vec![2, 2]);
    }

    #[test]
    fn c4_x_c2_fingerprint() {
        let g = product_of(&[cyclic(4), cyclic(2)]);
        let f = fingerprint(&g);
        assert_eq!(f.order_histogram, BTreeMap::from([(1, 1), (2, 3), (4, 4)]));
        assert_eq!(f.abelian_invariants, vec![2, 4]);
    }

    #[test]
    fn s3_fingerprint() {
        let f = fingerprint(&symmetric3());
        assert_eq!(f.center_order, 1);
        assert_eq!(f.derived_order, 3);
        assert_eq!(f.abelian_invariants, vec![2]);
    }

    #[test]
    fn invariant_factor_chains() {
        let g = product_of(&[cyclic(6), cyclic(4), cyclic(9)]);
        assert_eq!(fingerprint(&g).abelian_invariants, vec![6, 36]);
        let g = product_of(&[cyclic(2), cyclic(2), cyclic(4), cyclic(3)]);
        assert_eq!(fingerprint(&g).abelian_invariants, vec![2, 2, 12]);
        assert!(fingerprint(&FiniteGroup::trivial()).abelian_invariants.is_empty());
        assert!(fingerprint(&alternating4()).abelian_invariants == vec![3]);
    }

    #[test]
    fn histogram_sums_to_order() {
        for g in [symmetric4(), dihedral(6), quaternion8(), elementary_abelian_2(3)] {
            let f = fingerprint(&g);
            assert_eq!(f.order_histogram.values().sum::<usize>(), f.order);
            assert!(f.abelian_invariants.windows(2).all(|w| w[1] % w[0] == 0));
        }
    }
}
