use std::collections::VecDeque;

use super::finite::FiniteGroup;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

const UNSET: usize = usize::MAX;

/// A homomorphism between two finite groups, stored as the image of every domain element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupHom {
    image: Vec<usize>,
    codomain_order: usize,
}

impl GroupHom {
    /// Validates the homomorphism property exhaustively.
    pub fn new(domain: &FiniteGroup, codomain: &FiniteGroup, image: Vec<usize>) -> Result<Self> {
        if image.len() != domain.order() {
            return Err(Error::input(format!(
                "homomorphism image has {} entries, domain has order {}",
                image.len(),
                domain.order()
            )));
        }
        for &y in &image {
            codomain.check_index(y)?;
        }
        if image[0] != 0 {
            return Err(Error::input("homomorphism does not send the identity to the identity"));
        }
        for i in domain.elements() {
            for j in domain.elements() {
                if image[domain.mul(i, j)] != codomain.mul(image[i], image[j]) {
                    return Err(Error::input(format!(
                        "map is not a homomorphism: f({i}*{j}) != f({i})*f({j})"
                    )));
                }
            }
        }
        Ok(GroupHom {
            image,
            codomain_order: codomain.order(),
        })
    }

    pub(crate) fn new_unchecked(image: Vec<usize>, codomain_order: usize) -> Self {
        GroupHom {
            image,
            codomain_order,
        }
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupHom::new_unchecked(group.elements().collect(), group.order())
    }

    pub fn trivial(domain: &FiniteGroup, codomain: &FiniteGroup) -> Self {
        GroupHom::new_unchecked(vec![0; domain.order()], codomain.order())
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn domain_order(&self) -> usize {
        self.image.len()
    }

    pub fn codomain_order(&self) -> usize {
        self.codomain_order
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain_order];
        self.image.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.codomain_order];
        for &y in &self.image {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.image.len() == self.codomain_order && self.is_injective()
    }

    pub fn kernel(&self, domain: &FiniteGroup) -> Subgroup {
        let elems: Vec<usize> = domain.elements().filter(|&x| self.image[x] == 0).collect();
        Subgroup::from_elements(domain, &elems).expect("kernel is a subgroup")
    }

    pub fn image_subgroup(&self, codomain: &FiniteGroup) -> Subgroup {
        let mut elems = self.image.clone();
        elems.sort_unstable();
        elems.dedup();
        Subgroup::from_elements(codomain, &elems).expect("image is a subgroup")
    }

    /// `self` after `first`.
    pub fn compose_after(&self, first: &GroupHom) -> GroupHom {
        GroupHom::new_unchecked(
            first.image.iter().map(|&x| self.image[x]).collect(),
            self.codomain_order,
        )
    }
}

/// Tries to extend `gens[k] -> images[k]` to a homomorphism defined on `<gens>`.
///
/// `mul_cod` multiplies in the codomain, whose identity must be 0. Returns the partial
/// map (`usize::MAX` outside `<gens>`), or `None` when the assignment is inconsistent.
/// Every edge `x -> x*s` of the Cayley graph is checked, which makes the result a
/// homomorphism on `<gens>`.
pub(crate) fn extend_partial(
    domain: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    mul_cod: impl Fn(usize, usize) -> usize,
    injective_into: Option<usize>,
) -> Option<Vec<usize>> {
    let mut map = vec![UNSET; domain.order()];
    let mut used = injective_into.map(|n| {
        let mut v = vec![false; n];
        v[0] = true;
        v
    });
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&s, &fs) in gens.iter().zip(images) {
            let y = domain.mul(x, s);
            let fy = mul_cod(map[x], fs);
            if map[y] == UNSET {
                if let Some(used) = used.as_mut() {
                    if std::mem::replace(&mut used[fy], true) {
                        return None;
                    }
                }
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// Extends an assignment on generators to a homomorphism `domain -> codomain`.
/// Returns `None` when the generators do not generate `domain` or the assignment
/// does not respect the group structure.
pub fn extend_hom(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<GroupHom> {
    let map = extend_partial(domain, gens, images, |a, b| codomain.mul(a, b), None)?;
    if map.iter().any(|&y| y == UNSET) {
        return None;
    }
    Some(GroupHom::new_unchecked(map, codomain.order()))
}

/// The quotient by a normal subgroup, with the canonical projection.
///
/// Cosets are represented by their least element index and numbered in ascending order
/// of representative, so the identity coset is 0.
pub fn quotient(group: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
    if !n.is_normal() {
        return Err(Error::precondition("quotient requires a normal subgroup"));
    }
    let order = group.order();
    let mut coset_of = vec![UNSET; order];
    let mut reps = Vec::new();
    for x in group.elements() {
        if coset_of[x] != UNSET {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &s in n.elements() {
            coset_of[group.mul(x, s)] = id;
        }
    }
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            table.push(coset_of[group.mul(a, b)] as u32);
        }
    }
    let labels = reps.iter().map(|&r| group.label(r).to_string()).collect();
    let q = FiniteGroup::from_flat(m, table, Some(labels))?;
    let proj = GroupHom::new_unchecked(coset_of, m);
    Ok((q, proj))
}

/// The least coset representative for each element of the quotient produced by [`quotient`].
pub fn coset_representatives(projection: &GroupHom) -> Vec<usize> {
    let mut reps = vec![UNSET; projection.codomain_order()];
    for (x, &c) in projection.images().iter().enumerate() {
        if reps[c] == UNSET {
            reps[c] = x;
        }
    }
    reps
}

/// Checks that every `act[b]` is an automorphism of `target` and that `b -> act[b]`
/// is a homomorphism from `actor` into `Aut(target)` (composition `act[b1] . act[b2]`).
pub(crate) fn check_action(
    actor: &FiniteGroup,
    target: &FiniteGroup,
    act: &[Vec<usize>],
    name: &str,
) -> Result<()> {
    if act.len() != actor.order() {
        return Err(Error::input(format!(
            "`{name}` has {} entries but the acting group has order {}",
            act.len(),
            actor.order()
        )));
    }
    for (b, perm) in act.iter().enumerate() {
        if perm.len() != target.order() {
            return Err(Error::input(format!(
                "`{name}`[{b}] has length {} but the target has order {}",
                perm.len(),
                target.order()
            )));
        }
        let mut seen = vec![false; target.order()];
        for &y in perm {
            target.check_index(y)?;
            if std::mem::replace(&mut seen[y], true) {
                return Err(Error::input(format!("`{name}`[{b}] is not a permutation")));
            }
        }
        if perm[0] != 0 {
            return Err(Error::input(format!("`{name}`[{b}] does not fix the identity")));
        }
        for x in target.elements() {
            for y in target.elements() {
                if perm[target.mul(x, y)] != target.mul(perm[x], perm[y]) {
                    return Err(Error::input(format!(
                        "`{name}`[{b}] is not an automorphism (fails at {x},{y})"
                    )));
                }
            }
        }
    }
    if act[0].iter().enumerate().any(|(i, &y)| i != y) {
        return Err(Error::input(format!("`{name}` does not send the identity to the identity map")));
    }
    for b1 in actor.elements() {
        for b2 in actor.elements() {
            let prod = &act[actor.mul(b1, b2)];
            if target.elements().any(|x| prod[x] != act[b1][act[b2][x]]) {
                return Err(Error::input(format!(
                    "`{name}` is not a homomorphism into the automorphism group (fails at {b1},{b2})"
                )));
            }
        }
    }
    Ok(())
}

/// `N x| Q` with multiplication `(a1,b1)(a2,b2) = (a1 * b1(a2), b1 b2)`.
///
/// `act[b]` is the automorphism of `n` by which `b` acts, as an image array.
/// The pair `(a, b)` gets index `a * |Q| + b`, so `(1, 1)` is index 0.
pub fn semidirect_product(n: &FiniteGroup, q: &FiniteGroup, act: &[Vec<usize>]) -> Result<FiniteGroup> {
    check_action(q, n, act, "action")?;
    Ok(semidirect_unchecked(n, q, act))
}

pub(crate) fn semidirect_unchecked(n: &FiniteGroup, q: &FiniteGroup, act: &[Vec<usize>]) -> FiniteGroup {
    let (nn, nq) = (n.order(), q.order());
    let order = nn * nq;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (a1, b1) = (x / nq, x % nq);
        let act_b1 = &act[b1];
        for y in 0..order {
            let (a2, b2) = (y / nq, y % nq);
            let a = n.mul(a1, act_b1[a2]);
            let b = q.mul(b1, b2);
            table.push((a * nq + b) as u32);
        }
    }
    let labels = (0..order)
        .map(|x| format!("({},{})", n.label(x / nq), q.label(x % nq)))
        .collect();
    FiniteGroup::from_flat(order, table, Some(labels)).expect("semidirect product of valid groups")
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let trivial: Vec<Vec<usize>> = vec![a.elements().collect(); b.order()];
    semidirect_unchecked(a, b, &trivial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct::{cyclic, klein_four, symmetric3};
    use crate::group::fingerprint::fingerprint;
    use crate::group::subgroup::{normal_closure, subgroup_generated};

    #[test]
    fn quotient_examples() {
        let v4 = klein_four();
        let (q, p) = quotient(&v4, &Subgroup::trivial(&v4)).unwrap();
        assert_eq!(q.order(), 4);
        assert!(p.is_bijective());
        let (q, _) = quotient(&v4, &Subgroup::whole(&v4)).unwrap();
        assert!(q.is_trivial());
        // <ab> with a = 1, b = 2, ab = 3
        let n = subgroup_generated(&v4, &[3]).unwrap();
        let (q, p) = quotient(&v4, &n).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(p.kernel(&v4).elements(), n.elements());
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = symmetric3();
        let t = subgroup_generated(&s3, &[3]).unwrap();
        assert!(matches!(quotient(&s3, &t), Err(Error::Precondition(_))));
    }

    #[test]
    fn projection_is_surjective_with_kernel_n() {
        let s3 = symmetric3();
        let a3 = normal_closure(&s3, &[1]).unwrap();
        let (q, p) = quotient(&s3, &a3).unwrap();
        assert!(GroupHom::new(&s3, &q, p.images().to_vec()).is_ok());
        assert!(p.is_surjective());
        assert_eq!(p.kernel(&s3).elements(), a3.elements());
        let reps = coset_representatives(&p);
        assert_eq!(reps, vec![0, 3]);
    }

    #[test]
    fn semidirect_c3_by_c2_inversion_is_s3() {
        let c3 = cyclic(3);
        let c2 = cyclic(2);
        let act = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let g = semidirect_product(&c3, &c2, &act).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(fingerprint(&g), fingerprint(&symmetric3()));
    }

    #[test]
    fn semidirect_rejects_bad_action() {
        let c3 = cyclic(3);
        let c2 = cyclic(2);
        // not an automorphism
        assert!(semidirect_product(&c3, &c2, &[vec![0, 1, 2], vec![0, 1, 1]]).is_err());
        // automorphisms, but not a homomorphism from C3
        let bad = vec![vec![0, 1], vec![0, 1], vec![0, 1]];
        assert!(semidirect_product(&c2, &c3, &bad).is_ok());
        let c4 = cyclic(4);
        let inv4 = vec![0, 3, 2, 1];
        assert!(semidirect_product(&c4, &c3, &[vec![0, 1, 2, 3], inv4.clone(), inv4]).is_err());
    }

    #[test]
    fn direct_products() {
        let g = direct_product(&cyclic(2), &cyclic(2));
        assert_eq!(fingerprint(&g), fingerprint(&klein_four()));
        let g = direct_product(&symmetric3(), &cyclic(2));
        assert_eq!(g.order(), 12);
        assert!(!g.is_abelian());
    }

    #[test]
    fn extend_hom_detects_inconsistency() {
        let c4 = cyclic(4);
        let c2 = cyclic(2);
        assert!(extend_hom(&c4, &c2, &[1], &[1]).is_some());
        let c3 = cyclic(3);
        assert!(extend_hom(&c4, &c3, &[1], &[1]).is_none());
    }
}
