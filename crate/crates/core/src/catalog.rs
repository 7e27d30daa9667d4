//! Named small groups, identification by isomorphism, and the Klein-four action systems.

use std::sync::OnceLock;

use crate::actions::{ActionSystem, ActionTable};
use crate::error::Result;
use crate::group::construct::*;
use crate::group::{
    abelian_invariants, direct_product, fingerprint, is_isomorphic, FiniteGroup, IsoFingerprint,
    ISO_ORDER_LIMIT,
};

/// Largest order of the nonabelian part of the naming catalog.
pub const CATALOG_ORDER_LIMIT: usize = 64;

/// `C4 x C2`-style name of an abelian group from its invariant factors, largest first.
pub fn abelian_name(group: &FiniteGroup) -> String {
    let inv = abelian_invariants(group);
    if inv.is_empty() {
        return "1".into();
    }
    inv.iter().rev().map(|d| format!("C{d}")).collect::<Vec<_>>().join(" x ")
}

struct Entry {
    name: String,
    fp: IsoFingerprint,
    group: FiniteGroup,
}

fn nonabelian_bases() -> Vec<(String, FiniteGroup)> {
    let mut out = vec![("S3".to_string(), symmetric3())];
    for n in 4..=CATALOG_ORDER_LIMIT / 2 {
        out.push((format!("D{n}"), dihedral(n)));
    }
    out.push(("Q8".into(), quaternion8()));
    for m in 3..=CATALOG_ORDER_LIMIT / 4 {
        let name = if m.is_power_of_two() { format!("Q{}", 4 * m) } else { format!("Dic{m}") };
        out.push((name, dicyclic(m)));
    }
    out.push(("A4".into(), alternating4()));
    out.push(("S4".into(), symmetric4()));
    out
}

fn small_abelian(max: usize) -> Vec<(String, FiniteGroup)> {
    let mut out = Vec::new();
    // invariant-factor chains d1 | d2 | ... with product <= max, each listed once
    fn rec(prefix: &mut Vec<usize>, prod: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        let start = prefix.last().copied().unwrap_or(2);
        let mut d = start;
        while prod * d <= max {
            if prefix.last().map_or(true, |&l| d % l == 0) {
                prefix.push(d);
                rec(prefix, prod * d, max, out);
                prefix.pop();
            }
            d += 1;
        }
    }
    let mut chains = Vec::new();
    rec(&mut Vec::new(), 1, max, &mut chains);
    for c in chains {
        let g = product_of(&c.iter().rev().map(|&d| cyclic(d)).collect::<Vec<_>>());
        out.push((abelian_name(&g), g));
    }
    out
}

fn catalog() -> &'static [Entry] {
    static CATALOG: OnceLock<Vec<Entry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let bases = nonabelian_bases();
        let mut groups: Vec<(String, FiniteGroup)> = bases.clone();
        for (bn, b) in &bases {
            for (an, a) in small_abelian(CATALOG_ORDER_LIMIT / b.order()) {
                groups.push((format!("{bn} x {an}"), direct_product(b, &a)));
            }
        }
        for (i, (n1, b1)) in bases.iter().enumerate() {
            for (n2, b2) in &bases[i..] {
                if b1.order() * b2.order() <= CATALOG_ORDER_LIMIT {
                    groups.push((format!("{n1} x {n2}"), direct_product(b1, b2)));
                }
            }
        }
        groups
            .into_iter()
            .map(|(name, group)| Entry { name, fp: fingerprint(&group), group })
            .collect()
    })
}

/// A name for `group` when it is abelian or isomorphic to a catalog entry.
pub fn identify(group: &FiniteGroup) -> Result<Option<String>> {
    if group.is_abelian() {
        return Ok(Some(abelian_name(group)));
    }
    if group.order() > CATALOG_ORDER_LIMIT || group.order() > ISO_ORDER_LIMIT {
        return Ok(None);
    }
    let fp = fingerprint(group);
    for e in catalog() {
        if e.fp == fp && is_isomorphic(group, &e.group)?.is_some() {
            return Ok(Some(e.name.clone()));
        }
    }
    Ok(None)
}

/// Catalog groups of order at most `max_order`, abelian ones included.
pub fn named_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = vec![("1".into(), FiniteGroup::trivial())];
    out.extend(small_abelian(max_order));
    out.extend(
        catalog()
            .iter()
            .filter(|e| e.group.order() <= max_order)
            .map(|e| (e.name.clone(), e.group.clone())),
    );
    out
}

/// The automorphism of `V4 = {e, a, b, ab}` fixing `fixed` and swapping the other two
/// nonidentity elements.
///
/// Under the labeling `a -> 1`, `b -> 2`, `ab -> 3` of `Aut(V4) = S3`, fixing `ab` is the
/// transposition (12), fixing `b` is (13) and fixing `a` is (23).
pub fn klein_four_swap(fixed: usize) -> Vec<usize> {
    assert!((1..4).contains(&fixed));
    let mut p: Vec<usize> = (0..4).collect();
    let others: Vec<usize> = (1..4).filter(|&x| x != fixed).collect();
    p.swap(others[0], others[1]);
    p
}

/// The action of `V4` on itself in which `a` and `b` both act by [`klein_four_swap`].
pub fn klein_four_action(fixed: usize) -> ActionTable {
    let s = klein_four_swap(fixed);
    let id: Vec<usize> = (0..4).collect();
    vec![id.clone(), s.clone(), s, id]
}

/// `G = H = V4` with all four actions equal to [`klein_four_action`].
pub fn klein_four_system(fixed: usize) -> ActionSystem {
    ActionSystem::uniform(klein_four(), klein_four_action(fixed)).expect("valid action")
}
