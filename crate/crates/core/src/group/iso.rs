use std::collections::HashMap;

use super::fingerprint::fingerprint;
use super::finite::FiniteGroup;
use super::hom::{extend_partial, GroupHom};
use crate::error::{Error, Result};

/// Largest order accepted by [`is_isomorphic`].
pub const ISO_ORDER_LIMIT: usize = 512;
/// Largest order accepted by [`enumerate_homs`] and [`automorphism_group`].
pub const HOM_ORDER_LIMIT: usize = 64;
/// Largest automorphism group [`automorphism_group`] will tabulate.
pub const AUT_ORDER_LIMIT: usize = 2048;

/// Depth-first search over images of `gens`. `visit` receives every complete
/// homomorphism and returns `false` to stop the search.
fn search(
    domain: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    mul_cod: &dyn Fn(usize, usize) -> usize,
    injective_into: Option<usize>,
    visit: &mut dyn FnMut(Vec<usize>) -> bool,
) {
    let mut chosen = Vec::with_capacity(gens.len());
    descend(domain, gens, candidates, mul_cod, injective_into, &mut chosen, visit);
}

fn descend(
    domain: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    mul_cod: &dyn Fn(usize, usize) -> usize,
    injective_into: Option<usize>,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(Vec<usize>) -> bool,
) -> bool {
    let k = chosen.len();
    for &c in &candidates[k] {
        chosen.push(c);
        if let Some(map) = extend_partial(domain, &gens[..=k], chosen, mul_cod, injective_into) {
            let keep_going = if k + 1 == gens.len() {
                visit(map)
            } else {
                descend(domain, gens, candidates, mul_cod, injective_into, chosen, visit)
            };
            if !keep_going {
                chosen.pop();
                return false;
            }
        }
        chosen.pop();
    }
    true
}

/// Decides whether two groups are isomorphic, returning a witness isomorphism.
///
/// Fingerprints are compared first; then images of a generating set of `g1` are
/// searched among elements of matching order.
pub fn is_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<Option<GroupHom>> {
    for g in [g1, g2] {
        if g.order() > ISO_ORDER_LIMIT {
            return Err(Error::Capability {
                what: "group order for isomorphism testing",
                limit: ISO_ORDER_LIMIT,
                got: g.order(),
            });
        }
    }
    if g1.order() != g2.order() || fingerprint(g1) != fingerprint(g2) {
        return Ok(None);
    }
    if g1.order() == 1 {
        return Ok(Some(GroupHom::identity(g1)));
    }
    let gens = g1.generating_set();
    let orders2: Vec<usize> = g2.elements().map(|x| g2.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = g1.element_order(s);
            g2.elements().filter(|&y| orders2[y] == o).collect()
        })
        .collect();
    let mut found = None;
    search(
        g1,
        &gens,
        &candidates,
        &|a, b| g2.mul(a, b),
        Some(g2.order()),
        &mut |map| {
            found = Some(map);
            false
        },
    );
    Ok(found.map(|m| GroupHom::new_unchecked(m, g2.order())))
}

/// Every homomorphism `g -> h`, ordered lexicographically by image array.
pub fn enumerate_homs(g: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<GroupHom>> {
    for x in [g, h] {
        if x.order() > HOM_ORDER_LIMIT {
            return Err(Error::Capability {
                what: "group order for homomorphism enumeration",
                limit: HOM_ORDER_LIMIT,
                got: x.order(),
            });
        }
    }
    Ok(homs_unbounded(g, h))
}

pub(crate) fn homs_unbounded(g: &FiniteGroup, h: &FiniteGroup) -> Vec<GroupHom> {
    if g.order() == 1 {
        return vec![GroupHom::trivial(g, h)];
    }
    let gens = g.generating_set();
    let orders_h: Vec<usize> = h.elements().map(|y| h.element_order(y)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = g.element_order(s);
            h.elements().filter(|&y| o % orders_h[y] == 0).collect()
        })
        .collect();
    let mut out = Vec::new();
    search(g, &gens, &candidates, &|a, b| h.mul(a, b), None, &mut |map| {
        out.push(GroupHom::new_unchecked(map, h.order()));
        true
    });
    out.sort();
    out
}

/// `Aut(g)` as a group under composition, together with the automorphisms themselves.
///
/// Automorphisms are sorted by image array, so the identity map is element 0.
/// The product of elements `i` and `j` is `auts[i]` after `auts[j]`.
pub fn automorphism_group(g: &FiniteGroup) -> Result<(FiniteGroup, Vec<GroupHom>)> {
    if g.order() > HOM_ORDER_LIMIT {
        return Err(Error::Capability {
            what: "group order for automorphism computation",
            limit: HOM_ORDER_LIMIT,
            got: g.order(),
        });
    }
    let auts = automorphisms(g)?;
    let aut_group = composition_group(g, &auts);
    Ok((aut_group, auts))
}

pub(crate) fn automorphisms(g: &FiniteGroup) -> Result<Vec<GroupHom>> {
    if g.order() == 1 {
        return Ok(vec![GroupHom::identity(g)]);
    }
    let gens = g.generating_set();
    let orders: Vec<usize> = g.elements().map(|y| g.element_order(y)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| g.elements().filter(|&y| orders[y] == orders[s]).collect())
        .collect();
    let mut out = Vec::new();
    let mut overflow = false;
    search(g, &gens, &candidates, &|a, b| g.mul(a, b), Some(g.order()), &mut |map| {
        out.push(GroupHom::new_unchecked(map, g.order()));
        if out.len() > AUT_ORDER_LIMIT {
            overflow = true;
            return false;
        }
        true
    });
    if overflow {
        return Err(Error::Capability {
            what: "automorphism group order",
            limit: AUT_ORDER_LIMIT,
            got: out.len(),
        });
    }
    out.sort();
    Ok(out)
}

pub(crate) fn composition_group(g: &FiniteGroup, auts: &[GroupHom]) -> FiniteGroup {
    let index: HashMap<&[usize], usize> = auts.iter().enumerate().map(|(i, a)| (a.images(), i)).collect();
    let n = auts.len();
    let mut table = Vec::with_capacity(n * n);
    for a in auts {
        for b in auts {
            let c: Vec<usize> = g.elements().map(|x| a.apply(b.apply(x))).collect();
            table.push(index[c.as_slice()] as u32);
        }
    }
    let labels = (0..n)
        .map(|i| if i == 0 { "id".to_string() } else { format!("aut{i}") })
        .collect();
    FiniteGroup::from_flat(n, table, Some(labels)).expect("automorphisms form a group")
}
