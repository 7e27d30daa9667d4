//! Every action system on a pair of small groups, and a per-system summary table.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::actions::{
    action_from_hom, check_half_compatibility, classify, condition_holds, conjugation_action, trivial_action,
    ActionSystem, ActionTable, ConditionId, Regime,
};
use crate::catalog::identify;
use crate::derived::check_cyclic_derivative_abelian;
use crate::error::{Error, Result};
use crate::fp::EnumLimits;
use crate::group::{automorphisms, composition_group, fingerprint, homs_unbounded, FiniteGroup, GroupHom, IsoFingerprint};
use crate::tensor::{compute_tensor, TensorKind, TensorResult, TensorSpec};

/// Largest group order accepted by the sweep.
pub const SWEEP_ORDER_LIMIT: usize = 16;
/// Largest number of systems the `all` family will list.
pub const SWEEP_SYSTEM_LIMIT: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `G = H` and all four actions come from one homomorphism `G -> Aut(G)`.
    Equal,
    /// Conjugation on themselves, arbitrary mutual actions.
    Conjugation,
    /// Every system satisfying all eight full-compatibility conditions.
    FullyCompatible,
    /// Every system.
    All,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Equal => "equal",
            Family::Conjugation => "conjugation",
            Family::FullyCompatible => "fully_compatible",
            Family::All => "all",
        }
    }
}

/// Every homomorphism `actor -> Aut(target)`, as action tables, ordered by the image
/// arrays of the homomorphisms into the sorted automorphism list.
pub fn action_tables(actor: &FiniteGroup, target: &FiniteGroup) -> Result<Vec<ActionTable>> {
    for x in [actor, target] {
        if x.order() > SWEEP_ORDER_LIMIT {
            return Err(Error::Capability { what: "sweep group order", limit: SWEEP_ORDER_LIMIT, got: x.order() });
        }
    }
    let auts = automorphisms(target)?;
    let aut_group = composition_group(target, &auts);
    Ok(homs_unbounded(actor, &aut_group)
        .iter()
        .map(|hom| action_from_hom(hom, &auts))
        .collect())
}

/// A system together with the positions of its four tables in the lists returned by
/// [`action_tables`], in the order `rho_G, rho_H, sigma_G, sigma_H`.
#[derive(Clone, Debug)]
pub struct SystemEntry {
    pub index: [usize; 4],
    pub system: ActionSystem,
}

struct Tables {
    rho_g: Vec<ActionTable>,
    rho_h: Vec<ActionTable>,
    sigma_g: Vec<ActionTable>,
    sigma_h: Vec<ActionTable>,
}

impl Tables {
    fn new(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        Ok(Tables {
            rho_g: action_tables(g, g)?,
            rho_h: action_tables(h, h)?,
            sigma_g: action_tables(g, h)?,
            sigma_h: action_tables(h, g)?,
        })
    }

    fn entry(&self, g: &FiniteGroup, h: &FiniteGroup, index: [usize; 4]) -> SystemEntry {
        let [a, b, c, d] = index;
        SystemEntry {
            index,
            system: ActionSystem::new_unchecked(
                g.clone(),
                h.clone(),
                self.rho_g[a].clone(),
                self.rho_h[b].clone(),
                self.sigma_g[c].clone(),
                self.sigma_h[d].clone(),
            ),
        }
    }
}

fn position(list: &[ActionTable], t: &ActionTable) -> usize {
    list.iter().position(|x| x == t).expect("conjugation is a homomorphism into Aut")
}

/// Systems of `family` on `(g, h)`, in lexicographic order of their index tuples.
pub fn enumerate_systems(g: &FiniteGroup, h: &FiniteGroup, family: Family) -> Result<Vec<SystemEntry>> {
    let t = Tables::new(g, h)?;
    let out = match family {
        Family::Equal => {
            if g.table_rows() != h.table_rows() {
                return Err(Error::input("the equal family needs G and H to have the same table"));
            }
            (0..t.rho_g.len()).map(|i| t.entry(g, h, [i; 4])).collect()
        }
        Family::Conjugation => {
            let a = position(&t.rho_g, &conjugation_action(g));
            let b = position(&t.rho_h, &conjugation_action(h));
            let mut out = Vec::new();
            for c in 0..t.sigma_g.len() {
                for d in 0..t.sigma_h.len() {
                    out.push(t.entry(g, h, [a, b, c, d]));
                }
            }
            out
        }
        Family::All => {
            let total = t.rho_g.len() * t.rho_h.len() * t.sigma_g.len() * t.sigma_h.len();
            if total > SWEEP_SYSTEM_LIMIT {
                return Err(Error::Capability { what: "number of swept systems", limit: SWEEP_SYSTEM_LIMIT, got: total });
            }
            let mut out = Vec::with_capacity(total);
            for a in 0..t.rho_g.len() {
                for b in 0..t.rho_h.len() {
                    for c in 0..t.sigma_g.len() {
                        for d in 0..t.sigma_h.len() {
                            out.push(t.entry(g, h, [a, b, c, d]));
                        }
                    }
                }
            }
            out
        }
        Family::FullyCompatible => fully_compatible(g, h, &t),
    };
    Ok(out)
}

// Each condition only reads some of the four tables, so they are checked as soon as
// the tables they need are fixed; the rest are filled with trivial actions.
fn fully_compatible(g: &FiniteGroup, h: &FiniteGroup, t: &Tables) -> Vec<SystemEntry> {
    let (tg, th) = (trivial_action(g, h), trivial_action(h, g));
    let partial = |rg: &ActionTable, rh: &ActionTable, sg: &ActionTable, sh: &ActionTable| {
        ActionSystem::new_unchecked(g.clone(), h.clone(), rg.clone(), rh.clone(), sg.clone(), sh.clone())
    };
    let holds = |s: &ActionSystem, ids: &[ConditionId]| ids.iter().all(|&id| condition_holds(s, id));
    let (idg, idh) = (trivial_action(g, g), trivial_action(h, h));

    let rho_g: Vec<usize> = (0..t.rho_g.len())
        .filter(|&a| holds(&partial(&t.rho_g[a], &idh, &tg, &th), &[ConditionId::Fc2a]))
        .collect();
    let rho_h: Vec<usize> = (0..t.rho_h.len())
        .filter(|&b| holds(&partial(&idg, &t.rho_h[b], &tg, &th), &[ConditionId::Fc2b]))
        .collect();
    // sigma_G candidates per rho_G, sigma_H candidates per rho_H
    let sigma_g: Vec<Vec<usize>> = rho_g
        .iter()
        .map(|&a| {
            (0..t.sigma_g.len())
                .filter(|&c| holds(&partial(&t.rho_g[a], &idh, &t.sigma_g[c], &th), &[ConditionId::Fc3a]))
                .collect()
        })
        .collect();
    let sigma_h: Vec<Vec<usize>> = rho_h
        .iter()
        .map(|&b| {
            (0..t.sigma_h.len())
                .filter(|&d| holds(&partial(&idg, &t.rho_h[b], &tg, &t.sigma_h[d]), &[ConditionId::Fc3b]))
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    for (ia, &a) in rho_g.iter().enumerate() {
        for (ib, &b) in rho_h.iter().enumerate() {
            for &c in &sigma_g[ia] {
                let s = partial(&t.rho_g[a], &t.rho_h[b], &t.sigma_g[c], &th);
                if !holds(&s, &[ConditionId::Fc4a]) {
                    continue;
                }
                for &d in &sigma_h[ib] {
                    let s = partial(&t.rho_g[a], &t.rho_h[b], &t.sigma_g[c], &t.sigma_h[d]);
                    if holds(&s, &[ConditionId::Fc4b, ConditionId::Fc1a, ConditionId::Fc1b]) {
                        out.push(SystemEntry { index: [a, b, c, d], system: s });
                    }
                }
            }
        }
    }
    out
}

/// Relabels a table of `actor` acting on `target` along automorphisms `a` of the actor
/// and `b` of the target: the new table sends `(a x, b y)` to `b (x . y)`.
fn transport(table: &ActionTable, a: &GroupHom, b: &GroupHom) -> ActionTable {
    let mut out = table.clone();
    for (x, row) in table.iter().enumerate() {
        for (y, &z) in row.iter().enumerate() {
            out[a.apply(x)][b.apply(y)] = b.apply(z);
        }
    }
    out
}

fn permutation(list: &[ActionTable], a: &GroupHom, b: &GroupHom) -> Vec<usize> {
    let index: HashMap<&ActionTable, usize> = list.iter().enumerate().map(|(i, t)| (t, i)).collect();
    list.iter().map(|t| index[&transport(t, a, b)]).collect()
}

/// One system per orbit of `Aut(G) x Aut(H)` acting by relabeling both groups, with the
/// orbit size. Relabeled systems have isomorphic products and identical regimes. The
/// representative is the entry with the smallest index tuple.
pub fn orbit_representatives(
    g: &FiniteGroup,
    h: &FiniteGroup,
    entries: Vec<SystemEntry>,
) -> Result<Vec<(SystemEntry, usize)>> {
    let t = Tables::new(g, h)?;
    let (aut_g, aut_h) = (automorphisms(g)?, automorphisms(h)?);
    let mut perms = Vec::with_capacity(aut_g.len() * aut_h.len());
    for a in &aut_g {
        for b in &aut_h {
            perms.push([
                permutation(&t.rho_g, a, a),
                permutation(&t.rho_h, b, b),
                permutation(&t.sigma_g, a, b),
                permutation(&t.sigma_h, b, a),
            ]);
        }
    }
    let present: HashSet<[usize; 4]> = entries.iter().map(|e| e.index).collect();
    let mut seen: HashSet<[usize; 4]> = HashSet::new();
    let mut out = Vec::new();
    for e in entries {
        if seen.contains(&e.index) {
            continue;
        }
        let mut orbit = HashSet::new();
        for p in &perms {
            let img = [0, 1, 2, 3].map(|k| p[k][e.index[k]]);
            if !present.contains(&img) {
                return Err(Error::input("entry list is not closed under relabeling"));
            }
            orbit.insert(img);
        }
        let size = orbit.len();
        seen.extend(orbit);
        out.push((e, size));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RowOptions {
    pub limits: EnumLimits,
    /// Also attempt the box tensor when the system is not fully compatible; it may be
    /// infinite, in which case the row records the enumeration limit.
    pub box_always: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSummary {
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub fingerprint: IsoFingerprint,
}

impl ProductSummary {
    pub fn of(t: &TensorResult) -> Result<Self> {
        Ok(ProductSummary { order: t.order(), name: identify(&t.group)?, fingerprint: fingerprint(&t.group) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub index: [usize; 4],
    /// Systems represented by this row (1 unless rows were reduced by relabeling).
    pub orbit_size: usize,
    pub regime: Regime,
    #[serde(rename = "box", default, skip_serializing_if = "Option::is_none")]
    pub box_product: Option<ProductSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inassaridze: Option<ProductSummary>,
    /// Whether a cyclic reduced derivative comes with an abelian box tensor; set for
    /// fully compatible rows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic_derivative_holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn is_trivial_table(t: &ActionTable) -> bool {
    t.iter().all(|row| row.iter().enumerate().all(|(i, &x)| i == x))
}

fn attempt(sys: &ActionSystem, kind: TensorKind, limits: EnumLimits, notes: &mut Vec<String>) -> Result<Option<TensorResult>> {
    match compute_tensor(sys, TensorSpec::direct(kind), limits) {
        Ok(t) => Ok(Some(t)),
        Err(e @ Error::Inconclusive { .. }) => {
            notes.push(format!("{}: {e}", kind.as_str()));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// The summary of one system. The box tensor is computed for fully compatible systems,
/// the Inassaridze product for conjugation self-actions that are half compatible or have
/// `G` acting trivially on `H`; both are finite there.
pub fn sweep_row(entry: &SystemEntry, orbit_size: usize, opts: RowOptions) -> Result<SweepRow> {
    let sys = &entry.system;
    let regime = classify(sys).regime;
    let mut notes = Vec::new();
    let full = regime == Regime::FullyCompatible;
    let mut box_product = None;
    let mut cyclic_derivative_holds = None;
    if full || opts.box_always {
        if let Some(t) = attempt(sys, TensorKind::Box, opts.limits, &mut notes)? {
            if full {
                cyclic_derivative_holds = Some(check_cyclic_derivative_abelian(sys, &t)?.holds());
            }
            box_product = Some(ProductSummary::of(&t)?);
        }
    }
    let mut inassaridze = None;
    if sys.is_conjugation_self_action()
        && (is_trivial_table(sys.sigma_g()) || check_half_compatibility(sys).regime.is_half_compatible())
    {
        if let Some(t) = attempt(sys, TensorKind::Inassaridze, opts.limits, &mut notes)? {
            inassaridze = Some(ProductSummary::of(&t)?);
        }
    }
    Ok(SweepRow { index: entry.index, orbit_size, regime, box_product, inassaridze, cyclic_derivative_holds, notes })
}

/// One row per system of `family`, or per relabeling orbit when `reduce` is set, in
/// lexicographic order of the index tuples.
pub fn sweep(g: &FiniteGroup, h: &FiniteGroup, family: Family, reduce: bool, opts: RowOptions) -> Result<Vec<SweepRow>> {
    let entries = enumerate_systems(g, h, family)?;
    let rows: Vec<(SystemEntry, usize)> = if reduce {
        orbit_representatives(g, h, entries)?
    } else {
        entries.into_iter().map(|e| (e, 1)).collect()
    };
    rows.iter().map(|(e, n)| sweep_row(e, *n, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::{check_full_compatibility, Regime};
    use crate::group::construct::*;

    #[test]
    fn table_counts() {
        let v4 = klein_four();
        assert_eq!(action_tables(&v4, &v4).unwrap().len(), 10);
        assert_eq!(action_tables(&cyclic(2), &symmetric3()).unwrap().len(), 4);
        assert_eq!(action_tables(&cyclic(3), &cyclic(2)).unwrap().len(), 1);
        let big = cyclic(17);
        assert!(matches!(action_tables(&big, &cyclic(2)), Err(Error::Capability { .. })));
    }

    #[test]
    fn staged_search_matches_filtering_all() {
        for (g, h) in [(klein_four(), cyclic(2)), (cyclic(4), klein_four()), (symmetric3(), cyclic(2))] {
            let all = enumerate_systems(&g, &h, Family::All).unwrap();
            let expected: Vec<[usize; 4]> = all
                .iter()
                .filter(|e| check_full_compatibility(&e.system).regime == Regime::FullyCompatible)
                .map(|e| e.index)
                .collect();
            let got: Vec<[usize; 4]> = enumerate_systems(&g, &h, Family::FullyCompatible)
                .unwrap()
                .iter()
                .map(|e| e.index)
                .collect();
            assert_eq!(got, expected);
            assert!(!got.is_empty());
        }
    }

    #[test]
    fn systems_validate() {
        for e in enumerate_systems(&klein_four(), &klein_four(), Family::Equal).unwrap() {
            let s = &e.system;
            assert!(ActionSystem::new(
                s.g().clone(),
                s.h().clone(),
                s.rho_g().clone(),
                s.rho_h().clone(),
                s.sigma_g().clone(),
                s.sigma_h().clone()
            )
            .is_ok());
        }
    }

    #[test]
    fn orbits_partition_and_preserve_regime() {
        let (g, h) = (klein_four(), cyclic(4));
        let all = enumerate_systems(&g, &h, Family::All).unwrap();
        let n = all.len();
        let reps = orbit_representatives(&g, &h, all.clone()).unwrap();
        assert_eq!(reps.iter().map(|(_, s)| s).sum::<usize>(), n);
        assert!(reps.len() < n);
        // every system has the regime of its representative's orbit: compare multisets
        use std::collections::BTreeMap;
        let mut by_regime: BTreeMap<&str, usize> = BTreeMap::new();
        for e in &all {
            *by_regime.entry(crate::actions::classify(&e.system).regime.as_str()).or_default() += 1;
        }
        let mut by_rep: BTreeMap<&str, usize> = BTreeMap::new();
        for (e, size) in &reps {
            *by_rep.entry(crate::actions::classify(&e.system).regime.as_str()).or_default() += size;
        }
        assert_eq!(by_regime, by_rep);
    }

    #[test]
    fn conjugation_family() {
        let v = enumerate_systems(&symmetric3(), &cyclic(2), Family::Conjugation).unwrap();
        // homs S3 -> Aut(C2) = 1, homs C2 -> Aut(S3) = S3: 4
        assert_eq!(v.len(), 4);
        assert!(v.iter().all(|e| e.system.is_conjugation_self_action()));
        assert!(enumerate_systems(&cyclic(2), &cyclic(3), Family::Equal).is_err());
        let t = enumerate_systems(&FiniteGroup::trivial(), &cyclic(3), Family::All).unwrap();
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn rows_for_tiny_pairs() {
        let opts = RowOptions::default();
        let rows = sweep(&cyclic(2), &cyclic(2), Family::All, false, opts).unwrap();
        assert_eq!(rows.len(), 1);
        let r = &rows[0];
        assert_eq!(r.regime, Regime::FullyCompatible);
        assert_eq!(r.box_product.as_ref().unwrap().order, 2);
        assert_eq!(r.inassaridze.as_ref().unwrap().order, 2);
        assert_eq!(r.cyclic_derivative_holds, Some(true));
        let rows = sweep(&FiniteGroup::trivial(), &klein_four(), Family::Conjugation, false, opts).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].box_product.as_ref().unwrap().order, 1);
    }
}
