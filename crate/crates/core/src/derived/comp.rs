use serde::{Deserialize, Serialize};

use crate::actions::{
    check_compatibility, check_half_compatibility, conjugation_action, condition_holds, ActionSystem, ConditionId,
    Elem, Letter, Regime, Side,
};
use crate::error::{Error, Result};
use crate::fp::EnumLimits;
use crate::group::{coset_representatives, extend_hom, normal_closure, quotient, FiniteGroup, GroupHom, Subgroup};
use crate::tensor::{compute_tensor, TensorKind, TensorResult, TensorSpec};

/// Normal closure in `G` of `^(^g h) g' (^(g h g^-1) g')^-1`, trivial exactly when `H`
/// acts compatibly on `G`.
pub(crate) fn failure_subgroup(sys: &ActionSystem) -> Subgroup {
    let (g, h) = (sys.g(), sys.h());
    let mut gens = Vec::new();
    for x in g.elements() {
        let word = |y| [Letter::new(Elem::g(x)), Letter::new(Elem::h(y)), Letter::inv(Elem::g(x))];
        for y in h.elements() {
            let moved = sys.sigma_g()[x][y];
            let w = word(y);
            for x2 in g.elements() {
                let lhs = sys.sigma_h()[moved][x2];
                let rhs = sys.act_word(&w, Elem::g(x2)).index;
                gens.push(g.mul(lhs, g.inv(rhs)));
            }
        }
    }
    gens.sort_unstable();
    gens.dedup();
    normal_closure(g, &gens).expect("indices in range")
}

/// `X` and `X'` in the `side` group, with the quotient system in which both mutual
/// actions are compatible.
#[derive(Clone, Debug)]
pub struct CompSubgroups {
    pub side: Side,
    pub x: Subgroup,
    /// Smallest normal subgroup containing `X` and stable under the other group.
    pub x_prime: Subgroup,
    /// Enlargement rounds needed to reach `X'`.
    pub rounds: usize,
    pub quotient: FiniteGroup,
    pub projection: GroupHom,
    /// The original system with the `side` group replaced by its quotient by `X'`.
    pub quotient_system: ActionSystem,
}

/// `side = G` needs `G` to act compatibly on `H` and quotients `G`; `side = H` is the mirror.
pub fn comp_subgroups(sys: &ActionSystem, side: Side) -> Result<CompSubgroups> {
    if !sys.is_conjugation_self_action() {
        return Err(Error::precondition("comp subgroups need conjugation self-actions"));
    }
    match side {
        Side::G => comp_g(sys),
        Side::H => {
            let mut c = comp_g(&sys.swapped())?;
            c.side = Side::H;
            c.quotient_system = c.quotient_system.swapped();
            Ok(c)
        }
    }
}

fn comp_g(sys: &ActionSystem) -> Result<CompSubgroups> {
    if !condition_holds(sys, ConditionId::E131) {
        return Err(Error::precondition("the acting group does not act compatibly on the other"));
    }
    let (g, h) = (sys.g(), sys.h());
    let x = failure_subgroup(sys);
    let mut cur = x.clone();
    let mut rounds = 0;
    loop {
        let mut gens = cur.elements().to_vec();
        gens.extend(h.elements().flat_map(|y| cur.elements().iter().map(move |&e| sys.sigma_h()[y][e])));
        gens.sort_unstable();
        gens.dedup();
        let next = normal_closure(g, &gens)?;
        if next == cur {
            break;
        }
        cur = next;
        rounds += 1;
    }
    if !cur.elements().iter().all(|&e| h.elements().all(|y| sys.sigma_g()[e][y] == y)) {
        return Err(Error::CheckFailed("X' does not act trivially on the other group".into()));
    }
    let (q, proj) = quotient(g, &cur)?;
    let reps = coset_representatives(&proj);
    let sigma_q: Vec<Vec<usize>> = reps.iter().map(|&r| sys.sigma_g()[r].clone()).collect();
    let sigma_h: Vec<Vec<usize>> =
        h.elements().map(|y| reps.iter().map(|&r| proj.apply(sys.sigma_h()[y][r])).collect()).collect();
    let rho_q = conjugation_action(&q);
    let quotient_system = ActionSystem::new(q.clone(), h.clone(), rho_q, sys.rho_h().clone(), sigma_q, sigma_h)
        .map_err(|e| Error::CheckFailed(format!("the actions do not descend to G/X': {e}")))?;
    if check_compatibility(&quotient_system).regime != Regime::Compatible {
        return Err(Error::CheckFailed("the actions on G/X' are not compatible".into()));
    }
    Ok(CompSubgroups { side: Side::G, x, x_prime: cur, rounds, quotient: q, projection: proj, quotient_system })
}

/// Which side can be reduced: `G` when `G` acts compatibly on `H`, else `H` when the
/// converse holds.
pub fn compatible_side(sys: &ActionSystem) -> Option<Side> {
    match check_half_compatibility(sys).regime {
        Regime::Compatible | Regime::FullyCompatible | Regime::HalfCompatibleGOnH => Some(Side::G),
        Regime::HalfCompatibleHOnG => Some(Side::H),
        Regime::None => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientMapReport {
    pub side: Side,
    pub x_order: usize,
    pub x_prime_order: usize,
    pub source_order: usize,
    pub target_order: usize,
    pub well_defined: bool,
    pub surjective: bool,
}

impl QuotientMapReport {
    pub fn passed(&self) -> bool {
        self.well_defined && self.surjective
    }
}

/// The map of Inassaridze products induced by the projection onto the quotient by `X'`.
pub fn verify_quotient_map(sys: &ActionSystem, side: Side, limits: EnumLimits) -> Result<QuotientMapReport> {
    let c = comp_subgroups(sys, side)?;
    let spec = TensorSpec::direct(TensorKind::Inassaridze);
    let source = compute_tensor(sys, spec, limits)?;
    let target = compute_tensor(&c.quotient_system, spec, limits)?;
    let hom = induced_map(sys, &source, &target, |x, y| match side {
        Side::G => (c.projection.apply(x), y),
        Side::H => (x, c.projection.apply(y)),
    });
    Ok(QuotientMapReport {
        side,
        x_order: c.x.order(),
        x_prime_order: c.x_prime.order(),
        source_order: source.order(),
        target_order: target.order(),
        well_defined: hom.is_some(),
        surjective: hom.is_some_and(|f| f.is_surjective()),
    })
}

fn induced_map(
    sys: &ActionSystem,
    source: &TensorResult,
    target: &TensorResult,
    pair: impl Fn(usize, usize) -> (usize, usize),
) -> Option<GroupHom> {
    let mut image = vec![usize::MAX; source.order()];
    let mut gens = Vec::new();
    let mut imgs = Vec::new();
    for x in sys.g().elements() {
        for y in sys.h().elements() {
            let s = source.pairing[x][y];
            let (a, b) = pair(x, y);
            let t = target.pairing[a][b];
            if image[s] == usize::MAX {
                image[s] = t;
                gens.push(s);
                imgs.push(t);
            } else if image[s] != t {
                return None;
            }
        }
    }
    extend_hom(&source.group, &target.group, &gens, &imgs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct::*;
    use crate::sweep::action_tables;

    #[test]
    fn compatible_systems_have_trivial_x() {
        let sys = ActionSystem::conjugation_trivial(symmetric3(), cyclic(2));
        let c = comp_subgroups(&sys, Side::G).unwrap();
        assert!(c.x.is_trivial() && c.x_prime.is_trivial());
        assert_eq!(c.quotient.order(), 6);
        let r = verify_quotient_map(&sys, Side::G, EnumLimits::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.source_order, r.target_order);
    }

    #[test]
    fn half_compatible_systems_reduce() {
        // every half-compatible system of S3 and C2 with conjugation self-actions
        let (s3, c2) = (symmetric3(), cyclic(2));
        let mut seen = 0;
        for sg in action_tables(&s3, &c2).unwrap() {
            for sh in action_tables(&c2, &s3).unwrap() {
                let sys = ActionSystem::with_conjugation(s3.clone(), c2.clone(), sg.clone(), sh).unwrap();
                let Some(side) = compatible_side(&sys) else { continue };
                seen += 1;
                let r = verify_quotient_map(&sys, side, EnumLimits::default()).unwrap();
                assert!(r.passed(), "{r:?}");
                let other = comp_subgroups(&sys, side.other());
                if check_half_compatibility(&sys).regime != Regime::Compatible {
                    assert!(other.is_err());
                }
            }
        }
        assert!(seen > 0);
    }
}
