use serde::{Deserialize, Serialize};

use super::subgroups::{deviational, require_fully_compatible};
use crate::actions::{ActionSystem, Side};
use crate::error::{Error, Result};
use crate::group::{center, coset_representatives, extend_hom, quotient, FiniteGroup, GroupHom};
use crate::tensor::{TensorActions, TensorResult};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub checked: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<[usize; 2]>,
}

impl AxiomCheck {
    fn record(&mut self, a: usize, b: usize, ok: bool) {
        self.checked += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some([a, b]);
        }
    }

    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedModuleReport {
    pub quotient_order: usize,
    pub tensor_order: usize,
    pub image_order: usize,
    pub kernel_order: usize,
    /// The action of `G` on the tensor factors through the quotient.
    pub action_well_defined: bool,
    /// `phi(^b a) = b phi(a) b^-1`
    pub equivariance: AxiomCheck,
    /// `^phi(a) a' = a a' a^-1`
    pub peiffer: AxiomCheck,
    pub kernel_central: bool,
}

impl CrossedModuleReport {
    pub fn passed(&self) -> bool {
        self.action_well_defined && self.equivariance.passed() && self.peiffer.passed() && self.kernel_central
    }
}

/// `phi: G ⊠ H -> G / D_rho(G)`, `g ⊠ h -> g ^h g^-1`, with the quotient acting on the
/// tensor through coset representatives.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    pub quotient: FiniteGroup,
    pub projection: GroupHom,
    pub phi: GroupHom,
    /// `action[q]` is the automorphism of the tensor by which the coset `q` acts.
    pub action: Vec<Vec<usize>>,
    pub report: CrossedModuleReport,
}

pub fn crossed_module_phi(sys: &ActionSystem, t: &TensorResult) -> Result<CrossedModule> {
    require_fully_compatible(sys, "the crossed module")?;
    let g = sys.g();
    let m = &t.group;
    let acts = TensorActions::new(sys, t)?;
    let (q, proj) = quotient(g, &deviational(sys, Side::G))?;

    let mut gens = Vec::new();
    let mut images = Vec::new();
    for x in g.elements() {
        for y in sys.h().elements() {
            gens.push(t.pairing[x][y]);
            images.push(proj.apply(g.mul(x, sys.sigma_h()[y][g.inv(x)])));
        }
    }
    let phi = extend_hom(m, &q, &gens, &images)
        .ok_or_else(|| Error::CheckFailed("g ⊠ h -> g ^h(g^-1) is not a homomorphism".into()))?;

    let reps = coset_representatives(&proj);
    let action_well_defined = g.elements().all(|x| acts.by_g[x] == acts.by_g[reps[proj.apply(x)]]);
    let action: Vec<Vec<usize>> = reps.iter().map(|&r| acts.by_g[r].clone()).collect();

    let mut equivariance = AxiomCheck::default();
    for b in q.elements() {
        for a in m.elements() {
            equivariance.record(b, a, phi.apply(action[b][a]) == q.conj(b, phi.apply(a)));
        }
    }
    let mut peiffer = AxiomCheck::default();
    for a in m.elements() {
        for a2 in m.elements() {
            peiffer.record(a, a2, action[phi.apply(a)][a2] == m.conj(a, a2));
        }
    }
    let kernel = phi.kernel(m);
    let kernel_central = kernel.is_subset_of(&center(m));

    let report = CrossedModuleReport {
        quotient_order: q.order(),
        tensor_order: m.order(),
        image_order: phi.image_subgroup(&q).order(),
        kernel_order: kernel.order(),
        action_well_defined,
        equivariance,
        peiffer,
        kernel_central,
    };
    Ok(CrossedModule { quotient: q, projection: proj, phi, action, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::conjugation_action;
    use crate::catalog::klein_four_system;
    use crate::fp::EnumLimits;
    use crate::group::construct::*;
    use crate::tensor::{compute_tensor, TensorKind, TensorSpec};

    fn run(sys: &ActionSystem) -> CrossedModule {
        let t = compute_tensor(sys, TensorSpec::direct(TensorKind::Box), EnumLimits::default()).unwrap();
        crossed_module_phi(sys, &t).unwrap()
    }

    #[test]
    fn klein_four() {
        let c = run(&klein_four_system(3));
        assert!(c.report.passed(), "{:?}", c.report);
        assert_eq!(c.report.quotient_order, 2);
    }

    #[test]
    fn symmetric_on_itself() {
        let s3 = symmetric3();
        let a = conjugation_action(&s3);
        let sys = ActionSystem::with_conjugation(s3.clone(), s3, a.clone(), a).unwrap();
        let c = run(&sys);
        assert!(c.report.passed());
        // the image is the derived subgroup
        assert_eq!(c.report.image_order, 3);
        assert_eq!(c.report.quotient_order, 6);
    }

    #[test]
    fn trivial_mutual_actions_have_trivial_image() {
        let c = run(&ActionSystem::conjugation_trivial(dihedral(4), cyclic(2)));
        assert!(c.report.passed());
        assert_eq!(c.report.image_order, 1);
        assert_eq!(c.report.kernel_order, c.report.tensor_order);
    }
}
