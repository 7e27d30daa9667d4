use serde::{Deserialize, Serialize};

use super::comp::failure_subgroup;
use crate::actions::{check_half_compatibility, ActionSystem};
use crate::error::{Error, Result};
use crate::fp::EnumLimits;
use crate::group::{extend_hom, normal_closure, quotient, FiniteGroup, GroupHom, Subgroup};
use crate::tensor::{compute_tensor, TensorKind, TensorResult, TensorSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub a_prime_order: usize,
    pub tensor_order: usize,
    pub reduced_order: usize,
    pub image_order: usize,
    /// order of the normal closure of the image; differs from `image_order` when the
    /// image is not normal
    pub image_closure_order: usize,
    pub h1_order: usize,
    pub h0_order: usize,
}

/// `H_1` and `H_0` of `G ⊗ A -> A / A'`, `g ⊗ a -> ^g a a^-1`, for `A` the second group.
#[derive(Clone, Debug)]
pub struct Homology {
    pub a_prime: Subgroup,
    pub tensor: TensorResult,
    /// `A / A'`
    pub reduced: FiniteGroup,
    pub f: GroupHom,
    pub h1: FiniteGroup,
    pub h0: FiniteGroup,
    pub report: HomologyReport,
}

pub fn homology(sys: &ActionSystem, limits: EnumLimits) -> Result<Homology> {
    if !check_half_compatibility(sys).regime.is_half_compatible() {
        return Err(Error::precondition(
            "homology needs conjugation self-actions with at least one compatible mutual action",
        ));
    }
    let (g, a) = (sys.g(), sys.h());
    // the failure subgroup on the A side: ^(^a g) a' (^(a g a^-1) a')^-1
    let a_prime = failure_subgroup(&sys.swapped());
    let (reduced, proj) = quotient(a, &a_prime)?;
    let tensor = compute_tensor(sys, TensorSpec::direct(TensorKind::Inassaridze), limits)?;

    let mut gens = Vec::new();
    let mut images = Vec::new();
    for x in g.elements() {
        for y in a.elements() {
            gens.push(tensor.pairing[x][y]);
            images.push(proj.apply(a.mul(sys.sigma_g()[x][y], a.inv(y))));
        }
    }
    let f = extend_hom(&tensor.group, &reduced, &gens, &images)
        .ok_or_else(|| Error::CheckFailed("g ⊗ a -> ^g a a^-1 A' is not a homomorphism".into()))?;

    let (h1, _) = f.kernel(&tensor.group).to_group(&tensor.group)?;
    let image = f.image_subgroup(&reduced);
    let closure = normal_closure(&reduced, image.elements())?;
    let (h0, _) = quotient(&reduced, &closure)?;
    let report = HomologyReport {
        a_prime_order: a_prime.order(),
        tensor_order: tensor.order(),
        reduced_order: reduced.order(),
        image_order: image.order(),
        image_closure_order: closure.order(),
        h1_order: h1.order(),
        h0_order: h0.order(),
    };
    Ok(Homology { a_prime, tensor, reduced, f, h1, h0, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct::*;

    #[test]
    fn trivial_actions() {
        // f is trivial: H1 is the whole tensor, H0 is A
        let sys = ActionSystem::conjugation_trivial(cyclic(2), cyclic(2));
        let h = homology(&sys, EnumLimits::default()).unwrap();
        assert_eq!(h.report.h1_order, 2);
        assert_eq!(h.report.h0_order, 2);
        assert!(h.a_prime.is_trivial());
        let sys = ActionSystem::conjugation_trivial(cyclic(4), cyclic(6));
        let h = homology(&sys, EnumLimits::default()).unwrap();
        assert_eq!((h.report.h1_order, h.report.h0_order), (2, 6));
    }

    #[test]
    fn conjugation_pair() {
        // G = A = S3 acting by conjugation: f is onto the derived subgroup
        let s3 = symmetric3();
        let c = crate::actions::conjugation_action(&s3);
        let sys = ActionSystem::with_conjugation(s3.clone(), s3, c.clone(), c).unwrap();
        let h = homology(&sys, EnumLimits::default()).unwrap();
        assert_eq!(h.report.image_order, 3);
        assert_eq!(h.report.h0_order, 2);
        assert_eq!(h.report.h1_order * 3, h.report.tensor_order);
    }
}
