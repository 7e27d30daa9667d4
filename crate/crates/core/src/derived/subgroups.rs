use serde::{Deserialize, Serialize};

use crate::actions::{check_full_compatibility, ActionSystem, Elem, Regime, Side};
use crate::error::{Error, Result};
use crate::group::{is_cyclic_subgroup, normal_closure, quotient, subgroup_generated, Subgroup};
use crate::tensor::TensorResult;

pub(crate) fn require_fully_compatible(sys: &ActionSystem, what: &str) -> Result<()> {
    if check_full_compatibility(sys).regime != Regime::FullyCompatible {
        return Err(Error::precondition(format!("{what} needs fully compatible actions")));
    }
    Ok(())
}

fn elem(side: Side, index: usize) -> Elem {
    Elem { side, index }
}

/// Elements of the `side` group acting trivially on both groups: `F_H(G)` for side `G`,
/// `F_G(H)` for side `H`.
pub fn g_center(sys: &ActionSystem, side: Side) -> Subgroup {
    let grp = sys.group(side);
    let elems: Vec<usize> = grp
        .elements()
        .filter(|&x| {
            [Side::G, Side::H].iter().all(|&t| {
                sys.group(t)
                    .elements()
                    .all(|a| sys.act(elem(side, x), elem(t, a)).index == a)
            })
        })
        .collect();
    Subgroup::from_elements(grp, &elems).expect("intersection of two kernels")
}

/// `D_H(G) = < g ^h(g^-1) >` for side `G`, and symmetrically for side `H`.
/// Normality is computed, not assumed.
pub fn derivative(sys: &ActionSystem, side: Side) -> Subgroup {
    let grp = sys.group(side);
    let other = sys.group(side.other());
    let mut gens = Vec::new();
    for x in grp.elements() {
        for y in other.elements() {
            let moved = sys.act(elem(side.other(), y), elem(side, grp.inv(x))).index;
            gens.push(grp.mul(x, moved));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    subgroup_generated(grp, &gens).expect("indices in range")
}

/// Normal closure of `{ ^x(x') x x'^-1 x^-1 }` in the `side` group: trivial exactly
/// when the self-action is conjugation.
pub fn deviational(sys: &ActionSystem, side: Side) -> Subgroup {
    let grp = sys.group(side);
    let mut gens = Vec::new();
    for x in grp.elements() {
        for y in grp.elements() {
            let moved = sys.act(elem(side, x), elem(side, y)).index;
            gens.push(grp.mul(moved, grp.conj(x, grp.inv(y))));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    normal_closure(grp, &gens).expect("indices in range")
}

/// For one side: the deviational subgroup sits inside the G-center, and every
/// `^x x'` differs from `x x' x^-1` by an element of it on either side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeviationSide {
    pub side: Side,
    pub deviational_order: usize,
    pub center_order: usize,
    pub contained_in_center: bool,
    /// `(x, x', v, w)` with `^x x' = v (x x' x^-1) = (x x' x^-1) w`, for every pair.
    pub witnesses: Vec<[usize; 4]>,
    /// pairs whose `v` or `w` falls outside the deviational subgroup
    pub failures: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeviationReport {
    pub sides: Vec<DeviationSide>,
}

impl DeviationReport {
    pub fn passed(&self) -> bool {
        self.sides.iter().all(|s| s.contained_in_center && s.failures.is_empty())
    }
}

/// Checks both sides. `v` and `w` are determined by the pair, so the search over the
/// deviational subgroup reduces to a membership test.
pub fn verify_deviation_bounds(sys: &ActionSystem) -> Result<DeviationReport> {
    require_fully_compatible(sys, "the deviation bounds")?;
    let mut sides = Vec::new();
    for side in [Side::G, Side::H] {
        let grp = sys.group(side);
        let dev = deviational(sys, side);
        let center = g_center(sys, side);
        let mut witnesses = Vec::new();
        let mut failures = Vec::new();
        for x in grp.elements() {
            for y in grp.elements() {
                let moved = sys.act(elem(side, x), elem(side, y)).index;
                let conj = grp.conj(x, y);
                let v = grp.mul(moved, grp.inv(conj));
                let w = grp.mul(grp.inv(conj), moved);
                if dev.contains(v) && dev.contains(w) {
                    witnesses.push([x, y, v, w]);
                } else {
                    failures.push([x, y]);
                }
            }
        }
        sides.push(DeviationSide {
            side,
            deviational_order: dev.order(),
            center_order: center.order(),
            contained_in_center: dev.is_subset_of(&center),
            witnesses,
            failures,
        });
    }
    Ok(DeviationReport { sides })
}

/// Whether the image of `D_H(G)` in `G / D_rho(G)` is cyclic, and if so whether the
/// box tensor is abelian as it must be.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicDerivativeReport {
    pub derivative_order: usize,
    pub deviational_order: usize,
    pub reduced_order: usize,
    pub reduced_cyclic: bool,
    pub tensor_abelian: bool,
}

impl CyclicDerivativeReport {
    /// False only for a cyclic reduced derivative with a nonabelian tensor.
    pub fn holds(&self) -> bool {
        !self.reduced_cyclic || self.tensor_abelian
    }
}

pub fn check_cyclic_derivative_abelian(sys: &ActionSystem, t: &TensorResult) -> Result<CyclicDerivativeReport> {
    require_fully_compatible(sys, "the cyclic-derivative criterion")?;
    let g = sys.g();
    let d = derivative(sys, Side::G);
    let dev = deviational(sys, Side::G);
    let (q, proj) = quotient(g, &dev)?;
    let image: Vec<usize> = d.elements().iter().map(|&x| proj.apply(x)).collect();
    let reduced = subgroup_generated(&q, &image)?;
    Ok(CyclicDerivativeReport {
        derivative_order: d.order(),
        deviational_order: dev.order(),
        reduced_order: reduced.order(),
        reduced_cyclic: is_cyclic_subgroup(&q, &reduced),
        tensor_abelian: t.group.is_abelian(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::{conjugation_action, trivial_action};
    use crate::catalog::klein_four_system;
    use crate::group::construct::*;
    use crate::group::{center, derived_subgroup};

    const A: usize = 1;
    const B: usize = 2;
    const AB: usize = 3;

    #[test]
    fn centers() {
        let s3 = symmetric3();
        let t = ActionSystem::new(
            s3.clone(),
            s3.clone(),
            trivial_action(&s3, &s3),
            trivial_action(&s3, &s3),
            trivial_action(&s3, &s3),
            trivial_action(&s3, &s3),
        )
        .unwrap();
        assert_eq!(g_center(&t, Side::G).order(), 6);
        let d4 = dihedral(4);
        let sys = ActionSystem::conjugation_trivial(d4.clone(), cyclic(3));
        assert_eq!(g_center(&sys, Side::G), center(&d4));
        assert_eq!(g_center(&klein_four_system(AB), Side::G).elements(), &[0, AB]);
    }

    #[test]
    fn derivatives() {
        let s3 = symmetric3();
        let c = conjugation_action(&s3);
        let sys = ActionSystem::new(s3.clone(), s3.clone(), c.clone(), c.clone(), c.clone(), c).unwrap();
        let d = derivative(&sys, Side::G);
        assert_eq!(d, derived_subgroup(&s3));
        assert!(d.is_normal());
        assert!(derivative(&ActionSystem::conjugation_trivial(s3, cyclic(2)), Side::G).is_trivial());
        // a ^a(a^-1) = a ab = b
        assert_eq!(derivative(&klein_four_system(B), Side::G).elements(), &[0, B]);
    }

    #[test]
    fn deviationals() {
        for g in [symmetric3(), dihedral(4), cyclic(5)] {
            let sys = ActionSystem::conjugation_trivial(g.clone(), g);
            assert!(deviational(&sys, Side::G).is_trivial());
        }
        assert_eq!(deviational(&klein_four_system(B), Side::G).elements(), &[0, B]);
        assert_eq!(deviational(&klein_four_system(AB), Side::G).elements(), &[0, AB]);
        assert_eq!(deviational(&klein_four_system(A), Side::H).elements(), &[0, A]);
    }

    #[test]
    fn deviation_bounds() {
        let r = verify_deviation_bounds(&klein_four_system(AB)).unwrap();
        assert!(r.passed());
        assert!(r.sides[0].witnesses.iter().any(|w| w[3] == AB));
        let r = verify_deviation_bounds(&ActionSystem::conjugation_trivial(symmetric3(), cyclic(4))).unwrap();
        assert!(r.passed());
        assert!(r.sides.iter().all(|s| s.witnesses.iter().all(|w| w[2] == 0 && w[3] == 0)));
        assert!(verify_deviation_bounds(&klein_four_system(B)).is_err());
    }
}
