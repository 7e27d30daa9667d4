use serde::{Deserialize, Serialize};

use super::presentations::{box_tensor_presentation, eta_presentation, inassaridze_presentation, pair_gen, EtaLayout};
use crate::actions::{check_compatibility, check_full_compatibility, commutator_word, ActionSystem, Elem, Regime};
use crate::error::{Error, Result};
use crate::fp::{coset_group, EnumLimits, EnumeratedGroup};
use crate::group::{extend_hom, fingerprint, FiniteGroup, GroupFile, GroupHom, IsoFingerprint, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TensorKind {
    Box,
    BrownLoday,
    Inassaridze,
}

impl TensorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TensorKind::Box => "box",
            TensorKind::BrownLoday => "brown_loday",
            TensorKind::Inassaridze => "inassaridze",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Direct,
    ViaEta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorSpec {
    pub kind: TensorKind,
    pub route: Route,
}

impl TensorSpec {
    pub fn direct(kind: TensorKind) -> Self {
        TensorSpec { kind, route: Route::Direct }
    }

    /// Checks the kind and route against the regime of `sys`.
    pub fn validate(&self, sys: &ActionSystem) -> Result<()> {
        match self.kind {
            TensorKind::Box => {}
            TensorKind::BrownLoday => {
                let r = check_compatibility(sys);
                if r.regime != Regime::Compatible {
                    return Err(Error::precondition(format!(
                        "the Brown-Loday product needs compatible actions ({})",
                        r.diagnostic.as_deref().unwrap_or("a mutual compatibility identity fails")
                    )));
                }
            }
            TensorKind::Inassaridze => {
                if !sys.is_conjugation_self_action() {
                    return Err(Error::precondition(
                        "the Inassaridze product needs both groups acting on themselves by conjugation",
                    ));
                }
            }
        }
        if self.route == Route::ViaEta {
            if self.kind == TensorKind::Inassaridze {
                return Err(Error::precondition("the free-product route only applies to box and Brown-Loday products"));
            }
            if check_full_compatibility(sys).regime != Regime::FullyCompatible {
                return Err(Error::precondition(
                    "the free-product route identifies the commutator subgroup with the box tensor only \
                     for fully compatible actions",
                ));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorStats {
    pub peak_cosets: usize,
    pub defined_cosets: usize,
    pub final_order: usize,
}

/// A computed tensor product with its pairing `(g, h) -> g ⊠ h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorResult {
    pub kind: TensorKind,
    pub route: Route,
    pub group: FiniteGroup,
    /// `pairing[g][h]` is the element `g ⊠ h`.
    pub pairing: Vec<Vec<usize>>,
    pub stats: TensorStats,
}

impl TensorResult {
    pub fn pair(&self, g: usize, h: usize) -> usize {
        self.pairing[g][h]
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// The pairing images, pair-major; they generate the group.
    pub fn pair_elements(&self) -> Vec<usize> {
        self.pairing.iter().flatten().copied().collect()
    }
}

fn stats_of(e: &EnumeratedGroup, order: usize) -> TensorStats {
    TensorStats { peak_cosets: e.stats.high_water, defined_cosets: e.stats.defined, final_order: order }
}

pub fn compute_tensor(sys: &ActionSystem, spec: TensorSpec, limits: EnumLimits) -> Result<TensorResult> {
    spec.validate(sys)?;
    let result = match spec.route {
        Route::Direct => {
            let p = match spec.kind {
                TensorKind::Box | TensorKind::BrownLoday => box_tensor_presentation(sys),
                TensorKind::Inassaridze => inassaridze_presentation(sys)?,
            };
            let e = coset_group(&p, limits)?;
            let pairing = sys
                .g()
                .elements()
                .map(|g| sys.h().elements().map(|h| e.evaluator.generator(pair_gen(sys, g, h))).collect())
                .collect();
            let stats = stats_of(&e, e.group.order());
            TensorResult { kind: spec.kind, route: spec.route, group: e.group, pairing, stats }
        }
        Route::ViaEta => {
            let eta = eta_group(sys, limits)?;
            let tau = commutator_subgroup(sys, &eta);
            let (group, _) = tau.sub.to_group(&eta.group)?;
            let pairing = tau
                .commutators
                .iter()
                .map(|row| row.iter().map(|&c| tau.sub.elements().binary_search(&c).expect("member")).collect())
                .collect();
            let stats = stats_of(&eta, group.order());
            TensorResult { kind: spec.kind, route: spec.route, group, pairing, stats }
        }
    };
    check_relations(sys, &result)?;
    Ok(result)
}

pub fn eta_group(sys: &ActionSystem, limits: EnumLimits) -> Result<EnumeratedGroup> {
    coset_group(&eta_presentation(sys), limits)
}

/// The image of `[G, H]` in an enumerated free-product quotient.
pub struct CommutatorSubgroup {
    pub sub: Subgroup,
    /// `commutators[g][h]` is the element `[g, h]` of the enumerated group.
    pub commutators: Vec<Vec<usize>>,
}

pub fn commutator_subgroup(sys: &ActionSystem, eta: &EnumeratedGroup) -> CommutatorSubgroup {
    let lay = EtaLayout::new(sys);
    let commutators: Vec<Vec<usize>> = sys
        .g()
        .elements()
        .map(|g| sys.h().elements().map(|h| eta.eval(&lay.commutator(Elem::g(g), Elem::h(h)))).collect())
        .collect();
    let gens: Vec<usize> = commutators.iter().flatten().copied().collect();
    let sub = crate::group::subgroup_generated(&eta.group, &gens).expect("in range");
    CommutatorSubgroup { sub, commutators }
}

/// Exhaustively re-checks the defining relations of the result's kind under its pairing.
pub fn check_relations(sys: &ActionSystem, t: &TensorResult) -> Result<()> {
    let (g, h, m) = (sys.g(), sys.h(), &t.group);
    let p = |x: usize, y: usize| t.pairing[x][y];
    let fail = |what: &str, tuple: String| Err(Error::CheckFailed(format!("{what} fails at {tuple}")));
    if t.pairing.len() != g.order() || t.pairing.iter().any(|r| r.len() != h.order()) {
        return Err(Error::input("pairing has the wrong shape"));
    }
    for x in g.elements() {
        for x2 in g.elements() {
            for y in h.elements() {
                let lhs = p(g.mul(x, x2), y);
                let rhs = m.mul(p(sys.rho_g()[x][x2], sys.sigma_g()[x][y]), p(x, y));
                if lhs != rhs {
                    return fail("gg' ⊠ h = (^g g' ⊠ ^g h)(g ⊠ h)", format!("({x},{x2},{y})"));
                }
            }
        }
    }
    for x in g.elements() {
        for y in h.elements() {
            for y2 in h.elements() {
                let lhs = p(x, h.mul(y, y2));
                let rhs = m.mul(p(x, y), p(sys.sigma_h()[y][x], sys.rho_h()[y][y2]));
                if lhs != rhs {
                    return fail("g ⊠ hh' = (g ⊠ h)(^h g ⊠ ^h h')", format!("({x},{y},{y2})"));
                }
            }
        }
    }
    if t.kind == TensorKind::Inassaridze {
        for x in g.elements() {
            for y in h.elements() {
                let c = commutator_word(Elem::g(x), Elem::h(y));
                let txy = p(x, y);
                for x2 in g.elements() {
                    let cx2 = sys.act_word(&c, Elem::g(x2)).index;
                    for y2 in h.elements() {
                        let cy2 = sys.act_word(&c, Elem::h(y2)).index;
                        if m.conj(txy, p(x2, y2)) != p(cx2, cy2) {
                            return fail("conjugation relation", format!("({x},{y},{x2},{y2})"));
                        }
                    }
                }
            }
        }
    }
    if g.elements().any(|x| p(x, 0) != 0) || h.elements().any(|y| p(0, y) != 0) {
        return Err(Error::CheckFailed("a pair involving the identity is not trivial".into()));
    }
    let gens = t.pair_elements();
    if crate::group::subgroup_generated(m, &gens)?.order() != m.order() {
        return Err(Error::CheckFailed("pairing images do not generate the group".into()));
    }
    Ok(())
}

/// The automorphism of the tensor group induced by `x`, namely `g ⊠ h -> ^x g ⊠ ^x h`,
/// or `None` when that assignment is not a well-defined homomorphism.
pub fn induced_automorphism(sys: &ActionSystem, t: &TensorResult, x: Elem) -> Option<GroupHom> {
    let gens = t.pair_elements();
    let mut images = Vec::with_capacity(gens.len());
    for g in sys.g().elements() {
        for h in sys.h().elements() {
            images.push(t.pairing[sys.act(x, Elem::g(g)).index][sys.act(x, Elem::h(h)).index]);
        }
    }
    extend_hom(&t.group, &t.group, &gens, &images).filter(|a| a.is_bijective())
}

/// The actions of `G` and of `H` on the tensor group, as tables.
#[derive(Clone, Debug)]
pub struct TensorActions {
    pub by_g: Vec<Vec<usize>>,
    pub by_h: Vec<Vec<usize>>,
}

impl TensorActions {
    pub fn new(sys: &ActionSystem, t: &TensorResult) -> Result<Self> {
        let build = |side_elems: Vec<Elem>| -> Result<Vec<Vec<usize>>> {
            side_elems
                .into_iter()
                .map(|x| {
                    induced_automorphism(sys, t, x).map(|a| a.images().to_vec()).ok_or_else(|| {
                        Error::CheckFailed(format!("the action of {x:?} on the tensor product is not well defined"))
                    })
                })
                .collect()
        };
        Ok(TensorActions {
            by_g: build(sys.g().elements().map(Elem::g).collect())?,
            by_h: build(sys.h().elements().map(Elem::h).collect())?,
        })
    }

    pub fn act(&self, x: Elem, a: usize) -> usize {
        match x.side {
            crate::actions::Side::G => self.by_g[x.index][a],
            crate::actions::Side::H => self.by_h[x.index][a],
        }
    }
}

/// On-disk form of a [`TensorResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorFile {
    pub kind: TensorKind,
    pub route: Route,
    #[serde(flatten)]
    pub group: GroupFile,
    pub pairing: Vec<Vec<usize>>,
    pub stats: TensorStats,
    pub fingerprint: IsoFingerprint,
}

impl TensorResult {
    pub fn to_file(&self) -> TensorFile {
        TensorFile {
            kind: self.kind,
            route: self.route,
            group: GroupFile::from_group(&self.group),
            pairing: self.pairing.clone(),
            stats: self.stats,
            fingerprint: fingerprint(&self.group),
        }
    }

    /// Rebuilds a result from its file form, revalidating the group and the recorded fingerprint.
    pub fn from_file(file: TensorFile) -> Result<Self> {
        let group = file.group.into_group()?;
        if fingerprint(&group) != file.fingerprint {
            return Err(Error::input("`fingerprint` does not match the stored table"));
        }
        for &x in file.pairing.iter().flatten() {
            group.check_index(x)?;
        }
        Ok(TensorResult { kind: file.kind, route: file.route, group, pairing: file.pairing, stats: file.stats })
    }
}
