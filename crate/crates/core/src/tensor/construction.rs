use serde::{Deserialize, Serialize};

use super::compute::{compute_tensor, TensorActions, TensorKind, TensorResult, TensorSpec};
use super::presentations::{box_tensor_presentation, eta_presentation_reduced, EtaLayout};
use crate::actions::{check_full_compatibility, ActionSystem, Elem, Regime, Side};
use crate::error::{Error, Result};
use crate::fp::{invert_word, todd_coxeter, CosetTable, EnumLimits, Gen, Word};
use crate::group::{check_action, is_isomorphic, semidirect_product, FiniteGroup};

/// Outcome of comparing the free-product quotient with the box tensor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeProductReport {
    pub g_order: usize,
    pub h_order: usize,
    pub box_order: usize,
    pub eta_order: usize,
    pub commutator_order: usize,
    /// `|eta| = |G ⊠ H| |G| |H|`
    pub order_identity: bool,
    /// `g ⊠ h -> [g, h]` is an isomorphism onto the commutator subgroup
    pub commutator_isomorphic: bool,
    /// `g -> (1,1,g)`, `h -> (1,h,1)` is an isomorphism onto `((G ⊠ H) x| H) x| G`
    pub reconstruction_isomorphic: bool,
    /// set when both groups are small enough for the generic isomorphism search
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commutator_isomorphic_by_search: Option<bool>,
    pub mismatches: Vec<String>,
}

impl FreeProductReport {
    pub fn passed(&self) -> bool {
        self.order_identity && self.commutator_isomorphic && self.reconstruction_isomorphic
            && self.commutator_isomorphic_by_search != Some(false)
    }
}

/// `((G ⊠ H) x| H) x| G` where `H` acts on the tensor by `^h(g ⊠ h') = ^h g ⊠ ^h h'` and
/// `G` acts on the inner product by `^g(b, h) = (^g b (g ⊠ h), h)`.
///
/// Element `((b, h), g)` has index `(b |H| + h) |G| + g`.
pub fn semidirect_reconstruction(sys: &ActionSystem, t: &TensorResult, acts: &TensorActions) -> Result<FiniteGroup> {
    let (g, h) = (sys.g(), sys.h());
    let inner = semidirect_product(&t.group, h, &acts.by_h)?;
    let outer_act = outer_action(sys, t, acts, &inner);
    semidirect_product(&inner, g, &outer_act)
        .map_err(|e| Error::CheckFailed(format!("the action of G on (G ⊠ H) x| H is not valid: {e}")))
}

/// Cross-checks the direct box tensor against the free-product quotient:
/// the order identity, the commutator subgroup, and the iterated semidirect product.
///
/// Isomorphisms are exhibited by explicit maps on generators and checked against the
/// defining relators, working on the coset table of the quotient instead of its Cayley
/// table, so the check is not bounded by the generic isomorphism search.
pub fn verify_free_product_construction(sys: &ActionSystem, limits: EnumLimits) -> Result<FreeProductReport> {
    if check_full_compatibility(sys).regime != Regime::FullyCompatible {
        return Err(Error::precondition("the free-product construction needs fully compatible actions"));
    }
    let t = compute_tensor(sys, TensorSpec::direct(TensorKind::Box), limits)?;
    let (g, h) = (sys.g(), sys.h());
    let (ng, nh) = (g.order(), h.order());
    let lay = EtaLayout::new(sys);
    let eta_p = eta_presentation_reduced(sys);
    let eta = todd_coxeter(&eta_p, &[], limits)?;
    let eta_order = eta.ncosets();
    let mut mismatches = Vec::new();

    let order_identity = eta_order == t.order() * ng * nh;
    if !order_identity {
        mismatches.push(format!("|eta| = {eta_order} but |G ⊠ H| |G| |H| = {}", t.order() * ng * nh));
    }

    // Cosets of the trivial subgroup are the elements; right multiplication by a word is tracing it.
    let words: Vec<Word> = (0..ng * nh).map(|p| lay.commutator(Elem::g(p / nh), Elem::h(p % nh))).collect();
    let pair_word = |x: Gen| if x.is_inverse() { invert_word(&words[x.index()]) } else { words[x.index()].clone() };
    let (tau_elems, tau_paths) = closure(&eta, &words);
    let commutator_order = tau_elems.len();

    // g ⊠ h -> [g, h] respects the box relators, and is onto by construction
    let box_p = box_tensor_presentation(sys);
    let psi_defined = box_p
        .relators()
        .iter()
        .all(|r| r.iter().fold(0, |c, &x| eta.trace(c, &pair_word(x))) == 0);
    if !psi_defined {
        mismatches.push("g ⊠ h -> [g,h] does not respect the box relations".into());
    } else if commutator_order != t.order() {
        mismatches.push(format!(
            "g ⊠ h -> [g,h] maps onto {commutator_order} elements, not a bijection from {}",
            t.order()
        ));
    }
    let commutator_isomorphic = psi_defined && commutator_order == t.order();
    let commutator_isomorphic_by_search = if commutator_order <= SEARCH_ORDER_LIMIT && t.order() <= SEARCH_ORDER_LIMIT {
        let tau = path_group(&eta, &tau_elems, &tau_paths, &words)?;
        Some(is_isomorphic(&t.group, &tau)?.is_some())
    } else {
        None
    };

    // ((G ⊠ H) x| H) x| G, multiplied by formula; element ((b, y), x) is the pair (b |H| + y, x)
    let acts = TensorActions::new(sys, &t)?;
    let inner = semidirect_product(&t.group, h, &acts.by_h)
        .map_err(|e| Error::CheckFailed(format!("the action of H on G ⊠ H is not valid: {e}")))?;
    let outer = outer_action(sys, &t, &acts, &inner);
    check_action(g, &inner, &outer, "G on (G ⊠ H) x| H")
        .map_err(|e| Error::CheckFailed(format!("the action of G on (G ⊠ H) x| H is not valid: {e}")))?;
    let mul = |(p1, x1): (usize, usize), (p2, x2): (usize, usize)| (inner.mul(p1, outer[x1][p2]), g.mul(x1, x2));
    let image = |x: Gen| {
        let e = lay.element(x.index());
        match (e.side, x.is_inverse()) {
            (Side::G, false) => (0, e.index),
            (Side::G, true) => (0, g.inv(e.index)),
            (Side::H, false) => (e.index, 0),
            (Side::H, true) => (h.inv(e.index), 0),
        }
    };
    let eval = |w: &[Gen]| w.iter().fold((0, 0), |acc, &x| mul(acc, image(x)));
    let beta_defined = eta_p.relators().iter().all(|r| eval(r) == (0, 0));
    if !beta_defined {
        mismatches.push("g -> (1,1,g), h -> (1,h,1) does not respect the relators of eta".into());
    }
    // [g,h] -> (g ⊠ h, 1, 1); these and the images of G and H generate the whole product,
    // so beta is onto, and bijective once the orders agree
    let mut commutators_land = true;
    for p in 0..ng * nh {
        let (x, y) = (p / nh, p % nh);
        if eval(&words[p]) != (t.pairing[x][y] * nh, 0) {
            commutators_land = false;
            mismatches.push(format!("[{x},{y}] does not map to the pair ({x},{y})"));
        }
    }
    let reconstruction_isomorphic = beta_defined && commutators_land && eta_order == inner.order() * ng;

    Ok(FreeProductReport {
        g_order: ng,
        h_order: nh,
        box_order: t.order(),
        eta_order,
        commutator_order,
        order_identity,
        commutator_isomorphic,
        reconstruction_isomorphic,
        commutator_isomorphic_by_search,
        mismatches,
    })
}

/// Largest order for which the report also runs the generic isomorphism search.
const SEARCH_ORDER_LIMIT: usize = 64;

fn outer_action(sys: &ActionSystem, t: &TensorResult, acts: &TensorActions, inner: &FiniteGroup) -> Vec<Vec<usize>> {
    let nh = sys.h().order();
    sys.g()
        .elements()
        .map(|x| {
            (0..inner.order())
                .map(|bh| {
                    let (b, y) = (bh / nh, bh % nh);
                    t.group.mul(acts.by_g[x][b], t.pairing[x][y]) * nh + y
                })
                .collect()
        })
        .collect()
}

/// Breadth-first closure of coset 0 under right multiplication by `gens`. Returns the
/// cosets reached, in order, and for each the generator index used to reach it with
/// its predecessor's position.
fn closure(table: &CosetTable, gens: &[Word]) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut pos = vec![usize::MAX; table.ncosets()];
    pos[0] = 0;
    let mut elems = vec![0];
    let mut paths = vec![(0, 0)];
    let mut i = 0;
    while i < elems.len() {
        for (k, w) in gens.iter().enumerate() {
            let c = table.trace(elems[i], w);
            if pos[c] == usize::MAX {
                pos[c] = elems.len();
                elems.push(c);
                paths.push((i, k));
            }
        }
        i += 1;
    }
    (elems, paths)
}

/// The subgroup found by [`closure`] as a group in its own right.
fn path_group(table: &CosetTable, elems: &[usize], paths: &[(usize, usize)], gens: &[Word]) -> Result<FiniteGroup> {
    let n = elems.len();
    let mut word: Vec<Word> = vec![Vec::new(); n];
    for i in 1..n {
        let (prev, k) = paths[i];
        let mut w = word[prev].clone();
        w.extend_from_slice(&gens[k]);
        word[i] = w;
    }
    let mut pos = vec![usize::MAX; table.ncosets()];
    for (i, &c) in elems.iter().enumerate() {
        pos[c] = i;
    }
    let mut flat = Vec::with_capacity(n * n);
    for &a in elems {
        for w in &word {
            flat.push(pos[table.trace(a, w)] as u32);
        }
    }
    FiniteGroup::from_flat(n, flat, None)
}
