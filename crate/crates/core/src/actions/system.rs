use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::{check_action, FiniteGroup, GroupHom};

/// `table[x][y]` is the image of `y` under the automorphism by which `x` acts.
pub type ActionTable = Vec<Vec<usize>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    G,
    H,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::G => Side::H,
            Side::H => Side::G,
        }
    }
}

/// An element of `G` or of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Elem {
    pub side: Side,
    pub index: usize,
}

impl Elem {
    pub fn g(index: usize) -> Self {
        Elem { side: Side::G, index }
    }

    pub fn h(index: usize) -> Self {
        Elem { side: Side::H, index }
    }
}

/// A letter of a word in the free product `G * H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub elem: Elem,
    pub inverse: bool,
}

impl Letter {
    pub fn new(elem: Elem) -> Self {
        Letter { elem, inverse: false }
    }

    pub fn inv(elem: Elem) -> Self {
        Letter { elem, inverse: true }
    }
}

/// The word `x y x^-1 y^-1`.
pub fn commutator_word(x: Elem, y: Elem) -> [Letter; 4] {
    [Letter::new(x), Letter::new(y), Letter::inv(x), Letter::inv(y)]
}

/// Two groups with actions of each on itself and on the other.
#[derive(Clone, PartialEq, Eq)]
pub struct ActionSystem {
    g: FiniteGroup,
    h: FiniteGroup,
    rho_g: ActionTable,
    rho_h: ActionTable,
    sigma_g: ActionTable,
    sigma_h: ActionTable,
}

impl fmt::Debug for ActionSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ActionSystem")
            .field("g_order", &self.g.order())
            .field("h_order", &self.h.order())
            .field("rho_g", &self.rho_g)
            .field("rho_h", &self.rho_h)
            .field("sigma_g", &self.sigma_g)
            .field("sigma_h", &self.sigma_h)
            .finish()
    }
}

impl ActionSystem {
    /// Validates that each table is a homomorphism into the automorphisms of its target.
    ///
    /// `rho_g`: G on G, `rho_h`: H on H, `sigma_g`: G on H, `sigma_h`: H on G.
    pub fn new(
        g: FiniteGroup,
        h: FiniteGroup,
        rho_g: ActionTable,
        rho_h: ActionTable,
        sigma_g: ActionTable,
        sigma_h: ActionTable,
    ) -> Result<Self> {
        check_action(&g, &g, &rho_g, "rho_G")?;
        check_action(&h, &h, &rho_h, "rho_H")?;
        check_action(&g, &h, &sigma_g, "sigma_G")?;
        check_action(&h, &g, &sigma_h, "sigma_H")?;
        Ok(ActionSystem { g, h, rho_g, rho_h, sigma_g, sigma_h })
    }

    pub(crate) fn new_unchecked(
        g: FiniteGroup,
        h: FiniteGroup,
        rho_g: ActionTable,
        rho_h: ActionTable,
        sigma_g: ActionTable,
        sigma_h: ActionTable,
    ) -> Self {
        ActionSystem { g, h, rho_g, rho_h, sigma_g, sigma_h }
    }

    /// Both groups act on themselves by conjugation.
    pub fn with_conjugation(
        g: FiniteGroup,
        h: FiniteGroup,
        sigma_g: ActionTable,
        sigma_h: ActionTable,
    ) -> Result<Self> {
        let rho_g = conjugation_action(&g);
        let rho_h = conjugation_action(&h);
        Self::new(g, h, rho_g, rho_h, sigma_g, sigma_h)
    }

    /// Conjugation on themselves, trivial on each other.
    pub fn conjugation_trivial(g: FiniteGroup, h: FiniteGroup) -> Self {
        let sigma_g = trivial_action(&g, &h);
        let sigma_h = trivial_action(&h, &g);
        let rho_g = conjugation_action(&g);
        let rho_h = conjugation_action(&h);
        ActionSystem { g, h, rho_g, rho_h, sigma_g, sigma_h }
    }

    /// `G = H = group`, with all four actions given by the same table.
    pub fn uniform(group: FiniteGroup, table: ActionTable) -> Result<Self> {
        Self::new(group.clone(), group, table.clone(), table.clone(), table.clone(), table)
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn h(&self) -> &FiniteGroup {
        &self.h
    }

    pub fn group(&self, side: Side) -> &FiniteGroup {
        match side {
            Side::G => &self.g,
            Side::H => &self.h,
        }
    }

    pub fn rho_g(&self) -> &ActionTable {
        &self.rho_g
    }

    pub fn rho_h(&self) -> &ActionTable {
        &self.rho_h
    }

    pub fn sigma_g(&self) -> &ActionTable {
        &self.sigma_g
    }

    pub fn sigma_h(&self) -> &ActionTable {
        &self.sigma_h
    }

    /// The table by which `actor` acts on `target`.
    pub fn table(&self, actor: Side, target: Side) -> &ActionTable {
        match (actor, target) {
            (Side::G, Side::G) => &self.rho_g,
            (Side::H, Side::H) => &self.rho_h,
            (Side::G, Side::H) => &self.sigma_g,
            (Side::H, Side::G) => &self.sigma_h,
        }
    }

    pub fn check_elem(&self, x: Elem) -> Result<()> {
        self.group(x.side).check_index(x.index)
    }

    /// `^actor target`.
    pub fn act(&self, actor: Elem, target: Elem) -> Elem {
        Elem {
            side: target.side,
            index: self.table(actor.side, target.side)[actor.index][target.index],
        }
    }

    pub fn try_act(&self, actor: Elem, target: Elem) -> Result<Elem> {
        self.check_elem(actor)?;
        self.check_elem(target)?;
        Ok(self.act(actor, target))
    }

    pub fn inverse(&self, x: Elem) -> Elem {
        Elem { side: x.side, index: self.group(x.side).inv(x.index) }
    }

    /// Action of a word of the free product: `^(w1 w2) x = ^w1 (^w2 x)`.
    pub fn act_word(&self, word: &[Letter], target: Elem) -> Elem {
        word.iter().rev().fold(target, |x, l| {
            let a = if l.inverse { self.inverse(l.elem) } else { l.elem };
            self.act(a, x)
        })
    }

    pub fn is_conjugation_self_action(&self) -> bool {
        is_conjugation(&self.g, &self.rho_g) && is_conjugation(&self.h, &self.rho_h)
    }

    /// The same system with the roles of `G` and `H` exchanged.
    pub fn swapped(&self) -> ActionSystem {
        ActionSystem {
            g: self.h.clone(),
            h: self.g.clone(),
            rho_g: self.rho_h.clone(),
            rho_h: self.rho_g.clone(),
            sigma_g: self.sigma_h.clone(),
            sigma_h: self.sigma_g.clone(),
        }
    }
}

/// `x -> (y -> x y x^-1)`.
pub fn conjugation_action(g: &FiniteGroup) -> ActionTable {
    g.elements()
        .map(|x| g.elements().map(|y| g.conj(x, y)).collect())
        .collect()
}

/// Every element of `actor` acts on `target` as the identity.
pub fn trivial_action(actor: &FiniteGroup, target: &FiniteGroup) -> ActionTable {
    vec![target.elements().collect(); actor.order()]
}

pub fn is_conjugation(g: &FiniteGroup, table: &ActionTable) -> bool {
    g.elements()
        .all(|x| g.elements().all(|y| table[x][y] == g.conj(x, y)))
}

/// Turns a homomorphism into `Aut(target)` (indices into `auts`, as returned by
/// `automorphism_group`) into an action table.
pub fn action_from_hom(hom: &GroupHom, auts: &[GroupHom]) -> ActionTable {
    hom.images().iter().map(|&a| auts[a].images().to_vec()).collect()
}
