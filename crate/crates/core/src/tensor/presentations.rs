use crate::actions::{commutator_word, ActionSystem, Elem, Side};
use crate::error::{Error, Result};
use crate::fp::{free_reduce, Gen, Presentation, Word};

/// Generator index of `t_{g,h}` in the box and Inassaridze presentations (pair-major).
pub fn pair_gen(sys: &ActionSystem, g: usize, h: usize) -> usize {
    g * sys.h().order() + h
}

fn pair_names(sys: &ActionSystem, symbol: &str) -> Vec<String> {
    let (g, h) = (sys.g(), sys.h());
    let mut names = Vec::with_capacity(g.order() * h.order());
    for x in g.elements() {
        for y in h.elements() {
            names.push(format!("{}{symbol}{}", g.label(x), h.label(y)));
        }
    }
    names
}

/// The two expansion relator families, in lexicographic tuple order:
/// `t(gg',h)^-1 t(^g g', ^g h) t(g,h)` over `(g, g', h)`, then
/// `t(g,hh')^-1 t(g,h) t(^h g, ^h h')` over `(g, h, h')`.
fn expansion_relators(sys: &ActionSystem) -> Vec<Word> {
    let (g, h) = (sys.g(), sys.h());
    let (rho_g, rho_h, sigma_g, sigma_h) = (sys.rho_g(), sys.rho_h(), sys.sigma_g(), sys.sigma_h());
    let t = |x: usize, y: usize| pair_gen(sys, x, y);
    let mut rels = Vec::with_capacity(g.order() * h.order() * (g.order() + h.order()));
    for x in g.elements() {
        for x2 in g.elements() {
            for y in h.elements() {
                rels.push(vec![
                    Gen::inv(t(g.mul(x, x2), y)),
                    Gen::new(t(rho_g[x][x2], sigma_g[x][y])),
                    Gen::new(t(x, y)),
                ]);
            }
        }
    }
    for x in g.elements() {
        for y in h.elements() {
            for y2 in h.elements() {
                rels.push(vec![
                    Gen::inv(t(x, h.mul(y, y2))),
                    Gen::new(t(x, y)),
                    Gen::new(t(sigma_h[y][x], rho_h[y][y2])),
                ]);
            }
        }
    }
    rels
}

/// Box-tensor presentation: one generator per pair, `|G|^2|H| + |G||H|^2` relators.
/// Built for any action system.
pub fn box_tensor_presentation(sys: &ActionSystem) -> Presentation {
    Presentation::new(pair_names(sys, "⊠"), expansion_relators(sys)).expect("indices in range")
}

/// Inassaridze presentation: the two expansion families followed by the conjugation
/// family `t(g,h) t(g',h') t(g,h)^-1 t(^[g,h] g', ^[g,h] h')^-1` over `(g, h, g', h')`,
/// where `[g,h] = g h g^-1 h^-1` acts as a word of the free product.
pub fn inassaridze_presentation(sys: &ActionSystem) -> Result<Presentation> {
    if !sys.is_conjugation_self_action() {
        return Err(Error::precondition(
            "the Inassaridze tensor product needs both groups acting on themselves by conjugation",
        ));
    }
    let (g, h) = (sys.g(), sys.h());
    let mut rels = expansion_relators(sys);
    rels.reserve(g.order() * g.order() * h.order() * h.order());
    for x in g.elements() {
        for y in h.elements() {
            let c = commutator_word(Elem::g(x), Elem::h(y));
            let txy = pair_gen(sys, x, y);
            for x2 in g.elements() {
                let cx2 = sys.act_word(&c, Elem::g(x2)).index;
                for y2 in h.elements() {
                    let cy2 = sys.act_word(&c, Elem::h(y2)).index;
                    rels.push(vec![
                        Gen::new(txy),
                        Gen::new(pair_gen(sys, x2, y2)),
                        Gen::inv(txy),
                        Gen::inv(pair_gen(sys, cx2, cy2)),
                    ]);
                }
            }
        }
    }
    Presentation::new(pair_names(sys, "⊗"), rels)
}

/// Generator layout of the free-product presentation: nonidentity elements of `G`,
/// then nonidentity elements of `H`.
#[derive(Clone, Copy, Debug)]
pub struct EtaLayout {
    g_order: usize,
    h_order: usize,
}

impl EtaLayout {
    pub fn new(sys: &ActionSystem) -> Self {
        EtaLayout { g_order: sys.g().order(), h_order: sys.h().order() }
    }

    pub fn ngens(&self) -> usize {
        self.g_order + self.h_order - 2
    }

    /// The one-letter word of an element (empty for the identity).
    pub fn word(&self, e: Elem) -> Word {
        self.letter(e).into_iter().collect()
    }

    pub fn letter(&self, e: Elem) -> Option<Gen> {
        if e.index == 0 {
            return None;
        }
        Some(Gen::new(match e.side {
            Side::G => e.index - 1,
            Side::H => self.g_order - 1 + e.index - 1,
        }))
    }

    /// The element a generator stands for.
    pub fn element(&self, gen: usize) -> Elem {
        if gen < self.g_order - 1 {
            Elem::g(gen + 1)
        } else {
            Elem::h(gen - (self.g_order - 1) + 1)
        }
    }

    /// `x y x^-1 y^-1` as a word.
    pub fn commutator(&self, x: Elem, y: Elem) -> Word {
        let (a, b) = (self.letter(x), self.letter(y));
        let w: Word = [a, b, a.map(Gen::inverse), b.map(Gen::inverse)].into_iter().flatten().collect();
        free_reduce(&w)
    }
}

/// `(G * H) / R`: Cayley relators of `G` and of `H`, then
/// `x [g,h] x^-1 [^x g, ^x h]^-1` for `x` in `G \ 1` then `H \ 1`, `g in G \ 1`, `h in H \ 1`.
pub fn eta_presentation(sys: &ActionSystem) -> Presentation {
    let (g, h) = (sys.g(), sys.h());
    let actors = (1..g.order()).map(Elem::g).chain((1..h.order()).map(Elem::h));
    eta_with_actors(sys, actors)
}

/// The same group as [`eta_presentation`], with `x` restricted to generating sets of `G`
/// and `H`. Conjugating by `x y` is conjugating by `y` then by `x`, and the actions are
/// homomorphisms, so the remaining relators lie in the normal closure of these.
pub fn eta_presentation_reduced(sys: &ActionSystem) -> Presentation {
    let (g, h) = (sys.g(), sys.h());
    let actors = g
        .generating_set()
        .into_iter()
        .map(Elem::g)
        .chain(h.generating_set().into_iter().map(Elem::h));
    eta_with_actors(sys, actors)
}

fn eta_with_actors(sys: &ActionSystem, actors: impl Iterator<Item = Elem>) -> Presentation {
    let lay = EtaLayout::new(sys);
    let (g, h) = (sys.g(), sys.h());
    let mut names = Vec::with_capacity(lay.ngens());
    names.extend((1..g.order()).map(|x| format!("G:{}", g.label(x))));
    names.extend((1..h.order()).map(|y| format!("H:{}", h.label(y))));
    let mut rels = Vec::new();
    for side in [Side::G, Side::H] {
        let grp = sys.group(side);
        for a in 1..grp.order() {
            for b in 1..grp.order() {
                let e = |i| Elem { side, index: i };
                let mut w = lay.word(e(a));
                w.extend(lay.word(e(b)));
                w.extend(lay.letter(e(grp.mul(a, b))).map(Gen::inverse));
                rels.push(w);
            }
        }
    }
    for x in actors {
        let Some(xl) = lay.letter(x) else { continue };
        for a in 1..g.order() {
            for b in 1..h.order() {
                let mut w = vec![xl];
                w.extend(lay.commutator(Elem::g(a), Elem::h(b)));
                w.push(xl.inverse());
                let c = lay.commutator(sys.act(x, Elem::g(a)), sys.act(x, Elem::h(b)));
                w.extend(c.iter().rev().map(|l| l.inverse()));
                rels.push(w);
            }
        }
    }
    Presentation::new(names, rels).expect("indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct::*;
    use crate::group::FiniteGroup;

    #[test]
    fn counts() {
        let v = klein_four();
        let sys = ActionSystem::conjugation_trivial(v.clone(), v);
        let p = box_tensor_presentation(&sys);
        assert_eq!(p.ngens(), 16);
        assert_eq!(p.relators().len(), 128);
        let p = inassaridze_presentation(&sys).unwrap();
        assert_eq!(p.relators().len(), 128 + 256);
        let p = eta_presentation(&sys);
        assert_eq!(p.ngens(), 6);
        assert_eq!(p.relators().len(), 9 + 9 + 6 * 9);
    }

    #[test]
    fn trivial_groups() {
        let t = FiniteGroup::trivial();
        let sys = ActionSystem::conjugation_trivial(t.clone(), t);
        let p = box_tensor_presentation(&sys);
        assert_eq!(p.ngens(), 1);
        assert!(p.relators().iter().all(|r| r.is_empty() || r.len() == 1));
    }

    #[test]
    fn eta_layout_round_trip() {
        let sys = ActionSystem::conjugation_trivial(symmetric3(), cyclic(4));
        let lay = EtaLayout::new(&sys);
        for i in 0..lay.ngens() {
            assert_eq!(lay.letter(lay.element(i)), Some(Gen::new(i)));
        }
        assert!(lay.word(Elem::h(0)).is_empty());
        assert!(lay.commutator(Elem::g(0), Elem::h(2)).is_empty());
    }
}
