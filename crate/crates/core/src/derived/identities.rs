use serde::{Deserialize, Serialize};

use super::subgroups::{derivative, deviational, g_center, require_fully_compatible};
use crate::actions::{commutator_word, ActionSystem, Elem, Side};
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::tensor::{TensorActions, TensorResult};

/// One identity family checked over every tuple of its index set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCheck {
    pub name: String,
    pub tuples: usize,
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Vec<usize>>,
    /// For families quantified over a witness in the deviational subgroup: one witness
    /// that works for every tuple, when there is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uniform_witness: Option<usize>,
    /// Some tuple needed a witness other than the identity.
    #[serde(default)]
    pub nontrivial_witness: bool,
}

impl FamilyCheck {
    fn new(name: &str) -> Self {
        FamilyCheck {
            name: name.to_string(),
            tuples: 0,
            failures: 0,
            first_failure: None,
            uniform_witness: None,
            nontrivial_witness: false,
        }
    }

    fn record(&mut self, tuple: &[usize], ok: bool) {
        self.tuples += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(tuple.to_vec());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub families: Vec<FamilyCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyCheck::passed)
    }

    pub fn family(&self, name: &str) -> Option<&FamilyCheck> {
        self.families.iter().find(|f| f.name == name)
    }
}

struct Ctx<'a> {
    sys: &'a ActionSystem,
    t: &'a TensorResult,
    acts: TensorActions,
}

impl Ctx<'_> {
    fn g(&self) -> &FiniteGroup {
        self.sys.g()
    }
    fn h(&self) -> &FiniteGroup {
        self.sys.h()
    }
    fn m(&self) -> &FiniteGroup {
        &self.t.group
    }
    fn p(&self, x: usize, y: usize) -> usize {
        self.t.pairing[x][y]
    }
    fn ag(&self, x: usize, a: usize) -> usize {
        self.acts.by_g[x][a]
    }
    fn ah(&self, y: usize, a: usize) -> usize {
        self.acts.by_h[y][a]
    }
    fn mul(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |acc, &x| self.m().mul(acc, x))
    }
    /// `x ^y(x^-1)` in `G`.
    fn dg(&self, x: usize, y: usize) -> usize {
        self.g().mul(x, self.sys.sigma_h()[y][self.g().inv(x)])
    }
    /// `^x(y) y^-1` in `H`.
    fn dh(&self, x: usize, y: usize) -> usize {
        self.h().mul(self.sys.sigma_g()[x][y], self.h().inv(y))
    }
}

/// Runs an existence family: `holds(tuple, w)` over candidate witnesses `cands`
/// (identity first), recording per-tuple existence and a uniform witness.
fn existence(
    name: &str,
    tuples: impl Iterator<Item = Vec<usize>>,
    cands: &[usize],
    mut holds: impl FnMut(&[usize], usize) -> bool,
) -> FamilyCheck {
    let mut f = FamilyCheck::new(name);
    let mut uniform = vec![true; cands.len()];
    for tup in tuples {
        let mask: Vec<bool> = cands.iter().map(|&w| holds(&tup, w)).collect();
        let first = mask.iter().position(|&b| b);
        f.record(&tup, first.is_some());
        if first.is_some_and(|i| cands[i] != 0) {
            f.nontrivial_witness = true;
        }
        for (u, m) in uniform.iter_mut().zip(&mask) {
            *u &= m;
        }
    }
    f.uniform_witness = uniform.iter().position(|&b| b).map(|i| cands[i]);
    f
}

fn tuples(sizes: &[usize]) -> impl Iterator<Item = Vec<usize>> {
    let total: usize = sizes.iter().product();
    let sizes = sizes.to_vec();
    (0..total).map(move |mut k| {
        let mut t = vec![0; sizes.len()];
        for (i, &s) in sizes.iter().enumerate().rev() {
            t[i] = k % s;
            k /= s;
        }
        t
    })
}

/// The inversion, commutator-conjugation and four derivative identities of the box tensor.
/// Families quantified over a deviational witness report whether one witness serves all tuples.
pub fn verify_tensor_identities(sys: &ActionSystem, t: &TensorResult) -> Result<IdentityReport> {
    require_fully_compatible(sys, "the tensor identities")?;
    let c = Ctx { sys, t, acts: TensorActions::new(sys, t)? };
    let (g, h, m) = (c.g(), c.h(), c.m());
    let (ng, nh) = (g.order(), h.order());
    let dev_h = deviational(sys, Side::H).elements().to_vec();
    let dev_g = deviational(sys, Side::G).elements().to_vec();
    let mut families = Vec::new();

    // ^g(g^-1 ⊠ h) = (g ⊠ h)^-1 = ^h(g ⊠ h^-1)
    let mut f = FamilyCheck::new("inversion");
    for tup in tuples(&[ng, nh]) {
        let (x, y) = (tup[0], tup[1]);
        let inv = m.inv(c.p(x, y));
        f.record(&tup, c.ag(x, c.p(g.inv(x), y)) == inv && c.ah(y, c.p(x, h.inv(y))) == inv);
    }
    families.push(f);

    // (g ⊠ h)(g' ⊠ h')(g ⊠ h)^-1 = ^[g,h]g' ⊠ ^[g,h]h'
    let mut f = FamilyCheck::new("commutator_conjugation");
    for tup in tuples(&[ng, nh, ng, nh]) {
        let (x, y, x2, y2) = (tup[0], tup[1], tup[2], tup[3]);
        let w = commutator_word(Elem::g(x), Elem::h(y));
        let gx = sys.act_word(&w, Elem::g(x2)).index;
        let hy = sys.act_word(&w, Elem::h(y2)).index;
        f.record(&tup, m.conj(c.p(x, y), c.p(x2, y2)) == c.p(gx, hy));
    }
    families.push(f);

    // (g ^h g^-1) ⊠ h' = ^{gh}(g^-1 ⊠ v) (g ⊠ h) (^{h'}(g ⊠ h))^-1
    families.push(existence("derivative_left", tuples(&[ng, nh, nh]), &dev_h, |tp, v| {
        let (x, y, y2) = (tp[0], tp[1], tp[2]);
        let lhs = c.p(c.dg(x, y), y2);
        let rhs = c.mul(&[c.ag(x, c.ah(y, c.p(g.inv(x), v))), c.p(x, y), m.inv(c.ah(y2, c.p(x, y)))]);
        lhs == rhs
    }));

    // g' ⊠ (^g h h^-1) = ^{g'g}(w ⊠ h) ^{g'}(g ⊠ h) (g ⊠ h)^-1
    families.push(existence("derivative_right", tuples(&[ng, nh, ng]), &dev_g, |tp, w| {
        let (x, y, x2) = (tp[0], tp[1], tp[2]);
        let lhs = c.p(x2, c.dh(x, y));
        let rhs = c.mul(&[c.ag(g.mul(x2, x), c.p(w, y)), c.ag(x2, c.p(x, y)), m.inv(c.p(x, y))]);
        lhs == rhs
    }));

    // (g ^h g^-1) ⊠ (^{g'}h' h'^-1) = ^{gh}(g^-1 ⊠ v) [g ⊠ h, g' ⊠ h']
    families.push(existence("commutator_left", tuples(&[ng, nh, ng, nh]), &dev_h, |tp, v| {
        let (x, y, x2, y2) = (tp[0], tp[1], tp[2], tp[3]);
        let lhs = c.p(c.dg(x, y), c.dh(x2, y2));
        let rhs = m.mul(c.ag(x, c.ah(y, c.p(g.inv(x), v))), m.commutator(c.p(x, y), c.p(x2, y2)));
        lhs == rhs
    }));

    // (g ^h g^-1) ⊠ (^{g'}h' h'^-1) = ^{g ^h g^-1 g'}(w ⊠ h') [g ⊠ h, g' ⊠ h'],
    // the right derivative identity at (g', h', g ^h g^-1); with h in place of h' it fails
    families.push(existence("commutator_right", tuples(&[ng, nh, ng, nh]), &dev_g, |tp, w| {
        let (x, y, x2, y2) = (tp[0], tp[1], tp[2], tp[3]);
        let lhs = c.p(c.dg(x, y), c.dh(x2, y2));
        let actor = g.mul(c.dg(x, y), x2);
        let rhs = m.mul(c.ag(actor, c.p(w, y2)), m.commutator(c.p(x, y), c.p(x2, y2)));
        lhs == rhs
    }));

    Ok(IdentityReport { families })
}

/// Power expansions, closure of the generating set under conjugation, and the order
/// bounds coming from the derivative and the center.
pub fn verify_expansion_identities(sys: &ActionSystem, t: &TensorResult) -> Result<IdentityReport> {
    require_fully_compatible(sys, "the expansion identities")?;
    let c = Ctx { sys, t, acts: TensorActions::new(sys, t)? };
    let (g, h, m) = (c.g(), c.h(), c.m());
    let (ng, nh) = (g.order(), h.order());
    let mut families = Vec::new();

    // g^k ⊠ h = prod_{i=1..k} ^{g^{k-i}}(g ⊠ h)
    let mut f = FamilyCheck::new("expansion_left");
    for tup in tuples(&[ng, nh, g.exponent()]) {
        let (x, y, k) = (tup[0], tup[1], tup[2] + 1);
        let rhs = (1..=k).fold(0, |acc, i| m.mul(acc, c.ag(g.pow(x, k - i), c.p(x, y))));
        f.record(&tup, c.p(g.pow(x, k), y) == rhs);
    }
    families.push(f);

    // g ⊠ h^k = prod_{i=1..k} ^{h^{i-1}}(g ⊠ h)
    let mut f = FamilyCheck::new("expansion_right");
    for tup in tuples(&[ng, nh, h.exponent()]) {
        let (x, y, k) = (tup[0], tup[1], tup[2] + 1);
        let rhs = (1..=k).fold(0, |acc, i| m.mul(acc, c.ah(h.pow(y, i - 1), c.p(x, y))));
        f.record(&tup, c.p(x, h.pow(y, k)) == rhs);
    }
    families.push(f);

    // (u ⊠ v)(g ⊠ h)(u ⊠ v)^-1 = ^{u ^v u^-1}g ⊠ ^{^u v v^-1}h
    let mut f = FamilyCheck::new("normal_generating_set");
    for tup in tuples(&[ng, nh, ng, nh]) {
        let (u, v, x, y) = (tup[0], tup[1], tup[2], tup[3]);
        let gx = sys.rho_g()[c.dg(u, v)][x];
        let hy = sys.rho_h()[c.dh(u, v)][y];
        f.record(&tup, m.conj(c.p(u, v), c.p(x, y)) == c.p(gx, hy));
    }
    families.push(f);

    // s in D_H(G): prod_{i=1..k} ^{s^{k-i}}(s ⊠ h) = 1 with k the order of s
    let mut f = FamilyCheck::new("derivative_orders");
    for &s in derivative(sys, Side::G).elements() {
        let k = g.element_order(s);
        for y in h.elements() {
            let prod = (1..=k).fold(0, |acc, i| m.mul(acc, c.ag(g.pow(s, k - i), c.p(s, y))));
            f.record(&[s, y], prod == 0);
        }
    }
    families.push(f);

    // h in F_G(H): (g ⊠ h)^{|h|} = 1
    let mut f = FamilyCheck::new("center_orders");
    for &y in g_center(sys, Side::H).elements() {
        for x in g.elements() {
            f.record(&[x, y], m.pow(c.p(x, y), h.element_order(y)) == 0);
        }
    }
    families.push(f);

    Ok(IdentityReport { families })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::klein_four_system;
    use crate::fp::EnumLimits;
    use crate::group::construct::*;
    use crate::tensor::{compute_tensor, TensorKind, TensorSpec};

    fn box_of(sys: &ActionSystem) -> TensorResult {
        compute_tensor(sys, TensorSpec::direct(TensorKind::Box), EnumLimits::default()).unwrap()
    }

    #[test]
    fn tuple_order() {
        let all: Vec<_> = tuples(&[2, 3]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[3], vec![1, 0]);
    }

    #[test]
    fn klein_four_needs_a_witness() {
        let sys = klein_four_system(3);
        let t = box_of(&sys);
        let r = verify_tensor_identities(&sys, &t).unwrap();
        assert!(r.passed(), "{r:?}");
        let r2 = verify_expansion_identities(&sys, &t).unwrap();
        assert!(r2.passed(), "{r2:?}");
    }

    #[test]
    fn conjugation_systems() {
        for (g, h) in [(symmetric3(), symmetric3()), (dihedral(4), cyclic(2)), (cyclic(4), klein_four())] {
            let sys = ActionSystem::conjugation_trivial(g, h);
            let t = box_of(&sys);
            let r = verify_tensor_identities(&sys, &t).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(r.families.iter().all(|f| !f.nontrivial_witness));
            assert!(verify_expansion_identities(&sys, &t).unwrap().passed());
        }
        let s3 = symmetric3();
        let sys = ActionSystem::with_conjugation(
            s3.clone(),
            s3.clone(),
            crate::actions::conjugation_action(&s3),
            crate::actions::conjugation_action(&s3),
        )
        .unwrap();
        let t = box_of(&sys);
        assert!(verify_tensor_identities(&sys, &t).unwrap().passed());
        let e = verify_expansion_identities(&sys, &t).unwrap();
        assert!(e.passed());
        assert_eq!(e.family("derivative_orders").unwrap().tuples, 18);
    }

    #[test]
    fn commutator_right_needs_the_second_pair() {
        // trivial self-actions; on each other, odd permutations act as conjugation by (23)
        let s3 = symmetric3();
        let id: Vec<usize> = s3.elements().collect();
        let sign: Vec<usize> = s3.elements().map(|x| s3.conj(3, x)).collect();
        let odd = |x: usize| s3.element_order(x) == 2;
        let table: Vec<Vec<usize>> = s3.elements().map(|x| if odd(x) { sign.clone() } else { id.clone() }).collect();
        let triv = vec![id.clone(); 6];
        let sys = ActionSystem::new(s3.clone(), s3.clone(), triv.clone(), triv, table.clone(), table).unwrap();
        let t = box_of(&sys);
        assert!(verify_tensor_identities(&sys, &t).unwrap().passed());
        let c = Ctx { sys: &sys, t: &t, acts: TensorActions::new(&sys, &t).unwrap() };
        let dev = deviational(&sys, Side::G).elements().to_vec();
        let literal = existence("literal", tuples(&[6, 6, 6, 6]), &dev, |tp, w| {
            let (x, y, x2, y2) = (tp[0], tp[1], tp[2], tp[3]);
            let actor = s3.mul(c.dg(x, y), x2);
            c.p(c.dg(x, y), c.dh(x2, y2))
                == c.m().mul(c.ag(actor, c.p(w, y)), c.m().commutator(c.p(x, y), c.p(x2, y2)))
        });
        assert!(!literal.passed());
    }
}
