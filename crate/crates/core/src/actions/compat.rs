use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::system::{ActionSystem, Elem, Side};
use crate::error::{Error, Result};

/// The individual identities `^(^a b) c = ^a (^b (^(a^-1) c))`, named by the sides of `(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionId {
    Fc1a,
    Fc1b,
    Fc2a,
    Fc2b,
    Fc3a,
    Fc3b,
    Fc4a,
    Fc4b,
    /// `H` acting on `(G acting on H)`: same shape as `Fc1b`.
    E131,
    /// `G` acting on `(H acting on G)`: same shape as `Fc1a`.
    E132,
}

impl ConditionId {
    pub const FULL: [ConditionId; 8] = [
        ConditionId::Fc1a,
        ConditionId::Fc1b,
        ConditionId::Fc2a,
        ConditionId::Fc2b,
        ConditionId::Fc3a,
        ConditionId::Fc3b,
        ConditionId::Fc4a,
        ConditionId::Fc4b,
    ];

    /// Sides of `(a, b, c)`.
    pub fn sides(self) -> [Side; 3] {
        use Side::{G, H};
        match self {
            ConditionId::Fc1a | ConditionId::E132 => [G, H, G],
            ConditionId::Fc1b | ConditionId::E131 => [H, G, H],
            ConditionId::Fc2a => [G, G, G],
            ConditionId::Fc2b => [H, H, H],
            ConditionId::Fc3a => [G, G, H],
            ConditionId::Fc3b => [H, H, G],
            ConditionId::Fc4a => [G, H, H],
            ConditionId::Fc4b => [H, G, G],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConditionId::Fc1a => "fc1a",
            ConditionId::Fc1b => "fc1b",
            ConditionId::Fc2a => "fc2a",
            ConditionId::Fc2b => "fc2b",
            ConditionId::Fc3a => "fc3a",
            ConditionId::Fc3b => "fc3b",
            ConditionId::Fc4a => "fc4a",
            ConditionId::Fc4b => "fc4b",
            ConditionId::E131 => "e131",
            ConditionId::E132 => "e132",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Regime {
    #[serde(rename = "fully_compatible")]
    FullyCompatible,
    #[serde(rename = "compatible")]
    Compatible,
    /// Conjugation self-actions, `G` acts compatibly on `H` but not conversely.
    #[serde(rename = "half_compatible_131")]
    HalfCompatibleGOnH,
    /// Conjugation self-actions, `H` acts compatibly on `G` but not conversely.
    #[serde(rename = "half_compatible_132")]
    HalfCompatibleHOnG,
    #[serde(rename = "none")]
    None,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::FullyCompatible => "fully_compatible",
            Regime::Compatible => "compatible",
            Regime::HalfCompatibleGOnH => "half_compatible_131",
            Regime::HalfCompatibleHOnG => "half_compatible_132",
            Regime::None => "none",
        }
    }

    /// Conjugation self-actions with at least one of the two mutual identities.
    pub fn is_half_compatible(self) -> bool {
        !matches!(self, Regime::None)
    }
}

/// A failing tuple `(a, b, c)` together with both sides of the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub condition: ConditionId,
    pub tuple: [Elem; 3],
    pub lhs: Elem,
    pub rhs: Elem,
}

impl Witness {
    /// Re-evaluates both sides on `sys`.
    pub fn replay(&self, sys: &ActionSystem) -> (Elem, Elem) {
        let [a, b, c] = self.tuple;
        evaluate(sys, a, b, c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatReport {
    pub regime: Regime,
    pub per_condition: BTreeMap<ConditionId, bool>,
    pub witnesses: BTreeMap<ConditionId, Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl CompatReport {
    pub fn passed(&self, id: ConditionId) -> Option<bool> {
        self.per_condition.get(&id).copied()
    }

    /// The witness of the first failing condition in id order.
    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.values().next()
    }
}

/// Both sides of `^(^a b) c = ^a (^b (^(a^-1) c))`.
pub fn evaluate(sys: &ActionSystem, a: Elem, b: Elem, c: Elem) -> (Elem, Elem) {
    let lhs = sys.act(sys.act(a, b), c);
    let rhs = sys.act(a, sys.act(b, sys.act(sys.inverse(a), c)));
    (lhs, rhs)
}

fn distinct(t: &[Elem; 3]) -> usize {
    let [x, y, z] = t.map(|e| e.index);
    1 + usize::from(y != x) + usize::from(z != x && z != y)
}

/// Exhaustively checks one condition. Among failing tuples the witness has the fewest
/// distinct element indices, ties broken lexicographically.
pub fn check_condition(sys: &ActionSystem, id: ConditionId) -> Option<Witness> {
    let [sa, sb, sc] = id.sides();
    let (na, nb, nc) = (sys.group(sa).order(), sys.group(sb).order(), sys.group(sc).order());
    let mut best: Option<(usize, Witness)> = None;
    for i in 0..na {
        let a = Elem { side: sa, index: i };
        for j in 0..nb {
            let b = Elem { side: sb, index: j };
            for k in 0..nc {
                let c = Elem { side: sc, index: k };
                let (lhs, rhs) = evaluate(sys, a, b, c);
                if lhs == rhs {
                    continue;
                }
                let tuple = [a, b, c];
                let d = distinct(&tuple);
                if best.as_ref().map_or(true, |(bd, _)| d < *bd) {
                    best = Some((d, Witness { condition: id, tuple, lhs, rhs }));
                    if d == 1 {
                        return best.map(|(_, w)| w);
                    }
                }
            }
        }
    }
    best.map(|(_, w)| w)
}

/// Whether a condition holds, stopping at the first failing tuple.
pub fn condition_holds(sys: &ActionSystem, id: ConditionId) -> bool {
    let [sa, sb, sc] = id.sides();
    let (na, nb, nc) = (sys.group(sa).order(), sys.group(sb).order(), sys.group(sc).order());
    (0..na).all(|i| {
        let a = Elem { side: sa, index: i };
        (0..nb).all(|j| {
            let b = Elem { side: sb, index: j };
            (0..nc).all(|k| {
                let (lhs, rhs) = evaluate(sys, a, b, Elem { side: sc, index: k });
                lhs == rhs
            })
        })
    })
}

fn run(sys: &ActionSystem, ids: &[ConditionId]) -> (BTreeMap<ConditionId, bool>, BTreeMap<ConditionId, Witness>) {
    let mut per = BTreeMap::new();
    let mut wit = BTreeMap::new();
    for &id in ids {
        match check_condition(sys, id) {
            None => {
                per.insert(id, true);
            }
            Some(w) => {
                per.insert(id, false);
                wit.insert(id, w);
            }
        }
    }
    (per, wit)
}

const SELF_ACTION_DIAGNOSTIC: &str = "self-action not conjugation";

/// All eight conditions; regime is `FullyCompatible` or `None`.
pub fn check_full_compatibility(sys: &ActionSystem) -> CompatReport {
    let (per, witnesses) = run(sys, &ConditionId::FULL);
    let regime = if witnesses.is_empty() { Regime::FullyCompatible } else { Regime::None };
    CompatReport { regime, per_condition: per, witnesses, diagnostic: None }
}

fn mutual(sys: &ActionSystem) -> CompatReport {
    let conj = sys.is_conjugation_self_action();
    let (per, witnesses) = run(sys, &[ConditionId::E131, ConditionId::E132]);
    CompatReport {
        regime: Regime::None,
        per_condition: per,
        witnesses,
        diagnostic: (!conj).then(|| SELF_ACTION_DIAGNOSTIC.to_string()),
    }
}

/// Conjugation self-actions and both mutual identities; regime is `Compatible` or `None`.
pub fn check_compatibility(sys: &ActionSystem) -> CompatReport {
    let mut r = mutual(sys);
    if r.diagnostic.is_none() && r.witnesses.is_empty() {
        r.regime = Regime::Compatible;
    }
    r
}

/// Conjugation self-actions and at least one mutual identity. The regime names which
/// one holds, or is `Compatible` when both do.
pub fn check_half_compatibility(sys: &ActionSystem) -> CompatReport {
    let mut r = mutual(sys);
    if r.diagnostic.is_none() {
        r.regime = half_regime(r.per_condition[&ConditionId::E131], r.per_condition[&ConditionId::E132]);
    }
    r
}

fn half_regime(e131: bool, e132: bool) -> Regime {
    match (e131, e132) {
        (true, true) => Regime::Compatible,
        (true, false) => Regime::HalfCompatibleGOnH,
        (false, true) => Regime::HalfCompatibleHOnG,
        (false, false) => Regime::None,
    }
}

/// The strongest regime that holds, with every condition evaluated.
pub fn classify(sys: &ActionSystem) -> CompatReport {
    let mut ids = ConditionId::FULL.to_vec();
    ids.extend([ConditionId::E131, ConditionId::E132]);
    let (per, witnesses) = run(sys, &ids);
    let conj = sys.is_conjugation_self_action();
    let full = ConditionId::FULL.iter().all(|id| per[id]);
    let regime = if full {
        Regime::FullyCompatible
    } else if conj {
        half_regime(per[&ConditionId::E131], per[&ConditionId::E132])
    } else {
        Regime::None
    };
    CompatReport {
        regime,
        per_condition: per,
        witnesses,
        diagnostic: (!conj).then(|| SELF_ACTION_DIAGNOSTIC.to_string()),
    }
}

/// The two identities that hold for any mutual actions once both self-actions are
/// conjugation. Returns a witness if they fail, which indicates broken action plumbing.
pub fn verify_fact(sys: &ActionSystem) -> Result<Option<Witness>> {
    if !sys.is_conjugation_self_action() {
        return Err(Error::input("verify_fact requires conjugation self-actions"));
    }
    Ok(check_condition(sys, ConditionId::Fc4a).or_else(|| check_condition(sys, ConditionId::Fc4b)))
}
