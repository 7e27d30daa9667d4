use super::finite::{close_under, FiniteGroup};
use super::hom::GroupHom;
use crate::error::{Error, Result};

/// A subgroup of some parent [`FiniteGroup`], stored as a sorted list of member indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<usize>,
    member: Vec<bool>,
    is_normal: bool,
}

impl Subgroup {
    fn from_membership(group: &FiniteGroup, member: Vec<bool>) -> Self {
        let elements: Vec<usize> = (0..member.len()).filter(|&x| member[x]).collect();
        let mut sub = Subgroup {
            elements,
            member,
            is_normal: false,
        };
        sub.is_normal = sub.compute_normal(group);
        sub
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        let mut member = vec![false; group.order()];
        member[0] = true;
        Subgroup {
            elements: vec![0],
            member,
            is_normal: true,
        }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup {
            elements: group.elements().collect(),
            member: vec![true; group.order()],
            is_normal: true,
        }
    }

    /// Validates that `elements` form a subgroup of `group`.
    pub fn from_elements(group: &FiniteGroup, elements: &[usize]) -> Result<Self> {
        let mut member = vec![false; group.order()];
        for &x in elements {
            group.check_index(x)?;
            member[x] = true;
        }
        if !member[0] {
            return Err(Error::input("subgroup must contain the identity"));
        }
        let listed: Vec<usize> = (0..group.order()).filter(|&x| member[x]).collect();
        for &a in &listed {
            if !member[group.inv(a)] {
                return Err(Error::input(format!("subset not closed under inverse at {a}")));
            }
            for &b in &listed {
                if !member[group.mul(a, b)] {
                    return Err(Error::input(format!("subset not closed under product at ({a},{b})")));
                }
            }
        }
        Ok(Self::from_membership(group, member))
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member.get(x).copied().unwrap_or(false)
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    fn compute_normal(&self, group: &FiniteGroup) -> bool {
        let gens = group.generating_set();
        gens.iter()
            .all(|&x| self.elements.iter().all(|&s| self.member[group.conj(x, s)]))
    }

    /// The subgroup as a group in its own right, with the inclusion map.
    /// Members keep their relative order, so the identity stays at index 0.
    pub fn to_group(&self, group: &FiniteGroup) -> Result<(FiniteGroup, GroupHom)> {
        let n = self.elements.len();
        let mut pos = vec![u32::MAX; group.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            pos[x] = i as u32;
        }
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.elements {
            for &b in &self.elements {
                table.push(pos[group.mul(a, b)]);
            }
        }
        let labels = self.elements.iter().map(|&x| group.label(x).to_string()).collect();
        let sub = FiniteGroup::from_flat(n, table, Some(labels))?;
        let inclusion = GroupHom::new(&sub, group, self.elements.clone())?;
        Ok((sub, inclusion))
    }
}

/// The smallest subgroup containing `gens`. Elements are listed in ascending index order.
pub fn subgroup_generated(group: &FiniteGroup, gens: &[usize]) -> Result<Subgroup> {
    for &g in gens {
        group.check_index(g)?;
    }
    let mut member = vec![false; group.order()];
    member[0] = true;
    close_under(group, gens, &mut member);
    Ok(Subgroup::from_membership(group, member))
}

/// The smallest normal subgroup containing `gens`.
pub fn normal_closure(group: &FiniteGroup, gens: &[usize]) -> Result<Subgroup> {
    for &g in gens {
        group.check_index(g)?;
    }
    let mut conjugates = vec![false; group.order()];
    for &g in gens {
        for x in group.elements() {
            conjugates[group.conj(x, g)] = true;
        }
    }
    let all: Vec<usize> = (0..group.order()).filter(|&x| conjugates[x]).collect();
    let sub = subgroup_generated(group, &all)?;
    debug_assert!(sub.is_normal());
    Ok(sub)
}

/// `[G, G]`
pub fn derived_subgroup(group: &FiniteGroup) -> Subgroup {
    let mut comms = vec![false; group.order()];
    for a in group.elements() {
        for b in group.elements() {
            comms[group.commutator(a, b)] = true;
        }
    }
    let gens: Vec<usize> = (0..group.order()).filter(|&x| comms[x]).collect();
    subgroup_generated(group, &gens).expect("indices in range")
}

pub fn center(group: &FiniteGroup) -> Subgroup {
    let gens = group.generating_set();
    let elems: Vec<usize> = group
        .elements()
        .filter(|&z| gens.iter().all(|&g| group.mul(z, g) == group.mul(g, z)))
        .collect();
    Subgroup::from_elements(group, &elems).expect("center is a subgroup")
}

/// Whether the subgroup, viewed as a group, is cyclic.
pub fn is_cyclic_subgroup(group: &FiniteGroup, sub: &Subgroup) -> bool {
    sub.elements()
        .iter()
        .any(|&x| group.element_order(x) == sub.order())
}
