use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
///
/// Elements are the indices `0..order`; index 0 is the identity. The table is
/// stored row-major, so `mul(i, j)` is the index of `x_i * x_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from a square table of 0-based indices and validates every group axiom.
    pub fn from_table(table: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::input("`table` must be non-empty"));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::input(format!(
                    "`table` row {i} has length {} but `order` is {order}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= order {
                    return Err(Error::input(format!("`table` row {i} contains index {x} >= {order}")));
                }
                flat.push(x as u32);
            }
        }
        Self::from_flat(order, flat, labels)
    }

    /// Builds a group from a row-major table, validating the Latin-square property,
    /// the identity at index 0 and associativity.
    pub fn from_flat(order: usize, table: Vec<u32>, labels: Option<Vec<String>>) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::input("`table` must be a non-empty square matrix"));
        }
        if order > u32::MAX as usize / 2 {
            return Err(Error::Capability {
                what: "group order",
                limit: u32::MAX as usize / 2,
                got: order,
            });
        }
        let labels = match labels {
            Some(l) if l.len() != order => {
                return Err(Error::input(format!(
                    "`labels` has {} entries but `order` is {order}",
                    l.len()
                )))
            }
            Some(l) => l,
            None => default_labels(order),
        };
        for i in 0..order {
            if table[i] as usize != i || table[i * order] as usize != i {
                return Err(Error::input(format!(
                    "`table`: index 0 is not a two-sided identity (fails at element {i})"
                )));
            }
        }
        let mut seen = vec![usize::MAX; order];
        for i in 0..order {
            for j in 0..order {
                let x = table[i * order + j] as usize;
                if x >= order {
                    return Err(Error::input(format!("`table` entry ({i},{j}) = {x} out of range")));
                }
                if seen[x] == i {
                    return Err(Error::input(format!("`table` row {i} repeats element {x}")));
                }
                seen[x] = i;
            }
        }
        seen.fill(usize::MAX);
        for j in 0..order {
            for i in 0..order {
                let x = table[i * order + j] as usize;
                if seen[x] == j {
                    return Err(Error::input(format!("`table` column {j} repeats element {x}")));
                }
                seen[x] = j;
            }
        }
        let mut inverse = vec![0u32; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            // Latin square: exactly one entry of each row is the identity.
            let j = row.iter().position(|&x| x == 0).expect("latin row");
            inverse[i] = j as u32;
        }
        let group = FiniteGroup {
            order,
            table,
            inverse,
            labels,
        };
        group.check_associative()?;
        Ok(group)
    }

    /// Light's test: the set of elements `y` with `(xy)z = x(yz)` for all `x, z` is closed
    /// under multiplication, so it is enough to check `y` over a set whose right-product
    /// closure is the whole table. This is exhaustive at `O(n^2 |S|)`.
    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let mut reached = vec![false; n];
        let mut count = 0usize;
        let mut gens: Vec<usize> = Vec::new();
        for cand in 0..n {
            if reached[cand] {
                continue;
            }
            gens.push(cand);
            let mut queue: VecDeque<usize> = VecDeque::new();
            for x in 0..n {
                if reached[x] {
                    queue.push_back(x);
                }
            }
            if !reached[cand] {
                reached[cand] = true;
                count += 1;
                queue.push_back(cand);
            }
            while let Some(x) = queue.pop_front() {
                for &s in &gens {
                    let y = self.mul(x, s);
                    if !reached[y] {
                        reached[y] = true;
                        count += 1;
                        queue.push_back(y);
                    }
                }
            }
            if count == n {
                break;
            }
        }
        for &y in &gens {
            for x in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(Error::input(format!(
                            "`table` is not associative: ({x}*{y})*{z} != {x}*({y}*{z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            table: vec![0],
            inverse: vec![0],
            labels: vec!["e".to_string()],
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `x y x^-1`
    #[inline]
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.inv(x))
    }

    /// `a b a^-1 b^-1`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::input("`labels` length does not match `order`"));
        }
        self.labels = labels;
        Ok(self)
    }

    /// The table as nested rows, for serialization.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn check_index(&self, x: usize) -> Result<()> {
        if x >= self.order {
            Err(Error::input(format!(
                "element index {x} out of range for group of order {}",
                self.order
            )))
        } else {
            Ok(())
        }
    }

    /// A generating set chosen greedily: elements of large order first, each one kept
    /// only if it is not already in the subgroup generated so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut cands: Vec<usize> = (1..self.order).collect();
        let orders: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        cands.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut size = 1;
        let mut gens = Vec::new();
        for c in cands {
            if size == self.order {
                break;
            }
            if member[c] {
                continue;
            }
            gens.push(c);
            size = close_under(self, &gens, &mut member);
        }
        gens
    }

    /// Word over the given generators for every element reachable from them, by
    /// breadth-first search on right multiplication. Entries are `None` outside `<gens>`.
    pub fn spanning_words(&self, gens: &[usize]) -> Vec<Option<Vec<usize>>> {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.order];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (k, &s) in gens.iter().enumerate() {
                let y = self.mul(x, s);
                if words[y].is_none() {
                    let mut w = words[x].clone().expect("visited");
                    w.push(k);
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        words
    }
}

/// Extends `member` to the closure of itself under right multiplication by `gens`
/// and returns the new size.
pub(crate) fn close_under(g: &FiniteGroup, gens: &[usize], member: &mut [bool]) -> usize {
    let mut queue: VecDeque<usize> = (0..g.order()).filter(|&x| member[x]).collect();
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !member[y] {
                member[y] = true;
                queue.push_back(y);
            }
        }
    }
    member.iter().filter(|&&m| m).count()
}

pub(crate) fn default_labels(order: usize) -> Vec<String> {
    (0..order)
        .map(|i| if i == 0 { "e".to_string() } else { format!("x{i}") })
        .collect()
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct::{cyclic, dihedral, klein_four, symmetric3};

    #[test]
    fn rejects_non_latin_table() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(FiniteGroup::from_table(&t, None), Err(Error::Input(_))));
    }

    #[test]
    fn rejects_misplaced_identity() {
        let t = vec![vec![1, 0], vec![0, 1]];
        assert!(FiniteGroup::from_table(&t, None).is_err());
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // A loop of order 5 with identity 0 that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(&t, None).unwrap_err();
        assert!(err.to_string().contains("associative"), "{err}");
    }

    #[test]
    fn inverses_and_orders() {
        let s3 = symmetric3();
        for x in s3.elements() {
            assert_eq!(s3.mul(x, s3.inv(x)), 0);
        }
        let hist: Vec<usize> = s3.elements().map(|x| s3.element_order(x)).collect();
        assert_eq!(hist.iter().filter(|&&o| o == 2).count(), 3);
        assert_eq!(hist.iter().filter(|&&o| o == 3).count(), 2);
        assert_eq!(cyclic(12).exponent(), 12);
        assert_eq!(klein_four().exponent(), 2);
    }

    #[test]
    fn generating_sets_generate() {
        for g in [cyclic(6), klein_four(), symmetric3(), dihedral(4)] {
            let gens = g.generating_set();
            let words = g.spanning_words(&gens);
            assert!(words.iter().all(|w| w.is_some()));
        }
        assert_eq!(cyclic(7).generating_set().len(), 1);
        assert_eq!(klein_four().generating_set().len(), 2);
    }
}
