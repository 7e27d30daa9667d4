use super::enumerate::{todd_coxeter, CosetTable, EnumLimits, EnumStats};
use super::presentation::{Gen, Presentation};
use crate::error::Result;
use crate::group::{subgroup_generated, FiniteGroup, Subgroup};

/// Maps words over a presentation's generators to elements of its enumerated group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordEvaluator {
    /// element for each letter column
    images: Vec<usize>,
}

impl WordEvaluator {
    pub fn letter(&self, x: Gen) -> usize {
        self.images[x.column()]
    }

    pub fn generator(&self, i: usize) -> usize {
        self.images[2 * i]
    }

    pub fn eval(&self, group: &FiniteGroup, word: &[Gen]) -> usize {
        word.iter().fold(0, |acc, &x| group.mul(acc, self.letter(x)))
    }
}

/// A group obtained by enumerating cosets of the trivial subgroup.
#[derive(Clone, Debug)]
pub struct EnumeratedGroup {
    pub group: FiniteGroup,
    pub evaluator: WordEvaluator,
    pub stats: EnumStats,
}

impl EnumeratedGroup {
    pub fn eval(&self, word: &[Gen]) -> usize {
        self.evaluator.eval(&self.group, word)
    }
}

/// Enumerates the group presented by `p` and turns its regular representation into a
/// multiplication table. Element `c` is the coset `c`; the identity is coset 0.
pub fn coset_group(p: &Presentation, limits: EnumLimits) -> Result<EnumeratedGroup> {
    let t = todd_coxeter(p, &[], limits)?;
    Ok(group_from_table(p, &t))
}

fn group_from_table(p: &Presentation, t: &CosetTable) -> EnumeratedGroup {
    let n = t.ncosets();
    let ncols = 2 * t.ngens();
    // spanning tree: parent coset and the letter leading from it
    let mut parent = vec![(usize::MAX, Gen::new(0)); n];
    let mut order = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut k = 0;
    while k < order.len() {
        let c = order[k];
        k += 1;
        for col in 0..ncols {
            let x = Gen::from_column(col);
            let d = t.get(c, x);
            if !seen[d] {
                seen[d] = true;
                parent[d] = (c, x);
                order.push(d);
            }
        }
    }
    // product(c, d) = c traced along the tree word of d
    let mut table = vec![0u32; n * n];
    for c in 0..n {
        let row = c * n;
        table[row] = c as u32;
        for &d in &order[1..] {
            let (pd, x) = parent[d];
            let v = table[row + pd] as usize;
            table[row + d] = t.get(v, x) as u32;
        }
    }
    let labels = (0..n).map(|c| label(p, &parent, c)).collect();
    let group = FiniteGroup::from_flat(n, table, Some(labels))
        .expect("regular representation of a complete coset table is a group");
    let images = (0..ncols).map(|col| t.get(0, Gen::from_column(col))).collect();
    EnumeratedGroup { group, evaluator: WordEvaluator { images }, stats: t.stats() }
}

fn label(p: &Presentation, parent: &[(usize, Gen)], mut c: usize) -> String {
    let mut w = Vec::new();
    while c != 0 {
        let (pc, x) = parent[c];
        w.push(x);
        c = pc;
    }
    if w.is_empty() {
        return "e".into();
    }
    w.reverse();
    p.word_to_string(&w)
}

/// The subgroup generated by the elements the given words evaluate to.
pub fn subgroup_of_coset_group(g: &EnumeratedGroup, words: &[Vec<Gen>]) -> Subgroup {
    let elems: Vec<usize> = words.iter().map(|w| g.eval(w)).collect();
    subgroup_generated(&g.group, &elems).expect("evaluated elements are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::presentation::Word;
    use crate::group::construct::*;
    use crate::group::{fingerprint, is_isomorphic};

    fn w(s: &[i64]) -> Word {
        s.iter().map(|&x| Gen::from_signed(x).unwrap()).collect()
    }

    #[test]
    fn cyclic_four() {
        let p = Presentation::with_default_names(1, vec![w(&[1, 1, 1, 1])]).unwrap();
        let g = coset_group(&p, EnumLimits::default()).unwrap();
        assert!(is_isomorphic(&g.group, &cyclic(4)).unwrap().is_some());
        assert_eq!(g.eval(&w(&[1, 1, 1, 1, 1])), g.eval(&w(&[1])));
        assert_eq!(g.eval(&w(&[1, -1])), 0);
    }

    #[test]
    fn klein_four_presentation() {
        let p = Presentation::with_default_names(2, vec![w(&[1, 1]), w(&[2, 2]), w(&[1, 2, -1, -2])]).unwrap();
        let g = coset_group(&p, EnumLimits::default()).unwrap();
        assert_eq!(fingerprint(&g.group), fingerprint(&klein_four()));
    }

    #[test]
    fn evaluator_is_homomorphism() {
        let p = Presentation::with_default_names(2, vec![w(&[1, 1]), w(&[2, 2]), w(&[1, 2, 1, 2, 1, 2])]).unwrap();
        let g = coset_group(&p, EnumLimits::default()).unwrap();
        let words = [w(&[1]), w(&[2, 1]), w(&[-1, 2, 2, -1]), w(&[1, 2, -1])];
        for u in &words {
            for v in &words {
                let uv: Word = u.iter().chain(v).copied().collect();
                assert_eq!(g.eval(&uv), g.group.mul(g.eval(u), g.eval(v)));
            }
        }
    }

    #[test]
    fn cayley_round_trip() {
        for h in [cyclic(6), klein_four(), symmetric3(), dihedral(4), quaternion8(), alternating4()] {
            let p = Presentation::from_cayley_table(&h);
            let g = coset_group(&p, EnumLimits::default()).unwrap();
            assert!(is_isomorphic(&g.group, &h).unwrap().is_some());
            // generator x_i maps onto element i under an isomorphism
            let iso = crate::group::GroupHom::new(&h, &g.group, (0..h.order()).map(|i| g.evaluator.generator(i)).collect()).unwrap();
            assert!(iso.is_bijective());
        }
    }

    #[test]
    fn subgroup_words() {
        let p = Presentation::with_default_names(2, vec![w(&[1, 1]), w(&[2, 2]), w(&[1, 2, 1, 2, 1, 2])]).unwrap();
        let g = coset_group(&p, EnumLimits::default()).unwrap();
        assert!(subgroup_of_coset_group(&g, &[]).is_trivial());
        assert_eq!(subgroup_of_coset_group(&g, &[w(&[1]), w(&[2])]).order(), 6);
        assert_eq!(subgroup_of_coset_group(&g, &[w(&[1, 2])]).order(), 3);
    }
}
