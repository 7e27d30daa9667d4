//! Small named groups built from explicit constructions.

use std::collections::{HashMap, VecDeque};

use super::finite::FiniteGroup;
use super::hom::direct_product;

fn build(order: usize, labels: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            table.push(mul(a, b) as u32);
        }
    }
    FiniteGroup::from_flat(order, table, Some(labels)).expect("construction yields a group")
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// `C_n`, element `k` is `x^k`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n > 0);
    let labels = (0..n)
        .map(|k| if k == 0 { "e".into() } else { power_label("x", k) })
        .collect();
    build(n, labels, |a, b| (a + b) % n)
}

/// `V_4 = {e, a, b, ab}` in that index order.
pub fn klein_four() -> FiniteGroup {
    let labels = ["e", "a", "b", "ab"].map(String::from).to_vec();
    build(4, labels, |a, b| a ^ b)
}

/// `C_2^k`, multiplication is bitwise xor of indices.
pub fn elementary_abelian_2(k: u32) -> FiniteGroup {
    let n = 1usize << k;
    let labels = (0..n)
        .map(|i| if i == 0 { "e".into() } else { format!("v{i}") })
        .collect();
    build(n, labels, |a, b| a ^ b)
}

/// Dihedral group of order `2n` (`D_4` has order 8). Index `j*n + i` is `r^i s^j`.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let order = 2 * n;
    let labels = (0..order)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (_, 0) => power_label("r", i),
                (_, _) => format!("{}s", power_label("r", i)),
            }
        })
        .collect();
    build(order, labels, |x, y| {
        let (i, j) = (x % n, x / n);
        let (k, l) = (y % n, y / n);
        let k = if j == 0 { k } else { (n - k) % n };
        ((j + l) % 2) * n + (i + k) % n
    })
}

/// `S_3` as permutations of three points; 1, 2 are the 3-cycles and 3, 4, 5 the transpositions.
pub fn symmetric3() -> FiniteGroup {
    let d = dihedral(3);
    let labels = ["()", "(123)", "(132)", "(23)", "(12)", "(13)"]
        .map(String::from)
        .to_vec();
    d.with_labels(labels).expect("six labels")
}

/// Generalized quaternion (dicyclic) group of order `4m`; `Q_8` is `m = 2`.
/// Index `j*2m + i` is `a^i b^j` with `b^2 = a^m` and `b a b^-1 = a^-1`.
pub fn dicyclic(m: usize) -> FiniteGroup {
    assert!(m >= 1);
    let n = 2 * m;
    let order = 2 * n;
    let labels = (0..order)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (_, 0) => power_label("a", i),
                (_, _) => format!("{}b", power_label("a", i)),
            }
        })
        .collect();
    build(order, labels, |x, y| {
        let (i, j) = (x % n, x / n);
        let (k, l) = (y % n, y / n);
        if j == 0 {
            l * n + (i + k) % n
        } else {
            let base = (i + n - k) % n;
            if l == 0 {
                n + base
            } else {
                (base + m) % n
            }
        }
    })
}

pub fn quaternion8() -> FiniteGroup {
    dicyclic(2)
}

/// The group generated by permutations of `0..degree`, elements in breadth-first order
/// from the identity.
pub fn permutation_group(gens: &[Vec<usize>]) -> FiniteGroup {
    let degree = gens.first().map_or(0, |g| g.len());
    let id: Vec<usize> = (0..degree).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elems = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            // x then g, applied right to left: (x*g)(p) = x(g(p))
            let y: Vec<usize> = g.iter().map(|&p| elems[x][p]).collect();
            if !index.contains_key(&y) {
                index.insert(y.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(y);
            }
        }
    }
    let n = elems.len();
    let labels = elems.iter().map(|p| cycle_label(p)).collect();
    build(n, labels, |a, b| {
        let prod: Vec<usize> = elems[b].iter().map(|&p| elems[a][p]).collect();
        index[&prod]
    })
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

pub fn symmetric4() -> FiniteGroup {
    permutation_group(&[vec![1, 2, 3, 0], vec![1, 0, 2, 3]])
}

pub fn alternating4() -> FiniteGroup {
    permutation_group(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

/// Direct product of a list of groups, left-associated.
pub fn product_of(factors: &[FiniteGroup]) -> FiniteGroup {
    let mut acc = FiniteGroup::trivial();
    for f in factors {
        acc = if acc.is_trivial() { f.clone() } else { direct_product(&acc, f) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_abelianness() {
        assert_eq!(cyclic(5).order(), 5);
        assert!(cyclic(5).is_abelian());
        assert_eq!(dihedral(4).order(), 8);
        assert!(!dihedral(4).is_abelian());
        assert!(!quaternion8().is_abelian());
        assert_eq!(symmetric4().order(), 24);
        assert_eq!(alternating4().order(), 12);
        assert_eq!(dicyclic(4).order(), 16);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion8();
        let involutions = q.elements().filter(|&x| q.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        let d = dihedral(4);
        let involutions = d.elements().filter(|&x| d.element_order(x) == 2).count();
        assert_eq!(involutions, 5);
    }

    #[test]
    fn klein_four_labels() {
        let v = klein_four();
        assert_eq!(v.label(3), "ab");
        assert_eq!(v.mul(1, 2), 3);
    }
}
