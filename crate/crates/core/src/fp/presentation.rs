use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A generator or its inverse. Stored as `2 * index` for the generator and
/// `2 * index + 1` for the inverse, which is also its column in a coset table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gen(u32);

impl Gen {
    pub fn new(index: usize) -> Self {
        Gen(2 * index as u32)
    }

    pub fn inv(index: usize) -> Self {
        Gen(2 * index as u32 + 1)
    }

    /// `+i` for generator `i - 1`, `-i` for its inverse (one-based so the sign is never lost).
    pub fn from_signed(s: i64) -> Option<Self> {
        match s {
            0 => None,
            s if s > 0 => Some(Gen::new(s as usize - 1)),
            s => Some(Gen::inv((-s) as usize - 1)),
        }
    }

    pub fn index(self) -> usize {
        (self.0 / 2) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn inverse(self) -> Self {
        Gen(self.0 ^ 1)
    }

    pub fn column(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_column(c: usize) -> Self {
        Gen(c as u32)
    }
}

pub type Word = Vec<Gen>;

pub fn free_reduce(word: &[Gen]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &x in word {
        if out.last() == Some(&x.inverse()) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn invert_word(word: &[Gen]) -> Word {
    word.iter().rev().map(|x| x.inverse()).collect()
}

/// A finitely presented group. Relators are kept freely reduced and in the order given;
/// relators that reduce to the empty word are kept so that relator counts are stable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    gen_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(gen_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let n = gen_names.len();
        for (i, r) in relators.iter().enumerate() {
            if let Some(x) = r.iter().find(|x| x.index() >= n) {
                return Err(Error::input(format!(
                    "relator {i} uses generator {} but only {n} generators exist",
                    x.index()
                )));
            }
        }
        let relators = relators.iter().map(|r| free_reduce(r)).collect();
        Ok(Presentation { gen_names, relators })
    }

    /// Generators named `g0 .. g{n-1}`.
    pub fn with_default_names(ngens: usize, relators: Vec<Word>) -> Result<Self> {
        Self::new((0..ngens).map(|i| format!("g{i}")).collect(), relators)
    }

    /// One generator per element and a relator `x_i x_j x_k^-1` for every product `x_i x_j = x_k`.
    pub fn from_cayley_table(group: &FiniteGroup) -> Self {
        let mut rels = Vec::with_capacity(group.order() * group.order());
        for i in group.elements() {
            for j in group.elements() {
                rels.push(vec![Gen::new(i), Gen::new(j), Gen::inv(group.mul(i, j))]);
            }
        }
        let names = group.elements().map(|i| format!("x{i}")).collect();
        Self::new(names, rels).expect("indices in range")
    }

    pub fn ngens(&self) -> usize {
        self.gen_names.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn word_to_string(&self, word: &[Gen]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = word
            .iter()
            .map(|x| {
                let name = &self.gen_names[x.index()];
                if x.is_inverse() {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect();
        parts.join(" ")
    }

    /// Plain-text dump.
    ///
    /// The first line is `generators N`. Each following line is one relator: letters
    /// separated by single spaces, generator `i` written `gi`, its inverse `gi'`.
    /// A relator that reduced to the empty word is written `1`. Lines end in `\n`.
    pub fn dump(&self) -> String {
        let mut out = format!("generators {}\n", self.ngens());
        for r in &self.relators {
            if r.is_empty() {
                out.push('1');
            }
            for (k, x) in r.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "g{}{}", x.index(), if x.is_inverse() { "'" } else { "" });
            }
            out.push('\n');
        }
        out
    }

    /// Parses the format written by [`Presentation::dump`].
    pub fn parse_dump(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let head = lines.next().ok_or_else(|| Error::input("empty presentation dump"))?;
        let ngens: usize = head
            .strip_prefix("generators ")
            .and_then(|n| n.trim().parse().ok())
            .ok_or_else(|| Error::input("first line must be `generators N`"))?;
        let mut rels = Vec::new();
        for (ln, line) in lines.enumerate() {
            let line = line.trim();
            if line == "1" {
                rels.push(Vec::new());
                continue;
            }
            let mut w = Vec::new();
            for tok in line.split_whitespace() {
                let (body, inverse) = match tok.strip_suffix('\'') {
                    Some(b) => (b, true),
                    None => (tok, false),
                };
                let i: usize = body
                    .strip_prefix('g')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| Error::input(format!("line {}: bad letter {tok:?}", ln + 2)))?;
                w.push(if inverse { Gen::inv(i) } else { Gen::new(i) });
            }
            rels.push(w);
        }
        Self::with_default_names(ngens, rels)
    }
}
