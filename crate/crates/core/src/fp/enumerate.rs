use serde::{Deserialize, Serialize};

use super::presentation::{Gen, Presentation, Word};
use crate::error::{Error, Result};

const UNDEF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumLimits {
    /// Maximum number of table rows (live plus not yet compacted dead cosets).
    pub max_cosets: usize,
    /// Maximum number of coset definitions over the whole run.
    pub max_defined_total: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits { max_cosets: 1_000_000, max_defined_total: 200_000_000 }
    }
}

impl EnumLimits {
    pub fn with_max_cosets(max_cosets: usize) -> Self {
        EnumLimits { max_cosets, ..Default::default() }
    }

    fn validate(&self) -> Result<()> {
        if self.max_cosets == 0 || self.max_defined_total == 0 {
            return Err(Error::input("enumeration limits must be positive"));
        }
        if self.max_cosets >= UNDEF as usize {
            return Err(Error::input("max_cosets too large"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumStats {
    /// Most table rows in use at any point.
    pub high_water: usize,
    /// Total coset definitions.
    pub defined: usize,
    pub compactions: usize,
}

/// A complete coset table. Coset 0 is the subgroup; `table[c * 2n + col]` is the coset
/// reached from `c` by the letter with column `col` (see [`Gen::column`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    ncosets: usize,
    table: Vec<u32>,
    stats: EnumStats,
}

impl CosetTable {
    pub fn ncosets(&self) -> usize {
        self.ncosets
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn stats(&self) -> EnumStats {
        self.stats
    }

    pub fn get(&self, coset: usize, x: Gen) -> usize {
        self.table[coset * 2 * self.ngens + x.column()] as usize
    }

    pub fn trace(&self, coset: usize, word: &[Gen]) -> usize {
        word.iter().fold(coset, |c, &x| self.get(c, x))
    }

    /// Independent post-hoc check: every entry defined, generator columns are
    /// permutations inverse to their partner columns, and every relator traced from
    /// every coset returns to its start.
    pub fn verify(&self, p: &Presentation) -> Result<()> {
        let n = self.ncosets;
        for c in 0..n {
            for col in 0..2 * self.ngens {
                let x = Gen::from_column(col);
                let d = self.get(c, x);
                if d >= n || self.get(d, x.inverse()) != c {
                    return Err(Error::CheckFailed(format!("coset table inconsistent at ({c}, {col})")));
                }
            }
        }
        for (i, r) in p.relators().iter().enumerate() {
            for c in 0..n {
                if self.trace(c, r) != c {
                    return Err(Error::CheckFailed(format!("relator {i} does not close at coset {c}")));
                }
            }
        }
        Ok(())
    }
}

struct Enumerator<'a> {
    ncols: usize,
    rels: Vec<&'a [Gen]>,
    table: Vec<u32>,
    /// forwarding pointers; `p[c] == c` iff `c` is live
    p: Vec<u32>,
    queue: Vec<u32>,
    live: usize,
    limits: EnumLimits,
    stats: EnumStats,
    overflow: bool,
}

impl<'a> Enumerator<'a> {
    fn new(p: &'a Presentation, limits: EnumLimits) -> Self {
        let ncols = 2 * p.ngens();
        let rels = p.relators().iter().filter(|r| !r.is_empty()).map(|r| r.as_slice()).collect();
        Enumerator {
            ncols,
            rels,
            table: vec![UNDEF; ncols],
            p: vec![0],
            queue: Vec::new(),
            live: 1,
            limits,
            stats: EnumStats { high_water: 1, defined: 1, compactions: 0 },
            overflow: false,
        }
    }

    fn rows(&self) -> usize {
        self.p.len()
    }

    #[inline]
    fn get(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.ncols + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.table[c as usize * self.ncols + col] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.p[c as usize] == c
    }

    /// Defines a new coset `c . x`. Returns `false` (and sets `overflow`) at the limit.
    fn define(&mut self, c: u32, col: usize) -> bool {
        if self.rows() >= self.limits.max_cosets || self.stats.defined >= self.limits.max_defined_total {
            self.overflow = true;
            return false;
        }
        let d = self.rows() as u32;
        self.p.push(d);
        self.table.extend(std::iter::repeat(UNDEF).take(self.ncols));
        self.live += 1;
        self.stats.defined += 1;
        self.stats.high_water = self.stats.high_water.max(self.rows());
        self.set(c, col, d);
        self.set(d, col ^ 1, c);
        true
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.p[r as usize] != r {
            r = self.p[r as usize];
        }
        let mut x = c;
        while self.p[x as usize] != r {
            let next = self.p[x as usize];
            self.p[x as usize] = r;
            x = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.p[kill as usize] = keep;
        self.live -= 1;
        self.queue.push(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for col in 0..self.ncols {
                let d = self.get(g, col);
                if d == UNDEF {
                    continue;
                }
                self.set(d, col ^ 1, UNDEF);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mu_x = self.get(mu, col);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x);
                } else {
                    let nu_xi = self.get(nu, col ^ 1);
                    if nu_xi != UNDEF {
                        self.merge(mu, nu_xi);
                    } else {
                        self.set(mu, col, nu);
                        self.set(nu, col ^ 1, mu);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `w` from coset `a`, defining cosets as needed (`fill`) or only deducing.
    fn scan(&mut self, a: u32, w: &[Gen], fill: bool) {
        let mut f = a;
        let mut b = a;
        let mut i = 0usize;
        let mut j = w.len();
        loop {
            while i < j {
                let nf = self.get(f, w[i].column());
                if nf == UNDEF {
                    break;
                }
                f = nf;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return;
            }
            while j > i {
                let nb = self.get(b, w[j - 1].column() ^ 1);
                if nb == UNDEF {
                    break;
                }
                b = nb;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return;
            }
            if j == i + 1 {
                let col = w[i].column();
                self.set(f, col, b);
                self.set(b, col ^ 1, f);
                return;
            }
            if !fill || !self.define(f, w[i].column()) {
                return;
            }
        }
    }

    /// Renumbers live cosets consecutively, preserving order.
    fn compact(&mut self) -> Vec<u32> {
        let mut new = vec![UNDEF; self.rows()];
        let mut next = 0u32;
        for c in 0..self.rows() {
            if self.p[c] == c as u32 {
                new[c] = next;
                next += 1;
            }
        }
        let ncols = self.ncols;
        let mut table = Vec::with_capacity(next as usize * ncols);
        for c in 0..self.rows() {
            if new[c] == UNDEF {
                continue;
            }
            for col in 0..ncols {
                let d = self.table[c * ncols + col];
                table.push(if d == UNDEF { UNDEF } else { new[d as usize] });
            }
        }
        self.table = table;
        self.p = (0..next).collect();
        self.live = next as usize;
        self.stats.compactions += 1;
        new
    }

    /// Scans every relator from every live coset without defining new cosets.
    fn lookahead(&mut self) {
        let rels = self.rels.clone();
        let mut c = 0;
        while c < self.rows() {
            for r in &rels {
                if !self.is_live(c as u32) {
                    break;
                }
                self.scan(c as u32, r, false);
            }
            c += 1;
        }
    }

    fn inconclusive(&self) -> Error {
        Error::Inconclusive {
            limit: self.limits.max_cosets,
            high_water: self.stats.high_water,
            defined: self.stats.defined,
        }
    }

    fn run(&mut self, subgroup: &[Word]) -> Result<()> {
        let rels = self.rels.clone();
        loop {
            self.overflow = false;
            for w in subgroup {
                self.scan(0, w, true);
                if self.overflow {
                    break;
                }
            }
            if !self.overflow {
                break;
            }
            self.make_room(&mut 0)?;
        }
        let mut a = 0usize;
        while a < self.rows() {
            let c = a as u32;
            if self.is_live(c) {
                self.overflow = false;
                for r in &rels {
                    self.scan(c, r, true);
                    if self.overflow || !self.is_live(c) {
                        break;
                    }
                }
                if !self.overflow && self.is_live(c) {
                    for col in 0..self.ncols {
                        if self.get(c, col) == UNDEF && !self.define(c, col) {
                            break;
                        }
                    }
                }
                if self.overflow {
                    // retry the same coset after freeing rows
                    self.make_room(&mut a)?;
                    continue;
                }
            }
            a += 1;
        }
        Ok(())
    }

    /// Frees rows by compaction, then lookahead; `cursor` is renumbered alongside.
    fn make_room(&mut self, cursor: &mut usize) -> Result<()> {
        if self.stats.defined >= self.limits.max_defined_total {
            return Err(self.inconclusive());
        }
        let remap = |s: &mut Self, cursor: &mut usize| {
            // the cursor coset may have died; fall back to the first live coset before it
            let mut c = *cursor;
            while s.p[c] != c as u32 {
                c -= 1;
            }
            let new = s.compact();
            *cursor = new[c] as usize;
        };
        if self.live < self.rows() {
            remap(self, cursor);
            if self.rows() < self.limits.max_cosets {
                return Ok(());
            }
        }
        self.lookahead();
        if self.live < self.rows() {
            remap(self, cursor);
            if self.rows() < self.limits.max_cosets {
                return Ok(());
            }
        }
        Err(self.inconclusive())
    }
}

/// Coset enumeration (HLT with lookahead) of the subgroup generated by `subgroup` in
/// the group presented by `p`.
///
/// Cosets are defined in scan order: for each live coset in turn, every relator is
/// scanned and missing entries are defined, then any entries of its row still undefined
/// are filled column by column. When the table is full, dead rows are compacted away
/// and, failing that, a lookahead pass scans all relators without defining. If the
/// table is still full the run is abandoned with [`Error::Inconclusive`].
///
/// The returned table is standardized: cosets are numbered in breadth-first order from
/// coset 0 over columns in index order.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], limits: EnumLimits) -> Result<CosetTable> {
    limits.validate()?;
    for w in subgroup {
        if let Some(x) = w.iter().find(|x| x.index() >= p.ngens()) {
            return Err(Error::input(format!("subgroup word uses unknown generator {}", x.index())));
        }
    }
    let mut e = Enumerator::new(p, limits);
    e.run(subgroup)?;
    e.compact();
    let ncols = e.ncols;
    let n = e.rows();
    if let Some(pos) = e.table.iter().position(|&v| v == UNDEF) {
        return Err(Error::CheckFailed(format!(
            "enumeration finished with an undefined entry at coset {}",
            pos / ncols
        )));
    }
    // standardize
    let mut order = Vec::with_capacity(n);
    let mut new = vec![UNDEF; n];
    new[0] = 0;
    order.push(0u32);
    let mut k = 0;
    while k < order.len() {
        let c = order[k];
        k += 1;
        for col in 0..ncols {
            let d = e.get(c, col);
            if new[d as usize] == UNDEF {
                new[d as usize] = order.len() as u32;
                order.push(d);
            }
        }
    }
    let mut table = Vec::with_capacity(n * ncols);
    for &c in &order {
        for col in 0..ncols {
            table.push(new[e.get(c, col) as usize]);
        }
    }
    let ct = CosetTable { ngens: ncols / 2, ncosets: n, table, stats: e.stats };
    ct.verify(p)?;
    Ok(ct)
}
