//! HLT coset enumeration with a lookahead pass when the table fills up.

use super::{FpError, FpWord, Gen, Presentation};

pub const DEFAULT_COSET_CAP: usize = 1_000_000;

const UNDEF: u32 = u32::MAX;

/// A complete coset table in standard form: coset 0 is the subgroup and the
/// remaining cosets are numbered in order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetTable {
    rows: Vec<[u32; 4]>,
}

impl CosetTable {
    pub(crate) fn from_rows(rows: Vec<[u32; 4]>) -> Self {
        Self { rows }
    }

    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn image(&self, coset: u32, g: Gen) -> u32 {
        self.rows[coset as usize][g.col()]
    }

    pub fn act(&self, coset: u32, w: &FpWord) -> u32 {
        w.gens().iter().fold(coset, |c, &g| self.image(c, g))
    }

    pub fn stabilizes(&self, coset: u32, w: &FpWord) -> bool {
        self.act(coset, w) == coset
    }

    pub fn rows(&self) -> &[[u32; 4]] {
        &self.rows
    }

    /// Relabels so that `root` becomes coset 0, numbering the rest in order
    /// of first appearance scanning rows by `x`, `y`.
    pub fn rerooted(&self, root: u32) -> Self {
        let n = self.rows.len();
        let mut label = vec![UNDEF; n];
        let mut order = vec![root];
        label[root as usize] = 0;
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            for g in [Gen::X, Gen::Y] {
                let d = self.image(c, g);
                if label[d as usize] == UNDEF {
                    label[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
            i += 1;
        }
        let rows = order
            .iter()
            .map(|&c| self.rows[c as usize].map(|d| label[d as usize]))
            .collect();
        Self { rows }
    }

    /// Every relator fixes every coset and every column is a permutation.
    pub fn is_consistent(&self, p: &Presentation) -> bool {
        let n = self.rows.len() as u32;
        let perm_ok = Gen::ALL.iter().all(|&g| {
            (0..n).all(|c| {
                let d = self.image(c, g);
                d < n && self.image(d, g.inverse()) == c
            })
        });
        perm_ok
            && p.relators()
                .iter()
                .all(|r| (0..n).all(|c| self.stabilizes(c, r)))
    }
}

struct Enumerator<'a> {
    rels: &'a [FpWord],
    table: Vec<[u32; 4]>,
    parent: Vec<u32>,
    live: usize,
    cap: usize,
}

impl Enumerator<'_> {
    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != r {
            let next = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = next;
        }
        r
    }

    fn new_coset(&mut self) -> Option<u32> {
        if self.table.len() >= self.cap {
            return None;
        }
        let n = self.table.len() as u32;
        self.table.push([UNDEF; 4]);
        self.parent.push(n);
        self.live += 1;
        Some(n)
    }

    fn define(&mut self, c: u32, g: Gen) -> Option<()> {
        let d = self.new_coset()?;
        self.table[c as usize][g.col()] = d;
        self.table[d as usize][g.inverse().col()] = c;
        Some(())
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = (a.min(b), a.max(b));
        self.parent[kill as usize] = keep;
        self.live -= 1;
        queue.push(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for g in Gen::ALL {
                let f = self.table[e as usize][g.col()];
                if f == UNDEF {
                    continue;
                }
                let gi = g.inverse();
                if self.table[f as usize][gi.col()] == e {
                    self.table[f as usize][gi.col()] = UNDEF;
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                let e1g = self.table[e1 as usize][g.col()];
                let f1gi = self.table[f1 as usize][gi.col()];
                if e1g != UNDEF {
                    self.merge(f1, e1g, &mut queue);
                } else if f1gi != UNDEF {
                    self.merge(e1, f1gi, &mut queue);
                } else {
                    self.table[e1 as usize][g.col()] = f1;
                    self.table[f1 as usize][gi.col()] = e1;
                }
            }
        }
    }

    /// Scans `w` at `c`; with `fill`, defines cosets to complete the scan.
    /// Returns `None` only when a needed definition would exceed the cap.
    fn scan(&mut self, c: u32, w: &[Gen], fill: bool) -> Option<()> {
        if w.is_empty() {
            return Some(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j {
                let next = self.table[f as usize][w[i].col()];
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Some(());
            }
            while j >= i as isize {
                let next = self.table[b as usize][w[j as usize].inverse().col()];
                if next == UNDEF {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Some(());
            }
            if j == i as isize {
                let g = w[i];
                self.table[f as usize][g.col()] = b;
                self.table[b as usize][g.inverse().col()] = f;
                return Some(());
            }
            if !fill {
                return Some(());
            }
            self.define(f, w[i])?;
        }
    }

    /// Deduction-only pass over all live cosets.
    fn lookahead(&mut self) {
        for c in 0..self.table.len() as u32 {
            for r in 0..self.rels.len() {
                if !self.alive(c) {
                    break;
                }
                let w = self.rels[r].0.clone();
                self.scan(c, &w, false);
            }
        }
    }

    /// Drops dead cosets and renumbers the live ones in index order.
    fn compact(&mut self) {
        let mut label = vec![UNDEF; self.table.len()];
        let mut next = 0u32;
        for c in 0..self.table.len() {
            if self.parent[c] == c as u32 {
                label[c] = next;
                next += 1;
            }
        }
        let rows: Vec<[u32; 4]> = (0..self.table.len())
            .filter(|&c| self.parent[c] == c as u32)
            .map(|c| self.table[c].map(|d| if d == UNDEF { UNDEF } else { label[d as usize] }))
            .collect();
        self.parent = (0..rows.len() as u32).collect();
        self.live = rows.len();
        self.table = rows;
    }
}

/// Enumerates the cosets of `⟨subgroup⟩` in the group presented by `p`.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup: &[FpWord],
    cap: usize,
) -> Result<CosetTable, FpError> {
    let rels = p.relators();
    let mut en = Enumerator {
        rels: &rels,
        table: vec![[UNDEF; 4]],
        parent: vec![0],
        live: 1,
        cap,
    };
    for w in subgroup {
        run_with_lookahead(&mut en, |en| en.scan(0, &w.0, true), cap)?;
    }
    let mut c = 0u32;
    while (c as usize) < en.table.len() {
        let mut ok = true;
        if en.alive(c) {
            for r in 0..rels.len() {
                if !en.alive(c) {
                    break;
                }
                if en.scan(c, &rels[r].0, true).is_none() {
                    ok = false;
                    break;
                }
            }
            if ok && en.alive(c) {
                for g in Gen::ALL {
                    if en.table[c as usize][g.col()] == UNDEF && en.define(c, g).is_none() {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if !ok {
            make_room(&mut en, cap)?;
            c = 0;
            continue;
        }
        c += 1;
    }
    en.compact();
    Ok(CosetTable { rows: en.table }.rerooted(0))
}

fn make_room(en: &mut Enumerator<'_>, cap: usize) -> Result<(), FpError> {
    en.lookahead();
    if en.live >= cap {
        return Err(FpError::CapExceeded(cap));
    }
    en.compact();
    Ok(())
}

fn run_with_lookahead<F>(en: &mut Enumerator<'_>, mut step: F, cap: usize) -> Result<(), FpError>
where
    F: FnMut(&mut Enumerator<'_>) -> Option<()>,
{
    loop {
        if step(en).is_some() {
            return Ok(());
        }
        make_room(en, cap)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(ws: &[&str]) -> Vec<FpWord> {
        ws.iter().map(|w| w.parse().unwrap()).collect()
    }

    #[test]
    fn index_two_subgroup() {
        let p = Presentation::new(5);
        let t = todd_coxeter(&p, &words(&["y", "xyx"]), DEFAULT_COSET_CAP).unwrap();
        assert_eq!(t.index(), 2);
        assert!(t.is_consistent(&p));
    }

    #[test]
    fn whole_group_and_trivial() {
        let p = Presentation::new(5);
        assert_eq!(
            todd_coxeter(&p, &words(&["x", "y"]), 100).unwrap().index(),
            1
        );
        // the trivial subgroup has infinite index
        assert!(matches!(
            todd_coxeter(&p, &[], 500),
            Err(FpError::CapExceeded(500))
        ));
    }

    #[test]
    fn normal_closure_of_x() {
        // normal closure of x, quotient Z_5
        let p = Presentation::new(5);
        let ws = words(&["x", "yxY", "yyxYY", "yyyxYYY", "yyyyxYYYY"]);
        let t = todd_coxeter(&p, &ws, 1000).unwrap();
        assert_eq!(t.index(), 5);
        assert!(t.is_consistent(&p));
        for w in &ws {
            assert!(t.stabilizes(0, w));
        }
    }

    #[test]
    fn modular_group_level_two() {
        // q=3: ⟨T², S T² S⟩ = Γ(2), index 6
        let p = Presentation::new(3);
        let t2 = p.translate(&"TT".parse().unwrap());
        let st2s = p.translate(&"STTS".parse().unwrap());
        let t = todd_coxeter(&p, &[t2, st2s], 1000).unwrap();
        assert_eq!(t.index(), 6);
    }

    #[test]
    fn small_cap_uses_lookahead() {
        let p = Presentation::new(5);
        let ws = words(&["x", "yxY", "yyxYY", "yyyxYYY", "yyyyxYYYY"]);
        // still finishes with a tight cap
        let t = todd_coxeter(&p, &ws, 12).unwrap();
        assert_eq!(t.index(), 5);
    }
}
