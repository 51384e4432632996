//! Conjugacy classes of subgroups of small index in `⟨x, y | x², y^q⟩`.
//!
//! Backtracks over standard coset tables, with `x` an involution and every
//! `y`-cycle of length dividing `q`. A table is kept only if no re-rooting
//! yields a lexicographically smaller one.

use super::{CosetTable, FpError, Gen, Presentation};

pub const MAX_LOW_INDEX: usize = 12;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowIndexSubgroup {
    pub table: CosetTable,
    pub normal: bool,
}

impl LowIndexSubgroup {
    pub fn index(&self) -> usize {
        self.table.index()
    }
}

struct Search {
    q: usize,
    max: usize,
    n: usize,
    sigma: Vec<u32>,
    tau: Vec<u32>,
    tau_inv: Vec<u32>,
    found: Vec<CosetTable>,
}

impl Search {
    fn first_gap(&self) -> Option<(usize, Gen)> {
        (0..self.n).find_map(|c| {
            if self.sigma[c] == NONE {
                Some((c, Gen::X))
            } else if self.tau[c] == NONE {
                Some((c, Gen::Y))
            } else {
                None
            }
        })
    }

    /// Length of the `y`-chain through `c`, and whether it is closed.
    fn chain(&self, c: usize) -> (usize, bool) {
        let mut start = c;
        let mut len = 1;
        while self.tau_inv[start] != NONE {
            start = self.tau_inv[start] as usize;
            if start == c {
                return (len, true);
            }
            len += 1;
        }
        let mut d = c;
        while self.tau[d] != NONE {
            d = self.tau[d] as usize;
            len += 1;
        }
        (len, false)
    }

    fn record(&mut self) {
        let rows = (0..self.n)
            .map(|c| [self.sigma[c], self.sigma[c], self.tau[c], self.tau_inv[c]])
            .collect();
        self.found.push(CosetTable::from_rows(rows));
    }

    fn run(&mut self) {
        let Some((c, g)) = self.first_gap() else {
            self.record();
            return;
        };
        let fresh = self.n < self.max;
        let candidates: Vec<usize> = (0..self.n + usize::from(fresh)).collect();
        for j in candidates {
            let grew = j == self.n;
            if grew {
                self.n += 1;
            }
            match g {
                Gen::X if self.sigma[j] == NONE => {
                    self.sigma[c] = j as u32;
                    self.sigma[j] = c as u32;
                    self.run();
                    self.sigma[c] = NONE;
                    self.sigma[j] = NONE;
                }
                Gen::Y if self.tau_inv[j] == NONE => {
                    self.tau[c] = j as u32;
                    self.tau_inv[j] = c as u32;
                    let (len, closed) = self.chain(c);
                    let ok = if closed {
                        self.q % len == 0
                    } else {
                        len <= self.q
                    };
                    if ok {
                        self.run();
                    }
                    self.tau[c] = NONE;
                    self.tau_inv[j] = NONE;
                }
                _ => {}
            }
            if grew {
                self.n -= 1;
            }
        }
    }
}

fn is_canonical(t: &CosetTable) -> bool {
    (1..t.index() as u32).all(|r| t.rerooted(r) >= *t)
}

/// A subgroup is normal iff the generators fix its coset table under
/// re-rooting.
fn is_normal(t: &CosetTable) -> bool {
    [Gen::X, Gen::Y]
        .iter()
        .all(|&g| t.rerooted(t.image(0, g)) == *t)
}

/// One representative per conjugacy class of subgroups of index at most
/// `max_index`, sorted by index and then by table.
pub fn low_index_subgroups(
    p: &Presentation,
    max_index: usize,
) -> Result<Vec<LowIndexSubgroup>, FpError> {
    if max_index > MAX_LOW_INDEX {
        return Err(FpError::MaxIndexTooLarge {
            requested: max_index,
            max: MAX_LOW_INDEX,
        });
    }
    if max_index == 0 {
        return Ok(Vec::new());
    }
    let mut s = Search {
        q: p.q() as usize,
        max: max_index,
        n: 1,
        sigma: vec![NONE; max_index],
        tau: vec![NONE; max_index],
        tau_inv: vec![NONE; max_index],
        found: Vec::new(),
    };
    s.run();
    let mut out: Vec<LowIndexSubgroup> = s
        .found
        .into_iter()
        .filter(is_canonical)
        .map(|table| LowIndexSubgroup {
            normal: is_normal(&table),
            table,
        })
        .collect();
    out.sort_by(|a, b| {
        a.index()
            .cmp(&b.index())
            .then_with(|| a.table.cmp(&b.table))
    });
    Ok(out)
}
