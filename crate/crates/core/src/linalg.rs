//! Exact sparse elimination over the integers (fraction free, rows kept
//! primitive). Used for ranks and left kernels of expansion matrices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sorted by column, no zero entries.
pub type SparseRow = Vec<(u32, BigInt)>;

/// Column ids at or above this are tags used by [`left_kernel`].
const TAG: u32 = 1 << 31;

fn make_primitive(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if let Some((_, lead)) = row.first() {
        if lead.is_negative() {
            g = -g;
        }
    }
    if !g.is_one() && !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// `ca·a - cb·b`.
fn combine(a: &SparseRow, ca: &BigInt, b: &SparseRow, cb: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, &a[i].1 * ca));
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(&b[j].1 * cb)));
            j += 1;
        } else {
            let v = &a[i].1 * ca - &b[j].1 * cb;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon form built one row at a time.
#[derive(Default, Debug)]
pub struct Echelon {
    pivots: BTreeMap<u32, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces the leading entry of `row` against the pivots until it is
    /// zero or lands on a free column.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        make_primitive(&mut row);
        while let Some((c, lead)) = row.first() {
            let Some(p) = self.pivots.get(c) else {
                break;
            };
            let pl = &p[0].1;
            let g = lead.gcd(pl);
            let (ca, cb) = (pl / &g, lead / &g);
            row = combine(&row, &ca, p, &cb);
            make_primitive(&mut row);
        }
        row
    }

    /// Adds `row`; true if it raised the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let r = self.reduce(row);
        match r.first() {
            Some((c, _)) => {
                self.pivots.insert(*c, r);
                true
            }
            None => false,
        }
    }

    /// True if `row` lies in the span of the rows inserted so far.
    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// A basis of `{ c : Σ c_i rows[i] = 0 }`, as sparse vectors indexed by row.
/// Row entries must use columns below `2^31`.
pub fn left_kernel(rows: &[SparseRow]) -> Vec<SparseRow> {
    let mut e = Echelon::new();
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        debug_assert!(r.iter().all(|(c, _)| *c < TAG));
        let mut aug = r.clone();
        aug.push((TAG + i as u32, BigInt::one()));
        let red = e.reduce(aug);
        match red.first() {
            Some((c, _)) if *c >= TAG => {
                out.push(red.iter().map(|(c, v)| (c - TAG, v.clone())).collect());
            }
            Some((c, _)) => {
                e.pivots.insert(*c, red);
            }
            None => unreachable!("the tag entry cannot cancel"),
        }
    }
    out
}
