use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{MinorPolynomial, MinorSymbol};
use crate::error::{Error, Result};
use crate::multilinear::ExtIndex;
use crate::partitions::{BiShape, Partition};

/// An initial segment of a linear order on `t`-subsets that extends the
/// componentwise order: everything below a member comes earlier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InitialSegment {
    items: Vec<ExtIndex>,
}

impl InitialSegment {
    pub fn new(items: Vec<ExtIndex>) -> Result<Self> {
        if !validate_initial_segment(&items) {
            return Err(Error::NotInitialSegment(render(&items)));
        }
        Ok(InitialSegment { items })
    }

    pub fn items(&self) -> &[ExtIndex] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The shape whose columns are the index counts of the segment.
    pub fn shape(&self) -> Partition {
        let top = self.items.iter().map(ExtIndex::max_index).max().unwrap_or(0) as usize;
        let mut counts = alloc::vec![0u32; top];
        for e in &self.items {
            for &i in e.indices() {
                counts[i as usize - 1] += 1;
            }
        }
        counts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(counts).expect("counts are a partition").transpose()
    }
}

fn render(items: &[ExtIndex]) -> alloc::string::String {
    let v: Vec<alloc::string::String> = items.iter().map(|e| alloc::format!("{{{e}}}")).collect();
    v.join(" ")
}

/// All `t`-subsets of `{1..top}` componentwise below `x`.
fn below(x: &ExtIndex) -> Vec<ExtIndex> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(x: &[u8], k: usize, cur: &mut Vec<u8>, out: &mut Vec<ExtIndex>) {
        if k == x.len() {
            out.push(ExtIndex(cur.clone()));
            return;
        }
        let lo = cur.last().map_or(1, |&c| c + 1);
        for v in lo..=x[k] {
            cur.push(v);
            go(x, k + 1, cur, out);
            cur.pop();
        }
    }
    go(x.indices(), 0, &mut cur, &mut out);
    out
}

/// True iff the items are distinct, of one size, and every subset
/// componentwise below a member occurs before it.
pub fn validate_initial_segment(seg: &[ExtIndex]) -> bool {
    let Some(first) = seg.first() else {
        return true;
    };
    if seg.iter().any(|e| e.len() != first.len() || e.is_empty()) {
        return false;
    }
    for (k, x) in seg.iter().enumerate() {
        if seg[..k].contains(x) {
            return false;
        }
        for y in below(x) {
            if y != *x && !seg[..k].contains(&y) {
                return false;
            }
        }
    }
    true
}

/// Heap's algorithm over `0..d`, calling `visit(perm, sign)`.
fn for_each_perm(d: usize, mut visit: impl FnMut(&[usize], i64)) {
    let mut p: Vec<usize> = (0..d).collect();
    let mut c = alloc::vec![0usize; d];
    let mut sign = 1i64;
    visit(&p, sign);
    let mut i = 1;
    while i < d {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            sign = -sign;
            visit(&p, sign);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The `d × d` determinant whose `(a, b)` entry is the minor
/// `[rows[a] | cols[b]]`. Requires the two induced shapes to differ,
/// since otherwise the determinant is not in the kernel.
pub fn determinantal_relation(t: u32, rows: &InitialSegment, cols: &InitialSegment) -> Result<MinorPolynomial> {
    let d = rows.len();
    if d == 0 || d != cols.len() {
        return Err(Error::InvalidInput("segments must be non-empty and of equal length".into()));
    }
    if rows.items.iter().chain(&cols.items).any(|e| e.len() != t as usize) {
        return Err(Error::InvalidInput(alloc::format!("segment entries must be {t}-subsets")));
    }
    let shape = BiShape::new(rows.shape(), cols.shape());
    if shape.is_symmetric() {
        return Err(Error::InvalidInput(alloc::format!("not a relation: the bi-shape {shape} is symmetric")));
    }
    let mut p = MinorPolynomial::new();
    for_each_perm(d, |perm, sign| {
        let mono = (0..d)
            .map(|a| MinorSymbol::from_indices(rows.items[a].clone(), cols.items[perm[a]].clone()))
            .collect();
        p.add_term(mono, BigInt::from(sign));
    });
    Ok(p.normalized())
}
