//! Partitions, bi-shapes and the Pieri combinatorics of tensor powers of
//! exterior powers.
//!
//! Shapes follow the convention in which the one-row shape `(d)` labels the
//! d-th exterior power and the one-column shape labels the symmetric power.
//! Converting to the usual Schur-function labelling is a transpose.

mod classify;
mod pieri;
mod tableau;

pub use classify::{classify_tshape, is_single_type, shape_relations_deg3, tshape_candidates};
pub use pieri::{
    predecessors, successors, successors_bounded, tensor_multiplicity, trivial_extension, MultiplicityCache,
};
pub use tableau::Tableau;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so equality is equality of shapes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format_parts(&parts)));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row shape `(k)`.
    pub fn row(k: u32) -> Self {
        Partition::from_sorted(vec![k])
    }

    /// The one-column shape `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Part `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.first() as usize;
        let mut out = vec![0u32; width];
        for &p in &self.0 {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(out)
    }

    /// `|λ| = td` and at most `d` rows.
    pub fn is_admissible(&self, t: u32, d: u32) -> bool {
        t >= 1 && self.size() == t * d && self.rows() <= d as usize
    }

    /// The degree `d` for which the shape is `(t,d)`-admissible, if any.
    pub fn admissible_degree(&self, t: u32) -> Option<u32> {
        if t == 0 || self.size() % t != 0 {
            return None;
        }
        let d = self.size() / t;
        (self.rows() <= d as usize).then_some(d)
    }

    pub(crate) fn require_admissible(&self, t: u32) -> Result<u32> {
        if t == 0 {
            return Err(Error::InvalidInput("t must be positive".into()));
        }
        self.admissible_degree(t).ok_or_else(|| Error::NotAdmissible {
            shape: self.to_string(),
            t,
            d: self.size() / t,
        })
    }

    /// Boxes `(row, column)`, 0-based, in reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// All partitions of `n` with at most `max_rows` rows and parts at most
    /// `max_part`, in descending lexicographic order.
    pub fn all(n: u32, max_rows: usize, max_part: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_partitions(n, max_rows, max_part, &mut cur, &mut out);
        out
    }

    /// All `(t,d)`-admissible partitions, descending lexicographic.
    pub fn admissible(t: u32, d: u32) -> Vec<Partition> {
        Partition::all(t * d, d as usize, t * d)
    }

    /// Multiplicities of each part size, as `(part, count)` pairs.
    pub(crate) fn part_counts(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

fn fill_partitions(n: u32, rows: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if rows == 0 {
        return;
    }
    let top = n.min(max_part);
    for p in (1..=top).rev() {
        // the remaining rows must be able to hold n - p with parts <= p
        if (p as u64) * (rows as u64) < n as u64 {
            break;
        }
        cur.push(p);
        fill_partitions(n - p, rows - 1, p, cur, out);
        cur.pop();
    }
}

fn format_parts(parts: &[u32]) -> String {
    let mut s = String::from("(");
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&p.to_string());
    }
    s.push(')');
    s
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_parts(&self.0))
    }
}

/// Accepts `4,1,1`, `(4,1,1)` and `[4,1,1]`; the empty shape is `()` or ``.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

/// A pair of shapes: the row side acts on the first factor `V`, the column
/// side on the dual factor `W*`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BiShape {
    pub row: Partition,
    pub col: Partition,
}

impl BiShape {
    pub fn new(row: Partition, col: Partition) -> Self {
        BiShape { row, col }
    }

    pub fn is_symmetric(&self) -> bool {
        self.row == self.col
    }

    pub fn mirror(&self) -> BiShape {
        BiShape::new(self.col.clone(), self.row.clone())
    }

    /// Both sides `(t,d)`-admissible for a common `d`; returns that `d`.
    pub fn admissible_degree(&self, t: u32) -> Option<u32> {
        let d = self.row.admissible_degree(t)?;
        (self.col.admissible_degree(t) == Some(d)).then_some(d)
    }

    pub(crate) fn require_admissible(&self, t: u32) -> Result<u32> {
        let d = self.row.require_admissible(t)?;
        let e = self.col.require_admissible(t)?;
        if d != e {
            return Err(Error::InvalidInput(alloc::format!(
                "{self}: row and column sides have different degrees"
            )));
        }
        Ok(d)
    }
}

impl fmt::Display for BiShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = format_parts(&self.row.0);
        let c = format_parts(&self.col.0);
        write!(f, "({}|{})", &r[1..r.len() - 1], &c[1..c.len() - 1])
    }
}

/// Accepts `(4,2|6)` or `4,2|6`.
impl FromStr for BiShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (r, c) = inner
            .split_once('|')
            .ok_or_else(|| Error::InvalidInput(alloc::format!("bi-shape without '|': {s}")))?;
        Ok(BiShape::new(r.parse()?, c.parse()?))
    }
}

/// Integer weight vector, indexed by basis vector (0-based).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    /// Drops trailing zeros, so weights over different ambient dimensions compare.
    pub fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    /// Weight of a highest weight vector of the given shape on the row side.
    pub fn row_highest(shape: &Partition) -> Self {
        WeightVector(shape.transpose().0.iter().map(|&c| c as i64).collect())
    }

    /// Weight of the matching vector on the dual column side: the negated
    /// column lengths, lowest index first.
    pub fn col_highest(shape: &Partition) -> Self {
        WeightVector(shape.transpose().0.iter().map(|&c| -(c as i64)).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

/// Row and column weights of a bi-homogeneous element.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiWeight {
    pub row: WeightVector,
    pub col: WeightVector,
}

impl BiWeight {
    /// The bi-weight carried by a highest weight vector of type `b`.
    pub fn highest(b: &BiShape) -> Self {
        BiWeight {
            row: WeightVector::row_highest(&b.row),
            col: WeightVector::col_highest(&b.col),
        }
    }

    pub fn trimmed(self) -> Self {
        BiWeight { row: self.row.trimmed(), col: self.col.trimmed() }
    }
}

impl fmt::Display for BiWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.row, self.col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn construction_and_display() {
        assert_eq!(p(&[4, 1, 1, 0, 0]).parts(), &[4, 1, 1]);
        assert!(Partition::new(alloc::vec![1, 2]).is_err());
        assert_eq!(p(&[4, 1, 1]).to_string(), "(4,1,1)");
        assert_eq!("4,1,1".parse::<Partition>().unwrap(), p(&[4, 1, 1]));
        assert_eq!("[3,3]".parse::<Partition>().unwrap(), p(&[3, 3]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        let b: BiShape = "(4,2|6)".parse().unwrap();
        assert_eq!(b.to_string(), "(4,2|6)");
        assert_eq!(b.mirror().to_string(), "(6|4,2)");
    }

    #[test]
    fn transpose_and_admissibility() {
        assert_eq!(p(&[4, 1, 1]).transpose(), p(&[3, 1, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert!(p(&[4, 1, 1]).is_admissible(2, 3));
        assert!(!p(&[2, 1, 1]).is_admissible(2, 2));
        assert_eq!(p(&[3, 3]).admissible_degree(2), Some(3));
        assert_eq!(p(&[1, 1, 1]).admissible_degree(1), Some(3));
        assert_eq!(p(&[1, 1, 1, 1]).admissible_degree(2), None);
    }

    #[test]
    fn enumeration_order() {
        let all: Vec<String> = Partition::all(4, 4, 4).iter().map(|p| p.to_string()).collect();
        assert_eq!(all, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(Partition::admissible(2, 2).len(), 3);
        // partitions of 12 into at most 6 parts
        assert_eq!(Partition::admissible(2, 6).len(), 58);
    }

    #[test]
    fn highest_weights() {
        let b: BiShape = "(3,3|4,1,1)".parse().unwrap();
        let w = BiWeight::highest(&b);
        assert_eq!(w.row.0, [2, 2, 2]);
        assert_eq!(w.col.0, [-3, -1, -1, -1]);
    }
}
