use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::Partition;
use crate::error::{Error, Result};

/// The `(t,d-1)`-admissible shapes `α` with `λ/α` a horizontal strip of `t`
/// boxes, descending lexicographic. `λ` must be `(t,d)`-admissible, `d >= 1`.
pub fn predecessors(lambda: &Partition, t: u32) -> Result<Vec<Partition>> {
    let d = lambda.require_admissible(t)?;
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for alpha in strips_removed(lambda, t) {
        if alpha.rows() < d as usize {
            out.push(alpha);
        }
    }
    Ok(out)
}

/// Shapes obtained from `alpha` by adding a horizontal strip of `t` boxes,
/// descending lexicographic. For `(t,d)`-admissible `alpha` these are exactly
/// the `(t,d+1)`-admissible shapes having `alpha` as a predecessor.
pub fn successors(alpha: &Partition, t: u32) -> Vec<Partition> {
    let k = alpha.rows();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k + 1);
    add_strip(alpha, 0, t, k + 1, &mut cur, &mut out);
    out
}

/// [`successors`] with first part at most `max_row_length`.
pub fn successors_bounded(alpha: &Partition, t: u32, max_row_length: u32) -> Vec<Partition> {
    let mut out = successors(alpha, t);
    out.retain(|l| l.first() <= max_row_length);
    out
}

fn add_strip(a: &Partition, i: usize, left: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if i == len {
        if left == 0 {
            out.push(Partition::from_sorted(cur.clone()));
        }
        return;
    }
    let lo = a.part(i);
    let hi = if i == 0 { lo + left } else { a.part(i - 1).min(lo + left) };
    for v in (lo..=hi).rev() {
        cur.push(v);
        add_strip(a, i + 1, left - (v - lo), len, cur, out);
        cur.pop();
    }
}

/// All `α ⊆ λ` with `λ/α` a horizontal strip of size `t`, descending lex.
fn strips_removed(lambda: &Partition, t: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(lambda.rows());
    remove_strip(lambda, 0, t, &mut cur, &mut out);
    out
}

fn remove_strip(l: &Partition, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if i == l.rows() {
        if left == 0 {
            out.push(Partition::from_sorted(cur.clone()));
        }
        return;
    }
    let hi = l.part(i);
    let lo = l.part(i + 1).max(hi.saturating_sub(left));
    for v in (lo..=hi).rev() {
        cur.push(v);
        remove_strip(l, i + 1, left - (hi - v), cur, out);
        cur.pop();
    }
}

/// Memo table for multiplicities in `⊗^d(∧^t V)`, confined to one owner.
#[derive(Debug, Clone)]
pub struct MultiplicityCache {
    t: u32,
    memo: BTreeMap<Partition, u128>,
}

impl MultiplicityCache {
    pub fn new(t: u32) -> Self {
        MultiplicityCache { t, memo: BTreeMap::new() }
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Multiplicity of `λ` in `⊗^d(∧^t V)`, assuming `dim V >= λ_1`.
    pub fn get(&mut self, lambda: &Partition) -> Result<u128> {
        lambda.require_admissible(self.t)?;
        self.rec(lambda)
    }

    fn rec(&mut self, lambda: &Partition) -> Result<u128> {
        if lambda.is_empty() {
            return Ok(1);
        }
        if let Some(&n) = self.memo.get(lambda) {
            return Ok(n);
        }
        let mut total: u128 = 0;
        for alpha in predecessors(lambda, self.t)? {
            let n = self.rec(&alpha)?;
            total = total.checked_add(n).ok_or(Error::Overflow("tensor multiplicity"))?;
        }
        self.memo.insert(lambda.clone(), total);
        Ok(total)
    }
}

/// Multiplicity of `λ` in `⊗^d(∧^t V)`.
pub fn tensor_multiplicity(lambda: &Partition, t: u32) -> Result<u128> {
    MultiplicityCache::new(t).get(lambda)
}

/// Adds `cols` to each of the first `d` rows (padding with zeros).
pub fn trivial_extension(lambda: &Partition, d: u32, cols: u32) -> Result<Partition> {
    if lambda.rows() > d as usize {
        return Err(Error::InvalidInput(alloc::format!(
            "{lambda} has more than {d} rows"
        )));
    }
    Ok(Partition::from_sorted((0..d as usize).map(|i| lambda.part(i) + cols).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn names(v: &[Partition]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn predecessor_lists() {
        assert_eq!(names(&predecessors(&p(&[6, 2]), 2).unwrap()), ["(6)", "(5,1)", "(4,2)"]);
        assert_eq!(names(&predecessors(&p(&[7, 1]), 2).unwrap()), ["(6)", "(5,1)"]);
        assert_eq!(names(&predecessors(&p(&[3, 3]), 2).unwrap()), ["(3,1)"]);
        assert_eq!(names(&predecessors(&p(&[4, 1, 1]), 2).unwrap()), ["(3,1)"]);
        assert_eq!(names(&predecessors(&p(&[2]), 2).unwrap()), ["()"]);
        assert!(predecessors(&p(&[2, 1, 1]), 2).is_err());
    }

    #[test]
    fn successor_lists() {
        assert_eq!(names(&successors(&p(&[3, 1]), 2)), ["(5,1)", "(4,2)", "(4,1,1)", "(3,3)", "(3,2,1)"]);
        assert_eq!(names(&successors(&Partition::empty(), 3)), ["(3)"]);
        assert_eq!(names(&successors(&p(&[2]), 2)), ["(4)", "(3,1)", "(2,2)"]);
        assert_eq!(names(&successors_bounded(&p(&[2]), 2, 2)), ["(2,2)"]);
    }

    #[test]
    fn multiplicities() {
        // f^μ for the single-type shapes of degree 3, t = 2
        assert_eq!(tensor_multiplicity(&p(&[6]), 2).unwrap(), 1);
        assert_eq!(tensor_multiplicity(&p(&[4, 2]), 2).unwrap(), 3);
        assert_eq!(tensor_multiplicity(&p(&[3, 2, 1]), 2).unwrap(), 2);
        // t = 1 gives standard tableaux counts of the transpose
        assert_eq!(tensor_multiplicity(&p(&[3, 2, 1]), 1).unwrap(), 16);
        assert_eq!(tensor_multiplicity(&Partition::empty(), 2).unwrap(), 1);
    }

    #[test]
    fn extension() {
        assert_eq!(trivial_extension(&p(&[2, 1]), 3, 2).unwrap(), p(&[4, 3, 2]));
        assert!(trivial_extension(&p(&[1, 1, 1]), 2, 1).is_err());
    }
}
