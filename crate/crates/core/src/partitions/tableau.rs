use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{predecessors, Partition};
use crate::error::{Error, Result};

/// A filling of a Young diagram with positive integers, stored row by row.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidInput("tableau with an empty row".into()));
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidInput("tableau entries are positive".into()));
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entries in reading order (row by row, left to right).
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The filling `1..N` in reading order.
    pub fn row_filling(shape: &Partition) -> Tableau {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                (0..p)
                    .map(|_| {
                        next += 1;
                        next
                    })
                    .collect()
            })
            .collect();
        Tableau { shape: shape.clone(), rows }
    }

    /// True when the entries are exactly `1..N`, each once.
    pub fn is_numbering(&self) -> bool {
        let mut seen = vec![false; self.size()];
        for &x in self.rows.iter().flatten() {
            let i = x as usize;
            if i == 0 || i > seen.len() || seen[i - 1] {
                return false;
            }
            seen[i - 1] = true;
        }
        true
    }

    /// Filling built from a chain `() = λ^0 ⊂ λ^1 ⊂ ... ⊂ λ^d` of horizontal
    /// strips of size `t`: the boxes of the k-th strip get the labels
    /// `(k-1)t+1 .. kt`, left to right. Consecutive blocks of `t` labels then
    /// sit in distinct columns.
    pub fn strip_filling(chain: &[Partition], t: u32) -> Result<Tableau> {
        let top = chain.last().cloned().unwrap_or_default();
        let mut rows: Vec<Vec<u32>> = top.parts().iter().map(|&p| vec![0; p as usize]).collect();
        let mut label = 0;
        let mut prev = Partition::empty();
        for step in chain.iter().filter(|s| !s.is_empty()) {
            if step.size() != prev.size() + t {
                return Err(Error::InvalidInput("chain steps must add t boxes".into()));
            }
            let mut strip: Vec<(usize, usize)> = Vec::new();
            for i in 0..step.rows() {
                if prev.part(i) > step.part(i) || (i > 0 && step.part(i) > prev.part(i - 1)) {
                    return Err(Error::InvalidInput("chain step is not a horizontal strip".into()));
                }
                for j in prev.part(i)..step.part(i) {
                    strip.push((i, j as usize));
                }
            }
            strip.sort_by_key(|&(i, j)| (j, i));
            for (i, j) in strip {
                if i >= rows.len() || j >= rows[i].len() {
                    return Err(Error::InvalidInput("chain does not end at its last shape".into()));
                }
                label += 1;
                rows[i][j] = label;
            }
            prev = step.clone();
        }
        if prev != top || rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidInput("chain does not fill the shape".into()));
        }
        Ok(Tableau { shape: top, rows })
    }

    /// Strip fillings for up to `limit` predecessor chains of `λ`, starting
    /// from the chain that always takes the first predecessor.
    pub fn strip_fillings(lambda: &Partition, t: u32, limit: usize) -> Result<Vec<Tableau>> {
        lambda.require_admissible(t)?;
        let mut chains = Vec::new();
        let mut cur = vec![lambda.clone()];
        collect_chains(t, &mut cur, &mut chains, limit)?;
        chains
            .into_iter()
            .map(|mut c| {
                c.reverse();
                Tableau::strip_filling(&c, t)
            })
            .collect()
    }
}

fn collect_chains(t: u32, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>, limit: usize) -> Result<()> {
    if out.len() >= limit {
        return Ok(());
    }
    let last = cur.last().cloned().unwrap_or_default();
    if last.is_empty() {
        out.push(cur.clone());
        return Ok(());
    }
    for a in predecessors(&last, t)? {
        cur.push(a);
        collect_chains(t, cur, out, limit)?;
        cur.pop();
    }
    Ok(())
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                s.push('/');
            }
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    s.push(',');
                }
                s.push_str(&alloc::format!("{x}"));
            }
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn row_filling_is_reading_order() {
        let t = Tableau::row_filling(&p(&[3, 1]));
        assert_eq!(t.rows(), &[vec![1, 2, 3], vec![4]]);
        assert!(t.is_numbering());
        assert_eq!(t.to_string(), "1,2,3/4");
    }

    #[test]
    fn strip_filling_blocks_in_distinct_columns() {
        let t = Tableau::strip_fillings(&p(&[4, 1, 1]), 2, 10).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].rows(), &[vec![1, 2, 4, 6], vec![3], vec![5]]);
        let many = Tableau::strip_fillings(&p(&[4, 2]), 2, 10).unwrap();
        assert_eq!(many.len(), 3);
        assert!(many.iter().all(Tableau::is_numbering));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(vec![vec![0]]).is_err());
        assert!(Tableau::strip_filling(&[p(&[1, 1])], 2).is_err());
    }
}
