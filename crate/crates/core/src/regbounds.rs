//! Closed formulas: regularity of the algebra of minors, the bound on the
//! degree of a minimal relation, and the Hilbert function of the algebra.

use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfunc::dim_schur_big;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RegCase {
    /// `m + n - 1 < ⌊mn/t⌋`.
    I,
    II,
    /// `t = 1`, `n <= t + 1` or `t = m` (after `m <= n`): the formula does not apply.
    Excluded,
}

impl fmt::Display for RegCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegCase::I => "i",
            RegCase::II => "ii",
            RegCase::Excluded => "excluded",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Regularity {
    /// Format after swapping so that `m <= n`.
    pub t: u32,
    pub m: u32,
    pub n: u32,
    pub case: RegCase,
    pub k0: Option<i64>,
    pub reg: Option<u64>,
}

fn normalize(t: u32, m: u32, n: u32) -> Result<(u32, u32)> {
    let (m, n) = (m.min(n), m.max(n));
    if t == 0 || t > m {
        return Err(Error::OutOfRange(alloc::format!("need 1 <= t <= min(m, n); got t={t}, {m} x {n}")));
    }
    Ok((m, n))
}

/// Neither `J_t = 0` (`t = 1` or `n <= t + 1`) nor the Grassmannian `t = m`.
fn excluded(t: u32, m: u32, n: u32) -> bool {
    t == 1 || n <= t + 1 || t == m
}

/// Castelnuovo–Mumford regularity of the algebra generated by the
/// `t`-minors of an `m × n` matrix.
pub fn regularity(t: u32, m: u32, n: u32) -> Result<Regularity> {
    let (m, n) = normalize(t, m, n)?;
    let mut r = Regularity { t, m, n, case: RegCase::Excluded, k0: None, reg: None };
    if excluded(t, m, n) {
        return Ok(r);
    }
    let (ti, mi, ni) = (t as i64, m as i64, n as i64);
    let mn = mi * ni;
    if mi + ni - 1 < Integer::div_floor(&mn, &ti) {
        r.case = RegCase::I;
        r.reg = Some((mn - Integer::div_ceil(&mn, &ti)) as u64);
    } else {
        let k0 = Integer::div_ceil(&(ti * mi + ti * ni - mn), &(mi - ti));
        r.case = RegCase::II;
        r.k0 = Some(k0);
        r.reg = Some((mn - Integer::div_floor(&(mi * (ni + k0)), &ti)) as u64);
    }
    Ok(r)
}

/// Upper bound for the degree of a minimal relation among `t`-minors of an
/// `m × n` matrix (`m <= n`): 0 when there are no relations, 2 for maximal
/// minors, and `m(m+t) - m - ⌊m²/t⌋ + 1` otherwise. The last value does not
/// depend on `n`, in line with the reduction to `n = m + t`.
pub fn degree_bound(t: u32, m: u32, n: u32) -> Result<u64> {
    let (m, n) = normalize(t, m, n)?;
    if t == 1 || n <= t + 1 {
        return Ok(0);
    }
    if t == m {
        return Ok(2);
    }
    let (t, m) = (t as u64, m as u64);
    Ok(m * (m + t) - m - (m * m) / t + 1)
}

/// `dim (A_t)_d` for an `m × n` matrix: the sum over `(t,d)`-admissible `λ`
/// of `dim L_λ(k^m) · dim L_λ(k^n)`.
pub fn hilbert_at(t: u32, m: u32, n: u32, d: u32) -> Result<u128> {
    if t == 0 {
        return Err(Error::OutOfRange("t must be positive".into()));
    }
    let mut total = BigUint::from(0u32);
    for lambda in Partition::admissible(t, d) {
        total += dim_schur_big(&lambda, m) * dim_schur_big(&lambda, n);
    }
    total.to_u128().ok_or(Error::Overflow("Hilbert function value"))
}

/// Compares the Hilbert functions of `A_t(n,n)` and `A_{n-t}(n,n)` up to
/// degree `dmax`.
pub fn duality_check(t: u32, n: u32, dmax: u32) -> Result<bool> {
    if t == 0 || t >= n {
        return Err(Error::OutOfRange(alloc::format!("need 1 <= t < n; got t={t}, n={n}")));
    }
    for d in 0..=dmax {
        if hilbert_at(t, n, n, d)? != hilbert_at(n - t, n, n, d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regularity_values() {
        let r = regularity(2, 3, 4).unwrap();
        assert_eq!((r.case, r.k0, r.reg), (RegCase::II, Some(2), Some(3)));
        let r = regularity(2, 4, 4).unwrap();
        assert_eq!((r.case, r.reg), (RegCase::I, Some(8)));
        for m in 3..=8 {
            assert_eq!(regularity(m - 1, m, m + 1).unwrap().reg, Some(m as u64));
        }
        assert_eq!(regularity(1, 3, 5).unwrap().case, RegCase::Excluded);
        assert_eq!(regularity(3, 3, 5).unwrap().case, RegCase::Excluded);
        assert_eq!(regularity(2, 4, 3).unwrap(), regularity(2, 3, 4).unwrap());
        assert!(regularity(4, 3, 5).is_err());
    }

    #[test]
    fn degree_bounds() {
        for n in 6..12 {
            assert_eq!(degree_bound(2, 4, n).unwrap(), 13);
        }
        assert_eq!(degree_bound(2, 3, 5).unwrap(), 9);
        assert_eq!(degree_bound(2, 2, 3).unwrap(), 0);
        assert_eq!(degree_bound(2, 2, 5).unwrap(), 2);
        assert_eq!(degree_bound(1, 4, 4).unwrap(), 0);
    }

    #[test]
    fn hilbert_values() {
        assert_eq!(hilbert_at(2, 3, 4, 2).unwrap(), 165);
        assert_eq!(hilbert_at(2, 3, 3, 1).unwrap(), 9);
        for d in 0..6u32 {
            let d = d as u128;
            assert_eq!(hilbert_at(2, 2, 3, d as u32).unwrap(), (d + 2) * (d + 1) / 2);
        }
    }

    #[test]
    fn duality() {
        assert!(duality_check(2, 5, 4).unwrap());
        for n in 2..=6 {
            for t in 1..n {
                assert!(duality_check(t, n, 4).unwrap());
            }
        }
        assert!(duality_check(3, 3, 1).is_err());
    }
}
