use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::partitions::Partition;

/// Dimension of the irreducible of shape `λ` (exterior convention) over a
/// space of dimension `n`. Zero when `λ_1 > n`.
///
/// # Panics
/// If the dimension does not fit in `u128`; use [`dim_schur_big`] then.
pub fn dim_schur(lambda: &Partition, n: u32) -> u128 {
    dim_schur_big(lambda, n)
        .to_u128()
        .expect("dimension exceeds u128")
}

/// Hook-content formula on the transposed shape, exact.
pub fn dim_schur_big(lambda: &Partition, n: u32) -> BigUint {
    if lambda.first() > n {
        return BigUint::from(0u32);
    }
    let kappa = lambda.transpose();
    let conj = lambda;
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for (i, j) in kappa.boxes() {
        num *= BigUint::from(n as usize + j - i);
        let hook = (kappa.part(i) as usize - j) + (conj.part(j) as usize - i) - 1;
        den *= BigUint::from(hook);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn exterior_and_symmetric_powers() {
        // one row is an exterior power, one column a symmetric power
        assert_eq!(dim_schur(&p(&[2]), 4), 6);
        assert_eq!(dim_schur(&p(&[5]), 4), 0);
        assert_eq!(dim_schur(&p(&[1, 1, 1]), 4), 20);
        assert_eq!(dim_schur(&p(&[3, 1]), 3), 3);
        assert_eq!(dim_schur(&p(&[3, 1]), 4), 15);
        assert_eq!(dim_schur(&p(&[2, 2]), 4), 20);
        assert_eq!(dim_schur(&Partition::empty(), 3), 1);
    }
}
