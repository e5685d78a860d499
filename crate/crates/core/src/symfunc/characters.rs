//! Irreducible characters of symmetric groups by the Murnaghan–Nakayama rule.
//! Labels here are the usual ones (one-row shape is the trivial character).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::partitions::Partition;

/// Full character table of `S_n`: `value(λ, ρ) = χ^λ(ρ)`.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    parts: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Self {
        let parts = Partition::all(n, n as usize, n);
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut values = alloc::vec![alloc::vec![0i64; parts.len()]; parts.len()];
        for (j, rho) in parts.iter().enumerate() {
            let mut memo = BTreeMap::new();
            for (i, lambda) in parts.iter().enumerate() {
                values[i][j] = mn(lambda, rho.parts(), &mut memo);
            }
        }
        CharacterTable { parts, index, values }
    }

    /// Partitions of `n`, descending lexicographic; rows and columns follow this order.
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> Option<i64> {
        Some(self.values[self.index_of(lambda)?][self.index_of(rho)?])
    }

    pub fn value_at(&self, i: usize, j: usize) -> i64 {
        self.values[i][j]
    }
}

/// `χ^λ(ρ)` for `|λ| = |ρ|`; zero when the sizes differ.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    if lambda.size() != rho.size() {
        return 0;
    }
    mn(lambda, rho.parts(), &mut BTreeMap::new())
}

fn mn(lambda: &Partition, rho: &[u32], memo: &mut BTreeMap<(Partition, usize), i64>) -> i64 {
    if rho.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.clone(), rho.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = rho[0];
    let mut total = 0;
    for (mu, sign) in remove_rim_hooks(lambda, k) {
        total += sign * mn(&mu, &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// All shapes obtained by removing a rim hook of length `k`, with the sign
/// `(-1)^(height)`. Works on beta-numbers: a hook is a bead moved down by `k`.
pub(crate) fn remove_rim_hooks(lambda: &Partition, k: u32) -> Vec<(Partition, i64)> {
    let l = lambda.rows();
    let beta: Vec<i64> = (0..l).map(|i| lambda.part(i) as i64 + (l - 1 - i) as i64).collect();
    let k = k as i64;
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - k;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nbeta
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (l - 1 - j) as i64) as u32)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_sorted(parts), sign));
    }
    out
}

/// `z_ρ = ∏ i^{m_i} m_i!`, the centralizer order of cycle type `ρ`.
pub fn z_factor(rho: &Partition) -> BigInt {
    let mut z = BigInt::from(1u32);
    for (part, count) in rho.part_counts() {
        for c in 1..=count {
            z *= BigInt::from(part) * BigInt::from(c);
        }
    }
    z
}
