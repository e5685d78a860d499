use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::characters::{z_factor, CharacterTable};
use super::{to_schur_label, SchurExpansion};
use crate::error::{Error, Result};
use crate::partitions::{BiShape, Partition};

/// A rational combination of power-sum products `p_ρ`, keyed by `ρ`.
pub type PowerSumExpansion = BTreeMap<Partition, BigRational>;

fn merge_parts(a: &Partition, b: &Partition) -> Partition {
    let mut v: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    Partition::from_sorted(v)
}

fn add_into(acc: &mut PowerSumExpansion, key: Partition, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(key).or_insert_with(BigRational::zero);
    *e += c;
}

/// Engine holding character tables and plethysm results.
///
/// Memo tables live in the engine and are only reachable through `&mut self`,
/// so an engine is confined to one caller at a time.
#[derive(Debug, Clone)]
pub struct SymFunc {
    cap: u32,
    tables: BTreeMap<u32, CharacterTable>,
    pleth: BTreeMap<(Partition, u32), SchurExpansion>,
}

impl Default for SymFunc {
    fn default() -> Self {
        SymFunc::new()
    }
}

impl SymFunc {
    /// Largest `t·d` handled without raising the cap.
    pub const DEFAULT_CAP: u32 = 12;

    pub fn new() -> Self {
        SymFunc::with_cap(Self::DEFAULT_CAP)
    }

    pub fn with_cap(cap: u32) -> Self {
        SymFunc { cap, tables: BTreeMap::new(), pleth: BTreeMap::new() }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    fn check_cap(&self, n: u32) -> Result<()> {
        if n > self.cap {
            return Err(Error::CapExceeded {
                what: "plethysm degree t*d",
                needed: n as u64,
                cap: self.cap as u64,
            });
        }
        Ok(())
    }

    /// Seeds the plethysm memo, e.g. from an on-disk cache. The entry is
    /// trusted as given.
    pub fn preload(&mut self, mu: Partition, t: u32, e: SchurExpansion) {
        self.pleth.insert((mu, t), e);
    }

    /// Every memoized plethysm as `(μ, t, L_μ(∧^t V))`.
    pub fn plethysms(&self) -> impl Iterator<Item = (&Partition, u32, &SchurExpansion)> {
        self.pleth.iter().map(|((mu, t), e)| (mu, *t, e))
    }

    pub fn table(&mut self, n: u32) -> &CharacterTable {
        self.tables.entry(n).or_insert_with(|| CharacterTable::new(n))
    }

    /// Expansion of `s_λ` (usual labels) in power sums.
    pub fn schur_to_power_sums(&mut self, lambda: &Partition) -> PowerSumExpansion {
        let tab = self.table(lambda.size());
        let i = tab.index_of(lambda).expect("partition of the table size");
        let mut out = PowerSumExpansion::new();
        for (j, rho) in tab.partitions().iter().enumerate() {
            let chi = tab.value_at(i, j);
            if chi != 0 {
                out.insert(rho.clone(), BigRational::new(BigInt::from(chi), z_factor(rho)));
            }
        }
        out
    }

    /// Coefficients in the Schur basis (usual labels) of a homogeneous
    /// power-sum expansion of degree `n`. The result may have any sign.
    pub fn power_sums_to_schur(&mut self, f: &PowerSumExpansion, n: u32) -> Vec<(Partition, BigRational)> {
        let tab = self.table(n);
        let mut out = Vec::new();
        for (i, kappa) in tab.partitions().iter().enumerate() {
            let mut c = BigRational::zero();
            for (rho, coeff) in f {
                if let Some(j) = tab.index_of(rho) {
                    let chi = tab.value_at(i, j);
                    if chi != 0 {
                        c += coeff * BigRational::from_integer(BigInt::from(chi));
                    }
                }
            }
            if !c.is_zero() {
                out.push((kappa.clone(), c));
            }
        }
        out
    }

    /// `p_k[e_t]` in power sums.
    fn pk_of_et(&mut self, k: u32, t: u32) -> PowerSumExpansion {
        let tab = self.table(t);
        let mut out = PowerSumExpansion::new();
        for sigma in tab.partitions() {
            let sign = if (t as usize - sigma.rows()) % 2 == 0 { 1 } else { -1 };
            let scaled = Partition::from_sorted(sigma.parts().iter().map(|&x| x * k).collect());
            out.insert(scaled, BigRational::new(BigInt::from(sign), z_factor(sigma)));
        }
        out
    }

    fn to_expansion(&mut self, f: &PowerSumExpansion, n: u32) -> Result<SchurExpansion> {
        let mut terms = Vec::new();
        for (kappa, c) in self.power_sums_to_schur(f, n) {
            if !c.is_integer() || c.is_negative() {
                return Err(Error::Internal(alloc::format!(
                    "non-integral or negative Schur coefficient {c} at {kappa}"
                )));
            }
            let m = c.to_integer().to_u64().ok_or(Error::Overflow("Schur multiplicity"))?;
            terms.push((to_schur_label(&kappa), m));
        }
        Ok(SchurExpansion::from_terms(terms))
    }

    /// Decomposition of `L_μ(∧^t V)` into irreducibles `L_λ V`.
    pub fn plethysm_exterior(&mut self, mu: &Partition, t: u32) -> Result<SchurExpansion> {
        if t == 0 {
            return Err(Error::InvalidInput("t must be positive".into()));
        }
        let d = mu.size();
        let n = t * d;
        self.check_cap(n)?;
        let key = (mu.clone(), t);
        if let Some(e) = self.pleth.get(&key) {
            return Ok(e.clone());
        }
        let nu = to_schur_label(mu);
        let outer = self.schur_to_power_sums(&nu);
        let mut pk: BTreeMap<u32, PowerSumExpansion> = BTreeMap::new();
        let mut total = PowerSumExpansion::new();
        for (rho, w) in &outer {
            let mut prod = PowerSumExpansion::new();
            prod.insert(Partition::empty(), w.clone());
            for &k in rho.parts() {
                if !pk.contains_key(&k) {
                    let e = self.pk_of_et(k, t);
                    pk.insert(k, e);
                }
                let factor = &pk[&k];
                let mut next = PowerSumExpansion::new();
                for (a, ca) in &prod {
                    for (b, cb) in factor {
                        add_into(&mut next, merge_parts(a, b), ca * cb);
                    }
                }
                prod = next;
            }
            for (k, c) in prod {
                add_into(&mut total, k, c);
            }
        }
        total.retain(|_, c| !c.is_zero());
        let e = self.to_expansion(&total, n)?;
        self.pleth.insert(key, e.clone());
        Ok(e)
    }

    /// `Sym^d(∧^t V)`, which is `L_{(1^d)}(∧^t V)`.
    pub fn sym_power_exterior(&mut self, d: u32, t: u32) -> Result<SchurExpansion> {
        self.plethysm_exterior(&Partition::column(d), t)
    }

    /// `⊗^d(∧^t V)` computed from characters alone: `e_t^d` in power sums.
    pub fn tensor_power_exterior(&mut self, t: u32, d: u32) -> Result<SchurExpansion> {
        if t == 0 {
            return Err(Error::InvalidInput("t must be positive".into()));
        }
        let n = t * d;
        self.check_cap(n)?;
        let et = self.pk_of_et(1, t);
        let mut prod = PowerSumExpansion::new();
        prod.insert(Partition::empty(), BigRational::one());
        for _ in 0..d {
            let mut next = PowerSumExpansion::new();
            for (a, ca) in &prod {
                for (b, cb) in &et {
                    add_into(&mut next, merge_parts(a, b), ca * cb);
                }
            }
            prod = next;
        }
        self.to_expansion(&prod, n)
    }

    /// Multiplicity of `L_λ V` in `L_μ(∧^t V)`.
    pub fn mult_in_plethysm(&mut self, lambda: &Partition, mu: &Partition, t: u32) -> Result<u64> {
        if lambda.size() != t * mu.size() {
            return Ok(0);
        }
        Ok(self.plethysm_exterior(mu, t)?.mult(lambda))
    }

    /// Multiplicity of `L_γ V ⊗ L_λ W*` in `Sym^d(∧^t V ⊗ ∧^t W*)`; zero when
    /// either side is not `(t,d)`-admissible for a common `d`.
    pub fn mult_in_s(&mut self, b: &BiShape, t: u32) -> Result<u64> {
        let Some(d) = b.admissible_degree(t) else {
            return Ok(0);
        };
        let mut total = 0u64;
        for mu in Partition::all(d, d as usize, d) {
            let e = self.plethysm_exterior(&mu, t)?;
            total += e.mult(&b.row) * e.mult(&b.col);
        }
        Ok(total)
    }

    /// Multiplicity in the kernel: symmetric shapes lose the one copy that
    /// survives in the coordinate ring.
    pub fn mult_in_j(&mut self, b: &BiShape, t: u32) -> Result<u64> {
        let s = self.mult_in_s(b, t)?;
        Ok(if b.is_symmetric() { s.saturating_sub(1) } else { s })
    }
}

/// `s_λ` (usual labels) in power sums.
pub fn schur_to_power_sums(lambda: &Partition) -> PowerSumExpansion {
    SymFunc::with_cap(u32::MAX).schur_to_power_sums(lambda)
}

/// Schur coefficients (usual labels) of a degree-`n` power-sum expansion.
pub fn power_sums_to_schur(f: &PowerSumExpansion, n: u32) -> Vec<(Partition, BigRational)> {
    SymFunc::with_cap(u32::MAX).power_sums_to_schur(f, n)
}

/// [`SymFunc::plethysm_exterior`] on a fresh engine with the default cap.
pub fn plethysm_exterior(mu: &Partition, t: u32) -> Result<SchurExpansion> {
    SymFunc::new().plethysm_exterior(mu, t)
}

/// [`SymFunc::sym_power_exterior`] on a fresh engine with the default cap.
pub fn sym_power_exterior(d: u32, t: u32) -> Result<SchurExpansion> {
    SymFunc::new().sym_power_exterior(d, t)
}

/// [`SymFunc::tensor_power_exterior`] on a fresh engine with the default cap.
pub fn tensor_power_exterior(t: u32, d: u32) -> Result<SchurExpansion> {
    SymFunc::new().tensor_power_exterior(t, d)
}

/// [`SymFunc::mult_in_s`] on a fresh engine with the default cap.
pub fn mult_in_s(b: &BiShape, t: u32) -> Result<u64> {
    SymFunc::new().mult_in_s(b, t)
}

/// [`SymFunc::mult_in_j`] on a fresh engine with the default cap.
pub fn mult_in_j(b: &BiShape, t: u32) -> Result<u64> {
    SymFunc::new().mult_in_j(b, t)
}

/// The bi-shapes `(τ_u|τ_v)` with `u + v` even and `u ≠ v`, where
/// `τ_u = (t+u, t-u)`. These are the shapes of the degree-2 kernel.
pub fn quadratic_kernel_shapes(t: u32) -> Vec<BiShape> {
    let tau = |u: u32| Partition::from_sorted(alloc::vec![t + u, t - u]);
    let mut out = Vec::new();
    for u in 0..=t {
        for v in 0..=t {
            if u != v && (u + v) % 2 == 0 {
                out.push(BiShape::new(tau(u), tau(v)));
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn exterior_square_of_exterior_square() {
        let e = plethysm_exterior(&p(&[2]), 2).unwrap();
        assert_eq!(e.to_string(), "(3,1)");
        let s = sym_power_exterior(2, 2).unwrap();
        assert_eq!(s.to_string(), "(4) + (2,2)");
    }

    #[test]
    fn roundtrip_small() {
        let mut sf = SymFunc::new();
        for lambda in Partition::all(5, 5, 5) {
            let ps = sf.schur_to_power_sums(&lambda);
            let back = sf.power_sums_to_schur(&ps, 5);
            assert_eq!(back.len(), 1);
            assert_eq!(back[0].0, lambda);
            assert!(back[0].1.is_one());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = plethysm_exterior(&p(&[7]), 2).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { needed: 14, cap: 12, .. }));
        assert!(SymFunc::with_cap(14).plethysm_exterior(&p(&[7]), 2).is_ok());
    }

    #[test]
    fn kernel_shapes_t2() {
        let s: Vec<_> = quadratic_kernel_shapes(2).iter().map(|b| b.to_string()).collect();
        assert_eq!(s, ["(4|2,2)", "(2,2|4)"]);
        assert_eq!(quadratic_kernel_shapes(1).len(), 0);
    }

    #[test]
    fn multiplicities_in_s() {
        assert_eq!(mult_in_s(&"(4,1|5)".parse().unwrap(), 2).unwrap(), 0);
        assert_eq!(mult_in_s(&"(3,3|4,1,1)".parse().unwrap(), 2).unwrap(), 1);
        assert_eq!(mult_in_s(&"(4,2|4,2)".parse().unwrap(), 2).unwrap(), 2);
        assert_eq!(mult_in_j(&"(4,2|4,2)".parse().unwrap(), 2).unwrap(), 1);
        assert_eq!(mult_in_s(&"(6,2|7,1)".parse().unwrap(), 2).unwrap(), 1);
    }
}
