//! Exact symmetric-function arithmetic: characters, power sums, plethysm of
//! Schur functors with exterior powers, and the bi-shape multiplicities of
//! the symmetric algebra on `∧^t V ⊗ ∧^t W*`.
//!
//! Shapes passed in and out use the exterior convention of
//! [`crate::partitions`]. The only place where shapes are converted to usual
//! Schur labels is [`to_schur_label`].

mod characters;
mod dims;
mod plethysm;

pub use characters::{character, z_factor, CharacterTable};
pub use dims::{dim_schur, dim_schur_big};
pub use plethysm::{
    mult_in_j, mult_in_s, plethysm_exterior, power_sums_to_schur, quadratic_kernel_shapes,
    schur_to_power_sums, sym_power_exterior, tensor_power_exterior, PowerSumExpansion, SymFunc,
};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::partitions::Partition;

/// Converts a shape in the exterior convention to the usual Schur label.
/// The conversion is a transpose, so it is also its own inverse.
pub fn to_schur_label(shape: &Partition) -> Partition {
    shape.transpose()
}

/// A nonnegative integer combination of irreducibles, sorted descending
/// lexicographic by shape, zero terms dropped.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurExpansion {
    terms: Vec<(Partition, u64)>,
}

impl SchurExpansion {
    pub fn from_terms(mut terms: Vec<(Partition, u64)>) -> Self {
        terms.retain(|(_, m)| *m > 0);
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(Partition, u64)> = Vec::with_capacity(terms.len());
        for (p, m) in terms {
            match merged.last_mut() {
                Some((q, n)) if *q == p => *n += m,
                _ => merged.push((p, m)),
            }
        }
        SchurExpansion { terms: merged }
    }

    pub fn terms(&self) -> &[(Partition, u64)] {
        &self.terms
    }

    pub fn mult(&self, shape: &Partition) -> u64 {
        self.terms
            .iter()
            .find(|(p, _)| p == shape)
            .map_or(0, |(_, m)| *m)
    }

    pub fn shapes(&self) -> impl Iterator<Item = &Partition> {
        self.terms.iter().map(|(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Dimension of the represented module over a space of dimension `n`.
    pub fn dim(&self, n: u32) -> u128 {
        self.terms.iter().map(|(p, m)| *m as u128 * dim_schur(p, n)).sum()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (i, (p, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            if *m != 1 {
                s.push_str(&alloc::format!("{m}"));
            }
            s.push_str(&alloc::format!("{p}"));
        }
        f.write_str(&s)
    }
}
