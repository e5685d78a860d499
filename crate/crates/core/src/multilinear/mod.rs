//! A concrete model of tensor powers of `V`, of `∧^t V`, and of
//! `∧^t V ⊗ ∧^t W*`, with the maps between them used to build highest
//! weight vectors: Young symmetrizers, the successor lift, wedging blocks,
//! pairing a row side with a column side, and symmetrizing into the
//! polynomial ring on minors.
//!
//! Basis vectors are numbered from 1. Coefficients are exact integers.

mod lift;

pub use lift::{successor_lift, young_symmetrizer};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{BiWeight, WeightVector};
use crate::relations::{MinorPolynomial, MinorSymbol};

/// Sorts `v` in place and returns the sign of the sorting permutation, or
/// `None` if two entries are equal.
pub fn sort_sign<T: Ord>(v: &mut [T]) -> Option<i8> {
    let mut sign = 1i8;
    // insertion sort; the inputs are short
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

/// A basis vector `e_{i_1} ∧ ... ∧ e_{i_t}` with `i_1 < ... < i_t`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExtIndex(pub(crate) Vec<u8>);

impl ExtIndex {
    /// Requires strictly increasing positive entries.
    pub fn new(indices: Vec<u8>) -> Result<Self> {
        if indices.contains(&0) || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(alloc::format!(
                "exterior index must be strictly increasing and positive: {indices:?}"
            )));
        }
        Ok(ExtIndex(indices))
    }

    /// Wedge of the listed vectors in the given order: the sorted index and
    /// the sign, or `None` when an index repeats.
    pub fn from_unsorted(indices: &[u8]) -> Option<(ExtIndex, i8)> {
        let mut v = indices.to_vec();
        let s = sort_sign(&mut v)?;
        Some((ExtIndex(v), s))
    }

    /// `{1, ..., k}`.
    pub fn initial(k: u8) -> ExtIndex {
        ExtIndex((1..=k).collect())
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_index(&self) -> u8 {
        self.0.last().copied().unwrap_or(0)
    }

    /// Replaces `from` by `to`, re-sorting with sign. `None` if `from` is
    /// absent or `to` already present.
    pub fn substitute(&self, from: u8, to: u8) -> Option<(ExtIndex, i8)> {
        let pos = self.0.iter().position(|&x| x == from)?;
        if self.0.contains(&to) {
            return None;
        }
        let mut v = self.0.clone();
        v[pos] = to;
        let s = sort_sign(&mut v)?;
        Some((ExtIndex(v), s))
    }

    /// Componentwise `self <= other` (same length).
    pub fn le_componentwise(&self, other: &ExtIndex) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for ExtIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Sparse integer combination of basis tensors keyed by `K`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

/// Element of `⊗^N V`: keys list the basis index in each factor.
pub type TensorElem = Tensor<Vec<u8>>;
/// Element of `⊗^d(∧^t V)`.
pub type ExtTensor = Tensor<Vec<ExtIndex>>;
/// Element of `⊗^d(∧^t V ⊗ ∧^t W*)`; each factor pairs a row and a column index.
pub type BiTensor = Tensor<Vec<(ExtIndex, ExtIndex)>>;

impl<K: Ord> Default for Tensor<K> {
    fn default() -> Self {
        Tensor { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Tensor<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, key: K, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<K, BigInt> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &Tensor<K>, c: &BigInt) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    /// Divides by the content and makes the first coefficient positive.
    pub fn normalized(&self) -> Tensor<K> {
        let mut g = BigInt::zero();
        for v in self.terms.values() {
            g = g.gcd(v);
        }
        let Some(first) = self.terms.values().next() else {
            return self.clone();
        };
        if first.is_negative() {
            g = -g;
        }
        Tensor { terms: self.terms.iter().map(|(k, v)| (k.clone(), v / &g)).collect() }
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigInt)> for Tensor<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigInt)>>(iter: I) -> Self {
        let mut t = Tensor::new();
        for (k, c) in iter {
            t.add_term(k, c);
        }
        t
    }
}

/// Which group acts: `GL(V)` on row indices or `GL(W)` on the dual column
/// indices. Both unipotent radicals are taken so that an invariant prefers
/// low indices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Row,
    Col,
}

/// Keys whose basis indices can be counted and substituted.
pub trait TensorKey: Ord + Clone + fmt::Debug {
    /// Adds the multiplicity of each index on `side` into `counts`.
    fn count_indices(&self, side: Side, counts: &mut Vec<i64>);
    /// The first-order part of a root-group element: every way of replacing
    /// one occurrence of `from` by `to` on `side`, with signs.
    fn substitute(&self, side: Side, from: u8, to: u8) -> Vec<(Self, i8)>;
    fn max_index(&self, side: Side) -> u8;
    /// One factor per line in the debug dump.
    fn render(&self) -> String;
}

fn bump(counts: &mut Vec<i64>, i: u8) {
    let i = i as usize;
    if counts.len() < i {
        counts.resize(i, 0);
    }
    counts[i - 1] += 1;
}

impl TensorKey for Vec<u8> {
    fn count_indices(&self, _: Side, counts: &mut Vec<i64>) {
        for &i in self {
            bump(counts, i);
        }
    }
    fn substitute(&self, _: Side, from: u8, to: u8) -> Vec<(Self, i8)> {
        let mut out = Vec::new();
        for (p, &x) in self.iter().enumerate() {
            if x == from {
                let mut k = self.clone();
                k[p] = to;
                out.push((k, 1));
            }
        }
        out
    }
    fn max_index(&self, _: Side) -> u8 {
        self.iter().copied().max().unwrap_or(0)
    }
    fn render(&self) -> String {
        let parts: Vec<String> = self.iter().map(|x| alloc::format!("({x})")).collect();
        parts.join(" ⊗ ")
    }
}

impl TensorKey for Vec<ExtIndex> {
    fn count_indices(&self, _: Side, counts: &mut Vec<i64>) {
        for e in self {
            for &i in e.indices() {
                bump(counts, i);
            }
        }
    }
    fn substitute(&self, _: Side, from: u8, to: u8) -> Vec<(Self, i8)> {
        let mut out = Vec::new();
        for (p, e) in self.iter().enumerate() {
            if let Some((ne, s)) = e.substitute(from, to) {
                let mut k = self.clone();
                k[p] = ne;
                out.push((k, s));
            }
        }
        out
    }
    fn max_index(&self, _: Side) -> u8 {
        self.iter().map(ExtIndex::max_index).max().unwrap_or(0)
    }
    fn render(&self) -> String {
        let parts: Vec<String> = self.iter().map(|e| alloc::format!("({e})")).collect();
        parts.join(" ⊗ ")
    }
}

impl TensorKey for Vec<(ExtIndex, ExtIndex)> {
    fn count_indices(&self, side: Side, counts: &mut Vec<i64>) {
        for (r, c) in self {
            let e = if side == Side::Row { r } else { c };
            for &i in e.indices() {
                bump(counts, i);
            }
        }
    }
    fn substitute(&self, side: Side, from: u8, to: u8) -> Vec<(Self, i8)> {
        let mut out = Vec::new();
        for (p, (r, c)) in self.iter().enumerate() {
            let e = if side == Side::Row { r } else { c };
            if let Some((ne, s)) = e.substitute(from, to) {
                let mut k = self.clone();
                if side == Side::Row {
                    k[p].0 = ne;
                } else {
                    k[p].1 = ne;
                }
                out.push((k, s));
            }
        }
        out
    }
    fn max_index(&self, side: Side) -> u8 {
        self.iter()
            .map(|(r, c)| if side == Side::Row { r.max_index() } else { c.max_index() })
            .max()
            .unwrap_or(0)
    }
    fn render(&self) -> String {
        let parts: Vec<String> = self.iter().map(|(r, c)| alloc::format!("({r}|{c})")).collect();
        parts.join(" ⊗ ")
    }
}

impl<K: TensorKey> fmt::Display for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in &self.terms {
            writeln!(f, "{c}  {}", k.render())?;
        }
        Ok(())
    }
}

fn side_weight<K: TensorKey>(v: &Tensor<K>, side: Side, negate: bool) -> Result<WeightVector> {
    let mut first: Option<(Vec<i64>, &K)> = None;
    for k in v.terms.keys() {
        let mut counts = Vec::new();
        k.count_indices(side, &mut counts);
        while counts.last() == Some(&0) {
            counts.pop();
        }
        match &first {
            None => first = Some((counts, k)),
            Some((w, k0)) if *w != counts => {
                return Err(Error::InconsistentWeight {
                    first: k0.render(),
                    second: k.render(),
                });
            }
            _ => {}
        }
    }
    let mut w = first.map(|f| f.0).unwrap_or_default();
    if negate {
        w.iter_mut().for_each(|x| *x = -*x);
    }
    Ok(WeightVector(w))
}

/// Weight of a homogeneous element of `⊗^N V` or `⊗^d(∧^t V)`: how often each
/// index occurs. Fails on a mixed-weight element.
pub fn weight_of<K: TensorKey>(v: &Tensor<K>) -> Result<WeightVector> {
    side_weight(v, Side::Row, false)
}

/// Bi-weight of a bi-homogeneous element of `⊗^d(E ⊗ F*)`; the column side
/// carries negated counts.
pub fn bi_weight_of(v: &BiTensor) -> Result<BiWeight> {
    Ok(BiWeight { row: side_weight(v, Side::Row, false)?, col: side_weight(v, Side::Col, true)? })
}

/// True when `v` is killed by the first-order part of every lower (row side)
/// or upper (column side) root group, i.e. by every substitution of an index
/// by a smaller one.
pub fn check_u_invariant<K: TensorKey>(v: &Tensor<K>, side: Side) -> bool {
    let top = v.terms.keys().map(|k| k.max_index(side)).max().unwrap_or(0);
    for from in 2..=top {
        for to in 1..from {
            let mut acc: BTreeMap<K, BigInt> = BTreeMap::new();
            for (k, c) in &v.terms {
                for (nk, s) in k.substitute(side, from, to) {
                    *acc.entry(nk).or_insert_with(BigInt::zero) += c * BigInt::from(s);
                }
            }
            if acc.values().any(|c| !c.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// `f_d`: wedges consecutive blocks of `t` factors of `⊗^{dt} V`.
pub fn project_fd(v: &TensorElem, t: u32) -> Result<ExtTensor> {
    let t = t as usize;
    if t == 0 {
        return Err(Error::InvalidInput("t must be positive".into()));
    }
    let mut out = ExtTensor::new();
    for (k, c) in &v.terms {
        if k.len() % t != 0 {
            return Err(Error::InvalidInput(alloc::format!(
                "tensor of order {} is not a multiple of t = {t}",
                k.len()
            )));
        }
        let mut key = Vec::with_capacity(k.len() / t);
        let mut sign = 1i8;
        let mut zero = false;
        for block in k.chunks(t) {
            match ExtIndex::from_unsorted(block) {
                Some((e, s)) => {
                    key.push(e);
                    sign *= s;
                }
                None => {
                    zero = true;
                    break;
                }
            }
        }
        if !zero {
            out.add_term(key, c * BigInt::from(sign));
        }
    }
    Ok(out)
}

/// Pairs the d-th row factor with the d-th column factor.
pub fn bi_tensor(row: &ExtTensor, col: &ExtTensor) -> Result<BiTensor> {
    let mut out = BiTensor::new();
    for (a, ca) in &row.terms {
        for (b, cb) in &col.terms {
            if a.len() != b.len() {
                return Err(Error::InvalidInput(alloc::format!(
                    "row side has degree {}, column side {}",
                    a.len(),
                    b.len()
                )));
            }
            let key = a.iter().cloned().zip(b.iter().cloned()).collect();
            out.add_term(key, ca * cb);
        }
    }
    Ok(out)
}

/// Image in the symmetric algebra, i.e. the polynomial in minor symbols.
pub fn symmetrize(b: &BiTensor) -> MinorPolynomial {
    let mut p = MinorPolynomial::new();
    for (k, c) in &b.terms {
        let mono = k.iter().map(|(r, c)| MinorSymbol::from_indices(r.clone(), c.clone())).collect();
        p.add_term(mono, c.clone());
    }
    p
}
