//! Polynomials in minor symbols `[I|J]` and constructors for the explicit
//! relations between t-minors: the quadratic family `f_{u,v}`, the even and
//! odd cubics `g_u`, `h_u`, their mirrors, and determinantal relations built
//! from pairs of initial segments.

mod constructors;
mod determinantal;

pub use constructors::{
    even_cubic, even_cubic_by_tensors, mirror, odd_cubic, odd_cubic_by_tensors, quadratic_by_tensors,
    quadratic_relation,
};
pub use determinantal::{determinantal_relation, validate_initial_segment, InitialSegment};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::multilinear::{ExtIndex, Side};
use crate::partitions::{BiWeight, WeightVector};

/// The minor with row set `rows` and column set `cols`, both increasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MinorSymbol {
    rows: ExtIndex,
    cols: ExtIndex,
}

impl MinorSymbol {
    pub fn new(rows: ExtIndex, cols: ExtIndex) -> Result<Self> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(Error::InvalidInput(alloc::format!("[{rows}|{cols}] is not a square minor")));
        }
        Ok(MinorSymbol { rows, cols })
    }

    pub(crate) fn from_indices(rows: ExtIndex, cols: ExtIndex) -> Self {
        MinorSymbol { rows, cols }
    }

    /// The minor on rows and columns listed in the given orders: the sorted
    /// symbol and the sign of the two sorts, or `None` if an index repeats.
    pub fn from_lists(rows: &[u8], cols: &[u8]) -> Result<Option<(MinorSymbol, i8)>> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(Error::InvalidInput("minor with unequal or empty index lists".into()));
        }
        if rows.contains(&0) || cols.contains(&0) {
            return Err(Error::InvalidInput("indices start at 1".into()));
        }
        let (Some((r, s)), Some((c, s2))) = (ExtIndex::from_unsorted(rows), ExtIndex::from_unsorted(cols)) else {
            return Ok(None);
        };
        Ok(Some((MinorSymbol { rows: r, cols: c }, s * s2)))
    }

    pub fn rows(&self) -> &ExtIndex {
        &self.rows
    }

    pub fn cols(&self) -> &ExtIndex {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn transposed(&self) -> MinorSymbol {
        MinorSymbol { rows: self.cols.clone(), cols: self.rows.clone() }
    }

    fn side(&self, side: Side) -> &ExtIndex {
        match side {
            Side::Row => &self.rows,
            Side::Col => &self.cols,
        }
    }
}

impl fmt::Display for MinorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", self.rows, self.cols)
    }
}

/// A product of minors, stored sorted.
pub type Monomial = Vec<MinorSymbol>;

/// An integer combination of monomials in minor symbols, i.e. an element of
/// the polynomial ring whose variables are the minors.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MinorPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MinorPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c` times the product of `mono` (in any order).
    pub fn add_term(&mut self, mut mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        mono.sort();
        let e = self.terms.entry(mono.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the first monomial (zero for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms.keys().next().map_or(0, Vec::len)
    }

    /// Size of the minors in the first monomial.
    pub fn minor_size(&self) -> usize {
        self.terms
            .keys()
            .next()
            .and_then(|m| m.first())
            .map_or(0, MinorSymbol::size)
    }

    /// Same degree everywhere and minors of one size.
    pub fn is_homogeneous(&self) -> bool {
        let (d, t) = (self.degree(), self.minor_size());
        self.terms.keys().all(|m| m.len() == d && m.iter().all(|s| s.size() == t))
    }

    pub fn max_row_index(&self) -> u8 {
        self.max_index(Side::Row)
    }

    pub fn max_col_index(&self) -> u8 {
        self.max_index(Side::Col)
    }

    fn max_index(&self, side: Side) -> u8 {
        self.terms
            .keys()
            .flatten()
            .map(|s| s.side(side).max_index())
            .max()
            .unwrap_or(0)
    }

    /// Coprime integer coefficients with a positive leading coefficient
    /// (leading = first monomial in the canonical order).
    pub fn normalized(&self) -> MinorPolynomial {
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
        if g.is_one() {
            return self.clone();
        }
        MinorPolynomial { terms: self.terms.iter().map(|(k, v)| (k.clone(), v / &g)).collect() }
    }

    /// Equal after normalization.
    pub fn same_up_to_scalar(&self, other: &MinorPolynomial) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn scaled(&self, c: &BigInt) -> MinorPolynomial {
        let mut out = MinorPolynomial::new();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn add_scaled(&mut self, other: &MinorPolynomial, c: &BigInt) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    /// Product with a single minor.
    pub fn times_minor(&self, s: &MinorSymbol) -> MinorPolynomial {
        let mut out = MinorPolynomial::new();
        for (k, v) in &self.terms {
            let mut m = k.clone();
            m.push(s.clone());
            out.add_term(m, v.clone());
        }
        out
    }

    /// Index counts on each side: row counts positive, column counts negated.
    pub fn bi_weight(&self) -> Result<BiWeight> {
        let mut first: Option<(BiWeight, &Monomial)> = None;
        for m in self.terms.keys() {
            let w = monomial_bi_weight(m);
            match &first {
                None => first = Some((w, m)),
                Some((w0, m0)) if *w0 != w => {
                    return Err(Error::InconsistentWeight {
                        first: render_monomial(m0),
                        second: render_monomial(m),
                    })
                }
                _ => {}
            }
        }
        Ok(first.map(|f| f.0).unwrap_or_default())
    }

    /// The first-order action of substituting index `from` by `to` in one
    /// factor at a time, on the given side.
    pub fn substitute(&self, side: Side, from: u8, to: u8) -> MinorPolynomial {
        let mut out = MinorPolynomial::new();
        for (m, c) in &self.terms {
            for (k, s) in m.iter().enumerate() {
                let Some((e, sign)) = s.side(side).substitute(from, to) else {
                    continue;
                };
                let mut nm = m.clone();
                nm[k] = match side {
                    Side::Row => MinorSymbol { rows: e, cols: s.cols.clone() },
                    Side::Col => MinorSymbol { rows: s.rows.clone(), cols: e },
                };
                out.add_term(nm, c * BigInt::from(sign));
            }
        }
        out
    }

    /// Killed by every substitution of an index by a smaller one, on both
    /// sides: a highest weight vector for `GL(V) × GL(W)`.
    pub fn is_u_invariant(&self) -> bool {
        for side in [Side::Row, Side::Col] {
            let top = self.max_index(side);
            for from in 2..=top {
                for to in 1..from {
                    if !self.substitute(side, from, to).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub(crate) fn monomial_bi_weight(m: &[MinorSymbol]) -> BiWeight {
    let mut row: Vec<i64> = Vec::new();
    let mut col: Vec<i64> = Vec::new();
    for s in m {
        for &i in s.rows.indices() {
            if row.len() < i as usize {
                row.resize(i as usize, 0);
            }
            row[i as usize - 1] += 1;
        }
        for &j in s.cols.indices() {
            if col.len() < j as usize {
                col.resize(j as usize, 0);
            }
            col[j as usize - 1] -= 1;
        }
    }
    BiWeight { row: WeightVector(row), col: WeightVector(col) }.trimmed()
}

pub(crate) fn render_monomial(m: &[MinorSymbol]) -> alloc::string::String {
    let mut s = alloc::string::String::new();
    for x in m {
        s.push_str(&alloc::format!("{x}"));
    }
    s
}

/// One line: `c * [..|..][..|..] + c * ...`, signs carried by the joiners.
impl fmt::Display for MinorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                write!(f, "{c} * ")?;
            } else if c.is_negative() {
                write!(f, " - {} * ", -c)?;
            } else {
                write!(f, " + {c} * ")?;
            }
            f.write_str(&render_monomial(m))?;
        }
        Ok(())
    }
}
