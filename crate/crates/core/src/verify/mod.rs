//! Checks that polynomials in minors vanish on the generic matrix, a brute
//! force dimension count for the algebra of minors, and the minimality test
//! for kernel components.

mod minimality;

pub use minimality::{
    derive_invariant, highest_weight_count, minimality_check, weight_monomials, MinimalityOptions,
    MinimalityStatus, MinimalityVerdict, VerdictMethod, Witness,
};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{self, SparseRow};
use crate::multilinear::ExtIndex;
use crate::relations::{
    even_cubic, mirror, odd_cubic, quadratic_relation, MinorPolynomial, MinorSymbol, Monomial,
};

/// Exponents are stored as the sorted list of variable ids, with `x_{ij}`
/// numbered `(i-1)·n + (j-1)`.
type XMonomial = Vec<u8>;

/// A polynomial in the entries `x_{ij}` of an `m × n` matrix, with machine
/// integer coefficients (overflow is reported, never wrapped).
#[derive(Clone, Debug, Default)]
pub struct XPolynomial {
    m: u32,
    n: u32,
    terms: HashMap<XMonomial, i128>,
}

impl XPolynomial {
    pub fn zero(m: u32, n: u32) -> Self {
        XPolynomial { m, n, terms: HashMap::new() }
    }

    fn one(m: u32, n: u32) -> Self {
        let mut p = Self::zero(m, n);
        p.terms.insert(Vec::new(), 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `Π x_{ij}` over the listed `(i, j)` pairs.
    pub fn coefficient(&self, vars: &[(u32, u32)]) -> i128 {
        let mut k: XMonomial = vars.iter().map(|&(i, j)| ((i - 1) * self.n + j - 1) as u8).collect();
        k.sort_unstable();
        self.terms.get(&k).copied().unwrap_or(0)
    }

    /// Terms with exponents as sorted `(i, j)` lists, in a fixed order.
    pub fn sorted_terms(&self) -> Vec<(Vec<(u32, u32)>, i128)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let vars = k.iter().map(|&x| (x as u32 / self.n + 1, x as u32 % self.n + 1)).collect();
                (vars, *c)
            })
            .collect();
        v.sort();
        v
    }

    fn add(&mut self, k: XMonomial, c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let e = self.terms.entry(k.clone()).or_insert(0);
        *e = e.checked_add(c).ok_or(Error::Overflow("polynomial coefficient"))?;
        if *e == 0 {
            self.terms.remove(&k);
        }
        Ok(())
    }

    fn mul(&self, other: &XPolynomial) -> Result<XPolynomial> {
        let mut out = XPolynomial::zero(self.m, self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut k = Vec::with_capacity(a.len() + b.len());
                k.extend_from_slice(a);
                k.extend_from_slice(b);
                k.sort_unstable();
                let c = ca.checked_mul(*cb).ok_or(Error::Overflow("polynomial coefficient"))?;
                out.add(k, c)?;
            }
        }
        Ok(out)
    }
}

impl PartialEq for XPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.n == other.n && self.terms == other.terms
    }
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (vars, c)) in terms.iter().enumerate() {
            let abs = c.unsigned_abs();
            if i == 0 {
                if *c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if *c < 0 { " - " } else { " + " })?;
            }
            if abs != 1 || vars.is_empty() {
                write!(f, "{abs}")?;
                if !vars.is_empty() {
                    f.write_str("*")?;
                }
            }
            for (k, (a, b)) in vars.iter().enumerate() {
                if k > 0 {
                    f.write_str("*")?;
                }
                write!(f, "x{a}_{b}")?;
            }
        }
        Ok(())
    }
}

fn check_fits(s: &MinorSymbol, m: u32, n: u32) -> Result<()> {
    if s.rows().max_index() as u32 > m || s.cols().max_index() as u32 > n {
        return Err(Error::OutOfRange(alloc::format!("{s} does not fit a {m} x {n} matrix")));
    }
    Ok(())
}

fn check_format(m: u32, n: u32) -> Result<()> {
    if m == 0 || n == 0 || m * n > 256 {
        return Err(Error::OutOfRange(alloc::format!("matrix format {m} x {n} (need 1 <= mn <= 256)")));
    }
    Ok(())
}

/// All permutations of `0..k` with signs, in a fixed order.
fn perms(k: usize) -> Vec<(Vec<usize>, i128)> {
    if k == 0 {
        return alloc::vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in perms(k - 1) {
        // insert k-1 at every position; moving it left past j entries costs (-1)^j
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// The Leibniz expansion of a minor of the generic `m × n` matrix.
pub fn expand_minor(s: &MinorSymbol, m: u32, n: u32) -> Result<XPolynomial> {
    check_format(m, n)?;
    check_fits(s, m, n)?;
    let (r, c) = (s.rows().indices(), s.cols().indices());
    let mut out = XPolynomial::zero(m, n);
    for (p, sign) in perms(r.len()) {
        let mut k: XMonomial = (0..r.len())
            .map(|a| ((r[a] as u32 - 1) * n + c[p[a]] as u32 - 1) as u8)
            .collect();
        k.sort_unstable();
        out.add(k, sign)?;
    }
    Ok(out)
}

/// Expands polynomials in minors, remembering each minor and monomial.
pub struct Expander {
    m: u32,
    n: u32,
    minors: HashMap<MinorSymbol, XPolynomial>,
}

impl Expander {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        check_format(m, n)?;
        Ok(Expander { m, n, minors: HashMap::new() })
    }

    fn minor(&mut self, s: &MinorSymbol) -> Result<&XPolynomial> {
        if !self.minors.contains_key(s) {
            let e = expand_minor(s, self.m, self.n)?;
            self.minors.insert(s.clone(), e);
        }
        Ok(&self.minors[s])
    }

    pub fn monomial(&mut self, mono: &[MinorSymbol]) -> Result<XPolynomial> {
        let mut acc = XPolynomial::one(self.m, self.n);
        for s in mono {
            let e = self.minor(s)?.clone();
            acc = acc.mul(&e)?;
        }
        Ok(acc)
    }

    pub fn polynomial(&mut self, p: &MinorPolynomial) -> Result<XPolynomial> {
        let mut out = XPolynomial::zero(self.m, self.n);
        for (mono, c) in p.terms() {
            let c = c.to_i128().ok_or(Error::Overflow("coefficient does not fit i128"))?;
            for (k, v) in self.monomial(mono)?.terms {
                out.add(k, v.checked_mul(c).ok_or(Error::Overflow("polynomial coefficient"))?)?;
            }
        }
        Ok(out)
    }
}

/// The image of `p` in the polynomial ring on the matrix entries.
pub fn expand_relation(p: &MinorPolynomial, m: u32, n: u32) -> Result<XPolynomial> {
    Expander::new(m, n)?.polynomial(p)
}

/// True iff `p` vanishes on the generic `m × n` matrix.
pub fn is_relation(p: &MinorPolynomial, m: u32, n: u32) -> Result<bool> {
    Ok(expand_relation(p, m, n)?.is_zero())
}

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

/// Determinant modulo the prime by elimination.
fn det_mod(mut a: Vec<Vec<u64>>) -> u64 {
    let k = a.len();
    let mut det = 1u64;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if p != c {
            a.swap(p, c);
            det = (PRIME - det) % PRIME;
        }
        det = mulmod(det, a[c][c]);
        let inv = powmod(a[c][c], PRIME - 2);
        for r in c + 1..k {
            if a[r][c] == 0 {
                continue;
            }
            let f = mulmod(a[r][c], inv);
            for j in c..k {
                let sub = mulmod(f, a[c][j]);
                a[r][j] = (a[r][j] + PRIME - sub) % PRIME;
            }
        }
    }
    det
}

fn reduce_big(c: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let r = ((c % &p) + &p) % &p;
    r.to_u64().expect("reduced below the prime")
}

/// Evaluates `p` at `trials` seeded pseudo-random matrices modulo
/// `2^61 - 1`; false as soon as one evaluation is nonzero. A true answer is
/// wrong with probability at most `(deg/2^61)^trials`.
pub fn random_probe(p: &MinorPolynomial, m: u32, n: u32, trials: u32, seed: u64) -> Result<bool> {
    if trials == 0 {
        return Err(Error::InvalidInput("at least one trial".into()));
    }
    check_format(m, n)?;
    for s in p.terms().keys().flatten() {
        check_fits(s, m, n)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x: Vec<Vec<u64>> = (0..m)
            .map(|_| (0..n).map(|_| rng.next_u64() % PRIME).collect())
            .collect();
        let mut cache: HashMap<&MinorSymbol, u64> = HashMap::new();
        let mut total = 0u64;
        for (mono, c) in p.terms() {
            let mut v = reduce_big(c);
            for s in mono {
                let d = *cache.entry(s).or_insert_with(|| {
                    let sub = s
                        .rows()
                        .indices()
                        .iter()
                        .map(|&i| s.cols().indices().iter().map(|&j| x[i as usize - 1][j as usize - 1]).collect())
                        .collect();
                    det_mod(sub)
                });
                v = mulmod(v, d);
            }
            total = (total + v) % PRIME;
        }
        if total != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Increasing `k`-subsets of `1..=top`.
pub(crate) fn subsets(top: u32, k: usize) -> Vec<ExtIndex> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(top: u8, k: usize, cur: &mut Vec<u8>, out: &mut Vec<ExtIndex>) {
        if cur.len() == k {
            out.push(ExtIndex(cur.clone()));
            return;
        }
        let lo = cur.last().map_or(1, |&c| c + 1);
        for v in lo..=top {
            if (top - v) as usize + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            go(top, k, cur, out);
            cur.pop();
        }
    }
    go(top as u8, k, &mut cur, &mut out);
    out
}

/// All `t`-minors of an `m × n` matrix, in the symbol order.
pub fn all_minors(t: u32, m: u32, n: u32) -> Vec<MinorSymbol> {
    let cols = subsets(n, t as usize);
    let mut out = Vec::new();
    for r in subsets(m, t as usize) {
        for c in &cols {
            out.push(MinorSymbol::from_indices(r.clone(), c.clone()));
        }
    }
    out.sort();
    out
}

fn multisets(items: &[MinorSymbol], d: usize, start: usize, cur: &mut Monomial, visit: &mut impl FnMut(&Monomial)) {
    if cur.len() == d {
        visit(cur);
        return;
    }
    for i in start..items.len() {
        cur.push(items[i].clone());
        multisets(items, d, i, cur, visit);
        cur.pop();
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

/// Default bound on the number of monomials for [`brute_dim_at`].
pub const BRUTE_MONOMIAL_CAP: u64 = 50_000;

/// Dimension of the degree-`d` part of the algebra generated by the
/// `t`-minors of an `m × n` matrix: the rank of all degree-`d` monomials in
/// minors after expansion. Refuses instances with more than `cap` monomials.
pub fn brute_dim_at(t: u32, m: u32, n: u32, d: u32, cap: u64) -> Result<u64> {
    check_format(m, n)?;
    if t == 0 || t > m.min(n) {
        return Err(Error::OutOfRange(alloc::format!("no {t}-minors in a {m} x {n} matrix")));
    }
    let minors = all_minors(t, m, n);
    let count = binomial(minors.len() as u64 + d as u64 - 1, d as u64);
    if count > cap {
        return Err(Error::CapExceeded { what: "monomials in minors", needed: count, cap });
    }
    let mut ex = Expander::new(m, n)?;
    let mut cols: HashMap<XMonomial, u32> = HashMap::new();
    let mut ech = linalg::Echelon::new();
    let mut err = None;
    multisets(&minors, d as usize, 0, &mut Vec::new(), &mut |mono| {
        if err.is_some() {
            return;
        }
        match ex.monomial(mono) {
            Ok(x) => {
                let mut row: SparseRow = x
                    .terms
                    .into_iter()
                    .map(|(k, c)| {
                        let next = cols.len() as u32;
                        (*cols.entry(k).or_insert(next), BigInt::from(c))
                    })
                    .collect();
                row.sort_by_key(|e| e.0);
                ech.insert(row);
            }
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(ech.rank() as u64)
}

/// Left kernel of the expansion map on the given monomials: the relations
/// among them, as polynomials in minors.
pub fn expansion_kernel(monos: &[Monomial], ex: &mut Expander) -> Result<Vec<MinorPolynomial>> {
    let mut cols: HashMap<XMonomial, u32> = HashMap::new();
    let mut rows = Vec::with_capacity(monos.len());
    for mono in monos {
        let x = ex.monomial(mono)?;
        let mut row: SparseRow = x
            .terms
            .into_iter()
            .map(|(k, c)| {
                let next = cols.len() as u32;
                (*cols.entry(k).or_insert(next), BigInt::from(c))
            })
            .collect();
        row.sort_by_key(|e| e.0);
        rows.push(row);
    }
    Ok(linalg::left_kernel(&rows)
        .into_iter()
        .map(|v| {
            let mut p = MinorPolynomial::new();
            for (i, c) in v {
                p.add_term(monos[i as usize].clone(), c);
            }
            p
        })
        .collect())
}

/// The conjectured generators of the kernel that are defined for `t`-minors
/// of an `m × n` matrix, up to degree `degmax`: all `f_{u,v}`, `g_u`, `g'_u`,
/// `h_u`, `h'_u` whose indices fit. One polynomial per line.
pub fn export_generators(t: u32, m: u32, n: u32, degmax: u32) -> Result<String> {
    let mut out = String::new();
    // no kernel at all in these formats
    if t <= 1 || t > m.min(n) || m.max(n) <= t + 1 {
        return Ok(out);
    }
    let fits = |p: &MinorPolynomial| p.max_row_index() as u32 <= m && p.max_col_index() as u32 <= n;
    let push = |p: MinorPolynomial, out: &mut String| {
        if !p.is_zero() && fits(&p) {
            out.push_str(&alloc::format!("{p}\n"));
        }
    };
    if degmax >= 2 {
        for u in 0..=t {
            for v in 0..=t {
                if u != v && (u + v) % 2 == 0 {
                    push(quadratic_relation(t, u, v)?, &mut out);
                }
            }
        }
    }
    if degmax >= 3 {
        for u in 1..=t / 2 {
            let g = even_cubic(t, u)?;
            push(mirror(&g), &mut out);
            push(g, &mut out);
        }
        for u in 2..=t.div_ceil(2) {
            let h = odd_cubic(t, u)?;
            push(mirror(&h), &mut out);
            push(h, &mut out);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::quadratic_relation;
    use alloc::string::ToString;
    use alloc::vec;

    fn sym(r: &[u8], c: &[u8]) -> MinorSymbol {
        MinorSymbol::from_lists(r, c).unwrap().unwrap().0
    }

    #[test]
    fn minors_expand() {
        let e = expand_minor(&sym(&[1, 2], &[1, 2]), 2, 2).unwrap();
        assert_eq!(e.to_string(), "x1_1*x2_2 - x1_2*x2_1");
        assert_eq!(expand_minor(&sym(&[1], &[3]), 2, 3).unwrap().to_string(), "x1_3");
        assert_eq!(expand_minor(&sym(&[1, 2, 3], &[1, 2, 4]), 3, 4).unwrap().len(), 6);
        assert!(expand_minor(&sym(&[1, 3], &[1, 2]), 2, 2).is_err());
    }

    #[test]
    fn permutation_signs() {
        for (p, s) in perms(4) {
            let mut v = p.clone();
            assert_eq!(crate::multilinear::sort_sign(&mut v).unwrap() as i128, s);
        }
        assert_eq!(perms(4).len(), 24);
    }

    #[test]
    fn plucker_vanishes() {
        let f = quadratic_relation(2, 0, 2).unwrap();
        assert!(is_relation(&f, 2, 4).unwrap());
        assert!(random_probe(&f, 2, 4, 3, 7).unwrap());
        let mut mono = MinorPolynomial::new();
        mono.add_term(vec![sym(&[1, 2], &[1, 2]), sym(&[1, 2], &[3, 4])], BigInt::from(1));
        assert_eq!(expand_relation(&mono, 2, 4).unwrap().len(), 4);
    }

    #[test]
    fn a_single_minor_is_not_a_relation() {
        let mut p = MinorPolynomial::new();
        p.add_term(vec![sym(&[1], &[1])], BigInt::from(1));
        assert!(!is_relation(&p, 1, 1).unwrap());
        assert!(!random_probe(&p, 1, 1, 1, 0).unwrap());
    }

    #[test]
    fn brute_dimensions() {
        assert_eq!(brute_dim_at(2, 3, 3, 1, BRUTE_MONOMIAL_CAP).unwrap(), 9);
        // 2-minors of a 2 x 3 matrix are algebraically independent
        for d in 0..=3 {
            assert_eq!(brute_dim_at(2, 2, 3, d, BRUTE_MONOMIAL_CAP).unwrap(), binomial(d as u64 + 2, 2));
        }
        assert!(matches!(brute_dim_at(2, 3, 4, 4, 10), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn kernel_of_plucker_monomials() {
        let monos = vec![
            vec![sym(&[1, 2], &[1, 2]), sym(&[1, 2], &[3, 4])],
            vec![sym(&[1, 2], &[1, 3]), sym(&[1, 2], &[2, 4])],
            vec![sym(&[1, 2], &[1, 4]), sym(&[1, 2], &[2, 3])],
        ];
        let mut ex = Expander::new(2, 4).unwrap();
        let k = expansion_kernel(&monos, &mut ex).unwrap();
        assert_eq!(k.len(), 1);
        assert!(k[0].same_up_to_scalar(&quadratic_relation(2, 0, 2).unwrap()));
    }

    #[test]
    fn export_degenerate_formats() {
        assert!(export_generators(1, 3, 3, 3).unwrap().is_empty());
        assert!(export_generators(2, 2, 3, 3).unwrap().is_empty());
        let s = export_generators(2, 3, 4, 3).unwrap();
        assert!(s.lines().count() >= 2);
        for line in s.lines() {
            assert!(line.contains('['));
        }
    }
}
