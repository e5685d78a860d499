use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use hashbrown::HashMap;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{all_minors, expansion_kernel, subsets, Expander};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::multilinear::{bi_tensor, project_fd, successor_lift, symmetrize, ExtIndex, Side};
use crate::partitions::{predecessors, BiShape, BiWeight, Partition, Tableau};
use crate::relations::{MinorPolynomial, MinorSymbol, Monomial};
use crate::symfunc::SymFunc;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MinimalityStatus {
    Minimal,
    NonMinimal,
    Inconclusive,
}

/// How a verdict was reached.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerdictMethod {
    /// Degree 2: nothing of degree 1 lies in the kernel.
    Degree,
    /// Enough independent invariants were derived from lower degree.
    Derivation,
    /// Highest weight vectors of the whole degree-d part of the ideal
    /// generated in lower degree were counted.
    Exhaustive,
    /// The search budget ran out.
    Budget,
}

/// One derived invariant that raised the rank.
#[derive(Clone, Debug)]
pub struct Witness {
    pub source: BiShape,
    pub row_tableau: Tableau,
    pub col_tableau: Tableau,
    pub terms: usize,
}

#[derive(Clone, Debug)]
pub struct MinimalityVerdict {
    pub bishape: BiShape,
    pub degree: u32,
    pub status: MinimalityStatus,
    pub method: VerdictMethod,
    pub rank_found: u64,
    pub rank_needed: u64,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug)]
pub struct MinimalityOptions {
    /// Tableaux tried on each side for each source shape.
    pub tableaux_per_side: usize,
    pub exhaustive: bool,
    pub max_exhaustive_degree: u32,
    pub max_exhaustive_td: u32,
    /// Matrix format for the exhaustive count; defaults to the smallest one
    /// that carries the shape, `γ_1 × λ_1`.
    pub ambient: Option<(u32, u32)>,
    /// Shuffles the derivation attempts with this seed; the verdict must not
    /// depend on it.
    pub order_seed: Option<u64>,
}

impl Default for MinimalityOptions {
    fn default() -> Self {
        MinimalityOptions {
            tableaux_per_side: 6,
            exhaustive: true,
            max_exhaustive_degree: 4,
            max_exhaustive_td: 8,
            ambient: None,
            order_seed: None,
        }
    }
}

fn counts_of(w: &[i64], sign: i64) -> Result<Vec<u32>> {
    w.iter()
        .map(|&x| {
            let v = x * sign;
            u32::try_from(v).map_err(|_| Error::InvalidInput(alloc::format!("weight entry {x} has the wrong sign")))
        })
        .collect()
}

/// Sorted multisets of `d` `t`-subsets using index `i` exactly `counts[i-1]` times.
fn side_multisets(counts: &[u32], t: usize, d: usize) -> Vec<Vec<ExtIndex>> {
    let mut out = Vec::new();
    let mut left = counts.to_vec();
    let mut cur = Vec::new();
    fn go(left: &mut Vec<u32>, t: usize, d: usize, cur: &mut Vec<ExtIndex>, out: &mut Vec<Vec<ExtIndex>>) {
        if cur.len() == d {
            if left.iter().all(|&c| c == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let top = left.len() as u32;
        for s in subsets(top, t) {
            if cur.last().is_some_and(|l| s < *l) {
                continue;
            }
            if s.indices().iter().any(|&i| left[i as usize - 1] == 0) {
                continue;
            }
            for &i in s.indices() {
                left[i as usize - 1] -= 1;
            }
            cur.push(s.clone());
            go(left, t, d, cur, out);
            cur.pop();
            for &i in s.indices() {
                left[i as usize - 1] += 1;
            }
        }
    }
    go(&mut left, t, d, &mut cur, &mut out);
    out
}

fn distinct_perms(items: &[ExtIndex]) -> Vec<Vec<ExtIndex>> {
    let mut out = Vec::new();
    let mut used = alloc::vec![false; items.len()];
    let mut cur = Vec::new();
    fn go(items: &[ExtIndex], used: &mut [bool], cur: &mut Vec<ExtIndex>, out: &mut Vec<Vec<ExtIndex>>) {
        if cur.len() == items.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..items.len() {
            // items are sorted: skip a repeat unless its twin is already placed
            if used[i] || (i > 0 && items[i] == items[i - 1] && !used[i - 1]) {
                continue;
            }
            used[i] = true;
            cur.push(items[i].clone());
            go(items, used, cur, out);
            cur.pop();
            used[i] = false;
        }
    }
    go(items, &mut used, &mut cur, &mut out);
    out
}

fn monomials_with_counts(t: u32, row: &[u32], col: &[u32]) -> Result<Vec<Monomial>> {
    let (rs, cs): (u32, u32) = (row.iter().sum(), col.iter().sum());
    if t == 0 || rs != cs || rs % t != 0 {
        return Err(Error::InvalidInput("row and column weights of different degree".into()));
    }
    let d = (rs / t) as usize;
    let rows = side_multisets(row, t as usize, d);
    let cols = side_multisets(col, t as usize, d);
    let mut out = BTreeSet::new();
    for r in &rows {
        for c in &cols {
            for p in distinct_perms(c) {
                let mut m: Monomial = r
                    .iter()
                    .zip(p)
                    .map(|(a, b)| MinorSymbol::from_indices(a.clone(), b))
                    .collect();
                m.sort();
                out.insert(m);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Monomials in `t`-minors of bi-weight `w` (row counts, negated column
/// counts), in the canonical order.
pub fn weight_monomials(t: u32, w: &BiWeight) -> Result<Vec<Monomial>> {
    monomials_with_counts(t, &counts_of(&w.row.0, 1)?, &counts_of(&w.col.0, -1)?)
}

/// Interns monomials (tagged by a small integer) as matrix columns.
#[derive(Default)]
struct Columns {
    ids: HashMap<(u32, Monomial), u32>,
}

impl Columns {
    fn row(&mut self, tag: u32, p: &MinorPolynomial) -> SparseRow {
        let mut row: SparseRow = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let next = self.ids.len() as u32;
                (*self.ids.entry((tag, m.clone())).or_insert(next), c.clone())
            })
            .collect();
        row.sort_by_key(|e| e.0);
        row
    }
}

/// Number of highest weight vectors of type `b` in the degree-`d` part of
/// the ideal generated by the kernel in degree `d-1`, computed in the
/// bi-weight space of `b` for `t`-minors of an `m × n` matrix.
///
/// The span of `[I|J]·(kernel of weight w - wt[I|J])` is assembled over all
/// minors; the count is its dimension minus the rank of its image under
/// the simple raising operators.
pub fn highest_weight_count(b: &BiShape, t: u32, m: u32, n: u32) -> Result<u64> {
    let d = b.require_admissible(t)?;
    if b.row.first() > m || b.col.first() > n {
        return Err(Error::OutOfRange(alloc::format!("{b} does not fit a {m} x {n} matrix")));
    }
    if d < 2 {
        return Ok(0);
    }
    let w = BiWeight::highest(b);
    let row = counts_of(&w.row.0, 1)?;
    let col = counts_of(&w.col.0, -1)?;
    let mut ex = Expander::new(m, n)?;
    let mut cols = Columns::default();
    let mut ech = Echelon::new();
    let mut basis: Vec<MinorPolynomial> = Vec::new();
    for s in all_minors(t, m, n) {
        let mut r = row.clone();
        let mut c = col.clone();
        let fits = s.rows().indices().iter().all(|&i| (i as usize) <= r.len() && r[i as usize - 1] > 0)
            && s.cols().indices().iter().all(|&j| (j as usize) <= c.len() && c[j as usize - 1] > 0);
        if !fits {
            continue;
        }
        s.rows().indices().iter().for_each(|&i| r[i as usize - 1] -= 1);
        s.cols().indices().iter().for_each(|&j| c[j as usize - 1] -= 1);
        let monos = monomials_with_counts(t, &r, &c)?;
        for k in expansion_kernel(&monos, &mut ex)? {
            let g = k.times_minor(&s);
            if ech.insert(cols.row(0, &g)) {
                basis.push(g);
            }
        }
    }
    let mut raised = Echelon::new();
    for g in &basis {
        let mut row = SparseRow::new();
        let mut tag = 1;
        for (side, top) in [(Side::Row, m), (Side::Col, n)] {
            for i in 1..top {
                row.extend(cols.row(tag, &g.substitute(side, (i + 1) as u8, i as u8)));
                tag += 1;
            }
        }
        row.sort_by_key(|e| e.0);
        raised.insert(row);
    }
    Ok((basis.len() - raised.rank()) as u64)
}

/// The invariant obtained by lifting the highest weight vectors of `src` to
/// `dst` with the given tableaux (numbering the boxes of `src.row` and
/// `src.col`), wedging blocks and symmetrizing. May be zero.
pub fn derive_invariant(
    src: &BiShape,
    dst: &BiShape,
    t: u32,
    row_tab: &Tableau,
    col_tab: &Tableau,
) -> Result<MinorPolynomial> {
    let dr = dst.require_admissible(t)?;
    let sr = src.require_admissible(t)?;
    if sr + 1 != dr || !predecessors(&dst.row, t)?.contains(&src.row) || !predecessors(&dst.col, t)?.contains(&src.col) {
        return Err(Error::InvalidInput(alloc::format!("{dst} is not a bi-successor of {src}")));
    }
    let row = project_fd(&successor_lift(row_tab, &src.row, &dst.row, t)?, t)?;
    let col = project_fd(&successor_lift(col_tab, &src.col, &dst.col, t)?, t)?;
    Ok(symmetrize(&bi_tensor(&row, &col)?).normalized())
}

/// Row filling, then strip fillings, then the row filling with two
/// consecutive labels swapped; at most `limit`, no repeats.
fn tableau_candidates(shape: &Partition, t: u32, limit: usize) -> Result<Vec<Tableau>> {
    let mut out: Vec<Tableau> = Vec::new();
    let push = |tab: Tableau, out: &mut Vec<Tableau>| {
        if out.len() < limit && !out.contains(&tab) {
            out.push(tab);
        }
    };
    let base = Tableau::row_filling(shape);
    push(base.clone(), &mut out);
    for tab in Tableau::strip_fillings(shape, t, limit)? {
        push(tab, &mut out);
    }
    let n = shape.size();
    for k in 1..n {
        let rows = base
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| if x == k { k + 1 } else if x == k + 1 { k } else { x })
                    .collect()
            })
            .collect();
        push(Tableau::new(rows)?, &mut out);
    }
    Ok(out)
}

/// Decides whether the kernel component of type `b` contains a minimal
/// generator.
///
/// First tries to derive `mult_in_J(b)` independent highest weight vectors
/// from asymmetric bi-predecessors (whose components lie entirely in the
/// kernel); success means non-minimal. Otherwise, for small degree, counts
/// the highest weight vectors of type `b` in the part of the ideal generated
/// in lower degree; fewer than `mult_in_J(b)` means minimal. Anything else is
/// inconclusive.
pub fn minimality_check(b: &BiShape, t: u32, opts: &MinimalityOptions, sf: &mut SymFunc) -> Result<MinimalityVerdict> {
    let d = b.require_admissible(t)?;
    let needed = sf.mult_in_j(b, t)?;
    if needed == 0 {
        return Err(Error::InvalidInput(alloc::format!("{b} does not occur in the kernel for t = {t}")));
    }
    let mut verdict = MinimalityVerdict {
        bishape: b.clone(),
        degree: d,
        status: MinimalityStatus::Inconclusive,
        method: VerdictMethod::Budget,
        rank_found: 0,
        rank_needed: needed,
        witnesses: Vec::new(),
    };
    if d <= 2 {
        verdict.status = MinimalityStatus::Minimal;
        verdict.method = VerdictMethod::Degree;
        return Ok(verdict);
    }

    let target = BiWeight::highest(b);
    let mut attempts = Vec::new();
    for a in predecessors(&b.row, t)? {
        for c in predecessors(&b.col, t)? {
            let src = BiShape::new(a.clone(), c.clone());
            if src.is_symmetric() || sf.mult_in_j(&src, t)? == 0 {
                continue;
            }
            let rts = tableau_candidates(&a, t, opts.tableaux_per_side)?;
            let cts = tableau_candidates(&c, t, opts.tableaux_per_side)?;
            for rt in &rts {
                for ct in &cts {
                    attempts.push((src.clone(), rt.clone(), ct.clone()));
                }
            }
        }
    }
    if let Some(seed) = opts.order_seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..attempts.len()).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            attempts.swap(i, j);
        }
    }
    let mut cols = Columns::default();
    let mut ech = Echelon::new();
    for (src, rt, ct) in attempts {
        let p = derive_invariant(&src, b, t, &rt, &ct)?;
        if p.is_zero() {
            continue;
        }
        if !p.is_u_invariant() || p.bi_weight()? != target.clone().trimmed() {
            return Err(Error::Internal(alloc::format!(
                "derived vector for {b} from {src} is not a highest weight vector"
            )));
        }
        if ech.insert(cols.row(0, &p)) {
            verdict.witnesses.push(Witness { source: src, row_tableau: rt, col_tableau: ct, terms: p.len() });
            if ech.rank() as u64 >= needed {
                break;
            }
        }
    }
    verdict.rank_found = ech.rank() as u64;
    if verdict.rank_found >= needed {
        verdict.status = MinimalityStatus::NonMinimal;
        verdict.method = VerdictMethod::Derivation;
        return Ok(verdict);
    }

    if opts.exhaustive && d <= opts.max_exhaustive_degree && t * d <= opts.max_exhaustive_td {
        let (m, n) = opts.ambient.unwrap_or((b.row.first(), b.col.first()));
        let found = highest_weight_count(b, t, m, n)?;
        verdict.rank_found = found;
        verdict.method = VerdictMethod::Exhaustive;
        verdict.status = if found < needed { MinimalityStatus::Minimal } else { MinimalityStatus::NonMinimal };
    }
    Ok(verdict)
}
