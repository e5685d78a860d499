use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{predecessors, successors, BiShape, MultiplicityCache, Partition};
use crate::error::Result;
use crate::symfunc::SymFunc;

/// The `μ` such that `λ` occurs only in `L_μ(∧^t V)` inside `⊗^d(∧^t V)`,
/// with multiplicity one; `None` if there is no such `μ`.
///
/// Decided by recursion on predecessors: each predecessor must be of single
/// type, their types must be distinct and must be exactly the 1-predecessors
/// of `μ`. When that data does not pin down where `λ` lives, degree 2 is
/// settled by the parity of `λ_1 - t`, higher degrees by a plethysm lookup.
pub fn is_single_type(lambda: &Partition, t: u32, sf: &mut SymFunc) -> Result<Option<Partition>> {
    lambda.require_admissible(t)?;
    let mut memo = BTreeMap::new();
    single_type(lambda, t, sf, &mut memo)
}

fn one_predecessors(mu: &Partition) -> BTreeSet<Partition> {
    predecessors(mu, 1)
        .map(|v| v.into_iter().collect())
        .unwrap_or_default()
}

/// Shapes whose full set of 1-predecessors is `group`.
fn completions(group: &BTreeSet<Partition>) -> Vec<Partition> {
    let Some(first) = group.iter().next() else {
        return Vec::new();
    };
    successors(first, 1)
        .into_iter()
        .filter(|nu| one_predecessors(nu) == *group)
        .collect()
}

/// Number of ways (capped at 2) to split `rest` into groups that are each the
/// full predecessor set of some shape.
fn count_groupings(rest: &[Partition], cap: usize) -> usize {
    if rest.is_empty() {
        return 1;
    }
    let (head, tail) = (&rest[0], &rest[1..]);
    let mut total = 0;
    for mask in 0u32..(1 << tail.len()) {
        let mut group: BTreeSet<Partition> = BTreeSet::new();
        group.insert(head.clone());
        let mut left = Vec::new();
        for (i, p) in tail.iter().enumerate() {
            if mask & (1 << i) != 0 {
                group.insert(p.clone());
            } else {
                left.push(p.clone());
            }
        }
        let k = completions(&group).len();
        if k > 0 {
            total += k * count_groupings(&left, cap);
            if total >= cap {
                return cap;
            }
        }
    }
    total
}

fn single_type(
    lambda: &Partition,
    t: u32,
    sf: &mut SymFunc,
    memo: &mut BTreeMap<Partition, Option<Partition>>,
) -> Result<Option<Partition>> {
    if let Some(r) = memo.get(lambda) {
        return Ok(r.clone());
    }
    let d = lambda.size() / t;
    let result = if d == 0 {
        Some(Partition::empty())
    } else {
        let mut types = BTreeSet::new();
        let mut ok = true;
        for alpha in predecessors(lambda, t)? {
            match single_type(&alpha, t, sf, memo)? {
                Some(mu) if types.insert(mu.clone()) => {}
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            None
        } else {
            let candidates = completions(&types);
            let list: Vec<Partition> = types.iter().cloned().collect();
            if candidates.len() == 1 && count_groupings(&list, 2) == 1 {
                Some(candidates[0].clone())
            } else if candidates.is_empty() {
                None
            } else if d == 2 {
                // τ_u = (t+u, t-u) lies in the symmetric square iff u is even
                let u = lambda.first() - t;
                let mu = if u % 2 == 0 { Partition::column(2) } else { Partition::row(2) };
                candidates.contains(&mu).then_some(mu)
            } else {
                let mut found = None;
                for mu in candidates {
                    if sf.mult_in_plethysm(lambda, &mu, t)? == 1 {
                        found = Some(mu);
                        break;
                    }
                }
                found
            }
        }
    };
    memo.insert(lambda.clone(), result.clone());
    Ok(result)
}

/// Shapes of multiplicity one in `⊗^d(∧^t V)`, descending lexicographic.
pub fn tshape_candidates(t: u32, d: u32) -> Result<Vec<Partition>> {
    let mut cache = MultiplicityCache::new(t);
    let mut out = Vec::new();
    for lambda in Partition::admissible(t, d) {
        if cache.get(&lambda)? == 1 {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// Asymmetric `(γ|λ)`, both `(t,d)`-admissible, all of whose bi-predecessors
/// in the tensor algebra are symmetric and of multiplicity one.
/// Found by search over the shapes of multiplicity one.
pub fn classify_tshape(t: u32, d: u32) -> Result<Vec<BiShape>> {
    if t == 0 {
        return Err(crate::error::Error::InvalidInput("t must be positive".into()));
    }
    let mut cache = MultiplicityCache::new(t);
    let cands = tshape_candidates(t, d)?;
    let mut preds = BTreeMap::new();
    for c in &cands {
        preds.insert(c.clone(), predecessors(c, t)?);
    }
    let mut out = Vec::new();
    for g in &cands {
        for l in &cands {
            if g == l {
                continue;
            }
            let mut all_ok = true;
            for a in &preds[g] {
                for b in &preds[l] {
                    if a != b || cache.get(a)? * cache.get(b)? != 1 {
                        all_ok = false;
                    }
                }
            }
            if all_ok {
                out.push(BiShape::new(g.clone(), l.clone()));
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Degree-3 bi-shapes of the kernel that admit a minimal relation by the
/// shape criterion: asymmetric, occurring in the `μ`-component for some `μ`,
/// and every bi-predecessor occurring in a component of a 1-predecessor of
/// `μ` is symmetric of single type. Restricted to shapes that fit an
/// `m × n` matrix (`γ_1 <= m`, `λ_1 <= n`).
pub fn shape_relations_deg3(t: u32, m: u32, n: u32, sf: &mut SymFunc) -> Result<Vec<BiShape>> {
    if t == 0 {
        return Err(crate::error::Error::InvalidInput("t must be positive".into()));
    }
    let shapes = Partition::admissible(t, 3);
    let mus = Partition::all(3, 3, 3);
    let mut out = Vec::new();
    for g in shapes.iter().filter(|g| g.first() <= m) {
        for l in shapes.iter().filter(|l| l.first() <= n) {
            if g == l {
                continue;
            }
            let pg = predecessors(g, t)?;
            let pl = predecessors(l, t)?;
            let mut found = false;
            for mu in &mus {
                if sf.mult_in_plethysm(g, mu, t)? * sf.mult_in_plethysm(l, mu, t)? == 0 {
                    continue;
                }
                let mut good = true;
                'pairs: for a in &pg {
                    for b in &pl {
                        for mu1 in one_predecessors(mu) {
                            let occurs = sf.mult_in_plethysm(a, &mu1, t)? * sf.mult_in_plethysm(b, &mu1, t)? > 0;
                            if occurs && (a != b || is_single_type(a, t, sf)?.is_none()) {
                                good = false;
                                break 'pairs;
                            }
                        }
                    }
                }
                if good {
                    found = true;
                    break;
                }
            }
            if found {
                out.push(BiShape::new(g.clone(), l.clone()));
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}
