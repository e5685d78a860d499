use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{sort_sign, TensorElem};
use crate::error::{Error, Result};
use crate::partitions::{Partition, Tableau};

/// All permutations of `0..n` with their signs.
fn signed_perms(n: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(n, &mut cur, &mut out);
    out
}

fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i8)>) {
    if k <= 1 {
        let mut v = a.clone();
        let s = sort_sign(&mut v).expect("a permutation");
        out.push((a.clone(), s));
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, a, out);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap(k - 1, a, out);
}

/// Iterates over the cartesian product of `lens[i]` choices.
fn for_each_choice(lens: &[usize], mut f: impl FnMut(&[usize])) {
    if lens.contains(&0) {
        return;
    }
    let mut idx = vec![0usize; lens.len()];
    loop {
        f(&idx);
        let mut i = 0;
        loop {
            if i == lens.len() {
                return;
            }
            idx[i] += 1;
            if idx[i] < lens[i] {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Adds `coeff · Y_Λ(Γ) ⊗ tail` to `out`, where `Γ` is given by its rows and
/// the box `b` of `Γ` is placed in tensor position `Λ(b)`.
fn add_symmetrized(lam: &Tableau, gamma: &[Vec<u32>], tail: &[u8], coeff: &BigInt, out: &mut TensorElem) -> Result<()> {
    let shape = lam.shape();
    let n = lam.size();
    let pos: Vec<Vec<usize>> = lam
        .rows()
        .iter()
        .map(|r| r.iter().map(|&x| x as usize - 1).collect())
        .collect();
    let mut labels: Vec<Vec<u8>> = Vec::with_capacity(gamma.len());
    for r in gamma {
        let mut row = Vec::with_capacity(r.len());
        for &x in r {
            row.push(u8::try_from(x).map_err(|_| Error::InvalidInput("label exceeds 255".into()))?);
        }
        let mut sorted = row.clone();
        if sort_sign(&mut sorted).is_none() {
            // alternating in each row
            return Ok(());
        }
        labels.push(row);
    }
    let row_perms: Vec<Vec<(Vec<usize>, i8)>> = shape.parts().iter().map(|&p| signed_perms(p as usize)).collect();
    let cols = shape.transpose();
    let col_perms: Vec<Vec<(Vec<usize>, i8)>> = cols.parts().iter().map(|&h| signed_perms(h as usize)).collect();
    let row_lens: Vec<usize> = row_perms.iter().map(Vec::len).collect();
    let col_lens: Vec<usize> = col_perms.iter().map(Vec::len).collect();

    let mut filling: Vec<Vec<u8>> = labels.clone();
    let mut key = vec![0u8; n + tail.len()];
    key[n..].copy_from_slice(tail);
    let neg = -coeff.clone();
    for_each_choice(&row_lens, |rc| {
        let mut sign = 1i8;
        for (i, &c) in rc.iter().enumerate() {
            let (perm, s) = &row_perms[i][c];
            sign *= s;
            for (j, &pj) in perm.iter().enumerate() {
                filling[i][j] = labels[i][pj];
            }
        }
        let c = if sign > 0 { coeff } else { &neg };
        for_each_choice(&col_lens, |cc| {
            for (j, &ci) in cc.iter().enumerate() {
                let (perm, _) = &col_perms[j][ci];
                for (i, &pi) in perm.iter().enumerate() {
                    key[pos[i][j]] = filling[pi][j];
                }
            }
            out.add_term(key.clone(), c.clone());
        });
    });
    Ok(())
}

/// `Y_Λ(Γ) = Σ_{σ ∈ C_Λ} Σ_{τ ∈ R_Λ} sgn(τ) στ` applied to the basis tensor
/// that carries `e_{Γ(b)}` in position `Λ(b)` for every box `b`.
///
/// `Λ` must number its boxes `1..N`; `Γ` must have the same shape. The
/// result is alternating in the rows of `Γ`.
pub fn young_symmetrizer(lam: &Tableau, gamma: &Tableau) -> Result<TensorElem> {
    check_numbering(lam)?;
    if lam.shape() != gamma.shape() {
        return Err(Error::InvalidInput("tableaux of different shapes".into()));
    }
    let mut out = TensorElem::new();
    add_symmetrized(lam, gamma.rows(), &[], &BigInt::from(1), &mut out)?;
    Ok(out)
}

fn check_numbering(lam: &Tableau) -> Result<()> {
    if !lam.is_numbering() {
        return Err(Error::InvalidInput(alloc::format!("{lam} does not number its boxes 1..N")));
    }
    if lam.size() > 255 {
        return Err(Error::InvalidInput("tableau too large".into()));
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Slot {
    Fixed(u32),
    Pi(u32),
}

/// Lift of a highest weight vector of shape `λ` to one of shape `γ`, where
/// `γ/λ` is a horizontal strip of `t` boxes:
///
/// `Σ_π sgn(π) Y_Λ(T_π) ⊗ e_{π(added boxes)}`, with `π` running over the
/// permutations of `1..γ_{i_1}` (`i_1` the top row receiving boxes). In a
/// receiving row the entries right of the next lower receiving row's new
/// length are moved by `π`; the appended factors list the added boxes from
/// the bottom receiving row up, each row left to right.
///
/// Permutations that only reorder the moved entries inside one row give the
/// same term, so the sum runs over set assignments times a constant.
pub fn successor_lift(lam: &Tableau, lambda: &Partition, gamma: &Partition, t: u32) -> Result<TensorElem> {
    check_numbering(lam)?;
    if lam.shape() != lambda {
        return Err(Error::InvalidInput(alloc::format!("{lam} does not have shape {lambda}")));
    }
    if gamma.size() != lambda.size() + t || gamma.rows() > lambda.rows() + 1 {
        return Err(Error::InvalidInput(alloc::format!("{gamma} is not a successor of {lambda}")));
    }
    for i in 0..gamma.rows() {
        let ok = gamma.part(i) >= lambda.part(i) && (i == 0 || gamma.part(i) <= lambda.part(i - 1));
        if !ok {
            return Err(Error::InvalidInput(alloc::format!(
                "{gamma}/{lambda} is not a horizontal strip"
            )));
        }
    }
    let added: Vec<usize> = (0..gamma.rows()).filter(|&i| gamma.part(i) > lambda.part(i)).collect();
    if added.is_empty() {
        // t = 0: nothing to move
        let mut out = TensorElem::new();
        let rows: Vec<Vec<u32>> = lambda.parts().iter().map(|&p| (1..=p).collect()).collect();
        add_symmetrized(lam, &rows, &[], &BigInt::from(1), &mut out)?;
        return Ok(out);
    }
    let big_g = gamma.part(added[0]);
    if big_g > 255 {
        return Err(Error::InvalidInput("shape too wide".into()));
    }

    // template of T_π
    let mut rows: Vec<Vec<Slot>> = lambda
        .parts()
        .iter()
        .map(|&p| (1..=p).map(Slot::Fixed).collect())
        .collect();
    // moved entries of each receiving row, and the fixed prefix length
    let mut groups: Vec<(usize, Vec<u32>, u32)> = Vec::new();
    let mut tail_slots: Vec<u32> = Vec::new();
    for (l, &r) in added.iter().enumerate() {
        let low = added.get(l + 1).map_or(0, |&r2| gamma.part(r2));
        let mut moved = Vec::new();
        if r < rows.len() {
            for (j, slot) in rows[r].iter_mut().enumerate() {
                let c = j as u32 + 1;
                if c > low {
                    *slot = Slot::Pi(c);
                    moved.push(c);
                }
            }
        }
        groups.push((r, moved, low));
    }
    for &r in added.iter().rev() {
        tail_slots.extend(lambda.part(r) + 1..=gamma.part(r));
    }

    let mut factor = BigInt::from(1);
    for (_, moved, _) in &groups {
        for k in 1..=moved.len() {
            factor *= BigInt::from(k);
        }
    }

    let mut out = TensorElem::new();
    let mut pi = vec![0u32; big_g as usize + 1];
    let mut used = vec![false; big_g as usize + 1];
    assign_groups(0, 0, &groups, &tail_slots, &mut pi, &mut used, &mut |pi: &[u32]| {
        let perm: Vec<u32> = pi[1..].to_vec();
        let mut sorted = perm.clone();
        let Some(sign) = sort_sign(&mut sorted) else {
            return Ok(());
        };
        let filled: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| match *s {
                        Slot::Fixed(x) => x,
                        Slot::Pi(c) => pi[c as usize],
                    })
                    .collect()
            })
            .collect();
        let tail: Vec<u8> = tail_slots.iter().map(|&c| pi[c as usize] as u8).collect();
        let coeff = &factor * BigInt::from(sign);
        add_symmetrized(lam, &filled, &tail, &coeff, &mut out)
    })?;
    Ok(out)
}

type Visit<'a> = dyn FnMut(&[u32]) -> Result<()> + 'a;

/// Chooses the image set of each receiving row's moved entries (increasing,
/// avoiding the row's fixed labels), then every ordering of the rest on the
/// appended slots.
fn assign_groups(
    g: usize,
    k: usize,
    groups: &[(usize, Vec<u32>, u32)],
    tail: &[u32],
    pi: &mut Vec<u32>,
    used: &mut Vec<bool>,
    visit: &mut Visit<'_>,
) -> Result<()> {
    if g == groups.len() {
        return assign_tail(0, tail, pi, used, visit);
    }
    let (_, moved, low) = &groups[g];
    if k == moved.len() {
        return assign_groups(g + 1, 0, groups, tail, pi, used, visit);
    }
    let start = if k == 0 { low + 1 } else { pi[moved[k - 1] as usize] + 1 };
    for x in start..pi.len() as u32 {
        if !used[x as usize] {
            used[x as usize] = true;
            pi[moved[k] as usize] = x;
            assign_groups(g, k + 1, groups, tail, pi, used, visit)?;
            used[x as usize] = false;
        }
    }
    Ok(())
}

fn assign_tail(s: usize, tail: &[u32], pi: &mut Vec<u32>, used: &mut Vec<bool>, visit: &mut Visit<'_>) -> Result<()> {
    if s == tail.len() {
        return visit(pi);
    }
    for x in 1..pi.len() {
        if !used[x] {
            used[x] = true;
            pi[tail[s] as usize] = x as u32;
            assign_tail(s + 1, tail, pi, used, visit)?;
            used[x] = false;
        }
    }
    Ok(())
}
