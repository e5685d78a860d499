use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{MinorPolynomial, MinorSymbol};
use crate::error::{Error, Result};
use crate::multilinear::{bi_tensor, sort_sign, symmetrize, ExtIndex, ExtTensor};

/// `{a, ..., b}` (empty when `a > b`).
fn range(a: u32, b: u32) -> Vec<u8> {
    (a..=b).map(|x| x as u8).collect()
}

/// Ordered partitions of `set` into increasing blocks of the given sizes,
/// with the sign of the permutation that sorts their concatenation.
pub(crate) fn block_partitions(set: &[u8], sizes: &[usize]) -> Vec<(Vec<Vec<u8>>, i8)> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_blocks(set, sizes, &mut cur, &mut out);
    out
}

fn fill_blocks(rest: &[u8], sizes: &[usize], cur: &mut Vec<Vec<u8>>, out: &mut Vec<(Vec<Vec<u8>>, i8)>) {
    if sizes.is_empty() {
        if rest.is_empty() {
            let mut cat: Vec<u8> = cur.iter().flatten().copied().collect();
            let s = sort_sign(&mut cat).expect("blocks are disjoint");
            out.push((cur.clone(), s));
        }
        return;
    }
    for block in subsets(rest, sizes[0]) {
        let left: Vec<u8> = rest.iter().copied().filter(|x| !block.contains(x)).collect();
        cur.push(block);
        fill_blocks(&left, &sizes[1..], cur, out);
        cur.pop();
    }
}

/// Increasing `k`-subsets of `set`, lexicographic.
fn subsets(set: &[u8], k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(set: &[u8], k: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..set.len() {
            if set.len() - i < k - cur.len() {
                break;
            }
            cur.push(set[i]);
            go(set, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(set, k, 0, &mut cur, &mut out);
    out
}

fn cat(parts: &[&[u8]]) -> Vec<u8> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn minus(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().copied().filter(|x| !b.contains(x)).collect()
}

/// Adds `c · ∏ [rows_k | cols_k]` with each factor re-sorted (and signed).
fn add_product(p: &mut MinorPolynomial, factors: &[(Vec<u8>, Vec<u8>)], c: i64) -> Result<()> {
    let mut mono = Vec::with_capacity(factors.len());
    let mut sign = c;
    for (r, k) in factors {
        match MinorSymbol::from_lists(r, k)? {
            Some((s, e)) => {
                mono.push(s);
                sign *= e as i64;
            }
            None => return Ok(()),
        }
    }
    p.add_term(mono, BigInt::from(sign));
    Ok(())
}

fn check_index_range(top: u32) -> Result<()> {
    if top > 255 {
        return Err(Error::OutOfRange("indices above 255".into()));
    }
    Ok(())
}

fn check_quadratic(t: u32, u: u32, v: u32) -> Result<()> {
    if t == 0 || u > t || v > t || (u + v) % 2 != 0 || u == v {
        return Err(Error::OutOfRange(alloc::format!(
            "f_(u,v) needs 0 <= u,v <= t, u+v even, u != v; got t={t}, u={u}, v={v}"
        )));
    }
    check_index_range(t + u.max(v))
}

/// `f_{u,v} = Σ (-1)^{I,J} (-1)^{H,K} [1..t-u, I | 1..t-v, H][1..t-u, J | 1..t-v, K]`
/// over splits `I ⊔ J` of `{t-u+1..t+u}` into `u`-sets with `I` before `J`,
/// and all splits `H ⊔ K` of `{t-v+1..t+v}` into `v`-sets. Normalized.
///
/// For `u = 0` the split `I, J` is empty and `H` before `K` is used instead;
/// both halvings drop a factor of two only.
pub fn quadratic_relation(t: u32, u: u32, v: u32) -> Result<MinorPolynomial> {
    check_quadratic(t, u, v)?;
    let p_rows = range(1, t - u);
    let p_cols = range(1, t - v);
    let x = range(t - u + 1, t + u);
    let y = range(t - v + 1, t + v);
    let ij = block_partitions(&x, &[u as usize, u as usize]);
    let hk = block_partitions(&y, &[v as usize, v as usize]);
    let mut p = MinorPolynomial::new();
    for (a, s1) in &ij {
        if u > 0 && a[0] >= a[1] {
            continue;
        }
        for (b, s2) in &hk {
            if u == 0 && b[0] >= b[1] {
                continue;
            }
            let f = [
                (cat(&[&p_rows, &a[0]]), cat(&[&p_cols, &b[0]])),
                (cat(&[&p_rows, &a[1]]), cat(&[&p_cols, &b[1]])),
            ];
            add_product(&mut p, &f, (*s1 as i64) * (*s2 as i64))?;
        }
    }
    Ok(p.normalized())
}

fn check_even(t: u32, u: u32) -> Result<()> {
    if t == 0 || u < 1 || 2 * u > t {
        return Err(Error::OutOfRange(alloc::format!("g_u needs 1 <= u <= t/2; got t={t}, u={u}")));
    }
    check_index_range(t + 2 * u)
}

fn check_odd(t: u32, u: u32) -> Result<()> {
    if t == 0 || u < 2 || u > t.div_ceil(2) {
        return Err(Error::OutOfRange(alloc::format!("h_u needs 2 <= u <= ceil(t/2); got t={t}, u={u}")));
    }
    check_index_range(t + 2 * u)
}

/// The even cubic `g_u`:
/// `Σ (-1)^{A,B,C} (-1)^{L,M,N} [P,K∖A|Q,L][P,K∖B|Q,M][P,K∖C|Q,N]` with
/// `A < B < C` lexicographic `u`-sets partitioning `K = {t-2u+1..t+u}`,
/// `L, M, N` any `u`-sets partitioning `{t-u+1..t+2u}`, `P = {1..t-2u}`,
/// `Q = {1..t-u}`. Normalized.
pub fn even_cubic(t: u32, u: u32) -> Result<MinorPolynomial> {
    check_even(t, u)?;
    let pp = range(1, t - 2 * u);
    let k = range(t - 2 * u + 1, t + u);
    let q = range(1, t - u);
    let x = range(t - u + 1, t + 2 * u);
    let uu = u as usize;
    let abc = block_partitions(&k, &[uu, uu, uu]);
    let lmn = block_partitions(&x, &[uu, uu, uu]);
    let mut p = MinorPolynomial::new();
    for (a, s1) in &abc {
        if !(a[0] < a[1] && a[1] < a[2]) {
            continue;
        }
        for (l, s2) in &lmn {
            let f: Vec<(Vec<u8>, Vec<u8>)> = (0..3)
                .map(|i| (cat(&[&pp, &minus(&k, &a[i])]), cat(&[&q, &l[i]])))
                .collect();
            add_product(&mut p, &f, (*s1 as i64) * (*s2 as i64))?;
        }
    }
    Ok(p.normalized())
}

/// The odd cubic `h_u`: with `K = {t-2u+2..t+u-1}`, `P = {1..t-2u+1}`,
/// `Q = {1..t-u}`, `|A| = |C| = |L| = |N| = u-1`, `|B| = |M| = u`,
/// `Σ (-1)^{A,B,C} (-1)^{L,M,N} ( [P,K∖A|Q,L,t-u+1][P,K∖B,t+u|Q,M][P,K∖C|Q,N,t-u+1]
///   + ε [P,K∖A|Q,M][P,K∖B,t+u|Q,L,t-u+1][P,K∖C|Q,N,t-u+1] )`
/// with `ε = (-1)^u`. Here `(-1)^{A,B,C}` is the sign of sorting the
/// concatenation `A,B,C`; with that convention the relative sign between
/// the two products depends on the parity of `u` (for odd `u` it is the
/// familiar minus). Index lists such as `Q,L,t-u+1` are not increasing; the
/// minor then picks up the sign of sorting its columns.
///
/// The sum runs over all `A, C`. Swapping `A` with `C` (and `L` with `N`)
/// fixes the first product but not the second, so it cannot be halved.
/// Normalized.
pub fn odd_cubic(t: u32, u: u32) -> Result<MinorPolynomial> {
    check_odd(t, u)?;
    let pp = range(1, t + 1 - 2 * u);
    let k = range(t + 2 - 2 * u, t + u - 1);
    let q = range(1, t - u);
    let x = range(t - u + 2, t + 2 * u - 1);
    let r_extra = [(t + u) as u8];
    let c_extra = [(t - u + 1) as u8];
    let (s, b) = ((u - 1) as usize, u as usize);
    let abc = block_partitions(&k, &[s, b, s]);
    let lmn = block_partitions(&x, &[s, b, s]);
    let eps = odd_sign(u);
    let mut p = MinorPolynomial::new();
    for (a, s1) in &abc {
        let ra = cat(&[&pp, &minus(&k, &a[0])]);
        let rb = cat(&[&pp, &minus(&k, &a[1]), &r_extra]);
        let rc = cat(&[&pp, &minus(&k, &a[2])]);
        for (l, s2) in &lmn {
            let (ll, mm, nn) = (&l[0], &l[1], &l[2]);
            let sign = (*s1 as i64) * (*s2 as i64);
            let first = [
                (ra.clone(), cat(&[&q, ll, &c_extra])),
                (rb.clone(), cat(&[&q, mm])),
                (rc.clone(), cat(&[&q, nn, &c_extra])),
            ];
            let second = [
                (ra.clone(), cat(&[&q, mm])),
                (rb.clone(), cat(&[&q, ll, &c_extra])),
                (rc.clone(), cat(&[&q, nn, &c_extra])),
            ];
            add_product(&mut p, &first, sign)?;
            add_product(&mut p, &second, eps * sign)?;
        }
    }
    Ok(p.normalized())
}

/// Swaps rows and columns in every symbol.
pub fn mirror(p: &MinorPolynomial) -> MinorPolynomial {
    let mut out = MinorPolynomial::new();
    for (m, c) in p.terms() {
        out.add_term(m.iter().map(|s| s.transposed()).collect(), c.clone());
    }
    out.normalized()
}

/// `Σ sign · ⊗_k e_{base ∪ blocks[k]}` over the given block partitions,
/// with an optional extra index appended to chosen factors.
fn wedge_sum(
    base: &[u8],
    parts: &[(Vec<Vec<u8>>, i8)],
    complement_of: Option<&[u8]>,
    extra: &[Option<u8>],
    order: &[usize],
) -> Result<ExtTensor> {
    let mut out = ExtTensor::new();
    for (blocks, s) in parts {
        let mut key = Vec::with_capacity(order.len());
        let mut sign = *s;
        let mut zero = false;
        for (pos, &bi) in order.iter().enumerate() {
            let body = match complement_of {
                Some(k) => minus(k, &blocks[bi]),
                None => blocks[bi].clone(),
            };
            let mut list = cat(&[base, &body]);
            if let Some(e) = extra[pos] {
                list.push(e);
            }
            match ExtIndex::from_unsorted(&list) {
                Some((e, sg)) => {
                    key.push(e);
                    sign *= sg;
                }
                None => {
                    zero = true;
                    break;
                }
            }
        }
        if !zero {
            out.add_term(key, BigInt::from(sign));
        }
    }
    Ok(out)
}

/// `f_{u,v}` rebuilt as the image of (row highest weight vector) ⊗ (column
/// highest weight vector) in the symmetric square. Normalized.
pub fn quadratic_by_tensors(t: u32, u: u32, v: u32) -> Result<MinorPolynomial> {
    check_quadratic(t, u, v)?;
    let row = wedge_sum(
        &range(1, t - u),
        &block_partitions(&range(t - u + 1, t + u), &[u as usize, u as usize]),
        None,
        &[None, None],
        &[0, 1],
    )?;
    let col = wedge_sum(
        &range(1, t - v),
        &block_partitions(&range(t - v + 1, t + v), &[v as usize, v as usize]),
        None,
        &[None, None],
        &[0, 1],
    )?;
    Ok(symmetrize(&bi_tensor(&row, &col)?).normalized())
}

/// `g_u` rebuilt from its row and column highest weight vectors.
pub fn even_cubic_by_tensors(t: u32, u: u32) -> Result<MinorPolynomial> {
    check_even(t, u)?;
    let uu = u as usize;
    let k = range(t - 2 * u + 1, t + u);
    let row = wedge_sum(
        &range(1, t - 2 * u),
        &block_partitions(&k, &[uu, uu, uu]),
        Some(&k),
        &[None, None, None],
        &[0, 1, 2],
    )?;
    let col = wedge_sum(
        &range(1, t - u),
        &block_partitions(&range(t - u + 1, t + 2 * u), &[uu, uu, uu]),
        None,
        &[None, None, None],
        &[0, 1, 2],
    )?;
    Ok(symmetrize(&bi_tensor(&row, &col)?).normalized())
}

fn odd_sign(u: u32) -> i64 {
    if u % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `h_u` rebuilt from `v = v_1 + ε v_2` and `w = w_1 + ε w_2`, `ε = (-1)^u`.
pub fn odd_cubic_by_tensors(t: u32, u: u32) -> Result<MinorPolynomial> {
    check_odd(t, u)?;
    let (s, b) = ((u - 1) as usize, u as usize);
    let k = range(t + 2 - 2 * u, t + u - 1);
    let pp = range(1, t + 1 - 2 * u);
    let abc = block_partitions(&k, &[s, b, s]);
    let r = Some((t + u) as u8);
    // blocks are (A, B, C): v_1 = (K∖A) ⊗ (K∖B, t+u) ⊗ (K∖C), v_2 swaps the first two
    let v1 = wedge_sum(&pp, &abc, Some(&k), &[None, r, None], &[0, 1, 2])?;
    let v2 = wedge_sum(&pp, &abc, Some(&k), &[r, None, None], &[1, 0, 2])?;
    let eps = BigInt::from(odd_sign(u));
    let mut v = v1;
    v.add_scaled(&v2, &eps);

    let q = range(1, t - u);
    let lmn = block_partitions(&range(t - u + 2, t + 2 * u - 1), &[s, b, s]);
    let c = Some((t - u + 1) as u8);
    let w1 = wedge_sum(&q, &lmn, None, &[c, None, c], &[0, 1, 2])?;
    let w2 = wedge_sum(&q, &lmn, None, &[None, c, c], &[1, 0, 2])?;
    let mut w = w1;
    w.add_scaled(&w2, &eps);
    Ok(symmetrize(&bi_tensor(&v, &w)?).normalized())
}
