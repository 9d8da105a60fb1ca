use alloc::vec;
use alloc::vec::Vec;

use super::{GradedSpace, StorageKind, SuperMatrix};
use crate::error::{Error, Result};
use crate::Rational;

/// Graded tensor product `(A⊗B)^{kβ}_{iα} = (−1)^{([α]+[β])[i]} A^k_i B^β_α`.
pub fn graded_kron(a: &SuperMatrix, b: &SuperMatrix) -> SuperMatrix {
    let rows = a.rows().tensor(b.rows());
    let cols = a.cols().tensor(b.cols());
    let (nrb, ncb) = (b.nrows(), b.ncols());
    let odd = |i: usize, al: usize, be: usize| {
        a.cols().parity(i) & (b.cols().parity(al) ^ b.rows().parity(be)) == 1
    };
    if a.kind() == StorageKind::Dense && b.kind() == StorageKind::Dense {
        return SuperMatrix::from_fn(rows, cols, |r, c| {
            let (k, be) = (r / nrb, r % nrb);
            let (i, al) = (c / ncb, c % ncb);
            let v = a.get(k, i) * b.get(be, al);
            if odd(i, al, be) {
                -v
            } else {
                v
            }
        });
    }
    let mut t = Vec::with_capacity(a.nnz() * b.nnz());
    for (k, i, x) in a.iter_nonzero() {
        for (be, al, y) in b.iter_nonzero() {
            let v = x * y;
            let v = if odd(i, al, be) { -v } else { v };
            t.push((k * nrb + be, i * ncb + al, v));
        }
    }
    SuperMatrix::from_triplets(rows, cols, t)
}

/// Superpermutation on `V⊗V`: `P^{k₁k₂}_{m₁m₂} = (−1)^{[k₁][k₂]} δ^{k₁}_{m₂} δ^{k₂}_{m₁}`.
pub fn superperm(v: &GradedSpace) -> SuperMatrix {
    let d = v.dim();
    let vv = v.tensor(v);
    let t = (0..d).flat_map(|k1| {
        (0..d).map(move |k2| {
            let s = if v.parity(k1) & v.parity(k2) == 1 {
                Rational::from_int(-1)
            } else {
                Rational::one()
            };
            (k1 * d + k2, k2 * d + k1, s)
        })
    });
    SuperMatrix::from_triplets(vv.clone(), vv, t)
}

/// The common factor of a square operator on `V^{⊗r}`, with `r`.
fn single_factor(a: &SuperMatrix) -> Result<(GradedSpace, usize)> {
    let f = a.rows().factors();
    if f.is_empty() || f != a.cols().factors() || f.iter().any(|x| x != &f[0]) {
        return Err(Error::MixedFactors);
    }
    Ok((GradedSpace::from_parities(f[0].clone()), f.len()))
}

/// Sign exponent of the ordered product of elementary matrices `e_{k_p}^{m_p}`.
fn elementary_sign(pv: &[u8], k: &[usize], m: &[usize]) -> u8 {
    let mut acc = 0u8;
    let mut s = 0u8;
    for (&kp, &mp) in k.iter().zip(m) {
        s ^= acc & (pv[kp] ^ pv[mp]);
        acc ^= pv[mp];
    }
    s
}

fn digits(mut x: usize, d: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = x % d;
        x /= d;
    }
}

fn undigits(ds: &[usize], d: usize) -> usize {
    ds.iter().fold(0, |acc, &x| acc * d + x)
}

/// `A_{α₁…α_r}`: an operator on `V^{⊗r}` acting in the factors `positions`
/// (1-based, strictly increasing) of `V^{⊗s}` and as the identity elsewhere.
pub fn place(a: &SuperMatrix, positions: &[usize], s: usize) -> Result<SuperMatrix> {
    let (v, r) = single_factor(a)?;
    if positions.len() != r || r > s {
        return Err(Error::TooManyFactors { r, s });
    }
    for &p in positions {
        if p == 0 || p > s {
            return Err(Error::PositionOutOfRange { pos: p, s });
        }
    }
    if positions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonIncreasing);
    }
    let space = v.power(s);
    if r == s {
        return Ok(a.clone().with_spaces(space.clone(), space));
    }
    let d = v.dim();
    let pv = v.parities();
    let free: Vec<usize> = (1..=s).filter(|p| !positions.contains(p)).collect();
    let n_free = d.pow(free.len() as u32);
    let (mut kd, mut md) = (vec![0; r], vec![0; r]);
    let (mut kk, mut mm) = (vec![0; s], vec![0; s]);
    let mut fd = vec![0; free.len()];
    let mut t = Vec::with_capacity(a.nnz() * n_free);
    for (k, m, x) in a.iter_nonzero() {
        digits(k, d, &mut kd);
        digits(m, d, &mut md);
        let inner = elementary_sign(pv, &kd, &md);
        for (j, &p) in positions.iter().enumerate() {
            kk[p - 1] = kd[j];
            mm[p - 1] = md[j];
        }
        for f in 0..n_free {
            digits(f, d, &mut fd);
            for (j, &p) in free.iter().enumerate() {
                kk[p - 1] = fd[j];
                mm[p - 1] = fd[j];
            }
            let sign = inner ^ elementary_sign(pv, &kk, &mm);
            let val = if sign == 1 { -x.clone() } else { x.clone() };
            t.push((undigits(&kk, d), undigits(&mm, d), val));
        }
    }
    Ok(SuperMatrix::from_triplets(space.clone(), space, t))
}

/// Like [`place`] but with arbitrary distinct positions: factor `j` of `A`
/// lands in factor `positions[j]`, e.g. `K₃₂ = P₂₃ K₂₃ P₂₃`.
pub fn place_any(a: &SuperMatrix, positions: &[usize], s: usize) -> Result<SuperMatrix> {
    let (v, r) = single_factor(a)?;
    if positions.len() != r {
        return Err(Error::TooManyFactors { r, s });
    }
    let mut sorted = positions.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::RepeatedPosition);
    }
    let mut pos = positions.to_vec();
    let mut op = a.clone();
    let p = superperm(&v).into_kind(a.kind());
    // bubble sort, conjugating by adjacent superpermutations of A's own factors
    let mut swapped = true;
    while swapped {
        swapped = false;
        for j in 0..r.saturating_sub(1) {
            if pos[j] > pos[j + 1] {
                pos.swap(j, j + 1);
                let pj = place(&p, &[j + 1, j + 2], r)?.into_kind(a.kind());
                op = &(&pj * &op) * &pj;
                swapped = true;
            }
        }
    }
    place(&op, &pos, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn v11() -> GradedSpace {
        GradedSpace::standard(1, 1)
    }

    fn unit(v: &GradedSpace, r: usize, c: usize) -> SuperMatrix {
        SuperMatrix::from_triplets(v.clone(), v.clone(), [(r, c, Rational::one())])
    }

    #[test]
    fn kron_sign_oracle_all_sixteen_tuples() {
        let v = v11();
        for k in 0..2 {
            for i in 0..2 {
                for be in 0..2 {
                    for al in 0..2 {
                        let m = graded_kron(&unit(&v, k, i), &unit(&v, be, al));
                        let expect = if i == 1 && (al + be) % 2 == 1 { -1 } else { 1 };
                        assert_eq!(m.nnz(), 1);
                        assert_eq!(m.get(k * 2 + be, i * 2 + al), q(expect, 1));
                    }
                }
            }
        }
    }

    #[test]
    fn superperm_small_cases() {
        let even = GradedSpace::standard(1, 0);
        let p = superperm(&even);
        assert_eq!(p, SuperMatrix::identity(even.power(2)));
        let odd = GradedSpace::standard(0, 1);
        assert_eq!(superperm(&odd).get(0, 0), q(-1, 1));
        let p = superperm(&v11());
        assert_eq!(&p * &p, SuperMatrix::identity(v11().power(2)));
    }

    #[test]
    fn place_rejects_bad_positions() {
        let p = superperm(&v11());
        assert_eq!(place(&p, &[0, 1], 3), Err(Error::PositionOutOfRange { pos: 0, s: 3 }));
        assert_eq!(place(&p, &[1, 4], 3), Err(Error::PositionOutOfRange { pos: 4, s: 3 }));
        assert_eq!(place(&p, &[2, 1], 3), Err(Error::NonIncreasing));
        assert_eq!(place(&p, &[1, 2, 3], 3), Err(Error::TooManyFactors { r: 2, s: 3 }));
        assert_eq!(place_any(&p, &[2, 2], 3), Err(Error::RepeatedPosition));
    }

    #[test]
    fn transposition_chain() {
        let v = GradedSpace::standard(2, 1);
        let p = superperm(&v);
        let p12 = place(&p, &[1, 2], 3).unwrap();
        let p23 = place(&p, &[2, 3], 3).unwrap();
        let p13 = place(&p, &[1, 3], 3).unwrap();
        assert_eq!(p13, &(&p23 * &p12) * &p23);
        assert_eq!(p13, &(&p12 * &p23) * &p12);
        assert_eq!(place_any(&p, &[3, 1], 3).unwrap(), p13);
    }
}
