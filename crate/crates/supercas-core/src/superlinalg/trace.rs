use alloc::vec::Vec;

use super::{GradedSpace, SuperMatrix};
use crate::error::{Error, Result};
use crate::Rational;

fn check_square(a: &SuperMatrix) -> Result<()> {
    if a.rows().parities() != a.cols().parities() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    Ok(())
}

/// `str A = Σ (−1)^{[a]} A^a_a`.
pub fn supertrace(a: &SuperMatrix) -> Result<Rational> {
    check_square(a)?;
    let mut s = Rational::zero();
    for i in 0..a.nrows() {
        let v = a.get(i, i);
        if a.rows().parity(i) == 1 {
            s -= &v;
        } else {
            s += &v;
        }
    }
    Ok(s)
}

pub fn trace(a: &SuperMatrix) -> Result<Rational> {
    check_square(a)?;
    Ok((0..a.nrows()).map(|i| a.get(i, i)).sum())
}

/// `(str₂A)^i_j = Σ_β (−1)^{[β]} A^{iβ}_{jβ}` on a two-factor space `V⊗W`.
pub fn partial_supertrace_second(a: &SuperMatrix) -> Result<SuperMatrix> {
    check_square(a)?;
    let f = a.rows().factors();
    if f.len() != 2 || a.cols().factors() != f {
        return Err(Error::NotTwoFactor);
    }
    let v = GradedSpace::from_parities(f[0].clone());
    let w = &f[1];
    let dw = w.len();
    let mut t = Vec::new();
    for (r, c, x) in a.iter_nonzero() {
        let (i, be) = (r / dw, r % dw);
        let (j, be2) = (c / dw, c % dw);
        if be == be2 {
            t.push((i, j, if w[be] == 1 { -x.clone() } else { x.clone() }));
        }
    }
    Ok(SuperMatrix::from_triplets(v.clone(), v, t).into_kind(a.kind()))
}

/// The graded commutator `[A, B} = AB − (−1)^{[A][B]} BA` of homogeneous operators.
pub fn graded_bracket(a: &SuperMatrix, pa: u8, b: &SuperMatrix, pb: u8) -> SuperMatrix {
    let ab = a * b;
    let ba = b * a;
    if pa & pb == 1 {
        &ab + &ba
    } else {
        &ab - &ba
    }
}

/// Parity of a homogeneous operator, `None` for the zero operator or a mixed one.
pub fn operator_parity(a: &SuperMatrix) -> Option<u8> {
    let mut p = None;
    for (r, c, _) in a.iter_nonzero() {
        let q = a.rows().parity(r) ^ a.cols().parity(c);
        match p {
            None => p = Some(q),
            Some(x) if x != q => return None,
            _ => {}
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlinalg::superperm;

    #[test]
    fn identity_traces() {
        let v = GradedSpace::standard(3, 2);
        let i = SuperMatrix::identity(v.clone());
        assert_eq!(supertrace(&i).unwrap(), Rational::from_int(1));
        assert_eq!(trace(&i).unwrap(), Rational::from_int(5));
        assert_eq!(supertrace(&superperm(&v)).unwrap(), Rational::from_int(1));
    }

    #[test]
    fn str2_of_identity_is_sdim() {
        let v = GradedSpace::standard(2, 1);
        let w = GradedSpace::standard(1, 3);
        let i = SuperMatrix::identity(v.tensor(&w));
        let s = partial_supertrace_second(&i).unwrap();
        assert_eq!(s, SuperMatrix::identity(v).scale(&Rational::from_int(-2)));
    }

    #[test]
    fn non_square_rejected() {
        let a = SuperMatrix::zeros(GradedSpace::standard(1, 1), GradedSpace::standard(2, 0));
        assert!(matches!(supertrace(&a), Err(Error::NotSquare { .. })));
        let b = SuperMatrix::identity(GradedSpace::standard(2, 2));
        assert_eq!(partial_supertrace_second(&b), Err(Error::NotTwoFactor));
    }
}
