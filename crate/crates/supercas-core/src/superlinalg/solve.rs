use alloc::vec;
use alloc::vec::Vec;

use super::SuperMatrix;
use crate::error::{Error, Result};
use crate::Rational;

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip().unwrap();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, y) in other.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn dense_rows(a: &SuperMatrix) -> Vec<Vec<Rational>> {
    let mut m = vec![vec![Rational::zero(); a.ncols()]; a.nrows()];
    for (r, c, v) in a.iter_nonzero() {
        m[r][c] = v.clone();
    }
    m
}

pub fn rank(a: &SuperMatrix) -> usize {
    let mut m = dense_rows(a);
    rref(&mut m, a.ncols()).len()
}

/// Exact inverse by Gauss–Jordan elimination. The result is dense.
pub fn inverse(a: &SuperMatrix) -> Result<SuperMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    let n = a.nrows();
    let mut m = dense_rows(a);
    for (i, row) in m.iter_mut().enumerate() {
        row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
    }
    let piv = rref(&mut m, n);
    if piv.len() < n {
        return Err(Error::Singular);
    }
    Ok(SuperMatrix::from_fn(a.cols().clone(), a.rows().clone(), |r, c| {
        m[r][n + c].clone()
    }))
}

/// Coordinates with respect to a linearly independent family of vectors.
///
/// The family is the set of columns of `basis`. Coordinates are read off a
/// set of pivot rows and then checked against the whole vector.
#[derive(Clone, Debug)]
pub struct Coordinates {
    basis: SuperMatrix,
    rows: Vec<usize>,
    inv: Vec<Vec<Rational>>,
}

impl Coordinates {
    pub fn new(basis: SuperMatrix) -> Result<Self> {
        let n = basis.ncols();
        // pivot columns of basisᵀ are independent rows of the basis
        let bt = basis.transpose();
        let mut m = dense_rows(&bt);
        let rows = rref(&mut m, bt.ncols());
        if rows.len() < n {
            return Err(Error::Singular);
        }
        let sub = SuperMatrix::from_fn(
            super::GradedSpace::from_parities(vec![0; n]),
            super::GradedSpace::from_parities(vec![0; n]),
            |i, j| basis.get(rows[i], j),
        );
        let inv = dense_rows(&inverse(&sub)?);
        Ok(Coordinates { basis, rows, inv })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Coordinates of `x` (given by its entries), or `NotInSpan`.
    pub fn solve(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        let xr: Vec<&Rational> = self.rows.iter().map(|&r| &x[r]).collect();
        let c: Vec<Rational> = self
            .inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&xr)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * *b)
                    .sum()
            })
            .collect();
        let mut back = vec![Rational::zero(); x.len()];
        for (r, j, v) in self.basis.iter_nonzero() {
            if !c[j].is_zero() {
                back[r] += &(v * &c[j]);
            }
        }
        if back.as_slice() != x {
            return Err(Error::NotInSpan);
        }
        Ok(c)
    }

    /// The left inverse read off the pivot rows, as a matrix `n × dim`.
    pub fn left_inverse(&self) -> SuperMatrix {
        let n = self.len();
        let t = self.inv.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(k, v)| (i, self.rows[k], v.clone()))
        });
        SuperMatrix::from_triplets(
            super::GradedSpace::from_parities(vec![0; n]),
            self.basis.rows().clone(),
            t.collect::<Vec<_>>(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::superlinalg::GradedSpace;

    #[test]
    fn inverse_round_trip() {
        let v = GradedSpace::standard(2, 1);
        let a = SuperMatrix::from_fn(v.clone(), v.clone(), |r, c| {
            q(((r + 1) * (c + 2) % 5) as i64 + if r == c { 3 } else { 0 }, 1)
        });
        let inv = inverse(&a).unwrap();
        assert_eq!(&a * &inv, SuperMatrix::identity(v));
        let s = SuperMatrix::zeros(GradedSpace::standard(2, 0), GradedSpace::standard(2, 0));
        assert_eq!(inverse(&s), Err(Error::Singular));
    }

    #[test]
    fn coordinates_detect_span() {
        let sp3 = GradedSpace::standard(3, 0);
        let sp2 = GradedSpace::standard(2, 0);
        let b = SuperMatrix::from_triplets(
            sp3,
            sp2,
            [(0, 0, q(1, 1)), (1, 0, q(1, 1)), (1, 1, q(2, 1)), (2, 1, q(1, 1))],
        );
        let c = Coordinates::new(b).unwrap();
        let x = [q(3, 1), q(1, 1), q(-1, 1)];
        assert_eq!(c.solve(&x).unwrap(), [q(3, 1), q(-1, 1)]);
        assert_eq!(c.solve(&[q(1, 1), q(0, 1), q(0, 1)]), Err(Error::NotInSpan));
        assert_eq!(rank(&c.left_inverse()), 2);
    }
}
