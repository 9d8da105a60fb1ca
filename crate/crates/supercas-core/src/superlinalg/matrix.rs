use alloc::borrow::Cow;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::GradedSpace;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StorageKind {
    Dense,
    Sparse,
}

type Row = Vec<(u32, Rational)>;

#[derive(Clone, Debug)]
enum Storage {
    /// Row-major, `nrows * ncols` entries.
    Dense(Vec<Rational>),
    /// One sorted row per index, zeros never stored.
    Sparse(Vec<Row>),
}

/// Linear map between graded spaces with exact entries.
///
/// `A^r_c` is stored at row `r`, column `c`. Results of binary operations
/// are dense only when both operands are dense.
#[derive(Clone, Debug)]
pub struct SuperMatrix {
    rows: GradedSpace,
    cols: GradedSpace,
    data: Storage,
}

impl SuperMatrix {
    pub fn zeros(rows: GradedSpace, cols: GradedSpace) -> Self {
        let n = rows.dim();
        SuperMatrix {
            rows,
            cols,
            data: Storage::Sparse(vec![Vec::new(); n]),
        }
    }

    pub fn identity(space: GradedSpace) -> Self {
        let n = space.dim();
        let rows = (0..n).map(|i| vec![(i as u32, Rational::one())]).collect();
        SuperMatrix {
            rows: space.clone(),
            cols: space,
            data: Storage::Sparse(rows),
        }
    }

    /// Sparse matrix from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets<I>(rows: GradedSpace, cols: GradedSpace, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut data: Vec<Row> = vec![Vec::new(); rows.dim()];
        let nc = cols.dim();
        for (r, c, v) in triplets {
            assert!(r < data.len() && c < nc, "triplet ({r}, {c}) out of range");
            if !v.is_zero() {
                data[r].push((c as u32, v));
            }
        }
        for row in &mut data {
            normalize_row(row);
        }
        SuperMatrix {
            rows,
            cols,
            data: Storage::Sparse(data),
        }
    }

    /// Dense matrix with entries `f(row, col)`.
    pub fn from_fn<F>(rows: GradedSpace, cols: GradedSpace, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Rational,
    {
        let (nr, nc) = (rows.dim(), cols.dim());
        let mut data = Vec::with_capacity(nr * nc);
        for r in 0..nr {
            for c in 0..nc {
                data.push(f(r, c));
            }
        }
        SuperMatrix {
            rows,
            cols,
            data: Storage::Dense(data),
        }
    }

    pub fn rows(&self) -> &GradedSpace {
        &self.rows
    }

    pub fn cols(&self) -> &GradedSpace {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.dim()
    }

    pub fn ncols(&self) -> usize {
        self.cols.dim()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn kind(&self) -> StorageKind {
        match self.data {
            Storage::Dense(_) => StorageKind::Dense,
            Storage::Sparse(_) => StorageKind::Sparse,
        }
    }

    pub fn to_kind(&self, kind: StorageKind) -> SuperMatrix {
        match kind {
            StorageKind::Dense => self.to_dense(),
            StorageKind::Sparse => self.to_sparse(),
        }
    }

    pub fn into_kind(self, kind: StorageKind) -> SuperMatrix {
        if self.kind() == kind {
            self
        } else {
            self.to_kind(kind)
        }
    }

    pub fn to_dense(&self) -> SuperMatrix {
        let data = match &self.data {
            Storage::Dense(d) => d.clone(),
            Storage::Sparse(rows) => {
                let nc = self.ncols();
                let mut d = vec![Rational::zero(); self.nrows() * nc];
                for (r, row) in rows.iter().enumerate() {
                    for (c, v) in row {
                        d[r * nc + *c as usize] = v.clone();
                    }
                }
                d
            }
        };
        SuperMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: Storage::Dense(data),
        }
    }

    pub fn to_sparse(&self) -> SuperMatrix {
        SuperMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: Storage::Sparse(self.sparse_rows().into_owned()),
        }
    }

    fn sparse_rows(&self) -> Cow<'_, [Row]> {
        match &self.data {
            Storage::Sparse(rows) => Cow::Borrowed(rows),
            Storage::Dense(d) => {
                let nc = self.ncols();
                let rows = (0..self.nrows())
                    .map(|r| {
                        d[r * nc..(r + 1) * nc]
                            .iter()
                            .enumerate()
                            .filter(|(_, v)| !v.is_zero())
                            .map(|(c, v)| (c as u32, v.clone()))
                            .collect()
                    })
                    .collect();
                Cow::Owned(rows)
            }
        }
    }

    /// Same entries, relabelled spaces of equal dimensions.
    pub fn with_spaces(mut self, rows: GradedSpace, cols: GradedSpace) -> SuperMatrix {
        assert_eq!(rows.dim(), self.nrows(), "row dimension mismatch");
        assert_eq!(cols.dim(), self.ncols(), "column dimension mismatch");
        self.rows = rows;
        self.cols = cols;
        self
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match &self.data {
            Storage::Dense(d) => d[r * self.ncols() + c].clone(),
            Storage::Sparse(rows) => match rows[r].binary_search_by_key(&(c as u32), |e| e.0) {
                Ok(i) => rows[r][i].1.clone(),
                Err(_) => Rational::zero(),
            },
        }
    }

    /// Nonzero entries of row `r`, by increasing column.
    pub fn row(&self, r: usize) -> RowIter<'_> {
        match &self.data {
            Storage::Dense(d) => {
                let nc = self.ncols();
                RowIter::Dense(d[r * nc..(r + 1) * nc].iter().enumerate())
            }
            Storage::Sparse(rows) => RowIter::Sparse(rows[r].iter()),
        }
    }

    /// All nonzero entries sorted by `(row, col)`.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        (0..self.nrows()).flat_map(move |r| self.row(r).map(move |(c, v)| (r, c, v)))
    }

    pub fn nnz(&self) -> usize {
        match &self.data {
            Storage::Dense(d) => d.iter().filter(|v| !v.is_zero()).count(),
            Storage::Sparse(rows) => rows.iter().map(Vec::len).sum(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Storage::Dense(d) => d.iter().all(Rational::is_zero),
            Storage::Sparse(rows) => rows.iter().all(Vec::is_empty),
        }
    }

    /// Largest absolute numerator among the entries (0 for the zero matrix).
    pub fn max_abs_numerator(&self) -> BigInt {
        self.iter_nonzero()
            .map(|(_, _, v)| v.numer().abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn transpose(&self) -> SuperMatrix {
        let t = self
            .iter_nonzero()
            .map(|(r, c, v)| (c, r, v.clone()))
            .collect::<Vec<_>>();
        let out = SuperMatrix::from_triplets(self.cols.clone(), self.rows.clone(), t);
        out.into_kind(self.kind())
    }

    pub fn scale(&self, s: &Rational) -> SuperMatrix {
        let data = match &self.data {
            Storage::Dense(d) => Storage::Dense(d.iter().map(|v| v * s).collect()),
            Storage::Sparse(rows) => Storage::Sparse(if s.is_zero() {
                vec![Vec::new(); rows.len()]
            } else {
                rows.iter()
                    .map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect())
                    .collect()
            }),
        };
        SuperMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data,
        }
    }

    fn check_same_shape(&self, other: &SuperMatrix) {
        assert!(
            self.nrows() == other.nrows() && self.ncols() == other.ncols(),
            "shape mismatch: {}x{} vs {}x{}",
            self.nrows(),
            self.ncols(),
            other.nrows(),
            other.ncols()
        );
    }

    fn combine(&self, other: &SuperMatrix, sign: &Rational) -> SuperMatrix {
        self.check_same_shape(other);
        let data = match (&self.data, &other.data) {
            (Storage::Dense(a), Storage::Dense(b)) => {
                Storage::Dense(a.iter().zip(b).map(|(x, y)| x + &(y * sign)).collect())
            }
            _ => {
                let a = self.sparse_rows();
                let b = other.sparse_rows();
                Storage::Sparse(
                    a.iter()
                        .zip(b.iter())
                        .map(|(ra, rb)| merge_rows(ra, rb, sign))
                        .collect(),
                )
            }
        };
        SuperMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data,
        }
    }

    pub fn matmul(&self, other: &SuperMatrix) -> SuperMatrix {
        assert_eq!(
            self.ncols(),
            other.nrows(),
            "inner dimension mismatch in product"
        );
        let data = match (&self.data, &other.data) {
            (Storage::Dense(a), Storage::Dense(b)) => {
                Storage::Dense(dense_mul(a, b, self.nrows(), self.ncols(), other.ncols()))
            }
            _ => Storage::Sparse(sparse_mul(
                &self.sparse_rows(),
                &other.sparse_rows(),
                other.ncols(),
            )),
        };
        SuperMatrix {
            rows: self.rows.clone(),
            cols: other.cols.clone(),
            data,
        }
    }

    /// `self^e` for a square matrix; `e = 0` gives the identity in the same storage.
    pub fn pow(&self, e: u32) -> SuperMatrix {
        assert!(self.is_square());
        let mut acc = SuperMatrix::identity(self.rows.clone()).into_kind(self.kind());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `Σ c_i A_i` over a non-empty list of equally shaped matrices.
    pub fn linear_combination(terms: &[(Rational, &SuperMatrix)]) -> SuperMatrix {
        let (c0, m0) = terms.first().expect("empty linear combination");
        let mut acc = m0.scale(c0);
        for (c, m) in &terms[1..] {
            acc = acc.combine(m, c);
        }
        acc
    }

    /// `A·B − B·A`.
    pub fn commutator(&self, other: &SuperMatrix) -> SuperMatrix {
        &(self * other) - &(other * self)
    }
}

pub enum RowIter<'a> {
    Dense(core::iter::Enumerate<core::slice::Iter<'a, Rational>>),
    Sparse(core::slice::Iter<'a, (u32, Rational)>),
}

impl<'a> Iterator for RowIter<'a> {
    type Item = (usize, &'a Rational);

    fn next(&mut self) -> Option<Self::Item> {
        match self {
            RowIter::Dense(it) => it.find(|(_, v)| !v.is_zero()),
            RowIter::Sparse(it) => it.next().map(|(c, v)| (*c as usize, v)),
        }
    }
}

fn normalize_row(row: &mut Row) {
    row.sort_by_key(|e| e.0);
    let mut out: Row = Vec::with_capacity(row.len());
    for (c, v) in row.drain(..) {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += &v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    *row = out;
}

fn merge_rows(a: &[(u32, Rational)], b: &[(u32, Rational)], sign: &Rational) -> Row {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = &b[j].1 * sign;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(&b[j].1 * sign);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn dense_mul(a: &[Rational], b: &[Rational], n: usize, k: usize, m: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n * m];
    for i in 0..n {
        for l in 0..k {
            let x = &a[i * k + l];
            if x.is_zero() {
                continue;
            }
            for j in 0..m {
                let y = &b[l * m + j];
                if !y.is_zero() {
                    out[i * m + j] += &(x * y);
                }
            }
        }
    }
    out
}

fn sparse_mul(a: &[Row], b: &[Row], ncols: usize) -> Vec<Row> {
    let mut acc: Vec<Rational> = vec![Rational::zero(); ncols];
    let mut seen = vec![false; ncols];
    let mut touched: Vec<u32> = Vec::new();
    let mut out = Vec::with_capacity(a.len());
    for row in a {
        for (k, x) in row {
            for (j, y) in &b[*k as usize] {
                let p = x * y;
                let ju = *j as usize;
                if seen[ju] {
                    acc[ju] += &p;
                } else {
                    seen[ju] = true;
                    touched.push(*j);
                    acc[ju] = p;
                }
            }
        }
        touched.sort_unstable();
        let mut r = Vec::with_capacity(touched.len());
        for j in touched.drain(..) {
            let ju = j as usize;
            seen[ju] = false;
            let v = core::mem::take(&mut acc[ju]);
            if !v.is_zero() {
                r.push((j, v));
            }
        }
        out.push(r);
    }
    out
}

impl PartialEq for SuperMatrix {
    /// Entry-wise equality; storage kind and factor structure are ignored.
    fn eq(&self, other: &Self) -> bool {
        if self.rows.parities() != other.rows.parities()
            || self.cols.parities() != other.cols.parities()
        {
            return false;
        }
        (0..self.nrows()).all(|r| self.row(r).eq(other.row(r)))
    }
}

impl Eq for SuperMatrix {}

impl Add<&SuperMatrix> for &SuperMatrix {
    type Output = SuperMatrix;
    fn add(self, rhs: &SuperMatrix) -> SuperMatrix {
        self.combine(rhs, &Rational::one())
    }
}

impl Sub<&SuperMatrix> for &SuperMatrix {
    type Output = SuperMatrix;
    fn sub(self, rhs: &SuperMatrix) -> SuperMatrix {
        self.combine(rhs, &-Rational::one())
    }
}

impl Mul<&SuperMatrix> for &SuperMatrix {
    type Output = SuperMatrix;
    fn mul(self, rhs: &SuperMatrix) -> SuperMatrix {
        self.matmul(rhs)
    }
}

impl Neg for &SuperMatrix {
    type Output = SuperMatrix;
    fn neg(self) -> SuperMatrix {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_matrix_ops {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr<SuperMatrix> for SuperMatrix {
            type Output = SuperMatrix;
            fn $f(self, rhs: SuperMatrix) -> SuperMatrix { (&self).$f(&rhs) }
        }
        impl $tr<&SuperMatrix> for SuperMatrix {
            type Output = SuperMatrix;
            fn $f(self, rhs: &SuperMatrix) -> SuperMatrix { (&self).$f(rhs) }
        }
        impl $tr<SuperMatrix> for &SuperMatrix {
            type Output = SuperMatrix;
            fn $f(self, rhs: SuperMatrix) -> SuperMatrix { self.$f(&rhs) }
        }
    )*};
}
forward_matrix_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for SuperMatrix {
    type Output = SuperMatrix;
    fn neg(self) -> SuperMatrix {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn sample(kind: StorageKind) -> (SuperMatrix, SuperMatrix) {
        let v = GradedSpace::standard(2, 1);
        let a = SuperMatrix::from_fn(v.clone(), v.clone(), |r, c| q((r * 3 + c) as i64 - 4, 2));
        let b = SuperMatrix::from_fn(v.clone(), v, |r, c| q(r as i64 - c as i64, 3));
        (a.into_kind(kind), b.into_kind(kind))
    }

    #[test]
    fn dense_and_sparse_agree() {
        let (ad, bd) = sample(StorageKind::Dense);
        let (as_, bs) = sample(StorageKind::Sparse);
        assert_eq!(&ad * &bd, &as_ * &bs);
        assert_eq!(&ad + &bd, &as_ + &bs);
        assert_eq!(&ad - &bd, &as_ - &bs);
        assert_eq!((&ad * &bd).kind(), StorageKind::Dense);
        assert_eq!((&ad * &bs).kind(), StorageKind::Sparse);
        assert_eq!(ad.transpose(), as_.transpose());
    }

    #[test]
    fn triplets_sum_duplicates_and_drop_zeros() {
        let v = GradedSpace::standard(1, 1);
        let m = SuperMatrix::from_triplets(
            v.clone(),
            v,
            [(0, 1, q(1, 2)), (0, 1, q(1, 2)), (1, 0, q(1, 1)), (1, 0, q(-1, 1))],
        );
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(0, 1), q(1, 1));
    }
}
