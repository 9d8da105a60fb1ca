//! A Lie superalgebra given by homogeneous matrices in a faithful
//! representation: structure constants, adjoint representation,
//! Cartan–Killing metric and split Casimir operators.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::superlinalg::{
    graded_bracket, graded_kron, inverse, operator_parity, supertrace, Coordinates,
    GradedSpace, StorageKind, SuperMatrix,
};
use crate::Rational;

#[derive(Clone, Debug)]
pub struct LieSuperalgebra {
    v: GradedSpace,
    gens: Vec<SuperMatrix>,
    space: GradedSpace,
    coords: Coordinates,
    ad: Vec<SuperMatrix>,
    killing: SuperMatrix,
    killing_inv: SuperMatrix,
}

fn flatten(x: &SuperMatrix) -> Vec<Rational> {
    let n = x.ncols();
    let mut out = vec![Rational::zero(); x.nrows() * n];
    for (r, c, v) in x.iter_nonzero() {
        out[r * n + c] = v.clone();
    }
    out
}

impl LieSuperalgebra {
    /// Builds the algebra spanned by `gens` (homogeneous, linearly independent
    /// and closed under the graded bracket). Fails with `Singular` when the
    /// Cartan–Killing metric is degenerate.
    pub fn new(v: GradedSpace, gens: Vec<SuperMatrix>) -> Result<Self> {
        let n = gens.len();
        let d2 = v.dim() * v.dim();
        let parities: Vec<u8> = gens
            .iter()
            .map(|g| operator_parity(g).ok_or(Error::Unavailable("inhomogeneous generator".into())))
            .collect::<Result<_>>()?;
        let space = GradedSpace::from_parities(parities);
        let mut t = Vec::new();
        for (j, g) in gens.iter().enumerate() {
            for (k, x) in flatten(g).into_iter().enumerate() {
                if !x.is_zero() {
                    t.push((k, j, x));
                }
            }
        }
        let basis = SuperMatrix::from_triplets(
            GradedSpace::from_parities(vec![0; d2]),
            GradedSpace::from_parities(vec![0; n]),
            t,
        );
        let coords = Coordinates::new(basis)?;
        let mut ad_t: Vec<Vec<(usize, usize, Rational)>> = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                let br = graded_bracket(&gens[a], space.parity(a), &gens[b], space.parity(b));
                let c = coords.solve(&flatten(&br))?;
                for (k, x) in c.into_iter().enumerate() {
                    if !x.is_zero() {
                        ad_t[a].push((k, b, x));
                    }
                }
            }
        }
        let ad: Vec<SuperMatrix> = ad_t
            .into_iter()
            .map(|t| SuperMatrix::from_triplets(space.clone(), space.clone(), t))
            .collect();
        let mut kt = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if space.parity(a) != space.parity(b) {
                    continue;
                }
                let x = supertrace(&(&ad[a] * &ad[b]))?;
                if !x.is_zero() {
                    kt.push((a, b, x));
                }
            }
        }
        let killing = SuperMatrix::from_triplets(space.clone(), space.clone(), kt);
        let killing_inv = inverse(&killing)?.to_sparse();
        Ok(LieSuperalgebra {
            v,
            gens,
            space,
            coords,
            ad,
            killing,
            killing_inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    pub fn sdim(&self) -> i64 {
        self.space.sdim()
    }

    /// `V_ad` with the generator parities.
    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn defining_space(&self) -> &GradedSpace {
        &self.v
    }

    pub fn parity(&self, a: usize) -> u8 {
        self.space.parity(a)
    }

    pub fn generators(&self) -> &[SuperMatrix] {
        &self.gens
    }

    pub fn ad(&self) -> &[SuperMatrix] {
        &self.ad
    }

    pub fn killing(&self) -> &SuperMatrix {
        &self.killing
    }

    pub fn killing_inv(&self) -> &SuperMatrix {
        &self.killing_inv
    }

    /// `X^c_{ab}` with `[X_a, X_b] = X_c X^c_{ab}`.
    pub fn structure(&self, c: usize, a: usize, b: usize) -> Rational {
        self.ad[a].get(c, b)
    }

    /// Coordinates of a defining-representation matrix in the generator basis.
    pub fn coordinates(&self, x: &SuperMatrix) -> Result<Vec<Rational>> {
        self.coords.solve(&flatten(x))
    }

    /// Columns are the flattened generators (`V⊗V` rows, row-major `(i, j)`).
    pub fn embedding(&self) -> SuperMatrix {
        let vv = self.v.tensor(&self.v);
        let mut t = Vec::new();
        for (j, g) in self.gens.iter().enumerate() {
            for (r, c, x) in g.iter_nonzero() {
                t.push((r * self.v.dim() + c, j, x.clone()));
            }
        }
        SuperMatrix::from_triplets(vv, self.space.clone(), t)
    }

    /// A left inverse of [`Self::embedding`] supported on pivot rows.
    pub fn coordinate_map(&self) -> SuperMatrix {
        let vv = self.v.tensor(&self.v);
        self.coords
            .left_inverse()
            .with_spaces(self.space.clone(), vv)
    }

    /// `Ĉ = ḡ^{ab} ρ(X_a) ⊗ ρ(X_b)` for a representation `ρ` given on the basis.
    pub fn split_casimir(&self, rep: &[SuperMatrix], kind: StorageKind) -> SuperMatrix {
        let rep: Vec<SuperMatrix> = rep.iter().map(|m| m.to_kind(kind)).collect();
        let w = rep[0].rows().clone();
        let ww = w.tensor(&w);
        let mut acc = SuperMatrix::zeros(ww.clone(), ww).into_kind(kind);
        for (a, b, g) in self.killing_inv.iter_nonzero() {
            acc = &acc + &graded_kron(&rep[a], &rep[b]).scale(g);
        }
        acc
    }

    /// `Δ(X_a) = ρ(X_a) ⊗ 1 + 1 ⊗ ρ(X_a)`.
    pub fn coproduct(&self, rep: &[SuperMatrix], a: usize) -> SuperMatrix {
        let w = rep[a].rows().clone();
        let id = SuperMatrix::identity(w).into_kind(rep[a].kind());
        &graded_kron(&rep[a], &id) + &graded_kron(&id, &rep[a])
    }

    /// Whether an even operator on `W⊗W` commutes with `Δ(X_a)` for every generator.
    pub fn is_invariant(&self, rep: &[SuperMatrix], op: &SuperMatrix) -> bool {
        (0..self.dim()).all(|a| op.commutator(&self.coproduct(rep, a)).is_zero())
    }

    /// `X^c_{ab} = −(−1)^{[a][b]} X^c_{ba}` and parity selection.
    pub fn check_antisymmetry(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    let x = self.structure(c, a, b);
                    let y = self.structure(c, b, a);
                    let sign_ok = if self.parity(a) & self.parity(b) == 1 {
                        x == y
                    } else {
                        x == -y
                    };
                    let par_ok = x.is_zero()
                        || (self.parity(a) ^ self.parity(b) ^ self.parity(c)) == 0;
                    sign_ok && par_ok
                })
            })
        })
    }

    /// Symmetries of the lowered constants `X_{kij} = g_{km} X^m_{ij}`.
    pub fn check_lowered_symmetry(&self) -> bool {
        let n = self.dim();
        let low: Vec<SuperMatrix> = (0..n).map(|i| &self.killing * &self.ad[i]).collect();
        // low[i][k, j] = X_{kij}
        let x = |k: usize, i: usize, j: usize| low[i].get(k, j);
        let p = |a: usize| self.parity(a) as u32;
        let sgn = |e: u32, v: Rational| if e % 2 == 1 { -v } else { v };
        (0..n).all(|k| {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let kij = x(k, i, j);
                    x(k, j, i) == sgn(1 + p(i) * p(j), kij.clone())
                        && x(j, i, k) == sgn(1 + p(k) + p(j) + p(k) * p(j), kij.clone())
                        && x(i, k, j) == sgn(1 + p(i) * p(k), kij)
                })
            })
        })
    }

    /// `ad([X_a, X_b]) = [ad X_a, ad X_b]` for all pairs, i.e. the graded Jacobi identity.
    pub fn check_jacobi(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let lhs = graded_bracket(&self.ad[a], self.parity(a), &self.ad[b], self.parity(b));
                let mut rhs = SuperMatrix::zeros(self.space.clone(), self.space.clone());
                for c in 0..n {
                    let x = self.structure(c, a, b);
                    if !x.is_zero() {
                        rhs = &rhs + &self.ad[c].scale(&x);
                    }
                }
                lhs == rhs
            })
        })
    }

    /// `str ad(X_a) = 0` for every generator.
    pub fn check_str_ad(&self) -> bool {
        self.ad.iter().all(|m| supertrace(m).map(|s| s.is_zero()).unwrap_or(false))
    }

    /// `g_{ab} = (−1)^{[a][b]} g_{ba}`, vanishing between opposite parities.
    pub fn check_killing_symmetry(&self) -> bool {
        self.killing.iter_nonzero().all(|(a, b, x)| {
            self.parity(a) == self.parity(b)
                && self.killing.get(b, a)
                    == if self.parity(a) == 1 { -x.clone() } else { x.clone() }
        })
    }

    /// `(−1)^{[i₁][i₂]} X^{i₁i₂}_a X^b_{i₁i₂} = −δ^b_a` with
    /// `X^{i₁i₂}_a = ḡ^{i₂j₂} X^{i₁}_{j₂a}`.
    pub fn check_contraction_identity(&self) -> bool {
        let n = self.dim();
        let ginv = &self.killing_inv;
        for a in 0..n {
            for b in 0..n {
                let mut s = Rational::zero();
                for i2 in 0..n {
                    for (j2, gv) in (0..n).filter_map(|j2| {
                        let g = ginv.get(i2, j2);
                        (!g.is_zero()).then_some((j2, g))
                    }) {
                        // X^{i1}_{j2 a} = ad[j2][i1, a]
                        for i1 in 0..n {
                            let x1 = self.structure(i1, j2, a);
                            if x1.is_zero() {
                                continue;
                            }
                            let x2 = self.structure(b, i1, i2);
                            if x2.is_zero() {
                                continue;
                            }
                            let term = &(&gv * &x1) * &x2;
                            if self.parity(i1) & self.parity(i2) == 1 {
                                s -= &term;
                            } else {
                                s += &term;
                            }
                        }
                    }
                }
                let expect = if a == b { Rational::from_int(-1) } else { Rational::zero() };
                if s != expect {
                    return false;
                }
            }
        }
        true
    }
}
