//! The orthosymplectic superalgebra `osp(M|N)` on `V(M|N)` with the metric
//! `ε = diag(I_M, J_N)`, `J = [[0, I], [−I, 0]]`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::casimir_engine::{
    AdjointIdentity, OperatorBundle, PictureMaps, Projector, ProjectorSystem, Sector,
};
use crate::error::{Error, Result};
use crate::lie::LieSuperalgebra;
use crate::superlinalg::{
    inverse, place, place_any, superperm, GradedSpace, StorageKind, SuperMatrix,
};
use crate::Rational;

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn sgn(odd: bool, x: Rational) -> Rational {
    if odd {
        -x
    } else {
        x
    }
}

#[derive(Clone, Debug)]
pub struct OspModel {
    m: usize,
    n: usize,
    v: GradedSpace,
    eps: SuperMatrix,
    eps_bar: SuperMatrix,
    labels: Vec<(usize, usize)>,
    algebra: LieSuperalgebra,
}

impl OspModel {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if n % 2 == 1 {
            return Err(Error::OddN(n));
        }
        if m as i64 - n as i64 == 2 {
            return Err(Error::OspOmegaTwo);
        }
        let v = GradedSpace::standard(m, n);
        let d = m + n;
        let h = n / 2;
        let mut t: Vec<(usize, usize, Rational)> = (0..m).map(|i| (i, i, Rational::one())).collect();
        for a in 0..h {
            t.push((m + a, m + h + a, Rational::one()));
            t.push((m + h + a, m + a, -Rational::one()));
        }
        let eps = SuperMatrix::from_triplets(v.clone(), v.clone(), t);
        let eps_bar = inverse(&eps)?.to_sparse();
        let mut labels: Vec<(usize, usize)> = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                labels.push((i, j));
            }
        }
        labels.extend((m..d).map(|i| (i, i)));
        let gens = labels
            .iter()
            .map(|&(i, j)| Self::generator(&v, &eps, i, j))
            .collect();
        let algebra = LieSuperalgebra::new(v.clone(), gens)?;
        Ok(OspModel {
            m,
            n,
            v,
            eps,
            eps_bar,
            labels,
            algebra,
        })
    }

    /// `(M_ij)^a_b = ε_{jb} δ^a_i − (−1)^{[i][j]} ε_{ib} δ^a_j`.
    fn generator(v: &GradedSpace, eps: &SuperMatrix, i: usize, j: usize) -> SuperMatrix {
        let d = v.dim();
        let odd = v.parity(i) & v.parity(j) == 1;
        let mut t = Vec::new();
        for b in 0..d {
            let x = eps.get(j, b);
            if !x.is_zero() {
                t.push((i, b, x));
            }
            let y = eps.get(i, b);
            if !y.is_zero() {
                t.push((j, b, sgn(!odd, y)));
            }
        }
        SuperMatrix::from_triplets(v.clone(), v.clone(), t)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn omega(&self) -> i64 {
        self.m as i64 - self.n as i64
    }

    fn w(&self) -> Rational {
        Rational::from_int(self.omega())
    }

    pub fn xi(&self) -> usize {
        self.m + self.n
    }

    pub fn space(&self) -> &GradedSpace {
        &self.v
    }

    pub fn eps(&self) -> &SuperMatrix {
        &self.eps
    }

    pub fn eps_bar(&self) -> &SuperMatrix {
        &self.eps_bar
    }

    /// Generator labels: `(i, j)` with `i < j`, then `(i, i)` for odd `i`.
    pub fn labels(&self) -> &[(usize, usize)] {
        &self.labels
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `ω(ω−1)/2`.
    pub fn sdim(&self) -> Rational {
        let w = self.omega();
        Rational::new(w * (w - 1), 2)
    }

    /// `ε_{ba} = (−1)^{[a]} ε_{ab}`.
    pub fn check_metric_symmetry(&self) -> bool {
        let d = self.xi();
        (0..d).all(|a| (0..d).all(|b| self.eps.get(b, a) == sgn(self.v.parity(a) == 1, self.eps.get(a, b))))
    }

    /// `A^c_a ε_{cb} + (−1)^{[a]+[a][b]} ε_{ac} A^c_b = 0` for every generator.
    pub fn check_invariance(&self) -> bool {
        let d = self.xi();
        let p = |a: usize| self.v.parity(a);
        self.algebra.generators().iter().all(|x| {
            let xe = &x.transpose() * &self.eps; // (Xᵀε)[a,b] = X^c_a ε_cb
            let ex = &self.eps * x; // ε_ac X^c_b
            (0..d).all(|a| {
                (0..d).all(|b| {
                    let odd = (p(a) ^ (p(a) & p(b))) == 1;
                    (xe.get(a, b) + sgn(odd, ex.get(a, b))).is_zero()
                })
            })
        })
    }

    pub fn perm(&self) -> SuperMatrix {
        superperm(&self.v)
    }

    /// `K^{k₁k₂}_{m₁m₂} = ε̄^{k₁k₂} ε_{m₁m₂}`.
    pub fn k_def(&self) -> SuperMatrix {
        let d = self.xi();
        let vv = self.v.tensor(&self.v);
        let mut t = Vec::new();
        for (k1, k2, x) in self.eps_bar.iter_nonzero() {
            for (m1, m2, y) in self.eps.iter_nonzero() {
                t.push((k1 * d + k2, m1 * d + m2, x * y));
            }
        }
        SuperMatrix::from_triplets(vv.clone(), vv, t)
    }

    /// `Ĉ_f = ḡ^{ab} M_a ⊗ M_b`.
    pub fn casimir_defining(&self, kind: StorageKind) -> SuperMatrix {
        self.algebra.split_casimir(self.algebra.generators(), kind)
    }

    /// `(P − K)/(2(ω − 2))`.
    pub fn casimir_defining_closed(&self) -> SuperMatrix {
        let c = r(1, 2 * (self.omega() - 2));
        SuperMatrix::linear_combination(&[(c.clone(), &self.perm()), (-c, &self.k_def())])
    }

    /// `Ĉ_f² = 1/(4(ω−2)²) + K/(4(ω−2))`.
    pub fn check_defining_square(&self) -> bool {
        let c = self.casimir_defining_closed();
        let w2 = self.omega() - 2;
        let id = SuperMatrix::identity(self.v.tensor(&self.v));
        let rhs = SuperMatrix::linear_combination(&[
            (r(1, 4 * w2 * w2), &id),
            (r(1, 4 * w2), &self.k_def()),
        ]);
        (&c * &c) == rhs
    }

    /// Roots `1/(2(ω−2))`, `−1/(2(ω−2))`, `−(ω−1)/(2(ω−2))` of the cubic identity.
    pub fn defining_roots(&self) -> [Rational; 3] {
        let w = self.omega();
        [r(1, 2 * (w - 2)), r(-1, 2 * (w - 2)), r(-(w - 1), 2 * (w - 2))]
    }

    /// `{½(1+P) − K/ω, ½(1−P), K/ω}`. At `ω = 0` the roots of `S` and `K`
    /// merge and `K² = 0`: `{½(1+P), ½(1−P)}` with `(Ĉ_f + ¼)²½(1+P) = 0`.
    pub fn defining_projectors(&self) -> Result<ProjectorSystem> {
        let id = SuperMatrix::identity(self.v.tensor(&self.v));
        let p = self.perm();
        if self.omega() == 0 {
            let h = r(1, 2);
            let s = SuperMatrix::linear_combination(&[(h.clone(), &id), (h.clone(), &p)]);
            let a = SuperMatrix::linear_combination(&[(h.clone(), &id), (-h, &p)]);
            return Ok(ProjectorSystem {
                identity: id,
                operators: vec![("Cf".into(), self.casimir_defining_closed())],
                projectors: vec![
                    Projector::new("S", Sector::Plus, s).eigen("Cf", r(-1, 4), 2),
                    Projector::new("A", Sector::Minus, a).eigen("Cf", r(1, 4), 1),
                ],
            });
        }
        let k = self.k_def();
        let iw = r(1, self.omega());
        let h = r(1, 2);
        let p1 = SuperMatrix::linear_combination(&[(h.clone(), &id), (h.clone(), &p), (-&iw, &k)]);
        let p2 = SuperMatrix::linear_combination(&[(h.clone(), &id), (-h, &p)]);
        let p3 = k.scale(&iw);
        let [a1, a2, a3] = self.defining_roots();
        Ok(ProjectorSystem {
            identity: id,
            operators: vec![("Cf".into(), self.casimir_defining_closed())],
            projectors: vec![
                Projector::new("S", Sector::Plus, p1).eigen("Cf", a1, 1),
                Projector::new("A", Sector::Minus, p2).eigen("Cf", a2, 1),
                Projector::new("K", Sector::Plus, p3).eigen("Cf", a3, 1),
            ],
        })
    }

    /// Poles of `R(u)`: `1` and `1 − ω/2`.
    fn check_pole(&self, u: &Rational) -> Result<()> {
        let p2 = r(2 - self.omega(), 2);
        if u == &Rational::one() || u == &p2 {
            return Err(Error::Pole(u.clone()));
        }
        Ok(())
    }

    /// `R(u) = (u + P − u/(u + ω/2 − 1) K)/(1 − u)`.
    pub fn r_matrix(&self, u: &Rational) -> Result<SuperMatrix> {
        self.check_pole(u)?;
        let id = SuperMatrix::identity(self.v.tensor(&self.v));
        let den = (Rational::one() - u).recip().ok_or(Error::Pole(u.clone()))?;
        let kc = u.checked_div(&(u + &r(self.omega() - 2, 2))).ok_or(Error::Pole(u.clone()))?;
        Ok(SuperMatrix::linear_combination(&[
            (u * &den, &id),
            (den.clone(), &self.perm()),
            (-(&kc * &den), &self.k_def()),
        ]))
    }

    /// `(1+u)/(1−u) proj₁ − proj₂ + (ω/2−1−u)/(ω/2−1+u) proj₃`.
    pub fn r_matrix_spectral(&self, u: &Rational) -> Result<SuperMatrix> {
        self.check_pole(u)?;
        if self.omega() == 0 {
            return Err(Error::Unavailable("omega=0: no projector onto K".into()));
        }
        let sys = self.defining_projectors()?;
        let one = Rational::one();
        let hw = r(self.omega() - 2, 2);
        let c1 = (&one + u) / (&one - u);
        let c3 = (&hw - u) / (&hw + u);
        let ps = &sys.projectors;
        Ok(SuperMatrix::linear_combination(&[
            (c1, &ps[0].matrix),
            (-one, &ps[1].matrix),
            (c3, &ps[2].matrix),
        ]))
    }

    /// `(A + u)(A − u)^{-1}` with `A = (ω−2)Ĉ_f + ½`; also singular at `u = 0`.
    pub fn r_matrix_cayley(&self, u: &Rational) -> Result<SuperMatrix> {
        self.check_pole(u)?;
        if u.is_zero() {
            return Err(Error::Pole(u.clone()));
        }
        let id = SuperMatrix::identity(self.v.tensor(&self.v));
        let a = SuperMatrix::linear_combination(&[
            (self.w() - Rational::from_int(2), &self.casimir_defining_closed()),
            (r(1, 2), &id),
        ]);
        let plus = SuperMatrix::linear_combination(&[(Rational::one(), &a), (u.clone(), &id)]);
        let minus = SuperMatrix::linear_combination(&[(Rational::one(), &a), (-u, &id)]);
        Ok(&plus.to_dense() * &inverse(&minus)?)
    }

    /// Pair-space Killing metric
    /// `g_{i₁i₂,j₁j₂} = 2(ω−2)(ε_{i₁j₂}ε_{i₂j₁} − (−1)^{[j₁][j₂]} ε_{i₁j₁}ε_{i₂j₂})`.
    pub fn pair_metric(&self) -> SuperMatrix {
        let c = Rational::from_int(2 * (self.omega() - 2));
        self.pair_form(&self.eps, &c, false)
    }

    /// `ḡ^{i₁i₂,j₁j₂} = (ε̄^{i₁j₂}ε̄^{i₂j₁} − (−1)^{[i₁][i₂]} ε̄^{i₁j₁}ε̄^{i₂j₂})/(8(ω−2))`.
    pub fn pair_metric_inv(&self) -> SuperMatrix {
        let c = r(1, 8 * (self.omega() - 2));
        self.pair_form(&self.eps_bar, &c, true)
    }

    fn pair_form(&self, e: &SuperMatrix, c: &Rational, upper: bool) -> SuperMatrix {
        let d = self.xi();
        let vv = self.v.tensor(&self.v);
        let p = |a: usize| self.v.parity(a);
        let mut t = Vec::new();
        for (a, b, x) in e.iter_nonzero() {
            for (a2, b2, y) in e.iter_nonzero() {
                // first term: e[i1,j2] e[i2,j1] with (i1,j2)=(a,b), (i2,j1)=(a2,b2)
                t.push((a * d + a2, b2 * d + b, c * &(x * y)));
                // second term: e[i1,j1] e[i2,j2] with (i1,j1)=(a,b), (i2,j2)=(a2,b2)
                let odd = if upper { p(a) & p(a2) } else { p(b) & p(b2) } == 1;
                t.push((a * d + a2, b * d + b2, sgn(!odd, c * &(x * y))));
            }
        }
        SuperMatrix::from_triplets(vv.clone(), vv, t)
    }

    /// `Î = ½(1 − P)`.
    pub fn pair_identity(&self) -> SuperMatrix {
        let id = SuperMatrix::identity(self.v.tensor(&self.v));
        SuperMatrix::linear_combination(&[(r(1, 2), &id), (r(-1, 2), &self.perm())])
    }

    /// `E`: generator `b = (i<j)` to `½(e_i⊗e_j − (−1)^{[i][j]} e_j⊗e_i)`,
    /// `b = (i,i)` to `e_i⊗e_i`.
    pub fn embedding(&self) -> SuperMatrix {
        let d = self.xi();
        let mut t = Vec::new();
        for (b, &(i, j)) in self.labels.iter().enumerate() {
            if i == j {
                t.push((i * d + i, b, Rational::one()));
            } else {
                let odd = self.v.parity(i) & self.v.parity(j) == 1;
                t.push((i * d + j, b, r(1, 2)));
                t.push((j * d + i, b, sgn(!odd, r(1, 2))));
            }
        }
        SuperMatrix::from_triplets(self.v.tensor(&self.v), self.algebra.space().clone(), t)
    }

    /// `R` with `R·E = 1`: the coefficient of `M_b` in `X^{kl} M_kl`.
    pub fn restriction(&self) -> SuperMatrix {
        let d = self.xi();
        let mut t = Vec::new();
        for (b, &(i, j)) in self.labels.iter().enumerate() {
            if i == j {
                t.push((b, i * d + i, Rational::one()));
            } else {
                let odd = self.v.parity(i) & self.v.parity(j) == 1;
                t.push((b, i * d + j, Rational::one()));
                t.push((b, j * d + i, sgn(!odd, Rational::one())));
            }
        }
        SuperMatrix::from_triplets(self.algebra.space().clone(), self.v.tensor(&self.v), t)
    }

    pub fn picture_maps(&self) -> PictureMaps {
        PictureMaps::new(&self.embedding(), &self.restriction())
    }

    /// `I, P, K, Ĉ_ad, Ĉ±` in the explicit generator basis; `Ĉ_ad` by metric
    /// contraction of the adjoint matrices.
    pub fn adjoint_bundle(&self, kind: StorageKind) -> OperatorBundle {
        let w = self.algebra.space();
        let ww = w.tensor(w);
        let n = self.dim();
        let id = SuperMatrix::identity(ww.clone()).into_kind(kind);
        let perm = superperm(w).into_kind(kind);
        let gi = self.algebra.killing_inv();
        let g = self.algebra.killing();
        let mut t = Vec::new();
        for (a1, a2, x) in gi.iter_nonzero() {
            for (b1, b2, y) in g.iter_nonzero() {
                t.push((a1 * n + a2, b1 * n + b2, x * y));
            }
        }
        let k = SuperMatrix::from_triplets(ww.clone(), ww, t).into_kind(kind);
        let c = self.algebra.split_casimir(self.algebra.ad(), kind);
        OperatorBundle::from_parts(id, perm, k, c, None)
    }

    fn place4(&self, a: &SuperMatrix, pos: &[usize]) -> SuperMatrix {
        place_any(a, pos, 4).expect("valid placement")
    }

    /// The same operators on `V^{⊗4}`:
    /// `I = P⁻₁₂P⁻₃₄`, `P = I P₁₃P₂₄ I`, `K = I K₁₃K₂₄ I`,
    /// `Ĉ_ad = 4 I (Ĉ_f)₁₃ I`.
    pub fn embedded_bundle(&self) -> OperatorBundle {
        let ih = self.pair_identity();
        let pb = &self.place4(&ih, &[1, 2]) * &self.place4(&ih, &[3, 4]);
        let p = self.perm();
        let k = self.k_def();
        let sandwich = |x: &SuperMatrix| &(&pb * x) * &pb;
        let p13 = self.place4(&p, &[1, 3]);
        let p24 = self.place4(&p, &[2, 4]);
        let k13 = self.place4(&k, &[1, 3]);
        let k24 = self.place4(&k, &[2, 4]);
        let big_p = sandwich(&(&p13 * &p24));
        let big_k = sandwich(&(&k13 * &k24));
        let cf13 = place(&self.casimir_defining_closed(), &[1, 3], 4).expect("valid placement");
        let c = sandwich(&cf13).scale(&Rational::from_int(4));
        OperatorBundle::from_parts(pb, big_p, big_k, c, None)
    }

    /// Closed forms on `V^{⊗4}`, with `I = P⁻₁₂P⁻₃₄`:
    /// `Ĉ_ad = 2/(ω−2) I(P₁₃ − K₁₃)I`, `Ĉ₋ = 1/(ω−2) I(K₁₃P₂₄ − K₁₃)I`,
    /// `Ĉ₊ = 1/(ω−2) I(2P₂₄ − K₁₃ − K₁₃P₂₄)I`.
    pub fn embedded_closed_forms(&self) -> [SuperMatrix; 3] {
        let ih = self.pair_identity();
        let pb = &self.place4(&ih, &[1, 2]) * &self.place4(&ih, &[3, 4]);
        let sandwich = |x: &SuperMatrix| &(&pb * x) * &pb;
        let p = self.perm();
        let k = self.k_def();
        let p13 = self.place4(&p, &[1, 3]);
        let p24 = self.place4(&p, &[2, 4]);
        let k13 = self.place4(&k, &[1, 3]);
        let k13p24 = &k13 * &p24;
        let c = r(1, self.omega() - 2);
        let two = &c * &Rational::from_int(2);
        let cad = sandwich(&SuperMatrix::linear_combination(&[(two.clone(), &p13), (-&two, &k13)]));
        let cm = sandwich(&SuperMatrix::linear_combination(&[(c.clone(), &k13p24), (-&c, &k13)]));
        let cp = sandwich(&SuperMatrix::linear_combination(&[
            (two, &p24),
            (-&c, &k13),
            (-&c, &k13p24),
        ]));
        [cad, cm, cp]
    }

    /// Adjoint characteristic identity for this `ω`.
    pub fn char_identity(&self) -> AdjointIdentity {
        osp_char_identity(self.omega()).expect("omega != 2 by construction")
    }

    /// The projector system for `Ĉ_ad` on the given bundle (either picture).
    /// `ω = 8` needs the `V^{⊗4}` limit formulas and is handled by
    /// [`Self::projectors_omega_eight`].
    pub fn adjoint_projectors(&self, b: &OperatorBundle) -> Result<ProjectorSystem> {
        let w = self.omega();
        let expected = osp_expected_dims(self.m, self.n).ok();
        let exp = |i: usize| expected.as_ref().map(|e| e[i].1);
        let ops = vec![("C".into(), b.c_ad.clone())];
        let i_p = b.sym();
        let cp2 = &b.c_plus * &b.c_plus;
        let lc = |terms: &[(Rational, &SuperMatrix)]| SuperMatrix::linear_combination(terms);
        let p1 = lc(&[(r(1, 1), &b.p_minus()), (r(2, 1), &b.c_minus)]);
        let p2 = b.c_minus.scale(&r(-2, 1));
        let projectors = match w {
            0 => vec![
                Projector::new("V(0)", Sector::Minus, p1).eigen("C", r(0, 1), 1),
                Projector::new(
                    "V(-1/2)",
                    Sector::Full,
                    lc(&[(r(-2, 1), &b.c_minus), (r(2, 3), &i_p), (r(4, 3), &b.k), (r(-4, 3), &cp2)]),
                )
                .eigen("C", r(-1, 2), 1),
                Projector::new(
                    "V(-1)",
                    Sector::Plus,
                    lc(&[(r(-1, 4), &i_p), (r(-5, 4), &b.k), (r(-1, 2), &b.c_plus), (r(1, 1), &cp2)]),
                )
                .eigen("C", r(-1, 1), 2),
                Projector::new(
                    "V(1)",
                    Sector::Plus,
                    lc(&[(r(1, 12), &i_p), (r(-1, 12), &b.k), (r(1, 2), &b.c_plus), (r(1, 3), &cp2)]),
                )
                .eigen("C", r(1, 1), 1),
            ],
            1 => vec![
                Projector::new("V(0)", Sector::Minus, p1).eigen("C", r(0, 1), 1),
                Projector::new("V(-1/2)", Sector::Minus, p2).eigen("C", r(-1, 2), 1),
                Projector::new(
                    "V(-1)",
                    Sector::Plus,
                    lc(&[(r(1, 1), &i_p), (r(-10, 3), &b.k), (r(1, 3), &b.c_plus), (r(-2, 3), &cp2)]),
                )
                .eigen("C", r(-1, 1), 2),
                Projector::new(
                    "V(2)",
                    Sector::Plus,
                    lc(&[(r(1, 14), &i_p), (r(-2, 21), &b.k), (r(5, 21), &b.c_plus), (r(2, 21), &cp2)]),
                )
                .eigen("C", r(2, 1), 1),
                Projector::new(
                    "V(-3/2)",
                    Sector::Plus,
                    lc(&[(r(-4, 7), &i_p), (r(24, 7), &b.k), (r(-4, 7), &b.c_plus), (r(4, 7), &cp2)]),
                )
                .eigen("C", r(-3, 2), 1),
            ],
            8 => return Err(Error::Unavailable("omega=8: use the V^4 limit formulas".into())),
            _ => {
                let wm2 = w - 2;
                let wm8 = w - 8;
                let p3 = b.k.scale(&r(2, (w - 1) * w));
                let p4 = lc(&[
                    (r(2 * wm2, 3), &cp2),
                    (r(w, 3), &b.c_plus),
                    (r(w - 4, 3 * wm2), &i_p),
                    (r(-2 * (w - 4), 3 * wm2 * (w - 1)), &b.k),
                ]);
                let p5 = lc(&[
                    (r(-2 * wm2 * wm2, 3 * wm8), &cp2),
                    (r(-wm2 * (w - 6), 3 * wm8), &b.c_plus),
                    (r(w - 4, 6 * wm8), &i_p),
                    (r(2, 3 * wm8), &b.k),
                ]);
                let p6 = lc(&[
                    (r(4 * wm2, wm8), &cp2),
                    (r(4, wm8), &b.c_plus),
                    (r(-4, wm2 * wm8), &i_p),
                    (r(-8 * (w - 4), w * wm2 * wm8), &b.k),
                ]);
                vec![
                    Projector::new("V1", Sector::Minus, p1).eigen("C", r(0, 1), 1).expect(exp(0)),
                    Projector::new("V2", Sector::Minus, p2).eigen("C", r(-1, 2), 1).expect(exp(1)),
                    Projector::new("V3", Sector::Plus, p3).eigen("C", r(-1, 1), 1).expect(exp(2)),
                    Projector::new("V4", Sector::Plus, p4).eigen("C", r(1, wm2), 1).expect(exp(3)),
                    Projector::new("V5", Sector::Plus, p5).eigen("C", r(-2, wm2), 1).expect(exp(4)),
                    Projector::new("V6", Sector::Plus, p6)
                        .eigen("C", r(4 - w, 2 * wm2), 1)
                        .expect(exp(5)),
                ]
            }
        };
        Ok(ProjectorSystem {
            identity: b.identity.clone(),
            operators: ops,
            projectors,
        })
    }

    /// The `ω = 8` system on `V^{⊗4}`: `proj₁…proj₄` as in the generic case and
    /// `proj₅ = ⅙(1 − (P₁₄+P₂₃+P₁₃+P₂₄) + P₁₃P₂₄)I`,
    /// `proj₆ = 4/(ω−2) I K₁₃[½(1+P₂₄) − K₂₄/ω] I`.
    pub fn projectors_omega_eight(&self, emb: &OperatorBundle) -> Result<ProjectorSystem> {
        if self.omega() != 8 {
            return Err(Error::Unavailable(format!("omega={}: not the omega=8 case", self.omega())));
        }
        let w = 8;
        let expected = osp_expected_dims(self.m, self.n).ok();
        let exp = |i: usize| expected.as_ref().map(|e| e[i].1);
        let b = emb;
        let pb = &b.identity;
        let sandwich = |x: &SuperMatrix| &(pb * x) * pb;
        let lc = |terms: &[(Rational, &SuperMatrix)]| SuperMatrix::linear_combination(terms);
        let cp2 = &b.c_plus * &b.c_plus;
        let i_p = b.sym();
        let p = self.perm();
        let k = self.k_def();
        let one = SuperMatrix::identity(self.v.power(4));
        let pp = |pos: &[usize]| self.place4(&p, pos);
        let (p14, p23, p13, p24) = (pp(&[1, 4]), pp(&[2, 3]), pp(&[1, 3]), pp(&[2, 4]));
        let p1324 = &p13 * &p24;
        let sym4 = lc(&[
            (r(1, 6), &one),
            (r(-1, 6), &p14),
            (r(-1, 6), &p23),
            (r(-1, 6), &p13),
            (r(-1, 6), &p24),
            (r(1, 6), &p1324),
        ]);
        let p5 = &sym4 * pb;
        let k13 = self.place4(&k, &[1, 3]);
        let k24 = self.place4(&k, &[2, 4]);
        let inner = lc(&[(r(1, 2), &one), (r(1, 2), &p24), (r(-1, w), &k24)]);
        let p6 = sandwich(&(&k13 * &inner)).scale(&r(4, w - 2));
        let p1 = lc(&[(r(1, 1), &b.p_minus()), (r(2, 1), &b.c_minus)]);
        let p2 = b.c_minus.scale(&r(-2, 1));
        let p3 = b.k.scale(&r(2, (w - 1) * w));
        let p4 = lc(&[
            (r(2 * (w - 2), 3), &cp2),
            (r(w, 3), &b.c_plus),
            (r(w - 4, 3 * (w - 2)), &i_p),
            (r(-2 * (w - 4), 3 * (w - 2) * (w - 1)), &b.k),
        ]);
        Ok(ProjectorSystem {
            identity: pb.clone(),
            operators: vec![("C".into(), b.c_ad.clone())],
            projectors: vec![
                Projector::new("V1", Sector::Minus, p1).eigen("C", r(0, 1), 1).expect(exp(0)),
                Projector::new("V2", Sector::Minus, p2).eigen("C", r(-1, 2), 1).expect(exp(1)),
                Projector::new("V3", Sector::Plus, p3).eigen("C", r(-1, 1), 1).expect(exp(2)),
                Projector::new("V4", Sector::Plus, p4).eigen("C", r(1, 6), 1).expect(exp(3)),
                Projector::new("V5", Sector::Plus, p5).eigen("C", r(-1, 3), 1).expect(exp(4)),
                Projector::new("V6", Sector::Plus, p6).eigen("C", r(-1, 3), 1).expect(exp(5)),
            ],
        })
    }

    /// Invariance of an operator on `V_ad⊗V_ad` (explicit basis) under the
    /// adjoint coproduct.
    pub fn is_ad_invariant(&self, op: &SuperMatrix) -> bool {
        self.algebra.is_invariant(self.algebra.ad(), op)
    }

    /// Brauer generators `P` and `K` on `V⊗V`.
    pub fn brauer_generators(&self) -> (SuperMatrix, SuperMatrix) {
        (self.perm(), self.k_def())
    }

    /// Pair-space metric relations: `ḡg = Î`, `gḡ = Î`, `Î² = Î`, and their
    /// agreement with the Killing metric through `E`, `R`.
    pub fn pair_space_checks(&self) -> Vec<(String, bool)> {
        let g = self.pair_metric();
        let gb = self.pair_metric_inv();
        let ih = self.pair_identity();
        let e = self.embedding();
        let rr = self.restriction();
        vec![
            ("gbar g = I".into(), (&gb * &g) == ih),
            ("g gbar = I".into(), (&g * &gb) == ih),
            ("I^2 = I".into(), (&ih * &ih) == ih),
            ("R E = 1".into(), (&rr * &e) == SuperMatrix::identity(self.algebra.space().clone())),
            (
                "E^t g E = killing".into(),
                (&(&e.transpose() * &g) * &e).with_spaces(
                    self.algebra.space().clone(),
                    self.algebra.space().clone(),
                ) == *self.algebra.killing(),
            ),
            (
                "R gbar R^t = killing_inv".into(),
                (&(&rr * &gb) * &rr.transpose()).with_spaces(
                    self.algebra.space().clone(),
                    self.algebra.space().clone(),
                ) == self.algebra.killing_inv().to_sparse(),
            ),
        ]
    }
}

/// The adjoint identity of `Ĉ_ad` for `osp` at a given `ω`.
pub fn osp_char_identity(w: i64) -> Result<AdjointIdentity> {
    let base = vec![r(0, 1), r(-1, 2), r(-1, 1)];
    let with = |extra: &[Rational]| {
        let mut v = base.clone();
        v.extend_from_slice(extra);
        v
    };
    Ok(match w {
        2 => return Err(Error::OspOmegaTwo),
        0 => AdjointIdentity {
            residual_k: r(1, 2),
            generalized: Some(vec![(r(0, 1), 1), (r(-1, 2), 1), (r(-1, 1), 2), (r(1, 1), 1)]),
            ..AdjointIdentity::simple(with(&[r(1, 1)]))
        },
        1 => AdjointIdentity {
            residual_k: r(-3, 2),
            generalized: Some(vec![
                (r(0, 1), 1),
                (r(-1, 2), 1),
                (r(-1, 1), 2),
                (r(2, 1), 1),
                (r(-3, 2), 1),
            ]),
            ..AdjointIdentity::simple(with(&[r(2, 1), r(-3, 2)]))
        },
        4 => AdjointIdentity::simple(with(&[r(1, 2)])),
        6 => AdjointIdentity::simple(with(&[r(1, 4), r(-1, 4)])),
        8 => AdjointIdentity::simple(with(&[r(1, 6), r(-1, 3)])),
        _ => AdjointIdentity::simple(with(&[r(1, w - 2), r(-2, w - 2), r(4 - w, 2 * (w - 2))])),
    })
}

/// `(dim_even, dim_odd)` of `V₁…V₆` from the closed forms; `ω ∉ {0, 1, 2}`.
pub fn osp_expected_dims(m: usize, n: usize) -> Result<Vec<(String, (i64, i64))>> {
    let w = m as i64 - n as i64;
    if matches!(w, 0..=2) {
        return Err(Error::Unavailable(format!("omega={w}: no closed dimension formulas")));
    }
    let (m, n) = (m as i64, n as i64);
    let ev = [
        r(m * (m - 1) * (m + 2) * (m - 3), 8) + r(n * (n + 1) * (n - 2) * (n + 3), 8)
            + r(m * n * (3 * m * n + m - n + 1), 4),
        r(m * (m - 1), 2) + r(n * (n + 1), 2),
        r(1, 1),
        r(m * (m + 1) * (m + 2) * (m - 3), 12) + r(n * (n - 1) * (n - 2) * (n + 3), 12)
            + r(m * n * (m * n - 1), 2),
        r(m * (m - 1) * (m - 2) * (m - 3), 24) + r(n * (n + 1) * (n + 2) * (n + 3), 24)
            + r(m * n * (m - 1) * (n + 1), 4),
        r((m - 1) * (m + 2), 2) + r(n * (n - 1), 2),
    ];
    let od = [
        r(m * n * (m * (m - 1) + (n - 1) * (n + 2)), 2),
        r(m * n, 1),
        r(0, 1),
        r(m * n * (m * m + n * n - 5), 3),
        r(m * n * ((m - 1) * (m - 2) + (n + 1) * (n + 2)), 6),
        r(m * n, 1),
    ];
    let int = |x: &Rational| x.to_i64().ok_or_else(|| Error::BadDimension(x.clone()));
    (0..6)
        .map(|i| Ok((format!("V{}", i + 1), (int(&ev[i])?, int(&od[i])?))))
        .collect()
}
