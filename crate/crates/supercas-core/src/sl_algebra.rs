//! The special linear superalgebra `sl(M|N)`, `M ≠ N`, on `V(M|N)`.
//! `sl(M|N) ≅ sl(N|M)`, so `M < N` is swapped to keep `ω = M − N > 0`.

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
    graded_kron, inverse, place_any, superperm, GradedSpace, StorageKind, SuperMatrix,
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

/// Generator labels of the explicit basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlLabel {
    /// `T_ij = e_ij`, `i ≠ j`.
    Offdiag(usize, usize),
    /// `h_k = (−1)^{[k]} e_kk − (−1)^{[k+1]} e_{k+1,k+1}`.
    Cartan(usize),
}

#[derive(Clone, Debug)]
pub struct SlModel {
    m: usize,
    n: usize,
    swapped: bool,
    v: GradedSpace,
    labels: Vec<SlLabel>,
    algebra: LieSuperalgebra,
}

impl SlModel {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == n {
            return Err(Error::SlSquare(m));
        }
        let swapped = m < n;
        let (m, n) = if swapped { (n, m) } else { (m, n) };
        let v = GradedSpace::standard(m, n);
        let d = m + n;
        let mut labels: Vec<SlLabel> = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    labels.push(SlLabel::Offdiag(i, j));
                }
            }
        }
        labels.extend((0..d - 1).map(SlLabel::Cartan));
        let gens = labels.iter().map(|&l| Self::generator(&v, l)).collect();
        let algebra = LieSuperalgebra::new(v.clone(), gens)?;
        Ok(SlModel {
            m,
            n,
            swapped,
            v,
            labels,
            algebra,
        })
    }

    fn generator(v: &GradedSpace, l: SlLabel) -> SuperMatrix {
        let t = match l {
            SlLabel::Offdiag(i, j) => vec![(i, j, Rational::one())],
            SlLabel::Cartan(k) => vec![
                (k, k, sgn(v.parity(k) == 1, Rational::one())),
                (k + 1, k + 1, sgn(v.parity(k + 1) == 0, Rational::one())),
            ],
        };
        SuperMatrix::from_triplets(v.clone(), v.clone(), t)
    }

    /// Whether the input had `M < N` and was swapped.
    pub fn swapped(&self) -> bool {
        self.swapped
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

    pub fn labels(&self) -> &[SlLabel] {
        &self.labels
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `ω² − 1`.
    pub fn sdim(&self) -> Rational {
        let w = self.omega();
        Rational::from_int(w * w - 1)
    }

    fn p(&self, a: usize) -> u8 {
        self.v.parity(a)
    }

    fn vv(&self) -> GradedSpace {
        self.v.tensor(&self.v)
    }

    /// Overcomplete pair generators `T_ij = e_ij − (−1)^{[i]} δ_ij/ω · 1`.
    pub fn pair_generator(&self, i: usize, j: usize) -> SuperMatrix {
        let mut t = vec![(i, j, Rational::one())];
        if i == j {
            let c = sgn(self.p(i) == 1, -self.w().recip().expect("omega != 0"));
            t.extend((0..self.xi()).map(|k| (k, k, c.clone())));
        }
        SuperMatrix::from_triplets(self.v.clone(), self.v.clone(), t)
    }

    pub fn perm(&self) -> SuperMatrix {
        superperm(&self.v)
    }

    /// `K^{i₁i₂}_{j₁j₂} = (−1)^{[j₁][j₂]} δ^{i₁i₂} δ_{j₁j₂}`.
    pub fn k_def(&self) -> SuperMatrix {
        let d = self.xi();
        let mut t = Vec::new();
        for i in 0..d {
            for j in 0..d {
                t.push((i * d + i, j * d + j, sgn(self.p(j) == 1, Rational::one())));
            }
        }
        SuperMatrix::from_triplets(self.vv(), self.vv(), t)
    }

    /// `Ī = 1 − K/ω`, the projector onto supertraceless pair coordinates.
    pub fn pair_identity(&self) -> SuperMatrix {
        let id = SuperMatrix::identity(self.vv());
        let iw = self.w().recip().expect("omega != 0");
        SuperMatrix::linear_combination(&[(Rational::one(), &id), (-iw, &self.k_def())])
    }

    /// `Ĉ_f = ḡ^{ab} T_a ⊗ T_b`.
    pub fn casimir_defining(&self, kind: StorageKind) -> SuperMatrix {
        self.algebra.split_casimir(self.algebra.generators(), kind)
    }

    /// `(P − 1/ω)/(2ω)`.
    pub fn casimir_defining_closed(&self) -> SuperMatrix {
        let w = self.omega();
        let id = SuperMatrix::identity(self.vv());
        SuperMatrix::linear_combination(&[(r(1, 2 * w), &self.perm()), (r(-1, 2 * w * w), &id)])
    }

    /// `(ω−1)/(2ω²)` on `½(1+P)`, `−(ω+1)/(2ω²)` on `½(1−P)`.
    pub fn defining_roots(&self) -> [Rational; 2] {
        let w = self.omega();
        [r(w - 1, 2 * w * w), r(-(w + 1), 2 * w * w)]
    }

    pub fn defining_projectors(&self) -> ProjectorSystem {
        let id = SuperMatrix::identity(self.vv());
        let p = self.perm();
        let h = r(1, 2);
        let [a1, a2] = self.defining_roots();
        ProjectorSystem {
            operators: vec![("Cf".into(), self.casimir_defining_closed())],
            projectors: vec![
                Projector::new(
                    "S",
                    Sector::Plus,
                    SuperMatrix::linear_combination(&[(h.clone(), &id), (h.clone(), &p)]),
                )
                .eigen("Cf", a1, 1),
                Projector::new(
                    "A",
                    Sector::Minus,
                    SuperMatrix::linear_combination(&[(h.clone(), &id), (-h, &p)]),
                )
                .eigen("Cf", a2, 1),
            ],
            identity: id,
        }
    }

    fn check_pole(u: &Rational) -> Result<()> {
        if u == &Rational::one() {
            return Err(Error::Pole(u.clone()));
        }
        Ok(())
    }

    /// `R(u) = (u + P)/(1 − u)`.
    pub fn r_matrix(&self, u: &Rational) -> Result<SuperMatrix> {
        Self::check_pole(u)?;
        let den = (Rational::one() - u).recip().ok_or(Error::Pole(u.clone()))?;
        let id = SuperMatrix::identity(self.vv());
        Ok(SuperMatrix::linear_combination(&[(u * &den, &id), (den, &self.perm())]))
    }

    /// `(1+u)/(1−u) P₊ − P₋`.
    pub fn r_matrix_spectral(&self, u: &Rational) -> Result<SuperMatrix> {
        Self::check_pole(u)?;
        let sys = self.defining_projectors();
        let one = Rational::one();
        let c1 = (&one + u) / (&one - u);
        Ok(SuperMatrix::linear_combination(&[
            (c1, &sys.projectors[0].matrix),
            (-one, &sys.projectors[1].matrix),
        ]))
    }

    /// `(A + u)(A − u)^{-1}` with `A = ωĈ_f + (1+ω)/(2ω)`; also singular at `u = 0`.
    pub fn r_matrix_cayley(&self, u: &Rational) -> Result<SuperMatrix> {
        Self::check_pole(u)?;
        if u.is_zero() {
            return Err(Error::Pole(u.clone()));
        }
        let w = self.omega();
        let id = SuperMatrix::identity(self.vv());
        let a = SuperMatrix::linear_combination(&[
            (self.w(), &self.casimir_defining_closed()),
            (r(1 + w, 2 * w), &id),
        ]);
        let plus = SuperMatrix::linear_combination(&[(Rational::one(), &a), (u.clone(), &id)]);
        let minus = SuperMatrix::linear_combination(&[(Rational::one(), &a), (-u, &id)]);
        Ok(&plus.to_dense() * &inverse(&minus)?)
    }

    /// `g_{i₁i₂,j₁j₂} = 2ω((−1)^{[i₁][j₂]} δ_{j₁i₂}δ_{i₁j₂} − (−1)^{[i₁]+[j₂]}/ω · δ_{i₁i₂}δ_{j₁j₂})`.
    pub fn pair_metric(&self) -> SuperMatrix {
        let d = self.xi();
        let w = self.omega();
        let mut t = Vec::new();
        for i1 in 0..d {
            for i2 in 0..d {
                // δ_{j₁i₂} δ_{i₁j₂}
                let odd = self.p(i1) & self.p(i1) == 1;
                t.push((i1 * d + i2, i2 * d + i1, sgn(odd, Rational::from_int(2 * w))));
            }
            for j1 in 0..d {
                let odd = (self.p(i1) ^ self.p(j1)) == 1;
                t.push((i1 * d + i1, j1 * d + j1, sgn(!odd, Rational::from_int(2))));
            }
        }
        SuperMatrix::from_triplets(self.vv(), self.vv(), t)
    }

    /// `ḡ^{i₁i₂,j₁j₂} = ((−1)^{[j₁][i₂]} δ^{j₁i₂}δ^{i₁j₂} − δ^{i₁i₂}δ^{j₁j₂}/ω)/(2ω)`.
    pub fn pair_metric_inv(&self) -> SuperMatrix {
        let d = self.xi();
        let w = self.omega();
        let mut t = Vec::new();
        for i1 in 0..d {
            for i2 in 0..d {
                let odd = self.p(i2) == 1;
                t.push((i1 * d + i2, i2 * d + i1, sgn(odd, r(1, 2 * w))));
            }
            for j1 in 0..d {
                t.push((i1 * d + i1, j1 * d + j1, r(-1, 2 * w * w)));
            }
        }
        SuperMatrix::from_triplets(self.vv(), self.vv(), t)
    }

    /// `E`: columns are the flattened generators.
    pub fn embedding(&self) -> SuperMatrix {
        self.algebra.embedding()
    }

    /// `R = L·Ī` with `L` a left inverse of `E`.
    pub fn restriction(&self) -> SuperMatrix {
        &self.algebra.coordinate_map().with_spaces(self.algebra.space().clone(), self.vv())
            * &self.pair_identity()
    }

    pub fn picture_maps(&self) -> PictureMaps {
        PictureMaps::new(&self.embedding(), &self.restriction())
    }

    /// Pair-space relations: `ḡg = Ī`, `gḡ = Īᵀ`, `Ī² = Ī`, traces of `Ī`,
    /// and agreement with the Killing metric through `E`, `R`.
    pub fn pair_space_checks(&self) -> Vec<(String, bool)> {
        let g = self.pair_metric();
        let gb = self.pair_metric_inv();
        let ib = self.pair_identity();
        let e = self.embedding();
        let rr = self.restriction();
        let w = self.omega();
        let xi = self.xi() as i64;
        let ws = self.algebra.space().clone();
        vec![
            ("gbar g = I".into(), (&gb * &g) == ib),
            ("g gbar = I^t".into(), (&g * &gb) == ib.transpose()),
            ("I^2 = I".into(), (&ib * &ib) == ib),
            (
                "tr I = xi^2-1".into(),
                crate::superlinalg::trace(&ib).ok() == Some(Rational::from_int(xi * xi - 1)),
            ),
            (
                "str I = omega^2-1".into(),
                crate::superlinalg::supertrace(&ib).ok() == Some(Rational::from_int(w * w - 1)),
            ),
            ("R E = 1".into(), (&rr * &e) == SuperMatrix::identity(ws.clone())),
            (
                "E^t g E = killing".into(),
                (&(&e.transpose() * &g) * &e).with_spaces(ws.clone(), ws.clone())
                    == *self.algebra.killing(),
            ),
            (
                "R gbar R^t = killing_inv".into(),
                (&(&rr * &gb) * &rr.transpose()).with_spaces(ws.clone(), ws)
                    == self.algebra.killing_inv().to_sparse(),
            ),
        ]
    }

    /// `{X, Y} = XY + (−1)^{[X][Y]} YX`.
    fn anticommutator(x: &SuperMatrix, px: u8, y: &SuperMatrix, py: u8) -> SuperMatrix {
        let yx = y * x;
        SuperMatrix::linear_combination(&[
            (Rational::one(), &(x * y)),
            (sgn(px & py == 0, -Rational::one()), &yx),
        ])
    }

    /// Checks `{T_ij, T_km} = D̄^{rs}_{ij,km} T_rs + g_{ij,km}/ω² · 1` for every
    /// pair label, with
    /// `D̄^{rs}_{ij,km} = δ^r_iδ^s_mδ_jk + (−1)^{([i]+[j])([k]+[m])} δ^r_kδ^s_jδ_im
    ///  − (2/ω)((−1)^{[i]} δ^r_kδ^s_mδ_ij + (−1)^{[m]} δ^r_iδ^s_jδ_km)`.
    pub fn check_anticommutator_constants(&self) -> bool {
        let d = self.xi();
        let g = self.pair_metric();
        let id = SuperMatrix::identity(self.v.clone());
        let iw2 = (self.w() * self.w()).recip().expect("omega != 0");
        let two_w = r(2, self.omega());
        let ts: Vec<SuperMatrix> = (0..d * d).map(|a| self.pair_generator(a / d, a % d)).collect();
        let pp = |a: usize| self.p(a / d) ^ self.p(a % d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for m in 0..d {
                        let (a, b) = (i * d + j, k * d + m);
                        let lhs = Self::anticommutator(&ts[a], pp(a), &ts[b], pp(b));
                        let mut terms: Vec<(Rational, &SuperMatrix)> =
                            vec![(&g.get(a, b) * &iw2, &id)];
                        if j == k {
                            terms.push((Rational::one(), &ts[i * d + m]));
                        }
                        if i == m {
                            terms.push((sgn(pp(a) & pp(b) == 1, Rational::one()), &ts[k * d + j]));
                        }
                        if i == j {
                            terms.push((sgn(self.p(i) == 1, -&two_w), &ts[k * d + m]));
                        }
                        if k == m {
                            terms.push((sgn(self.p(m) == 1, -&two_w), &ts[i * d + j]));
                        }
                        if SuperMatrix::linear_combination(&terms) != lhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `(D_b)^c_e`: `{T_b, T_e} = (D_b)^c_e T_c + g_{be}/ω² · 1` in the explicit basis.
    pub fn anticommutator_matrices(&self) -> Result<Vec<SuperMatrix>> {
        let a = &self.algebra;
        let n = self.dim();
        let ws = a.space().clone();
        let id = SuperMatrix::identity(self.v.clone());
        let iw2 = (self.w() * self.w()).recip().expect("omega != 0");
        let gens = a.generators();
        let mut out = Vec::with_capacity(n);
        for b in 0..n {
            let mut t = Vec::new();
            for e in 0..n {
                let ac = Self::anticommutator(&gens[b], a.parity(b), &gens[e], a.parity(e));
                let x = SuperMatrix::linear_combination(&[
                    (Rational::one(), &ac),
                    (-(&a.killing().get(b, e) * &iw2), &id),
                ]);
                for (c, y) in a.coordinates(&x)?.into_iter().enumerate() {
                    if !y.is_zero() {
                        t.push((c, e, y));
                    }
                }
            }
            out.push(SuperMatrix::from_triplets(ws.clone(), ws.clone(), t));
        }
        Ok(out)
    }

    /// `C̃₋ = (ω/4)(I − P) C̃ (I − P)` with `C̃ = ḡ^{ab} ad(X_a) ⊗ D_b`.
    pub fn c_tilde_minus(&self, kind: StorageKind) -> Result<SuperMatrix> {
        let a = &self.algebra;
        let dm: Vec<SuperMatrix> = self.anticommutator_matrices()?.iter().map(|x| x.to_kind(kind)).collect();
        let ad: Vec<SuperMatrix> = a.ad().iter().map(|x| x.to_kind(kind)).collect();
        let ws = a.space();
        let ww = ws.tensor(ws);
        let mut ct = SuperMatrix::zeros(ww.clone(), ww.clone()).into_kind(kind);
        for (i, j, g) in a.killing_inv().iter_nonzero() {
            ct = &ct + &graded_kron(&ad[i], &dm[j]).scale(g);
        }
        let id = SuperMatrix::identity(ww).into_kind(kind);
        let anti = &id - &superperm(ws).into_kind(kind);
        Ok((&(&anti * &ct) * &anti).scale(&r(self.omega(), 4)))
    }

    /// `I, P, K, Ĉ_ad, Ĉ±, C̃₋` in the explicit generator basis.
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
        let ctm = self.c_tilde_minus(kind).expect("anticommutators lie in gl = sl + 1");
        OperatorBundle::from_parts(id, perm, k, c, Some(ctm))
    }

    fn place4(&self, a: &SuperMatrix, pos: &[usize]) -> SuperMatrix {
        place_any(a, pos, 4).expect("valid placement")
    }

    /// The same operators on `V^{⊗4}` with `I = Ī₁₂Ī₃₄`:
    /// `P = I P₁₃P₂₄`,
    /// `K = K₃₂K₁₄ − (P₂₄K₁₂K₃₄ + P₁₃K₃₂K₁₄)/ω + K₁₂K₃₄/ω²`,
    /// `Ĉ_ad = (P₁₃ + P₂₄ − K₃₂ − K₁₄)/(2ω)`,
    /// `C̃₋ = ½(P₁₃ − P₂₄)(1 − (K₁₂ + K₃₄ + K₃₂ + K₁₄)/ω)`.
    pub fn embedded_bundle(&self) -> OperatorBundle {
        let w = self.omega();
        let ib = self.pair_identity();
        let ie = &self.place4(&ib, &[1, 2]) * &self.place4(&ib, &[3, 4]);
        let p = self.perm();
        let k = self.k_def();
        let one = SuperMatrix::identity(self.v.power(4));
        let (p13, p24) = (self.place4(&p, &[1, 3]), self.place4(&p, &[2, 4]));
        let (k12, k34) = (self.place4(&k, &[1, 2]), self.place4(&k, &[3, 4]));
        let (k32, k14) = (self.place4(&k, &[3, 2]), self.place4(&k, &[1, 4]));
        let bold = &p13 * &p24;
        let perm = &ie * &bold;
        let k1234 = &k12 * &k34;
        let k3214 = &k32 * &k14;
        let big_k = SuperMatrix::linear_combination(&[
            (r(1, 1), &k3214),
            (r(-1, w), &(&p24 * &k1234)),
            (r(-1, w), &(&p13 * &k3214)),
            (r(1, w * w), &k1234),
        ]);
        let c = SuperMatrix::linear_combination(&[
            (r(1, 2 * w), &p13),
            (r(1, 2 * w), &p24),
            (r(-1, 2 * w), &k32),
            (r(-1, 2 * w), &k14),
        ]);
        let diff = SuperMatrix::linear_combination(&[(r(1, 2), &p13), (r(-1, 2), &p24)]);
        let tail = SuperMatrix::linear_combination(&[
            (r(1, 1), &one),
            (r(-1, w), &k12),
            (r(-1, w), &k34),
            (r(-1, w), &k32),
            (r(-1, w), &k14),
        ]);
        let ctm = &diff * &tail;
        OperatorBundle::from_parts(ie, perm, big_k, c, Some(ctm))
    }

    /// Closed forms on `V^{⊗4}` with `𝐏 = P₁₃P₂₄`:
    /// `P₋ = ½(1 − 𝐏)(1 − (K₁₂+K₃₄)/ω)`,
    /// `P₊ = ½(1 + 𝐏)(1 − (K₁₂+K₃₄)/ω + K₁₂K₃₄/ω²)`,
    /// `Ĉ₊ = (2P₁₃ + 2P₂₄ − (1+𝐏)(K₃₂ + K₁₄))/(4ω)`,
    /// `Ĉ₋ = (𝐏 − 1)(K₁₄ + K₃₂)/(4ω)`.
    /// Returned as `[P₋, P₊, Ĉ₋, Ĉ₊]`.
    pub fn embedded_closed_forms(&self) -> [SuperMatrix; 4] {
        let w = self.omega();
        let p = self.perm();
        let k = self.k_def();
        let one = SuperMatrix::identity(self.v.power(4));
        let (p13, p24) = (self.place4(&p, &[1, 3]), self.place4(&p, &[2, 4]));
        let (k12, k34) = (self.place4(&k, &[1, 2]), self.place4(&k, &[3, 4]));
        let (k32, k14) = (self.place4(&k, &[3, 2]), self.place4(&k, &[1, 4]));
        let bold = &p13 * &p24;
        let lc = |t: &[(Rational, &SuperMatrix)]| SuperMatrix::linear_combination(t);
        let minus = lc(&[(r(1, 2), &one), (r(-1, 2), &bold)]);
        let plus = lc(&[(r(1, 2), &one), (r(1, 2), &bold)]);
        let k1234 = &k12 * &k34;
        let pm = &minus * &lc(&[(r(1, 1), &one), (r(-1, w), &k12), (r(-1, w), &k34)]);
        let pp = &plus
            * &lc(&[(r(1, 1), &one), (r(-1, w), &k12), (r(-1, w), &k34), (r(1, w * w), &k1234)]);
        let ks = &k32 + &k14;
        let cp = lc(&[
            (r(1, 2 * w), &p13),
            (r(1, 2 * w), &p24),
            (r(-1, 2 * w), &(&plus * &ks)),
        ]);
        let cm = (&minus * &ks).scale(&r(-1, 2 * w));
        [pm, pp, cm, cp]
    }

    /// `P₊C̃₋ = C̃₋P₊ = 0`, `C̃₋Ĉ₋ = Ĉ₋C̃₋ = 0`, `C̃₋² = 2Ĉ₋ + P₋`,
    /// `C̃₋(C̃₋ + I)(C̃₋ − I) = 0`.
    pub fn c_tilde_relations(b: &OperatorBundle) -> Vec<(String, bool)> {
        let Some(t) = b.c_tilde_minus.as_ref() else {
            return vec![("C~- present".into(), false)];
        };
        let pp = b.p_plus();
        let t2 = t * t;
        let cube = &(&t2 * t) - t;
        vec![
            ("P+C~-=0".into(), (&pp * t).is_zero()),
            ("C~-P+=0".into(), (t * &pp).is_zero()),
            ("C~-C-=0".into(), (t * &b.c_minus).is_zero()),
            ("C-C~-=0".into(), (&b.c_minus * t).is_zero()),
            (
                "C~-^2=2C-+P-".into(),
                t2 == SuperMatrix::linear_combination(&[(r(2, 1), &b.c_minus), (r(1, 1), &b.p_minus())]),
            ),
            ("C~-(C~-+1)(C~--1)=0".into(), cube.is_zero()),
        ]
    }

    pub fn char_identity(&self) -> AdjointIdentity {
        sl_char_identity(self.omega()).expect("omega > 0 by construction")
    }

    /// The seven (generic `ω`) or six (`ω = 1, 2`) projectors for `Ĉ_ad`
    /// and `C̃₋` on the given bundle.
    pub fn adjoint_projectors(&self, b: &OperatorBundle) -> Result<ProjectorSystem> {
        let ctm = b
            .c_tilde_minus
            .clone()
            .ok_or_else(|| Error::Unavailable("bundle without C~-".into()))?;
        let w = self.omega();
        let expected = sl_expected_dims(self.m, self.n).ok();
        let exp = |i: usize| expected.as_ref().map(|e| e[i].1);
        let lc = |t: &[(Rational, &SuperMatrix)]| SuperMatrix::linear_combination(t);
        let pm = b.p_minus();
        let pp = b.p_plus();
        let cp = &b.c_plus;
        let cp2 = cp * cp;
        let k = &b.k;
        let mut projectors = vec![
            Projector::new("Vt(-1)", Sector::Minus, lc(&[(r(1, 1), &b.c_minus), (r(1, 2), &pm), (r(-1, 2), &ctm)]))
                .eigen("Ct", r(-1, 1), 1)
                .eigen("C", r(0, 1), 1)
                .expect(exp(0)),
            Projector::new("Vt(+1)", Sector::Minus, lc(&[(r(1, 1), &b.c_minus), (r(1, 2), &pm), (r(1, 2), &ctm)]))
                .eigen("Ct", r(1, 1), 1)
                .eigen("C", r(0, 1), 1)
                .expect(exp(1)),
            Projector::new("V2(-)", Sector::Minus, b.c_minus.scale(&r(-2, 1)))
                .eigen("C", r(-1, 2), 1)
                .expect(exp(2)),
        ];
        match w {
            1 => projectors.extend([
                Projector::new(
                    "V1(+)",
                    Sector::Plus,
                    lc(&[(r(-1, 2), &pp), (r(-5, 4), k), (r(-1, 2), cp), (r(1, 1), &cp2)]),
                )
                .eigen("C", r(-1, 1), 2),
                Projector::new(
                    "V2(+)",
                    Sector::Plus,
                    lc(&[(r(1, 6), &pp), (r(-1, 12), k), (r(1, 2), cp), (r(1, 3), &cp2)]),
                )
                .eigen("C", r(1, 1), 1),
                Projector::new(
                    "V3(+)",
                    Sector::Plus,
                    lc(&[(r(4, 3), &pp), (r(4, 3), k), (r(-4, 3), &cp2)]),
                )
                .eigen("C", r(-1, 2), 1),
            ]),
            2 => projectors.extend([
                Projector::new("V1(+)", Sector::Plus, k.scale(&r(1, 3))).eigen("C", r(-1, 1), 1),
                Projector::new(
                    "V2(+)",
                    Sector::Plus,
                    lc(&[(r(1, 4), &pp), (r(-1, 12), k), (r(1, 1), cp), (r(1, 1), &cp2)]),
                )
                .eigen("C", r(1, 2), 1),
                Projector::new(
                    "V3(+)",
                    Sector::Plus,
                    lc(&[(r(3, 4), &pp), (r(-1, 4), k), (r(-1, 1), cp), (r(-1, 1), &cp2)]),
                )
                .eigen("C", r(-1, 2), 2),
            ]),
            _ => projectors.extend([
                Projector::new("V1(+)", Sector::Plus, k.scale(&r(1, w * w - 1)))
                    .eigen("C", r(-1, 1), 1)
                    .expect(exp(3)),
                Projector::new(
                    "V2(+)",
                    Sector::Plus,
                    lc(&[
                        (r(-w, 2 * (w + 1) * (w + 2)), k),
                        (r(w * w, w + 2), &cp2),
                        (r(w, 2), cp),
                        (r(w, 2 * (w + 2)), &pp),
                    ]),
                )
                .eigen("C", r(1, w), 1)
                .expect(exp(4)),
                Projector::new(
                    "V3(+)",
                    Sector::Plus,
                    lc(&[
                        (r(w, 2 * (w - 1) * (w - 2)), k),
                        (r(-w * w, w - 2), &cp2),
                        (r(-w, 2), cp),
                        (r(w, 2 * (w - 2)), &pp),
                    ]),
                )
                .eigen("C", r(-1, w), 1)
                .expect(exp(5)),
                Projector::new(
                    "V4(+)",
                    Sector::Plus,
                    lc(&[(r(4 * w * w, w * w - 4), &cp2), (r(-4, w * w - 4), &pp), (r(-4, w * w - 4), k)]),
                )
                .eigen("C", r(-1, 2), 1)
                .expect(exp(6)),
            ]),
        }
        Ok(ProjectorSystem {
            identity: b.identity.clone(),
            operators: vec![("C".into(), b.c_ad.clone()), ("Ct".into(), ctm)],
            projectors,
        })
    }

    pub fn is_ad_invariant(&self, op: &SuperMatrix) -> bool {
        self.algebra.is_invariant(self.algebra.ad(), op)
    }

    /// `P` and `K` on `V⊗V`.
    pub fn brauer_generators(&self) -> (SuperMatrix, SuperMatrix) {
        (self.perm(), self.k_def())
    }
}

/// The adjoint identity of `Ĉ_ad` for `sl` at `ω > 0`.
pub fn sl_char_identity(w: i64) -> Result<AdjointIdentity> {
    if w <= 0 {
        return Err(Error::Unavailable(format!("omega={w}: sl needs omega > 0")));
    }
    Ok(match w {
        1 => AdjointIdentity {
            residual_k: r(1, 2),
            generalized: Some(vec![(r(0, 1), 1), (r(-1, 2), 1), (r(-1, 1), 2), (r(1, 1), 1)]),
            ..AdjointIdentity::simple(vec![r(0, 1), r(-1, 1), r(1, 1), r(-1, 2)])
        },
        2 => AdjointIdentity {
            residual_k: r(1, 16),
            residual_p_plus: r(1, 16),
            residual_c_plus_sq: r(-1, 4),
            generalized: Some(vec![(r(0, 1), 1), (r(-1, 2), 2), (r(-1, 1), 1), (r(1, 2), 1)]),
            ..AdjointIdentity::simple(vec![r(0, 1), r(-1, 1), r(1, 2), r(-1, 2)])
        },
        _ => AdjointIdentity::simple(vec![r(0, 1), r(-1, 1), r(1, w), r(-1, w), r(-1, 2)]),
    })
}

/// `(dim_even, dim_odd)` of the seven projectors, in the order of
/// [`SlModel::adjoint_projectors`]; `ω ≥ 3` after swapping.
pub fn sl_expected_dims(m: usize, n: usize) -> Result<Vec<(String, (i64, i64))>> {
    let (m, n) = if m < n { (n as i64, m as i64) } else { (m as i64, n as i64) };
    let w = m - n;
    if w < 3 {
        return Err(Error::Unavailable(format!("omega={w}: no closed dimension formulas")));
    }
    let tilde = r((m * m - 1) * (m * m - 4), 4)
        + r((n * n - 1) * (n * n - 4), 4)
        + r((m * n + 1) * (3 * m * n - 2), 2);
    let ev = [
        tilde.clone(),
        tilde,
        r(m * m + n * n - 1, 1),
        r(1, 1),
        r(m * m * (m - 1) * (m + 3), 4) + r(n * n * (n + 1) * (n - 3), 4)
            + r(m * n * (3 * m * n - m + n - 1), 2),
        r(m * m * (m + 1) * (m - 3), 4) + r(n * n * (n - 1) * (n + 3), 4)
            + r(m * n * (3 * m * n + m - n - 1), 2),
        r(m * m + n * n - 1, 1),
    ];
    let od = [
        m * n * (m * m + n * n - 2),
        m * n * (m * m + n * n - 2),
        2 * m * n,
        0,
        m * n * (m * (m + 1) + n * (n - 1) - 2),
        m * n * (m * (m - 1) + n * (n + 1) - 2),
        2 * m * n,
    ];
    let names = ["Vt(-1)", "Vt(+1)", "V2(-)", "V1(+)", "V2(+)", "V3(+)", "V4(+)"];
    let int = |x: &Rational| x.to_i64().ok_or_else(|| Error::BadDimension(x.clone()));
    (0..7)
        .map(|i| Ok((String::from(names[i]), (int(&ev[i])?, od[i]))))
        .collect()
}
