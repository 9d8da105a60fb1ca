//! Vogel-parameter layer: `(α, β, γ, t)` for `osp` and `sl`, the universal
//! cubic identity for `Ĉ₊`, universal projectors and superdimensions, and
//! the eigenvalues `c_k` of the higher Casimir operators in the adjoint
//! representation.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::casimir_engine::{OperatorBundle, Projector, ProjectorSystem, Sector};
use crate::error::{Error, Result};
use crate::superlinalg::SuperMatrix;
use crate::Rational;

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Osp,
    Sl,
}

impl core::fmt::Display for Family {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Family::Osp => "osp",
            Family::Sl => "sl",
        })
    }
}

/// Which column of the parameter tables applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Column {
    Sl,
    /// `osp(2m+1|N)` with `ω > 1`, `osp(2m|N)` with `ω > 0`.
    OspUpper,
    /// `osp(2m+1|N)` with `ω ≤ 1`, `osp(2m|N)` with `ω ≤ 0`.
    OspLower,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VogelParams {
    pub family: Family,
    pub omega: i64,
    pub column: Column,
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub t: Rational,
    /// Dual Coxeter number.
    pub h_dual: Rational,
    /// `−(αβ + αγ + βγ)/(4t²)`.
    pub mu1: Rational,
    /// `−αβγ/(16t³)`.
    pub mu2: Rational,
}

/// `(μ₁, μ₂)` from their closed forms in `ω`.
pub fn mu_closed_form(family: Family, omega: i64) -> Result<(Rational, Rational)> {
    let w = omega;
    match family {
        Family::Osp => {
            if w == 2 {
                return Err(Error::OspOmegaTwo);
            }
            let d = w - 2;
            Ok((r(-(w - 8), 2 * d * d), r(w - 4, 2 * d * d * d)))
        }
        Family::Sl => {
            if w == 0 {
                return Err(Error::SlSquare(0));
            }
            Ok((r(1, w * w), r(1, 4 * w * w)))
        }
    }
}

/// `h∨`: `ω` for `sl`, `ω − 2` or `−(ω − 2)/2` for `osp`.
pub fn dual_coxeter(family: Family, m: usize, n: usize) -> Result<Rational> {
    Ok(vogel_params(family, m, n)?.h_dual)
}

fn osp_column(m: usize, w: i64) -> Column {
    let upper = if m % 2 == 1 { w > 1 } else { w > 0 };
    if upper {
        Column::OspUpper
    } else {
        Column::OspLower
    }
}

/// Table lookup. `sl(M|N)` with `M < N` is read as `sl(N|M)`.
pub fn vogel_params(family: Family, m: usize, n: usize) -> Result<VogelParams> {
    let (column, w, [a, b, g, h]) = match family {
        Family::Sl => {
            if m == n {
                return Err(Error::SlSquare(m));
            }
            let w = (m as i64 - n as i64).abs();
            (Column::Sl, w, [int(-2), int(2), int(w), int(w)])
        }
        Family::Osp => {
            if n % 2 == 1 {
                return Err(Error::OddN(n));
            }
            let w = m as i64 - n as i64;
            if w == 2 {
                return Err(Error::OspOmegaTwo);
            }
            match osp_column(m, w) {
                Column::OspUpper => (Column::OspUpper, w, [int(-2), int(4), int(w - 4), int(w - 2)]),
                _ => (Column::OspLower, w, [int(1), int(-2), r(-(w - 4), 2), r(-(w - 2), 2)]),
            }
        }
    };
    let t = h.clone();
    let t2 = &t * &t;
    let mu1 = -(&(&(&a * &b) + &(&a * &g)) + &(&b * &g)) / (&t2 * &int(4));
    let mu2 = -(&(&a * &b) * &g) / (&(&t2 * &t) * &int(16));
    Ok(VogelParams {
        family,
        omega: w,
        column,
        alpha: a,
        beta: b,
        gamma: g,
        t,
        h_dual: h,
        mu1,
        mu2,
    })
}

impl VogelParams {
    pub fn abg(&self) -> [&Rational; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    /// `t = α + β + γ`.
    pub fn check_normalization(&self) -> bool {
        &(&self.alpha + &self.beta) + &self.gamma == self.t
    }

    /// `μ₁, μ₂` agree with their closed forms in `ω`.
    pub fn check_mu(&self) -> bool {
        mu_closed_form(self.family, self.omega)
            .map(|(a, b)| a == self.mu1 && b == self.mu2)
            .unwrap_or(false)
    }

    /// `C₊` eigenvalues `−α/2t, −β/2t, −γ/2t`.
    pub fn roots(&self) -> [Rational; 3] {
        let tt = &self.t * &int(2);
        self.abg().map(|x| -(x / &tt))
    }

    /// Parameters with `3x − 2t = 0`.
    pub fn exceptional(&self) -> Vec<&'static str> {
        let tt = &self.t * &int(2);
        ["alpha", "beta", "gamma"]
            .into_iter()
            .zip(self.abg())
            .filter(|(_, x)| (&(*x * &int(3)) - &tt).is_zero())
            .map(|(n, _)| n)
            .collect()
    }

    /// `(2μ₂ − μ₁ + ½)/(2μ₂)`.
    pub fn sdim_from_mu(&self) -> Result<Rational> {
        let two_mu2 = &self.mu2 * &int(2);
        (&(&two_mu2 - &self.mu1) + &r(1, 2))
            .checked_div(&two_mu2)
            .ok_or_else(|| Error::Unavailable("mu2 = 0: sdim formula singular".into()))
    }

    /// `(α − 2t)(β − 2t)(γ − 2t)/(αβγ)`.
    pub fn sdim_vogel(&self) -> Result<Rational> {
        let tt = &self.t * &int(2);
        let num: Rational = self.abg().iter().map(|x| *x - &tt).product();
        let den: Rational = self.abg().iter().map(|x| (*x).clone()).product();
        num.checked_div(&den)
            .ok_or_else(|| Error::Unavailable("alpha*beta*gamma = 0: sdim formula singular".into()))
    }

    /// `str P(x|y,z) = −(3x−2t)(y−2t)(z−2t)(y+t)(z+t)t / (x²(x−y)(x−z)yz)`.
    pub fn sdim_projector(&self, x: &Rational, y: &Rational, z: &Rational) -> Result<Rational> {
        let t = &self.t;
        let tt = t * &int(2);
        let num = -(&(&(&(&(&(x * &int(3)) - &tt) * &(y - &tt)) * &(z - &tt)) * &(&(y + t) * &(z + t))) * t);
        let den = &(&(&(x * x) * &(x - y)) * &(x - z)) * &(y * z);
        num.checked_div(&den)
            .ok_or_else(|| Error::Unavailable("zero denominator in projector superdimension".into()))
    }

    /// `[sdim g, sdim V(−1), sdim V(−α/2t), sdim V(−β/2t), sdim V(−γ/2t)]`.
    pub fn universal_sdims(&self) -> Result<[Rational; 5]> {
        let (a, b, g) = (&self.alpha, &self.beta, &self.gamma);
        Ok([
            self.sdim_vogel()?,
            Rational::one(),
            self.sdim_projector(a, b, g)?,
            self.sdim_projector(b, a, g)?,
            self.sdim_projector(g, a, b)?,
        ])
    }
}

/// `Ĉ₊³ + ½Ĉ₊² − μ₁Ĉ₊ − μ₂(I + P − 2K)`.
pub fn universal_cubic_residual(b: &OperatorBundle, p: &VogelParams) -> SuperMatrix {
    b.cubic_residual(&p.mu1, &p.mu2)
}

/// `P(x|y,z) = 4t²/((y−x)(z−x)) (Ĉ₊² + (½ − x/2t)Ĉ₊ + yz/(8t²)(I + P − 2x/(x−2t) K))`.
pub fn universal_projector(
    b: &OperatorBundle,
    p: &VogelParams,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<SuperMatrix> {
    let t = &p.t;
    let tt = t * &int(2);
    let t2 = t * t;
    let sing = || Error::Unavailable("degenerate Vogel parameters".into());
    let pre = (&t2 * &int(4)).checked_div(&(&(y - x) * &(z - x))).ok_or_else(sing)?;
    let lin = &r(1, 2) - &x.checked_div(&tt).ok_or_else(sing)?;
    let c0 = (y * z).checked_div(&(&t2 * &int(8))).ok_or_else(sing)?;
    let kc = -(&(&c0 * &(x * &int(2))).checked_div(&(x - &tt)).ok_or_else(sing)?);
    let cp2 = &b.c_plus * &b.c_plus;
    Ok(SuperMatrix::linear_combination(&[
        (pre.clone(), &cp2),
        (&pre * &lin, &b.c_plus),
        (&pre * &c0, &b.identity),
        (&pre * &c0, &b.perm),
        (&pre * &kc, &b.k),
    ]))
}

/// The four projectors on `P₊(V_ad⊗V_ad)` labelled by their `Ĉ₊` eigenvalues;
/// fails when two eigenvalues collide or a denominator vanishes.
pub fn universal_projectors(b: &OperatorBundle, p: &VogelParams) -> Result<ProjectorSystem> {
    let roots = p.roots();
    let mut all: Vec<&Rational> = roots.iter().collect();
    let m1 = -Rational::one();
    all.push(&m1);
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if all[i] == all[j] {
                return Err(Error::Unavailable(format!("coinciding eigenvalue {}", all[i])));
            }
        }
    }
    let sdim = p.sdim_vogel()?;
    let (a, bb, g) = (&p.alpha, &p.beta, &p.gamma);
    let name = |x: &Rational| format!("P({x})");
    let mut projectors = Vec::new();
    for (i, (x, y, z)) in [(a, bb, g), (bb, a, g), (g, a, bb)].into_iter().enumerate() {
        projectors.push(
            Projector::new(&name(&roots[i]), Sector::Plus, universal_projector(b, p, x, y, z)?)
                .eigen("C+", roots[i].clone(), 1),
        );
    }
    let kp = b.k.scale(&sdim.recip().ok_or_else(|| Error::Unavailable("sdim g = 0".into()))?);
    projectors.push(Projector::new("P(-1)", Sector::Plus, kp).eigen("C+", m1, 1));
    Ok(ProjectorSystem {
        identity: b.p_plus(),
        operators: vec![("C+".into(), b.c_plus.clone())],
        projectors,
    })
}

/// Coefficients `c₀…c_kmax` from two routes and their agreement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub direct: Vec<Rational>,
    pub universal: Vec<Rational>,
    pub equal: Vec<bool>,
}

impl SeriesReport {
    pub fn new(direct: Vec<Rational>, universal: Vec<Rational>) -> Self {
        let equal = direct.iter().zip(&universal).map(|(a, b)| a == b).collect();
        SeriesReport {
            direct,
            universal,
            equal,
        }
    }

    pub fn all_equal(&self) -> bool {
        self.direct.len() == self.universal.len() && self.equal.iter().all(|&e| e)
    }
}

/// `c_k` from `str₂(Ĉ_ad^k) = c_k·I`, `k = 0…kmax`, checking that every
/// `str₂(Ĉ_ad^k)` is scalar. `c_ad` acts on `W⊗W` (two factors).
pub fn casimir_series_direct(c_ad: &SuperMatrix, kmax: u32) -> Result<Vec<Rational>> {
    let f = c_ad.rows().factors();
    if f.len() != 2 || f[0] != f[1] {
        return Err(Error::NotTwoFactor);
    }
    let w = &f[0];
    let n = w.len();
    let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n * n];
    for (i, j, x) in c_ad.iter_nonzero() {
        cols[j].push((i, x.clone()));
    }
    let odd = |c: usize| w[c] == 1;
    // str2[k][a][b]
    let mut acc = vec![vec![Rational::zero(); n * n]; kmax as usize + 1];
    let mut cur = vec![Rational::zero(); n * n];
    let mut next = vec![Rational::zero(); n * n];
    let mut support: Vec<usize> = Vec::new();
    let mut touched = vec![false; n * n];
    for b in 0..n {
        for c in 0..n {
            let sign = |x: &Rational| if odd(c) { -x.clone() } else { x.clone() };
            // C^0 e_(b,c) = e_(b,c)
            acc[0][b * n + b] += &sign(&Rational::one());
            for x in cur.iter_mut() {
                *x = Rational::zero();
            }
            cur[b * n + c] = Rational::one();
            support.clear();
            support.push(b * n + c);
            for k in 1..=kmax as usize {
                let mut new_support = Vec::new();
                for &j in &support {
                    if cur[j].is_zero() {
                        continue;
                    }
                    for (i, x) in &cols[j] {
                        if !touched[*i] {
                            touched[*i] = true;
                            new_support.push(*i);
                        }
                        next[*i] += &(x * &cur[j]);
                    }
                }
                for &j in &support {
                    cur[j] = Rational::zero();
                }
                for &i in &new_support {
                    touched[i] = false;
                    core::mem::swap(&mut cur[i], &mut next[i]);
                    // str₂: keep the second index equal to c
                    if i % n == c && !cur[i].is_zero() {
                        let a = i / n;
                        acc[k][a * n + b] += &sign(&cur[i]);
                    }
                }
                support = new_support;
            }
        }
    }
    let mut out = Vec::with_capacity(kmax as usize + 1);
    for (k, m) in acc.iter().enumerate() {
        let c = m[0].clone();
        for a in 0..n {
            for b in 0..n {
                let want = if a == b { &c } else { &Rational::zero() };
                if &m[a * n + b] != want {
                    return Err(Error::NotScalar(k as u32));
                }
            }
        }
        out.push(c);
    }
    Ok(out)
}

/// Truncated product of power series.
fn series_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += &(x * y);
        }
    }
    out
}

/// `num/den` to order `len`, `den[0] ≠ 0`.
fn series_div(num: &[Rational], den: &[Rational], len: usize) -> Vec<Rational> {
    let d0 = den[0].recip().expect("den(0) != 0");
    let mut q = vec![Rational::zero(); len];
    for k in 0..len {
        let mut s = num.get(k).cloned().unwrap_or_else(Rational::zero);
        for j in 1..=k.min(den.len() - 1) {
            s -= &(&den[j] * &q[k - j]);
        }
        q[k] = &s * &d0;
    }
    q
}

/// Taylor coefficients of
/// `c(z) = sdim g + z² N(z) / (6(2t+αz)(2t+βz)(2t+γz)(2+z)(1+z))`,
/// `N(z) = 96t³ + 168t³z + 6(14t³ + t·t₂ − t₃)z² + (13t³ + 3t·t₂ − 4t₃)z³`,
/// `t₂ = α² + β² + γ²`, `t₃ = α³ + β³ + γ³`.
pub fn casimir_series_universal(p: &VogelParams, kmax: u32) -> Result<Vec<Rational>> {
    universal_series_with(p, kmax, &int(13) * &p.t.pow(3))
}

/// The same expansion with an arbitrary `z⁵` leading term `x` in place of `13t³`.
pub fn universal_series_with(p: &VogelParams, kmax: u32, lead: Rational) -> Result<Vec<Rational>> {
    let len = kmax as usize + 1;
    let t = &p.t;
    let t3c = t.pow(3);
    let s2: Rational = p.abg().iter().map(|x| *x * *x).sum();
    let s3: Rational = p.abg().iter().map(|x| x.pow(3)).sum();
    let num = vec![
        Rational::zero(),
        Rational::zero(),
        &t3c * &int(96),
        &t3c * &int(168),
        &(&(&(&t3c * &int(14)) + &(t * &s2)) - &s3) * &int(6),
        &(&lead + &(&(t * &s2) * &int(3))) - &(&s3 * &int(4)),
    ];
    let tt = t * &int(2);
    let mut den = vec![int(6)];
    for x in p.abg() {
        den = series_mul(&den, &[tt.clone(), x.clone()], len.max(6));
    }
    den = series_mul(&den, &[int(2), int(1)], len.max(6));
    den = series_mul(&den, &[int(1), int(1)], len.max(6));
    if den[0].is_zero() {
        return Err(Error::Unavailable("t = 0".into()));
    }
    let mut c = series_div(&num, &den, len);
    c[0] += &p.sdim_vogel()?;
    Ok(c)
}

/// A short label for reports.
pub fn describe(p: &VogelParams) -> String {
    format!(
        "{}(omega={}): alpha={}, beta={}, gamma={}, t={}",
        p.family, p.omega, p.alpha, p.beta, p.gamma, p.t
    )
}
