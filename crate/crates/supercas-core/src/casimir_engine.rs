//! Algebra-agnostic checks: polynomial identities in an operator, spectral
//! projectors, dimension extraction, graded Yang–Baxter and Brauer relations.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::superlinalg::{place, place_any, supertrace, trace, GradedSpace, SuperMatrix};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub value: Rational,
    pub mult: u32,
}

/// Roots with multiplicities of `Π (C − aᵢ)^{kᵢ}`, together with the
/// operator playing the role of the identity (an embedded identity in the
/// `V^{⊗4}` picture).
#[derive(Clone, Debug)]
pub struct PolySpec {
    roots: Vec<Root>,
    identity: SuperMatrix,
}

impl PolySpec {
    pub fn new(roots: Vec<(Rational, u32)>, identity: SuperMatrix) -> Result<Self> {
        for (i, (a, k)) in roots.iter().enumerate() {
            if *k == 0 {
                return Err(Error::ZeroMultiplicity);
            }
            if roots[..i].iter().any(|(b, _)| b == a) {
                return Err(Error::RepeatedRoot);
            }
        }
        Ok(PolySpec {
            roots: roots
                .into_iter()
                .map(|(value, mult)| Root { value, mult })
                .collect(),
            identity,
        })
    }

    /// All multiplicities one.
    pub fn simple(values: Vec<Rational>, identity: SuperMatrix) -> Result<Self> {
        Self::new(values.into_iter().map(|a| (a, 1)).collect(), identity)
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn identity(&self) -> &SuperMatrix {
        &self.identity
    }

    pub fn degree(&self) -> u32 {
        self.roots.iter().map(|r| r.mult).sum()
    }

    fn with_mults(&self, mults: &[u32]) -> Vec<(Rational, u32)> {
        self.roots
            .iter()
            .zip(mults)
            .map(|(r, &k)| (r.value.clone(), k))
            .collect()
    }
}

fn shifted(c: &SuperMatrix, id: &SuperMatrix, a: &Rational) -> SuperMatrix {
    SuperMatrix::linear_combination(&[(Rational::one(), c), (-a, id)])
}

/// `Π (C − a·I)^k` over the given factors, starting from the identity.
pub fn poly_product(c: &SuperMatrix, identity: &SuperMatrix, factors: &[(Rational, u32)]) -> SuperMatrix {
    let mut acc = identity.clone();
    for (a, k) in factors {
        let f = shifted(c, identity, a);
        for _ in 0..*k {
            acc = &acc * &f;
        }
    }
    acc
}

#[derive(Clone, Debug)]
pub struct PolyReport {
    pub matches: bool,
    /// The computed product `Π (C − aᵢ)^{kᵢ}`.
    pub product: SuperMatrix,
    /// Largest absolute numerator of `product − expected`.
    pub max_numerator: BigInt,
}

/// Evaluates the product for `spec` and compares it with `expected`
/// (zero when `None`).
pub fn check_poly(c: &SuperMatrix, spec: &PolySpec, expected: Option<&SuperMatrix>) -> PolyReport {
    let product = poly_product(c, &spec.identity, &spec.with_mults(&spec.mults()));
    let diff = match expected {
        Some(e) => &product - e,
        None => product.clone(),
    };
    PolyReport {
        matches: diff.is_zero(),
        max_numerator: diff.max_abs_numerator(),
        product,
    }
}

impl PolySpec {
    fn mults(&self) -> Vec<u32> {
        self.roots.iter().map(|r| r.mult).collect()
    }
}

/// The identity holds with zero residual and lowering any multiplicity by
/// one breaks it.
pub fn is_minimal(c: &SuperMatrix, spec: &PolySpec) -> bool {
    let m = spec.mults();
    if !poly_product(c, &spec.identity, &spec.with_mults(&m)).is_zero() {
        return false;
    }
    (0..m.len()).all(|i| {
        let mut mm = m.clone();
        mm[i] -= 1;
        !poly_product(c, &spec.identity, &spec.with_mults(&mm)).is_zero()
    })
}

/// `Π_{i≠j} (C − aᵢ)/(a_j − aᵢ)` for a spec with simple roots.
pub fn projector_from_roots(c: &SuperMatrix, spec: &PolySpec, j: usize) -> Result<SuperMatrix> {
    if spec.roots.iter().any(|r| r.mult != 1) {
        return Err(Error::RepeatedRoot);
    }
    lagrange_factor(c, spec, j)
}

fn lagrange_factor(c: &SuperMatrix, spec: &PolySpec, j: usize) -> Result<SuperMatrix> {
    let aj = &spec.roots[j].value;
    let mut acc = spec.identity.clone();
    for (i, r) in spec.roots.iter().enumerate() {
        if i == j {
            continue;
        }
        let den = (aj - &r.value).recip().ok_or(Error::RepeatedRoot)?;
        let f = shifted(c, &spec.identity, &r.value).scale(&den);
        for _ in 0..r.mult {
            acc = &acc * &f;
        }
    }
    Ok(acc)
}

/// `I − (I − Π_{i≠j} ((C − aᵢ)/(a_j − aᵢ))^{kᵢ})^{k_j}` for every root `j`.
/// Fails with `NotIdempotent` unless the multiplicities are minimal.
pub fn generalized_projectors(c: &SuperMatrix, spec: &PolySpec) -> Result<Vec<SuperMatrix>> {
    if !is_minimal(c, spec) {
        return Err(Error::Unavailable("multiplicities are not minimal".into()));
    }
    let id = &spec.identity;
    (0..spec.roots.len())
        .map(|j| {
            let q = lagrange_factor(c, spec, j)?;
            let comp = id - &q;
            Ok(id - &comp.pow_with(id, spec.roots[j].mult))
        })
        .collect()
}

impl SuperMatrix {
    /// `self^e` with `identity` as the zeroth power.
    pub fn pow_with(&self, identity: &SuperMatrix, e: u32) -> SuperMatrix {
        let mut acc = identity.clone();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

/// `(dim_even, dim_odd) = ((tr + str)/2, (tr − str)/2)` of an idempotent.
pub fn dims_of(p: &SuperMatrix) -> Result<(i64, i64)> {
    if &(p * p) != p {
        return Err(Error::NotIdempotent);
    }
    let t = trace(p)?;
    let s = supertrace(p)?;
    let two = Rational::from_int(2);
    let conv = |x: Rational| -> Result<i64> {
        let v = x.to_i64().ok_or(Error::BadDimension(x.clone()))?;
        if v < 0 {
            return Err(Error::BadDimension(x));
        }
        Ok(v)
    };
    Ok((conv(&(&t + &s) / &two)?, conv(&(&t - &s) / &two)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sector {
    Plus,
    Minus,
    Full,
}

/// `(C − a)^k P = 0` with `C` named among the system operators.
#[derive(Clone, Debug)]
pub struct EigenEquation {
    pub operator: String,
    pub eigenvalue: Rational,
    pub k: u32,
}

#[derive(Clone, Debug)]
pub struct Projector {
    pub name: String,
    pub sector: Sector,
    pub equations: Vec<EigenEquation>,
    pub matrix: SuperMatrix,
    pub expected: Option<(i64, i64)>,
}

impl Projector {
    pub fn new(name: &str, sector: Sector, matrix: SuperMatrix) -> Self {
        Projector {
            name: name.into(),
            sector,
            equations: Vec::new(),
            matrix,
            expected: None,
        }
    }

    pub fn eigen(mut self, operator: &str, eigenvalue: Rational, k: u32) -> Self {
        self.equations.push(EigenEquation {
            operator: operator.into(),
            eigenvalue,
            k,
        });
        self
    }

    pub fn expect(mut self, dims: Option<(i64, i64)>) -> Self {
        self.expected = dims;
        self
    }

    /// Projects onto a generalized, not an ordinary, eigenspace.
    pub fn is_generalized(&self) -> bool {
        self.equations.iter().any(|e| e.k > 1)
    }

    pub fn eigenvalue(&self) -> Option<&Rational> {
        self.equations.first().map(|e| &e.eigenvalue)
    }
}

#[derive(Clone, Debug)]
pub struct ProjectorSystem {
    pub identity: SuperMatrix,
    pub operators: Vec<(String, SuperMatrix)>,
    pub projectors: Vec<Projector>,
}

#[derive(Clone, Debug)]
pub struct SystemReport {
    pub complete: bool,
    pub orthogonal: bool,
    pub idempotent: bool,
    /// Per projector: every eigen-equation holds with minimal `k`.
    pub eigen: Vec<(String, bool)>,
    pub dims: Vec<(String, Result<(i64, i64)>)>,
    /// `Σ (dim_even + dim_odd)` and `trace(identity)`.
    pub total: i64,
    pub expected_total: i64,
}

impl SystemReport {
    pub fn all_pass(&self) -> bool {
        self.complete
            && self.orthogonal
            && self.idempotent
            && self.eigen.iter().all(|(_, ok)| *ok)
            && self.dims.iter().all(|(_, d)| d.is_ok())
            && self.total == self.expected_total
    }
}

impl ProjectorSystem {
    pub fn operator(&self, name: &str) -> Option<&SuperMatrix> {
        self.operators.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn get(&self, name: &str) -> Option<&Projector> {
        self.projectors.iter().find(|p| p.name == name)
    }

    pub fn len(&self) -> usize {
        self.projectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projectors.is_empty()
    }

    fn eigen_ok(&self, p: &Projector) -> bool {
        p.equations.iter().all(|e| {
            let Some(c) = self.operator(&e.operator) else {
                return false;
            };
            let f = shifted(c, &self.identity, &e.eigenvalue);
            let mut acc = p.matrix.clone();
            let mut before = acc.clone();
            for _ in 0..e.k {
                before = acc.clone();
                acc = &f * &acc;
            }
            acc.is_zero() && !before.is_zero()
        })
    }

    pub fn verify(&self) -> SystemReport {
        let n = self.projectors.len();
        let mats: Vec<&SuperMatrix> = self.projectors.iter().map(|p| &p.matrix).collect();
        let complete = match mats.split_first() {
            Some((first, rest)) => {
                let mut s = (*first).clone();
                for m in rest {
                    s = &s + *m;
                }
                s == self.identity
            }
            None => self.identity.is_zero(),
        };
        let mut orthogonal = true;
        let mut idempotent = true;
        for i in 0..n {
            for j in 0..n {
                let prod = mats[i] * mats[j];
                if i == j {
                    idempotent &= &prod == mats[i];
                } else {
                    orthogonal &= prod.is_zero();
                }
            }
        }
        let eigen = self
            .projectors
            .iter()
            .map(|p| (p.name.clone(), self.eigen_ok(p)))
            .collect();
        let dims: Vec<(String, Result<(i64, i64)>)> = self
            .projectors
            .iter()
            .map(|p| (p.name.clone(), dims_of(&p.matrix)))
            .collect();
        let total = dims
            .iter()
            .filter_map(|(_, d)| d.as_ref().ok())
            .map(|(e, o)| e + o)
            .sum();
        let expected_total = trace(&self.identity)
            .ok()
            .and_then(|t| t.to_i64())
            .unwrap_or(-1);
        SystemReport {
            complete,
            orthogonal,
            idempotent,
            eigen,
            dims,
            total,
            expected_total,
        }
    }
}

/// Change of basis between the `V^{⊗4}` picture and an explicit basis of
/// `V_ad⊗V_ad`: `embed = E⊗E`, `restrict = R⊗R` with `R·E = 1`.
#[derive(Clone, Debug)]
pub struct PictureMaps {
    pub embed: SuperMatrix,
    pub restrict: SuperMatrix,
}

impl PictureMaps {
    pub fn new(e: &SuperMatrix, r: &SuperMatrix) -> Self {
        PictureMaps {
            embed: crate::superlinalg::graded_kron(e, e),
            restrict: crate::superlinalg::graded_kron(r, r),
        }
    }

    /// `(R⊗R)·X·(E⊗E)`.
    pub fn to_restricted(&self, x: &SuperMatrix) -> SuperMatrix {
        &(&self.restrict * x) * &self.embed
    }

    /// `(E⊗E)·X·(R⊗R)`.
    pub fn to_embedded(&self, x: &SuperMatrix) -> SuperMatrix {
        &(&self.embed * x) * &self.restrict
    }
}

/// The ad-invariant operators on `V_ad⊗V_ad` in one picture.
#[derive(Clone, Debug)]
pub struct OperatorBundle {
    /// `I`: the identity, or the embedded identity on `V^{⊗4}`.
    pub identity: SuperMatrix,
    /// `P`: the permutation of the two adjoint factors.
    pub perm: SuperMatrix,
    pub k: SuperMatrix,
    pub c_ad: SuperMatrix,
    pub c_plus: SuperMatrix,
    pub c_minus: SuperMatrix,
    /// `C̃₋`, only for `sl(M|N)`.
    pub c_tilde_minus: Option<SuperMatrix>,
}

impl OperatorBundle {
    /// Fills in `Ĉ± = ½(I ± P)Ĉ`.
    pub fn from_parts(
        identity: SuperMatrix,
        perm: SuperMatrix,
        k: SuperMatrix,
        c_ad: SuperMatrix,
        c_tilde_minus: Option<SuperMatrix>,
    ) -> Self {
        let half = Rational::new(1, 2);
        let pc = &perm * &c_ad;
        let c_plus = SuperMatrix::linear_combination(&[(half.clone(), &c_ad), (half.clone(), &pc)]);
        let c_minus = SuperMatrix::linear_combination(&[(half.clone(), &c_ad), (-half, &pc)]);
        OperatorBundle {
            identity,
            perm,
            k,
            c_ad,
            c_plus,
            c_minus,
            c_tilde_minus,
        }
    }

    /// `½(I + P)`.
    pub fn p_plus(&self) -> SuperMatrix {
        let h = Rational::new(1, 2);
        SuperMatrix::linear_combination(&[(h.clone(), &self.identity), (h, &self.perm)])
    }

    /// `½(I − P)`.
    pub fn p_minus(&self) -> SuperMatrix {
        let h = Rational::new(1, 2);
        SuperMatrix::linear_combination(&[(h.clone(), &self.identity), (-h, &self.perm)])
    }

    /// `I + P`.
    pub fn sym(&self) -> SuperMatrix {
        &self.identity + &self.perm
    }

    pub fn map(&self, f: impl Fn(&SuperMatrix) -> SuperMatrix) -> OperatorBundle {
        OperatorBundle {
            identity: f(&self.identity),
            perm: f(&self.perm),
            k: f(&self.k),
            c_ad: f(&self.c_ad),
            c_plus: f(&self.c_plus),
            c_minus: f(&self.c_minus),
            c_tilde_minus: self.c_tilde_minus.as_ref().map(f),
        }
    }

    /// Relations shared by both families: products of `I, P, K, Ĉ±` and the
    /// block supertraces, with `sdim = sdim g`.
    pub fn relations(&self, sdim: &Rational) -> RelationReport {
        let (i, p, k, c) = (&self.identity, &self.perm, &self.k, &self.c_ad);
        let (cp, cm) = (&self.c_plus, &self.c_minus);
        let neg_k = -k;
        let mut out: RelationReport = Vec::new();
        let mut push = |name: &str, ok: bool| out.push((String::from(name), ok));
        push("C=C++C-", &(cp + cm) == c);
        push("C+C-=0", (cp * cm).is_zero());
        push("C-C+=0", (cm * cp).is_zero());
        push("P^2=I", &(p * p) == i);
        push("IP=P", &(i * p) == p);
        push("IK=K", &(i * k) == k);
        push("IC=C", &(i * c) == c);
        push("KP=K", &(k * p) == k);
        push("PK=K", &(p * k) == k);
        push("K^2=sdim K", (k * k) == k.scale(sdim));
        push("CP=PC", (c * p) == (p * c));
        push("CK=-K", (c * k) == neg_k);
        push("KC=-K", (k * c) == neg_k);
        push("C-K=0", (cm * k).is_zero());
        push("KC-=0", (k * cm).is_zero());
        push("C+K=-K", (cp * k) == neg_k);
        push("KC+=-K", (k * cp) == neg_k);
        let cm2 = cm * cm;
        push("C-^2=-C-/2", cm2 == cm.scale(&Rational::new(-1, 2)));
        let st = |m: &SuperMatrix| supertrace(m).ok();
        let sd = |num: i64, den: i64| Some(sdim * &Rational::new(num, den));
        let c2 = c * c;
        let cp2 = cp * cp;
        push("str C=0", st(c) == Some(Rational::zero()));
        push("str C^2=sdim", st(&c2) == sd(1, 1));
        push("str C+=sdim/2", st(cp) == sd(1, 2));
        push("str C-=-sdim/2", st(cm) == sd(-1, 2));
        push("str C-^2=sdim/4", st(&cm2) == sd(1, 4));
        push("str C+^2=3sdim/4", st(&cp2) == sd(3, 4));
        push("str C-^3=-sdim/8", st(&(&cm2 * cm)) == sd(-1, 8));
        push("str C+^3=-sdim/8", st(&(&cp2 * cp)) == sd(-1, 8));
        push("str K=sdim", st(k) == sd(1, 1));
        push("str I=sdim^2", st(i) == Some(sdim * sdim));
        push("str P=sdim", st(p) == sd(1, 1));
        out
    }

    /// Universal cubic `Ĉ₊³ + ½Ĉ₊² − μ₁Ĉ₊ − μ₂(I + P − 2K)`.
    pub fn cubic_residual(&self, mu1: &Rational, mu2: &Rational) -> SuperMatrix {
        let cp2 = &self.c_plus * &self.c_plus;
        let cp3 = &cp2 * &self.c_plus;
        let two_mu2 = mu2 * &Rational::from_int(2);
        SuperMatrix::linear_combination(&[
            (Rational::one(), &cp3),
            (Rational::new(1, 2), &cp2),
            (-mu1, &self.c_plus),
            (-mu2, &self.identity),
            (-mu2, &self.perm),
            (two_mu2, &self.k),
        ])
    }
}

/// Collapses repeated values into multiplicities, keeping first-seen order.
pub fn merge_roots(values: &[Rational]) -> Vec<(Rational, u32)> {
    let mut out: Vec<(Rational, u32)> = Vec::new();
    for a in values {
        match out.iter_mut().find(|(b, _)| b == a) {
            Some((_, k)) => *k += 1,
            None => out.push((a.clone(), 1)),
        }
    }
    out
}

/// Roots with multiplicities of the minimal adjoint identity, and the
/// right-hand side `x·K + y·P₊ + z·Ĉ₊²` of the product `Π (Ĉ_ad − aᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointIdentity {
    pub roots: Vec<(Rational, u32)>,
    pub residual_k: Rational,
    pub residual_p_plus: Rational,
    pub residual_c_plus_sq: Rational,
    /// Multiplicities for the generalized projectors when the residual is
    /// nonzero.
    pub generalized: Option<Vec<(Rational, u32)>>,
}

impl AdjointIdentity {
    pub fn simple(roots: Vec<Rational>) -> Self {
        AdjointIdentity {
            roots: roots.into_iter().map(|a| (a, 1)).collect(),
            residual_k: Rational::zero(),
            residual_p_plus: Rational::zero(),
            residual_c_plus_sq: Rational::zero(),
            generalized: None,
        }
    }

    pub fn has_residual(&self) -> bool {
        !(self.residual_k.is_zero() && self.residual_p_plus.is_zero() && self.residual_c_plus_sq.is_zero())
    }

    /// The expected right-hand side evaluated on a bundle.
    pub fn residual(&self, b: &OperatorBundle) -> SuperMatrix {
        let cp2 = &b.c_plus * &b.c_plus;
        SuperMatrix::linear_combination(&[
            (self.residual_k.clone(), &b.k),
            (self.residual_p_plus.clone(), &b.p_plus()),
            (self.residual_c_plus_sq.clone(), &cp2),
        ])
    }
}

/// Signs `(−1)^{[a][b]}` as a lookup over a graded basis.
fn sign_table(v: &GradedSpace) -> Vec<bool> {
    let d = v.dim();
    let mut s = vec![false; d * d];
    for a in 0..d {
        for b in 0..d {
            s[a * d + b] = v.parity(a) & v.parity(b) == 1;
        }
    }
    s
}

fn rows_of(r: &SuperMatrix) -> Vec<Vec<(usize, Rational)>> {
    let mut rows = vec![Vec::new(); r.nrows()];
    for (i, j, x) in r.iter_nonzero() {
        rows[i].push((j, x.clone()));
    }
    rows
}

/// Both sides of the component graded Yang–Baxter equation
///
/// `R(u)^{i₁i₂}_{j₁j₂} (−1)^{[j₁][j₂]} R(u+v)^{j₁i₃}_{k₁j₃} (−1)^{[k₁][j₂]} R(v)^{j₂j₃}_{k₂k₃}`
/// `= R(v)^{i₂i₃}_{j₂j₃} (−1)^{[i₁][j₂]} R(u+v)^{i₁j₃}_{j₁k₃} (−1)^{[j₁][j₂]} R(u)^{j₁j₂}_{k₁k₂}`
///
/// as dense arrays indexed by `(i₁i₂i₃, k₁k₂k₃)`.
pub fn ybe_sides(
    v: &GradedSpace,
    ru: &SuperMatrix,
    ruv: &SuperMatrix,
    rv: &SuperMatrix,
) -> (Vec<Rational>, Vec<Rational>) {
    let d = v.dim();
    let d2 = d * d;
    let d3 = d2 * d;
    let s = sign_table(v);
    let (ru, ruv, rv) = (rows_of(ru), rows_of(ruv), rows_of(rv));
    let sgn = |neg: bool, x: Rational| if neg { -x } else { x };

    // T[i1 i2 i3, k1 j2 j3] = Σ_{j1} Ru[i1i2,j1j2] S[j1,j2] Ruv[j1i3,k1j3] S[k1,j2]
    let mut t = vec![Rational::zero(); d3 * d3];
    for i12 in 0..d2 {
        for (j12, x) in &ru[i12] {
            let (j1, j2) = (j12 / d, j12 % d);
            for i3 in 0..d {
                for (k1j3, y) in &ruv[j1 * d + i3] {
                    let (k1, j3) = (k1j3 / d, k1j3 % d);
                    let val = sgn(s[j1 * d + j2] ^ s[k1 * d + j2], x * y);
                    t[(i12 * d + i3) * d3 + (k1 * d + j2) * d + j3] += val;
                }
            }
        }
    }
    let mut lhs = vec![Rational::zero(); d3 * d3];
    for row in 0..d3 {
        for k1 in 0..d {
            for j23 in 0..d2 {
                let x = &t[row * d3 + k1 * d2 + j23];
                if x.is_zero() {
                    continue;
                }
                for (k23, y) in &rv[j23] {
                    lhs[row * d3 + k1 * d2 + k23] += x * y;
                }
            }
        }
    }

    // U[i1 i2 i3, j1 j2 k3] = Σ_{j3} Rv[i2i3,j2j3] S[i1,j2] Ruv[i1j3,j1k3] S[j1,j2]
    let mut u = vec![Rational::zero(); d3 * d3];
    for i1 in 0..d {
        for i23 in 0..d2 {
            for (j23, x) in &rv[i23] {
                let (j2, j3) = (j23 / d, j23 % d);
                for (j1k3, y) in &ruv[i1 * d + j3] {
                    let (j1, k3) = (j1k3 / d, j1k3 % d);
                    let val = sgn(s[i1 * d + j2] ^ s[j1 * d + j2], x * y);
                    u[(i1 * d2 + i23) * d3 + (j1 * d + j2) * d + k3] += val;
                }
            }
        }
    }
    let mut rhs = vec![Rational::zero(); d3 * d3];
    for row in 0..d3 {
        for j12 in 0..d2 {
            for k3 in 0..d {
                let x = &u[row * d3 + j12 * d + k3];
                if x.is_zero() {
                    continue;
                }
                for (k12, y) in &ru[j12] {
                    rhs[row * d3 + k12 * d + k3] += x * y;
                }
            }
        }
    }
    (lhs, rhs)
}

#[derive(Clone, Debug)]
pub struct YbeSample {
    pub u: Rational,
    pub v: Rational,
    pub outcome: Result<bool>,
}

/// Checks the component graded YBE for `R` at each `(u, v)`; a sample hitting
/// a pole of `R` at `u`, `v` or `u + v` is reported with the error.
pub fn verify_ybe<F>(v: &GradedSpace, r: F, samples: &[(Rational, Rational)]) -> Vec<YbeSample>
where
    F: Fn(&Rational) -> Result<SuperMatrix>,
{
    samples
        .iter()
        .map(|(u, w)| {
            let outcome = (|| {
                let ru = r(u)?;
                let rv = r(w)?;
                let ruv = r(&(u + w))?;
                let (l, rr) = ybe_sides(v, &ru, &ruv, &rv);
                Ok(l == rr)
            })();
            YbeSample {
                u: u.clone(),
                v: w.clone(),
                outcome,
            }
        })
        .collect()
}

/// `P R(u) P R(−u) = 1`.
pub fn unitarity<F>(v: &GradedSpace, r: F, u: &Rational) -> Result<bool>
where
    F: Fn(&Rational) -> Result<SuperMatrix>,
{
    let p = crate::superlinalg::superperm(v);
    let prod = &(&(&p * &r(u)?) * &p) * &r(&-u)?;
    Ok(prod == SuperMatrix::identity(v.tensor(v)))
}

/// Named relation outcomes.
pub type RelationReport = Vec<(String, bool)>;

/// The Brauer-algebra relations for `σ_α = P_{α,α+1}`, `κ_α = K_{α,α+1}` on
/// `V^{⊗s}`, given `P` and `K` on `V⊗V`.
pub fn verify_brauer(p: &SuperMatrix, k: &SuperMatrix, omega: &Rational, s: usize) -> Result<RelationReport> {
    let space = p.rows().factors()[0].clone();
    let id = SuperMatrix::identity(GradedSpace::from_parities(space).power(s));
    let sig: Vec<SuperMatrix> = (1..s).map(|a| place(p, &[a, a + 1], s)).collect::<Result<_>>()?;
    let kap: Vec<SuperMatrix> = (1..s).map(|a| place(k, &[a, a + 1], s)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    let n = s - 1;
    for a in 0..n {
        let (sa, ka) = (&sig[a], &kap[a]);
        let l = a + 1;
        out.push((format!("s{l}^2=1"), (sa * sa) == id));
        out.push((format!("k{l}^2=w k{l}"), (ka * ka) == ka.scale(omega)));
        out.push((format!("s{l}k{l}=k{l}"), &(sa * ka) == ka));
        out.push((format!("k{l}s{l}=k{l}"), &(ka * sa) == ka));
        for b in 0..n {
            if b > a + 1 {
                let (sb, kb) = (&sig[b], &kap[b]);
                let m = b + 1;
                out.push((format!("s{l}s{m}=s{m}s{l}"), (sa * sb) == (sb * sa)));
                out.push((format!("k{l}k{m}=k{m}k{l}"), (ka * kb) == (kb * ka)));
                out.push((format!("s{l}k{m}=k{m}s{l}"), (sa * kb) == (kb * sa)));
                out.push((format!("s{m}k{l}=k{l}s{m}"), (sb * ka) == (ka * sb)));
            }
        }
        if a + 1 < n {
            let (sb, kb) = (&sig[a + 1], &kap[a + 1]);
            let m = a + 2;
            out.push((
                format!("s{l}s{m}s{l}=s{m}s{l}s{m}"),
                (&(sa * sb) * sa) == (&(sb * sa) * sb),
            ));
            out.push((format!("k{l}k{m}k{l}=k{l}"), &(&(ka * kb) * ka) == ka));
            out.push((format!("k{m}k{l}k{m}=k{m}"), &(&(kb * ka) * kb) == kb));
            out.push((
                format!("s{l}k{m}k{l}=s{m}k{l}"),
                (&(sa * kb) * ka) == (sb * ka),
            ));
            out.push((
                format!("k{m}k{l}s{m}=k{m}s{l}"),
                (&(kb * ka) * sb) == (kb * sa),
            ));
        }
    }
    Ok(out)
}

/// The contraction relations
///
/// `K_ab K_ab = ω K_ab`, `P_ab K_ad K_bc = P_cd K_ad K_bc`,
/// `K_ad K_bc P_ab = K_ad K_bc P_cd`, `K_ab P_ab K_bc = K_ab P_ab P_ac = P_ac P_bc K_bc`,
/// `K_ab P_bc K_bc = K_ab P_ab P_ac = P_ac P_bc K_bc`
///
/// on `V^{⊗4}` for every ordering `(a, b, c, d)` of `1…4`.
pub fn verify_contraction_relations(p: &SuperMatrix, k: &SuperMatrix, omega: &Rational) -> Result<RelationReport> {
    let mut pp = vec![None; 25];
    let mut kk = vec![None; 25];
    for a in 1..=4 {
        for b in 1..=4 {
            if a != b {
                pp[a * 5 + b] = Some(place_any(p, &[a, b], 4)?);
                kk[a * 5 + b] = Some(place_any(k, &[a, b], 4)?);
            }
        }
    }
    let gp = |a: usize, b: usize| pp[a * 5 + b].as_ref().unwrap();
    let gk = |a: usize, b: usize| kk[a * 5 + b].as_ref().unwrap();
    let mut out = Vec::new();
    for perm in permutations4() {
        let [a, b, c, d] = perm;
        let tag = format!("{a}{b}{c}{d}");
        let kab = gk(a, b);
        let kadkbc = gk(a, d) * gk(b, c);
        let abac = &(kab * gp(a, b)) * gp(a, c);
        let acbc = &(gp(a, c) * gp(b, c)) * gk(b, c);
        out.push((format!("KK=wK[{tag}]"), (kab * kab) == kab.scale(omega)));
        out.push((
            format!("PKK[{tag}]"),
            (gp(a, b) * &kadkbc) == (gp(c, d) * &kadkbc),
        ));
        out.push((
            format!("KKP[{tag}]"),
            (&kadkbc * gp(a, b)) == (&kadkbc * gp(c, d)),
        ));
        let lhs1 = &(kab * gp(a, b)) * gk(b, c);
        out.push((format!("KPK-ab[{tag}]"), lhs1 == abac && abac == acbc));
        let lhs2 = &(kab * gp(b, c)) * gk(b, c);
        out.push((format!("KPK-bc[{tag}]"), lhs2 == abac && abac == acbc));
    }
    Ok(out)
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                for d in 1..=4 {
                    let v = [a, b, c, d];
                    if (0..4).all(|i| (0..i).all(|j| v[i] != v[j])) {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn diag(vals: &[i64]) -> SuperMatrix {
        let v = GradedSpace::standard(vals.len() - 1, 1);
        SuperMatrix::from_triplets(
            v.clone(),
            v,
            vals.iter().enumerate().map(|(i, &x)| (i, i, q(x, 1))).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn zero_operator_projector_is_identity() {
        let v = GradedSpace::standard(2, 1);
        let c = SuperMatrix::zeros(v.clone(), v.clone());
        let id = SuperMatrix::identity(v);
        let spec = PolySpec::simple(vec![q(0, 1)], id.clone()).unwrap();
        assert_eq!(projector_from_roots(&c, &spec, 0).unwrap(), id);
        assert_eq!(dims_of(&c).unwrap(), (0, 0));
    }

    #[test]
    fn diagonal_spectrum() {
        let c = diag(&[1, 2, 2, 3]);
        let id = SuperMatrix::identity(c.rows().clone());
        let spec = PolySpec::simple(vec![q(1, 1), q(2, 1), q(3, 1)], id.clone()).unwrap();
        assert!(check_poly(&c, &spec, None).matches);
        assert!(is_minimal(&c, &spec));
        let ps: Vec<_> = (0..3).map(|j| projector_from_roots(&c, &spec, j).unwrap()).collect();
        assert_eq!(dims_of(&ps[1]).unwrap(), (2, 0));
        assert_eq!(dims_of(&ps[2]).unwrap(), (0, 1));
        let gen = generalized_projectors(&c, &spec).unwrap();
        assert_eq!(gen, ps);
    }

    #[test]
    fn jordan_block_needs_multiplicity_two() {
        let v = GradedSpace::standard(3, 0);
        // [[2,1,0],[0,2,0],[0,0,5]]
        let c = SuperMatrix::from_triplets(
            v.clone(),
            v.clone(),
            [(0, 0, q(2, 1)), (0, 1, q(1, 1)), (1, 1, q(2, 1)), (2, 2, q(5, 1))],
        );
        let id = SuperMatrix::identity(v);
        let bad = PolySpec::simple(vec![q(2, 1), q(5, 1)], id.clone()).unwrap();
        assert!(!check_poly(&c, &bad, None).matches);
        let good = PolySpec::new(vec![(q(2, 1), 2), (q(5, 1), 1)], id.clone()).unwrap();
        assert!(is_minimal(&c, &good));
        let ps = generalized_projectors(&c, &good).unwrap();
        assert_eq!(dims_of(&ps[0]).unwrap(), (2, 0));
        assert_eq!(&ps[0] + &ps[1], id);
        let over = PolySpec::new(vec![(q(2, 1), 3), (q(5, 1), 1)], id).unwrap();
        assert!(!is_minimal(&c, &over));
        assert!(generalized_projectors(&c, &over).is_err());
    }

    #[test]
    fn spec_rejects_repeats() {
        let id = SuperMatrix::identity(GradedSpace::standard(1, 0));
        assert_eq!(
            PolySpec::simple(vec![q(1, 2), q(1, 2)], id.clone()).unwrap_err(),
            Error::RepeatedRoot
        );
        assert_eq!(
            PolySpec::new(vec![(q(1, 2), 0)], id).unwrap_err(),
            Error::ZeroMultiplicity
        );
    }

    #[test]
    fn non_idempotent_rejected() {
        let c = diag(&[2, 0]);
        assert_eq!(dims_of(&c), Err(Error::NotIdempotent));
    }

    #[test]
    fn superpermutation_solves_ybe() {
        let v = GradedSpace::standard(1, 2);
        let p = crate::superlinalg::superperm(&v);
        let (l, r) = ybe_sides(&v, &p, &p, &p);
        assert_eq!(l, r);
    }
}
