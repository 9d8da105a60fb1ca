//! Verification suites over one instance.

use std::cell::OnceCell;
use std::fmt;
use std::time::Instant;

use clap::ValueEnum;
use supercas_core::casimir_engine::{
    check_poly, generalized_projectors, is_minimal, unitarity, verify_brauer, verify_contraction_relations,
    verify_ybe, AdjointIdentity, OperatorBundle, PolySpec, Projector, ProjectorSystem, Sector,
};
use supercas_core::sl_algebra::SlModel;
use supercas_core::superlinalg::supertrace;
use supercas_core::vogel_universal::{
    casimir_series_direct, casimir_series_universal, mu_closed_form, universal_cubic_residual,
    universal_projectors, vogel_params, VogelParams,
};
use supercas_core::{Error, Rational, StorageKind, SuperMatrix};

use crate::instance::{Instance, Model};
use crate::report::{dims_string, rationals, Recorder, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Defining,
    Adjoint,
    Projectors,
    Ybe,
    Brauer,
    Vogel,
    Series,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Defining,
        Suite::Adjoint,
        Suite::Projectors,
        Suite::Ybe,
        Suite::Brauer,
        Suite::Vogel,
        Suite::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Defining => "defining",
            Suite::Adjoint => "adjoint",
            Suite::Projectors => "projectors",
            Suite::Ybe => "ybe",
            Suite::Brauer => "brauer",
            Suite::Vogel => "vogel",
            Suite::Series => "series",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Instances and suites exercised by default.
pub fn acceptance_matrix() -> Vec<(Instance, Vec<Suite>)> {
    use Suite::*;
    vec![
        (Instance::osp(3, 2), vec![Defining, Adjoint, Projectors, Vogel]),
        (Instance::osp(5, 2), Suite::ALL.to_vec()),
        (Instance::osp(6, 2), vec![Defining, Adjoint, Projectors, Vogel]),
        (Instance::osp(7, 4), vec![Defining, Vogel]),
        (Instance::osp(2, 2), vec![Defining, Adjoint, Projectors, Vogel]),
        (Instance::osp(7, 2), vec![Adjoint, Projectors, Vogel, Series]),
        (Instance::osp(8, 2), vec![Adjoint, Projectors, Vogel]),
        (Instance::sl(2, 1), vec![Defining, Adjoint, Projectors, Vogel]),
        (Instance::sl(3, 1), vec![Defining, Adjoint, Projectors, Ybe, Vogel]),
        (Instance::sl(4, 1), Suite::ALL.to_vec()),
        (Instance::sl(5, 2), vec![Defining, Vogel]),
        (Instance::sl(5, 1), vec![Adjoint, Projectors, Vogel, Series]),
    ]
}

/// `(u, v)` candidates; the first three avoiding poles are used.
const YBE_CANDIDATES: [(i64, i64, i64, i64); 6] = [
    (1, 3, 2, 5),
    (-2, 7, 3, 4),
    (5, 2, -1, 3),
    (3, 5, 1, 7),
    (-4, 3, 2, 9),
    (7, 4, -5, 6),
];

pub struct Context {
    pub instance: Instance,
    pub model: Model,
    pub order: u32,
    bundle: OnceCell<OperatorBundle>,
    embedded: OnceCell<OperatorBundle>,
    system: OnceCell<Result<ProjectorSystem, Error>>,
}

impl Context {
    pub fn new(instance: Instance, order: u32) -> Result<Self, Error> {
        Ok(Context {
            instance,
            model: instance.build()?,
            order,
            bundle: OnceCell::new(),
            embedded: OnceCell::new(),
            system: OnceCell::new(),
        })
    }

    pub fn bundle(&self) -> &OperatorBundle {
        self.bundle.get_or_init(|| self.model.adjoint_bundle(StorageKind::Sparse))
    }

    pub fn embedded(&self) -> &OperatorBundle {
        self.embedded.get_or_init(|| self.model.embedded_bundle())
    }

    pub fn system(&self) -> &Result<ProjectorSystem, Error> {
        self.system
            .get_or_init(|| self.model.adjoint_projectors(self.bundle(), || self.embedded().clone()))
    }

    pub fn params(&self) -> Result<VogelParams, Error> {
        let (m, n) = self.model.mn();
        vogel_params(self.model.family(), m, n)
    }

    pub fn new_report(&self) -> Report {
        let (m, n) = self.model.mn();
        Report::new(self.instance.to_string(), m, n, self.model.omega())
    }
}

/// Builds the model and runs `suites` in order.
pub fn run_instance(instance: Instance, suites: &[Suite], order: u32) -> Result<Report, Error> {
    let ctx = Context::new(instance, order)?;
    let mut report = ctx.new_report();
    for &s in suites {
        run_suite(&ctx, s, &mut report);
    }
    Ok(report)
}

pub fn run_suite(ctx: &Context, suite: Suite, report: &mut Report) {
    match suite {
        Suite::Defining => defining(ctx, report),
        Suite::Adjoint => adjoint(ctx, report),
        Suite::Projectors => projectors(ctx, report),
        Suite::Ybe => ybe(ctx, report),
        Suite::Brauer => brauer(ctx, report),
        Suite::Vogel => vogel(ctx, report),
        Suite::Series => series(ctx, report),
    }
}

fn skip_or_fail(rec: &mut Recorder, check: &str, t0: Instant, e: Error) {
    match e {
        Error::Unavailable(why) => rec.skip(check, why),
        e => rec.error(check, t0, e),
    }
}

fn eigen_of<'a>(p: &'a Projector, op: &str) -> Option<&'a Rational> {
    p.equations.iter().find(|e| e.operator == op).map(|e| &e.eigenvalue)
}

fn verify_system(rec: &mut Recorder, prefix: &str, sys: &ProjectorSystem) -> Vec<(String, (i64, i64))> {
    let t0 = Instant::now();
    let rep = sys.verify();
    rec.flag(format!("{prefix}complete"), t0, rep.complete);
    rec.flag(format!("{prefix}orthogonal"), t0, rep.orthogonal);
    rec.flag(format!("{prefix}idempotent"), t0, rep.idempotent);
    for (name, ok) in &rep.eigen {
        rec.flag(format!("{prefix}eigen {name}"), t0, *ok);
    }
    let mut dims = Vec::new();
    for ((name, d), p) in rep.dims.iter().zip(&sys.projectors) {
        match (d, p.expected) {
            (Ok(d), Some(e)) => rec.eq(format!("{prefix}dims {name}"), t0, dims_string(e), dims_string(*d)),
            (Ok(_), None) => rec.flag(format!("{prefix}dims {name} integral"), t0, true),
            (Err(e), _) => rec.error(format!("{prefix}dims {name}"), t0, e),
        }
        if let Ok(d) = d {
            dims.push((name.clone(), *d));
        }
    }
    rec.eq(format!("{prefix}total dims"), t0, rep.expected_total, rep.total);
    dims
}

fn defining(ctx: &Context, report: &mut Report) {
    let m = &ctx.model;
    let mut rec = Recorder::new("defining", &mut report.checks);
    let closed = m.casimir_defining_closed();
    rec.time("Cf metric contraction = closed form (sparse)", || {
        Ok::<_, Error>(m.casimir_defining(StorageKind::Sparse) == closed)
    });
    rec.time("Cf metric contraction = closed form (dense)", || {
        Ok::<_, Error>(m.casimir_defining(StorageKind::Dense) == closed)
    });
    if let Model::Osp(o) = m {
        rec.time("metric symmetry", || Ok::<_, Error>(o.check_metric_symmetry()));
        rec.time("metric invariance", || Ok::<_, Error>(o.check_invariance()));
        rec.time("Cf^2 closed form", || Ok::<_, Error>(o.check_defining_square()));
    }
    let t0 = Instant::now();
    let id = SuperMatrix::identity(m.space().tensor(m.space()));
    let roots = m.defining_roots();
    let desc = roots.iter().map(|(a, k)| format!("{a}^{k}")).collect::<Vec<_>>().join(" ");
    match PolySpec::new(roots, id) {
        Ok(spec) => {
            let r = check_poly(&closed, &spec, None);
            rec.eq(
                format!("characteristic identity [{desc}]"),
                t0,
                "0".to_string(),
                if r.matches { "0".to_string() } else { format!("nonzero (max numerator {})", r.max_numerator) },
            );
            rec.flag("characteristic identity minimal", t0, is_minimal(&closed, &spec));
        }
        Err(e) => rec.error("characteristic identity", t0, e),
    }
    let t0 = Instant::now();
    match m.defining_projectors() {
        Ok(sys) => {
            verify_system(&mut rec, "projectors: ", &sys);
            let gens = m.algebra().generators();
            for p in &sys.projectors {
                rec.time(format!("projectors: invariant {}", p.name), || {
                    Ok::<_, Error>(m.algebra().is_invariant(gens, &p.matrix))
                });
            }
        }
        Err(e) => skip_or_fail(&mut rec, "projectors", t0, e),
    }
    let u = Rational::new(1, 3);
    let t0 = Instant::now();
    match (m.r_matrix(&u), m.r_matrix_spectral(&u), m.r_matrix_cayley(&u)) {
        (Ok(a), Ok(b), Ok(c)) => {
            rec.flag("R(1/3): rational = spectral", t0, a == b);
            rec.flag("R(1/3): rational = Cayley", t0, a == c);
        }
        (Ok(a), Err(Error::Unavailable(why)), Ok(c)) => {
            rec.flag("R(1/3): rational = Cayley", t0, a == c);
            rec.skip("R(1/3): rational = spectral", why);
        }
        (a, b, c) => {
            let e = a.err().or(b.err()).or(c.err()).expect("one form failed");
            rec.error("R(1/3) forms", t0, e);
        }
    }
}

fn identity_desc(id: &AdjointIdentity) -> String {
    let mut parts = Vec::new();
    for (c, name) in [(&id.residual_k, "K"), (&id.residual_p_plus, "P+"), (&id.residual_c_plus_sq, "C+^2")] {
        if !c.is_zero() {
            parts.push(format!("({c}){name}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// The adjoint identity on one bundle; returns whether it matched.
fn adjoint_identity(rec: &mut Recorder, picture: &str, b: &OperatorBundle, id: &AdjointIdentity) -> bool {
    let t0 = Instant::now();
    let spec = match PolySpec::new(id.roots.clone(), b.identity.clone()) {
        Ok(s) => s,
        Err(e) => {
            rec.error(format!("{picture}: characteristic identity"), t0, e);
            return false;
        }
    };
    let expected = id.residual(b);
    let r = check_poly(&b.c_ad, &spec, Some(&expected));
    let roots = id.roots.iter().map(|(a, _)| a.to_string()).collect::<Vec<_>>().join(", ");
    let want = identity_desc(id);
    let got = if r.matches { want.clone() } else { format!("differs (max numerator {})", r.max_numerator) };
    rec.eq(format!("{picture}: characteristic identity [{roots}] residual"), t0, want, got);
    r.matches
}

fn adjoint(ctx: &Context, report: &mut Report) {
    let m = &ctx.model;
    let mut rec = Recorder::new("adjoint", &mut report.checks);
    let a = m.algebra();
    rec.time("structure constants: antisymmetry", || Ok::<_, Error>(a.check_antisymmetry()));
    rec.time("structure constants: Jacobi", || Ok::<_, Error>(a.check_jacobi()));
    rec.time("str ad = 0", || Ok::<_, Error>(a.check_str_ad()));
    rec.time("Killing metric symmetry", || Ok::<_, Error>(a.check_killing_symmetry()));
    rec.time("lowered structure constants symmetry", || Ok::<_, Error>(a.check_lowered_symmetry()));
    rec.time("contraction identity", || Ok::<_, Error>(a.check_contraction_identity()));
    let t0 = Instant::now();
    let pair = m.pair_space_checks();
    rec.relations("pair space: ", t0, &pair);
    if let Model::Sl(s) = m {
        rec.time("anticommutator constants", || Ok::<_, Error>(s.check_anticommutator_constants()));
    }
    let t0 = Instant::now();
    let b = ctx.bundle();
    rec.relations("restricted: ", t0, &b.relations(&m.sdim()));
    if matches!(m, Model::Sl(_)) {
        let t0 = Instant::now();
        rec.relations("restricted: ", t0, &SlModel::c_tilde_relations(b));
    }
    for (name, op) in [("C", &b.c_ad), ("K", &b.k), ("P", &b.perm)] {
        rec.time(format!("restricted: {name} ad-invariant"), || Ok::<_, Error>(m.is_ad_invariant(op)));
    }
    if let Some(t) = &b.c_tilde_minus {
        rec.time("restricted: C~- ad-invariant", || Ok::<_, Error>(m.is_ad_invariant(t)));
    }
    let id = m.char_identity();
    let restricted_ok = adjoint_identity(&mut rec, "restricted", b, &id);
    let t0 = Instant::now();
    if let Some(g) = &id.generalized {
        match PolySpec::new(g.clone(), b.identity.clone()) {
            Ok(spec) => {
                rec.flag("restricted: generalized identity", t0, check_poly(&b.c_ad, &spec, None).matches);
                rec.flag("restricted: generalized identity minimal", t0, is_minimal(&b.c_ad, &spec));
            }
            Err(e) => rec.error("restricted: generalized identity", t0, e),
        }
    } else if let Ok(spec) = PolySpec::new(id.roots.clone(), b.identity.clone()) {
        rec.flag("restricted: identity minimal", t0, is_minimal(&b.c_ad, &spec));
    }
    if !m.embedded_feasible() {
        rec.skip("embedded picture", format!("dim V^4 = {} > 4096", m.space().dim().pow(4)));
        return;
    }
    let t0 = Instant::now();
    let e = ctx.embedded();
    rec.relations("embedded: ", t0, &e.relations(&m.sdim()));
    if matches!(m, Model::Sl(_)) {
        rec.relations("embedded: ", t0, &SlModel::c_tilde_relations(e));
    }
    let t0 = Instant::now();
    match m {
        Model::Osp(o) => {
            let [cad, cm, cp] = o.embedded_closed_forms();
            rec.flag("embedded: C closed form", t0, cad == e.c_ad);
            rec.flag("embedded: C- closed form", t0, cm == e.c_minus);
            rec.flag("embedded: C+ closed form", t0, cp == e.c_plus);
        }
        Model::Sl(s) => {
            let [pm, pp, cm, cp] = s.embedded_closed_forms();
            rec.flag("embedded: P- closed form", t0, pm == e.p_minus());
            rec.flag("embedded: P+ closed form", t0, pp == e.p_plus());
            rec.flag("embedded: C- closed form", t0, cm == e.c_minus);
            rec.flag("embedded: C+ closed form", t0, cp == e.c_plus);
        }
    }
    let embedded_ok = adjoint_identity(&mut rec, "embedded", e, &id);
    let t0 = Instant::now();
    let maps = m.picture_maps();
    let back = e.map(|x| maps.to_restricted(x));
    for (name, x, y) in [
        ("I", &back.identity, &b.identity),
        ("P", &back.perm, &b.perm),
        ("K", &back.k, &b.k),
        ("C", &back.c_ad, &b.c_ad),
        ("C+", &back.c_plus, &b.c_plus),
        ("C-", &back.c_minus, &b.c_minus),
    ] {
        rec.flag(format!("cross-picture: R {name} E = {name}"), t0, x == y);
    }
    if let (Some(x), Some(y)) = (&back.c_tilde_minus, &b.c_tilde_minus) {
        rec.flag("cross-picture: R C~- E = C~-", t0, x == y);
    }
    rec.eq("cross-picture: identity outcome", t0, restricted_ok, embedded_ok);
}

fn projectors(ctx: &Context, report: &mut Report) {
    let m = &ctx.model;
    let mut rec = Recorder::new("projectors", &mut report.checks);
    let t0 = Instant::now();
    let sys = match ctx.system() {
        Ok(s) => s,
        Err(e) => {
            skip_or_fail(&mut rec, "adjoint projector system", t0, e.clone());
            return;
        }
    };
    let dims = verify_system(&mut rec, "", sys);
    for (name, d) in dims {
        report.dims.insert(name, [d.0, d.1]);
    }
    let t0 = Instant::now();
    for p in &sys.projectors {
        rec.flag(format!("{} ad-invariant", p.name), t0, m.is_ad_invariant(&p.matrix));
    }
    // generalized projectors from the identity itself
    let id = m.char_identity();
    let Some(g) = &id.generalized else { return };
    let t0 = Instant::now();
    let b = ctx.bundle();
    let gen = PolySpec::new(g.clone(), b.identity.clone()).and_then(|s| generalized_projectors(&b.c_ad, &s));
    match gen {
        Ok(gen) => {
            for (pg, (a, _)) in gen.iter().zip(g) {
                let parts: Vec<&Projector> =
                    sys.projectors.iter().filter(|p| eigen_of(p, "C") == Some(a)).collect();
                let sum = parts.iter().skip(1).fold(parts.first().map(|p| p.matrix.clone()), |acc, p| {
                    acc.map(|x| &x + &p.matrix)
                });
                let names = parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join("+");
                rec.flag(format!("generalized projector at {a} = {names}"), t0, sum.as_ref() == Some(pg));
            }
        }
        Err(e) => rec.error("generalized projectors", t0, e),
    }
}

fn ybe(ctx: &Context, report: &mut Report) {
    let m = &ctx.model;
    let mut rec = Recorder::new("ybe", &mut report.checks);
    let ok = |u: &Rational| m.r_matrix(u).is_ok();
    let samples: Vec<(Rational, Rational)> = YBE_CANDIDATES
        .iter()
        .map(|&(a, b, c, d)| (Rational::new(a, b), Rational::new(c, d)))
        .filter(|(u, v)| ok(u) && ok(v) && ok(&(u + v)))
        .take(3)
        .collect();
    let t0 = Instant::now();
    for s in verify_ybe(m.space(), |u| m.r_matrix(u), &samples) {
        let name = format!("YBE u={} v={}", s.u, s.v);
        match s.outcome {
            Ok(b) => rec.flag(name, t0, b),
            Err(e) => rec.error(name, t0, e),
        }
    }
    let us: Vec<Rational> = YBE_CANDIDATES
        .iter()
        .map(|&(a, b, _, _)| Rational::new(a, b))
        .filter(|u| ok(u) && ok(&-u))
        .take(3)
        .collect();
    for u in us {
        rec.time(format!("unitarity u={u}"), || unitarity(m.space(), |x| m.r_matrix(x), &u));
    }
}

fn brauer(ctx: &Context, report: &mut Report) {
    let m = &ctx.model;
    let mut rec = Recorder::new("brauer", &mut report.checks);
    let w = Rational::from_int(m.omega());
    let (p, k) = (m.perm(), m.k_def());
    let t0 = Instant::now();
    let rel = match m {
        Model::Osp(_) => verify_brauer(&p, &k, &w, 4),
        Model::Sl(_) => verify_contraction_relations(&p, &k, &w),
    };
    match rel {
        Ok(rel) => rec.relations("", t0, &rel),
        Err(e) => rec.error("relations", t0, e),
    }
}

fn vogel(ctx: &Context, report: &mut Report) {
    let m = &ctx.model;
    let mut rec = Recorder::new("vogel", &mut report.checks);
    let t0 = Instant::now();
    let p = match ctx.params() {
        Ok(p) => p,
        Err(e) => {
            rec.error("parameters", t0, e);
            return;
        }
    };
    rec.eq("t = alpha + beta + gamma", t0, p.t.clone(), &(&p.alpha + &p.beta) + &p.gamma);
    match mu_closed_form(p.family, p.omega) {
        Ok((mu1, mu2)) => {
            rec.eq("mu1 closed form", t0, mu1, p.mu1.clone());
            rec.eq("mu2 closed form", t0, mu2, p.mu2.clone());
        }
        Err(e) => rec.error("mu closed form", t0, e),
    }
    let exc = p.exceptional();
    if !exc.is_empty() {
        rec.skip("exceptional locus", format!("note: 3x = 2t for {}", exc.join(", ")));
    }
    let sdim = m.sdim();
    rec.eq("sdim g from the adjoint space", t0, sdim.clone(), Rational::from_int(m.algebra().sdim()));
    let t0 = Instant::now();
    match p.sdim_from_mu() {
        Ok(x) => rec.eq("sdim g from mu", t0, sdim.clone(), x),
        Err(Error::Unavailable(why)) => rec.skip("sdim g from mu", why),
        Err(e) => rec.error("sdim g from mu", t0, e),
    }
    match p.sdim_vogel() {
        Ok(x) => rec.eq("sdim g from alpha, beta, gamma", t0, sdim.clone(), x),
        Err(Error::Unavailable(why)) => rec.skip("sdim g from alpha, beta, gamma", why),
        Err(e) => rec.error("sdim g from alpha, beta, gamma", t0, e),
    }
    let t0 = Instant::now();
    let b = ctx.bundle();
    match supertrace(&b.k) {
        Ok(s) => rec.eq("str K = sdim g", t0, sdim.clone(), s),
        Err(e) => rec.error("str K = sdim g", t0, e),
    }
    let t0 = Instant::now();
    let res = universal_cubic_residual(b, &p);
    rec.eq(
        "universal cubic residual",
        t0,
        "0".to_string(),
        if res.is_zero() { "0".to_string() } else { format!("nonzero (max numerator {})", res.max_abs_numerator()) },
    );
    let t0 = Instant::now();
    let uni = match universal_projectors(b, &p) {
        Ok(u) => u,
        Err(Error::Unavailable(why)) => {
            rec.skip("universal projectors", why);
            return;
        }
        Err(e) => {
            rec.error("universal projectors", t0, e);
            return;
        }
    };
    verify_system(&mut rec, "universal: ", &uni);
    let t0 = Instant::now();
    match p.universal_sdims() {
        Ok(sd) => {
            for (i, u) in uni.projectors.iter().enumerate() {
                let want = if i < 3 { &sd[2 + i] } else { &sd[1] };
                match supertrace(&u.matrix) {
                    Ok(s) => rec.eq(format!("universal: str {} formula", u.name), t0, want.clone(), s),
                    Err(e) => rec.error(format!("universal: str {}", u.name), t0, e),
                }
            }
        }
        Err(Error::Unavailable(why)) => rec.skip("universal: str formulas", why),
        Err(e) => rec.error("universal: str formulas", t0, e),
    }
    let t0 = Instant::now();
    match ctx.system() {
        Ok(sys) => {
            for u in &uni.projectors {
                let a = eigen_of(u, "C+");
                let hit = sys
                    .projectors
                    .iter()
                    .find(|c| c.sector == Sector::Plus && !c.is_generalized() && eigen_of(c, "C") == a);
                match hit {
                    Some(c) => rec.flag(format!("universal {} = {}", u.name, c.name), t0, c.matrix == u.matrix),
                    None => rec.skip(format!("universal {}", u.name), "no concrete projector with this eigenvalue"),
                }
            }
        }
        Err(Error::Unavailable(why)) => rec.skip("universal = concrete", why.clone()),
        Err(e) => rec.error("universal = concrete", t0, e),
    }
}

fn series(ctx: &Context, report: &mut Report) {
    let mut rec = Recorder::new("series", &mut report.checks);
    let t0 = Instant::now();
    let p = match ctx.params() {
        Ok(p) => p,
        Err(e) => {
            rec.error("parameters", t0, e);
            return;
        }
    };
    let direct = casimir_series_direct(&ctx.bundle().c_ad, ctx.order);
    let universal = casimir_series_universal(&p, ctx.order);
    match (direct, universal) {
        (Ok(d), Ok(u)) => {
            for (k, (x, y)) in d.iter().zip(&u).enumerate() {
                rec.eq(format!("c_{k}"), t0, x.clone(), y.clone());
            }
            if d.len() > 2 {
                rec.eq("c_1 = 0", t0, Rational::zero(), d[1].clone());
                rec.eq("c_2 = 1", t0, Rational::one(), d[2].clone());
            }
            report.series.direct = rationals(&d);
            report.series.universal = rationals(&u);
        }
        (Err(e), _) | (_, Err(e)) => rec.error("series", t0, e),
    }
}
