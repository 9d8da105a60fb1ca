use supercas_core::casimir_engine::{dims_of, OperatorBundle, ProjectorSystem};
use supercas_core::osp_algebra::OspModel;
use supercas_core::sl_algebra::SlModel;
use supercas_core::superlinalg::supertrace;
use supercas_core::vogel_universal::{
    casimir_series_direct, casimir_series_universal, universal_cubic_residual, universal_projectors,
    universal_series_with, vogel_params, Column, Family,
};
use supercas_core::{Error, Rational, StorageKind};

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

fn abgt(f: Family, m: usize, n: usize) -> [Rational; 4] {
    let p = vogel_params(f, m, n).unwrap();
    [p.alpha, p.beta, p.gamma, p.t]
}

#[test]
fn parameter_tables() {
    assert_eq!(abgt(Family::Sl, 4, 1), [q(-2, 1), q(2, 1), q(3, 1), q(3, 1)]);
    assert_eq!(abgt(Family::Osp, 5, 2), [q(-2, 1), q(4, 1), q(-1, 1), q(1, 1)]);
    assert_eq!(abgt(Family::Osp, 3, 4), [q(1, 1), q(-2, 1), q(5, 2), q(3, 2)]);
    assert_eq!(vogel_params(Family::Osp, 3, 2).unwrap().column, Column::OspLower);
    assert_eq!(vogel_params(Family::Osp, 2, 2).unwrap().column, Column::OspLower);
    assert_eq!(vogel_params(Family::Osp, 6, 2).unwrap().column, Column::OspUpper);
    assert_eq!(vogel_params(Family::Osp, 4, 2).unwrap_err(), Error::OspOmegaTwo);
    assert_eq!(vogel_params(Family::Sl, 2, 2).unwrap_err(), Error::SlSquare(2));
    let osp = [(3, 2), (5, 2), (6, 2), (7, 4), (2, 2), (7, 2), (8, 2), (3, 4), (8, 0)];
    let sl = [(2, 1), (3, 1), (4, 1), (5, 2), (5, 1), (1, 4)];
    for (f, list) in [(Family::Osp, &osp[..]), (Family::Sl, &sl[..])] {
        for &(m, n) in list {
            let p = vogel_params(f, m, n).unwrap();
            assert!(p.check_normalization(), "{f}({m}|{n})");
            assert!(p.check_mu(), "{f}({m}|{n})");
            assert_eq!(p.t, p.h_dual);
        }
    }
    // μ at ω = 3 evaluated by hand
    let p = vogel_params(Family::Osp, 5, 2).unwrap();
    assert_eq!((p.mu1, p.mu2), (q(5, 2), q(-1, 2)));
    let p = vogel_params(Family::Sl, 4, 1).unwrap();
    assert_eq!((p.mu1.clone(), p.mu2.clone()), (q(1, 9), q(1, 36)));
    assert_eq!(p.exceptional(), ["beta"]);
}

#[test]
fn sdim_formulas() {
    for w in [1i64, 3, 4, 5, 7] {
        let p = vogel_params(Family::Sl, (w + 1) as usize, 1).unwrap();
        assert_eq!(p.sdim_vogel().unwrap(), q(w * w - 1, 1));
        assert_eq!(p.sdim_from_mu().unwrap(), q(w * w - 1, 1));
    }
    for (m, n) in [(5, 2), (7, 2), (8, 2), (3, 4), (2, 2)] {
        let p = vogel_params(Family::Osp, m, n).unwrap();
        let w = m as i64 - n as i64;
        assert_eq!(p.sdim_vogel().unwrap(), q(w * (w - 1), 2));
        assert_eq!(p.sdim_from_mu().unwrap(), q(w * (w - 1), 2));
    }
    // γ = 0 at osp ω = 4
    assert!(vogel_params(Family::Osp, 6, 2).unwrap().sdim_vogel().is_err());
}

fn check_universal(b: &OperatorBundle, p: &supercas_core::vogel_universal::VogelParams, concrete: &ProjectorSystem) {
    assert!(universal_cubic_residual(b, p).is_zero());
    let sys = universal_projectors(b, p).unwrap();
    let rep = sys.verify();
    assert!(rep.all_pass(), "{rep:?}");
    let sd = p.universal_sdims().unwrap();
    // roots order: α, β, γ then −1
    for (i, u) in sys.projectors.iter().enumerate() {
        let s = supertrace(&u.matrix).unwrap();
        let want = if i < 3 { &sd[2 + i] } else { &sd[1] };
        assert_eq!(&s, want, "{}", u.name);
        let c = concrete
            .projectors
            .iter()
            .find(|c| c.sector == supercas_core::casimir_engine::Sector::Plus && c.eigenvalue() == u.eigenvalue())
            .unwrap();
        assert_eq!(c.matrix, u.matrix, "{} vs {}", u.name, c.name);
        assert_eq!(dims_of(&c.matrix).unwrap(), dims_of(&u.matrix).unwrap());
    }
    assert_eq!(supertrace(&b.k).unwrap(), sd[0]);
}

#[test]
fn universal_layer_osp52() {
    let m = OspModel::new(5, 2).unwrap();
    let b = m.adjoint_bundle(StorageKind::Sparse);
    let p = vogel_params(Family::Osp, 5, 2).unwrap();
    check_universal(&b, &p, &m.adjoint_projectors(&b).unwrap());
}

#[test]
fn universal_layer_sl41() {
    let m = SlModel::new(4, 1).unwrap();
    let b = m.adjoint_bundle(StorageKind::Sparse);
    let p = vogel_params(Family::Sl, 4, 1).unwrap();
    check_universal(&b, &p, &m.adjoint_projectors(&b).unwrap());
}

#[test]
fn cubic_at_low_omega() {
    for (m, n) in [(3, 2), (2, 2)] {
        let model = OspModel::new(m, n).unwrap();
        let b = model.adjoint_bundle(StorageKind::Sparse);
        assert!(universal_cubic_residual(&b, &vogel_params(Family::Osp, m, n).unwrap()).is_zero());
    }
    for (m, n) in [(2, 1), (3, 1)] {
        let model = SlModel::new(m, n).unwrap();
        let b = model.adjoint_bundle(StorageKind::Sparse);
        assert!(universal_cubic_residual(&b, &vogel_params(Family::Sl, m, n).unwrap()).is_zero());
    }
}

#[test]
fn series_small_instances() {
    for (m, n) in [(3, 2), (5, 2)] {
        let model = OspModel::new(m, n).unwrap();
        let b = model.adjoint_bundle(StorageKind::Sparse);
        let d = casimir_series_direct(&b.c_ad, 8).unwrap();
        let sdim = model.sdim();
        // c₀ = sdim, c₁ = 0, c₂ = 1, c₃ = −¼
        assert_eq!(d[..4], [sdim, q(0, 1), q(1, 1), q(-1, 4)]);
        if m == 5 {
            let u = casimir_series_universal(&vogel_params(Family::Osp, m, n).unwrap(), 8).unwrap();
            assert_eq!(d, u);
        }
    }
    let model = SlModel::new(4, 1).unwrap();
    let b = model.adjoint_bundle(StorageKind::Sparse);
    let d = casimir_series_direct(&b.c_ad, 8).unwrap();
    let p = vogel_params(Family::Sl, 4, 1).unwrap();
    assert_eq!(d, casimir_series_universal(&p, 8).unwrap());
    // the z⁵ numerator term read as 13t instead of 13t³ fails from c₅ on when t ≠ ±1
    let literal = universal_series_with(&p, 8, &q(13, 1) * &p.t).unwrap();
    assert_eq!(d[..5], literal[..5]);
    assert_ne!(d[5], literal[5]);
}
