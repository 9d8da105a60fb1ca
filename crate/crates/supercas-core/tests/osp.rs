use supercas_core::casimir_engine::{
    check_poly, dims_of, generalized_projectors, is_minimal, merge_roots, PolySpec,
};
use supercas_core::osp_algebra::{osp_char_identity, osp_expected_dims, OspModel};
use supercas_core::superlinalg::{supertrace, trace};
use supercas_core::{Error, Rational, StorageKind, SuperMatrix};

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

fn all_ok(report: &[(String, bool)]) {
    let bad: Vec<_> = report.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
    assert!(bad.is_empty(), "failed: {bad:?}");
}

#[test]
fn construction_errors() {
    assert_eq!(OspModel::new(4, 2).unwrap_err(), Error::OspOmegaTwo);
    assert_eq!(OspModel::new(3, 3).unwrap_err(), Error::OddN(3));
    assert_eq!(
        Error::OspOmegaTwo.to_string(),
        "omega=2: Killing metric degenerate"
    );
}

#[test]
fn osp52_counts_and_structure() {
    let m = OspModel::new(5, 2).unwrap();
    // M(M−1)/2 + N(N+1)/2 + MN
    assert_eq!(m.dim(), 10 + 3 + 10);
    assert_eq!(m.algebra().sdim(), 3);
    assert_eq!(m.sdim(), q(3, 1));
    assert!(m.check_metric_symmetry());
    assert!(m.check_invariance());
    let a = m.algebra();
    assert!(a.check_antisymmetry());
    assert!(a.check_jacobi());
    assert!(a.check_str_ad());
    assert!(a.check_killing_symmetry());
    assert!(a.check_lowered_symmetry());
    assert!(a.check_contraction_identity());
    all_ok(&m.pair_space_checks());
}

#[test]
fn defining_casimir_two_routes() {
    for (mm, nn) in [(3, 2), (5, 2), (2, 2), (1, 2), (4, 0)] {
        let m = OspModel::new(mm, nn).unwrap();
        assert_eq!(m.casimir_defining(StorageKind::Sparse), m.casimir_defining_closed(), "({mm},{nn})");
        assert_eq!(m.casimir_defining(StorageKind::Dense), m.casimir_defining_closed());
        assert!(m.check_defining_square());
    }
}

#[test]
fn defining_roots_at_omega_three() {
    let m = OspModel::new(5, 2).unwrap();
    assert_eq!(m.defining_roots(), [q(1, 2), q(-1, 2), q(-1, 1)]);
    let sys = m.defining_projectors().unwrap();
    let rep = sys.verify();
    assert!(rep.all_pass(), "{rep:?}");
    // trace of K/ω is one
    assert_eq!(trace(&sys.projectors[2].matrix).unwrap(), q(1, 1));
    for p in &sys.projectors {
        assert!(m.algebra().is_invariant(m.algebra().generators(), &p.matrix));
    }
    // super-antisymmetric square of V(5|2): C(5,2)+C(3,2) even, 10 odd
    assert_eq!(dims_of(&sys.projectors[1].matrix).unwrap(), (13, 10));
    assert_eq!(dims_of(&sys.projectors[0].matrix).unwrap(), (15 + 1 - 1, 10));
}

#[test]
fn r_matrix_forms_agree() {
    let m = OspModel::new(5, 2).unwrap();
    assert_eq!(m.r_matrix(&q(0, 1)).unwrap(), m.perm());
    for u in [q(1, 3), q(-2, 7), q(5, 4)] {
        let a = m.r_matrix(&u).unwrap();
        assert_eq!(a, m.r_matrix_spectral(&u).unwrap());
        assert_eq!(a, m.r_matrix_cayley(&u).unwrap());
    }
    assert_eq!(m.r_matrix(&q(1, 1)).unwrap_err(), Error::Pole(q(1, 1)));
    assert_eq!(m.r_matrix(&q(-1, 2)).unwrap_err(), Error::Pole(q(-1, 2)));
}

#[test]
fn adjoint_bundle_osp32() {
    let m = OspModel::new(3, 2).unwrap();
    let b = m.adjoint_bundle(StorageKind::Sparse);
    all_ok(&b.relations(&m.sdim()));
    assert!(m.is_ad_invariant(&b.c_ad));
    assert!(m.is_ad_invariant(&b.k));
    assert!(m.is_ad_invariant(&b.perm));
    let id = m.char_identity();
    assert_eq!(id.residual_k, q(-3, 2));
    let spec = PolySpec::new(id.roots.clone(), b.identity.clone()).unwrap();
    let rep = check_poly(&b.c_ad, &spec, Some(&id.residual(&b)));
    assert!(rep.matches);
    assert!(!id.residual(&b).is_zero());
}

#[test]
fn embedded_and_restricted_agree_osp32() {
    let m = OspModel::new(3, 2).unwrap();
    let b = m.adjoint_bundle(StorageKind::Sparse);
    let e = m.embedded_bundle();
    let maps = m.picture_maps();
    let back = e.map(|x| maps.to_restricted(x));
    assert_eq!(back.identity, b.identity);
    assert_eq!(back.perm, b.perm);
    assert_eq!(back.k, b.k);
    assert_eq!(back.c_ad, b.c_ad);
    assert_eq!(back.c_plus, b.c_plus);
    assert_eq!(back.c_minus, b.c_minus);
    let [cad, cm, cp] = m.embedded_closed_forms();
    assert_eq!(cad, e.c_ad);
    assert_eq!(cm, e.c_minus);
    assert_eq!(cp, e.c_plus);
    all_ok(&e.relations(&m.sdim()));
}

#[test]
fn char_identity_table() {
    let id = osp_char_identity(3).unwrap();
    let roots: Vec<_> = id.roots.iter().map(|(a, _)| a.clone()).collect();
    assert_eq!(roots, [q(0, 1), q(-1, 2), q(-1, 1), q(1, 1), q(-2, 1), q(1, 2)]);
    assert_eq!(osp_char_identity(2).unwrap_err(), Error::OspOmegaTwo);
    assert_eq!(osp_char_identity(8).unwrap().roots.len(), 5);
    assert_eq!(osp_char_identity(0).unwrap().residual_k, q(1, 2));
}

#[test]
fn generalized_system_omega_zero() {
    let m = OspModel::new(2, 2).unwrap();
    let b = m.adjoint_bundle(StorageKind::Sparse);
    assert!((&b.k * &b.k).is_zero());
    let id = m.char_identity();
    let spec = PolySpec::new(id.generalized.clone().unwrap(), b.identity.clone()).unwrap();
    assert!(is_minimal(&b.c_ad, &spec));
    let gen = generalized_projectors(&b.c_ad, &spec).unwrap();
    let sys = m.adjoint_projectors(&b).unwrap();
    for (g, p) in gen.iter().zip(&sys.projectors) {
        assert_eq!(g, &p.matrix, "{}", p.name);
    }
    let rep = sys.verify();
    assert!(rep.all_pass(), "{rep:?}");
    let p3 = &sys.projectors[2].matrix;
    let shifted = &b.c_ad + &b.identity;
    assert!(!(&shifted * p3).is_zero());
    assert!((&(&shifted * &shifted) * p3).is_zero());
}

#[test]
fn projector_system_osp52() {
    let m = OspModel::new(5, 2).unwrap();
    let b = m.adjoint_bundle(StorageKind::Sparse);
    let sys = m.adjoint_projectors(&b).unwrap();
    let rep = sys.verify();
    assert!(rep.all_pass(), "{rep:?}");
    assert_eq!(rep.total, 529);
    let dims: Vec<_> = rep.dims.iter().map(|(_, d)| *d.as_ref().unwrap()).collect();
    let expected: Vec<_> = osp_expected_dims(5, 2).unwrap().into_iter().map(|(_, d)| d).collect();
    assert_eq!(dims, expected);
    assert_eq!(dims[2], (1, 0));
    for p in &sys.projectors {
        let s = supertrace(&p.matrix).unwrap();
        let t = trace(&p.matrix).unwrap();
        assert_eq!((t.clone() + s.clone()) / q(2, 1), q(dims_of(&p.matrix).unwrap().0, 1));
    }
}

#[test]
fn dense_and_sparse_bundles_agree() {
    let m = OspModel::new(3, 2).unwrap();
    let s = m.adjoint_bundle(StorageKind::Sparse);
    let d = m.adjoint_bundle(StorageKind::Dense);
    assert_eq!(s.c_ad, d.c_ad);
    assert_eq!(s.k, d.k);
    assert_eq!(&s.c_plus * &s.c_plus, &d.c_plus * &d.c_plus);
    let _ = SuperMatrix::identity(m.space().clone());
}

#[test]
fn defining_at_omega_zero() {
    let m = OspModel::new(2, 2).unwrap();
    let roots = merge_roots(&m.defining_roots());
    assert_eq!(roots, [(q(-1, 4), 2), (q(1, 4), 1)]);
    let c = m.casimir_defining_closed();
    let spec = PolySpec::new(roots, SuperMatrix::identity(m.space().tensor(m.space()))).unwrap();
    assert!(check_poly(&c, &spec, None).matches);
    assert!(is_minimal(&c, &spec));
    let sys = m.defining_projectors().unwrap();
    assert_eq!(generalized_projectors(&c, &spec).unwrap(), [sys.projectors[0].matrix.clone(), sys.projectors[1].matrix.clone()]);
    let rep = sys.verify();
    assert!(rep.all_pass(), "{rep:?}");
}
