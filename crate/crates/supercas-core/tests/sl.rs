use supercas_core::casimir_engine::{check_poly, dims_of, generalized_projectors, PolySpec};
use supercas_core::sl_algebra::{sl_char_identity, sl_expected_dims, SlModel};
use supercas_core::{Error, Rational, StorageKind};

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

fn all_ok(report: &[(String, bool)]) {
    let bad: Vec<_> = report.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
    assert!(bad.is_empty(), "failed: {bad:?}");
}

#[test]
fn construction() {
    assert_eq!(SlModel::new(3, 3).unwrap_err(), Error::SlSquare(3));
    let m = SlModel::new(4, 1).unwrap();
    assert_eq!(m.dim(), 24);
    assert_eq!(m.algebra().sdim(), 8);
    assert_eq!(m.sdim(), q(8, 1));
    let s = SlModel::new(1, 3).unwrap();
    assert!(s.swapped());
    assert_eq!((s.m(), s.n(), s.omega()), (3, 1, 2));
    let a = SlModel::new(2, 1).unwrap();
    let a = a.algebra();
    assert!(a.check_antisymmetry());
    assert!(a.check_jacobi());
    assert!(a.check_str_ad());
    assert!(a.check_killing_symmetry());
    assert!(a.check_lowered_symmetry());
    assert!(a.check_contraction_identity());
}

#[test]
fn pair_space() {
    for (mm, nn) in [(2, 1), (3, 1), (4, 1), (3, 2)] {
        let m = SlModel::new(mm, nn).unwrap();
        all_ok(&m.pair_space_checks());
        assert!(m.check_anticommutator_constants(), "({mm},{nn})");
    }
}

#[test]
fn defining_side() {
    for (mm, nn) in [(2, 1), (3, 1), (4, 1), (5, 2)] {
        let m = SlModel::new(mm, nn).unwrap();
        assert_eq!(m.casimir_defining(StorageKind::Sparse), m.casimir_defining_closed());
        assert_eq!(m.casimir_defining(StorageKind::Dense), m.casimir_defining_closed());
        let rep = m.defining_projectors().verify();
        assert!(rep.all_pass(), "{rep:?}");
    }
    let m = SlModel::new(4, 1).unwrap();
    assert_eq!(m.defining_roots(), [q(1, 9), q(-2, 9)]);
    let sys = m.defining_projectors();
    assert_eq!(dims_of(&sys.projectors[0].matrix).unwrap(), (10, 4));
    for u in [q(1, 3), q(-2, 7), q(5, 4)] {
        let a = m.r_matrix(&u).unwrap();
        assert_eq!(a, m.r_matrix_spectral(&u).unwrap());
        assert_eq!(a, m.r_matrix_cayley(&u).unwrap());
    }
    assert_eq!(m.r_matrix(&q(1, 1)).unwrap_err(), Error::Pole(q(1, 1)));
}

#[test]
fn restricted_and_embedded_agree() {
    for (mm, nn) in [(2, 1), (3, 1)] {
        let m = SlModel::new(mm, nn).unwrap();
        let b = m.adjoint_bundle(StorageKind::Sparse);
        all_ok(&b.relations(&m.sdim()));
        all_ok(&SlModel::c_tilde_relations(&b));
        let e = m.embedded_bundle();
        all_ok(&e.relations(&m.sdim()));
        all_ok(&SlModel::c_tilde_relations(&e));
        let maps = m.picture_maps();
        let back = e.map(|x| maps.to_restricted(x));
        assert_eq!(back.identity, b.identity);
        assert_eq!(back.perm, b.perm);
        assert_eq!(back.k, b.k);
        assert_eq!(back.c_ad, b.c_ad);
        assert_eq!(back.c_tilde_minus, b.c_tilde_minus);
        let [pm, pp, cm, cp] = m.embedded_closed_forms();
        assert_eq!(pm, e.p_minus());
        assert_eq!(pp, e.p_plus());
        assert_eq!(cm, e.c_minus);
        assert_eq!(cp, e.c_plus);
        assert!(m.is_ad_invariant(b.c_tilde_minus.as_ref().unwrap()));
    }
}

#[test]
fn char_identities_low_omega() {
    for (mm, nn, w) in [(2, 1, 1), (3, 1, 2)] {
        let m = SlModel::new(mm, nn).unwrap();
        let b = m.adjoint_bundle(StorageKind::Sparse);
        let id = m.char_identity();
        assert!(id.has_residual());
        let spec = PolySpec::new(id.roots.clone(), b.identity.clone()).unwrap();
        assert!(check_poly(&b.c_ad, &spec, Some(&id.residual(&b))).matches, "omega={w}");
        let gspec = PolySpec::new(id.generalized.clone().unwrap(), b.identity.clone()).unwrap();
        let gen = generalized_projectors(&b.c_ad, &gspec).unwrap();
        let sys = m.adjoint_projectors(&b).unwrap();
        let rep = sys.verify();
        assert!(rep.all_pass(), "{rep:?}");
        assert_eq!(rep.total, (m.dim() * m.dim()) as i64);
        // eigenvalue 0: the two tilde projectors; the rest by eigenvalue
        let ps = &sys.projectors;
        assert_eq!(gen[0], &ps[0].matrix + &ps[1].matrix);
        let by_value = |a: &Rational| {
            ps[2..]
                .iter()
                .filter(|p| p.eigenvalue() == Some(a))
                .fold(None, |acc: Option<supercas_core::SuperMatrix>, p| {
                    Some(match acc {
                        None => p.matrix.clone(),
                        Some(x) => &x + &p.matrix,
                    })
                })
                .unwrap()
        };
        for (g, (a, _)) in gen.iter().zip(id.generalized.as_ref().unwrap()).skip(1) {
            assert_eq!(g, &by_value(a), "omega={w} root {a}");
        }
    }
    assert_eq!(sl_char_identity(4).unwrap().roots.len(), 5);
}

#[test]
fn projector_system_sl41() {
    let m = SlModel::new(4, 1).unwrap();
    let b = m.adjoint_bundle(StorageKind::Sparse);
    let id = m.char_identity();
    assert!(!id.has_residual());
    let spec = PolySpec::new(id.roots.clone(), b.identity.clone()).unwrap();
    assert!(check_poly(&b.c_ad, &spec, None).matches);
    let sys = m.adjoint_projectors(&b).unwrap();
    let rep = sys.verify();
    assert!(rep.all_pass(), "{rep:?}");
    assert_eq!(rep.total, 576);
    let dims: Vec<_> = rep.dims.iter().map(|(_, d)| *d.as_ref().unwrap()).collect();
    assert_eq!(dims, [(70, 60), (70, 60), (16, 8), (1, 0), (99, 72), (48, 48), (16, 8)]);
    let expected: Vec<_> = sl_expected_dims(4, 1).unwrap().into_iter().map(|(_, d)| d).collect();
    assert_eq!(dims, expected);
}
