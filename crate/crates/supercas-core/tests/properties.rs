use proptest::prelude::*;
use supercas_core::casimir_engine::verify_brauer;
use supercas_core::superlinalg::{
    graded_bracket, graded_kron, partial_supertrace_second, place, place_any, superperm, supertrace,
};
use supercas_core::{GradedSpace, Rational, StorageKind, SuperMatrix};

fn homogeneous(v: &GradedSpace, parity: u8, vals: &[i64]) -> SuperMatrix {
    let d = v.dim();
    SuperMatrix::from_fn(v.clone(), v.clone(), |r, c| {
        if v.parity(r) ^ v.parity(c) == parity {
            Rational::from_int(vals[(r * d + c) % vals.len()])
        } else {
            Rational::zero()
        }
    })
}

fn space() -> impl Strategy<Value = GradedSpace> {
    (0usize..3, 0usize..3)
        .prop_filter("non-empty", |(m, n)| m + n > 0)
        .prop_map(|(m, n)| GradedSpace::standard(m, n))
}

fn entries() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..4, 9)
}

fn same_entries(a: &SuperMatrix, b: &SuperMatrix) -> bool {
    a.nrows() == b.nrows()
        && a.ncols() == b.ncols()
        && (0..a.nrows()).all(|r| (0..a.ncols()).all(|c| a.get(r, c) == b.get(r, c)))
}

fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kron_is_associative(v in space(), pa in 0u8..2, pb in 0u8..2, pc in 0u8..2,
                           x in entries(), y in entries(), z in entries()) {
        let (a, b, c) = (homogeneous(&v, pa, &x), homogeneous(&v, pb, &y), homogeneous(&v, pc, &z));
        let l = graded_kron(&graded_kron(&a, &b), &c);
        let r = graded_kron(&a, &graded_kron(&b, &c));
        prop_assert!(same_entries(&l, &r));
    }

    #[test]
    fn supertrace_is_multiplicative(v in space(), pa in 0u8..2, x in entries(), y in entries()) {
        let a = homogeneous(&v, pa, &x);
        let b = homogeneous(&v, 0, &y);
        let k = graded_kron(&a, &b);
        prop_assert_eq!(supertrace(&k).unwrap(), supertrace(&a).unwrap() * supertrace(&b).unwrap());
    }

    #[test]
    fn supertrace_kills_brackets(v in space(), pa in 0u8..2, pb in 0u8..2, x in entries(), y in entries()) {
        let a = homogeneous(&v, pa, &x);
        let b = homogeneous(&v, pb, &y);
        prop_assert!(supertrace(&graded_bracket(&a, pa, &b, pb)).unwrap().is_zero());
    }

    #[test]
    fn partial_supertrace_of_product(v in space(), x in entries(), y in entries()) {
        let a = homogeneous(&v, 0, &x);
        let b = homogeneous(&v, 0, &y);
        let s = partial_supertrace_second(&graded_kron(&a, &b)).unwrap();
        prop_assert_eq!(s, a.scale(&supertrace(&b).unwrap()));
    }

    #[test]
    fn mixed_product_sign(v in space(), pa in 0u8..2, pb in 0u8..2, pc in 0u8..2, pd in 0u8..2,
                          w in entries(), x in entries(), y in entries(), z in entries()) {
        let (a, b) = (homogeneous(&v, pa, &w), homogeneous(&v, pb, &x));
        let (c, d) = (homogeneous(&v, pc, &y), homogeneous(&v, pd, &z));
        let l = &graded_kron(&a, &b) * &graded_kron(&c, &d);
        let r = graded_kron(&(&a * &c), &(&b * &d)).scale(&sign(pb & pc == 1));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn superperm_swaps_factors(v in space(), pa in 0u8..2, pb in 0u8..2, x in entries(), y in entries()) {
        let p = superperm(&v);
        let a = homogeneous(&v, pa, &x);
        let b = homogeneous(&v, pb, &y);
        prop_assert_eq!(&p * &p, SuperMatrix::identity(v.tensor(&v)));
        let l = &(&p * &graded_kron(&a, &b)) * &p;
        prop_assert_eq!(l, graded_kron(&b, &a).scale(&sign(pa & pb == 1)));
    }

    #[test]
    fn reversed_placement_is_conjugation(v in space(), x in entries()) {
        let a = homogeneous(&v, 0, &x);
        let aa = graded_kron(&a, &homogeneous(&v, 0, &x));
        let p = superperm(&v);
        let swapped = &(&p * &aa) * &p;
        prop_assert_eq!(place_any(&aa, &[2, 1], 2).unwrap(), swapped.clone());
        let p13 = place(&p, &[1, 3], 3).unwrap();
        let lhs = place_any(&aa, &[3, 1], 3).unwrap();
        let rhs = &(&p13 * &place(&aa, &[1, 3], 3).unwrap()) * &p13;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn storage_kinds_agree(v in space(), pa in 0u8..2, x in entries(), y in entries()) {
        let a = homogeneous(&v, pa, &x);
        let b = homogeneous(&v, 0, &y);
        let s = graded_kron(&a.to_kind(StorageKind::Sparse), &b.to_kind(StorageKind::Sparse));
        let d = graded_kron(&a.to_kind(StorageKind::Dense), &b.to_kind(StorageKind::Dense));
        prop_assert_eq!(s, d);
    }
}

/// `σ_i = P_{i,i+1}` satisfy the symmetric-group relations on `V^{⊗s}`, `s ≤ 4`.
#[test]
fn symmetric_group_relations() {
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        let v = GradedSpace::standard(m, n);
        let p = superperm(&v);
        for s in 2..=4 {
            let id = SuperMatrix::identity(v.power(s));
            let sig: Vec<_> = (1..s).map(|i| place(&p, &[i, i + 1], s).unwrap()).collect();
            for (i, a) in sig.iter().enumerate() {
                assert_eq!(a * a, id);
                if let Some(b) = sig.get(i + 1) {
                    assert_eq!(&(a * b) * a, &(b * a) * b);
                }
                for b in sig.iter().skip(i + 2) {
                    assert_eq!(a * b, b * a);
                }
            }
        }
    }
}

/// Brauer relations for `so(3)`: `K^{k₁k₂}_{m₁m₂} = δ^{k₁k₂} δ_{m₁m₂}`, `ω = 3`.
#[test]
fn brauer_for_orthogonal_metric() {
    let v = GradedSpace::standard(3, 0);
    let vv = v.tensor(&v);
    let k = SuperMatrix::from_fn(vv.clone(), vv, |r, c| {
        if r / 3 == r % 3 && c / 3 == c % 3 {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let rep = verify_brauer(&superperm(&v), &k, &Rational::from_int(3), 4).unwrap();
    assert!(rep.iter().all(|(_, ok)| *ok), "{rep:?}");
}
