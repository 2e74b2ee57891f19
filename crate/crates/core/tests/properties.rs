use nalgebra::Complex;
use proptest::prelude::*;

use sepvol::bloore::{
    bloore_compose, cad_map, factor_b, factor_d, is_separable_restricted, minor3_factor, pt_difference, BlooreCoords,
    RestrictedDiag, ZValues, FEASIBILITY_MINOR_OMIT,
};
use sepvol::cli::manifest::sig15;
use sepvol::density::{hermitian_eigenvalues, partial_transpose_matrix, Bipartition, CMatrix};
use sepvol::integrate::{merge, Estimate};
use sepvol::measures::{density_unchecked, face_density_unchecked, MetricKind};
use sepvol::weightfit::{blend, WeightingForm};

fn z_values() -> impl Strategy<Value = ZValues> {
    prop::array::uniform6(-1.0f64..=1.0).prop_map(ZValues)
}

fn simplex(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.01f64..1.0, n).prop_map(|w| {
        let s: f64 = w.iter().sum();
        w.iter().map(|x| x / s).collect()
    })
}

fn permuted(n: usize) -> impl Strategy<Value = (Vec<f64>, Vec<usize>)> {
    (simplex(n), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

fn complex_matrix(n: usize) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n)
        .prop_map(move |v| CMatrix::from_iterator(n, n, v.into_iter().map(|(re, im)| Complex::new(re, im))))
}

fn det(m: &CMatrix) -> f64 {
    m.clone().determinant().re
}

fn forms() -> Vec<WeightingForm> {
    vec![
        WeightingForm::single_term(),
        WeightingForm::two_term(1.26, 19673.7, 3, 3),
        WeightingForm::two_term(5.12, 19412.2, 4, 3),
        blend(vec![(WeightingForm::two_term(1.26, 19673.7, 3, 3), 0.57), (WeightingForm::two_term(5.12, 19412.2, 4, 3), 0.43)])
            .unwrap(),
    ]
}

proptest! {
    #[test]
    fn pt_factor_difference_is_the_cubic(z in z_values()) {
        prop_assert!((factor_d(&z) - factor_b(&z) - pt_difference(&z)).abs() < 1e-12);
    }

    #[test]
    fn pt_factor_is_b_with_swapped_pair(z in z_values()) {
        prop_assert!((factor_d(&z) - factor_b(&z.pt_swapped())).abs() < 1e-12);
    }

    #[test]
    fn determinant_factorizes(d in simplex(4), z in z_values()) {
        let c = BlooreCoords::new([d[0], d[1], d[2], d[3]], z).unwrap();
        let rho = bloore_compose(&c);
        prop_assert!((rho.determinant() - c.diag_product() * factor_b(&z)).abs() < 1e-13);
    }

    #[test]
    fn restricted_pt_determinant_factorizes(r in 0.0f64..=0.5, z in z_values()) {
        let diag = RestrictedDiag::new(r).unwrap();
        let rho = bloore_compose(&diag.coords(z).unwrap());
        let pt = partial_transpose_matrix(rho.entries(), Bipartition::QUBIT_QUBIT).unwrap();
        prop_assert!((det(&pt) - diag.pt_prefactor() * factor_d(&z)).abs() < 1e-13);
    }

    #[test]
    fn partial_transpose_is_an_involution(m4 in complex_matrix(4), m6 in complex_matrix(6)) {
        for (m, parts) in [(m4, Bipartition::QUBIT_QUBIT), (m6, Bipartition::QUBIT_QUTRIT)] {
            let twice = partial_transpose_matrix(&partial_transpose_matrix(&m, parts).unwrap(), parts).unwrap();
            prop_assert_eq!(twice, m);
        }
    }

    #[test]
    fn nested_limits_give_psd_matrices(u in prop::array::uniform6(0.0f64..1.0), d in simplex(4)) {
        if let Some((z, w)) = cad_map(&u) {
            prop_assert!(z.0.iter().all(|x| x.abs() <= 1.0 + 1e-12));
            prop_assert!((0.0..=64.0).contains(&w));
            prop_assert!(factor_b(&z) >= -1e-9);
            prop_assert!(minor3_factor(&z, FEASIBILITY_MINOR_OMIT) >= -1e-9);
            let clipped = ZValues(z.0.map(|x| x.clamp(-1.0, 1.0)));
            let rho = bloore_compose(&BlooreCoords::new([d[0], d[1], d[2], d[3]], clipped).unwrap());
            prop_assert!(rho.min_eigenvalue() >= -1e-9);
        }
    }

    #[test]
    fn determinant_sign_follows_b(d in simplex(4), z in z_values()) {
        let b = factor_b(&z);
        prop_assume!(b.abs() > 1e-6);
        let rho = bloore_compose(&BlooreCoords::new([d[0], d[1], d[2], d[3]], z).unwrap());
        prop_assert_eq!(rho.determinant() > 0.0, b > 0.0);
    }

    #[test]
    fn restricted_separability_matches_ppt(r in 0.02f64..0.48, z in z_values()) {
        prop_assume!(factor_d(&z).abs() > 1e-6 && factor_b(&z).abs() > 1e-6);
        let rho = bloore_compose(&RestrictedDiag::new(r).unwrap().coords(z).unwrap());
        prop_assume!(rho.min_eigenvalue().abs() > 1e-9);
        let pt = partial_transpose_matrix(rho.entries(), Bipartition::QUBIT_QUBIT).unwrap();
        let ppt = rho.is_positive() && hermitian_eigenvalues(&pt)[0] >= 0.0;
        prop_assert_eq!(is_separable_restricted(&z), ppt);
    }

    #[test]
    fn densities_are_symmetric((l, p) in permuted(4)) {
        let q: Vec<f64> = p.iter().map(|&i| l[i]).collect();
        for m in MetricKind::ALL {
            let (a, b) = (density_unchecked(m, &l), density_unchecked(m, &q));
            prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-300), "{m:?}");
        }
        for f in forms() {
            let (a, b) = (f.eval(&l), f.eval(&q));
            prop_assert!((a - b).abs() <= 1e-12 * a.abs(), "{}", f.label());
        }
    }

    #[test]
    fn face_densities_are_symmetric((l, p) in permuted(3)) {
        let q: Vec<f64> = p.iter().map(|&i| l[i]).collect();
        for m in MetricKind::ALL {
            let (a, b) = (face_density_unchecked(m, &l), face_density_unchecked(m, &q));
            prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-300), "{m:?}");
        }
    }

    #[test]
    fn merge_is_order_free_and_tightens(
        parts in prop::collection::vec((-1.0f64..1.0, 0.001f64..1.0, 1u64..1000, 0u64..100), 1..6),
    ) {
        let es: Vec<Estimate> = parts.iter().map(|&(v, s, n, seed)| Estimate { value: v, stderr: s, n_samples: n, seed }).collect();
        let m = merge(&es).unwrap();
        let mut rev = es.clone();
        rev.reverse();
        let r = merge(&rev).unwrap();
        prop_assert!((m.value - r.value).abs() < 1e-12 && (m.stderr - r.stderr).abs() < 1e-12);
        prop_assert_eq!(m.n_samples, es.iter().map(|e| e.n_samples).sum::<u64>());
        prop_assert!(m.stderr <= es.iter().map(|e| e.stderr).fold(f64::INFINITY, f64::min) + 1e-15);
        let lo = es.iter().map(|e| e.value).fold(f64::INFINITY, f64::min);
        let hi = es.iter().map(|e| e.value).fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(m.value >= lo - 1e-12 && m.value <= hi + 1e-12);
    }

    #[test]
    fn blend_weights_must_sum_to_one(w in 0.0f64..2.0) {
        let parts = vec![(WeightingForm::single_term(), w), (WeightingForm::single_term(), 0.5)];
        prop_assert_eq!(blend(parts).is_ok(), (w - 0.5).abs() <= 1e-9);
    }

    #[test]
    fn rounding_is_idempotent(x in prop::num::f64::NORMAL) {
        let r = sig15(x);
        prop_assert_eq!(sig15(r), r);
        prop_assert!((r - x).abs() <= 1e-14 * x.abs());
    }
}
