mod common;

use common::*;
use num_complex::Complex;
use std::f64::consts::PI;

use mtc::liealg::{LieSpec, Series};
use mtc::modular::{derived_scalars, validate_modular, verlinde};

#[test]
fn sl2_s_matrix_matches_closed_form() {
    for level in 1..=10 {
        let md = sl2(level);
        let n = md.rank();
        assert_eq!(n, level as usize + 1);
        for j in 0..n {
            for l in 0..n {
                assert_close(
                    md.s[(j, l)],
                    Complex::new(sl2_s(level, j, l), 0.0),
                    1e-9,
                    &format!("s[{j}][{l}] at level {level}"),
                );
            }
        }
    }
}

#[test]
fn sl2_twists_match_closed_form() {
    for level in 1..=10 {
        let md = sl2(level);
        for j in 0..md.rank() {
            assert_close(
                md.theta[j],
                sl2_theta(level, j),
                1e-9,
                &format!("theta[{j}] at level {level}"),
            );
        }
    }
}

#[test]
fn sl2_verlinde_matches_interval_rule() {
    for level in 1..=6 {
        let ring = verlinde(&sl2(level), 1e-6).expect("integral ring");
        let n = ring.rank();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(
                        ring.n(a, b, c),
                        sl2_fusion(level, a, b, c),
                        "N^{c}_{{{a},{b}}} at level {level}"
                    );
                }
            }
        }
    }
}

#[test]
fn weyl_sum_data_passes_full_validation() {
    let specs = [
        LieSpec::new(Series::A, 1, 4),
        LieSpec::new(Series::A, 2, 2),
        LieSpec::new(Series::B, 2, 4),
        LieSpec::new(Series::G2, 2, 3),
    ];
    for spec in specs {
        let md = mtc::kac_peterson(&spec).expect("builds");
        let report = validate_modular(&md);
        assert!(
            report.passed(),
            "{spec:?}: first failure {:?}",
            report.first_failure()
        );
    }
}

#[test]
fn sl3_level_one_duality_is_charge_conjugation() {
    let md = mtc::kac_peterson(&LieSpec::new(Series::A, 2, 1)).expect("builds");
    // Labels in ascending lexicographic order: 0, L2, L1.
    assert_eq!(md.labels, vec!["0", "L2", "L1"]);
    assert_eq!(md.dual, vec![0, 2, 1]);
}

#[test]
fn ising_scalars_match_closed_forms() {
    let md = ising();
    let ds = derived_scalars(&md).expect("scalars");
    assert_close_f(ds.dims[0], 1.0, 1e-9, "d_1");
    assert_close_f(ds.dims[1], 2.0_f64.sqrt(), 1e-9, "d_sigma");
    assert_close_f(ds.dims[2], 1.0, 1e-9, "d_psi");
    assert_close_f(ds.global_dim, 4.0, 1e-9, "D");
    assert_close(ds.gauss_plus, Complex::from_polar(2.0, 3.0 * PI / 8.0), 1e-9, "p+");
    assert_close(ds.gauss_minus, Complex::from_polar(2.0, -3.0 * PI / 8.0), 1e-9, "p-");
    assert_close(ds.zeta, Complex::from_polar(1.0, PI / 8.0), 1e-9, "zeta");
    for (x, t) in ds.t_hat.iter().enumerate() {
        assert_close(*t, md.theta[x] / ds.zeta, 1e-12, "t_hat entry");
    }
}

#[test]
fn smallest_sl2_scalars_match_closed_forms() {
    let ds = derived_scalars(&sl2(1)).expect("scalars");
    assert_close_f(ds.global_dim, 2.0, 1e-9, "D");
    assert_close(ds.gauss_plus, Complex::new(1.0, 1.0), 1e-9, "p+");
    assert_close(ds.zeta, Complex::from_polar(1.0, PI / 12.0), 1e-9, "zeta");
}

#[test]
fn sl2_level_three_twist_of_the_ring_generator() {
    let md = sl2(3);
    let g = md.label_index("2L1").unwrap();
    assert_close(md.theta[g], Complex::from_polar(1.0, 4.0 * PI / 5.0), 1e-9, "theta_2L1");
}

#[test]
fn broken_unit_twist_fails_validation() {
    let mut md = ising();
    md.theta[md.unit] = Complex::new(-1.0, 0.0);
    let report = validate_modular(&md);
    assert!(!report.passed());
    let check = report.check("unit-twist-is-one").expect("check present");
    assert!(!check.passed);
}

#[test]
fn verlinde_rejects_unreachable_tolerance() {
    let err = verlinde(&sl2(4), 1e-18).expect_err("float residual exceeds 1e-18");
    assert!(matches!(err, mtc::Error::NonIntegralMultiplicity { .. }), "got {err:?}");
}

#[test]
fn unsupported_rank_is_reported() {
    let err = mtc::kac_peterson(&LieSpec::new(Series::B, 1, 2)).expect_err("B needs rank >= 2");
    assert!(matches!(err, mtc::Error::UnsupportedSeries(_)), "got {err:?}");
}
