mod common;

use common::random::{gf4_generator, sized_check_matrix};
use eaqcc::gram_schmidt::{ebit_lower_bound, gram_schmidt, standard_form_check, to_finite_weight, GsResult};
use eaqcc::pauli::gf4_import;
use eaqcc::symplectic::{apply_row_ops, expand, omega_matrix, OmegaMatrix, RowOpRecord};
use eaqcc::{CheckMatrix, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every postcondition of a successful run, checked from the outside.
fn check_result(h: &CheckMatrix, res: &GsResult) {
    let expanded = expand(h, res.l).unwrap();
    assert_eq!(omega_matrix(&res.h_std), OmegaMatrix::standard(res.c, res.a));
    assert_eq!(2 * res.c + res.a, res.h_std.r());
    assert_eq!(res.h_std.r(), expanded.r());
    assert!(res.h_std.row_space_equal(&expanded));
    assert_eq!(apply_row_ops(&expanded, &res.ops).unwrap(), res.h_std);
    assert_eq!(GsResult::from_text(&res.to_text(&[])).unwrap(), *res);
}

#[test]
fn worked_example_reproduces_the_printed_standard_form() {
    let res = gram_schmidt(&common::check(), 8).unwrap();
    assert_eq!((res.l, res.c, res.a), (2, 2, 0));
    assert_eq!(res.h_std, common::standard());
    let printed: RowOpRecord = common::STANDARD_OPS.lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(res.ops, printed);
    assert_eq!(CheckMatrix::from_text(&res.h_std.to_text(&[])).unwrap(), res.h_std);
    check_result(&common::check(), &res);
}

#[test]
fn single_generator_takes_two_fold_expansion_and_one_scaling() {
    let h = CheckMatrix::from_text("frames=1 generators=1\nz: D | x: 1\n").unwrap();
    let res = gram_schmidt(&h, 8).unwrap();
    assert_eq!((res.l, res.c, res.a), (2, 1, 0));
    assert_eq!(res.ops.to_string(), "scale 2 ((1)/(1+D))\n");
    check_result(&h, &res);
    assert!(matches!(gram_schmidt(&h, 1), Err(Error::NoConvergence { l_max: 1 })));
}

#[test]
fn runs_are_deterministic() {
    let a = gram_schmidt(&common::check(), 8).unwrap();
    let b = gram_schmidt(&common::check(), 8).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_text(&[]), b.to_text(&[]));
}

#[test]
fn random_gf4_codes_reach_standard_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x65);
    let (mut ok, mut stuck) = (0, 0);
    for _ in 0..60 {
        let hc = gf4_generator(&mut rng, 1 + (ok + stuck) % 4, 2);
        let h = gf4_import(&hc).unwrap();
        match gram_schmidt(&h, 8) {
            Ok(res) => {
                check_result(&h, &res);
                assert!(ebit_lower_bound(&res.h_std) <= res.c);
                ok += 1;
            }
            Err(Error::NoConvergence { .. }) => stuck += 1,
            Err(e) => panic!("unexpected error {e} for\n{}", hc.to_text()),
        }
    }
    assert!(ok >= 40, "only {ok} of 60 converged");
}

#[test]
fn random_check_matrices_either_converge_or_report_the_limit() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x66);
    for _ in 0..60 {
        let h = sized_check_matrix(&mut rng, 3, 3, 2);
        match gram_schmidt(&h, 4) {
            Ok(res) => check_result(&h, &res),
            Err(Error::NoConvergence { l_max: 4 }) => {}
            Err(e) => panic!("unexpected error {e} for\n{h}"),
        }
    }
}

#[test]
fn finite_weight_form_clears_denominators_without_changing_the_row_space() {
    let s = common::standard();
    let (f, ops) = to_finite_weight(&s);
    assert!(f.is_polynomial());
    assert!(f.row_space_equal(&s));
    assert_eq!(ops.to_string(), "scale 4 (1+D+D^2)\n");
}

#[test]
fn standard_form_recognition_rejects_near_misses() {
    assert_eq!(standard_form_check(&OmegaMatrix::standard(2, 1)), Some((2, 1)));
    let worked = omega_matrix(&common::check());
    assert_eq!(standard_form_check(&worked), None);
}
