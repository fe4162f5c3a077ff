mod common;

use common::random::{poly, sized_check_matrix};
use eaqcc::pauli::binary_to_pauli;
use eaqcc::poly::{LaurentPoly, PolyMatrix, RationalPoly};
use eaqcc::symplectic::{
    apply_row_ops, cross_products, expand, expanded_omega, omega_matrix, row_product, OmegaMatrix, RowOp, RowOpRecord,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_ops(rng: &mut ChaCha8Rng, rows: usize, count: usize) -> RowOpRecord {
    (0..count)
        .map(|_| {
            let i = rng.gen_range(0..rows);
            let j = (i + rng.gen_range(1..rows.max(2))) % rows;
            let c = loop {
                let num = poly(rng, 2).shift(rng.gen_range(-1..=1));
                let den = LaurentPoly::from_mask(rng.gen_range(1..8));
                if !num.is_zero() {
                    break RationalPoly::new(num, den).unwrap();
                }
            };
            match rng.gen_range(0..3) {
                0 if rows > 1 => RowOp::Swap(i, j),
                1 if rows > 1 => RowOp::AddMultiple {
                    target: i,
                    source: j,
                    c,
                },
                _ => RowOp::Scale(i, c),
            }
        })
        .collect()
}

#[test]
fn product_matrix_is_hermitian_under_time_reversal() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let h = sized_check_matrix(&mut rng, 3, 4, 3);
        let ops = random_ops(&mut rng, h.r(), 3);
        for m in [h.clone(), apply_row_ops(&h, &ops).unwrap()] {
            let om = omega_matrix(&m);
            assert!(om.is_symmetric());
            assert_eq!(om.matrix().transpose().time_reverse(), *om.matrix());
        }
    }
}

#[test]
fn expanded_product_matrix_agrees_with_expanding_the_code() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e33a);
    for case in 0..240 {
        let h = sized_check_matrix(&mut rng, 3, 4, 3);
        let l = 2 + case % 3;
        let direct = omega_matrix(&expand(&h, l).unwrap());
        let lifted = expanded_omega(&omega_matrix(&h), l).unwrap();
        assert_eq!(lifted, direct, "l = {l}\n{h}");
    }
}

#[test]
fn expansion_by_one_is_the_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let h = sized_check_matrix(&mut rng, 3, 4, 3);
        assert_eq!(expand(&h, 1).unwrap(), h);
        assert_eq!(expanded_omega(&omega_matrix(&h), 1).unwrap(), omega_matrix(&h));
    }
}

#[test]
fn expansion_keeps_weight_and_shape() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let h = sized_check_matrix(&mut rng, 3, 4, 3);
        let l = rng.gen_range(2..=4);
        let e = expand(&h, l).unwrap();
        assert_eq!((e.r(), e.n()), (l * h.r(), l * h.n()));
        // Each expanded row is a regrouping of one generator, so it carries
        // the same number of Pauli letters.
        let weight = |m: &eaqcc::CheckMatrix, i: usize| -> usize {
            m.z_row(i)
                .iter()
                .chain(m.x_row(i))
                .map(|v| v.as_poly().unwrap().weight())
                .sum()
        };
        for i in 0..e.r() {
            assert_eq!(weight(&e, i), weight(&h, i % h.r()));
        }
    }
}

#[test]
fn row_operations_transform_the_product_matrix_covariantly() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0);
    for _ in 0..100 {
        let h = sized_check_matrix(&mut rng, 3, 4, 2);
        let ops = random_ops(&mut rng, h.r(), 4);
        let r = ops.as_matrix(h.r()).unwrap();
        let lhs = omega_matrix(&apply_row_ops(&h, &ops).unwrap());
        let omega = omega_matrix(&h);
        let rhs = &(&r * omega.matrix()) * &r.transpose().time_reverse();
        assert_eq!(*lhs.matrix(), rhs, "{ops}");
    }
}

/// Parity of anticommuting letter pairs between generator `i` and
/// generator `j` delayed by `m` frames.
fn letter_parity(h: &eaqcc::CheckMatrix, i: usize, j: usize, m: i64) -> bool {
    let seqs = binary_to_pauli(h).unwrap();
    let mut parity = false;
    for t in -8..8 {
        for q in 0..h.n() {
            parity ^= seqs[i].at(t + m, q).anticommutes(seqs[j].at(t, q));
        }
    }
    parity
}

#[test]
fn product_coefficients_match_letterwise_commutation() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11);
    let mut commuting = 0;
    for _ in 0..100 {
        let h = sized_check_matrix(&mut rng, 3, 3, 2);
        for i in 0..h.r() {
            for j in 0..h.r() {
                let p = row_product(&h, i, &h, j);
                let p = p.as_poly().unwrap();
                for m in -4..=4 {
                    assert_eq!(p.coeff(m), letter_parity(&h, i, j, m), "{h} rows {i} {j} shift {m}");
                }
            }
        }
        if omega_matrix(&h).is_zero() {
            commuting += 1;
        }
    }
    assert!(commuting > 0, "the sample should contain some commuting codes");
}

#[test]
fn small_commuting_code_has_zero_product_matrix() {
    let h = eaqcc::CheckMatrix::from_text("frames=3 generators=1\nz: 0, D, D | x: 1+D, 1, 1+D\n").unwrap();
    assert!(omega_matrix(&h).is_zero());
    assert!((-4..=4).all(|m| !letter_parity(&h, 0, 0, m)));
}

#[test]
fn cross_products_generalize_the_product_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let h = sized_check_matrix(&mut rng, 3, 4, 3);
        assert_eq!(cross_products(&h, &h), *omega_matrix(&h).matrix());
    }
}

#[test]
fn replaying_inverse_ops_restores_the_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let h = sized_check_matrix(&mut rng, 3, 4, 2);
        let ops = random_ops(&mut rng, h.r(), 3);
        let r = ops.as_matrix(h.r()).unwrap();
        let rinv = r.inverse().expect("elementary operations are invertible");
        let moved = apply_row_ops(&h, &ops).unwrap();
        assert_eq!(&rinv * &moved.full(), h.full());
        assert_eq!(&r * &rinv, PolyMatrix::identity(h.r()));
    }
}

#[test]
fn product_matrix_text_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0e6a);
    for _ in 0..50 {
        let h = sized_check_matrix(&mut rng, 3, 4, 3);
        let omega = omega_matrix(&h);
        let text = omega.to_text(&["stage: omega".into()]);
        assert_eq!(OmegaMatrix::from_text(&text).unwrap(), omega, "{text}");
    }
    let err = OmegaMatrix::from_text("omega size=1\n[D^]\n").unwrap_err();
    assert!(matches!(err, eaqcc::Error::Parse { line: 2, .. }), "{err}");
}
