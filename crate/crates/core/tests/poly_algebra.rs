mod common;

use std::collections::BTreeSet;

use common::random::{laurent, nonzero_laurent, nonzero_rational, poly_matrix, rational};
use eaqcc::poly::{parse_poly, parse_rational, LaurentPoly, PolyMatrix, RationalPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exponent sets with symmetric-difference addition: the oracle the dense
/// representation is checked against.
fn support(p: &LaurentPoly) -> BTreeSet<i64> {
    p.exponents().collect()
}

fn set_mul(a: &BTreeSet<i64>, b: &BTreeSet<i64>) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    for x in a {
        for y in b {
            if !out.insert(x + y) {
                out.remove(&(x + y));
            }
        }
    }
    out
}

fn set_floor(a: &BTreeSet<i64>, shift: i64, l: i64) -> BTreeSet<i64> {
    a.iter()
        .map(|e| e + shift)
        .filter(|e| e.rem_euclid(l) == 0)
        .map(|e| e.div_euclid(l))
        .collect()
}

fn set_add(a: &BTreeSet<i64>, b: &BTreeSet<i64>) -> BTreeSet<i64> {
    a.symmetric_difference(b).copied().collect()
}

proptest! {
    #[test]
    fn laurent_ring_laws(f in laurent(), g in laurent(), h in laurent()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert!((&f + &f).is_zero());
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &LaurentPoly::one(), f.clone());
    }

    #[test]
    fn laurent_matches_exponent_set_oracle(f in laurent(), g in laurent()) {
        prop_assert_eq!(support(&(&f + &g)), set_add(&support(&f), &support(&g)));
        prop_assert_eq!(support(&(&f * &g)), set_mul(&support(&f), &support(&g)));
    }

    #[test]
    fn time_reverse_is_an_involutive_homomorphism(f in laurent(), g in laurent()) {
        prop_assert_eq!(f.time_reverse().time_reverse(), f.clone());
        prop_assert_eq!((&f * &g).time_reverse(), &f.time_reverse() * &g.time_reverse());
        prop_assert_eq!((&f + &g).time_reverse(), &f.time_reverse() + &g.time_reverse());
    }

    #[test]
    fn laurent_text_round_trips(f in laurent()) {
        prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn euclid_step_shrinks_span(f in nonzero_laurent(), d in nonzero_laurent()) {
        prop_assume!(f.span() >= d.span());
        let q = f.euclid_quotient(&d).unwrap();
        let r = &f + &(&q * &d);
        prop_assert!(r.is_zero() || r.span() < f.span());
    }

    #[test]
    fn gcd_divides_and_lcm_is_a_multiple(f in nonzero_laurent(), g in nonzero_laurent()) {
        let d = f.gcd(&g);
        prop_assert!(f.div_exact(&d).unwrap().is_some());
        prop_assert!(g.div_exact(&d).unwrap().is_some());
        let m = f.lcm(&g);
        prop_assert!(m.div_exact(&f).unwrap().is_some());
        prop_assert!(m.div_exact(&g).unwrap().is_some());
        prop_assert_eq!((&d * &m).core(), (&f * &g).core());
    }

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in nonzero_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a + &a).is_zero());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &c) * &c.inverse().unwrap(), a.clone());
        prop_assert_eq!(a.div(&c).unwrap(), &a * &c.inverse().unwrap());
    }

    #[test]
    fn rational_canonical_form_is_unique(n in laurent(), d in nonzero_laurent(), k in nonzero_laurent()) {
        let direct = RationalPoly::new(n.clone(), d.clone()).unwrap();
        let scaled = RationalPoly::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(&direct, &scaled);
        prop_assert_eq!(direct.num(), scaled.num());
        prop_assert_eq!(direct.den(), scaled.den());
        prop_assert_eq!(direct.den().low_exponent(), Some(0));
        prop_assert_eq!(direct.num().gcd(direct.den()), LaurentPoly::one());
    }

    #[test]
    fn rational_time_reverse_is_a_homomorphism(a in rational(), b in rational()) {
        prop_assert_eq!((&a * &b).time_reverse(), &a.time_reverse() * &b.time_reverse());
        prop_assert_eq!(a.time_reverse().time_reverse(), a.clone());
    }

    #[test]
    fn rational_text_round_trips(a in rational()) {
        prop_assert_eq!(parse_rational(&a.to_string()).unwrap(), a);
    }
}

#[test]
fn floor_multiplication_identity_holds_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f100);
    for _ in 0..1000 {
        let l = rng.gen_range(1..=4);
        let f = LaurentPoly::from_mask(rng.gen_range(0..1u64 << 12)).shift(rng.gen_range(-6..=6));
        let g = LaurentPoly::from_mask(rng.gen_range(0..1u64 << 12)).shift(rng.gen_range(-6..=6));
        let lhs = (&f * &g).floor_fractional(l);
        let rhs = (0..l as i64).fold(BTreeSet::new(), |acc, i| {
            let term = set_mul(
                &set_floor(&support(&f), -i, l as i64),
                &set_floor(&support(&g), i, l as i64),
            );
            set_add(&acc, &term)
        });
        assert_eq!(support(&lhs), rhs, "f = {f}, g = {g}, l = {l}");
    }
}

#[test]
fn floor_fractional_worked_values() {
    // (1 + D^(1/2))^2 = 1 + D, and D^(1/2) floors away.
    let half = LaurentPoly::from_exponents([0, 1]);
    assert_eq!((&half * &half).floor_fractional(2), parse_poly("1+D").unwrap());
    assert_eq!(half.floor_fractional(2), LaurentPoly::one());
    assert_eq!(LaurentPoly::monomial(-3).floor_fractional(3), LaurentPoly::monomial(-1));
    assert_eq!(LaurentPoly::monomial(-1).floor_fractional(3), LaurentPoly::zero());
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<RationalPoly>]) -> RationalPoly {
    if m.is_empty() {
        return RationalPoly::one();
    }
    let mut acc = RationalPoly::zero();
    for (j, v) in m[0].iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let minor: Vec<Vec<RationalPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        acc += &(v * &det(&minor));
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Largest `k` with a nonzero `k x k` minor.
fn minor_rank(m: &PolyMatrix) -> usize {
    (1..=m.rows().min(m.cols()))
        .rev()
        .find(|&k| {
            subsets(m.rows(), k).iter().any(|rows| {
                subsets(m.cols(), k).iter().any(|cols| {
                    let sub: Vec<Vec<RationalPoly>> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
                        .collect();
                    !det(&sub).is_zero()
                })
            })
        })
        .unwrap_or(0)
}

#[test]
fn rank_matches_minor_oracle_and_rref_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a4c);
    for _ in 0..200 {
        let rows = rng.gen_range(1..=3);
        let cols = rng.gen_range(1..=4);
        let mut m = poly_matrix(&mut rng, rows, cols, 2);
        if rows > 1 && rng.gen_bool(0.5) {
            // Force a dependent row now and then.
            let f = RationalPoly::from(LaurentPoly::from_mask(rng.gen_range(1..8)));
            let mut dep = m.row_range(0, 1);
            dep.scale_row(0, &f);
            let extra = m.row_range(1, 2).add(&dep).unwrap();
            m = m.row_range(0, rows - 1).vstack(&extra).unwrap();
        }
        let (r, rank) = m.rref();
        assert_eq!(rank, minor_rank(&m), "{m}");
        assert_eq!(r.rref().0, r);
        assert!(r.row_space_equal(&m));
    }
}

#[test]
fn matrix_inverse_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1d);
    let mut found = 0;
    while found < 50 {
        let m = poly_matrix(&mut rng, 3, 3, 2);
        let Some(inv) = m.inverse() else {
            assert!(det(&(0..3).map(|i| m.row(i).to_vec()).collect::<Vec<_>>()).is_zero());
            continue;
        };
        assert_eq!(&m * &inv, PolyMatrix::identity(3));
        found += 1;
    }
}

#[test]
fn rational_entries_print_in_canonical_form() {
    let r = parse_rational("(D^2+D)/(D+D^2+D^3)").unwrap();
    assert_eq!(r.to_string(), "(1+D)/(1+D+D^2)");
    assert_eq!(parse_rational("(D^3)/(D)").unwrap().to_string(), "D^2");
    assert!(parse_rational("(1)/(0)").is_err());
}
