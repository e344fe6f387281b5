//! The exact linear-algebra routines against slower, independent oracles on
//! a seeded random corpus.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sqdist_core::linalg::{cofactor_sum, cofactor_sum_adjugate, inertia, Inertia};
use sqdist_core::{
    char_poly, det_bareiss, eigen_multiplicity, inverse_gauss, rank, BigInt, BigRational,
    RationalMatrix,
};

const SEED: u64 = 0x5eed_d157;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Laplace expansion along the first row.
fn det_laplace(m: &RationalMatrix) -> BigRational {
    match m.order() {
        0 => BigRational::one(),
        1 => m.get(0, 0).clone(),
        n => (0..n)
            .map(|j| {
                let term = m.get(0, j) * det_laplace(&m.minor(0, j));
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

fn random_integer_matrix(rng: &mut ChaCha8Rng, order: usize, range: i64) -> RationalMatrix {
    RationalMatrix::from_fn(order, |_, _| q(rng.random_range(-range..=range), 1))
}

fn random_rational_matrix(rng: &mut ChaCha8Rng, order: usize) -> RationalMatrix {
    RationalMatrix::from_fn(order, |_, _| {
        q(rng.random_range(-6..=6), rng.random_range(1..=5))
    })
}

fn corpus() -> Vec<RationalMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    for order in 1..=5 {
        for _ in 0..40 {
            out.push(random_integer_matrix(&mut rng, order, 9));
        }
        for _ in 0..20 {
            // Small entries make singular matrices common.
            out.push(random_integer_matrix(&mut rng, order, 1));
            out.push(random_rational_matrix(&mut rng, order));
        }
    }
    out
}

#[test]
fn bareiss_matches_laplace_expansion() {
    for m in corpus() {
        assert_eq!(det_bareiss(&m), det_laplace(&m), "{m:?}");
    }
}

#[test]
fn cofactor_routes_agree() {
    for m in corpus() {
        assert_eq!(cofactor_sum(&m), cofactor_sum_adjugate(&m), "{m:?}");
    }
}

#[test]
fn char_poly_constant_term_is_signed_determinant() {
    for m in corpus() {
        let cp = char_poly(&m);
        let det = det_bareiss(&m);
        let expected = if m.order() % 2 == 0 { det } else { -det };
        assert_eq!(cp.eval(&BigRational::zero()), expected);
        assert!(cp.coeffs[0].is_one());
    }
}

#[test]
fn char_poly_evaluates_to_det_of_shift() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for m in corpus().into_iter().step_by(7) {
        let cp = char_poly(&m);
        for _ in 0..3 {
            let x = q(rng.random_range(-20..=20), rng.random_range(1..=7));
            let shifted = &RationalMatrix::scalar(m.order(), x.clone()) - &m;
            assert_eq!(cp.eval(&x), det_bareiss(&shifted));
        }
    }
}

#[test]
fn gauss_inverse_is_two_sided() {
    for m in corpus() {
        match inverse_gauss(&m) {
            Ok(inv) => {
                let id = RationalMatrix::identity(m.order());
                assert_eq!(&m * &inv, id);
                assert_eq!(&inv * &m, id);
            }
            Err(_) => assert!(det_bareiss(&m).is_zero()),
        }
    }
}

#[test]
fn rank_is_full_iff_nonsingular() {
    for m in corpus() {
        assert_eq!(rank(&m) == m.order(), !det_bareiss(&m).is_zero());
    }
}

/// `P D Pᵗ` with unimodular `P` has the sign pattern of `D` (Sylvester).
#[test]
fn inertia_of_congruent_diagonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for order in 1..=7 {
        for _ in 0..15 {
            let diag: Vec<BigRational> = (0..order)
                .map(|_| q(rng.random_range(-3..=3), rng.random_range(1..=4)))
                .collect();
            let expected = Inertia::new(
                diag.iter().filter(|d| d.is_positive()).count(),
                diag.iter().filter(|d| d.is_zero()).count(),
                diag.iter().filter(|d| d.is_negative()).count(),
            );
            // Unit lower-triangular, so det P = 1.
            let p = RationalMatrix::from_fn(order, |i, j| match i.cmp(&j) {
                std::cmp::Ordering::Greater => q(rng.random_range(-3..=3), 1),
                std::cmp::Ordering::Equal => q(1, 1),
                std::cmp::Ordering::Less => q(0, 1),
            });
            let m = &(&p * &RationalMatrix::diagonal(&diag)) * &p.transpose();
            assert!(m.is_symmetric());
            let got = inertia(&m).unwrap();
            assert_eq!(got, expected, "diag {diag:?}");
            assert_eq!(got.order(), order);
        }
    }
}

#[test]
fn multiplicity_positive_iff_shift_singular() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    for order in 1..=5 {
        for _ in 0..20 {
            let a = random_integer_matrix(&mut rng, order, 2);
            let sym = &a + &a.transpose();
            for mu in [q(0, 1), q(1, 1), q(-2, 1), q(4, 1)] {
                let mult = eigen_multiplicity(&sym, &mu).unwrap();
                let shifted = &sym - &RationalMatrix::scalar(order, mu.clone());
                assert_eq!(mult >= 1, det_bareiss(&shifted).is_zero());
            }
        }
    }
}
