//! Cross-checks every closed form for one partition against the oracles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::bfs::bfs_distance_matrix;
use crate::format::fraction;
use crate::invariants::{
    cof_delta_closed, compute_bundle, det_delta_closed, identity_violations, lambda, nu,
};
use crate::linalg::{
    cofactor, cofactor_sum, cofactor_sum_adjugate, det_bareiss, eigen_multiplicity, inertia,
    inverse_gauss, rank, Inertia,
};
use crate::matrices::{build_delta, build_laplacian_like, inverse_block_form, inverse_rank_one};
use crate::matrix::RationalMatrix;
use crate::partition::{classify, Classification, Partition};

/// Orders up to which every cofactor of `𝓛` is checked; above it only the
/// first row is.
pub const ALL_COFACTORS_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Observed values; on failure, the offending entries.
    pub witness: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipReason {
    /// `Ψ = 0`: no `λ`, `ν`, or `𝓛`.
    CofactorSumZero,
    /// `Θ = 0`: `Δ` is singular.
    DeterminantZero,
    /// Fewer than two singleton parts.
    FewSingletonParts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub name: &'static str,
    pub reason: SkipReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub partition: Partition,
    pub checks: Vec<Check>,
    pub skipped: Vec<Skipped>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn is_skipped(&self, name: &str) -> bool {
        self.skipped.iter().any(|s| s.name == name)
    }

    fn pass_if(&mut self, name: &'static str, passed: bool, witness: impl Into<String>) {
        self.checks.push(Check {
            name,
            passed,
            witness: witness.into(),
        });
    }

    fn skip(&mut self, names: &[&'static str], reason: SkipReason) {
        self.skipped
            .extend(names.iter().map(|&name| Skipped { name, reason }));
    }
}

/// Check names, in the order they appear in a report.
pub mod checks {
    pub const BFS: &str = "bfs_distance_matrix";
    pub const DET: &str = "det_closed_form";
    pub const COF_REDUCTION: &str = "cof_closed_form_reduction_route";
    pub const COF_ADJUGATE: &str = "cof_closed_form_adjugate_route";
    pub const VANISHING: &str = "vanishing_classification";
    pub const VANISHING_RANGES: &str = "vanishing_ranges";
    pub const IDENTITIES: &str = "recurrence_identities";
    pub const LAMBDA: &str = "lambda_ratio";
    pub const NU_SUM: &str = "nu_sums_to_one";
    pub const DELTA_NU: &str = "delta_nu_equals_lambda_ones";
    pub const LAPLACIAN_SHAPE: &str = "laplacian_symmetric_zero_sums";
    pub const LAPLACIAN_DELTA: &str = "laplacian_delta_plus_identity";
    pub const INVERSE_RANK_ONE: &str = "inverse_rank_one_is_inverse";
    pub const INVERSE_BLOCK: &str = "inverse_block_form_is_inverse";
    pub const INVERSE_BLOCK_GAUSS: &str = "inverse_block_form_matches_gauss";
    pub const INVERSE_AGREE: &str = "inverse_rank_one_matches_block_form";
    pub const LAPLACIAN_RANK: &str = "laplacian_rank";
    pub const LAPLACIAN_COFACTORS: &str = "laplacian_cofactors";
    pub const QUARTER_LOWER: &str = "quarter_multiplicity_lower_bound";
    pub const QUARTER_EXACT: &str = "quarter_multiplicity_exact";
    pub const ONE_LOWER: &str = "one_multiplicity_lower_bound";
    pub const ONE_EXACT: &str = "one_multiplicity_exact";
    pub const INERTIA: &str = "laplacian_inertia";
    pub const INERTIA_COF_MARGIN: &str = "laplacian_inertia_cof_margin_rule";
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn quarter() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(4))
}

fn compare(expected: &BigRational, actual: &BigRational) -> (bool, String) {
    if expected == actual {
        (true, fraction(actual))
    } else {
        (
            false,
            format!(
                "expected {}, oracle {}",
                fraction(expected),
                fraction(actual)
            ),
        )
    }
}

fn compare_matrices(expected: &RationalMatrix, actual: &RationalMatrix) -> (bool, String) {
    let diffs = expected.mismatches(actual);
    if diffs.is_empty() {
        return (true, format!("{0}x{0} exact match", expected.order()));
    }
    let shown: Vec<String> = diffs
        .iter()
        .take(5)
        .map(|(i, j, e, a)| format!("({i},{j}): expected {}, got {}", fraction(e), fraction(a)))
        .collect();
    (
        false,
        format!("{} mismatches; {}", diffs.len(), shown.join("; ")),
    )
}

/// The inertia of `𝓛` predicted for `det Δ ≠ 0`, `cof Δ ≠ 0`.
pub fn predicted_laplacian_inertia(p: &Partition, class: &Classification) -> Option<Inertia> {
    let (n, t, s) = (p.n(), p.t(), p.s());
    if class.det_zero || class.cof_zero {
        None
    } else if p.is_all_large() {
        Some(Inertia::new(n - t, 1, t - 1))
    } else if class.margin.is_positive() {
        Some(Inertia::new(n - s - 1, 1, s))
    } else {
        Some(Inertia::new(n - s, 1, s - 1))
    }
}

/// The inertia of `𝓛` observed for `det Δ ≠ 0`, `cof Δ ≠ 0`, branching on
/// the sign of the cofactor margin `h - Σ n_i/(3n_i - 4)` instead of the
/// determinant margin. The two rules differ exactly when
/// `h - 1 < Σ n_i/(3n_i - 4) < h`, where `λ < 0`.
pub fn cof_margin_rule_inertia(p: &Partition, class: &Classification) -> Option<Inertia> {
    let (n, s) = (p.n(), p.s());
    if class.det_zero || class.cof_zero {
        None
    } else if class.cof_margin.is_positive() {
        Some(Inertia::new(n - s - 1, 1, s))
    } else {
        Some(Inertia::new(n - s, 1, s - 1))
    }
}

/// Runs every applicable check; inapplicable ones are listed as skipped.
pub fn verify_partition(p: &Partition) -> VerificationReport {
    use checks::*;

    let mut report = VerificationReport {
        partition: p.clone(),
        checks: Vec::new(),
        skipped: Vec::new(),
    };
    let n = p.n();
    let delta = build_delta(p);
    let bundle = compute_bundle(p);
    let class = classify(p);

    let (ok, w) = compare_matrices(&delta, &bfs_distance_matrix(p));
    report.pass_if(BFS, ok, w);

    let det_closed = BigRational::from_integer(det_delta_closed(p));
    let det_oracle = det_bareiss(&delta);
    let (ok, w) = compare(&det_closed, &det_oracle);
    report.pass_if(DET, ok, w);

    let cof_closed = BigRational::from_integer(cof_delta_closed(p));
    let cof_oracle = cofactor_sum(&delta);
    let (ok, w) = compare(&cof_closed, &cof_oracle);
    report.pass_if(COF_REDUCTION, ok, w);
    let (ok, w) = compare(&cof_closed, &cofactor_sum_adjugate(&delta));
    report.pass_if(COF_ADJUGATE, ok, w);

    report.pass_if(
        VANISHING,
        class.det_zero == det_oracle.is_zero() && class.cof_zero == cof_oracle.is_zero(),
        format!(
            "det_zero={} (oracle det {}), cof_zero={} (oracle cof {}), margin={}",
            class.det_zero,
            fraction(&det_oracle),
            class.cof_zero,
            fraction(&cof_oracle),
            fraction(&class.margin)
        ),
    );
    report.pass_if(
        VANISHING_RANGES,
        class.ranges_hold(p),
        format!("t={}, h={}", p.t(), p.h()),
    );

    let violations = identity_violations(p);
    report.pass_if(
        IDENTITIES,
        violations.is_empty(),
        match violations.first() {
            None => "identities (a)-(d) hold".to_string(),
            Some(v) => format!(
                "{} violations; first ({}) at i={} j={:?}: {} != {}",
                violations.len(),
                v.identity,
                v.i,
                v.j,
                v.lhs,
                v.rhs
            ),
        },
    );

    let theta_zero = bundle.theta.is_zero();

    // Block-form inverse needs only Θ ≠ 0.
    if theta_zero {
        report.skip(
            &[INVERSE_BLOCK, INVERSE_BLOCK_GAUSS],
            SkipReason::DeterminantZero,
        );
    } else {
        let block = inverse_block_form(p).expect("Θ ≠ 0");
        let identity = RationalMatrix::identity(n);
        let (ok_l, wl) = compare_matrices(&identity, &(&delta * &block));
        let (ok_r, wr) = compare_matrices(&identity, &(&block * &delta));
        report.pass_if(INVERSE_BLOCK, ok_l && ok_r, format!("ΔX: {wl}; XΔ: {wr}"));
        match inverse_gauss(&delta) {
            Ok(gauss) => {
                let (ok, w) = compare_matrices(&block, &gauss);
                report.pass_if(INVERSE_BLOCK_GAUSS, ok, w);
            }
            Err(e) => report.pass_if(INVERSE_BLOCK_GAUSS, false, e.to_string()),
        }
    }

    let needs_laplacian = [
        LAMBDA,
        NU_SUM,
        DELTA_NU,
        LAPLACIAN_SHAPE,
        LAPLACIAN_DELTA,
        INVERSE_RANK_ONE,
        INVERSE_AGREE,
        LAPLACIAN_RANK,
        LAPLACIAN_COFACTORS,
        QUARTER_LOWER,
        QUARTER_EXACT,
        ONE_LOWER,
        ONE_EXACT,
        INERTIA,
        INERTIA_COF_MARGIN,
    ];
    if bundle.psi.is_zero() {
        report.skip(&needs_laplacian, SkipReason::CofactorSumZero);
        return report;
    }

    let lam = lambda(p).expect("Ψ ≠ 0").0;
    let nu = nu(p).expect("Ψ ≠ 0");
    let laplacian = build_laplacian_like(p).expect("Ψ ≠ 0");

    let (ok, w) = compare(&det_oracle, &(&lam * &cof_oracle));
    report.pass_if(LAMBDA, ok, format!("λ={}; {w}", fraction(&lam)));

    let (ok, w) = compare(&q(1), &nu.sum());
    report.pass_if(NU_SUM, ok, w);

    let delta_nu = delta.mul_vec(&nu.values);
    let bad: Vec<usize> = (0..n).filter(|&v| delta_nu[v] != lam).collect();
    report.pass_if(
        DELTA_NU,
        bad.is_empty(),
        if bad.is_empty() {
            format!("Δν = {}·𝟙", fraction(&lam))
        } else {
            format!(
                "rows {:?} differ from λ={}; first is {}",
                bad,
                fraction(&lam),
                fraction(&delta_nu[bad[0]])
            )
        },
    );

    let zero_sums = laplacian.row_sums().iter().all(Zero::is_zero)
        && laplacian.col_sums().iter().all(Zero::is_zero);
    report.pass_if(
        LAPLACIAN_SHAPE,
        zero_sums && laplacian.is_symmetric(),
        format!(
            "symmetric={}, zero sums={}",
            laplacian.is_symmetric(),
            zero_sums
        ),
    );

    let ones = vec![q(1); n];
    let lhs = &(&laplacian * &delta) + &RationalMatrix::identity(n);
    let (ok, w) = compare_matrices(&RationalMatrix::outer(&nu.values, &ones), &lhs);
    report.pass_if(LAPLACIAN_DELTA, ok, w);

    if theta_zero {
        report.skip(
            &[INVERSE_RANK_ONE, INVERSE_AGREE],
            SkipReason::DeterminantZero,
        );
    } else {
        let rank_one = inverse_rank_one(p).expect("Θ ≠ 0 and Ψ ≠ 0");
        let identity = RationalMatrix::identity(n);
        let (ok_l, wl) = compare_matrices(&identity, &(&delta * &rank_one));
        let (ok_r, wr) = compare_matrices(&identity, &(&rank_one * &delta));
        report.pass_if(
            INVERSE_RANK_ONE,
            ok_l && ok_r,
            format!("ΔX: {wl}; XΔ: {wr}"),
        );
        let block = inverse_block_form(p).expect("Θ ≠ 0");
        let (ok, w) = compare_matrices(&block, &rank_one);
        report.pass_if(INVERSE_AGREE, ok, w);
    }

    let r = rank(&laplacian);
    report.pass_if(LAPLACIAN_RANK, r == n - 1, format!("rank {r}, order {n}"));

    // Every cofactor of 𝓛 equals (-1)^{n-1} / cof Δ.
    let sign = if (n - 1) % 2 == 0 { q(1) } else { q(-1) };
    let expected = sign / &cof_closed;
    let rows = if n <= ALL_COFACTORS_MAX_ORDER { n } else { 1 };
    let mut bad = Vec::new();
    for i in 0..rows {
        for j in 0..n {
            let c = cofactor(&laplacian, i, j);
            if c != expected {
                bad.push(format!("({i},{j})={}", fraction(&c)));
            }
        }
    }
    report.pass_if(
        LAPLACIAN_COFACTORS,
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} cofactors equal {}", rows * n, fraction(&expected))
        } else {
            format!(
                "expected {}; {} differ: {}",
                fraction(&expected),
                bad.len(),
                bad.iter().take(5).cloned().collect::<Vec<_>>().join(", ")
            )
        },
    );

    let mult_quarter = eigen_multiplicity(&laplacian, &quarter()).expect("𝓛 is symmetric");
    let n_minus_t = n - p.t();
    report.pass_if(
        QUARTER_LOWER,
        mult_quarter >= n_minus_t,
        format!("mult(1/4)={mult_quarter}, n-t={n_minus_t}"),
    );
    if theta_zero {
        report.skip(&[QUARTER_EXACT], SkipReason::DeterminantZero);
    } else {
        report.pass_if(
            QUARTER_EXACT,
            mult_quarter == n_minus_t,
            format!("mult(1/4)={mult_quarter}, n-t={n_minus_t}"),
        );
    }

    if p.h() < 2 {
        report.skip(&[ONE_LOWER, ONE_EXACT], SkipReason::FewSingletonParts);
    } else {
        let mult_one = eigen_multiplicity(&laplacian, &q(1)).expect("𝓛 is symmetric");
        let h_minus_1 = p.h() - 1;
        let w = format!("mult(1)={mult_one}, h-1={h_minus_1}");
        report.pass_if(ONE_LOWER, mult_one >= h_minus_1, w.clone());
        if theta_zero {
            report.skip(&[ONE_EXACT], SkipReason::DeterminantZero);
        } else {
            report.pass_if(ONE_EXACT, mult_one == h_minus_1, w);
        }
    }

    match (
        predicted_laplacian_inertia(p, &class),
        cof_margin_rule_inertia(p, &class),
    ) {
        (Some(predicted), Some(by_cof_margin)) => {
            let observed = inertia(&laplacian).expect("𝓛 is symmetric");
            report.pass_if(
                INERTIA,
                observed == predicted,
                format!(
                    "observed {observed}, predicted {predicted} (margin {})",
                    fraction(&class.margin)
                ),
            );
            report.pass_if(
                INERTIA_COF_MARGIN,
                observed == by_cof_margin,
                format!(
                    "observed {observed}, predicted {by_cof_margin} (cof margin {})",
                    fraction(&class.cof_margin)
                ),
            );
        }
        _ => report.skip(&[INERTIA, INERTIA_COF_MARGIN], SkipReason::DeterminantZero),
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(sizes: &[i64]) -> Partition {
        Partition::new(sizes).unwrap()
    }

    #[test]
    fn k22_passes_everything() {
        let r = verify_partition(&p(&[2, 2]));
        assert!(r.all_passed(), "{:#?}", r.failures().collect::<Vec<_>>());
        assert!(r
            .skipped
            .iter()
            .all(|s| s.reason == SkipReason::FewSingletonParts));
        assert_eq!(
            r.check(checks::INERTIA).unwrap().witness,
            "observed (2, 1, 1), predicted (2, 1, 1) (margin -3)"
        );
    }

    #[test]
    fn mixed_partition_selects_positive_margin_branch() {
        let k = p(&[3, 2, 1, 1, 1]);
        let class = classify(&k);
        assert_eq!(
            predicted_laplacian_inertia(&k, &class),
            Some(Inertia::new(5, 1, 2))
        );
        let r = verify_partition(&k);
        assert!(r.all_passed(), "{:#?}", r.failures().collect::<Vec<_>>());
        assert!(r.check(checks::INERTIA).unwrap().passed);
    }

    #[test]
    fn negative_lambda_contradicts_determinant_margin_branch() {
        // λ = -3/2: 𝓛 has eigenvalue -2, so In(𝓛) = (2, 1, 1), not (3, 1, 0).
        let k = p(&[3, 1]);
        let r = verify_partition(&k);
        let failed: Vec<&str> = r.failures().map(|c| c.name).collect();
        assert_eq!(failed, vec![checks::INERTIA]);
        assert_eq!(
            r.check(checks::INERTIA).unwrap().witness,
            "observed (2, 1, 1), predicted (3, 1, 0) (margin -3/5)"
        );
        assert!(r.check(checks::INERTIA_COF_MARGIN).unwrap().passed);
    }

    #[test]
    fn zero_cofactor_sum_skips_laplacian_checks() {
        let r = verify_partition(&p(&[2, 1]));
        assert!(r.all_passed());
        assert!(r.check(checks::DET).unwrap().passed);
        assert!(r.check(checks::COF_REDUCTION).unwrap().passed);
        assert!(r.check(checks::INVERSE_BLOCK).unwrap().passed);
        for name in [
            checks::LAPLACIAN_RANK,
            checks::INERTIA,
            checks::INVERSE_RANK_ONE,
        ] {
            assert!(r.is_skipped(name), "{name}");
            assert!(r.check(name).is_none());
        }
    }

    #[test]
    fn singular_delta_skips_inverse_checks() {
        let r = verify_partition(&p(&[2, 1, 1]));
        assert!(r.all_passed(), "{:#?}", r.failures().collect::<Vec<_>>());
        for name in [
            checks::INVERSE_BLOCK,
            checks::INVERSE_RANK_ONE,
            checks::INERTIA,
        ] {
            assert!(r.is_skipped(name), "{name}");
        }
        assert!(r.check(checks::LAPLACIAN_COFACTORS).unwrap().passed);
        assert!(r.check(checks::ONE_LOWER).unwrap().passed);
    }

    #[test]
    fn no_silent_omissions() {
        for sizes in [&[2, 2][..], &[2, 1], &[2, 1, 1], &[1, 1, 1], &[4, 1]] {
            let r = verify_partition(&p(sizes));
            let mut names: Vec<&str> = r
                .checks
                .iter()
                .map(|c| c.name)
                .chain(r.skipped.iter().map(|s| s.name))
                .collect();
            names.sort_unstable();
            names.dedup();
            assert_eq!(names.len(), 24, "{sizes:?}: {names:?}");
            assert_eq!(r.checks.len() + r.skipped.len(), 24);
        }
    }
}
