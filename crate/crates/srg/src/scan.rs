//! Exhaustive enumeration of feasible parameter tuples and empirical
//! verification that every prime `p` divides `c_p` across all of them.

use crate::feasibility::{FeasibilityReport, SrgParams};
use crate::primes::primes_up_to;
use crate::walks::walk_count_mod;
use rayon::prelude::*;
use std::time::{Duration, Instant};

/// One feasible tuple found by the scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub params: SrgParams,
    pub report: FeasibilityReport,
    /// Complement parameters, when nonnegative.
    pub complement_params: Option<SrgParams>,
}

/// All feasible tuples with `2 <= n <= n_max`, ordered lexicographically by
/// `(n, k, lambda, mu)`.
///
/// For fixed `n`, `k`, `lambda`, the counting identity determines `mu` as
/// `k(k-1-lambda) / (n-1-k)` when that division is exact; other values of
/// `mu` cannot satisfy it. A determined `mu > k` is still checked rather
/// than silently skipped. Work is split per `n` value and merged in order,
/// so output is deterministic regardless of thread count.
pub fn enumerate_feasible(n_max: u64) -> Vec<ScanRecord> {
    assert!(n_max >= 2, "scan requires n_max >= 2");
    let per_n: Vec<Vec<ScanRecord>> = (2..=n_max)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| records_for_n(n))
        .collect();
    per_n.into_iter().flatten().collect()
}

fn records_for_n(n: u64) -> Vec<ScanRecord> {
    let mut records = Vec::new();
    for k in 1..=n.saturating_sub(2) {
        let denominator = (n - 1 - k) as u128; // >= 1 within bounds
        for lambda in 0..=k {
            if lambda + 1 > k {
                continue; // k - 1 - lambda < 0: no nonnegative mu fits
            }
            let numerator = k as u128 * (k - 1 - lambda) as u128;
            if numerator % denominator != 0 {
                continue;
            }
            let Ok(mu) = u64::try_from(numerator / denominator) else {
                continue;
            };
            let params = SrgParams::new(n, k, lambda, mu);
            let report = params.feasibility();
            if report.feasible {
                records.push(ScanRecord {
                    params,
                    complement_params: params.complement(),
                    report,
                });
            }
        }
    }
    records
}

/// A feasible tuple and a prime whose walk count it fails to divide.
/// The divisibility condition predicts this never occurs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub params: SrgParams,
    pub prime: u64,
    pub residue: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub n_max: u64,
    pub p_max: u64,
    pub tuples_checked: u64,
    pub prime_checks: u64,
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
}

/// Checks `c_p = 0 (mod p)` for every feasible tuple with `n <= n_max` and
/// every prime `p <= p_max`. A nonempty violation list would be a
/// counterexample to the subsumption of walk counting by integrality.
pub fn verify_prime_divisibility(n_max: u64, p_max: u64) -> VerificationReport {
    assert!(n_max >= 2 && p_max >= 2);
    let started = Instant::now();
    let records = enumerate_feasible(n_max);
    let primes = primes_up_to(p_max);
    let mut prime_checks = 0u64;
    let mut violations = Vec::new();
    for record in &records {
        for &p in &primes {
            prime_checks += 1;
            let residue = walk_count_mod(record.params, p as usize, p);
            if residue != 0 {
                violations.push(Violation {
                    params: record.params,
                    prime: p,
                    residue,
                });
            }
        }
    }
    VerificationReport {
        n_max,
        p_max,
        tuples_checked: records.len() as u64,
        prime_checks,
        violations,
        elapsed: started.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params_of(records: &[ScanRecord]) -> Vec<SrgParams> {
        records.iter().map(|r| r.params).collect()
    }

    #[test]
    fn smallest_feasible_tuples() {
        let records = enumerate_feasible(5);
        assert_eq!(
            params_of(&records),
            vec![
                SrgParams::new(4, 1, 0, 0),
                SrgParams::new(4, 2, 0, 2),
                SrgParams::new(5, 2, 0, 1),
            ]
        );
    }

    #[test]
    fn no_feasible_tuple_below_four_vertices() {
        assert!(enumerate_feasible(3).is_empty());
        assert!(enumerate_feasible(2).is_empty());
    }

    #[test]
    fn known_members_present() {
        let found = params_of(&enumerate_feasible(50));
        for expected in [
            SrgParams::new(9, 4, 1, 2),
            SrgParams::new(10, 3, 0, 1),
            SrgParams::new(10, 6, 3, 4),
            SrgParams::new(13, 6, 2, 3),
            SrgParams::new(16, 6, 2, 2),
            SrgParams::new(50, 7, 0, 1),
        ] {
            assert!(found.contains(&expected), "missing {expected}");
        }
    }

    #[test]
    fn output_is_sorted_and_deterministic() {
        let first = enumerate_feasible(40);
        let second = enumerate_feasible(40);
        assert_eq!(first, second);
        let mut sorted = params_of(&first);
        sorted.sort();
        assert_eq!(params_of(&first), sorted);
    }

    #[test]
    fn all_emitted_records_are_feasible() {
        for record in enumerate_feasible(30) {
            assert!(record.report.feasible);
            assert_eq!(record.complement_params, record.params.complement());
        }
    }

    #[test]
    fn small_verification_runs_clean() {
        let report = verify_prime_divisibility(5, 13);
        assert_eq!(report.tuples_checked, 3);
        assert_eq!(report.prime_checks, 3 * 6); // primes 2,3,5,7,11,13
        assert!(report.violations.is_empty());

        let report = verify_prime_divisibility(2, 2);
        assert_eq!(report.tuples_checked, 0);
        assert!(report.violations.is_empty());
    }
}
