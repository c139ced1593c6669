//! Closed-walk count sequences: the linear recurrence, exact closed forms,
//! modular evaluation, and the prime-divisibility condition.
//!
//! The sequence is `c_0 = n`, `c_1 = 0`, and for `l >= 2`
//! `c_l = mu*n*k^(l-2) + (lambda - mu)*c_(l-1) + (k - mu)*c_(l-2)`.
//! For parameters realized by a graph, `c_l` counts closed walks of
//! length `l`, and every prime `p` divides `c_p`.

use crate::feasibility::{SrgParams, Verdict};
use crate::primes::{is_odd_prime, primes_up_to};
use crate::quadratic::QuadraticNumber;
use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("{params} fails the feasibility conditions ({verdict}), so the closed form is undefined")]
    InfeasibleParams { params: SrgParams, verdict: Verdict },
    #[error("scaled conference walk count is not divisible by 2^{len}; this indicates a bug")]
    NonIntegralResult { len: usize },
    #[error("{value} is not an odd prime")]
    NotOddPrime { value: u64 },
}

/// Walk counts `c_0 ..= c_L` for one parameter tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTable {
    pub params: SrgParams,
    counts: Vec<BigInt>,
}

impl WalkTable {
    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn count(&self, len: usize) -> &BigInt {
        &self.counts[len]
    }

    pub fn max_len(&self) -> usize {
        self.counts.len() - 1
    }
}

/// Runs the recurrence in exact arbitrary-precision arithmetic.
pub fn walk_counts(params: SrgParams, max_len: usize) -> WalkTable {
    let n = BigInt::from(params.n);
    let k = BigInt::from(params.k);
    let lambda_minus_mu = BigInt::from(params.lambda) - BigInt::from(params.mu);
    let k_minus_mu = BigInt::from(params.k) - BigInt::from(params.mu);
    let mu_n = BigInt::from(params.mu) * &n;

    let mut counts = Vec::with_capacity(max_len + 1);
    counts.push(n); // c_0
    if max_len >= 1 {
        counts.push(BigInt::zero()); // c_1
    }
    let mut k_pow = BigInt::one(); // k^(len-2)
    for len in 2..=max_len {
        let next = &mu_n * &k_pow
            + &lambda_minus_mu * &counts[len - 1]
            + &k_minus_mu * &counts[len - 2];
        counts.push(next);
        k_pow *= &k;
    }
    WalkTable { params, counts }
}

/// `c_len mod modulus`, running the recurrence entirely mod `modulus`.
pub fn walk_count_mod(params: SrgParams, len: usize, modulus: u64) -> u64 {
    assert!(modulus >= 2, "modulus must be at least 2");
    let m = modulus as u128;
    let n = params.n as u128 % m;
    if len == 0 {
        return n as u64;
    }
    if len == 1 {
        return 0;
    }
    let k = params.k as u128 % m;
    let lambda = params.lambda as u128 % m;
    let mu = params.mu as u128 % m;
    let coeff_prev = (lambda + m - mu) % m; // lambda - mu
    let coeff_prev2 = (k + m - mu) % m; // k - mu
    let mu_n = mu * n % m;

    let mut prev2 = n; // c_(len-2)
    let mut prev = 0u128; // c_(len-1)
    let mut k_pow = 1u128; // k^(len-2)
    let mut current = 0u128;
    for _ in 2..=len {
        current = (mu_n * k_pow % m + coeff_prev * prev % m + coeff_prev2 * prev2 % m) % m;
        prev2 = prev;
        prev = current;
        k_pow = k_pow * k % m;
    }
    current as u64
}

/// `k^len + m1*r1^len + m2*r2^len`, evaluated exactly in quadratic-number
/// arithmetic. Agrees with the recurrence for every feasible tuple.
pub fn walk_count_closed_form(params: SrgParams, len: usize) -> Result<BigInt, WalkError> {
    let report = params.feasibility();
    let Some(spectrum) = report.spectrum.filter(|_| report.feasible) else {
        return Err(WalkError::InfeasibleParams {
            params,
            verdict: report.integrality,
        });
    };
    let k_pow = BigInt::from(params.k).pow(len as u32);
    let total = QuadraticNumber::from_integer(k_pow)
        + spectrum.r1.pow(len).scale(&BigInt::from(spectrum.m1))
        + spectrum.r2.pow(len).scale(&BigInt::from(spectrum.m2));
    // The irrational parts of the conjugate powers cancel exactly.
    assert!(total.is_integer(), "closed form produced a non-integer");
    Ok(total.to_integer().expect("checked integral"))
}

/// Power sums `r1^l + r2^l` by the integer recurrence
/// `p_l = (lambda-mu) p_(l-1) + (k-mu) p_(l-2)`, `p_0 = 2`, `p_1 = lambda-mu`.
///
/// Independent of the quadratic-number route inside
/// [`walk_count_closed_form`]; the two must agree.
pub fn eigenvalue_power_sums(params: SrgParams, max_len: usize) -> Vec<BigInt> {
    let lambda_minus_mu = BigInt::from(params.lambda) - BigInt::from(params.mu);
    let k_minus_mu = BigInt::from(params.k) - BigInt::from(params.mu);
    let mut sums = Vec::with_capacity(max_len + 1);
    sums.push(BigInt::from(2));
    if max_len >= 1 {
        sums.push(lambda_minus_mu.clone());
    }
    for len in 2..=max_len {
        let next = &lambda_minus_mu * &sums[len - 1] + &k_minus_mu * &sums[len - 2];
        sums.push(next);
    }
    sums
}

/// Walk count for conference parameters `(4mu+1, 2mu, mu-1, mu)` via the
/// binomial expansion
/// `c_l = (2mu)^l + 4mu * (-1/2)^l * sum_i C(l, 2i) (4mu+1)^i`,
/// computed over the common denominator `2^l` with the final division
/// checked exact.
pub fn conference_walk_count(mu: u64, len: usize) -> Result<BigInt, WalkError> {
    assert!(mu >= 1, "conference parameters require mu >= 1");
    let base = BigInt::from(4 * mu + 1);
    let big_len = BigInt::from(len as u64);
    let mut sum = BigInt::zero();
    let mut base_pow = BigInt::one();
    for i in 0..=len / 2 {
        sum += binomial(big_len.clone(), BigInt::from(2 * i as u64)) * &base_pow;
        base_pow *= &base;
    }
    let two_pow = BigInt::one() << len;
    let signed_sum = if len % 2 == 0 { sum } else { -sum };
    let scaled: BigInt =
        BigInt::from(2 * mu).pow(len as u32) * &two_pow + BigInt::from(4 * mu) * signed_sum;
    let (count, rem) = scaled.div_rem(&two_pow);
    if !rem.is_zero() {
        return Err(WalkError::NonIntegralResult { len });
    }
    Ok(count)
}

/// Nonzero residue witnessing that a prime fails to divide its walk count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeViolation {
    pub prime: u64,
    pub residue: u64,
}

/// Result of checking `c_p = 0 (mod p)` for all primes up to a bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub params: SrgParams,
    pub checked_primes: Vec<u64>,
    /// Smallest checked prime with `c_p != 0 (mod p)`, if any.
    pub first_violation: Option<PrimeViolation>,
    pub all_pass: bool,
}

/// Tests `p | c_p` for every prime `p <= primes_up_to_bound`. Applicable to
/// any tuple; a violation refutes existence outright.
pub fn check_prime_divisibility(params: SrgParams, primes_up_to_bound: u64) -> DivisibilityReport {
    assert!(primes_up_to_bound >= 2, "prime bound must be at least 2");
    let checked_primes = primes_up_to(primes_up_to_bound);
    let mut first_violation = None;
    for &p in &checked_primes {
        let residue = walk_count_mod(params, p as usize, p);
        if residue != 0 && first_violation.is_none() {
            first_violation = Some(PrimeViolation { prime: p, residue });
        }
    }
    DivisibilityReport {
        params,
        checked_primes,
        all_pass: first_violation.is_none(),
        first_violation,
    }
}

/// The scaled binomial sum `2^p * x_p` for conference parameters at an odd
/// prime, together with the two identities it satisfies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConferencePrimeChecks {
    /// `2^p * x_p = sum_{i=0}^{(p-1)/2} C(p, 2i) (4mu+1)^i`.
    pub scaled_sum: BigInt,
    /// `2^p * x_p = 1 (mod p)`.
    pub residue_is_one: bool,
    /// `4mu * x_p = (2mu)^p - c_p`.
    pub matches_walk_count: bool,
}

/// Evaluates `2^p * x_p` and both identities for `mu >= 1` and odd prime `p`.
pub fn conference_prime_checks(mu: u64, p: u64) -> Result<ConferencePrimeChecks, WalkError> {
    assert!(mu >= 1, "conference parameters require mu >= 1");
    if !is_odd_prime(p) {
        return Err(WalkError::NotOddPrime { value: p });
    }
    let base = BigInt::from(4 * mu + 1);
    let big_p = BigInt::from(p);
    let mut scaled_sum = BigInt::zero();
    let mut base_pow = BigInt::one();
    for i in 0..=(p - 1) / 2 {
        scaled_sum += binomial(big_p.clone(), BigInt::from(2 * i)) * &base_pow;
        base_pow *= &base;
    }
    let residue_is_one = scaled_sum.mod_floor(&big_p).is_one();

    // 4mu * x_p = 4mu * scaled_sum / 2^p must be an integer.
    let four_mu_scaled: BigInt = BigInt::from(4 * mu) * &scaled_sum;
    let (four_mu_xp, rem) = four_mu_scaled.div_rem(&(BigInt::one() << p));
    assert!(rem.is_zero(), "4*mu*x_p must be an integer");
    let c_p = conference_walk_count(mu, p as usize)?;
    let matches_walk_count = four_mu_xp == BigInt::from(2 * mu).pow(p as u32) - c_p;

    Ok(ConferencePrimeChecks {
        scaled_sum,
        residue_is_one,
        matches_walk_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64, k: u64, lambda: u64, mu: u64) -> SrgParams {
        SrgParams::new(n, k, lambda, mu)
    }

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn recurrence_fixtures() {
        assert_eq!(walk_counts(p(10, 3, 0, 1), 5).counts(), big(&[10, 0, 30, 0, 150, 120]));
        assert_eq!(walk_counts(p(5, 2, 0, 1), 5).counts(), big(&[5, 0, 10, 0, 30, 10]));
        assert_eq!(walk_counts(p(7, 3, 1, 1), 5).counts(), big(&[7, 0, 21, 21, 105, 231]));
    }

    #[test]
    fn short_tables_use_initial_conditions_only() {
        let table = walk_counts(p(10, 3, 0, 1), 0);
        assert_eq!(table.counts(), big(&[10]));
        let table = walk_counts(p(10, 3, 0, 1), 1);
        assert_eq!(table.counts(), big(&[10, 0]));
        // c_2 = n*k always
        let table = walk_counts(p(12, 5, 2, 3), 2);
        assert_eq!(table.count(2), &BigInt::from(60));
    }

    #[test]
    fn closed_form_matches_trace_fixtures() {
        assert_eq!(walk_count_closed_form(p(10, 3, 0, 1), 5).unwrap(), BigInt::from(120));
        assert_eq!(walk_count_closed_form(p(10, 3, 0, 1), 7).unwrap(), BigInt::from(1680));
        // c_0 = n in the conference branch
        assert_eq!(walk_count_closed_form(p(5, 2, 0, 1), 0).unwrap(), BigInt::from(5));
        assert_eq!(walk_count_closed_form(p(5, 2, 0, 1), 5).unwrap(), BigInt::from(10));
    }

    #[test]
    fn closed_form_rejects_infeasible_tuples() {
        let err = walk_count_closed_form(p(7, 3, 1, 1), 3).unwrap_err();
        assert!(matches!(
            err,
            WalkError::InfeasibleParams {
                verdict: Verdict::FailIrrational,
                ..
            }
        ));
        // passes integrality but fails bounds: still no closed form
        let err = walk_count_closed_form(p(4, 3, 2, 0), 3).unwrap_err();
        assert!(matches!(err, WalkError::InfeasibleParams { .. }));
    }

    #[test]
    fn power_sum_recurrence_agrees_with_quadratic_route() {
        for params in [p(5, 2, 0, 1), p(13, 6, 2, 3), p(10, 3, 0, 1), p(16, 6, 2, 2)] {
            let spectrum = params.spectrum().unwrap();
            let sums = eigenvalue_power_sums(params, 20);
            for (len, expected) in sums.iter().enumerate() {
                let direct = spectrum.r1.pow(len) + spectrum.r2.pow(len);
                assert_eq!(direct.to_integer().as_ref(), Some(expected), "len {len}");
            }
        }
    }

    #[test]
    fn conference_count_fixtures() {
        // c_2 = 2*mu*(4*mu + 1)
        for mu in 1..=10u64 {
            assert_eq!(
                conference_walk_count(mu, 2).unwrap(),
                BigInt::from(2 * mu * (4 * mu + 1))
            );
        }
        assert_eq!(conference_walk_count(1, 5).unwrap(), BigInt::from(10));
        assert_eq!(conference_walk_count(3, 3).unwrap(), BigInt::from(156));
        assert_eq!(conference_walk_count(1, 0).unwrap(), BigInt::from(5)); // c_0 = n
    }

    #[test]
    fn modular_evaluation_fixtures() {
        assert_eq!(walk_count_mod(p(10, 3, 0, 1), 5, 5), 0); // 120 mod 5
        assert_eq!(walk_count_mod(p(7, 3, 1, 1), 5, 5), 1); // 231 mod 5
        assert_eq!(walk_count_mod(p(7, 3, 1, 1), 1, 97), 0); // c_1 = 0
        assert_eq!(walk_count_mod(p(9, 4, 1, 2), 0, 7), 2); // c_0 = n mod m
    }

    #[test]
    fn divisibility_fixtures() {
        let report = check_prime_divisibility(p(10, 3, 0, 1), 7);
        assert!(report.all_pass);
        assert_eq!(report.checked_primes, vec![2, 3, 5, 7]);

        let report = check_prime_divisibility(p(7, 3, 1, 1), 7);
        assert_eq!(
            report.first_violation,
            Some(PrimeViolation { prime: 2, residue: 1 })
        );
        assert!(!report.all_pass);

        let report = check_prime_divisibility(p(5, 2, 0, 1), 5);
        assert!(report.all_pass);
    }

    #[test]
    fn scaled_prime_sum_fixtures() {
        let checks = conference_prime_checks(1, 5).unwrap();
        assert_eq!(checks.scaled_sum, BigInt::from(176));
        assert!(checks.residue_is_one && checks.matches_walk_count);

        let checks = conference_prime_checks(3, 3).unwrap();
        assert_eq!(checks.scaled_sum, BigInt::from(40));
        assert!(checks.residue_is_one && checks.matches_walk_count);

        let checks = conference_prime_checks(1, 3).unwrap();
        assert_eq!(checks.scaled_sum, BigInt::from(16));
        assert!(checks.residue_is_one);
    }

    #[test]
    fn scaled_prime_sum_rejects_non_odd_primes() {
        for bad in [0, 1, 2, 4, 9, 15] {
            assert_eq!(
                conference_prime_checks(2, bad).unwrap_err(),
                WalkError::NotOddPrime { value: bad }
            );
        }
    }

    #[test]
    fn friendship_family_is_refuted() {
        // (k^2 - k + 1, k, 1, 1) satisfies bounds and the counting identity
        // for k >= 3 but never integrality; divisibility violations, when
        // they occur within the prime bound, must co-occur with that.
        for k in 3..=20u64 {
            let params = p(k * k - k + 1, k, 1, 1);
            let report = params.feasibility();
            assert!(report.bounds_ok && report.identity_ok);
            assert!(!report.integrality.is_pass(), "{params} should fail integrality");
            let div = check_prime_divisibility(params, 101);
            if div.all_pass {
                continue; // integrality alone refutes this k
            }
            assert!(!report.feasible);
        }
        // the smallest family member fails divisibility immediately
        let div = check_prime_divisibility(p(7, 3, 1, 1), 101);
        assert_eq!(div.first_violation, Some(PrimeViolation { prime: 2, residue: 1 }));
    }
}
