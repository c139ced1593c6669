//! Parameter tuples and the three spectral feasibility conditions:
//! degree bounds, the counting identity, and multiplicity integrality.

use crate::quadratic::QuadraticNumber;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Candidate parameter tuple `(n, k, lambda, mu)`: vertex count, degree,
/// common neighbours of adjacent pairs, common neighbours of nonadjacent
/// pairs. The type imposes no feasibility; that is the job of the checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

/// Exact restricted eigenvalues and their multiplicities.
///
/// `r1 >= r2` as real numbers, `r1 + r2 = lambda - mu`,
/// `r1 * r2 = mu - k`, and `1 + m1 + m2 = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    /// Discriminant `(lambda - mu)^2 + 4(k - mu)` under the square root.
    pub disc: BigInt,
    pub r1: QuadraticNumber,
    pub r2: QuadraticNumber,
    pub m1: u64,
    pub m2: u64,
    /// True iff `(n-1)(lambda-mu) + 2k = 0` (equal multiplicities; the
    /// eigenvalues may be irrational).
    pub conference: bool,
}

/// Why the multiplicity computation failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("discriminant {disc} is negative, so the eigenvalues are not real")]
    NegativeDiscriminant { disc: BigInt },
    #[error("discriminant is zero, so the multiplicity denominator sqrt(0) vanishes")]
    ZeroDiscriminantNonConference,
    #[error(
        "discriminant {disc} is not a perfect square while the numerator \
         {numerator} is nonzero, so the multiplicities are irrational"
    )]
    IrrationalMultiplicity { disc: BigInt, numerator: BigInt },
    #[error("multiplicities are not integers: {kind}")]
    NonIntegralMultiplicity { kind: NonIntegralKind },
    #[error("multiplicities m1 = {m1}, m2 = {m2} are not both nonnegative")]
    NegativeMultiplicity { m1: BigInt, m2: BigInt },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonIntegralKind {
    /// `sqrt(disc)` does not divide the numerator, or `2` does not divide
    /// `n - 1` in the equal-multiplicity branch.
    Divisibility,
    /// `n - 1` and `numerator / sqrt(disc)` have mismatched parity.
    Parity,
}

impl fmt::Display for NonIntegralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonIntegralKind::Divisibility => write!(f, "divisibility failure"),
            NonIntegralKind::Parity => write!(f, "parity failure"),
        }
    }
}

/// Total classification of the integrality condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    PassIntegerEigenvalues,
    PassConference,
    FailIrrational,
    /// Defensive variant: the classifier reports a nonzero non-square
    /// discriminant as `FailIrrational` (the multiplicities are what become
    /// irrational), so this is never produced here.
    FailNonzeroDiscriminantNotSquare,
    FailNotDivisible,
    FailParity,
    FailNegativeOrNonintegralMultiplicity,
    FailZeroDiscriminant,
    FailNegativeDiscriminant,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        matches!(self, Verdict::PassIntegerEigenvalues | Verdict::PassConference)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::PassIntegerEigenvalues => "pass-integer-eigenvalues",
            Verdict::PassConference => "pass-conference",
            Verdict::FailIrrational => "fail-irrational",
            Verdict::FailNonzeroDiscriminantNotSquare => "fail-nonzero-discriminant-not-square",
            Verdict::FailNotDivisible => "fail-not-divisible",
            Verdict::FailParity => "fail-parity",
            Verdict::FailNegativeOrNonintegralMultiplicity => {
                "fail-negative-or-nonintegral-multiplicity"
            }
            Verdict::FailZeroDiscriminant => "fail-zero-discriminant",
            Verdict::FailNegativeDiscriminant => "fail-negative-discriminant",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl From<&SpectrumError> for Verdict {
    fn from(err: &SpectrumError) -> Verdict {
        match err {
            SpectrumError::NegativeDiscriminant { .. } => Verdict::FailNegativeDiscriminant,
            SpectrumError::ZeroDiscriminantNonConference => Verdict::FailZeroDiscriminant,
            SpectrumError::IrrationalMultiplicity { .. } => Verdict::FailIrrational,
            SpectrumError::NonIntegralMultiplicity {
                kind: NonIntegralKind::Divisibility,
            } => Verdict::FailNotDivisible,
            SpectrumError::NonIntegralMultiplicity {
                kind: NonIntegralKind::Parity,
            } => Verdict::FailParity,
            SpectrumError::NegativeMultiplicity { .. } => {
                Verdict::FailNegativeOrNonintegralMultiplicity
            }
        }
    }
}

/// Aggregate result of the three feasibility checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub params: SrgParams,
    pub bounds_ok: bool,
    pub identity_ok: bool,
    pub integrality: Verdict,
    /// Present exactly when `integrality` is a pass verdict.
    pub spectrum: Option<Spectrum>,
    /// Conjunction of the three checks. Feasibility is necessary, not
    /// sufficient: no graph is claimed to exist.
    pub feasible: bool,
}

impl SrgParams {
    pub fn new(n: u64, k: u64, lambda: u64, mu: u64) -> Self {
        Self { n, k, lambda, mu }
    }

    /// `0 < k < n - 1`: excludes complete and empty graphs.
    pub fn bounds_ok(&self) -> bool {
        self.k > 0 && (self.k as u128) + 1 < self.n as u128
    }

    /// The counting identity `(n-1-k) * mu = k * (k-1-lambda)`, evaluated
    /// in exact signed arithmetic.
    pub fn identity_ok(&self) -> bool {
        let n = BigInt::from(self.n);
        let k = BigInt::from(self.k);
        let lambda = BigInt::from(self.lambda);
        let mu = BigInt::from(self.mu);
        (&n - 1 - &k) * mu == &k * (&k - 1 - lambda)
    }

    /// `(lambda - mu)^2 + 4(k - mu)`; negative only for tuples no graph
    /// could realize.
    pub fn discriminant(&self) -> BigInt {
        let diff = BigInt::from(self.lambda) - BigInt::from(self.mu);
        let k_minus_mu = BigInt::from(self.k) - BigInt::from(self.mu);
        &diff * &diff + 4 * k_minus_mu
    }

    /// `(n-1)(lambda-mu) + 2k`, the numerator of the multiplicity split.
    pub fn multiplicity_numerator(&self) -> BigInt {
        (BigInt::from(self.n) - 1) * (BigInt::from(self.lambda) - BigInt::from(self.mu))
            + 2 * BigInt::from(self.k)
    }

    /// True iff the multiplicity numerator vanishes. For tuples that also
    /// satisfy bounds and the counting identity this forces
    /// `mu = lambda + 1`, `n = 2k + 1`, and `k = 2 mu`.
    pub fn is_conference(&self) -> bool {
        let conference = self.multiplicity_numerator().is_zero();
        if conference && self.bounds_ok() && self.identity_ok() {
            debug_assert_eq!(self.mu, self.lambda + 1);
            debug_assert_eq!(self.n, 2 * self.k + 1);
            debug_assert_eq!(self.k, 2 * self.mu);
        }
        conference
    }

    /// Exact eigenvalues and multiplicities.
    ///
    /// Callers are expected to have checked `bounds_ok` and `identity_ok`;
    /// the classification itself is total and never panics.
    pub fn spectrum(&self) -> Result<Spectrum, SpectrumError> {
        let disc = self.discriminant();
        if disc.is_negative() {
            return Err(SpectrumError::NegativeDiscriminant { disc });
        }
        if disc.is_zero() {
            // A zero discriminant cannot occur together with bounds and the
            // counting identity; classified rather than assumed unreachable.
            return Err(SpectrumError::ZeroDiscriminantNonConference);
        }
        let numerator = self.multiplicity_numerator();
        let diff = BigInt::from(self.lambda) - BigInt::from(self.mu);
        let n_minus_1 = BigInt::from(self.n) - 1;

        let eigenvalues = || {
            (
                QuadraticNumber::new(diff.clone(), 1, disc.clone()),
                QuadraticNumber::new(diff.clone(), -1, disc.clone()),
            )
        };

        if numerator.is_zero() {
            // Equal multiplicities (n-1)/2 each; n must be odd.
            if self.n % 2 == 0 {
                return Err(SpectrumError::NonIntegralMultiplicity {
                    kind: NonIntegralKind::Divisibility,
                });
            }
            let m = (self.n - 1) / 2;
            let (r1, r2) = eigenvalues();
            return Ok(Spectrum {
                disc,
                r1,
                r2,
                m1: m,
                m2: m,
                conference: true,
            });
        }

        let sqrt_disc = disc.sqrt();
        if &sqrt_disc * &sqrt_disc != disc {
            return Err(SpectrumError::IrrationalMultiplicity { disc, numerator });
        }
        let (quotient, rem) = numerator.div_rem(&sqrt_disc);
        if !rem.is_zero() {
            return Err(SpectrumError::NonIntegralMultiplicity {
                kind: NonIntegralKind::Divisibility,
            });
        }
        // m1 carries the minus sign, m2 the plus sign.
        let doubled_m1: BigInt = &n_minus_1 - &quotient;
        if doubled_m1.is_odd() {
            return Err(SpectrumError::NonIntegralMultiplicity {
                kind: NonIntegralKind::Parity,
            });
        }
        let m1: BigInt = doubled_m1 / 2;
        let m2: BigInt = (&n_minus_1 + &quotient) / 2;
        if m1.is_negative() || m2.is_negative() {
            return Err(SpectrumError::NegativeMultiplicity { m1, m2 });
        }
        let (r1, r2) = eigenvalues();
        // sqrt(disc) = disc = lambda - mu (mod 2), so both eigenvalues are integers.
        debug_assert!(r1.is_integer() && r2.is_integer());
        let m1 = u64::try_from(m1).expect("m1 <= n - 1");
        let m2 = u64::try_from(m2).expect("m2 <= n - 1");
        debug_assert_eq!(1 + m1 + m2, self.n);
        Ok(Spectrum {
            disc,
            r1,
            r2,
            m1,
            m2,
            conference: false,
        })
    }

    /// Total verdict on the multiplicity integrality condition.
    pub fn integrality(&self) -> Verdict {
        match self.spectrum() {
            Ok(s) if s.conference => Verdict::PassConference,
            Ok(_) => Verdict::PassIntegerEigenvalues,
            Err(e) => Verdict::from(&e),
        }
    }

    /// All three checks; `feasible` is their conjunction.
    pub fn feasibility(&self) -> FeasibilityReport {
        let bounds_ok = self.bounds_ok();
        let identity_ok = self.identity_ok();
        let (integrality, spectrum) = match self.spectrum() {
            Ok(s) => (
                if s.conference {
                    Verdict::PassConference
                } else {
                    Verdict::PassIntegerEigenvalues
                },
                Some(s),
            ),
            Err(e) => (Verdict::from(&e), None),
        };
        FeasibilityReport {
            params: *self,
            bounds_ok,
            identity_ok,
            integrality,
            spectrum,
            feasible: bounds_ok && identity_ok && integrality.is_pass(),
        }
    }

    /// Parameters of the complement graph, when they are all nonnegative:
    /// `(n, n-1-k, n-2-2k+mu, n-2k+lambda)`.
    pub fn complement(&self) -> Option<SrgParams> {
        let n = self.n as i128;
        let k = self.k as i128;
        let comp_k = n - 1 - k;
        let comp_lambda = n - 2 - 2 * k + self.mu as i128;
        let comp_mu = n - 2 * k + self.lambda as i128;
        if comp_k >= 0 && comp_lambda >= 0 && comp_mu >= 0 {
            Some(SrgParams::new(
                self.n,
                comp_k as u64,
                comp_lambda as u64,
                comp_mu as u64,
            ))
        } else {
            None
        }
    }

    /// Informational diagnostic only: for an actual graph `mu <= k` is
    /// forced, but the feasibility verdict never depends on it.
    pub fn mu_exceeds_degree(&self) -> bool {
        self.mu > self.k
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}
