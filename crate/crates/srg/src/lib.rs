//! Exact feasibility analysis for strongly regular graph parameter tuples.
//!
//! A tuple `(n, k, lambda, mu)` must pass three checks for a strongly
//! regular graph to exist: the degree bounds `0 < k < n-1`, the counting
//! identity `(n-1-k) mu = k(k-1-lambda)`, and integrality of the eigenvalue
//! multiplicities. A further necessary condition counts closed walks: every
//! prime `p` must divide the walk count `c_p`. This crate evaluates all of
//! these in exact arithmetic (no floating point anywhere in the library),
//! cross-checks them against brute-force graph oracles, and scans parameter
//! ranges to confirm empirically that the walk-counting condition never
//! rejects a tuple the multiplicity condition accepts.
//!
//! - [`feasibility`]: parameter tuples, exact spectra, the three checks.
//! - [`walks`]: the closed-walk recurrence, closed forms, modular
//!   evaluation, prime divisibility.
//! - [`graphs`]: known strongly regular families, strong-regularity
//!   verification by pair counting, adjacency-power traces, rotation
//!   classes of prime-length walks.
//! - [`scan`]: exhaustive enumeration of feasible tuples and bulk
//!   divisibility verification.
//! - [`quadratic`]: exact arithmetic on `(a + b*sqrt(d))/2`.

pub mod feasibility;
pub mod graphs;
pub mod primes;
pub mod quadratic;
pub mod scan;
pub mod walks;

pub use feasibility::{FeasibilityReport, Spectrum, SpectrumError, SrgParams, Verdict};
pub use graphs::{FamilySpec, Graph, GraphError, RotationClassStats};
pub use quadratic::QuadraticNumber;
pub use scan::{ScanRecord, VerificationReport};
pub use walks::{DivisibilityReport, WalkError, WalkTable};
