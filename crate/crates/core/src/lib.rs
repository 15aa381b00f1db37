//! Evaluation of the classical, Prabhakar and four-parameter (Shukla–
//! Prajapati) Mittag-Leffler functions to controlled accuracy, together
//! with a mechanical verification suite for the Turán-type, Lazarević-type
//! and Wilker-type inequalities these functions satisfy, monotonicity
//! probes for section ratios, and randomized counterexample searches for
//! the two open generalizations.
//!
//! Layout:
//!
//! - [`gamma`] — real-argument ln Γ, digamma and Pochhammer primitives.
//! - [`series`] — the three function families with truncation-error
//!   accounting, tail sections and partial sums.
//! - [`identity`] — exact recurrences and differentiation formulas, used
//!   as internal cross-checks.
//! - [`checks`] — every inequality as a residual-producing check with a
//!   uniform verdict contract.
//! - [`probe`] — monotonicity/limit probes and open-problem searches.
//! - [`oracle`] — independent high-precision (MPFR) reference evaluation.
//! - [`grid`], [`runner`], [`report`] — parameter-grid sweeps and
//!   machine-readable reports.

pub mod checks;
pub mod error;
pub mod exec;
pub mod gamma;
pub mod grid;
pub mod identity;
pub mod oracle;
pub mod probe;
pub mod report;
pub mod runner;
pub mod series;

pub use error::{Error, Result};
pub use series::{EvalResult, Family, MLParams, SeriesConfig};
