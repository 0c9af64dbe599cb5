//! Verification suites.

mod checks;
mod instances;
mod report;
mod suites;

pub use checks::*;
pub use instances::{derive_seed, generate_instance, Instance, InstanceKind, InstanceSpec};
pub use report::{Expectation, SuiteConfig, SuiteReport, Totals, Verdict, VerificationReport, FORMAT_VERSION};
pub use suites::{run_suite, tau_exponents, PRIMES, SUITES};
