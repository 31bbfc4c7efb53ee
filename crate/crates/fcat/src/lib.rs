//! Std companion to `fcat-core`: report serialization, configuration files,
//! the multithreaded candidate search, and the named verification suites.
//! The binary in `main.rs` is a thin clap front-end over these modules.

pub mod config;
pub mod family;
pub mod report;
pub mod search;
pub mod suites;

use fcat_core::equation::Outcome;
use fcat_core::Error;

/// Process exit codes shared by every subcommand.
pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INVARIANT: u8 = 2;
pub const EXIT_SOLUTION: u8 = 3;

/// Errors from the core are user errors (bad primes, bad shapes, ...) unless
/// they report an internal inconsistency.
pub fn exit_code_for_error(e: &Error) -> u8 {
    match e {
        Error::InvariantViolation(_) => EXIT_INVARIANT,
        _ => EXIT_USAGE,
    }
}

/// An exact solution at p > 3 would falsify the non-existence theorem; it
/// gets its own exit code so harness scripts cannot miss it. The p = 3
/// positive-control family is expected to produce solutions.
pub fn exit_code_for_outcome(outcome: Outcome, p: u64) -> u8 {
    if outcome == Outcome::SolutionFound && p > 3 {
        EXIT_SOLUTION
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_mapping() {
        assert_eq!(
            exit_code_for_error(&Error::InvariantViolation("x".into())),
            EXIT_INVARIANT
        );
        assert_eq!(exit_code_for_error(&Error::NotCoprime), EXIT_USAGE);
        assert_eq!(exit_code_for_error(&Error::BadPrimePair(3, 5)), EXIT_USAGE);
        assert_eq!(exit_code_for_outcome(Outcome::SolutionFound, 5), EXIT_SOLUTION);
        assert_eq!(exit_code_for_outcome(Outcome::SolutionFound, 3), EXIT_OK);
        assert_eq!(exit_code_for_outcome(Outcome::NotAQthPower, 5), EXIT_OK);
    }
}
