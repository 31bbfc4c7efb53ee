//! Exact arithmetic for cyclotomic integers, ideal lattices in Hermite normal
//! form, Stickelberger/Fueter group-ring algebra, Jacobi sums, and the
//! candidate-rejection pipeline for the equation (x^p + y^p)/(x + y) = p^e z^q.
//!
//! Everything here is exact: arbitrary-precision integers throughout, no
//! floating point, and divisibility questions settled by lattice membership.
//! The crate is `no_std` (alloc only); IO, JSON and the search harness live in
//! the companion `fcat` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cyclotomic;
pub mod eisenstein;
pub mod equation;
pub mod error;
pub mod ideal;
pub mod intops;
pub mod jacobi;
pub mod stickelberger;

pub use cyclotomic::{Conductor, CycInt};
pub use eisenstein::{gen_p3, EisensteinInt, P3Tuple};
pub use equation::{Candidate, Outcome, Verdict};
pub use error::{Error, Result};
pub use ideal::IdealLattice;
pub use jacobi::{CharacterTable, JacobiNumber};
pub use stickelberger::{FueterBasis, GroupRingElement, StickelbergerLattice};
