use alloc::string::String;
use core::fmt;

/// Crate-wide error type. Arithmetic preconditions are enforced eagerly, so
/// most variants signal caller mistakes; `InvariantViolation` signals that a
/// proven internal identity failed to recompute, which should never happen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different cyclotomic rings.
    ConductorMismatch,
    /// Conductor must be an odd prime (or a product of two distinct odd primes).
    BadConductor(u64),
    /// Galois index not coprime to the conductor.
    BadGaloisIndex(u64),
    /// Operation requires a nonzero element.
    ZeroInput,
    /// Exact division requested but the divisor does not divide the dividend.
    InexactDivision,
    /// Ideal construction needs at least one nonzero generator.
    NoGenerators,
    /// Group-ring element fails a required shape (wrong prime, empty, ...).
    BadGroupRingElement(String),
    /// Exponent object has a negative coefficient where only nonnegative ones act.
    NegativeExponent,
    /// Element is not in the Stickelberger ideal.
    NotInStickelberger,
    /// Element fails the J_k preconditions (positive, phi = 0, even relative weight).
    NotJk(String),
    /// Character pair (a, b) is degenerate: a, b, or a + b vanishes mod p.
    DegenerateCharacterPair(u64, u64),
    /// r is not a prime splitting completely (r must be prime, r = 1 mod p).
    NotSplitPrime(u64),
    /// Ideal passed as a degree-1 prime is not one.
    NotDegreeOnePrime,
    /// No decomposition of the exponent over Jacobi-realizable atoms.
    DecompositionFailed,
    /// Candidate coordinates are not coprime.
    NotCoprime,
    /// Candidate fails x > |y| >= 1 after normalization.
    BadCandidateShape,
    /// p divides x + y where the operation requires p coprime to x + y.
    PDividesSum,
    /// p or q is not an odd prime, p = q, or p = 3 without positive-control mode.
    BadPrimePair(u64, u64),
    /// Eisenstein generator input is a unit.
    UnitInput,
    /// Eisenstein power has x + y = 0, so the quotient is undefined.
    DegenerateSum,
    /// A proven identity failed to recompute; indicates a bug, not bad input.
    InvariantViolation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ConductorMismatch => write!(f, "operands have different conductors"),
            Error::BadConductor(m) => write!(f, "bad conductor {m}"),
            Error::BadGaloisIndex(c) => write!(f, "galois index {c} not coprime to conductor"),
            Error::ZeroInput => write!(f, "operation requires a nonzero element"),
            Error::InexactDivision => write!(f, "division is not exact"),
            Error::NoGenerators => write!(f, "ideal needs at least one nonzero generator"),
            Error::BadGroupRingElement(s) => write!(f, "bad group-ring element: {s}"),
            Error::NegativeExponent => write!(f, "negative exponent coefficient on an element"),
            Error::NotInStickelberger => write!(f, "element is not in the Stickelberger ideal"),
            Error::NotJk(s) => write!(f, "element fails J_k preconditions: {s}"),
            Error::DegenerateCharacterPair(a, b) => {
                write!(f, "degenerate character pair ({a}, {b})")
            }
            Error::NotSplitPrime(r) => write!(f, "{r} is not a split prime (prime, 1 mod p)"),
            Error::NotDegreeOnePrime => write!(f, "ideal is not a degree-1 prime"),
            Error::DecompositionFailed => write!(f, "no integral decomposition over Jacobi atoms"),
            Error::NotCoprime => write!(f, "x and y must be coprime"),
            Error::BadCandidateShape => write!(f, "candidate must satisfy x > |y| >= 1"),
            Error::PDividesSum => write!(f, "p divides x + y"),
            Error::BadPrimePair(p, q) => write!(f, "bad prime pair ({p}, {q})"),
            Error::UnitInput => write!(f, "eisenstein input is a unit"),
            Error::DegenerateSum => write!(f, "power has x + y = 0"),
            Error::InvariantViolation(s) => write!(f, "internal invariant violated: {s}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
