//! Error type shared by the whole crate.
//!
//! Every failure mode is explicit: caps and budgets never degrade into
//! silent guesses, they surface as `CapExceeded` / `BudgetExceeded`.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The claimed modulus is not a prime number.
    NotPrime(u64),
    /// Matrix or subspace shapes do not line up.
    Shape(String),
    /// Operands live over different quivers or different primes.
    Incompatible(String),
    /// Quiver construction found a directed cycle.
    CyclicQuiver,
    /// A claimed subrepresentation is not closed under the arrow maps.
    InvalidSubrep(String),
    /// An exhaustive search space exceeds the configured cap.
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u64,
    },
    /// An enumeration exceeds the configured budget.
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u64,
    },
    /// An isomorphism test gave up without a verdict. Callers must treat
    /// this as failure, never as "not isomorphic".
    Undecided(String),
    /// Gabriel-Roiter submodules of a simple module are undefined.
    NoGrSubmodule,
    /// A documented precondition was violated.
    Precondition(String),
    /// Invalid user-supplied parameter (reducible polynomial, bad case data).
    InvalidParameter(String),
    /// Take-off certification needs a larger registry bound.
    InsufficientBound { required: usize, available: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::Shape(msg) => write!(f, "shape mismatch: {msg}"),
            Error::Incompatible(msg) => write!(f, "incompatible operands: {msg}"),
            Error::CyclicQuiver => write!(f, "quiver has a directed cycle"),
            Error::InvalidSubrep(msg) => write!(f, "invalid subrepresentation: {msg}"),
            Error::CapExceeded { what, needed, cap } => {
                write!(f, "cap exceeded for {what}: needs {needed}, cap is {cap}")
            }
            Error::BudgetExceeded {
                what,
                needed,
                budget,
            } => write!(
                f,
                "budget exceeded for {what}: needs {needed}, budget is {budget}"
            ),
            Error::Undecided(msg) => write!(f, "undecided: {msg}"),
            Error::NoGrSubmodule => {
                write!(f, "a simple module has no Gabriel-Roiter submodule")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::InsufficientBound {
                required,
                available,
            } => write!(
                f,
                "registry bound {available} too small, certification needs {required}"
            ),
        }
    }
}

impl std::error::Error for Error {}
