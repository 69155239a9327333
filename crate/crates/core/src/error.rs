//! Error type shared by all modules.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An operator was applied outside its polynomial-preserving domain: the
    /// result kept a nonzero coefficient at a negative exponent.
    SingularResidue { exponent: i64 },
    /// A recurrence denominator of the form alpha + beta + 2n (+2) vanished,
    /// or an equivalent degeneracy (mu_n = +-1/2, degenerate target family).
    DegenerateParams(String),
    /// The weight exponents (alpha-1)/2 and (beta-1)/2 are not both
    /// nonnegative integers, so exact rational moments are unavailable.
    NotPolynomialRegime(String),
    /// Evaluation point outside the open support (-1,-c) U (c,1).
    DomainError(String),
    /// A recurrence coefficient u_n was nonpositive where the Jacobi matrix
    /// needs its square root.
    PositivityViolation { index: usize },
    /// The tridiagonal eigensolver failed to converge.
    EigenFailure { index: usize },
    /// The numeric integrator stopped short of the requested accuracy.
    ConvergenceFailure { achieved: f64, target: f64 },
    /// Christoffel transform hit a polynomial that vanishes at the node.
    ZeroAtNode { degree: usize },
    /// Exact division left a remainder where none is mathematically possible.
    NonzeroRemainder,
    /// Malformed input (rational string, JSON payload, ...).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SingularResidue { exponent } => {
                write!(f, "singular residue: nonzero coefficient at x^{exponent}")
            }
            Error::DegenerateParams(what) => write!(f, "degenerate parameters: {what}"),
            Error::NotPolynomialRegime(what) => write!(f, "not in polynomial regime: {what}"),
            Error::DomainError(what) => write!(f, "outside weight support: {what}"),
            Error::PositivityViolation { index } => {
                write!(f, "recurrence coefficient u_{index} is not positive")
            }
            Error::EigenFailure { index } => {
                write!(f, "eigenvalue iteration failed to converge at index {index}")
            }
            Error::ConvergenceFailure { achieved, target } => write!(
                f,
                "integration converged to {achieved:.3e}, short of requested {target:.3e}"
            ),
            Error::ZeroAtNode { degree } => {
                write!(f, "Christoffel transform: P_{degree} vanishes at the node")
            }
            Error::NonzeroRemainder => write!(f, "exact polynomial division left a remainder"),
            Error::Parse(what) => write!(f, "parse error: {what}"),
        }
    }
}

impl std::error::Error for Error {}
