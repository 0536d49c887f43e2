//! Exact invariants of squarefree monomial ideals.
//!
//! A squarefree monomial ideal in `k[x_1,...,x_n]` is the edge ideal of a
//! hypergraph on the variables, and its minimal primes are the minimal vertex
//! covers of that hypergraph. This crate exploits the correspondence to
//! compute, with no rounding anywhere:
//!
//! * the Waldschmidt constant `alpha-hat(I) = lim alpha(I^(m))/m`, as the
//!   optimal value of a rational linear program over the cover constraints;
//! * the fractional chromatic number of the hypergraph and the identity
//!   `alpha-hat(I) = chi*/(chi* - 1)`;
//! * the Chudnovsky-type lower bound `(alpha(I) + e - 1)/e` and the
//!   chromatic/clique sandwich for edge ideals of graphs;
//! * symbolic powers: membership, minimal generators, initial degrees,
//!   containments `I^(m) ⊆ I^r` with explicit witnesses, and resurgence
//!   lower bounds from finite search windows;
//! * the families of ideals with known closed-form constants (cycles,
//!   complete multipartite graphs, bipyramids, uniform matroids, monomial
//!   stars, unions of general linear subspaces).
//!
//! All arithmetic is over arbitrary-precision rationals ([`BigRational`]);
//! the simplex solver pivots with Bland's rule and returns primal and dual
//! certificates that are checked exactly.
//!
//! The crate is `no_std` (it requires `alloc`). IO, file formats, and the
//! command-line front end live in the companion crate `waldkit`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod decomposition;
pub mod families;
mod graph;
pub mod ideal;
pub mod lp;
pub mod powers;
pub mod waldschmidt;

use alloc::string::String;
use core::fmt;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use crate::decomposition::{minimal_primes, ConstraintMatrix, Decomposition, PrimeSupport};
pub use crate::ideal::{Hypergraph, Monomial, MonomialIdeal, SquarefreeIdeal, VariableContext};
pub use crate::waldschmidt::{waldschmidt_constant, waldschmidt_report, WaldschmidtReport};

/// Convenience constructor for a reduced rational from machine integers.
///
/// Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Errors reported by this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A generator list was empty; the zero ideal is unrepresentable.
    ZeroIdeal,
    /// A generator was the monomial `1`; the unit ideal is unrepresentable.
    UnitIdeal,
    /// Values from different variable contexts were mixed, or a dimension
    /// disagreed with its context.
    ContextMismatch,
    /// A generator had an exponent outside `{0, 1}`.
    NotSquarefree,
    /// A linear program had inconsistent dimensions or invalid data.
    MalformedProgram(String),
    /// A reported LP solution failed its exact feasibility or strong-duality
    /// check. This indicates a solver bug, never bad input.
    CertificateInvalid(String),
    /// Minimal-cover enumeration exceeded the configured cap.
    CoverCapExceeded { cap: usize },
    /// A generator-set computation exceeded the configured cap.
    SizeCapExceeded { cap: usize },
    /// The requested invariant is undefined for this input (for example the
    /// fractional chromatic number of a hypergraph whose edges are all
    /// isolated vertices).
    NotApplicable,
    /// An operation restricted to edge ideals of graphs was applied to an
    /// ideal with a generator of degree other than two.
    NotAGraph,
    /// Two ideals required to live on disjoint variables share a variable.
    Disjointness,
    /// The hypothesis `I^(k) = I^k` failed at the stated power.
    HypothesisFailed { power: u32 },
    /// A family constructor received out-of-range parameters.
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroIdeal => write!(f, "the zero ideal (empty generator list) is not representable"),
            Error::UnitIdeal => write!(f, "the unit ideal (generator 1) is not representable"),
            Error::ContextMismatch => write!(f, "variable contexts do not match"),
            Error::NotSquarefree => write!(f, "generator is not squarefree"),
            Error::MalformedProgram(msg) => write!(f, "malformed linear program: {msg}"),
            Error::CertificateInvalid(msg) => write!(f, "optimality certificate failed: {msg}"),
            Error::CoverCapExceeded { cap } => {
                write!(f, "minimal cover enumeration exceeded cap of {cap}")
            }
            Error::SizeCapExceeded { cap } => {
                write!(f, "generator set computation exceeded cap of {cap}")
            }
            Error::NotApplicable => write!(f, "invariant is not defined for this input"),
            Error::NotAGraph => write!(f, "ideal is not the edge ideal of a graph"),
            Error::Disjointness => write!(f, "ideals do not have disjoint variable supports"),
            Error::HypothesisFailed { power } => {
                write!(f, "hypothesis I^(k) = I^k fails at k = {power}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
