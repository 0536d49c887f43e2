//! The Waldschmidt constant and its companions.
//!
//! For a squarefree monomial ideal `I` with minimal primes `P_1, ..., P_s`,
//! the Waldschmidt constant is the value of the covering linear program
//!
//! ```text
//! minimize 1.y   subject to   A y >= 1,  y >= 0
//! ```
//!
//! where `A[i][j] = 1` iff `x_j` lies in `P_i`. The fractional chromatic
//! number of the associated hypergraph is the value of the dual-shaped
//! program over the maximal independent sets, and the two invariants pin
//! each other down through `alpha-hat = chi*/(chi* - 1)`. This module
//! computes both sides by separate solves, checks the Chudnovsky-type lower
//! bound `(alpha(I) + e - 1)/e`, the chromatic/clique sandwich for graphs,
//! and the minimum rule for sums of ideals on disjoint variables.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::decomposition::{minimal_primes, Decomposition};
use crate::graph::SimpleGraph;
use crate::ideal::{check_same_context, MonomialIdeal, SquarefreeIdeal};
use crate::lp::{solve_lp, LinearProgram, LpResult, LpSolution};
use crate::Error;

/// The fractional chromatic number of a hypergraph.
///
/// It is infinite exactly when some edge is a single vertex (that vertex
/// belongs to no independent set, so no colouring is valid).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiStar {
    Finite(BigRational),
    Infinite,
}

impl ChiStar {
    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ChiStar::Finite(v) => Some(v),
            ChiStar::Infinite => None,
        }
    }
}

/// Everything the covering linear program knows about one ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaldschmidtReport {
    /// The Waldschmidt constant, exact.
    pub alpha_hat: BigRational,
    /// `alpha(I)`, the least degree of a generator.
    pub alpha: u32,
    /// The fractional chromatic number when it is finite and defined;
    /// `None` when every generator has degree one or some generator is a
    /// single variable.
    pub chi_star: Option<BigRational>,
    /// The big height `e`.
    pub big_height: usize,
    /// `(alpha(I) + e - 1)/e`.
    pub chudnovsky_bound: BigRational,
    /// An optimal point of the covering program.
    pub primal_witness: Vec<BigRational>,
    /// A matching optimal point of the dual program.
    pub dual_witness: Vec<BigRational>,
    /// The least common multiple of the denominators of the primal witness:
    /// `alpha(I^(b))/b` equals `alpha_hat` exactly for this `b`.
    pub lcm_denominator: BigInt,
}

/// The covering linear program of a decomposition.
pub fn cover_program(decomposition: &Decomposition) -> LinearProgram {
    let a = decomposition.constraint_matrix();
    let rows: Vec<Vec<BigRational>> = (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .map(|&e| BigRational::from_integer(BigInt::from(e)))
                .collect()
        })
        .collect();
    let ones_r = vec![BigRational::one(); a.rows()];
    let ones_n = vec![BigRational::one(); a.cols()];
    LinearProgram::minimize(rows, ones_r, ones_n).expect("cover program dimensions agree")
}

/// The maximal-independent-set program whose value is the fractional
/// chromatic number: maximize `1.w` subject to `B'^T w <= 1`, `w >= 0`,
/// one constraint per maximal independent set.
pub fn independence_program(decomposition: &Decomposition) -> LinearProgram {
    let b = decomposition.independence_matrix();
    // rows of B'^T = columns of B'
    let rows: Vec<Vec<BigRational>> = (0..b.cols())
        .map(|j| {
            (0..b.rows())
                .map(|i| BigRational::from_integer(BigInt::from(b.get(i, j))))
                .collect()
        })
        .collect();
    let ones_s = vec![BigRational::one(); b.cols()];
    let ones_n = vec![BigRational::one(); b.rows()];
    LinearProgram::maximize(rows, ones_s, ones_n).expect("independence program dimensions agree")
}

fn solve_cover(decomposition: &Decomposition) -> LpSolution {
    solve_lp(&cover_program(decomposition)).expect_optimal("covering program")
}

/// The Waldschmidt constant of `ideal`, exact.
pub fn waldschmidt_constant(ideal: &SquarefreeIdeal) -> Result<BigRational, Error> {
    let d = minimal_primes(ideal)?;
    Ok(waldschmidt_constant_from(&d))
}

/// The Waldschmidt constant from an existing decomposition.
pub fn waldschmidt_constant_from(decomposition: &Decomposition) -> BigRational {
    solve_cover(decomposition).value
}

/// The fractional chromatic number of the hypergraph of `ideal`.
///
/// Fails with [`Error::NotApplicable`] when no generator has degree at
/// least two (no non-trivial edge, so the invariant says nothing).
pub fn fractional_chromatic_number(ideal: &SquarefreeIdeal) -> Result<ChiStar, Error> {
    if !ideal.has_nontrivial_edge() {
        return Err(Error::NotApplicable);
    }
    let d = minimal_primes(ideal)?;
    Ok(fractional_chromatic_number_from(&d))
}

/// The fractional chromatic number from an existing decomposition.
pub fn fractional_chromatic_number_from(decomposition: &Decomposition) -> ChiStar {
    match solve_lp(&independence_program(decomposition)) {
        LpResult::Optimal(s) => ChiStar::Finite(s.value),
        // a variable constrained by no maximal independent set: some edge is
        // a single vertex and the program is unbounded
        LpResult::Unbounded => ChiStar::Infinite,
        LpResult::Infeasible => unreachable!("w = 0 is always feasible"),
    }
}

/// Both sides of the identity `alpha-hat(I) = chi*/(chi* - 1)`, computed by
/// two separate solves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiStarIdentity {
    pub alpha_hat: BigRational,
    pub chi_star: ChiStar,
    /// `chi*/(chi* - 1)`, with the convention that an infinite `chi*` gives
    /// exactly 1 (the value the finite expression tends to).
    pub rhs: BigRational,
    pub equal: bool,
}

/// Checks `alpha-hat(I) = chi*/(chi* - 1)` exactly.
///
/// Fails with [`Error::NotApplicable`] when the hypergraph has no
/// non-trivial edge.
pub fn check_chi_star_identity(ideal: &SquarefreeIdeal) -> Result<ChiStarIdentity, Error> {
    if !ideal.has_nontrivial_edge() {
        return Err(Error::NotApplicable);
    }
    let d = minimal_primes(ideal)?;
    let alpha_hat = waldschmidt_constant_from(&d);
    let chi_star = fractional_chromatic_number_from(&d);
    let rhs = match &chi_star {
        ChiStar::Finite(q) => {
            debug_assert!(q > &BigRational::one());
            q / (q - BigRational::one())
        }
        ChiStar::Infinite => BigRational::one(),
    };
    let equal = alpha_hat == rhs;
    Ok(ChiStarIdentity { alpha_hat, chi_star, rhs, equal })
}

/// The Chudnovsky-type lower bound `(alpha(I) + e - 1)/e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChudnovskyCheck {
    pub alpha_hat: BigRational,
    pub bound: BigRational,
    pub holds: bool,
    /// Exact equality, not closeness.
    pub tight: bool,
}

pub fn chudnovsky_check(ideal: &SquarefreeIdeal) -> Result<ChudnovskyCheck, Error> {
    let d = minimal_primes(ideal)?;
    Ok(chudnovsky_check_from(&d))
}

pub fn chudnovsky_check_from(decomposition: &Decomposition) -> ChudnovskyCheck {
    let alpha_hat = waldschmidt_constant_from(decomposition);
    let bound = chudnovsky_bound(decomposition);
    let holds = alpha_hat >= bound;
    let tight = alpha_hat == bound;
    ChudnovskyCheck { alpha_hat, bound, holds, tight }
}

fn chudnovsky_bound(decomposition: &Decomposition) -> BigRational {
    let alpha = decomposition.ideal().min_degree();
    let e = decomposition.big_height();
    BigRational::new(
        BigInt::from(u64::from(alpha) + e as u64 - 1),
        BigInt::from(e as u64),
    )
}

/// The chromatic/clique sandwich for an edge ideal of a graph:
/// `chi/(chi - 1) <= alpha-hat <= omega/(omega - 1)`, together with the
/// refinement `chi/(chi - 1) >= (e + 1)/e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphBounds {
    pub chromatic_number: u32,
    pub clique_number: u32,
    pub lower: BigRational,
    pub upper: BigRational,
    pub alpha_hat: BigRational,
    pub sandwich_holds: bool,
    pub refinement_holds: bool,
}

/// Exact chromatic and clique numbers and the resulting bounds.
///
/// Fails with [`Error::NotAGraph`] unless every generator has degree two.
/// Intended for graphs of up to roughly twenty vertices.
pub fn graph_bounds(ideal: &SquarefreeIdeal) -> Result<GraphBounds, Error> {
    let g = SimpleGraph::from_ideal(ideal)?;
    let chi = g.chromatic_number();
    let omega = g.clique_number();
    let d = minimal_primes(ideal)?;
    let alpha_hat = waldschmidt_constant_from(&d);
    let lower = over_one_less(chi);
    let upper = over_one_less(omega);
    let e = d.big_height() as u64;
    let refinement = BigRational::new(BigInt::from(e + 1), BigInt::from(e));
    Ok(GraphBounds {
        chromatic_number: chi,
        clique_number: omega,
        sandwich_holds: lower <= alpha_hat && alpha_hat <= upper,
        refinement_holds: lower >= refinement,
        lower,
        upper,
        alpha_hat,
    })
}

/// `k/(k - 1)` for an integer `k >= 2`.
fn over_one_less(k: u32) -> BigRational {
    BigRational::new(BigInt::from(k), BigInt::from(k - 1))
}

/// Both routes to the Waldschmidt constant of a sum of ideals on disjoint
/// variables: directly, and as `min(alpha-hat(I), alpha-hat(J))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointSumCheck {
    pub direct: BigRational,
    pub via_min: BigRational,
    pub equal: bool,
}

/// Requires `i` and `j` to share a context but use disjoint variables.
pub fn disjoint_sum_rule(
    i: &SquarefreeIdeal,
    j: &SquarefreeIdeal,
) -> Result<DisjointSumCheck, Error> {
    check_same_context(i.context(), j.context())?;
    let si = i.ideal().support();
    let sj = j.ideal().support();
    if si.iter().any(|v| sj.contains(v)) {
        return Err(Error::Disjointness);
    }
    let mut gens = i.generators().to_vec();
    gens.extend_from_slice(j.generators());
    let sum = SquarefreeIdeal::from_ideal(MonomialIdeal::new(i.context(), gens)?)?;
    let direct = waldschmidt_constant(&sum)?;
    let via_min = waldschmidt_constant(i)?.min(waldschmidt_constant(j)?);
    let equal = direct == via_min;
    Ok(DisjointSumCheck { direct, via_min, equal })
}

/// The full report for one ideal: constant, witnesses, bounds.
pub fn waldschmidt_report(ideal: &SquarefreeIdeal) -> Result<WaldschmidtReport, Error> {
    let d = minimal_primes(ideal)?;
    Ok(waldschmidt_report_from(&d))
}

pub fn waldschmidt_report_from(decomposition: &Decomposition) -> WaldschmidtReport {
    let solution = solve_cover(decomposition);
    let ideal = decomposition.ideal();
    let alpha = ideal.min_degree();
    let big_height = decomposition.big_height();
    let chudnovsky = chudnovsky_bound(decomposition);
    let chi_star = if ideal.has_nontrivial_edge() {
        match fractional_chromatic_number_from(decomposition) {
            ChiStar::Finite(v) => Some(v),
            ChiStar::Infinite => None,
        }
    } else {
        None
    };
    let lcm_denominator = solution
        .primal
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    debug_assert!(lcm_denominator.is_positive());
    WaldschmidtReport {
        alpha_hat: solution.value,
        alpha,
        chi_star,
        big_height,
        chudnovsky_bound: chudnovsky,
        primal_witness: solution.primal,
        dual_witness: solution.dual,
        lcm_denominator,
    }
}
