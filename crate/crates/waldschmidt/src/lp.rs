//! Exact linear and integer programming over arbitrary-precision rationals.
//!
//! The simplex solver works on a dense tableau, pivots with Bland's rule
//! (anti-cycling, so it always terminates), and uses a full phase-one with
//! one artificial variable per row. Keeping the artificial columns around
//! makes the basis inverse readable from the final tableau, which is how the
//! dual certificate is extracted. Every optimal solve carries a primal point
//! and a dual point whose objective values agree exactly.
//!
//! The integer solver is a depth-first branch-and-bound over LP relaxations,
//! specialized to the covering problems this crate needs: minimize the sum
//! of non-negative integer variables subject to `A y >= rhs` with a 0/1
//! matrix `A`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// Optimization direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// Per-row comparison operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelOp {
    Le,
    Ge,
    Eq,
}

/// A linear program in one of the two standard shapes:
///
/// * minimize `objective . y` subject to `M y >= rhs`, `y >= 0`;
/// * maximize `objective . y` subject to `M y <= rhs`, `y >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    sense: Sense,
    matrix: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    objective: Vec<BigRational>,
}

impl LinearProgram {
    fn validated(
        sense: Sense,
        matrix: Vec<Vec<BigRational>>,
        rhs: Vec<BigRational>,
        objective: Vec<BigRational>,
    ) -> Result<Self, Error> {
        if matrix.len() != rhs.len() {
            return Err(Error::MalformedProgram(format!(
                "{} rows but {} right-hand sides",
                matrix.len(),
                rhs.len()
            )));
        }
        for row in &matrix {
            if row.len() != objective.len() {
                return Err(Error::MalformedProgram(format!(
                    "row of width {} in a program with {} variables",
                    row.len(),
                    objective.len()
                )));
            }
        }
        if objective.is_empty() {
            return Err(Error::MalformedProgram("program has no variables".into()));
        }
        Ok(LinearProgram { sense, matrix, rhs, objective })
    }

    /// `minimize objective . y` subject to `matrix y >= rhs`, `y >= 0`.
    pub fn minimize(
        matrix: Vec<Vec<BigRational>>,
        rhs: Vec<BigRational>,
        objective: Vec<BigRational>,
    ) -> Result<Self, Error> {
        Self::validated(Sense::Minimize, matrix, rhs, objective)
    }

    /// `maximize objective . y` subject to `matrix y <= rhs`, `y >= 0`.
    pub fn maximize(
        matrix: Vec<Vec<BigRational>>,
        rhs: Vec<BigRational>,
        objective: Vec<BigRational>,
    ) -> Result<Self, Error> {
        Self::validated(Sense::Maximize, matrix, rhs, objective)
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.matrix.len()
    }

    fn row_op(&self) -> RelOp {
        match self.sense {
            Sense::Minimize => RelOp::Ge,
            Sense::Maximize => RelOp::Le,
        }
    }
}

/// Outcome of a solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LpResult {
    /// The optimal solution, panicking otherwise. For programs known to be
    /// feasible and bounded by construction.
    pub fn expect_optimal(self, what: &str) -> LpSolution {
        match self {
            LpResult::Optimal(s) => s,
            other => panic!("{what}: expected an optimum, got {other:?}"),
        }
    }
}

/// An exact optimum with both certificates.
///
/// For a minimize-shape program, `dual` is a feasible point of the
/// associated maximization dual (`M^T x <= objective`, `x >= 0`), and vice
/// versa; in both cases `objective . primal = rhs . dual = value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: BigRational,
    pub primal: Vec<BigRational>,
    pub dual: Vec<BigRational>,
}

impl LpSolution {
    /// Exact verification of the strong-duality certificate: primal
    /// feasibility, dual feasibility, and equality of the two objective
    /// values. Any failure is a solver bug.
    pub fn certify(&self, program: &LinearProgram) -> Result<(), Error> {
        let fail = |msg: alloc::string::String| Err(Error::CertificateInvalid(msg));
        if self.primal.len() != program.num_vars() || self.dual.len() != program.num_constraints() {
            return fail("certificate dimensions disagree with program".into());
        }
        if self.primal.iter().any(|v| v.is_negative()) {
            return fail("primal point has a negative coordinate".into());
        }
        if self.dual.iter().any(|v| v.is_negative()) {
            return fail("dual point has a negative coordinate".into());
        }
        for (i, row) in program.matrix.iter().enumerate() {
            let lhs = dot(row, &self.primal);
            let ok = match program.sense {
                Sense::Minimize => lhs >= program.rhs[i],
                Sense::Maximize => lhs <= program.rhs[i],
            };
            if !ok {
                return fail(format!("primal point violates constraint {i}"));
            }
        }
        for j in 0..program.num_vars() {
            let mut lhs = BigRational::zero();
            for (i, row) in program.matrix.iter().enumerate() {
                lhs += &row[j] * &self.dual[i];
            }
            let ok = match program.sense {
                Sense::Minimize => lhs <= program.objective[j],
                Sense::Maximize => lhs >= program.objective[j],
            };
            if !ok {
                return fail(format!("dual point violates column constraint {j}"));
            }
        }
        let primal_value = dot(&program.objective, &self.primal);
        let dual_value = dot(&program.rhs, &self.dual);
        if primal_value != self.value || dual_value != self.value {
            return fail(format!(
                "objective values disagree: primal {primal_value}, dual {dual_value}, reported {}",
                self.value
            ));
        }
        Ok(())
    }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).fold(BigRational::zero(), |acc, t| acc + t)
}

/// Solves a linear program exactly.
pub fn solve_lp(program: &LinearProgram) -> LpResult {
    let op = program.row_op();
    let rows: Vec<(Vec<BigRational>, RelOp, BigRational)> = program
        .matrix
        .iter()
        .zip(&program.rhs)
        .map(|(row, b)| (row.clone(), op, b.clone()))
        .collect();
    let objective: Vec<BigRational> = match program.sense {
        Sense::Minimize => program.objective.clone(),
        Sense::Maximize => program.objective.iter().map(|c| -c).collect(),
    };
    let outcome = simplex_minimize(&objective, &rows);
    let result = match outcome {
        SimplexOutcome::Infeasible => LpResult::Infeasible,
        SimplexOutcome::Unbounded => LpResult::Unbounded,
        SimplexOutcome::Optimal { primal, multipliers, .. } => {
            let (value, dual) = match program.sense {
                Sense::Minimize => (dot(&program.objective, &primal), multipliers),
                Sense::Maximize => (
                    dot(&program.objective, &primal),
                    multipliers.into_iter().map(|m| -m).collect(),
                ),
            };
            LpResult::Optimal(LpSolution { value, primal, dual })
        }
    };
    #[cfg(debug_assertions)]
    if let LpResult::Optimal(s) = &result {
        if let Err(e) = s.certify(program) {
            panic!("solver produced an invalid certificate: {e}");
        }
    }
    result
}

pub(crate) enum SimplexOutcome {
    Optimal {
        /// Optimal value of the minimization.
        value: BigRational,
        primal: Vec<BigRational>,
        /// Row multipliers for the rows exactly as given: for a minimization
        /// they satisfy `M^T multipliers <= objective` componentwise with
        /// `multipliers[i] >= 0` on `Ge` rows and `<= 0` on `Le` rows, and
        /// `rhs . multipliers = value`.
        multipliers: Vec<BigRational>,
    },
    Infeasible,
    Unbounded,
}

/// Two-phase dense tableau simplex for
/// `minimize objective . x  subject to  rows, x >= 0`.
pub(crate) fn simplex_minimize(
    objective: &[BigRational],
    rows: &[(Vec<BigRational>, RelOp, BigRational)],
) -> SimplexOutcome {
    let n_vars = objective.len();
    let n_rows = rows.len();
    if n_rows == 0 {
        // only x >= 0 remains; minimized by zeroing every coordinate with a
        // positive cost, unbounded if any cost is negative
        if objective.iter().any(|c| c.is_negative()) {
            return SimplexOutcome::Unbounded;
        }
        return SimplexOutcome::Optimal {
            value: BigRational::zero(),
            primal: vec![BigRational::zero(); n_vars],
            multipliers: Vec::new(),
        };
    }

    // normalize to non-negative right-hand sides, tracking row flips
    let mut flip = vec![false; n_rows];
    let n_slacks = rows
        .iter()
        .filter(|(_, op, _)| *op != RelOp::Eq)
        .count();
    let n_cols = n_vars + n_slacks + n_rows; // real, slack, artificial
    let rhs_col = n_cols;

    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(n_rows);
    let mut slack_idx = 0usize;
    for (i, (coeffs, op, b)) in rows.iter().enumerate() {
        assert_eq!(coeffs.len(), n_vars, "row width disagrees with objective");
        let mut row = vec![BigRational::zero(); n_cols + 1];
        let negate = b.is_negative();
        flip[i] = negate;
        let op = if negate {
            match op {
                RelOp::Le => RelOp::Ge,
                RelOp::Ge => RelOp::Le,
                RelOp::Eq => RelOp::Eq,
            }
        } else {
            *op
        };
        for (j, c) in coeffs.iter().enumerate() {
            row[j] = if negate { -c } else { c.clone() };
        }
        if op != RelOp::Eq {
            let sign = match op {
                RelOp::Le => BigRational::one(),
                RelOp::Ge => -BigRational::one(),
                RelOp::Eq => unreachable!(),
            };
            row[n_vars + slack_idx] = sign;
            slack_idx += 1;
        }
        row[n_vars + n_slacks + i] = BigRational::one();
        row[rhs_col] = if negate { -b } else { b.clone() };
        t.push(row);
    }

    let art_col = |i: usize| n_vars + n_slacks + i;
    let mut basis: Vec<usize> = (0..n_rows).map(art_col).collect();

    // phase one: minimize the sum of the artificial variables
    let mut phase1_costs = vec![BigRational::zero(); n_cols];
    for i in 0..n_rows {
        phase1_costs[art_col(i)] = BigRational::one();
    }
    let mut obj = reduced_costs(&phase1_costs, &t, &basis);
    match run_simplex(&mut t, &mut obj, &mut basis, n_cols, |_| true) {
        PhaseEnd::Optimal => {}
        PhaseEnd::Unbounded => unreachable!("phase one objective is bounded below by zero"),
    }
    if !(-&obj[rhs_col]).is_zero() {
        return SimplexOutcome::Infeasible;
    }

    // drive artificial variables out of the basis where possible; rows where
    // that fails are redundant and stay frozen with the artificial basic at 0
    for i in 0..n_rows {
        if basis[i] >= art_col(0) {
            let pivot_col = (0..n_vars + n_slacks).find(|&j| !t[i][j].is_zero());
            if let Some(j) = pivot_col {
                pivot(&mut t, &mut obj, &mut basis, i, j);
            }
        }
    }

    // phase two: the real objective, artificial columns barred from entering
    let mut phase2_costs = vec![BigRational::zero(); n_cols];
    phase2_costs[..n_vars].clone_from_slice(objective);
    let mut obj = reduced_costs(&phase2_costs, &t, &basis);
    let allowed = |j: usize| j < n_vars + n_slacks;
    match run_simplex(&mut t, &mut obj, &mut basis, n_cols, allowed) {
        PhaseEnd::Optimal => {}
        PhaseEnd::Unbounded => return SimplexOutcome::Unbounded,
    }

    let mut primal = vec![BigRational::zero(); n_vars];
    for (i, &b) in basis.iter().enumerate() {
        if b < n_vars {
            primal[b] = t[i][rhs_col].clone();
        }
    }
    // the multiplier of standardized row i is -reduced_cost(artificial i);
    // undo the row flips to report multipliers for the rows as given
    let multipliers: Vec<BigRational> = (0..n_rows)
        .map(|i| {
            let lambda = -&obj[art_col(i)];
            if flip[i] {
                -lambda
            } else {
                lambda
            }
        })
        .collect();
    let value = dot(objective, &primal);
    SimplexOutcome::Optimal { value, primal, multipliers }
}

/// Reduced-cost row for the given cost vector and basis. Entry `n_cols`
/// holds the negated objective value so pivoting updates it uniformly.
fn reduced_costs(
    costs: &[BigRational],
    t: &[Vec<BigRational>],
    basis: &[usize],
) -> Vec<BigRational> {
    let mut obj: Vec<BigRational> = costs.to_vec();
    obj.push(BigRational::zero());
    for (i, &b) in basis.iter().enumerate() {
        if !costs[b].is_zero() {
            let w = costs[b].clone();
            for (o, v) in obj.iter_mut().zip(&t[i]) {
                *o -= &w * v;
            }
        }
    }
    obj
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

/// Bland's rule: entering column is the lowest-indexed one with a negative
/// reduced cost, leaving row is the minimum-ratio row, ties broken by the
/// smallest basic variable index. This guarantees no basis repeats.
fn run_simplex(
    t: &mut [Vec<BigRational>],
    obj: &mut [BigRational],
    basis: &mut [usize],
    n_cols: usize,
    allowed: impl Fn(usize) -> bool,
) -> PhaseEnd {
    let rhs_col = n_cols;
    #[cfg(debug_assertions)]
    let mut seen_bases: alloc::collections::BTreeSet<Vec<usize>> = alloc::collections::BTreeSet::new();
    loop {
        #[cfg(debug_assertions)]
        {
            let mut key = basis.to_vec();
            key.sort_unstable();
            assert!(seen_bases.insert(key), "Bland pivoting revisited a basis");
        }
        let entering = (0..n_cols).find(|&j| allowed(j) && obj[j].is_negative());
        let entering = match entering {
            None => return PhaseEnd::Optimal,
            Some(j) => j,
        };
        let mut leaving: Option<(usize, BigRational)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[entering].is_positive() {
                let ratio = &row[rhs_col] / &row[entering];
                let better = match &leaving {
                    None => true,
                    Some((cur, best)) => {
                        ratio < *best || (ratio == *best && basis[i] < basis[*cur])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let (row, _) = match leaving {
            None => return PhaseEnd::Unbounded,
            Some(l) => l,
        };
        pivot(t, obj, basis, row, entering);
    }
}

#[cfg(debug_assertions)]
fn assert_reduced(values: &[BigRational]) {
    use num_integer::Integer;
    for v in values {
        assert!(v.denom().is_positive(), "denominator must be positive");
        assert!(
            v.numer().gcd(v.denom()).is_one() || v.numer().is_zero(),
            "tableau entry not in lowest terms: {v}"
        );
    }
}

fn pivot(
    t: &mut [Vec<BigRational>],
    obj: &mut [BigRational],
    basis: &mut [usize],
    row: usize,
    col: usize,
) {
    let p = t[row][col].clone();
    debug_assert!(!p.is_zero());
    for v in t[row].iter_mut() {
        *v /= &p;
    }
    for i in 0..t.len() {
        if i == row || t[i][col].is_zero() {
            continue;
        }
        let w = t[i][col].clone();
        let (pivot_row, target) = if i < row {
            let (a, b) = t.split_at_mut(row);
            (&b[0], &mut a[i])
        } else {
            let (a, b) = t.split_at_mut(i);
            (&a[row], &mut b[0])
        };
        for (tv, pv) in target.iter_mut().zip(pivot_row.iter()) {
            *tv -= &w * pv;
        }
    }
    if !obj[col].is_zero() {
        let w = obj[col].clone();
        for (ov, pv) in obj.iter_mut().zip(t[row].iter()) {
            *ov -= &w * pv;
        }
    }
    basis[row] = col;
    #[cfg(debug_assertions)]
    assert_reduced(&t[row]);
}

/// Minimizes the sum of non-negative integer variables subject to
/// `matrix y >= rhs`, where `matrix` is 0/1 and `rhs` is componentwise
/// positive. Returns the exact optimum and an optimal point.
///
/// Depth-first branch-and-bound on the LP relaxation: branching always
/// splits on the lowest-indexed fractional coordinate, the floor branch
/// first, pruning against the incumbent. The initial incumbent rounds the
/// root relaxation up coordinatewise, which is feasible because the matrix
/// is non-negative.
pub fn solve_ilp_min(matrix: &[Vec<u8>], rhs: &[u32]) -> Result<(u32, Vec<u32>), Error> {
    if matrix.is_empty() {
        return Err(Error::MalformedProgram("integer program has no rows".into()));
    }
    if matrix.len() != rhs.len() {
        return Err(Error::MalformedProgram("row/rhs count mismatch".into()));
    }
    let n_vars = matrix[0].len();
    for row in matrix {
        if row.len() != n_vars {
            return Err(Error::MalformedProgram("ragged matrix".into()));
        }
        if row.iter().any(|&e| e > 1) {
            return Err(Error::MalformedProgram("matrix entries must be 0 or 1".into()));
        }
        if row.iter().all(|&e| e == 0) {
            return Err(Error::MalformedProgram("all-zero row is infeasible".into()));
        }
    }
    if rhs.contains(&0) {
        return Err(Error::MalformedProgram("right-hand sides must be positive".into()));
    }

    let base_rows: Vec<(Vec<BigRational>, RelOp, BigRational)> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            let coeffs = row.iter().map(|&e| BigRational::from_integer(BigInt::from(e))).collect();
            (coeffs, RelOp::Ge, BigRational::from_integer(BigInt::from(b)))
        })
        .collect();
    let objective = vec![BigRational::one(); n_vars];

    let root = match simplex_minimize(&objective, &base_rows) {
        SimplexOutcome::Optimal { value, primal, .. } => (value, primal),
        _ => unreachable!("covering relaxation is feasible and bounded"),
    };

    let mut best_point: Vec<u32> = root.1.iter().map(rat_ceil_u32).collect();
    let mut best_value: u32 = best_point.iter().sum();

    let mut bounds: Vec<(usize, RelOp, u32)> = Vec::new();
    branch(
        &objective,
        &base_rows,
        &mut bounds,
        &mut best_value,
        &mut best_point,
    );
    Ok((best_value, best_point))
}

fn branch(
    objective: &[BigRational],
    base_rows: &[(Vec<BigRational>, RelOp, BigRational)],
    bounds: &mut Vec<(usize, RelOp, u32)>,
    best_value: &mut u32,
    best_point: &mut Vec<u32>,
) {
    let n_vars = objective.len();
    let mut rows = base_rows.to_vec();
    for &(var, op, k) in bounds.iter() {
        let mut coeffs = vec![BigRational::zero(); n_vars];
        coeffs[var] = BigRational::one();
        rows.push((coeffs, op, BigRational::from_integer(BigInt::from(k))));
    }
    let (value, primal) = match simplex_minimize(objective, &rows) {
        SimplexOutcome::Optimal { value, primal, .. } => (value, primal),
        SimplexOutcome::Infeasible => return,
        SimplexOutcome::Unbounded => unreachable!("covering objective is bounded below"),
    };
    // integer optimum in this subtree can't beat ceil(relaxation value)
    if rat_ceil_u32(&value) >= *best_value {
        return;
    }
    let fractional = primal.iter().position(|v| !v.is_integer());
    match fractional {
        None => {
            let candidate: Vec<u32> = primal
                .iter()
                .map(|v| v.to_integer().to_u32().expect("integer point fits in u32"))
                .collect();
            let total: u32 = candidate.iter().sum();
            if total < *best_value {
                *best_value = total;
                *best_point = candidate;
            }
        }
        Some(var) => {
            let floor = rat_floor_u32(&primal[var]);
            bounds.push((var, RelOp::Le, floor));
            branch(objective, base_rows, bounds, best_value, best_point);
            bounds.pop();
            bounds.push((var, RelOp::Ge, floor + 1));
            branch(objective, base_rows, bounds, best_value, best_point);
            bounds.pop();
        }
    }
}

fn rat_floor_u32(v: &BigRational) -> u32 {
    v.floor().to_integer().to_u32().expect("value fits in u32")
}

fn rat_ceil_u32(v: &BigRational) -> u32 {
    v.ceil().to_integer().to_u32().expect("value fits in u32")
}
