//! Minimal primary decomposition of squarefree monomial ideals.
//!
//! The minimal primes of a squarefree ideal are exactly the minimal vertex
//! covers of its hypergraph; their complements are the maximal independent
//! sets. The decomposition also carries the 0/1 matrices that feed the
//! linear programs: the cover constraint matrix `A` (one row per prime) and
//! the independence matrix `B' = (J - A)^T` (one column per maximal
//! independent set), where `J` is the all-ones matrix.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ideal::{SquarefreeIdeal, VariableContext};
use crate::Error;

/// Default cap on the number of enumerated covers before aborting.
pub const DEFAULT_COVER_CAP: usize = 100_000;

/// A monomial prime ideal generated by a set of variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimeSupport {
    vars: Vec<usize>,
    ctx: Arc<VariableContext>,
}

impl PrimeSupport {
    /// Builds a prime from a non-empty set of variable indices.
    pub fn new(ctx: &Arc<VariableContext>, mut vars: Vec<usize>) -> Result<Self, Error> {
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(Error::InvalidParameter("prime support must be non-empty".into()));
        }
        if vars.iter().any(|&v| v >= ctx.len()) {
            return Err(Error::ContextMismatch);
        }
        Ok(PrimeSupport { vars, ctx: Arc::clone(ctx) })
    }

    /// The variable indices, sorted ascending.
    pub fn variables(&self) -> &[usize] {
        &self.vars
    }

    /// The height of the prime, i.e. the number of variables.
    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn contains(&self, var: usize) -> bool {
        self.vars.binary_search(&var).is_ok()
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.ctx.name(v))?;
        }
        write!(f, ")")
    }
}

/// A 0/1 matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl ConstraintMatrix {
    fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(u8::from(f(i, j)));
            }
        }
        ConstraintMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.cols + j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

/// The minimal primary decomposition `I = P_1 ∩ ... ∩ P_s` of a squarefree
/// monomial ideal, with the primes in a deterministic order (height first,
/// then lexicographic on the sorted variable lists).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    ideal: SquarefreeIdeal,
    primes: Vec<PrimeSupport>,
}

impl Decomposition {
    pub fn ideal(&self) -> &SquarefreeIdeal {
        &self.ideal
    }

    pub fn primes(&self) -> &[PrimeSupport] {
        &self.primes
    }

    pub fn num_primes(&self) -> usize {
        self.primes.len()
    }

    /// The big height: the largest height among the minimal primes.
    pub fn big_height(&self) -> usize {
        self.primes.iter().map(PrimeSupport::height).max().unwrap_or(0)
    }

    /// The maximal independent sets of the hypergraph, as complements of the
    /// primes, in the same order.
    pub fn maximal_independent_sets(&self) -> Vec<Vec<usize>> {
        let n = self.ideal.context().len();
        self.primes
            .iter()
            .map(|p| (0..n).filter(|&v| !p.contains(v)).collect())
            .collect()
    }

    /// The `s x n` cover constraint matrix: `A[i][j] = 1` iff variable `j`
    /// lies in prime `i`. Every row has at least one 1.
    pub fn constraint_matrix(&self) -> ConstraintMatrix {
        let n = self.ideal.context().len();
        ConstraintMatrix::from_fn(self.primes.len(), n, |i, j| self.primes[i].contains(j))
    }

    /// The `n x s` independence matrix `B'`: `B'[i][j] = 1` iff variable `i`
    /// lies in the `j`-th maximal independent set. Satisfies
    /// `B' = (J - A)^T` entrywise, `J` the all-ones matrix.
    pub fn independence_matrix(&self) -> ConstraintMatrix {
        let n = self.ideal.context().len();
        ConstraintMatrix::from_fn(n, self.primes.len(), |i, j| !self.primes[j].contains(i))
    }
}

/// Computes all minimal vertex covers of the hypergraph of `ideal` with the
/// default enumeration cap.
pub fn minimal_primes(ideal: &SquarefreeIdeal) -> Result<Decomposition, Error> {
    minimal_primes_capped(ideal, DEFAULT_COVER_CAP)
}

/// As [`minimal_primes`], aborting with [`Error::CoverCapExceeded`] once more
/// than `cap` candidate covers have been enumerated.
pub fn minimal_primes_capped(ideal: &SquarefreeIdeal, cap: usize) -> Result<Decomposition, Error> {
    let n = ideal.context().len();
    let edges: Vec<Vec<usize>> = ideal.generators().iter().map(|g| g.support()).collect();

    let mut covers: Vec<Vec<usize>> = Vec::new();
    let mut in_cover = vec![false; n];
    let mut excluded = vec![false; n];
    enumerate_covers(&edges, &mut in_cover, &mut excluded, &mut covers, cap)?;

    covers.sort();
    covers.dedup();
    // the branching can emit covers with redundant vertices; keep only the
    // inclusion-minimal ones
    let mut minimal: Vec<Vec<usize>> = Vec::with_capacity(covers.len());
    for c in &covers {
        if !covers.iter().any(|d| d.len() < c.len() && is_subset(d, c)) {
            minimal.push(c.clone());
        }
    }
    minimal.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let ctx = ideal.context();
    let primes = minimal
        .into_iter()
        .map(|vars| PrimeSupport::new(ctx, vars))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Decomposition { ideal: ideal.clone(), primes })
}

/// Two-pointer subset test on sorted index lists.
fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    'outer: for &x in small {
        for &y in it.by_ref() {
            match y.cmp(&x) {
                core::cmp::Ordering::Less => continue,
                core::cmp::Ordering::Equal => continue 'outer,
                core::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

/// Branches on the vertices of the first uncovered edge. When vertex `v_i`
/// is tried, the earlier vertices `v_1..v_{i-1}` of that edge are excluded
/// from the rest of the subtree, so every minimal cover is produced at least
/// once and few non-minimal ones appear.
fn enumerate_covers(
    edges: &[Vec<usize>],
    in_cover: &mut Vec<bool>,
    excluded: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<(), Error> {
    let uncovered = edges
        .iter()
        .find(|e| !e.iter().any(|&v| in_cover[v]));
    let edge = match uncovered {
        None => {
            if out.len() >= cap {
                return Err(Error::CoverCapExceeded { cap });
            }
            let cover: Vec<usize> = (0..in_cover.len()).filter(|&v| in_cover[v]).collect();
            out.push(cover);
            return Ok(());
        }
        Some(e) => e,
    };

    let mut newly_excluded: Vec<usize> = Vec::new();
    for &v in edge {
        if excluded[v] {
            continue;
        }
        in_cover[v] = true;
        enumerate_covers(edges, in_cover, excluded, out, cap)?;
        in_cover[v] = false;
        excluded[v] = true;
        newly_excluded.push(v);
    }
    for v in newly_excluded {
        excluded[v] = false;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Monomial;

    fn ctx(n: usize) -> Arc<VariableContext> {
        VariableContext::with_default_names(n).unwrap()
    }

    fn ideal_from_edges(ctx: &Arc<VariableContext>, edges: &[&[usize]]) -> SquarefreeIdeal {
        let edges: Vec<Vec<usize>> = edges.iter().map(|e| e.to_vec()).collect();
        SquarefreeIdeal::from_hypergraph(ctx, &edges).unwrap()
    }

    fn cover_sets(d: &Decomposition) -> Vec<Vec<usize>> {
        d.primes().iter().map(|p| p.variables().to_vec()).collect()
    }

    #[test]
    fn complete_bipartite_two_two() {
        // K_{2,2} on x1 x2 | x3 x4: the two sides are the minimal covers
        let c = ctx(4);
        let i = ideal_from_edges(&c, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]);
        let d = minimal_primes(&i).unwrap();
        assert_eq!(cover_sets(&d), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn monomial_star_primes() {
        // n = 3 star: pairs (x_i, x3) plus (x0, x1, x2)
        let names = (0..4).map(|i| alloc::format!("x{i}")).collect();
        let c = VariableContext::new(names).unwrap();
        let gens = vec![
            Monomial::squarefree(&c, &[0, 3]).unwrap(),
            Monomial::squarefree(&c, &[1, 3]).unwrap(),
            Monomial::squarefree(&c, &[2, 3]).unwrap(),
            Monomial::squarefree(&c, &[0, 1, 2]).unwrap(),
        ];
        let i = SquarefreeIdeal::new(&c, gens).unwrap();
        let d = minimal_primes(&i).unwrap();
        assert_eq!(
            cover_sets(&d),
            vec![vec![0, 3], vec![1, 3], vec![2, 3], vec![0, 1, 2]]
        );
        assert_eq!(d.big_height(), 3);
    }

    #[test]
    fn five_cycle_covers_match_brute_force() {
        let c = ctx(5);
        let edges: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
        let i = SquarefreeIdeal::from_hypergraph(&c, &edges).unwrap();
        let d = minimal_primes(&i).unwrap();

        // oracle: scan all 2^5 subsets for inclusion-minimal covers
        let mut expected: Vec<Vec<usize>> = Vec::new();
        for mask in 0u32..32 {
            let set: Vec<usize> = (0..5).filter(|&v| mask >> v & 1 == 1).collect();
            let covers = edges.iter().all(|e| e.iter().any(|v| set.contains(v)));
            if covers {
                expected.push(set);
            }
        }
        let minimal: Vec<Vec<usize>> = expected
            .iter()
            .filter(|c| !expected.iter().any(|d| d.len() < c.len() && is_subset(d, c)))
            .cloned()
            .collect();
        assert_eq!(minimal.len(), 5);
        assert!(minimal.iter().all(|c| c.len() == 3));

        let mut got = cover_sets(&d);
        let mut want = minimal;
        got.sort();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(d.big_height(), 3);
    }

    #[test]
    fn maximal_independent_sets_are_complements() {
        let c = ctx(4);
        let i = ideal_from_edges(&c, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]);
        let d = minimal_primes(&i).unwrap();
        assert_eq!(d.maximal_independent_sets(), vec![vec![2, 3], vec![0, 1]]);
    }

    #[test]
    fn single_edge_matrices() {
        let c = ctx(2);
        let i = ideal_from_edges(&c, &[&[0, 1]]);
        let d = minimal_primes(&i).unwrap();
        let a = d.constraint_matrix();
        assert_eq!(a.row_vecs(), vec![vec![1, 0], vec![0, 1]]);
        let b = d.independence_matrix();
        assert_eq!(b.row_vecs(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn one_big_edge_gives_identity_matrix() {
        let c = ctx(3);
        let i = ideal_from_edges(&c, &[&[0, 1, 2]]);
        let d = minimal_primes(&i).unwrap();
        let a = d.constraint_matrix();
        assert_eq!(
            a.row_vecs(),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
    }

    #[test]
    fn star_constraint_matrix_rows() {
        // n = 2 star: rows are the indicators of {x0,x2}, {x1,x2}, {x0,x1}
        let names = (0..3).map(|i| alloc::format!("x{i}")).collect();
        let c = VariableContext::new(names).unwrap();
        let gens = vec![
            Monomial::squarefree(&c, &[0, 2]).unwrap(),
            Monomial::squarefree(&c, &[1, 2]).unwrap(),
            Monomial::squarefree(&c, &[0, 1]).unwrap(),
        ];
        let i = SquarefreeIdeal::new(&c, gens).unwrap();
        let d = minimal_primes(&i).unwrap();
        let mut rows = d.constraint_matrix().row_vecs();
        rows.sort();
        assert_eq!(rows, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn matrix_identity_b_equals_complement_transpose() {
        let c = ctx(5);
        let edges: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
        let i = SquarefreeIdeal::from_hypergraph(&c, &edges).unwrap();
        let d = minimal_primes(&i).unwrap();
        let a = d.constraint_matrix();
        let b = d.independence_matrix();
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                assert_eq!(b.get(i, j), 1 - a.get(j, i));
            }
        }
    }

    #[test]
    fn cap_aborts_with_diagnostic() {
        let c = ctx(6);
        let edges: Vec<Vec<usize>> = vec![vec![0, 1], vec![2, 3], vec![4, 5]];
        let i = SquarefreeIdeal::from_hypergraph(&c, &edges).unwrap();
        assert_eq!(
            minimal_primes_capped(&i, 3).unwrap_err(),
            Error::CoverCapExceeded { cap: 3 }
        );
        assert_eq!(minimal_primes_capped(&i, 8).unwrap().num_primes(), 8);
    }
}
