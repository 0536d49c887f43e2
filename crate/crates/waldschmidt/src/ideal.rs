//! Monomials, monomial ideals, and the squarefree-ideal/hypergraph
//! correspondence.
//!
//! Ideals are stored as canonical minimal generating sets: generators are
//! deduplicated, divisibility-pruned, and sorted in graded lexicographic
//! order (total degree first, then exponent vectors). Every value is
//! immutable after construction, so everything here is safe to share across
//! threads.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::decomposition::PrimeSupport;
use crate::Error;

/// A fixed, ordered list of distinct variable names.
///
/// Names are cosmetic; all algorithms work with the indices `0..n`. The
/// order is fixed for the lifetime of the context.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VariableContext {
    names: Vec<String>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl VariableContext {
    /// Builds a context from explicit names. The names must be non-empty
    /// identifiers, pairwise distinct.
    pub fn new(names: Vec<String>) -> Result<Arc<Self>, Error> {
        if names.is_empty() {
            return Err(Error::InvalidParameter("context needs at least one variable".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidParameter(format!("invalid variable name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidParameter(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(Arc::new(VariableContext { names }))
    }

    /// Builds a context with the default names `x1, ..., xn`.
    pub fn with_default_names(n: usize) -> Result<Arc<Self>, Error> {
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        Self::new(names)
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Name of variable `i`.
    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of the variable called `name`, if any.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn same_context(a: &Arc<VariableContext>, b: &Arc<VariableContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}` over a fixed context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    ctx: Arc<VariableContext>,
    exponents: Vec<u32>,
    degree: u32,
}

fn total_degree(exponents: &[u32]) -> u32 {
    let d: u64 = exponents.iter().map(|&e| u64::from(e)).sum();
    u32::try_from(d).expect("monomial degree overflow")
}

impl Monomial {
    /// Builds a monomial from its exponent vector, which must have one entry
    /// per context variable.
    pub fn new(ctx: &Arc<VariableContext>, exponents: Vec<u32>) -> Result<Self, Error> {
        if exponents.len() != ctx.len() {
            return Err(Error::ContextMismatch);
        }
        let degree = total_degree(&exponents);
        Ok(Monomial { ctx: Arc::clone(ctx), exponents, degree })
    }

    /// The squarefree monomial supported on the given variables.
    pub fn squarefree(ctx: &Arc<VariableContext>, vars: &[usize]) -> Result<Self, Error> {
        let mut exponents = vec![0u32; ctx.len()];
        for &v in vars {
            if v >= ctx.len() {
                return Err(Error::ContextMismatch);
            }
            exponents[v] = 1;
        }
        let degree = total_degree(&exponents);
        Ok(Monomial { ctx: Arc::clone(ctx), exponents, degree })
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    /// Total degree, the sum of all exponents.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// True when every exponent is 0 or 1.
    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// True iff `self` divides `other`, i.e. the exponents are
    /// componentwise smaller or equal.
    pub fn divides(&self, other: &Monomial) -> Result<bool, Error> {
        if !same_context(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(self
            .exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b))
    }

    /// Least common multiple (componentwise maximum of exponents).
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial, Error> {
        if !same_context(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        let exponents: Vec<u32> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let degree = total_degree(&exponents);
        Ok(Monomial { ctx: Arc::clone(&self.ctx), exponents, degree })
    }

    /// Product (componentwise sum of exponents).
    pub fn mul(&self, other: &Monomial) -> Result<Monomial, Error> {
        if !same_context(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        let exponents: Vec<u32> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        let degree = total_degree(&exponents);
        Ok(Monomial { ctx: Arc::clone(&self.ctx), exponents, degree })
    }

    fn graded_lex_key(&self) -> (u32, &[u32]) {
        (self.degree, &self.exponents)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order: degree first, then the exponent vector.
    /// Monomials from different contexts fall back to comparing names so the
    /// order stays total.
    fn cmp(&self, other: &Self) -> Ordering {
        self.graded_lex_key()
            .cmp(&other.graded_lex_key())
            .then_with(|| self.ctx.names().cmp(other.ctx.names()))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.ctx.name(i))?;
            } else {
                write!(f, "{}^{}", self.ctx.name(i), e)?;
            }
        }
        Ok(())
    }
}

/// Returns the divisibility-minimal subset of `gens`, deduplicated and in
/// graded lexicographic order.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // a proper divisor has strictly smaller degree and sorts before g
        let redundant = kept
            .iter()
            .take_while(|h| h.degree() < g.degree())
            .any(|h| h.divides(&g).expect("checked context"));
        if !redundant {
            kept.push(g);
        }
    }
    kept
}

/// A monomial ideal, stored as its unique minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ctx: Arc<VariableContext>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Canonicalizes a raw generator list: deduplicates, drops generators
    /// divisible by another, sorts. The result is independent of the input
    /// order.
    ///
    /// Fails with [`Error::ZeroIdeal`] on an empty list, [`Error::UnitIdeal`]
    /// if the monomial `1` appears, and [`Error::ContextMismatch`] if the
    /// generators do not all live in `ctx`.
    pub fn new(ctx: &Arc<VariableContext>, raw: Vec<Monomial>) -> Result<Self, Error> {
        if raw.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for g in &raw {
            if !same_context(&g.ctx, ctx) {
                return Err(Error::ContextMismatch);
            }
            if g.degree() == 0 {
                return Err(Error::UnitIdeal);
            }
        }
        let gens = minimalize(raw);
        Ok(MonomialIdeal { ctx: Arc::clone(ctx), gens })
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    /// The minimal generators, in graded lexicographic order.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// `alpha(I)`: the least degree of a generator.
    pub fn min_degree(&self) -> u32 {
        self.gens[0].degree()
    }

    /// `omega(I)`: the largest degree of a minimal generator.
    pub fn max_degree(&self) -> u32 {
        self.gens[self.gens.len() - 1].degree()
    }

    /// True iff every generator is squarefree.
    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Monomial membership: some generator divides `f`.
    pub fn contains(&self, f: &Monomial) -> Result<bool, Error> {
        if !same_context(&self.ctx, &f.ctx) {
            return Err(Error::ContextMismatch);
        }
        for g in &self.gens {
            if g.degree() > f.degree() {
                break;
            }
            if g.divides(f)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The union of the variable supports of all generators.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ctx.len()];
        for g in &self.gens {
            for v in g.support() {
                used[v] = true;
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, &u)| u)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// A hypergraph view of a squarefree ideal: edges are the supports of the
/// minimal generators, listed in the canonical generator order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    pub vertex_count: usize,
    pub edges: Vec<Vec<usize>>,
}

/// A monomial ideal all of whose generators are squarefree; equivalently,
/// the edge ideal of the hypergraph whose edges are the generator supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeIdeal(MonomialIdeal);

impl SquarefreeIdeal {
    pub fn new(ctx: &Arc<VariableContext>, raw: Vec<Monomial>) -> Result<Self, Error> {
        Self::from_ideal(MonomialIdeal::new(ctx, raw)?)
    }

    /// Checks squarefreeness of an already canonical ideal.
    pub fn from_ideal(ideal: MonomialIdeal) -> Result<Self, Error> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        Ok(SquarefreeIdeal(ideal))
    }

    /// The edge ideal of a hypergraph given by its edge list.
    pub fn from_hypergraph(ctx: &Arc<VariableContext>, edges: &[Vec<usize>]) -> Result<Self, Error> {
        let gens = edges
            .iter()
            .map(|e| Monomial::squarefree(ctx, e))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ctx, gens)
    }

    /// The hypergraph whose edge ideal this is. Round-trips with
    /// [`SquarefreeIdeal::from_hypergraph`].
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph {
            vertex_count: self.0.ctx.len(),
            edges: self.0.gens.iter().map(Monomial::support).collect(),
        }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.0
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        self.0.context()
    }

    pub fn generators(&self) -> &[Monomial] {
        self.0.generators()
    }

    pub fn min_degree(&self) -> u32 {
        self.0.min_degree()
    }

    pub fn max_degree(&self) -> u32 {
        self.0.max_degree()
    }

    /// True when some generator has degree at least two, i.e. the hypergraph
    /// has a non-trivial edge.
    pub fn has_nontrivial_edge(&self) -> bool {
        self.0.gens.iter().any(|g| g.degree() >= 2)
    }

    /// The Alexander dual: one generator per minimal prime, the product of
    /// its variables. `primes` must be the minimal primary decomposition of
    /// this ideal, as produced by [`crate::decomposition::minimal_primes`].
    pub fn alexander_dual(&self, primes: &[PrimeSupport]) -> Result<SquarefreeIdeal, Error> {
        let ctx = self.context();
        let gens = primes
            .iter()
            .map(|p| {
                if !same_context(p.context(), ctx) {
                    return Err(Error::ContextMismatch);
                }
                Monomial::squarefree(ctx, p.variables())
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ctx, gens)
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn check_same_context(a: &Arc<VariableContext>, b: &Arc<VariableContext>) -> Result<(), Error> {
    if same_context(a, b) {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}
