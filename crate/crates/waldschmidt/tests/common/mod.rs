// each test target compiles this module separately and uses a subset of it
#![allow(dead_code)]

//! Shared test oracles and random input generators.
//!
//! Everything here recomputes invariants by brute force, independently of
//! the library's algorithms: covers by scanning all vertex subsets, symbolic
//! membership by raw exponent sums over those covers, chromatic numbers by
//! subset dynamic programming, clique numbers by scanning all subsets.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use waldschmidt::{Monomial, SquarefreeIdeal, VariableContext};

/// All inclusion-minimal vertex covers of the given edge list, by scanning
/// every subset of the `n` vertices. Sorted by (size, lex).
pub fn brute_force_minimal_covers(n: usize, edges: &[Vec<usize>]) -> Vec<Vec<usize>> {
    assert!(n <= 20, "oracle scans 2^n subsets");
    let mut covers: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if edges.iter().all(|e| e.iter().any(|v| set.contains(v))) {
            covers.push(set);
        }
    }
    let minimal: Vec<Vec<usize>> = covers
        .iter()
        .filter(|c| {
            !covers
                .iter()
                .any(|d| d.len() < c.len() && d.iter().all(|v| c.contains(v)))
        })
        .cloned()
        .collect();
    let mut out = minimal;
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Symbolic-power membership straight from the definition: the exponents
/// must sum to at least `m` over every cover.
pub fn member_oracle(exps: &[u32], covers: &[Vec<usize>], m: u32) -> bool {
    covers.iter().all(|c| {
        let total: u64 = c.iter().map(|&v| u64::from(exps[v])).sum();
        total >= u64::from(m)
    })
}

/// Enumerates every exponent vector in `{0..m}^n` (entries above `m` are
/// never needed for membership at level `m`) and returns the members.
fn enumerate_members(n: usize, covers: &[Vec<usize>], m: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        if member_oracle(&exps, covers, m) {
            out.push(exps.clone());
        }
        // odometer increment in base m+1
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if exps[i] == m {
                exps[i] = 0;
                i += 1;
            } else {
                exps[i] += 1;
                break;
            }
        }
    }
}

/// `alpha(I^(m))` by exhaustive enumeration.
pub fn brute_force_alpha_symbolic(n: usize, covers: &[Vec<usize>], m: u32) -> u32 {
    enumerate_members(n, covers, m)
        .iter()
        .map(|e| e.iter().sum::<u32>())
        .min()
        .expect("the all-m vector is always a member")
}

/// The minimal generators of `I^(m)` by exhaustive enumeration: members all
/// of whose single decrements are non-members. Sorted by (degree, lex).
pub fn brute_force_symbolic_generators(n: usize, covers: &[Vec<usize>], m: u32) -> Vec<Vec<u32>> {
    let mut gens: Vec<Vec<u32>> = enumerate_members(n, covers, m)
        .into_iter()
        .filter(|e| {
            (0..n).all(|i| {
                if e[i] == 0 {
                    return true;
                }
                let mut dec = e.clone();
                dec[i] -= 1;
                !member_oracle(&dec, covers, m)
            })
        })
        .collect();
    gens.sort_by_key(|e| (e.iter().sum::<u32>(), e.clone()));
    gens
}

/// Exact chromatic number by dynamic programming over vertex subsets:
/// `chi(S) = 1 + min over independent T of chi(S without T)`.
pub fn brute_force_chromatic(n: usize, adj: &[Vec<bool>]) -> u32 {
    assert!(n <= 16);
    let full: usize = (1 << n) - 1;
    let mut neighbour = vec![0usize; n];
    for v in 0..n {
        for (u, &adjacent) in adj[v].iter().enumerate() {
            if adjacent {
                neighbour[v] |= 1 << u;
            }
        }
    }
    let mut independent = vec![false; 1 << n];
    independent[0] = true;
    for mask in 1..=full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        independent[mask] = independent[rest] && (neighbour[v] & rest) == 0;
    }
    let mut chi = vec![u32::MAX; 1 << n];
    chi[0] = 0;
    for mask in 1..=full {
        let low = 1 << mask.trailing_zeros();
        // iterate subsets of mask that contain the lowest vertex
        let mut t = mask;
        while t > 0 {
            if t & low != 0 && independent[t] && chi[mask & !t] != u32::MAX {
                chi[mask] = chi[mask].min(1 + chi[mask & !t]);
            }
            t = (t - 1) & mask;
        }
    }
    chi[full]
}

/// Exact clique number by scanning all vertex subsets.
pub fn brute_force_clique(n: usize, adj: &[Vec<bool>]) -> u32 {
    assert!(n <= 20);
    let mut best = 0u32;
    for mask in 0usize..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let clique = vs
            .iter()
            .enumerate()
            .all(|(i, &v)| vs[i + 1..].iter().all(|&u| adj[v][u]));
        if clique {
            best = best.max(vs.len() as u32);
        }
    }
    best
}

/// Adjacency matrix of the graph whose edge ideal this is (generators must
/// all have degree two).
pub fn adjacency(ideal: &SquarefreeIdeal) -> Vec<Vec<bool>> {
    let n = ideal.context().len();
    let mut adj = vec![vec![false; n]; n];
    for g in ideal.generators() {
        let s = g.support();
        assert_eq!(s.len(), 2);
        adj[s[0]][s[1]] = true;
        adj[s[1]][s[0]] = true;
    }
    adj
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, size: usize) -> Vec<usize> {
    let mut vars: Vec<usize> = (0..n).collect();
    for i in 0..size {
        let j = rng.gen_range(i..n);
        vars.swap(i, j);
    }
    let mut subset = vars[..size].to_vec();
    subset.sort_unstable();
    subset
}

/// A random squarefree ideal on `n` variables with at least one generator
/// of degree two or more (after minimalization).
pub fn random_antichain_ideal(rng: &mut ChaCha8Rng, n: usize) -> SquarefreeIdeal {
    assert!(n >= 2);
    let ctx = VariableContext::with_default_names(n).unwrap();
    loop {
        let count = rng.gen_range(1..=2 * n);
        let mut edges = Vec::with_capacity(count + 1);
        let first_size = rng.gen_range(2..=3.min(n));
        edges.push(random_subset(rng, n, first_size));
        for _ in 0..count {
            let size = rng.gen_range(1..=4.min(n));
            edges.push(random_subset(rng, n, size));
        }
        let ideal = SquarefreeIdeal::from_hypergraph(&ctx, &edges).unwrap();
        if ideal.has_nontrivial_edge() {
            return ideal;
        }
    }
}

/// A random graph edge ideal on `n` vertices with at least one edge.
pub fn random_graph_ideal(rng: &mut ChaCha8Rng, n: usize) -> SquarefreeIdeal {
    assert!(n >= 2);
    let ctx = VariableContext::with_default_names(n).unwrap();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(0.4) {
                edges.push(vec![i, j]);
            }
        }
    }
    if edges.is_empty() {
        edges.push(vec![0, 1]);
    }
    SquarefreeIdeal::from_hypergraph(&ctx, &edges).unwrap()
}

/// Two random squarefree ideals on disjoint variable blocks of a joint
/// context, each guaranteed a non-trivial edge.
pub fn random_disjoint_pair(
    rng: &mut ChaCha8Rng,
    n1: usize,
    n2: usize,
) -> (SquarefreeIdeal, SquarefreeIdeal) {
    let ctx = VariableContext::with_default_names(n1 + n2).unwrap();
    let left = random_block_ideal(rng, &ctx, 0, n1);
    let right = random_block_ideal(rng, &ctx, n1, n2);
    (left, right)
}

fn random_block_ideal(
    rng: &mut ChaCha8Rng,
    ctx: &Arc<VariableContext>,
    offset: usize,
    width: usize,
) -> SquarefreeIdeal {
    assert!(width >= 2);
    loop {
        let count = rng.gen_range(1..=width + 1);
        let mut edges = Vec::with_capacity(count + 1);
        let first_size = rng.gen_range(2..=2.max(width.min(3)));
        let first: Vec<usize> = random_subset(rng, width, first_size)
            .into_iter()
            .map(|v| v + offset)
            .collect();
        edges.push(first);
        for _ in 0..count {
            let size = rng.gen_range(1..=width.min(3));
            let edge: Vec<usize> = random_subset(rng, width, size)
                .into_iter()
                .map(|v| v + offset)
                .collect();
            edges.push(edge);
        }
        let ideal = SquarefreeIdeal::from_hypergraph(ctx, &edges).unwrap();
        if ideal.has_nontrivial_edge() {
            return ideal;
        }
    }
}

/// Builds a monomial over the ideal's context from raw exponents.
pub fn monomial(ideal: &SquarefreeIdeal, exps: &[u32]) -> Monomial {
    Monomial::new(ideal.context(), exps.to_vec()).unwrap()
}
