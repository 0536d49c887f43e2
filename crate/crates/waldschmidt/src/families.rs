//! Constructors for the ideal families with known closed-form constants.
//!
//! Every constructor returns the ideal together with the expected exact
//! values attached, so downstream golden tests can assert equality. Graph
//! families use the 1-indexed names `x1..xn`; the projective families
//! (matroid, star, general linear) use the 0-indexed names `x0..xn`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::ideal::{Monomial, SquarefreeIdeal, VariableContext};
use crate::Error;

/// A family member together with its expected invariants.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub ideal: SquarefreeIdeal,
    /// The closed-form Waldschmidt constant, when one is known.
    pub expected_alpha_hat: Option<BigRational>,
    /// The closed-form resurgence, when one is known.
    pub expected_resurgence: Option<BigRational>,
    /// Which closed form the expectations come from.
    pub provenance: String,
}

fn rat(p: u64, q: u64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn ctx_x1(n: usize) -> Result<Arc<VariableContext>, Error> {
    VariableContext::with_default_names(n)
}

fn ctx_x0(n: usize) -> Result<Arc<VariableContext>, Error> {
    VariableContext::new((0..n).map(|i| format!("x{i}")).collect())
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// The edge ideal of the cycle `C_n`, `n >= 3`.
///
/// Expected constant: `(2k+1)/(k+1)` for odd `n = 2k+1`, and 2 for even
/// `n` (even cycles are bipartite).
pub fn cycle_ideal(n: usize) -> Result<FamilyInstance, Error> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let ctx = ctx_x1(n)?;
    let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    let ideal = SquarefreeIdeal::from_hypergraph(&ctx, &edges)?;
    let (expected, provenance) = if n % 2 == 1 {
        let k = (n as u64 - 1) / 2;
        (
            rat(2 * k + 1, k + 1),
            format!("odd cycle C_{n}: alpha-hat = (2k+1)/(k+1) with k = {k}"),
        )
    } else {
        (rat(2, 1), format!("even cycle C_{n} is bipartite: alpha-hat = 2"))
    };
    Ok(FamilyInstance {
        ideal,
        expected_alpha_hat: Some(expected),
        expected_resurgence: None,
        provenance,
    })
}

/// The edge ideal of the complete multipartite graph with the given part
/// sizes (at least two parts, each non-empty).
///
/// Expected constant: `k/(k-1)` for `k` parts.
pub fn complete_multipartite_ideal(parts: &[usize]) -> Result<FamilyInstance, Error> {
    let k = parts.len();
    if k < 2 {
        return Err(invalid(format!("need at least two parts, got {k}")));
    }
    if parts.contains(&0) {
        return Err(invalid("empty part in multipartite graph".into()));
    }
    let n: usize = parts.iter().sum();
    let ctx = ctx_x1(n)?;
    let mut offsets = Vec::with_capacity(k);
    let mut acc = 0usize;
    for &p in parts {
        offsets.push(acc);
        acc += p;
    }
    let mut edges = Vec::new();
    for a in 0..k {
        for b in (a + 1)..k {
            for i in 0..parts[a] {
                for j in 0..parts[b] {
                    edges.push(vec![offsets[a] + i, offsets[b] + j]);
                }
            }
        }
    }
    let ideal = SquarefreeIdeal::from_hypergraph(&ctx, &edges)?;
    Ok(FamilyInstance {
        ideal,
        expected_alpha_hat: Some(rat(k as u64, k as u64 - 1)),
        expected_resurgence: None,
        provenance: format!("complete {k}-partite graph: alpha-hat = k/(k-1)"),
    })
}

/// The edge ideal of the complement of the odd cycle `C_n`, odd `n >= 5`.
///
/// Expected constant: `n/(n-2)`.
pub fn cycle_complement_ideal(n: usize) -> Result<FamilyInstance, Error> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(invalid(format!("cycle complement needs odd n >= 5, got {n}")));
    }
    let ctx = ctx_x1(n)?;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let adjacent = j - i == 1 || (i == 0 && j == n - 1);
            if !adjacent {
                edges.push(vec![i, j]);
            }
        }
    }
    let ideal = SquarefreeIdeal::from_hypergraph(&ctx, &edges)?;
    Ok(FamilyInstance {
        ideal,
        expected_alpha_hat: Some(rat(n as u64, n as u64 - 2)),
        expected_resurgence: None,
        provenance: format!("complement of the odd cycle C_{n}: alpha-hat = n/(n-2)"),
    })
}

/// The Stanley-Reisner ideal of the bipyramid over an `n`-gon, `n >= 4`:
/// on `x1..xn, y, z` it is generated by `yz` and the diagonals `x_i x_j`
/// of the `n`-gon.
///
/// Expected constant: `n/(n-2)`.
pub fn bipyramid_ideal(n: usize) -> Result<FamilyInstance, Error> {
    if n < 4 {
        return Err(invalid(format!("bipyramid needs n >= 4, got {n}")));
    }
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.push("y".into());
    names.push("z".into());
    let ctx = VariableContext::new(names)?;
    let mut edges = vec![vec![n, n + 1]]; // the segment {y, z}
    for i in 0..n {
        for j in (i + 1)..n {
            let adjacent = j - i == 1 || (i == 0 && j == n - 1);
            if !adjacent {
                edges.push(vec![i, j]);
            }
        }
    }
    let ideal = SquarefreeIdeal::from_hypergraph(&ctx, &edges)?;
    Ok(FamilyInstance {
        ideal,
        expected_alpha_hat: Some(rat(n as u64, n as u64 - 2)),
        expected_resurgence: None,
        provenance: format!("Stanley-Reisner ideal of the {n}-gon bipyramid: alpha-hat = n/(n-2)"),
    })
}

/// The Stanley-Reisner ideal of the uniform matroid on `vertices = n+1`
/// points whose facets are all subsets of size `n+1-c`: generated by every
/// squarefree monomial of degree `n+2-c` in `x0..xn`, for `1 <= c <= n`.
///
/// Expected constant: `(n+1)/c`.
pub fn uniform_matroid_ideal(vertices: usize, c: usize) -> Result<FamilyInstance, Error> {
    if vertices < 2 {
        return Err(invalid(format!("matroid needs at least 2 vertices, got {vertices}")));
    }
    let n = vertices - 1;
    if c < 1 || c > n {
        return Err(invalid(format!("matroid needs 1 <= c <= {n}, got c = {c}")));
    }
    let ctx = ctx_x0(vertices)?;
    let degree = n + 2 - c;
    let mut edges = Vec::new();
    let mut subset = Vec::new();
    subsets_of_size(vertices, degree, 0, &mut subset, &mut edges);
    let ideal = SquarefreeIdeal::from_hypergraph(&ctx, &edges)?;
    Ok(FamilyInstance {
        ideal,
        expected_alpha_hat: Some(rat(vertices as u64, c as u64)),
        expected_resurgence: None,
        provenance: format!(
            "uniform matroid on {vertices} vertices, c = {c}: alpha-hat = (n+1)/c"
        ),
    })
}

fn subsets_of_size(
    n: usize,
    size: usize,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    let needed = size - current.len();
    for v in start..=(n - needed) {
        current.push(v);
        subsets_of_size(n, size, v + 1, current, out);
        current.pop();
    }
}

/// The monomial star on `x0..xn`, `n >= 2`: generated by `x_i x_n` for
/// `i < n` together with `x_0 x_1 ... x_{n-1}`. A mixed-height example.
///
/// Expected constants: `alpha-hat = (2n-1)/n` and resurgence
/// `n^2/(n^2-n+1)`.
pub fn monomial_star_ideal(n: usize) -> Result<FamilyInstance, Error> {
    if n < 2 {
        return Err(invalid(format!("monomial star needs n >= 2, got {n}")));
    }
    let ctx = ctx_x0(n + 1)?;
    let mut gens: Vec<Monomial> = (0..n)
        .map(|i| Monomial::squarefree(&ctx, &[i, n]))
        .collect::<Result<_, _>>()?;
    gens.push(Monomial::squarefree(&ctx, &(0..n).collect::<Vec<_>>())?);
    let ideal = SquarefreeIdeal::new(&ctx, gens)?;
    let nn = n as u64;
    Ok(FamilyInstance {
        ideal,
        expected_alpha_hat: Some(rat(2 * nn - 1, nn)),
        expected_resurgence: Some(rat(nn * nn, nn * nn - nn + 1)),
        provenance: format!(
            "monomial star, n = {n}: alpha-hat = (2n-1)/n, resurgence = n^2/(n^2-n+1)"
        ),
    })
}

/// The ideal of a union of `s` general linear subspaces of dimension
/// `t - 1` in projective `n`-space, `s t <= n + 1`: the intersection of the
/// primes `P_i` generated by all variables except the `i`-th block of `t`.
///
/// Expected constants: `alpha-hat = 1` when `st < n+1` and
/// `(n+1)/(n+1-t)` when `st = n+1`; resurgence `2(s-1)/s` for `s >= 2` and
/// 1 for `s = 1`.
pub fn general_linear_ideal(s: usize, t: usize, n: usize) -> Result<FamilyInstance, Error> {
    if s < 1 || t < 1 {
        return Err(invalid(format!("need s, t >= 1, got s = {s}, t = {t}")));
    }
    if s * t > n + 1 {
        return Err(invalid(format!(
            "need s*t <= n+1, got s*t = {} and n+1 = {}",
            s * t,
            n + 1
        )));
    }
    if s == 1 && t == n + 1 {
        return Err(invalid(
            "s = 1, t = n+1 describes the whole space (zero ideal)".into(),
        ));
    }
    let ctx = ctx_x0(n + 1)?;
    // generators of the intersection of the block-complement primes: one
    // variable from each block, times every variable outside all blocks...
    // computed the straightforward way, by intersecting the primes
    let mut acc: Option<SquarefreeIdeal> = None;
    for i in 0..s {
        let block_start = i * t;
        let vars: Vec<usize> = (0..=n)
            .filter(|&v| v < block_start || v >= block_start + t)
            .collect();
        let gens: Vec<Monomial> = vars
            .iter()
            .map(|&v| Monomial::squarefree(&ctx, &[v]))
            .collect::<Result<_, _>>()?;
        let prime = SquarefreeIdeal::new(&ctx, gens)?;
        acc = Some(match acc {
            None => prime,
            Some(current) => {
                let product = crate::powers::intersect_ideals(
                    current.ideal(),
                    prime.ideal(),
                    crate::powers::DEFAULT_GENERATOR_CAP,
                )?;
                SquarefreeIdeal::from_ideal(product)?
            }
        });
    }
    let ideal = acc.expect("s >= 1");
    let expected_alpha_hat = if s * t < n + 1 {
        rat(1, 1)
    } else {
        rat(n as u64 + 1, (n + 1 - t) as u64)
    };
    let expected_resurgence = if s >= 2 {
        Some(rat(2 * (s as u64 - 1), s as u64))
    } else {
        Some(rat(1, 1))
    };
    Ok(FamilyInstance {
        ideal,
        expected_alpha_hat: Some(expected_alpha_hat),
        expected_resurgence,
        provenance: format!(
            "{s} general linear subspaces of dimension {} in P^{n}: alpha-hat = 1 or (n+1)/(n+1-t)",
            t - 1
        ),
    })
}
