//! Exact chromatic and clique numbers for small simple graphs.
//!
//! Plain exponential backtracking; fine for the documented range
//! (around twenty vertices).

use alloc::vec;
use alloc::vec::Vec;

use crate::ideal::SquarefreeIdeal;
use crate::Error;

pub(crate) struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl SimpleGraph {
    /// Interprets a squarefree ideal as the edge ideal of a graph. Fails
    /// with [`Error::NotAGraph`] unless every generator has degree two.
    pub(crate) fn from_ideal(ideal: &SquarefreeIdeal) -> Result<Self, Error> {
        let n = ideal.context().len();
        let mut adj = vec![vec![false; n]; n];
        for g in ideal.generators() {
            let support = g.support();
            if g.degree() != 2 || support.len() != 2 {
                return Err(Error::NotAGraph);
            }
            adj[support[0]][support[1]] = true;
            adj[support[1]][support[0]] = true;
        }
        Ok(SimpleGraph { n, adj })
    }

    pub(crate) fn chromatic_number(&self) -> u32 {
        if self.n == 0 {
            return 0;
        }
        let lower = self.clique_number().max(1);
        let mut k = lower;
        while !self.colourable(k as usize) {
            k += 1;
        }
        k
    }

    fn colourable(&self, k: usize) -> bool {
        let mut colour = vec![usize::MAX; self.n];
        self.colour_rec(k, 0, 0, &mut colour)
    }

    fn colour_rec(&self, k: usize, v: usize, used: usize, colour: &mut Vec<usize>) -> bool {
        if v == self.n {
            return true;
        }
        // trying more than one fresh colour only permutes labels
        let limit = k.min(used + 1);
        for c in 0..limit {
            let clash = (0..v).any(|u| self.adj[u][v] && colour[u] == c);
            if clash {
                continue;
            }
            colour[v] = c;
            if self.colour_rec(k, v + 1, used.max(c + 1), colour) {
                return true;
            }
            colour[v] = usize::MAX;
        }
        false
    }

    pub(crate) fn clique_number(&self) -> u32 {
        let mut best = 0u32;
        let candidates: Vec<usize> = (0..self.n).collect();
        self.clique_rec(0, &candidates, &mut best);
        best
    }

    fn clique_rec(&self, size: u32, candidates: &[usize], best: &mut u32) {
        if size + candidates.len() as u32 <= *best {
            return;
        }
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if size + (candidates.len() - i) as u32 <= *best {
                break;
            }
            let rest: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&u| self.adj[v][u])
                .collect();
            self.clique_rec(size + 1, &rest, best);
        }
        *best = (*best).max(size);
    }
}
