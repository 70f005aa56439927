//! Brute-force references built only on downsets.
//!
//! Nothing here touches the side-distance code, so a disagreement between
//! an oracle and a fast path points at one of them rather than at shared
//! machinery. Costs are exponential in the word length.

use std::fmt;

use crate::error::Result;
use crate::word::{same_alphabet, sim_k_with, Layers, Letter, Word, DEFAULT_BUDGET};

/// Subword distance found by a search bounded by `kmax`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundedDistance {
    Finite(usize),
    /// The words are equal.
    Infinite,
    /// The words differ but agree on all subwords up to length `kmax`.
    Exceeds(usize),
}

impl fmt::Display for BoundedDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundedDistance::Finite(k) => write!(f, "{k}"),
            BoundedDistance::Infinite => f.write_str("inf"),
            BoundedDistance::Exceeds(k) => write!(f, ">{k}"),
        }
    }
}

/// Oracle configuration: how many subwords one downset may hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub budget: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl Oracle {
    pub fn with_budget(budget: usize) -> Self {
        Oracle { budget }
    }

    /// `δ(u, v)`: one less than the length of a shortest distinguisher.
    pub fn delta(&self, u: &Word, v: &Word, kmax: usize) -> Result<BoundedDistance> {
        same_alphabet(u, v)?;
        if u == v {
            return Ok(BoundedDistance::Infinite);
        }
        // layers agree up to length δ and first differ at δ + 1
        let mut lu = Layers::new(u, self.budget)?;
        let mut lv = Layers::new(v, self.budget)?;
        for len in 1..=kmax + 1 {
            match (lu.advance()?, lv.advance()?) {
                (x, y) if x != y => return Ok(BoundedDistance::Finite(len - 1)),
                (None, None) => unreachable!("distinct words differ on some subword"),
                _ => {}
            }
        }
        Ok(BoundedDistance::Exceeds(kmax))
    }

    fn finite_delta(&self, u: &Word, v: &Word, kmax: usize) -> Result<usize> {
        Ok(match self.delta(u, v, kmax)? {
            BoundedDistance::Finite(k) => k,
            // unreachable for the insertion/deletion pairs below, where a
            // distinguisher of length ≤ |u| + 1 always exists
            BoundedDistance::Exceeds(k) => k,
            BoundedDistance::Infinite => unreachable!("pairs differ in length"),
        })
    }

    /// `1 + max δ(u, u₁ a u₂)` over all cuts and letters.
    pub fn h(&self, u: &Word) -> Result<usize> {
        let kmax = u.len() + 2;
        let mut best = 0;
        for cut in 0..=u.len() {
            for a in 0..u.alphabet().size() {
                let v = u.with_inserted(cut, a as Letter);
                best = best.max(self.finite_delta(u, &v, kmax)?);
            }
        }
        Ok(best + 1)
    }

    /// `0` for `ε`, else `1 + max δ(u, u₁u₂)` over one-letter deletions.
    pub fn rho(&self, u: &Word) -> Result<usize> {
        if u.is_empty() {
            return Ok(0);
        }
        let kmax = u.len() + 1;
        let mut best = 0;
        for i in 0..u.len() {
            best = best.max(self.finite_delta(u, &u.without(i), kmax)?);
        }
        Ok(best + 1)
    }

    /// `u` is `m`-reduced: no one-letter deletion is `∼_m`-equivalent to it.
    ///
    /// By convexity of `∼_m` along `≼`, any equivalent strict subword yields an
    /// equivalent one-letter deletion, so deletions suffice.
    pub fn is_reduced(&self, u: &Word, m: usize) -> Result<bool> {
        for i in 0..u.len() {
            if sim_k_with(u, &u.without(i), m, self.budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn delta_bf(u: &Word, v: &Word, kmax: usize) -> Result<BoundedDistance> {
    Oracle::default().delta(u, v, kmax)
}

pub fn h_bf(u: &Word) -> Result<usize> {
    Oracle::default().h(u)
}

pub fn rho_bf(u: &Word) -> Result<usize> {
    Oracle::default().rho(u)
}

pub fn is_reduced_bf(u: &Word, m: usize) -> Result<bool> {
    Oracle::default().is_reduced(u, m)
}
