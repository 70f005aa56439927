//! Piecewise complexity `h(u)` and minimality index `ρ(u)`.
//!
//! `h(u) = 1 + max over cuts i and letters a of r(u(0,i), a) + ℓ(a, u(i,|u|))`
//! looks at every way of inserting a letter; `ρ(u)` is the same expression
//! over every way of deleting one, read off the r- and ℓ-vectors.

use crate::side::{l_vector_entries, r_vector_entries, RRowStream};
use crate::word::{Letter, Word};

/// Cut position and inserted letter attaining `h(u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HWitness {
    pub cut: usize,
    pub letter: Letter,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureReport {
    pub h: u64,
    pub rho: u64,
    /// Absent for the empty word.
    pub h_witness: Option<HWitness>,
    /// 1-based position of the deleted letter; absent for the empty word.
    pub rho_witness: Option<usize>,
}

/// Cuts between saved forward states in `h_letters`.
const BLOCK: usize = 4096;

/// Bilinear-time `h` over raw letters, with the first maximising `(cut, letter)`.
///
/// r-rows run left to right and ℓ-rows right to left, so the forward
/// stream is checkpointed every `BLOCK` cuts and replayed one block at a
/// time while the backward stream walks down. Memory stays
/// `O(|A|² · |u| / BLOCK + BLOCK · |A|)`.
pub(crate) fn h_letters(u: &[Letter], width: usize) -> (u64, Option<HWitness>) {
    if u.is_empty() {
        return (1, None);
    }
    let n = u.len();
    let mut checkpoints = Vec::with_capacity(n / BLOCK + 1);
    let mut fwd = RRowStream::new(width);
    for (cut, &a) in u.iter().enumerate() {
        if cut % BLOCK == 0 {
            checkpoints.push(fwd.clone());
        }
        fwd.push(a);
    }
    if n.is_multiple_of(BLOCK) {
        checkpoints.push(fwd);
    }

    let mut back = RRowStream::new(width);
    let mut rows = vec![0u32; BLOCK * width];
    let mut best: Option<(u32, HWitness)> = None;
    for (block, start) in checkpoints.into_iter().enumerate().rev() {
        let lo = block * BLOCK;
        let hi = (lo + BLOCK - 1).min(n);
        let mut replay = start;
        for cut in lo..=hi {
            if cut > lo {
                replay.push(u[cut - 1]);
            }
            rows[(cut - lo) * width..(cut - lo + 1) * width].copy_from_slice(replay.row());
        }
        // walking down, `>=` keeps the smallest cut and letter among ties
        for cut in (lo..=hi).rev() {
            let r = &rows[(cut - lo) * width..(cut - lo + 1) * width];
            let l = back.row();
            for a in (0..width).rev() {
                let v = r[a] + l[a];
                if best.is_none_or(|(b, _)| v >= b) {
                    best = Some((
                        v,
                        HWitness {
                            cut,
                            letter: a as Letter,
                        },
                    ));
                }
            }
            if cut > 0 {
                back.push(u[cut - 1]);
            }
        }
    }
    let (v, w) = best.expect("at least one cut and one letter");
    (v as u64 + 1, Some(w))
}

/// Linear-time `ρ` over raw letters, with the first maximising position.
pub(crate) fn rho_letters(u: &[Letter], width: usize) -> (u64, Option<usize>) {
    if u.is_empty() {
        return (0, None);
    }
    let (r, _) = r_vector_entries(u, width);
    let l = l_vector_entries(u, width);
    let mut best = (0u32, 1usize);
    for (i, (x, y)) in r.iter().zip(&l).enumerate() {
        if i == 0 || x + y > best.0 {
            best = (x + y, i + 1);
        }
    }
    (best.0 as u64 + 1, Some(best.1))
}

/// Piecewise complexity: the least `k` with `[u]_k = {u}`.
pub fn h(u: &Word) -> u64 {
    h_letters(u.letters(), u.alphabet().size()).0
}

/// Minimality index: the least `m` for which `u` is minimal in `[u]_m`.
pub fn rho(u: &Word) -> u64 {
    rho_letters(u.letters(), u.alphabet().size()).0
}

/// Both measures with their witnesses.
///
/// Ties go to the smallest position, then the smallest letter index.
pub fn measure(u: &Word) -> MeasureReport {
    let width = u.alphabet().size();
    let (h, h_witness) = h_letters(u.letters(), width);
    let (rho, rho_witness) = rho_letters(u.letters(), width);
    MeasureReport {
        h,
        rho,
        h_witness,
        rho_witness,
    }
}
