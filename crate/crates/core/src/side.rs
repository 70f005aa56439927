//! Simon's side distances `r(u, t) = δ(u, ut)` and `ℓ(t, u) = δ(tu, u)`.
//!
//! Three routes compute them: a memoised reference recursion
//! ([`r_general`]), the left-to-right r-table over all prefixes
//! ([`r_table`], `O(|A|·|u|)`), and the stack-based r-vector
//! ([`r_vector`], `O(|A| + |u|)`). The ℓ variants are all mirror images.

use std::collections::HashMap;
use std::fmt;

use crate::error::Result;
use crate::word::{same_alphabet, Letter, Word};

/// A side distance: a natural number, or infinite for `r(u, ε)`.
///
/// Only comparisons are offered on the infinite value; extract the finite
/// part with [`SideDistance::finite`] before doing arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SideDistance {
    Finite(u32),
    Infinite,
}

impl SideDistance {
    pub fn finite(self) -> Option<u32> {
        match self {
            SideDistance::Finite(k) => Some(k),
            SideDistance::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == SideDistance::Infinite
    }
}

impl fmt::Display for SideDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SideDistance::Finite(k) => write!(f, "{k}"),
            SideDistance::Infinite => f.write_str("inf"),
        }
    }
}

/// Reference evaluation of `r(u, a)` for every prefix length, memoised on
/// `(prefix length, letter)`.
struct Recursion<'a> {
    u: &'a [Letter],
    memo: HashMap<(usize, Letter), u32>,
}

impl<'a> Recursion<'a> {
    fn new(u: &'a [Letter]) -> Self {
        Recursion {
            u,
            memo: HashMap::new(),
        }
    }

    /// `r(u(0, n), a)`: 0 if `a` is absent, otherwise with `u(0, n) = u₁ a u₂`
    /// and `a ∉ u₂`, `1 + min over b ∈ a u₂ of r(u₁, b)`.
    fn letter(&mut self, n: usize, a: Letter) -> u32 {
        if let Some(&v) = self.memo.get(&(n, a)) {
            return v;
        }
        let value = match self.u[..n].iter().rposition(|&x| x == a) {
            None => 0,
            Some(last) => {
                let mut rest: Vec<Letter> = self.u[last..n].to_vec();
                rest.sort_unstable();
                rest.dedup();
                1 + rest
                    .into_iter()
                    .map(|b| self.letter(last, b))
                    .min()
                    .expect("a u₂ contains a")
            }
        };
        self.memo.insert((n, a), value);
        value
    }

    fn word(&mut self, n: usize, t: &[Letter]) -> SideDistance {
        let mut letters = t.to_vec();
        letters.sort_unstable();
        letters.dedup();
        letters
            .into_iter()
            .map(|a| SideDistance::Finite(self.letter(n, a)))
            .min()
            .unwrap_or(SideDistance::Infinite)
    }
}

/// `r(u, t)` by the reference recursion.
pub fn r_general(u: &Word, t: &Word) -> Result<SideDistance> {
    same_alphabet(u, t)?;
    Ok(Recursion::new(u.letters()).word(u.len(), t.letters()))
}

/// `ℓ(t, u)` by the reference recursion on mirrors.
pub fn l_general(t: &Word, u: &Word) -> Result<SideDistance> {
    r_general(&u.mirror(), &t.mirror())
}

/// `r(u, a)` for a single letter.
pub fn r_letter(u: &Word, a: Letter) -> u32 {
    Recursion::new(u.letters()).letter(u.len(), a)
}

/// `ℓ(a, u)` for a single letter.
pub fn l_letter(a: Letter, u: &Word) -> u32 {
    r_letter(&u.mirror(), a)
}

/// `δ(u₁u₂, u₁ a u₂) = r(u₁, a) + ℓ(a, u₂)`.
pub fn delta_insert(u1: &Word, a: Letter, u2: &Word) -> Result<u32> {
    same_alphabet(u1, u2)?;
    Ok(r_letter(u1, a) + l_letter(a, u2))
}

/// `(|u|+1) × |A|` side-distance matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
struct Matrix {
    width: usize,
    cells: Vec<u32>,
}

impl Matrix {
    fn row(&self, i: usize) -> &[u32] {
        &self.cells[i * self.width..(i + 1) * self.width]
    }
}

/// The r-table: cell `(i, a)` is `r(u(0, i), a)`.
#[derive(Clone, PartialEq, Eq)]
pub struct RTable {
    word: Word,
    matrix: Matrix,
}

/// The ℓ-table: cell `(i, a)` is `ℓ(a, u(i, |u|))`.
#[derive(Clone, PartialEq, Eq)]
pub struct LTable {
    word: Word,
    matrix: Matrix,
}

macro_rules! table_accessors {
    ($t:ty) => {
        impl $t {
            pub fn word(&self) -> &Word {
                &self.word
            }

            /// Number of rows, `|u| + 1`.
            pub fn rows(&self) -> usize {
                self.word.len() + 1
            }

            pub fn get(&self, i: usize, a: Letter) -> u32 {
                self.matrix.cells[i * self.matrix.width + a as usize]
            }

            pub fn row(&self, i: usize) -> &[u32] {
                self.matrix.row(i)
            }

            /// Values for one letter across all cuts `0..=|u|`.
            pub fn column(&self, a: Letter) -> Vec<u32> {
                (0..self.rows()).map(|i| self.get(i, a)).collect()
            }
        }
    };
}

table_accessors!(RTable);
table_accessors!(LTable);

impl fmt::Debug for RTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        debug_table(f, "RTable", &self.word, |a| self.column(a))
    }
}

impl fmt::Debug for LTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        debug_table(f, "LTable", &self.word, |a| self.column(a))
    }
}

fn debug_table(
    f: &mut fmt::Formatter<'_>,
    name: &str,
    word: &Word,
    column: impl Fn(Letter) -> Vec<u32>,
) -> fmt::Result {
    let mut s = f.debug_struct(name);
    s.field("word", &word.to_string());
    for a in 0..word.alphabet().size() as Letter {
        s.field(&word.alphabet().symbol(a).to_string(), &column(a));
    }
    s.finish()
}

/// Fills the r-table of `u` row by row.
///
/// `locc[a]` is the last position (1-based) of `a` so far, 0 before any
/// occurrence; row 0 is all zeros so `(locc[a], b)` is always a valid cell.
fn fill_r_table(u: &[Letter], width: usize) -> Matrix {
    let mut cells = vec![0u32; (u.len() + 1) * width];
    let mut locc = vec![0usize; width];
    for (i, &b) in u.iter().enumerate().map(|(p, b)| (p + 1, b)) {
        let b = b as usize;
        locc[b] = i;
        let (done, current) = cells.split_at_mut(i * width);
        let prev = &done[(i - 1) * width..];
        let row = &mut current[..width];
        for a in 0..width {
            row[a] = if a == b {
                1 + prev[a]
            } else {
                prev[a].min(1 + done[locc[a] * width + b])
            };
        }
    }
    Matrix { width, cells }
}

pub fn r_table(u: &Word) -> RTable {
    RTable {
        word: u.clone(),
        matrix: fill_r_table(u.letters(), u.alphabet().size()),
    }
}

pub fn l_table(u: &Word) -> LTable {
    LTable {
        word: u.clone(),
        matrix: fill_l_table(u.letters(), u.alphabet().size()),
    }
}

/// ℓ-table cells as the r-table of the mirror read bottom-up.
fn fill_l_table(u: &[Letter], width: usize) -> Matrix {
    let reversed: Vec<Letter> = u.iter().rev().copied().collect();
    let mut m = fill_r_table(&reversed, width);
    let rows = u.len() + 1;
    for i in 0..rows / 2 {
        let (top, bottom) = m.cells.split_at_mut((rows - 1 - i) * width);
        top[i * width..(i + 1) * width].swap_with_slice(&mut bottom[..width]);
    }
    m
}

/// Streams r-table rows in order, keeping only the row at each letter's
/// last occurrence; those are the only rows the recurrence reads back.
#[derive(Clone)]
pub(crate) struct RRowStream {
    width: usize,
    row: Vec<u32>,
    /// `at_last[a * width + c]` is `r(·, c)` at the last occurrence of `a`.
    at_last: Vec<u32>,
}

impl RRowStream {
    pub(crate) fn new(width: usize) -> Self {
        RRowStream {
            width,
            row: vec![0; width],
            at_last: vec![0; width * width],
        }
    }

    pub(crate) fn row(&self) -> &[u32] {
        &self.row
    }

    pub(crate) fn push(&mut self, b: Letter) {
        let (b, w) = (b as usize, self.width);
        for a in 0..w {
            self.row[a] = if a == b {
                1 + self.row[a]
            } else {
                self.row[a].min(1 + self.at_last[a * w + b])
            };
        }
        self.at_last[b * w..(b + 1) * w].copy_from_slice(&self.row);
    }
}

/// The r-vector `⟨r₁, …, r_m⟩` with `r_i = r(a₁⋯a_{i−1}, a_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RVector {
    word: Word,
    entries: Vec<u32>,
}

/// The ℓ-vector `⟨ℓ₁, …, ℓ_m⟩` with `ℓ_i = ℓ(a_i, a_{i+1}⋯a_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LVector {
    word: Word,
    entries: Vec<u32>,
}

impl RVector {
    pub fn word(&self) -> &Word {
        &self.word
    }
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }
}

impl LVector {
    pub fn word(&self) -> &Word {
        &self.word
    }
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }
}

/// Stack traffic of one r-vector run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StackStats {
    pub pushes: usize,
    pub pops: usize,
}

/// r-vector by the stack scan.
///
/// The stack holds increasing positions starting with 0. For the next
/// letter `a`, positions are discarded while the one beneath the top is
/// still `≥ locc[a]`; the top `j` then gives `r_i = 1 + r_j` (or 0 when
/// `j = 0`), and `i` is pushed.
pub(crate) fn r_vector_entries(u: &[Letter], width: usize) -> (Vec<u32>, StackStats) {
    let mut locc = vec![0usize; width];
    let mut r = vec![0u32; u.len() + 1];
    let mut stack = Vec::with_capacity(u.len() + 1);
    stack.push(0usize);
    let mut stats = StackStats { pushes: 1, pops: 0 };
    for (i, &a) in u.iter().enumerate().map(|(p, a)| (p + 1, a)) {
        let a = a as usize;
        while stack.len() >= 2 && stack[stack.len() - 2] >= locc[a] {
            stack.pop();
            stats.pops += 1;
        }
        let j = *stack.last().expect("stack keeps its bottom entry");
        r[i] = if j > 0 { 1 + r[j] } else { 0 };
        stack.push(i);
        stats.pushes += 1;
        locc[a] = i;
    }
    r.remove(0);
    (r, stats)
}

pub fn r_vector(u: &Word) -> RVector {
    r_vector_with_stats(u).0
}

pub fn r_vector_with_stats(u: &Word) -> (RVector, StackStats) {
    let (entries, stats) = r_vector_entries(u.letters(), u.alphabet().size());
    (
        RVector {
            word: u.clone(),
            entries,
        },
        stats,
    )
}

pub(crate) fn l_vector_entries(u: &[Letter], width: usize) -> Vec<u32> {
    let reversed: Vec<Letter> = u.iter().rev().copied().collect();
    let (mut entries, _) = r_vector_entries(&reversed, width);
    entries.reverse();
    entries
}

pub fn l_vector(u: &Word) -> LVector {
    LVector {
        word: u.clone(),
        entries: l_vector_entries(u.letters(), u.alphabet().size()),
    }
}
