//! Arch factorizations and the arch-jumping functions α and β.
//!
//! An arch contains every alphabet letter while none of its strict prefixes
//! does; a co-arch is the mirror notion. Every word splits uniquely into
//! arches followed by a rest that misses some letter.

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArchFactorization {
    word: Word,
    cuts: Vec<usize>,
}

impl ArchFactorization {
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Arch boundaries `0 = c₀ < c₁ < … < c_m`.
    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    pub fn arch_count(&self) -> usize {
        self.cuts.len() - 1
    }

    pub fn arches(&self) -> impl Iterator<Item = Word> + '_ {
        self.cuts.windows(2).map(|c| self.word.factor(c[0], c[1]))
    }

    pub fn rest(&self) -> Word {
        let last = *self.cuts.last().expect("c₀ is always present");
        self.word.factor(last, self.word.len())
    }

    pub fn is_fully_arched(&self) -> bool {
        *self.cuts.last().unwrap() == self.word.len()
    }

    /// Arches joined by `.`, each followed by a dot, then the rest.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for arch in self.arches() {
            s.push_str(&arch.to_string());
            s.push('.');
        }
        s.push_str(&self.rest().to_string());
        s
    }
}

/// Arch end positions in one pass. A letter counts as seen in the current
/// arch when its stamp equals the arch number.
pub(crate) fn arch_cuts(w: &[Letter], width: usize) -> Vec<usize> {
    let mut cuts = vec![0];
    let mut stamp = vec![0usize; width];
    let mut arch = 1;
    let mut seen = 0;
    for (i, &a) in w.iter().enumerate() {
        if stamp[a as usize] != arch {
            stamp[a as usize] = arch;
            seen += 1;
            if seen == width {
                cuts.push(i + 1);
                arch += 1;
                seen = 0;
            }
        }
    }
    cuts
}

/// Arch factorization of `w` over `w`'s alphabet.
pub fn arch_factorize(w: &Word) -> ArchFactorization {
    ArchFactorization {
        cuts: arch_cuts(w.letters(), w.alphabet().size()),
        word: w.clone(),
    }
}

pub fn is_fully_arched(w: &Word) -> bool {
    arch_factorize(w).is_fully_arched()
}

fn check_cut(w: &Word, i: usize) -> Result<()> {
    if i > w.len() {
        Err(Error::PositionOutOfRange {
            position: i,
            len: w.len(),
        })
    } else {
        Ok(())
    }
}

/// Length of the shortest prefix of `letters` containing all `width` letters.
fn first_cover(letters: impl Iterator<Item = Letter>, width: usize) -> Option<usize> {
    let mut seen = vec![false; width];
    let mut count = 0;
    for (k, a) in letters.enumerate() {
        if !std::mem::replace(&mut seen[a as usize], true) {
            count += 1;
            if count == width {
                return Some(k + 1);
            }
        }
    }
    None
}

/// `α(i)`: the smallest `j > i` such that `w(i, j)` is an arch.
pub fn alpha(w: &Word, i: usize) -> Result<Option<usize>> {
    check_cut(w, i)?;
    let width = w.alphabet().size();
    Ok(first_cover(w.letters()[i..].iter().copied(), width).map(|k| i + k))
}

/// `β(i)`: the largest `j < i` such that `w(j, i)` is a co-arch.
pub fn beta(w: &Word, i: usize) -> Result<Option<usize>> {
    check_cut(w, i)?;
    let width = w.alphabet().size();
    Ok(first_cover(w.letters()[..i].iter().rev().copied(), width).map(|k| i - k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{make_word, Alphabet};

    const EX: &str = "ABBACCBCCABAABC";

    fn abc(text: &str) -> Word {
        make_word(text, Some(&Alphabet::new("ABC".chars()).unwrap())).unwrap()
    }

    #[test]
    fn factorization_examples() {
        let f = arch_factorize(&abc(EX));
        let arches: Vec<String> = f.arches().map(|a| a.to_string()).collect();
        assert_eq!(arches, ["ABBAC", "CBCCA", "BAABC"]);
        assert!(f.rest().is_empty());
        assert_eq!(f.cuts(), [0, 5, 10, 15]);
        assert_eq!(f.render(), "ABBAC.CBCCA.BAABC.");

        let f = arch_factorize(&abc("AABB"));
        assert_eq!(f.arch_count(), 0);
        assert_eq!(f.rest().to_string(), "AABB");

        let f = arch_factorize(&abc("AABBCC"));
        assert_eq!(f.arch_count(), 1);
        assert_eq!(f.arches().next().unwrap().to_string(), "AABBC");
        assert_eq!(f.rest().to_string(), "C");
        assert_eq!(f.render(), "AABBC.C");
    }

    #[test]
    fn fully_arched_examples() {
        assert!(is_fully_arched(&abc(EX)));
        assert!(is_fully_arched(&abc("")));
        assert!(!is_fully_arched(&abc("AABBCC")));
    }

    #[test]
    fn alpha_examples() {
        let w = abc(EX);
        assert_eq!(alpha(&w, 2).unwrap(), Some(5));
        assert_eq!(alpha(&w, 3).unwrap(), Some(7));
        assert_eq!(alpha(&w, 0).unwrap(), Some(5));
        for i in 13..=15 {
            assert_eq!(alpha(&w, i).unwrap(), None);
        }
        assert_eq!(alpha(&w, 12).unwrap(), Some(15));
        assert_eq!(
            alpha(&w, 16),
            Err(Error::PositionOutOfRange {
                position: 16,
                len: 15
            })
        );
    }

    #[test]
    fn beta_examples() {
        let w = abc(EX);
        assert_eq!(beta(&w, 15).unwrap(), Some(12));
        for i in 0..=4 {
            assert_eq!(beta(&w, i).unwrap(), None);
        }
        assert!(beta(&w, 5).unwrap().is_some());
        assert!(beta(&w, 99).is_err());
    }

    #[test]
    fn beta_is_mirrored_alpha() {
        let w = abc(EX);
        let m = w.mirror();
        let n = w.len();
        for i in 0..=n {
            assert_eq!(
                beta(&w, i).unwrap(),
                alpha(&m, n - i).unwrap().map(|j| n - j)
            );
        }
    }
}
