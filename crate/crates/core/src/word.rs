//! Alphabets, words, the subword ordering and Simon's congruence.
//!
//! Letters are dense indices into an [`Alphabet`], so every per-letter
//! structure in the crate is a plain array of size `|A|`. The downset
//! enumeration here is the ground truth the fast algorithms are checked
//! against, so it deliberately relies on nothing but the definitions.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a letter in its alphabet.
pub type Letter = u16;

/// Default cap on the number of subwords a single downset may hold.
pub const DEFAULT_BUDGET: usize = 1 << 24;

/// An ordered, finite set of distinct symbols.
///
/// Cloning is cheap; all clones share the same letter table.
#[derive(Clone)]
pub struct Alphabet(Arc<AlphabetInner>);

struct AlphabetInner {
    letters: Vec<char>,
    index: HashMap<char, Letter>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if letters.len() > Letter::MAX as usize {
            return Err(Error::AlphabetTooLarge(letters.len()));
        }
        let mut index = HashMap::with_capacity(letters.len());
        for (i, &c) in letters.iter().enumerate() {
            if index.insert(c, i as Letter).is_some() {
                return Err(Error::DuplicateLetter(c));
            }
        }
        Ok(Alphabet(Arc::new(AlphabetInner { letters, index })))
    }

    /// The letters of `text` in order of first occurrence.
    pub fn of_text(text: &str) -> Result<Self> {
        let mut seen = Vec::new();
        for c in text.chars() {
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        Alphabet::new(seen)
    }

    pub fn size(&self) -> usize {
        self.0.letters.len()
    }

    pub fn letters(&self) -> &[char] {
        &self.0.letters
    }

    pub fn index_of(&self, symbol: char) -> Option<Letter> {
        self.0.index.get(&symbol).copied()
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.0.letters[letter as usize]
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.letters == other.0.letters
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({})", self)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.letters.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A finite word over an [`Alphabet`].
#[derive(Clone, PartialEq, Eq)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

/// Builds a word from its symbols.
///
/// Without an explicit alphabet the word's own letters are used, in order of
/// first occurrence. The empty text has no letters to infer from and must
/// come with an alphabet.
pub fn make_word(text: &str, alphabet: Option<&Alphabet>) -> Result<Word> {
    let alphabet = match alphabet {
        Some(a) => a.clone(),
        None => Alphabet::of_text(text)?,
    };
    let mut letters = Vec::with_capacity(text.len());
    for (i, c) in text.chars().enumerate() {
        match alphabet.index_of(c) {
            Some(a) => letters.push(a),
            None => {
                return Err(Error::UnknownSymbol {
                    symbol: c,
                    position: i + 1,
                })
            }
        }
    }
    Ok(Word { alphabet, letters })
}

impl Word {
    pub fn from_letters(alphabet: &Alphabet, letters: Vec<Letter>) -> Result<Word> {
        let size = alphabet.size();
        if let Some(&bad) = letters.iter().find(|&&a| a as usize >= size) {
            return Err(Error::LetterOutOfRange {
                index: bad as usize,
                size,
            });
        }
        Ok(Word {
            alphabet: alphabet.clone(),
            letters,
        })
    }

    pub fn empty(alphabet: &Alphabet) -> Word {
        Word {
            alphabet: alphabet.clone(),
            letters: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The factor `u(i, j)`, i.e. letters `i+1..=j` in 1-based numbering.
    pub fn factor(&self, i: usize, j: usize) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            letters: self.letters[i..j].to_vec(),
        }
    }

    pub fn mirror(&self) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        same_alphabet(self, other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            alphabet: self.alphabet.clone(),
            letters,
        })
    }

    pub fn pow(&self, n: usize) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            letters: self.letters.repeat(n),
        }
    }

    /// `u(0, cut) · a · u(cut, |u|)`.
    pub fn with_inserted(&self, cut: usize, a: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.extend_from_slice(&self.letters[..cut]);
        letters.push(a);
        letters.extend_from_slice(&self.letters[cut..]);
        Word {
            alphabet: self.alphabet.clone(),
            letters,
        }
    }

    /// The word with its letter at 0-based `index` removed.
    pub fn without(&self, index: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.remove(index);
        Word {
            alphabet: self.alphabet.clone(),
            letters,
        }
    }

    /// Occurrence flags indexed by letter.
    pub fn alph(&self) -> Vec<bool> {
        let mut seen = vec![false; self.alphabet.size()];
        for &a in &self.letters {
            seen[a as usize] = true;
        }
        seen
    }

    pub fn alph_size(&self) -> usize {
        self.alph().into_iter().filter(|&b| b).count()
    }

    pub fn contains(&self, a: Letter) -> bool {
        self.letters.contains(&a)
    }

    /// Alphabet letters that never occur in the word, as text.
    pub fn missing_letters(&self) -> String {
        self.alph()
            .into_iter()
            .enumerate()
            .filter(|&(_, seen)| !seen)
            .map(|(a, _)| self.alphabet.symbol(a as Letter))
            .collect()
    }

    /// The same symbols over another alphabet, which must contain them all.
    pub fn reembed(&self, alphabet: &Alphabet) -> Result<Word> {
        make_word(&self.to_string(), Some(alphabet))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters
            .iter()
            .try_for_each(|&a| write!(f, "{}", self.alphabet.symbol(a)))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?} over {})", self.to_string(), self.alphabet)
    }
}

pub(crate) fn same_alphabet(u: &Word, v: &Word) -> Result<()> {
    if u.alphabet == v.alphabet {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch)
    }
}

/// Greedy left-to-right embedding of `needle` into `haystack`.
pub(crate) fn embeds(needle: &[Letter], haystack: &[Letter]) -> bool {
    let mut rest = needle.iter().peekable();
    for &b in haystack {
        match rest.peek() {
            Some(&&a) if a == b => {
                rest.next();
            }
            Some(_) => {}
            None => break,
        }
    }
    rest.peek().is_none()
}

/// `u ≼ v`: `u` is a scattered subsequence of `v`.
pub fn is_subword(u: &Word, v: &Word) -> Result<bool> {
    same_alphabet(u, v)?;
    Ok(embeds(&u.letters, &v.letters))
}

/// A duplicate-free set of words over one alphabet, kept in shortlex order.
#[derive(Clone, PartialEq, Eq)]
pub struct WordSet {
    alphabet: Alphabet,
    words: Vec<Vec<Letter>>,
}

impl WordSet {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Letter sequences, shortest first and lexicographic within a length.
    pub fn iter(&self) -> impl Iterator<Item = &[Letter]> {
        self.words.iter().map(Vec::as_slice)
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        self.words.binary_search_by(|x| shortlex(x, w)).is_ok()
    }

    pub fn to_words(&self) -> Vec<Word> {
        self.words
            .iter()
            .map(|w| Word {
                alphabet: self.alphabet.clone(),
                letters: w.clone(),
            })
            .collect()
    }
}

impl fmt::Debug for WordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.to_words().iter().map(|w| w.to_string()))
            .finish()
    }
}

pub(crate) fn shortlex(x: &[Letter], y: &[Letter]) -> std::cmp::Ordering {
    x.len().cmp(&y.len()).then_with(|| x.cmp(y))
}

/// `↓u ∩ A^{≤k}` with the default budget.
pub fn downset_upto(u: &Word, k: usize) -> Result<WordSet> {
    downset_upto_with(u, k, DEFAULT_BUDGET)
}

/// `↓u ∩ A^{≤k}`, failing once more than `budget` subwords would be stored.
pub fn downset_upto_with(u: &Word, k: usize, budget: usize) -> Result<WordSet> {
    let mut layers = Layers::new(u, budget)?;
    let mut words = vec![Vec::new()];
    for _ in 0..k {
        match layers.advance()? {
            Some(layer) => words.extend_from_slice(layer),
            None => break,
        }
    }
    Ok(WordSet {
        alphabet: u.alphabet.clone(),
        words,
    })
}

/// The subwords of a word, one length at a time.
///
/// Every distinct subword has exactly one greedy (leftmost) embedding, so
/// extending each subword by the next occurrence of every letter visits each
/// subword once. Extending a lexicographically sorted layer letter by letter
/// keeps the next layer sorted.
pub(crate) struct Layers {
    width: usize,
    // next[p * width + a]: 1 + index of the first `a` at or after p, 0 if none
    next: Vec<usize>,
    words: Vec<Vec<Letter>>,
    ends: Vec<usize>,
    stored: usize,
    budget: usize,
}

impl Layers {
    pub(crate) fn new(u: &Word, budget: usize) -> Result<Self> {
        if budget == 0 {
            return Err(Error::BudgetExceeded { budget });
        }
        let width = u.alphabet.size();
        let n = u.len();
        let mut next = vec![0usize; (n + 1) * width];
        for p in (0..n).rev() {
            let (head, tail) = next.split_at_mut((p + 1) * width);
            head[p * width..].copy_from_slice(&tail[..width]);
            head[p * width + u.letters[p] as usize] = p + 1;
        }
        Ok(Layers {
            width,
            next,
            words: vec![Vec::new()],
            ends: vec![0],
            stored: 1,
            budget,
        })
    }

    /// Moves to the next length; `None` once no longer subwords exist.
    pub(crate) fn advance(&mut self) -> Result<Option<&[Vec<Letter>]>> {
        let mut words = Vec::new();
        let mut ends = Vec::new();
        for (w, &end) in self.words.iter().zip(&self.ends) {
            for a in 0..self.width {
                let q = self.next[end * self.width + a];
                if q == 0 {
                    continue;
                }
                if self.stored >= self.budget {
                    return Err(Error::BudgetExceeded {
                        budget: self.budget,
                    });
                }
                self.stored += 1;
                let mut s = Vec::with_capacity(w.len() + 1);
                s.extend_from_slice(w);
                s.push(a as Letter);
                words.push(s);
                ends.push(q);
            }
        }
        if words.is_empty() {
            return Ok(None);
        }
        self.words = words;
        self.ends = ends;
        Ok(Some(&self.words))
    }
}

/// `u ∼_k v`.
pub fn sim_k(u: &Word, v: &Word, k: usize) -> Result<bool> {
    sim_k_with(u, v, k, DEFAULT_BUDGET)
}

pub fn sim_k_with(u: &Word, v: &Word, k: usize, budget: usize) -> Result<bool> {
    same_alphabet(u, v)?;
    let mut lu = Layers::new(u, budget)?;
    let mut lv = Layers::new(v, budget)?;
    for _ in 0..k {
        match (lu.advance()?, lv.advance()?) {
            (None, None) => return Ok(true),
            (x, y) if x != y => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}
