#![allow(dead_code)]

use piecewise::{Alphabet, Letter, Word};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::Rng;

pub const SYMBOLS: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";

pub fn alphabet(k: usize) -> Alphabet {
    Alphabet::new(SYMBOLS.chars().take(k)).unwrap()
}

pub fn word(a: &Alphabet, text: &str) -> Word {
    piecewise::make_word(text, Some(a)).unwrap()
}

/// All words of length exactly `n`, in lexicographic order.
pub fn words_of_len(a: &Alphabet, n: usize) -> Vec<Word> {
    let k = a.size() as Letter;
    let mut out = Vec::new();
    let mut cur = vec![0 as Letter; n];
    loop {
        out.push(Word::from_letters(a, cur.clone()).unwrap());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < k {
                break;
            }
            cur[i] = 0;
        }
    }
}

pub fn words_upto(a: &Alphabet, n: usize) -> Vec<Word> {
    (0..=n).flat_map(|len| words_of_len(a, len)).collect()
}

pub fn surjective(u: &Word) -> bool {
    u.missing_letters().is_empty()
}

pub fn random_word(rng: &mut StdRng, a: &Alphabet, len: usize) -> Word {
    let k = a.size();
    let letters = (0..len).map(|_| rng.random_range(0..k) as Letter).collect();
    Word::from_letters(a, letters).unwrap()
}

pub fn random_surjective(rng: &mut StdRng, a: &Alphabet, len: usize) -> Word {
    assert!(len >= a.size());
    loop {
        let u = random_word(rng, a, len);
        if surjective(&u) {
            return u;
        }
    }
}

/// A fully arched word with `arches` arches, each a shuffled alphabet with
/// random padding before its closing letter.
pub fn random_arched(rng: &mut StdRng, a: &Alphabet, arches: usize) -> Word {
    let k = a.size();
    let mut letters = Vec::new();
    for _ in 0..arches {
        let mut order: Vec<Letter> = (0..k as Letter).collect();
        for i in (1..k).rev() {
            order.swap(i, rng.random_range(0..=i));
        }
        let last = order.pop().unwrap();
        for x in order {
            letters.push(x);
            for _ in 0..rng.random_range(0..3) {
                let y = rng.random_range(0..k) as Letter;
                if y != last {
                    letters.push(y);
                }
            }
        }
        letters.push(last);
    }
    Word::from_letters(a, letters).unwrap()
}

pub fn letters_strategy(k: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(0..k as Letter, 0..=max_len)
}

/// A word over an alphabet of 1 to `max_k` letters.
pub fn word_strategy(max_k: usize, max_len: usize) -> impl Strategy<Value = Word> {
    (1..=max_k).prop_flat_map(move |k| {
        letters_strategy(k, max_len)
            .prop_map(move |ls| Word::from_letters(&alphabet(k), ls).unwrap())
    })
}

/// Several words over one shared alphabet.
pub fn words_strategy(
    max_k: usize,
    max_len: usize,
    count: usize,
) -> impl Strategy<Value = Vec<Word>> {
    (1..=max_k).prop_flat_map(move |k| {
        prop::collection::vec(letters_strategy(k, max_len), count).prop_map(move |ws| {
            let a = alphabet(k);
            ws.into_iter()
                .map(|ls| Word::from_letters(&a, ls).unwrap())
                .collect()
        })
    })
}
