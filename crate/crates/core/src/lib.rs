//! Piecewise complexity `h(u)` and minimality index `ρ(u)` of words.
//!
//! The crate provides Simon's congruence and subword distance by brute force
//! ([`word`], [`oracle`]), the side distances `r` and `ℓ` as r/ℓ-tables and
//! r/ℓ-vectors ([`side`]), the two measures on top of them ([`measures`]),
//! arch factorizations ([`arch`]) and the periodic reduction for `h(uⁿ)` and
//! `ρ(uⁿ)` ([`periodic`]).
//!
//! ```
//! use piecewise::{make_word, measures};
//!
//! let u = make_word("CAACBABA", None).unwrap();
//! assert_eq!(measures::h(&u), 5);
//! assert_eq!(measures::rho(&u), 3);
//! ```

pub mod arch;
pub mod cli;
pub mod error;
pub mod measures;
pub mod oracle;
pub mod periodic;
pub mod side;
pub mod word;

pub use error::{Error, Result};
pub use word::{is_subword, make_word, sim_k, Alphabet, Letter, Word, WordSet};
