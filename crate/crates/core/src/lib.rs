//! Generalized pseudostandard words over finite alphabets.
//!
//! Words are built from a directive bi-sequence `(Δ, Θ)` by iterated
//! pseudopalindromic closure. The crate normalizes bi-sequences, decides
//! periodicity with explicit periods, and ships brute-force oracles used
//! to cross-check the fast paths.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod alphabet;
pub mod antimorphism;
pub mod bisequence;
pub mod closure;
pub mod error;
pub mod family;
pub mod normalize;
pub mod notation;
pub mod oracle;
mod pal_tree;
pub mod periodicity;
pub mod sequence;
pub mod word;

pub use alphabet::{Alphabet, Letter};
pub use antimorphism::Antimorphism;
pub use bisequence::{DirectiveBiSequence, TailPair};
pub use closure::{
    closure, generate, generate_with, longest_theta_palindromic_suffix, word_prefix, word_prefix_with, ClosureConfig,
    PrefixSequence,
};
pub use error::{Error, Result};
pub use periodicity::{decide, Certificate, PeriodicityVerdict, VerdictKind};
pub use notation::{parse_antimorphism, parse_bisequence, ParseError};
pub use sequence::EventuallyPeriodic;
pub use word::Word;
