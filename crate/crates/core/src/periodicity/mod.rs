//! Periodicity deciders and period formulas.

mod binary;
mod conjecture;
mod ternary;
mod validate;
mod verdict;

use alloc::collections::BTreeSet;
use alloc::format;

pub use binary::{binary_condition_holds, binary_period, decide_binary};
pub use conjecture::{check_conjecture, check_conjecture_with, ConjectureReport};
pub use ternary::{decide_ternary, pairing_table, ternary_period, TernaryCase};
pub use validate::{CheckedPeriod, VALIDATION_MIN_LETTERS};
pub use verdict::{Certificate, Evidence, PeriodicityVerdict, VerdictKind};

use crate::alphabet::Letter;
use crate::bisequence::DirectiveBiSequence;
use crate::error::{Error, Result};

/// `{ϑ(x) : (ϑ, x) a tail pair}`.
///
/// Every `w_n` is a `ϑ_n`-palindrome followed by `δ_{n+1}`, and the language
/// is closed under every recurring `ϑ`, so each prefix extends to the left
/// by every letter of this set. Two or more letters make every prefix left
/// special, hence the word aperiodic, on any alphabet.
pub fn left_special_images(bi: &DirectiveBiSequence) -> BTreeSet<Letter> {
    bi.tail_pairs().iter().map(|(t, x)| t.image(*x)).collect()
}

/// [`decide_binary`] or [`decide_ternary`] according to the alphabet size.
pub fn decide(bi: &DirectiveBiSequence) -> Result<PeriodicityVerdict> {
    match bi.alphabet().size() {
        2 => decide_binary(bi),
        3 => decide_ternary(bi),
        d => Err(Error::Domain(format!(
            "no periodicity decision procedure on {d} letters; use the empirical classifier"
        ))),
    }
}
