use alloc::format;

use crate::alphabet::Letter;
use crate::bisequence::DirectiveBiSequence;
use crate::closure::word_prefix;
use crate::error::{Error, Result};
use crate::oracle::{has_period, minimal_period};
use crate::word::Word;

/// Letters generated when a formula period is checked.
pub const VALIDATION_MIN_LETTERS: usize = 2000;

/// A formula period confirmed on a generated prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckedPeriod {
    /// `u[..|block|]`: the formula's period read from the start of the word.
    pub period: Word,
    /// The smallest period of the word; its length divides `|period|`.
    pub minimal: Word,
}

/// Checks that `block` occurs at `offset` of `u(Δ, Θ)` and that `|block|`
/// is a period of the first `max(2000, 10·|block|, offset + |block|)` letters.
pub(crate) fn check_period(bi: &DirectiveBiSequence, block: &[Letter], offset: usize) -> Result<CheckedPeriod> {
    let len = block.len();
    if len == 0 {
        return Err(Error::Internal("empty formula period".into()));
    }
    let n = VALIDATION_MIN_LETTERS.max(10 * len).max(offset + len);
    let prefix = word_prefix(bi, n)?;
    if prefix[offset..offset + len] != *block {
        return Err(Error::Internal(format!(
            "formula block {} does not occur at offset {offset} of u",
            Word::from(block)
        )));
    }
    if !has_period(&prefix, len) {
        return Err(Error::Internal(format!("{len} is not a period of the first {n} letters of u")));
    }
    let m = minimal_period(&prefix)?;
    if len % m != 0 {
        return Err(Error::Internal(format!("smallest period {m} does not divide the formula period {len}")));
    }
    Ok(CheckedPeriod { period: Word::from(&prefix[..len]), minimal: Word::from(&prefix[..m]) })
}
