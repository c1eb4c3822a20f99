use alloc::vec::Vec;

use crate::antimorphism::Antimorphism;
use crate::bisequence::DirectiveBiSequence;
use crate::closure::generate;
use crate::error::{Error, Result};
use crate::oracle::pseudopalindromic_prefixes;

/// Antimorphisms whose pseudopalindromic prefixes a normalized chain must
/// capture: `{R, E}` over a binary alphabet, otherwise those written in `Θ`.
pub fn normalization_check_set(bi: &DirectiveBiSequence) -> Vec<Antimorphism> {
    if bi.alphabet().size() == 2 {
        alloc::vec![Antimorphism::reversal(2), Antimorphism::exchange()]
    } else {
        bi.occurring_antimorphisms().into_iter().collect()
    }
}

/// Generates `w_1..w_depth` and checks that every pseudopalindromic prefix
/// of `w_depth` no longer than `w_{depth-1}` is one of the `w_n`.
pub fn is_normalized_empirical(bi: &DirectiveBiSequence, depth: usize) -> Result<bool> {
    Ok(first_skipped_prefix(bi, depth)?.is_none())
}

/// The shortest pseudopalindromic prefix length skipped by the chain, if any.
pub fn first_skipped_prefix(bi: &DirectiveBiSequence, depth: usize) -> Result<Option<usize>> {
    if depth == 0 {
        return Err(Error::Precondition("depth must be at least 1".into()));
    }
    let chain = generate(bi, depth)?;
    let bound = if depth >= 2 { chain.lengths()[depth - 2] } else { 0 };
    let found = pseudopalindromic_prefixes(chain.word(), &normalization_check_set(bi))?;
    Ok(found
        .into_iter()
        .map(|(len, _)| len)
        .find(|&len| len <= bound && !chain.has_prefix_of_length(len)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::notation::parse_bisequence;

    fn bi(delta: &str, theta: &str) -> DirectiveBiSequence {
        parse_bisequence(&Alphabet::binary(), delta, theta, &[]).unwrap()
    }

    #[test]
    fn examples() {
        let b = bi("(011)", "(EER)");
        assert!(!is_normalized_empirical(&b, 4).unwrap());
        assert_eq!(first_skipped_prefix(&b, 4).unwrap(), Some(1));
        assert!(is_normalized_empirical(&bi("01(10)", "RE(RE)"), 6).unwrap());
        assert!(is_normalized_empirical(&bi("(0)", "(R)"), 5).unwrap());
        assert!(is_normalized_empirical(&bi("(0)", "(R)"), 0).is_err());
    }
}
