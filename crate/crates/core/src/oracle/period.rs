use crate::alphabet::Letter;
use crate::error::{Error, Result};

/// Border (failure) array: `b[i]` is the length of the longest proper
/// border of `w[..=i]`.
pub fn border_array(w: &[Letter]) -> alloc::vec::Vec<usize> {
    let mut b = alloc::vec![0; w.len()];
    let mut k = 0;
    for i in 1..w.len() {
        while k > 0 && w[i] != w[k] {
            k = b[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        b[i] = k;
    }
    b
}

/// Smallest `p >= 1` with `w[i] = w[i+p]` wherever both sides exist.
pub fn minimal_period(w: &[Letter]) -> Result<usize> {
    match border_array(w).last() {
        None => Err(Error::Precondition("the empty word has no period".into())),
        Some(&border) => Ok(w.len() - border),
    }
}

/// Whether `p` is a period of `w`.
pub fn has_period(w: &[Letter], p: usize) -> bool {
    p >= 1 && (p..w.len()).all(|i| w[i] == w[i - p])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(minimal_period(&w("0110011001")).unwrap(), 4);
        assert_eq!(minimal_period(&w("00000")).unwrap(), 1);
        assert_eq!(minimal_period(&w("0110")).unwrap(), 3);
        assert_eq!(minimal_period(&w("0")).unwrap(), 1);
        assert!(minimal_period(&w("")).is_err());
    }

    proptest! {
        #[test]
        fn matches_direct_search(letters in proptest::collection::vec(0u8..3, 1..40)) {
            let word: Word = letters.into_iter().map(Letter::new).collect();
            let direct = (1..=word.len()).find(|&p| has_period(&word, p)).unwrap();
            prop_assert_eq!(minimal_period(&word).unwrap(), direct);
        }
    }
}
