use alloc::vec::Vec;

use crate::alphabet::Letter;
use crate::antimorphism::Antimorphism;
use crate::error::{Error, Result};
use crate::oracle::complexity::z_array;
use crate::word::Word;

/// Default word-length bound for [`brute_force_closure`].
pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 16;

/// Shortest `θ`-palindrome with prefix `w`, found by trying every length.
///
/// A candidate of length `L` is fully forced: its first `|w|` letters are
/// `w` and letter `i >= |w|` must equal `θ(c[L-1-i])`. The first `L` whose
/// candidate is a `θ`-palindrome wins.
pub fn brute_force_closure(w: &[Letter], theta: &Antimorphism) -> Result<Word> {
    brute_force_closure_bounded(w, theta, DEFAULT_BRUTE_FORCE_BOUND)
}

pub fn brute_force_closure_bounded(w: &[Letter], theta: &Antimorphism, bound: usize) -> Result<Word> {
    if w.len() > bound {
        return Err(Error::Resource { requested: w.len(), cap: bound });
    }
    theta.is_palindrome(w)?;
    for total in w.len()..=2 * w.len() {
        let mut c: Vec<Letter> = w.to_vec();
        for i in w.len()..total {
            c.push(theta.image(c[total - 1 - i]));
        }
        if theta.is_palindrome_unchecked(&c) {
            return Ok(Word::from(c));
        }
    }
    Err(Error::Internal("w·θ(w) is always a θ-palindrome".into()))
}

/// Every `(ℓ, θ)` with `ℓ >= 1` and `w[..ℓ]` a `θ`-palindrome, sorted by `ℓ`
/// and then by the order of `thetas`.
///
/// `w[..ℓ] = θ(w[..ℓ])` iff the prefix of `w` of length `ℓ` equals the
/// suffix of `θ(w)` of length `ℓ`; one Z-array over `w # θ(w)` answers all
/// lengths at once.
pub fn pseudopalindromic_prefixes(w: &[Letter], thetas: &[Antimorphism]) -> Result<Vec<(usize, Antimorphism)>> {
    let n = w.len();
    let mut hits: Vec<(usize, usize)> = Vec::new();
    for (k, theta) in thetas.iter().enumerate() {
        let image = theta.apply(w)?;
        let sep = u16::MAX;
        let s: Vec<u16> = w
            .iter()
            .map(|l| l.index() as u16)
            .chain(core::iter::once(sep))
            .chain(image.iter().map(|l| l.index() as u16))
            .collect();
        let z = z_array(&s);
        for len in 1..=n {
            if z[n + 1 + (n - len)] >= len {
                hits.push((len, k));
            }
        }
    }
    hits.sort_unstable();
    Ok(hits.into_iter().map(|(len, k)| (len, thetas[k].clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::closure::closure;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn closure_examples() {
        let r = Antimorphism::reversal(2);
        let e = Antimorphism::exchange();
        assert_eq!(brute_force_closure(&w("011"), &e).unwrap(), w("011001"));
        assert_eq!(brute_force_closure(&w("011"), &r).unwrap(), w("0110"));
        assert_eq!(brute_force_closure(&w("0"), &r).unwrap(), w("0"));
        assert!(matches!(
            brute_force_closure(&w("01010101010101010"), &r),
            Err(Error::Resource { requested: 17, cap: 16 })
        ));
    }

    #[test]
    fn prefix_examples() {
        let r = Antimorphism::reversal(2);
        let e = Antimorphism::exchange();
        let got: Vec<(usize, &str)> = pseudopalindromic_prefixes(&w("0110011001"), &[r.clone(), e.clone()])
            .unwrap()
            .iter()
            .map(|(l, t)| (*l, if t.is_reversal() { "R" } else { "E" }))
            .collect();
        assert_eq!(got, [(1, "R"), (2, "E"), (4, "R"), (6, "E"), (8, "R"), (10, "E")]);

        let all = Antimorphism::builtins(&Alphabet::ternary());
        let got: Vec<(usize, String)> = pseudopalindromic_prefixes(&w("012"), &all)
            .unwrap()
            .into_iter()
            .map(|(l, t)| (l, t.name().into()))
            .collect();
        assert_eq!(got, [(1, "R".into()), (1, "E0".into()), (2, "E2".into()), (3, "E1".into())]);
        assert!(pseudopalindromic_prefixes(&w("0110"), &[]).unwrap().is_empty());
    }

    use alloc::string::String;

    proptest! {
        #[test]
        fn prefixes_match_direct_check(letters in proptest::collection::vec(0u8..3, 0..30)) {
            let word: Word = letters.into_iter().map(Letter::new).collect();
            let all = Antimorphism::builtins(&Alphabet::ternary());
            let mut expected = Vec::new();
            for len in 1..=word.len() {
                for t in &all {
                    if t.is_palindrome(&word[..len]).unwrap() {
                        expected.push((len, t.clone()));
                    }
                }
            }
            prop_assert_eq!(pseudopalindromic_prefixes(&word, &all).unwrap(), expected);
        }

        #[test]
        fn brute_force_agrees_with_closure(letters in proptest::collection::vec(0u8..3, 0..12), which in 0usize..4) {
            let theta = Antimorphism::builtins(&Alphabet::ternary())[which].clone();
            let word: Word = letters.into_iter().map(Letter::new).collect();
            prop_assert_eq!(brute_force_closure(&word, &theta).unwrap(), closure(&word, &theta).unwrap());
        }
    }
}
