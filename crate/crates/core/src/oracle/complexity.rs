use alloc::vec;
use alloc::vec::Vec;

use crate::alphabet::Letter;
use crate::error::{Error, Result};

/// Factor counts `C(1..=n_max)` of a finite word and the lengths at which
/// a left special factor was seen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityProfile {
    /// `values[n-1] = C(n)`.
    pub values: Vec<usize>,
    /// Sorted lengths `n` with a factor of length `n` having two distinct
    /// left extensions inside the word.
    pub left_special_lengths: Vec<usize>,
}

impl ComplexityProfile {
    pub fn n_max(&self) -> usize {
        self.values.len()
    }

    /// `C(n)` for `1 <= n <= n_max`.
    pub fn count(&self, n: usize) -> usize {
        self.values[n - 1]
    }

    pub fn has_left_special(&self, n: usize) -> bool {
        self.left_special_lengths.binary_search(&n).is_ok()
    }

    /// Smallest `n` in range with `C(n) <= n`.
    pub fn first_below_aperiodic_bound(&self, up_to: usize) -> Option<usize> {
        (1..=up_to.min(self.n_max())).find(|&n| self.count(n) <= n)
    }

    /// Smallest `n` in `1..=up_to` without a left special factor.
    pub fn first_length_without_left_special(&self, up_to: usize) -> Option<usize> {
        (1..=up_to).find(|&n| !self.has_left_special(n))
    }
}

const NO_LETTER: u8 = u8::MAX;

/// Counts distinct factors of each length `1..=n_max` by refining the
/// classes of equal windows one letter at a time.
///
/// Only windows lying inside `w` are counted; left extensions come from
/// occurrences starting at position 1 or later.
pub fn factor_complexity(w: &[Letter], n_max: usize) -> Result<ComplexityProfile> {
    if n_max >= w.len() {
        return Err(Error::Precondition(alloc::format!(
            "factor_complexity needs n_max < |w|, got n_max={n_max}, |w|={}",
            w.len()
        )));
    }
    let d = w.iter().map(|l| l.index() + 1).max().unwrap_or(1);
    let len = w.len();
    let mut values = Vec::with_capacity(n_max);
    let mut left_special_lengths = Vec::new();

    // class[i] identifies the factor w[i..i+n].
    let mut class: Vec<u32> = w.iter().map(|l| l.index() as u32).collect();
    let mut classes = d;
    let mut table: Vec<u32> = Vec::new();
    let mut left: Vec<u8> = Vec::new();
    let mut special: Vec<bool> = Vec::new();
    for n in 1..=n_max {
        if n > 1 {
            // Extend windows of length n-1 by the letter at i+n-1.
            let windows = len - n + 1;
            table.clear();
            table.resize(classes * d, u32::MAX);
            let mut next = 0u32;
            for i in 0..windows {
                let key = class[i] as usize * d + w[i + n - 1].index();
                if table[key] == u32::MAX {
                    table[key] = next;
                    next += 1;
                }
                class[i] = table[key];
            }
            class.truncate(windows);
            classes = next as usize;
        } else {
            // Relabel letters densely.
            let mut seen = vec![u32::MAX; d];
            let mut next = 0u32;
            for c in class.iter_mut() {
                if seen[*c as usize] == u32::MAX {
                    seen[*c as usize] = next;
                    next += 1;
                }
                *c = seen[*c as usize];
            }
            classes = next as usize;
        }
        values.push(classes);
        left.clear();
        left.resize(classes, NO_LETTER);
        special.clear();
        special.resize(classes, false);
        let mut any = false;
        for i in 1..class.len() {
            let c = class[i] as usize;
            let a = w[i - 1].index() as u8;
            if left[c] == NO_LETTER {
                left[c] = a;
            } else if left[c] != a && !special[c] {
                special[c] = true;
                any = true;
                break;
            }
        }
        if any {
            left_special_lengths.push(n);
        }
    }
    Ok(ComplexityProfile { values, left_special_lengths })
}

/// For each letter `a`, the largest `ℓ` such that `a·w[..ℓ]` occurs in `w`
/// (`None` when `a` does not occur).
///
/// Uses the Z-array of `w`: an occurrence of the prefix of length `z[i]`
/// at position `i >= 1` is preceded by `w[i-1]`.
pub fn prefix_left_extension_reach(w: &[Letter], d: usize) -> Vec<Option<usize>> {
    let z = z_array(w);
    let mut reach = vec![None; d];
    for i in 1..w.len() {
        let a = w[i - 1].index();
        if reach[a].is_none_or(|r| r < z[i]) {
            reach[a] = Some(z[i]);
        }
    }
    if let Some(last) = w.last() {
        reach[last.index()].get_or_insert(0);
    }
    reach
}

/// Z-array: `z[i]` is the length of the longest common prefix of `s` and
/// `s[i..]`, with `z[0] = |s|`.
pub(crate) fn z_array<T: PartialEq>(s: &[T]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        if i < r {
            z[i] = (r - i).min(z[i - l]);
        }
        while i + z[i] < n && s[z[i]] == s[i + z[i]] {
            z[i] += 1;
        }
        if i + z[i] > r {
            l = i;
            r = i + z[i];
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;
    use alloc::collections::{BTreeMap, BTreeSet};
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Sorted-window reference.
    fn naive(w: &[Letter], n_max: usize) -> ComplexityProfile {
        let mut values = Vec::new();
        let mut ls = Vec::new();
        for n in 1..=n_max {
            let factors: BTreeSet<&[Letter]> = w.windows(n).collect();
            values.push(factors.len());
            let mut ext: BTreeMap<&[Letter], BTreeSet<Letter>> = BTreeMap::new();
            for i in 1..=w.len() - n {
                ext.entry(&w[i..i + n]).or_default().insert(w[i - 1]);
            }
            if ext.values().any(|s| s.len() >= 2) {
                ls.push(n);
            }
        }
        ComplexityProfile { values, left_special_lengths: ls }
    }

    #[test]
    fn examples() {
        let p = factor_complexity(&w("0101010101"), 3).unwrap();
        assert_eq!(p.values, [2, 2, 2]);
        assert!(p.left_special_lengths.is_empty());
        let p = factor_complexity(&w("0110"), 2).unwrap();
        assert_eq!(p.values, [2, 3]);
        assert!(factor_complexity(&w("0110"), 4).is_err());
    }

    #[test]
    fn z_array_example() {
        assert_eq!(z_array(&[0, 0, 1, 0, 0, 1, 0]), [7, 1, 0, 4, 1, 0, 1]);
    }

    #[test]
    fn prefix_reach_example() {
        // 0110: prefix 0 occurs at 3 after 1; prefix "" after every letter.
        let reach = prefix_left_extension_reach(&w("0110"), 2);
        assert_eq!(reach, [Some(0), Some(1)]);
    }

    proptest! {
        #[test]
        fn matches_sorted_windows(letters in proptest::collection::vec(0u8..3, 2..60), n in 1usize..12) {
            let word: Word = letters.into_iter().map(Letter::new).collect();
            let n = n.min(word.len() - 1);
            prop_assert_eq!(factor_complexity(&word, n).unwrap(), naive(&word, n));
        }

        #[test]
        fn prefix_reach_matches_search(letters in proptest::collection::vec(0u8..3, 1..40)) {
            let word: Word = letters.into_iter().map(Letter::new).collect();
            let reach = prefix_left_extension_reach(&word, 3);
            for a in 0..3u8 {
                let expected = (0..word.len())
                    .filter(|&l| {
                        let mut f = alloc::vec![Letter::new(a)];
                        f.extend_from_slice(&word[..l]);
                        word.windows(l + 1).any(|x| x == f.as_slice())
                    })
                    .max();
                prop_assert_eq!(reach[a as usize], expected);
            }
        }
    }
}
