use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::word::Word;

/// An involutory antimorphism: reverse a word, then map each letter through
/// an involutive permutation.
///
/// Two antimorphisms compare equal when their permutations agree; the name
/// is only a display token.
#[derive(Clone)]
pub struct Antimorphism {
    name: Arc<str>,
    perm: Arc<[Letter]>,
}

impl Antimorphism {
    /// Builds an antimorphism from letter images, checking that the map is
    /// an involution on `{0, .., images.len()-1}`.
    pub fn from_images(name: &str, images: &[usize]) -> Result<Self> {
        let d = images.len();
        if d < 2 {
            return Err(Error::Invalid(format!("antimorphism {name} needs at least 2 letters")));
        }
        if name.is_empty() || name.chars().any(|c| c.is_whitespace() || "()>:,".contains(c)) {
            return Err(Error::Invalid(format!("{name:?} is not a valid antimorphism name")));
        }
        for (x, &y) in images.iter().enumerate() {
            if y >= d {
                return Err(Error::Invalid(format!(
                    "antimorphism {name} maps letter {x} outside the alphabet"
                )));
            }
            if images[y] != x {
                return Err(Error::Invalid(format!(
                    "antimorphism {name} is not involutory: {x} -> {y} -> {}",
                    images[y]
                )));
            }
        }
        Ok(Antimorphism {
            name: Arc::from(name),
            perm: images.iter().map(|&y| Letter::new(y as u8)).collect(),
        })
    }

    /// The mirror map `R` over an alphabet of size `d`.
    pub fn reversal(d: usize) -> Self {
        let ids: Vec<usize> = (0..d).collect();
        Self::from_images("R", &ids).expect("identity is involutory")
    }

    /// The binary exchange antimorphism `E`: `0 <-> 1`.
    pub fn exchange() -> Self {
        Self::from_images("E", &[1, 0]).expect("swap is involutory")
    }

    /// Ternary `E_i`: fixes `i`, swaps the two other letters.
    pub fn ternary_exchange(fixed: usize) -> Self {
        assert!(fixed < 3, "ternary exchange index must be 0, 1 or 2");
        let mut images = [0usize, 1, 2];
        let others: Vec<usize> = (0..3).filter(|&x| x != fixed).collect();
        images[others[0]] = others[1];
        images[others[1]] = others[0];
        let name = ["E0", "E1", "E2"][fixed];
        Self::from_images(name, &images).expect("transposition is involutory")
    }

    /// The antimorphisms available by name over `alphabet` without a
    /// declaration: `R, E` when binary, `R, E0, E1, E2` when ternary and
    /// `R` otherwise.
    pub fn builtins(alphabet: &Alphabet) -> Vec<Antimorphism> {
        let d = alphabet.size();
        let mut out = alloc::vec![Self::reversal(d)];
        match d {
            2 => out.push(Self::exchange()),
            3 => out.extend((0..3).map(Self::ternary_exchange)),
            _ => {}
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Alphabet size the permutation acts on.
    #[inline]
    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn permutation(&self) -> &[Letter] {
        &self.perm
    }

    /// Image of a single letter under the permutation.
    #[inline]
    pub fn image(&self, letter: Letter) -> Letter {
        self.perm[letter.index()]
    }

    pub fn is_reversal(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, l)| l.index() == i)
    }

    pub fn fixes(&self, letter: Letter) -> bool {
        self.image(letter) == letter
    }

    fn check(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|l| l.index() >= self.size()) {
            Some(l) => Err(Error::Domain(format!(
                "letter {} outside the alphabet of {} (size {})",
                l.index(),
                self.name,
                self.size()
            ))),
            None => Ok(()),
        }
    }

    /// `theta(w)`: the reversal of `w` with the permutation applied letterwise.
    pub fn apply(&self, w: &[Letter]) -> Result<Word> {
        self.check(w)?;
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &[Letter]) -> Word {
        w.iter().rev().map(|&l| self.image(l)).collect()
    }

    /// Whether `w = theta(w)`. The empty word is a palindrome for every map.
    pub fn is_palindrome(&self, w: &[Letter]) -> Result<bool> {
        self.check(w)?;
        Ok(self.is_palindrome_unchecked(w))
    }

    #[inline]
    pub(crate) fn is_palindrome_unchecked(&self, w: &[Letter]) -> bool {
        let n = w.len();
        (0..n.div_ceil(2)).all(|i| w[i] == self.image(w[n - 1 - i]))
    }

    /// Letter map `self ∘ inner` (apply `inner` first). Both maps must act on
    /// the same alphabet.
    pub fn compose_letters(&self, inner: &Antimorphism) -> Vec<Letter> {
        inner.perm.iter().map(|&l| self.image(l)).collect()
    }
}

impl PartialEq for Antimorphism {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}

impl Eq for Antimorphism {}

impl PartialOrd for Antimorphism {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Antimorphism {
    fn cmp(&self, other: &Self) -> Ordering {
        self.perm.cmp(&other.perm)
    }
}

impl Hash for Antimorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl fmt::Debug for Antimorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Display for Antimorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}
