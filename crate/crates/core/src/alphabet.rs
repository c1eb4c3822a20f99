use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// Glyphs used when an alphabet is declared by size only.
const DEFAULT_GLYPHS: &str = "0123456789abcdefghijklmnopqrstuvwxyz";

/// A letter, stored as its index into an [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Letter(u8);

impl Letter {
    pub const fn new(index: u8) -> Self {
        Letter(index)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// Glyph used for this letter in an alphabet declared by size.
    pub fn default_glyph(self) -> char {
        DEFAULT_GLYPHS.chars().nth(self.index()).unwrap_or('?')
    }

    pub(crate) fn from_default_glyph(c: char) -> Option<Self> {
        DEFAULT_GLYPHS.find(c).map(|i| Letter(i as u8))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.default_glyph())
    }
}

/// A finite alphabet of `d >= 2` letters with one display glyph per letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    glyphs: Vec<char>,
}

impl Alphabet {
    /// Alphabet `{0, 1, ..., d-1}` with the default glyphs.
    pub fn with_size(d: usize) -> Result<Self> {
        if d > DEFAULT_GLYPHS.len() {
            return Err(Error::Invalid(format!(
                "alphabet of size {d} needs an explicit glyph list (at most {} default glyphs)",
                DEFAULT_GLYPHS.len()
            )));
        }
        Self::from_glyphs(DEFAULT_GLYPHS.chars().take(d).collect())
    }

    pub fn binary() -> Self {
        Self::with_size(2).expect("binary alphabet")
    }

    pub fn ternary() -> Self {
        Self::with_size(3).expect("ternary alphabet")
    }

    pub fn from_glyphs(glyphs: Vec<char>) -> Result<Self> {
        if glyphs.len() < 2 {
            return Err(Error::Invalid(format!(
                "an alphabet needs at least 2 letters, got {}",
                glyphs.len()
            )));
        }
        if glyphs.len() > u8::MAX as usize {
            return Err(Error::Invalid(format!("alphabet of size {} is too large", glyphs.len())));
        }
        for (i, g) in glyphs.iter().enumerate() {
            if g.is_whitespace() || "()>:,".contains(*g) {
                return Err(Error::Invalid(format!("glyph {g:?} is reserved")));
            }
            if glyphs[..i].contains(g) {
                return Err(Error::Invalid(format!("glyph {g:?} is declared twice")));
            }
        }
        Ok(Alphabet { glyphs })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.glyphs.len()
    }

    pub fn letter(&self, index: usize) -> Result<Letter> {
        if index < self.size() {
            Ok(Letter(index as u8))
        } else {
            Err(Error::Domain(format!(
                "letter index {index} outside alphabet of size {}",
                self.size()
            )))
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.size()).map(|i| Letter(i as u8))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.size()
    }

    pub fn glyph(&self, letter: Letter) -> char {
        self.glyphs.get(letter.index()).copied().unwrap_or('?')
    }

    pub fn glyphs(&self) -> &[char] {
        &self.glyphs
    }

    pub fn letter_of(&self, glyph: char) -> Option<Letter> {
        self.glyphs.iter().position(|&g| g == glyph).map(|i| Letter(i as u8))
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.chars()
            .map(|c| {
                self.letter_of(c)
                    .ok_or_else(|| Error::Domain(format!("glyph {c:?} is not in the alphabet")))
            })
            .collect()
    }

    pub fn render(&self, word: &[Letter]) -> String {
        word.iter().map(|&l| self.glyph(l)).collect()
    }

    /// All words of length `len`, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> impl Iterator<Item = Word> + '_ {
        let d = self.size();
        let total = d.checked_pow(len as u32).unwrap_or(usize::MAX);
        (0..total).map(move |mut code| {
            let mut letters = alloc::vec![Letter(0); len];
            for slot in letters.iter_mut().rev() {
                *slot = Letter((code % d) as u8);
                code /= d;
            }
            Word::from(letters)
        })
    }

    pub(crate) fn check_word(&self, word: &[Letter]) -> Result<()> {
        match word.iter().find(|l| !self.contains(**l)) {
            Some(l) => Err(Error::Domain(format!(
                "letter {} outside alphabet of size {}",
                l.index(),
                self.size()
            ))),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn rejects_degenerate_alphabets() {
        assert!(Alphabet::with_size(1).is_err());
        assert!(Alphabet::from_glyphs(alloc::vec!['a', 'a']).is_err());
        assert!(Alphabet::from_glyphs(alloc::vec!['a', '(']).is_err());
        assert!(Alphabet::with_size(37).is_err());
    }

    #[test]
    fn letter_bounds_are_checked() {
        let a = Alphabet::ternary();
        assert_eq!(a.letter(2).unwrap().index(), 2);
        assert!(matches!(a.letter(3), Err(Error::Domain(_))));
    }

    #[test]
    fn custom_glyphs_round_trip() {
        let a = Alphabet::from_glyphs(alloc::vec!['a', 'b', 'c']).unwrap();
        let w = a.parse_word("abca").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(a.render(&w), "abca");
        assert!(a.parse_word("abd").is_err());
    }

    #[test]
    fn enumerates_all_words() {
        let a = Alphabet::binary();
        let words: Vec<_> = a.words_of_length(3).collect();
        assert_eq!(words.len(), 8);
        assert_eq!(words[0].to_string(), "000");
        assert_eq!(words[5].to_string(), "101");
        assert_eq!(a.words_of_length(0).count(), 1);
    }
}
