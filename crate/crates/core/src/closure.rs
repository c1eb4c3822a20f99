//! `θ`-palindromic closure and the prefix chain `w_n` of a generalized
//! pseudostandard word, `w_0 = ε`, `w_{n+1} = (w_n δ_{n+1})^{ϑ_{n+1}}`.

use alloc::vec::Vec;

use crate::alphabet::Letter;
use crate::antimorphism::Antimorphism;
use crate::bisequence::DirectiveBiSequence;
use crate::error::{Error, Result};
use crate::pal_tree::PalindromicTree;
use crate::word::Word;

/// Default safety cap on the number of generated letters.
pub const DEFAULT_MAX_LETTERS: usize = 1 << 24;

/// Limits for prefix generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureConfig {
    pub max_letters: usize,
}

impl Default for ClosureConfig {
    fn default() -> Self {
        ClosureConfig { max_letters: DEFAULT_MAX_LETTERS }
    }
}

/// Length of the longest `θ`-palindromic suffix, by scanning suffixes
/// longest first.
fn longest_suffix_len(w: &[Letter], theta: &Antimorphism) -> usize {
    (0..=w.len())
        .find(|&start| theta.is_palindrome_unchecked(&w[start..]))
        .map_or(0, |start| w.len() - start)
}

/// The longest suffix `s` of `w` with `s = θ(s)`; `ε` when no nonempty one exists.
pub fn longest_theta_palindromic_suffix(w: &[Letter], theta: &Antimorphism) -> Result<Word> {
    theta.is_palindrome(w)?;
    let n = longest_suffix_len(w, theta);
    Ok(Word::from(&w[w.len() - n..]))
}

/// The `θ`-palindromic closure `w^θ`: the shortest `θ`-palindrome with prefix `w`.
///
/// Writing `w = p·s` with `s` the longest `θ`-palindromic suffix, the
/// closure is `p·s·θ(p)`.
pub fn closure(w: &[Letter], theta: &Antimorphism) -> Result<Word> {
    theta.is_palindrome(w)?;
    let p = w.len() - longest_suffix_len(w, theta);
    let mut out = Word::from(w);
    for &l in w[..p].iter().rev() {
        out.push(theta.image(l));
    }
    Ok(out)
}

/// Incremental generator for the prefix chain `w_1, w_2, ...`.
///
/// Keeps one growing buffer and one palindromic tree per antimorphism in
/// `Θ`, so each closure step costs time proportional to the letters it adds.
#[derive(Debug, Clone)]
pub struct Generator<'a> {
    bi: &'a DirectiveBiSequence,
    config: ClosureConfig,
    buffer: Vec<Letter>,
    trees: Vec<PalindromicTree>,
    tree_pre: Vec<usize>,
    tree_cycle: Vec<usize>,
    lengths: Vec<usize>,
}

impl<'a> Generator<'a> {
    pub fn new(bi: &'a DirectiveBiSequence) -> Self {
        Self::with_config(bi, ClosureConfig::default())
    }

    pub fn with_config(bi: &'a DirectiveBiSequence, config: ClosureConfig) -> Self {
        let mut trees: Vec<PalindromicTree> = Vec::new();
        let mut index_of = |t: &Antimorphism| match trees.iter().position(|x| x.antimorphism() == t) {
            Some(i) => i,
            None => {
                trees.push(PalindromicTree::new(t.clone()));
                trees.len() - 1
            }
        };
        let tree_pre = bi.theta().preamble().iter().map(&mut index_of).collect();
        let tree_cycle = bi.theta().cycle().iter().map(&mut index_of).collect();
        Generator { bi, config, buffer: Vec::new(), trees, tree_pre, tree_cycle, lengths: Vec::new() }
    }

    fn tree_for(&self, n: usize) -> usize {
        if n <= self.tree_pre.len() {
            self.tree_pre[n - 1]
        } else {
            self.tree_cycle[(n - self.tree_pre.len() - 1) % self.tree_cycle.len()]
        }
    }

    fn push(&mut self, l: Letter) {
        self.buffer.push(l);
        for t in &mut self.trees {
            t.push(&self.buffer);
        }
    }

    /// Number of prefixes `w_n` completed so far.
    pub fn count(&self) -> usize {
        self.lengths.len()
    }

    /// Letters generated so far. Always a prefix of the infinite word.
    pub fn letters(&self) -> &[Letter] {
        &self.buffer
    }

    /// Computes `w_{n+1}`, stopping early once the buffer holds `stop_at`
    /// letters. Returns `true` when the prefix was completed.
    fn step(&mut self, stop_at: usize) -> Result<bool> {
        let n = self.lengths.len() + 1;
        if self.buffer.len() >= self.config.max_letters {
            return Err(Error::Resource { requested: self.buffer.len() + 1, cap: self.config.max_letters });
        }
        self.push(self.bi.letter(n));
        let tree = self.tree_for(n);
        let theta = self.trees[tree].antimorphism().clone();
        let p = self.buffer.len() - self.trees[tree].longest_suffix();
        let target = self.buffer.len() + p;
        if target > self.config.max_letters && stop_at > self.config.max_letters {
            return Err(Error::Resource { requested: target, cap: self.config.max_letters });
        }
        for j in (0..p).rev() {
            if self.buffer.len() >= stop_at {
                return Ok(false);
            }
            let l = theta.image(self.buffer[j]);
            self.push(l);
        }
        self.lengths.push(self.buffer.len());
        Ok(true)
    }

    /// Computes the next prefix `w_{n+1}` and returns its length.
    pub fn next_prefix(&mut self) -> Result<usize> {
        self.step(usize::MAX)?;
        Ok(self.buffer.len())
    }

    /// Generates at least `len` letters (the last prefix may be left partial).
    pub fn extend_to(&mut self, len: usize) -> Result<()> {
        if len > self.config.max_letters {
            return Err(Error::Resource { requested: len, cap: self.config.max_letters });
        }
        while self.buffer.len() < len {
            if !self.step(len)? {
                break;
            }
        }
        Ok(())
    }

    pub fn into_prefix_sequence(self) -> PrefixSequence {
        debug_assert_eq!(self.lengths.last().copied().unwrap_or(0), self.buffer.len());
        PrefixSequence { bi: self.bi.clone(), word: Word::from(self.buffer), lengths: self.lengths }
    }
}

/// The chain `w_1 .. w_N`, stored as lengths into one shared word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixSequence {
    bi: DirectiveBiSequence,
    word: Word,
    lengths: Vec<usize>,
}

impl PrefixSequence {
    pub fn bisequence(&self) -> &DirectiveBiSequence {
        &self.bi
    }

    /// `N`, the number of generated prefixes.
    pub fn generated_count(&self) -> usize {
        self.lengths.len()
    }

    /// `|w_1|, .., |w_N|`.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// `w_N`, the longest generated prefix.
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// `w_n` for `0 <= n <= N`.
    pub fn prefix(&self, n: usize) -> &[Letter] {
        if n == 0 {
            &[]
        } else {
            &self.word[..self.lengths[n - 1]]
        }
    }

    /// Whether some `w_n` (n >= 1) has exactly this length.
    pub fn has_prefix_of_length(&self, len: usize) -> bool {
        self.lengths.binary_search(&len).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Letter]> + '_ {
        (1..=self.lengths.len()).map(move |n| self.prefix(n))
    }
}

/// Generates `w_1 .. w_n` under the default letter cap.
pub fn generate(bi: &DirectiveBiSequence, n: usize) -> Result<PrefixSequence> {
    generate_with(bi, n, ClosureConfig::default())
}

pub fn generate_with(bi: &DirectiveBiSequence, n: usize, config: ClosureConfig) -> Result<PrefixSequence> {
    let mut g = Generator::with_config(bi, config);
    for _ in 0..n {
        g.next_prefix()?;
    }
    Ok(g.into_prefix_sequence())
}

/// The first `len` letters of `u(Δ, Θ)`.
pub fn word_prefix(bi: &DirectiveBiSequence, len: usize) -> Result<Word> {
    word_prefix_with(bi, len, ClosureConfig::default())
}

pub fn word_prefix_with(bi: &DirectiveBiSequence, len: usize, config: ClosureConfig) -> Result<Word> {
    let mut g = Generator::with_config(bi, config);
    g.extend_to(len)?;
    Ok(Word::from(&g.letters()[..len]))
}
