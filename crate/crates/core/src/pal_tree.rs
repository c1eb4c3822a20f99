//! Palindromic tree (eertree) over `θ`-palindromes for one involutory
//! antimorphism `θ`.
//!
//! A `θ`-palindrome of length at least 2 reads `θ(c) · X · c` with `X` a
//! `θ`-palindrome, so the classic construction carries over with the match
//! test `s[i - |X| - 1] == θ(c)`. Unlike ordinary palindromes, a single
//! letter `c` is a `θ`-palindrome only when `θ(c) = c`, so the imaginary root
//! can fail; the longest suffix then falls back to the empty node.

use alloc::vec::Vec;

use crate::alphabet::Letter;
use crate::antimorphism::Antimorphism;

const IMAGINARY: u32 = 0;
const EMPTY: u32 = 1;
const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub(crate) struct PalindromicTree {
    theta: Antimorphism,
    len: Vec<i32>,
    link: Vec<u32>,
    // stride = alphabet size
    next: Vec<u32>,
    last: u32,
    processed: usize,
}

impl PalindromicTree {
    pub fn new(theta: Antimorphism) -> Self {
        let d = theta.size();
        let mut next = Vec::new();
        next.resize(2 * d, NONE);
        PalindromicTree {
            theta,
            len: alloc::vec![-1, 0],
            link: alloc::vec![IMAGINARY, IMAGINARY],
            next,
            last: EMPTY,
            processed: 0,
        }
    }

    pub fn antimorphism(&self) -> &Antimorphism {
        &self.theta
    }

    /// Length of the longest `θ`-palindromic suffix of the processed text.
    #[inline]
    pub fn longest_suffix(&self) -> usize {
        self.len[self.last as usize].max(0) as usize
    }

    /// Walks the suffix-link chain from `node` to the first `θ`-palindromic
    /// suffix `X` of `s[..i]` preceded by `θ(s[i])`; `None` when even the
    /// imaginary root fails.
    #[inline]
    fn find_extendable(&self, s: &[Letter], i: usize, mut node: u32) -> Option<u32> {
        let want = self.theta.image(s[i]);
        loop {
            let l = self.len[node as usize];
            let j = i as isize - l as isize - 1;
            if j >= 0 && s[j as usize] == want {
                return Some(node);
            }
            if node == IMAGINARY {
                return None;
            }
            node = self.link[node as usize];
        }
    }

    /// Feeds `s[processed]`; `s` is the whole text so far.
    pub fn push(&mut self, s: &[Letter]) {
        let i = self.processed;
        debug_assert!(i < s.len());
        self.processed += 1;
        let d = self.theta.size();
        let c = s[i].index();
        let Some(parent) = self.find_extendable(s, i, self.last) else {
            self.last = EMPTY;
            return;
        };
        let slot = parent as usize * d + c;
        if self.next[slot] != NONE {
            self.last = self.next[slot];
            return;
        }
        let new_len = self.len[parent as usize] + 2;
        // The longest proper θ-palindromic suffix of the new node is also one
        // of its prefixes, so it already has a node.
        let link = if new_len == 1 {
            EMPTY
        } else {
            match self.find_extendable(s, i, self.link[parent as usize]) {
                Some(p) => {
                    let target = self.next[p as usize * d + c];
                    debug_assert_ne!(target, NONE);
                    target
                }
                None => EMPTY,
            }
        };
        let id = self.len.len() as u32;
        self.len.push(new_len);
        self.link.push(link);
        self.next.resize(self.next.len() + d, NONE);
        self.next[slot] = id;
        self.last = id;
    }
}
