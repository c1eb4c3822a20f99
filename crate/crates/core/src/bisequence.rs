use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::alphabet::{Alphabet, Letter};
use crate::antimorphism::Antimorphism;
use crate::error::{Error, Result};
use crate::sequence::EventuallyPeriodic;

/// A step of the closure recurrence: the antimorphism `ϑ_n` paired with the
/// letter `δ_{n+1}` appended right after `w_n` is built.
pub type TailPair = (Antimorphism, Letter);

/// The directive bi-sequence `(Δ, Θ)` steering the generalized
/// pseudopalindromic closure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectiveBiSequence {
    alphabet: Alphabet,
    delta: EventuallyPeriodic<Letter>,
    theta: EventuallyPeriodic<Antimorphism>,
}

impl DirectiveBiSequence {
    pub fn new(
        alphabet: Alphabet,
        delta: EventuallyPeriodic<Letter>,
        theta: EventuallyPeriodic<Antimorphism>,
    ) -> Result<Self> {
        alphabet.check_word(delta.preamble())?;
        alphabet.check_word(delta.cycle())?;
        if let Some(t) = theta.preamble().iter().chain(theta.cycle()).find(|t| t.size() != alphabet.size()) {
            return Err(Error::Domain(format!(
                "antimorphism {t} acts on {} letters, the alphabet has {}",
                t.size(),
                alphabet.size()
            )));
        }
        Ok(DirectiveBiSequence { alphabet, delta, theta })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn delta(&self) -> &EventuallyPeriodic<Letter> {
        &self.delta
    }

    pub fn theta(&self) -> &EventuallyPeriodic<Antimorphism> {
        &self.theta
    }

    /// `δ_n`, 1-based.
    #[inline]
    pub fn letter(&self, n: usize) -> Letter {
        *self.delta.item(n)
    }

    /// `ϑ_n`, 1-based.
    #[inline]
    pub fn antimorphism(&self, n: usize) -> &Antimorphism {
        self.theta.item(n)
    }

    /// First index `n >= 1` from which the pairs `(ϑ_n, δ_{n+1})` are
    /// periodic with period [`super_cycle`](Self::super_cycle).
    pub fn tail_start(&self) -> usize {
        (self.theta.preamble().len() + 1).max(self.delta.preamble().len()).max(1)
    }

    /// `lcm(|Θ cycle|, |Δ cycle|)`.
    pub fn super_cycle(&self) -> usize {
        self.theta.cycle().len().lcm(&self.delta.cycle().len())
    }

    /// The pairs `(ϑ_n, δ_{n+1})` over one aligned super-cycle, in order,
    /// starting at [`tail_start`](Self::tail_start).
    pub fn tail_pair_cycle(&self) -> Vec<TailPair> {
        let start = self.tail_start();
        (start..start + self.super_cycle())
            .map(|n| (self.antimorphism(n).clone(), self.letter(n + 1)))
            .collect()
    }

    /// The pairs `(ϑ_n, δ_{n+1})` that occur for infinitely many `n`.
    pub fn tail_pairs(&self) -> BTreeSet<TailPair> {
        self.tail_pair_cycle().into_iter().collect()
    }

    /// Antimorphisms occurring infinitely often in `Θ`.
    pub fn tail_support(&self) -> BTreeSet<Antimorphism> {
        self.theta.cycle().iter().cloned().collect()
    }

    /// Letters occurring infinitely often in `Δ`.
    pub fn tail_letters(&self) -> BTreeSet<Letter> {
        self.delta.cycle().iter().copied().collect()
    }

    /// Every antimorphism written anywhere in `Θ`.
    pub fn occurring_antimorphisms(&self) -> BTreeSet<Antimorphism> {
        self.theta.preamble().iter().chain(self.theta.cycle()).cloned().collect()
    }

    /// Same sequences, canonical presentation on both tracks.
    pub fn canonical(&self) -> Self {
        DirectiveBiSequence {
            alphabet: self.alphabet.clone(),
            delta: self.delta.canonical(),
            theta: self.theta.canonical(),
        }
    }

    /// Canonical on each track, then both preambles extended to a common
    /// length so the tracks line up position by position.
    pub fn aligned(&self) -> Self {
        let delta = self.delta.canonical();
        let theta = self.theta.canonical();
        let len = delta.preamble().len().max(theta.preamble().len());
        DirectiveBiSequence {
            alphabet: self.alphabet.clone(),
            delta: delta.with_preamble_at_least(len),
            theta: theta.with_preamble_at_least(len),
        }
    }

    /// Whether both bi-sequences have identical `Δ` and `Θ` as infinite sequences.
    pub fn same_sequences(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.delta.same_sequence(&other.delta)
            && self.theta.same_sequence(&other.theta)
    }

    pub(crate) fn pair_form(&self) -> PairForm {
        let start = self.tail_start();
        let preamble = (1..start)
            .map(|n| (self.antimorphism(n).clone(), self.letter(n + 1)))
            .collect();
        PairForm {
            alphabet: self.alphabet.clone(),
            first: self.letter(1),
            pairs: EventuallyPeriodic::new(preamble, self.tail_pair_cycle()).expect("nonempty super-cycle"),
        }
    }
}

impl fmt::Display for DirectiveBiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::format_bisequence(self))
    }
}

/// `(Δ, Θ)` rewritten as `δ_1` followed by the pair sequence
/// `π_n = (ϑ_n, δ_{n+1})`. Every rewriting rule in this crate is an
/// insertion into the pair sequence.
#[derive(Debug, Clone)]
pub(crate) struct PairForm {
    pub alphabet: Alphabet,
    pub first: Letter,
    pub pairs: EventuallyPeriodic<TailPair>,
}

impl PairForm {
    pub fn to_bisequence(&self) -> DirectiveBiSequence {
        let mut delta_pre = alloc::vec![self.first];
        delta_pre.extend(self.pairs.preamble().iter().map(|p| p.1));
        let delta = EventuallyPeriodic::new(delta_pre, self.pairs.cycle().iter().map(|p| p.1).collect())
            .expect("nonempty cycle");
        let theta = self.pairs.map(|p| p.0.clone());
        DirectiveBiSequence::new(self.alphabet.clone(), delta, theta).expect("pairs come from a valid bi-sequence")
    }

    /// Letter `δ_n` in the current form, 1-based.
    pub fn letter(&self, n: usize) -> Letter {
        if n == 1 {
            self.first
        } else {
            self.pairs.item(n - 1).1
        }
    }

    pub fn antimorphism(&self, n: usize) -> &Antimorphism {
        &self.pairs.item(n).0
    }

    /// Inserts `pair` so that it becomes `π_index`.
    pub fn insert(&mut self, index: usize, pair: TailPair) {
        let mut unrolled = self.pairs.with_preamble_at_least(index);
        let (mut pre, cycle) = (unrolled.preamble().to_vec(), unrolled.cycle().to_vec());
        pre.insert(index - 1, pair);
        unrolled = EventuallyPeriodic::new(pre, cycle).expect("nonempty cycle");
        self.pairs = unrolled;
    }
}
