//! Exhaustive enumeration of directive bi-sequences within length caps.

use alloc::vec::Vec;

use crate::alphabet::{Alphabet, Letter};
use crate::antimorphism::Antimorphism;
use crate::bisequence::DirectiveBiSequence;
use crate::sequence::EventuallyPeriodic;

/// Every sequence `preamble · cycle^ω` over `symbols` with
/// `|preamble| <= max_preamble` and `1 <= |cycle| <= max_cycle`, one
/// canonical presentation per distinct infinite sequence.
pub fn sequences<T: Clone + Eq>(symbols: &[T], max_preamble: usize, max_cycle: usize) -> Vec<EventuallyPeriodic<T>> {
    let mut out: Vec<EventuallyPeriodic<T>> = Vec::new();
    for p in 0..=max_preamble {
        for pre in words(symbols, p) {
            for c in 1..=max_cycle {
                for cyc in words(symbols, c) {
                    let s = EventuallyPeriodic::new(pre.clone(), cyc).expect("nonempty cycle").canonical();
                    if !out.contains(&s) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

fn words<T: Clone>(symbols: &[T], len: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = alloc::vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                symbols.iter().map(move |s| {
                    let mut v = w.clone();
                    v.push(s.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// All bi-sequences over `alphabet` with `Θ` drawn from `thetas` and both
/// tracks within the caps, without duplicates.
pub fn bisequences(
    alphabet: &Alphabet,
    thetas: &[Antimorphism],
    max_preamble: usize,
    max_cycle: usize,
) -> Vec<DirectiveBiSequence> {
    let letters: Vec<Letter> = alphabet.letters().collect();
    let deltas = sequences(&letters, max_preamble, max_cycle);
    let theta_seqs = sequences(thetas, max_preamble, max_cycle);
    let mut out = Vec::with_capacity(deltas.len() * theta_seqs.len());
    for d in &deltas {
        for t in &theta_seqs {
            out.push(DirectiveBiSequence::new(alphabet.clone(), d.clone(), t.clone()).expect("letters and maps fit the alphabet"));
        }
    }
    out
}
