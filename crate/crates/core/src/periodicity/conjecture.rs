use alloc::vec::Vec;

use crate::bisequence::DirectiveBiSequence;
use crate::error::Result;
use crate::normalize::normalize_binary;
use crate::oracle::{classify_empirically, EmpiricalConfig};
use crate::periodicity::{left_special_images, PeriodicityVerdict, VerdictKind};

/// The two conditions of the periodicity conjecture for arbitrary
/// alphabets, next to an empirical verdict on the same word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    /// `ϑ_n(δ_{n+1})` takes one value over the tail.
    pub constant_image: bool,
    /// `ϑ_{i+2} ∘ ϑ_{i+1} ∘ ϑ_i = ϑ_{i+1}` as letter maps over the tail.
    pub palindrome_transfer: bool,
    /// The conditions were evaluated on the normalized bi-sequence
    /// (binary only); otherwise on the input as given.
    pub normalized: bool,
    pub empirical: PeriodicityVerdict,
}

impl ConjectureReport {
    pub fn conditions_hold(&self) -> bool {
        self.constant_image && self.palindrome_transfer
    }

    /// `false` when the conditions and a definite empirical verdict disagree.
    pub fn agrees(&self) -> bool {
        match self.empirical.kind {
            VerdictKind::Unknown => true,
            k => self.conditions_hold() == (k == VerdictKind::Periodic),
        }
    }
}

/// Evaluates the conjecture's conditions on `bi` and classifies `u(bi)`
/// empirically with `config`.
pub fn check_conjecture_with(bi: &DirectiveBiSequence, config: EmpiricalConfig) -> Result<ConjectureReport> {
    let (subject, normalized) = if bi.alphabet().size() == 2 {
        (normalize_binary(bi)?.0, true)
    } else {
        (bi.clone(), false)
    };
    let constant_image = left_special_images(&subject).len() == 1;
    let start = subject.tail_start();
    let palindrome_transfer = (start..start + subject.super_cycle()).all(|i| {
        let (a, b, c) = (subject.antimorphism(i), subject.antimorphism(i + 1), subject.antimorphism(i + 2));
        let ba: Vec<_> = b.compose_letters(a);
        let cba: Vec<_> = ba.iter().map(|&l| c.image(l)).collect();
        cba == b.permutation()
    });
    let empirical = classify_empirically(bi, config)?;
    Ok(ConjectureReport { constant_image, palindrome_transfer, normalized, empirical })
}

/// [`check_conjecture_with`] using 2000 letters, period bound 200 and the
/// complexity test up to 60.
pub fn check_conjecture(bi: &DirectiveBiSequence) -> Result<ConjectureReport> {
    check_conjecture_with(bi, EmpiricalConfig { complexity_up_to: Some(60), ..EmpiricalConfig::default() })
}
