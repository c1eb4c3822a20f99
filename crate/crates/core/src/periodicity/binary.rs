use alloc::collections::BTreeSet;
use alloc::format;

use crate::alphabet::Letter;
use crate::antimorphism::Antimorphism;
use crate::bisequence::DirectiveBiSequence;
use crate::closure::generate;
use crate::error::{Error, Result};
use crate::normalize::normalize_binary;
use crate::periodicity::validate::{check_period, CheckedPeriod};
use crate::periodicity::{left_special_images, Certificate, PeriodicityVerdict};
use crate::word::Word;

fn check_binary(bi: &DirectiveBiSequence) -> Result<()> {
    let r = Antimorphism::reversal(2);
    let e = Antimorphism::exchange();
    if bi.alphabet().size() != 2 {
        return Err(Error::Domain(format!("expected a binary alphabet, got {} letters", bi.alphabet().size())));
    }
    if let Some(t) = bi.occurring_antimorphisms().into_iter().find(|t| *t != r && *t != e) {
        return Err(Error::Domain(format!("antimorphism {t} is neither R nor E")));
    }
    Ok(())
}

/// Whether the tail pairs are the graph of an injective partial map
/// `{R, E} -> {0, 1}`, i.e. extend to a bijection `π` with `π(ϑ_n) = δ_{n+1}`
/// for all large `n`.
pub fn binary_condition_holds(bi: &DirectiveBiSequence) -> bool {
    let pairs = bi.tail_pairs();
    let maps: BTreeSet<&Antimorphism> = pairs.iter().map(|p| &p.0).collect();
    let letters: BTreeSet<Letter> = pairs.iter().map(|p| p.1).collect();
    maps.len() == pairs.len() && letters.len() == pairs.len()
}

/// Periodicity of a binary generalized pseudostandard word.
///
/// Periodic exactly when the tail pairs extend to a bijection; the period
/// then comes from [`binary_period`] on the normalized bi-sequence.
/// Otherwise two tail pairs give distinct `ϑ(x)`, every prefix is left
/// special and the word is aperiodic.
pub fn decide_binary(bi: &DirectiveBiSequence) -> Result<PeriodicityVerdict> {
    check_binary(bi)?;
    if !binary_condition_holds(bi) {
        debug_assert!(left_special_images(bi).len() >= 2);
        return Ok(PeriodicityVerdict::aperiodic(Certificate::AperiodicLeftSpecial));
    }
    let (normalized, _) = normalize_binary(bi)?;
    let checked = binary_period_checked(&normalized)?;
    Ok(PeriodicityVerdict::periodic(checked.period, checked.minimal, Certificate::BinaryBijection))
}

/// Period of `u` for a normalized binary bi-sequence satisfying the
/// bijection condition.
///
/// With `n_0` the first index of the canonical tail:
/// a single-antimorphism tail gives `w_{n_0+1} w_{n_0}^{-1}`; an alternating
/// tail `(aā)^ω / (ϑ̄ϑ)^ω` with `ϑ = ϑ_{n_0}` gives
/// `w_{n_0+1} ϑϑ̄(w_{n_0}^{-1} w_{n_0+1}) w_{n_0}^{-1}`. The result is a
/// period, not necessarily the smallest.
pub fn binary_period(bi_normalized: &DirectiveBiSequence) -> Result<Word> {
    Ok(binary_period_checked(bi_normalized)?.period)
}

pub(crate) fn binary_period_checked(bi: &DirectiveBiSequence) -> Result<CheckedPeriod> {
    check_binary(bi)?;
    if !binary_condition_holds(bi) {
        return Err(Error::Precondition("the tail pairs do not extend to a bijection {R,E} -> {0,1}".into()));
    }
    let canon = bi.canonical();
    let n0 = canon.tail_start();
    let chain = generate(&canon, n0 + 1)?;
    let (w0, w1) = (chain.prefix(n0), chain.prefix(n0 + 1));
    let cycle = canon.tail_pair_cycle();
    let formula = if cycle.iter().all(|p| *p == cycle[0]) {
        Word::from(&w1[..w1.len() - w0.len()])
    } else {
        let theta = canon.antimorphism(n0);
        let alternating = cycle.len() == 2 && cycle[0].0 != cycle[1].0;
        if !alternating || cycle[0].0 != *theta {
            return Err(Error::Precondition(format!(
                "{bi} is not in normalized form: the tail must alternate two antimorphisms"
            )));
        }
        let q = &w1[w0.len()..];
        // ϑϑ̄ is the letter exchange whichever of R, E is ϑ.
        let swapped: Word = q.iter().map(|l| Letter::new(1 - l.index() as u8)).collect();
        let full = Word::from(w1).concat(&swapped);
        full.strip_suffix(w0).ok_or_else(|| Error::Internal("w_{n_0} is not a suffix of the formula word".into()))?
    };
    check_period(bi, &formula, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::notation::parse_bisequence;
    use crate::periodicity::VerdictKind;
    use alloc::string::ToString;

    fn bi(delta: &str, theta: &str) -> DirectiveBiSequence {
        parse_bisequence(&Alphabet::binary(), delta, theta, &[]).unwrap()
    }

    #[test]
    fn decide_examples() {
        let v = decide_binary(&bi("(011)", "(EER)")).unwrap();
        assert_eq!(v.kind, VerdictKind::Periodic);
        assert_eq!(v.period.as_ref().unwrap().to_string(), "0110");
        assert_eq!(v.minimal_period.as_ref().unwrap().to_string(), "0110");
        assert_eq!(v.certificate, Certificate::BinaryBijection);
        for (d, t) in [("(01)", "(E)"), ("(0)", "(RE)")] {
            let v = decide_binary(&bi(d, t)).unwrap();
            assert_eq!(v.kind, VerdictKind::Aperiodic);
            assert_eq!(v.certificate, Certificate::AperiodicLeftSpecial);
        }
    }

    #[test]
    fn period_examples() {
        assert_eq!(binary_period(&bi("01(10)", "RE(RE)")).unwrap().to_string(), "0110");
        assert_eq!(binary_period(&bi("(0)", "(R)")).unwrap().to_string(), "0");
        assert_eq!(binary_period(&bi("1(1)", "E(E)")).unwrap().to_string(), "10");
    }

    #[test]
    fn period_preconditions() {
        assert!(matches!(binary_period(&bi("(01)", "(E)")), Err(Error::Precondition(_))));
        // Satisfies the bijection condition but is not normalized.
        assert!(matches!(binary_period(&bi("(0011)", "(RREE)")), Err(Error::Precondition(_))));
        let t = parse_bisequence(&Alphabet::ternary(), "(0)", "(R)", &[]).unwrap();
        assert!(matches!(decide_binary(&t), Err(Error::Domain(_))));
    }
}
