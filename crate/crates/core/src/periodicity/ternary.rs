use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::alphabet::Letter;
use crate::antimorphism::Antimorphism;
use crate::bisequence::DirectiveBiSequence;
use crate::closure::generate;
use crate::error::{Error, Result};
use crate::normalize::ternary_two_antimorphism_normal_form;
use crate::oracle::{classify_empirically, EmpiricalConfig};
use crate::periodicity::validate::{check_period, CheckedPeriod};
use crate::periodicity::{left_special_images, Certificate, PeriodicityVerdict};
use crate::word::Word;

/// The three periodic shapes of ternary generalized pseudostandard words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TernaryCase {
    /// One antimorphism and one letter in the tail.
    One,
    /// Tail `(ab)^ω / (Rϑ)^ω` with `ϑ(a) = b`.
    Two,
    /// Tail cycling through `E_0, E_1, E_2` with a constant `ϑ_n(δ_{n+1})`.
    Three,
}

impl TernaryCase {
    pub fn certificate(self) -> Certificate {
        match self {
            TernaryCase::One => Certificate::TernaryCase1,
            TernaryCase::Two => Certificate::TernaryCase2,
            TernaryCase::Three => Certificate::TernaryCase3,
        }
    }
}

impl fmt::Display for TernaryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.certificate().as_str())
    }
}

impl FromStr for TernaryCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "ternary-case-1" => Ok(TernaryCase::One),
            "2" | "ternary-case-2" => Ok(TernaryCase::Two),
            "3" | "ternary-case-3" => Ok(TernaryCase::Three),
            _ => Err(Error::Invalid(format!("unknown ternary case {s:?}"))),
        }
    }
}

fn check_ternary(bi: &DirectiveBiSequence) -> Result<()> {
    if bi.alphabet().size() != 3 {
        return Err(Error::Domain(format!("expected a ternary alphabet, got {} letters", bi.alphabet().size())));
    }
    let builtins = Antimorphism::builtins(bi.alphabet());
    if let Some(t) = bi.occurring_antimorphisms().into_iter().find(|t| !builtins.contains(t)) {
        return Err(Error::Domain(format!("antimorphism {t} is not one of R, E0, E1, E2")));
    }
    Ok(())
}

/// Whether the canonical tail is a 3-cycle of the three distinct `E_i`
/// with `ϑ_n(δ_{n+1})` constant, i.e. `(v(ijk)^ω, σ(E_iE_kE_j)^ω)` up to
/// rotation.
fn is_three_cycle_shape(bi: &DirectiveBiSequence) -> bool {
    let cycle = bi.canonical().theta().cycle().to_vec();
    let distinct: BTreeSet<&Antimorphism> = cycle.iter().collect();
    cycle.len() == 3 && distinct.len() == 3 && cycle.iter().all(|t| !t.is_reversal()) && left_special_images(bi).len() == 1
}

/// Periodicity of a ternary generalized pseudostandard word.
///
/// Dispatch on the antimorphisms recurring in `Θ`:
/// one antimorphism is periodic iff `Δ` is eventually constant;
/// `{ϑ, R}` is periodic iff the pairing is functional with `ϑ(a) = b`;
/// `R` with two or more others is aperiodic.
/// For tails over `E_0, E_1, E_2` only, two distinct values `ϑ_n(δ_{n+1})`
/// give aperiodicity and the 3-cycle shape gives periodicity once the
/// formula period checks out; anything else is `Unknown` with evidence.
pub fn decide_ternary(bi: &DirectiveBiSequence) -> Result<PeriodicityVerdict> {
    check_ternary(bi)?;
    let support = bi.tail_support();
    let has_r = support.iter().any(|t| t.is_reversal());
    let images = left_special_images(bi);
    if has_r && support.len() >= 3 {
        return Ok(PeriodicityVerdict::aperiodic(Certificate::Aperiodic3PlusWithR));
    }
    if images.len() >= 2 {
        return Ok(PeriodicityVerdict::aperiodic(Certificate::AperiodicLeftSpecial));
    }
    let case = match support.len() {
        1 => TernaryCase::One,
        2 if has_r => TernaryCase::Two,
        _ => {
            if is_three_cycle_shape(bi) {
                if let Ok(checked) = ternary_period_checked(bi, TernaryCase::Three) {
                    return Ok(PeriodicityVerdict::periodic(checked.period, checked.minimal, Certificate::TernaryCase3));
                }
            }
            return undecided(bi);
        }
    };
    let checked = ternary_period_checked(bi, case)?;
    Ok(PeriodicityVerdict::periodic(checked.period, checked.minimal, case.certificate()))
}

fn undecided(bi: &DirectiveBiSequence) -> Result<PeriodicityVerdict> {
    let config = EmpiricalConfig { complexity_up_to: Some(60), ..EmpiricalConfig::default() };
    let probe = classify_empirically(bi, config)?;
    let mut evidence = probe.evidence.ok_or_else(|| Error::Internal("empirical verdict without evidence".into()))?;
    evidence.note = format!("E-only tail outside the known shapes; empirical reading {}", probe.kind);
    Ok(PeriodicityVerdict::unknown(Certificate::Undecided, evidence))
}

/// Period of `u` in the given periodic case, read from the start of `u`.
///
/// * case 1: `u = ps(ϑ(p))^ω` where `w_{n_0+1} = ps`, `w_{n_0+2} = psϑ(p)`
///   and `n_0` is the longer preamble;
/// * case 2: on the normal form `(v(ab)^ω, σ(Rϑ)^ω)` with `n_0 = |σ|`,
///   `u = ps(ϑ(p)R(p))^ω`, so `u` starts with `pRϑ(p)`;
/// * case 3: `u = ps(ϑ_{n_0+2}(p)ϑ_{n_0+3}(p)ϑ_{n_0+4}(p))^ω`.
///
/// The block is checked against a long generated prefix before it is
/// returned.
pub fn ternary_period(bi: &DirectiveBiSequence, case: TernaryCase) -> Result<Word> {
    Ok(ternary_period_checked(bi, case)?.period)
}

pub(crate) fn ternary_period_checked(bi: &DirectiveBiSequence, case: TernaryCase) -> Result<CheckedPeriod> {
    check_ternary(bi)?;
    let support = bi.tail_support();
    let mismatch = |what: &str| Err(Error::Precondition(format!("{bi} is not a {case} instance: {what}")));
    match case {
        TernaryCase::One => {
            if support.len() != 1 || bi.tail_letters().len() != 1 {
                return mismatch("the tail must repeat one antimorphism and one letter");
            }
            let canon = bi.canonical();
            let n0 = canon.delta().preamble().len().max(canon.theta().preamble().len());
            let (offset, p) = split_step(&canon, n0)?;
            let block = canon.antimorphism(n0 + 2).apply_unchecked(&p);
            check_period(bi, &block, offset)
        }
        TernaryCase::Two => {
            let nf = ternary_two_antimorphism_normal_form(bi)?;
            let n0 = nf.theta().preamble().len();
            let (offset, p) = split_step(&nf, n0)?;
            let theta = nf.antimorphism(n0 + 2);
            let r = nf.antimorphism(n0 + 1);
            if !r.is_reversal() || theta.is_reversal() {
                return Err(Error::Internal(format!("normal form {nf} does not continue with R then ϑ")));
            }
            let block = theta.apply_unchecked(&p).concat(&r.apply_unchecked(&p));
            check_period(bi, &block, offset)
        }
        TernaryCase::Three => {
            if !is_three_cycle_shape(bi) {
                return mismatch("the tail must cycle through E0, E1, E2 with constant ϑ_n(δ_{n+1})");
            }
            let canon = bi.canonical();
            let n0 = canon.delta().preamble().len().max(canon.theta().preamble().len());
            let (offset, p) = split_step(&canon, n0)?;
            let block: Vec<Letter> =
                (2..5).flat_map(|k| canon.antimorphism(n0 + k).apply_unchecked(&p).into_vec()).collect();
            check_period(bi, &block, offset)
        }
    }
}

/// `(|w_{n_0+1}|, p)` with `p` the prefix of `w_{n_0+2}` of length
/// `|w_{n_0+2}| - |w_{n_0+1}|`.
fn split_step(bi: &DirectiveBiSequence, n0: usize) -> Result<(usize, Word)> {
    let chain = generate(bi, n0 + 2)?;
    let (a, b) = (chain.prefix(n0 + 1), chain.prefix(n0 + 2));
    Ok((a.len(), Word::from(&b[..b.len() - a.len()])))
}

/// The antimorphism → letter table of the tail, e.g. `R->0 E0->0`.
pub fn pairing_table(bi: &DirectiveBiSequence) -> String {
    bi.tail_pairs()
        .iter()
        .map(|(t, l)| format!("{t}->{}", bi.alphabet().glyph(*l)))
        .collect::<Vec<_>>()
        .join(" ")
}
