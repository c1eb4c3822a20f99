use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use crate::alphabet::Letter;
use crate::antimorphism::Antimorphism;
use crate::bisequence::{DirectiveBiSequence, PairForm, TailPair};
use crate::error::{Error, Result};
use crate::normalize::trace::{RewriteStep, RewriteTrace, RuleId};
use crate::sequence::EventuallyPeriodic;

/// Bound on prefix-rule applications; three always suffice.
const PREFIX_RULE_CAP: usize = 16;

fn bar_letter(a: Letter) -> Letter {
    Letter::new(1 - a.index() as u8)
}

fn bar(t: &Antimorphism) -> Antimorphism {
    if t.is_reversal() {
        Antimorphism::exchange()
    } else {
        Antimorphism::reversal(2)
    }
}

pub(crate) fn check_binary(bi: &DirectiveBiSequence) -> Result<()> {
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

fn fragment(pf: &PairForm, from: usize, len: usize) -> (Vec<Letter>, Vec<Antimorphism>) {
    (
        (from..from + len).map(|n| pf.letter(n)).collect(),
        (from..from + len).map(|n| pf.antimorphism(n).clone()).collect(),
    )
}

/// Finds the prefix rule applicable to `pf`, if any.
fn prefix_rule(pf: &PairForm) -> Option<RewriteStep> {
    let r = Antimorphism::reversal(2);
    let e = Antimorphism::exchange();
    let a = pf.letter(1);
    // Past this index both tracks are periodic, so a longer run never ends.
    let limit = pf.pairs.preamble().len() + pf.pairs.cycle().len() + 2;
    let r_run = (1..=limit).take_while(|&n| *pf.antimorphism(n) == r).count();
    let a_run = (1..=limit + 1).take_while(|&n| pf.letter(n) == a).count();
    let step = |rule, len, pair| {
        let (d, t) = fragment(pf, 1, len);
        Some(RewriteStep::insertion(rule, 1, d, t, pair))
    };
    if a_run == 1 && r_run >= 2 {
        return step(RuleId::Prefix1, 2, (e, a));
    }
    if r_run >= limit {
        return None;
    }
    if a_run > r_run {
        // ϑ_{r_run+1} = E and δ_1..δ_{r_run+1} = a.
        return step(RuleId::Prefix2, r_run + 1, (r, bar_letter(a)));
    }
    let i = r_run;
    if i >= 1
        && a_run == i
        && pf.letter(i + 2) == bar_letter(a)
        && *pf.antimorphism(i + 1) == e
        && *pf.antimorphism(i + 2) == e
    {
        return step(RuleId::Prefix3, i + 2, (r, a));
    }
    None
}

fn apply(pf: &mut PairForm, step: &RewriteStep) {
    let m = step.before_theta.len();
    pf.insert(step.inserted_index(), (step.after_theta[m - 1].clone(), step.after_delta[m]));
}

/// Whether `(ϑ_k, δ_{k+1}), (ϑ_{k+1}, δ_{k+2}), ϑ_{k+2}` read `(ϑ, b), (ϑ̄, b̄), ϑ̄`.
fn factor_matches(p0: &TailPair, p1: &TailPair, t2: &Antimorphism) -> bool {
    let t_bar = bar(&p0.0);
    p1.0 == t_bar && p1.1 == bar_letter(p0.1) && *t2 == t_bar
}

/// Single left-to-right factor pass over an eventually periodic pair
/// sequence, folded back into preamble and cycle.
///
/// The pass is a transducer whose state is the queue of pending steps plus
/// the phase of the input cursor inside the input cycle. Once a state
/// repeats, the output between the two visits repeats forever.
fn factor_pass(pf: &PairForm, trace: &mut RewriteTrace) -> Result<PairForm> {
    let input = &pf.pairs;
    let pre = input.preamble().len();
    let cyc = input.cycle().len();
    let cap = 64 * cyc + pre + 8;
    let mut out: Vec<TailPair> = Vec::new();
    let mut pending: VecDeque<TailPair> = VecDeque::new();
    let mut cursor = 1;
    let mut seen: BTreeMap<(Vec<TailPair>, usize), usize> = BTreeMap::new();
    loop {
        if cursor > pre {
            let key = (pending.iter().cloned().collect::<Vec<_>>(), (cursor - pre - 1) % cyc);
            if let Some(&start) = seen.get(&key) {
                trace.covered = out.len();
                let cycle = out.split_off(start);
                return Ok(PairForm {
                    alphabet: pf.alphabet.clone(),
                    first: pf.first,
                    pairs: EventuallyPeriodic::new(out, cycle)?,
                });
            }
            seen.insert(key, out.len());
        }
        if out.len() > cap {
            return Err(Error::Internal(format!("factor pass did not fold within {cap} steps")));
        }
        while pending.len() < 3 {
            pending.push_back(input.item(cursor).clone());
            cursor += 1;
        }
        if factor_matches(&pending[0], &pending[1], &pending[2].0) {
            let k = out.len() + 1;
            let a = if k == 1 { pf.first } else { out[k - 2].1 };
            let before_delta = alloc::vec![a, pending[0].1, pending[1].1];
            let before_theta = alloc::vec![pending[0].0.clone(), pending[1].0.clone(), pending[2].0.clone()];
            trace.steps.push(RewriteStep::insertion(RuleId::Factor, k, before_delta, before_theta, pending[0].clone()));
            let copy = pending[0].clone();
            pending.insert(2, copy);
        }
        out.push(pending.pop_front().expect("window holds three steps"));
    }
}

/// Normalizes a binary directive bi-sequence: prefix rules to a fixpoint,
/// then one left-to-right factor pass. The result generates the same word
/// and is presented canonically on each track.
pub fn normalize_binary(bi: &DirectiveBiSequence) -> Result<(DirectiveBiSequence, RewriteTrace)> {
    check_binary(bi)?;
    let mut pf = bi.pair_form();
    let mut trace = RewriteTrace::default();
    let mut applied = 0;
    while let Some(step) = prefix_rule(&pf) {
        applied += 1;
        if applied > PREFIX_RULE_CAP {
            return Err(Error::Internal("prefix rules did not reach a fixpoint".into()));
        }
        apply(&mut pf, &step);
        trace.steps.push(step);
    }
    let out = factor_pass(&pf, &mut trace)?;
    Ok((out.to_bisequence().canonical(), trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::closure::word_prefix;
    use crate::notation::parse_bisequence;
    use alloc::string::ToString;

    fn bi(delta: &str, theta: &str) -> DirectiveBiSequence {
        parse_bisequence(&Alphabet::binary(), delta, theta, &[]).unwrap()
    }

    #[test]
    fn normalizes_the_worked_example() {
        let input = bi("(011)", "(EER)");
        let (out, trace) = normalize_binary(&input).unwrap();
        assert_eq!(out.to_string(), "01(10) / (RE)");
        let lines: Vec<_> = trace.render(input.alphabet()).lines().map(ToString::to_string).collect();
        assert_eq!(lines[0], "prefix-2@1: (0,E) -> (01,RE)");
        assert_eq!(lines[1], "prefix-3@1: (011,REE) -> (0110,RERE)");
        assert_eq!(lines[2..], ["factor@5: (101,REE) -> (1010,RERE)"]);
        trace.replay(&input, &out).unwrap();
        assert_eq!(word_prefix(&input, 2000).unwrap(), word_prefix(&out, 2000).unwrap());
    }

    #[test]
    fn already_normalized_is_unchanged() {
        let input = bi("01(10)", "RE(RE)");
        let (out, trace) = normalize_binary(&input).unwrap();
        assert!(out.same_sequences(&input));
        assert!(trace.is_empty());
    }

    #[test]
    fn leading_rr_gets_an_e() {
        // The prefix rule gives 010(1) / RER(R); that chain still skips the
        // E-palindrome 0101, and the factor pass then turns the tail into
        // alternating (E,0), (R,1) steps.
        let input = bi("01(1)", "RR(R)");
        let (out, trace) = normalize_binary(&input).unwrap();
        assert_eq!(trace.steps[0].render(&Alphabet::binary()), "prefix-1@1: (01,RR) -> (010,RER)");
        let phase1 = bi("010(1)", "RER(R)");
        assert!(!crate::normalize::is_normalized_empirical(&phase1, 10).unwrap());
        assert!(out.same_sequences(&bi("(01)", "(RE)")), "{out}");
        assert!(crate::normalize::is_normalized_empirical(&out, 10).unwrap());
        trace.replay(&input, &out).unwrap();
        assert_eq!(word_prefix(&input, 2000).unwrap(), word_prefix(&out, 2000).unwrap());
    }

    #[test]
    fn rejects_non_binary_input() {
        let t = parse_bisequence(&Alphabet::ternary(), "(0)", "(R)", &[]).unwrap();
        assert!(matches!(normalize_binary(&t), Err(Error::Domain(_))));
    }
}
