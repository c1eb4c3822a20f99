use alloc::format;
use alloc::vec::Vec;

use crate::alphabet::Letter;
use crate::antimorphism::Antimorphism;
use crate::bisequence::DirectiveBiSequence;
use crate::error::{Error, Result};
use crate::normalize::trace::{RewriteStep, RuleId};
use crate::sequence::EventuallyPeriodic;

fn check_ternary(bi: &DirectiveBiSequence) -> Result<()> {
    if bi.alphabet().size() != 3 {
        return Err(Error::Domain(format!("expected a ternary alphabet, got {} letters", bi.alphabet().size())));
    }
    Ok(())
}

/// The step recorded by [`ternary_rewrite_step`] at `at`, if the factor
/// there has the required shape.
pub(crate) fn ternary_match(bi: &DirectiveBiSequence, at: usize) -> Option<RewriteStep> {
    if at == 0 {
        return None;
    }
    let (t0, t1, t2) = (bi.antimorphism(at), bi.antimorphism(at + 1), bi.antimorphism(at + 2));
    let (b, c) = (bi.letter(at + 1), bi.letter(at + 2));
    let theta = if t0.is_reversal() { t1 } else { t0 };
    let shape = !theta.is_reversal()
        && ((t1.is_reversal() && t2.is_reversal() && !t0.is_reversal())
            || (t0.is_reversal() && t1 == theta && t2 == theta));
    if !shape || theta.image(b) != c {
        return None;
    }
    let before_delta: Vec<Letter> = (at..at + 3).map(|n| bi.letter(n)).collect();
    let before_theta: Vec<Antimorphism> = alloc::vec![t0.clone(), t1.clone(), t2.clone()];
    Some(RewriteStep::insertion(RuleId::Ternary, at, before_delta, before_theta, (t0.clone(), b)))
}

/// Replaces the factor `(abc, ϑRR)` at position `at` by `(abcb, ϑRϑR)`, or
/// `(abc, Rϑϑ)` by `(abcb, RϑRϑ)`, where `ϑ ≠ R` and `ϑ(b) = c`. The
/// generated word does not change.
pub fn ternary_rewrite_step(bi: &DirectiveBiSequence, at: usize) -> Result<DirectiveBiSequence> {
    check_ternary(bi)?;
    let step = ternary_match(bi, at).ok_or_else(|| {
        Error::Precondition(format!("no factor (abc, ϑRR) or (abc, Rϑϑ) with ϑ(b) = c at position {at}"))
    })?;
    let mut pf = bi.pair_form();
    let m = step.before_theta.len();
    pf.insert(step.inserted_index(), (step.after_theta[m - 1].clone(), step.after_delta[m]));
    Ok(pf.to_bisequence())
}

/// For a ternary bi-sequence whose tail uses exactly `R` and one `ϑ ≠ R`,
/// with `ϑ` always followed by `x`, `R` always followed by `y` and
/// `ϑ(x) = y`: the equivalent bi-sequence `(v(xy)^ω, σ(Rϑ)^ω)`, `|v| = |σ|`.
///
/// `ℓ` is the first index with `ϑ_ℓ = R`, `ϑ_{ℓ+1} = ϑ` from which every
/// step follows the pairing; `v = δ_1..δ_{ℓ+1}` and `σ = ϑ_1..ϑ_{ℓ+1}`.
/// This is the limit of applying [`ternary_rewrite_step`] left to right
/// past `ℓ`.
pub fn ternary_two_antimorphism_normal_form(bi: &DirectiveBiSequence) -> Result<DirectiveBiSequence> {
    check_ternary(bi)?;
    let (theta, x, y) = two_antimorphism_pairing(bi)?;
    let follows = |n: usize| {
        let t = bi.antimorphism(n);
        let next = bi.letter(n + 1);
        if t.is_reversal() {
            next == y
        } else {
            *t == theta && next == x
        }
    };
    let mut start = bi.tail_start();
    while start > 1 && follows(start - 1) {
        start -= 1;
    }
    let ell = (start..start + 2 * bi.super_cycle() + 2)
        .find(|&n| bi.antimorphism(n).is_reversal() && *bi.antimorphism(n + 1) == theta)
        .ok_or_else(|| Error::Internal("both antimorphisms recur, so R is followed by ϑ somewhere".into()))?;
    let delta = EventuallyPeriodic::new(bi.delta().prefix(ell + 1), alloc::vec![x, y])?;
    let thetas = EventuallyPeriodic::new(bi.theta().prefix(ell + 1), alloc::vec![Antimorphism::reversal(3), theta])?;
    DirectiveBiSequence::new(bi.alphabet().clone(), delta, thetas)
}

/// `(ϑ, x, y)` when the tail pairs are exactly `{(ϑ, x), (R, y)}` with
/// `ϑ ≠ R` and `ϑ(x) = y`.
pub(crate) fn two_antimorphism_pairing(bi: &DirectiveBiSequence) -> Result<(Antimorphism, Letter, Letter)> {
    let support = bi.tail_support();
    let others: Vec<&Antimorphism> = support.iter().filter(|t| !t.is_reversal()).collect();
    if support.len() != 2 || others.len() != 1 {
        return Err(Error::Precondition(format!(
            "the tail must use exactly R and one other antimorphism, found {{{}}}",
            support.iter().map(|t| t.name()).collect::<Vec<_>>().join(",")
        )));
    }
    let theta = others[0].clone();
    let pairs = bi.tail_pairs();
    let letters_of = |t: &Antimorphism| pairs.iter().filter(|p| p.0 == *t).map(|p| p.1).collect::<Vec<_>>();
    let xs = letters_of(&theta);
    let ys = letters_of(&Antimorphism::reversal(3));
    if xs.len() != 1 || ys.len() != 1 {
        return Err(Error::Precondition("each tail antimorphism must always be followed by the same letter".into()));
    }
    let (x, y) = (xs[0], ys[0]);
    if theta.image(x) != y {
        return Err(Error::Precondition(format!("{theta}({x}) = {} differs from {y}", theta.image(x))));
    }
    Ok((theta, x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::closure::{generate, word_prefix};
    use crate::notation::parse_bisequence;
    use crate::word::Word;

    fn bi(delta: &str, theta: &str) -> DirectiveBiSequence {
        parse_bisequence(&Alphabet::ternary(), delta, theta, &[]).unwrap()
    }

    fn render(w: &[Letter]) -> alloc::string::String {
        Alphabet::ternary().render(w)
    }

    #[test]
    fn rewrite_after_prefix_012() {
        // w_2 = 012, then the factor (120, E1RR) starts at position 3.
        let input = bi("0112(0)", "RE1E1R(R)");
        let chain = generate(&input, 5).unwrap();
        assert_eq!(render(chain.prefix(2)), "012");
        assert_eq!(render(chain.prefix(3)), "0121012");
        assert_eq!(render(chain.prefix(4)), "01210122101210");
        assert_eq!(render(chain.prefix(5)), "0121012210121001210122101210");
        let out = ternary_rewrite_step(&input, 3).unwrap();
        let expected = bi("011202(0)", "RE1E1RE1R(R)");
        assert!(out.same_sequences(&expected), "{out}");
        let chain = generate(&out, 6).unwrap();
        assert_eq!(render(chain.prefix(5)), "012101221012100121012");
        assert_eq!(word_prefix(&input, 2000).unwrap(), word_prefix(&out, 2000).unwrap());
    }

    #[test]
    fn symmetric_rewrite() {
        let input = bi("(012)", "(RE0E0)");
        let out = ternary_rewrite_step(&input, 1).unwrap();
        assert_eq!(out.delta().prefix(4), bi("0121(0)", "(R)").delta().prefix(4));
        let names: Vec<_> = out.theta().prefix(4).iter().map(|t| t.name().to_string()).collect();
        assert_eq!(names, ["R", "E0", "R", "E0"]);
        assert_eq!(word_prefix(&input, 500).unwrap(), word_prefix(&out, 500).unwrap());
    }

    #[test]
    fn mismatch_is_a_precondition_error() {
        let input = bi("(012)", "(RRR)");
        for at in 1..4 {
            assert!(matches!(ternary_rewrite_step(&input, at), Err(Error::Precondition(_))));
        }
        let binary = parse_bisequence(&Alphabet::binary(), "(0)", "(R)", &[]).unwrap();
        assert!(matches!(ternary_rewrite_step(&binary, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn normal_form_examples() {
        let target = bi("02(12)", "RE0(RE0)");
        for (d, t) in [("0(211)", "R(E0E0R)"), ("0(211)", "(R E0 E0)")] {
            let out = ternary_two_antimorphism_normal_form(&bi(d, t)).unwrap();
            assert!(out.same_sequences(&target), "{out}");
            assert_eq!(out.to_string(), "02(12) / RE0(RE0)");
            assert_eq!(word_prefix(&bi(d, t), 2000).unwrap(), word_prefix(&out, 2000).unwrap());
        }
        let out = ternary_two_antimorphism_normal_form(&target).unwrap();
        assert!(out.same_sequences(&target));
    }

    #[test]
    fn normal_form_preconditions() {
        for (d, t) in [("(01)", "(RE1)"), ("(0)", "(R)"), ("(012)", "(RE0E1)"), ("(0112)", "(RE0)")] {
            assert!(matches!(
                ternary_two_antimorphism_normal_form(&bi(d, t)),
                Err(Error::Precondition(_))
            ), "{d} {t}");
        }
    }

    #[test]
    fn normal_form_is_the_limit_of_single_rewrites() {
        for (d, t) in [("0(211)", "(R E0 E0)"), ("1(0221)", "E1(RRE1E1)"), ("20(1)", "E0R(RRE2R)")] {
            let input = bi(d, t);
            let Ok(target) = ternary_two_antimorphism_normal_form(&input) else {
                continue;
            };
            let mut cur = input.clone();
            let mut at = 1;
            for _ in 0..300 {
                match (at..at + 50).find(|&k| ternary_match(&cur, k).is_some()) {
                    Some(k) => {
                        cur = ternary_rewrite_step(&cur, k).unwrap();
                        at = k;
                    }
                    None => break,
                }
            }
            assert_eq!(cur.delta().prefix(120), target.delta().prefix(120), "{d} {t}");
            assert_eq!(cur.theta().prefix(120), target.theta().prefix(120), "{d} {t}");
            let w: Word = word_prefix(&input, 3000).unwrap();
            assert_eq!(w, word_prefix(&target, 3000).unwrap());
        }
    }

    use alloc::string::ToString;
}
