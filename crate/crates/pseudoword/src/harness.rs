//! Decider-versus-oracle verification and conjecture exploration over
//! enumerated families, sharded across the rayon pool.

use pseudoword_core::family::bisequences;
use pseudoword_core::oracle::{classify_empirically, EmpiricalConfig};
use pseudoword_core::periodicity::{check_conjecture_with, decide};
use pseudoword_core::{Alphabet, Antimorphism, Error, Result, VerdictKind};
use rayon::prelude::*;

use crate::record::{ConjectureMismatch, Discrepancy, ExploreRecord, VerdictRecord, VerifyRecord};

/// Family caps and oracle thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub max_preamble: usize,
    pub max_cycle: usize,
    pub oracle: EmpiricalConfig,
}

impl FamilySpec {
    /// Preamble and cycle caps used by the reference runs: `(2, 3)` for
    /// binary, `(1, 3)` for ternary, `(1, 2)` above.
    pub fn default_for(d: usize) -> Self {
        let (max_preamble, max_cycle) = match d {
            2 => (2, 3),
            3 => (1, 3),
            _ => (1, 2),
        };
        FamilySpec { max_preamble, max_cycle, oracle: default_oracle() }
    }
}

/// 2000 letters, period bound 200, `C(n) >= n+1` up to 60, left special
/// factors up to 40.
pub fn default_oracle() -> EmpiricalConfig {
    EmpiricalConfig { complexity_up_to: Some(60), ..EmpiricalConfig::new(2000, 200) }
}

/// Runs the decider and the empirical classifier on every bi-sequence of
/// the family. Unknown verdicts are counted, not compared.
pub fn verify(alphabet: &Alphabet, spec: FamilySpec) -> Result<VerifyRecord> {
    let d = alphabet.size();
    if d != 2 && d != 3 {
        return Err(Error::Domain(format!("verify covers binary and ternary alphabets, not {d} letters")));
    }
    let family = bisequences(alphabet, &Antimorphism::builtins(alphabet), spec.max_preamble, spec.max_cycle);
    let outcomes: Vec<(VerdictKind, bool, Option<Discrepancy>)> = family
        .par_iter()
        .map(|bi| {
            let v = decide(bi)?;
            if v.kind == VerdictKind::Unknown {
                return Ok((v.kind, v.evidence.is_some(), None));
            }
            let e = classify_empirically(bi, spec.oracle)?;
            let same = e.kind == v.kind && (v.minimal_period.is_none() || e.minimal_period == v.minimal_period);
            let disc = (!same).then(|| Discrepancy {
                input: bi.to_string(),
                decided: VerdictRecord::new(alphabet, &v),
                empirical: VerdictRecord::new(alphabet, &e),
            });
            Ok((v.kind, true, disc))
        })
        .collect::<Result<_>>()?;
    let count = |k: VerdictKind| outcomes.iter().filter(|o| o.0 == k).count();
    Ok(VerifyRecord {
        alphabet: d,
        max_preamble: spec.max_preamble,
        max_cycle: spec.max_cycle,
        checked: outcomes.len(),
        periodic: count(VerdictKind::Periodic),
        aperiodic: count(VerdictKind::Aperiodic),
        unknown: count(VerdictKind::Unknown),
        unknown_without_evidence: outcomes.iter().filter(|o| !o.1).count(),
        discrepancies: outcomes.into_iter().filter_map(|o| o.2).collect(),
    })
}

/// Evaluates the conjecture on every bi-sequence over `thetas` within the
/// caps and reports where its conditions disagree with the empirical
/// verdict.
pub fn explore(alphabet: &Alphabet, thetas: &[Antimorphism], spec: FamilySpec) -> Result<ExploreRecord> {
    let family = bisequences(alphabet, thetas, spec.max_preamble, spec.max_cycle);
    let reports: Vec<_> = family
        .par_iter()
        .map(|bi| check_conjecture_with(bi, spec.oracle).map(|r| (bi, r)))
        .collect::<Result<_>>()?;
    Ok(ExploreRecord {
        alphabet: alphabet.size(),
        antimorphisms: thetas.iter().map(|t| t.name().to_string()).collect(),
        max_preamble: spec.max_preamble,
        max_cycle: spec.max_cycle,
        checked: reports.len(),
        conditions_hold: reports.iter().filter(|(_, r)| r.conditions_hold()).count(),
        empirical_unknown: reports.iter().filter(|(_, r)| r.empirical.kind == VerdictKind::Unknown).count(),
        mismatches: reports.iter().filter(|(_, r)| !r.agrees()).map(|(bi, r)| ConjectureMismatch::new(bi, r)).collect(),
    })
}
