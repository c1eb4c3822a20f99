use alloc::string::String;

use crate::bisequence::DirectiveBiSequence;
use crate::closure::word_prefix;
use crate::error::{Error, Result};
use crate::oracle::complexity::factor_complexity;
use crate::oracle::period::minimal_period;
use crate::periodicity::{Certificate, Evidence, PeriodicityVerdict, VerdictKind};
use crate::word::Word;

/// Thresholds of the empirical classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmpiricalConfig {
    pub prefix_len: usize,
    /// Largest period accepted as evidence of periodicity.
    pub period_bound: usize,
    /// `C(n) >= n+1` is required for `n <= complexity_up_to`;
    /// `None` means `prefix_len / 10`.
    pub complexity_up_to: Option<usize>,
    /// A left special factor is required at every length up to this one.
    pub left_special_up_to: usize,
}

impl Default for EmpiricalConfig {
    fn default() -> Self {
        EmpiricalConfig { prefix_len: 2000, period_bound: 200, complexity_up_to: None, left_special_up_to: 40 }
    }
}

impl EmpiricalConfig {
    pub fn new(prefix_len: usize, period_bound: usize) -> Self {
        EmpiricalConfig { prefix_len, period_bound, ..Default::default() }
    }

    fn complexity_range(&self) -> usize {
        self.complexity_up_to.unwrap_or(self.prefix_len / 10)
    }
}

/// Heuristic verdict from a finite prefix of `u(Δ, Θ)`.
///
/// Periodic when the prefix has a period `<= period_bound`; aperiodic when
/// `C(n) >= n+1` over the configured range and a left special factor
/// exists at every length up to `left_special_up_to`; unknown otherwise.
/// The verdict is marked empirical and records the thresholds.
pub fn classify_empirically(bi: &DirectiveBiSequence, config: EmpiricalConfig) -> Result<PeriodicityVerdict> {
    let prefix = word_prefix(bi, config.prefix_len)?;
    classify_word(&prefix, config)
}

/// [`classify_empirically`] on an already materialized prefix.
pub fn classify_word(prefix: &[crate::alphabet::Letter], config: EmpiricalConfig) -> Result<PeriodicityVerdict> {
    if config.prefix_len < 4 * config.period_bound || prefix.len() != config.prefix_len {
        return Err(Error::Precondition(alloc::format!(
            "empirical classification needs a prefix of {} >= 4 x period bound {} letters",
            config.prefix_len, config.period_bound
        )));
    }
    let period = minimal_period(prefix)?;
    let complexity_up_to = config.complexity_range();
    let n_max = complexity_up_to.max(config.left_special_up_to).min(prefix.len() - 1);
    let profile = factor_complexity(prefix, n_max)?;
    let evidence = Evidence {
        prefix_len: config.prefix_len,
        period_bound: config.period_bound,
        prefix_period: period,
        complexity_up_to,
        complexity_failure: profile.first_below_aperiodic_bound(complexity_up_to),
        left_special_up_to: config.left_special_up_to,
        left_special_gap: profile.first_length_without_left_special(config.left_special_up_to),
        note: String::new(),
    };
    if period <= config.period_bound {
        let block = Word::from(&prefix[..period]);
        return Ok(PeriodicityVerdict {
            kind: VerdictKind::Periodic,
            period: Some(block.clone()),
            minimal_period: Some(block),
            certificate: Certificate::Empirical,
            evidence: Some(evidence),
            empirical: true,
        });
    }
    let kind = if evidence.complexity_failure.is_none() && evidence.left_special_gap.is_none() {
        VerdictKind::Aperiodic
    } else {
        VerdictKind::Unknown
    };
    Ok(PeriodicityVerdict {
        kind,
        period: None,
        minimal_period: None,
        certificate: Certificate::Empirical,
        evidence: Some(evidence),
        empirical: true,
    })
}
