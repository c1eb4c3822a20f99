use alloc::string::String;
use core::fmt;

use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Periodic,
    Aperiodic,
    Unknown,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Periodic => "Periodic",
            VerdictKind::Aperiodic => "Aperiodic",
            VerdictKind::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Names the argument behind a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// Binary: the tail pairs extend to a bijection `{R,E} -> {0,1}`.
    BinaryBijection,
    /// Ternary, one antimorphism in the tail and a constant letter tail.
    TernaryCase1,
    /// Ternary, tail support `{ϑ, R}` with `ϑ(a) = b`.
    TernaryCase2,
    /// Ternary, three distinct `E_i` cycling with a constant `ϑ_n(δ_{n+1})`.
    TernaryCase3,
    /// Two tail pairs give distinct values `ϑ(x)`, so every prefix is left special.
    AperiodicLeftSpecial,
    /// Ternary tail with `R` and at least two other antimorphisms.
    Aperiodic3PlusWithR,
    /// Ternary tail over `E_i` only that matches no known periodic shape.
    Undecided,
    /// Finite-prefix evidence only.
    Empirical,
}

impl Certificate {
    pub fn as_str(self) -> &'static str {
        match self {
            Certificate::BinaryBijection => "binary-bijection",
            Certificate::TernaryCase1 => "ternary-case-1",
            Certificate::TernaryCase2 => "ternary-case-2",
            Certificate::TernaryCase3 => "ternary-case-3",
            Certificate::AperiodicLeftSpecial => "aperiodic-left-special",
            Certificate::Aperiodic3PlusWithR => "aperiodic-3plus-antimorphisms-with-R",
            Certificate::Undecided => "undecided-e-only-tail",
            Certificate::Empirical => "empirical",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Summary of a finite-prefix measurement and the thresholds it used.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Evidence {
    pub prefix_len: usize,
    pub period_bound: usize,
    /// Smallest period of the measured prefix.
    pub prefix_period: usize,
    /// `C(n) >= n+1` was tested for `n <= complexity_up_to`.
    pub complexity_up_to: usize,
    /// First `n` in range with `C(n) <= n`, if any.
    pub complexity_failure: Option<usize>,
    /// Left special factors were looked for at lengths `<= left_special_up_to`.
    pub left_special_up_to: usize,
    /// First length in range without a left special factor, if any.
    pub left_special_gap: Option<usize>,
    pub note: String,
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "prefix {} letters, smallest period {} (bound {}); C(n) >= n+1 for n <= {}: {}; left special at every length <= {}: {}",
            self.prefix_len,
            self.prefix_period,
            self.period_bound,
            self.complexity_up_to,
            match self.complexity_failure {
                None => String::from("yes"),
                Some(n) => alloc::format!("no, fails at {n}"),
            },
            self.left_special_up_to,
            match self.left_special_gap {
                None => String::from("yes"),
                Some(n) => alloc::format!("no, none at {n}"),
            },
        )?;
        if !self.note.is_empty() {
            write!(f, "; {}", self.note)?;
        }
        Ok(())
    }
}

/// Outcome of a periodicity decision.
///
/// `period` is the prefix of `u` whose length the closed-form block gives
/// (a period, not necessarily the smallest); `minimal_period` is the
/// smallest period of the word. Both are present exactly when the word is periodic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicityVerdict {
    pub kind: VerdictKind,
    pub period: Option<Word>,
    pub minimal_period: Option<Word>,
    pub certificate: Certificate,
    pub evidence: Option<Evidence>,
    /// Set when the verdict rests on a finite prefix rather than a closed-form criterion.
    pub empirical: bool,
}

impl PeriodicityVerdict {
    pub fn periodic(period: Word, minimal_period: Word, certificate: Certificate) -> Self {
        PeriodicityVerdict {
            kind: VerdictKind::Periodic,
            period: Some(period),
            minimal_period: Some(minimal_period),
            certificate,
            evidence: None,
            empirical: false,
        }
    }

    pub fn aperiodic(certificate: Certificate) -> Self {
        PeriodicityVerdict {
            kind: VerdictKind::Aperiodic,
            period: None,
            minimal_period: None,
            certificate,
            evidence: None,
            empirical: false,
        }
    }

    pub fn unknown(certificate: Certificate, evidence: Evidence) -> Self {
        PeriodicityVerdict {
            kind: VerdictKind::Unknown,
            period: None,
            minimal_period: None,
            certificate,
            evidence: Some(evidence),
            empirical: false,
        }
    }

    pub fn is_periodic(&self) -> bool {
        self.kind == VerdictKind::Periodic
    }
}

impl fmt::Display for PeriodicityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kind={}", self.kind)?;
        if let Some(p) = &self.period {
            write!(f, " period={p}")?;
        }
        if let Some(p) = &self.minimal_period {
            write!(f, " minimalPeriod={p}")?;
        }
        write!(f, " certificate={}", self.certificate)?;
        if self.empirical {
            f.write_str(" empirical")?;
        }
        if let Some(e) = &self.evidence {
            write!(f, " evidence=[{e}]")?;
        }
        Ok(())
    }
}
