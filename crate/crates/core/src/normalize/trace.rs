use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::antimorphism::Antimorphism;
use crate::bisequence::DirectiveBiSequence;
use crate::error::{Error, Result};

/// Identifies a rewriting rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleId {
    /// `(aā, RR) -> (aāa, RER)`.
    Prefix1,
    /// `(a^i, R^{i-1}E) -> (a^iā, R^iE)`.
    Prefix2,
    /// `(a^iāā, R^iEE) -> (a^iāāa, R^iERE)`.
    Prefix3,
    /// `(abb̄, ϑϑ̄ϑ̄) -> (abb̄b, ϑϑ̄ϑϑ̄)`.
    Factor,
    /// Ternary `(abc, ϑRR) -> (abcb, ϑRϑR)` or `(abc, Rϑϑ) -> (abcb, RϑRϑ)` with `ϑ(b) = c`.
    Ternary,
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Prefix1 => "prefix-1",
            RuleId::Prefix2 => "prefix-2",
            RuleId::Prefix3 => "prefix-3",
            RuleId::Factor => "factor",
            RuleId::Ternary => "ternary",
        }
    }
}

/// One rule application. Fragments start at `position` (1-based) on both
/// tracks; `after` is `before` with exactly one `(ϑ, δ)` step inserted at
/// its end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: RuleId,
    pub position: usize,
    pub before_delta: Vec<Letter>,
    pub before_theta: Vec<Antimorphism>,
    pub after_delta: Vec<Letter>,
    pub after_theta: Vec<Antimorphism>,
}

impl RewriteStep {
    /// Builds the step that inserts `pair` as `π_{position + m - 1}`, where
    /// `m` is the fragment length, into the fragment read from `delta`/`theta`.
    pub(crate) fn insertion(
        rule: RuleId,
        position: usize,
        before_delta: Vec<Letter>,
        before_theta: Vec<Antimorphism>,
        pair: (Antimorphism, Letter),
    ) -> Self {
        let mut after_theta = before_theta.clone();
        after_theta.push(pair.0);
        let mut after_delta = before_delta.clone();
        after_delta.push(pair.1);
        // ϑ_j moves one place right to make room for the inserted antimorphism.
        let last = after_theta.len();
        after_theta.swap(last - 1, last - 2);
        RewriteStep { rule, position, before_delta, before_theta, after_delta, after_theta }
    }

    /// Index `j` of the inserted pair `π_j = (ϑ_j, δ_{j+1})`.
    pub fn inserted_index(&self) -> usize {
        self.position + self.before_theta.len() - 1
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        let names = |t: &[Antimorphism]| t.iter().map(|a| a.name()).collect::<Vec<_>>().concat();
        format!(
            "{}@{}: ({},{}) -> ({},{})",
            self.rule.as_str(),
            self.position,
            alphabet.render(&self.before_delta),
            names(&self.before_theta),
            alphabet.render(&self.after_delta),
            names(&self.after_theta),
        )
    }
}

/// Ordered record of rule applications.
///
/// Over an eventually periodic input the factor pass never stops; the
/// trace lists the applications made before the output was folded into
/// preamble and cycle. `covered` is the number of leading steps
/// `(ϑ_n, δ_{n+1})` of the output fixed by those applications.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RewriteTrace {
    pub steps: Vec<RewriteStep>,
    pub covered: usize,
}

impl RewriteTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Line-oriented text form, one `ruleId@position: before -> after` per line.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        let mut s = String::new();
        for step in &self.steps {
            s.push_str(&step.render(alphabet));
            s.push('\n');
        }
        s
    }

    /// Replays the steps on a materialized prefix of `input` and checks the
    /// result against `output` on the covered range.
    pub fn replay(&self, input: &DirectiveBiSequence, output: &DirectiveBiSequence) -> Result<()> {
        let reach = self
            .steps
            .iter()
            .map(|s| s.position + s.before_delta.len())
            .max()
            .unwrap_or(0)
            .max(self.covered + 1)
            + 1;
        let mut delta = input.delta().prefix(reach);
        let mut theta = input.theta().prefix(reach);
        for (k, step) in self.steps.iter().enumerate() {
            let p = step.position - 1;
            let m = step.before_delta.len();
            if p + m + 1 > delta.len() || delta[p..p + m] != step.before_delta[..] || theta[p..p + m] != step.before_theta[..] {
                return Err(Error::Internal(format!("trace step {} does not match the replayed sequence", k + 1)));
            }
            let j = step.inserted_index();
            theta.insert(j - 1, step.after_theta[m - 1].clone());
            delta.insert(j, step.after_delta[m]);
            if delta[p..p + m + 1] != step.after_delta[..] || theta[p..p + m + 1] != step.after_theta[..] {
                return Err(Error::Internal(format!("trace step {} does not produce its recorded fragment", k + 1)));
            }
        }
        let n = self.covered;
        let agrees = (1..=n).all(|i| theta[i - 1] == *output.antimorphism(i))
            && (1..=n + 1).all(|i| delta[i - 1] == output.letter(i));
        if agrees {
            Ok(())
        } else {
            Err(Error::Internal("replayed trace disagrees with the output".into()))
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
