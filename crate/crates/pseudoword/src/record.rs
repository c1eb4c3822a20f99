//! Structured output: one JSON object per result, tagged with
//! `formatVersion` and `record`.

use pseudoword_core::normalize::RewriteTrace;
use pseudoword_core::oracle::ComplexityProfile;
use pseudoword_core::periodicity::{ConjectureReport, Evidence};
use pseudoword_core::{Alphabet, DirectiveBiSequence, PeriodicityVerdict, PrefixSequence};
use serde::Serialize;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EvidenceRecord {
    pub prefix_len: usize,
    pub period_bound: usize,
    pub prefix_period: usize,
    pub complexity_up_to: usize,
    pub complexity_failure: Option<usize>,
    pub left_special_up_to: usize,
    pub left_special_gap: Option<usize>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl From<&Evidence> for EvidenceRecord {
    fn from(e: &Evidence) -> Self {
        EvidenceRecord {
            prefix_len: e.prefix_len,
            period_bound: e.period_bound,
            prefix_period: e.prefix_period,
            complexity_up_to: e.complexity_up_to,
            complexity_failure: e.complexity_failure,
            left_special_up_to: e.left_special_up_to,
            left_special_gap: e.left_special_gap,
            note: e.note.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerdictRecord {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_period: Option<String>,
    pub certificate: String,
    pub empirical: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<EvidenceRecord>,
}

impl VerdictRecord {
    pub fn new(alphabet: &Alphabet, v: &PeriodicityVerdict) -> Self {
        VerdictRecord {
            kind: v.kind.as_str().into(),
            period: v.period.as_ref().map(|p| alphabet.render(p)),
            minimal_period: v.minimal_period.as_ref().map(|p| alphabet.render(p)),
            certificate: v.certificate.as_str().into(),
            empirical: v.empirical,
            evidence: v.evidence.as_ref().map(EvidenceRecord::from),
        }
    }
}

/// Every record: version, type tag, the input it describes, and a body.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Envelope<T: Serialize> {
    pub format_version: u32,
    pub record: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(flatten)]
    pub body: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(record: &'static str, input: Option<&DirectiveBiSequence>, body: T) -> Self {
        Envelope { format_version: FORMAT_VERSION, record, input: input.map(|b| b.to_string()), body }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records contain only strings, numbers and lists")
    }
}

pub fn verdict(bi: &DirectiveBiSequence, v: &PeriodicityVerdict) -> Envelope<VerdictRecord> {
    Envelope::new("verdict", Some(bi), VerdictRecord::new(bi.alphabet(), v))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PrefixesRecord {
    pub prefixes: Vec<String>,
    pub word: String,
}

pub fn prefixes(seq: &PrefixSequence, n: usize, word: &[pseudoword_core::Letter]) -> Envelope<PrefixesRecord> {
    let bi = seq.bisequence();
    let a = bi.alphabet();
    Envelope::new(
        "prefixes",
        Some(bi),
        PrefixesRecord { prefixes: (1..=n).map(|k| a.render(seq.prefix(k))).collect(), word: a.render(word) },
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NormalizationRecord {
    pub output: String,
    pub normalized: Option<bool>,
    pub depth: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
}

pub fn normalization(
    input: &DirectiveBiSequence,
    output: &DirectiveBiSequence,
    normalized: Option<bool>,
    depth: usize,
    trace: Option<&RewriteTrace>,
) -> Envelope<NormalizationRecord> {
    let a = input.alphabet();
    let trace = trace.map(|t| t.steps.iter().map(|s| s.render(a)).collect());
    Envelope::new("normalization", Some(input), NormalizationRecord { output: output.to_string(), normalized, depth, trace })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComplexityRecord {
    pub prefix_len: usize,
    pub values: Vec<usize>,
    pub left_special_lengths: Vec<usize>,
}

pub fn complexity(bi: &DirectiveBiSequence, prefix_len: usize, p: &ComplexityProfile) -> Envelope<ComplexityRecord> {
    Envelope::new(
        "complexity",
        Some(bi),
        ComplexityRecord { prefix_len, values: p.values.clone(), left_special_lengths: p.left_special_lengths.clone() },
    )
}

/// One disagreement found by `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Discrepancy {
    pub input: String,
    pub decided: VerdictRecord,
    pub empirical: VerdictRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyRecord {
    pub alphabet: usize,
    pub max_preamble: usize,
    pub max_cycle: usize,
    pub checked: usize,
    pub periodic: usize,
    pub aperiodic: usize,
    pub unknown: usize,
    /// Unknown verdicts that came without evidence; always a bug.
    pub unknown_without_evidence: usize,
    pub discrepancies: Vec<Discrepancy>,
}

/// One instance where the conjecture's conditions and the empirical
/// verdict disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureMismatch {
    pub input: String,
    pub constant_image: bool,
    pub palindrome_transfer: bool,
    pub normalized: bool,
    pub empirical: VerdictRecord,
}

impl ConjectureMismatch {
    pub fn new(bi: &DirectiveBiSequence, r: &ConjectureReport) -> Self {
        ConjectureMismatch {
            input: bi.to_string(),
            constant_image: r.constant_image,
            palindrome_transfer: r.palindrome_transfer,
            normalized: r.normalized,
            empirical: VerdictRecord::new(bi.alphabet(), &r.empirical),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExploreRecord {
    pub alphabet: usize,
    pub antimorphisms: Vec<String>,
    pub max_preamble: usize,
    pub max_cycle: usize,
    pub checked: usize,
    pub conditions_hold: usize,
    pub empirical_unknown: usize,
    pub mismatches: Vec<ConjectureMismatch>,
}
