//! Rewriting directive bi-sequences so the prefix chain captures every
//! pseudopalindromic prefix.

mod binary;
mod check;
mod ternary;
mod trace;

pub use binary::normalize_binary;
pub use check::{first_skipped_prefix, is_normalized_empirical, normalization_check_set};
pub use ternary::{ternary_rewrite_step, ternary_two_antimorphism_normal_form};
pub use trace::{RewriteStep, RewriteTrace, RuleId};
