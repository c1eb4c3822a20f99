//! Brute-force ground truth used to validate the fast paths.

mod brute;
mod classify;
mod complexity;
mod period;

pub use brute::{brute_force_closure, brute_force_closure_bounded, pseudopalindromic_prefixes, DEFAULT_BRUTE_FORCE_BOUND};
pub use classify::{classify_empirically, classify_word, EmpiricalConfig};
pub use complexity::{factor_complexity, prefix_left_extension_reach, ComplexityProfile};
pub use period::{border_array, has_period, minimal_period};
