//! Structured records, family harnesses and the command-line front end
//! for `pseudoword-core`.

pub mod cli;
pub mod harness;
pub mod record;
