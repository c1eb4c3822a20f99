//! Text notation for directive bi-sequences.
//!
//! ```text
//! DELTA := SYMBOL* '(' SYMBOL+ ')'
//! THETA := TOKEN*  '(' TOKEN+  ')'
//! DECL  := NAME ':' GLYPH '>' GLYPH (',' GLYPH '>' GLYPH)*
//! ```
//!
//! `SYMBOL` is one alphabet glyph. `TOKEN` is an antimorphism name, matched
//! greedily against the builtin names (`R`, plus `E` on two letters or
//! `E0 E1 E2` on three) and any declared ones. Whitespace between items is
//! ignored. Letters left out of a declaration are fixed points.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::alphabet::{Alphabet, Letter};
use crate::antimorphism::Antimorphism;
use crate::bisequence::DirectiveBiSequence;
use crate::error::{Error, Result};
use crate::sequence::EventuallyPeriodic;

/// A syntax error with a 1-based character position into the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{field} {input:?}: {message} at position {position}")]
pub struct ParseError {
    pub field: String,
    pub input: String,
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(field: &str, input: &str, position: usize, message: impl Into<String>) -> Self {
        ParseError { field: field.into(), input: input.into(), position, message: message.into() }
    }
}

fn parse_periodic<T: Clone>(
    field: &str,
    input: &str,
    mut item: impl FnMut(&[char], usize) -> core::result::Result<(T, usize), String>,
) -> core::result::Result<EventuallyPeriodic<T>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let err = |pos: usize, msg: &str| ParseError::new(field, input, pos + 1, msg);
    let mut preamble = Vec::new();
    let mut cycle = Vec::new();
    let mut in_cycle = false;
    let mut closed = false;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if closed {
            return Err(err(i, "unexpected input after ')'"));
        }
        match c {
            '(' if in_cycle => return Err(err(i, "nested '('")),
            '(' => {
                in_cycle = true;
                i += 1;
            }
            ')' if !in_cycle => return Err(err(i, "')' without '('")),
            ')' => {
                if cycle.is_empty() {
                    return Err(err(i, "the cycle must not be empty"));
                }
                closed = true;
                i += 1;
            }
            _ => {
                let (value, used) = item(&chars, i).map_err(|m| err(i, &m))?;
                if in_cycle { &mut cycle } else { &mut preamble }.push(value);
                i += used;
            }
        }
    }
    if !closed {
        let what = if in_cycle { "expected ')'" } else { "expected a parenthesised cycle" };
        return Err(err(chars.len(), what));
    }
    Ok(EventuallyPeriodic::new(preamble, cycle).expect("cycle checked nonempty"))
}

/// Parses `Δ`, e.g. `01(10)`.
pub fn parse_delta(alphabet: &Alphabet, input: &str) -> core::result::Result<EventuallyPeriodic<Letter>, ParseError> {
    parse_periodic("delta", input, |chars, i| {
        alphabet
            .letter_of(chars[i])
            .map(|l| (l, 1))
            .ok_or_else(|| alloc::format!("{:?} is not a letter of the alphabet", chars[i]))
    })
}

/// Parses `Θ`, e.g. `RE(RE)` or `(R E0 E0)`.
pub fn parse_theta(
    alphabet: &Alphabet,
    input: &str,
    declared: &[Antimorphism],
) -> Result<EventuallyPeriodic<Antimorphism>> {
    let available = vocabulary(alphabet, declared)?;
    Ok(parse_periodic("theta", input, |chars, i| {
        available
            .iter()
            .filter(|a| {
                let name: Vec<char> = a.name().chars().collect();
                chars[i..].starts_with(&name)
            })
            .max_by_key(|a| a.name().chars().count())
            .map(|a| (a.clone(), a.name().chars().count()))
            .ok_or_else(|| alloc::format!("unknown antimorphism starting with {:?}", chars[i]))
    })?)
}

fn vocabulary(alphabet: &Alphabet, declared: &[Antimorphism]) -> Result<Vec<Antimorphism>> {
    let mut all = Antimorphism::builtins(alphabet);
    for a in declared {
        if a.size() != alphabet.size() {
            return Err(Error::Domain(alloc::format!(
                "antimorphism {a} acts on {} letters, the alphabet has {}",
                a.size(),
                alphabet.size()
            )));
        }
        if all.iter().any(|b| b.name() == a.name()) {
            return Err(Error::Invalid(alloc::format!("antimorphism name {a} is already defined")));
        }
        all.push(a.clone());
    }
    Ok(all)
}

pub fn parse_bisequence(
    alphabet: &Alphabet,
    delta: &str,
    theta: &str,
    declared: &[Antimorphism],
) -> Result<DirectiveBiSequence> {
    let d = parse_delta(alphabet, delta)?;
    let t = parse_theta(alphabet, theta, declared)?;
    DirectiveBiSequence::new(alphabet.clone(), d, t)
}

/// Parses a declaration such as `F:0>1,1>0,2>2`.
pub fn parse_antimorphism(alphabet: &Alphabet, input: &str) -> Result<Antimorphism> {
    let field = "antimorphism";
    let colon = input
        .find(':')
        .ok_or_else(|| ParseError::new(field, input, input.chars().count() + 1, "expected ':' after the name"))?;
    let name = input[..colon].trim();
    if name.is_empty() {
        return Err(ParseError::new(field, input, 1, "missing name").into());
    }
    let mut images: Vec<usize> = (0..alphabet.size()).collect();
    let mut seen = alloc::vec![false; alphabet.size()];
    let mut pos = input[..=colon].chars().count() + 1;
    for part in input[colon + 1..].split(',') {
        let glyphs: Vec<char> = part.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| ParseError::new(field, input, pos, msg);
        if glyphs.len() != 3 || glyphs[1] != '>' {
            return Err(bad("expected a mapping of the form x>y").into());
        }
        let from = alphabet.letter_of(glyphs[0]).ok_or_else(|| bad("unknown letter"))?;
        let to = alphabet.letter_of(glyphs[2]).ok_or_else(|| bad("unknown letter"))?;
        if core::mem::replace(&mut seen[from.index()], true) {
            return Err(bad("letter mapped twice").into());
        }
        images[from.index()] = to.index();
        pos += part.chars().count() + 1;
    }
    Antimorphism::from_images(name, &images)
}

fn is_builtin_name(name: &str) -> bool {
    matches!(name, "R" | "E" | "E0" | "E1" | "E2")
}

pub fn format_delta(alphabet: &Alphabet, delta: &EventuallyPeriodic<Letter>) -> String {
    let mut s = alphabet.render(delta.preamble());
    s.push('(');
    s.push_str(&alphabet.render(delta.cycle()));
    s.push(')');
    s
}

pub fn format_theta(theta: &EventuallyPeriodic<Antimorphism>) -> String {
    let compact = theta.preamble().iter().chain(theta.cycle()).all(|a| is_builtin_name(a.name()));
    let sep = if compact { "" } else { " " };
    let join = |xs: &[Antimorphism]| xs.iter().map(|a| a.name().to_string()).collect::<Vec<_>>().join(sep);
    let mut s = join(theta.preamble());
    if !s.is_empty() && !compact {
        s.push(' ');
    }
    s.push('(');
    s.push_str(&join(theta.cycle()));
    s.push(')');
    s
}

/// `Δ / Θ`, e.g. `01(10) / RE(RE)`.
pub fn format_bisequence(bi: &DirectiveBiSequence) -> String {
    alloc::format!("{} / {}", format_delta(bi.alphabet(), bi.delta()), format_theta(bi.theta()))
}
