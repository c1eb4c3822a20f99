//! Command-line front end. Every command is a thin adapter over the
//! library; structured output goes through [`crate::record`].

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pseudoword_core::closure::DEFAULT_MAX_LETTERS;
use pseudoword_core::normalize::{
    is_normalized_empirical, normalize_binary, ternary_two_antimorphism_normal_form, RewriteTrace,
};
use pseudoword_core::oracle::{classify_empirically, factor_complexity, EmpiricalConfig};
use pseudoword_core::periodicity::{decide, decide_ternary, ternary_period, TernaryCase};
use pseudoword_core::{
    generate_with, parse_antimorphism, parse_bisequence, word_prefix_with, Alphabet, Antimorphism, ClosureConfig,
    DirectiveBiSequence, Error, PeriodicityVerdict, VerdictKind,
};

use crate::harness::{explore, verify, FamilySpec};
use crate::record::{self, VerdictRecord};

/// Overrides the default cap on generated letters.
pub const MAX_PREFIX_ENV: &str = "PSEUDOWORD_MAX_PREFIX";

pub const EXIT_OK: u8 = 0;
pub const EXIT_DISCREPANCY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "pseudoword", version, about = "Generalized pseudostandard words: generation, normalization, periodicity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Args)]
pub struct AlphabetArgs {
    /// Alphabet size, or its glyphs (e.g. `abc`).
    #[arg(long, default_value = "2")]
    pub alphabet: String,
    /// Declares an antimorphism, e.g. `F:0>1,1>0`. Repeatable.
    #[arg(long = "antimorphism", value_name = "DECL")]
    pub antimorphisms: Vec<String>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    #[command(flatten)]
    pub alphabet: AlphabetArgs,
    /// Letter sequence, e.g. `01(10)`.
    #[arg(long)]
    pub delta: String,
    /// Antimorphism sequence, e.g. `RE(RE)` or `(R E0 E0)`.
    #[arg(long)]
    pub theta: String,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cap on generated letters; defaults to $PSEUDOWORD_MAX_PREFIX or 2^24.
    #[arg(long)]
    pub max_letters: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub max_preamble: Option<usize>,
    #[arg(long)]
    pub max_cycle: Option<usize>,
    /// Oracle prefix length.
    #[arg(long, default_value_t = 2000)]
    pub prefix_len: usize,
    /// Largest period the oracle accepts.
    #[arg(long, default_value_t = 200)]
    pub period_bound: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print w_1..w_n and a prefix of the word.
    Generate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short = 'n', default_value_t = 6)]
        n: usize,
        /// Letters of the word prefix to print.
        #[arg(long, default_value_t = 100)]
        length: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Normalize: binary rewriting rules, or the two-antimorphism normal
    /// form over three letters.
    Normalize {
        #[command(flatten)]
        input: InputArgs,
        /// Depth of the skipped-prefix check on the output.
        #[arg(long, default_value_t = 20)]
        depth: usize,
        /// Print the rule applications.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decide periodicity.
    Decide {
        #[command(flatten)]
        input: InputArgs,
        /// Use the finite-prefix classifier instead of the closed-form criteria.
        #[arg(long)]
        empirical: bool,
        #[arg(long, default_value_t = 2000)]
        prefix_len: usize,
        #[arg(long, default_value_t = 200)]
        period_bound: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Period of a periodic word: the formula period and the smallest one.
    Period {
        #[command(flatten)]
        input: InputArgs,
        /// Ternary case to apply (1, 2, 3); by default the decided one.
        #[arg(long = "case")]
        case: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Factor complexity and left special lengths of a prefix.
    Complexity {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2000)]
        length: usize,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the decider with the oracle over an enumerated family.
    Verify {
        #[arg(long, default_value = "2")]
        alphabet: String,
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hunt for bi-sequences where the conjecture's conditions and the
    /// empirical verdict disagree.
    Explore {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// Leave the builtin antimorphisms out of the family.
        #[arg(long)]
        declared_only: bool,
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// A command failure with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub status: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if matches!(e, Error::Internal(_)) { EXIT_INTERNAL } else { EXIT_USAGE };
        Failure { status, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { status: EXIT_USAGE, message: message.into() }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return status;
        }
    };
    match execute(&cli.command) {
        Ok((text, status)) => match out.write_all(text.as_bytes()) {
            Ok(()) => status,
            Err(e) => {
                let _ = writeln!(err, "error: cannot write output: {e}");
                EXIT_INTERNAL
            }
        },
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.status
        }
    }
}

/// Runs a parsed command; returns the rendered output and exit status.
pub fn execute(command: &Command) -> Result<(String, u8), Failure> {
    match command {
        Command::Generate { input, n, length, output } => {
            let bi = parse_input(input)?;
            let config = closure_config(output)?;
            let seq = generate_with(&bi, *n, config)?;
            let word = word_prefix_with(&bi, *length, config)?;
            let text = match output.format {
                Format::Structured => record::prefixes(&seq, *n, &word).to_json() + "\n",
                Format::Text => {
                    let a = bi.alphabet();
                    let mut s = String::new();
                    for k in 1..=*n {
                        let _ = writeln!(s, "w_{k} = {}", a.render(seq.prefix(k)));
                    }
                    let _ = writeln!(s, "u[..{length}] = {}", a.render(&word));
                    s
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Normalize { input, depth, trace, output } => {
            let bi = parse_input(input)?;
            let (out_bi, steps) = normalize_any(&bi)?;
            let normalized = if *depth == 0 { None } else { Some(is_normalized_empirical(&out_bi, *depth)?) };
            let text = match output.format {
                Format::Structured => {
                    record::normalization(&bi, &out_bi, normalized, *depth, steps.as_ref().filter(|_| *trace))
                        .to_json()
                        + "\n"
                }
                Format::Text => {
                    let mut s = format!("{out_bi}\n");
                    if let Some(ok) = normalized {
                        let verdict = if ok { "no skipped prefix" } else { "skipped prefix found" };
                        let _ = writeln!(s, "check at depth {depth}: {verdict}");
                    }
                    if let (true, Some(t)) = (*trace, &steps) {
                        s.push_str(&t.render(bi.alphabet()));
                    }
                    s
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Decide { input, empirical, prefix_len, period_bound, output } => {
            let bi = parse_input(input)?;
            let v = if *empirical {
                let cap = closure_config(output)?.max_letters;
                if *prefix_len > cap {
                    return Err(Error::Resource { requested: *prefix_len, cap }.into());
                }
                classify_empirically(&bi, EmpiricalConfig::new(*prefix_len, *period_bound))?
            } else {
                decide(&bi)?
            };
            Ok((render_verdict(&bi, &v, output.format), EXIT_OK))
        }
        Command::Period { input, case, output } => {
            let bi = parse_input(input)?;
            let v = match case {
                None => decide(&bi)?,
                Some(c) => forced_case(&bi, c.parse()?)?,
            };
            if v.kind != VerdictKind::Periodic {
                return Err(usage(format!("u({bi}) has no period: {}", text_verdict(&VerdictRecord::new(bi.alphabet(), &v)))));
            }
            Ok((render_verdict(&bi, &v, output.format), EXIT_OK))
        }
        Command::Complexity { input, length, n_max, output } => {
            let bi = parse_input(input)?;
            let word = word_prefix_with(&bi, *length, closure_config(output)?)?;
            let profile = factor_complexity(&word, *n_max)?;
            let text = match output.format {
                Format::Structured => record::complexity(&bi, *length, &profile).to_json() + "\n",
                Format::Text => {
                    let mut s = format!("prefix of {length} letters\nn C(n) left-special\n");
                    for n in 1..=profile.n_max() {
                        let ls = if profile.has_left_special(n) { "yes" } else { "no" };
                        let _ = writeln!(s, "{n} {} {ls}", profile.count(n));
                    }
                    s
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Verify { alphabet, family, output } => {
            let a = parse_alphabet(alphabet)?;
            let spec = family_spec(a.size(), family);
            let r = verify(&a, spec)?;
            let status = if r.discrepancies.is_empty() && r.unknown_without_evidence == 0 {
                EXIT_OK
            } else {
                EXIT_DISCREPANCY
            };
            let text = match output.format {
                Format::Structured => record::Envelope::new("verify", None, r).to_json() + "\n",
                Format::Text => {
                    let mut s = format!(
                        "{} bi-sequences over {} letters (preamble <= {}, cycle <= {}): {} periodic, {} aperiodic, {} unknown\n",
                        r.checked, r.alphabet, r.max_preamble, r.max_cycle, r.periodic, r.aperiodic, r.unknown
                    );
                    if r.unknown_without_evidence > 0 {
                        let _ = writeln!(s, "{} unknown verdicts without evidence", r.unknown_without_evidence);
                    }
                    let _ = writeln!(s, "discrepancies: {}", r.discrepancies.len());
                    if !r.discrepancies.is_empty() {
                        let _ = writeln!(s, "input | decided | empirical");
                        for d in &r.discrepancies {
                            let _ = writeln!(s, "{} | {} | {}", d.input, text_verdict(&d.decided), text_verdict(&d.empirical));
                        }
                    }
                    s
                }
            };
            Ok((text, status))
        }
        Command::Explore { alphabet, declared_only, family, output } => {
            let a = parse_alphabet(&alphabet.alphabet)?;
            let declared = parse_declarations(&a, &alphabet.antimorphisms)?;
            let mut thetas = if *declared_only { Vec::new() } else { Antimorphism::builtins(&a) };
            thetas.extend(declared);
            if thetas.is_empty() {
                return Err(usage("no antimorphisms to explore"));
            }
            let spec = family_spec(a.size(), family);
            let r = explore(&a, &thetas, spec)?;
            let status = if r.mismatches.is_empty() { EXIT_OK } else { EXIT_DISCREPANCY };
            let text = match output.format {
                Format::Structured => record::Envelope::new("explore", None, r).to_json() + "\n",
                Format::Text => {
                    let mut s = format!(
                        "{} bi-sequences over {} letters with {{{}}} (preamble <= {}, cycle <= {}): conditions hold for {}, {} empirically unknown\n",
                        r.checked,
                        r.alphabet,
                        r.antimorphisms.join(","),
                        r.max_preamble,
                        r.max_cycle,
                        r.conditions_hold,
                        r.empirical_unknown
                    );
                    let _ = writeln!(s, "mismatches: {}", r.mismatches.len());
                    if !r.mismatches.is_empty() {
                        let _ = writeln!(s, "input | constant image | palindrome transfer | normalized | empirical");
                        for m in &r.mismatches {
                            let _ = writeln!(
                                s,
                                "{} | {} | {} | {} | {}",
                                m.input,
                                m.constant_image,
                                m.palindrome_transfer,
                                m.normalized,
                                text_verdict(&m.empirical)
                            );
                        }
                    }
                    s
                }
            };
            Ok((text, status))
        }
    }
}

fn forced_case(bi: &DirectiveBiSequence, case: TernaryCase) -> Result<PeriodicityVerdict, Failure> {
    if bi.alphabet().size() != 3 {
        return Err(usage("--case applies to ternary alphabets only"));
    }
    let period = ternary_period(bi, case)?;
    let v = decide_ternary(bi)?;
    if v.certificate != case.certificate() {
        return Err(Error::Internal(format!("{case} period exists but the decider reported {}", v.certificate)).into());
    }
    debug_assert_eq!(v.period.as_ref(), Some(&period));
    Ok(v)
}

fn normalize_any(bi: &DirectiveBiSequence) -> Result<(DirectiveBiSequence, Option<RewriteTrace>), Failure> {
    match bi.alphabet().size() {
        2 => {
            let (out, trace) = normalize_binary(bi)?;
            Ok((out, Some(trace)))
        }
        3 => Ok((ternary_two_antimorphism_normal_form(bi)?.canonical(), None)),
        d => Err(Error::Domain(format!("no normalization procedure on {d} letters")).into()),
    }
}

fn render_verdict(bi: &DirectiveBiSequence, v: &PeriodicityVerdict, format: Format) -> String {
    match format {
        Format::Structured => record::verdict(bi, v).to_json() + "\n",
        Format::Text => text_verdict(&VerdictRecord::new(bi.alphabet(), v)) + "\n",
    }
}

/// `kind=Periodic period=0110 minimalPeriod=0110 certificate=...`.
pub fn text_verdict(r: &VerdictRecord) -> String {
    let mut s = format!("kind={}", r.kind);
    if let Some(p) = &r.period {
        let _ = write!(s, " period={p}");
    }
    if let Some(p) = &r.minimal_period {
        let _ = write!(s, " minimalPeriod={p}");
    }
    let _ = write!(s, " certificate={}", r.certificate);
    if r.empirical {
        s.push_str(" empirical");
    }
    if let Some(e) = &r.evidence {
        let _ = write!(
            s,
            " evidence=[prefix {} letters, smallest period {} (bound {}), C(n) >= n+1 up to {}: {}, left special up to {}: {}",
            e.prefix_len,
            e.prefix_period,
            e.period_bound,
            e.complexity_up_to,
            e.complexity_failure.map_or("yes".to_string(), |n| format!("fails at {n}")),
            e.left_special_up_to,
            e.left_special_gap.map_or("yes".to_string(), |n| format!("none at {n}")),
        );
        if !e.note.is_empty() {
            let _ = write!(s, "; {}", e.note);
        }
        s.push(']');
    }
    s
}

pub fn parse_alphabet(spec: &str) -> Result<Alphabet, Failure> {
    let spec = spec.trim();
    if let Ok(d) = spec.parse::<usize>() {
        return Ok(Alphabet::with_size(d)?);
    }
    let glyphs: Vec<char> = spec.chars().filter(|c| !c.is_whitespace() && *c != ',').collect();
    Ok(Alphabet::from_glyphs(glyphs)?)
}

fn parse_declarations(alphabet: &Alphabet, decls: &[String]) -> Result<Vec<Antimorphism>, Failure> {
    decls.iter().map(|d| parse_antimorphism(alphabet, d).map_err(Failure::from)).collect()
}

pub fn parse_input(input: &InputArgs) -> Result<DirectiveBiSequence, Failure> {
    let a = parse_alphabet(&input.alphabet.alphabet)?;
    let declared = parse_declarations(&a, &input.alphabet.antimorphisms)?;
    Ok(parse_bisequence(&a, &input.delta, &input.theta, &declared)?)
}

/// `--max-letters`, else `$PSEUDOWORD_MAX_PREFIX`, else 2^24.
fn closure_config(output: &OutputArgs) -> Result<ClosureConfig, Failure> {
    let max_letters = match output.max_letters {
        Some(m) => m,
        None => match std::env::var(MAX_PREFIX_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| usage(format!("{MAX_PREFIX_ENV}={v:?} is not a letter count")))?,
            Err(_) => DEFAULT_MAX_LETTERS,
        },
    };
    Ok(ClosureConfig { max_letters })
}

fn family_spec(d: usize, args: &FamilyArgs) -> FamilySpec {
    let base = FamilySpec::default_for(d);
    FamilySpec {
        max_preamble: args.max_preamble.unwrap_or(base.max_preamble),
        max_cycle: args.max_cycle.unwrap_or(base.max_cycle),
        oracle: EmpiricalConfig { complexity_up_to: Some(60), ..EmpiricalConfig::new(args.prefix_len, args.period_bound) },
    }
}
