//! Acceptance run: one PASS/FAIL line per criterion. Tolerances and time
//! limits are fixed here.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use pseudoword::harness::{verify, FamilySpec};
use pseudoword_core::family::bisequences;
use pseudoword_core::normalize::{is_normalized_empirical, normalize_binary};
use pseudoword_core::oracle::{brute_force_closure, factor_complexity, prefix_left_extension_reach, EmpiricalConfig};
use pseudoword_core::periodicity::{check_conjecture, decide_binary, decide_ternary};
use pseudoword_core::{
    closure, generate, parse_antimorphism, parse_bisequence, word_prefix, Alphabet, Antimorphism, DirectiveBiSequence,
    Letter, VerdictKind, Word,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bi(d: usize, delta: &str, theta: &str) -> DirectiveBiSequence {
    parse_bisequence(&Alphabet::with_size(d).unwrap(), delta, theta, &[]).unwrap()
}

fn chain(d: usize, delta: &str, theta: &str, n: usize) -> Vec<String> {
    let b = bi(d, delta, theta);
    let seq = generate(&b, n).unwrap();
    (1..=n).map(|k| b.alphabet().render(seq.prefix(k))).collect()
}

fn golden_prefixes() -> Outcome {
    let cases: [(usize, &str, &str, &[&str]); 5] = [
        (2, "(011)", "(EER)", &["01", "011001", "01100110", "0110011001"]),
        (2, "01(10)", "(RE)", &["0", "01", "0110", "011001", "01100110", "0110011001"]),
        (3, "0(211)", "(RE0E0)", &["0", "0210", "0210120210", "0210120210120"]),
        (3, "(102)", "(E2E0E1)", &["10", "1002", "100221", "10022110", "1002211002"]),
        (3, "(210)", "(E0E1R)", &["21", "2110", "21100112", "21100112200221", "2110011220022110022001122110"]),
    ];
    for (d, delta, theta, expected) in cases {
        let got = chain(d, delta, theta, expected.len());
        ensure(got == expected, || format!("{delta} / {theta}: {got:?}"))?;
    }
    Ok(format!("{} chains exact", cases.len()))
}

fn normalization() -> Outcome {
    let input = bi(2, "(011)", "(EER)");
    let (out, _) = normalize_binary(&input).unwrap();
    ensure(out.same_sequences(&bi(2, "01(10)", "(RE)")), || format!("normalized to {out}"))?;
    ensure(is_normalized_empirical(&out, 20).unwrap(), || "skipped prefix at depth 20".into())?;
    ensure(word_prefix(&input, 10_000).unwrap() == word_prefix(&out, 10_000).unwrap(), || "word differs".into())?;
    let a = Alphabet::binary();
    let family = bisequences(&a, &Antimorphism::builtins(&a), 2, 3);
    for b in &family {
        let (out, _) = normalize_binary(b).unwrap();
        ensure(is_normalized_empirical(&out, 15).unwrap(), || format!("{b} -> {out} skips a prefix"))?;
        ensure(word_prefix(b, 2000).unwrap() == word_prefix(&out, 2000).unwrap(), || format!("{b} -> {out} changes u"))?;
    }
    Ok(format!("{out}; family of {} all normalized and preserved", family.len()))
}

fn periodicity_instances() -> Outcome {
    let expect = |v: pseudoword_core::PeriodicityVerdict, period: Option<&str>, what: &str| {
        let got = v.period.as_ref().map(|p| p.to_string());
        let kind = if period.is_some() { VerdictKind::Periodic } else { VerdictKind::Aperiodic };
        ensure(v.kind == kind && got.as_deref() == period, || format!("{what}: {v}"))
    };
    expect(decide_binary(&bi(2, "(011)", "(EER)")).unwrap(), Some("0110"), "(011)/(EER)")?;
    expect(decide_ternary(&bi(3, "0(211)", "(RE0E0)")).unwrap(), Some("021012"), "0(211)/(RE0E0)")?;
    expect(decide_ternary(&bi(3, "(102)", "(E2E0E1)")).unwrap(), Some("100221"), "(102)/(E2E0E1)")?;
    expect(decide_ternary(&bi(3, "(01)", "(RE1)")).unwrap(), None, "(01)/(RE1)")?;
    Ok("0110, 021012, 100221, aperiodic".into())
}

fn decider_oracle() -> Outcome {
    let oracle = EmpiricalConfig::new(2000, 200);
    let mut summary = Vec::new();
    for (d, pre, cyc) in [(2, 2, 3), (3, 1, 3)] {
        let spec = FamilySpec { max_preamble: pre, max_cycle: cyc, oracle };
        let r = verify(&Alphabet::with_size(d).unwrap(), spec).unwrap();
        ensure(r.discrepancies.is_empty(), || format!("d={d}: {} discrepancies, first {:?}", r.discrepancies.len(), r.discrepancies[0]))?;
        ensure(r.unknown_without_evidence == 0, || format!("d={d}: unknown without evidence"))?;
        summary.push(format!("d={d}: {} checked, {} unknown with evidence", r.checked, r.unknown));
    }
    Ok(summary.join("; "))
}

fn closure_oracle() -> Outcome {
    let mut checked = 0;
    for (d, max) in [(2, 10), (3, 7)] {
        let a = Alphabet::with_size(d).unwrap();
        for theta in Antimorphism::builtins(&a) {
            for len in 0..=max {
                for w in a.words_of_length(len) {
                    let (fast, slow) = (closure(&w, &theta).unwrap(), brute_force_closure(&w, &theta).unwrap());
                    ensure(fast == slow, || format!("{theta}, {w}: {fast} vs {slow}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} closures, zero mismatches"))
}

fn two_antimorphism_table() -> Outcome {
    let table = [
        ("E0", '0', '0'), ("E0", '1', '2'), ("E0", '2', '1'),
        ("E1", '1', '1'), ("E1", '0', '2'), ("E1", '2', '0'),
        ("E2", '2', '2'), ("E2", '0', '1'), ("E2", '1', '0'),
    ];
    let mut cases = 0;
    for (e, a, b) in table {
        let theta = format!("(R{e})");
        for c in ['0', '1', '2'] {
            let v = decide_ternary(&bi(3, &format!("({c}{a})"), &theta)).unwrap();
            let kind = if c == b { VerdictKind::Periodic } else { VerdictKind::Aperiodic };
            ensure(v.kind == kind, || format!("R->{a}, {e}->{c}: {v}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases: 9 periodic, {} perturbed aperiodic", cases - 9))
}

fn aperiodicity_evidence() -> Outcome {
    let w = word_prefix(&bi(3, "(01)", "(RE1)"), 5000).unwrap();
    let profile = factor_complexity(&w, 100).unwrap();
    ensure(profile.first_below_aperiodic_bound(100).is_none(), || "C(n) <= n for some n <= 100".into())?;
    let reach = prefix_left_extension_reach(&w, 3);
    for letter in [1, 2] {
        let r = reach[letter].unwrap_or(0);
        ensure(r >= 40, || format!("{letter}p is a factor only for |p| <= {r}"))?;
    }
    Ok(format!("C(100) = {}, 1p and 2p occur for |p| <= 40", profile.count(100)))
}

fn five_letter_example() -> Outcome {
    let five = Alphabet::with_size(5).unwrap();
    let e014 = parse_antimorphism(&five, "E014:0>0,1>1,2>3,3>2,4>4").unwrap();
    let e2 = parse_antimorphism(&five, "E2:0>1,1>0,2>2,3>4,4>3").unwrap();
    let decl = [e014, e2];
    let a = parse_bisequence(&five, "(01)", "(E014 E2)", &decl).unwrap();
    let b = parse_bisequence(&five, "(01)", "(R E2)", &decl).unwrap();
    let expected = "01".repeat(50);
    for x in [&a, &b] {
        let got = five.render(&word_prefix(x, 100).unwrap());
        ensure(got == expected, || format!("{x}: {got}"))?;
    }
    let r = check_conjecture(&a).unwrap();
    ensure(!r.conditions_hold() && r.empirical.kind == VerdictKind::Periodic && !r.agrees(), || format!("{r:?}"))?;
    Ok("both words are (01)^50; conditions fail while u is periodic".into())
}

fn algebraic_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for d in [2, 3] {
        let a = Alphabet::with_size(d).unwrap();
        let words: Vec<Word> = (0..=12).flat_map(|n| a.words_of_length(n).collect::<Vec<_>>()).collect();
        for theta in Antimorphism::builtins(&a) {
            for w in &words {
                ensure(theta.apply(&theta.apply(w).unwrap()).unwrap() == *w, || format!("{theta} not involutive on {w}"))?;
            }
            let short = &words[..words.iter().position(|w| w.len() > 8).unwrap()];
            let pairs: Vec<(&Word, &Word)> = if d == 2 {
                short.iter().flat_map(|u| short.iter().map(move |v| (u, v))).collect()
            } else {
                (0..200_000).map(|_| (&short[rng.gen_range(0..short.len())], &short[rng.gen_range(0..short.len())])).collect()
            };
            for (u, v) in pairs {
                let lhs = theta.apply(&u.concat(v)).unwrap();
                let rhs = theta.apply(v).unwrap().concat(&theta.apply(u).unwrap());
                ensure(lhs == rhs, || format!("{theta}({u}{v})"))?;
            }
        }
    }
    let e = [0, 1, 2].map(Antimorphism::ternary_exchange);
    let distinct = |i: usize, j: usize, k: usize| i != j && j != k && i != k;
    for (i, j, k) in (0..27).map(|n| (n / 9, n / 3 % 3, n % 3)).filter(|&(i, j, k)| distinct(i, j, k)) {
        for x in (0..3).map(Letter::new) {
            ensure(e[i].image(e[j].image(e[k].image(x))) == e[j].image(x), || format!("E{i}E{j}E{k}({x})"))?;
        }
    }
    let t = Alphabet::ternary();
    for v in (0..=9).flat_map(|n| t.words_of_length(n).collect::<Vec<_>>()) {
        for i in (0..3).filter(|&i| e[i].is_palindrome(&v).unwrap()) {
            for j in (0..3).filter(|&j| j != i) {
                let k = 3 - i - j;
                ensure(e[k].is_palindrome(&e[j].apply(&v).unwrap()).unwrap(), || format!("E{j}({v}) vs E{k}"))?;
            }
        }
    }
    Ok("involution <= 12, antimorphism law <= 8, triple product, exchange palindromes <= 9".into())
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

const CRITERIA: [Criterion; 9] = [
    ("1 golden prefixes", Duration::from_secs(1), golden_prefixes),
    ("2 normalization", Duration::from_secs(120), normalization),
    ("3 periodicity instances", Duration::from_secs(1), periodicity_instances),
    ("4 decider-oracle equivalence", Duration::from_secs(600), decider_oracle),
    ("5 closure oracle equivalence", Duration::from_secs(60), closure_oracle),
    ("6 two-antimorphism table", Duration::from_secs(5), two_antimorphism_table),
    ("7 aperiodicity evidence", Duration::from_secs(30), aperiodicity_evidence),
    ("8 five-letter cross-check", Duration::from_secs(1), five_letter_example),
    ("9 algebraic properties", Duration::from_secs(60), algebraic_properties),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (name, limit, check) in CRITERIA {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} {name} ({:.2}s / limit {}s): {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
