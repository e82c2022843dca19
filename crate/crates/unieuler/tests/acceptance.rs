//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use unieuler::crosscheck::{all_strings, crosscheck};
use unieuler::text::render_compact;
use unieuler_core::automaton::accepts;
use unieuler_core::mfw::{binary_mfw_regex_match, brute_mfw, constructive_mfw};
use unieuler_core::transposition::all_sites;
use unieuler_core::{
    apply_transposition, enumerate_trails, in_lprime, is_proper, properize, run, GrammarMode,
    Multigraph, Trail, TranspositionSite,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn words(ts: &[Trail]) -> String {
    ts.iter()
        .map(|t| render_compact(t))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Binary minimal forbidden words: brute force = constructive = regular
/// expression, four per length from 4 to 12.
fn binary_mfw() -> Outcome {
    const MAX_LEN: usize = 12;
    const BUDGET: Duration = Duration::from_secs(5);
    let start = Instant::now();
    let brute = brute_mfw(2, MAX_LEN).map_err(|e| e.to_string())?;
    let built = constructive_mfw(2, MAX_LEN).map_err(|e| e.to_string())?;
    let mut regex: Vec<Trail> = all_strings(2, MAX_LEN)
        .into_iter()
        .filter(|t| binary_mfw_regex_match(t).unwrap())
        .collect();
    regex.sort();
    let elapsed = start.elapsed();

    ensure(brute == built, || {
        format!(
            "brute != constructive: {} vs {}",
            words(&brute),
            words(&built)
        )
    })?;
    ensure(brute == regex, || {
        format!("brute != regex: {} vs {}", words(&brute), words(&regex))
    })?;
    for len in 4..=MAX_LEN {
        let n = brute.iter().filter(|w| w.len() == len).count();
        ensure(n == 4, || format!("{n} words of length {len}, want 4"))?;
    }
    ensure(brute.len() == 36, || {
        format!("{} words, want 36", brute.len())
    })?;
    ensure(elapsed <= BUDGET, || {
        format!("took {elapsed:?}, budget {BUDGET:?}")
    })?;
    Ok(format!("36 words, 4 per length 4..=12, {elapsed:.2?}"))
}

/// Automaton, enumeration oracle, direct scan and amended grammar agree.
fn four_way_agreement() -> Outcome {
    const BUDGET: Duration = Duration::from_secs(120);
    let start = Instant::now();
    let mut summary = Vec::new();
    for (m, len, expected) in [(2, 12, 8190), (3, 9, 29_523), (4, 7, 21_844)] {
        let r = crosscheck(m, len, GrammarMode::Amended).map_err(|e| e.to_string())?;
        ensure(r.strings == expected, || {
            format!("m={m}: {} strings, want {expected}", r.strings)
        })?;
        ensure(r.is_clean(), || {
            format!(
                "m={m}: {} disagreements, first {}",
                r.disagreements.len(),
                render_compact(&r.disagreements[0].word)
            )
        })?;
        summary.push(format!("m={m} L={len}: {} strings", r.strings));
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= BUDGET, || {
        format!("took {elapsed:?}, budget {BUDGET:?}")
    })?;
    Ok(format!(
        "{}, 0 disagreements, {elapsed:.2?}",
        summary.join("; ")
    ))
}

/// Strict grammar is sound everywhere and misses 01020 at m = 3.
fn strict_grammar_audit() -> Outcome {
    let mut gaps_m3 = Vec::new();
    for (m, len) in [(2, 12), (3, 9), (4, 7)] {
        let r = crosscheck(m, len, GrammarMode::Strict).map_err(|e| e.to_string())?;
        ensure(r.is_clean(), || {
            format!(
                "m={m}: soundness violated on {}",
                render_compact(&r.disagreements[0].word)
            )
        })?;
        if m == 3 {
            gaps_m3 = r.grammar_gaps;
        }
    }
    let known = Trail::new(vec![0, 1, 0, 2, 0]);
    ensure(gaps_m3.contains(&known), || {
        "01020 not reported as a gap at m=3".into()
    })?;
    let sample: Vec<Trail> = gaps_m3
        .iter()
        .filter(|t| t.len() == 5)
        .take(6)
        .cloned()
        .collect();
    Ok(format!(
        "sound; {} completeness gaps at m=3, e.g. {}",
        gaps_m3.len(),
        words(&sample)
    ))
}

/// Every non-identity transposition has a proper equivalent.
fn properize_everywhere() -> Outcome {
    let mut checked = 0usize;
    let mut fallbacks = 0usize;
    let mut strings = vec![Trail::empty()];
    strings.extend(all_strings(3, 8));
    for t in &strings {
        for site in all_sites(t) {
            let image = apply_transposition(t, site).map_err(|e| e.to_string())?;
            if image == *t {
                continue;
            }
            let p = properize(t, site).map_err(|e| format!("{}: {e}", render_compact(t)))?;
            ensure(is_proper(t, p.site) == Ok(true), || {
                format!(
                    "{} {site:?}: result {:?} not proper",
                    render_compact(t),
                    p.site
                )
            })?;
            ensure(
                apply_transposition(t, p.site).as_ref() == Ok(&image),
                || format!("{} {site:?}: image changed", render_compact(t)),
            )?;
            checked += 1;
            fallbacks += usize::from(p.fallback);
        }
    }
    Ok(format!(
        "{checked} sites properized, {fallbacks} via fallback search"
    ))
}

/// The automaton rejects exactly when the first bad prefix, or the first
/// minimal forbidden factor, completes.
fn streaming_immediacy() -> Outcome {
    const MAX_LEN: usize = 12;
    let mfw: HashSet<Vec<usize>> = brute_mfw(2, MAX_LEN)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(Trail::into_symbols)
        .collect();
    let mut rejected = 0usize;
    for t in all_strings(2, MAX_LEN) {
        let v = run(&t, 2).map_err(|e| e.to_string())?;
        let Some(first) = v.first_rejection else {
            continue;
        };
        rejected += 1;
        let by_prefix = (1..=t.len()).find(|&l| in_lprime(&t[..l]));
        let by_factor = (1..=t.len()).find(|&end| (0..end).any(|s| mfw.contains(&t[s..end])));
        ensure(by_prefix == Some(first) && by_factor == Some(first), || {
            format!(
                "{}: automaton {first}, prefix scan {by_prefix:?}, factor scan {by_factor:?}",
                render_compact(&t)
            )
        })?;
    }
    Ok(format!("{rejected} rejected strings, all positions match"))
}

fn closure_violation(t: &Trail, m: usize) -> Option<String> {
    let acc = accepts(t, m).unwrap();
    if acc != accepts(&t.reversed(), m).unwrap() {
        return Some(format!("reversal: {}", render_compact(t)));
    }
    if acc {
        for s in 0..t.len() {
            for e in s + 1..=t.len() {
                if !accepts(&Trail::from(&t[s..e]), m).unwrap() {
                    return Some(format!("factor {s}..{e} of {}", render_compact(t)));
                }
            }
        }
    }
    None
}

/// Factorial and reversal closure of the accepted language.
fn closure_properties() -> Outcome {
    let exhaustive = all_strings(2, 12);
    for t in &exhaustive {
        if let Some(v) = closure_violation(t, 2) {
            return Err(v);
        }
    }
    let mut rng = StdRng::seed_from_u64(0x000e_11e5);
    let mut accepted = 0usize;
    for _ in 0..10_000 {
        let len = rng.gen_range(0..=40);
        let t: Trail = (0..len).map(|_| rng.gen_range(0..5)).collect();
        if let Some(v) = closure_violation(&t, 5) {
            return Err(v);
        }
        accepted += usize::from(accepts(&t, 5).unwrap());
    }
    Ok(format!(
        "{} exhaustive (m=2) + 10000 random (m=5, {accepted} accepted), 0 violations",
        exhaustive.len()
    ))
}

/// The worked example ababab.
fn ababab() -> Outcome {
    let t = Trail::new(vec![0, 1, 0, 1, 0, 1]);
    let v = run(&t, 2).map_err(|e| e.to_string())?;
    ensure(v.accepted, || "ababab rejected".into())?;
    // x = ba, u = v = y = z = empty
    let site = TranspositionSite::TwoAnchors {
        i: 0,
        p: 3,
        j: 4,
        q: 5,
    };
    let seg = site.segments(&t).map_err(|e| e.to_string())?;
    ensure(
        seg.x == [1, 0] && seg.y.is_empty() && seg.u.is_empty() && seg.v.is_empty(),
        || "site does not decompose as x = ba".into(),
    )?;
    ensure(is_proper(&t, site) == Ok(false), || {
        "x = ba decomposition reported proper".into()
    })?;
    let g = Multigraph::induced(&t, 2).map_err(|e| e.to_string())?;
    let all = enumerate_trails(&g, 0, None).map_err(|e| e.to_string())?;
    ensure(all == [t.clone()], || {
        format!("{} trails enumerated", all.len())
    })?;
    Ok("accepted; x = ba improper; exactly one trail".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("binary minimal forbidden words", binary_mfw),
        ("four-way agreement", four_way_agreement),
        ("strict grammar audit", strict_grammar_audit),
        ("properization of transpositions", properize_everywhere),
        ("streaming immediacy", streaming_immediacy),
        ("closure properties", closure_properties),
        ("ababab worked example", ababab),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
