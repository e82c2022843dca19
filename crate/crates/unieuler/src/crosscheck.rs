//! Exhaustive cross-validation of every classifier on all short strings.

use std::time::{Duration, Instant};

use unieuler_core::{
    build_grammar_nfa, in_lprime, is_unique_trail, run, Error, GrammarMode, Symbol, Trail,
};

/// All strings over `0..m` of length `1..=max_len`, shortest first, each
/// length in lexicographic order.
pub fn all_strings(m: usize, max_len: usize) -> Vec<Trail> {
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    for len in 1..=max_len {
        let mut word = vec![0 as Symbol; len];
        loop {
            out.push(Trail::new(word.clone()));
            // odometer increment
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                word[pos] += 1;
                if word[pos] < m {
                    break;
                }
                word[pos] = 0;
            }
            if word.iter().all(|&s| s == 0) {
                break;
            }
        }
    }
    out
}

/// Classifier outputs for one string, all phrased as "is a unique trail".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub word: Trail,
    pub automaton: bool,
    pub oracle: bool,
    pub lprime_scan: bool,
    pub grammar: bool,
}

#[derive(Debug, Clone)]
pub struct CrosscheckReport {
    pub alphabet_size: usize,
    pub max_len: usize,
    pub grammar: GrammarMode,
    pub strings: usize,
    pub unique: usize,
    /// Strings on which the classifiers do not all agree. For the strict
    /// grammar only a soundness violation (grammar says non-unique, oracle
    /// says unique) counts.
    pub disagreements: Vec<Disagreement>,
    /// Non-unique strings the strict grammar fails to generate. Always empty
    /// for the amended grammar, where such strings are disagreements.
    pub grammar_gaps: Vec<Trail>,
    pub timings: Vec<(&'static str, Duration)>,
}

impl CrosscheckReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Runs the automaton, the enumeration oracle, the direct complement scan
/// and the grammar NFA on every string over `m` symbols up to `max_len`.
pub fn crosscheck(
    m: usize,
    max_len: usize,
    grammar: GrammarMode,
) -> Result<CrosscheckReport, Error> {
    let nfa = build_grammar_nfa(m, grammar)?;
    let words = all_strings(m, max_len);

    let (automaton, t_auto) = timed(|| {
        words
            .iter()
            .map(|w| run(w, m).map(|v| v.accepted))
            .collect::<Result<Vec<_>, _>>()
    });
    let (oracle, t_oracle) = timed(|| {
        words
            .iter()
            .map(|w| is_unique_trail(w, m))
            .collect::<Result<Vec<_>, _>>()
    });
    let (scan, t_scan) = timed(|| words.iter().map(|w| !in_lprime(w)).collect::<Vec<_>>());
    let (gram, t_gram) = timed(|| {
        words
            .iter()
            .map(|w| nfa.accepts(w).map(|acc| !acc))
            .collect::<Result<Vec<_>, _>>()
    });
    let (automaton, oracle, gram) = (automaton?, oracle?, gram?);

    let mut disagreements = Vec::new();
    let mut grammar_gaps = Vec::new();
    for (k, word) in words.iter().enumerate() {
        let truth = oracle[k];
        let grammar_bad = match grammar {
            GrammarMode::Amended => gram[k] != truth,
            GrammarMode::Strict => {
                if gram[k] && !truth {
                    grammar_gaps.push(word.clone());
                }
                !gram[k] && truth
            }
        };
        if automaton[k] != truth || scan[k] != truth || grammar_bad {
            disagreements.push(Disagreement {
                word: word.clone(),
                automaton: automaton[k],
                oracle: truth,
                lprime_scan: scan[k],
                grammar: gram[k],
            });
        }
    }

    Ok(CrosscheckReport {
        alphabet_size: m,
        max_len,
        grammar,
        strings: words.len(),
        unique: oracle.iter().filter(|&&u| u).count(),
        disagreements,
        grammar_gaps,
        timings: vec![
            ("automaton", t_auto),
            ("oracle", t_oracle),
            ("lprime_scan", t_scan),
            ("grammar", t_gram),
        ],
    })
}
