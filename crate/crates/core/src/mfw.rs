//! Minimal forbidden words of the unique-trail language.
//!
//! The language is factorial, so it is determined by the words that are
//! outside it while all their proper factors are inside. Those words have
//! one of two shapes:
//!
//! * `a x b z a y b` with `a != b`;
//! * `a x a y a`;
//!
//! where `x` or `y` is nonempty, each of `x, y, z` is itself a unique trail,
//! and `x, y, z` avoid `a, b` and share no vertex pairwise.
//!
//! [`constructive_mfw`] builds the set from the two shapes and [`brute_mfw`]
//! scans every word against the automaton; the two must agree.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::automaton::{accepts, AutomatonState};
use crate::{Error, Symbol, Trail};

/// One of the two minimal-forbidden-word shapes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MfwForm {
    /// `a x b z a y b`, `a != b`.
    TwoAnchors {
        /// First anchor.
        a: Symbol,
        /// Second anchor.
        b: Symbol,
        /// Segment after the first `a`.
        x: Vec<Symbol>,
        /// Segment after the second `a`.
        y: Vec<Symbol>,
        /// Segment between the first `b` and the second `a`.
        z: Vec<Symbol>,
    },
    /// `a x a y a`.
    OneAnchor {
        /// Anchor.
        a: Symbol,
        /// First segment.
        x: Vec<Symbol>,
        /// Second segment.
        y: Vec<Symbol>,
    },
}

impl MfwForm {
    /// The word this form spells.
    pub fn render(&self) -> Trail {
        let mut r = Vec::new();
        match self {
            MfwForm::TwoAnchors { a, b, x, y, z } => {
                r.push(*a);
                r.extend_from_slice(x);
                r.push(*b);
                r.extend_from_slice(z);
                r.push(*a);
                r.extend_from_slice(y);
                r.push(*b);
            }
            MfwForm::OneAnchor { a, x, y } => {
                r.push(*a);
                r.extend_from_slice(x);
                r.push(*a);
                r.extend_from_slice(y);
                r.push(*a);
            }
        }
        Trail::new(r)
    }

    /// Whether the form satisfies all three side conditions over an alphabet
    /// of size `m`.
    pub fn is_valid(&self, m: usize) -> Result<bool, Error> {
        let (anchors, segments): (Vec<Symbol>, Vec<&[Symbol]>) = match self {
            MfwForm::TwoAnchors { a, b, x, y, z } => {
                if a == b {
                    return Ok(false);
                }
                (vec![*a, *b], vec![x, y, z])
            }
            MfwForm::OneAnchor { a, x, y } => (vec![*a], vec![x, y]),
        };
        // x or y nonempty
        if segments[0].is_empty() && segments[1].is_empty() {
            return Ok(false);
        }
        for seg in &segments {
            if seg.iter().any(|s| anchors.contains(s)) {
                return Ok(false);
            }
            if !accepts(&Trail::from(*seg), m)? {
                return Ok(false);
            }
        }
        for (k, s) in segments.iter().enumerate() {
            for other in &segments[k + 1..] {
                if s.iter().any(|c| other.contains(c)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Words over `symbols` of length at most `max_len` accepted by the
/// automaton, grown from accepted prefixes only.
fn unique_words_over(symbols: &[Symbol], m: usize, max_len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::new(), AutomatonState::new(m).expect("m >= 1"))];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (word, state) in &frontier {
            for &s in symbols {
                let st = state.step(s).expect("symbol in range");
                if st.is_accepting() {
                    let mut w: Vec<Symbol> = word.clone();
                    w.push(s);
                    out.push(w.clone());
                    next.push((w, st));
                }
            }
        }
        frontier = next;
    }
    out
}

fn without(symbols: &[Symbol], used: &[Symbol]) -> Vec<Symbol> {
    symbols
        .iter()
        .copied()
        .filter(|s| !used.contains(s))
        .collect()
}

/// Every valid form spelling a word of length at most `max_len`.
pub fn constructive_forms(m: usize, max_len: usize) -> Result<Vec<MfwForm>, Error> {
    if m == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let all: Vec<Symbol> = (0..m).collect();
    let mut forms = Vec::new();

    for a in 0..m {
        // a x a y a: three anchors plus at least one segment symbol
        if max_len >= 4 {
            let budget = max_len - 3;
            let rest = without(&all, &[a]);
            for x in unique_words_over(&rest, m, budget) {
                let rest_y = without(&rest, &x);
                for y in unique_words_over(&rest_y, m, budget - x.len()) {
                    if x.is_empty() && y.is_empty() {
                        continue;
                    }
                    forms.push(MfwForm::OneAnchor { a, x: x.clone(), y });
                }
            }
        }

        // a x b z a y b
        if max_len >= 5 {
            let budget = max_len - 4;
            for b in (0..m).filter(|&b| b != a) {
                let rest = without(&all, &[a, b]);
                for x in unique_words_over(&rest, m, budget) {
                    let rest_y = without(&rest, &x);
                    for y in unique_words_over(&rest_y, m, budget - x.len()) {
                        if x.is_empty() && y.is_empty() {
                            continue;
                        }
                        let rest_z = without(&rest_y, &y);
                        for z in unique_words_over(&rest_z, m, budget - x.len() - y.len()) {
                            forms.push(MfwForm::TwoAnchors {
                                a,
                                b,
                                x: x.clone(),
                                y: y.clone(),
                                z,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(forms)
}

/// Minimal forbidden words of length at most `max_len`, built from the two
/// shapes. Sorted, deduplicated.
pub fn constructive_mfw(m: usize, max_len: usize) -> Result<Vec<Trail>, Error> {
    let words: BTreeSet<Trail> = constructive_forms(m, max_len)?
        .iter()
        .map(|f| {
            let r = f.render();
            // the two anchors in front of x and y have different followers
            debug_assert!(crate::transposition::find_proper_site(&r).is_some());
            r
        })
        .collect();
    Ok(words.into_iter().collect())
}

/// Minimal forbidden words of length at most `max_len`, by scanning: `r` is
/// rejected while `r` minus its first symbol and `r` minus its last symbol
/// are both accepted. Sorted.
pub fn brute_mfw(m: usize, max_len: usize) -> Result<Vec<Trail>, Error> {
    if m == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let mut found = Vec::new();
    // only accepted prefixes can be extended into a minimal forbidden word
    let mut frontier = vec![(Vec::<Symbol>::new(), AutomatonState::new(m)?)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (word, state) in &frontier {
            for s in 0..m {
                let st = state.step(s)?;
                let mut w = word.clone();
                w.push(s);
                if st.is_accepting() {
                    next.push((w, st));
                } else if accepts(&Trail::from(&w[1..]), m)? {
                    found.push(Trail::new(w));
                }
            }
        }
        frontier = next;
    }
    found.sort();
    Ok(found)
}

/// Whether `r` is rejected while every proper factor is accepted.
pub fn is_minimal_forbidden(r: &[Symbol], m: usize) -> Result<bool, Error> {
    if accepts(&Trail::from(r), m)? {
        return Ok(false);
    }
    for len in 0..r.len() {
        for start in 0..=r.len() - len {
            if !accepts(&Trail::from(&r[start..start + len]), m)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether a binary word lies in one of `0 0 1+ 0`, `0 1+ 0 0`, `1 1 0+ 1`,
/// `1 0+ 1 1`.
pub fn binary_mfw_regex_match(t: &[Symbol]) -> Result<bool, Error> {
    if let Some(&symbol) = t.iter().find(|&&s| s >= 2) {
        return Err(Error::SymbolOutOfRange { symbol, size: 2 });
    }
    let n = t.len();
    if n < 4 {
        return Ok(false);
    }
    let all = |range: core::ops::Range<usize>, s: Symbol| t[range].iter().all(|&c| c == s);
    let a = t[0];
    let b = 1 - a;
    // a a b+ a
    let doubled_head = t[1] == a && t[n - 1] == a && all(2..n - 1, b);
    // a b+ a a
    let doubled_tail = t[n - 2] == a && t[n - 1] == a && all(1..n - 2, b);
    Ok(doubled_head || doubled_tail)
}
