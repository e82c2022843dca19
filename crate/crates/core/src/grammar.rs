//! NFA compiled from a right-linear grammar for the complement language
//! (trails with a second Eulerian trail).
//!
//! Nonterminals and their productions, with `a, b, c, d` ranging over the
//! alphabet:
//!
//! ```text
//! S      -> d S | a A_a
//! A_a    -> c B_acc | a C_aa
//! B_acb  -> d B_acb | d B_acd | a C_cb
//! C_cb   -> d D_b  (d != c) | b R  (b != c)
//! D_b    -> d D_b | b R
//! R      -> d R | ε
//! ```
//!
//! Reading `u a w a y b v`: `S` skips `u`, `A_a` remembers the anchor,
//! `B_acb` remembers the first follower `c` and a guess `b` taken from `w`,
//! `C_cb` checks the second follower differs from `c`, and `D_b` waits for
//! `b`. As written, the candidate `b` can never be the anchor itself when
//! `w` is nonempty, so words like `0 1 0 2 0` are missed.
//! [`GrammarMode::Amended`] adds `A_a -> c B_aca` to seed the candidate with
//! `a`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Symbol};

/// Which production set to compile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum GrammarMode {
    /// The productions exactly as listed.
    #[default]
    Strict,
    /// Adds `A_a -> c B_aca`.
    Amended,
}

/// A grammar nonterminal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Nonterminal {
    /// Start symbol.
    S,
    /// Anchor `a` read.
    A(Symbol),
    /// Anchor, first follower, candidate `b`.
    B(Symbol, Symbol, Symbol),
    /// First follower, candidate `b`; second anchor read.
    C(Symbol, Symbol),
    /// Waiting for `b`.
    D(Symbol),
    /// Accepting sink.
    R,
}

impl fmt::Display for Nonterminal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Nonterminal::S => f.write_str("S"),
            Nonterminal::A(a) => write!(f, "A_{a}"),
            Nonterminal::B(a, c, b) => write!(f, "B_{a}_{c}_{b}"),
            Nonterminal::C(c, b) => write!(f, "C_{c}_{b}"),
            Nonterminal::D(b) => write!(f, "D_{b}"),
            Nonterminal::R => f.write_str("R"),
        }
    }
}

/// Nondeterministic automaton with one state per nonterminal; `R` is the
/// only accepting state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrammarNfa {
    m: usize,
    mode: GrammarMode,
    // delta[state * m + symbol] = sorted, deduplicated targets
    delta: Vec<Vec<usize>>,
}

impl GrammarNfa {
    /// Compiles the grammar over an alphabet of size `m`.
    pub fn build(m: usize, mode: GrammarMode) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::EmptyAlphabet);
        }
        let mut nfa = GrammarNfa {
            m,
            mode,
            delta: vec![Vec::new(); state_count(m) * m],
        };
        use Nonterminal::*;
        for d in 0..m {
            nfa.add(S, d, S);
            nfa.add(S, d, A(d));
            nfa.add(R, d, R);
        }
        for a in 0..m {
            for c in 0..m {
                nfa.add(A(a), c, B(a, c, c));
                if mode == GrammarMode::Amended {
                    nfa.add(A(a), c, B(a, c, a));
                }
            }
            nfa.add(A(a), a, C(a, a));
            for c in 0..m {
                for b in 0..m {
                    for d in 0..m {
                        nfa.add(B(a, c, b), d, B(a, c, b));
                        nfa.add(B(a, c, b), d, B(a, c, d));
                    }
                    nfa.add(B(a, c, b), a, C(c, b));
                }
            }
        }
        for c in 0..m {
            for b in 0..m {
                for d in (0..m).filter(|&d| d != c) {
                    nfa.add(C(c, b), d, D(b));
                }
                if b != c {
                    nfa.add(C(c, b), b, R);
                }
            }
        }
        for b in 0..m {
            for d in 0..m {
                nfa.add(D(b), d, D(b));
            }
            nfa.add(D(b), b, R);
        }
        for targets in &mut nfa.delta {
            targets.sort_unstable();
            targets.dedup();
        }
        Ok(nfa)
    }

    fn add(&mut self, from: Nonterminal, symbol: Symbol, to: Nonterminal) {
        let from = self.index(from);
        let to = self.index(to);
        self.delta[from * self.m + symbol].push(to);
    }

    /// Alphabet size.
    pub fn alphabet_size(&self) -> usize {
        self.m
    }

    /// Production set this automaton was built from.
    pub fn mode(&self) -> GrammarMode {
        self.mode
    }

    /// Number of states, `2 + 2m + m² + m³`.
    pub fn state_count(&self) -> usize {
        state_count(self.m)
    }

    /// Dense index of a nonterminal.
    pub fn index(&self, nt: Nonterminal) -> usize {
        let m = self.m;
        match nt {
            Nonterminal::S => 0,
            Nonterminal::R => 1,
            Nonterminal::A(a) => 2 + a,
            Nonterminal::D(b) => 2 + m + b,
            Nonterminal::C(c, b) => 2 + 2 * m + c * m + b,
            Nonterminal::B(a, c, b) => 2 + 2 * m + m * m + (a * m + c) * m + b,
        }
    }

    /// Nonterminal at a dense index.
    pub fn nonterminal(&self, index: usize) -> Nonterminal {
        let m = self.m;
        match index {
            0 => Nonterminal::S,
            1 => Nonterminal::R,
            i if i < 2 + m => Nonterminal::A(i - 2),
            i if i < 2 + 2 * m => Nonterminal::D(i - 2 - m),
            i if i < 2 + 2 * m + m * m => {
                let r = i - 2 - 2 * m;
                Nonterminal::C(r / m, r % m)
            }
            i => {
                let r = i - 2 - 2 * m - m * m;
                Nonterminal::B(r / (m * m), (r / m) % m, r % m)
            }
        }
    }

    /// Targets of `state` on `symbol`.
    pub fn targets(&self, state: usize, symbol: Symbol) -> &[usize] {
        &self.delta[state * self.m + symbol]
    }

    /// Number of transitions.
    pub fn transition_count(&self) -> usize {
        self.delta.iter().map(Vec::len).sum()
    }

    /// Subset simulation from `{S}`; accepts when `R` is reachable.
    pub fn accepts(&self, t: &[Symbol]) -> Result<bool, Error> {
        let n = self.state_count();
        let mut current = vec![false; n];
        let mut next = vec![false; n];
        current[0] = true;
        for &a in t {
            if a >= self.m {
                return Err(Error::SymbolOutOfRange {
                    symbol: a,
                    size: self.m,
                });
            }
            next.fill(false);
            for (state, _) in current.iter().enumerate().filter(|(_, &on)| on) {
                for &to in self.targets(state, a) {
                    next[to] = true;
                }
            }
            core::mem::swap(&mut current, &mut next);
            // R is a sink on every symbol
            if current[1] {
                return Ok(true);
            }
        }
        Ok(current[1])
    }

    /// One `from symbol to` line per transition, states named like `B_0_1_1`.
    pub fn transition_lines(&self) -> impl Iterator<Item = String> + '_ {
        (0..self.state_count()).flat_map(move |s| {
            (0..self.m).flat_map(move |a| {
                self.targets(s, a).iter().map(move |&to| {
                    format!("{} {} {}", self.nonterminal(s), a, self.nonterminal(to))
                })
            })
        })
    }
}

fn state_count(m: usize) -> usize {
    2 + 2 * m + m * m + m * m * m
}

/// Shorthand for [`GrammarNfa::build`].
pub fn build_grammar_nfa(m: usize, mode: GrammarMode) -> Result<GrammarNfa, Error> {
    GrammarNfa::build(m, mode)
}
