//! Deciding whether a vertex sequence is the only Eulerian trail of the
//! directed multigraph it induces.
//!
//! A sequence `t = t_0 t_1 ... t_{n-1}` induces the multigraph whose arcs are
//! its consecutive pairs; `t` is trivially an Eulerian trail of that graph
//! starting at `t_0`. The sequences for which no other such trail exists form
//! a factorial regular language. This crate provides:
//!
//! * [`automaton`]: a streaming deterministic automaton accepting that
//!   language, which rejects at the first prefix that already admits a second
//!   trail;
//! * [`transposition`]: the segment-swapping moves relating two trails of the
//!   same graph, properness, witnesses and the direct membership scan for the
//!   complement;
//! * [`oracle`]: backtracking enumeration of Eulerian trails, used as ground
//!   truth;
//! * [`grammar`]: a right-linear grammar for the complement compiled to an NFA;
//! * [`mfw`]: the minimal forbidden words of the language.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod automaton;
mod error;
pub mod grammar;
pub mod mfw;
pub mod oracle;
pub mod trail;
pub mod transposition;

pub use automaton::{run, AutomatonState, Checker, Color, Verdict};
pub use error::Error;
pub use grammar::{build_grammar_nfa, GrammarMode, GrammarNfa, Nonterminal};
pub use oracle::{enumerate_trails, is_unique_trail};
pub use trail::{induced_graph, reverse_trail, Alphabet, Multigraph, Symbol, Trail};
pub use transposition::{
    apply_transposition, find_proper_site, in_lprime, is_proper, properize, Properization,
    ShiftCase, TranspositionSite,
};
