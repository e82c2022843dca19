//! Streaming automaton for the language of unique Eulerian trails.
//!
//! The state after reading a prefix records three things:
//!
//! * the last vertex read (or the start sentinel before any input);
//! * for every vertex, and for the sentinel, the vertex that most recently
//!   followed it;
//! * a color per vertex. A vertex turns black once it lies on a closed walk
//!   `a w a` whose second `a` was left along a different arc than the first.
//!   Returning to a black vertex means two segments can be swapped, so every
//!   vertex is blackened and the automaton is dead.
//!
//! The state is accepting while at least one vertex is white. The state space
//! is exponential in the alphabet size; the automaton is executed, never
//! tabulated.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Symbol, Trail};

/// Vertex color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    /// Not yet known to lie on a swappable circuit.
    White,
    /// Lies on a circuit whose two exits differ.
    Black,
}

/// Automaton state `(last vertex, latest followers, colors)`.
///
/// The start sentinel is encoded as vertex id `m`. It has a follower slot but
/// no color.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutomatonState {
    last: Symbol,
    followers: Vec<Option<Symbol>>,
    colors: Vec<Color>,
}

impl AutomatonState {
    /// Initial state for an alphabet of size `m`: at the sentinel, no
    /// followers recorded, everything white.
    pub fn new(m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(AutomatonState {
            last: m,
            followers: vec![None; m + 1],
            colors: vec![Color::White; m],
        })
    }

    /// Alphabet size `m`.
    pub fn alphabet_size(&self) -> usize {
        self.colors.len()
    }

    /// Id used for the start sentinel, equal to `m`.
    pub fn sentinel(&self) -> Symbol {
        self.colors.len()
    }

    /// The last vertex read, or `None` before any input.
    pub fn last(&self) -> Option<Symbol> {
        (self.last != self.sentinel()).then_some(self.last)
    }

    /// Latest follower of `vertex`; `vertex` may be the sentinel.
    pub fn follower(&self, vertex: Symbol) -> Option<Symbol> {
        self.followers.get(vertex).copied().flatten()
    }

    /// The follower table, indexed by vertex with the sentinel last.
    pub fn followers(&self) -> &[Option<Symbol>] {
        &self.followers
    }

    /// The color table.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Accepting iff some vertex is still white.
    pub fn is_accepting(&self) -> bool {
        self.colors.contains(&Color::White)
    }

    /// Reads one symbol, updating the state in place.
    pub fn step_in_place(&mut self, a: Symbol) -> Result<(), Error> {
        let m = self.alphabet_size();
        if a >= m {
            return Err(Error::SymbolOutOfRange { symbol: a, size: m });
        }
        let p = self.last;

        // Leaving p along a new arc: blacken the circuit of latest followers
        // through p. It closes within m hops because the latest exits of the
        // other visited vertices form a tree rooted at p.
        if let Some(next) = self.followers[p] {
            if next != a {
                let mut b = p;
                let mut hops = 0;
                loop {
                    self.colors[b] = Color::Black;
                    b = self.followers[b].expect("latest-follower chain is broken");
                    hops += 1;
                    assert!(hops <= m, "latest-follower chain does not return to {p}");
                    if b == p {
                        break;
                    }
                }
            }
        }

        if self.colors[a] == Color::Black {
            self.colors.fill(Color::Black);
        }

        self.followers[p] = Some(a);
        self.last = a;
        Ok(())
    }

    /// Pure form of [`step_in_place`](Self::step_in_place).
    pub fn step(&self, a: Symbol) -> Result<Self, Error> {
        let mut next = self.clone();
        next.step_in_place(a)?;
        Ok(next)
    }
}

/// Outcome of running the automaton over a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Verdict {
    /// Whether the whole sequence is a unique trail.
    pub accepted: bool,
    /// Length of the shortest rejected prefix.
    pub first_rejection: Option<usize>,
}

impl Verdict {
    fn accept() -> Self {
        Verdict {
            accepted: true,
            first_rejection: None,
        }
    }

    fn reject_at(len: usize) -> Self {
        Verdict {
            accepted: false,
            first_rejection: Some(len),
        }
    }
}

/// Incremental checker: feed symbols one at a time and learn about
/// rejection as soon as it happens.
#[derive(Debug, Clone)]
pub struct Checker {
    state: AutomatonState,
    consumed: usize,
    first_rejection: Option<usize>,
}

impl Checker {
    /// Checker for an alphabet of size `m`.
    pub fn new(m: usize) -> Result<Self, Error> {
        Ok(Checker {
            state: AutomatonState::new(m)?,
            consumed: 0,
            first_rejection: None,
        })
    }

    /// Reads `a` and returns whether the prefix read so far is accepted.
    ///
    /// Once rejected the checker stays rejected; further symbols are only
    /// range-checked and counted.
    pub fn push(&mut self, a: Symbol) -> Result<bool, Error> {
        if self.first_rejection.is_some() {
            let m = self.state.alphabet_size();
            if a >= m {
                return Err(Error::SymbolOutOfRange { symbol: a, size: m });
            }
            self.consumed += 1;
            return Ok(false);
        }
        self.state.step_in_place(a)?;
        self.consumed += 1;
        if !self.state.is_accepting() {
            self.first_rejection = Some(self.consumed);
        }
        Ok(self.first_rejection.is_none())
    }

    /// Number of symbols read.
    pub fn consumed(&self) -> usize {
        self.consumed
    }

    /// Current state. After a rejection this is the state right at the
    /// rejection point.
    pub fn state(&self) -> &AutomatonState {
        &self.state
    }

    /// Verdict for everything read so far.
    pub fn verdict(&self) -> Verdict {
        match self.first_rejection {
            Some(len) => Verdict::reject_at(len),
            None => Verdict::accept(),
        }
    }
}

/// Runs the automaton over `t` and stops at the first rejected prefix.
pub fn run(t: &Trail, m: usize) -> Result<Verdict, Error> {
    t.check_alphabet(m)?;
    let mut state = AutomatonState::new(m)?;
    for (i, &a) in t.iter().enumerate() {
        state.step_in_place(a)?;
        if !state.is_accepting() {
            return Ok(Verdict::reject_at(i + 1));
        }
    }
    Ok(Verdict::accept())
}

/// Whether the automaton accepts `t`.
pub fn accepts(t: &Trail, m: usize) -> Result<bool, Error> {
    run(t, m).map(|v| v.accepted)
}
