//! Symbols, trails and the multigraphs they induce.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Deref;

use crate::Error;

/// A vertex id. Vertices of an alphabet of size `m` are `0..m`.
pub type Symbol = usize;

/// The vertex set, optionally carrying a printable name per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    size: usize,
    names: Option<Vec<String>>,
    ids: BTreeMap<String, Symbol>,
}

impl Alphabet {
    /// Unnamed alphabet `0..size`.
    pub fn new(size: usize) -> Result<Self, Error> {
        if size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Alphabet {
            size,
            names: None,
            ids: BTreeMap::new(),
        })
    }

    /// Alphabet whose ids follow the order of `names`.
    pub fn with_names<I, S>(names: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Alphabet::growable();
        for name in names {
            let name = name.into();
            if alphabet.ids.contains_key(&name) {
                return Err(Error::DuplicateName(name));
            }
            alphabet.intern(&name);
        }
        if alphabet.size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(alphabet)
    }

    /// Named alphabet with no symbols yet, extended by [`Alphabet::intern`].
    ///
    /// This is the only way to hold a size-zero alphabet; it exists so that
    /// parsing the empty sequence has something to return.
    pub fn growable() -> Self {
        Alphabet {
            size: 0,
            names: Some(Vec::new()),
            ids: BTreeMap::new(),
        }
    }

    /// Id of `name`, assigning the next free id if it is new.
    ///
    /// Unnamed alphabets cannot grow; for them this only looks `name` up.
    pub fn intern(&mut self, name: &str) -> Option<Symbol> {
        if let Some(&id) = self.ids.get(name) {
            return Some(id);
        }
        let names = self.names.as_mut()?;
        let id = self.size;
        names.push(String::from(name));
        self.ids.insert(String::from(name), id);
        self.size += 1;
        Some(id)
    }

    /// Id of a known name.
    pub fn id(&self, name: &str) -> Option<Symbol> {
        self.ids.get(name).copied()
    }

    /// Name of `symbol`, if the alphabet is named.
    pub fn name(&self, symbol: Symbol) -> Option<&str> {
        self.names.as_ref()?.get(symbol).map(String::as_str)
    }

    /// Number of vertices `m`.
    pub fn len(&self) -> usize {
        self.size
    }

    /// True only for a freshly [`growable`](Alphabet::growable) alphabet.
    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Whether the alphabet carries names.
    pub fn is_named(&self) -> bool {
        self.names.is_some()
    }
}

/// A finite vertex sequence, read as an Eulerian trail of its own induced
/// multigraph.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trail(Vec<Symbol>);

impl Trail {
    /// The empty trail.
    pub const fn empty() -> Self {
        Trail(Vec::new())
    }

    /// Wraps a symbol sequence.
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Trail(symbols)
    }

    /// The symbols as a slice.
    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    /// Consumes the trail, returning its symbols.
    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    /// Checks that every symbol is below `size`.
    pub fn check_alphabet(&self, size: usize) -> Result<(), Error> {
        match self.0.iter().find(|&&s| s >= size) {
            Some(&symbol) => Err(Error::SymbolOutOfRange { symbol, size }),
            None => Ok(()),
        }
    }

    /// Smallest alphabet size that covers every symbol (0 for the empty trail).
    pub fn min_alphabet_size(&self) -> usize {
        self.0.iter().max().map_or(0, |&s| s + 1)
    }

    /// The same symbols in reverse order.
    pub fn reversed(&self) -> Trail {
        Trail(self.0.iter().rev().copied().collect())
    }
}

/// Reverses a trail. Its induced graph is the arc-reversal of the original's.
pub fn reverse_trail(t: &Trail) -> Trail {
    t.reversed()
}

impl Deref for Trail {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Trail {
    fn from(symbols: Vec<Symbol>) -> Self {
        Trail(symbols)
    }
}

impl From<&[Symbol]> for Trail {
    fn from(symbols: &[Symbol]) -> Self {
        Trail(symbols.to_vec())
    }
}

impl FromIterator<Symbol> for Trail {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Trail(iter.into_iter().collect())
    }
}

/// Directed multigraph given by arc multiplicities. Self-loops and parallel
/// arcs are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    arcs: BTreeMap<(Symbol, Symbol), usize>,
}

impl Multigraph {
    /// Graph on `vertex_count` vertices with no arcs.
    pub fn new(vertex_count: usize) -> Self {
        Multigraph {
            vertex_count,
            arcs: BTreeMap::new(),
        }
    }

    /// The multigraph whose arcs are the consecutive pairs of `t`.
    pub fn induced(t: &Trail, vertex_count: usize) -> Result<Self, Error> {
        if t.is_empty() {
            return Err(Error::EmptyTrail);
        }
        t.check_alphabet(vertex_count)?;
        let mut g = Multigraph::new(vertex_count);
        for pair in t.windows(2) {
            g.add_arc(pair[0], pair[1])?;
        }
        Ok(g)
    }

    /// Adds one copy of the arc `from -> to`.
    pub fn add_arc(&mut self, from: Symbol, to: Symbol) -> Result<(), Error> {
        for v in [from, to] {
            if v >= self.vertex_count {
                return Err(Error::SymbolOutOfRange {
                    symbol: v,
                    size: self.vertex_count,
                });
            }
        }
        *self.arcs.entry((from, to)).or_insert(0) += 1;
        Ok(())
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Multiplicity of `from -> to` (zero when absent).
    pub fn multiplicity(&self, from: Symbol, to: Symbol) -> usize {
        self.arcs.get(&(from, to)).copied().unwrap_or(0)
    }

    /// Total number of arcs, counted with multiplicity.
    pub fn arc_count(&self) -> usize {
        self.arcs.values().sum()
    }

    /// Distinct arcs with their multiplicities, ordered by `(from, to)`.
    pub fn arcs(&self) -> impl Iterator<Item = ((Symbol, Symbol), usize)> + '_ {
        self.arcs.iter().map(|(&k, &v)| (k, v))
    }

    /// The graph with every arc turned around.
    pub fn reversed(&self) -> Multigraph {
        Multigraph {
            vertex_count: self.vertex_count,
            arcs: self.arcs.iter().map(|(&(u, v), &c)| ((v, u), c)).collect(),
        }
    }

    /// Whether walking `t` consumes every arc exactly once.
    pub fn is_traversed_by(&self, t: &Trail) -> bool {
        if t.is_empty() {
            return self.arcs.is_empty();
        }
        let mut remaining = self.arcs.clone();
        for pair in t.windows(2) {
            match remaining.get_mut(&(pair[0], pair[1])) {
                Some(c) if *c > 0 => *c -= 1,
                _ => return false,
            }
        }
        remaining.values().all(|&c| c == 0)
    }
}

/// Shorthand for [`Multigraph::induced`].
pub fn induced_graph(t: &Trail, vertex_count: usize) -> Result<Multigraph, Error> {
    Multigraph::induced(t, vertex_count)
}
