use core::fmt;

use crate::Symbol;

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An alphabet (or automaton) of size zero was requested.
    EmptyAlphabet,
    /// A symbol id is not below the alphabet size.
    SymbolOutOfRange {
        /// Offending symbol.
        symbol: Symbol,
        /// Alphabet size it was checked against.
        size: usize,
    },
    /// The operation needs at least one symbol.
    EmptyTrail,
    /// Two token names map to the same id.
    DuplicateName(alloc::string::String),
    /// The transposition site does not decompose the trail.
    InvalidSite,
    /// The transposition leaves the trail unchanged.
    IdentityTransposition,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyAlphabet => f.write_str("alphabet size must be at least 1"),
            Error::SymbolOutOfRange { symbol, size } => {
                write!(
                    f,
                    "symbol {symbol} out of range for alphabet of size {size}"
                )
            }
            Error::EmptyTrail => f.write_str("trail is empty"),
            Error::DuplicateName(name) => write!(f, "duplicate symbol name {name:?}"),
            Error::InvalidSite => f.write_str("transposition site does not match the trail"),
            Error::IdentityTransposition => f.write_str("transposition does not change the trail"),
        }
    }
}

impl core::error::Error for Error {}
