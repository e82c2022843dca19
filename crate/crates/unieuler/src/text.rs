//! Plain-text trail encodings.
//!
//! In chars mode every non-whitespace character is one symbol; in tokens
//! mode symbols are separated by whitespace. Ids are handed out in order of
//! first appearance unless a fixed alphabet is supplied.

use thiserror::Error;
use unieuler_core::{Alphabet, Symbol, Trail};

/// How a line of text is split into symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    /// One character per symbol.
    #[default]
    Chars,
    /// Whitespace-separated tokens.
    Tokens,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown symbol {0:?}")]
    UnknownToken(String),
}

/// Parses `text` into a trail.
///
/// With `alphabet = None` a fresh alphabet is inferred; with a fixed alphabet
/// every token must already be known. Returns the alphabet actually used.
pub fn parse_trail(
    text: &str,
    mode: ParseMode,
    alphabet: Option<&Alphabet>,
) -> Result<(Trail, Alphabet), ParseError> {
    let mut inferred;
    let alphabet = match alphabet {
        Some(a) => a,
        None => {
            inferred = Alphabet::growable();
            for token in tokens(text, mode) {
                inferred.intern(token);
            }
            &inferred
        }
    };
    let symbols = tokens(text, mode)
        .map(|tok| {
            alphabet
                .id(tok)
                .ok_or_else(|| ParseError::UnknownToken(tok.to_string()))
        })
        .collect::<Result<Vec<Symbol>, _>>()?;
    Ok((Trail::new(symbols), alphabet.clone()))
}

fn tokens(text: &str, mode: ParseMode) -> Box<dyn Iterator<Item = &str> + '_> {
    match mode {
        ParseMode::Tokens => Box::new(text.split_whitespace()),
        ParseMode::Chars => Box::new(
            text.char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .map(move |(i, c)| &text[i..i + c.len_utf8()]),
        ),
    }
}

/// Alphabet `0..size` named by decimal ids, used when the alphabet size is
/// fixed on the command line.
pub fn numeric_alphabet(size: usize) -> Option<Alphabet> {
    Alphabet::with_names((0..size).map(|i| i.to_string())).ok()
}

/// Renders symbols with the alphabet's names (ids when unnamed).
pub fn render(symbols: &[Symbol], alphabet: &Alphabet, mode: ParseMode) -> String {
    let names = symbols.iter().map(|&s| match alphabet.name(s) {
        Some(n) => n.to_string(),
        None => s.to_string(),
    });
    match mode {
        ParseMode::Chars => names.collect(),
        ParseMode::Tokens => names.collect::<Vec<_>>().join(" "),
    }
}

/// Largest alphabet [`render_compact`] can print.
pub const COMPACT_MAX: usize = 36;

/// One character per symbol: `0-9` then `a-z`.
pub fn render_compact(symbols: &[Symbol]) -> String {
    symbols
        .iter()
        .map(|&s| char::from_digit(s as u32, COMPACT_MAX as u32).expect("symbol below 36"))
        .collect()
}

/// Inverse of [`render_compact`].
pub fn parse_compact(text: &str) -> Option<Vec<Symbol>> {
    text.chars()
        .map(|c| c.to_digit(COMPACT_MAX as u32).map(|d| d as Symbol))
        .collect()
}
