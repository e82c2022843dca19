//! Exhaustive Eulerian trail enumeration, the ground truth every other
//! classifier is checked against.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Multigraph, Symbol, Trail};

/// All Eulerian trails of `g` that start at `start`, in lexicographic order,
/// stopping after `limit` trails when a limit is given.
///
/// A graph without arcs has the single trail `[start]`.
pub fn enumerate_trails(
    g: &Multigraph,
    start: Symbol,
    limit: Option<usize>,
) -> Result<Vec<Trail>, Error> {
    let n = g.vertex_count();
    if start >= n {
        return Err(Error::SymbolOutOfRange {
            symbol: start,
            size: n,
        });
    }

    // successors[v] = [(w, remaining multiplicity)], sorted by w
    let mut successors: Vec<Vec<(Symbol, usize)>> = vec![Vec::new(); n];
    for ((u, v), count) in g.arcs() {
        successors[u].push((v, count));
    }
    let total = g.arc_count();

    let mut found = Vec::new();
    if limit == Some(0) {
        return Ok(found);
    }

    // Explicit DFS: path holds the walk, cursor[k] the index of the next
    // successor of path[k] to try.
    let mut path = Vec::with_capacity(total + 1);
    let mut cursor: Vec<usize> = Vec::with_capacity(total + 1);
    path.push(start);
    cursor.push(0);

    while let Some(&v) = path.last() {
        if path.len() == total + 1 {
            found.push(Trail::new(path.clone()));
            if limit.is_some_and(|l| found.len() >= l) {
                break;
            }
            backtrack(&mut path, &mut cursor, &mut successors);
            continue;
        }
        let depth = path.len() - 1;
        let next = successors[v]
            .iter()
            .enumerate()
            .skip(cursor[depth])
            .find(|(_, &(_, left))| left > 0)
            .map(|(k, &(w, _))| (k, w));
        match next {
            Some((k, w)) => {
                successors[v][k].1 -= 1;
                cursor[depth] = k + 1;
                path.push(w);
                cursor.push(0);
            }
            None => backtrack(&mut path, &mut cursor, &mut successors),
        }
    }
    Ok(found)
}

fn backtrack(
    path: &mut Vec<Symbol>,
    cursor: &mut Vec<usize>,
    successors: &mut [Vec<(Symbol, usize)>],
) {
    path.pop();
    cursor.pop();
    if let (Some(&u), Some(&k)) = (path.last(), cursor.last()) {
        // the arc taken from u was the (k - 1)-th successor
        successors[u][k - 1].1 += 1;
    }
}

/// Number of Eulerian trails of the graph induced by `t` starting at `t[0]`.
pub fn count_trails(t: &Trail, m: usize) -> Result<usize, Error> {
    let g = Multigraph::induced(t, m)?;
    Ok(enumerate_trails(&g, t[0], None)?.len())
}

/// Whether `t` is the only Eulerian trail of its induced multigraph from
/// `t[0]`. Stops as soon as a second trail turns up. The empty trail counts
/// as unique.
pub fn is_unique_trail(t: &Trail, m: usize) -> Result<bool, Error> {
    if t.is_empty() {
        return Ok(true);
    }
    let g = Multigraph::induced(t, m)?;
    let trails = enumerate_trails(&g, t[0], Some(2))?;
    debug_assert!(trails.contains(t) || trails.len() == 2);
    Ok(trails.len() == 1)
}
