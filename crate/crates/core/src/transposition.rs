//! Transpositions: swapping two segments of a trail between repeated anchor
//! vertices.
//!
//! With two anchors a trail `u a x b z a y b v` becomes `u a y b z a x b v`;
//! with a single anchor `u a x a y a v` becomes `u a y a x a v`. The two
//! anchors may be the same vertex, in which case `x` and `y` are closed walks
//! at `a` separated by `z`. Both keep the start vertex and the arc multiset. A
//! transposition is *proper* when the two `a`s in front of `x` and `y` are
//! followed by different vertices. A trail has a second Eulerian trail from
//! the same start exactly when it admits a proper transposition.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Symbol, Trail};

/// Index decomposition of a trail for a transposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TranspositionSite {
    /// `t = u a(i) x b(p) z a(j) y b(q) v`; `a == b` is allowed.
    TwoAnchors {
        /// First `a`.
        i: usize,
        /// First `b`.
        p: usize,
        /// Second `a`.
        j: usize,
        /// Second `b`.
        q: usize,
    },
    /// `t = u a(i) x a(j) y a(k) v`.
    OneAnchor {
        /// First `a`.
        i: usize,
        /// Second `a`.
        j: usize,
        /// Third `a`.
        k: usize,
    },
}

impl TranspositionSite {
    /// Checks the site against `t`.
    pub fn validate(&self, t: &[Symbol]) -> Result<(), Error> {
        let n = t.len();
        let ok = match *self {
            TranspositionSite::TwoAnchors { i, p, j, q } => {
                i < p && p < j && j < q && q < n && t[i] == t[j] && t[p] == t[q]
            }
            TranspositionSite::OneAnchor { i, j, k } => {
                i < j && j < k && k < n && t[i] == t[j] && t[j] == t[k]
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSite)
        }
    }

    /// Positions of the two `a`s whose followers start `x` and `y`.
    fn anchors(&self) -> (usize, usize) {
        match *self {
            TranspositionSite::TwoAnchors { i, j, .. } => (i, j),
            TranspositionSite::OneAnchor { i, j, .. } => (i, j),
        }
    }

    /// Splits `t` into its named segments.
    pub fn segments<'t>(&self, t: &'t [Symbol]) -> Result<Segments<'t>, Error> {
        self.validate(t)?;
        Ok(match *self {
            TranspositionSite::TwoAnchors { i, p, j, q } => Segments {
                u: &t[..i],
                a: t[i],
                x: &t[i + 1..p],
                b: Some(t[p]),
                z: Some(&t[p + 1..j]),
                y: &t[j + 1..q],
                v: &t[q + 1..],
            },
            TranspositionSite::OneAnchor { i, j, k } => Segments {
                u: &t[..i],
                a: t[i],
                x: &t[i + 1..j],
                b: None,
                z: None,
                y: &t[j + 1..k],
                v: &t[k + 1..],
            },
        })
    }
}

/// Named pieces of a trail under a site. `b` and `z` are absent for the
/// single-anchor form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segments<'t> {
    /// Prefix before the first anchor.
    pub u: &'t [Symbol],
    /// Anchor `a`.
    pub a: Symbol,
    /// Segment after the first `a`.
    pub x: &'t [Symbol],
    /// Second anchor.
    pub b: Option<Symbol>,
    /// Segment between the first `b` and the second `a`.
    pub z: Option<&'t [Symbol]>,
    /// Segment after the second `a`.
    pub y: &'t [Symbol],
    /// Suffix after the last anchor.
    pub v: &'t [Symbol],
}

/// Applies the transposition at `site`, swapping `x` and `y`.
pub fn apply_transposition(t: &Trail, site: TranspositionSite) -> Result<Trail, Error> {
    let s = site.segments(t)?;
    let mut out = Vec::with_capacity(t.len());
    out.extend_from_slice(s.u);
    out.push(s.a);
    out.extend_from_slice(s.y);
    match (s.b, s.z) {
        (Some(b), Some(z)) => {
            out.push(b);
            out.extend_from_slice(z);
            out.push(s.a);
            out.extend_from_slice(s.x);
            out.push(b);
        }
        _ => {
            out.push(s.a);
            out.extend_from_slice(s.x);
            out.push(s.a);
        }
    }
    out.extend_from_slice(s.v);
    Ok(Trail::new(out))
}

/// Whether the anchors in front of `x` and `y` have different followers.
pub fn is_proper(t: &Trail, site: TranspositionSite) -> Result<bool, Error> {
    site.validate(t)?;
    let (i, j) = site.anchors();
    Ok(t[i + 1] != t[j + 1])
}

/// Direct membership test for the complement language: is there
/// `t = u a w a y b v` with `b` occurring in `a w` and the two `a`s followed
/// by different vertices?
///
/// Quadratic in `t.len()`.
pub fn in_lprime(t: &[Symbol]) -> bool {
    let n = t.len();
    if n < 3 {
        return false;
    }
    let m = t.iter().max().map_or(0, |&s| s + 1);
    // suffix[s] = occurrences of s strictly after the current j
    let mut suffix = vec![0usize; m];
    for &s in t {
        suffix[s] += 1;
    }
    suffix[t[0]] -= 1;
    for j in 1..n - 1 {
        suffix[t[j]] -= 1;
        // scan i downwards; `hit` records whether t[i..j] meets the suffix
        let mut hit = false;
        for i in (0..j).rev() {
            hit |= suffix[t[i]] > 0;
            if hit && t[i] == t[j] && t[i + 1] != t[j + 1] {
                return true;
            }
        }
    }
    false
}

/// Lexicographically least proper site of `t`, two-anchor sites first.
/// Present exactly when [`in_lprime`] holds.
pub fn find_proper_site(t: &Trail) -> Option<TranspositionSite> {
    let n = t.len();
    if n < 3 {
        return None;
    }
    let m = t.min_alphabet_size();
    let mut last = vec![None; m];
    for (pos, &s) in t.iter().enumerate() {
        last[s] = Some(pos);
    }
    let next_after = |from: usize, s: Symbol| (from + 1..n).find(|&q| t[q] == s);

    // Two anchors: minimise i, then p, then j, then q.
    for i in 0..n - 1 {
        let a = t[i];
        // j > i with t[j] = a and a proper pair (i, j); ascending
        let proper_js: Vec<usize> = (i + 1..n - 1)
            .filter(|&j| t[j] == a && t[j + 1] != t[i + 1])
            .collect();
        if proper_js.is_empty() {
            continue;
        }
        for p in i + 1..n {
            let b = t[p];
            let k = proper_js.partition_point(|&j| j <= p);
            let Some(&j) = proper_js.get(k) else {
                break;
            };
            if last[b].is_some_and(|lb| lb > j) {
                let q = next_after(j, b).expect("b occurs after j");
                return Some(TranspositionSite::TwoAnchors { i, p, j, q });
            }
        }
    }

    // One anchor: minimise i, then j, then k.
    for i in 0..n - 1 {
        let a = t[i];
        let Some(la) = last[a] else { continue };
        let j = (i + 1..n - 1).find(|&j| t[j] == a && t[j + 1] != t[i + 1] && j < la);
        if let Some(j) = j {
            let k = next_after(j, a).expect("a occurs after j");
            return Some(TranspositionSite::OneAnchor { i, j, k });
        }
    }
    None
}

/// Every valid site of `t`, in the order used by [`find_proper_site`].
/// Quartic; meant for tests and fallbacks on short trails.
pub fn all_sites(t: &[Symbol]) -> Vec<TranspositionSite> {
    let n = t.len();
    let mut out = Vec::new();
    for i in 0..n {
        for p in i + 1..n {
            for j in p + 1..n {
                for q in j + 1..n {
                    let s = TranspositionSite::TwoAnchors { i, p, j, q };
                    if s.validate(t).is_ok() {
                        out.push(s);
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let s = TranspositionSite::OneAnchor { i, j, k };
                if s.validate(t).is_ok() {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Which shift rule moved the anchors one position to the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShiftCase {
    /// Two anchors, `x` and `y` both nonempty.
    TwoBothNonempty,
    /// Two anchors, `x` empty: becomes a single-anchor site on `b`.
    TwoEmptyX,
    /// Two anchors, `y` empty: becomes a single-anchor site on `b`.
    TwoEmptyY,
    /// One anchor, `x` and `y` both nonempty, starting with the same vertex
    /// `c`: becomes a two-anchor site with anchors `c` and `a`.
    OneBothNonempty,
    /// One anchor, `x` empty.
    OneEmptyX,
    /// One anchor, `y` empty.
    OneEmptyY,
}

/// Result of [`properize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Properization {
    /// A proper site with the same image as the input site.
    pub site: TranspositionSite,
    /// Shift rules applied, in order.
    pub shifts: Vec<ShiftCase>,
    /// Set when no shift rule applied (or its result failed validation) and
    /// the site was found by exhaustive search instead.
    pub fallback: bool,
}

/// Replaces a non-identity transposition by an equivalent proper one.
///
/// While the two anchors share their follower, the common follower is
/// absorbed into the prefix and the segments are re-split around the shifted
/// anchors. Each shift is checked to keep the image; if no rule applies, or a
/// rule's output fails that check, the proper site is found by exhaustive
/// search among sites with the same image.
pub fn properize(t: &Trail, site: TranspositionSite) -> Result<Properization, Error> {
    let image = apply_transposition(t, site)?;
    if image == *t {
        return Err(Error::IdentityTransposition);
    }
    let mut current = site;
    let mut shifts = Vec::new();
    loop {
        if is_proper(t, current)? {
            return Ok(Properization {
                site: current,
                shifts,
                fallback: false,
            });
        }
        let shifted = shift(current).filter(|&(s, _)| {
            s.validate(t).is_ok() && apply_transposition(t, s).as_ref() == Ok(&image)
        });
        match shifted {
            Some((s, case)) => {
                shifts.push(case);
                current = s;
            }
            None => break,
        }
    }

    let site = all_sites(t)
        .into_iter()
        .find(|&s| is_proper(t, s) == Ok(true) && apply_transposition(t, s).as_ref() == Ok(&image))
        .expect("every non-identity transposition has a proper equivalent");
    Ok(Properization {
        site,
        shifts,
        fallback: true,
    })
}

/// One anchor shift for an improper site (both anchors followed by the same
/// vertex).
fn shift(site: TranspositionSite) -> Option<(TranspositionSite, ShiftCase)> {
    use TranspositionSite::*;
    match site {
        TwoAnchors { i, p, j, q } => {
            let x_empty = p == i + 1;
            let y_empty = q == j + 1;
            match (x_empty, y_empty) {
                // u a (c x') b z a (c y') b v  ->  u' c x' b (z a) c y' b v
                (false, false) => Some((
                    TwoAnchors {
                        i: i + 1,
                        p,
                        j: j + 1,
                        q,
                    },
                    ShiftCase::TwoBothNonempty,
                )),
                // u a b z a (b y') b v  ->  u' b (z a) b y' b v
                (true, false) => Some((
                    OneAnchor {
                        i: p,
                        j: j + 1,
                        k: q,
                    },
                    ShiftCase::TwoEmptyX,
                )),
                // u a (b x') b z a b v  ->  u' b x' b (z a) b v
                (false, true) => Some((
                    OneAnchor {
                        i: i + 1,
                        j: p,
                        k: q,
                    },
                    ShiftCase::TwoEmptyY,
                )),
                _ => None,
            }
        }
        OneAnchor { i, j, k } => {
            let x_empty = j == i + 1;
            let y_empty = k == j + 1;
            match (x_empty, y_empty) {
                // u a (c x') a (c y') a v  ->  u' c x' a c y' a v, anchors c, a
                (false, false) => Some((
                    TwoAnchors {
                        i: i + 1,
                        p: j,
                        j: j + 1,
                        q: k,
                    },
                    ShiftCase::OneBothNonempty,
                )),
                // u a a (a y') a v  ->  u' a a y' a v
                (true, false) => Some((OneAnchor { i: j, j: j + 1, k }, ShiftCase::OneEmptyX)),
                // u a (a x') a a v  ->  u' a x' a a v
                (false, true) => Some((OneAnchor { i: i + 1, j, k }, ShiftCase::OneEmptyY)),
                _ => None,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TranspositionSite::{OneAnchor, TwoAnchors};

    fn t(s: &[Symbol]) -> Trail {
        Trail::from(s)
    }

    #[test]
    fn apply_examples() {
        assert_eq!(
            apply_transposition(&t(&[0, 1, 0, 2, 0]), OneAnchor { i: 0, j: 2, k: 4 }),
            Ok(t(&[0, 2, 0, 1, 0]))
        );
        assert_eq!(
            apply_transposition(
                &t(&[0, 1, 0, 1, 2, 0]),
                TwoAnchors {
                    i: 1,
                    p: 2,
                    j: 3,
                    q: 5
                }
            ),
            Ok(t(&[0, 1, 2, 0, 1, 0]))
        );
        assert_eq!(
            apply_transposition(&t(&[0, 1, 0, 1, 0]), OneAnchor { i: 0, j: 2, k: 4 }),
            Ok(t(&[0, 1, 0, 1, 0]))
        );
    }

    #[test]
    fn invalid_sites_rejected() {
        let tr = t(&[0, 1, 0, 2, 0]);
        for s in [
            OneAnchor { i: 0, j: 1, k: 4 },
            OneAnchor { i: 0, j: 2, k: 5 },
            TwoAnchors {
                i: 0,
                p: 1,
                j: 2,
                q: 3,
            },
            TwoAnchors {
                i: 0,
                p: 0,
                j: 2,
                q: 4,
            },
        ] {
            assert_eq!(apply_transposition(&tr, s), Err(Error::InvalidSite));
            assert_eq!(is_proper(&tr, s), Err(Error::InvalidSite));
        }
    }

    #[test]
    fn properness_examples() {
        assert_eq!(
            is_proper(&t(&[0, 1, 0, 2, 0]), OneAnchor { i: 0, j: 2, k: 4 }),
            Ok(true)
        );
        // ababab with x = ba and u, v, y, z empty
        let ababab = t(&[0, 1, 0, 1, 0, 1]);
        let site = TwoAnchors {
            i: 0,
            p: 3,
            j: 4,
            q: 5,
        };
        let seg = site.segments(&ababab).unwrap();
        assert_eq!(
            (seg.x, seg.y, seg.z, seg.u, seg.v),
            (&[1, 0][..], &[][..], Some(&[][..]), &[][..], &[][..])
        );
        assert_eq!(is_proper(&ababab, site), Ok(false));
        assert_eq!(apply_transposition(&ababab, site), Ok(ababab.clone()));
        assert_eq!(
            is_proper(&t(&[0, 1, 0, 1, 2, 0]), OneAnchor { i: 0, j: 2, k: 5 }),
            Ok(false)
        );
    }

    #[test]
    fn lprime_examples() {
        assert!(in_lprime(&[0, 0, 1, 0]));
        assert!(!in_lprime(&[0, 0, 1, 1]));
        assert!(!in_lprime(&[]));
        assert!(!in_lprime(&[0, 1, 0, 1, 0, 1]));
        assert!(in_lprime(&[0, 1, 0, 2, 0]));
    }

    #[test]
    fn find_site_examples() {
        assert_eq!(
            find_proper_site(&t(&[0, 0, 1, 0])),
            Some(OneAnchor { i: 0, j: 1, k: 3 })
        );
        assert_eq!(
            apply_transposition(&t(&[0, 0, 1, 0]), OneAnchor { i: 0, j: 1, k: 3 }),
            Ok(t(&[0, 1, 0, 0]))
        );
        assert_eq!(find_proper_site(&t(&[0, 1, 0, 1, 0, 1])), None);
        assert_eq!(
            find_proper_site(&t(&[0, 1, 0, 2, 0])),
            Some(OneAnchor { i: 0, j: 2, k: 4 })
        );
    }

    #[test]
    fn properize_examples() {
        let tr = t(&[0, 1, 0, 1, 2, 0]);
        let got = properize(&tr, OneAnchor { i: 0, j: 2, k: 5 }).unwrap();
        assert_eq!(
            got.site,
            TwoAnchors {
                i: 1,
                p: 2,
                j: 3,
                q: 5
            }
        );
        assert_eq!(got.shifts, [ShiftCase::OneBothNonempty]);
        assert!(!got.fallback);

        let proper = OneAnchor { i: 0, j: 2, k: 4 };
        let got = properize(&t(&[0, 1, 0, 2, 0]), proper).unwrap();
        assert_eq!(got.site, proper);
        assert!(got.shifts.is_empty());

        assert_eq!(
            properize(&t(&[0, 1, 0, 1, 0]), OneAnchor { i: 0, j: 2, k: 4 }),
            Err(Error::IdentityTransposition)
        );
    }

    #[test]
    fn same_anchor_two_anchor_site() {
        // 0 (0 2) 0 (0 1) 0: both anchors followed by 0. The only proper
        // equivalent keeps the outer 0s and swaps the closed walks 2 and 1.
        let tr = t(&[0, 0, 2, 0, 0, 1, 0]);
        let improper = OneAnchor { i: 0, j: 3, k: 6 };
        assert_eq!(is_proper(&tr, improper), Ok(false));
        let got = properize(&tr, improper).unwrap();
        assert_eq!(
            got.site,
            TwoAnchors {
                i: 1,
                p: 3,
                j: 4,
                q: 6
            }
        );
        assert!(!got.fallback);
        assert_eq!(
            apply_transposition(&tr, got.site),
            Ok(t(&[0, 0, 1, 0, 0, 2, 0]))
        );
        let seg = got.site.segments(&tr).unwrap();
        assert_eq!(
            (seg.a, seg.b, seg.x, seg.z, seg.y),
            (0, Some(0), &[2][..], Some(&[][..]), &[1][..])
        );
    }

    /// Brute-force first site in [`all_sites`] order that is proper.
    fn least_proper_site_brute(tr: &Trail) -> Option<TranspositionSite> {
        all_sites(tr)
            .into_iter()
            .find(|&s| is_proper(tr, s) == Ok(true))
    }

    #[test]
    fn find_site_matches_brute_force() {
        let mut stack = vec![Vec::new()];
        while let Some(s) = stack.pop() {
            let tr = Trail::new(s.clone());
            let site = find_proper_site(&tr);
            assert_eq!(site, least_proper_site_brute(&tr), "{s:?}");
            assert_eq!(site.is_some(), in_lprime(&s), "{s:?}");
            if let Some(site) = site {
                let alt = apply_transposition(&tr, site).unwrap();
                assert_ne!(alt, tr);
                assert_eq!(alt[0], tr[0]);
                let g = crate::trail::induced_graph(&tr, 3).unwrap();
                assert!(g.is_traversed_by(&alt));
            }
            if s.len() < 8 {
                for a in 0..3 {
                    let mut s2 = s.clone();
                    s2.push(a);
                    stack.push(s2);
                }
            }
        }
    }
}
