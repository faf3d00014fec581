//! Brute-force reference implementations of every definition the builder
//! relies on. These are ground truth for tests and the `verify` command;
//! they favor directness over speed and run at desk scale only.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::index::IndexArrays;
use crate::text::{ReversedText, Symbol, Text};

/// Cap for the exhaustive minimality search.
pub const EXHAUSTIVE_CAP: usize = 14;

/// A one-character right-maximal extension: a representative 1-based span
/// `[start..=end]` of one occurrence, plus the 1-based end positions of
/// every occurrence.
#[derive(Debug, Clone)]
pub struct Extension {
    pub start: usize,
    pub end: usize,
    pub ends: Vec<usize>,
}

/// Catalog of the right-maximal substrings of a text and all their
/// one-character extensions, built by refining position classes length by
/// length (occurrences of equal substrings share a class).
#[derive(Debug)]
pub struct RightMaximalCatalog {
    /// For each 1-based end position `q`, the maximum length of a
    /// right-maximal substring ending exactly at `q`. The empty string is
    /// right-maximal, so entries are at least 0.
    rm_max_len: Vec<usize>,
    extensions: Vec<Extension>,
}

/// Visits every class of >= 2 equal substrings: `(len, followers)` where
/// `followers` maps the next symbol to the 0-based start positions that
/// continue with it.
fn visit_repeated_classes(
    s: &[Symbol],
    mut visit: impl FnMut(usize, &BTreeMap<Symbol, Vec<usize>>),
) {
    let n = s.len();
    let mut classes: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut len = 0usize;
    while !classes.is_empty() {
        let mut next = Vec::new();
        for class in &classes {
            let mut followers: BTreeMap<Symbol, Vec<usize>> = BTreeMap::new();
            for &j in class {
                if j + len < n {
                    followers.entry(s[j + len]).or_default().push(j);
                }
            }
            visit(len, &followers);
            for group in followers.values() {
                if group.len() >= 2 {
                    next.push(group.clone());
                }
            }
        }
        classes = next;
        len += 1;
    }
}

impl RightMaximalCatalog {
    pub fn build(text: &Text) -> Self {
        let s = text.symbols();
        let n = s.len();
        let mut rm_max_len = vec![0usize; n + 1];
        let mut extensions = Vec::new();
        visit_repeated_classes(s, |len, followers| {
            if followers.len() < 2 {
                return;
            }
            // The class substring (one per member, ending at j + len) is
            // right-maximal; each follower yields one extension.
            for group in followers.values() {
                for &j in group {
                    rm_max_len[j + len] = rm_max_len[j + len].max(len);
                }
                let ends: Vec<usize> = group.iter().map(|&j| j + len + 1).collect();
                let rep = group[0];
                extensions.push(Extension { start: rep + 1, end: rep + len + 1, ends });
            }
        });
        RightMaximalCatalog { rm_max_len, extensions }
    }

    /// Maximum length of a right-maximal substring that is a suffix of
    /// `T[1..q]` (i.e. ending exactly at `q`).
    pub fn max_right_maximal_len_ending_at(&self, q: usize) -> usize {
        self.rm_max_len[q]
    }

    pub fn extensions(&self) -> &[Extension] {
        &self.extensions
    }
}

/// Largest index `< x` with a strictly smaller LCP value; 1 if none.
pub fn naive_b(arrays: &IndexArrays, x: usize) -> usize {
    (1..x).rev().find(|&i| arrays.lcp(i) < arrays.lcp(x)).unwrap_or(1)
}

/// Smallest index `> x` with a strictly smaller LCP value; n+1 if none.
pub fn naive_e(arrays: &IndexArrays, x: usize) -> usize {
    let n = arrays.n();
    (x + 1..=n).find(|&i| arrays.lcp(i) < arrays.lcp(x)).unwrap_or(n + 1)
}

#[cfg(test)]
fn is_run_boundary(arrays: &IndexArrays, x: usize) -> bool {
    let n = arrays.n();
    (x > 1 && arrays.bwt(x) != arrays.bwt(x - 1))
        || (x < n && arrays.bwt(x) != arrays.bwt(x + 1))
}

/// Weight of index `x`, recomputed from scratch off the full arrays:
/// `LCP[x]` at a start-run boundary, `LCP[x+1]` at an end-run boundary,
/// the max of both when `x` is both, -1 off run boundaries.
///
/// Note this is the algorithmic weight, not "the maximum length of a
/// right-maximal substring that is a suffix of `T[1..n-SA[x]]`": the two
/// can differ (the SA interval of such a substring may reach past the
/// immediate LCP neighbors of `x`), and the construction, its worked
/// trace, and its proofs all use the LCP-based value. The substring-
/// enumeration value is an upper bound, checked in tests.
pub fn naive_w(arrays: &IndexArrays, x: usize) -> i64 {
    let n = arrays.n();
    let mut w = -1i64;
    if x > 1 && arrays.bwt(x) != arrays.bwt(x - 1) {
        w = w.max(arrays.lcp(x));
    }
    if x < n && arrays.bwt(x) != arrays.bwt(x + 1) {
        w = w.max(arrays.lcp(x + 1));
    }
    w
}

/// Weights for all indices `1..=n` (entry 0 unused).
pub fn naive_weights(arrays: &IndexArrays) -> Vec<i64> {
    let n = arrays.n();
    let mut w = vec![-1i64; n + 1];
    for x in 1..=n {
        w[x] = naive_w(arrays, x);
    }
    w
}

/// `Candt_c(a, a')`: smallest index in `[a, a')` holding symbol `c` and
/// achieving the maximum weight among weighted occurrences of `c` there.
pub fn naive_candt(
    arrays: &IndexArrays,
    weights: &[i64],
    c: Symbol,
    a: usize,
    a_prime: usize,
) -> Option<usize> {
    let mut best: Option<usize> = None;
    for p in a..a_prime {
        if arrays.bwt(p) == c && weights[p] >= 0 {
            match best {
                Some(b) if weights[b] >= weights[p] => {}
                _ => best = Some(p),
            }
        }
    }
    best
}

/// `FullL`: candidate positions over all start-run boundaries and both
/// boundary characters, ordered per character (alphabet rank, then
/// candidate index) to mirror the builder's output.
pub fn naive_full_l(arrays: &IndexArrays) -> Vec<usize> {
    let n = arrays.n();
    let weights = naive_weights(arrays);
    let mut entries: Vec<(Symbol, usize, usize)> = Vec::new(); // (char, index, pos)
    for x in 2..=n {
        if arrays.bwt(x) == arrays.bwt(x - 1) {
            continue;
        }
        let (b, e) = (naive_b(arrays, x), naive_e(arrays, x));
        for c in [arrays.bwt(x), arrays.bwt(x - 1)] {
            let p = naive_candt(arrays, &weights, c, b, e)
                .expect("a boundary character always has a weighted occurrence in [b, e)");
            entries.push((c, p, n - arrays.sa(p) + 1));
        }
    }
    entries.sort();
    entries.dedup_by_key(|&mut (_, _, pos)| pos);
    entries.into_iter().map(|(_, _, pos)| pos).collect()
}

/// Definition check: every one-character right-maximal extension must be a
/// suffix of `T[1..x]` for some candidate `x`.
pub fn verify_suffixient(catalog: &RightMaximalCatalog, n: usize, candidate: &[usize]) -> bool {
    let mut member = vec![false; n + 1];
    for &x in candidate {
        member[x] = true;
    }
    catalog
        .extensions()
        .iter()
        .all(|ext| ext.ends.iter().any(|&q| member[q]))
}

/// Minimum cardinality over all subsets of `{1..n}` that are suffixient.
/// Exponential; refuses texts longer than [`EXHAUSTIVE_CAP`].
pub fn exhaustive_min_size(text: &Text) -> Result<usize> {
    let n = text.len();
    if n > EXHAUSTIVE_CAP {
        return Err(Error::SizeLimit { n, cap: EXHAUSTIVE_CAP });
    }
    let catalog = RightMaximalCatalog::build(text);
    let masks: Vec<u64> = catalog
        .extensions()
        .iter()
        .map(|ext| ext.ends.iter().fold(0u64, |m, &q| m | 1 << (q - 1)))
        .collect();
    let mut best = n;
    for x in 0u64..1 << n {
        if (x.count_ones() as usize) < best && masks.iter().all(|&m| m & x != 0) {
            best = x.count_ones() as usize;
        }
    }
    Ok(best)
}

/// True iff the prefixes `T[1..p]` of the listed positions are in strictly
/// increasing colexicographic order (reversed prefixes compared
/// lexicographically).
pub fn colex_ordered(text: &Text, positions: &[usize]) -> bool {
    let s = text.symbols();
    positions.windows(2).all(|pair| {
        let (a, b) = (pair[0], pair[1]);
        let rev_a = s[..a].iter().rev();
        let rev_b = s[..b].iter().rev();
        rev_a.cmp(rev_b) == std::cmp::Ordering::Less
    })
}

/// Height of the suffix tree of the reversed text: the maximum number of
/// branching nodes on any root-to-leaf path. The root counts when it
/// branches (it always does, since sigma >= 2).
pub fn suffix_tree_height(rev: &ReversedText) -> usize {
    let n = rev.len();
    let mut branching = vec![0usize; n];
    visit_repeated_classes(rev.symbols(), |_, followers| {
        if followers.len() < 2 {
            return;
        }
        for group in followers.values() {
            for &j in group {
                branching[j] += 1;
            }
        }
    });
    branching.into_iter().max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{load_text, reverse_text, SentinelPolicy};

    fn fixtures(raw: &[u8]) -> (Text, IndexArrays, RightMaximalCatalog) {
        let t = load_text(raw, SentinelPolicy::Append).unwrap();
        let arrays = IndexArrays::build(&reverse_text(&t));
        let catalog = RightMaximalCatalog::build(&t);
        (t, arrays, catalog)
    }

    #[test]
    fn b_and_e_on_worked_lcp_row() {
        let (_, arrays, _) = fixtures(b"AGCACAGCA");
        assert_eq!(naive_b(&arrays, 5), 4);
        assert_eq!(naive_e(&arrays, 5), 6);
        assert_eq!(naive_b(&arrays, 1), 1);
        assert_eq!(naive_b(&arrays, 8), 7);
        assert_eq!(naive_e(&arrays, 8), 9);
    }

    #[test]
    fn weights_match_worked_row() {
        let (_, arrays, _) = fixtures(b"AGCACAGCA");
        let expect = [0, 0, 2, 4, 4, 0, -1, 0, 0, -1];
        for (x, &want) in (1..=10).zip(expect.iter()) {
            assert_eq!(naive_w(&arrays, x), want, "w({x})");
        }
    }

    #[test]
    fn candt_examples() {
        let (_, arrays, _) = fixtures(b"AGCACAGCA");
        let w = naive_weights(&arrays);
        // ranks: $->0, A->1, C->2, G->3
        assert_eq!(naive_candt(&arrays, &w, 0, 4, 6), Some(5));
        assert_eq!(naive_candt(&arrays, &w, 3, 9, 10), None);
        assert_eq!(naive_candt(&arrays, &w, 1, 1, 6), Some(1));
    }

    #[test]
    fn full_l_examples() {
        let (_, arrays, _) = fixtures(b"AGCACAGCA");
        assert_eq!(naive_full_l(&arrays), vec![10, 1, 5, 7]);

        let (_, arrays, _) = fixtures(b"a");
        assert_eq!(naive_full_l(&arrays), vec![2, 1]);

        let (_, arrays, _) = fixtures(b"aaaa");
        assert_eq!(naive_full_l(&arrays), vec![5, 4]);
    }

    #[test]
    fn verify_examples() {
        let (t, _, catalog) = fixtures(b"AGCACAGCA");
        assert!(verify_suffixient(&catalog, t.len(), &[10, 1, 5, 7]));
        assert!(!verify_suffixient(&catalog, t.len(), &[10]));
        let all: Vec<usize> = (1..=t.len()).collect();
        assert!(verify_suffixient(&catalog, t.len(), &all));
    }

    #[test]
    fn exhaustive_examples() {
        let t = load_text(b"AGCACAGCA", SentinelPolicy::Append).unwrap();
        assert_eq!(exhaustive_min_size(&t).unwrap(), 4);
        let t = load_text(b"a", SentinelPolicy::Append).unwrap();
        assert_eq!(exhaustive_min_size(&t).unwrap(), 2);
        let t = load_text(b"aaaa", SentinelPolicy::Append).unwrap();
        assert_eq!(exhaustive_min_size(&t).unwrap(), 2);
    }

    #[test]
    fn exhaustive_refuses_large_inputs() {
        let t = load_text(b"abcabcabcabcabc", SentinelPolicy::Append).unwrap();
        assert!(matches!(exhaustive_min_size(&t), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn suffix_tree_heights() {
        let t = load_text(b"aaaa", SentinelPolicy::Append).unwrap();
        assert_eq!(suffix_tree_height(&reverse_text(&t)), 4);
        let t = load_text(b"abcdefg", SentinelPolicy::Append).unwrap();
        assert_eq!(suffix_tree_height(&reverse_text(&t)), 1);
    }

    #[test]
    fn colex_order_of_worked_output() {
        let (t, _, _) = fixtures(b"AGCACAGCA");
        assert!(colex_ordered(&t, &[10, 1, 5, 7]));
        assert!(!colex_ordered(&t, &[1, 10, 5, 7]));
    }

    #[test]
    fn weight_is_bounded_by_longest_right_maximal_suffix() {
        for raw in [&b"AGCACAGCA"[..], b"abracadabra", b"mississippi", b"abababab"] {
            let (_, arrays, catalog) = fixtures(raw);
            for x in 1..=arrays.n() {
                if is_run_boundary(&arrays, x) {
                    let q = arrays.n() - arrays.sa(x);
                    let cap = catalog.max_right_maximal_len_ending_at(q) as i64;
                    assert!(naive_w(&arrays, x) <= cap, "w({x}) exceeds {cap}");
                }
            }
        }
    }

    #[test]
    fn observation_weight_vs_lcp_at_boundaries() {
        for raw in [&b"AGCACAGCA"[..], b"abracadabra", b"mississippi", b"abababab"] {
            let (_, arrays, _) = fixtures(raw);
            let w = naive_weights(&arrays);
            for x in 2..=arrays.n() {
                if arrays.bwt(x) == arrays.bwt(x - 1) {
                    continue;
                }
                let (b, e) = (naive_b(&arrays, x), naive_e(&arrays, x));
                for c in [arrays.bwt(x), arrays.bwt(x - 1)] {
                    let p = naive_candt(&arrays, &w, c, b, e).unwrap();
                    assert!(w[p] >= arrays.lcp(x), "w(Candt) >= LCP[x] at x={x}");
                }
            }
        }
    }
}
