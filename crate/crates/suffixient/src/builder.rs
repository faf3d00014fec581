//! The one-pass construction: candidate ejection, the C1-C3 candidate
//! test with `prevW`, and the final flush producing the suffixient array.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::kernel::{compute_w, MonotoneStack};
use crate::stream::{TripleSource, TripleStream};
use crate::text::Symbol;

/// A candidate entry: text position, BWT symbol, and weight of the index
/// that created it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowTriple {
    pub pos: usize,
    pub ch: Symbol,
    pub weight: i64,
}

#[derive(Debug, Clone, Copy)]
struct Node {
    pos: usize,
    weight: i64,
    prev: Option<Symbol>,
    next: Option<Symbol>,
}

/// Doubly-linked candidate list with at most one entry per symbol and
/// weights non-increasing front to back. The per-symbol slot array doubles
/// as the MAP of direct pointers.
pub(crate) struct RowList {
    nodes: Vec<Option<Node>>,
    head: Option<Symbol>,
    len: usize,
    max_len: usize,
}

impl RowList {
    fn new(sigma: usize) -> Self {
        RowList { nodes: vec![None; sigma], head: None, len: 0, max_len: 0 }
    }

    fn front(&self) -> Option<RowTriple> {
        self.head.map(|c| {
            let node = self.nodes[c as usize].expect("head points at a live node");
            RowTriple { pos: node.pos, ch: c, weight: node.weight }
        })
    }

    fn push_front(&mut self, pos: usize, ch: Symbol, weight: i64) {
        debug_assert!(self.nodes[ch as usize].is_none(), "one triple per symbol");
        if let Some(h) = self.head {
            self.nodes[h as usize].as_mut().unwrap().prev = Some(ch);
        }
        self.nodes[ch as usize] = Some(Node { pos, weight, prev: None, next: self.head });
        self.head = Some(ch);
        self.len += 1;
        self.max_len = self.max_len.max(self.len);
    }

    fn remove(&mut self, ch: Symbol) -> Option<RowTriple> {
        let node = self.nodes[ch as usize].take()?;
        match node.prev {
            Some(p) => self.nodes[p as usize].as_mut().unwrap().next = node.next,
            None => self.head = node.next,
        }
        if let Some(nx) = node.next {
            self.nodes[nx as usize].as_mut().unwrap().prev = node.prev;
        }
        self.len -= 1;
        Some(RowTriple { pos: node.pos, ch, weight: node.weight })
    }

    fn pop_front(&mut self) -> Option<RowTriple> {
        let c = self.head?;
        self.remove(c)
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = RowTriple> + '_ {
        std::iter::successors(self.head, move |&c| self.nodes[c as usize].unwrap().next).map(
            move |c| {
                let node = self.nodes[c as usize].unwrap();
                RowTriple { pos: node.pos, ch: c, weight: node.weight }
            },
        )
    }

    fn weights_non_increasing(&self) -> bool {
        let mut prev = i64::MAX;
        self.iter().all(|t| {
            let ok = t.weight <= prev;
            prev = t.weight;
            ok
        })
    }
}

/// Whether index `i` wins the constant-time candidate test, i.e.
/// `i = Candt_c(curr_b, i+1)` for `c = BWT[i]`.
///
/// Callers guard `w_i > -1` and pass `curr_b` already rebound to `b(i+1)`
/// when `w_i != LCP[i]`. `prev` is the `prevW[c]` pair before this
/// iteration's update.
pub fn candidate_test(w_i: i64, lcp_i: i64, curr_b: usize, prev: (usize, i64)) -> bool {
    debug_assert!(w_i > -1);
    w_i > lcp_i // C1
        || prev.0 < curr_b // C2 (w_i > -1 holds by the guard)
        || prev.1 < w_i // C3
}

/// The output: positions grouped per character and concatenated in
/// alphabet order, colexicographically sorted by the prefixes they index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixientArray {
    positions: Vec<usize>,
    groups: Vec<Vec<usize>>,
}

impl SuffixientArray {
    /// 1-based text positions in suffixient-array order.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// chi, the size of the array.
    pub fn chi(&self) -> usize {
        self.positions.len()
    }

    /// Per-symbol-rank result lists whose concatenation is `positions`.
    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }
}

/// Work counters of one build, a first-class output so the complexity
/// claims are testable.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RunStats {
    pub n: usize,
    pub sigma: usize,
    pub chi: usize,
    pub stack_pushes: usize,
    pub stack_max_depth: usize,
    pub rowlist_insertions: usize,
    pub rowlist_ejections: usize,
    pub rowlist_max_size: usize,
    pub wall_time_ms: u64,
}

pub struct BuildOutput {
    pub array: SuffixientArray,
    pub stats: RunStats,
}

/// Per-iteration view handed to the trace recorder.
pub(crate) struct IterationView<'a> {
    pub i: usize,
    pub sa: usize,
    pub bwt: Symbol,
    pub lcp: i64,
    pub w: i64,
    pub curr_b: usize,
    /// Candidate-test outcome; `None` when `w(i) = -1`.
    pub verdict: Option<bool>,
    pub rowlist: &'a RowList,
    pub results: &'a [Vec<usize>],
}

pub(crate) trait Observer {
    /// After Step 1 of iteration `i` (ejections applied, nothing inserted).
    fn after_step1(&mut self, _i: usize, _results: &[Vec<usize>]) {}
    /// At the end of iteration `i`.
    fn end_iteration(&mut self, _view: IterationView<'_>) {}
    /// After the final flush.
    fn finalize(&mut self, _results: &[Vec<usize>]) {}
}

pub(crate) struct NoopObserver;

impl Observer for NoopObserver {}

/// Runs the full one-pass construction over the stream.
pub fn build_suffixient<S: TripleSource>(stream: &mut TripleStream<S>) -> Result<BuildOutput> {
    build_with_observer(stream, &mut NoopObserver)
}

pub(crate) fn build_with_observer<S: TripleSource>(
    stream: &mut TripleStream<S>,
    observer: &mut dyn Observer,
) -> Result<BuildOutput> {
    let started = Instant::now();
    let n = stream.n();
    let sigma = stream.sigma();
    let mut rowlist = RowList::new(sigma);
    let mut results: Vec<Vec<usize>> = vec![Vec::new(); sigma];
    let mut prevw: Vec<(usize, i64)> = vec![(0, -1); sigma];
    let mut stack = MonotoneStack::new();
    let mut insertions = 0usize;
    let mut ejections = 0usize;

    // Step 0: the first index joins the candidates iff BWT[2] != BWT[1].
    let first = stream.current()?;
    let second = stream.peek_next();
    let first_bwt = first.bwt.expect("index 1 is a real triple");
    let w1 = compute_w(None, first_bwt, second.bwt, first.lcp, second.lcp);
    let inserted = second.bwt != first.bwt;
    if inserted {
        rowlist.push_front(n - first.sa + 1, first_bwt, w1);
        insertions += 1;
    }
    if w1 > -1 {
        prevw[first_bwt as usize] = (1, w1);
    }
    observer.end_iteration(IterationView {
        i: 1,
        sa: first.sa,
        bwt: first_bwt,
        lcp: first.lcp,
        w: w1,
        curr_b: 1,
        verdict: Some(inserted),
        rowlist: &rowlist,
        results: &results,
    });
    stream.advance()?;

    let mut prev_bwt = first_bwt;
    for i in 2..=n {
        let curr = stream.current()?;
        let next = stream.peek_next();
        let lcp_i = curr.lcp;
        let c = curr.bwt.expect("indices up to n are real triples");

        // Step 1: eject every front candidate whose weight exceeds LCP[i].
        while rowlist.front().is_some_and(|t| t.weight > lcp_i) {
            let t = rowlist.pop_front().unwrap();
            results[t.ch as usize].push(t.pos);
            ejections += 1;
        }
        observer.after_step1(i, &results);

        let w_i = compute_w(Some(prev_bwt), c, next.bwt, lcp_i, next.lcp);
        let mut curr_b = stack.compute_b(lcp_i, i).expect("stream indices are sequential");

        // Step 2: insert iff i = Candt_c(curr_b, i+1), with curr_b rebound
        // to b(i+1) when w(i) != LCP[i].
        let mut verdict = None;
        if w_i > -1 {
            if w_i != lcp_i {
                curr_b = stack
                    .compute_b(next.lcp, i + 1)
                    .expect("stream indices are sequential");
            }
            let pass = candidate_test(w_i, lcp_i, curr_b, prevw[c as usize]);
            verdict = Some(pass);
            if pass {
                // A displaced same-symbol candidate is superseded, never
                // ejected to the results.
                rowlist.remove(c);
                rowlist.push_front(n - curr.sa + 1, c, w_i);
                insertions += 1;
            }
            prevw[c as usize] = (i, w_i);
        }

        debug_assert!(rowlist.weights_non_increasing(), "weights must be non-increasing");
        observer.end_iteration(IterationView {
            i,
            sa: curr.sa,
            bwt: c,
            lcp: lcp_i,
            w: w_i,
            curr_b,
            verdict,
            rowlist: &rowlist,
            results: &results,
        });
        prev_bwt = c;
        stream.advance()?;
    }

    // Final flush: remaining candidates join their result lists front-first.
    while let Some(t) = rowlist.pop_front() {
        results[t.ch as usize].push(t.pos);
        ejections += 1;
    }
    observer.finalize(&results);

    let positions: Vec<usize> = results.iter().flatten().copied().collect();
    debug_assert!(positions.contains(&n), "position n must be in every output");
    debug_assert!(positions.len() >= sigma, "chi >= sigma");

    let stats = RunStats {
        n,
        sigma,
        chi: positions.len(),
        stack_pushes: stack.pushes(),
        stack_max_depth: stack.max_depth(),
        rowlist_insertions: insertions,
        rowlist_ejections: ejections,
        rowlist_max_size: rowlist.max_len,
        wall_time_ms: started.elapsed().as_millis() as u64,
    };
    Ok(BuildOutput { array: SuffixientArray { positions, groups: results }, stats })
}
