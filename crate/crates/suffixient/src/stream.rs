//! One-pass triple stream with one-step look-ahead.
//!
//! The stream is an enforcement boundary: consumers can only see the
//! triples at `cursor` and `cursor+1`, the cursor never rewinds, and the
//! virtual triple at `n+1` (with `bwt = lcp = -1`) lives here so the
//! builder needs no boundary cases. [`StrictSource`] is a violation
//! detecting double for tests: it faults on any out-of-window access and
//! counts materializations per index.

use crate::error::{Error, Result};
use crate::index::IndexArrays;
use crate::text::Symbol;

/// One column of the streamed input: `(SA[i], LCP[i], BWT[i])`.
///
/// `bwt` is `None` at the virtual index `n+1`; `sa` is unused there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexTriple {
    /// 1-based stream index.
    pub index: usize,
    /// `SA[index]`, 1-based; 0 at the virtual index.
    pub sa: usize,
    pub lcp: i64,
    pub bwt: Option<Symbol>,
}

impl IndexTriple {
    fn virtual_at(index: usize) -> Self {
        IndexTriple { index, sa: 0, lcp: -1, bwt: None }
    }
}

/// Producer of triples for indices `1..=n`.
pub trait TripleSource {
    fn n(&self) -> usize;
    fn sigma(&self) -> usize;
    fn triple(&mut self, i: usize) -> IndexTriple;
    /// Called once per cursor advance, after the window has moved.
    fn note_advance(&mut self, _new_cursor: usize) {}
}

/// Production source backed by in-memory [`IndexArrays`].
pub struct ArraySource<'a> {
    arrays: &'a IndexArrays,
}

impl<'a> ArraySource<'a> {
    pub fn new(arrays: &'a IndexArrays) -> Self {
        ArraySource { arrays }
    }
}

impl TripleSource for ArraySource<'_> {
    fn n(&self) -> usize {
        self.arrays.n()
    }

    fn sigma(&self) -> usize {
        self.arrays.sigma()
    }

    fn triple(&mut self, i: usize) -> IndexTriple {
        IndexTriple {
            index: i,
            sa: self.arrays.sa(i),
            lcp: self.arrays.lcp(i),
            bwt: Some(self.arrays.bwt(i)),
        }
    }
}

/// Test double enforcing the one-pass, one-step look-ahead contract.
///
/// Panics on any access outside `{cursor, cursor+1}` and if an index is
/// materialized more than twice over a run.
pub struct StrictSource<'a> {
    inner: ArraySource<'a>,
    cursor: usize,
    materializations: Vec<u8>,
    advances: usize,
}

impl<'a> StrictSource<'a> {
    pub fn new(arrays: &'a IndexArrays) -> Self {
        let n = arrays.n();
        StrictSource {
            inner: ArraySource::new(arrays),
            cursor: 1,
            materializations: vec![0; n + 2],
            advances: 0,
        }
    }

    /// Total `advance()` calls observed.
    pub fn advances(&self) -> usize {
        self.advances
    }

    pub fn max_materializations(&self) -> u8 {
        self.materializations.iter().copied().max().unwrap_or(0)
    }
}

impl TripleSource for StrictSource<'_> {
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn sigma(&self) -> usize {
        self.inner.sigma()
    }

    fn triple(&mut self, i: usize) -> IndexTriple {
        assert!(
            i == self.cursor || i == self.cursor + 1,
            "access violation: index {i} requested while cursor is {}",
            self.cursor
        );
        self.materializations[i] += 1;
        assert!(
            self.materializations[i] <= 2,
            "access violation: index {i} materialized more than twice"
        );
        self.inner.triple(i)
    }

    fn note_advance(&mut self, new_cursor: usize) {
        assert_eq!(new_cursor, self.cursor + 1, "cursor must advance by one");
        self.cursor = new_cursor;
        self.advances += 1;
    }
}

/// The one-pass window over a [`TripleSource`].
pub struct TripleStream<S: TripleSource> {
    source: S,
    n: usize,
    cursor: usize,
    window: [IndexTriple; 2],
}

impl<S: TripleSource> TripleStream<S> {
    pub fn new(mut source: S) -> Self {
        let n = source.n();
        debug_assert!(n >= 2);
        let first = source.triple(1);
        let second = if n >= 2 { source.triple(2) } else { IndexTriple::virtual_at(2) };
        TripleStream { source, n, cursor: 1, window: [first, second] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> usize {
        self.source.sigma()
    }

    /// Triple at the cursor; repeatable within the same iteration.
    pub fn current(&self) -> Result<IndexTriple> {
        if self.cursor > self.n {
            return Err(Error::Exhausted);
        }
        Ok(self.window[0])
    }

    /// Triple at `cursor+1`, or the virtual `(-1, -1)` triple past the end.
    pub fn peek_next(&self) -> IndexTriple {
        self.window[1]
    }

    /// Moves the cursor forward; the old current triple becomes
    /// permanently inaccessible.
    pub fn advance(&mut self) -> Result<()> {
        if self.cursor > self.n {
            return Err(Error::Exhausted);
        }
        self.cursor += 1;
        self.window[0] = self.window[1];
        self.source.note_advance(self.cursor);
        self.window[1] = if self.cursor + 1 <= self.n {
            self.source.triple(self.cursor + 1)
        } else {
            IndexTriple::virtual_at(self.cursor + 1)
        };
        Ok(())
    }

    pub fn into_source(self) -> S {
        self.source
    }
}
