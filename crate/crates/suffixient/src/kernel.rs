//! Per-index primitives: the weight `w(i)` of a run boundary and the
//! previous-smaller-LCP index `b(i)` via a monotone stack.

use crate::text::Symbol;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("monotone stack queried out of order: index {queried} while top holds {top}")]
pub struct ContractViolation {
    pub queried: usize,
    pub top: usize,
}

/// Weight of index `i`, from the streamed neighborhood.
///
/// Returns -1 when `i` is not a run boundary; `LCP[i]` for a start-run
/// boundary only, `LCP[i+1]` for an end-run boundary only, and the max of
/// both when `i` is both. The boundary conventions `pre_bwt = None` at
/// `i = 1` and `next_bwt = None` at `i = n` come from the stream.
pub fn compute_w(
    pre_bwt: Option<Symbol>,
    curr_bwt: Symbol,
    next_bwt: Option<Symbol>,
    curr_lcp: i64,
    next_lcp: i64,
) -> i64 {
    let is_start = pre_bwt.is_some_and(|p| p != curr_bwt);
    let is_end = next_bwt.is_some_and(|nx| nx != curr_bwt);
    let w_start = if is_start { curr_lcp } else { -1 };
    let w_end = if is_end { next_lcp } else { -1 };
    w_start.max(w_end)
}

/// One stack entry: `val = LCP[index]` and `b_val = b(index)`, with the
/// bottom sentinel `(1, -1, -1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StackTuple {
    pub index: usize,
    pub val: i64,
    pub b_val: i64,
}

/// Stack of `(index, val, b_val)` tuples with strictly increasing `val`
/// from bottom to top, answering `b(i)` queries in amortized O(1).
#[derive(Debug)]
pub struct MonotoneStack {
    tuples: Vec<StackTuple>,
    pushes: usize,
    pops: usize,
    max_depth: usize,
}

impl MonotoneStack {
    pub fn new() -> Self {
        MonotoneStack {
            tuples: vec![StackTuple { index: 1, val: -1, b_val: -1 }],
            pushes: 1,
            pops: 0,
            max_depth: 1,
        }
    }

    /// `b(i)`: the largest index `< i` with a strictly smaller LCP value,
    /// or 1 if none. Queries must arrive with non-decreasing `i`; a repeat
    /// query for the index already on top returns the cached value without
    /// mutating the stack.
    pub fn compute_b(&mut self, lcp_i: i64, i: usize) -> Result<usize, ContractViolation> {
        let top = *self.tuples.last().expect("bottom sentinel never popped");
        if top.index == i {
            return Ok(top.b_val as usize);
        }
        if top.index > i {
            return Err(ContractViolation { queried: i, top: top.index });
        }
        while self.tuples.len() > 1 && self.tuples.last().unwrap().val >= lcp_i {
            self.tuples.pop();
            self.pops += 1;
        }
        let b = self.tuples.last().unwrap().index;
        self.tuples.push(StackTuple { index: i, val: lcp_i, b_val: b as i64 });
        self.pushes += 1;
        self.max_depth = self.max_depth.max(self.tuples.len());
        Ok(b)
    }

    pub fn depth(&self) -> usize {
        self.tuples.len()
    }

    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    pub fn pushes(&self) -> usize {
        self.pushes
    }

    pub fn pops(&self) -> usize {
        self.pops
    }

    pub fn tuples(&self) -> &[StackTuple] {
        &self.tuples
    }
}

impl Default for MonotoneStack {
    fn default() -> Self {
        Self::new()
    }
}
