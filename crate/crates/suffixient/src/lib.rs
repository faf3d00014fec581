//! Minimum-size suffixient arrays in one pass.
//!
//! A suffixient set of a text `T[1..n]` is a set of positions `X` such that
//! every one-character right-maximal extension of `T` is a suffix of
//! `T[1..x]` for some `x` in `X`. This crate computes a minimum-size such
//! set — the suffixient array — by a single left-to-right sweep (with
//! one-step look-ahead) over the suffix array, LCP array, and BWT of the
//! reversed text.
//!
//! Typical use:
//!
//! ```
//! use suffixient::{build, load_text, SentinelPolicy};
//!
//! let text = load_text(b"AGCACAGCA", SentinelPolicy::Append).unwrap();
//! let out = build(&text).unwrap();
//! assert_eq!(out.array.positions(), &[10, 1, 5, 7]);
//! ```
//!
//! The [`oracle`] module holds independent brute-force implementations of
//! every definition; they are the ground truth behind the test suite and
//! the `verify` command.

pub mod cli;
mod error;
mod index;
mod kernel;
pub mod oracle;
mod sais;
mod stream;
mod text;

mod builder;
mod trace;

pub use builder::{
    build_suffixient, candidate_test, BuildOutput, RowTriple, RunStats, SuffixientArray,
};
pub use error::{Error, Result};
pub use index::IndexArrays;
pub use kernel::{compute_w, MonotoneStack, StackTuple};
pub use sais::suffix_array;
pub use stream::{ArraySource, IndexTriple, StrictSource, TripleSource, TripleStream};
pub use text::{
    load_text, parse_fasta, reverse_text, ReversedText, SentinelPolicy, Symbol, Text,
};
pub use trace::{render as render_trace, trace_build, Trace, TraceRow};

/// Runs the whole pipeline on an in-memory text: reverse, index, stream,
/// build.
pub fn build(text: &Text) -> Result<BuildOutput> {
    let arrays = IndexArrays::build(&reverse_text(text));
    let mut stream = TripleStream::new(ArraySource::new(&arrays));
    build_suffixient(&mut stream)
}
