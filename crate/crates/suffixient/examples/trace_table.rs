//! Print the per-iteration execution trace of the one-pass construction:
//! LCP/BWT/SA rows, weights, `curr_b`, candidate verdicts, the rowList
//! snapshots, and the per-character result lists.
//!
//! ```sh
//! cargo run --example trace_table -- abracadabra
//! ```

use suffixient::{
    load_text, render_trace, reverse_text, trace_build, IndexArrays, SentinelPolicy,
};

fn main() {
    let body = std::env::args().nth(1).unwrap_or_else(|| "AGCACAGCA".into());
    let text = load_text(body.as_bytes(), SentinelPolicy::Append).expect("loadable text");
    let arrays = IndexArrays::build(&reverse_text(&text));
    let trace = trace_build(&arrays).expect("trace");
    print!("{}", render_trace(&trace, &text));
}
