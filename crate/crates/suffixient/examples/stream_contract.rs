//! Demonstrate the one-pass access discipline: run the builder against a
//! strict stream double that panics on any access outside the two-index
//! window {cursor, cursor+1}, then report the observed access counts.
//!
//! ```sh
//! cargo run --example stream_contract -- abracadabra
//! ```

use suffixient::{
    build_suffixient, load_text, reverse_text, IndexArrays, SentinelPolicy, StrictSource,
    TripleStream,
};

fn main() {
    let body = std::env::args().nth(1).unwrap_or_else(|| "AGCACAGCA".into());
    let text = load_text(body.as_bytes(), SentinelPolicy::Append).expect("loadable text");
    let arrays = IndexArrays::build(&reverse_text(&text));

    let mut stream = TripleStream::new(StrictSource::new(&arrays));
    let out = build_suffixient(&mut stream).expect("build");
    let source = stream.into_source();

    println!("positions             : {:?}", out.array.positions());
    println!("n                     : {}", arrays.n());
    println!("advance() calls       : {} (one per index)", source.advances());
    println!("max materializations  : {} (each index at most twice)", source.max_materializations());
}
