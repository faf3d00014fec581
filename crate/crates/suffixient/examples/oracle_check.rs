//! Cross-check the one-pass construction against the brute-force oracles:
//! list equality with the naive candidate enumeration, the suffixient
//! property over every right-maximal extension, colexicographic order,
//! and (for short texts) exhaustive minimality.
//!
//! ```sh
//! cargo run --example oracle_check -- mississippi
//! ```

use suffixient::oracle::{
    colex_ordered, exhaustive_min_size, naive_full_l, verify_suffixient, RightMaximalCatalog,
    EXHAUSTIVE_CAP,
};
use suffixient::{
    build_suffixient, load_text, reverse_text, ArraySource, IndexArrays, SentinelPolicy,
    TripleStream,
};

fn main() {
    let body = std::env::args().nth(1).unwrap_or_else(|| "AGCACAGCA".into());
    let text = load_text(body.as_bytes(), SentinelPolicy::Append).expect("loadable text");
    let arrays = IndexArrays::build(&reverse_text(&text));
    let mut stream = TripleStream::new(ArraySource::new(&arrays));
    let out = build_suffixient(&mut stream).expect("build");
    let positions = out.array.positions();
    println!("one-pass output        : {positions:?}");

    let expected = naive_full_l(&arrays);
    println!("naive enumeration      : {expected:?}");
    assert_eq!(positions, expected.as_slice());

    let catalog = RightMaximalCatalog::build(&text);
    println!(
        "right-maximal extensions: {} (all covered: {})",
        catalog.extensions().len(),
        verify_suffixient(&catalog, text.len(), positions)
    );
    println!("colex order            : {}", colex_ordered(&text, positions));

    if text.len() <= EXHAUSTIVE_CAP {
        let min = exhaustive_min_size(&text).expect("within cap");
        println!("exhaustive minimum     : {min} (chi = {})", out.stats.chi);
    } else {
        println!("exhaustive minimum     : skipped (n > {EXHAUSTIVE_CAP})");
    }
}
