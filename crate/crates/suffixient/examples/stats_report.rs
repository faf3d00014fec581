//! Report the work counters of a build as JSON, together with the
//! suffix-tree height bound on the monotone-stack depth.
//!
//! ```sh
//! cargo run --example stats_report -- aaaaaaaa
//! ```

use suffixient::oracle::suffix_tree_height;
use suffixient::{build, load_text, reverse_text, SentinelPolicy};

fn main() {
    let body = std::env::args().nth(1).unwrap_or_else(|| "AGCACAGCA".into());
    let text = load_text(body.as_bytes(), SentinelPolicy::Append).expect("loadable text");
    let out = build(&text).expect("build");
    println!("{}", serde_json::to_string_pretty(&out.stats).expect("serialize"));
    let h = suffix_tree_height(&reverse_text(&text));
    println!(
        "suffix tree height h = {h}; stack depth {} <= h + 1 = {}",
        out.stats.stack_max_depth,
        h + 1
    );
}
