//! Compute the suffixient array of a text given on the command line
//! (default: the worked example AGCACAGCA).
//!
//! ```sh
//! cargo run --example build_basic -- mississippi
//! ```

use suffixient::{build, load_text, SentinelPolicy};

fn main() {
    let body = std::env::args().nth(1).unwrap_or_else(|| "AGCACAGCA".into());
    let text = load_text(body.as_bytes(), SentinelPolicy::Append).expect("loadable text");
    let out = build(&text).expect("build");
    println!("text      : {body}$  (n = {})", text.len());
    println!("positions : {:?}", out.array.positions());
    println!("chi       : {}  (sigma = {})", out.array.chi(), text.sigma());
    for &pos in out.array.positions() {
        let prefix: String = (1..=pos)
            .map(|p| if p == text.len() { '$' } else { text.byte_at(p) as char })
            .collect();
        println!("  {pos:>3} -> {prefix}");
    }
}
