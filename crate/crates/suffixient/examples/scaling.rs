//! Scaling sanity check: time the builder pass alone (index construction
//! excluded) on a repetitive text and on its doubled version. The pass is
//! a single sweep, so the ratio should stay near 2.
//!
//! ```sh
//! cargo run --release --example scaling
//! ```

use std::time::Instant;

use suffixient::{
    build_suffixient, load_text, reverse_text, ArraySource, IndexArrays, SentinelPolicy,
    TripleStream,
};

fn builder_pass_ms(body: &[u8]) -> (usize, f64) {
    let text = load_text(body, SentinelPolicy::Append).expect("loadable text");
    let arrays = IndexArrays::build(&reverse_text(&text));
    let best = (0..3)
        .map(|_| {
            let mut stream = TripleStream::new(ArraySource::new(&arrays));
            let clock = Instant::now();
            build_suffixient(&mut stream).expect("build");
            clock.elapsed().as_secs_f64() * 1e3
        })
        .fold(f64::INFINITY, f64::min);
    (text.len(), best)
}

fn main() {
    // A 1 KB seed repeated with light mutations, then doubled.
    let seed: Vec<u8> = (0..1024u64).map(|k| b'a' + (k.wrapping_mul(2654435761) % 4) as u8).collect();
    let mut body = Vec::new();
    for k in 0..1024 {
        let mut copy = seed.clone();
        let at = k % copy.len();
        copy[at] = b'a' + (k % 4) as u8;
        body.extend_from_slice(&copy);
    }
    let double = [body.as_slice(), body.as_slice()].concat();

    let (n1, t1) = builder_pass_ms(&body);
    let (n2, t2) = builder_pass_ms(&double);
    println!("n = {n1:>9}: builder pass {t1:>8.2} ms");
    println!("n = {n2:>9}: builder pass {t2:>8.2} ms");
    println!("ratio for doubled input: {:.2}", t2 / t1);
}
