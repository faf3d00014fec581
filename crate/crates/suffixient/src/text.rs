//! Text ingestion: sentinel handling, alphabet densification, and the
//! sentinel-preserving reversal the index arrays are built over.

use crate::error::{Error, Result};

/// A symbol rank in the densified alphabet `{0..sigma-1}`. Rank 0 is the
/// sentinel, strictly smallest.
pub type Symbol = u32;

/// How the terminating sentinel is obtained from the raw bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SentinelPolicy {
    /// Append a fresh 0x00 sentinel; the input must not contain 0x00.
    #[default]
    Append,
    /// The last input byte is the sentinel; it must be unique and strictly
    /// smaller than every other byte.
    Require,
}

/// A sentinel-terminated text over the densified alphabet.
///
/// `symbols[n-1]` is rank 0 (the sentinel) and rank 0 occurs nowhere else.
/// Ranks preserve the byte order of the source alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    symbols: Vec<Symbol>,
    sigma: usize,
    rank_to_byte: Vec<u8>,
}

impl Text {
    /// Length `n`, sentinel included.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid Text always holds at least "x$"
    }

    /// Number of distinct symbols, sentinel included.
    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// The rank sequence, 0-indexed.
    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn rank_to_byte(&self) -> &[u8] {
        &self.rank_to_byte
    }

    /// Source byte at 1-based position `p`.
    pub fn byte_at(&self, p: usize) -> u8 {
        self.rank_to_byte[self.symbols[p - 1] as usize]
    }
}

/// The paper-specific reversal: the body is reversed while the sentinel
/// stays at the final position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReversedText {
    symbols: Vec<Symbol>,
    sigma: usize,
}

impl ReversedText {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }
}

/// Builds a [`Text`] from raw bytes, densifying the alphabet to
/// `{0..sigma-1}` with the sentinel at rank 0.
pub fn load_text(raw: &[u8], policy: SentinelPolicy) -> Result<Text> {
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (body, sentinel_byte) = match policy {
        SentinelPolicy::Append => {
            if raw.contains(&0) {
                return Err(Error::SentinelViolation(
                    "input contains byte 0x00 but the sentinel is appended".into(),
                ));
            }
            (raw, 0u8)
        }
        SentinelPolicy::Require => {
            let (&last, body) = raw.split_last().expect("nonempty");
            if body.iter().any(|&b| b <= last) {
                return Err(Error::SentinelViolation(format!(
                    "terminator byte 0x{last:02x} is not unique and strictly minimal"
                )));
            }
            (body, last)
        }
    };

    let mut present = [false; 256];
    for &b in body {
        present[b as usize] = true;
    }
    let mut rank_to_byte = vec![sentinel_byte];
    rank_to_byte.extend((0u16..256).map(|b| b as u8).filter(|&b| present[b as usize]));
    let sigma = rank_to_byte.len();
    if sigma < 2 {
        return Err(Error::UnaryAlphabet);
    }

    let mut byte_to_rank = [0u32; 256];
    for (rank, &b) in rank_to_byte.iter().enumerate() {
        byte_to_rank[b as usize] = rank as u32;
    }
    let mut symbols: Vec<Symbol> = body.iter().map(|&b| byte_to_rank[b as usize]).collect();
    symbols.push(0);

    Ok(Text { symbols, sigma, rank_to_byte })
}

/// Extracts the concatenated sequence bytes from a FASTA file.
pub fn parse_fasta(raw: &[u8]) -> Result<Vec<u8>> {
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut seq = Vec::new();
    for line in raw.split(|&b| b == b'\n') {
        if line.first() == Some(&b'>') {
            continue;
        }
        if line.contains(&0) {
            return Err(Error::SentinelViolation(
                "FASTA record contains byte 0x00".into(),
            ));
        }
        seq.extend(line.iter().copied().filter(|b| !b.is_ascii_whitespace()));
    }
    if seq.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(seq)
}

/// `rev[i] = t[n-i]` for `1 <= i < n`, with the sentinel kept at position `n`.
pub fn reverse_text(t: &Text) -> ReversedText {
    let n = t.len();
    let mut symbols: Vec<Symbol> = t.symbols[..n - 1].iter().rev().copied().collect();
    symbols.push(0);
    ReversedText { symbols, sigma: t.sigma }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks_of(t: &Text) -> Vec<u32> {
        t.symbols().to_vec()
    }

    #[test]
    fn worked_example_text() {
        let t = load_text(b"AGCACAGCA", SentinelPolicy::Append).unwrap();
        assert_eq!(t.len(), 10);
        assert_eq!(t.sigma(), 4);
        // $ -> 0, A -> 1, C -> 2, G -> 3
        assert_eq!(ranks_of(&t), vec![1, 3, 2, 1, 2, 1, 3, 2, 1, 0]);
    }

    #[test]
    fn minimal_text() {
        let t = load_text(b"a", SentinelPolicy::Append).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.sigma(), 2);
    }

    #[test]
    fn internal_nul_rejected() {
        assert!(matches!(
            load_text(b"a\x00b", SentinelPolicy::Append),
            Err(Error::SentinelViolation(_))
        ));
    }

    #[test]
    fn empty_rejected() {
        assert!(matches!(load_text(b"", SentinelPolicy::Append), Err(Error::EmptyInput)));
    }

    #[test]
    fn require_policy() {
        let t = load_text(b"banana!", SentinelPolicy::Require).unwrap();
        assert_eq!(t.sigma(), 4); // !, a, b, n
        assert_eq!(t.rank_to_byte()[0], b'!');
        // non-minimal terminator
        assert!(load_text(b"abca", SentinelPolicy::Require).is_err());
        // unary after sentinel stripping
        assert!(matches!(load_text(b"a", SentinelPolicy::Require), Err(Error::UnaryAlphabet)));
    }

    #[test]
    fn reversal_worked_example() {
        let t = load_text(b"AGCACAGCA", SentinelPolicy::Append).unwrap();
        let r = reverse_text(&t);
        let bytes: Vec<u8> = r.symbols()[..9]
            .iter()
            .map(|&s| t.rank_to_byte()[s as usize])
            .collect();
        assert_eq!(bytes, b"ACGACACGA");
        assert_eq!(r.symbols()[9], 0);
    }

    #[test]
    fn reversal_trivial_cases() {
        let a = load_text(b"a", SentinelPolicy::Append).unwrap();
        assert_eq!(reverse_text(&a).symbols(), a.symbols());
        let ab = load_text(b"ab", SentinelPolicy::Append).unwrap();
        let ba = load_text(b"ba", SentinelPolicy::Append).unwrap();
        assert_eq!(reverse_text(&ab).symbols(), ba.symbols());
    }

    #[test]
    fn reversal_is_an_involution() {
        for raw in [&b"AGCACAGCA"[..], b"abracadabra", b"x", b"mississippi"] {
            let t = load_text(raw, SentinelPolicy::Append).unwrap();
            let r = reverse_text(&t);
            let rr: Vec<Symbol> = {
                let n = r.len();
                let mut v: Vec<Symbol> = r.symbols()[..n - 1].iter().rev().copied().collect();
                v.push(0);
                v
            };
            assert_eq!(rr, t.symbols());
        }
    }

    #[test]
    fn fasta_concatenation() {
        let raw = b">rec1\nAGCA\nCAG\n>rec2\nCA\n";
        assert_eq!(parse_fasta(raw).unwrap(), b"AGCACAGCA");
    }
}
