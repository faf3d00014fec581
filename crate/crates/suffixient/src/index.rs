//! The SA / inverse-SA / LCP / BWT arrays of the reversed text, built
//! in memory and immutable afterwards.

use std::io::Write;

use crate::error::Result;
use crate::sais;
use crate::text::{ReversedText, Symbol};

/// Suffix array, inverse, LCP array, and BWT of the reversed text.
///
/// Stored 0-based; the 1-based accessors mirror the conventions used for
/// logging and traces (`lcp(1) = -1`, `sa(i)` in `{1..n}`).
#[derive(Debug, Clone)]
pub struct IndexArrays {
    n: usize,
    sigma: usize,
    sa: Vec<usize>,
    isa: Vec<usize>,
    lcp: Vec<i64>,
    bwt: Vec<Symbol>,
}

impl IndexArrays {
    pub fn build(rev: &ReversedText) -> Self {
        let n = rev.len();
        let sa = sais::suffix_array(rev.symbols(), rev.sigma());
        let isa = invert(&sa);
        let lcp = kasai_lcp(rev.symbols(), &sa, &isa);
        let bwt = bwt_from_sa(rev.symbols(), &sa);
        IndexArrays { n, sigma: rev.sigma(), sa, isa, lcp, bwt }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// `SA[i]`, both 1-based.
    pub fn sa(&self, i: usize) -> usize {
        self.sa[i - 1] + 1
    }

    /// `SA^-1[p]`, both 1-based.
    pub fn isa(&self, p: usize) -> usize {
        self.isa[p - 1] + 1
    }

    /// `LCP[i]`, 1-based; `lcp(1) = -1`.
    pub fn lcp(&self, i: usize) -> i64 {
        self.lcp[i - 1]
    }

    /// `BWT[i]`, 1-based.
    pub fn bwt(&self, i: usize) -> Symbol {
        self.bwt[i - 1]
    }

    pub fn sa_slice(&self) -> &[usize] {
        &self.sa
    }

    pub fn lcp_slice(&self) -> &[i64] {
        &self.lcp
    }

    pub fn bwt_slice(&self) -> &[Symbol] {
        &self.bwt
    }

    /// Dumps the three arrays as decimal values, one per line, with a
    /// header line per section. SA values are 1-based.
    pub fn dump<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "# SA")?;
        for &p in &self.sa {
            writeln!(out, "{}", p + 1)?;
        }
        writeln!(out, "# LCP")?;
        for &l in &self.lcp {
            writeln!(out, "{l}")?;
        }
        writeln!(out, "# BWT")?;
        for &c in &self.bwt {
            writeln!(out, "{c}")?;
        }
        Ok(())
    }
}

fn invert(sa: &[usize]) -> Vec<usize> {
    let mut isa = vec![0usize; sa.len()];
    for (rank, &pos) in sa.iter().enumerate() {
        isa[pos] = rank;
    }
    isa
}

/// Kasai's linear-time LCP computation; `lcp[0] = -1`.
fn kasai_lcp(s: &[Symbol], sa: &[usize], isa: &[usize]) -> Vec<i64> {
    let n = s.len();
    let mut lcp = vec![0i64; n];
    lcp[0] = -1;
    let mut k = 0usize;
    for p in 0..n {
        let rank = isa[p];
        if rank == 0 {
            k = 0;
            continue;
        }
        let q = sa[rank - 1];
        while p + k < n && q + k < n && s[p + k] == s[q + k] {
            k += 1;
        }
        lcp[rank] = k as i64;
        k = k.saturating_sub(1);
    }
    lcp
}

/// `bwt[i] = s[sa[i]-1]`, with the sentinel when `sa[i]` is the first
/// position.
fn bwt_from_sa(s: &[Symbol], sa: &[usize]) -> Vec<Symbol> {
    sa.iter().map(|&p| if p == 0 { 0 } else { s[p - 1] }).collect()
}
