//! Iteration-by-iteration trace of the one-pass construction, matching the
//! column conventions of the worked execution table: `curr_b` is recorded
//! after the possible rebinding to `b(i+1)`, the rowList snapshot shows the
//! end-of-iteration state, and the result lists of column `i` show the
//! state after the ejections of iteration `i+1` landed.

use crate::builder::{build_with_observer, IterationView, Observer, RowTriple, RunStats};
use crate::error::Result;
use crate::index::IndexArrays;
use crate::stream::{ArraySource, TripleStream};
use crate::text::{Symbol, Text};

#[derive(Debug, Clone)]
pub struct TraceRow {
    /// 1-based iteration index.
    pub i: usize,
    pub sa: usize,
    pub lcp: i64,
    pub bwt: Symbol,
    pub w: i64,
    /// `n - SA[i] + 1`.
    pub pos: usize,
    pub lcp_eq_w: bool,
    /// Recorded after the possible rebinding to `b(i+1)`.
    pub curr_b: usize,
    pub w_positive: bool,
    /// Candidate-test verdict; `None` when `w(i) = -1`.
    pub verdict: Option<bool>,
    /// End-of-iteration rowList, front to back.
    pub rowlist: Vec<RowTriple>,
    /// Per-symbol result lists after the next iteration's ejections.
    pub results: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct Trace {
    pub rows: Vec<TraceRow>,
    /// Result lists after the final flush.
    pub final_results: Vec<Vec<usize>>,
    pub output: Vec<usize>,
    pub stats: RunStats,
}

struct Recorder {
    n: usize,
    rows: Vec<TraceRow>,
    final_results: Vec<Vec<usize>>,
}

impl Observer for Recorder {
    fn after_step1(&mut self, i: usize, results: &[Vec<usize>]) {
        // Column i-1 of the table shows the results after these ejections.
        if let Some(row) = self.rows.get_mut(i - 2) {
            row.results = results.to_vec();
        }
    }

    fn end_iteration(&mut self, view: IterationView<'_>) {
        self.rows.push(TraceRow {
            i: view.i,
            sa: view.sa,
            lcp: view.lcp,
            bwt: view.bwt,
            w: view.w,
            pos: self.n - view.sa + 1,
            lcp_eq_w: view.lcp == view.w,
            curr_b: view.curr_b,
            w_positive: view.w > -1,
            verdict: view.verdict,
            rowlist: view.rowlist.iter().collect(),
            results: view.results.to_vec(),
        });
    }

    fn finalize(&mut self, results: &[Vec<usize>]) {
        self.final_results = results.to_vec();
    }
}

/// Runs the builder over `arrays` and records every iteration.
pub fn trace_build(arrays: &IndexArrays) -> Result<Trace> {
    let mut stream = TripleStream::new(ArraySource::new(arrays));
    let mut recorder =
        Recorder { n: arrays.n(), rows: Vec::new(), final_results: Vec::new() };
    let out = build_with_observer(&mut stream, &mut recorder)?;
    Ok(Trace {
        rows: recorder.rows,
        final_results: recorder.final_results,
        output: out.array.positions().to_vec(),
        stats: out.stats,
    })
}

fn display_symbol(rank: Symbol, text: &Text) -> char {
    if rank == 0 {
        '$'
    } else {
        text.rank_to_byte()[rank as usize] as char
    }
}

fn display_verdict(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "T",
        Some(false) => "F",
        None => "N/A",
    }
}

fn display_results(results: &[Vec<usize>], text: &Text) -> String {
    let mut parts = Vec::new();
    for (rank, list) in results.iter().enumerate() {
        if !list.is_empty() {
            let items: Vec<String> = list.iter().map(|p| p.to_string()).collect();
            parts.push(format!(
                "{}:[{}]",
                display_symbol(rank as Symbol, text),
                items.join(",")
            ));
        }
    }
    parts.join(" ")
}

/// Renders a trace as one line per iteration plus a final-flush line.
pub fn render(trace: &Trace, text: &Text) -> String {
    let n = text.len();
    let mut out = String::new();
    out.push_str(
        "# i\tT[i]\tTrev[i]\tLCP\tBWT\tw(i)\tSA\tpos\tlcp=w\tcurr_b\tw>-1\tcandt\trowList\tresults\n",
    );
    for row in &trace.rows {
        let i = row.i;
        let trev = if i == n {
            '$'
        } else {
            // T^rev[i] = T[n-i]
            text.byte_at(n - i) as char
        };
        let rowlist: Vec<String> = row
            .rowlist
            .iter()
            .map(|t| format!("({},{},{})", t.pos, display_symbol(t.ch, text), t.weight))
            .collect();
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t[{}]\t{}\n",
            i,
            text.byte_at(i) as char,
            trev,
            row.lcp,
            display_symbol(row.bwt, text),
            row.w,
            row.sa,
            row.pos,
            if row.lcp_eq_w { "T" } else { "F" },
            row.curr_b,
            if row.w_positive { "T" } else { "F" },
            display_verdict(row.verdict),
            rowlist.join(","),
            display_results(&row.results, text),
        ));
    }
    out.push_str(&format!(
        "final\t{}\noutput\t[{}]\n",
        display_results(&trace.final_results, text),
        trace
            .output
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{load_text, reverse_text, SentinelPolicy};

    #[test]
    fn two_column_trace_of_minimal_text() {
        let t = load_text(b"a", SentinelPolicy::Append).unwrap();
        let arrays = IndexArrays::build(&reverse_text(&t));
        let trace = trace_build(&arrays).unwrap();
        assert_eq!(trace.rows.len(), 2);
        assert_eq!(trace.output, vec![2, 1]);
        let rendered = render(&trace, &t);
        assert!(rendered.contains("output\t[2, 1]"));
    }

    #[test]
    fn run_text_has_empty_rowlist_after_first_iteration() {
        let t = load_text(b"aaaa", SentinelPolicy::Append).unwrap();
        let arrays = IndexArrays::build(&reverse_text(&t));
        let trace = trace_build(&arrays).unwrap();
        assert!(trace.rows[0].rowlist.is_empty());
        assert_eq!(trace.rows[0].verdict, Some(false));
    }
}
