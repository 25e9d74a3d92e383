use std::io::BufRead;

use serde::Serialize;

use crate::graph::{from_graph6, Graph};

/// A line that failed to parse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default)]
pub struct Ingested {
    /// Parsed graphs with their 1-based line numbers.
    pub graphs: Vec<(usize, Graph)>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Reads graph6 records, one per line. Blank lines are skipped; bad lines
/// become diagnostics instead of aborting the read.
pub fn ingest<R: BufRead>(reader: R) -> std::io::Result<Ingested> {
    let mut out = Ingested::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match from_graph6(&line) {
            Ok(g) => out.graphs.push((i + 1, g)),
            Err(e) => out.diagnostics.push(Diagnostic {
                line: i + 1,
                message: e.to_string(),
            }),
        }
    }
    Ok(out)
}
