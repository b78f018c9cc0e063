use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use kneserlab_core::graph::Graph;
use serde::Serialize;

use crate::CliError;

/// Writes `text` to `path`, or to standard output when no path is given.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        // a closed pipe (`| head`) is the reader's choice, not an error
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io {
                path: "<stdout>".into(),
                source: e,
            }),
            _ => Ok(()),
        },
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// DIMACS edge format: comment lines, `p edge V E`, then `e i j` with
/// 1-based vertex indices in canonical vertex order.
pub fn dimacs(graph: &Graph, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        for line in c.lines() {
            writeln!(s, "c {line}").unwrap();
        }
    }
    writeln!(s, "p edge {} {}", graph.vertex_count(), graph.edge_count()).unwrap();
    for (i, j) in graph.edges() {
        writeln!(s, "e {} {}", i + 1, j + 1).unwrap();
    }
    s
}
