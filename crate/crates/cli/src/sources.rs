//! Input plumbing: where graphs come from and how big they may be.

use std::io::Read;
use std::path::PathBuf;

use domchain_core::{parse_edge_list, parse_graph6, Graph, MAX_VERTICES, SOFT_VERTEX_LIMIT};

pub const CAPACITY_VAR: &str = "DOMCHAIN_MAX_ORDER";

/// Per-graph order cap applied to every parsed input. Defaults to the
/// soft solver limit; the environment variable raises or lowers it, but
/// never past the adjacency representation's hard maximum.
pub fn capacity() -> usize {
    match std::env::var(CAPACITY_VAR) {
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(v) if v >= 1 => v.min(MAX_VERTICES),
            _ => {
                eprintln!(
                    "warning: ignoring {CAPACITY_VAR}={raw:?}; expected an integer in 1..={MAX_VERTICES}"
                );
                SOFT_VERTEX_LIMIT
            }
        },
        Err(_) => SOFT_VERTEX_LIMIT,
    }
}

/// One parsed input graph, or the reason that position failed to parse.
pub enum Loaded {
    Ok { origin: String, graph: Graph },
    Failed { origin: String, message: String },
}

fn read_source(path: Option<&PathBuf>) -> Result<(String, String), String> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            Ok((p.display().to_string(), text))
        }
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(("stdin".to_string(), text))
        }
    }
}

fn admit(origin: String, graph: Graph, cap: usize) -> Loaded {
    if graph.order() > cap {
        let message = format!(
            "order {} exceeds the capacity of {cap} (override with {CAPACITY_VAR})",
            graph.order()
        );
        Loaded::Failed { origin, message }
    } else {
        Loaded::Ok { origin, graph }
    }
}

/// Reads every source (stdin when `files` is empty) and parses it.
/// graph6 mode takes one graph per non-empty line; edge-list mode takes
/// the whole source as a single graph. Origins carry file and line so
/// failures stay attributable.
pub fn load(files: &[PathBuf], edges: bool, cap: usize) -> Result<Vec<Loaded>, String> {
    let mut out = Vec::new();
    let sources: Vec<Option<&PathBuf>> = if files.is_empty() {
        vec![None]
    } else {
        files.iter().map(Some).collect()
    };
    for source in sources {
        let (label, text) = read_source(source)?;
        if edges {
            match parse_edge_list(&text) {
                Ok(graph) => out.push(admit(format!("{label}:1"), graph, cap)),
                Err(e) => out.push(Loaded::Failed {
                    origin: format!("{label}:1"),
                    message: e.to_string(),
                }),
            }
            continue;
        }
        for (index, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let origin = format!("{label}:{}", index + 1);
            match parse_graph6(line) {
                Ok(graph) => out.push(admit(origin, graph, cap)),
                Err(e) => out.push(Loaded::Failed { origin, message: e.to_string() }),
            }
        }
    }
    Ok(out)
}
