use std::io::Read;
use std::path::Path;

use qwalk_core::canon::enumerate_graphs;
use qwalk_core::edgelist::{looks_like_edge_list, parse_edge_lists};
use qwalk_core::graph6::{parse_graph6, parse_graph6_lines};
use qwalk_core::Graph;

use crate::args::InputArgs;
use crate::exit::Failure;

/// Graphs in command-line order: inline words, then files, then the
/// exhaustive corpus. Every bad line is reported before failing.
pub fn load_graphs(input: &InputArgs) -> Result<Vec<Graph>, Failure> {
    let mut graphs = Vec::new();
    let mut diagnostics = Vec::new();

    for word in &input.graphs {
        match parse_graph6(word) {
            Ok(g) => graphs.push(g),
            Err(e) => diagnostics.push(format!("-g {word:?}: {e}")),
        }
    }

    for path in &input.files {
        let label = path.display().to_string();
        let text = match read_source(path) {
            Ok(t) => t,
            Err(e) => {
                diagnostics.push(format!("{label}: {e}"));
                continue;
            }
        };
        if looks_like_edge_list(&text) {
            match parse_edge_lists(&text) {
                Ok(gs) => graphs.extend(gs),
                Err(e) => diagnostics.push(format!("{label}: {e}")),
            }
        } else {
            for (line, parsed) in parse_graph6_lines(&text) {
                match parsed {
                    Ok(g) => graphs.push(g),
                    Err(e) => diagnostics.push(format!("{label}:{line}: {e}")),
                }
            }
        }
    }

    if !diagnostics.is_empty() {
        return Err(Failure::Parse(diagnostics));
    }

    if let Some(n) = input.exhaustive_n {
        graphs.extend(enumerate_graphs(n).map_err(Failure::from)?);
    }

    if graphs.is_empty() {
        return Err(Failure::Usage(
            "no input graphs; pass -g, -f or --exhaustive-n".into(),
        ));
    }
    Ok(graphs)
}

fn read_source(path: &Path) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}
