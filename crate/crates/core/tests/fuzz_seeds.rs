//! Replays the checked-in fuzz seeds with the fuzz targets' invariants, so
//! the seeds and the parsers stay in step without a fuzzing toolchain.

use std::fs;
use std::path::PathBuf;

use qwalk_core::edgelist::{
    looks_like_edge_list, parse_edge_list, parse_edge_lists, write_edge_list,
};
use qwalk_core::graph6::{parse_graph6, parse_graph6_lines, serialize_graph6};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fuzz", "corpus", target]
        .iter()
        .collect();
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                fs::read_to_string(&p).unwrap(),
            )
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn graph6_seeds() {
    let mut accepted = 0;
    for (name, text) in seeds("graph6_parse") {
        if let Ok(g) = parse_graph6(&text) {
            assert_eq!(serialize_graph6(&g).unwrap(), text, "{name}");
            accepted += 1;
        }
    }
    assert!(accepted >= 5);
}

#[test]
fn graph6_line_seeds() {
    for (name, text) in seeds("graph6_lines") {
        let parsed = parse_graph6_lines(&text);
        assert!(parsed.windows(2).all(|w| w[0].0 < w[1].0), "{name}");
        assert!(parsed.iter().any(|(_, r)| r.is_ok()), "{name}");
    }
}

#[test]
fn edge_list_seeds() {
    let mut accepted = 0;
    for (name, text) in seeds("edge_list_parse") {
        if let Ok(graphs) = parse_edge_lists(&text) {
            accepted += 1;
            for g in graphs {
                assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g, "{name}");
            }
        }
    }
    assert_eq!(accepted, 2);
}

#[test]
fn corpus_text_seeds() {
    let kinds: Vec<bool> = seeds("corpus_text")
        .iter()
        .map(|(_, t)| looks_like_edge_list(t))
        .collect();
    assert!(kinds.contains(&true) && kinds.contains(&false));
}
