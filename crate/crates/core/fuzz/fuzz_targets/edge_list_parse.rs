#![no_main]

use libfuzzer_sys::fuzz_target;
use qwalk_core::edgelist::{parse_edge_list, parse_edge_lists, write_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let _ = parse_edge_list(text);
    if let Ok(graphs) = parse_edge_lists(text) {
        for g in graphs {
            assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
});
