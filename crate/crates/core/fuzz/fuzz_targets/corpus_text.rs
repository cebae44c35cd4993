#![no_main]

use libfuzzer_sys::fuzz_target;
use qwalk_core::edgelist::{looks_like_edge_list, parse_edge_lists};
use qwalk_core::graph6::parse_graph6_lines;

// Same dispatch as `qwalk -f`.
fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if looks_like_edge_list(text) {
            let _ = parse_edge_lists(text);
        } else {
            let _ = parse_graph6_lines(text);
        }
    }
});
