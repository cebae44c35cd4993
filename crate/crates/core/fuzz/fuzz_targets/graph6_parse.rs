#![no_main]

use libfuzzer_sys::fuzz_target;
use qwalk_core::graph6::{parse_graph6, serialize_graph6};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_graph6(text) {
        // Accepted words are canonical: exact length, zero padding.
        let word = serialize_graph6(&g).expect("parsed graphs fit graph6");
        assert_eq!(word, text);
        assert_eq!(parse_graph6(&word).unwrap(), g);
    }
});
