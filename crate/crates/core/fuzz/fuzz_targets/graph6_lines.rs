#![no_main]

use libfuzzer_sys::fuzz_target;
use qwalk_core::graph6::parse_graph6_lines;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let parsed = parse_graph6_lines(text);
        assert!(parsed.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(parsed.len() <= text.lines().count());
    }
});
