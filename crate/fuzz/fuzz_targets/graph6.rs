#![no_main]

use barbell_core::{encode_graph6, parse_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_graph6(text) {
        let again = parse_graph6(&encode_graph6(&g)).expect("encoder output parses");
        assert_eq!(again, g);
    }
});
