#![no_main]

use barbell_core::io::{encode_edge_list, parse_edge_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_edge_list(text) {
        if g.n() <= 1 << 12 {
            assert_eq!(parse_edge_list(&encode_edge_list(&g)).expect("encoder output parses"), g);
        }
    }
});
