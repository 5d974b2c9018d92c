#![no_main]

use barbell_core::barbell::{parse_partition_json, verify_barbell_partition};
use barbell_core::graph::named;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let g = named::petersen();
    if let Ok(p) = parse_partition_json(text, g.n()) {
        let _ = verify_barbell_partition(&g, &p);
    }
});
