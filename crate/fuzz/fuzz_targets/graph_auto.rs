#![no_main]

use barbell_core::{find_barbell_partition, parse_graph_auto, verify_barbell_partition, SearchBudget, SearchOptions};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(g) = parse_graph_auto(text) else { return };
    if g.n() > 12 {
        return;
    }
    let opts = SearchOptions { budget: SearchBudget { max_nodes: 10_000 }, brute_cap: 0 };
    if let Some(p) = find_barbell_partition(&g, opts).partition {
        assert!(verify_barbell_partition(&g, &p).expect("same universe").is_valid());
    }
});
