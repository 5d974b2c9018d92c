#![no_main]

use barbell_core::ssp::{parse_matrix, property_kernel, Property};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(a) = parse_matrix(text) else { return };
    assert_eq!(parse_matrix(&a.to_text()).expect("printer output parses"), a);
    if a.n() <= 5 {
        let report = property_kernel(&a, Property::Ssp);
        assert_eq!(report.holds, report.kernel_dim == 0);
    }
});
