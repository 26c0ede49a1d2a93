#![no_main]

use banana_core::series::LaurentReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = LaurentReport::from_json(s) {
        assert_eq!(LaurentReport::from_json(&r.to_json()).unwrap(), r);
    }
});
