#![no_main]

use banana_core::series::SeriesReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = SeriesReport::from_json(s) {
        assert_eq!(SeriesReport::from_json(&r.to_json()).unwrap(), r);
    }
});
