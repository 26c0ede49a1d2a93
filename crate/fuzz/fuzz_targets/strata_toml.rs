#![no_main]

use banana_core::strata::StrataTable;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = StrataTable::from_toml(s) {
        let _ = t.to_text();
    }
});
