#![no_main]

use banana_core::gv::GVTable;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = GVTable::from_json(s) {
        assert_eq!(GVTable::from_json(&t.to_json()).unwrap(), t);
    }
});
