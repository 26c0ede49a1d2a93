#![no_main]

use banana_core::closed_forms::ThetaCoeffTable;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = ThetaCoeffTable::from_json(s) {
        let back = ThetaCoeffTable::from_json(&t.to_json().unwrap()).unwrap();
        assert_eq!(back.rows().unwrap(), t.rows().unwrap());
    }
});
