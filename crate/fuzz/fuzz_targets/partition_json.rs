#![no_main]

use banana_core::partitions::Partition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Partition::from_json(s) {
        assert_eq!(Partition::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(p.conjugate().conjugate(), p);
    }
});
