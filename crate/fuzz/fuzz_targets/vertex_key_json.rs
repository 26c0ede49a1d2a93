#![no_main]

use banana_core::vertex::{min_renorm_volume, VertexKey};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(k) = VertexKey::from_json(s) {
        assert_eq!(VertexKey::from_json(&k.to_json()).unwrap(), k);
        // Keep the volume computation cheap.
        if [&k.0, &k.1, &k.2].iter().all(|p| p.size() <= 12) {
            assert_eq!(min_renorm_volume(&k.rotate()), min_renorm_volume(&k));
        }
    }
});
