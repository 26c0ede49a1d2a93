#![no_main]

use banana_core::series::{rat_from_str, rat_to_string};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = rat_from_str(s) {
        assert_eq!(rat_from_str(&rat_to_string(&r)).unwrap(), r);
    }
});
