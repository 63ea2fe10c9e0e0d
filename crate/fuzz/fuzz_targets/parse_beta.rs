#![no_main]

use libfuzzer_sys::fuzz_target;
use qhlip_core::parse::parse_beta;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok((r, s)) = parse_beta(s) {
            assert!(r > 0 && s > 0);
        }
    }
});
