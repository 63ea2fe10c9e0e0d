#![no_main]

use libfuzzer_sys::fuzz_target;
use qhlip_core::parse::parse_rational;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(q) = parse_rational(s) {
            assert_eq!(parse_rational(&q.to_string()), Ok(q));
        }
    }
});
