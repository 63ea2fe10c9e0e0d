#![no_main]

use libfuzzer_sys::fuzz_target;
use qhlip_core::parse::{parse_uni, Bindings};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = parse_uni(s, &Bindings::new()) {
        let again = parse_uni(&p.to_string(), &Bindings::new()).expect("printed form parses");
        assert_eq!(p, again);
    }
});
