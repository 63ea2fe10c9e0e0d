#![no_main]

use libfuzzer_sys::fuzz_target;
use qhlip_core::parse::{parse_bi, Bindings};
use qhlip_core::poly::int;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let mut b = Bindings::new();
    b.insert("l".to_string(), int(-2));
    if let Ok(p) = parse_bi(s, &b) {
        // printing and re-parsing must round-trip
        let again = parse_bi(&p.to_string(), &Bindings::new()).expect("printed form parses");
        assert_eq!(p, again);
    }
});
