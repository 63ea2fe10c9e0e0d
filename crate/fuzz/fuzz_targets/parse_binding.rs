#![no_main]

use libfuzzer_sys::fuzz_target;
use qhlip_core::parse::parse_binding;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok((name, q)) = parse_binding(s) {
            let again = parse_binding(&format!("{name}={q}")).expect("printed form parses");
            assert_eq!(again, (name, q));
        }
    }
});
