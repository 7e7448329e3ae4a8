#![no_main]

use deuler_cli::codec::{xl_poly_from_json, xl_poly_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else {
        return;
    };
    if let Ok(p) = xl_poly_from_json(&v) {
        assert_eq!(xl_poly_to_json(&p), v);
    }
});
