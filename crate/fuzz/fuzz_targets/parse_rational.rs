#![no_main]

use deuler::Rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = s.parse::<Rational>() {
        let shown = r.to_string();
        assert_eq!(shown.parse::<Rational>().unwrap(), r);
    }
});
