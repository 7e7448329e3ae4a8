#![no_main]

use deuler_cli::document::parse_document;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((doc, values)) = parse_document(s) {
        assert_eq!(values.to_json(), doc.values);
        let _ = doc.to_csv();
        let _ = doc.to_human();
        let (again, _) = parse_document(&doc.to_json_string()).unwrap();
        assert_eq!(again, doc);
    }
});
