#![no_main]

use deuler_cli::{parse_lambda_arg, LambdaArg};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(arg) = parse_lambda_arg(s) {
        let again = parse_lambda_arg(&arg.label()).unwrap();
        assert_eq!(again, arg);
        if let LambdaArg::Value(r) = arg {
            assert!(!r.to_string().contains('.'));
        }
    }
});
