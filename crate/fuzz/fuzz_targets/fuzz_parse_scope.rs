//! Fuzzes the sweep-scope parser (`exhaustive` / `sample:<count>:<seed>`)
//! and checks the string round trip on every accepted input.

#![no_main]

use bcinv::codec::{parse_scope, scope_to_string};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(scope) = parse_scope(s) {
        assert_eq!(parse_scope(&scope_to_string(scope)).unwrap(), scope);
    }
});
