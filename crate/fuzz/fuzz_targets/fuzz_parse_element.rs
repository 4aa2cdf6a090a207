//! Fuzzes the element decoder on arbitrary JSON. A decoded element must
//! re-encode canonically and parse back equal, through both the
//! self-describing parser and the ring-directed one.

#![no_main]

use bcinv::codec::{element_to_json, parse_element, parse_element_with};
use libfuzzer_sys::fuzz_target;
use serde_json::Value as Json;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(v) = serde_json::from_str::<Json>(s) else {
        return;
    };
    if let Ok(x) = parse_element(&v) {
        let encoded = element_to_json(&x);
        assert_eq!(parse_element(&encoded).unwrap(), x);
        assert_eq!(parse_element_with(x.ring(), &encoded).unwrap(), x);
    }
});
