//! Fuzzes the ring-descriptor parser on arbitrary text, covering both the
//! compact form (`zmod:6`, `matfp:5:3`, ...) and the JSON object form.
//! Anything that parses must survive an encode/decode round trip unchanged.

#![no_main]

use bcinv::codec::{parse_ring, parse_ring_str, ring_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(ring) = parse_ring_str(s) {
        let encoded = ring_to_json(ring);
        assert_eq!(parse_ring(&encoded).unwrap(), ring);
    }
});
