//! Feed arbitrary text to the module-description parser: it must never
//! panic, and anything it accepts must render to a canonical fixed point.

#![no_main]

use libfuzzer_sys::fuzz_target;
use locnil::parse::{parse_module, render_module};
use locnil::ring::RingDesc;

fuzz_target!(|data: &[u8]| {
    if data.len() > 256 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    let ring = RingDesc::integers();
    if let Ok(m) = parse_module(&ring, text) {
        let rendered = render_module(&m);
        let reparsed = parse_module(&ring, &rendered).expect("canonical form parses");
        assert_eq!(render_module(&reparsed), rendered);
    }
});
