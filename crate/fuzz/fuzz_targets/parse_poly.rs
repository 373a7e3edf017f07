//! Feed arbitrary text to the polynomial parser: no panics, and accepted
//! polynomials must round-trip through their display form.

#![no_main]

use libfuzzer_sys::fuzz_target;
use locnil::parse::parse_poly;
use num_bigint::BigInt;

fuzz_target!(|data: &[u8]| {
    if data.is_empty() || data.len() > 128 {
        return;
    }
    let n = BigInt::from(2 + (data[0] as u64) % 63);
    let Ok(text) = std::str::from_utf8(&data[1..]) else { return };
    if let Ok(f) = parse_poly(&n, text) {
        assert_eq!(parse_poly(&n, &f.to_string()).unwrap(), f);
    }
});
