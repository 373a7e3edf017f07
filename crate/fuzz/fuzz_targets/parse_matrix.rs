//! Feed arbitrary text to the matrix parser: no panics, and accepted
//! matrices must survive the Smith-normal-form contract.

#![no_main]

use libfuzzer_sys::fuzz_target;
use locnil::matrix::smith_normal_form;
use locnil::parse::parse_matrix;

fuzz_target!(|data: &[u8]| {
    if data.len() > 128 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(a) = parse_matrix(text) {
        if a.rows() <= 6 && a.cols() <= 6 {
            let snf = smith_normal_form(&a);
            assert_eq!(snf.u.mul(&snf.s).unwrap().mul(&snf.v).unwrap(), a);
        }
    }
});
