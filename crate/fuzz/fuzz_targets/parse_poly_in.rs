#![no_main]
use libfuzzer_sys::fuzz_target;
use semival::parse::parse_poly_in;
use semival::Field;

const VARS: [&str; 4] = ["u", "X0", "X1", "X2"];

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = parse_poly_in(text, &VARS, Field::Rational);
});
