#![no_main]
use libfuzzer_sys::fuzz_target;
use semival::parse::parse_poly_list;
use semival::Field;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Err(e) = parse_poly_list(text, Field::Rational) {
        assert!(e.pos <= text.len());
    }
});
