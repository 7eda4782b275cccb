#![no_main]
use libfuzzer_sys::fuzz_target;
use semival::parse::parse_bipoly;
use semival::Field;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_bipoly(text, Field::Rational) {
        assert_eq!(parse_bipoly(&f.to_string(), Field::Rational).unwrap(), f);
    }
});
