#![no_main]
use libfuzzer_sys::fuzz_target;
use semival::parse::parse_univariate;
use semival::Field;

// First byte picks the coefficient field.
fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let field = match sel % 3 {
        0 => Field::Rational,
        1 => Field::Prime(2),
        _ => Field::Prime(101),
    };
    if let Ok(f) = parse_univariate(text, field) {
        // printed form must parse back to the same polynomial
        assert_eq!(parse_univariate(&f.to_string(), field).unwrap(), f);
    }
});
