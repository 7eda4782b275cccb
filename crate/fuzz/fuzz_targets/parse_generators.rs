#![no_main]
use libfuzzer_sys::fuzz_target;
use semival::parse::parse_generators;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(gens) = parse_generators(text) {
        assert!(!gens.is_empty() && gens.iter().all(|&g| g > 0));
    }
});
