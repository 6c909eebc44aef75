#![no_main]

use libfuzzer_sys::fuzz_target;
use zll::numbers::{parse_number, parse_number_list};

fuzz_target!(|data: &str| {
    if let Ok(xs) = parse_number_list(data) {
        assert!(!xs.is_empty());
        assert!(xs.iter().all(|x| x.is_finite()));
    }
    let _ = parse_number(data);
});
