#![no_main]

use libfuzzer_sys::fuzz_target;
use zll::config::parse_config;

fuzz_target!(|data: &str| {
    if let Ok(map) = parse_config(data) {
        // every accepted entry must survive a round trip through the text form
        let text: String = map.iter().map(|(k, v)| format!("{k} = {v}\n")).collect();
        assert_eq!(parse_config(&text).ok(), Some(map));
    }
});
