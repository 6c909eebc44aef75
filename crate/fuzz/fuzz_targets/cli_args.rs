#![no_main]

use libfuzzer_sys::fuzz_target;
use zll::parse_cli;

fuzz_target!(|data: &str| {
    let mut argv = vec!["zll".to_string()];
    argv.extend(data.split_whitespace().map(str::to_string));
    // parsing only; nothing is executed
    let _ = parse_cli(&argv, None);
});
