#![no_main]

use libfuzzer_sys::fuzz_target;
use zll::numbers::FermatInput;
use zll_core::functional::fermat_rational;

fuzz_target!(|data: &str| {
    let Ok(input) = FermatInput::parse(data) else {
        return;
    };
    if input.n > 64 {
        return;
    }
    if let Ok(r) = fermat_rational(&input.x, &input.y, &input.z, input.n) {
        assert!(!r.equals_one, "counterexample to Fermat: {data}");
    }
});
