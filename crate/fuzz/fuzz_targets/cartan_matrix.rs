#![no_main]

use libfuzzer_sys::fuzz_target;
use spinorcheck::rootsys::{CartanMatrix, RootSystem};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(c) = text.parse::<CartanMatrix>() else { return };
    // accepted matrices are of finite type, so the root system is finite
    if c.rank() <= 6 {
        let rs = RootSystem::new(c);
        assert!(rs.positive_roots().iter().all(|r| r.is_positive()));
    }
});
