#![no_main]

use libfuzzer_sys::fuzz_target;
use spinorcheck::cycles::{self, CycleClass};
use spinorcheck::spinor;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(a) = text.parse::<CycleClass>() else { return };
    assert_eq!(a.to_string().parse::<CycleClass>().unwrap(), a);
    // entries are intersection numbers; keep them where products cannot overflow
    if a.as_slice().iter().all(|x| x.abs() < 1 << 32) {
        let t = spinor::standard_table();
        let _ = cycles::dimension_report(&a, &t);
    }
});
