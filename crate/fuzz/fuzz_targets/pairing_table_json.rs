#![no_main]

use libfuzzer_sys::fuzz_target;
use spinorcheck::bstower::{self, PairingTable};

fuzz_target!(|data: &[u8]| {
    let Ok(t) = serde_json::from_slice::<PairingTable>(data) else { return };
    let _ = t.render(true);
    let _ = t.is_symmetric();
    if t.len() <= 64 && t.rows().iter().flatten().all(|x| x.abs() < 1 << 20) {
        let _ = bstower::tangent_sum(&t);
    }
});
