#![no_main]

use libfuzzer_sys::fuzz_target;
use spinorcheck::liftconfig::{self, Configuration, IsotropicFlag};

fuzz_target!(|data: &[u8]| {
    let Ok(flag) = serde_json::from_slice::<IsotropicFlag>(data) else { return };
    assert_eq!(flag.u4().dim(), 4);
    let base = Configuration::base(&flag);
    assert!(liftconfig::validate_configuration(&base, &flag).unwrap().holds());
    let _ = liftconfig::schubert_membership(flag.w5(), &flag);
});
