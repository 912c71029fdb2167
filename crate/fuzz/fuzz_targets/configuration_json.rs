#![no_main]

use libfuzzer_sys::fuzz_target;
use spinorcheck::liftconfig::Configuration;

fuzz_target!(|data: &[u8]| {
    let Ok(c) = serde_json::from_slice::<Configuration>(data) else { return };
    c.check_shape().unwrap();
    let again: Configuration = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
    assert_eq!(again, c);
});
