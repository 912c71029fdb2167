#![no_main]

use libfuzzer_sys::fuzz_target;
use spinorcheck::isogeom::Subspace;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = serde_json::from_slice::<Subspace>(data) else { return };
    // decoding canonicalizes, so a second round trip is the identity
    let again: Subspace = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
    assert_eq!(again, s);
    assert!(s.dim() <= s.ambient());
    let ann = s.annihilator();
    assert_eq!(ann.dim() + s.dim(), s.ambient());
});
