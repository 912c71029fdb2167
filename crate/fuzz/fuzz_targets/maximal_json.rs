#![no_main]

use libfuzzer_sys::fuzz_target;
use spinorcheck::isogeom::{MaximalIsotropic, QuadraticSpace};

fuzz_target!(|data: &[u8]| {
    let Ok(m) = serde_json::from_slice::<MaximalIsotropic>(data) else { return };
    let qs = QuadraticSpace::for_subspace(m.space()).unwrap();
    assert!(qs.is_totally_isotropic(m.space()));
    assert_eq!(qs.family_of(m.space()).unwrap(), m.family());
    assert_eq!(qs.perp(m.space()).unwrap(), *m.space());
});
