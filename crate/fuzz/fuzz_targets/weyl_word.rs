#![no_main]

use libfuzzer_sys::fuzz_target;
use spinorcheck::bstower;
use spinorcheck::rootsys::WeylWord;
use spinorcheck::spinor;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(w) = text.parse::<WeylWord>() else { return };
    assert_eq!(w.to_string().parse::<WeylWord>().unwrap(), w);
    // the empty word has no tower, hence no table
    if !w.is_empty() && w.len() <= 32 {
        let rs = spinor::root_system();
        // letters outside 1..=5 must be rejected, not panic
        if let Ok(true) = rs.is_reduced(&w) {
            let g = bstower::gamma_sequence(&rs, &w).unwrap();
            assert!(bstower::pairing_table(&rs, &g).unwrap().is_symmetric());
        }
    }
});
