#![no_main]

use libfuzzer_sys::fuzz_target;
use schubert::BoxShape;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(bx) = s.parse::<BoxShape>() {
            assert!(bx.rows() >= 1);
            // The display form is canonical and parses back to the same box.
            let again: BoxShape = bx.to_string().parse().unwrap();
            assert_eq!(again, bx);
        }
    }
});
