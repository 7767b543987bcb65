#![no_main]

use libfuzzer_sys::fuzz_target;
use schubert::CycleClass;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(class) = CycleClass::parse(s, None) {
            // Coefficients are never stored at zero.
            assert!(class.terms().all(|(_, k)| k != 0));
            // print -> parse is the identity.
            let text = class.to_string();
            let again = CycleClass::parse(&text, None).unwrap();
            assert_eq!(again, class);
            assert_eq!(again.to_string(), text);
        }
    }
});
