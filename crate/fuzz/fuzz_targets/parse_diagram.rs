#![no_main]

use libfuzzer_sys::fuzz_target;
use schubert::Partition;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = Partition::parse_diagram(s) {
            // The parser accepts exactly the rendering grammar, so a parsed
            // diagram renders back to the input byte for byte.
            assert_eq!(p.render(), s);
        }
    }
});
