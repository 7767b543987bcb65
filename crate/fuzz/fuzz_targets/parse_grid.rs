#![no_main]

use libfuzzer_sys::fuzz_target;
use schubert::MaskedGrid;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(grid) = MaskedGrid::parse(s) {
            assert_eq!(grid.render(), s);
            assert!(grid.free_count() + grid.zeroed().len() == grid.rows() * grid.cols());
        }
    }
});
