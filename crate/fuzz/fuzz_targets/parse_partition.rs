#![no_main]

use libfuzzer_sys::fuzz_target;
use schubert::{BoxShape, Partition};

// Input: a box literal and a part list separated by `;`, e.g. `4x7;5,2,1`.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Some((box_text, parts_text)) = s.split_once(';') else {
        return;
    };
    let Ok(bx) = box_text.parse::<BoxShape>() else {
        return;
    };
    if let Ok(p) = Partition::parse_parts(bx, parts_text) {
        // Parsed partitions are valid in their box...
        assert!(p.parts().len() == bx.rows());
        assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        assert!(p.parts().iter().all(|&x| x <= bx.cols()));
        assert!(p.weight() <= bx.area());
        // ...and the full display form round-trips.
        let again = Partition::parse_parts(bx, &p.to_string()).unwrap();
        assert_eq!(again, p);
    }
});
