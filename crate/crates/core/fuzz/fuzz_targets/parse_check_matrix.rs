#![no_main]
use libfuzzer_sys::fuzz_target;

use eaqecc::pauli::CheckMatrix;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(m) = CheckMatrix::parse(text) {
            let reparsed = CheckMatrix::parse(&m.to_string()).unwrap();
            assert_eq!(m, reparsed);
            assert!(m.rank() <= m.len());
            for row in m.rows() {
                assert!(m.in_rowspace(row).unwrap());
            }
        }
    }
});
