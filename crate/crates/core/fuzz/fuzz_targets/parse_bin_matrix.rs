#![no_main]
use libfuzzer_sys::fuzz_target;

use eaqecc::pauli::BinMatrix;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(m) = BinMatrix::parse(text) {
            let reparsed = BinMatrix::parse(&m.to_string()).unwrap();
            assert_eq!(m, reparsed);
            assert!(m.rank() <= m.nrows().min(m.ncols()));
            // The Gram product against itself is symmetric.
            if let Ok(gram) = m.mul_transpose(&m) {
                for i in 0..gram.nrows() {
                    for j in 0..gram.ncols() {
                        assert_eq!(gram.get(i, j), gram.get(j, i));
                    }
                }
            }
        }
    }
});
