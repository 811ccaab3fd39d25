#![no_main]
use libfuzzer_sys::fuzz_target;

use eaqecc::gf4::Gf4Matrix;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(m) = Gf4Matrix::parse(text) {
            let reparsed = Gf4Matrix::parse(&m.to_string()).unwrap();
            assert_eq!(m, reparsed);
            assert_eq!(m.dagger().dagger(), m);
            // The expansion keeps the GF(4) row space (its new rows are
            // scalar multiples); the GF(2) image doubles the rank.
            let expanded = m.expand_ctq();
            assert_eq!(expanded.nrows(), 2 * m.nrows());
            assert_eq!(expanded.rank(), m.rank());
            assert_eq!(expanded.to_symplectic().rank(), 2 * m.rank());
        }
    }
});
