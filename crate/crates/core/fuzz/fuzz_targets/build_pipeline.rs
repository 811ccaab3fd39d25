#![no_main]
use libfuzzer_sys::fuzz_target;

use eaqecc::code::EaqeccCode;
use eaqecc::gf4::{ebit_count_gf4, Gf4Matrix};

// Drives the whole construction pipeline on parsed input and checks the
// structural invariants that every code must satisfy.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(matrix) = Gf4Matrix::parse(text) else {
        return;
    };
    if matrix.ncols() == 0 || matrix.ncols() > 10 || matrix.nrows() > 10 {
        return;
    }
    let code = EaqeccCode::from_gf4(&matrix).expect("in-range matrices always build");

    // Entanglement matches the rank formula.
    assert_eq!(code.c(), ebit_count_gf4(&matrix));

    // Parameter accounting holds; params() itself asserts the net-rate
    // identity against the generator rank.
    let params = code.params();
    assert_eq!(params.k + params.s + params.c, params.n);

    // Every pair of augmented rows commutes.
    let rows = code.augmented().rows();
    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i + 1..] {
            assert!(!a.symplectic_product(b).unwrap());
        }
    }
});
