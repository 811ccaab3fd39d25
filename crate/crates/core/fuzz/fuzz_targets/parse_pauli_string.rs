#![no_main]
use libfuzzer_sys::fuzz_target;

use eaqecc::pauli::SympVector;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(v) = SympVector::from_pauli_str(text) {
            // Display must round-trip and the weight is bounded by n.
            let reparsed = SympVector::from_pauli_str(&v.to_string()).unwrap();
            assert_eq!(v, reparsed);
            assert!(v.weight() <= v.n());
            assert!(!v.symplectic_product(&v).unwrap());
        }
    }
});
