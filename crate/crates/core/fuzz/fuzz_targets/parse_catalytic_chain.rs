#![no_main]
use libfuzzer_sys::fuzz_target;

use eaqecc::cli::{parse_param_tuple, parse_step, Step};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(tuple) = parse_param_tuple(text) {
            assert!(tuple.n >= 1);
            assert!(tuple.c <= tuple.n);
        }
        if let Ok(step) = parse_step(text) {
            match step {
                Step::Ea(t) => assert!(t.n >= 1),
                Step::Std(t) => assert_eq!(t.c, 0),
                Step::Boot(_) => {}
            }
        }
    }
});
