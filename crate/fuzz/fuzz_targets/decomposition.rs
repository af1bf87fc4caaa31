#![no_main]

use cind::structure::assemble;
use cind_cli::format::{emit_decomposition, parse_decomposition};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(dec) = parse_decomposition(data) else {
        return;
    };
    if dec.validate().is_err() {
        return;
    }
    let g = assemble(&dec).expect("validated decompositions assemble");
    assert!(g.is_cubic() && g.is_connected());
    assert_eq!(g.n(), dec.graph_order());
    let again = parse_decomposition(emit_decomposition(&dec).as_bytes()).unwrap();
    assert_eq!(again, dec);
});
