#![no_main]

use cind_cli::format::{emit_edgelist, parse_edgelist};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_edgelist(data) {
        assert_eq!(parse_edgelist(emit_edgelist(&g).as_bytes()).unwrap(), g);
    }
});
