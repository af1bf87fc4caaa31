#![no_main]

use cind_cli::format::{emit_vertex_set, parse_vertex_set};
use libfuzzer_sys::fuzz_target;

// First byte picks the universe size, the rest is the set text.
fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(s) = parse_vertex_set(text, n as usize) {
        assert_eq!(parse_vertex_set(&emit_vertex_set(&s), n as usize).unwrap(), s);
    }
});
