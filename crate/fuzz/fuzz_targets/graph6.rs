#![no_main]

use cind_cli::format::{decode_graph6, encode_graph6, parse_graphs, Format};
use libfuzzer_sys::fuzz_target;

// Whatever decodes must re-encode to an equivalent string.
fuzz_target!(|data: &[u8]| {
    if let Ok(g) = decode_graph6(data) {
        let text = encode_graph6(&g);
        assert_eq!(decode_graph6(text.as_bytes()).unwrap(), g);
    }
    let _ = parse_graphs(data, Format::Auto);
});
