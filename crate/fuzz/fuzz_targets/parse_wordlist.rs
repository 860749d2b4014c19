#![no_main]

use chaindd::{DiagramKind, Manager};
use chaindd_bench::{decode_words, encode_wordlist, parse_wordlist, EncodingMode, SymbolEncoding};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let words = parse_wordlist(text);
    let Some(len) = words.iter().map(|w| w.chars().count()).max() else { return };
    if words.len() > 64 || len > 12 {
        return;
    }
    for mode in [EncodingMode::OneHot, EncodingMode::Binary] {
        let enc = SymbolEncoding::compact(mode, words.iter().map(String::as_str), len);
        for kind in [DiagramKind::Bdd, DiagramKind::Czdd] {
            let Ok(mut m) = Manager::new(kind, enc.num_vars()) else { return };
            let f = encode_wordlist(&mut m, &words, &enc).unwrap();
            assert_eq!(m.count_solutions(f).unwrap(), words.len().into());
            assert_eq!(decode_words(&m, f, &enc, usize::MAX).unwrap(), words);
        }
    }
});
