//! Fixed-length symbol encodings for word lists.

use std::fmt;
use std::str::FromStr;

use chaindd::Level;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EncodingMode {
    OneHot,
    Binary,
}

impl EncodingMode {
    pub fn name(self) -> &'static str {
        match self {
            EncodingMode::OneHot => "one-hot",
            EncodingMode::Binary => "binary",
        }
    }
}

impl fmt::Display for EncodingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EncodingMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "one-hot" | "onehot" => Ok(EncodingMode::OneHot),
            "binary" => Ok(EncodingMode::Binary),
            _ => Err(format!("unknown encoding `{s}` (expected one-hot or binary)")),
        }
    }
}

/// Bits needed to give every one of `r` symbols its own binary code.
pub fn binary_width(r: usize) -> usize {
    let mut w = 1;
    while (1usize << w) < r {
        w += 1;
    }
    w
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alphabet {
    /// Only the characters that occur in the corpus, in code point order.
    Compact(Vec<char>),
    /// All 128 ASCII characters.
    Ascii,
}

/// Maps words of at most `max_len` symbols onto Boolean variables. Symbol
/// code 0 is the null terminator; variables are position-major, so symbol
/// position `p` (0-based) owns levels `p*bits+1 ..= (p+1)*bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolEncoding {
    pub mode: EncodingMode,
    pub alphabet: Alphabet,
    pub max_len: usize,
}

impl SymbolEncoding {
    pub fn compact<'a>(mode: EncodingMode, words: impl IntoIterator<Item = &'a str>, max_len: usize) -> Self {
        let mut chars: Vec<char> = words.into_iter().flat_map(str::chars).collect();
        chars.sort_unstable();
        chars.dedup();
        SymbolEncoding {
            mode,
            alphabet: Alphabet::Compact(chars),
            max_len,
        }
    }

    pub fn ascii(mode: EncodingMode, max_len: usize) -> Self {
        SymbolEncoding {
            mode,
            alphabet: Alphabet::Ascii,
            max_len,
        }
    }

    pub fn alphabet_name(&self) -> &'static str {
        match self.alphabet {
            Alphabet::Compact(_) => "compact",
            Alphabet::Ascii => "ascii",
        }
    }

    /// Symbol count including null.
    pub fn radix(&self) -> usize {
        match &self.alphabet {
            Alphabet::Compact(chars) => chars.len() + 1,
            Alphabet::Ascii => 129,
        }
    }

    pub fn bits_per_symbol(&self) -> usize {
        match self.mode {
            EncodingMode::OneHot => self.radix(),
            EncodingMode::Binary => binary_width(self.radix()),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.bits_per_symbol() * self.max_len
    }

    pub fn code(&self, c: char) -> Option<usize> {
        match &self.alphabet {
            Alphabet::Compact(chars) => chars.binary_search(&c).ok().map(|i| i + 1),
            Alphabet::Ascii => c.is_ascii().then_some(c as usize + 1),
        }
    }

    pub fn symbol(&self, code: usize) -> Option<char> {
        match &self.alphabet {
            Alphabet::Compact(chars) => code.checked_sub(1).and_then(|i| chars.get(i).copied()),
            Alphabet::Ascii => code
                .checked_sub(1)
                .filter(|&c| c < 128)
                .map(|c| c as u8 as char),
        }
    }

    pub fn level(&self, pos: usize, bit: usize) -> Level {
        (pos * self.bits_per_symbol() + bit + 1) as Level
    }

    /// Literals fixing position `pos` to symbol `code`.
    pub fn literals(&self, pos: usize, code: usize) -> Vec<(Level, bool)> {
        let bps = self.bits_per_symbol();
        match self.mode {
            EncodingMode::OneHot => (0..bps).map(|j| (self.level(pos, j), j == code)).collect(),
            EncodingMode::Binary => (0..bps)
                .map(|j| (self.level(pos, j), (code >> (bps - 1 - j)) & 1 == 1))
                .collect(),
        }
    }

    /// Symbol code at `pos` in an assignment, or `None` for a bit pattern
    /// that is not a valid code.
    pub fn decode_position(&self, bits: &[bool], pos: usize) -> Option<usize> {
        let bps = self.bits_per_symbol();
        let slice = &bits[pos * bps..(pos + 1) * bps];
        match self.mode {
            EncodingMode::OneHot => {
                let mut ones = slice.iter().enumerate().filter(|(_, &b)| b);
                let (j, _) = ones.next()?;
                ones.next().is_none().then_some(j)
            }
            EncodingMode::Binary => {
                let code = slice.iter().fold(0, |acc, &b| (acc << 1) | b as usize);
                (code < self.radix()).then_some(code)
            }
        }
    }
}
