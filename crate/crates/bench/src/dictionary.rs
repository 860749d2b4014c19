//! Word lists as characteristic functions over fixed-length symbol strings.

use std::collections::BTreeMap;

use chaindd::{Manager, NodeRef};

use crate::collect::Collector;
use crate::encoding::SymbolEncoding;
use crate::error::{BenchError, Result};

/// One word per line. Blank lines are skipped and duplicates removed; the
/// result is sorted.
pub fn parse_wordlist(text: &str) -> Vec<String> {
    let mut words: Vec<String> = text
        .lines()
        .map(|l| l.trim_end_matches('\r'))
        .filter(|l| !l.is_empty())
        .map(str::to_owned)
        .collect();
    words.sort();
    words.dedup();
    words
}

#[derive(Debug, Default, Clone)]
struct TrieNode {
    children: BTreeMap<usize, usize>,
    terminal: bool,
}

/// Prefix tree over symbol codes.
#[derive(Debug, Clone)]
pub struct Trie {
    nodes: Vec<TrieNode>,
}

impl Default for Trie {
    fn default() -> Self {
        Trie {
            nodes: vec![TrieNode::default()],
        }
    }
}

impl Trie {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, codes: &[usize]) {
        let mut at = 0;
        for &c in codes {
            at = match self.nodes[at].children.get(&c) {
                Some(&next) => next,
                None => {
                    self.nodes.push(TrieNode::default());
                    let next = self.nodes.len() - 1;
                    self.nodes[at].children.insert(c, next);
                    next
                }
            };
        }
        self.nodes[at].terminal = true;
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.len() == 1 && !self.nodes[0].terminal && self.nodes[0].children.is_empty()
    }

    /// All stored code sequences in lexicographic order.
    pub fn sequences(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.walk(0, &mut path, &mut out);
        out
    }

    fn walk(&self, at: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if self.nodes[at].terminal {
            out.push(path.clone());
        }
        for (&c, &next) in &self.nodes[at].children {
            path.push(c);
            self.walk(next, path, out);
            path.pop();
        }
    }
}

fn codes(enc: &SymbolEncoding, word: &str) -> Result<Vec<usize>> {
    let codes = word
        .chars()
        .map(|c| {
            enc.code(c).ok_or_else(|| BenchError::Alphabet {
                word: word.to_owned(),
                symbol: c,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if codes.len() > enc.max_len {
        return Err(BenchError::WordTooLong {
            word: word.to_owned(),
            len: codes.len(),
            max: enc.max_len,
        });
    }
    Ok(codes)
}

pub fn build_trie(enc: &SymbolEncoding, words: &[String]) -> Result<Trie> {
    let mut trie = Trie::new();
    for w in words {
        trie.insert(&codes(enc, w)?);
    }
    Ok(trie)
}

struct Builder<'a> {
    m: &'a mut Manager,
    enc: &'a SymbolEncoding,
    trie: &'a Trie,
    ends: Vec<NodeRef>,
    pins: Vec<NodeRef>,
    gc: Collector,
}

impl Builder<'_> {
    fn pinned(&self) -> Vec<NodeRef> {
        self.ends.iter().chain(&self.pins).copied().collect()
    }

    fn build(&mut self, at: usize, pos: usize) -> Result<NodeRef> {
        let node = &self.trie.nodes[at];
        let acc = if node.terminal { self.ends[pos] } else { NodeRef::LEAF0 };
        let slot = self.pins.len();
        self.pins.push(acc);
        let children: Vec<(usize, usize)> = node.children.iter().map(|(&c, &n)| (c, n)).collect();
        for (code, child) in children {
            let f = self.build(child, pos + 1)?;
            self.pins.push(f);
            let cube = self.m.cube(&self.enc.literals(pos, code))?;
            let t = self.m.and(cube, f)?;
            let acc = self.m.or(self.pins[slot], t)?;
            self.pins.truncate(slot);
            self.pins.push(acc);
            let pins = self.pinned();
            self.gc.maybe_collect(self.m, &pins);
        }
        Ok(self.pins.pop().expect("slot pushed above"))
    }
}

/// Characteristic function of `words`, padded with null symbols to the
/// encoding's fixed length. `m` must have `enc.num_vars()` variables.
pub fn encode_wordlist(m: &mut Manager, words: &[String], enc: &SymbolEncoding) -> Result<NodeRef> {
    if m.num_vars() as usize != enc.num_vars() {
        return Err(BenchError::Usage(format!(
            "encoding needs {} variables, manager has {}",
            enc.num_vars(),
            m.num_vars()
        )));
    }
    let trie = build_trie(enc, words)?;
    if trie.is_empty() {
        return Ok(NodeRef::LEAF0);
    }
    let l = enc.max_len;
    // ends[q]: positions q.. all null
    let mut ends = Vec::with_capacity(l + 1);
    for q in 0..=l {
        let lits: Vec<_> = (q..l).flat_map(|p| enc.literals(p, 0)).collect();
        ends.push(m.cube(&lits)?);
    }
    let mut b = Builder {
        m,
        enc,
        trie: &trie,
        ends,
        pins: Vec::new(),
        gc: Collector::new(),
    };
    b.build(0, 0)
}

/// Decode up to `limit` words back out of a word-set function, sorted.
pub fn decode_words(m: &Manager, root: NodeRef, enc: &SymbolEncoding, limit: usize) -> Result<Vec<String>> {
    let minterms = m.enumerate_minterms(root, limit)?;
    let mut words = minterms
        .iter()
        .map(|mt| {
            let bad = || BenchError::Usage(format!("assignment {mt} is not a padded word"));
            let mut word = String::new();
            let mut ended = false;
            for p in 0..enc.max_len {
                let code = enc.decode_position(mt.bits(), p).ok_or_else(bad)?;
                match (code, ended) {
                    (0, _) => ended = true,
                    (_, true) => return Err(bad()),
                    (c, false) => word.push(enc.symbol(c).ok_or_else(bad)?),
                }
            }
            Ok(word)
        })
        .collect::<Result<Vec<_>>>()?;
    words.sort();
    Ok(words)
}
