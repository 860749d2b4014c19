use std::hash::{BuildHasher, Hash};

use rustc_hash::FxBuildHasher;

use crate::node::NodeRef;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct CacheKey {
    pub op: u8,
    pub args: [NodeRef; 3],
}

#[derive(Clone, Copy)]
struct Entry {
    key: CacheKey,
    result: NodeRef,
}

/// Direct-mapped computed table. A colliding insert overwrites the slot, so
/// lookups may miss on previously computed results; they never return a
/// result for a different key. Slots are allocated on the first insert.
pub(crate) struct ComputedCache {
    slots: Vec<Option<Entry>>,
    len: usize,
    mask: usize,
    max_len: usize,
    hasher: FxBuildHasher,
}

pub(crate) const DEFAULT_CACHE_SLOTS: usize = 1 << 18;
pub(crate) const MAX_CACHE_SLOTS: usize = 1 << 24;

impl ComputedCache {
    /// `slots` is rounded up to a power of two; `max_slots` bounds growth.
    pub fn new(slots: usize, max_slots: usize) -> Self {
        let len = slots.max(1).next_power_of_two();
        ComputedCache {
            slots: Vec::new(),
            len,
            mask: len - 1,
            max_len: max_slots.max(len).next_power_of_two(),
            hasher: FxBuildHasher,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    fn slot(&self, key: &CacheKey) -> usize {
        (self.hasher.hash_one(key) as usize) & self.mask
    }

    #[inline]
    pub fn get(&self, key: &CacheKey) -> Option<NodeRef> {
        match self.slots.get(self.slot(key)).copied().flatten() {
            Some(e) if e.key == *key => Some(e.result),
            _ => None,
        }
    }

    #[inline]
    pub fn insert(&mut self, key: CacheKey, result: NodeRef) {
        if self.slots.is_empty() {
            self.slots = vec![None; self.len];
        }
        let i = self.slot(&key);
        self.slots[i] = Some(Entry { key, result });
    }

    pub fn clear(&mut self) {
        self.slots.iter_mut().for_each(|s| *s = None);
    }

    /// Grow toward the live node count, dropping current contents.
    pub fn maybe_grow(&mut self, live_nodes: usize) {
        if live_nodes > self.len && self.len < self.max_len {
            let len = live_nodes.next_power_of_two().min(self.max_len);
            self.slots = Vec::new();
            self.len = len;
            self.mask = len - 1;
        }
    }
}
