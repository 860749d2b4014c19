use chaindd::{Manager, NodeRef};

const MIN_THRESHOLD: usize = 1 << 20;

/// Runs a collection once the live node count has doubled since the last one.
#[derive(Debug, Clone)]
pub(crate) struct Collector {
    threshold: usize,
}

impl Collector {
    pub(crate) fn new() -> Self {
        Collector {
            threshold: MIN_THRESHOLD,
        }
    }

    pub(crate) fn maybe_collect(&mut self, m: &mut Manager, pins: &[NodeRef]) {
        if m.live_nodes() > self.threshold {
            m.gc(pins);
            self.threshold = MIN_THRESHOLD.max(2 * m.live_nodes());
        }
    }
}
