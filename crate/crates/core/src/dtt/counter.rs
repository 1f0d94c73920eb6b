//! Per-thread tally of transform applications.
//!
//! Every call to [`super::DttPlan::apply`] is recorded on the calling thread,
//! which lets callers audit how many cosine and sine transforms a routine
//! spends, and of what sizes.

use std::cell::Cell;

use super::Flavor;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FlavorTally {
    pub calls: usize,
    pub min_size: usize,
    pub max_size: usize,
}

impl FlavorTally {
    fn record(&mut self, size: usize) {
        if self.calls == 0 {
            self.min_size = size;
            self.max_size = size;
        } else {
            self.min_size = self.min_size.min(size);
            self.max_size = self.max_size.max(size);
        }
        self.calls += 1;
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TransformTally {
    pub cosine: FlavorTally,
    pub sine: FlavorTally,
}

thread_local! {
    static TALLY: Cell<TransformTally> = const { Cell::new(TransformTally {
        cosine: FlavorTally { calls: 0, min_size: 0, max_size: 0 },
        sine: FlavorTally { calls: 0, min_size: 0, max_size: 0 },
    }) };
}

pub(crate) fn record(flavor: Flavor, size: usize) {
    TALLY.with(|t| {
        let mut v = t.get();
        match flavor {
            Flavor::Cosine => v.cosine.record(size),
            Flavor::Sine => v.sine.record(size),
        }
        t.set(v);
    });
}

/// Current tally for this thread.
pub fn transform_tally() -> TransformTally {
    TALLY.with(Cell::get)
}

pub fn reset_transform_tally() {
    TALLY.with(|t| t.set(TransformTally::default()));
}
