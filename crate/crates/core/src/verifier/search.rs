use std::time::{Duration, Instant};

/// Search was cut off by its node or time limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchExhausted;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Limits {
    pub node_limit: u64,
    pub deadline: Option<Instant>,
}

impl Limits {
    pub(crate) fn unlimited() -> Self {
        Limits { node_limit: u64::MAX, deadline: None }
    }

    pub(crate) fn new(node_limit: u64, time_limit: Option<Duration>) -> Self {
        Limits { node_limit, deadline: time_limit.map(|d| Instant::now() + d) }
    }
}

pub(crate) struct NodeCounter {
    limits: Limits,
    nodes: u64,
}

impl NodeCounter {
    pub(crate) fn new(limits: Limits) -> Self {
        NodeCounter { limits, nodes: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SearchExhausted> {
        self.nodes += 1;
        if self.nodes > self.limits.node_limit {
            return Err(SearchExhausted);
        }
        if self.nodes & 0x3ff == 0 {
            if let Some(d) = self.limits.deadline {
                if Instant::now() >= d {
                    return Err(SearchExhausted);
                }
            }
        }
        Ok(())
    }
}
