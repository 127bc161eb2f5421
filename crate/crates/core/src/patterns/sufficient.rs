use serde::{Deserialize, Serialize};

use super::{find_claw, find_f4};
use crate::chordality::has_induced_cycle_geq;
use crate::error::Result;
use crate::graph::Graph;

/// The three hypotheses of the claw / long hole / suspended `F4` test for a
/// chordal square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SufficientReport {
    pub claw_free: bool,
    /// No induced cycle of length 5 or more.
    pub no_long_hole: bool,
    pub all_f4_suspended: bool,
    /// All three hold, which guarantees a chordal square.
    pub applicable: bool,
}

/// Evaluates the three hypotheses. The `F4` part inherits the order bound
/// of the induced-cycle enumeration.
pub fn check_sufficient_chordalsq(g: &Graph) -> Result<SufficientReport> {
    let claw_free = find_claw(g).is_none();
    let no_long_hole = has_induced_cycle_geq(g, 5)?.is_none();
    let all_f4_suspended = find_f4(g)?.iter().all(|f| f.suspended_by.is_some());
    Ok(SufficientReport {
        claw_free,
        no_long_hole,
        all_f4_suspended,
        applicable: claw_free && no_long_hole && all_f4_suspended,
    })
}
