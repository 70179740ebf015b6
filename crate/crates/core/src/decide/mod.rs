//! Decision procedures for R-universality.

mod closed;
mod engine;
mod search;
mod sums;

use std::fmt;

use serde::Serialize;

pub use closed::decide;
pub use engine::{decide_weight, generic_engine, q_irreducible_dimension};
pub use search::{find_runiversal_qform, RealFormQuery, SearchBound};
pub use sums::{decide_direct_sum, decide_res_scalars, CONDITION_3_CITATION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Universal {
    Yes,
    No,
    Indeterminate,
}

impl fmt::Display for Universal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Universal::Yes => "Yes",
            Universal::No => "No",
            Universal::Indeterminate => "Indeterminate",
        })
    }
}

/// One tested criterion: its id, the invariants it read, and where the rule comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub criterion: String,
    pub values: String,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub universal: Universal,
    pub trace: Vec<TraceEntry>,
}

impl Verdict {
    pub(crate) fn single(
        universal: Universal,
        criterion: &str,
        values: impl Into<String>,
        citation: &str,
    ) -> Verdict {
        let mut v = Verdict { universal, trace: Vec::new() };
        v.push(criterion, values, citation);
        v
    }

    pub(crate) fn push(&mut self, criterion: &str, values: impl Into<String>, citation: &str) {
        self.trace.push(TraceEntry {
            criterion: criterion.to_string(),
            values: values.into(),
            citation: citation.to_string(),
        });
    }

    pub fn is_yes(&self) -> bool {
        self.universal == Universal::Yes
    }
}

pub(crate) fn yes_no(b: bool) -> Universal {
    if b {
        Universal::Yes
    } else {
        Universal::No
    }
}
