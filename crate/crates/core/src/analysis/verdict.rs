//! Tameness verdicts for expansions of the real ordered additive group by a
//! regular set.
//!
//! The labels are transcribed from the classification theorem and are not
//! tested model-theoretically: sparse sets give d-minimal NIP expansions,
//! non-sparse sets whose coordinate closures all have dimension below one
//! give TP2 expansions, and a coordinate of full dimension leaves the
//! theorem's hypothesis unmet.

use alloc::vec::Vec;
use core::fmt;

use crate::analysis::cantor::DIM_TOLERANCE;
use crate::analysis::dimension::hausdorff_dim;
use crate::analysis::sparsity::non_sparse_witness;
use crate::automaton::BuchiAutomaton;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TamenessLabel {
    DMinimalNip,
    Tp2,
    HypothesisFails,
}

impl fmt::Display for TamenessLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TamenessLabel::DMinimalNip => "DMinimal_NIP",
            TamenessLabel::Tp2 => "TP2",
            TamenessLabel::HypothesisFails => "HypothesisFails",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TamenessVerdict {
    pub sparse: bool,
    /// Dimension of the closure of each coordinate projection.
    pub coordinate_dims: Vec<f64>,
    pub label: TamenessLabel,
}

pub fn tameness_verdict(a: &BuchiAutomaton) -> Result<TamenessVerdict> {
    let a = a.trim()?;
    let sparse = non_sparse_witness(&a).is_none();
    let coordinate_dims = (1..=a.arity())
        .map(|i| Ok(hausdorff_dim(&a.project(i)?.trim()?.close()?)?.value))
        .collect::<Result<Vec<f64>>>()?;
    let full = coordinate_dims.iter().any(|&d| d >= 1.0 - DIM_TOLERANCE);
    let label = if sparse {
        TamenessLabel::DMinimalNip
    } else if full {
        TamenessLabel::HypothesisFails
    } else {
        TamenessLabel::Tp2
    };
    Ok(TamenessVerdict {
        sparse,
        coordinate_dims,
        label,
    })
}
