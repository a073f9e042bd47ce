//! Solution checkers for the three variants.
//!
//! Each checker reports at most one [`Violation`], the first one found in the
//! declaration order of the enum.

use std::fmt;

use crate::error::ModelError;
use crate::model::{check_indices, Instance, SolutionPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    NonIncreasingIndices,
    IndexOutOfRange,
    LengthMismatch,
    /// Carries the 1-based position in `A` of the first color disagreement.
    ColorMismatchAt(usize),
    CharMultisetMismatch,
    KZero,
    MNotPermutation,
    IncompleteMCover,
}

impl Violation {
    pub fn name(&self) -> &'static str {
        match self {
            Violation::NonIncreasingIndices => "non_increasing_indices",
            Violation::IndexOutOfRange => "index_out_of_range",
            Violation::LengthMismatch => "length_mismatch",
            Violation::ColorMismatchAt(_) => "color_mismatch_at",
            Violation::CharMultisetMismatch => "char_multiset_mismatch",
            Violation::KZero => "k_zero",
            Violation::MNotPermutation => "m_not_permutation",
            Violation::IncompleteMCover => "incomplete_m_cover",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ColorMismatchAt(p) => write!(f, "color_mismatch_at({p})"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyResult {
    pub violation: Option<Violation>,
}

impl VerifyResult {
    pub fn ok(&self) -> bool {
        self.violation.is_none()
    }

    fn from(r: Result<(), Violation>) -> Self {
        Self { violation: r.err() }
    }
}

fn general(inst: &Instance, sol: &SolutionPair) -> Result<(), Violation> {
    let (m, a) = (inst.m(), inst.a());
    for (idx, len) in [(&sol.idx_m, m.len()), (&sol.idx_a, a.len())] {
        match check_indices(idx, len) {
            Ok(()) => {}
            Err(ModelError::NonIncreasing) => return Err(Violation::NonIncreasingIndices),
            Err(_) => return Err(Violation::IndexOutOfRange),
        }
    }
    if sol.idx_m.len() != sol.idx_a.len() {
        return Err(Violation::LengthMismatch);
    }
    for (&pm, &pa) in sol.idx_m.iter().zip(&sol.idx_a) {
        if m.blocks()[pm - 1].color != a.blocks()[pa - 1].color {
            return Err(Violation::ColorMismatchAt(pa));
        }
    }
    // Indices were validated above.
    let cm = m.char_multiset(&sol.idx_m).expect("checked indices");
    let ca = a.char_multiset(&sol.idx_a).expect("checked indices");
    if cm != ca {
        return Err(Violation::CharMultisetMismatch);
    }
    if sol.idx_m.is_empty() {
        return Err(Violation::KZero);
    }
    Ok(())
}

fn omdci(inst: &Instance, sol: &SolutionPair) -> Result<(), Violation> {
    general(inst, sol)?;
    if !inst.m().is_permutation_string() {
        return Err(Violation::MNotPermutation);
    }
    Ok(())
}

fn plus(inst: &Instance, sol: &SolutionPair) -> Result<(), Violation> {
    omdci(inst, sol)?;
    let full =
        sol.idx_m.len() == inst.m().len() && sol.idx_m.iter().enumerate().all(|(i, &p)| p == i + 1);
    if !full {
        return Err(Violation::IncompleteMCover);
    }
    Ok(())
}

/// Positionwise color agreement plus equal character multisets, with `k > 0`.
pub fn verify_general(inst: &Instance, sol: &SolutionPair) -> VerifyResult {
    VerifyResult::from(general(inst, sol))
}

/// [`verify_general`] plus a permutation pattern.
pub fn verify_omdci(inst: &Instance, sol: &SolutionPair) -> VerifyResult {
    VerifyResult::from(omdci(inst, sol))
}

/// [`verify_omdci`] plus the whole of `M` being matched.
pub fn verify_plus(inst: &Instance, sol: &SolutionPair) -> VerifyResult {
    VerifyResult::from(plus(inst, sol))
}

/// Dispatches on the instance's own variant tag.
pub fn verify(inst: &Instance, sol: &SolutionPair) -> VerifyResult {
    use crate::model::Variant;
    match inst.variant() {
        Variant::General => verify_general(inst, sol),
        Variant::Omdci => verify_omdci(inst, sol),
        Variant::OmdciPlus => verify_plus(inst, sol),
    }
}
