//! Type sequence, the invariants `a(I)`, `b(I)`, `d(I)`, and executable
//! versions of the identities, bounds and classification results that tie
//! them together.
//!
//! Most operations go through [`SemigroupContext`], which caches the ideals
//! every computation needs (`m`, `γ`, `K`, `θ_D`) and the type sequence.

mod ideal_report;
mod overring;
mod ring;
mod gamma_profile;
mod type_sequence;

pub use ideal_report::{
    ab_invariants, d_invariant, decomposition_check, v_complement, IdealAnalysis,
    IdealInvariantReport,
};
pub use overring::{overring_check, OverringReport};
pub use ring::{ring_classification, semigroup_checks, sigma, MatlisData, RingClassification};
pub use gamma_profile::{classify_b, gamma_profile, Classification, ClassificationTag, GammaProfile};
pub use type_sequence::{
    extended_type_sequence, type_sequence, type_sequence_via_canonical, TypeSequence,
};

use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// Per-semigroup data shared by every invariant computation.
#[derive(Debug, Clone)]
pub struct SemigroupContext<'s> {
    pub semigroup: &'s NumericalSemigroup,
    pub whole: RelativeIdeal<'s>,
    pub maximal: RelativeIdeal<'s>,
    pub gamma: RelativeIdeal<'s>,
    pub canonical: RelativeIdeal<'s>,
    pub different: RelativeIdeal<'s>,
    pub type_sequence: TypeSequence,
    /// Cohen–Macaulay type.
    pub r: i64,
    pub c: i64,
    pub delta: i64,
    pub e: i64,
    pub n: usize,
    pub arf: bool,
}

impl<'s> SemigroupContext<'s> {
    pub fn new(s: &'s NumericalSemigroup) -> Self {
        let type_sequence = type_sequence(s);
        SemigroupContext {
            semigroup: s,
            whole: s.as_ideal(),
            maximal: s.maximal_ideal(),
            gamma: s.conductor_ideal(),
            canonical: s.canonical_ideal(),
            different: s.dedekind_different(),
            r: type_sequence.cm_type(),
            type_sequence,
            c: s.conductor(),
            delta: s.genus(),
            e: s.multiplicity(),
            n: s.n(),
            arf: s.is_arf_by_closure(),
        }
    }

    /// `r_h`, extended by 1 past `n`.
    pub fn r_h(&self, h: usize) -> i64 {
        self.type_sequence.r(h)
    }

    /// `2δ − c = a(γ)`.
    pub fn canonical_defect(&self) -> i64 {
        2 * self.delta - self.c
    }

    /// `b(γ) = r(c − δ) − δ`.
    pub fn b_gamma(&self) -> i64 {
        self.r * (self.c - self.delta) - self.delta
    }

    pub fn is_gorenstein(&self) -> bool {
        self.r == 1
    }

    /// `r − 1 = 2δ − c`.
    pub fn is_almost_gorenstein(&self) -> bool {
        self.r - 1 == self.canonical_defect()
    }

    /// `r(c − δ) = δ`.
    pub fn is_maximal_length(&self) -> bool {
        self.r * (self.c - self.delta) == self.delta
    }

    /// `σ = a(γ) − l(R/θ_D)`.
    pub fn sigma(&self) -> i64 {
        self.canonical_defect() - self.whole.length_over(&self.different).expect("θ_D ⊆ R") as i64
    }

    /// `l(X/Y)` for value sets known to be nested.
    pub(crate) fn len(&self, big: &RelativeIdeal<'_>, small: &RelativeIdeal<'_>) -> i64 {
        big.length_over(small)
            .unwrap_or_else(|e| panic!("length {big} / {small}: {e}")) as i64
    }
}
