//! Length of an overring `S ⊆ T ⊆ ℕ` through the conductor ideal `S − T`.

use serde::Serialize;

use super::SemigroupContext;
use crate::check::Check;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OverringReport {
    pub semigroup: String,
    pub oversemigroup: String,
    /// `l(T/S)`.
    pub length: i64,
    /// `S − T`, or `None` when `T = S`.
    pub conductor_ideal: Option<String>,
    pub i0: usize,
    pub d: i64,
    /// `l(T**/T)`.
    pub l_bidual_over_t: i64,
    pub checks: Vec<Check>,
}

pub fn overring_check(s: &NumericalSemigroup, t: &NumericalSemigroup) -> Result<OverringReport> {
    SemigroupContext::new(s).overring_report(t)
}

impl<'s> SemigroupContext<'s> {
    pub fn overring_report(&self, t: &NumericalSemigroup) -> Result<OverringReport> {
        let s = self.semigroup;
        if !s.is_subset_of(t) {
            return Err(Error::NotOversemigroup);
        }
        let mut report = OverringReport {
            semigroup: s.encoding(),
            oversemigroup: t.encoding(),
            length: 0,
            conductor_ideal: None,
            i0: 0,
            d: 0,
            l_bidual_over_t: 0,
            checks: Vec::new(),
        };
        if s == t {
            return Ok(report);
        }
        let t_ideal = RelativeIdeal::from_predicate(s, 0, t.conductor().max(1), |x| t.contains(x));
        let conductor = self.whole.colon(&t_ideal)?;
        let t_bidual = conductor.dual();
        let x = self.analyze(&conductor)?;
        let length = self.len(&t_ideal, &self.whole);
        let l_bidual_t = self.len(&t_bidual, &t_ideal);
        let comp_r: i64 = x.v_complement.iter().map(|&h| self.r_h(h)).sum();
        let chain_dual = s.chain_ideal(x.i0).dual();

        report.checks = vec![
            Check::eq("overring_formula_complement", length, comp_r - l_bidual_t - x.d),
            Check::le("overring_bound", length, self.r * x.l_r_over_i),
            Check::eq(
                "overring_formula_index",
                length,
                self.type_sequence.prefix_sum(x.i0) - l_bidual_t + self.len(&t_bidual, &chain_dual),
            ),
            Check::eq("overring_conductor_gamma", x.c_i, self.c),
        ];
        report.length = length;
        report.conductor_ideal = Some(conductor.encoding());
        report.i0 = x.i0;
        report.d = x.d;
        report.l_bidual_over_t = l_bidual_t;
        Ok(report)
    }
}
