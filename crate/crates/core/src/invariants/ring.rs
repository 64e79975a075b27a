//! Semigroup-level identities and the Gorenstein / almost Gorenstein /
//! maximal length characterisations.

use serde::Serialize;

use super::{extended_type_sequence, type_sequence_via_canonical, IdealAnalysis, SemigroupContext};
use crate::check::Check;
use crate::error::Result;
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// `σ = a(γ) − l(R/θ_D)`.
pub fn sigma(s: &NumericalSemigroup) -> i64 {
    SemigroupContext::new(s).sigma()
}

/// Truth values of the seven almost-Gorenstein conditions, the starred ones
/// quantified over a finite family of proper ideals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatlisData {
    /// Type sequence `[r, 1, …, 1]`.
    pub type_sequence_shape: bool,
    /// `K + I = I**` for every non-principal ideal of the family.
    pub omega_product_bidual: bool,
    /// `l(I/J) = l(J*/I*)` for non-principal reflexive `J ⊆ I` of the family.
    pub reflexive_length_duality: bool,
    /// `l(I/γ_I) = l(R:γ_I / I*)` for non-principal reflexive `I` of the family.
    pub gamma_length_duality: bool,
    /// `a(I) = (r − 1) − l(I**/I)` for non-principal `I` of the family.
    pub a_formula: bool,
    /// `r − 1 = 2δ − c`.
    pub canonical_defect: bool,
    /// `K + m = m`.
    pub maximal_omega_stable: bool,
    pub family_size: usize,
    pub reflexive_pairs: usize,
}

impl MatlisData {
    pub fn values(&self) -> [bool; 7] {
        [
            self.type_sequence_shape,
            self.omega_product_bidual,
            self.reflexive_length_duality,
            self.gamma_length_duality,
            self.a_formula,
            self.canonical_defect,
            self.maximal_omega_stable,
        ]
    }

    pub fn agree(&self) -> bool {
        let v = self.values();
        v.iter().all(|&x| x == v[0])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingClassification {
    pub gorenstein: bool,
    pub almost_gorenstein: bool,
    pub maximal_length: bool,
    pub arf: bool,
    pub matlis: MatlisData,
    pub checks: Vec<Check>,
}

/// Classification of `s`, with the ideal-quantified conditions evaluated
/// over `family` (proper ideals of `s`).
pub fn ring_classification(
    s: &NumericalSemigroup,
    family: &[RelativeIdeal<'_>],
) -> Result<RingClassification> {
    let ctx = SemigroupContext::new(s);
    let mut analyses = Vec::with_capacity(family.len());
    for ideal in family {
        if ideal.parent() != s {
            return Err(crate::Error::ParentMismatch);
        }
        let ideal = RelativeIdeal::from_normal_form(
            s,
            ideal.min(),
            &ideal.members_below_conductor(),
            ideal.conductor(),
        )?;
        analyses.push(ctx.analyze(&ideal)?);
    }
    Ok(ctx.classify_ring(&analyses))
}

/// Semigroup-level checks (no ideal family needed).
pub fn semigroup_checks(s: &NumericalSemigroup) -> Vec<Check> {
    SemigroupContext::new(s).semigroup_checks()
}

impl<'s> SemigroupContext<'s> {
    pub fn semigroup_checks(&self) -> Vec<Check> {
        let s = self.semigroup;
        let ts = self.type_sequence.values();
        let (r, c, delta, n) = (self.r, self.c, self.delta, self.n);
        let mut out = Vec::new();

        out.push(Check::eq("type_equals_pf", r, s.cm_type()));
        out.push(Check::eq("ts_sum_genus", ts.iter().sum(), delta));
        out.push(Check::eq(
            "ts_defect_sum",
            ts.iter().map(|v| v - 1).sum(),
            self.canonical_defect(),
        ));
        out.push(Check::eq(
            "ts_bounds",
            ts.iter().filter(|&&v| v < 1 || v > r).count() as i64,
            0,
        ));
        out.push(Check::eq(
            "ts_different_rule",
            (0..n)
                .filter(|&i| self.different.contains(s.small_element(i)) && self.r_h(i + 1) != 1)
                .count() as i64,
            0,
        ));
        let extended = extended_type_sequence(s, n + 3);
        out.push(Check::eq(
            "ts_tail_ones",
            extended[n..].iter().filter(|&&v| v != 1).count() as i64,
            0,
        ));
        out.push(Check::holds(
            "ts_two_routes",
            type_sequence_via_canonical(s) == self.type_sequence,
        ));
        out.push(Check::le_if("type_le_multiplicity", !s.is_natural(), r, self.e - 1));
        out.push(Check::le("type_le_defect", r - 1, self.canonical_defect()));
        out.push(Check::agree(
            "gorenstein_routes",
            &[r == 1, 2 * delta == c, self.canonical == self.whole],
        ));
        out.push(Check::eq(
            "canonical_length",
            self.len(&self.canonical, &self.whole),
            self.canonical_defect(),
        ));
        let naturals = s.tail(0);
        out.push(Check::holds(
            "canonical_bounds",
            self.whole.is_subset_of(&self.canonical)
                && self.canonical.is_subset_of(&naturals)
                && (c == 0 || !self.canonical.contains(c - 1))
                && self.gamma.is_subset_of(&self.canonical),
        ));
        out.push(Check::holds(
            "different_bounds",
            if r > 1 {
                self.gamma.is_subset_of(&self.different) && self.different.is_subset_of(&self.maximal)
            } else {
                self.different == self.whole
            },
        ));
        let k_plus_m = self.canonical.product(&self.maximal).expect("same parent");
        out.push(Check::agree(
            "almost_gorenstein_routes",
            &[
                self.is_almost_gorenstein(),
                k_plus_m == self.maximal,
                self.type_sequence.is_almost_gorenstein_shape(),
            ],
        ));
        out.push(Check::agree(
            "maximal_length_routes",
            &[
                self.type_sequence.is_constant(),
                self.is_maximal_length(),
                self.b_gamma() == 0,
            ],
        ));
        out.push(Check::agree(
            "arf_routes",
            &[self.arf, s.is_arf_by_duals()],
        ));
        out.push(Check::le("overring_bound_normalization", delta, r * (c - delta)));
        out.push(Check::eq(
            "b_conductor_type_sum",
            self.b_gamma(),
            ts.iter().map(|v| r - v).sum(),
        ));

        if s.is_natural() {
            out.push(Check::eq("a_conductor", self.canonical_defect(), 0));
            out.push(Check::eq("b_conductor", self.b_gamma(), 0));
            return out;
        }

        let (a_gamma, b_gamma) = self.ab(&self.gamma).expect("γ is proper");
        out.push(Check::eq("a_conductor", a_gamma, self.canonical_defect()));
        out.push(Check::eq("b_conductor", b_gamma, self.b_gamma()));
        let (a_m, b_m) = self.ab(&self.maximal).expect("m is proper");
        out.push(Check::eq("a_maximal", a_m, r - 1));
        out.push(Check::eq("b_maximal", b_m, 0));
        out.push(Check::iff(
            "almost_gorenstein_a_maximal",
            self.is_almost_gorenstein(),
            a_m == a_gamma,
        ));

        for i in 1..=n + 2 {
            let (a_i, b_i) = self.ab(&s.chain_ideal(i)).expect("R_i is proper");
            out.push(Check::eq(
                "chain_a",
                a_i,
                (1..=i).map(|h| self.r_h(h) - 1).sum(),
            ));
            out.push(Check::eq("chain_b", b_i, (1..=i).map(|h| r - self.r_h(h)).sum()));
            if i >= n {
                out.push(Check::eq(
                    "chain_b_tail",
                    b_i,
                    self.b_gamma() + (i - n) as i64 * (r - 1),
                ));
            }
            if self.arf && i <= n {
                let si = s.small_element(i);
                out.push(Check::eq("arf_chain_a", a_i, si - 2 * i as i64));
                out.push(Check::eq(
                    "arf_chain_b",
                    b_i,
                    i as i64 * s.small_element(1) - si,
                ));
            }
        }

        // a(g + K) for the smallest positive g ∈ θ_D, an integral ideal isomorphic to K
        let g = (1..)
            .find(|&x| self.different.contains(x))
            .expect("θ_D contains the conductor tail");
        let (a_k, _) = self
            .ab(&self.canonical.translate(g))
            .expect("g + K ⊆ S for g ∈ θ_D");
        out.push(Check::eq("canonical_ideal_a", a_k, self.sigma()));
        out
    }

    /// Ring classification with the ideal-quantified conditions evaluated
    /// over the analysed family.
    pub fn classify_ring(&self, family: &[IdealAnalysis<'s>]) -> RingClassification {
        let r = self.r;
        let non_principal = || family.iter().filter(|x| !x.ideal.is_principal());
        // principal ideals are reflexive but have `KI ≠ I**` unless S is symmetric
        let reflexive: Vec<&IdealAnalysis<'s>> = non_principal().filter(|x| x.reflexive).collect();

        let omega_product_bidual = non_principal().all(|x| x.omega_product == x.bidual);
        let a_formula = non_principal().all(|x| x.a == (r - 1) - x.l_bidual_over_i);
        let gamma_length_duality = reflexive.iter().all(|x| {
            self.len(&x.ideal, &self.semigroup.tail(x.c_i)) == x.l_colon_gamma_over_dual
        });
        let mut reflexive_pairs = 0;
        let mut reflexive_length_duality = true;
        for big in &reflexive {
            for small in &reflexive {
                if small.ideal.is_subset_of(&big.ideal) {
                    reflexive_pairs += 1;
                    if self.len(&big.ideal, &small.ideal) != self.len(&small.dual, &big.dual) {
                        reflexive_length_duality = false;
                    }
                }
            }
        }
        let k_plus_m = self.canonical.product(&self.maximal).expect("same parent");
        let matlis = MatlisData {
            type_sequence_shape: self.type_sequence.is_almost_gorenstein_shape(),
            omega_product_bidual,
            reflexive_length_duality,
            gamma_length_duality,
            a_formula,
            canonical_defect: self.is_almost_gorenstein(),
            maximal_omega_stable: k_plus_m == self.maximal,
            family_size: family.len(),
            reflexive_pairs,
        };

        let mut checks = vec![Check::agree("matlis_agreement", &matlis.values())];
        let contains_gamma = || family.iter().filter(|x| self.gamma.is_subset_of(&x.ideal));
        if contains_gamma().next().is_some() {
            checks.push(Check::agree(
                "maximal_length_family",
                &[self.is_maximal_length(), contains_gamma().all(|x| x.b == 0)],
            ));
        }
        if family.iter().any(|x| x.ideal == self.maximal) {
            checks.push(Check::agree(
                "gorenstein_a_vanishing",
                &[self.is_gorenstein(), family.iter().all(|x| x.a == 0)],
            ));
        }
        RingClassification {
            gorenstein: self.is_gorenstein(),
            almost_gorenstein: self.is_almost_gorenstein(),
            maximal_length: self.is_maximal_length(),
            arf: self.arf,
            matlis,
            checks,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&sg(&[2, 3])), 0);
        assert_eq!(sigma(&sg(&[3, 4, 5])), 0);
        assert_eq!(sigma(&sg(&[5, 6, 9])), 0);
    }

    #[test]
    fn semigroup_checks_pass() {
        for g in [&[1][..], &[2, 3], &[3, 4, 5], &[4, 5, 7], &[5, 6, 9], &[9, 15, 17, 23, 25, 29, 31], &[4, 6, 9, 11]] {
            let s = sg(g);
            let failed: Vec<_> = semigroup_checks(&s).into_iter().filter(|c| !c.pass).collect();
            assert!(failed.is_empty(), "{s}: {failed:?}");
        }
    }

    #[test]
    fn classification_examples() {
        let s = sg(&[3, 4, 5]);
        let rc = ring_classification(&s, &[s.maximal_ideal()]).unwrap();
        assert!(rc.almost_gorenstein && rc.maximal_length && !rc.gorenstein);
        let s = sg(&[5, 6, 9]);
        assert!(ring_classification(&s, &[]).unwrap().gorenstein);
        let s = NumericalSemigroup::from_small_elements(&[0, 4, 8, 9, 12, 13], 16).unwrap();
        let rc = ring_classification(&s, &[s.maximal_ideal(), s.conductor_ideal()]).unwrap();
        assert!(!rc.almost_gorenstein);
        assert!(rc.matlis.agree());
        assert!(rc.checks.iter().all(|c| c.pass));
    }
}
