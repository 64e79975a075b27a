//! `a(I)`, `b(I)`, `V^I`, `d(I)` for a proper ideal and every identity or
//! bound relating them, each evaluated from independently computed sides.

use serde::Serialize;

use super::SemigroupContext;
use crate::check::Check;
use crate::error::Result;
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// Everything derived from one proper ideal, computed once.
#[derive(Debug, Clone)]
pub struct IdealAnalysis<'s> {
    pub ideal: RelativeIdeal<'s>,
    pub dual: RelativeIdeal<'s>,
    pub bidual: RelativeIdeal<'s>,
    /// `K + I`, the value set of `ωI`.
    pub omega_product: RelativeIdeal<'s>,
    pub closure: RelativeIdeal<'s>,
    pub c_i: i64,
    pub n_i: usize,
    /// Index with `s_{i0} = min(I)`.
    pub i0: usize,
    pub l_r_over_i: i64,
    pub l_dual_over_r: i64,
    pub l_bidual_over_i: i64,
    /// `l(R:γ_I / I*)`.
    pub l_colon_gamma_over_dual: i64,
    pub a: i64,
    pub b: i64,
    pub d: i64,
    /// `{h ∈ [1, n_I] : s_{h−1} ∉ I**}`, increasing.
    pub v_complement: Vec<usize>,
    pub reflexive: bool,
    pub integrally_closed: bool,
    pub omega_stable: bool,
}

impl IdealAnalysis<'_> {
    pub fn in_v(&self, h: usize) -> bool {
        self.v_complement.binary_search(&h).is_err()
    }
}

/// Serializable per-ideal report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealInvariantReport {
    pub semigroup: String,
    pub ideal: String,
    pub a: i64,
    pub b: i64,
    pub d: i64,
    pub v_complement: Vec<usize>,
    pub l_bidual_over_i: i64,
    pub l_r_over_i: i64,
    pub l_dual_over_r: i64,
    pub c_i: i64,
    pub n_i: usize,
    pub reflexive: bool,
    pub integrally_closed: bool,
    pub omega_stable: bool,
    pub checks: Vec<Check>,
}

impl IdealInvariantReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl<'s> SemigroupContext<'s> {
    /// `(a(J), b(J))` straight from the definitions.
    pub fn ab(&self, j: &RelativeIdeal<'s>) -> Result<(i64, i64)> {
        if !j.is_proper_integral() {
            return Err(crate::Error::NotIntegralProper);
        }
        let l_r = self.len(&self.whole, j);
        let l_dual = self.len(&j.dual(), &self.whole);
        Ok((l_dual - l_r, self.r * l_r - l_dual))
    }

    /// `Σ_{h ≤ upto, h ∈ V}` of `f(r_h)`, where `V` is described by `bidual`.
    fn v_sum(&self, bidual: &RelativeIdeal<'_>, upto: usize, f: impl Fn(i64) -> i64) -> i64 {
        (1..=upto)
            .filter(|&h| bidual.contains(self.semigroup.small_element(h - 1)))
            .map(|h| f(self.r_h(h)))
            .sum()
    }

    /// `d` from its definition, given the dual and the bidual.
    fn d_by_definition(
        &self,
        dual: &RelativeIdeal<'_>,
        bidual: &RelativeIdeal<'_>,
        c_i: i64,
    ) -> i64 {
        let n_i = (c_i - self.delta) as usize;
        let colon_gamma = self.semigroup.tail(self.c - c_i);
        self.len(&colon_gamma, dual) - self.v_sum(bidual, n_i, |r| r)
    }

    pub fn analyze(&self, ideal: &RelativeIdeal<'s>) -> Result<IdealAnalysis<'s>> {
        let gamma = ideal.gamma_of_ideal()?;
        let s = self.semigroup;
        let dual = ideal.dual();
        let bidual = dual.dual();
        let omega_product = self.canonical.product(ideal)?;
        let closure = ideal.integral_closure()?;
        let c_i = gamma.c_i;
        let n_i = gamma.n_i as usize;
        let i0 = s.index_of(ideal.min()).expect("proper ideal lies in S");
        let l_r_over_i = self.len(&self.whole, ideal);
        let l_dual_over_r = self.len(&dual, &self.whole);
        let l_bidual_over_i = self.len(&bidual, ideal);
        let l_colon_gamma_over_dual = self.len(&gamma.r_colon_gamma, &dual);
        let v_complement: Vec<usize> = (1..=n_i)
            .filter(|&h| !bidual.contains(s.small_element(h - 1)))
            .collect();
        let d = self.d_by_definition(&dual, &bidual, c_i);
        let reflexive = bidual == *ideal;
        let integrally_closed = closure == *ideal;
        let omega_stable = omega_product == *ideal;
        Ok(IdealAnalysis {
            ideal: ideal.clone(),
            a: l_dual_over_r - l_r_over_i,
            b: self.r * l_r_over_i - l_dual_over_r,
            dual,
            bidual,
            omega_product,
            closure,
            c_i,
            n_i,
            i0,
            l_r_over_i,
            l_dual_over_r,
            l_bidual_over_i,
            l_colon_gamma_over_dual,
            d,
            v_complement,
            reflexive,
            integrally_closed,
            omega_stable,
        })
    }

    /// Every ideal-level identity and bound for one analysed ideal.
    pub fn ideal_checks(&self, x: &IdealAnalysis<'s>) -> Vec<Check> {
        let s = self.semigroup;
        let r = self.r;
        let (a, b, d) = (x.a, x.b, x.d);
        let l_bi = x.l_bidual_over_i;
        let l_ri = x.l_r_over_i;
        let colon_dual = x.l_colon_gamma_over_dual;
        let comp = &x.v_complement;
        let rh = |h: usize| self.r_h(h);

        let comp_defect: i64 = comp.iter().map(|&h| rh(h) - 1).sum();
        let comp_gap: i64 = comp.iter().map(|&h| r - rh(h)).sum();
        let comp_r: i64 = comp.iter().map(|&h| rh(h)).sum();
        let comp_defect_to_n: i64 = comp.iter().filter(|&&h| h <= self.n).map(|&h| rh(h) - 1).sum();
        let v_r = self.v_sum(&x.bidual, x.n_i, |v| v);
        let v_defect = self.v_sum(&x.bidual, x.n_i, |v| v - 1);
        let v_all_ones = (1..=x.n_i).all(|h| !x.in_v(h) || rh(h) == 1);

        let gamma_i = s.tail(x.c_i);
        let l_bidual_gamma = self.len(&x.bidual, &gamma_i);
        let l_i_gamma = self.len(&x.ideal, &gamma_i);
        let l_omega_i = self.len(&x.omega_product, &x.ideal);
        let l_omega_bidual = self.len(&x.omega_product, &x.bidual);
        let bidual_plus_gamma = x.bidual.sum(&self.gamma).expect("same parent");
        let bidual_plus_theta = x.bidual.sum(&self.different).expect("same parent");
        let prefix_to_ni = self.type_sequence.prefix_sum(x.n_i);

        let mut out = Vec::with_capacity(56);
        out.push(Check::eq("a_plus_b", a + b, (r - 1) * l_ri));
        out.push(Check::eq("a_via_omega", a, self.canonical_defect() - l_omega_i));
        out.push(Check::le("a_upper_canonical", a, self.canonical_defect()));
        out.push(Check::ge("b_nonnegative", b, 0));
        out.push(Check::eq("formula_a", a, comp_defect - l_bi - d));
        out.push(Check::eq("formula_b", b, comp_gap + r * l_bi + d));

        // γ_I and its dual
        out.push(Check::ge("gamma_index_bound", x.n_i as i64, self.n as i64));
        let gamma_dual = gamma_i.dual();
        out.push(Check::holds(
            "gamma_colon_tail",
            gamma_dual == s.tail(self.c - x.c_i),
        ));
        out.push(Check::eq(
            "gamma_colon_sum",
            prefix_to_ni,
            self.len(&gamma_dual, &self.whole),
        ));
        out.push(Check::eq(
            "dual_length_via_gamma",
            x.l_dual_over_r,
            prefix_to_ni - colon_dual,
        ));

        // V^I
        out.push(Check::eq(
            "v_count_gamma",
            (x.n_i - comp.len()) as i64,
            l_bidual_gamma,
        ));
        out.push(Check::eq(
            "v_count_conductor",
            (1..=self.n).filter(|&h| x.in_v(h)).count() as i64,
            self.len(&bidual_plus_gamma, &self.gamma),
        ));
        out.push(Check::holds(
            "v_first_index_excluded",
            comp.first() == Some(&1),
        ));
        out.push(Check::le("v_sum_lower", l_bidual_gamma, v_r));
        out.push(Check::le("v_sum_upper", v_r, colon_dual));
        out.push(Check::le("dual_length_upper", x.l_dual_over_r, comp_r));
        out.push(Check::eq(
            "complement_sum_split",
            comp_r,
            self.len(&self.whole, &x.bidual) + comp_defect_to_n,
        ));
        out.push(Check::ge("omega_length_lower", l_omega_i, v_defect));

        // d(I)
        out.push(Check::ge("d_nonnegative", d, 0));
        out.push(Check::le("d_lower_bound", colon_dual - r * l_bidual_gamma, d));
        out.push(Check::le("d_upper_bound", d, colon_dual - l_bidual_gamma));
        out.push(Check::le("gamma_length_dual", l_i_gamma, colon_dual));
        out.push(Check::iff(
            "gamma_length_equality",
            l_i_gamma == colon_dual,
            x.reflexive && d == 0 && v_all_ones,
        ));
        out.push(Check::eq("d_two_routes", d, l_omega_bidual - v_defect));
        out.push(Check::eq(
            "d_bidual",
            d,
            self.d_by_definition(&x.dual, &x.bidual, x.bidual.conductor()),
        ));
        out.push(Check::eq_if(
            "d_inside_different",
            x.ideal.is_subset_of(&self.different),
            d,
            l_omega_bidual,
        ));
        out.push(Check::eq_if("d_omega_stable", x.omega_stable, d, 0));
        let chain_dual = s.chain_ideal(x.i0).dual();
        let tail_comp: i64 = comp.iter().filter(|&&h| h > x.i0).map(|&h| rh(h)).sum();
        out.push(Check::eq(
            "d_multiplicity_index",
            d,
            tail_comp - self.len(&x.dual, &chain_dual),
        ));
        out.push(Check::eq_if("d_integrally_closed", x.integrally_closed, d, 0));
        let principal = x.ideal.is_principal();
        let ag = self.is_almost_gorenstein();
        out.push(Check::eq_if("d_almost_gorenstein", ag && !principal, d, 0));
        // d(xR) = l(K/R) − Σ_V (r_h − 1), which is r − 1 in the almost Gorenstein case
        out.push(Check::eq_if("d_principal_almost_gorenstein", ag && principal, d, r - 1));

        // bounds on a and b
        out.push(Check::le(
            "a_upper_bidual_different",
            a,
            (r - 1) * self.len(&self.whole, &bidual_plus_theta) - l_bi,
        ));
        out.push(Check::ge("a_lower_bound", a, r - 1 - l_bi - d));
        out.push(Check::le("b_upper_bound", b, (r - 1) * (l_ri - 1) + l_bi + d));
        out.push(Check::ge(
            "b_lower_bound",
            b,
            (r - 1) * self.len(&bidual_plus_theta, &x.ideal) + l_bi,
        ));
        out.push(Check::ge_if("a_omega_stable", x.omega_stable, a, r - 1));
        out.push(Check::ge("b_bidual_lower", b, r * l_bi));
        out.push(Check::iff(
            "b_vanishing",
            b == 0,
            x.reflexive && comp.iter().all(|&h| rh(h) == r) && v_r == colon_dual,
        ));

        // comparisons with related ideals
        let (a_bi, b_bi) = self.ab(&x.bidual).expect("bidual of a proper ideal is proper");
        out.push(Check::eq("a_bidual_shift", a, a_bi - l_bi));
        let closure_ab = self.ab(&x.closure).expect("closure of a proper ideal is proper");
        let gamma_ab = self.ab(&gamma_i).expect("γ_I is proper");
        let pairs = [
            (&gamma_i, gamma_ab, &x.ideal, (a, b)),
            (&x.ideal, (a, b), &x.closure, closure_ab),
            (&x.ideal, (a, b), &x.bidual, (a_bi, b_bi)),
        ];
        for (sub, (a_sub, b_sub), sup, (a_sup, b_sup)) in pairs {
            let l_duals = self.len(&sub.dual(), &sup.dual());
            let l_sets = self.len(sup, sub);
            out.push(Check::eq("a_difference", a_sub - a_sup, l_duals - l_sets));
            out.push(Check::eq("b_difference", b_sub - b_sup, r * l_sets - l_duals));
            out.push(Check::ge("b_monotone", b_sub, b_sup));
        }

        // canonical duality
        let k = &self.canonical;
        let k_minus_i = k.colon(&x.ideal).expect("same parent");
        out.push(Check::holds(
            "omega_duality",
            k.colon(&k_minus_i).expect("same parent") == x.ideal,
        ));
        out.push(Check::eq(
            "omega_length_duality",
            l_i_gamma,
            self.len(&k.colon(&gamma_i).expect("same parent"), &k_minus_i),
        ));
        out.push(Check::eq(
            "omega_valuation_duality",
            valuation_duality_mismatches(self.c, &x.omega_product, &x.dual),
            0,
        ));
        out.push(Check::holds(
            "bidual_inside_closure",
            x.ideal.is_subset_of(&x.bidual)
                && x.bidual.is_subset_of(&x.closure)
                && x.bidual.is_subset_of(&x.omega_product),
        ));
        out.push(Check::holds(
            "bidual_omega_product",
            k.product(&x.bidual).expect("same parent") == x.omega_product,
        ));
        out.push(Check::implies("omega_stable_reflexive", x.omega_stable, x.reflexive));

        // Jäger's inequality with M = N = S
        out.push(Check::le("jaeger_inequality", x.l_dual_over_r, r * l_ri));

        // the Arf length formula only covers i ≤ n
        if self.arf && x.i0 <= self.n {
            let s1 = s.small_element(1);
            let si0 = s.small_element(x.i0);
            out.push(Check::le(
                "arf_multiplicity_bound",
                a,
                (r - 1) * l_ri - (x.i0 as i64 * s1 - si0),
            ));
        }
        out
    }

    pub fn report(&self, x: &IdealAnalysis<'s>) -> IdealInvariantReport {
        IdealInvariantReport {
            semigroup: self.semigroup.encoding(),
            ideal: x.ideal.encoding(),
            a: x.a,
            b: x.b,
            d: x.d,
            v_complement: x.v_complement.clone(),
            l_bidual_over_i: x.l_bidual_over_i,
            l_r_over_i: x.l_r_over_i,
            l_dual_over_r: x.l_dual_over_r,
            c_i: x.c_i,
            n_i: x.n_i,
            reflexive: x.reflexive,
            integrally_closed: x.integrally_closed,
            omega_stable: x.omega_stable,
            checks: self.ideal_checks(x),
        }
    }
}

/// Counts `x` with `x ∈ K + I` disagreeing with `c − 1 − x ∉ I*`, over a
/// window outside of which both sides are forced.
fn valuation_duality_mismatches(
    c: i64,
    omega_product: &RelativeIdeal<'_>,
    dual: &RelativeIdeal<'_>,
) -> i64 {
    let lo = omega_product.min().min(c - 1 - dual.conductor()) - 1;
    let hi = omega_product.conductor().max(c - dual.min()) + 1;
    (lo..=hi)
        .filter(|&x| omega_product.contains(x) == dual.contains(c - 1 - x))
        .count() as i64
}

pub fn ab_invariants(s: &NumericalSemigroup, ideal: &RelativeIdeal<'_>) -> Result<(i64, i64)> {
    let ctx = SemigroupContext::new(s);
    let ideal = rebind(s, ideal)?;
    ctx.ab(&ideal)
}

/// Complement of `V^I` inside `[1, n_I]`.
pub fn v_complement(s: &NumericalSemigroup, ideal: &RelativeIdeal<'_>) -> Result<Vec<usize>> {
    let ctx = SemigroupContext::new(s);
    Ok(ctx.analyze(&rebind(s, ideal)?)?.v_complement)
}

pub fn d_invariant(s: &NumericalSemigroup, ideal: &RelativeIdeal<'_>) -> Result<i64> {
    let ctx = SemigroupContext::new(s);
    Ok(ctx.analyze(&rebind(s, ideal)?)?.d)
}

pub fn decomposition_check(
    s: &NumericalSemigroup,
    ideal: &RelativeIdeal<'_>,
) -> Result<IdealInvariantReport> {
    let ctx = SemigroupContext::new(s);
    let analysis = ctx.analyze(&rebind(s, ideal)?)?;
    Ok(ctx.report(&analysis))
}

/// Re-attaches an ideal to `s`, failing if it was built over another semigroup.
fn rebind<'s>(s: &'s NumericalSemigroup, ideal: &RelativeIdeal<'_>) -> Result<RelativeIdeal<'s>> {
    if ideal.parent() != s {
        return Err(crate::Error::ParentMismatch);
    }
    RelativeIdeal::from_normal_form(s, ideal.min(), &ideal.members_below_conductor(), ideal.conductor())
}
