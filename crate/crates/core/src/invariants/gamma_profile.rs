//! The conductor ideal in detail: the profile `(z, B, A, p, g, l(R/γ+xR))`
//! and the classification of semigroups with `b(γ) ≤ r`.
//!
//! `x` is realised by `t^e`, so `γ + xR` has value set `ℤ_{≥c} ∪ (e + S)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::SemigroupContext;
use crate::check::Check;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassificationTag {
    Gorenstein,
    BLtRMinus1,
    BEqRMinus1Case1,
    BEqRMinus1Case2,
    BEqRCaseG,
    BEqRCaseJ,
    BGtR,
}

impl ClassificationTag {
    pub const ALL: [ClassificationTag; 7] = [
        ClassificationTag::Gorenstein,
        ClassificationTag::BLtRMinus1,
        ClassificationTag::BEqRMinus1Case1,
        ClassificationTag::BEqRMinus1Case2,
        ClassificationTag::BEqRCaseG,
        ClassificationTag::BEqRCaseJ,
        ClassificationTag::BGtR,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassificationTag::Gorenstein => "GORENSTEIN",
            ClassificationTag::BLtRMinus1 => "B_LT_R_MINUS_1",
            ClassificationTag::BEqRMinus1Case1 => "B_EQ_R_MINUS_1_CASE1",
            ClassificationTag::BEqRMinus1Case2 => "B_EQ_R_MINUS_1_CASE2",
            ClassificationTag::BEqRCaseG => "B_EQ_R_CASE_G",
            ClassificationTag::BEqRCaseJ => "B_EQ_R_CASE_J",
            ClassificationTag::BGtR => "B_GT_R",
        }
    }
}

impl Serialize for ClassificationTag {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

impl fmt::Display for ClassificationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaProfile {
    pub z: i64,
    /// `{h ∈ [1, n] : z < s_h ≤ c}`.
    pub b_indices: Vec<usize>,
    /// `[1, n] \ B`.
    pub a_indices: Vec<usize>,
    /// `c − e ≤ pe < c`.
    pub p: i64,
    /// Number of gaps above `pe`.
    pub g: i64,
    /// `l(R/γ + xR)`.
    pub quotient_length: i64,
    pub b_gamma: i64,
    pub tag: ClassificationTag,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub tag: ClassificationTag,
    pub parameters: BTreeMap<&'static str, i64>,
    pub checks: Vec<Check>,
}

pub fn gamma_profile(s: &NumericalSemigroup) -> Result<GammaProfile> {
    SemigroupContext::new(s).gamma_profile()
}

pub fn classify_b(s: &NumericalSemigroup) -> Classification {
    SemigroupContext::new(s).classify_b()
}

/// Shape of `S` when every element below `c` is `je` or `y + je`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct TwoChain {
    y: i64,
    k: i64,
    /// `y + (p − k)e ≥ c`.
    case_a: bool,
}

impl<'s> SemigroupContext<'s> {
    fn p(&self) -> i64 {
        (self.c - 1).div_euclid(self.e)
    }

    fn quotient_length(&self) -> i64 {
        let s = self.semigroup;
        s.elements_below_conductor()
            .iter()
            .filter(|&&x| !s.contains(x - self.e))
            .count() as i64
    }

    /// `S ∩ [0, c) = {0, e, …, pe}`.
    fn is_multiples_pattern(&self) -> bool {
        let below = self.semigroup.elements_below_conductor();
        below.iter().enumerate().all(|(j, &x)| x == j as i64 * self.e)
    }

    /// `ts = [e − 1, …, e − 1, r_n]`.
    fn is_top_type_pattern(&self) -> bool {
        let ts = self.type_sequence.values();
        ts[..ts.len() - 1].iter().all(|&v| v == self.e - 1)
    }

    fn two_chain(&self) -> Option<TwoChain> {
        let s = self.semigroup;
        let e = self.e;
        let below = s.elements_below_conductor();
        let y = *below.iter().find(|&&x| x % e != 0)?;
        let fits = below
            .iter()
            .all(|&x| x % e == 0 || (x >= y && (x - y) % e == 0));
        if !fits {
            return None;
        }
        let k = y / e;
        Some(TwoChain {
            y,
            k,
            case_a: y + (self.p() - k) * e >= self.c,
        })
    }

    pub fn gamma_profile(&self) -> Result<GammaProfile> {
        let s = self.semigroup;
        if s.is_natural() {
            return Err(Error::DegenerateDvr);
        }
        let (c, e, r, n) = (self.c, self.e, self.r, self.n);
        let b = self.b_gamma();
        let z = (c - e..=c).find(|&y| s.contains(y)).expect("c ∈ S");
        let (b_indices, a_indices): (Vec<usize>, Vec<usize>) = (1..=n).partition(|&h| {
            let sh = s.small_element(h);
            z < sh && sh <= c
        });
        let p = self.p();
        let g = (p * e..c).filter(|&x| !s.contains(x)).count() as i64;
        let l = self.quotient_length();
        let rh = |h: usize| self.r_h(h);
        let sum_b: i64 = b_indices.iter().map(|&h| rh(h)).sum();
        let gap_a: i64 = a_indices.iter().map(|&h| r - rh(h)).sum();

        let mut checks = Vec::new();
        let socle = self
            .gamma
            .colon(&self.maximal)
            .and_then(|q| q.intersection(&self.whole))
            .expect("same parent");
        checks.push(Check::eq("b_indices_socle", b_indices.len() as i64, self.len(&socle, &self.gamma)));
        let gamma_plus_x = self
            .gamma
            .sum(&self.whole.translate(e))
            .expect("same parent");
        let l_direct = self.len(&self.whole, &gamma_plus_x);
        checks.push(Check::eq("b_indices_quotient", b_indices.len() as i64, l_direct));
        checks.push(Check::eq("quotient_length_direct", l, l_direct));
        checks.push(Check::ge("quotient_length_lower", l, e - r));
        checks.push(Check::ge("type_below_multiplicity", e - r, 1));
        checks.push(Check::le("b_indices_type_sum", sum_b, e - 1));
        checks.push(Check::eq("b_gamma_split", b + sum_b, gap_a + r * l));
        checks.push(Check::ge("b_gamma_split_upper", b + e - 1, b + sum_b));
        checks.push(Check::ge("b_gamma_split_lower", b, (r - 1) * (e - r - 1) + gap_a));
        for (id, q) in [("quotient_bound_one", 1), ("quotient_bound_two", 2)] {
            checks.push(Check::implies(
                id,
                b < q * (r - 1),
                e - r <= l && l <= q,
            ));
        }
        checks.push(Check::implies(
            "b_below_type_shape",
            b < r - 1,
            r == e - 1 && l == 1,
        ));
        checks.push(Check::implies(
            "b_middle_type_shape",
            r - 1 < b && b < 2 * r - 2,
            e - 2 <= r && r <= e - 1 && l == 2,
        ));
        checks.push(Check::holds("profile_p_range", c - e <= p * e && p * e < c));
        checks.push(Check::holds("profile_g_range", 1 <= g && g <= e - 1));

        // l = 1
        checks.push(Check::agree(
            "quotient_one_equivalence",
            &[l == 1, self.is_multiples_pattern(), self.is_top_type_pattern()],
        ));
        if l == 1 {
            let r_n = rh(n);
            checks.push(Check::eq("quotient_one_genus", self.delta, c - p - 1));
            checks.push(Check::eq("quotient_one_b", b, e * (p + 1) - c));
            checks.push(Check::le("quotient_one_b_bound", b, r - 1));
            checks.push(Check::eq("quotient_one_type", r, e - 1));
            checks.push(Check::eq("quotient_one_last_type", r_n, e - 1 - b));
        }

        // l = 2
        if l == 2 {
            self.quotient_two_checks(&mut checks, p, g);
        }

        Ok(GammaProfile {
            z,
            b_indices,
            a_indices,
            p,
            g,
            quotient_length: l,
            b_gamma: b,
            tag: self.tag(),
            checks,
        })
    }

    fn quotient_two_checks(&self, checks: &mut Vec<Check>, p: i64, g: i64) {
        let (c, e, r) = (self.c, self.e, self.r);
        let b = self.b_gamma();
        let n = self.n as i64;
        checks.push(Check::holds("quotient_two_type_range", e - 2 <= r && r <= e - 1));
        let Some(TwoChain { k, case_a, .. }) = self.two_chain() else {
            checks.push(Check::holds("quotient_two_pattern", false));
            return;
        };
        let (shape_ok, n_expected) = if case_a {
            (p > k && k >= 1, 2 * p + 1 - k)
        } else {
            (p >= k && k >= 1, 2 * p + 2 - k)
        };
        checks.push(Check::holds("quotient_two_pattern", shape_ok && c <= (p + 1) * e));
        checks.push(Check::eq("quotient_two_length", n, n_expected));
        checks.push(Check::eq("quotient_two_genus", self.delta, p * (e - 2) + k + g));
        checks.push(Check::eq("quotient_two_b_plus_g", b + g, r * (c - self.delta) - p * (e - 2) - k));
        checks.push(Check::holds("quotient_two_g_range", 1 <= g && g <= e - 2));
        if r == e - 1 {
            checks.push(Check::ge("quotient_two_top_type_bound", b, r + 1));
            let expected = if case_a { (p - k + 1) * e - 1 } else { (p - k + 2) * e - 2 };
            checks.push(Check::eq("quotient_two_top_type", b + g, expected));
        }
        if r == e - 2 {
            checks.push(Check::ge("quotient_two_second_type_p", p, 2 * k - 1));
            let expected = if case_a {
                (p - k + 1) * (e - 2) - k
            } else {
                (p - k + 2) * (e - 2) - k
            };
            checks.push(Check::eq("quotient_two_second_type", b + g, expected));
            if case_a {
                checks.push(Check::ge("quotient_two_second_type_bound", b + g, k * (e - 3)));
            } else {
                checks.push(Check::ge("quotient_two_second_type_bound", b + g, k * (e - 3) + 1));
            }
        }
    }

    /// `{0, e, …, pe, c→}` with `pe + 2 < c ≤ (p + 1)e`; `p = 0` allowed.
    fn matches_small_b_pattern(&self) -> bool {
        let pe = self.p() * self.e;
        self.is_multiples_pattern() && pe + 2 < self.c && self.c <= pe + self.e
    }

    fn matches_case1_pattern(&self) -> bool {
        self.is_multiples_pattern() && self.c == self.p() * self.e + 2
    }

    /// `y` for `{0, e, y, 2e→}`, or 0 for `{0, e, 2e − 1, 2e, 3e − 1→}`.
    fn case2_pattern(&self) -> Option<i64> {
        let e = self.e;
        let below = self.semigroup.elements_below_conductor();
        if below == [0, e, 2 * e - 1, 2 * e] && self.c == 3 * e - 1 {
            return Some(0);
        }
        match below {
            [0, x, y] if *x == e && self.c == 2 * e && e < *y && 2 * (y - e) <= e - 1 => Some(*y),
            _ => None,
        }
    }

    fn matches_case2_type_pattern(&self) -> bool {
        let e = self.e;
        match self.type_sequence.values() {
            [a, b, r3, r4] => *a == e - 2 && *b == e - 2 && r3 + r4 == e - 1,
            [a, r2, r3] => *a == e - 2 && r2 + r3 == e - 1,
            _ => false,
        }
    }

    /// Member of the case-(g) list; returns the family index (1..=4) and `z`.
    fn case_g_family(&self) -> Option<(i64, i64)> {
        let (e, c) = (self.e, self.c);
        let below = self.semigroup.elements_below_conductor();
        if below == [0, 4, 8, 9, 12, 13] && c == 16 {
            return Some((1, 0));
        }
        if below == [0, 4, 8, 11, 12, 15, 16] && c == 19 {
            return Some((2, 0));
        }
        if e >= 4 && below == [0, e, 2 * e - 2, 2 * e] && c == 3 * e - 2 {
            return Some((3, 0));
        }
        match below {
            [0, x, y] if e >= 4 && *x == e && c == 2 * e - 1 && *y > e && 2 * (y - e) <= e - 2 => {
                Some((4, y - e))
            }
            _ => None,
        }
    }

    fn is_case_j(&self) -> bool {
        let below = self.semigroup.elements_below_conductor();
        matches!(
            (below, self.c),
            ([0, 5, 6, 7], 10) | ([0, 5, 6, 8], 10) | ([0, 5, 8, 9, 10], 13)
        )
    }

    fn tag(&self) -> ClassificationTag {
        let (r, e, b) = (self.r, self.e, self.b_gamma());
        if r == 1 {
            ClassificationTag::Gorenstein
        } else if b < r - 1 {
            ClassificationTag::BLtRMinus1
        } else if b == r - 1 {
            if r == e - 1 {
                ClassificationTag::BEqRMinus1Case1
            } else {
                ClassificationTag::BEqRMinus1Case2
            }
        } else if b == r {
            if self.case_g_family().is_some() || (!self.is_case_j() && r == e - 2) {
                ClassificationTag::BEqRCaseG
            } else {
                ClassificationTag::BEqRCaseJ
            }
        } else {
            ClassificationTag::BGtR
        }
    }

    pub fn classify_b(&self) -> Classification {
        let (r, e, c) = (self.r, self.e, self.c);
        let b = self.b_gamma();
        let tag = self.tag();
        let mut parameters = BTreeMap::new();
        let mut checks = Vec::new();
        if tag == ClassificationTag::Gorenstein {
            return Classification { tag, parameters, checks };
        }
        let p = self.p();
        let l = self.quotient_length();
        let ts = self.type_sequence.values();
        let r_n = *ts.last().expect("non-Gorenstein has n ≥ 1");
        parameters.insert("e", e);
        parameters.insert("r", r);
        parameters.insert("b", b);
        parameters.insert("c", c);
        parameters.insert("p", p);

        let top_ts = self.is_top_type_pattern();
        checks.push(Check::agree(
            "classify_small_b",
            &[b < r - 1, self.matches_small_b_pattern(), top_ts && r_n > 1],
        ));
        if b < r - 1 {
            checks.push(Check::holds(
                "classify_small_b_consequences",
                l == 1 && c == (p + 1) * e - b && r == e - 1 && r_n == e - 1 - b,
            ));
        }
        if b == r - 1 {
            checks.push(Check::holds("classify_b_r_minus_1_type", r == e - 1 || r == e - 2));
        }
        let case1 = b == r - 1 && r == e - 1;
        checks.push(Check::agree(
            "classify_case1_equivalence",
            &[case1, self.matches_case1_pattern(), top_ts && r_n == 1],
        ));
        if case1 {
            checks.push(Check::eq("classify_case1_quotient", l, 1));
        }
        let case2_pattern = self.case2_pattern();
        let case2 = b == r - 1 && r == e - 2;
        checks.push(Check::agree(
            "classify_case2_equivalence",
            &[case2, case2_pattern.is_some(), self.matches_case2_type_pattern()],
        ));
        if case2 {
            checks.push(Check::eq("classify_case2_quotient", l, 2));
        }
        if b == r - 1 {
            let matched = self.matches_case1_pattern() as i64 + case2_pattern.is_some() as i64;
            checks.push(Check::eq("classify_b_r_minus_1_unique", matched, 1));
        }
        if let Some(y) = case2_pattern.filter(|&y| y > 0) {
            parameters.insert("y", y);
        }

        let family_g = self.case_g_family();
        let in_j = self.is_case_j();
        if b == r {
            let g_ok = family_g.is_some() && r == e - 2 && l == 2;
            let j_ok = in_j && r == 2 && e == 5 && l == 3;
            checks.push(Check::holds("classify_b_eq_r", g_ok || j_ok));
        }
        if let Some((family, z)) = family_g {
            parameters.insert("family", family);
            if family == 4 {
                parameters.insert("z", z);
            }
        }
        if let Some(TwoChain { y, k, .. }) = self.two_chain().filter(|_| l == 2) {
            parameters.insert("y", y);
            parameters.insert("k", k);
        }
        Classification { tag, parameters, checks }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(el: &[i64], c: i64) -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(el, c).unwrap()
    }

    fn pass(checks: &[Check]) {
        let failed: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }

    #[test]
    fn three_four_five() {
        let s = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        let prof = gamma_profile(&s).unwrap();
        assert_eq!((prof.quotient_length, prof.b_gamma), (1, 0));
        assert_eq!(prof.b_indices, vec![1]);
        assert!(prof.a_indices.is_empty());
        pass(&prof.checks);
        let cl = classify_b(&s);
        assert_eq!(cl.tag, ClassificationTag::BLtRMinus1);
        assert_eq!(cl.parameters["p"], 0);
        pass(&cl.checks);
    }

    #[test]
    fn case_g_and_j() {
        let s = small(&[0, 4, 8, 9, 12, 13], 16);
        let prof = gamma_profile(&s).unwrap();
        assert_eq!((prof.b_gamma, prof.quotient_length), (2, 2));
        pass(&prof.checks);
        let cl = classify_b(&s);
        assert_eq!(cl.tag, ClassificationTag::BEqRCaseG);
        pass(&cl.checks);
        for (el, c) in [(&[0, 5, 6, 7][..], 10), (&[0, 5, 6, 8], 10), (&[0, 5, 8, 9, 10], 13)] {
            let s = small(el, c);
            let cl = classify_b(&s);
            assert_eq!(cl.tag, ClassificationTag::BEqRCaseJ, "{s:?}");
            assert_eq!(gamma_profile(&s).unwrap().quotient_length, 3);
            pass(&cl.checks);
        }
    }

    #[test]
    fn gorenstein_and_natural() {
        let s = NumericalSemigroup::from_generators(&[5, 6, 9]).unwrap();
        assert_eq!(gamma_profile(&s).unwrap().b_gamma, 0);
        assert_eq!(classify_b(&s).tag, ClassificationTag::Gorenstein);
        assert_eq!(
            gamma_profile(&NumericalSemigroup::natural()),
            Err(Error::DegenerateDvr)
        );
        assert_eq!(classify_b(&NumericalSemigroup::natural()).tag, ClassificationTag::Gorenstein);
    }
}
