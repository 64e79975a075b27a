//! Relative (fractional) ideals of a numerical semigroup, as value sets.
//!
//! A relative ideal is a set `E ⊆ ℤ`, bounded below, with `E + S ⊆ E`. It is
//! stored in normal form `(m_E, c_E, window)`: the minimum, the ideal
//! conductor (smallest `x` with `x + ℕ ⊆ E`, so `c_E − 1 ∉ E` unless
//! `c_E = m_E`) and one bit per integer of `[m_E, c_E)`.
//!
//! For monomial rings every ideal operation has an exact value-set
//! counterpart: colon is `A − B = {z : z + B ⊆ A}`, product is the Minkowski
//! sum, ideal sum is union, and lengths are cardinalities of differences.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::bits::BitTable;
use crate::error::{Error, Result};
use crate::semigroup::{join, parse_list, NumericalSemigroup};

#[derive(Clone)]
pub struct RelativeIdeal<'s> {
    parent: &'s NumericalSemigroup,
    min: i64,
    conductor: i64,
    window: BitTable,
}

/// `γ_I`, its conductor `c_I`, `n_I = c_I − δ` and `R : γ_I`.
#[derive(Debug, Clone)]
pub struct GammaOfIdeal<'s> {
    pub c_i: i64,
    pub n_i: i64,
    pub gamma_ideal: RelativeIdeal<'s>,
    pub r_colon_gamma: RelativeIdeal<'s>,
}

/// Serializable snapshot of an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealSummary {
    pub encoding: String,
    pub min: i64,
    pub conductor: i64,
    pub members_below_conductor: Vec<i64>,
}

impl<'s> RelativeIdeal<'s> {
    /// Builds the ideal whose members in `[lo, hi)` are given by `member`,
    /// with everything below `lo` excluded and everything from `hi` on included.
    pub(crate) fn from_predicate(
        parent: &'s NumericalSemigroup,
        lo: i64,
        hi: i64,
        member: impl Fn(i64) -> bool,
    ) -> Self {
        let hi = hi.max(lo);
        let min = (lo..hi).find(|&x| member(x)).unwrap_or(hi);
        let mut conductor = hi;
        while conductor > min && member(conductor - 1) {
            conductor -= 1;
        }
        let window = BitTable::from_fn((conductor - min) as usize, |i| member(min + i as i64));
        RelativeIdeal {
            parent,
            min,
            conductor,
            window,
        }
    }

    /// `∪_g (g + S)`.
    pub fn from_generators(parent: &'s NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        let lo = *gens.iter().min().ok_or(Error::EmptyGenerators)?;
        let hi = gens.iter().max().unwrap() + parent.conductor();
        Ok(Self::from_predicate(parent, lo, hi, |x| {
            gens.iter().any(|&g| parent.contains(x - g))
        }))
    }

    /// Ideal from its normal form; validates tightness and `E + S ⊆ E`.
    pub fn from_normal_form(
        parent: &'s NumericalSemigroup,
        min: i64,
        members: &[i64],
        conductor: i64,
    ) -> Result<Self> {
        if conductor < min {
            return Err(Error::NotAnIdeal(format!(
                "conductor {conductor} below minimum {min}"
            )));
        }
        let mut window = BitTable::new((conductor - min) as usize);
        for &x in members {
            if x < min || x >= conductor {
                return Err(Error::NotAnIdeal(format!(
                    "{x} outside [{min}, {conductor})"
                )));
            }
            window.set((x - min) as usize);
        }
        if conductor > min {
            if !window.get(0) {
                return Err(Error::NotAnIdeal(format!("minimum {min} is not a member")));
            }
            if window.get(window.len() - 1) {
                return Err(Error::NotAnIdeal(format!(
                    "conductor {conductor} is not tight"
                )));
            }
        }
        let ideal = RelativeIdeal {
            parent,
            min,
            conductor,
            window,
        };
        for x in ideal.members_below_conductor() {
            for s in 1..conductor - x {
                if parent.contains(s) && !ideal.contains(x + s) {
                    return Err(Error::NotAnIdeal(format!(
                        "{x} + {s} is missing, not closed under S"
                    )));
                }
            }
        }
        Ok(ideal)
    }

    /// Parses `"min|m_1,m_2,…|conductor"`.
    pub fn parse_encoding(parent: &'s NumericalSemigroup, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split('|').collect();
        let [min, members, conductor] = parts[..] else {
            return Err(Error::Parse(format!("ideal encoding {text:?}")));
        };
        let num = |s: &str| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("integer {s:?} in {text:?}")))
        };
        Self::from_normal_form(parent, num(min)?, &parse_list(members)?, num(conductor)?)
    }

    pub fn encoding(&self) -> String {
        format!(
            "{}|{}|{}",
            self.min,
            join(&self.members_below_conductor()),
            self.conductor
        )
    }

    pub fn summary(&self) -> IdealSummary {
        IdealSummary {
            encoding: self.encoding(),
            min: self.min,
            conductor: self.conductor,
            members_below_conductor: self.members_below_conductor(),
        }
    }

    pub fn parent(&self) -> &'s NumericalSemigroup {
        self.parent
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        if x >= self.conductor {
            true
        } else if x < self.min {
            false
        } else {
            self.window.get((x - self.min) as usize)
        }
    }

    /// Smallest element `m_E` (the value `e(I)` of the ideal).
    pub fn min(&self) -> i64 {
        self.min
    }

    /// Ideal conductor `c_E`.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn members_below_conductor(&self) -> Vec<i64> {
        self.window.ones().map(|i| self.min + i as i64).collect()
    }

    fn check_parent(&self, other: &RelativeIdeal<'_>) -> Result<()> {
        if std::ptr::eq(self.parent, other.parent) || self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// `self − other = {z : z + other ⊆ self}`.
    ///
    /// Exact on `[m_A − m_B, c_A − m_B)`: below it `z + m_B < m_A`, above it
    /// `z + other ⊆ ℤ_{≥c_A}`.
    pub fn colon(&self, other: &RelativeIdeal<'_>) -> Result<RelativeIdeal<'s>> {
        self.check_parent(other)?;
        let holes: Vec<i64> = (self.min..self.conductor)
            .filter(|&x| !self.contains(x))
            .collect();
        let lo = self.min - other.min;
        let hi = self.conductor - other.min;
        Ok(Self::from_predicate(self.parent, lo, hi, |z| {
            holes.iter().all(|&h| !other.contains(h - z))
        }))
    }

    /// `E* = S − E`.
    pub fn dual(&self) -> RelativeIdeal<'s> {
        self.parent.as_ideal().colon(self).expect("same parent")
    }

    /// `E** = S − (S − E)`.
    pub fn bidual(&self) -> RelativeIdeal<'s> {
        self.dual().dual()
    }

    /// Minkowski sum `E + F` (ideal product).
    ///
    /// Exact on `[m_E + m_F, c_E + m_F)` since `ℤ_{≥c_E} + m_F` is a tail.
    pub fn product(&self, other: &RelativeIdeal<'_>) -> Result<RelativeIdeal<'s>> {
        self.check_parent(other)?;
        let lo = self.min + other.min;
        let hi = self.conductor + other.min;
        let mut hit = vec![false; (hi - lo).max(0) as usize];
        for a in self.members_below_conductor() {
            for (i, slot) in hit.iter_mut().enumerate() {
                if !*slot && other.contains(lo + i as i64 - a) {
                    *slot = true;
                }
            }
        }
        Ok(Self::from_predicate(self.parent, lo, hi, |x| {
            hit[(x - lo) as usize]
        }))
    }

    /// Ideal sum, i.e. union of value sets.
    pub fn sum(&self, other: &RelativeIdeal<'_>) -> Result<RelativeIdeal<'s>> {
        self.check_parent(other)?;
        let lo = self.min.min(other.min);
        let hi = self.conductor.max(other.conductor);
        Ok(Self::from_predicate(self.parent, lo, hi, |x| {
            self.contains(x) || other.contains(x)
        }))
    }

    pub fn intersection(&self, other: &RelativeIdeal<'_>) -> Result<RelativeIdeal<'s>> {
        self.check_parent(other)?;
        let lo = self.min.max(other.min);
        let hi = self.conductor.max(other.conductor);
        Ok(Self::from_predicate(self.parent, lo, hi, |x| {
            self.contains(x) && other.contains(x)
        }))
    }

    /// `g + E`.
    pub fn translate(&self, g: i64) -> RelativeIdeal<'s> {
        RelativeIdeal {
            parent: self.parent,
            min: self.min + g,
            conductor: self.conductor + g,
            window: self.window.clone(),
        }
    }

    pub fn is_subset_of(&self, other: &RelativeIdeal<'_>) -> bool {
        let hi = self.conductor.max(other.conductor);
        (self.min..hi).all(|x| !self.contains(x) || other.contains(x))
    }

    /// `l(E/F) = #(E \ F)` for `F ⊆ E`.
    pub fn length_over(&self, sub: &RelativeIdeal<'_>) -> Result<usize> {
        self.check_parent(sub)?;
        if !sub.is_subset_of(self) {
            return Err(Error::NotContained);
        }
        let hi = self.conductor.max(sub.conductor);
        Ok((self.min..hi)
            .filter(|&x| self.contains(x) && !sub.contains(x))
            .count())
    }

    /// `0 ∉ E ⊆ S`.
    pub fn is_proper_integral(&self) -> bool {
        let hi = self.conductor.max(self.parent.conductor());
        self.min >= 1 && (self.min..hi).all(|x| !self.contains(x) || self.parent.contains(x))
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_proper_integral() {
            Ok(())
        } else {
            Err(Error::NotIntegralProper)
        }
    }

    /// `E = m_E + S`.
    pub fn is_principal(&self) -> bool {
        let hi = self.conductor.max(self.min + self.parent.conductor());
        (self.min..hi).all(|x| self.contains(x) == self.parent.contains(x - self.min))
    }

    /// `γ_I = ℤ_{≥c_I}`, `n_I = c_I − δ`, and `R : γ_I = ℤ_{≥c−c_I}`.
    pub fn gamma_of_ideal(&self) -> Result<GammaOfIdeal<'s>> {
        self.require_proper()?;
        let s = self.parent;
        let c_i = self.conductor;
        Ok(GammaOfIdeal {
            c_i,
            n_i: c_i - s.genus(),
            gamma_ideal: s.tail(c_i),
            r_colon_gamma: s.tail(s.conductor() - c_i),
        })
    }

    /// `Ī = I R̄ ∩ R = S ∩ ℤ_{≥m_E}`.
    pub fn integral_closure(&self) -> Result<RelativeIdeal<'s>> {
        self.require_proper()?;
        let s = self.parent;
        Ok(Self::from_predicate(s, self.min, s.conductor().max(self.min), |x| {
            s.contains(x)
        }))
    }

    pub fn is_integrally_closed(&self) -> Result<bool> {
        Ok(self.integral_closure()? == *self)
    }

    pub fn is_reflexive(&self) -> bool {
        self.bidual() == *self
    }

    /// `K ⊆ E : E`, equivalently `K + E = E`.
    pub fn is_omega_stable(&self) -> bool {
        let k = self.parent.canonical_ideal();
        let by_colon = k.is_subset_of(&self.colon(self).expect("same parent"));
        debug_assert_eq!(by_colon, k.product(self).expect("same parent") == *self);
        by_colon
    }

    fn key(&self) -> (i64, i64, Vec<i64>) {
        (self.min, self.conductor, self.members_below_conductor())
    }
}

impl PartialEq for RelativeIdeal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.min == other.min
            && self.conductor == other.conductor
            && self.window == other.window
            && (std::ptr::eq(self.parent, other.parent) || self.parent == other.parent)
    }
}

impl Eq for RelativeIdeal<'_> {}

impl Ord for RelativeIdeal<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for RelativeIdeal<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RelativeIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelativeIdeal({})", self.encoding())
    }
}

impl fmt::Display for RelativeIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for x in self.members_below_conductor() {
            write!(f, "{x},")?;
        }
        write!(f, "{}→}}", self.conductor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    /// Brute-force colon over a generous window.
    fn colon_oracle(a: &RelativeIdeal, b: &RelativeIdeal, lo: i64, hi: i64) -> Vec<i64> {
        (lo..hi)
            .filter(|&z| (b.min()..b.conductor() + a.conductor() + 5).all(|y| !b.contains(y) || a.contains(z + y)))
            .collect()
    }

    #[test]
    fn from_generators_examples() {
        let s = sg(&[3, 4, 5]);
        let m = RelativeIdeal::from_generators(&s, &[3, 4, 5]).unwrap();
        assert_eq!(m, s.conductor_ideal());
        assert_eq!(m.conductor(), 3);
        let e = RelativeIdeal::from_generators(&s, &[4, 5]).unwrap();
        assert_eq!(e.encoding(), "4|4,5|7");
        assert_eq!(
            RelativeIdeal::from_generators(&s, &[]),
            Err(Error::EmptyGenerators)
        );
    }

    #[test]
    fn colon_examples() {
        let s = sg(&[3, 4, 5]);
        let whole = s.as_ideal();
        assert_eq!(whole.colon(&whole).unwrap(), whole);
        let nat = s.tail(0);
        assert_eq!(whole.colon(&s.maximal_ideal()).unwrap(), nat);
        assert_eq!(nat.length_over(&whole).unwrap(), 2);
        assert_eq!(whole.colon(&s.conductor_ideal()).unwrap(), nat);
    }

    #[test]
    fn colon_matches_oracle() {
        let s = sg(&[5, 7, 9]);
        let ideals = [
            s.as_ideal(),
            s.maximal_ideal(),
            s.canonical_ideal(),
            RelativeIdeal::from_generators(&s, &[7, 9]).unwrap(),
            RelativeIdeal::from_generators(&s, &[-3, 2]).unwrap(),
        ];
        for a in &ideals {
            for b in &ideals {
                let got = a.colon(b).unwrap();
                let lo = -60;
                let hi = 60;
                let want = colon_oracle(a, b, lo, hi);
                let have: Vec<i64> = (lo..hi).filter(|&z| got.contains(z)).collect();
                assert_eq!(have, want, "{a} − {b}");
            }
        }
    }

    #[test]
    fn dual_and_bidual() {
        let s = sg(&[3, 4, 5]);
        let gamma = s.conductor_ideal();
        assert_eq!(gamma.dual(), s.tail(0));
        assert_eq!(gamma.bidual(), gamma);
        let e = RelativeIdeal::from_generators(&s, &[4, 5]).unwrap();
        assert_eq!(e.dual(), s.tail(-1));
        assert_eq!(e.bidual(), s.tail(4));
        assert_eq!(e.bidual().length_over(&e).unwrap(), 1);
        let m = s.maximal_ideal();
        assert_eq!(m.bidual(), m);
    }

    #[test]
    fn products() {
        let s = sg(&[3, 4, 5]);
        let e = RelativeIdeal::from_generators(&s, &[4, 5]).unwrap();
        assert_eq!(e.product(&s.as_ideal()).unwrap(), e);
        let k = s.canonical_ideal();
        assert_eq!(k.product(&e).unwrap(), k.product(&e.bidual()).unwrap());
        let g = s.conductor_ideal();
        assert_eq!(g.product(&g).unwrap(), s.tail(6));
    }

    #[test]
    fn canonical_examples() {
        let s = sg(&[2, 3]);
        assert_eq!(s.canonical_ideal(), s.as_ideal());
        let s = sg(&[3, 4, 5]);
        assert_eq!(s.canonical_ideal().encoding(), "0|0,1|3");
        let s = sg(&[5, 6, 9]);
        assert_eq!(s.canonical_ideal(), s.as_ideal());
    }

    #[test]
    fn different_examples() {
        let s = sg(&[2, 3]);
        assert_eq!(s.dedekind_different(), s.as_ideal());
        let s = sg(&[3, 4, 5]);
        let theta = s.dedekind_different();
        assert_eq!(theta, s.tail(3));
        assert_eq!(s.as_ideal().length_over(&theta).unwrap(), 1);
    }

    #[test]
    fn lengths() {
        let s = sg(&[3, 4, 5]);
        let e = RelativeIdeal::from_generators(&s, &[4, 5]).unwrap();
        assert_eq!(e.length_over(&e).unwrap(), 0);
        assert_eq!(s.canonical_ideal().length_over(&s.as_ideal()).unwrap(), 1);
        assert_eq!(e.length_over(&s.as_ideal()), Err(Error::NotContained));
        let other = sg(&[2, 3]);
        assert_eq!(
            e.length_over(&other.conductor_ideal()),
            Err(Error::ParentMismatch)
        );
    }

    #[test]
    fn gamma_of_ideal_examples() {
        let s = sg(&[3, 4, 5]);
        let g = s.conductor_ideal().gamma_of_ideal().unwrap();
        assert_eq!((g.c_i, g.n_i), (3, 1));
        let e = RelativeIdeal::from_generators(&s, &[4, 5]).unwrap();
        let g = e.gamma_of_ideal().unwrap();
        assert_eq!((g.c_i, g.n_i), (7, 5));
        assert_eq!(g.r_colon_gamma, s.tail(-4));
        assert_eq!(s.maximal_ideal().gamma_of_ideal().unwrap().c_i, 3);
        assert_eq!(
            s.as_ideal().gamma_of_ideal().unwrap_err(),
            Error::NotIntegralProper
        );
    }

    #[test]
    fn closure_and_flags() {
        let s = sg(&[3, 4, 5]);
        let e = RelativeIdeal::from_generators(&s, &[4, 5]).unwrap();
        let closure = e.integral_closure().unwrap();
        assert_eq!(closure, s.tail(4));
        assert!(!e.is_integrally_closed().unwrap());
        assert_eq!(e.bidual(), closure);
        let g = s.conductor_ideal();
        assert!(g.is_integrally_closed().unwrap() && g.is_reflexive());
        let s = sg(&[4, 5, 7]);
        assert!(s.maximal_ideal().is_integrally_closed().unwrap());
    }

    #[test]
    fn encoding_round_trip_and_validation() {
        let s = sg(&[3, 4, 5]);
        let e = RelativeIdeal::from_generators(&s, &[4, 5]).unwrap();
        assert_eq!(RelativeIdeal::parse_encoding(&s, &e.encoding()).unwrap(), e);
        assert_eq!(s.conductor_ideal().encoding(), "3||3");
        assert!(RelativeIdeal::parse_encoding(&s, "4|4|6").is_ok());
        assert!(RelativeIdeal::parse_encoding(&s, "4|5|7").is_err());
        assert!(RelativeIdeal::parse_encoding(&s, "4|4|5").is_err());
        assert!(RelativeIdeal::parse_encoding(&s, "4|4,5|6").is_err());
    }

    #[test]
    fn principal_detection() {
        let s = sg(&[3, 4, 5]);
        assert!(!s.conductor_ideal().is_principal());
        assert!(RelativeIdeal::from_generators(&s, &[4]).unwrap().is_principal());
        assert!(!RelativeIdeal::from_generators(&s, &[4, 5]).unwrap().is_principal());
    }
}
