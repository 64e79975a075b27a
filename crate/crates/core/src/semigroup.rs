//! Numerical semigroups stored as a membership table below the conductor.
//!
//! A semigroup `S ⊆ ℕ` is kept in normal form: the conductor `c` (smallest
//! integer with `c + ℕ ⊆ S`) and one bit per integer in `[0, c)`. Everything
//! at or above `c` is a member, everything negative is not.
//!
//! Notation used throughout the crate: `e` multiplicity, `δ` genus,
//! `n = c − δ`, and `s_0 = 0 < s_1 < … < s_n = c` the small elements.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::bits::BitTable;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    conductor: i64,
    multiplicity: i64,
    members: BitTable,
    below: Vec<i64>,
    generators: Vec<i64>,
}

/// Numeric summary of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicInvariants {
    pub multiplicity: i64,
    pub conductor: i64,
    pub frobenius: i64,
    pub genus: i64,
    pub n: i64,
    pub small_elements: Vec<i64>,
    pub gaps: Vec<i64>,
    pub minimal_generators: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    pub cm_type: i64,
}

/// Gorenstein and Arf predicates, each evaluated by two routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub is_gorenstein: bool,
    pub is_arf: bool,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl NumericalSemigroup {
    /// The semigroup `ℕ` (value semigroup of a DVR).
    pub fn natural() -> Self {
        Self::from_table(0, BitTable::new(0))
    }

    /// Smallest numerical semigroup containing `gens`.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::InvalidGenerator(g));
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d > 1 {
            return Err(Error::NotCoprime(d));
        }
        let e = *gens.iter().min().unwrap();
        // sieve until e consecutive members appear; from there on everything is in S
        let mut member = vec![true];
        let mut run = 0i64;
        let mut x = 0i64;
        while run < e {
            x += 1;
            let is_in = gens
                .iter()
                .any(|&g| x - g >= 0 && member[(x - g) as usize]);
            member.push(is_in);
            run = if is_in { run + 1 } else { 0 };
        }
        let conductor = if e == 1 { 0 } else { x - e + 1 };
        let table = BitTable::from_fn(conductor as usize, |i| member[i]);
        Ok(Self::from_table(conductor, table))
    }

    /// `elements ∪ ℤ_{≥conductor}` after validating closure and tightness.
    ///
    /// `elements` must contain 0 and otherwise lie below the conductor.
    pub fn from_small_elements(elements: &[i64], conductor: i64) -> Result<Self> {
        if conductor < 0 {
            return Err(Error::InvalidElements(format!(
                "negative conductor {conductor}"
            )));
        }
        if !elements.contains(&0) {
            return Err(Error::InvalidElements("0 must be an element".into()));
        }
        let mut table = BitTable::new(conductor as usize);
        for &x in elements {
            if x < 0 || (x >= conductor && x != 0) {
                return Err(Error::InvalidElements(format!(
                    "{x} lies outside [0, {conductor})"
                )));
            }
            if x < conductor {
                table.set(x as usize);
            }
        }
        if conductor >= 1 && table.get(conductor as usize - 1) {
            return Err(Error::ConductorNotTight(conductor));
        }
        let is_in = |x: i64| x >= conductor || table.get(x as usize);
        let below: Vec<i64> = table.ones().map(|i| i as i64).collect();
        for &a in &below {
            for &b in &below {
                if b < a {
                    continue;
                }
                if !is_in(a + b) {
                    return Err(Error::NotClosed(a, b));
                }
            }
        }
        Ok(Self::from_table(conductor, table))
    }

    fn from_table(conductor: i64, members: BitTable) -> Self {
        let below: Vec<i64> = members.ones().map(|i| i as i64).collect();
        let multiplicity = below.get(1).copied().unwrap_or(conductor.max(1));
        let mut s = NumericalSemigroup {
            conductor,
            multiplicity,
            members,
            below,
            generators: Vec::new(),
        };
        s.generators = s.compute_minimal_generators();
        s
    }

    fn compute_minimal_generators(&self) -> Vec<i64> {
        let e = self.multiplicity;
        (1..=self.conductor + e)
            .filter(|&x| self.contains(x))
            .filter(|&x| !(1..=x / 2).any(|a| self.contains(a) && self.contains(x - a)))
            .collect()
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        if x >= self.conductor {
            true
        } else if x < 0 {
            false
        } else {
            self.members.get(x as usize)
        }
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn frobenius(&self) -> i64 {
        self.conductor - 1
    }

    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    /// Number of gaps `δ`.
    pub fn genus(&self) -> i64 {
        self.conductor - self.below.len() as i64
    }

    /// `n = c − δ`, the number of elements below the conductor.
    pub fn n(&self) -> usize {
        self.below.len()
    }

    pub fn is_natural(&self) -> bool {
        self.conductor == 0
    }

    /// `s_0 < s_1 < … < s_n = c`.
    pub fn small_elements(&self) -> Vec<i64> {
        let mut v = self.below.clone();
        v.push(self.conductor);
        v
    }

    /// Elements strictly below the conductor.
    pub fn elements_below_conductor(&self) -> &[i64] {
        &self.below
    }

    /// The `i`-th element of `S` in increasing order (`s_i = c + i − n` for `i ≥ n`).
    pub fn small_element(&self, i: usize) -> i64 {
        if i < self.below.len() {
            self.below[i]
        } else {
            self.conductor + (i - self.below.len()) as i64
        }
    }

    /// Index `i` with `s_i = x`, if `x ∈ S`.
    pub fn index_of(&self, x: i64) -> Option<usize> {
        if x >= self.conductor {
            Some(self.below.len() + (x - self.conductor) as usize)
        } else {
            self.below.binary_search(&x).ok()
        }
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..self.conductor).filter(|&x| !self.contains(x)).collect()
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.generators
    }

    /// `(S − M) \ S` where `M = S \ {0}`; for `ℕ` this is `{−1}`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.is_natural() {
            return vec![-1];
        }
        self.gaps()
            .into_iter()
            .filter(|&x| {
                self.below[1..]
                    .iter()
                    .chain(self.generators.iter())
                    .all(|&m| self.contains(x + m))
            })
            .collect()
    }

    /// Cohen–Macaulay type `r`.
    pub fn cm_type(&self) -> i64 {
        self.pseudo_frobenius().len() as i64
    }

    pub fn basic_invariants(&self) -> BasicInvariants {
        let pseudo_frobenius = self.pseudo_frobenius();
        BasicInvariants {
            multiplicity: self.multiplicity,
            conductor: self.conductor,
            frobenius: self.frobenius(),
            genus: self.genus(),
            n: self.n() as i64,
            small_elements: self.small_elements(),
            gaps: self.gaps(),
            minimal_generators: self.generators.clone(),
            cm_type: pseudo_frobenius.len() as i64,
            pseudo_frobenius,
        }
    }

    /// `s + t − u ∈ S` for all `s ≥ t ≥ u` in `S`, checked on the small
    /// elements and `[c, c + e]` (anything larger forces `s + t − u ≥ c`).
    pub fn is_arf_by_closure(&self) -> bool {
        let window: Vec<i64> = self
            .below
            .iter()
            .copied()
            .chain(self.conductor..=self.conductor + self.multiplicity)
            .collect();
        for (i, &s) in window.iter().enumerate() {
            for (j, &t) in window[..=i].iter().enumerate() {
                for &u in &window[..=j] {
                    if !self.contains(s + t - u) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Arf via lengths: `l(R:R_i / R) = s_i − i` for `1 ≤ i ≤ n`.
    pub fn is_arf_by_duals(&self) -> bool {
        let whole = self.as_ideal();
        (1..=self.n()).all(|i| {
            let dual = self.chain_ideal(i).dual();
            dual.length_over(&whole).expect("R ⊆ R:R_i") as i64
                == self.small_element(i) - i as i64
        })
    }

    /// Gorenstein and Arf flags. Panics if the two routes for either flag
    /// disagree, which would indicate a bug.
    pub fn predicates(&self) -> Predicates {
        let by_genus = 2 * self.genus() == self.conductor;
        let by_type = self.cm_type() == 1;
        assert_eq!(by_genus, by_type, "Gorenstein routes disagree on {self}");
        let arf = self.is_arf_by_closure();
        assert_eq!(arf, self.is_arf_by_duals(), "Arf routes disagree on {self}");
        Predicates {
            is_gorenstein: by_genus,
            is_arf: arf,
        }
    }

    pub fn is_gorenstein(&self) -> bool {
        2 * self.genus() == self.conductor
    }

    /// `T ∪ {x}` if that is again a semigroup.
    fn with_gap_added(&self, x: i64) -> Option<Self> {
        debug_assert!(!self.contains(x) && x > 0);
        let is_in = |y: i64| y == x || self.contains(y);
        if !is_in(2 * x) {
            return None;
        }
        if self.below.iter().skip(1).any(|&s| !is_in(s + x)) {
            return None;
        }
        let mut conductor = self.conductor;
        while conductor > 0 && is_in(conductor - 1) {
            conductor -= 1;
        }
        let table = BitTable::from_fn(conductor as usize, |i| is_in(i as i64));
        Some(Self::from_table(conductor, table))
    }

    /// All semigroups `T` with `S ⊆ T ⊆ ℕ`, by descending genus then
    /// lexicographic small elements.
    pub fn oversemigroups(&self) -> Vec<NumericalSemigroup> {
        let mut seen: BTreeSet<Key> = BTreeSet::new();
        let mut stack = vec![self.clone()];
        seen.insert(Key(self.clone()));
        while let Some(t) = stack.pop() {
            for x in t.gaps() {
                if let Some(u) = t.with_gap_added(x) {
                    if seen.insert(Key(u.clone())) {
                        stack.push(u);
                    }
                }
            }
        }
        let mut all: Vec<_> = seen.into_iter().map(|k| k.0).collect();
        all.sort_by(|a, b| {
            b.genus()
                .cmp(&a.genus())
                .then_with(|| a.below.cmp(&b.below))
                .then_with(|| a.conductor.cmp(&b.conductor))
        });
        all
    }

    /// `S ⊆ other`.
    pub fn is_subset_of(&self, other: &NumericalSemigroup) -> bool {
        other.conductor <= self.conductor && self.below.iter().all(|&s| other.contains(s))
    }

    /// Children in the semigroup tree: `S \ {x}` for minimal generators
    /// `x > F(S)`, ordered by `x`.
    pub fn children(&self) -> Vec<NumericalSemigroup> {
        self.generators
            .iter()
            .filter(|&&x| x > self.frobenius())
            .map(|&x| {
                let conductor = x + 1;
                let table =
                    BitTable::from_fn(conductor as usize, |i| i as i64 != x && self.contains(i as i64));
                Self::from_table(conductor, table)
            })
            .collect()
    }

    /// Canonical text form `"s_0,s_1,…|c"` listing elements below the
    /// conductor (`"0|0"` for `ℕ`).
    pub fn encoding(&self) -> String {
        let list: Vec<i64> = if self.below.is_empty() {
            vec![0]
        } else {
            self.below.clone()
        };
        format!("{}|{}", join(&list), self.conductor)
    }

    pub fn parse_encoding(text: &str) -> Result<Self> {
        let (elements, conductor) = text
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("semigroup encoding {text:?}")))?;
        let conductor: i64 = conductor
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("conductor in {text:?}")))?;
        let elements = parse_list(elements)?;
        Self::from_small_elements(&elements, conductor)
    }

    // Ideals attached to the semigroup.

    /// `S` viewed as a relative ideal over itself.
    pub fn as_ideal(&self) -> RelativeIdeal<'_> {
        RelativeIdeal::from_predicate(self, 0, self.conductor.max(1), |x| self.contains(x))
    }

    /// `m = S \ {0}`.
    pub fn maximal_ideal(&self) -> RelativeIdeal<'_> {
        RelativeIdeal::from_predicate(self, 1, self.conductor.max(1), |x| self.contains(x))
    }

    /// Conductor ideal `γ = ℤ_{≥c}`.
    pub fn conductor_ideal(&self) -> RelativeIdeal<'_> {
        self.tail(self.conductor)
    }

    /// `ℤ_{≥k}` as a relative ideal.
    pub fn tail(&self, k: i64) -> RelativeIdeal<'_> {
        RelativeIdeal::from_predicate(self, k, k, |_| true)
    }

    /// `R_i = {s ∈ S : s ≥ s_i}`.
    pub fn chain_ideal(&self, i: usize) -> RelativeIdeal<'_> {
        let si = self.small_element(i);
        RelativeIdeal::from_predicate(self, si, self.conductor.max(si), |x| self.contains(x))
    }

    /// Canonical ideal `K = {x : c − 1 − x ∉ S}`.
    pub fn canonical_ideal(&self) -> RelativeIdeal<'_> {
        let c = self.conductor;
        RelativeIdeal::from_predicate(self, 0, c.max(1), |x| !self.contains(c - 1 - x))
    }

    /// Dedekind different `θ_D = S − K`.
    pub fn dedekind_different(&self) -> RelativeIdeal<'_> {
        self.as_ideal()
            .colon(&self.canonical_ideal())
            .expect("same parent")
    }
}

/// Ordering wrapper: genus, then conductor, then membership.
#[derive(Clone, PartialEq, Eq)]
struct Key(NumericalSemigroup);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .conductor
            .cmp(&other.0.conductor)
            .then_with(|| self.0.below.cmp(&other.0.below))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩", join(&self.generators))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup({})", self.encoding())
    }
}

pub(crate) fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn parse_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Error::Parse(format!("integer {s:?}"))))
        .collect()
}
