//! Type sequence `[r_1, …, r_n]` along the chain `R = R_0 ⊃ R_1 ⊃ … ⊃ R_n = γ`.

use serde::Serialize;

use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TypeSequence {
    values: Vec<i64>,
}

impl TypeSequence {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `r_h` for `h ≥ 1`, extended by `r_h = 1` past `n`.
    pub fn r(&self, h: usize) -> i64 {
        assert!(h >= 1, "type sequence is 1-indexed");
        self.values.get(h - 1).copied().unwrap_or(1)
    }

    /// Cohen–Macaulay type `r = r_1` (1 for `ℕ`).
    pub fn cm_type(&self) -> i64 {
        self.r(1)
    }

    /// `Σ_{h ≤ i} r_h = l(R:R_i / R)`.
    pub fn prefix_sum(&self, i: usize) -> i64 {
        (1..=i).map(|h| self.r(h)).sum()
    }

    /// `[r, 1, …, 1]`.
    pub fn is_almost_gorenstein_shape(&self) -> bool {
        self.values.iter().skip(1).all(|&v| v == 1)
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }
}

/// Type sequence through the dual chain: `r_i = #(D_i \ D_{i−1})` with
/// `D_i = S − R_i`.
///
/// Uses `D_n = ℕ` and `D_{i−1} = D_i ∩ (S − s_{i−1})`, which holds because
/// `R_{i−1} = {s_{i−1}} ∪ R_i`. All `D_i` with `i ≤ n` lie in `ℕ` and contain
/// `[c, ∞)`, so a table over `[0, c)` suffices.
pub fn type_sequence(s: &NumericalSemigroup) -> TypeSequence {
    let c = s.conductor() as usize;
    let n = s.n();
    let mut dual = vec![true; c];
    let mut values = vec![0; n];
    for i in (1..=n).rev() {
        let shift = s.small_element(i - 1);
        let mut removed = 0;
        for (z, slot) in dual.iter_mut().enumerate() {
            if *slot && !s.contains(z as i64 + shift) {
                *slot = false;
                removed += 1;
            }
        }
        values[i - 1] = removed;
    }
    let ts = TypeSequence { values };
    debug_assert_eq!(ts, type_sequence_via_canonical(s));
    ts
}

/// Type sequence through canonical-ideal products: `r_i = #(U_{i−1} \ U_i)`
/// with `U_i = K + R_i = ∪_{j ≥ i} (s_j + K)`.
pub fn type_sequence_via_canonical(s: &NumericalSemigroup) -> TypeSequence {
    let c = s.conductor();
    let n = s.n();
    // K ⊆ ℕ and K ⊇ ℤ_{≥c}; U_n = ℤ_{≥c}
    let in_k = |x: i64| x >= 0 && !s.contains(c - 1 - x);
    let mut covered = vec![false; c as usize];
    let mut values = vec![0; n];
    for i in (1..=n).rev() {
        let shift = s.small_element(i - 1);
        let mut added = 0;
        for (x, slot) in covered.iter_mut().enumerate() {
            if !*slot && in_k(x as i64 - shift) {
                *slot = true;
                added += 1;
            }
        }
        values[i - 1] = added;
    }
    TypeSequence { values }
}

/// `[r_1, …, r_m]` for `m ≥ n`, with the entries past `n` computed from
/// the duals of `R_h` directly rather than assumed.
pub fn extended_type_sequence(s: &NumericalSemigroup, m: usize) -> Vec<i64> {
    let mut out = type_sequence(s).values;
    let n = out.len();
    let mut previous = s.chain_ideal(n).dual();
    for h in n + 1..=m.max(n) {
        let next = s.chain_ideal(h).dual();
        out.push(next.length_over(&previous).expect("dual chain increases") as i64);
        previous = next;
    }
    out.truncate(m.max(n));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    /// Definition-level oracle: `r_i = l(R:R_i / R:R_{i−1})` via generic colons.
    fn oracle(s: &NumericalSemigroup) -> Vec<i64> {
        (1..=s.n())
            .map(|i| {
                let big = s.chain_ideal(i).dual();
                let small = s.chain_ideal(i - 1).dual();
                big.length_over(&small).unwrap() as i64
            })
            .collect()
    }

    #[test]
    fn examples() {
        assert!(type_sequence(&NumericalSemigroup::natural()).is_empty());
        assert_eq!(type_sequence(&sg(&[5, 6, 9])).values(), &[1; 7]);
        assert_eq!(type_sequence(&sg(&[4, 5, 7])).values(), &[2, 1, 1]);
        assert_eq!(type_sequence(&sg(&[3, 4, 5])).values(), &[2]);
    }

    #[test]
    fn agrees_with_generic_colons() {
        for g in [&[4, 5, 7][..], &[5, 7, 9], &[6, 7, 8, 9, 10], &[9, 15, 17, 23, 25, 29, 31], &[4, 6, 9, 11]] {
            let s = sg(g);
            assert_eq!(type_sequence(&s).values(), &oracle(&s)[..], "{s}");
            assert_eq!(type_sequence(&s), type_sequence_via_canonical(&s));
        }
    }

    #[test]
    fn extension() {
        assert_eq!(extended_type_sequence(&sg(&[3, 4, 5]), 5), vec![2, 1, 1, 1, 1]);
        assert_eq!(extended_type_sequence(&NumericalSemigroup::natural(), 3), vec![1, 1, 1]);
        assert_eq!(extended_type_sequence(&sg(&[5, 6, 9]), 8), vec![1; 8]);
    }
}
