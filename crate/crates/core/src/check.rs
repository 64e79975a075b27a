//! Evaluated relations: every check keeps both sides, not just a verdict.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub pass: bool,
    pub lhs: i64,
    pub rhs: i64,
}

impl Check {
    pub fn eq(id: &'static str, lhs: i64, rhs: i64) -> Self {
        Check { id, pass: lhs == rhs, lhs, rhs }
    }

    pub fn le(id: &'static str, lhs: i64, rhs: i64) -> Self {
        Check { id, pass: lhs <= rhs, lhs, rhs }
    }

    pub fn ge(id: &'static str, lhs: i64, rhs: i64) -> Self {
        Check { id, pass: lhs >= rhs, lhs, rhs }
    }

    /// `lhs ⟺ rhs`, sides reported as 0/1.
    pub fn iff(id: &'static str, lhs: bool, rhs: bool) -> Self {
        Check::eq(id, lhs as i64, rhs as i64)
    }

    /// `premise ⟹ conclusion`, sides reported as 0/1.
    pub fn implies(id: &'static str, premise: bool, conclusion: bool) -> Self {
        Check {
            id,
            pass: !premise || conclusion,
            lhs: premise as i64,
            rhs: conclusion as i64,
        }
    }

    /// Equality that only has to hold when `premise` does.
    pub fn eq_if(id: &'static str, premise: bool, lhs: i64, rhs: i64) -> Self {
        Check {
            id,
            pass: !premise || lhs == rhs,
            lhs,
            rhs,
        }
    }

    /// `lhs ≥ rhs`, required only when `premise` holds.
    pub fn ge_if(id: &'static str, premise: bool, lhs: i64, rhs: i64) -> Self {
        Check {
            id,
            pass: !premise || lhs >= rhs,
            lhs,
            rhs,
        }
    }

    /// `lhs ≤ rhs`, required only when `premise` holds.
    pub fn le_if(id: &'static str, premise: bool, lhs: i64, rhs: i64) -> Self {
        Check {
            id,
            pass: !premise || lhs <= rhs,
            lhs,
            rhs,
        }
    }

    /// A predicate that must hold; `lhs` is 1 when it does.
    pub fn holds(id: &'static str, ok: bool) -> Self {
        Check::eq(id, ok as i64, 1)
    }

    /// Several booleans that must all agree; `lhs` is a bitmask of them and
    /// `rhs` the all-true or all-false mask matching the first one.
    pub fn agree(id: &'static str, values: &[bool]) -> Self {
        let mask = values
            .iter()
            .enumerate()
            .fold(0i64, |m, (i, &v)| m | ((v as i64) << i));
        let expected = if values.first().copied().unwrap_or(true) {
            (1i64 << values.len()) - 1
        } else {
            0
        };
        Check::eq(id, mask, expected)
    }
}
