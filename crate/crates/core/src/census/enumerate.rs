//! Semigroup tree and ideal enumeration.

use super::{Bound, CensusQuery};
use crate::bits::BitTable;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// Largest ideal window accepted by [`enumerate_ideals`].
pub const MAX_WINDOW: u32 = 24;

/// A unit of parallel work: one node, or a whole subtree rooted at a node.
#[derive(Debug, Clone)]
pub(crate) enum Task {
    Node(NumericalSemigroup),
    Subtree(NumericalSemigroup),
}

fn within(bound: Bound, s: &NumericalSemigroup) -> bool {
    match bound {
        Bound::Genus(g) => s.genus() <= g as i64,
        Bound::Conductor(c) => s.conductor() <= c as i64,
    }
}

/// Tree children sorted by canonical encoding.
fn ordered_children(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let mut v = s.children();
    v.sort_by_cached_key(|c| c.encoding());
    v
}

/// Preorder walk of the subtree at `root`, children in encoding order. Genus and conductor both grow along tree edges, so the bound
/// prunes whole subtrees.
pub(crate) fn walk(root: NumericalSemigroup, bound: Bound, out: &mut impl FnMut(NumericalSemigroup)) {
    if !within(bound, &root) {
        return;
    }
    let children = ordered_children(&root);
    out(root);
    for child in children {
        walk(child, bound, out);
    }
}

/// Tasks in preorder: nodes of depth 0 and 1 singly, depth-2 subtrees whole.
pub(crate) fn tasks(bound: Bound) -> Vec<Task> {
    let mut out = Vec::new();
    let root = NumericalSemigroup::natural();
    if !within(bound, &root) {
        return out;
    }
    let level1 = ordered_children(&root);
    out.push(Task::Node(root));
    for a in level1.into_iter().filter(|s| within(bound, s)) {
        let level2 = ordered_children(&a);
        out.push(Task::Node(a));
        for b in level2.into_iter().filter(|s| within(bound, s)) {
            out.push(Task::Subtree(b));
        }
    }
    out
}

impl Task {
    pub(crate) fn expand(self, bound: Bound) -> Vec<NumericalSemigroup> {
        match self {
            Task::Node(s) => vec![s],
            Task::Subtree(s) => {
                let mut v = Vec::new();
                walk(s, bound, &mut |t| v.push(t));
                v
            }
        }
    }
}

/// Every numerical semigroup within the query's bound that passes its
/// filters, in tree preorder.
pub fn enumerate_semigroups(query: &CensusQuery) -> Result<Vec<NumericalSemigroup>> {
    query.validate()?;
    let mut out = Vec::new();
    let bound = match &query.scope {
        super::Scope::Bound(b) => *b,
        super::Scope::Explicit(v) => return Ok(v.iter().filter(|s| query.accepts(s)).cloned().collect()),
    };
    walk(NumericalSemigroup::natural(), bound, &mut |s| {
        if query.accepts(&s) {
            out.push(s);
        }
    });
    Ok(out)
}

/// Every proper integral ideal `E` of `s` with `c_E ≤ c + window`, sorted by
/// normal form.
///
/// With `U = c + window`, such an ideal is `D ∪ ℤ_{≥U}` for a unique
/// `D ⊆ S ∩ [1, U)`. Candidates are decided from the top down: `x` may join
/// `D` only if every `x + s` (`s ∈ S \ {0}`, `x + s < U`) already has.
pub fn enumerate_ideals(s: &NumericalSemigroup, window: u32) -> Result<Vec<RelativeIdeal<'_>>> {
    if window > MAX_WINDOW {
        return Err(Error::WindowTooLarge {
            requested: window,
            limit: MAX_WINDOW,
        });
    }
    let upper = s.conductor() + window as i64;
    if upper < 1 {
        return Ok(Vec::new());
    }
    let candidates: Vec<i64> = (1..upper).rev().filter(|&x| s.contains(x)).collect();
    let steps: Vec<i64> = (1..upper).filter(|&x| s.contains(x)).collect();
    let mut chosen = BitTable::new(upper as usize);
    let mut out = Vec::new();
    ideal_dfs(s, upper, &candidates, &steps, 0, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

fn ideal_dfs<'s>(
    s: &'s NumericalSemigroup,
    upper: i64,
    candidates: &[i64],
    steps: &[i64],
    at: usize,
    chosen: &mut BitTable,
    out: &mut Vec<RelativeIdeal<'s>>,
) {
    let Some(&x) = candidates.get(at) else {
        out.push(RelativeIdeal::from_predicate(s, 1, upper, |y| {
            chosen.get(y as usize)
        }));
        return;
    };
    ideal_dfs(s, upper, candidates, steps, at + 1, chosen, out);
    let closed = steps
        .iter()
        .take_while(|&&t| x + t < upper)
        .all(|&t| chosen.get((x + t) as usize));
    if closed {
        chosen.set(x as usize);
        ideal_dfs(s, upper, candidates, steps, at + 1, chosen, out);
        chosen.clear(x as usize);
    }
}

/// Relative ideals `E` with `S ⊆ E ⊆ ℕ`: one per translation class of
/// nonzero ideals, normalised to `min(E) = 0`. Sorted by normal form.
pub fn enumerate_ideal_classes(s: &NumericalSemigroup) -> Vec<RelativeIdeal<'_>> {
    let c = s.conductor();
    let gaps: Vec<i64> = s.gaps().into_iter().rev().collect();
    let steps: Vec<i64> = (1..c).filter(|&x| s.contains(x)).collect();
    let mut chosen = BitTable::new(c.max(0) as usize);
    let mut out = Vec::new();
    class_dfs(s, &gaps, &steps, 0, &mut chosen, &mut out);
    out.sort();
    out
}

fn class_dfs<'s>(
    s: &'s NumericalSemigroup,
    gaps: &[i64],
    steps: &[i64],
    at: usize,
    chosen: &mut BitTable,
    out: &mut Vec<RelativeIdeal<'s>>,
) {
    let c = s.conductor();
    let Some(&x) = gaps.get(at) else {
        out.push(RelativeIdeal::from_predicate(s, 0, c.max(1), |y| {
            s.contains(y) || chosen.get(y as usize)
        }));
        return;
    };
    class_dfs(s, gaps, steps, at + 1, chosen, out);
    let closed = steps
        .iter()
        .take_while(|&&t| x + t < c)
        .all(|&t| s.contains(x + t) || chosen.get((x + t) as usize));
    if closed {
        chosen.set(x as usize);
        class_dfs(s, gaps, steps, at + 1, chosen, out);
        chosen.clear(x as usize);
    }
}

/// `g + E` for the least `g ≥ 1` with `g + E ⊆ S`: a proper integral ideal
/// in the translation class of `E`.
pub fn class_representative<'s>(class: &RelativeIdeal<'s>) -> RelativeIdeal<'s> {
    let dual = class.dual();
    let g = (1..)
        .find(|&g| dual.contains(g))
        .expect("the dual contains a conductor tail");
    class.translate(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    /// Ideals by brute force over all subsets of `S ∩ [1, U)`.
    fn ideal_oracle(s: &NumericalSemigroup, window: u32) -> Vec<String> {
        let upper = s.conductor() + window as i64;
        let pool: Vec<i64> = (1..upper).filter(|&x| s.contains(x)).collect();
        let mut out = Vec::new();
        for mask in 0u64..1 << pool.len() {
            let inside = |y: i64| {
                y >= upper || pool.iter().position(|&p| p == y).is_some_and(|i| mask >> i & 1 == 1)
            };
            let closed = (1..upper).all(|x| {
                !inside(x) || (1..upper + 1).all(|t| !s.contains(t) || inside(x + t))
            });
            if closed && upper >= 1 {
                out.push(RelativeIdeal::from_predicate(s, 1, upper, inside).encoding());
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn ideals_match_brute_force() {
        for (g, w) in [(&[3, 4, 5][..], 0), (&[3, 4, 5], 4), (&[4, 5, 7], 2), (&[5, 6, 9], 1), (&[2, 7], 3)] {
            let s = sg(g);
            let mut got: Vec<String> = enumerate_ideals(&s, w).unwrap().iter().map(|e| e.encoding()).collect();
            got.sort();
            assert_eq!(got, ideal_oracle(&s, w), "{s} W={w}");
        }
    }

    #[test]
    fn ideal_examples() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(enumerate_ideals(&s, 0).unwrap(), vec![s.conductor_ideal()]);
        let four = RelativeIdeal::from_generators(&s, &[4, 5]).unwrap();
        assert!(enumerate_ideals(&s, 4).unwrap().contains(&four));
        assert!(enumerate_ideals(&NumericalSemigroup::natural(), 0).unwrap().is_empty());
        assert!(matches!(enumerate_ideals(&s, 99), Err(Error::WindowTooLarge { .. })));
    }

    #[test]
    fn classes() {
        let s = sg(&[3, 4, 5]);
        // S, S ∪ {1}, S ∪ {2}, ℕ
        let classes = enumerate_ideal_classes(&s);
        assert_eq!(classes.len(), 4);
        for e in &classes {
            let rep = class_representative(e);
            assert!(rep.is_proper_integral());
            assert_eq!(rep.translate(-RelativeIdeal::min(&rep)), *e);
        }
    }
}
