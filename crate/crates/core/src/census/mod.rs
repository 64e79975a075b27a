//! Exhaustive verification over enumerated semigroups and ideals.
//!
//! Semigroups come from the semigroup tree (children of `S` are `S \ {x}`
//! for minimal generators `x > F(S)`), walked in preorder. Work is split
//! into tasks (single nodes at depth 0 and 1, whole subtrees at depth 2)
//! that run on a rayon pool; results are concatenated in task order, so a
//! report never depends on the worker count.

mod enumerate;
mod report;

pub use enumerate::{
    class_representative, enumerate_ideal_classes, enumerate_ideals, enumerate_semigroups,
    MAX_WINDOW,
};
pub use report::{CensusReport, NegativeAHit, Tally, Violation};

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::invariants::{ClassificationTag, IdealAnalysis, SemigroupContext};
use crate::semigroup::NumericalSemigroup;
use enumerate::Task;

/// Default genus guard; conductor bounds may go to twice this.
pub const DEFAULT_GUARD: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Genus(u32),
    Conductor(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GorensteinFilter {
    #[default]
    Any,
    Only,
    Exclude,
}

/// Groups of checks; a selection token is a group name, a check id, or a
/// check-id prefix.
pub const CHECK_GROUPS: [&str; 7] = [
    "semigroup",
    "ideal",
    "matlis",
    "jaeger",
    "overring",
    "gamma_profile",
    "classification",
];

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckSelection {
    tokens: Vec<String>,
}

impl CheckSelection {
    pub fn all() -> Self {
        CheckSelection::default()
    }

    /// Comma-separated tokens; `"all"` (or nothing) selects everything.
    pub fn parse(text: &str) -> Self {
        let tokens: Vec<String> = text
            .split(',')
            .map(|t| t.trim().to_string())
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.iter().any(|t| t == "all") {
            return CheckSelection::all();
        }
        CheckSelection { tokens }
    }

    pub fn groups(groups: &[&str]) -> Self {
        CheckSelection {
            tokens: groups.iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn is_all(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Whether any check of `group` could be selected.
    fn wants_group(&self, group: &str) -> bool {
        self.is_all()
            || self
                .tokens
                .iter()
                .any(|t| t == group || !CHECK_GROUPS.contains(&t.as_str()))
    }

    fn wants(&self, group: &str, id: &str) -> bool {
        self.is_all()
            || self
                .tokens
                .iter()
                .any(|t| t == group || id.starts_with(t.as_str()))
    }
}

#[derive(Debug, Clone)]
pub enum Scope {
    Bound(Bound),
    /// A fixed list of semigroups instead of the tree.
    Explicit(Vec<NumericalSemigroup>),
}

#[derive(Debug, Clone)]
pub struct CensusQuery {
    pub scope: Scope,
    /// Ideals with `c_I ≤ c + window` are enumerated.
    pub window: u32,
    pub min_multiplicity: Option<i64>,
    pub max_multiplicity: Option<i64>,
    pub gorenstein: GorensteinFilter,
    pub checks: CheckSelection,
    pub workers: usize,
    /// Ideal pairs per semigroup used for Jäger-inequality triples.
    pub sample_limit: usize,
    pub guard: u32,
}

impl CensusQuery {
    fn new(scope: Scope) -> Self {
        CensusQuery {
            scope,
            window: 0,
            min_multiplicity: None,
            max_multiplicity: None,
            gorenstein: GorensteinFilter::Any,
            checks: CheckSelection::all(),
            workers: 1,
            sample_limit: 16,
            guard: DEFAULT_GUARD,
        }
    }

    pub fn max_genus(g: u32) -> Self {
        Self::new(Scope::Bound(Bound::Genus(g)))
    }

    pub fn max_conductor(c: u32) -> Self {
        Self::new(Scope::Bound(Bound::Conductor(c)))
    }

    pub fn explicit(semigroups: Vec<NumericalSemigroup>) -> Self {
        Self::new(Scope::Explicit(semigroups))
    }

    pub fn window(mut self, w: u32) -> Self {
        self.window = w;
        self
    }

    pub fn workers(mut self, n: usize) -> Self {
        self.workers = n.max(1);
        self
    }

    pub fn checks(mut self, sel: CheckSelection) -> Self {
        self.checks = sel;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if let Scope::Bound(bound) = self.scope {
            let (requested, limit) = match bound {
                Bound::Genus(g) => (g, self.guard),
                Bound::Conductor(c) => (c, 2 * self.guard),
            };
            if requested > limit {
                return Err(Error::BoundTooLarge { requested, limit });
            }
        }
        if self.window > MAX_WINDOW {
            return Err(Error::WindowTooLarge {
                requested: self.window,
                limit: MAX_WINDOW,
            });
        }
        Ok(())
    }

    pub fn accepts(&self, s: &NumericalSemigroup) -> bool {
        let e = s.multiplicity();
        self.min_multiplicity.is_none_or(|m| e >= m)
            && self.max_multiplicity.is_none_or(|m| e <= m)
            && match self.gorenstein {
                GorensteinFilter::Any => true,
                GorensteinFilter::Only => s.is_gorenstein(),
                GorensteinFilter::Exclude => !s.is_gorenstein(),
            }
    }

    fn describe_scope(&self) -> String {
        match &self.scope {
            Scope::Bound(Bound::Genus(g)) => format!("genus <= {g}"),
            Scope::Bound(Bound::Conductor(c)) => format!("conductor <= {c}"),
            Scope::Explicit(v) => {
                let enc: Vec<String> = v.iter().map(|s| s.encoding()).collect();
                format!("explicit [{}]", enc.join("; "))
            }
        }
    }

    /// Applies `f` to every accepted semigroup, in deterministic order.
    fn map_semigroups<T: Send>(&self, f: impl Fn(&NumericalSemigroup) -> T + Sync) -> Result<Vec<T>> {
        self.validate()?;
        let (tasks, bound) = match &self.scope {
            Scope::Bound(b) => (enumerate::tasks(*b), Some(*b)),
            Scope::Explicit(v) => (v.iter().cloned().map(Task::Node).collect(), None),
        };
        let run = |task: Task| -> Vec<T> {
            let members = match bound {
                Some(b) => task.expand(b),
                None => match task {
                    Task::Node(s) | Task::Subtree(s) => vec![s],
                },
            };
            members.iter().filter(|s| self.accepts(s)).map(&f).collect()
        };
        let chunks: Vec<Vec<T>> = if self.workers <= 1 {
            tasks.into_iter().map(run).collect()
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.workers)
                .build()
                .expect("thread pool");
            pool.install(|| tasks.into_par_iter().map(run).collect())
        };
        Ok(chunks.into_iter().flatten().collect())
    }
}

/// What one semigroup contributes to a report.
#[derive(Debug, Default)]
struct Outcome {
    genus: i64,
    ideals: u64,
    overring_pairs: u64,
    tallies: BTreeMap<&'static str, Tally>,
    violations: Vec<Violation>,
    tag: Option<ClassificationTag>,
    encoding: String,
}

impl Outcome {
    fn record(&mut self, sel: &CheckSelection, group: &str, ideal: &str, checks: &[Check]) {
        for c in checks.iter().filter(|c| sel.wants(group, c.id)) {
            let t = self.tallies.entry(c.id).or_default();
            if c.pass {
                t.pass += 1;
            } else {
                t.fail += 1;
                self.violations.push(Violation {
                    semigroup: self.encoding.clone(),
                    ideal: ideal.to_string(),
                    check_id: c.id.to_string(),
                    lhs: c.lhs,
                    rhs: c.rhs,
                });
            }
        }
    }
}

fn verify_one(s: &NumericalSemigroup, query: &CensusQuery) -> Outcome {
    let sel = &query.checks;
    let ctx = SemigroupContext::new(s);
    let mut out = Outcome {
        genus: s.genus(),
        encoding: s.encoding(),
        ..Outcome::default()
    };
    if sel.wants_group("semigroup") {
        out.record(sel, "semigroup", "", &ctx.semigroup_checks());
    }
    if ["ideal", "matlis", "jaeger"].iter().any(|g| sel.wants_group(g)) {
        let ideals = enumerate_ideals(s, query.window).expect("window validated");
        let analyses: Vec<IdealAnalysis<'_>> = ideals
            .iter()
            .map(|i| ctx.analyze(i).expect("enumerated ideals are proper"))
            .collect();
        out.ideals = analyses.len() as u64;
        if sel.wants_group("ideal") {
            for x in &analyses {
                out.record(sel, "ideal", &x.ideal.encoding(), &ctx.ideal_checks(x));
            }
        }
        if sel.wants_group("matlis") {
            out.record(sel, "matlis", "", &ctx.classify_ring(&analyses).checks);
        }
        if sel.wants_group("jaeger") {
            jaeger_triples(&ctx, &analyses, query.sample_limit, sel, &mut out);
        }
    }
    if sel.wants_group("overring") {
        for t in s.oversemigroups() {
            let rep = ctx.overring_report(&t).expect("listed oversemigroups contain S");
            out.overring_pairs += 1;
            let ideal = rep.conductor_ideal.clone().unwrap_or_default();
            out.record(sel, "overring", &ideal, &rep.checks);
        }
    }
    if !s.is_natural() && sel.wants_group("gamma_profile") {
        let prof = ctx.gamma_profile().expect("S is not ℕ");
        out.record(sel, "gamma_profile", "", &prof.checks);
    }
    let cl = ctx.classify_b();
    if sel.wants_group("classification") {
        out.record(sel, "classification", "", &cl.checks);
    }
    out.tag = Some(cl.tag);
    out
}

/// `l(M:I / M:N) ≤ l(M:m / M) · l(N/I)` for `I ⊆ N` from the family and a
/// few fixed `M`.
fn jaeger_triples(
    ctx: &SemigroupContext<'_>,
    family: &[IdealAnalysis<'_>],
    limit: usize,
    sel: &CheckSelection,
    out: &mut Outcome,
) {
    let ms = [&ctx.whole, &ctx.canonical, &ctx.maximal, &ctx.gamma, &ctx.different];
    let mut pairs = 0;
    'outer: for small in family {
        for big in family {
            if pairs >= limit {
                break 'outer;
            }
            if !small.ideal.is_subset_of(&big.ideal) {
                continue;
            }
            pairs += 1;
            let l_sets = ctx.len(&big.ideal, &small.ideal);
            let mut checks = Vec::with_capacity(ms.len());
            for m in ms {
                let m_small = m.colon(&small.ideal).expect("same parent");
                let m_big = m.colon(&big.ideal).expect("same parent");
                let m_max = m.colon(&ctx.maximal).expect("same parent");
                checks.push(Check::le(
                    "jaeger_inequality_triple",
                    ctx.len(&m_small, &m_big),
                    ctx.len(&m_max, m) * l_sets,
                ));
            }
            let label = format!("{} in {}", small.ideal.encoding(), big.ideal.encoding());
            out.record(sel, "jaeger", &label, &checks);
        }
    }
}

fn assemble(query: &CensusQuery, outcomes: Vec<Outcome>, started: Instant) -> CensusReport {
    let mut report = CensusReport::empty(query.describe_scope(), query.window);
    for o in outcomes {
        report.semigroups += 1;
        *report.semigroups_per_genus.entry(o.genus).or_default() += 1;
        report.ideals += o.ideals;
        report.overring_pairs += o.overring_pairs;
        for (id, t) in o.tallies {
            let entry = report.checks.entry(id.to_string()).or_default();
            entry.pass += t.pass;
            entry.fail += t.fail;
        }
        report.violations.extend(o.violations);
        if let Some(tag) = o.tag {
            *report.classification.entry(tag.as_str().to_string()).or_default() += 1;
            if tag == ClassificationTag::BEqRCaseJ {
                report.case_j.push(o.encoding);
            }
        }
    }
    report.wall_time = started.elapsed();
    report
}

/// Runs the selected checks over every semigroup and ideal in range.
pub fn verify_theorems(query: &CensusQuery) -> Result<CensusReport> {
    let started = Instant::now();
    let outcomes = query.map_semigroups(|s| verify_one(s, query))?;
    Ok(assemble(query, outcomes, started))
}

/// Classification of every semigroup in range, with the profile and
/// classification checks only.
pub fn classification_census(query: &CensusQuery) -> Result<CensusReport> {
    let query = query
        .clone()
        .checks(CheckSelection::groups(&["gamma_profile", "classification"]));
    verify_theorems(&query)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// Ideals with `c_I ≤ c + window`.
    #[default]
    Window,
    /// One representative per translation class of ideals; `a` is invariant
    /// under translation, so this covers every ideal of the semigroup.
    Classes,
}

/// All `(S, I)` in range with `a(I) < 0`, sorted.
///
/// Skips Gorenstein semigroups (`a ≡ 0`), ω-stable ideals and reflexive
/// ideals with `d(I) = 0`, for which `a(I) ≥ r − 1 ≥ 0`.
pub fn search_negative_a(query: &CensusQuery, mode: SearchMode) -> Result<Vec<NegativeAHit>> {
    search(query, mode, true)
}

/// Same search without any pruning.
pub fn search_negative_a_exhaustive(query: &CensusQuery, mode: SearchMode) -> Result<Vec<NegativeAHit>> {
    search(query, mode, false)
}

fn search(query: &CensusQuery, mode: SearchMode, prune: bool) -> Result<Vec<NegativeAHit>> {
    query.validate()?;
    let per = query.map_semigroups(|s| {
        if prune && s.is_gorenstein() {
            return Vec::new();
        }
        let ctx = SemigroupContext::new(s);
        let ideals = match mode {
            SearchMode::Window => enumerate_ideals(s, query.window).expect("window validated"),
            SearchMode::Classes => enumerate_ideal_classes(s)
                .iter()
                .map(class_representative)
                .collect(),
        };
        let mut hits = Vec::new();
        for ideal in &ideals {
            if prune && skip_nonnegative(&ctx, ideal) {
                continue;
            }
            let (a, _) = ctx.ab(ideal).expect("enumerated ideals are proper");
            if a < 0 {
                hits.push(NegativeAHit {
                    genus: s.genus(),
                    semigroup: s.encoding(),
                    ideal: ideal.encoding(),
                    class: ideal.translate(-ideal.min()).encoding(),
                    a,
                });
            }
        }
        hits
    })?;
    let mut hits: Vec<NegativeAHit> = per.into_iter().flatten().collect();
    hits.sort();
    Ok(hits)
}

fn skip_nonnegative(ctx: &SemigroupContext<'_>, ideal: &crate::ideal::RelativeIdeal<'_>) -> bool {
    let dual = ideal.dual();
    let bidual = dual.dual();
    if bidual == *ideal {
        let x = ctx.analyze(ideal).expect("proper");
        if x.d == 0 {
            return true;
        }
    }
    ideal.is_omega_stable()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection() {
        let sel = CheckSelection::parse("ideal, ts_");
        assert!(sel.wants_group("ideal") && sel.wants_group("semigroup"));
        assert!(sel.wants("semigroup", "ts_sum_genus"));
        assert!(!sel.wants("semigroup", "canonical_length"));
        assert!(CheckSelection::parse("all").is_all());
        let only = CheckSelection::groups(&["overring"]);
        assert!(!only.wants_group("ideal"));
    }

    #[test]
    fn guards() {
        assert!(matches!(
            CensusQuery::max_genus(31).validate(),
            Err(Error::BoundTooLarge { requested: 31, limit: 30 })
        ));
        assert!(CensusQuery::max_conductor(60).validate().is_ok());
        assert!(CensusQuery::max_genus(3).window(99).validate().is_err());
    }

    #[test]
    fn counts_small_genus() {
        let counts: Vec<usize> = (0..=5)
            .map(|g| {
                enumerate_semigroups(&CensusQuery::max_genus(g))
                    .unwrap()
                    .iter()
                    .filter(|s| s.genus() == g as i64)
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 7, 12]);
    }

    #[test]
    fn small_census_is_clean() {
        let rep = verify_theorems(&CensusQuery::max_genus(4).window(2)).unwrap();
        assert!(rep.is_clean(), "{:?}", &rep.violations[..rep.violations.len().min(10)]);
        assert_eq!(rep.semigroups, 1 + 1 + 2 + 4 + 7);
    }
}
