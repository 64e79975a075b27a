//! Acceptance criteria, one PASS/FAIL line each. All comparisons are exact
//! integer or set equalities.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use typeseq::census::{
    classification_census, enumerate_ideals, enumerate_semigroups, verify_theorems, CensusQuery,
    CensusReport, GorensteinFilter,
};
use typeseq::invariants::{
    decomposition_check, type_sequence, type_sequence_via_canonical, IdealAnalysis,
    SemigroupContext,
};
use typeseq::{NumericalSemigroup, RelativeIdeal};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn len(big: &RelativeIdeal<'_>, small: &RelativeIdeal<'_>) -> i64 {
    big.length_over(small).expect("nested ideals") as i64
}

/// Every listed id ran at least once and never failed.
fn ids_clean(report: &CensusReport, ids: &[&str]) -> Result<u64, String> {
    let mut evaluated = 0;
    for id in ids {
        let t = report.checks.get(*id).ok_or_else(|| format!("{id} never evaluated"))?;
        ensure(t.fail == 0, || format!("{id}: {} failures", t.fail))?;
        ensure(t.pass > 0, || format!("{id}: no evaluations"))?;
        evaluated += t.pass;
    }
    Ok(evaluated)
}

/// Independent enumeration: every gap set in [1, 2g) closed under addition.
fn gap_set_counts(max_genus: usize) -> Vec<u64> {
    let top = (2 * max_genus).max(1) as i64;
    let mut counts = vec![0u64; max_genus + 1];
    for mask in 0u32..1 << (top - 1) {
        let gaps: Vec<i64> = (1..top).filter(|&x| mask >> (x - 1) & 1 == 1).collect();
        if gaps.len() > max_genus {
            continue;
        }
        let in_s = |x: i64| !gaps.contains(&x);
        if (1..top).all(|x| (1..top).all(|y| !in_s(x) || !in_s(y) || in_s(x + y))) {
            counts[gaps.len()] += 1;
        }
    }
    counts
}

struct Census {
    semigroups: Vec<NumericalSemigroup>,
    report: CensusReport,
}

fn jaeger_example() -> Outcome {
    let started = Instant::now();
    let s = NumericalSemigroup::from_generators(&[9, 15, 17, 23, 25, 29, 31]).map_err(|e| e.to_string())?;
    let i = RelativeIdeal::from_generators(&s, &[38, 44, 50]).map_err(|e| e.to_string())?;
    let rep = decomposition_check(&s, &i).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    ensure(rep.a == -1, || format!("a(I) = {}", rep.a))?;
    let failed: Vec<&str> = rep.failures().map(|c| c.id).collect();
    ensure(failed.is_empty(), || format!("failed checks {failed:?}"))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("a(I) = -1, {} checks pass, {elapsed:.2?}", rep.checks.len()))
}

fn formula_exactness(c: &Census) -> Outcome {
    let n = ids_clean(&c.report, &["formula_a", "formula_b"])?;
    ensure(n == 2 * c.report.ideals, || format!("{n} evaluations for {} ideals", c.report.ideals))?;
    ensure(c.report.wall_time < Duration::from_secs(300), || format!("took {:?}", c.report.wall_time))?;
    Ok(format!("{} ideals over {} semigroups, 0 violations", c.report.ideals, c.report.semigroups))
}

fn inequality_suite(c: &Census) -> Outcome {
    let ids = [
        "a_upper_canonical",
        "b_nonnegative",
        "a_via_omega",
        "d_nonnegative",
        "a_lower_bound",
        "b_upper_bound",
        "a_upper_bidual_different",
        "b_lower_bound",
        "a_omega_stable",
        "b_bidual_lower",
        "b_monotone",
        "a_difference",
        "b_difference",
        "d_lower_bound",
        "d_upper_bound",
        "v_sum_lower",
        "v_sum_upper",
        "dual_length_upper",
        "gamma_length_dual",
        "b_indices_socle",
        "b_indices_quotient",
        "b_indices_type_sum",
        "quotient_length_direct",
        "quotient_length_lower",
        "type_below_multiplicity",
        "b_gamma_split",
        "b_gamma_split_upper",
        "b_gamma_split_lower",
        "quotient_bound_one",
        "quotient_bound_two",
        "b_below_type_shape",
        "b_middle_type_shape",
    ];
    let n = ids_clean(&c.report, &ids)?;
    ensure(c.report.violations.is_empty(), || format!("{} violations", c.report.violations.len()))?;
    Ok(format!("{} checks, {n} evaluations, 0 violations", ids.len()))
}

/// The d statements evaluated directly, with no restriction on the ideals.
fn d_properties(c: &Census) -> Outcome {
    ids_clean(&c.report, &["d_two_routes", "d_bidual"])?;
    let (mut closed, mut stable, mut ag) = (0u64, 0u64, 0u64);
    for s in &c.semigroups {
        let ctx = SemigroupContext::new(s);
        for i in enumerate_ideals(s, 2).map_err(|e| e.to_string())? {
            let x = ctx.analyze(&i).map_err(|e| e.to_string())?;
            let which = [
                (x.integrally_closed, &mut closed),
                (x.omega_stable, &mut stable),
                (ctx.is_almost_gorenstein(), &mut ag),
            ];
            for (premise, count) in which {
                if premise {
                    ensure(x.d == 0, || format!("d = {} for {} in {}", x.d, i, s))?;
                    *count += 1;
                }
            }
        }
    }
    ensure(closed > 0 && stable > 0 && ag > 0, || "a premise was never met".into())?;
    Ok(format!(
        "d = 0 on {closed} integrally closed, {stable} omega-stable, {ag} almost Gorenstein ideals"
    ))
}

/// The seven almost-Gorenstein conditions, each quantified over every
/// ideal of the family.
fn matlis_conditions(s: &NumericalSemigroup, family: &[IdealAnalysis<'_>]) -> [bool; 7] {
    let ctx = SemigroupContext::new(s);
    let r = ctx.r;
    let ts = type_sequence(s);
    let shape = ts.values().iter().skip(1).all(|&v| v == 1);
    let omega = family.iter().all(|x| x.omega_product == x.bidual);
    let reflexive: Vec<&IdealAnalysis<'_>> = family.iter().filter(|x| x.reflexive).collect();
    let lengths = reflexive.iter().all(|big| {
        reflexive
            .iter()
            .filter(|small| small.ideal.is_subset_of(&big.ideal))
            .all(|small| len(&big.ideal, &small.ideal) == len(&small.dual, &big.dual))
    });
    let gamma = reflexive
        .iter()
        .all(|x| len(&x.ideal, &s.tail(x.c_i)) == x.l_colon_gamma_over_dual);
    let a_formula = family.iter().all(|x| x.a == r - 1 - x.l_bidual_over_i);
    let defect = r - 1 == 2 * s.genus() - s.conductor();
    let m = s.maximal_ideal();
    let stable_m = s.canonical_ideal().product(&m).expect("same parent") == m;
    [shape, omega, lengths, gamma, a_formula, defect, stable_m]
}

fn matlis_equivalence(c: &Census) -> Outcome {
    ids_clean(&c.report, &["matlis_agreement"])?;
    let mut ag = 0;
    for s in &c.semigroups {
        let ctx = SemigroupContext::new(s);
        let ideals = enumerate_ideals(s, 2).map_err(|e| e.to_string())?;
        let family: Vec<IdealAnalysis<'_>> = ideals.iter().map(|i| ctx.analyze(i).unwrap()).collect();
        let v = matlis_conditions(s, &family);
        ensure(v.iter().all(|&b| b == v[0]), || format!("{s}: {v:?}"))?;
        ag += v[0] as u64;
    }
    Ok(format!("{} semigroups agree, {ag} almost Gorenstein", c.semigroups.len()))
}

fn type_sequence_identities(c: &Census) -> Outcome {
    ids_clean(&c.report, &["ts_different_rule", "ts_two_routes", "ts_bounds", "ts_sum_genus"])?;
    for s in &c.semigroups {
        let ts = type_sequence(s);
        ensure(ts == type_sequence_via_canonical(s), || format!("{s}: routes differ"))?;
        let v = ts.values();
        let (delta, cond) = (s.genus(), s.conductor());
        ensure(v.iter().sum::<i64>() == delta, || format!("{s}: sum"))?;
        ensure(v.iter().map(|r| r - 1).sum::<i64>() == 2 * delta - cond, || format!("{s}: defect"))?;
        ensure(v.iter().all(|&r| 1 <= r && r <= v[0]), || format!("{s}: bounds"))?;
    }
    Ok(format!("{} semigroups", c.semigroups.len()))
}

fn classification() -> Outcome {
    let mut q = CensusQuery::max_conductor(30);
    q.gorenstein = GorensteinFilter::Exclude;
    let report = classification_census(&q).map_err(|e| e.to_string())?;
    ensure(report.violations.is_empty(), || format!("{} violations, first {:?}", report.violations.len(), report.violations[0]))?;
    ids_clean(&report, &["classify_small_b_consequences", "classify_b_r_minus_1_unique", "classify_b_eq_r"])?;
    let found: BTreeSet<&str> = report.case_j.iter().map(String::as_str).collect();
    let expected: BTreeSet<&str> = ["0,5,6,7|10", "0,5,6,8|10", "0,5,8,9,10|13"].into();
    ensure(found == expected, || format!("case (j) set {found:?}"))?;
    ensure(report.wall_time < Duration::from_secs(600), || format!("took {:?}", report.wall_time))?;
    Ok(format!("{} semigroups, case (j) set exact, {:.1?}", report.semigroups, report.wall_time))
}

fn overrings(c: &Census) -> Outcome {
    let ids = ["overring_formula_complement", "overring_formula_index", "overring_bound"];
    ids_clean(&c.report, &ids)?;
    Ok(format!("{} pairs, 0 violations", c.report.overring_pairs))
}

fn enumerator_sanity() -> Outcome {
    let oracle = gap_set_counts(8);
    ensure(oracle == [1, 1, 2, 4, 7, 12, 23, 39, 67], || format!("oracle {oracle:?}"))?;
    let tree = enumerate_semigroups(&CensusQuery::max_genus(8)).map_err(|e| e.to_string())?;
    let mut counts = vec![0u64; 9];
    for s in &tree {
        counts[s.genus() as usize] += 1;
    }
    ensure(counts == oracle, || format!("tree {counts:?}"))?;
    let runs: Vec<String> = [1, 2, 4]
        .iter()
        .map(|&w| verify_theorems(&CensusQuery::max_genus(8).window(2).workers(w)).unwrap().to_json())
        .collect();
    ensure(runs.iter().all(|r| r == &runs[0]), || "reports differ across worker counts".into())?;
    let mut q = CensusQuery::max_conductor(16).workers(3);
    q.gorenstein = GorensteinFilter::Exclude;
    let a = classification_census(&q).unwrap().to_json();
    let b = classification_census(&q.clone().workers(1)).unwrap().to_json();
    ensure(a == b, || "classification differs across worker counts".into())?;
    Ok("counts 1,1,2,4,7,12,23,39,67; reports identical for 1, 2, 4 workers".into())
}

fn natural_numbers() -> Outcome {
    let n = NumericalSemigroup::natural();
    ensure(type_sequence(&n).is_empty(), || "non-empty type sequence".into())?;
    let ctx = SemigroupContext::new(&n);
    ensure(ctx.canonical_defect() == 0 && ctx.b_gamma() == 0, || "a(γ), b(γ) nonzero".into())?;
    let commands: [&[&str]; 8] = [
        &["info", "--gens", "1"],
        &["ideal", "--gens", "1", "--ideal", "1"],
        &["overrings", "--gens", "1"],
        &["census", "--gens", "1", "--window", "2"],
        &["search", "--negative-a", "--gens", "1"],
        &["search", "--negative-a", "--gens", "1", "--classes"],
        &["classify", "--gens", "1"],
        &["census", "--max-genus", "0"],
    ];
    for args in commands {
        let argv = std::iter::once("typeseq").chain(args.iter().copied());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = typeseq::cli::run(argv, &mut out, &mut err);
        ensure(code == 0, || format!("{args:?} exited {code}"))?;
        if args[0] == "info" {
            let v: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
            ensure(v["invariants"]["a"] == 0 && v["invariants"]["b"] == 0, || format!("{v}"))?;
            ensure(v["type_sequence"] == serde_json::json!([]), || format!("{v}"))?;
        }
    }
    Ok(format!("{} commands exit 0", commands.len()))
}

fn main() -> ExitCode {
    let semigroups = enumerate_semigroups(&CensusQuery::max_genus(10)).expect("genus 10 is within the guard");
    let report = verify_theorems(&CensusQuery::max_genus(10).window(2)).expect("valid query");
    let census = Census { semigroups, report };

    let criteria: [(&str, &dyn Fn() -> Outcome); 10] = [
        ("jaeger example has a = -1", &jaeger_example),
        ("formulas for a and b are exact", &|| formula_exactness(&census)),
        ("inequality suite", &|| inequality_suite(&census)),
        ("properties of d", &|| d_properties(&census)),
        ("almost Gorenstein equivalence", &|| matlis_equivalence(&census)),
        ("type sequence identities", &|| type_sequence_identities(&census)),
        ("classification by b(gamma)", &classification),
        ("overring formulas", &|| overrings(&census)),
        ("enumerator sanity", &enumerator_sanity),
        ("degenerate case N", &natural_numbers),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
