//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails if
//! any criterion does.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the report.

use std::time::{Duration, Instant};

use nilorbit::cli::{cross_check_orbit, run, CrossCheckSummary};
use nilorbit::{
    dominance_leq, infinitesimal_character, kp_chains, multiplicity_table, oracle_table, orbit,
    orbits_up_to, partitions, sharp, w_sequence, w_sequence_from_columns, Family, GroupKind,
    OrbitLabel,
};
use num_bigint::BigUint;
use num_traits::{One, Zero};

const SP_MAX: u32 = 26;
const O_MAX: u32 = 25;
const GOLDEN_LIMIT: Duration = Duration::from_secs(1);
const EXHAUSTIVE_LIMIT: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("nilorbit").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

fn all_orbits() -> impl Iterator<Item = OrbitLabel> {
    orbits_up_to(Family::Symplectic, SP_MAX).chain(orbits_up_to(Family::Orthogonal, O_MAX))
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// CSV body of `mult` as (index, multiplicity) pairs.
fn csv_table(output: &str) -> Vec<(usize, u64)> {
    output
        .lines()
        .skip(1)
        .map(|line| {
            let (i, m) = line.split_once(',').unwrap();
            (i.parse().unwrap(), m.parse().unwrap())
        })
        .collect()
}

fn golden_tables() -> Outcome {
    let cases: [(&[&str], &[u64], usize); 4] = [
        (
            &["sp:32", "8", "6", "6", "4", "4", "2", "2"],
            &[1, 0, 3, 0, 6, 0, 9, 0, 12, 0, 13, 0, 12, 0, 8, 0, 3],
            1,
        ),
        (
            &["o:19", "7", "5", "3", "3", "1"],
            &[1, 2, 3, 4, 3, 2, 1, 0, 0, 0],
            2,
        ),
        (
            &["sp:32", "7", "7", "5", "5", "3", "3", "2"],
            &[1, 0, 3, 0, 5, 0, 7, 0, 8, 0, 8, 0, 7, 0, 5, 0, 2],
            1,
        ),
        (
            &["o:19", "7", "4", "4", "2", "2"],
            &[1, 2, 3, 3, 3, 2, 1, 0, 0, 0],
            2,
        ),
    ];
    let mut slowest = Duration::ZERO;
    for (args, expected, step) in cases {
        let start = Instant::now();
        let mut argv = vec!["mult"];
        argv.extend_from_slice(args);
        argv.extend(["--format", "csv", "--verify"]);
        let (code, out) = cli(&argv);
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        check(code == 0, || format!("{args:?} exited {code}"))?;
        let table = csv_table(&out);
        let indices: Vec<usize> = table.iter().map(|&(i, _)| i).collect();
        let values: Vec<u64> = table.iter().map(|&(_, m)| m).collect();
        let expected_indices: Vec<usize> = (0..expected.len()).map(|i| i * step).collect();
        check(indices == expected_indices, || {
            format!("{args:?} indices {indices:?}")
        })?;
        check(values == expected, || format!("{args:?} gave {values:?}"))?;
        check(elapsed < GOLDEN_LIMIT, || {
            format!("{args:?} took {elapsed:?}")
        })?;
    }
    Ok(format!("4 tables exact, slowest {slowest:?}"))
}

fn kp_verdicts() -> Outcome {
    let start = Instant::now();
    let sp = |c: &[u32]| orbit(GroupKind::symplectic(c.iter().sum()).unwrap(), c).unwrap();
    let o = |c: &[u32]| orbit(GroupKind::orthogonal(c.iter().sum()).unwrap(), c).unwrap();
    let cases = [
        (sp(&[8, 6, 6, 6]), true),
        (sp(&[6, 6, 6, 6]), true),
        (sp(&[8, 6, 6, 4]), false),
        (o(&[8, 6, 6, 6]), true),
        (o(&[8, 6, 6, 4]), true),
        (o(&[6, 6, 6, 6]), false),
    ];
    for (label, normal) in &cases {
        let got = kp_chains(label).is_empty();
        check(got == *normal, || {
            format!(
                "{} {label}: expected normal = {normal}, got {got}",
                label.kind()
            )
        })?;
    }
    let elapsed = start.elapsed();
    check(elapsed < GOLDEN_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("6 verdicts match in {elapsed:?}"))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for o in all_orbits() {
        let engine = multiplicity_table(&o).map_err(|e| e.to_string())?;
        let oracle = oracle_table(&o).map_err(|e| e.to_string())?;
        check(engine.entries() == oracle.entries(), || {
            format!(
                "{} {o}: engine {:?} oracle {:?}",
                o.kind(),
                engine.entries(),
                oracle.entries()
            )
        })?;
        count += 1;
    }
    let elapsed = start.elapsed();
    check(elapsed < EXHAUSTIVE_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{count} orbits agree in {elapsed:?}"))
}

fn criterion_equivalence() -> Outcome {
    let start = Instant::now();
    let mut summary = CrossCheckSummary::default();
    for o in all_orbits() {
        cross_check_orbit(&o, &mut summary).map_err(|e| e.to_string())?;
    }
    let elapsed = start.elapsed();
    check(summary.criterion_mismatches == 0, || format!("{summary:?}"))?;
    check(summary.caveat_skipped > 0, || {
        "no caveat orbits seen".into()
    })?;
    check(elapsed < EXHAUSTIVE_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} orbits, {} KP-non-normal, {} skipped (equal top columns), 0 mismatches in {elapsed:?}",
        summary.orbits, summary.kp_non_normal, summary.caveat_skipped
    ))
}

fn structural_invariants() -> Outcome {
    let start = Instant::now();
    for o in all_orbits() {
        let t = multiplicity_table(&o).map_err(|e| e.to_string())?;
        // BigUint entries are nonnegative by type; the engine rejects negatives
        check(t.entries()[0] == BigUint::one(), || format!("{o}: entry 0"))?;
        check(
            t.entries().iter().skip(1).step_by(2).all(Zero::is_zero),
            || format!("{o}: odd entry nonzero"),
        )?;

        let family = o.kind().family();
        let mut padded = o.columns().to_vec();
        padded.extend([0, 0]);
        let length = o.kind().top_fundamental_index() as usize / 2 + 1;
        check(
            nilorbit::beta_recursion(&w_sequence_from_columns(family, &padded), family, length)
                == nilorbit::beta_recursion(&w_sequence(&o), family, length),
            || format!("{o}: zero padding changed the table"),
        )?;

        let s = sharp(&o);
        check(dominance_leq(&o.rows(), &s.rows()).unwrap(), || {
            format!("{o}: rows not below sharp {s}")
        })?;
        if o.kind().is_symplectic() {
            check(sharp(&s) == s, || format!("{o}: sharp not idempotent"))?;
            check(kp_chains(&s).is_empty(), || {
                format!("{o}: sharp {s} not KP-normal")
            })?;
        }
    }
    for n in 0..=SP_MAX {
        for p in partitions(n) {
            check(p.dual().dual() == p, || {
                format!("dual not an involution on {p}")
            })?;
        }
    }
    Ok(format!("all invariants hold in {:?}", start.elapsed()))
}

fn infinitesimal_characters() -> Outcome {
    let sp20 = orbit(GroupKind::symplectic(20).unwrap(), &[8, 6, 4, 2]).unwrap();
    let chi = infinitesimal_character(&sp20).map_err(|e| e.to_string())?;
    check(chi.display_string() == "(4,3,2,1,0,1,2; 2,1,0)", || {
        chi.display_string()
    })?;

    let sp16 = orbit(GroupKind::symplectic(16).unwrap(), &[9, 7]).unwrap();
    let chi = infinitesimal_character(&sp16).map_err(|e| e.to_string())?;
    check(
        chi.raw_string() == "(9/2,7/2,5/2,3/2,1/2,-1/2,-3/2,-5/2)",
        || chi.raw_string(),
    )?;
    check(
        chi.display_string() == "(9/2,7/2,5/2,3/2,1/2,1/2,3/2,5/2)",
        || chi.display_string(),
    )?;

    let mut count = 0;
    for o in all_orbits().filter(OrbitLabel::has_distinct_columns) {
        let chi = infinitesimal_character(&o).map_err(|e| e.to_string())?;
        check(chi.coordinate_count() as u32 == o.kind().rank(), || {
            format!("{o}: {} coordinates", chi.coordinate_count())
        })?;
        count += 1;
    }
    Ok(format!(
        "examples exact, rank count holds on {count} orbits"
    ))
}

fn determinism() -> Outcome {
    let invocations: &[&[&str]] = &[
        &["mult", "sp:32", "8", "6", "6", "4", "4", "2", "2"],
        &[
            "mult", "o:19", "7", "5", "3", "3", "1", "--format", "json", "--verify",
        ],
        &[
            "mult", "sp:32", "8", "6", "6", "4", "4", "2", "2", "--format", "csv",
        ],
        &["normality", "o:24", "6", "6", "6", "6"],
        &[
            "normality",
            "sp:32",
            "8",
            "6",
            "6",
            "4",
            "4",
            "2",
            "2",
            "--format",
            "json",
        ],
        &["compare", "sp:32", "8", "6", "6", "4", "4", "2", "2"],
        &[
            "compare", "o:19", "7", "5", "3", "3", "1", "--format", "csv",
        ],
        &[
            "compare", "o:19", "7", "5", "3", "3", "1", "--format", "json",
        ],
        &["infchar", "sp:20", "8", "6", "4", "2"],
        &["infchar", "sp:16", "9", "7", "--format", "json"],
        &["enumerate", "sp", "--max-dim", "12", "--cross-check"],
        &[
            "enumerate",
            "o",
            "--max-dim",
            "9",
            "--format",
            "json",
            "--cross-check",
        ],
        &["enumerate", "o", "--max-dim", "9", "--format", "csv"],
    ];
    for args in invocations {
        let (code_a, a) = cli(args);
        let (code_b, b) = cli(args);
        check(code_a == 0 && code_b == 0, || {
            format!("{args:?} exited {code_a}/{code_b}")
        })?;
        check(a == b, || format!("{args:?} output differs between runs"))?;
        check(!a.is_empty(), || format!("{args:?} printed nothing"))?;
    }
    Ok(format!("{} invocations byte-identical", invocations.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 7] = [
        ("AC1 golden multiplicity tables", golden_tables),
        ("AC2 Kraft-Procesi verdicts", kp_verdicts),
        (
            "AC3 oracle equivalence (Sp <= 26, O <= 25)",
            oracle_equivalence,
        ),
        (
            "AC4 KP <=> multiplicity drop (Sp <= 26, O <= 25)",
            criterion_equivalence,
        ),
        ("AC5 structural invariants", structural_invariants),
        ("AC6 infinitesimal characters", infinitesimal_characters),
        ("AC7 deterministic output", determinism),
    ];
    let mut failures = Vec::new();
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
