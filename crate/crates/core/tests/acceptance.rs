//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so every line is printed on success too.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use topolab::lab::{
    self, paper_report, replay, topologies_naive, topologies_preorder, verify_all, verify_theorem, SweepOptions,
    TheoremId, TheoremReport, Witness,
};
use topolab::lab::report::{operator_observations, Status};
use topolab::{fixtures, GenClassTag, Space, SpaceProfile, Subset};

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn labels(space: &Space, sets: impl IntoIterator<Item = Subset>) -> Vec<String> {
    let mut v: Vec<String> = sets.into_iter().map(|s| space.show(s)).collect();
    v.sort();
    v
}

fn frozen(space: &Space, sets: &[&str]) -> Vec<String> {
    labels(space, sets.iter().map(|s| space.parse_set(s).unwrap()))
}

const CLOSED_1_8: &[&str] = &["", "n", "l,n", "m,n", "k,m,n", "l,m,n", "k,l,m,n"];
const G_CLOSED_1_8: &[&str] = &["", "k,l,m,n", "n", "k,n", "l,n", "m,n", "k,l,n", "k,m,n", "l,m,n"];

fn criterion_1() -> Result<String, String> {
    let s = fixtures::example_1_8();
    let p = SpaceProfile::new(&s);
    ensure(labels(&s, p.closed_family().members()) == frozen(&s, CLOSED_1_8), || "closed list".into())?;
    ensure(
        labels(&s, p.gen_family(GenClassTag::GClosed).members()) == frozen(&s, G_CLOSED_1_8),
        || "g-closed list".into(),
    )?;
    let powerset = labels(&s, Subset::all(4));
    for tag in [GenClassTag::ScstarClosed, GenClassTag::GscstarClosed, GenClassTag::ScstargClosed] {
        let got = labels(&s, p.gen_family(tag).members());
        ensure(got == powerset, || format!("{tag} list has {} sets", got.len()))?;
    }
    Ok("7 closed, 9 g-closed, 3 x 16 SC*-family sets".into())
}

fn criterion_2() -> Result<String, String> {
    let s = fixtures::example_2_9();
    let p = SpaceProfile::new(&s);
    let axioms = topolab::classify_space(&p);
    ensure(axioms.axiom(topolab::AxiomTag::Regular), || "regular".into())?;
    ensure(!axioms.axiom(topolab::AxiomTag::StronglyRgRegular), || "strongly-rg-regular".into())?;
    let l = s.parse_set("l").unwrap();
    ensure(topolab::gen_sets::generalized_class(&s, l, GenClassTag::RgClosed), || "{l} rg-closed".into())?;
    Ok("regular, not strongly-rg-regular, {l} rg-closed".into())
}

fn criterion_3() -> Result<String, String> {
    let mut counts = Vec::new();
    for n in 1..=4 {
        let key = |v: Vec<Space>| {
            let mut k: Vec<Vec<u32>> = v.iter().map(|s| s.opens().iter().map(|o| o.bits()).collect()).collect();
            k.sort();
            k
        };
        let naive = key(topologies_naive(n).map_err(|e| e.to_string())?);
        let pre = key(topologies_preorder(n).map_err(|e| e.to_string())?);
        ensure(naive == pre, || format!("routes differ at n = {n}"))?;
        counts.push(naive.len());
    }
    ensure(counts == [1, 4, 29, 355], || format!("counts {counts:?}"))?;
    Ok(format!("counts {counts:?} by both routes"))
}

/// Every counterexample must fail again on replay, both from memory and
/// after a JSON round trip.
fn replayable(reports: &[TheoremReport]) -> Result<usize, String> {
    let mut n = 0;
    for r in reports {
        for w in r.counterexamples() {
            let back: Witness = serde_json::from_str(&serde_json::to_string(w).unwrap()).map_err(|e| e.to_string())?;
            for w in [w, &back] {
                let o = replay(w).map_err(|e| e.to_string())?;
                ensure(o.is_failure(), || format!("{} {} did not replay", w.theorem, w.clause))?;
            }
            n += 1;
        }
    }
    Ok(n)
}

fn sweep(ids: &[TheoremId], bound: usize) -> Result<Vec<TheoremReport>, String> {
    ids.iter()
        .map(|id| verify_theorem(*id, Some(bound), &SweepOptions::default()).map_err(|e| e.to_string()))
        .collect()
}

fn summary(reports: &[TheoremReport], replayed: usize) -> String {
    let parts: Vec<String> = reports.iter().map(|r| format!("{} {}", r.id, r.verdict.name())).collect();
    format!("{}; {replayed} counterexample(s) replayed", parts.join(", "))
}

fn criterion_4() -> Result<String, String> {
    let reports = sweep(&[TheoremId::T2_10], 4)?;
    ensure(reports[0].instances == 389, || format!("{} spaces", reports[0].instances))?;
    let n = replayable(&reports)?;
    Ok(summary(&reports, n))
}

fn criterion_5() -> Result<String, String> {
    let reports = sweep(&[TheoremId::T2_11, TheoremId::T2_13, TheoremId::T2_14], 4)?;
    let n = replayable(&reports)?;
    Ok(summary(&reports, n))
}

fn criterion_6() -> Result<String, String> {
    use TheoremId::*;
    let reports = sweep(&[T3_3, T3_5, T3_7, T4_5, P4_8, P4_10, T4_14, T4_16, T5_1, T5_3, T5_7], 3)?;
    let n = replayable(&reports)?;
    Ok(summary(&reports, n))
}

fn criterion_7() -> Result<String, String> {
    let obs = operator_observations(3);
    let bad: Vec<String> = obs
        .iter()
        .filter(|o| o.violations > 0)
        .map(|o| format!("{} {}", o.operator, o.property))
        .collect();
    ensure(bad.is_empty(), || format!("violations: {}", bad.join(", ")))?;
    Ok(format!("{} operator properties, 0 violations", obs.len()))
}

/// Independent scan straight from the fixture's open list: regular iff
/// every closed F and x outside F have disjoint open U ⊇ F, V ∋ x.
fn regular_oracle(json: &str) -> bool {
    let doc: serde_json::Value = serde_json::from_str(json).unwrap();
    let points: Vec<&str> = doc["points"].as_array().unwrap().iter().map(|p| p.as_str().unwrap()).collect();
    let full = (1u32 << points.len()) - 1;
    let opens: Vec<u32> = doc["opens"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| {
            o.as_array().unwrap().iter().fold(0, |m, p| {
                m | 1 << points.iter().position(|q| *q == p.as_str().unwrap()).unwrap()
            })
        })
        .collect();
    opens.iter().map(|o| full & !o).all(|f| {
        (0..points.len()).filter(|x| f & 1 << x == 0).all(|x| {
            opens
                .iter()
                .any(|u| f & !u == 0 && opens.iter().any(|v| v & 1 << x != 0 && u & v == 0))
        })
    })
}

fn criterion_8() -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_topolab"))
        .args(["paper-report", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    let disagree = text.lines().filter(|l| l.contains("\"status\":\"DISAGREE\"")).count();
    let code = out.status.code().unwrap_or(-1);
    ensure((code != 0) == (disagree > 0), || format!("exit {code} with {disagree} disagreements"))?;

    let report = paper_report(&SweepOptions::default()).map_err(|e| e.to_string())?;
    ensure(report.disagreements() == disagree, || "library and CLI disagree".into())?;
    let row = report
        .rows
        .iter()
        .find(|r| r.fixture == "example-2.8" && r.claim == "regular")
        .ok_or("no example-2.8 regular row")?;
    let json = fixtures::FIXTURES.iter().find(|(n, _)| *n == "example-2.8").unwrap().1;
    let oracle = regular_oracle(json);
    ensure(row.engine == oracle.to_string(), || format!("engine {} vs oracle {oracle}", row.engine))?;
    let status = if row.status == Status::Agree { "agrees" } else { "disagrees" };
    Ok(format!(
        "exit {code}, {disagree} DISAGREE row(s); example-2.8 regular = {oracle} matches oracle ({status} with the claim)"
    ))
}

fn criterion_9() -> Result<String, String> {
    let run = |workers: Option<usize>| -> Result<String, String> {
        let opts = SweepOptions { workers, timings: false };
        let reports = verify_all(None, &opts).map_err(|e| e.to_string())?;
        let report = paper_report(&opts).map_err(|e| e.to_string())?;
        let mut s = String::new();
        for r in &reports {
            s.push_str(&serde_json::to_string(r).unwrap());
            s.push('\n');
        }
        s.push_str(&report.to_json_lines());
        Ok(s)
    };
    let first = run(None)?;
    ensure(first == run(None)?, || "two runs differ".into())?;
    for w in [1, 3] {
        ensure(first == run(Some(w))?, || format!("{w} workers differ"))?;
    }
    let cli = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_topolab"))
            .args(["verify", "--theorem", "all", "--format", "json", "--workers", workers])
            .output()
            .map(|o| o.stdout)
            .map_err(|e| e.to_string())
    };
    ensure(cli("1")? == cli("4")?, || "CLI output differs by worker count".into())?;
    Ok(format!("{} bytes identical across 4 library runs and 2 CLI runs", first.len()))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Check, u64); 9] = [
        (1, "example-1.8 set lists", criterion_1, 1),
        (2, "example-2.9 axioms", criterion_2, 1),
        (3, "enumeration counts", criterion_3, 10),
        (4, "T2.10 sweep", criterion_4, 120),
        (5, "T2.11, T2.13, T2.14 sweeps", criterion_5, 300),
        (6, "map theorem sweeps", criterion_6, 600),
        (7, "operator properties", criterion_7, 60),
        (8, "discrepancy report", criterion_8, 120),
        (9, "determinism", criterion_9, 300),
    ];
    let _ = lab::registry();
    let mut failed = 0;
    for (n, name, check, limit) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|d| {
            ensure(elapsed <= Duration::from_secs(limit), || format!("took {elapsed:?}, limit {limit}s"))?;
            Ok(d)
        });
        match result {
            Ok(detail) => println!("PASS criterion {n} ({name}): {detail} [{:.2}s]", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}): {why} [{:.2}s]", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
