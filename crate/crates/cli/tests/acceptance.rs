//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion, each under a
//! pinned wall-clock limit. Exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tempfile::TempDir;

use clutterlab::cuboid::restrict;
use clutterlab::io::{clutter_to_json, point_set_to_json};
use clutterlab::oracle::adversary::instance_pair;
use clutterlab::oracle::{
    audit_strategy, distinguishing_queries, explicit_oracle, minor_oracle, AuditConfig, Cheater,
    FilterOracle, ReferenceTester, Requirement, VertexProber,
};
use clutterlab::polyhedral::facets::affine_rank;
use clutterlab::polyhedral::FacetKind;
use clutterlab::theorem::{verify_theorem, TheoremConfig};
use clutterlab::{
    all_antichains, complement_max_degree, cuboid_of, facet_audit, is_cube_ideal, is_ideal,
    make_hard_instance, make_s3, twist, Clutter, Fixing, Limits, Point, PointSet, SubsetMask,
};

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn limits() -> Limits {
    Limits::default()
}

fn ideal(c: &Clutter) -> Result<bool, String> {
    is_ideal(c, &limits())
        .map(|r| r.ideal)
        .map_err(|e| e.to_string())
}

fn cube_ideal(s: &PointSet) -> Result<bool, String> {
    is_cube_ideal(s, &limits())
        .map(|r| r.cube_ideal)
        .map_err(|e| e.to_string())
}

fn all_point_sets(n: usize) -> Vec<PointSet> {
    let cube = 1u64 << n;
    (0u64..1 << cube)
        .map(|bits| PointSet::from_codes(n, (0..cube).filter(|c| bits >> c & 1 == 1)).unwrap())
        .collect()
}

fn run_binary(args: &[&str]) -> Result<(Option<i32>, Value), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_clutterlab"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let value = serde_json::from_slice(&out.stdout)
        .map_err(|e| format!("bad report from {args:?}: {e}"))?;
    Ok((out.status.code(), value))
}

fn criterion_1() -> Check {
    let dir = TempDir::new().map_err(|e| e.to_string())?;
    let path = dir.path().join("s3.json");
    std::fs::write(&path, point_set_to_json(&make_s3())).map_err(|e| e.to_string())?;
    let (code, report) = run_binary(&["check-cube-ideal", "--facets", path.to_str().unwrap()])?;
    ensure(code == Some(1), || {
        format!("exit code {code:?}, expected 1")
    })?;
    ensure(report["cube_ideal"] == false, || {
        "S_3 reported cube-ideal".into()
    })?;
    ensure(report["witness"]["point"] == "000", || {
        format!("witness {}", report["witness"]["point"])
    })?;
    let want = json!({ "ground_size": 3, "members": [[1, 2], [1, 3], [2, 3]] });
    ensure(report["witness"]["induced"] == want, || {
        format!("induced {}", report["witness"]["induced"])
    })?;

    let audit = facet_audit(&make_s3(), &limits()).map_err(|e| e.to_string())?;
    let target = audit
        .facets
        .iter()
        .find(|f| f.inequality.coefficients == [1, 1, 1] && f.inequality.rhs == 2)
        .ok_or("x_1+x_2+x_3 >= 2 not found among facets")?;
    ensure(target.kind == FacetKind::Neither, || {
        format!("classified {:?}", target.kind)
    })?;
    ensure(!audit.all_generalized_set_covering, || {
        "audit claims all facets covering-type".into()
    })?;
    Ok(format!(
        "witness 000, induced Δ3, {} facets, x_1+x_2+x_3 >= 2 is neither",
        audit.facets.len()
    ))
}

fn criterion_2() -> Check {
    let report = verify_theorem(3, &TheoremConfig::default()).map_err(|e| e.to_string())?;
    ensure(report.tuples.len() == 8, || {
        format!("{} tuples", report.tuples.len())
    })?;
    ensure(report.polyhedral_checks == 128, || {
        format!("{} checks", report.polyhedral_checks)
    })?;
    for t in &report.tuples {
        ensure(t.pass && t.supersets_ideal == 15, || {
            format!("tuple {t:?} failed")
        })?;
    }
    Ok("8 points x 16 polyhedral checks, all as claimed".into())
}

fn criterion_3() -> Check {
    let config = TheoremConfig {
        point_sample: 8,
        seed: 2024,
        ..TheoremConfig::default()
    };
    let report = verify_theorem(4, &config).map_err(|e| e.to_string())?;
    ensure(report.tuples.len() >= 8, || {
        format!("only {} tuples", report.tuples.len())
    })?;
    if let Some(t) = report.tuples.iter().find(|t| !t.pass) {
        return Err(format!("tuple {t:?} failed"));
    }
    Ok(format!(
        "{} seeded tuples (seed {}), {} polyhedral checks",
        report.tuples.len(),
        config.seed,
        report.polyhedral_checks
    ))
}

fn criterion_4() -> Check {
    let mut full = 0;
    for s in all_point_sets(3) {
        let by_induced = cube_ideal(&s)?;
        ensure(by_induced == ideal(&cuboid_of(&s))?, || {
            format!("disagreement on {s:?}")
        })?;
        if affine_rank(&s) == 3 && s.len() >= 4 {
            full += 1;
            let audit = facet_audit(&s, &limits()).map_err(|e| e.to_string())?;
            ensure(audit.all_generalized_set_covering == by_induced, || {
                format!("facet audit disagrees on {s:?}")
            })?;
        }
    }
    Ok(format!(
        "256 subsets agree; {full} full-dimensional agree with facet audit"
    ))
}

fn criterion_5() -> Check {
    let mut exhaustive = 0;
    for s in all_point_sets(3)
        .into_iter()
        .filter(|s| complement_max_degree(s) <= 2)
    {
        ensure(cube_ideal(&s)?, || format!("counterexample {s:?}"))?;
        exhaustive += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut sampled = 0;
    while sampled < 200 {
        let mut s = PointSet::full(4);
        for _ in 0..rng.gen_range(0..=8) {
            s = s.without(Point::new(4, rng.gen_range(0..16)).unwrap());
        }
        if complement_max_degree(&s) > 2 {
            continue;
        }
        ensure(cube_ideal(&s)?, || format!("counterexample {s:?}"))?;
        sampled += 1;
    }
    Ok(format!(
        "{exhaustive} sets at n=3 and {sampled} seeded sets at n=4, no counterexample"
    ))
}

fn criterion_6() -> Check {
    let (mut twists, mut restrictions) = (0, 0);
    for s in all_point_sets(3) {
        let base = cube_ideal(&s)?;
        for p in Point::all(3) {
            let t = twist(&s, p).map_err(|e| e.to_string())?;
            ensure(cube_ideal(&t)? == base, || format!("twist of {s:?} by {p}"))?;
            twists += 1;
        }
        for i in 1..=3 {
            for v in [false, true] {
                let r = restrict(&s, &Fixing::from([(i, v)])).map_err(|e| e.to_string())?;
                ensure(!base || cube_ideal(&r)?, || {
                    format!("restriction of {s:?} at x{i}={v}")
                })?;
                restrictions += 1;
            }
        }
    }
    Ok(format!(
        "{twists} twists and {restrictions} restrictions, no counterexample"
    ))
}

fn check_pair(n: usize, req: Requirement, j: usize, k: usize) -> Result<(), String> {
    let pair = instance_pair(n, req.p, req.q, j, k).map_err(|e| e.to_string())?;
    let diff = distinguishing_queries(&pair, 16).map_err(|e| e.to_string())?;
    let [a, b] = req.sets();
    let mut want = vec![a, b];
    want.sort();
    ensure(diff == want, || {
        format!("{req:?}: disagreement set {diff:?}")
    })?;
    ensure(a.is_subset(b) && b.difference(a).len() == 1, || {
        format!("{req:?}: sets differ by more than one")
    })
}

fn criterion_7() -> Check {
    let mut n3 = 0;
    for req in Requirement::all(3) {
        let i = req.coordinate();
        let others: Vec<usize> = (1..=3).filter(|&c| c != i).collect();
        check_pair(3, req, others[0], others[1])?;
        n3 += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let all = Requirement::all(4);
    let sample = 16;
    for req in all.choose_multiple(&mut rng, sample) {
        let i = req.coordinate();
        let mut others: Vec<usize> = (1..=4).filter(|&c| c != i).collect();
        others.shuffle(&mut rng);
        let (j, k) = (others[0].min(others[1]), others[0].max(others[1]));
        check_pair(4, *req, j, k)?;
    }
    Ok(format!(
        "{n3} pairs at n=3 and {sample} seeded pairs at n=4 give exactly {{C(q), C(q)∪C(p)}}"
    ))
}

fn criterion_8() -> Check {
    let config = AuditConfig::default();
    let mut notes = Vec::new();
    for n in [3, 4] {
        let r =
            audit_strategy(&ReferenceTester::default(), n, &config).map_err(|e| e.to_string())?;
        ensure(r.pass, || format!("reference wrong at n={n}"))?;
        ensure(
            r.cube_queries == 1 << (2 * n) && r.cube_queries >= 1 << n,
            || format!("reference made {} queries at n={n}", r.cube_queries),
        )?;
        notes.push(format!("reference n={n}: {} queries", r.cube_queries));
    }
    let r = audit_strategy(&Cheater, 3, &config).map_err(|e| e.to_string())?;
    ensure(r.cube_queries <= 6, || {
        format!("cheater made {} queries", r.cube_queries)
    })?;
    let caught = r
        .uncovered
        .iter()
        .find(|u| u.replay_result.caught)
        .ok_or("cheater not caught by replay")?;
    ensure(!r.pass, || "cheater audit passed".into())?;
    notes.push(format!(
        "cheater caught on requirement ({}, {})",
        caught.q, caught.p
    ));
    for n in [3, 4, 5] {
        let r = audit_strategy(&VertexProber::default(), n, &config).map_err(|e| e.to_string())?;
        ensure(r.pass, || format!("vertex prober wrong at n={n}"))?;
        ensure(r.cube_queries == 1 << n, || {
            format!("vertex prober made {} queries at n={n}", r.cube_queries)
        })?;
        ensure(r.uncovered_total == 0, || {
            format!(
                "vertex prober left {} uncovered at n={n}",
                r.uncovered_total
            )
        })?;
    }
    notes.push("vertex-prober exactly 2^n with full coverage at n=3,4,5".into());
    Ok(notes.join("; "))
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let n = rng.gen_range(1..=8);
        let sets: Vec<SubsetMask> = (0..rng.gen_range(0..8))
            .map(|_| SubsetMask::from_bits(n, rng.gen_range(0..1u64 << n)).unwrap())
            .collect();
        let c = Clutter::from_minimal(n, &sets);
        let (mut delete, mut contract) = (SubsetMask::empty(n), SubsetMask::empty(n));
        for e in 1..=n {
            match rng.gen_range(0..3) {
                0 => delete = delete.with(e),
                1 => contract = contract.with(e),
                _ => {}
            }
        }
        let lazy = minor_oracle(explicit_oracle(c.clone()), delete, contract)
            .map_err(|e| e.to_string())?;
        let eager = explicit_oracle(
            c.minor(delete, contract)
                .map_err(|e| e.to_string())?
                .clutter,
        );
        for x in SubsetMask::all(eager.ground_size()) {
            ensure(lazy.query(x) == eager.query(x), || {
                format!("minor oracle differs on {c:?} at {x}")
            })?;
        }
    }
    let mut minors = 0;
    for n in 1..=4 {
        for c in all_antichains(n) {
            if !ideal(&c)? {
                continue;
            }
            for delete in SubsetMask::full(n).subsets() {
                for contract in delete.complement().subsets() {
                    let m = c.minor(delete, contract).map_err(|e| e.to_string())?;
                    ensure(ideal(&m.clutter)?, || format!("non-ideal minor of {c:?}"))?;
                    minors += 1;
                }
            }
        }
    }
    Ok(format!(
        "100 seeded minor oracles agree; {minors} minors of ideal clutters are ideal"
    ))
}

fn criterion_10() -> Check {
    for c in all_antichains(3) {
        ensure(!ideal(&c)? == c.is_delta3(), || {
            format!("classification fails on {c:?}")
        })?;
    }
    let dir = TempDir::new().map_err(|e| e.to_string())?;
    let mut instances = vec![("S_3".to_string(), make_s3())];
    for p in Point::all(3) {
        instances.push((
            format!("S_({p}:1,2,3)"),
            make_hard_instance(3, p, 1, 2, 3).map_err(|e| e.to_string())?,
        ));
    }
    for (label, s) in &instances {
        let path = dir.path().join("cuboid.json");
        std::fs::write(&path, clutter_to_json(&cuboid_of(s))).map_err(|e| e.to_string())?;
        let (code, report) = run_binary(&["find-delta3", path.to_str().unwrap()])?;
        ensure(
            code == Some(0) && report["has_delta3_minor"] == true,
            || format!("no witness for {label}"),
        )?;
    }
    Ok(format!(
        "20 antichains classified; witnesses for {} cuboids",
        instances.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("S_3 reproduction", Duration::from_secs(1), criterion_1),
        ("hard family at n=3", Duration::from_secs(60), criterion_2),
        (
            "hard family at n=4 (seeded)",
            Duration::from_secs(600),
            criterion_3,
        ),
        (
            "cube-idealness cross-validation",
            Duration::from_secs(120),
            criterion_4,
        ),
        (
            "degree <= 2 sufficiency",
            Duration::from_secs(120),
            criterion_5,
        ),
        (
            "twisting and restriction",
            Duration::from_secs(120),
            criterion_6,
        ),
        (
            "distinguishing queries",
            Duration::from_secs(120),
            criterion_7,
        ),
        ("query-bound audit", Duration::from_secs(300), criterion_8),
        ("minor machinery", Duration::from_secs(120), criterion_9),
        ("Δ3 classification", Duration::from_secs(60), criterion_10),
    ];
    let mut failures = 0;
    for (idx, (title, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(detail) if elapsed <= *limit => (true, detail),
            Ok(detail) => (false, format!("{detail}; exceeded limit of {limit:?}")),
            Err(message) => (false, message),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "[{}] criterion {}: {title}: {detail} ({:.3}s, limit {}s)",
            if ok { "PASS" } else { "FAIL" },
            idx + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
