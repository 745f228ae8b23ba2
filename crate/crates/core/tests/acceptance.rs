//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num::{BigInt, Signed, Zero};

use singvol::catalog;
use singvol::cone::{curve_cone_graph, dyadic_slopes, dcc_scan, Existence, Label, PolarizedCone};
use singvol::envelope::{nef_envelope_trace, volume, zariski_oracle};
use singvol::lattice::{q, qi, scale, Rational};
use singvol::random::{random_divisor, random_graph, random_tower, rng};
use singvol::tower::invariance_report;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: singvol::Error) -> String {
    e.to_string()
}

fn cone_volumes() -> Outcome {
    for (g, d, expected) in [(2u32, 1i64, 4i64), (2, 2, 2)] {
        let v = volume(&curve_cone_graph(g, d).map_err(err)?).map_err(err)?.volume;
        let closed = q((2 * g as i64 - 2).pow(2), d);
        ensure(v == qi(expected) && v == closed, || {
            format!("cone g={g} d={d}: pipeline {v}, closed form {closed}, expected {expected}")
        })?;
    }
    Ok("Vol(g=2,d=1) = 4, Vol(g=2,d=2) = 2".into())
}

fn lc_catalog() -> Outcome {
    let mut graphs = Vec::new();
    for n in 1..=10 {
        graphs.push((format!("A{n}"), catalog::a_n(n)));
    }
    for n in 4..=10 {
        graphs.push((format!("D{n}"), catalog::d_n(n)));
    }
    for n in 6..=8 {
        graphs.push((format!("E{n}"), catalog::e_n(n)));
    }
    for d in 1..=5 {
        graphs.push((format!("simple-elliptic-{d}"), catalog::simple_elliptic(d)));
    }
    for n in 3..=6 {
        graphs.push((format!("cusp-{n}"), catalog::cusp(&vec![-3; n])));
    }
    for (name, g) in &graphs {
        let g = g.as_ref().map_err(|e| format!("{name}: {e}"))?;
        let v = volume(g).map_err(err)?;
        ensure(v.is_lc && v.volume.is_zero(), || format!("{name}: is_lc {} volume {}", v.is_lc, v.volume))?;
    }
    Ok(format!("{} graphs lc with volume 0", graphs.len()))
}

fn envelope_oracle() -> Outcome {
    let mut rng = rng(0x5eed_0003);
    for case in 0..100 {
        let g = random_graph(&mut rng, 5);
        let a = random_divisor(&mut rng, g.len(), 3);
        let fast = nef_envelope_trace(&g, &a).map_err(err)?;
        let slow = zariski_oracle(&g, &a, 12).map_err(err)?;
        ensure(fast == slow, || format!("case {case}: {fast:?} != {slow:?} on {:?}", g.to_doc()))?;
    }
    Ok("100/100 graphs: active set == exhaustive oracle (P, N, active)".into())
}

fn model_invariance() -> Outcome {
    let mut rng = rng(0x5eed_0004);
    let mut blowups = 0;
    for case in 0..100 {
        let tower = random_tower(&mut rng, 8, 3).map_err(err)?;
        blowups += tower.steps().len();
        let report = invariance_report(&tower).map_err(err)?;
        let names = ["volume_constant", "envelope_pullback", "discrepancy_transform"];
        let per_step = names.iter().all(|n| report.checks.iter().filter(|c| c.name == *n).count() == tower.steps().len());
        ensure(per_step, || format!("case {case}: missing checks"))?;
        ensure(report.passed, || {
            format!("case {case}: {:?}", report.failures().collect::<Vec<_>>())
        })?;
    }
    Ok(format!("100/100 towers ({blowups} blowups) invariant"))
}

fn counterexample() -> Outcome {
    let cone = PolarizedCone::ruled_surface();
    let report = cone.vol_plus_table(&dyadic_slopes(10)).map_err(err)?;
    for (k, row) in report.rows.iter().enumerate() {
        // 2^{1-3k}
        let expected = Rational::new(BigInt::from(2), BigInt::from(2).pow(3 * k as u32));
        ensure(row.bound == expected, || format!("k={k}: bound {} != {expected}", row.bound))?;
    }
    let has = |quantity: &str, prefix: &str| {
        report.verdicts.iter().any(|v| v.quantity == quantity && v.statement.starts_with(prefix))
    };
    ensure(has("Vol+", "Vol+ = 0"), || "missing Vol+ = 0 verdict".into())?;
    ensure(has("Vol_BdFF", "Vol_BdFF(X,0) = 0"), || "missing Vol_BdFF = 0 verdict".into())?;
    let lc = &report.lc_boundary;
    ensure(lc.exists == Existence::False, || format!("lc boundary verdict {:?}", lc.exists))?;
    ensure(lc.certificate.len() == 3, || format!("certificate has {} steps", lc.certificate.len()))?;
    let steps: Vec<&str> = lc.certificate.iter().map(|s| s.reason.as_str()).collect();
    ensure(steps[0].starts_with("effectivity") && steps[0].contains("a >= 0"), || steps[0].into())?;
    ensure(steps[1].starts_with("log canonicity") && steps[1].contains("a <= 0"), || steps[1].into())?;
    ensure(steps[2].starts_with("rigidity") && steps[2].contains("2·C0"), || steps[2].into())?;
    Ok("bounds 2^(1-3k) for k = 0..10; Vol+ = 0, Vol_BdFF = 0; no lc boundary (3 steps)".into())
}

fn valuation_laws() -> Outcome {
    let cone = PolarizedCone::ruled_surface();
    let classes = [
        vec![qi(1), qi(0)],
        vec![qi(0), qi(1)],
        vec![qi(1), qi(1)],
        vec![qi(-2), qi(0)],
        vec![qi(3), qi(-1)],
        vec![qi(-1), qi(2)],
        vec![q(1, 2), q(1, 3)],
        vec![qi(2), qi(5)],
        vec![qi(-1), qi(-1)],
        vec![q(7, 3), q(-2, 5)],
    ];
    for d in &classes {
        let limit = cone.valuation_limit(d).map_err(err)?;
        for k in 1..=1000u64 {
            let v = cone.natural_valuation(d, k).map_err(err)?;
            let gap = (q(v as i64, k as i64) - &limit).abs();
            ensure(gap <= q(1, k as i64), || format!("D={d:?} k={k}: gap {gap}"))?;
        }
        let v1 = cone.natural_valuation(d, 1).map_err(err)?;
        for m in 1..=12u64 {
            // v♮(m·D) with D itself as the class
            let vm = cone.natural_valuation(&scale(&qi(m as i64), d), 1).map_err(err)?;
            ensure(m * v1 >= vm, || format!("D={d:?} m={m}: {m}·{v1} < {vm}"))?;
        }
        let neg: Vec<Rational> = d.iter().map(|x| -x).collect();
        let vn = cone.natural_valuation(&neg, 1).map_err(err)? as i128;
        ensure(v1 as i128 + vn >= 0, || format!("D={d:?}: v(D) + v(-D) < 0"))?;
    }
    Ok("10 classes, k <= 1000, m <= 12".into())
}

fn dcc() -> Outcome {
    let r = dcc_scan(20, 10).map_err(err)?;
    ensure(r.all_agree, || "graph pipeline disagrees with a^2 d".into())?;
    ensure(r.min_positive_volume == Some(qi(2)), || format!("min {:?}", r.min_positive_volume))?;
    ensure(r.witnesses == vec![(2, 1, 2)], || format!("witnesses {:?}", r.witnesses))?;
    ensure(r.well_ordered, || "distinct volumes not well ordered".into())?;
    ensure(r.entries.iter().all(|e| e.volume >= qi(2)), || "entry below 2".into())?;
    Ok(format!("{} cones, min positive volume 2 at (g,a,d) = (2,1,2)", r.entries.len()))
}

fn labels() -> Outcome {
    let report = PolarizedCone::ruled_surface().vol_plus_table(&dyadic_slopes(10)).map_err(err)?;
    ensure(report.rows.iter().all(|r| r.label == Label::Bound), || "table rows not labelled as bounds".into())?;
    let label_of = |quantity: &str| report.verdicts.iter().find(|v| v.quantity == quantity).map(|v| v.label);
    ensure(label_of("Vol_m") == Some(Label::NotComputed), || "Vol_m positivity not labelled".into())?;
    ensure(label_of("Vol+ vs Vol_BdFF") == Some(Label::NotComputed), || "limit comparison not labelled".into())?;
    ensure(label_of("Vol+") == Some(Label::VerdictByCitation), || "Vol+ verdict not labelled".into())?;
    let json = serde_json::to_string(&report).map_err(|e| e.to_string())?;
    for tag in ["\"bound\"", "\"verdict-by-citation\"", "\"not-computed\""] {
        ensure(json.contains(tag), || format!("serialized report lacks {tag}"))?;
    }
    Ok("bounds and cited verdicts labelled; Vol_m positivity and Vol+ vs Vol_BdFF marked not computed".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("cone volumes exact", cone_volumes, Duration::from_secs(1)),
        ("lc catalog", lc_catalog, Duration::from_secs(1)),
        ("envelope oracle equivalence", envelope_oracle, Duration::from_secs(10)),
        ("model invariance", model_invariance, Duration::from_secs(30)),
        ("counterexample reproduction", counterexample, Duration::from_secs(1)),
        ("valuation laws", valuation_laws, Duration::from_secs(10)),
        ("dcc scan", dcc, Duration::from_secs(5)),
        ("non-reproducible claims labelled", labels, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed <= *limit {
                Ok(msg)
            } else {
                Err(format!("took {elapsed:?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(msg) => println!("criterion {} [{name}]: PASS ({:.0?}) {msg}", k + 1, elapsed),
            Err(msg) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({:.0?}) {msg}", k + 1, elapsed);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
