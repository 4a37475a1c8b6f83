//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
//! Built with `harness = false` so the lines always reach the test log.

#[path = "../../core/tests/laws/mod.rs"]
mod laws;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use charp_core::groebner::{ideal_member, jacobian_smoothness, ring_map_kernel, UnitCombination};
use charp_core::numerics::{
    betti_consistency, descend_invariants, e1_degeneration_check, feasible_characteristics, hypersurface_invariants,
    torsion_order_bound, torsor_invariants, GODEAUX_COVER_BOUND,
};
use charp_core::suite::fixture::PRESENTATION_VARIABLES;
use charp_core::suite::mutation::{run_mutation, Mutation};
use charp_core::suite::{Construction, HodgeTables};
use charp_core::{
    Budget, CheckId, CheckStatus, IdealBasis, MonomialOrder, Polynomial, Result, Suite, SurfaceKind, TorsorKind,
    Verdict,
};

const SEED: u64 = 1;
const PAIR_LIMIT: usize = 1_000_000;
const TOTAL_LIMIT: Duration = Duration::from_secs(300);
const FAST_LIMIT: Duration = Duration::from_secs(1);

type Verdicts = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Verdicts);

fn verify_json() -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_charp"))
        .args([
            "verify",
            "--seed",
            "1",
            "--budget",
            &PAIR_LIMIT.to_string(),
            "--format",
            "json",
        ])
        .output()
        .expect("charp binary runs")
}

fn budget() -> Budget {
    Budget::new(PAIR_LIMIT).expect("positive budget")
}

fn suite_is_green() -> Verdicts {
    let started = Instant::now();
    let out = verify_json();
    let total = started.elapsed();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let rows = report.as_array().ok_or("report is not a list")?;
    if out.status.code() != Some(0) || rows.len() != 14 {
        return Err(format!("exit {:?} with {} results", out.status.code(), rows.len()));
    }
    if let Some(bad) = rows.iter().find(|r| r["status"] != "pass") {
        return Err(format!("{} is {}", bad["id"], bad["status"]));
    }
    if total >= TOTAL_LIMIT {
        return Err(format!("verify took {total:?}"));
    }
    let mut slowest = Duration::ZERO;
    for id in CheckId::ALL {
        let suite = Suite::new(SEED, budget());
        let t = Instant::now();
        let r = suite.run(id);
        let took = t.elapsed();
        if r.status != CheckStatus::Pass {
            return Err(format!("{id} is {} when run alone", r.status));
        }
        if !id.uses_groebner() {
            if took >= FAST_LIMIT {
                return Err(format!("{id} took {took:?}"));
            }
            slowest = slowest.max(took);
        }
    }
    Ok(format!(
        "14/14 pass in {:.2}s; slowest non-Groebner check {:.1}ms; no budget overrun at {PAIR_LIMIT} pairs",
        total.as_secs_f64(),
        slowest.as_secs_f64() * 1e3
    ))
}

fn require(ok: bool, what: &str) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn exact_values() -> Verdicts {
    exact_values_inner().map_err(|e| e.to_string())?
}

fn exact_values_inner() -> Result<Verdicts> {
    let c = Construction::builtin();
    let d = &c.derivation;
    let mut checked = 0;
    let mut check = |ok: bool, what: &str| {
        checked += 1;
        require(ok, what)
    };
    let r = (|| -> std::result::Result<(), String> {
        check(
            d.iterate_power(5).map_err(|e| e.to_string())?.is_zero(),
            "fifth iterate is not zero",
        )?;

        let locus = d.fixed_locus_ideal();
        for i in 1..4 {
            let x = Polynomial::variable(&c.ring, i);
            let inside = charp_core::groebner::radical_member(&x, &locus, budget()).map_err(|e| e.to_string())?;
            check(inside, "x1..x3 must lie in the radical of the 2x2 minors")?;
        }
        let x0 = Polynomial::variable(&c.ring, 0);
        let outside = charp_core::groebner::radical_member(&x0, &locus, budget()).map_err(|e| e.to_string())?;
        check(!outside, "fixed locus is larger than one point")?;

        for (name, f) in &c.invariants {
            check(
                d.apply(f).map_err(|e| e.to_string())?.is_zero(),
                &format!("delta({name}) != 0"),
            )?;
        }
        for chart in &c.charts {
            let local = d.chart_transform(&chart.chart).map_err(|e| e.to_string())?;
            check(
                local == chart.displayed,
                &format!("chart {} derivation differs", chart.chart.index()),
            )?;
        }
        for row in &c.table {
            let chart = c.chart(row.chart).map_err(|e| e.to_string())?;
            let displayed = &chart.displayed;
            check(
                displayed.apply(&row.affine).map_err(|e| e.to_string())?.is_zero(),
                &format!("{} is not killed by its chart derivation", row.name),
            )?;
            let h = row.homogeneous().map_err(|e| e.to_string())?;
            let back = chart.chart.dehomogenize(&h).map_err(|e| e.to_string())?;
            check(
                back == row.affine,
                &format!("{} does not dehomogenize to its affine form", row.name),
            )?;
        }
        check(
            d.graded_kernel(5).map_err(|e| e.to_string())?.len() == 12,
            "degree-5 kernel is not 12-dimensional",
        )?;

        let quintic = hypersurface_invariants(5, 5).map_err(|e| e.to_string())?;
        check(quintic.chi == 5 && quintic.k2 == 5, "quintic chi/K^2")?;
        let x = descend_invariants(&quintic, SurfaceKind::Supersingular).map_err(|e| e.to_string())?;
        check(x.chi == 1 && x.k2 == 1, "descended chi/K^2")?;
        let back = torsor_invariants(&x, TorsorKind::AlphaP).map_err(|e| e.to_string())?;
        check(back.chi == 5 && back.k2 == 5, "torsor round trip")?;
        for kind in [SurfaceKind::Singular, SurfaceKind::Supersingular] {
            check(
                feasible_characteristics(kind).map_err(|e| e.to_string())? == vec![2, 3, 5],
                "feasible characteristics",
            )?;
        }
        check(
            torsion_order_bound(5, GODEAUX_COVER_BOUND).map_err(|e| e.to_string())? == 1,
            "torsion bound",
        )?;
        check(betti_consistency(1, 1, 0).map_err(|e| e.to_string())?.b2 == 9, "b2")?;
        let tables = HodgeTables::builtin();
        for (t, want) in [(&tables.singular, true), (&tables.supersingular, false)] {
            let got = e1_degeneration_check(&t.grid(), &t.hdr_map()).values().all(|&b| b);
            check(got == want && t.degenerates == want, "E1 verdict")?;
        }
        Ok(())
    })();
    Ok(r.map(|()| format!("{checked} exact identities and values hold")))
}

/// Both directions of `kernel = CI`, each with cofactors that expand exactly.
fn presentation_oracle() -> Verdicts {
    presentation_oracle_inner().map_err(|e| e.to_string())?
}

fn presentation_oracle_inner() -> Result<Verdicts> {
    let c = Construction::builtin();
    let pres = c.presentation("B").expect("B presentation in fixture");
    let chart = c.chart(pres.chart)?.chart.affine_ring().clone();
    let mut images: Vec<Polynomial> = (0..chart.nvars())
        .map(|i| Polynomial::variable(&chart, i).pow(5))
        .collect();
    for e in &pres.elements {
        images.push(c.row(e).expect("table element").affine.clone());
    }
    let kernel = ring_map_kernel(&PRESENTATION_VARIABLES, &images, budget())?;
    let kernel = IdealBasis::new(
        &pres.ring,
        kernel
            .generators()
            .iter()
            .map(|g| g.rename_by_name(&pres.ring))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let ci = IdealBasis::new(&pres.ring, pres.complete_intersection.clone())?;

    let mut certified = 0;
    for (from, into) in [(&ci, &kernel), (&kernel, &ci)] {
        for f in from.generators() {
            let m = ideal_member(f, into, MonomialOrder::DegRevLex, budget(), true)?;
            let Some(cofactors) = m.cofactors else {
                return Ok(Err(format!("{f} is not in the other ideal")));
            };
            let combo = UnitCombination {
                generators: into.generators().to_vec(),
                cofactors,
            };
            if combo.expand().as_ref() != Some(f) {
                return Ok(Err(format!("cofactors for {f} do not expand back")));
            }
            certified += 1;
        }
    }

    let cert = jacobian_smoothness(&kernel, 2, None, budget())?;
    let Some(unit) = cert.unit.filter(|_| cert.verdict == Verdict::Smooth) else {
        return Ok(Err(format!("smoothness verdict {:?}", cert.verdict)));
    };
    if !unit.verify() {
        return Ok(Err("unit combination does not expand to 1".into()));
    }
    Ok(Ok(format!(
        "{certified} memberships certified both ways; unit over {} generators expands to 1",
        unit.generators.len()
    )))
}

fn property_laws() -> Verdicts {
    for (name, law) in laws::LAWS {
        law(laws::CASES).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} laws x {} cases", laws::LAWS.len(), laws::CASES))
}

fn mutations_are_caught() -> Verdicts {
    let all = Mutation::builtin();
    for m in &all {
        let outcome = run_mutation(m, SEED, budget()).map_err(|e| format!("{}: {e}", m.name))?;
        if !outcome.detected() {
            return Err(format!("{} flips no check", m.name));
        }
    }
    Ok(format!(
        "{}/{} fixture mutations flip at least one check",
        all.len(),
        all.len()
    ))
}

fn reports_are_deterministic() -> Verdicts {
    let a = verify_json();
    let b = verify_json();
    if a.stdout.is_empty() || a.stdout != b.stdout {
        return Err("two runs differ".into());
    }
    Ok(format!("two JSON reports byte-identical ({} bytes)", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("verify passes every check within the time limits", suite_is_green),
        ("computed values match the exact expected ones", exact_values),
        (
            "B presentation equals the computed kernel and is smooth",
            presentation_oracle,
        ),
        ("randomized algebra laws hold", property_laws),
        ("fixture mutations are detected", mutations_are_caught),
        ("JSON report is deterministic", reports_are_deterministic),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({why})", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
