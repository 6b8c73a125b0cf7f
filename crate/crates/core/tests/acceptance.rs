//! One line per acceptance criterion. Runs without the libtest harness so
//! the lines are printed whether or not they pass.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use pebbling::asymptotics::{
    asymptotic_g, c1, c_star, find_zstar, theorem_b_prefactor, AsymptoticConstants, PrecisionPolicy,
};
use pebbling::board::enumerate_counts;
use pebbling::genfunc::{g_from_series, g_total_from_series, verify_series_identities, w0};
use pebbling::precision::{consts, parse_decimal, pow10_neg, to_decimal, to_f64, Real, RM};
use pebbling::recurrence::{verify_boundary_identities, CountTable};
use pebbling::zero_threshold;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

/// Peak resident set in MiB, where the platform reports it.
fn peak_rss_mib() -> Option<f64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kib: f64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kib / 1024.0)
}

fn real(s: &str, p: usize) -> Real {
    parse_decimal(s, p, &mut consts().unwrap()).unwrap()
}

fn close(x: &Real, reference: &str, tol_exp: usize, p: usize) -> Result<(), String> {
    let diff = x.sub(&real(reference, p), p, RM).abs();
    ensure(diff <= pow10_neg(tol_exp, p), || {
        format!(
            "{} differs from {reference} by {:.2e}",
            to_decimal(x, tol_exp + 2),
            to_f64(&diff)
        )
    })
}

fn oracle() -> Outcome {
    let start = Instant::now();
    let table = CountTable::build(15);
    let cases = [(0usize, 2usize, 11usize), (1, 5, 13), (2, 9, 15)];
    for (m, lo, hi) in cases {
        let base = 2 * m + 2;
        let counts = enumerate_counts(m, hi - base).map_err(e)?;
        for k in lo..=hi {
            let got = counts
                .clean_count(k)
                .ok_or(format!("no level {k} for m = {m}"))?;
            let want = table.g(k, m).map_err(e)?;
            ensure(*got == want, || {
                format!("G({k},{m}): boards {got}, recurrence {want}")
            })?;
        }
    }
    let first: Vec<String> = (2..=7)
        .map(|k| table.g_total(k).unwrap().to_string())
        .collect();
    ensure(first == ["1", "2", "4", "9", "20", "46"], || {
        format!("first totals {first:?}")
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || {
        format!("took {elapsed:?}")
    })?;
    let rss = peak_rss_mib();
    ensure(rss.is_none_or(|r| r < 2048.0), || {
        format!("peak memory {rss:?} MiB")
    })?;
    Ok(format!(
        "{:.2}s, peak rss {}",
        elapsed.as_secs_f64(),
        rss.map_or("unknown".into(), |r| format!("{r:.0} MiB"))
    ))
}

fn series_equality() -> Outcome {
    let start = Instant::now();
    let table = CountTable::build(80);
    for m in 0..=10 {
        for k in 0..=80 {
            let got = g_from_series(k, m, 80).map_err(e)?;
            let want = table.g(k, m).map_err(e)?;
            ensure(got == want, || {
                format!("G({k},{m}): series {got}, recurrence {want}")
            })?;
        }
    }
    for k in 2..=80 {
        let got = g_total_from_series(k, 80).map_err(e)?;
        ensure(got == table.g_total(k).unwrap(), || {
            format!("G({k}) differs")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{:.2}s", elapsed.as_secs_f64()))
}

fn root_digits() -> Outcome {
    let cert = find_zstar(&PrecisionPolicy::new(15)).map_err(e)?;
    let z = to_decimal(&cert.z_star, 15);
    ensure(z == "0.430729593137930", || format!("z_* = {z}"))?;
    // 13 significant digits of a: the integer digit and 12 places
    let a = to_decimal(&cert.a(), 12);
    ensure(a == "2.321642199494", || format!("a = {a}"))?;
    Ok(format!("z_* = {z}, a = {a}"))
}

fn growth_constant() -> Outcome {
    let policy = PrecisionPolicy::new(20);
    let cert = find_zstar(&policy).map_err(e)?;
    let cs = c_star(&cert, &policy).map_err(e)?;
    let p = policy.bits();
    let diff = cs.sub(&real("0.12268707", p), p, RM).abs();
    ensure(diff < real("5e-9", p), || {
        format!("c_* = {}", to_decimal(&cs, 12))
    })?;
    Ok(format!(
        "c_* = {}, |diff| = {:.2e}",
        to_decimal(&cs, 15),
        to_f64(&diff)
    ))
}

fn corrected_constants() -> Outcome {
    let policy = PrecisionPolicy::new(25);
    let p = policy.bits();
    let cert = find_zstar(&policy).map_err(e)?;
    let c = c1(&cert, &policy).map_err(e)?;
    close(&c, "2.027402047468498", 14, p)?;
    let b = theorem_b_prefactor(&cert, &policy).map_err(e)?;
    close(&b, "0.287777704935052", 13, p)?;
    Ok(format!(
        "c_1 = {}, prefactor = {}",
        to_decimal(&c, 18),
        to_decimal(&b, 18)
    ))
}

fn w_collapse() -> Outcome {
    let table = CountTable::build(zero_threshold(8) - 1 + 11);
    ensure(w0(2).map_err(e)? == 1u32.into(), || "w0(2) != 1".into())?;
    let mut checked = 0;
    for m in 3..=8 {
        for l in 2..=m + 3 {
            let k = zero_threshold(m) - 1 + l;
            let want = table.g(k, m).map_err(e)?;
            let got = w0(l).map_err(e)?;
            ensure(got == want, || {
                format!("m = {m}, l = {l}: W0 = {got}, G = {want}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs"))
}

fn identity_suite() -> Outcome {
    let report = verify_series_identities(200);
    if let Some(bad) = report.first_failure() {
        return Err(format!("{}: {:?}", bad.name, bad.first_failure));
    }
    let boundary = verify_boundary_identities(&CountTable::build(80));
    if let Some(bad) = boundary.first_failure() {
        return Err(format!("{}: {:?}", bad.name, bad.first_failure));
    }
    Ok(format!(
        "{} series checks, {} boundary checks",
        report.len(),
        boundary.len()
    ))
}

fn asymptotic_convergence() -> Outcome {
    let start = Instant::now();
    let table = CountTable::build(300);
    let build = start.elapsed();
    ensure(build < Duration::from_secs(5), || {
        format!("table to k = 300 took {build:?}")
    })?;

    let policy = PrecisionPolicy::new(30);
    let p = policy.bits();
    let cert = find_zstar(&policy).map_err(e)?;
    let cs = c_star(&cert, &policy).map_err(e)?;
    let one = Real::from_u64(1, p);
    let gap = |exact: &num_bigint::BigUint, approx: &Real| {
        let exact = pebbling::precision::from_bigint(&exact.clone().into(), p);
        to_f64(&exact.div(approx, p, RM).sub(&one, p, RM)).abs()
    };
    let total = |k: usize| {
        gap(
            &table.g_total(k).unwrap(),
            &cs.mul(&cert.a().powi(k, p, RM), p, RM),
        )
    };
    let (g100, g200) = (total(100), total(200));
    ensure(g100 < 1e-3, || format!("G(100) gap {g100:.2e}"))?;
    ensure(g200 < 1e-4, || format!("G(200) gap {g200:.2e}"))?;
    let row1 = gap(
        &table.g(100, 1).unwrap(),
        &asymptotic_g(100, 1, &cert, &policy).map_err(e)?,
    );
    ensure(row1 < 1e-3, || format!("G(100,1) gap {row1:.2e}"))?;
    Ok(format!(
        "gaps {g100:.1e} (k=100), {g200:.1e} (k=200), {row1:.1e} (k=100, m=1); table {:.3}s",
        build.as_secs_f64()
    ))
}

fn refinement_stability() -> Outcome {
    let mut lines = Vec::new();
    for digits in [15, 40] {
        let policy = PrecisionPolicy::new(digits);
        let coarse = AsymptoticConstants::compute(&policy).map_err(e)?.decimals();
        let refined = policy.refined();
        let fine = AsymptoticConstants::compute(&refined)
            .map_err(e)?
            .decimals();
        for (c, f) in coarse.iter().zip(&fine) {
            ensure(f.value.starts_with(&c.value), || {
                format!("{} at {digits} digits: {} vs {}", c.name, c.value, f.value)
            })?;
        }
        lines.push(format!(
            "P={digits}/N={} vs P={}/N={}",
            policy.resolved_order(),
            refined.digits,
            refined.resolved_order()
        ));
    }
    Ok(lines.join(", "))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("oracle equals recurrence", oracle),
        ("series equals recurrence", series_equality),
        ("root digits", root_digits),
        ("growth constant", growth_constant),
        ("corrected constants", corrected_constants),
        ("w-collapse", w_collapse),
        ("identity suite", identity_suite),
        ("asymptotic convergence", asymptotic_convergence),
        ("refinement stability", refinement_stability),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
