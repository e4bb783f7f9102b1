//! End-to-end acceptance checks, one line per criterion.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use lightsim::io::SummaryRow;
use lightsim::{run_scenario, ScenarioConfig, ScenarioKind, ScenarioReport};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn fail(detail: impl Into<String>) -> Self {
        Outcome { pass: false, detail: detail.into() }
    }
}

fn run(kind: ScenarioKind) -> Result<ScenarioReport, String> {
    run_scenario(&ScenarioConfig::defaults(kind)).map_err(|e| format!("{kind}: {e}"))
}

fn row<'a>(rep: &'a ScenarioReport, quantity: &str) -> Result<&'a SummaryRow, String> {
    rep.rows
        .iter()
        .find(|r| r.quantity == quantity)
        .ok_or_else(|| format!("{}: no `{quantity}` row", rep.scenario))
}

fn value(rep: &ScenarioReport, quantity: &str) -> Result<f64, String> {
    row(rep, quantity).map(|r| r.value)
}

fn rows_matching<'a>(rep: &'a ScenarioReport, prefix: &'a str) -> impl Iterator<Item = &'a SummaryRow> {
    rep.rows.iter().filter(move |r| r.quantity.starts_with(prefix))
}

/// Every row passes and each named check holds.
fn judge(reports: &[&ScenarioReport], checks: &[(&str, bool)]) -> Outcome {
    let mut failed: Vec<String> = reports
        .iter()
        .flat_map(|rep| rep.failures())
        .map(|r| format!("{}={:.6e}", r.quantity, r.value))
        .collect();
    failed.extend(checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| name.to_string()));
    let total: usize = reports.iter().map(|r| r.rows.len()).sum();
    if failed.is_empty() {
        Outcome { pass: true, detail: format!("{total} checks") }
    } else {
        Outcome::fail(failed.join(", "))
    }
}

fn within(elapsed: Duration, limit: f64) -> (String, bool) {
    (format!("runtime {:.2} s >= {limit} s", elapsed.as_secs_f64()), elapsed.as_secs_f64() < limit)
}

fn timed(limit: f64, f: impl FnOnce() -> Result<Outcome, String>) -> Result<Outcome, String> {
    let start = Instant::now();
    let mut out = f()?;
    let (msg, ok) = within(start.elapsed(), limit);
    if !ok {
        out.pass = false;
        out.detail = format!("{}; {msg}", out.detail);
    }
    Ok(out)
}

fn qplate_conversion() -> Result<Outcome, String> {
    timed(5.0, || {
        let rep = run(ScenarioKind::QplateConversion)?;
        let charge = value(&rep, "charge_out")?;
        let sam_in = value(&rep, "sam_in")?;
        let sam_out = value(&rep, "sam_out")?;
        let pointwise = value(&rep, "s3_pointwise_error")?;
        let oam = value(&rep, "oam_out")?;
        let change = value(&rep, "total_change")?;
        Ok(judge(
            &[&rep],
            &[
                ("charge_out == 2", charge == 2.0),
                ("sam_in == +1", (sam_in - 1.0).abs() <= 1e-12),
                ("sam_out == -1", (sam_out + 1.0).abs() <= 1e-12),
                ("pointwise s3 flip", pointwise <= 1e-12),
                ("oam_out == 2", (oam - 2.0).abs() <= 1e-3),
                ("ledger conserved", change.abs() <= 1e-3),
            ],
        ))
    })
}

fn charge_sweep() -> Result<Outcome, String> {
    timed(30.0, || {
        let rep = run(ScenarioKind::QplateChargeSweep)?;
        let mut checks = Vec::new();
        for twice_q in [-4, -2, -1, 1, 2, 4] {
            let l = value(&rep, &format!("charge_out[L,2q={twice_q}]"))?;
            let r = value(&rep, &format!("charge_out[R,2q={twice_q}]"))?;
            checks.push((l == twice_q as f64 && r == -twice_q as f64, twice_q));
        }
        let named: Vec<(String, bool)> = checks
            .iter()
            .map(|&(ok, q2)| (format!("helicity sign flip at 2q={q2}"), ok))
            .collect();
        let named: Vec<(&str, bool)> = named.iter().map(|(s, ok)| (s.as_str(), *ok)).collect();
        Ok(judge(&[&rep], &named))
    })
}

fn lg_oam() -> Result<Outcome, String> {
    let rep = run(ScenarioKind::LgOam)?;
    let mut oam_ok = true;
    let mut purity_ok = true;
    let mut cases = 0;
    for p in [0, 1] {
        for l in -3..=3 {
            oam_ok &= (value(&rep, &format!("oam[l={l},p={p}]"))? - l as f64).abs() <= 1e-3;
            purity_ok &= value(&rep, &format!("purity[l={l},p={p}]"))? > 0.999;
            cases += 1;
        }
    }
    Ok(judge(
        &[&rep],
        &[("oam within 1e-3", oam_ok), ("purity > 0.999", purity_ok), ("14 modes", cases == 14)],
    ))
}

fn solid_angle() -> Result<Outcome, String> {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, TAU};
    let srp = run(ScenarioKind::SrpGreatcircle)?;
    let cyc = run(ScenarioKind::PancharatnamCycle)?;
    let great = value(&srp, "solid_angle[great_circle]")?;
    let plus = value(&srp, "srp[+1]")?;
    let minus = value(&srp, "srp[-1]")?;
    let octant = value(&srp, "solid_angle[octant]")?;
    let magnitude = value(&cyc, "octant_phase_magnitude")?;
    let half_angle = value(&cyc, "half_angle_max_error")?;
    let within = value(&cyc, "half_angle_cases_within")?;
    Ok(judge(
        &[&srp, &cyc],
        &[
            ("great circle 2π", (great.abs() - TAU).abs() <= 1e-6),
            ("srp opposite", plus == -minus),
            ("octant π/2", (octant - FRAC_PI_2).abs() <= 1e-9),
            ("cycle π/4", (magnitude - FRAC_PI_4).abs() <= 1e-9),
            ("half-angle law", half_angle <= 1e-6 && within == 100.0),
        ],
    ))
}

fn plane_wave() -> Result<Outcome, String> {
    let rep = run(ScenarioKind::PlaneWaveIdentity)?;
    let mut checks = Vec::new();
    for kind in ["linear", "circular", "elliptical"] {
        checks.push((kind, (value(&rep, &format!("u_over_gc[{kind}]"))? - 1.0).abs() <= 1e-12));
    }
    Ok(judge(&[&rep], &checks))
}

fn photon() -> Result<Outcome, String> {
    let rep = run(ScenarioKind::PhotonPartition)?;
    let sum = value(&rep, "sum_over_hnu")?;
    let rot = value(&rep, "classical_rotational_rel_diff")?;
    let trans = value(&rep, "classical_translational_rel_diff")?;
    Ok(judge(
        &[&rep],
        &[
            ("halves sum to hν", (sum - 1.0).abs() <= 1e-15),
            ("classical pair", rot.abs() <= 1e-15 && trans.abs() <= 1e-15),
        ],
    ))
}

fn forks() -> Result<Outcome, String> {
    let rep = run(ScenarioKind::InterferenceFork)?;
    let counts: Vec<&SummaryRow> = rows_matching(&rep, "fork_count").collect();
    let agree = counts.iter().filter(|r| r.pass).count();
    let charges: std::collections::BTreeSet<i64> = counts.iter().map(|r| r.expected as i64).collect();
    let mut out = judge(
        &[&rep],
        &[
            ("20 cases", counts.len() == 20),
            ("charges cover -3..3", charges == (-3..=3).collect()),
        ],
    );
    out.detail = format!("{agree}/{} forks counted correctly; {}", counts.len(), out.detail);
    Ok(out)
}

fn rotating() -> Result<Outcome, String> {
    let hwp = run(ScenarioKind::RotatingHwpPair)?;
    let qp = run(ScenarioKind::RotatingQplate)?;
    let mut checks = Vec::new();
    for rep in [&hwp, &qp] {
        let r = row(rep, "frequency_shift")?;
        checks.push((r.value - 2.0).abs() <= r.tolerance);
    }
    Ok(judge(
        &[&hwp, &qp],
        &[("hwp pair 2Ω", checks[0]), ("rotating q-plate 2Ω", checks[1])],
    ))
}

fn propagation() -> Result<Outcome, String> {
    let rep = run(ScenarioKind::PropagationStability)?;
    let mut oam_ok = true;
    let mut charge_ok = true;
    let mut reached_2zr = false;
    for r in &rep.rows {
        if r.quantity.starts_with("oam[") {
            oam_ok &= (r.value - r.expected).abs() <= 2e-3;
            reached_2zr |= r.quantity.contains("z=2zR");
        } else if r.quantity.starts_with("charge[") {
            charge_ok &= r.value == r.expected;
        }
    }
    let width = value(&rep, "gaussian_width_ratio[zR]")?;
    let semigroup = value(&rep, "semigroup_error")?;
    Ok(judge(
        &[&rep],
        &[
            ("charge invariant", charge_ok),
            ("oam invariant", oam_ok),
            ("propagated to 2zR", reached_2zr),
            ("w(zR) = √2 w0", (width / 2f64.sqrt() - 1.0).abs() <= 5e-3),
            ("semigroup", semigroup <= 1e-9),
        ],
    ))
}

fn determinism() -> Result<Outcome, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let start = Instant::now();
    let output = Command::new(PathBuf::from(env!("CARGO_BIN_EXE_lightsim")))
        .arg("selftest")
        .arg("--out")
        .arg(dir.path())
        .output()
        .map_err(|e| format!("cannot launch lightsim: {e}"))?;
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&output.stdout);
    let identical = stdout.lines().any(|l| l.contains("bit-identical"));
    let (msg, fast) = within(elapsed, 60.0);
    let checks = [
        ("exit status 0", output.status.success()),
        ("bit-identical outputs", identical),
        (msg.as_str(), fast),
    ];
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    if failed.is_empty() {
        let summary = stdout.lines().find(|l| l.contains("bit-identical")).unwrap_or_default();
        Ok(Outcome { pass: true, detail: summary.trim().to_string() })
    } else {
        let tail: Vec<&str> = stdout.lines().filter(|l| l.starts_with("FAIL") || l.starts_with("     ")).collect();
        Ok(Outcome::fail(format!("{}; {}", failed.join(", "), tail.join(" | "))))
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<Outcome, String>); 10] = [
        ("q-plate conversion", qplate_conversion),
        ("generalized charge", charge_sweep),
        ("LG OAM", lg_oam),
        ("solid angle and SRP", solid_angle),
        ("plane-wave identity", plane_wave),
        ("photon partition", photon),
        ("interference forks", forks),
        ("rotating elements", rotating),
        ("propagation", propagation),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check().unwrap_or_else(Outcome::fail);
        let secs = start.elapsed().as_secs_f64();
        if !outcome.pass {
            failures += 1;
        }
        println!(
            "criterion {:>2} {:<22} {} ({secs:.2} s) {}",
            i + 1,
            name,
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
