//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use definetti_core::verify;

struct Line {
    id: u8,
    name: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
    limit: Option<Duration>,
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_definetti"))
}

fn timed(f: impl FnOnce() -> Result<String, String>) -> (Result<String, String>, Duration) {
    let start = Instant::now();
    let r = f();
    (r, start.elapsed())
}

fn vertex_exactness_cli() -> Result<String, String> {
    let cases = [
        ("1,0,0", ["1/1", "0/1", "0/1"]),
        ("1/2,1/2,0", ["1/2", "1/2", "0/1"]),
        ("1/3,1/3,1/3", ["10/27", "16/27", "1/27"]),
    ];
    let mut slowest = Duration::ZERO;
    for (r, expected) in cases {
        let start = Instant::now();
        let out = bin()
            .args(["twirl", "--r", r, "--k", "3", "--d", "3", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        if !out.status.success() {
            return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
        }
        if took > Duration::from_secs(1) {
            return Err(format!("twirl at {r} took {took:?}"));
        }
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let got: Vec<String> = v["weights"]
            .as_array()
            .ok_or("no weights array")?
            .iter()
            .map(|w| format!("{}/{}", w["num"].as_str().unwrap_or("?"), w["den"].as_str().unwrap_or("?")))
            .collect();
        if got != expected {
            return Err(format!("r={r}: {got:?}"));
        }
    }
    Ok(format!("(1,0,0), (1/2,1/2,0), (10/27,16/27,1/27); slowest call {:.3}s", slowest.as_secs_f64()))
}

fn verify_cli() -> Result<String, String> {
    let out = bin().args(["verify", "--format", "csv"]).output().map_err(|e| e.to_string())?;
    let table = String::from_utf8_lossy(&out.stdout);
    let rows = table.lines().count().saturating_sub(1);
    let failed: Vec<&str> = table.lines().filter(|l| l.contains(",FAIL,")).collect();
    match out.status.code() {
        Some(0) if failed.is_empty() => Ok(format!("{rows} checks passed")),
        code => Err(format!("exit {code:?}, failing: {failed:?}")),
    }
}

fn core(name: &'static str) -> impl FnOnce() -> Result<String, String> {
    move || {
        let check = verify::find(name).ok_or_else(|| format!("no check {name}"))?;
        (check.run)().map_err(|e| e.to_string())
    }
}

type Criterion = (u8, &'static str, Box<dyn FnOnce() -> Result<String, String>>, Option<Duration>);

fn main() {
    let secs = Duration::from_secs;
    let plan: Vec<Criterion> = vec![
        (1, "vertex exactness (bit-exact, < 1s per call)", Box::new(vertex_exactness_cli), None),
        (2, "route equivalence (exact)", Box::new(core("route-equivalence")), Some(secs(60))),
        (3, "dense oracle (exact; distances 1e-9)", Box::new(core("dense-oracle")), Some(secs(120))),
        (4, "Okounkov-Olshanski identity (exact)", Box::new(core("okounkov-olshanski")), None),
        (5, "antisymmetric lower bound (exact)", Box::new(core("lower-bound")), Some(secs(5))),
        (6, "symmetric de Finetti gap ≤ 2dk/n (1e-9)", Box::new(core("symmetric-definetti")), Some(secs(60))),
        (7, "scaling slope in [-1.2,-0.8]", Box::new(core("scaling-slope")), None),
        (8, "polytope span tests and f^3 hull (exact)", Box::new(core("geometry")), Some(secs(30))),
        (9, "k=2 closed form vs grid (one step, R=200)", Box::new(core("k2-grid")), None),
        (10, "full verify suite via CLI", Box::new(verify_cli), Some(secs(300))),
    ];
    let mut lines = Vec::new();
    for (id, name, f, limit) in plan {
        let (res, elapsed) = timed(f);
        let (passed, detail) = match res {
            Ok(d) => (limit.is_none_or(|l| elapsed <= l), d),
            Err(e) => (false, e),
        };
        let line = Line {
            id,
            name,
            passed,
            detail,
            elapsed,
            limit,
        };
        println!(
            "[{}] {:>2}. {} ({:.2}s{}) {}",
            if line.passed { "PASS" } else { "FAIL" },
            line.id,
            line.name,
            line.elapsed.as_secs_f64(),
            line.limit.map(|l| format!(" / limit {}s", l.as_secs())).unwrap_or_default(),
            line.detail
        );
        lines.push(line);
    }
    let failed = lines.iter().filter(|l| !l.passed).count();
    println!("acceptance: {} passed, {failed} failed", lines.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
