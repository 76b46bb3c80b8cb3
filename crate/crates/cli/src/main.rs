mod output;

use std::fs::File;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use definetti_core::geometry::{
    convex_hull_2d, fk_image, striations_data, write_cloud_csv, write_hull_csv, CloudPoint,
    ProjectedCloud,
};
use definetti_core::lr::lr_coefficient;
use definetti_core::numeric::{fmt_rational, parse_rational_list, to_f64};
use definetti_core::partitions::{dim_skew, dim_sn, dim_ud, enumerate_partitions};
use definetti_core::symfunc::{df_phi, kostka_matrix, schur_eval, shifted_schur_eval};
use definetti_core::tensor_oracle::{oracle_partial_trace_coeffs, symmetric_mixture_gap, SymmetricState};
use definetti_core::werner::{
    definetti_bound_werner, df_small_ratio_bound, distance_to_products_k2, distance_to_twirled, eps_classical,
    eps_coherent, eps_mixed, eps_symmetric, exchange_distance, lower_bound_antisym, min_distance_grid,
    partial_trace_coeffs_with, twirled_product, Route,
};
use definetti_core::{verify, BoundReport, Error, Partition, Rational, Result, SkewShape, Spectrum, WernerState};

use output::{render, Format, Report, Table};

#[derive(Parser)]
#[command(name = "definetti", version, about = "Exact Werner-state and de Finetti computations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "plain")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    Shifted,
    Lr,
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Figure {
    Scheme,
    Polytope,
    Striations,
}

#[derive(Subcommand)]
enum Command {
    /// List Par(k,d) with dim V_λ and dim U_λ.
    Partitions {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Irrep dimensions of λ, and of λ/μ when --mu is given.
    Dims {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        mu: Option<Partition>,
    },
    /// s_μ(x).
    Schur {
        #[arg(long)]
        mu: Partition,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// s*_μ(λ) for an integer vector λ.
    Sschur {
        #[arg(long)]
        mu: Partition,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// The Kostka matrix over Par(k,d), or its inverse.
    Kostka {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        inverse: bool,
    },
    /// c^λ_{μν}.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Werner coefficients of tr_{n−k} ρ_λ.
    Ptrace {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value = "shifted")]
        route: RouteArg,
    },
    /// Werner coefficients of the twirl of σ^{⊗k}, spec σ = r.
    Twirl {
        #[arg(long)]
        r: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Distance from tr_{n−k} ρ_λ to the twirl of r^{⊗k}, or to the product
    /// states when --r is omitted and k = 2.
    Distance {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Grid minimum of the twirled-product distance over Δ(d).
    Mindist {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 60)]
        resolution: usize,
    },
    /// The de Finetti error bounds at (n,k,d).
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        /// Argument of φ; defaults to k/n.
        #[arg(long)]
        alpha: Option<f64>,
        /// Also report the exact distance for this diagram.
        #[arg(long)]
        lambda: Option<Partition>,
    },
    /// The antisymmetric lower bound at λ = (m^d).
    LowerBound {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Distance between the k-marginals of nλ̄ and mλ̄.
    Exchange {
        #[arg(long)]
        r: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// Gap between a random symmetric state's marginal and its de Finetti mixture.
    Gap {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Figure data as projected point clouds.
    Figure {
        #[arg(long, value_enum)]
        which: Figure,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        resolution: Option<usize>,
        /// Two partitions separated by ':', e.g. 1,1,1:2,1.
        #[arg(long)]
        coords: Option<String>,
        /// Write the convex hull of the cloud here as CSV.
        #[arg(long)]
        hull_out: Option<String>,
    },
    /// Run the cross-check suite.
    Verify {
        /// Run only the named check.
        #[arg(long)]
        only: Option<String>,
        /// List check names and exit.
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Verify { only, list } => return run_verify(only, list, cli.format),
        cmd => dispatch(cmd),
    };
    match result {
        Ok(report) => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            if let Err(e) = render(&report, cli.format, &mut lock).and_then(|_| lock.flush()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SizeCap(_) => 3,
        Error::Invariant(_) => 4,
        _ => 2,
    }
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Parse(format!("THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::Domain(e.to_string()))
}

fn r(x: &Rational) -> String {
    fmt_rational(x)
}

fn spectrum(s: &str) -> Result<Spectrum> {
    Spectrum::new(parse_rational_list(s)?)
}

fn werner_report(w: &WernerState) -> Report {
    let mut t = Table::new(&["partition", "weight"]);
    for (p, v) in w.weights() {
        t.push(vec![p.to_string(), r(v)]);
    }
    let json = serde_json::to_value(w).expect("serializable");
    Report::new(json, t)
}

fn bound_row(t: &mut Table, b: &BoundReport) {
    let kind = serde_json::to_value(b.kind).expect("serializable");
    t.push(vec![
        b.bound_name.clone(),
        r(&b.exact_distance),
        r(&b.bound_value),
        kind.as_str().unwrap_or_default().to_string(),
        b.satisfied.to_string(),
    ]);
}

fn dispatch(cmd: Command) -> Result<Report> {
    match cmd {
        Command::Partitions { k, d } => {
            let mut t = Table::new(&["partition", "dim_sn", "dim_ud"]);
            let mut rows = Vec::new();
            for p in enumerate_partitions(k, d) {
                let (v, u) = (dim_sn(&p), dim_ud(&p, d));
                t.push(vec![p.to_string(), v.to_string(), u.to_string()]);
                rows.push(json!({"partition": p, "dim_sn": v.to_string(), "dim_ud": u.to_string()}));
            }
            Ok(Report::new(json!({"k": k, "d": d, "partitions": rows}), t))
        }
        Command::Dims { lambda, d, mu } => {
            let mut pairs = vec![("dim_sn", dim_sn(&lambda).to_string())];
            if let Some(d) = d {
                pairs.push(("dim_ud", dim_ud(&lambda, d).to_string()));
            }
            if let Some(mu) = mu {
                pairs.push(("dim_skew", dim_skew(&SkewShape::new(lambda.clone(), mu)?).to_string()));
            }
            let json = Value::Object(pairs.iter().map(|(k, v)| (k.to_string(), json!(v))).collect());
            Ok(Report::new(json, Table::pairs(pairs)))
        }
        Command::Schur { mu, x } => {
            let v = schur_eval(&mu, &parse_rational_list(&x)?);
            Ok(Report::new(json!({"value": r(&v)}), Table::pairs(vec![("schur", r(&v))])))
        }
        Command::Sschur { mu, lambda } => {
            let lam = lambda
                .split(',')
                .map(|s| s.trim().parse::<i64>().map_err(|e| Error::Parse(format!("bad entry {s:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            let v = shifted_schur_eval(&mu, &lam);
            Ok(Report::new(json!({"value": v.to_string()}), Table::pairs(vec![("shifted_schur", v.to_string())])))
        }
        Command::Kostka { k, d, inverse } => {
            let km = kostka_matrix(k, d)?;
            let index = enumerate_partitions(k, d);
            let mut headers = vec!["partition".to_string()];
            headers.extend(index.iter().map(|p| p.to_string()));
            let mut t = Table {
                headers,
                rows: Vec::new(),
            };
            let mut rows = Vec::new();
            for l in &index {
                let entries: Vec<String> = index
                    .iter()
                    .map(|m| {
                        if inverse {
                            km.kappa(l, m).expect("indexed").to_string()
                        } else {
                            definetti_core::symfunc::kostka_number(l, m, d).to_string()
                        }
                    })
                    .collect();
                let mut row = vec![l.to_string()];
                row.extend(entries.iter().cloned());
                t.push(row);
                rows.push(json!({"partition": l, "row": entries}));
            }
            Ok(Report::new(json!({"k": k, "d": d, "inverse": inverse, "columns": index, "rows": rows}), t))
        }
        Command::Lr { lambda, mu, nu } => {
            let c = lr_coefficient(&lambda, &mu, &nu);
            Ok(Report::new(json!({"value": c}), Table::pairs(vec![("lr", c.to_string())])))
        }
        Command::Ptrace {
            lambda,
            n,
            k,
            d,
            route,
        } => {
            let w = match route {
                RouteArg::Shifted => partial_trace_coeffs_with(Route::Shifted, &lambda, n, k, d)?,
                RouteArg::Lr => partial_trace_coeffs_with(Route::Lr, &lambda, n, k, d)?,
                RouteArg::Oracle => oracle_partial_trace_coeffs(&lambda, n, k, d)?,
            };
            Ok(werner_report(&w))
        }
        Command::Twirl { r: rs, k, d } => Ok(werner_report(&twirled_product(&spectrum(&rs)?, k, d)?)),
        Command::Distance {
            lambda,
            n,
            k,
            r: rs,
            d,
        } => {
            let (name, v) = match (rs, d) {
                (Some(rs), d) => {
                    let sp = spectrum(&rs)?;
                    if let Some(d) = d.filter(|&d| d != sp.dim()) {
                        return Err(Error::DimensionMismatch(format!("--r has length {}, --d is {d}", sp.dim())));
                    }
                    ("distance_to_twirled", distance_to_twirled(&lambda, n, k, &sp)?)
                }
                (None, Some(d)) if k == 2 => {
                    let w = partial_trace_coeffs_with(Route::Shifted, &lambda, n, 2, d)?;
                    ("distance_to_products", distance_to_products_k2(&w)?)
                }
                (None, _) => {
                    return Err(Error::Domain("give --r, or --d with --k 2 for the product-state distance".into()))
                }
            };
            Ok(Report::new(
                json!({"name": name, "value": r(&v), "approx": to_f64(&v)}),
                Table::pairs(vec![(name, r(&v))]),
            ))
        }
        Command::Mindist {
            lambda,
            n,
            k,
            d,
            resolution,
        } => {
            let m = min_distance_grid(&lambda, n, k, d, resolution)?;
            let json = json!({
                "point": m.point.entries().iter().map(r).collect::<Vec<_>>(),
                "value": r(&m.value),
                "index": m.index,
                "resolution": resolution,
            });
            let t = Table::pairs(vec![("point", m.point.to_string()), ("value", r(&m.value)), ("index", m.index.to_string())]);
            Ok(Report::new(json, t))
        }
        Command::Bounds { n, k, d, alpha, lambda } => bounds(n, k, d, alpha, lambda),
        Command::LowerBound { d, m, k } => {
            let b = lower_bound_antisym(d, m, k)?;
            let mut t = Table::new(&["bound", "exact", "value", "kind", "satisfied"]);
            bound_row(&mut t, &b);
            Ok(Report::new(serde_json::to_value(&b).expect("serializable"), t))
        }
        Command::Exchange { r: rs, n, m, k } => {
            let v = exchange_distance(&spectrum(&rs)?, n, m, k)?;
            Ok(Report::new(
                json!({"value": r(&v), "approx": to_f64(&v)}),
                Table::pairs(vec![("exchange_distance", r(&v))]),
            ))
        }
        Command::Gap { n, k, d, seed } => {
            let g = symmetric_mixture_gap(&SymmetricState::random(n, d, seed)?, k)?;
            let json = json!({
                "gap": g.gap,
                "bound": r(&g.bound),
                "within_bound": g.gap <= to_f64(&g.bound),
                "min_eigenvalue": g.min_eigenvalue,
                "trace_error": g.trace_error,
            });
            let t = Table::pairs(vec![
                ("gap", format!("{:.12}", g.gap)),
                ("bound", r(&g.bound)),
                ("min_eigenvalue", format!("{:.3e}", g.min_eigenvalue)),
                ("trace_error", format!("{:.3e}", g.trace_error)),
            ]);
            Ok(Report::new(json, t))
        }
        Command::Figure {
            which,
            n,
            k,
            d,
            resolution,
            coords,
            hull_out,
        } => figure(which, n, k, d, resolution, coords, hull_out),
        Command::Verify { .. } => unreachable!("handled in main"),
    }
}

fn bounds(n: usize, k: usize, d: usize, alpha: Option<f64>, lambda: Option<Partition>) -> Result<Report> {
    if k > n {
        return Err(Error::Domain(format!("need k ≤ n, got k={k}, n={n}")));
    }
    let coherent = eps_coherent(&Partition::row_shape(k), &Partition::row_shape(n - k), d)?;
    let sym = eps_symmetric(n, k, d)?;
    let mixed = eps_mixed(n, k, d)?;
    let classical = eps_classical(n, k, d)?;
    let alpha = alpha.unwrap_or(k as f64 / n as f64);
    let phi = df_phi(alpha).ok();
    let mut json = json!({
        "eps_coherent": r(&coherent),
        "eps_symmetric": r(&sym),
        "eps_mixed": r(&mixed),
        "eps_classical": r(&classical),
        "df_alpha": alpha,
        "df_phi": phi,
        "df_small_ratio": df_small_ratio_bound(n, k),
    });
    let mut t = Table::pairs(vec![
        ("eps_coherent", r(&coherent)),
        ("eps_symmetric", r(&sym)),
        ("eps_mixed", r(&mixed)),
        ("eps_classical", r(&classical)),
        ("df_phi", phi.map(|v| format!("{v:.12}")).unwrap_or_else(|| "undefined".into())),
        ("df_small_ratio", format!("{:.12}", df_small_ratio_bound(n, k))),
    ]);
    if let Some(lambda) = lambda {
        let b = definetti_bound_werner(&lambda, n, k, d)?;
        t.push(vec!["werner_exact".into(), r(&b.exact_distance)]);
        t.push(vec!["werner_bound".into(), r(&b.bound_value)]);
        json["werner"] = serde_json::to_value(&b).expect("serializable");
    }
    Ok(Report::new(json, t))
}

fn default_coords(k: usize, d: usize) -> Result<(Partition, Partition)> {
    let index = enumerate_partitions(k, d);
    if index.len() < 2 {
        return Err(Error::Domain(format!("Par({k},{d}) has fewer than two elements")));
    }
    let antisym = Partition::new(vec![1; k])?;
    let hook = Partition::new(vec![2, 1])?;
    if k == 3 && index.contains(&antisym) {
        return Ok((antisym, hook));
    }
    let half = Partition::new(vec![k - k / 2, k / 2])?;
    let first = Partition::row_shape(k);
    if half != first && index.contains(&half) {
        return Ok((first, half));
    }
    Ok((index[0].clone(), index[1].clone()))
}

fn parse_coords(s: &str) -> Result<(Partition, Partition)> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("coords must look like 1,1,1:2,1, got {s:?}")))?;
    Ok((a.parse()?, b.parse()?))
}

fn figure(
    which: Figure,
    n: Option<usize>,
    k: usize,
    d: usize,
    resolution: Option<usize>,
    coords: Option<String>,
    hull_out: Option<String>,
) -> Result<Report> {
    let coords = match coords {
        Some(s) => parse_coords(&s)?,
        None => default_coords(k, d)?,
    };
    let need_n = || n.ok_or_else(|| Error::Domain("this figure needs --n".into()));
    let resolution = resolution.unwrap_or(if d <= 3 { 60 } else { 30 });
    let cloud = match which {
        Figure::Polytope => fk_image(k, d, resolution, coords)?,
        Figure::Striations => striations_data(need_n()?, k, d, coords)?,
        Figure::Scheme => scheme(need_n()?, k, d, coords)?,
    };
    let hull = convex_hull_2d(&cloud.coordinates());
    if let Some(path) = hull_out {
        let f = File::create(&path).map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))?;
        write_hull_csv(&hull, f)?;
    }
    let mut csv = Vec::new();
    write_cloud_csv(&cloud, &mut csv)?;
    let point_json = |p: &CloudPoint| json!({"x": r(&p.x), "y": r(&p.y), "tag": p.tag, "group": p.group});
    let json = json!({
        "k": cloud.k,
        "d": cloud.d,
        "labels": [cloud.labels.0, cloud.labels.1],
        "points": cloud.points.iter().map(point_json).collect::<Vec<_>>(),
        "hull": hull.iter().map(|(x, y)| json!([r(x), r(y)])).collect::<Vec<_>>(),
    });
    let mut t = Table::new(&["x", "y", "tag", "group"]);
    for p in &cloud.points {
        t.push(vec![to_f64(&p.x).to_string(), to_f64(&p.y).to_string(), p.tag.clone(), p.group.clone()]);
    }
    Ok(Report {
        json,
        table: t,
        csv: Some(csv),
    })
}

/// Both routes from each diagram: the reduced state and the twirl of its
/// normalized rows.
fn scheme(n: usize, k: usize, d: usize, coords: (Partition, Partition)) -> Result<ProjectedCloud> {
    let mut points = Vec::new();
    for lambda in enumerate_partitions(n, d) {
        let reduced = partial_trace_coeffs_with(Route::Shifted, &lambda, n, k, d)?;
        let twirl = twirled_product(&Spectrum::from_partition(&lambda, d)?, k, d)?;
        for (group, w) in [("ptrace", reduced), ("twirl", twirl)] {
            points.push(CloudPoint {
                x: w.weight(&coords.0),
                y: w.weight(&coords.1),
                tag: format!("lambda={lambda}"),
                group: group.into(),
            });
        }
    }
    // Reference vertices of the image.
    for q in 1..=d {
        let w = twirled_product(&Spectrum::vertex(q, d), k, d)?;
        points.push(CloudPoint {
            x: w.weight(&coords.0),
            y: w.weight(&coords.1),
            tag: format!("r={}", Spectrum::vertex(q, d)),
            group: format!("x{q}"),
        });
    }
    Ok(ProjectedCloud {
        k,
        d,
        labels: coords,
        points,
    })
}

fn run_verify(only: Option<String>, list: bool, format: Format) -> ExitCode {
    let checks = match &only {
        Some(name) => match verify::find(name) {
            Some(c) => vec![c],
            None => {
                eprintln!("error: no check named {name:?}; see `definetti verify --list`");
                return ExitCode::from(2);
            }
        },
        None => verify::suite(),
    };
    if list {
        for c in &checks {
            println!("{}", c.name);
        }
        return ExitCode::SUCCESS;
    }
    let start = Instant::now();
    let mut t = Table::new(&["check", "status", "detail"]);
    let mut rows = Vec::new();
    let mut failed = 0;
    for c in &checks {
        let o = verify::run_check(c);
        eprintln!("{:<28} {:>8.2}s", o.name, o.seconds);
        if !o.passed {
            failed += 1;
        }
        let status = if o.passed { "PASS" } else { "FAIL" };
        t.push(vec![o.name.to_string(), status.into(), o.detail.clone()]);
        rows.push(json!({"check": o.name, "passed": o.passed, "detail": o.detail}));
    }
    eprintln!("{} checks, {failed} failed, {:.1}s", checks.len(), start.elapsed().as_secs_f64());
    let report = Report::new(json!({"checks": rows, "failed": failed}), t);
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    if render(&report, format, &mut lock).is_err() {
        return ExitCode::from(2);
    }
    if failed > 0 {
        ExitCode::from(4)
    } else {
        ExitCode::SUCCESS
    }
}
