use std::fmt::Write as _;
use std::path::Path;

use serde_json::json;
use squarelab::constructions::cantor::{gen_cantor_truncation, CantorMode, CantorSets};
use squarelab::constructions::examples::{gen_boundary_example, gen_vertex_example};
use squarelab::constructions::splice::{default_sequence, splice_en, Cell, CellPattern, Dim};
use squarelab::constructions::{gen_an, gen_countable_truncation, gen_dk};
use squarelab::dimension::{
    covering_count_1d, dyadic_box_count_2d, falconer_ratios, RatioBound, RatioFamily,
};
use squarelab::finders::{
    find_boundary_centers_2d, find_centers_1d, find_vertex_centers_2d, CenterWitness,
};
use squarelab::report::{
    family_scan, main_lemma_1d_holds, main_lemma_2d_holds, verify_construction, BoundCheck,
    Construction, Coverage, ExponentReport, Family, Report, SlopeEntry, DEFAULT_SEED,
};
use squarelab::sets::read_file;
use squarelab::{Budget, Error, IntSet1D, PointSet2D, Rational, Result};

use crate::args::{self, Cli, Command, FindCmd, Format, GenCmd, VerifyCmd};

/// Rendered data plus whether every check passed.
pub struct Outcome {
    pub data: String,
    pub ok: bool,
}

impl Outcome {
    fn data(data: String) -> Self {
        Outcome { data, ok: true }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::UnsupportedParameter(msg.into())
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let budget = match cli.budget {
        Some(0) => return Err(usage("--budget must be at least 1")),
        Some(f) => Budget::scaled(f),
        None => Budget::from_env()?,
    };
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    match &cli.command {
        Command::Gen(cmd) => gen(cmd, &budget),
        Command::Find(cmd) => find(cmd, cli.format, &budget),
        Command::Verify(cmd) => verify(cmd, cli.format, seed, &budget),
        Command::Cover { input, length } => {
            let a = read_1d(input)?;
            let r = covering_count_1d(&a, *length)?;
            Ok(Outcome::data(match cli.format {
                Format::Csv => format!("length,count\n{},{}\n", r.length, r.count),
                Format::Json => json!({"length": r.length, "count": r.count, "size": a.len()}).to_string() + "\n",
                Format::Text => format!("{} {}\n", r.length, r.count),
            }))
        }
        Command::Boxcount { input, m, frame_bits } => {
            let p = read_2d(input)?;
            let rows: Vec<(i32, u64)> = m
                .iter()
                .map(|&m| dyadic_box_count_2d(&p, *frame_bits, m).map(|c| (m, c)))
                .collect::<Result<_>>()?;
            Ok(Outcome::data(match cli.format {
                Format::Json => {
                    let v: Vec<_> = rows.iter().map(|(m, c)| json!({"scale": m, "count": c})).collect();
                    serde_json::Value::from(v).to_string() + "\n"
                }
                fmt => table(fmt, &["scale", "count"], rows.iter().map(|(m, c)| vec![m.to_string(), c.to_string()])),
            }))
        }
        Command::Ratios { s, jmax, which, family } => {
            let s: Rational = s.parse()?;
            let which = match which {
                args::Which::Upper => RatioBound::Upper,
                args::Which::Lower => RatioBound::Lower,
            };
            let family = match family {
                args::SumFamily::T => RatioFamily::T,
                args::SumFamily::A => RatioFamily::A,
            };
            let pts = falconer_ratios(s, *jmax, which, family)?;
            Ok(Outcome::data(match cli.format {
                Format::Json => serde_json::to_string_pretty(&pts).expect("serializable") + "\n",
                fmt => table(
                    fmt,
                    &["j", "ratio", "target"],
                    pts.iter().map(|p| vec![p.j.to_string(), format!("{:.12}", p.value), format!("{:.12}", p.target)]),
                ),
            }))
        }
        Command::Exponents(a) | Command::Scan(a) => {
            let family: Family = a.family.parse()?;
            let report = family_scan(family, a.kmin, a.kmax, &budget)?;
            let checks = band_checks(&report, a.band);
            let ok = checks.iter().all(|c| c.ok);
            let data = match (cli.format, &cli.command) {
                (Format::Json, Command::Scan(_)) => {
                    Report {
                        suite: format!("scan_{}", family.name()),
                        timestamp: timestamp(),
                        seed,
                        checks,
                        slopes: SlopeEntry::from_report(&report),
                    }
                    .to_json()
                        + "\n"
                }
                (fmt, _) => render_exponents(&report, fmt),
            };
            Ok(Outcome { data, ok })
        }
    }
}

/// The last slope against `target ± band`, when a band is requested.
fn band_checks(report: &ExponentReport, band: Option<f64>) -> Vec<BoundCheck> {
    let (Some(band), Some(last)) = (band, report.slopes.last()) else {
        return Vec::new();
    };
    let slope = last.slope.unwrap_or(f64::NAN);
    let ok = (slope - report.target).abs() <= band;
    vec![BoundCheck::new(
        format!("{}_slope_{}_{}", report.family.name(), last.from, last.to),
        slope,
        report.target,
        ok,
    )]
}

fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn read_1d(path: &Path) -> Result<IntSet1D> {
    IntSet1D::parse(&read_file(path)?, path)
}

fn read_2d(path: &Path) -> Result<PointSet2D> {
    PointSet2D::parse(&read_file(path)?, path)
}

fn write_side_file(path: &Option<std::path::PathBuf>, set: &PointSet2D) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, set.to_text()).map_err(|source| Error::Io { path: p.clone(), source })?;
    }
    Ok(())
}

/// Text rows separated by spaces, or CSV with a header row.
fn table<I: IntoIterator<Item = Vec<String>>>(fmt: Format, header: &[&str], rows: I) -> String {
    let sep = if fmt == Format::Csv { "," } else { " " };
    let mut out = String::new();
    if fmt == Format::Csv {
        out.push_str(&header.join(","));
        out.push('\n');
    }
    for row in rows {
        out.push_str(row.join(sep).trim_end());
        out.push('\n');
    }
    out
}

fn render_exponents(report: &ExponentReport, fmt: Format) -> String {
    if fmt == Format::Json {
        return serde_json::to_string_pretty(report).expect("serializable") + "\n";
    }
    let (x, y) = report.family.axes();
    let rows = report.rows.iter().enumerate().map(|(i, r)| {
        let slope = i
            .checked_sub(1)
            .and_then(|j| report.slopes[j].slope)
            .map(|v| format!("{v:.6}"))
            .unwrap_or_default();
        vec![r.param.to_string(), r.x.to_string(), r.y.to_string(), slope, format!("{:.6}", report.target)]
    });
    table(fmt, &["k", x, y, "slope", "target"], rows)
}

fn gen(cmd: &GenCmd, budget: &Budget) -> Result<Outcome> {
    let text = match cmd {
        GenCmd::Dk { k } => gen_dk(*k, budget)?.to_text(),
        GenCmd::An { p } => gen_an(*p, budget)?.to_text(),
        GenCmd::VertexExample { k, centers } => {
            let (b, s) = gen_vertex_example(*k, budget)?;
            write_side_file(centers, &s)?;
            b.to_text()
        }
        GenCmd::BoundaryExample { k, centers } => {
            let (b, s) = gen_boundary_example(*k, budget)?;
            write_side_file(centers, &s)?;
            b.to_text()
        }
        GenCmd::Cantor { s, p, mode, t } => {
            let mode = match mode {
                args::Mode::Exact => CantorMode::Exact,
                args::Mode::Float => CantorMode::Float,
                args::Mode::Auto => CantorMode::Auto,
            };
            let trunc = gen_cantor_truncation(s.parse()?, *p, mode, budget)?;
            match &trunc.sets {
                CantorSets::Exact { scale, a, t: tset, .. } => {
                    let set = if *t { tset } else { a };
                    format!("# scale {scale}\n{}", set.to_text())
                }
                CantorSets::Float { a, t: tset, error_bound } => {
                    let set = if *t { tset } else { a };
                    let mut out = format!("# float error_bound {error_bound:e}\n");
                    for v in set {
                        writeln!(out, "{v:.17e}").unwrap();
                    }
                    out
                }
            }
        }
        GenCmd::Countable { alpha, blocks, centers } => {
            let c = gen_countable_truncation(*alpha, *blocks, budget)?;
            write_side_file(centers, &c.scaled_centers()?)?;
            format!("# frame_bits {}\n{}", c.frame_bits, c.scaled_boundary_set()?.to_text())
        }
        GenCmd::Splice { a, n, level, dim } => splice_text(a.as_deref(), *n, level, *dim)?,
    };
    Ok(Outcome::data(text))
}

fn parse_cell(tok: &str, dim: Dim) -> Result<Cell> {
    let bad = || usage(format!("bad cell {tok:?}"));
    match dim {
        Dim::One => Ok([tok.trim().parse().map_err(|_| bad())?, 0]),
        Dim::Two => {
            let (x, y) = tok.split_once(':').ok_or_else(bad)?;
            Ok([x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?])
        }
    }
}

fn splice_text(a: Option<&[u64]>, n: usize, levels: &[String], dim: u8) -> Result<String> {
    let dim = match dim {
        1 => Dim::One,
        2 => Dim::Two,
        d => return Err(usage(format!("--dim must be 1 or 2, got {d}"))),
    };
    let seq = match a {
        Some(a) => a.to_vec(),
        None => default_sequence(n as u32)?,
    };
    if n == 0 || n >= seq.len() {
        return Err(usage(format!("n = {n} needs a_0..a_n")));
    }
    if levels.len() > n {
        return Err(usage(format!("{} levels given for n = {n}", levels.len())));
    }
    let patterns = (0..n)
        .map(|j| {
            let depth = seq[j + 1]
                .checked_sub(seq[j])
                .filter(|&d| d > 0)
                .ok_or_else(|| usage("a must be strictly increasing"))? as u32;
            match levels.get(j) {
                Some(spec) if !spec.trim().is_empty() => {
                    let cells = spec.split(',').map(|t| parse_cell(t, dim)).collect::<Result<Vec<_>>>()?;
                    CellPattern::new(dim, depth, cells)
                }
                Some(_) => CellPattern::new(dim, depth, []),
                None => CellPattern::full(dim, depth),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let e = splice_en(&patterns, &seq, n)?;
    let mut out = format!("# depth {}\n", e.depth);
    for c in &e.cells {
        match dim {
            Dim::One => writeln!(out, "{}", c[0]),
            Dim::Two => writeln!(out, "{} {}", c[0], c[1]),
        }
        .unwrap();
    }
    Ok(out)
}

fn render_witnesses(ws: &[CenterWitness], fmt: Format) -> String {
    let rows = ws
        .iter()
        .map(|w| vec![w.center.x2.to_string(), w.center.y2.to_string(), w.radius2.to_string()]);
    table(fmt, &["X", "Y", "R2"], rows)
}

fn find(cmd: &FindCmd, fmt: Format, budget: &Budget) -> Result<Outcome> {
    // (input size, center count, bound, bound_ok, rendered centers)
    let (input_size, centers, bound, ok, listing, count_only) = match cmd {
        FindCmd::Centers1d { input, count } => {
            let a = read_1d(input)?;
            let s = find_centers_1d(&a, budget)?;
            let n = a.len() as u64;
            let ok = main_lemma_1d_holds(s.len() as u64, n)?;
            let bound = 2f64.powf(4.0 / 3.0) * (n as f64).powf(8.0 / 3.0);
            let rows = s.iter().map(|c| vec![c.x2.to_string(), c.y2.to_string()]);
            (n, s.len(), Some(bound), ok, table(fmt, &["X", "Y"], rows), *count)
        }
        FindCmd::Vertices { input, count } => {
            let b = read_2d(input)?;
            let s = find_vertex_centers_2d(&b, budget)?;
            let n = b.len() as u64;
            let ok = main_lemma_2d_holds(s.len() as u64, n)?;
            let bound = (2.0 * n as f64).powf(4.0 / 3.0);
            (n, s.len(), Some(bound), ok, render_witnesses(&s, fmt), *count)
        }
        FindCmd::Boundaries { input, rmax, count } => {
            let b = read_2d(input)?;
            let s = find_boundary_centers_2d(&b, *rmax, budget)?;
            (b.len() as u64, s.len(), None, true, render_witnesses(&s, fmt), *count)
        }
    };
    let data = match (fmt, count_only) {
        (Format::Json, _) => {
            json!({"input_size": input_size, "centers": centers, "bound": bound, "bound_ok": ok}).to_string() + "\n"
        }
        (Format::Csv, true) => format!("count\n{centers}\n"),
        (Format::Text, true) => format!("{centers}\n"),
        (_, false) => listing,
    };
    Ok(Outcome { data, ok })
}

fn verify(cmd: &VerifyCmd, fmt: Format, seed: u64, budget: &Budget) -> Result<Outcome> {
    let coverage = |c: &args::Coverage| match (c.exhaustive, c.samples) {
        (true, _) => Coverage::Exhaustive,
        (false, Some(n)) => Coverage::Sampled(n),
        (false, None) => Coverage::Auto,
    };
    let (suite, which, cov) = match cmd {
        VerifyCmd::Dk { k, coverage: c } => ("verify_dk", Construction::Dk { k: *k }, coverage(c)),
        VerifyCmd::An { p, coverage: c } => ("verify_an", Construction::An { p: *p }, coverage(c)),
        VerifyCmd::Boundary { k } => ("verify_boundary", Construction::Boundary { k: *k }, Coverage::Auto),
        VerifyCmd::Countable { alpha, blocks } => (
            "verify_countable",
            Construction::Countable { alpha: *alpha, blocks: *blocks },
            Coverage::Auto,
        ),
    };
    let checks = verify_construction(which, cov, seed, budget)?;
    let ok = checks.iter().all(|c| c.ok);
    let data = match fmt {
        Format::Json => {
            Report {
                suite: suite.to_string(),
                timestamp: timestamp(),
                seed,
                checks,
                slopes: Vec::new(),
            }
            .to_json()
                + "\n"
        }
        fmt => render_checks(&checks, fmt),
    };
    Ok(Outcome { data, ok })
}

fn render_checks(checks: &[BoundCheck], fmt: Format) -> String {
    let rows = checks.iter().map(|c| {
        let sizes: Vec<String> = c.sizes.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = if c.ok { "ok" } else { "FAIL" };
        let failure = c.failure.map(|(x, y)| format!("{x}:{y}")).unwrap_or_default();
        vec![c.name.clone(), status.to_string(), c.lhs.to_string(), c.rhs.to_string(), sizes.join(";"), failure]
    });
    table(fmt, &["name", "status", "lhs", "rhs", "sizes", "failure"], rows)
}
