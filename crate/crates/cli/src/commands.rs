use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::{BigInt, BigUint};
use serde_json::json;

use lgf_core::cheb::walks_from_moments;
use lgf_core::greens::{builtin_for_order, default_fit_range, tail_exponent};
use lgf_core::oracle::{spectral_via_bz, spectral_via_bz_extrapolated, FinitePatch};
use lgf_core::walks::WalkCounter;
use lgf_core::{
    build_walk_table, builtin_singular_model, fit_subdominant, fixtures, subtract_singularities, ChebCoeffTable,
    Displacement, Family, GreenFunction, LgfError, MomentTable, TransformKind, TransformPair, Window,
};

use crate::grid::{clamp_to_cut, OmegaSpec};
use crate::{Command, EvalArgs, GridFormat, TableFormat, Target, EXIT_DEGENERATE_FIT, EXIT_MISMATCH, EXIT_USAGE};

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_MISMATCH,
            message: message.into(),
        }
    }
}

impl From<LgfError> for Failure {
    fn from(e: LgfError) -> Self {
        let code = match e {
            LgfError::DegenerateFit { .. } => EXIT_DEGENERATE_FIT,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(), Failure>;

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Walks {
            target,
            n,
            format,
            verify,
            out,
        } => walks(&target, n, format, verify, out.output.as_deref()),
        Command::Moments {
            target,
            n,
            format,
            verify,
            out,
        } => moments(&target, n, format, verify, out.output.as_deref()),
        Command::Eval(args) => eval(&args),
        Command::Fit {
            target,
            terms,
            fit_range,
            tail_range,
            format,
            out,
        } => fit(
            &target,
            terms,
            fit_range.as_deref(),
            tail_range.as_deref(),
            format,
            out.output.as_deref(),
        ),
        Command::Oracle {
            target,
            n,
            omega,
            eta,
            grid,
        } => oracle(&target, n, omega, eta, grid),
        Command::Verify { oracle_n } => verify_all(oracle_n),
    }
}

fn resolve_target(target: &Target) -> Result<(Family, Displacement), Failure> {
    let family: Family = target.lattice.parse()?;
    let r = match &target.displacement {
        None => Displacement::origin(family),
        Some(s) => {
            let coords: Vec<i64> = s
                .split(',')
                .map(|p| p.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|e| Failure::usage(format!("bad displacement '{s}': {e}")))?;
            Displacement::new(family, coords)?
        }
    };
    Ok((family, r))
}

fn parse_range(s: &str, what: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::usage(format!("{what} must be lo,hi with lo <= hi, got '{s}'"));
    let (lo, hi) = s.split_once(',').ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn emit(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::usage(format!("cannot write output: {e}")))
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain JSON");
    s.push('\n');
    s
}

fn walks(target: &Target, n: usize, format: TableFormat, verify: bool, out: Option<&Path>) -> Outcome {
    let (family, r) = resolve_target(target)?;
    let table = build_walk_table(family.spec(), &r, n)?;
    let text = match format {
        TableFormat::Text => table.counts.iter().map(|c| format!("{c}\n")).collect(),
        TableFormat::Csv => {
            let mut s = String::from("n,walks\n");
            for (i, c) in table.counts.iter().enumerate() {
                let _ = writeln!(s, "{i},{c}");
            }
            s
        }
        TableFormat::Json => pretty(&table.to_json()),
    };
    emit(out, &text)?;
    if verify {
        let mut problems = Vec::new();
        if r.is_origin() {
            for (i, &w) in fixtures::closed_walks(family).iter().enumerate().take(n + 1) {
                if table.counts[i] != BigUint::from(w) {
                    problems.push(format!("fixture n={i}: computed {} expected {w}", table.counts[i]));
                }
            }
        }
        let reach = n.min(12);
        let patch = FinitePatch::new(family, reach + 1);
        for (i, count) in table.counts.iter().enumerate().take(reach + 1) {
            let direct = lgf_core::walks_via_adjacency(&patch, &r, i)?;
            if *count != direct {
                problems.push(format!("oracle n={i}: computed {count} adjacency {direct}"));
            }
        }
        report(&format!("walks {family} {r}"), problems)?;
    }
    Ok(())
}

fn report(what: &str, problems: Vec<String>) -> Outcome {
    if problems.is_empty() {
        eprintln!("verify {what}: ok");
        Ok(())
    } else {
        for p in &problems {
            eprintln!("verify {what}: {p}");
        }
        Err(Failure::mismatch(format!("{} mismatches for {what}", problems.len())))
    }
}

fn moments(target: &Target, n: usize, format: TableFormat, verify: bool, out: Option<&Path>) -> Outcome {
    let (family, r) = resolve_target(target)?;
    let table = MomentTable::compute(family, &r, n)?;
    let text = match format {
        TableFormat::Text | TableFormat::Csv => {
            let sep = if format == TableFormat::Csv { "," } else { " " };
            let mut s = if format == TableFormat::Csv {
                String::from("n,scaled,g\n")
            } else {
                String::new()
            };
            for (i, (a, g)) in table.scaled.iter().zip(&table.floats).enumerate() {
                let _ = writeln!(s, "{i}{sep}{a}{sep}{g:.16e}");
            }
            s
        }
        TableFormat::Json => pretty(&table.to_json()),
    };
    emit(out, &text)?;
    if verify {
        let mut problems = Vec::new();
        if r.is_origin() {
            for (i, &v) in fixtures::scaled_moments(family).iter().enumerate().take(n + 1) {
                if table.scaled[i] != BigInt::from(v) {
                    problems.push(format!("fixture n={i}: computed {} expected {v}", table.scaled[i]));
                }
            }
        }
        let walks = build_walk_table(family.spec(), &r, n)?;
        if walks_from_moments(&table.scaled, family.coordination()) != walks.counts {
            problems.push("inverse relation does not recover the walk counts".into());
        }
        report(&format!("moments {family} {r}"), problems)?;
    }
    Ok(())
}

fn eval(args: &EvalArgs) -> Outcome {
    let (family, r) = resolve_target(&args.target)?;
    if args.terms < 1 {
        return Err(Failure::usage("--terms must be at least 1"));
    }
    if let Some(beta) = args.window {
        if beta.is_nan() || beta < 0.0 {
            return Err(Failure::usage("--window beta must be non-negative"));
        }
    }
    let spec = OmegaSpec::parse(&args.omega).map_err(Failure::usage)?;
    let fit_range = args
        .fit_range
        .as_deref()
        .map(|s| parse_range(s, "--fit-range"))
        .transpose()?;
    if let Some((_, hi)) = fit_range {
        if hi > args.terms {
            return Err(Failure::usage(format!(
                "--fit-range must lie within [0, {}]",
                args.terms
            )));
        }
    }

    let moments = MomentTable::compute(family, &r, args.terms)?;
    let window = Window::from_beta(args.window);
    let gf = if args.subtract {
        match builtin_for_order(family, &r, args.terms) {
            Ok(mut model) => {
                if let (Some(range), Some(fit)) = (fit_range, model.fitted.as_mut()) {
                    fit.range = range;
                }
                GreenFunction::subtracted(moments, &model, window)?
            }
            Err(LgfError::UnsupportedModel { .. }) => {
                eprintln!("warning: no built-in singular model for {family} {r}; using the raw series");
                GreenFunction::raw(moments, window)
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        GreenFunction::raw(moments, window)
    }
    .with_edge_eps(args.edge_eps);

    let mut points = spec.points();
    if let Some(step) = spec.step() {
        let moved = clamp_to_cut(&mut points, step);
        if moved > 0 {
            eprintln!(
                "warning: moved {moved} band-edge point(s) inward to |omega| = {}",
                1.0 - step
            );
        }
    }
    let result = gf.evaluate_grid(&points);
    if result.meta.failed_points > 0 {
        eprintln!("warning: {} point(s) could not be evaluated", result.meta.failed_points);
    }
    match args.format {
        GridFormat::Csv => {
            emit(args.out.output.as_deref(), &result.to_csv_digits(args.precision))?;
            let meta = pretty(&result.meta_json());
            match &args.out.output {
                Some(p) => {
                    let mut side = p.clone().into_os_string();
                    side.push(".meta.json");
                    emit(Some(&PathBuf::from(side)), &meta)?;
                }
                None => eprint!("{meta}"),
            }
        }
        GridFormat::Json => emit(args.out.output.as_deref(), &pretty(&result.to_json()))?,
    }
    Ok(())
}

fn fit(
    target: &Target,
    terms: usize,
    fit_range: Option<&str>,
    tail_range: Option<&str>,
    format: TableFormat,
    out: Option<&Path>,
) -> Outcome {
    let (family, r) = resolve_target(target)?;
    let range = match fit_range {
        Some(s) => parse_range(s, "--fit-range")?,
        None => default_fit_range(terms),
    };
    if range.1 > terms {
        return Err(Failure::usage(format!("--fit-range must lie within [0, {terms}]")));
    }
    let tails = match tail_range {
        Some(s) => parse_range(s, "--tail-range")?,
        None => ((terms / 10).max(2), terms),
    };
    let moments = MomentTable::compute(family, &r, terms)?;
    let dominant = builtin_singular_model(family, &r)?;
    let form = TransformPair::unit(TransformKind::Log);
    let g_a = subtract_singularities(&moments, &dominant).coeffs;
    let result = fit_subdominant(&g_a, form, range)?;
    let phi = form.coefficients(terms);
    let g_b: Vec<f64> = g_a.iter().zip(&phi).map(|(h, p)| h - result.coefficient * p).collect();

    let series = [("g", &moments.floats), ("g_A", &g_a), ("g_B", &g_b)];
    let exps: Vec<(f64, f64)> = series
        .iter()
        .map(|(_, s)| {
            (
                tail_exponent(s, tails, false).unwrap_or(f64::NAN),
                tail_exponent(s, tails, true).unwrap_or(f64::NAN),
            )
        })
        .collect();
    let text = match format {
        TableFormat::Json => {
            let tails_json: serde_json::Map<String, serde_json::Value> = series
                .iter()
                .zip(&exps)
                .map(|((name, s), (plain, logc))| {
                    (
                        name.to_string(),
                        json!({"exponent": plain, "log_corrected_exponent": logc, "last": s[terms].abs()}),
                    )
                })
                .collect();
            pretty(&json!({
                "lattice": family,
                "displacement": r.coords(),
                "terms": terms,
                "dominant_model": dominant.to_string(),
                "fit_form": form.kind.name(),
                "fit_range": [range.0, range.1],
                "coefficient": result.coefficient,
                "norm_before": result.norm_before,
                "norm_after": result.norm_after,
                "tail_range": [tails.0, tails.1],
                "tails": tails_json,
            }))
        }
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "lattice        {family}");
            let _ = writeln!(s, "displacement   {r}");
            let _ = writeln!(s, "terms          {terms}");
            let _ = writeln!(s, "dominant       {dominant}");
            let _ = writeln!(
                s,
                "fit form       {} on even n in [{}, {}]",
                form.kind.name(),
                range.0,
                range.1
            );
            let _ = writeln!(s, "coefficient    {:.15e}", result.coefficient);
            let _ = writeln!(s, "norm before    {:.6e}", result.norm_before);
            let _ = writeln!(s, "norm after     {:.6e}", result.norm_after);
            let _ = writeln!(s, "tail exponents on n in [{}, {}]:", tails.0, tails.1);
            for ((name, seq), (plain, logc)) in series.iter().zip(&exps) {
                let _ = writeln!(
                    s,
                    "  {name:<4} |x_N| = {:.3e}  slope {plain:+.3}  log-corrected {logc:+.3}",
                    seq[terms].abs()
                );
            }
            s
        }
    };
    emit(out, &text)
}

fn oracle(target: &Target, n: usize, omega: Option<f64>, eta: f64, grid: usize) -> Outcome {
    let (family, r) = resolve_target(target)?;
    match omega {
        Some(w) => {
            let single = spectral_via_bz(family, &r, w, grid, eta)?;
            let extrapolated = spectral_via_bz_extrapolated(family, &r, w, grid, eta)?;
            println!("omega {w} eta {eta} grid {grid}");
            println!("broadened     {single:.12e}");
            println!("extrapolated  {extrapolated:.12e}");
        }
        None => {
            let patch = FinitePatch::new(family, n + 1);
            let mut counter = WalkCounter::new();
            for i in 0..=n {
                let direct = lgf_core::walks_via_adjacency(&patch, &r, i)?;
                let formula = counter.to(family.spec(), &r, i)?;
                let flag = if direct == formula { "" } else { "  MISMATCH" };
                println!("{i} {direct} {formula}{flag}");
            }
        }
    }
    Ok(())
}

fn verify_all(oracle_n: usize) -> Outcome {
    let mut problems = Vec::new();
    let mut counter = WalkCounter::new();
    for family in Family::ALL {
        for (n, &w) in fixtures::closed_walks(family).iter().enumerate() {
            let got = counter.closed(family, n);
            if got != BigUint::from(w) {
                problems.push(format!("walks {family} n={n}: {got} != {w}"));
            }
        }
        let m = MomentTable::local(family, fixtures::FIXTURE_ORDER);
        for (n, &v) in fixtures::scaled_moments(family).iter().enumerate() {
            if m.scaled[n] != BigInt::from(v) {
                problems.push(format!("moments {family} n={n}: {} != {v}", m.scaled[n]));
            }
        }
    }
    let table = ChebCoeffTable::build(6);
    for (n, row) in fixtures::CHEB_COEFFS {
        for k in 0..=n {
            let expected = row.iter().find(|(kk, _)| *kk == k).map_or(0, |(_, a)| *a);
            if table.get(n, k) != BigInt::from(expected) {
                problems.push(format!("a_{n},{k}: {} != {expected}", table.get(n, k)));
            }
        }
    }
    let mut checked = 0usize;
    for family in Family::ALL {
        let patch = FinitePatch::new(family, oracle_n);
        for n in 0..=oracle_n {
            let direct = patch.walk_vector(n)?;
            for (site, w) in patch.sites.iter().zip(&direct) {
                let r = Displacement::new(family, site.clone())?;
                let formula = counter.to(family.spec(), &r, n)?;
                checked += 1;
                if formula != *w {
                    problems.push(format!("oracle {family} {r} n={n}: {formula} != {w}"));
                }
            }
        }
    }
    eprintln!(
        "checked {} walk and {} moment fixtures, {} a_nk entries, {checked} oracle counts",
        9 * 11,
        9 * 11,
        fixtures::CHEB_COEFFS.iter().map(|(n, _)| n + 1).sum::<usize>()
    );
    report("fixtures", problems)
}
