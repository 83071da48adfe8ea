//! Subcommand implementations.

use std::time::Instant;

use circdet_core::compute::{
    closed_form_for, det_closed_report, det_lemma_or_fallback, det_oracle_report, det_spectral_for,
};
use circdet_core::{crosscheck_value, DetReport, DetValue, Error as CoreError, Rat, VerifyConfig};

use crate::output::{self, BenchRow, VerifyHeader};
use crate::{BenchArgs, CliError, DetArgs, MethodArg, SeqArgs, VerifyArgs};

type MethodRun = (String, Box<dyn Fn() -> Result<DetReport, CoreError>>);

/// Inner-determinant count of the reduction formula: (n-1)^(m-1), saturating.
fn lemma_cost(m: usize, n: usize) -> u64 {
    let base = (n - 1) as u64;
    let mut cost = 1u64;
    for _ in 1..m {
        cost = cost.saturating_mul(base);
    }
    cost
}

const LEMMA_WARN_COST: u64 = 1_000;
const LEMMA_SKIP_COST: u64 = 1_000_000;

fn warn_slow_lemma(m: usize, n: usize) {
    let cost = lemma_cost(m, n);
    if cost > LEMMA_WARN_COST {
        eprintln!(
            "circdet: note: the reduction formula at n={n}, m={m} evaluates {cost} inner \
             determinants; this is a correctness artifact, not a fast path"
        );
    }
}

fn validate_tolerances(precision: u32, rel_tol: f64) -> Result<(), CliError> {
    if precision < 53 {
        return Err(CliError::Core(CoreError::PrecisionTooLow(precision)));
    }
    if !(rel_tol.is_finite() && rel_tol > 0.0) {
        return Err(CliError::Usage(
            "--rel-tol must be positive and finite".into(),
        ));
    }
    Ok(())
}

/// Pairwise agreement of every exact value plus spectral crosschecks.
fn crosscheck_reports(reports: &[DetReport], rel_tol: f64) -> Result<(), CliError> {
    let exacts: Vec<(&DetReport, &Rat)> = reports
        .iter()
        .filter_map(|r| r.exact_value().map(|v| (r, v)))
        .collect();
    if let Some((first_report, first)) = exacts.first() {
        for (r, v) in &exacts[1..] {
            if v != first {
                return Err(CliError::Mismatch(format!(
                    "{} = {} disagrees with {} = {}",
                    r.method, v, first_report.method, first
                )));
            }
        }
        for r in reports {
            if let DetValue::Approx(c) = &r.value {
                let cc = crosscheck_value(first, c, rel_tol);
                if !cc.pass {
                    return Err(CliError::Mismatch(format!(
                        "spectral value {} fails the crosscheck against {} at rel tol {rel_tol}",
                        c.re.decimal(20),
                        first
                    )));
                }
            }
        }
    }
    Ok(())
}

pub fn cmd_det(args: &DetArgs) -> Result<(), CliError> {
    let (spec, family) = args.spec.resolve()?;
    let n = args.n;
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    validate_tolerances(args.precision, args.rel_tol)?;
    let m = spec.order();
    let closed_kind = closed_form_for(&spec, family.as_ref());

    let method = args.method.unwrap_or({
        if n <= 16 {
            MethodArg::All
        } else if closed_kind.is_some() {
            MethodArg::Closed
        } else {
            MethodArg::Bareiss
        }
    });

    let mut reports: Vec<DetReport> = Vec::new();
    match method {
        MethodArg::Closed => {
            let kind = closed_kind.ok_or_else(|| {
                CliError::Usage(
                    "no closed form applies to this spec; try --method lemma or bareiss".into(),
                )
            })?;
            reports.push(det_closed_report(&spec, n, kind).map_err(CliError::Core)?);
        }
        MethodArg::Lemma => {
            warn_slow_lemma(m, n);
            reports.push(det_lemma_or_fallback(&spec, n).map_err(CliError::Core)?);
        }
        MethodArg::Bareiss => {
            reports.push(det_oracle_report(&spec, n).map_err(CliError::Core)?);
        }
        MethodArg::Spectral => {
            reports.push(det_spectral_for(&spec, n, args.precision).map_err(CliError::Core)?);
        }
        MethodArg::All => {
            if let Some(kind) = closed_kind {
                match det_closed_report(&spec, n, kind) {
                    Ok(r) => reports.push(r),
                    // The closed form's n hypothesis fails: skip it quietly.
                    Err(CoreError::OrderTooSmall { .. }) => {}
                    Err(e) => return Err(CliError::Core(e)),
                }
            }
            if n > m {
                if lemma_cost(m, n) <= LEMMA_SKIP_COST {
                    warn_slow_lemma(m, n);
                    reports.push(det_lemma_or_fallback(&spec, n).map_err(CliError::Core)?);
                } else {
                    eprintln!(
                        "circdet: note: skipping the reduction formula at n={n} \
                         ({} inner determinants)",
                        lemma_cost(m, n)
                    );
                }
            }
            reports.push(det_oracle_report(&spec, n).map_err(CliError::Core)?);
            reports.push(det_spectral_for(&spec, n, args.precision).map_err(CliError::Core)?);
        }
    }

    if reports.len() > 1 {
        crosscheck_reports(&reports, args.rel_tol)?;
    }
    println!("{}", output::render_det(&reports, n, m, args.format));
    Ok(())
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    if args.n_max > 16 {
        return Err(CliError::Usage("--n-max is capped at 16".into()));
    }
    if !(1..=5).contains(&args.m_max) {
        return Err(CliError::Usage("--m-max must be between 1 and 5".into()));
    }
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    if args.n_max < args.m_max + 1 {
        return Err(CliError::Usage("--n-max must exceed --m-max".into()));
    }
    validate_tolerances(args.precision, args.rel_tol)?;

    // Flag overrides environment; environment overrides the default 42.
    let seed = args.seed.unwrap_or_else(|| {
        std::env::var("CIRCDET_SEED")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(42)
    });

    let cfg = VerifyConfig {
        seed,
        trials: args.trials,
        n_max: args.n_max,
        m_max: args.m_max,
        families_only: args.families_only,
        eq2_variant: args.eq2_variant,
        precision: args.precision,
        rel_tol: args.rel_tol,
        spectral_n_max: 24,
    };
    let report = circdet_core::run_verify(&cfg);

    let header = VerifyHeader {
        seed,
        trials: args.trials,
        n_max: args.n_max,
        m_max: args.m_max,
        families_only: args.families_only,
        eq2_variant: args.eq2_variant.to_string(),
        precision: args.precision,
        rel_tol: args.rel_tol,
    };
    println!("{}", output::render_verify(&report, &header, args.format));

    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!(
            "{} of {} checks failed",
            report.mismatch_count(),
            report.total_checks()
        )))
    }
}

pub fn cmd_bench(args: &BenchArgs) -> Result<(), CliError> {
    let (spec, family) = args.spec.resolve()?;
    let mut ns: Vec<usize> = args.n_list.clone().unwrap_or_default();
    if let Some(n) = args.n {
        ns.push(n);
    }
    if ns.is_empty() || ns.contains(&0) {
        return Err(CliError::Usage(
            "--n-list needs at least one positive order".into(),
        ));
    }
    if args.reps == 0 {
        return Err(CliError::Usage("--reps must be at least 1".into()));
    }
    validate_tolerances(args.precision, args.rel_tol)?;
    let m = spec.order();
    let closed_kind = closed_form_for(&spec, family.as_ref());

    let mut rows: Vec<BenchRow> = Vec::new();
    for &n in &ns {
        // Resolve the methods that are valid for this (spec, n).
        let mut runs: Vec<MethodRun> = Vec::new();
        let want = |m: MethodArg| args.method == m || args.method == MethodArg::All;
        let explicit = args.method != MethodArg::All;

        if want(MethodArg::Closed) {
            match closed_kind {
                Some(kind) => {
                    let spec = spec.clone();
                    // Probe admissibility once; in `all` mode an inadmissible
                    // n just drops the method.
                    match det_closed_report(&spec, n, kind) {
                        Ok(_) => runs.push((
                            format!("closed:{}", kind.name()),
                            Box::new(move || det_closed_report(&spec, n, kind)),
                        )),
                        Err(e) => {
                            if explicit {
                                return Err(CliError::Core(e));
                            }
                        }
                    }
                }
                None if explicit => {
                    return Err(CliError::Usage(
                        "no closed form applies to this spec".into(),
                    ))
                }
                None => {}
            }
        }
        if want(MethodArg::Lemma) && n > m {
            let cost = lemma_cost(m, n);
            if cost > args.budget {
                if explicit {
                    return Err(CliError::BudgetExceeded {
                        n,
                        m,
                        cost,
                        budget: args.budget,
                    });
                }
                eprintln!(
                    "circdet: note: skipping the reduction formula at n={n} \
                     ({cost} inner determinants over budget {})",
                    args.budget
                );
            } else {
                warn_slow_lemma(m, n);
                let spec = spec.clone();
                match circdet_core::det_lemma(&spec, n) {
                    Ok(_) => runs.push((
                        "lemma".into(),
                        Box::new(move || circdet_core::det_lemma(&spec, n)),
                    )),
                    Err(e) => {
                        if explicit {
                            return Err(CliError::Core(e));
                        }
                        // Degenerate alpha in `all` mode: the formula simply
                        // is not valid for this instance.
                    }
                }
            }
        } else if want(MethodArg::Lemma) && explicit && n <= m {
            return Err(CliError::Core(CoreError::OrderTooSmall { n, m }));
        }
        if want(MethodArg::Bareiss) {
            let spec = spec.clone();
            runs.push((
                "bareiss".into(),
                Box::new(move || det_oracle_report(&spec, n)),
            ));
        }
        if want(MethodArg::Spectral) {
            let spec = spec.clone();
            let precision = args.precision;
            runs.push((
                "spectral".into(),
                Box::new(move || det_spectral_for(&spec, n, precision)),
            ));
        }
        if runs.is_empty() {
            return Err(CliError::Usage(format!(
                "no valid methods to time at n={n}"
            )));
        }

        // One probe run per method: collect values and assert agreement
        // before any timing is reported.
        let probes: Vec<DetReport> = runs
            .iter()
            .map(|(_, f)| f().map_err(CliError::Core))
            .collect::<Result<_, _>>()?;
        crosscheck_reports(&probes, args.rel_tol)?;
        let digits = probes
            .iter()
            .find_map(|r| r.exact_value())
            .map(|v| v.numer().to_string().trim_start_matches('-').len())
            .unwrap_or(0);

        for (name, f) in &runs {
            let mut times: Vec<u128> = Vec::with_capacity(args.reps);
            for _ in 0..args.reps {
                let start = Instant::now();
                let _ = f().map_err(CliError::Core)?;
                times.push(start.elapsed().as_nanos());
            }
            times.sort_unstable();
            let median = times[times.len() / 2];
            rows.push(BenchRow {
                method: name.clone(),
                n,
                median_ns: median,
                det_digits: digits,
            });
        }
    }

    println!("{}", output::render_bench(&rows, args.format));
    Ok(())
}

pub fn cmd_seq(args: &SeqArgs) -> Result<(), CliError> {
    let (spec, _family) = args.spec.resolve()?;
    if args.count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let window = spec.generate(args.count);
    println!("{}", output::render_seq(&window, args.format));
    Ok(())
}
