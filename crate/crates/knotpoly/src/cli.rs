//! Command-line front end: one subcommand per pipeline stage.
//!
//! Exit codes: 0 on success, 1 on validation or identity failure, 2 on
//! usage errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::census;
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::invariants::{self, TwistProfile};
use crate::jones;
use crate::polynomial::{ExpOrder, LaurentPoly};
use crate::tutte;

#[derive(Parser, Debug)]
#[command(
    name = "knotpoly",
    version,
    about = "Jones polynomials, twist numbers and volume bounds from PD codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Tutte,
    Bracket,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Asc,
    Desc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    JsonLines,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    Alternating,
    Nonalternating,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Jones polynomial of a PD-coded knot, by either or both routes
    Jones {
        /// PD code, inline or a file path
        #[arg(long)]
        pd: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Both)]
        route: RouteArg,
        /// exponent order of the rendered polynomial
        #[arg(long, value_enum, default_value_t = OrderArg::Asc)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tutte polynomial of the positive checkerboard graph
    Tutte {
        #[arg(long)]
        pd: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Twist numbers T_i from the Jones coefficients
    Twist {
        #[arg(long, conflicts_with = "coeffs")]
        pd: Option<String>,
        /// comma-separated Jones coefficients, lowest exponent first
        #[arg(
            long,
            requires = "min_exp",
            value_delimiter = ',',
            allow_hyphen_values = true
        )]
        coeffs: Option<Vec<i64>>,
        /// exponent of the first coefficient
        #[arg(long, allow_hyphen_values = true)]
        min_exp: Option<i64>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Volume bounds from a PD code or a raw coefficient list
    Bounds {
        #[arg(long, conflicts_with = "coeffs")]
        pd: Option<String>,
        #[arg(
            long,
            requires = "min_exp",
            value_delimiter = ',',
            allow_hyphen_values = true
        )]
        coeffs: Option<Vec<i64>>,
        #[arg(long, allow_hyphen_values = true)]
        min_exp: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the coefficient and twist-number identities on one diagram
    Verify {
        #[arg(long)]
        pd: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan a census CSV: route agreement, bounds, scatter files
    CensusScan {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        /// which T_i scatter files to emit
        #[arg(long, value_delimiter = ',', default_values_t = vec![1usize, 2, 3, 4])]
        ti: Vec<usize>,
        #[arg(long, value_enum)]
        filter: Option<FilterArg>,
        /// allow T_i beyond the default 1..=4 range
        #[arg(long)]
        allow_any_ti: bool,
    },
}

/// Parse arguments and run; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message and distinguishes --help/--version
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn out_writer(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    })
}

/// `--pd` accepts a file path or an inline PD string.
fn load_pd(arg: &str) -> Result<PlanarDiagram> {
    let path = Path::new(arg);
    if path.is_file() {
        PlanarDiagram::parse(&std::fs::read_to_string(path)?)
    } else {
        PlanarDiagram::parse(arg)
    }
}

fn poly_from_coeffs(coeffs: &[i64], min_exp: i64) -> Result<LaurentPoly> {
    if coeffs.is_empty() {
        return Err(Error::BadArgument(
            "--coeffs needs at least one value".into(),
        ));
    }
    Ok(LaurentPoly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (min_exp + i as i64, c)),
    ))
}

fn jones_for(d: &PlanarDiagram, route: RouteArg) -> Result<LaurentPoly> {
    match route {
        RouteArg::Tutte => Ok(jones::jones_via_tutte(d)?.poly),
        RouteArg::Bracket => Ok(jones::jones_via_bracket(d)?.poly),
        RouteArg::Both => Ok(jones::jones_both_routes(d)?.poly),
    }
}

/// Jones polynomial for invariant extraction: bracket everywhere, with the
/// Tutte cross-check when the diagram is alternating.
fn jones_checked(d: &PlanarDiagram) -> Result<LaurentPoly> {
    if d.is_alternating() && d.crossing_count() > 0 {
        match jones::jones_both_routes(d) {
            Ok(j) => return Ok(j.poly),
            Err(Error::NotReduced) => {} // fall through to the bracket
            Err(e) => return Err(e),
        }
    }
    Ok(jones::jones_via_bracket(d)?.poly)
}

fn write_poly(
    out: &mut dyn Write,
    poly: &LaurentPoly,
    order: OrderArg,
    format: FormatArg,
) -> Result<()> {
    let exp_order = match order {
        OrderArg::Asc => ExpOrder::Ascending,
        OrderArg::Desc => ExpOrder::Descending,
    };
    match format {
        FormatArg::Text => {
            writeln!(out, "V(t) = {}", poly.render(exp_order))?;
            let coeffs = poly.coefficients()?;
            let list: Vec<String> = coeffs.iter().map(|(_, c)| c.to_string()).collect();
            writeln!(
                out,
                "coefficients (t^{} .. t^{}): {}",
                poly.min_degree().unwrap(),
                poly.max_degree().unwrap(),
                list.join(", ")
            )?;
        }
        FormatArg::Csv => {
            writeln!(out, "exponent,coefficient")?;
            for (e, c) in poly.coefficients()? {
                writeln!(out, "{e},{c}")?;
            }
        }
        FormatArg::JsonLines => {
            for (e, c) in poly.coefficients()? {
                writeln!(out, "{{\"exponent\":{e},\"coefficient\":{c}}}")?;
            }
        }
    }
    Ok(())
}

fn write_profile(out: &mut dyn Write, p: &TwistProfile, format: FormatArg) -> Result<()> {
    match format {
        FormatArg::Text => {
            writeln!(out, "span = {}", p.span)?;
            if p.twist.is_empty() {
                writeln!(out, "no T_i defined (span < 2)")?;
            }
            for (i, t) in p.twist.iter().enumerate() {
                writeln!(out, "T_{} = {t}", i + 1)?;
            }
        }
        FormatArg::Csv => {
            writeln!(out, "i,Ti")?;
            for (i, t) in p.twist.iter().enumerate() {
                writeln!(out, "{},{t}", i + 1)?;
            }
        }
        FormatArg::JsonLines => {
            for (i, t) in p.twist.iter().enumerate() {
                writeln!(out, "{{\"i\":{},\"Ti\":{t}}}", i + 1)?;
            }
        }
    }
    Ok(())
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Jones {
            pd,
            route,
            order,
            format,
            out,
        } => {
            let d = load_pd(&pd)?;
            let poly = jones_for(&d, route)?;
            let mut w = out_writer(&out)?;
            write_poly(&mut *w, &poly, order, format)?;
            Ok(0)
        }
        Command::Tutte { pd, out } => {
            let d = load_pd(&pd)?;
            let g = d.positive_checkerboard()?;
            let t = tutte::tutte_deletion_contraction(&g);
            let mut w = out_writer(&out)?;
            writeln!(w, "T(x,y) = {t}")?;
            Ok(0)
        }
        Command::Twist {
            pd,
            coeffs,
            min_exp,
            format,
            out,
        } => {
            let poly = resolve_poly(pd.as_deref(), coeffs.as_deref(), min_exp)?;
            let profile = invariants::twist_profile(&poly)?;
            let mut w = out_writer(&out)?;
            write_profile(&mut *w, &profile, format)?;
            Ok(0)
        }
        Command::Bounds {
            pd,
            coeffs,
            min_exp,
            out,
        } => {
            let (poly, crossings) = match pd.as_deref() {
                Some(arg) => {
                    let d = load_pd(arg)?;
                    (jones_checked(&d)?, Some(d.crossing_count()))
                }
                None => {
                    let poly = resolve_poly(None, coeffs.as_deref(), min_exp)?;
                    // span equals the crossing number of a reduced
                    // alternating diagram, which is what the Adams bound needs
                    let span = poly.span().ok_or(Error::ZeroPolynomial)?;
                    (poly, usize::try_from(span).ok())
                }
            };
            let profile = invariants::twist_profile(&poly)?;
            let bounds = invariants::volume_bounds(&profile, crossings);
            let mut w = out_writer(&out)?;
            writeln!(w, "|a_(n+1)| = {}", profile.abs_from_low(1))?;
            writeln!(w, "|a_(m-1)| = {}", profile.abs_from_high(1))?;
            writeln!(w, "T(K) = {}", profile.t1())?;
            writeln!(w, "volume-ish lower  = {:.10}", bounds.lower)?;
            writeln!(w, "volume-ish upper  = {:.10}", bounds.upper)?;
            writeln!(w, "lackenby lower    = {:.10}", bounds.lackenby_lower)?;
            writeln!(w, "lackenby upper    = {:.10}", bounds.lackenby_upper)?;
            match bounds.adams_upper {
                Some(a) => writeln!(w, "adams upper       = {a:.10}")?,
                None => writeln!(w, "adams upper       = n/a (needs crossing number > 4)")?,
            }
            Ok(0)
        }
        Command::Verify { pd, out } => {
            let d = load_pd(&pd)?;
            let report = invariants::verify_diagram(&d)?;
            let mut w = out_writer(&out)?;
            let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
            writeln!(w, "T(K) = {} (graph side)", report.twist_graph_side)?;
            writeln!(
                w,
                "twist number identity      {} (Jones side {})",
                mark(report.twist_numbers_agree),
                report.twist_jones_side
            )?;
            writeln!(
                w,
                "second-order identity      {}",
                mark(report.second_order_identity)
            )?;
            writeln!(
                w,
                "span = crossing number     {}",
                mark(report.span_equals_crossings)
            )?;
            writeln!(
                w,
                "alternating signs          {}",
                mark(report.signs_alternate)
            )?;
            writeln!(
                w,
                "|a_n| = |a_m| = 1          {}",
                mark(report.extreme_coeffs_unit)
            )?;
            writeln!(
                w,
                "top-coefficient prediction {}",
                mark(report.prediction_matches_both_graphs)
            )?;
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::CensusScan {
            input,
            out_dir,
            ti,
            filter,
            allow_any_ti,
        } => {
            let mut records = census::load_census(&input)?;
            if let Some(f) = filter {
                records.retain(|r| match f {
                    FilterArg::Alternating => r.alternating,
                    FilterArg::Nonalternating => !r.alternating,
                });
            }
            let rows = census::scan(&records);
            let written = census::emit_scatter_files(&rows, &ti, &out_dir, allow_any_ti)?;

            let mut failures = 0;
            for row in &rows {
                let status = match (&row.error, row.within_bounds) {
                    (Some(e), _) => format!("error: {e}"),
                    (None, Some(true)) => "bounds ok".into(),
                    (None, Some(false)) => "BOUND VIOLATION".into(),
                    (None, None) => "bounds n/a".into(),
                };
                if row.routes_agree == Some(false) || row.within_bounds == Some(false) {
                    failures += 1;
                }
                let twists: Vec<String> = row.twist.iter().map(u64::to_string).collect();
                println!(
                    "{:<12} c={:<3} T=[{}] vol={} {}",
                    row.name,
                    row.crossings,
                    twists.join(","),
                    row.volume,
                    status
                );
            }
            println!(
                "{} records scanned, {} scatter files written to {}",
                rows.len(),
                written.len(),
                out_dir.display()
            );
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}

fn resolve_poly(
    pd: Option<&str>,
    coeffs: Option<&[i64]>,
    min_exp: Option<i64>,
) -> Result<LaurentPoly> {
    match (pd, coeffs) {
        (Some(arg), None) => {
            let d = load_pd(arg)?;
            jones_checked(&d)
        }
        (None, Some(c)) => poly_from_coeffs(c, min_exp.expect("clap enforces requires")),
        _ => Err(Error::BadArgument(
            "provide exactly one of --pd or --coeffs".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_input_builds_the_right_poly() {
        let p = poly_from_coeffs(&[1, -4, 11], -12).unwrap();
        assert_eq!(p.coeff(-12), 1.into());
        assert_eq!(p.coeff(-11), (-4).into());
        assert_eq!(p.coeff(-10), 11.into());
        assert!(poly_from_coeffs(&[], 0).is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["knotpoly", "no-such-subcommand"]), 2);
        assert_eq!(run(["knotpoly"]), 2);
    }

    #[test]
    fn jones_subcommand_runs() {
        assert_eq!(
            run([
                "knotpoly",
                "jones",
                "--pd",
                "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"
            ]),
            0
        );
    }

    #[test]
    fn jones_subcommand_fails_on_bad_pd() {
        assert_eq!(run(["knotpoly", "jones", "--pd", "X(1,2,3)"]), 1);
    }

    #[test]
    fn route_flag_rejects_tutte_on_non_alternating() {
        let pd = "X(4,1,5,2) X(3,1,4,6) X(5,3,6,2)";
        assert_eq!(
            run(["knotpoly", "jones", "--pd", pd, "--route", "tutte"]),
            1
        );
        assert_eq!(
            run(["knotpoly", "jones", "--pd", pd, "--route", "bracket"]),
            0
        );
    }

    #[test]
    fn verify_subcommand_passes_on_figure_eight() {
        let pd = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
        assert_eq!(run(["knotpoly", "verify", "--pd", pd]), 0);
    }

    #[test]
    fn bounds_from_coefficients() {
        assert_eq!(
            run([
                "knotpoly",
                "bounds",
                "--coeffs",
                "1,-4,11,-23,35,-47,53,-52,47,-34,22,-11,4,-1",
                "--min-exp",
                "-12",
            ]),
            0
        );
    }
}
