//! The `homvec` command line. [`run`] takes the argument list and output
//! streams explicitly so the whole surface can be driven in-process.
//!
//! Exit codes: 0 success or "equivalent", 1 "distinguished" (or a failing
//! suite), 2 usage or parse errors, 3 a size guard tripped.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::{format_rational, parse_rational, semiring_instance};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, parse_weighted_json, write_graph6, Graph};
use crate::guard;
use crate::homcount::{count_aut, count_hom, count_hom_weighted, count_inj, count_sur, hom_exists};
use crate::polys::{
    characteristic_polynomial, chromatic_polynomial, cluster_expansion_polynomial, independence_polynomial,
};
use crate::relax::{
    chromatic_number, clique_number, fractional_chromatic_number, fractional_clique_number, Equivalence,
};
use crate::suite::{run_suite, SUITES};
use crate::vectors::{first_distinguisher, left_vector, right_vector, ClassSpec, NamedClass, Side};

/// Environment variable holding the rational guard multiplier.
pub const GUARD_SCALE_VAR: &str = "HOMVEC_GUARD_SCALE";

#[derive(Parser, Debug)]
#[command(name = "homvec", version, about = "Exact homomorphism counts and isomorphism relaxations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count homomorphisms of a given kind.
    Count {
        #[arg(long, value_enum, default_value = "hom")]
        mode: Mode,
        /// Source graph (graph6 or @file).
        #[arg(long)]
        left: String,
        /// Target graph (graph6 or @file); not needed for `aut`.
        #[arg(long)]
        right: Option<String>,
        /// Weighted target as @file.json; replaces --right.
        #[arg(long, conflicts_with = "right")]
        weighted: Option<String>,
        /// Semiring for weighted counts: naturals, boolean or rationals.
        #[arg(long, default_value = "rationals")]
        semiring: String,
    },
    /// Left or right homomorphism vector as CSV.
    Vector {
        #[arg(long)]
        side: String,
        /// trees, cycles, paths, cliques, independents, tw<=w or all.
        #[arg(long)]
        class: String,
        #[arg(long)]
        bound: usize,
        graph: String,
    },
    /// Decide an equivalence relation between two graphs.
    Test {
        /// iso, fraciso, wl:k, cospectral, chromeq or homeq.
        #[arg(long)]
        relation: String,
        /// Print a CSV report row instead of the verdict.
        #[arg(long)]
        csv: bool,
        g: String,
        h: String,
    },
    /// Print a graph polynomial.
    Poly {
        #[arg(long, value_enum)]
        which: PolyKind,
        graph: String,
    },
    /// Print a graph parameter.
    Param {
        #[arg(long, value_enum)]
        which: ParamKind,
        graph: String,
    },
    /// Run a reproduction suite, or all of them.
    Suite {
        #[arg(long, required_unless_present = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Hom,
    Inj,
    Sur,
    Aut,
    Exists,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyKind {
    Chromatic,
    Characteristic,
    Cep,
    Independence,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParamKind {
    Chi,
    Omega,
    Chif,
    Omegaf,
    /// CSV row `g6,chi,omega,chi_f`.
    All,
}

/// Runs the command line with `args` (program name first) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    if let Some(scale) = std::env::var_os(GUARD_SCALE_VAR) {
        let parsed = scale.to_str().ok_or_else(|| Error::Validation("guard scale is not UTF-8".into()));
        if let Err(e) = parsed.and_then(parse_rational).and_then(guard::set_scale) {
            let _ = writeln!(err, "homvec: {GUARD_SCALE_VAR}: {e}");
            return 2;
        }
    }
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "homvec: {e}");
            match e {
                Error::Guard { .. } => 3,
                _ => 2,
            }
        }
    }
}

/// A graph6 literal, or `@path` to a file whose first non-empty line is one.
fn load_graph(arg: &str) -> Result<Graph> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = read(path)?;
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            parse_graph6(line)
        }
        None => parse_graph6(arg),
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Validation(format!("cannot read {path}: {e}")))
}

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Count { mode, left, right, weighted, semiring } => {
            let g = load_graph(&left)?;
            if let Some(w) = weighted {
                let path = w
                    .strip_prefix('@')
                    .ok_or_else(|| Error::Validation("weighted graphs are read from @file.json".into()))?;
                if !matches!(mode, Mode::Hom) {
                    return Err(Error::Validation("weighted targets only support --mode hom".into()));
                }
                let target = parse_weighted_json(&read(path)?)?;
                let value = count_hom_weighted(&g, &target, &semiring_instance(&semiring)?)?;
                writeln!(out, "{}", format_rational(&value)).map_err(io)?;
                return Ok(0);
            }
            let target = || -> Result<Graph> {
                let r = right.as_deref().ok_or_else(|| Error::Validation("--right is required".into()))?;
                load_graph(r)
            };
            let line = match mode {
                Mode::Hom => count_hom(&g, &target()?).to_string(),
                Mode::Inj => count_inj(&g, &target()?).to_string(),
                Mode::Sur => count_sur(&g, &target()?).to_string(),
                Mode::Aut => count_aut(&g).to_string(),
                Mode::Exists => hom_exists(&g, &target()?).to_string(),
            };
            writeln!(out, "{line}").map_err(io)?;
            Ok(0)
        }
        Command::Vector { side, class, bound, graph } => {
            let g = load_graph(&graph)?;
            let members = ClassSpec::named(class.parse()?, bound);
            let v = match side.parse::<Side>()? {
                Side::Left => left_vector(&g, &members)?,
                Side::Right => right_vector(&g, &members)?,
            };
            write!(out, "{}", v.to_csv()).map_err(io)?;
            Ok(0)
        }
        Command::Test { relation, csv, g, h } => {
            let relation: Equivalence = relation.parse()?;
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let equivalent = relation.decide(&g, &h)?;
            let verdict = if equivalent { "equivalent" } else { "distinguished" };
            if csv {
                writeln!(out, "g6_left,g6_right,relation,verdict").map_err(io)?;
                writeln!(out, "{},{},{relation},{verdict}", write_graph6(&g), write_graph6(&h)).map_err(io)?;
            } else {
                writeln!(out, "{verdict}").map_err(io)?;
                if !equivalent {
                    if let Some((side, members)) = witness_class(relation, &g, &h) {
                        // a bounded search; its guards only limit what we can show
                        if let Ok(Some(d)) = first_distinguisher(&g, &h, side, &members) {
                            let side = if side == Side::Left { "left" } else { "right" };
                            writeln!(
                                out,
                                "distinguisher {side} {} {} {}",
                                write_graph6(&d.member),
                                d.count_g,
                                d.count_h
                            )
                            .map_err(io)?;
                        }
                    }
                }
            }
            Ok(if equivalent { 0 } else { 1 })
        }
        Command::Poly { which, graph } => {
            let g = load_graph(&graph)?;
            let p = match which {
                PolyKind::Chromatic => chromatic_polynomial(&g)?,
                PolyKind::Characteristic => characteristic_polynomial(&g)?,
                PolyKind::Cep => cluster_expansion_polynomial(&g)?,
                PolyKind::Independence => independence_polynomial(&g)?,
            };
            writeln!(out, "{p}").map_err(io)?;
            Ok(0)
        }
        Command::Param { which, graph } => {
            let g = load_graph(&graph)?;
            let line = match which {
                ParamKind::Chi => chromatic_number(&g)?.to_string(),
                ParamKind::Omega => clique_number(&g)?.to_string(),
                ParamKind::Chif => format_rational(&fractional_chromatic_number(&g)?),
                ParamKind::Omegaf => format_rational(&fractional_clique_number(&g)?),
                ParamKind::All => format!(
                    "g6,chi,omega,chi_f\n{},{},{},{}",
                    write_graph6(&g),
                    chromatic_number(&g)?,
                    clique_number(&g)?,
                    format_rational(&fractional_chromatic_number(&g)?)
                ),
            };
            writeln!(out, "{line}").map_err(io)?;
            Ok(0)
        }
        Command::Suite { name, all } => {
            let names: Vec<&str> = if all { SUITES.to_vec() } else { vec![name.as_deref().unwrap_or_default()] };
            let mut ok = true;
            for name in names {
                let report = run_suite(name)?;
                ok &= report.passed();
                writeln!(out, "{report}").map_err(io)?;
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

/// The class whose homomorphism vector captures `relation`, cut at a bound
/// that fits both graphs.
fn witness_class(relation: Equivalence, g: &Graph, h: &Graph) -> Option<(Side, ClassSpec)> {
    let n = g.vertex_count().max(h.vertex_count());
    let (side, class, bound) = match relation {
        Equivalence::Isomorphic => (Side::Left, NamedClass::All, n),
        Equivalence::FractionallyIsomorphic | Equivalence::Wl(1) => (Side::Left, NamedClass::Trees, n),
        Equivalence::Wl(k) => (Side::Left, NamedClass::TreewidthLe(k), n),
        Equivalence::Cospectral => (Side::Left, NamedClass::Cycles, n.max(1)),
        Equivalence::ChromaticallyEquivalent => (Side::Right, NamedClass::Cliques, n + 1),
        Equivalence::HomEquivalent => return None,
    };
    Some((side, ClassSpec::named(class, bound)))
}
