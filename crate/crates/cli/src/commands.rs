use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind as ClapKind;
use clap::{Parser, Subcommand};
use expoweyl_core::lattice::{LatticeVector, UnimodularMatrix};
use expoweyl_core::repthy::{
    bgg_character, classify_support, duality_on_characters, verma_character_rank1, verma_weight_dim_with, Character,
    Counting, NegativePart, SupportType,
};
use expoweyl_core::ringmaps::{apply_automorphism, galois_apply, iso_decide, reynolds_project, GaloisAction, RingAutomorphism};
use expoweyl_core::weylalg::{center_up_to_degree, ideal_saturate, trace_obstruction};

use crate::config::{parse_int_list, parse_q_mode, parse_vector_list, Session, SessionConfig};
use crate::error::{CliError, CliResult};
use crate::parse::{parse_element, parse_poly, parse_scalar, print_canonical};
use crate::report::*;

#[derive(Debug, Parser)]
#[command(name = "expoweyl", version, about = "Exact computations in expolynomial Weyl-type algebras")]
struct Cli {
    /// Session configuration file.
    #[arg(long, global = true, env = "EXPOWEYL_CONFIG")]
    config: Option<PathBuf>,
    /// Overrides the configured q mode: classical, generic or root:N.
    #[arg(long, global = true, value_name = "MODE")]
    q_mode: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal form of an expression.
    NormalForm {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Commutator [a, b].
    Bracket {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Decides whether the rings with parameters p1 and p2 are isomorphic.
    Iso {
        #[arg(long, allow_hyphen_values = true)]
        p1: String,
        #[arg(long, allow_hyphen_values = true)]
        p2: String,
    },
    /// Applies a torus-times-matrix automorphism to a D-free element.
    AutApply {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Scalars separated by ';', one per exponent coordinate (y, e.., x..).
        #[arg(long, allow_hyphen_values = true)]
        torus: Option<String>,
        /// Integer rows separated by ';', entries by ','.
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
    },
    /// Galois image and Reynolds projection over a quadratic layer.
    GaloisFix {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        layer: Option<String>,
    },
    /// Center elements up to a total size bound.
    Center {
        #[arg(long, default_value_t = 3)]
        degree: u64,
    },
    /// Saturates the two-sided ideal of a generator up to a size bound.
    Ideal {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 4)]
        degree: u64,
    },
    /// Weight-space dimensions of the Verma module.
    VermaDims {
        /// Rank-one listing of weights 0, -1, ..., -depth.
        #[arg(long, default_value_t = 10)]
        depth: u64,
        /// Explicit weights separated by ';'.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        /// Generators of the negative part separated by ';'.
        #[arg(long, allow_hyphen_values = true)]
        negative: Option<String>,
        /// Count ordered tuples instead of multisets.
        #[arg(long)]
        ordered: bool,
    },
    /// Rank-one character of L(chi_n) from the BGG resolution.
    BggChar {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        depth: Option<u64>,
    },
    /// Dense or discrete support for the character value chi(x).
    ClassifySupport {
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
    },
    /// Trace certificate that [D, X] = 1 has no n-dimensional solution.
    TraceObstruction {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
}

fn session(cli: &Cli) -> CliResult<Session> {
    let mut cfg = match &cli.config {
        Some(path) => SessionConfig::load(path)?,
        None => SessionConfig::default(),
    };
    if let Some(m) = &cli.q_mode {
        cfg.q_mode = parse_q_mode(m).map_err(CliError::usage)?;
    }
    cfg.build()
}

fn usage_list(flag: &str, s: &str) -> CliResult<Vec<i64>> {
    parse_int_list(s).map_err(|m| CliError::usage(format!("--{flag}: {m}")))
}

fn rows(flag: &str, s: &str) -> CliResult<Vec<Vec<i64>>> {
    parse_vector_list(s).map_err(|m| CliError::usage(format!("--{flag}: {m}")))
}

fn character_entries(ch: &Character<i64>) -> Vec<WeightDim> {
    ch.dims().iter().rev().map(|(&weight, &dim)| WeightDim { weight, dim }).collect()
}

/// Runs one invocation and returns the report text for standard output.
pub fn run<I, T>(args: I) -> CliResult<String>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ClapKind::DisplayHelp | ClapKind::DisplayVersion) => return Ok(e.to_string()),
        Err(e) => {
            let text = e.render().to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            return Err(CliError::usage(first.strip_prefix("error: ").unwrap_or(first)));
        }
    };
    let s = session(&cli)?;
    let mode = s.algebra.mode().to_string();
    let report = match &cli.command {
        Command::NormalForm { expr } => {
            let v = parse_element(expr, &s.algebra)?;
            to_json(&NormalFormReport { command: "normal-form", q_mode: mode, input: expr.clone(), result: print_canonical(&v) })
        }
        Command::Bracket { a, b } => {
            let (x, y) = (parse_element(a, &s.algebra)?, parse_element(b, &s.algebra)?);
            let r = x.commutator(&y)?;
            to_json(&BracketReport { command: "bracket", q_mode: mode, left: a.clone(), right: b.clone(), result: print_canonical(&r) })
        }
        Command::Iso { p1, p2 } => {
            let (u, v) = (LatticeVector(usage_list("p1", p1)?), LatticeVector(usage_list("p2", p2)?));
            let d = iso_decide(&u, &v)?;
            to_json(&IsoReport {
                command: "iso",
                p1: u.0.clone(),
                p2: v.0.clone(),
                content_p1: expoweyl_core::lattice::content(&u),
                content_p2: expoweyl_core::lattice::content(&v),
                answer: if d.isomorphic { "YES" } else { "NO" },
                isomorphic: d.isomorphic,
                witness: d.witness.map(|m| m.rows().to_vec()),
            })
        }
        Command::AutApply { expr, torus, matrix } => {
            let ring = s.algebra.ring();
            let n = ring.exponent_dim();
            let f = parse_poly(expr, &s.algebra)?;
            let lambda = match torus {
                Some(t) => t.split(';').map(|c| parse_scalar(c, &s.field)).collect::<CliResult<Vec<_>>>()?,
                None => vec![s.field.one(); n],
            };
            let m = match matrix {
                Some(m) => UnimodularMatrix::new(rows("matrix", m)?)?,
                None => UnimodularMatrix::identity(n),
            };
            let g = RingAutomorphism::new(lambda, m)?;
            let r = apply_automorphism(&g, &f)?;
            to_json(&AutReport {
                command: "aut-apply",
                coordinates: coordinate_names(ring.e_len(), ring.rank()),
                torus: g.torus().iter().map(|c| c.to_string()).collect(),
                matrix: g.matrix().rows().to_vec(),
                input: expr.clone(),
                result: print_canonical(&r),
            })
        }
        Command::GaloisFix { expr, layer } => {
            let layer = layer
                .clone()
                .or_else(|| s.config.galois_layer.clone())
                .ok_or_else(|| CliError::config("no Galois layer: set [galois] layer or pass --layer"))?;
            let sigma = GaloisAction::new(&s.field, &layer)?;
            let a = parse_element(expr, &s.algebra)?;
            let image = galois_apply(&sigma, &a)?;
            let proj = reynolds_project(&sigma, &a)?;
            to_json(&GaloisReport {
                command: "galois-fix",
                layer,
                input: expr.clone(),
                fixed: image == a,
                image: print_canonical(&image),
                projection: print_canonical(&proj),
            })
        }
        Command::Center { degree } => {
            let basis = center_up_to_degree(&s.algebra, *degree)?;
            to_json(&CenterReport {
                command: "center",
                q_mode: mode,
                degree: *degree,
                dimension: basis.len(),
                basis: basis.iter().map(print_canonical).collect(),
            })
        }
        Command::Ideal { expr, degree } => {
            let g = parse_element(expr, &s.algebra)?;
            let r = ideal_saturate(&g, *degree)?;
            to_json(&IdealReport {
                command: "ideal",
                q_mode: mode,
                generator: print_canonical(&g),
                degree: *degree,
                contains_one: r.contains_one,
                profile: r.profile,
            })
        }
        Command::VermaDims { depth, weights, negative, ordered } => {
            let neg = match negative {
                Some(g) => NegativePart::new(rows("negative", g)?.into_iter().map(LatticeVector).collect())?,
                None => s.negative.clone(),
            };
            let width = neg.gens()[0].len();
            let weights: Vec<Vec<i64>> = match weights {
                Some(w) => rows("weights", w)?,
                None if width == 1 => (0..=*depth as i64).map(|k| vec![-k]).collect(),
                None => return Err(CliError::usage("--weights is required when the lattice rank exceeds one")),
            };
            let counting = if *ordered { Counting::Ordered } else { Counting::Multiset };
            let dims = weights
                .into_iter()
                .map(|w| {
                    let dim = verma_weight_dim_with(&neg, &LatticeVector(w.clone()), counting)?;
                    Ok(VermaDim { weight: w, dim })
                })
                .collect::<CliResult<Vec<_>>>()?;
            to_json(&VermaReport {
                command: "verma-dims",
                negative: neg.gens().iter().map(|g| g.0.clone()).collect(),
                counting: if *ordered { "ordered" } else { "multiset" },
                dims,
            })
        }
        Command::BggChar { n, depth } => {
            let depth = depth.unwrap_or(2 * n + 2);
            let h = *n as i64;
            let lowest = h - depth as i64;
            let ch = bgg_character(*n, depth);
            to_json(&BggReport {
                command: "bgg-char",
                n: *n,
                depth,
                top: character_entries(&verma_character_rank1(h, lowest)),
                sub: character_entries(&verma_character_rank1(-h - 2, lowest)),
                total: ch.total(),
                dual: character_entries(&duality_on_characters(&ch)),
                character: character_entries(&ch),
            })
        }
        Command::ClassifySupport { chi } => {
            let c = parse_scalar(chi, &s.field)?;
            let support = match classify_support(&c, &s.algebra.ring().config().basis) {
                SupportType::Dense => "dense",
                SupportType::Discrete => "discrete",
            };
            to_json(&SupportReport {
                command: "classify-support",
                chi: print_canonical(&c),
                embeddings: s.algebra.ring().config().basis.embeddings().iter().map(|e| e.to_string()).collect(),
                support,
            })
        }
        Command::TraceObstruction { n } => {
            let r = trace_obstruction(&s.field, *n)?;
            to_json(&TraceReport {
                command: "trace-obstruction",
                dimension: r.dimension,
                obstructed: r.lhs != r.rhs,
                lhs: r.lhs.to_string(),
                rhs: r.rhs.to_string(),
            })
        }
    };
    Ok(report)
}
