//! Command-line front end for the branching catalog: named-case dispatch,
//! Levi branching, restriction-matrix inspection, tensor and diagonal
//! products, and dimension queries, with LiE-style text or JSON output.
//!
//! Exit codes: 0 success, 2 usage error, 3 internal invariant violation.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use liealg::reps::{self, Decomposition};
use liealg::rules::{self, CaseId, ColumnOrigin, LeviMode, RestrictionSpec};
use liealg::types::format_rational;
use liealg::weyl::SimpleSubset;
use liealg::{LieError, LieType, SimpleLieType, Weight};

#[derive(Parser)]
#[command(
    name = "liebranch",
    about = "Branching of irreducible representations of compact simple Lie algebras",
    version
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Lie)]
    format: Format,

    /// Also write the JSON form of the result to this path
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Lie,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Branch a highest weight through a named catalog case
    Case {
        /// Case name, e.g. A_D, B_DB, E8_A4A4
        name: String,
        #[command(flatten)]
        params: CaseParams,
        /// Highest weight, comma-separated integers
        #[arg(long)]
        weight: String,
    },
    /// Branch to the Levi subalgebra of the parabolic with crossed nodes
    Levi {
        /// Simple Lie type of g, e.g. F4
        #[arg(long = "type")]
        ty: String,
        /// Crossed node (1-based); repeat for several nodes
        #[arg(long = "cross")]
        cross: Vec<usize>,
        /// Highest weight, comma-separated integers
        #[arg(long)]
        weight: String,
        /// Report components as integer vectors in g's weight coordinates
        #[arg(long)]
        be: bool,
    },
    /// Print the restriction matrix of a catalog case or a Levi subalgebra
    Resmat {
        /// Case name (catalog form)
        #[arg(long)]
        case: Option<String>,
        #[command(flatten)]
        params: CaseParams,
        /// Simple Lie type of g (Levi form)
        #[arg(long = "type")]
        ty: Option<String>,
        /// Crossed node (1-based); repeat for several nodes
        #[arg(long = "cross")]
        cross: Vec<usize>,
    },
    /// Decompose a tensor product of irreducible representations
    Tensor {
        /// Lie type, e.g. A1 or A2A2
        #[arg(long = "type")]
        ty: String,
        /// Highest weights separated by ';', e.g. "1,0;0,1"
        #[arg(long)]
        weights: String,
    },
    /// Branch an exterior tensor product to the diagonal subalgebra
    Diag {
        /// Simple Lie type, e.g. A2
        #[arg(long = "type")]
        ty: String,
        /// Highest weights separated by ';'
        #[arg(long)]
        weights: String,
    },
    /// Exact dimension of an irreducible representation
    Dim {
        /// Lie type
        #[arg(long = "type")]
        ty: String,
        /// Highest weight, comma-separated integers
        #[arg(long)]
        weight: String,
    },
}

#[derive(Args)]
struct CaseParams {
    /// Parameter m for the A_D, A_B, A_C families
    #[arg(long)]
    m: Option<usize>,
    /// Parameter p for the D_BB, B_DB, D_DD, C_CC families
    #[arg(long)]
    p: Option<usize>,
    /// Parameter q for the D_BB, B_DB, D_DD, C_CC families
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Serialize)]
struct JsonComponent {
    mult: i64,
    weight: Vec<i64>,
    central: Vec<String>,
}

#[derive(Serialize)]
struct JsonDecomposition {
    g: String,
    weight: Vec<i64>,
    k: String,
    components: Vec<JsonComponent>,
}

#[derive(Serialize)]
struct JsonMatrix {
    g: String,
    k: String,
    rows: Vec<Vec<i64>>,
    central_cols: Vec<usize>,
    central_den: i64,
    provenance: String,
}

fn parse_weight(s: &str, expected: usize) -> Result<Weight, String> {
    let coords: Result<Vec<i64>, _> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect();
    let coords = coords.map_err(|_| format!("cannot parse weight {s:?}"))?;
    if coords.len() != expected {
        return Err(format!(
            "weight has {} entries, expected {expected}",
            coords.len()
        ));
    }
    if coords.iter().any(|&c| c < 0) {
        return Err(format!("weight {s:?} has negative entries"));
    }
    Ok(Weight::new(coords))
}

fn parse_weights(s: &str, expected: usize) -> Result<Vec<Weight>, String> {
    s.split(';').map(|w| parse_weight(w, expected)).collect()
}

fn json_decomposition(g: &str, weight: &[i64], k: &str, dec: &Decomposition) -> JsonDecomposition {
    JsonDecomposition {
        g: g.to_string(),
        weight: weight.to_vec(),
        k: k.to_string(),
        components: dec
            .terms()
            .iter()
            .map(|(w, &m)| JsonComponent {
                mult: m,
                weight: w.coords.clone(),
                central: w.central.iter().map(format_rational).collect(),
            })
            .collect(),
    }
}

fn render_matrix_text(spec: &RestrictionSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "g: {}", spec.g());
    let _ = writeln!(out, "k: {}", spec.k());
    for row in spec.matrix().rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "[{}]", cells.join(","));
    }
    let labels: Vec<String> = spec
        .columns()
        .iter()
        .map(|c| match c {
            ColumnOrigin::SimpleRoot(i) => format!("node {i}"),
            ColumnOrigin::LowestRoot => "lowest root".to_string(),
            ColumnOrigin::Folded => "folded".to_string(),
            ColumnOrigin::Central(i) => format!("center({i})"),
        })
        .collect();
    let _ = writeln!(out, "columns: {}", labels.join(", "));
    if !spec.matrix().central_cols().is_empty() {
        let _ = writeln!(
            out,
            "central columns {:?} have denominator {}",
            spec.matrix().central_cols(),
            spec.matrix().central_den()
        );
    }
    out.trim_end().to_string()
}

/// Errors from the library split into usage problems (exit 2) and broken
/// internal invariants (exit 3).
fn classify(e: &LieError) -> u8 {
    match e {
        LieError::Internal(_) | LieError::DecompositionFailure(_) => 3,
        _ => 2,
    }
}

enum Output {
    Decomposition(JsonDecomposition, Decomposition),
    Matrix(JsonMatrix, String),
    Scalar(serde_json::Value, String),
}

fn run(cli: &Cli) -> Result<Output, (u8, String)> {
    let usage = |msg: String| (2u8, msg);
    let lie_err = |e: LieError| (classify(&e), e.to_string());

    match &cli.cmd {
        Cmd::Case {
            name,
            params,
            weight,
        } => {
            let case =
                CaseId::with_params(name, params.m, params.p, params.q).map_err(lie_err)?;
            let spec = rules::catalog_spec(&case).map_err(lie_err)?;
            let w = parse_weight(weight, spec.g().rank()).map_err(usage)?;
            let dec = spec.branch(&w).map_err(lie_err)?;
            let json =
                json_decomposition(&spec.g().to_string(), &w.coords, &spec.k().to_string(), &dec);
            Ok(Output::Decomposition(json, dec))
        }
        Cmd::Levi {
            ty,
            cross,
            weight,
            be,
        } => {
            let (g, crossed) = parse_levi_target(ty, cross).map_err(usage)?;
            let w = parse_weight(weight, g.rank()).map_err(usage)?;
            let mode = if *be {
                LeviMode::BastonEastwood
            } else {
                LeviMode::Native
            };
            let spec = rules::levi_spec(&g, &crossed).map_err(lie_err)?;
            let dec = rules::levi_branch(&g, &crossed, &w, mode).map_err(lie_err)?;
            let k_name = match mode {
                LeviMode::Native => spec.k().to_string(),
                LeviMode::BastonEastwood => spec.g().to_string(),
            };
            let json = json_decomposition(&spec.g().to_string(), &w.coords, &k_name, &dec);
            Ok(Output::Decomposition(json, dec))
        }
        Cmd::Resmat {
            case,
            params,
            ty,
            cross,
        } => {
            let spec = match (case, ty) {
                (Some(name), None) => {
                    let case = CaseId::with_params(name, params.m, params.p, params.q)
                        .map_err(lie_err)?;
                    rules::catalog_spec(&case).map_err(lie_err)?
                }
                (None, Some(ty)) => {
                    let (g, crossed) = parse_levi_target(ty, cross).map_err(usage)?;
                    rules::levi_spec(&g, &crossed).map_err(lie_err)?
                }
                _ => {
                    return Err(usage(
                        "resmat needs either --case NAME or --type G with --cross".into(),
                    ))
                }
            };
            let json = JsonMatrix {
                g: spec.g().to_string(),
                k: spec.k().to_string(),
                rows: spec.matrix().rows().clone(),
                central_cols: spec.matrix().central_cols().to_vec(),
                central_den: spec.matrix().central_den(),
                provenance: spec.provenance().to_string(),
            };
            let text = render_matrix_text(&spec);
            Ok(Output::Matrix(json, text))
        }
        Cmd::Tensor { ty, weights } => {
            let t: LieType = ty.parse().map_err(lie_err)?;
            let ws = parse_weights(weights, t.semisimple_rank()).map_err(usage)?;
            if ws.len() < 2 {
                return Err(usage("tensor needs at least two weights".into()));
            }
            let mut dec = reps::tensor(&t, &ws[0], &ws[1]).map_err(lie_err)?;
            for w in &ws[2..] {
                let mut next = Decomposition::new(t.clone());
                for (lam, &m) in dec.terms() {
                    for (mu, &tm) in reps::tensor(&t, lam, w).map_err(lie_err)?.terms() {
                        next.insert_add(mu.clone(), m * tm);
                    }
                }
                dec = next;
            }
            let json = json_decomposition(ty, &ws[0].coords, ty, &dec);
            Ok(Output::Decomposition(json, dec))
        }
        Cmd::Diag { ty, weights } => {
            let t: LieType = ty.parse().map_err(lie_err)?;
            let st = t
                .as_simple()
                .ok_or_else(|| usage(format!("diag needs a simple type, got {ty}")))?;
            let ws = parse_weights(weights, t.semisimple_rank()).map_err(usage)?;
            let dec = reps::branch_diag(&st, &ws).map_err(lie_err)?;
            let json = json_decomposition(ty, &ws[0].coords, ty, &dec);
            Ok(Output::Decomposition(json, dec))
        }
        Cmd::Dim { ty, weight } => {
            let t: LieType = ty.parse().map_err(lie_err)?;
            let w = parse_weight(weight, t.semisimple_rank()).map_err(usage)?;
            let d = reps::dim(&t, &w).map_err(lie_err)?;
            let json = serde_json::json!({
                "g": ty,
                "weight": w.coords,
                "dim": d.to_string(),
            });
            Ok(Output::Scalar(json, d.to_string()))
        }
    }
}

fn parse_levi_target(ty: &str, cross: &[usize]) -> Result<(SimpleLieType, SimpleSubset), String> {
    let t: LieType = ty
        .parse()
        .map_err(|e: LieError| e.to_string())?;
    let g = t
        .as_simple()
        .ok_or_else(|| format!("levi needs a simple type, got {ty}"))?;
    if cross.is_empty() {
        return Err("levi needs at least one --cross node".into());
    }
    let crossed =
        SimpleSubset::new(cross.to_vec(), g.rank()).map_err(|e| e.to_string())?;
    Ok((g, crossed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let (json_value, text) = match &out {
                Output::Decomposition(j, dec) => (
                    serde_json::to_value(j).expect("serializable"),
                    dec.lie_text(),
                ),
                Output::Matrix(j, text) => {
                    (serde_json::to_value(j).expect("serializable"), text.clone())
                }
                Output::Scalar(j, text) => (j.clone(), text.clone()),
            };
            let rendered = match cli.format {
                Format::Lie => text,
                Format::Json => {
                    serde_json::to_string_pretty(&json_value).expect("serializable")
                }
            };
            println!("{rendered}");
            if let Some(path) = &cli.out {
                let body =
                    serde_json::to_string_pretty(&json_value).expect("serializable");
                if let Err(e) = std::fs::write(path, body) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::SUCCESS
        }
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

// FromStr import used by clap value parsing of CaseId via with_params.
#[allow(unused)]
fn _case_parse_check(s: &str) -> Result<CaseId, LieError> {
    CaseId::from_str(s)
}
