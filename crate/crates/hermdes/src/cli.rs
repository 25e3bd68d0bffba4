//! Command-line front end.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hermdes_core::cyclic::CyclicCode;
use hermdes_core::design_code::{dimension_via_defining_set, s_set_count_formula, s_sets, HermitianDesign};
use hermdes_core::grm::{
    extended_grm_generator, grm_dimension_formula, grm_dual_params, grm_min_weight_formula, grm_punctured_code,
    GrmParams,
};
use hermdes_core::hermitian::HermitianCode;
use hermdes_core::{FieldTable, GenMatrixCode, Gf3Vec};
use serde_json::json;

use crate::checks::{self, Budgets, CLAIMS};
use crate::export::{self, DesignSummary};
use crate::parallel::{default_workers, WORKERS_ENV};
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Incidence,
    Squared,
    TraceMonomial,
    DefiningSet,
}

#[derive(Debug, Parser)]
#[command(
    name = "hermdes",
    version,
    about = "Hermitian trace codes, their 2-designs and design codes over GF(3)"
)]
pub struct Cli {
    /// Worker threads for exhaustive enumeration.
    #[arg(long, global = true, env = WORKERS_ENV)]
    pub workers: Option<usize>,
    /// Largest dimension enumerated exhaustively.
    #[arg(long, global = true, default_value_t = 20)]
    pub budget_dim: usize,
    /// Cap on vector operations for distance searches.
    #[arg(long, global = true, default_value_t = 2_000_000_000)]
    pub budget_ops: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The trace code C(2m, p).
    Hermitian {
        #[arg(long, default_value_t = 3)]
        p: u8,
        #[arg(long)]
        m: u32,
        /// Exhaustive weight distribution.
        #[arg(long)]
        weights: bool,
        /// Generator matrix rows as digit strings.
        #[arg(long)]
        matrix: bool,
        /// Index triples of the minimum-weight codewords.
        #[arg(long)]
        min_weight_indices: bool,
    },
    /// Punctured generalized Reed-Muller code parameters.
    Grm {
        #[arg(long, default_value_t = 3)]
        p: u8,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
    },
    /// Support design of the minimum-weight codewords of C(2m, 3).
    Design {
        #[arg(long)]
        m: u32,
        /// Support design of another weight, by exhaustive enumeration.
        #[arg(long)]
        w: Option<usize>,
        /// Write the incidence matrix as CSV.
        #[arg(long)]
        export_incidence: Option<PathBuf>,
        /// Write the incidence matrix in run-length text.
        #[arg(long)]
        export_run_length: Option<PathBuf>,
    },
    /// The code spanned by the design's incidence matrix.
    DesignCode {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Route::Incidence)]
        route: Route,
        /// Print the canonical generator matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Run verification checks and emit a report.
    Verify {
        #[arg(long, default_value_t = 2)]
        m: u32,
        /// Claims to check (repeatable).
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(CLAIMS))]
        claim: Vec<String>,
        /// Check every claim.
        #[arg(long)]
        all: bool,
    },
    /// Residue families S_0..S_3 and their sizes.
    SSets {
        #[arg(long)]
        m: u32,
    },
}

/// Output of a command: the text to print and the exit code.
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: 0 }
    }

    fn usage(message: String) -> Self {
        Outcome {
            output: message + "\n",
            code: 2,
        }
    }
}

fn render_json(value: &serde_json::Value, format: Format) -> String {
    match format {
        Format::Text => text_lines(value),
        _ => export::to_json_pretty(value),
    }
}

fn text_lines(value: &serde_json::Value) -> String {
    match value {
        serde_json::Value::Object(map) => map.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
        other => format!("{other}\n"),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let budgets = Budgets {
        dim: cli.budget_dim,
        ops: cli.budget_ops,
        workers: cli.workers.unwrap_or_else(default_workers),
    };
    if budgets.dim == 0 || budgets.ops == 0 || budgets.workers == 0 {
        return Outcome::usage("budgets and worker count must be positive".to_string());
    }
    match &cli.command {
        Command::Hermitian {
            p,
            m,
            weights,
            matrix,
            min_weight_indices,
        } => hermitian(*p, *m, *weights, *matrix, *min_weight_indices, cli.format, &budgets),
        Command::Grm { p, l, m } => grm(*p, *l, *m, cli.format),
        Command::Design {
            m,
            w,
            export_incidence,
            export_run_length,
        } => design(
            *m,
            *w,
            export_incidence.as_ref(),
            export_run_length.as_ref(),
            cli.format,
            &budgets,
        ),
        Command::DesignCode { m, route, matrix } => design_code(*m, *route, *matrix, cli.format),
        Command::Verify { m, claim, all } => {
            let report = if *all {
                checks::run_all(*m, &budgets)
            } else {
                let mut r = VerificationReport::default();
                for c in claim {
                    r.extend(checks::run_claim(c, *m, &budgets));
                }
                r
            };
            let output = match cli.format {
                Format::Text => report.render_text(),
                _ if report.checks.is_empty() => report.render_text(),
                _ => report.render_json(),
            };
            Outcome {
                output,
                code: report.exit_code(),
            }
        }
        Command::SSets { m } => s_set_command(*m, cli.format),
    }
}

fn hermitian(
    p: u8,
    m: u32,
    weights: bool,
    matrix: bool,
    min_weight_indices: bool,
    format: Format,
    budgets: &Budgets,
) -> Outcome {
    let code = match HermitianCode::new(p, m) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    if code.length() > 729 {
        return Outcome::usage(format!("length {} is beyond the supported range", code.length()));
    }
    let g = code.generator_matrix::<hermdes_core::FpBytes>();
    if matrix {
        return Outcome::ok(export::matrix_digits(&g));
    }
    if weights {
        let g3 = if p == 3 { Some(g.convert::<Gf3Vec>()) } else { None };
        let we = match &g3 {
            Some(g3) => checks::enumerate(g3, budgets),
            None => {
                crate::parallel::weight_enumerator_parallel(&g, budgets.dim, budgets.workers).map_err(|e| e.to_string())
            }
        };
        return match we {
            Ok(we) => match format {
                Format::Text => Outcome::ok(format!("{we}\n")),
                _ => Outcome::ok(export::to_json_pretty(&we)),
            },
            Err(e) => Outcome {
                output: e + "\n",
                code: 3,
            },
        };
    }
    if min_weight_indices {
        let indices: Vec<_> = code
            .min_weight_indices()
            .into_iter()
            .map(|i| json!({"a": i.a.to_string(), "b": i.b.to_string(), "h": i.h}))
            .collect();
        return Outcome::ok(render_json(&json!(indices), format));
    }
    let summary = json!({
        "p": p,
        "m": m,
        "length": code.length(),
        "dimension": code.dimension(),
        "min_distance": code.min_distance(),
        "field": code.field().params(),
        "weight_distribution": code.theoretical_weight_distribution(),
    });
    Outcome::ok(render_json(&summary, format))
}

fn grm(p: u8, l: u32, m: u32, format: Format) -> Outcome {
    let params = match GrmParams::new(p, l, m) {
        Ok(x) => x,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let punctured: CyclicCode = grm_punctured_code(&params);
    let rank = if (p as u64).pow(m) <= 729 {
        FieldTable::builtin(p, m)
            .ok()
            .map(|f| extended_grm_generator::<hermdes_core::FpBytes>(&f, l).dimension())
    } else {
        None
    };
    let value = json!({
        "q": p,
        "l": l,
        "m": m,
        "length": params.length(),
        "dimension_formula": grm_dimension_formula(&params),
        "n_minus_defining_set": punctured.dimension(),
        "evaluation_rank": rank,
        "min_weight_formula": grm_min_weight_formula(&params),
        "dual": grm_dual_params(&params),
        "defining_set": punctured,
    });
    Outcome::ok(render_json(&value, format))
}

fn design(
    m: u32,
    w: Option<usize>,
    csv: Option<&PathBuf>,
    run_length: Option<&PathBuf>,
    format: Format,
    budgets: &Budgets,
) -> Outcome {
    let design = match w {
        None => checks::min_weight_design(m),
        Some(w) => HermitianCode::new(3, m).map_err(|e| e.to_string()).and_then(|c| {
            hermdes_core::design::support_design(&c.generator_matrix::<Gf3Vec>(), w, budgets.dim)
                .map_err(|e| e.to_string())
        }),
    };
    let design = match design {
        Ok(d) => d,
        Err(e) => return Outcome::usage(e),
    };
    for (path, text) in [
        (csv, export::incidence_csv as fn(&_) -> String),
        (run_length, export::incidence_run_length),
    ] {
        if let Some(path) = path {
            if let Err(e) = export::write_text(path, &text(&design)) {
                return Outcome {
                    output: format!("{e}\n"),
                    code: 1,
                };
            }
        }
    }
    if format == Format::Csv {
        return Outcome::ok(export::incidence_csv(&design));
    }
    let summary = match (design.verify_t_design(2), design.parameters()) {
        (Ok(Some(_)), Ok(p)) => DesignSummary::new(p, 2),
        _ => {
            return Outcome {
                output: format!("{} blocks do not form a 2-design\n", design.num_blocks()),
                code: 1,
            }
        }
    };
    Outcome::ok(render_json(
        &serde_json::to_value(summary).expect("serializable"),
        format,
    ))
}

fn design_code(m: u32, route: Route, matrix: bool, format: Format) -> Outcome {
    let hd = match HermitianDesign::new(m) {
        Ok(h) => h,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let n = hd.length();
    let span = |rows: Vec<Gf3Vec>| GenMatrixCode::from_rows(3, n, rows).expect("same length");
    let code = match route {
        Route::Incidence => hd.incidence_code().map_err(|e| e.to_string()),
        Route::Squared => Ok(span(hd.squared_generators())),
        Route::TraceMonomial => Ok(span(hd.trace_monomial_generators())),
        Route::DefiningSet => hd.defining_set_code().map_err(|e| e.to_string()),
    };
    let code = match code {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                output: e + "\n",
                code: 1,
            }
        }
    };
    if matrix {
        return Outcome::ok(export::matrix_digits(&code));
    }
    let value = json!({
        "m": m,
        "route": format!("{route:?}"),
        "length": code.len(),
        "dimension": code.dimension(),
        "pivots": code.pivots(),
    });
    Outcome::ok(render_json(&value, format))
}

fn s_set_command(m: u32, format: Format) -> Outcome {
    if !(1..=10).contains(&m) {
        return Outcome::usage("s-sets supports 1 <= m <= 10".to_string());
    }
    let s = s_sets(m);
    let value = json!({
        "m": m,
        "n": s.n,
        "counts": s.counts(),
        "formula": s_set_count_formula(m),
        "pairwise_disjoint": s.pairwise_disjoint(),
        "dimension": dimension_via_defining_set(m),
        "sets": (0..4).map(|k| s.set(k)).collect::<Vec<_>>(),
    });
    Outcome::ok(render_json(&value, format))
}
