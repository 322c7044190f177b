//! Command-line front end. Exit status: 0 on success, 1 when a computation
//! fails, 2 on a usage error.

pub mod schema;

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{build_algebra, parse_presentation, FDAlgebra};
use crate::error::Error;
use crate::families::{auslander_of, auslander_quiver_presentation, reconcile, taft_algebra};
use crate::homology::{
    contracted_euler_check, happel_terms, hc_dims, hh_dims_absolute, hh_dims_relative, CyclicBicomplex, Mode,
    DEFAULT_BUDGET,
};
use crate::ktheory::{chern_coeffs, chern_of_idempotent, k0_taft_product, k0_tensor_oracle, IdempotentMatrix, K0Class};
use crate::linalg::Matrix;
use crate::repmod::{ext_table, minimal_resolution};
use crate::report::paper_report;
use schema::*;

#[derive(Parser, Debug)]
#[command(name = "hochcyc", version, about = "Homology and K-theory of Taft algebras and their Auslander algebras")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Relative,
    Absolute,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Relative => Mode::Relative,
            ModeArg::Absolute => Mode::Absolute,
        }
    }
}

#[derive(Args, Debug)]
struct Source {
    /// `taft:<n>`, `auslander-taft:<n>` or `file:<path>` (a `.alg` presentation)
    #[arg(long)]
    algebra: String,
}

#[derive(Args, Debug)]
struct Degree {
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basis elements with source, target and degree
    Basis(Source),
    /// Cartan and arrow matrices
    Cartan(Source),
    /// Minimal projective resolutions of simple modules
    Resolve {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: Degree,
        /// Vertex label or index; all vertices if omitted
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Dimensions of Ext between simples
    Ext {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: Degree,
    },
    /// Terms of the minimal bimodule resolution and the Euler check
    Happel {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: Degree,
    },
    /// Hochschild homology dimensions
    Hh {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: Degree,
        #[arg(long, value_enum, default_value_t = ModeArg::Relative)]
        mode: ModeArg,
        /// Cap on basis tuples in absolute mode
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Cyclic homology dimensions
    Hc {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: Degree,
        #[arg(long, value_enum, default_value_t = ModeArg::Relative)]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Chern characters of the vertex idempotents in HC_{2p}
    Chern {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        p: usize,
    },
    /// Grothendieck-ring product of the Taft algebra
    K0Product {
        #[arg(long)]
        n: usize,
        /// `i,u`; with `--right`, a single product instead of the table
        #[arg(long, value_parser = parse_label, requires = "right")]
        left: Option<(usize, usize)>,
        #[arg(long, value_parser = parse_label, requires = "left")]
        right: Option<(usize, usize)>,
    },
    /// Decomposition of N_{i,u} ⊗ N_{j,v} into uniserials
    Tensor {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_label)]
        left: (usize, usize),
        #[arg(long, value_parser = parse_label)]
        right: (usize, usize),
    },
    /// Compare the endomorphism-algebra construction with the mesh quiver
    Reconcile {
        #[arg(long)]
        n: usize,
    },
    /// Check every stated value for one n
    PaperReport {
        #[arg(long)]
        n: usize,
    },
}

fn parse_label(s: &str) -> Result<(usize, usize), String> {
    let (i, u) = s.split_once(',').ok_or("expected `i,u`")?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((parse(i)?, parse(u)?))
}

/// Usage errors exit with 2, everything else with 1.
enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NTooSmall => Failure::Usage(e.to_string()),
            e => Failure::Compute(e),
        }
    }
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n < 2 {
        return Err(Error::NTooSmall.into());
    }
    Ok(())
}

fn load(source: &str) -> Result<FDAlgebra, Failure> {
    let (kind, arg) = source
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("algebra source `{source}` must look like kind:value")))?;
    let n = || {
        arg.parse::<usize>()
            .map_err(|_| Failure::Usage(format!("`{arg}` is not a nonnegative integer")))
            .and_then(|n| check_n(n).map(|_| n))
    };
    match kind {
        "taft" => Ok(taft_algebra(n()?)?),
        "auslander-taft" => Ok(auslander_of(&taft_algebra(n()?)?)?.0),
        "file" => {
            let text = std::fs::read_to_string(arg).map_err(|e| Failure::Compute(Error::Io(format!("{arg}: {e}"))))?;
            Ok(build_algebra(&parse_presentation(&text)?)?)
        }
        _ => Err(Failure::Usage(format!(
            "unknown algebra source `{kind}`; use taft:<n>, auslander-taft:<n> or file:<path>"
        ))),
    }
}

fn label_of((i, u): (usize, usize)) -> String {
    format!("{i},{u}")
}

fn class_map(c: &K0Class) -> BTreeMap<String, i64> {
    c.coeffs.iter().map(|(&l, &m)| (label_of(l), m)).collect()
}

fn grid(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn joined<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// A rendered result: JSON value plus its table form.
struct Output {
    json: serde_json::Value,
    table: String,
}

fn output<T: Serialize>(value: &T, table: String) -> Output {
    Output {
        json: serde_json::to_value(value).expect("outputs serialize"),
        table,
    }
}

fn execute(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Basis(s) => {
            let a = load(&s.algebra)?;
            let out = BasisOut {
                algebra: a.name().to_string(),
                dim: a.dim(),
                vertices: a.vertices().to_vec(),
                graded_dims: a.graded_dims(),
                basis: a.basis().to_vec(),
            };
            let mut t = format!("{}: dim {}, graded {}\n", out.algebra, out.dim, joined(&out.graded_dims));
            for (k, b) in a.basis().iter().enumerate() {
                t += &format!(
                    "{k}\t{}\t{} -> {}\tdeg {}\n",
                    b.label,
                    a.vertices()[b.source],
                    a.vertices()[b.target],
                    b.degree
                );
            }
            Ok(output(&out, t.trim_end().to_string()))
        }
        Command::Cartan(s) => {
            let a = load(&s.algebra)?;
            let out = CartanOut {
                algebra: a.name().to_string(),
                vertices: a.vertices().to_vec(),
                cartan: a.cartan_matrix(),
                arrows: a.arrow_matrix(),
            };
            let t = format!(
                "{}\nvertices: {}\ncartan (row = target, column = source):\n{}\narrows:\n{}",
                out.algebra,
                out.vertices.join(" "),
                grid(&out.cartan),
                grid(&out.arrows)
            );
            Ok(output(&out, t))
        }
        Command::Resolve { source, degree, vertex } => {
            let a = load(&source.algebra)?;
            let vertices: Vec<usize> = match vertex {
                None => (0..a.num_vertices()).collect(),
                Some(v) => vec![match v.parse::<usize>() {
                    Ok(k) if k < a.num_vertices() => k,
                    _ => a.vertex_index(&v).map_err(|e| Failure::Usage(e.to_string()))?,
                }],
            };
            let mut resolutions = Vec::new();
            for v in vertices {
                let r = minimal_resolution::<crate::linalg::Rational>(&a, v, degree.max_degree)?;
                resolutions.push(ResolutionOut {
                    simple: a.vertices()[v].clone(),
                    terms: r
                        .terms
                        .iter()
                        .map(|t| t.iter().map(|&w| a.vertices()[w].clone()).collect())
                        .collect(),
                    length: r.length,
                });
            }
            let t = resolutions
                .iter()
                .map(|r| {
                    let terms: Vec<String> = r.terms.iter().map(|t| format!("[{}]", t.join(" "))).collect();
                    let end = if r.length.is_some() { "0" } else { "…" };
                    format!("S_{} <- {} <- {end}", r.simple, terms.join(" <- "))
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(output(
                &ResolveOut {
                    algebra: a.name().to_string(),
                    max_degree: degree.max_degree,
                    resolutions,
                },
                t,
            ))
        }
        Command::Ext { source, degree } => {
            let a = load(&source.algebra)?;
            let ext = ext_table(&a, degree.max_degree)?;
            let terminated = ext.entries.last().is_some_and(|t| t.iter().flatten().all(|&x| x == 0));
            let out = ExtOut {
                algebra: a.name().to_string(),
                vertices: a.vertices().to_vec(),
                max_degree: ext.max_degree,
                global_dimension: terminated.then(|| ext.global_dimension()),
                entries: ext.entries,
            };
            let mut t = format!("{}\nvertices: {}", out.algebra, out.vertices.join(" "));
            for (p, table) in out.entries.iter().enumerate() {
                t += &format!("\nExt^{p} (row = first argument):\n{}", grid(table));
            }
            Ok(output(&out, t))
        }
        Command::Happel { source, degree } => {
            let a = load(&source.algebra)?;
            let list = happel_terms(&ext_table(&a, degree.max_degree)?);
            let euler = if list.terminated {
                Some(contracted_euler_check(&a, &list)?)
            } else {
                None
            };
            let v = a.vertices();
            let mut t = format!("{}", a.name());
            for (p, row) in list.terms.iter().enumerate() {
                let parts: Vec<String> = row
                    .iter()
                    .map(|x| {
                        let s = format!("A e[{}] ⊗ e[{}] A", v[x.left], v[x.right]);
                        if x.multiplicity == 1 { s } else { format!("({s})^{}", x.multiplicity) }
                    })
                    .collect();
                t += &format!("\nR_{p}: {}", parts.join(" ⊕ "));
            }
            match &euler {
                Some(e) => {
                    t += &format!(
                        "\ncontracted dims: {}\nEuler characteristic: {} (HH: {})",
                        joined(&e.contracted_dims),
                        e.chi,
                        e.hh_chi
                    )
                }
                None => t += "\nresolution does not terminate within the degree limit",
            }
            let out = HappelOut {
                algebra: a.name().to_string(),
                vertices: v.to_vec(),
                terms: list.terms,
                terminated: list.terminated,
                euler,
            };
            Ok(output(&out, t))
        }
        Command::Hh { source, degree, mode, budget } => {
            let a = load(&source.algebra)?;
            let dims = match mode {
                ModeArg::Relative => hh_dims_relative(&a, degree.max_degree),
                ModeArg::Absolute => hh_dims_absolute(&a, degree.max_degree, budget)?,
            };
            let out = HomologyOut {
                algebra: a.name().to_string(),
                theory: "HH".into(),
                mode: format!("{:?}", Mode::from(mode)).to_lowercase(),
                dims: dims.dims,
                chain_dims: dims.chain_dims,
            };
            let t = format!("HH_0..{} of {}: {}", degree.max_degree, out.algebra, joined(&out.dims));
            Ok(output(&out, t))
        }
        Command::Hc { source, degree, mode, budget } => {
            let a = load(&source.algebra)?;
            let dims = hc_dims(&a, degree.max_degree, mode.into(), budget)?;
            let out = HomologyOut {
                algebra: a.name().to_string(),
                theory: "HC".into(),
                mode: format!("{:?}", Mode::from(mode)).to_lowercase(),
                dims: dims.dims,
                chain_dims: dims.chain_dims,
            };
            let t = format!("HC_0..{} of {}: {}", degree.max_degree, out.algebra, joined(&out.dims));
            Ok(output(&out, t))
        }
        Command::Chern { source, p } => {
            let a = load(&source.algebra)?;
            let cc = CyclicBicomplex::cyclic(&a, 2 * p, Mode::Relative, DEFAULT_BUDGET)?;
            let hc_dim = cc.homology().dims[2 * p];
            let mut classes = Vec::new();
            for v in 0..a.num_vertices() {
                let c = chern_of_idempotent(&IdempotentMatrix::diagonal(&a, &[v])?, p, &cc)?;
                classes.push(ChernClassOut {
                    vertex: a.vertices()[v].clone(),
                    coords: c.coords,
                });
            }
            let rank = Matrix::from_rows(&classes.iter().map(|c| c.coords.clone()).collect::<Vec<_>>()).rank();
            let out = ChernOut {
                algebra: a.name().to_string(),
                p,
                coefficients: chern_coeffs(p).values,
                hc_dim,
                rank,
                classes,
            };
            let mut t = format!(
                "{}: coefficients ({})\nHC_{} has dimension {}; vertex classes have rank {}",
                out.algebra,
                joined(&out.coefficients),
                2 * p,
                hc_dim,
                rank
            );
            for c in &out.classes {
                t += &format!("\nσ^{p}[{}] = ({})", c.vertex, joined(&c.coords));
            }
            Ok(output(&out, t))
        }
        Command::K0Product { n, left, right } => {
            check_n(n)?;
            let pairs: Vec<((usize, usize), (usize, usize))> = match (left, right) {
                (Some(l), Some(r)) => vec![(l, r)],
                _ => {
                    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |u| (i, u))).collect();
                    all.iter().flat_map(|&a| all.iter().map(move |&b| (a, b))).collect()
                }
            };
            let mut products = Vec::new();
            let mut t = Vec::new();
            for (l, r) in pairs {
                let p = k0_taft_product(n, l, r)?;
                t.push(format!(
                    "[P{}{}][P{}{}] = {}{}",
                    p.left.0,
                    p.left.1,
                    p.right.0,
                    p.right.1,
                    p.class,
                    if p.audit_ok() {
                        String::new()
                    } else {
                        format!("   (dimension {} ≠ {})", p.output_dim, p.expected_dim)
                    }
                ));
                products.push(ProductOut {
                    left: label_of(p.left),
                    right: label_of(p.right),
                    case: p.case,
                    product: class_map(&p.class),
                    expected_dim: p.expected_dim,
                    output_dim: p.output_dim,
                    audit_ok: p.audit_ok(),
                });
            }
            Ok(output(&K0Out { n, products }, t.join("\n")))
        }
        Command::Tensor { n, left, right } => {
            check_n(n)?;
            let oracle = k0_tensor_oracle(n, left, right)?;
            let formula = k0_taft_product(n, left, right)?.class;
            let out = TensorOut {
                n,
                left: label_of((left.0 % n, left.1 % n)),
                right: label_of((right.0 % n, right.1 % n)),
                decomposition: class_map(&oracle),
                formula: class_map(&formula),
                agree: oracle == formula,
            };
            let t = format!(
                "N{}{} ⊗ N{}{} = {}\nformula: {}{}",
                left.0 % n,
                left.1 % n,
                right.0 % n,
                right.1 % n,
                oracle,
                formula,
                if out.agree { "" } else { "   (differs)" }
            );
            Ok(output(&out, t))
        }
        Command::Reconcile { n } => {
            check_n(n)?;
            let (g, _) = auslander_of(&taft_algebra(n)?)?;
            let r = reconcile(&g, &auslander_quiver_presentation(n)?)?;
            let passed = r.passed();
            let t = r
                .items
                .iter()
                .map(|i| format!("{} {}: {} | {}", if i.pass { "PASS" } else { "FAIL" }, i.name, i.left, i.right))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(output(&ReconcileOut { n, items: r.items, passed }, t))
        }
        Command::PaperReport { n } => {
            check_n(n)?;
            let r = paper_report(n)?;
            let passed = r.passed();
            let mut t = r
                .checks
                .iter()
                .map(|c| {
                    let mark = if c.pass { "PASS" } else { "FAIL" };
                    if c.pass {
                        format!("{mark} [{}] {}: {}", c.criterion, c.name, c.actual)
                    } else {
                        format!("{mark} [{}] {}: expected {}, got {}", c.criterion, c.name, c.expected, c.actual)
                    }
                })
                .collect::<Vec<_>>()
                .join("\n");
            let failed = r.checks.iter().filter(|c| !c.pass).count();
            t += &format!("\n{} checks, {} failed", r.checks.len(), failed);
            Ok(output(&PaperReportOut { n, checks: r.checks, passed }, t))
        }
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let format = cli.format;
    match execute(cli.command) {
        Ok(o) => {
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json"),
                Format::Table => o.table,
            };
            let _ = writeln!(out, "{text}");
            0
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
