//! The `scatkit` command line.
//!
//! Exit codes: 0 success or decided, 1 failed reproduction check, 2 parse
//! error, 3 precondition violation, 10 interval result, `unknown`, or
//! timeout.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::category::{
    gscat, is_categorical, scat, verify_inequalities, wscat_le, CatResult, CategoricalStrategy, ScatOptions,
};
use crate::complex::Complex;
use crate::constructions::{cone, fat_wedge, join, product, sd_iter, suspension};
use crate::contiguity::{in_same_contiguity_class, Decision};
use crate::error::Error;
use crate::graph::{arboricity, bisect_edges, bisect_off_tree, nash_williams_bound, Graph};
use crate::io;
use crate::iso::isomorphism;
use crate::reproduce::Suite;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_UNDECIDED: u8 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "scatkit", version, about = "Strong-homotopy invariants of finite simplicial complexes")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Worker threads for batch checks (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Give up after this many seconds (exit 10).
    #[arg(long, global = true)]
    pub timeout: Option<u64>,
    /// Maximum number of distinct maps visited per search.
    #[arg(long, env = "SCATKIT_BUDGET", default_value_t = 200_000, global = true)]
    pub budget: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sizes, f-vector, Euler characteristic, connectivity and core size.
    Info { file: String },
    /// Core by strong collapses, with the collapse log.
    Core { file: String },
    /// Isomorphism test.
    Iso { a: String, b: String },
    /// Barycentric subdivision.
    Sd {
        file: String,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
    },
    /// Categorical product.
    Product { a: String, b: String },
    /// Join.
    Join { a: String, b: String },
    /// Cone with apex `apex`.
    Cone { file: String },
    /// Suspension with poles `north` and `south`.
    Suspension { file: String },
    /// Fat wedge `TⁿK` at a base point.
    Fatwedge {
        file: String,
        #[arg(long)]
        basepoint: String,
        #[arg(long)]
        n: usize,
    },
    /// Simplicial LS category with a witness cover and chains.
    Scat {
        file: String,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: CategoricalStrategy,
        /// Search on the complex itself instead of its core.
        #[arg(long)]
        no_core: bool,
        /// Use the partition search on graphs too.
        #[arg(long)]
        no_graph_fast_path: bool,
        #[arg(long, default_value_t = 1_000_000)]
        partition_budget: usize,
    },
    /// Geometric simplicial LS category with a witness cover.
    Gscat { file: String },
    /// Decides `wscat K ≤ n`.
    Wscat {
        file: String,
        #[arg(long)]
        basepoint: String,
        #[arg(long)]
        n: usize,
    },
    /// Decides whether the subcomplex generated by some facets is categorical.
    Categorical {
        file: String,
        /// Facet indices in canonical order, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        facets: Vec<usize>,
        #[arg(long, value_enum, default_value = "search")]
        strategy: CategoricalStrategy,
    },
    /// Whether two maps are directly contiguous.
    Contiguous { a: String, b: String },
    /// Whether two maps are in the same contiguity class.
    Class { a: String, b: String },
    /// Arboricity of a graph with a forest decomposition.
    Arboricity { file: String },
    /// Bisects the given edges, or every edge off a spanning tree.
    Bisect {
        file: String,
        /// Facet indices of the edges to bisect.
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<usize>>,
    },
    /// Checks the known inequalities on two complexes.
    Inequalities { a: String, b: String },
    /// Runs the reproduction suite on the embedded fixtures.
    VerifyPaper {
        /// Replace a fixture: NAME=FILE.
        #[arg(long, value_parser = parse_fixture)]
        fixture: Vec<(String, String)>,
        /// Run only these check ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<usize>>,
    },
}

fn parse_fixture(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .ok_or_else(|| "expected NAME=FILE".to_string())
}

/// Result of a subcommand: output to print and exit code.
struct Output {
    json: Value,
    text: String,
    code: u8,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, code: EXIT_OK }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::MalformedLabel(_) => EXIT_PARSE,
        _ => EXIT_PRECONDITION,
    }
}

fn complex_output(k: &Complex) -> Output {
    Output::ok(io::complex_to_json(k), io::complex_to_text(k))
}

fn read(path: &str) -> crate::Result<Complex> {
    io::read_complex(path).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(m),
        Error::EmptyComplex => Error::Parse(format!("{path}: no facets")),
        other => other,
    })
}

fn cat_output(k: &Complex, r: &CatResult, name: &str) -> Output {
    let text = if r.exact {
        format!("{name} = {}\nblocks: {:?}\n", r.upper, r.witness.blocks)
    } else {
        format!("{} <= {name} <= {}\nblocks: {:?}\n", r.lower, r.upper, r.witness.blocks)
    };
    Output {
        json: io::cat_result_to_json(k, r),
        text,
        code: if r.exact { EXIT_OK } else { EXIT_UNDECIDED },
    }
}

fn decision_output<W>(d: &Decision<W>, witness: impl FnOnce(&W) -> Value) -> Output {
    let text = match d {
        Decision::Unknown { visited, budget } => format!("unknown (visited {visited} of budget {budget})\n"),
        _ => format!("{}\n", d.verdict()),
    };
    Output {
        json: io::decision_to_json(d, witness),
        text,
        code: if d.is_unknown() { EXIT_UNDECIDED } else { EXIT_OK },
    }
}

fn run(cli: &Cli) -> crate::Result<Output> {
    let budget = cli.budget;
    Ok(match &cli.command {
        Command::Info { file } => {
            let k = read(file)?;
            let core = k.core();
            let json = json!({
                "vertices": k.num_vertices(),
                "facets": k.num_facets(),
                "dim": k.dim(),
                "f_vector": k.f_vector(),
                "euler_characteristic": k.euler_characteristic(),
                "components": k.components().len(),
                "core_vertices": core.complex.num_vertices(),
                "strongly_collapsible": core.complex.num_vertices() == 1,
            });
            let text = format!(
                "vertices {}\nfacets {}\ndim {}\nf-vector {:?}\neuler {}\ncomponents {}\ncore vertices {}\n",
                k.num_vertices(),
                k.num_facets(),
                k.dim(),
                k.f_vector(),
                k.euler_characteristic(),
                k.components().len(),
                core.complex.num_vertices()
            );
            Output::ok(json, text)
        }
        Command::Core { file } => {
            let k = read(file)?;
            let core = k.core();
            let mut text = String::new();
            for s in &core.steps {
                text.push_str(&format!("# removed {} dominated by {}\n", s.removed, s.dominator));
            }
            text.push_str(&io::complex_to_text(&core.complex));
            Output::ok(io::core_to_json(&core), text)
        }
        Command::Iso { a, b } => {
            let (k, l) = (read(a)?, read(b)?);
            match isomorphism(&k, &l) {
                Some(bij) => {
                    let pairs: serde_json::Map<String, Value> = k
                        .vertices()
                        .map(|v| (k.label(v).to_string(), json!(l.label(bij[v.index()]))))
                        .collect();
                    Output::ok(json!({ "isomorphic": true, "bijection": pairs }), "isomorphic\n".into())
                }
                None => Output::ok(json!({ "isomorphic": false }), "not isomorphic\n".into()),
            }
        }
        Command::Sd { file, iterations } => complex_output(&sd_iter(&read(file)?, *iterations)),
        Command::Product { a, b } => complex_output(&product(&read(a)?, &read(b)?)),
        Command::Join { a, b } => complex_output(&join(&read(a)?, &read(b)?)),
        Command::Cone { file } => complex_output(&cone(&read(file)?)),
        Command::Suspension { file } => complex_output(&suspension(&read(file)?)),
        Command::Fatwedge { file, basepoint, n } => {
            complex_output(fat_wedge(&read(file)?, basepoint, *n)?.complex())
        }
        Command::Scat {
            file,
            strategy,
            no_core,
            no_graph_fast_path,
            partition_budget,
        } => {
            let k = read(file)?;
            let opts = ScatOptions {
                budget,
                strategy: *strategy,
                use_core: !no_core,
                graph_fast_path: !no_graph_fast_path,
                partition_budget: *partition_budget,
            };
            cat_output(&k, &scat(&k, &opts)?, "scat")
        }
        Command::Gscat { file } => {
            let k = read(file)?;
            cat_output(&k, &gscat(&k)?, "gscat")
        }
        Command::Wscat { file, basepoint, n } => {
            let k = read(file)?;
            let d = wscat_le(&k, basepoint, *n, budget)?;
            decision_output(&d, |w| {
                json!({
                    "fat_wedge": io::complex_to_json(&w.fat_wedge),
                    "delta": io::map_to_json(&w.delta),
                    "chain": io::chain_to_json(&w.chain),
                })
            })
        }
        Command::Categorical { file, facets, strategy } => {
            let k = Arc::new(read(file)?);
            let d = is_categorical(&k, facets, budget, *strategy)?;
            decision_output(&d, io::chain_to_json)
        }
        Command::Contiguous { a, b } => {
            let f = io::parse_map(&io::read_input(a)?)?;
            let g = io::parse_map(&io::read_input(b)?)?;
            let c = f.is_contiguous(&g)?;
            Output::ok(json!({ "contiguous": c }), format!("{c}\n"))
        }
        Command::Class { a, b } => {
            let f = io::parse_map(&io::read_input(a)?)?;
            let g = io::parse_map(&io::read_input(b)?)?;
            let d = in_same_contiguity_class(&f, &g, budget)?;
            decision_output(&d, io::chain_to_json)
        }
        Command::Arboricity { file } => {
            let k = read(file)?;
            let g = Graph::new(&k)?;
            let (u, d) = arboricity(&g);
            let bound = nash_williams_bound(&g).unwrap_or(u);
            let forests = d.edge_labels(&g);
            Output::ok(
                json!({ "arboricity": u, "nash_williams": bound, "forests": forests }),
                format!("arboricity {u}\nforests {forests:?}\n"),
            )
        }
        Command::Bisect { file, edges } => {
            let k = read(file)?;
            let out = match edges {
                Some(e) => bisect_edges(&k, e)?,
                None => bisect_off_tree(&k)?,
            };
            complex_output(&out)
        }
        Command::Inequalities { a, b } => {
            let (k, l) = (read(a)?, read(b)?);
            let opts = ScatOptions {
                budget,
                ..Default::default()
            };
            let report = verify_inequalities(&k, &l, &opts)?;
            let text = report
                .checks
                .iter()
                .map(|c| format!("{:?}\t{}\n", c.verdict, c.name))
                .collect();
            Output {
                json: serde_json::to_value(&report).expect("serializable"),
                text,
                code: if report.violations() > 0 { EXIT_CHECK_FAILED } else { EXIT_OK },
            }
        }
        Command::VerifyPaper { fixture, only } => {
            let mut suite = Suite::new();
            for (name, path) in fixture {
                suite = suite.with_fixture(name, read(path)?)?;
            }
            let outcomes: Vec<_> = match only {
                Some(ids) => ids.iter().filter_map(|&i| suite.run_one(i)).collect(),
                None => suite.run(),
            };
            let all = outcomes.iter().all(|o| o.passed);
            let text = outcomes
                .iter()
                .map(|o| {
                    format!(
                        "{:>2} {} {:<44} {:>7.2}s  {}  [{}]\n",
                        o.id,
                        if o.passed { "PASS" } else { "FAIL" },
                        o.title,
                        o.seconds,
                        o.anchor,
                        o.detail
                    )
                })
                .collect();
            Output {
                json: json!({ "passed": all, "checks": outcomes }),
                text,
                code: if all { EXIT_OK } else { EXIT_CHECK_FAILED },
            }
        }
    })
}

/// Entry point of the binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PRECONDITION);
        }
    }
    if let Some(secs) = cli.timeout {
        std::thread::spawn(move || {
            std::thread::sleep(Duration::from_secs(secs));
            eprintln!("timeout after {secs}s");
            std::process::exit(EXIT_UNDECIDED.into());
        });
    }
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
