use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_core::idempotents::RankLimits;
use hecke_core::scalar::RatFunc;
use hecke_core::tableaux::YoungDiagram;
use hecke_core::verify::random_rationals_in_unit_interval;
use hecke_core::Hecke;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Map, Value};

use hecke_cli::commands::{self, Outcome};
use hecke_cli::CliError;

#[derive(Parser)]
#[command(name = "hecke", version, about = "Exact computations in the Hecke algebra H_n(q)")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Keep q symbolic, or specialize it to rationals.
    #[arg(long, value_enum, default_value_t = Mode::Symbolic, global = true)]
    mode: Mode,
    /// Comma-separated rational values of q for evaluated mode.
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,
    /// Number of random q in (1, 2) for evaluated mode when --q is absent.
    #[arg(long, default_value_t = 3, global = true)]
    samples: usize,
    /// Seed for random q values and random test elements.
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    /// Largest rank resolved with symbolic q.
    #[arg(long, default_value_t = RankLimits::default().symbolic, global = true)]
    symbolic_limit: usize,
    /// Largest rank resolved with evaluated q.
    #[arg(long, default_value_t = RankLimits::default().evaluated, global = true)]
    evaluated_limit: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Symbolic,
    Evaluated,
}

#[derive(Subcommand)]
enum Command {
    /// Standard tableaux of a shape with their content strings.
    Tableaux {
        #[arg(long)]
        shape: String,
    },
    /// The coloured Young graph up to level n.
    Graph {
        #[arg(long)]
        n: usize,
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Decide whether a string of contents is a spectrum string.
    Validate {
        #[arg(long, allow_hyphen_values = true)]
        string: String,
    },
    /// Primitive idempotents of H_n with their verification.
    Idempotents {
        #[arg(long)]
        n: usize,
        /// Form every product e_a e_b by full multiplication.
        #[arg(long)]
        direct: bool,
    },
    /// Closed-form q-dimension, optionally cross-checked against traces.
    Qdim {
        #[arg(long)]
        shape: String,
        #[arg(long, allow_hyphen_values = true)]
        d: i32,
        #[arg(long)]
        check_trace: bool,
    },
    /// Seminormal representation matrices.
    Rep {
        #[arg(long)]
        shape: String,
    },
    /// Ocneanu trace of an expression in H_n.
    Trace {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        d: i32,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// Also print the conditional expectation to H_{n-1}.
        #[arg(long)]
        expectation: bool,
    },
    /// The full invariant suite.
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        d: i32,
    },
}

fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    s.trim().parse().map_err(|_| CliError::Usage(format!("'{s}' is not a rational number")))
}

fn q_values(g: &Global) -> Result<Vec<BigRational>, CliError> {
    match &g.q {
        Some(list) => list.split(',').map(parse_rational).collect(),
        None => {
            let mut rng = StdRng::seed_from_u64(g.seed);
            Ok(random_rationals_in_unit_interval(&mut rng, g.samples))
        }
    }
}

fn shape(s: &str) -> Result<YoungDiagram, CliError> {
    Ok(YoungDiagram::parse(s)?)
}

/// Runs `$body` with `$h` bound to the symbolic algebra, or once per q value.
macro_rules! per_mode {
    ($g:expr, |$h:ident| $body:expr) => {{
        let g: &Global = $g;
        match g.mode {
            Mode::Symbolic => {
                let $h: Hecke<RatFunc> = Hecke::symbolic();
                Ok::<_, CliError>(Report::Single($body?))
            }
            Mode::Evaluated => {
                let mut out = Vec::new();
                for q0 in q_values(g)? {
                    let $h = Hecke::at(q0.clone())?;
                    out.push((q0, $body?));
                }
                Ok(Report::Samples(out))
            }
        }
    }};
}

enum Report {
    /// Output that is already in its final format (DOT).
    Raw(String),
    Single(Outcome),
    Samples(Vec<(BigRational, Outcome)>),
}

impl Report {
    fn pass(&self) -> bool {
        match self {
            Report::Raw(_) => true,
            Report::Single(o) => o.pass,
            Report::Samples(v) => v.iter().all(|(_, o)| o.pass),
        }
    }

    fn render(self, format: Format, mode: &str) -> String {
        match (self, format) {
            (Report::Raw(s), _) => s,
            (Report::Single(o), Format::Text) => o.text,
            (Report::Samples(v), Format::Text) => {
                v.into_iter().map(|(q, o)| format!("q = {q}\n{}", o.text)).collect::<Vec<_>>().join("\n")
            }
            (Report::Single(o), Format::Json) => {
                let mut m = o.json;
                m.insert("schema".into(), json!(1));
                m.insert("mode".into(), json!(mode));
                to_json_string(Value::Object(m))
            }
            (Report::Samples(v), Format::Json) => {
                let samples: Vec<Value> = v
                    .into_iter()
                    .map(|(q, o)| {
                        let mut m = o.json;
                        m.insert("q".into(), json!(q.to_string()));
                        Value::Object(m)
                    })
                    .collect();
                let mut m = Map::new();
                m.insert("schema".into(), json!(1));
                m.insert("mode".into(), json!(mode));
                m.insert("samples".into(), Value::Array(samples));
                to_json_string(Value::Object(m))
            }
        }
    }
}

fn to_json_string(v: Value) -> String {
    // serde_json's default map is ordered by key
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<(Report, &'static str), CliError> {
    let g = &cli.global;
    let limits = RankLimits { symbolic: g.symbolic_limit, evaluated: g.evaluated_limit };
    let mode = match g.mode {
        Mode::Symbolic => "symbolic",
        Mode::Evaluated => "evaluated",
    };
    let report = match &cli.command {
        Command::Tableaux { shape: s } => Report::Single(commands::tableaux(&shape(s)?)),
        Command::Graph { n, dot } => {
            if *n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            let o = commands::graph(*n, *dot);
            if *dot {
                Report::Raw(o.text)
            } else {
                Report::Single(o)
            }
        }
        Command::Validate { string } => Report::Single(commands::validate(string)?),
        Command::Idempotents { n, direct } => {
            if *n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            per_mode!(g, |h| commands::idempotents(&h, *n, *direct, &limits))?
        }
        Command::Qdim { shape: s, d, check_trace } => {
            let s = shape(s)?;
            per_mode!(g, |h| commands::qdim(&h, &s, *d, *check_trace, &limits))?
        }
        Command::Rep { shape: s } => {
            let s = shape(s)?;
            per_mode!(g, |h| commands::rep(&h, &s))?
        }
        Command::Trace { n, d, expr, expectation } => {
            if *n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            per_mode!(g, |h| commands::trace(&h, *n, *d, expr, *expectation))?
        }
        Command::Check { n, d } => {
            if *n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            limits_check(&limits, g.mode, *n)?;
            per_mode!(g, |h| Ok::<_, CliError>(commands::check(&h, *n, *d, g.seed, &limits)))?
        }
    };
    Ok((report, mode))
}

/// The suite builds the resolution at rank n; refuse early with the same
/// message the library would give.
fn limits_check(limits: &RankLimits, mode: Mode, n: usize) -> Result<(), CliError> {
    match mode {
        Mode::Symbolic => limits.check::<RatFunc>(n)?,
        Mode::Evaluated => limits.check::<BigRational>(n)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.global.format;
    match run(cli) {
        Ok((report, mode)) => {
            let pass = report.pass();
            print!("{}", report.render(format, mode));
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
