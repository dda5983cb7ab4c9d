//! The `knotrecon` command line.
//!
//! Every subcommand except `gen` reads one diagram from a file argument or,
//! when none is given, from standard input.

mod input;

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use knotrecon::braid::torus_braid;
use knotrecon::diagram::DiagramStats;
use knotrecon::invariants::{
    alexander_polynomial, reconnection_bounds, signature, LaurentPoly, ReconnectionBounds,
};
use knotrecon::reconnection::{
    apply_plan, cascade, min_reconnections_search, plan_unknotting, verify_unknot, CascadeTrace,
    MoveKind, Policy, ReconnectionPlan, SearchResult, UnknotVerdict,
};
use knotrecon::seifert::{seifert_circles, seifert_genus, seifert_graph, seifert_matrix, GenusReport};
use knotrecon::{BraidWord, Error};
use serde::{Deserialize, Serialize};

pub use input::Input;

pub const DEFAULT_SEARCH_BUDGET: usize = 1_000_000;
pub const DEFAULT_CASCADE_STEPS: usize = 10_000;

#[derive(Parser, Debug)]
#[command(name = "knotrecon", version, about = "Reconnection numbers of oriented links")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the random cascade policy.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// State budget for `search`, step budget for `cascade`.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Known unknotting number, used by `bounds`.
    #[arg(long, global = true)]
    pub unknotting: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = PolicyArg::Planned)]
    pub policy: PolicyArg,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Random,
    Planned,
    GreedySplit,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Crossings, components, writhe, positivity, connectivity.
    Stats { input: Option<PathBuf> },
    /// Seifert circles, genus and graph; the Seifert matrix for braid input.
    Seifert { input: Option<PathBuf> },
    /// Alexander polynomial and signature (braid input).
    Invariants { input: Option<PathBuf> },
    /// Lower and upper bounds on the reconnection number.
    Bounds { input: Option<PathBuf> },
    /// Unknotting plan, its execution and the unknot check.
    Plan { input: Option<PathBuf> },
    /// Reconnection cascade under `--policy`.
    Cascade { input: Option<PathBuf> },
    /// Breadth-first minimum over smoothings and merges.
    Search { input: Option<PathBuf> },
    /// Generate a braid word.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// Torus link T(p, q) as (σ1…σ(p-1))^q.
    Torus { p: usize, q: usize },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

/// Machine-readable failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
    pub site: Option<i64>,
    /// Partial trace of a cascade that ran out of steps.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<CascadeTrace>,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) | CliError::Domain(_) => 1,
        }
    }

    pub fn record(&self) -> ErrorRecord {
        match self {
            CliError::Usage(m) => ErrorRecord {
                kind: "UsageError".into(),
                message: m.clone(),
                site: None,
                trace: None,
            },
            CliError::Io(m) => ErrorRecord {
                kind: "IoError".into(),
                message: m.clone(),
                site: None,
                trace: None,
            },
            CliError::Domain(e) => ErrorRecord {
                kind: e.kind().into(),
                message: e.to_string(),
                site: e.site(),
                trace: match e {
                    Error::StepBudgetExceeded { trace, .. } => Some((**trace).clone()),
                    _ => None,
                },
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub bands: usize,
    pub connected: bool,
    pub spanning_tree: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertReport {
    pub circles: usize,
    pub genus: GenusReport,
    pub graph: GraphSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub alexander: LaurentPoly,
    pub alexander_text: String,
    pub signature: i64,
    /// `|Δ(-1)|`
    pub determinant: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanReport {
    pub plan: ReconnectionPlan,
    pub trace: CascadeTrace,
    pub verdict: UnknotVerdict,
}

/// Runs one command and returns what it prints.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<String, CliError> {
    let emit = |value: &dyn Render| match cli.format {
        Format::Json => value.json(),
        Format::Text => value.report(),
    };
    let out = match &cli.command {
        Command::Gen { family: Family::Torus { p, q } } => {
            let b = torus_braid(*p, *q)?;
            emit(&b)
        }
        Command::Stats { input } => emit(&read_input(input, stdin)?.diagram().stats()),
        Command::Seifert { input } => {
            let input = read_input(input, stdin)?;
            let d = input.diagram();
            let genus = seifert_genus(&d)?;
            let graph = seifert_graph(&d);
            let report = SeifertReport {
                circles: seifert_circles(&d).count,
                genus,
                graph: GraphSummary {
                    vertices: graph.vertices,
                    bands: graph.edges.len(),
                    connected: graph.is_connected(),
                    spanning_tree: graph.spanning_tree(),
                },
                matrix: match input.braid() {
                    Some(b) => Some(seifert_matrix(b)?.entries),
                    None => None,
                },
            };
            emit(&report)
        }
        Command::Invariants { input } => {
            let input = read_input(input, stdin)?;
            let b = input
                .braid()
                .ok_or_else(|| CliError::Usage("invariants needs a braid word as input".into()))?;
            let m = seifert_matrix(b)?;
            let alexander = alexander_polynomial(&m).normalize();
            let report = InvariantsReport {
                alexander_text: alexander.to_string(),
                determinant: alexander.eval(-1).abs(),
                alexander,
                signature: signature(&m),
            };
            emit(&report)
        }
        Command::Bounds { input } => {
            let input = read_input(input, stdin)?;
            emit(&reconnection_bounds(&input.diagram(), input.braid(), cli.unknotting)?)
        }
        Command::Plan { input } => {
            let d = read_input(input, stdin)?.diagram();
            let plan = plan_unknotting(&d)?;
            let trace = apply_plan(&d, &plan)?;
            let verdict = verify_unknot(&trace.final_diagram);
            emit(&PlanReport {
                plan,
                trace,
                verdict,
            })
        }
        Command::Cascade { input } => {
            let d = read_input(input, stdin)?.diagram();
            let policy = match cli.policy {
                PolicyArg::Random => Policy::Random { seed: cli.seed },
                PolicyArg::Planned => Policy::Planned,
                PolicyArg::GreedySplit => Policy::GreedySplit,
            };
            emit(&cascade(&d, policy, cli.budget.unwrap_or(DEFAULT_CASCADE_STEPS))?)
        }
        Command::Search { input } => {
            let d = read_input(input, stdin)?.diagram();
            emit(&min_reconnections_search(&d, cli.budget.unwrap_or(DEFAULT_SEARCH_BUDGET))?)
        }
    };
    Ok(out)
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<Input, CliError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| CliError::Io(format!("stdin: {e}")))?;
            s
        }
    };
    Ok(Input::parse(&text)?)
}

trait Render {
    fn json(&self) -> String;
    fn report(&self) -> String;
}

impl<T: Serialize + TextReport> Render for T {
    fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    fn report(&self) -> String {
        TextReport::report(self)
    }
}

trait TextReport {
    fn report(&self) -> String;
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl TextReport for BraidWord {
    fn report(&self) -> String {
        self.to_string()
    }
}

impl TextReport for DiagramStats {
    fn report(&self) -> String {
        format!(
            "crossings   {}\ncomponents  {}\nwrithe      {}\npositive    {}\nconnected   {}",
            self.c,
            self.mu,
            self.writhe,
            yes_no(self.positive),
            yes_no(self.connected)
        )
    }
}

impl TextReport for SeifertReport {
    fn report(&self) -> String {
        let g = &self.genus;
        let mut s = format!(
            "seifert circles  {}\ngenus            {}\neuler            {}\nc, s, mu         {}, {}, {}\n",
            self.circles, g.genus, g.euler, g.c, g.s, g.mu
        );
        let _ = writeln!(
            s,
            "graph            {} vertices, {} bands, spanning tree {:?}",
            self.graph.vertices, self.graph.bands, self.graph.spanning_tree
        );
        if let Some(m) = &self.matrix {
            s.push_str("seifert matrix\n");
            for row in m {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                let _ = writeln!(s, "  {}", cells.join(" "));
            }
        }
        s
    }
}

impl TextReport for InvariantsReport {
    fn report(&self) -> String {
        format!(
            "alexander    {}\nsignature    {}\ndeterminant  {}",
            self.alexander_text, self.signature, self.determinant
        )
    }
}

impl TextReport for ReconnectionBounds {
    fn report(&self) -> String {
        let mut s = match self.exact {
            Some(r) => format!("R = {r}\n"),
            None => format!("{} <= R <= {}\n", self.lower, self.upper),
        };
        for c in &self.certificates {
            let side = match c.side {
                knotrecon::invariants::BoundSide::Lower => ">=",
                knotrecon::invariants::BoundSide::Upper => "<=",
            };
            let source = serde_json::to_value(c.source).expect("plain enum");
            let mark = if c.decisive { " *" } else { "" };
            let _ = writeln!(s, "  R {side} {:<3} {}{mark}", c.value, source.as_str().unwrap_or_default());
        }
        s
    }
}

impl TextReport for CascadeTrace {
    fn report(&self) -> String {
        let i = self.initial;
        let mut s = format!(
            "start: {} components, writhe {}, {} crossings\n",
            i.components, i.writhe, i.crossings
        );
        for (n, step) in self.steps.iter().enumerate() {
            let what = match step.kind {
                MoveKind::Smooth => format!("smooth crossing {}", step.site),
                MoveKind::Merge => format!("merge loops {} and {}", step.site, step.site + 1),
                MoveKind::SwitchGadget => format!("switch crossing {}", step.site),
            };
            let a = step.after;
            let _ = writeln!(
                s,
                "{:>3}. {what:<22} -> {} components, writhe {}, {} crossings",
                n + 1,
                a.components,
                a.writhe,
                a.crossings
            );
        }
        let _ = write!(s, "reconnections: {}\nfinal: {}", self.total_reconnections, self.final_diagram);
        s
    }
}

impl TextReport for PlanReport {
    fn report(&self) -> String {
        format!(
            "keep: {:?}\nsmooth: {:?}\ncost: {}\n{}\nunknot: {}",
            self.plan.keep,
            self.plan.smooth_order,
            self.plan.claimed_cost,
            TextReport::report(&self.trace),
            match self.verdict {
                UnknotVerdict::Confirmed => "confirmed",
                UnknotVerdict::Inconclusive => "inconclusive",
            }
        )
    }
}

impl TextReport for SearchResult {
    fn report(&self) -> String {
        let mut s = format!("minimum: {}\nstates: {}\nstart: {}\n", self.minimum, self.states, self.start);
        for (n, m) in self.moves.iter().enumerate() {
            let what = match m.kind {
                MoveKind::Merge => "merge".to_string(),
                _ => format!("smooth {}", m.site),
            };
            let _ = writeln!(s, "{:>3}. {what:<10} -> {}", n + 1, m.after);
        }
        s
    }
}
