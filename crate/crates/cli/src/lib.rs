//! The `bsol` command line: argument definitions and command dispatch.
//!
//! Every command forwards to one operation of `bsol-core` and only
//! formats its result.

pub mod render;
pub mod state;

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bsol_core::dynamics::{
    analyze_state_space, analyze_with_edges, ge_characterization_check, ge_reachability_check,
    knuth_exponent_check, necklace_components, orbit, toom_path, GraphSummary,
};
use bsol_core::export::{graph_to_dot, orbit_to_json_lines};
use bsol_core::stochastic::{run_chain, shape_profile, ChainConfig, ChainVariant};
use bsol_core::system::{
    Austrian, Bulgarian, Carolina, Dual, Janetzko, Montreal, Multiplayer, ServedioYeh, System,
};
use bsol_core::{Error, Exec, Limits, Partition};

use render::{render_young, Style};
use state::{parse_state, State, StateKind};

#[derive(Debug, Parser)]
#[command(name = "bsol", version, about = "Bulgarian solitaire and its variants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for state-space analysis (1 = sequential).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Largest state space to materialize; overrides BSOL_MAX_STATES.
    #[arg(long, global = true)]
    pub limit: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Play one trajectory until a position repeats.
    Orbit(OrbitArgs),
    /// Analyze every state of n cards: components, cycles, tails, GE states.
    Graph(GraphArgs),
    /// Garden-of-Eden structure of the Bulgarian graph on partitions of n.
    Ge(NArgs),
    /// Component count from necklaces against the exhaustive count.
    Necklaces(NArgs),
    /// Check that k(k-1) moves bring every partition of k(k+1)/2 to the staircase.
    Knuth(KArgs),
    /// The slowest start for k(k+1)/2 cards and its conjugate symmetry.
    Toom(KArgs),
    /// Run a seeded random solitaire.
    Simulate(SimulateArgs),
    /// Draw a Young diagram.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Bulgarian,
    Dual,
    Carolina,
    Montreal,
    Austrian,
    Multiplayer,
    ServedioYeh,
    Janetzko,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RandomVariant {
    Popov,
    Ejs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderStyle {
    Rows,
    Cradle,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[arg(long, value_enum, default_value = "bulgarian")]
    pub variant: Variant,
    /// Starting position, e.g. `4,3,3`, `2,1,0@1` (janetzko), `3,2|0`
    /// (austrian), `3;1,1` (multiplayer).
    #[arg(long)]
    pub state: String,
    /// Machine life for the austrian variant.
    #[arg(long = "L", short = 'L', default_value_t = 3)]
    pub life: u32,
    #[arg(long)]
    pub step_bound: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value = "bulgarian")]
    pub variant: Variant,
    /// Machine life for the austrian variant.
    #[arg(long = "L", short = 'L', default_value_t = 3)]
    pub life: u32,
    /// Seats for servedio-yeh and janetzko.
    #[arg(long, default_value_t = 3)]
    pub seats: usize,
    /// Players for multiplayer.
    #[arg(long, default_value_t = 2)]
    pub players: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct NArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct KArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, value_enum)]
    pub variant: RandomVariant,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Recorded steps (default 500n).
    #[arg(long)]
    pub samples: Option<usize>,
    /// Discarded steps (default 50n).
    #[arg(long)]
    pub burn_in: Option<usize>,
    /// Starting partition (default: one pile of n cards).
    #[arg(long)]
    pub initial: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long)]
    pub state: String,
    #[arg(long, value_enum, default_value = "rows")]
    pub style: RenderStyle,
}

/// A failed command and the exit status it maps to.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Bound(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Bound(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Invalid(_) => CliError::Usage(e.to_string()),
            Error::BoundExceeded { .. } => CliError::Bound(e.to_string()),
            Error::StepBound { .. } => CliError::Internal(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

/// Output of a command that ran to completion. `code` is 4 when a check
/// that must hold did not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }

    fn checked(text: String, holds: bool) -> Self {
        Output {
            text,
            code: if holds { 0 } else { 4 },
        }
    }
}

type CliResult = std::result::Result<Output, CliError>;

/// Runs one parsed command. Thread-pool setup for `--workers` is left to
/// the binary; `workers == Some(1)` selects the sequential path here.
pub fn run(cli: &Cli) -> CliResult {
    let mut limits = Limits::from_env()?;
    if let Some(limit) = cli.limit {
        limits.max_states = limit;
    }
    let exec = match cli.workers {
        Some(1) => Exec::Sequential,
        _ => Exec::default(),
    };
    match &cli.command {
        Command::Orbit(a) => run_orbit(a),
        Command::Graph(a) => run_graph(a, &limits, exec),
        Command::Ge(a) => run_ge(a, &limits, exec),
        Command::Necklaces(a) => run_necklaces(a, &limits, exec),
        Command::Knuth(a) => run_knuth(a, &limits, exec),
        Command::Toom(a) => run_toom(a),
        Command::Simulate(a) => run_simulate(a),
        Command::Render(a) => run_render(a),
    }
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::Usage(format!("format {format:?} is not available for {command}"))
}

fn json<T: Serialize>(value: &T) -> std::result::Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn orbit_text<Y: System>(
    system: &Y,
    start: &Y::State,
    bound: Option<usize>,
    format: Format,
) -> CliResult {
    let bound = bound.unwrap_or_else(|| state_bound(system, start));
    let o = orbit(system, start, bound)?;
    match format {
        Format::Json => Ok(Output::ok(orbit_to_json_lines(&o)?)),
        Format::Text => {
            let mut out = String::new();
            for (i, s) in o.path.iter().enumerate() {
                let _ = writeln!(out, "{i:>4}  {s}");
            }
            let _ = writeln!(out, "tail {} cycle_length {}", o.tail, o.cycle_length);
            Ok(Output::ok(out))
        }
        other => Err(unsupported(other, "orbit")),
    }
}

/// Default step bound computed from the card count held by `start`.
fn state_bound<Y: System>(system: &Y, start: &Y::State) -> usize {
    let n: u32 = card_count(&serde_json::to_value(start).unwrap_or_default());
    system.default_step_bound(n)
}

fn card_count(v: &serde_json::Value) -> u32 {
    use serde_json::Value;
    match v {
        Value::Object(map) => {
            if let Some(n) = map.get("n").and_then(Value::as_u64) {
                return n as u32;
            }
            let mut total = 0;
            for (key, val) in map {
                match (key.as_str(), val) {
                    ("bank", Value::Number(b)) => total += b.as_u64().unwrap_or(0) as u32,
                    ("L", _) | ("pointer", _) => {}
                    _ => total += card_count(val),
                }
            }
            total
        }
        Value::Array(items) => items.iter().map(card_count).sum(),
        Value::Number(x) => x.as_u64().unwrap_or(0) as u32,
        _ => 0,
    }
}

fn run_orbit(a: &OrbitArgs) -> CliResult {
    let kind = state_kind(a.variant, a.life);
    let start = parse_state(&a.state, kind)?;
    match (a.variant, start) {
        (Variant::Bulgarian, State::Partition(p)) => {
            orbit_text(&Bulgarian, &p, a.step_bound, a.format)
        }
        (Variant::Dual, State::Partition(p)) => {
            if p.is_empty() {
                return Err(CliError::Usage(
                    "dual orbit needs a nonempty partition".into(),
                ));
            }
            orbit_text(&Dual, &p, a.step_bound, a.format)
        }
        (Variant::Carolina, State::Composition(c)) => {
            orbit_text(&Carolina, &c, a.step_bound, a.format)
        }
        (Variant::Montreal, State::Composition(c)) => {
            orbit_text(&Montreal, &c, a.step_bound, a.format)
        }
        (Variant::ServedioYeh, State::Composition(c)) => {
            let sys = ServedioYeh::new(c.len())?;
            orbit_text(&sys, &c, a.step_bound, a.format)
        }
        (Variant::Austrian, State::Austrian(s)) => {
            orbit_text(&Austrian::new(a.life)?, &s, a.step_bound, a.format)
        }
        (Variant::Multiplayer, State::Multiplayer(s)) => {
            let sys = Multiplayer::new(s.players.len())?;
            orbit_text(&sys, &s, a.step_bound, a.format)
        }
        (Variant::Janetzko, State::Pointer(s)) => {
            let sys = Janetzko::new(s.piles.len())?;
            orbit_text(&sys, &s, a.step_bound, a.format)
        }
        _ => Err(CliError::Internal(
            "state kind does not match variant".into(),
        )),
    }
}

fn state_kind(variant: Variant, life: u32) -> StateKind {
    match variant {
        Variant::Bulgarian | Variant::Dual => StateKind::Partition,
        Variant::Carolina => StateKind::Strict,
        Variant::Montreal => StateKind::Montreal,
        Variant::ServedioYeh => StateKind::Circular,
        Variant::Janetzko => StateKind::Pointer,
        Variant::Austrian => StateKind::Austrian { life },
        Variant::Multiplayer => StateKind::Multiplayer,
    }
}

fn graph_text<Y: System>(
    system: &Y,
    n: u32,
    format: Format,
    limits: &Limits,
    exec: Exec,
) -> CliResult {
    match format {
        Format::Dot => {
            let g = analyze_with_edges(system, n, limits, exec)?;
            Ok(Output::ok(graph_to_dot(&g)))
        }
        Format::Json => json(&analyze_state_space(system, n, limits, exec)?).map(Output::ok),
        Format::Text => Ok(Output::ok(summary_text(&analyze_state_space(
            system, n, limits, exec,
        )?))),
        Format::Csv => Err(unsupported(format, "graph")),
    }
}

fn summary_text<S: std::fmt::Display>(g: &GraphSummary<S>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "variant {}  n {}", g.variant, g.n);
    let _ = writeln!(out, "states {}", g.state_count);
    let _ = writeln!(out, "components {}", g.component_count);
    let _ = writeln!(out, "max_tail {}", g.max_tail);
    for (i, cyc) in g.cycles.iter().enumerate() {
        let states: Vec<String> = cyc.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "cycle {} length {} component_size {}: {}",
            i + 1,
            cyc.len(),
            g.component_sizes[i],
            states.join(" -> ")
        );
    }
    let _ = writeln!(out, "garden_of_eden {}", g.ge_states.len());
    for s in &g.ge_states {
        let _ = writeln!(out, "  {s}");
    }
    out
}

fn run_graph(a: &GraphArgs, limits: &Limits, exec: Exec) -> CliResult {
    let n = a.n;
    match a.variant {
        Variant::Bulgarian => graph_text(&Bulgarian, n, a.format, limits, exec),
        Variant::Dual => graph_text(&Dual, n, a.format, limits, exec),
        Variant::Carolina => graph_text(&Carolina, n, a.format, limits, exec),
        Variant::Montreal => graph_text(&Montreal, n, a.format, limits, exec),
        Variant::Austrian => graph_text(&Austrian::new(a.life)?, n, a.format, limits, exec),
        Variant::Multiplayer => {
            graph_text(&Multiplayer::new(a.players)?, n, a.format, limits, exec)
        }
        Variant::ServedioYeh => graph_text(&ServedioYeh::new(a.seats)?, n, a.format, limits, exec),
        Variant::Janetzko => graph_text(&Janetzko::new(a.seats)?, n, a.format, limits, exec),
    }
}

#[derive(Serialize)]
struct GeOutput {
    characterization: bsol_core::dynamics::GeCharacterization,
    reachability: bsol_core::dynamics::ReachabilityReport,
}

fn run_ge(a: &NArgs, limits: &Limits, exec: Exec) -> CliResult {
    let characterization = ge_characterization_check(a.n, limits, exec)?;
    let reachability = ge_reachability_check(a.n, limits, exec)?;
    // no Garden-of-Eden partitions exist below 3 cards
    let holds = characterization.holds() && (reachability.holds || a.n <= 2);
    let text = match a.format {
        Format::Json => json(&GeOutput {
            characterization,
            reachability,
        })?,
        Format::Text => {
            let mut out = String::new();
            let c = &characterization;
            let _ = writeln!(out, "n {}", c.n);
            let _ = writeln!(out, "in-degree 0 states {}", c.ge_states.len());
            let _ = writeln!(
                out,
                "largest part < parts - 1 matches in-degree 0: {}",
                c.holds()
            );
            for s in &c.ge_states {
                let _ = writeln!(out, "  {s}");
            }
            for entry in &reachability.cycles {
                let cyc: Vec<String> = entry.cycle.iter().map(ToString::to_string).collect();
                match &entry.witness {
                    Some(w) => {
                        let _ = writeln!(
                            out,
                            "cycle [{}] entered from {w} after {} moves",
                            cyc.join(" -> "),
                            entry.path.len() - 1
                        );
                    }
                    None => {
                        let _ = writeln!(
                            out,
                            "cycle [{}] has no garden-of-eden entry",
                            cyc.join(" -> ")
                        );
                    }
                }
            }
            out
        }
        other => return Err(unsupported(other, "ge")),
    };
    Ok(Output::checked(text, holds))
}

fn run_necklaces(a: &NArgs, limits: &Limits, exec: Exec) -> CliResult {
    let report = necklace_components(a.n, limits, exec)?;
    let holds = report.holds();
    let text = match a.format {
        Format::Json => json(&report)?,
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "n {}  k {}  r {}", report.n, report.k, report.r);
            let _ = writeln!(out, "necklace count {}", report.formula_count);
            let _ = writeln!(out, "components {}", report.component_count);
            for c in &report.components {
                let _ = writeln!(
                    out,
                    "  {}  period {}  cycle_length {}  size {}  from {}",
                    c.necklace, c.period, c.cycle_length, c.size, c.cycle[0]
                );
            }
            let _ = writeln!(out, "one move rotates one bead: {}", report.rotation_holds);
            out
        }
        other => return Err(unsupported(other, "necklaces")),
    };
    Ok(Output::checked(text, holds))
}

fn run_knuth(a: &KArgs, limits: &Limits, exec: Exec) -> CliResult {
    let report = knuth_exponent_check(a.k, limits, exec)?;
    let text = match a.format {
        Format::Json => json(&report)?,
        Format::Text => {
            let mut out = format!(
                "k {}  n {}  moves {}  partitions {}  holds {}\n",
                report.k, report.n, report.exponent, report.checked, report.holds
            );
            for (s, img) in &report.exceptions {
                let _ = writeln!(out, "  {s} -> {img}");
            }
            out
        }
        other => return Err(unsupported(other, "knuth")),
    };
    Ok(Output::checked(text, report.holds))
}

fn run_toom(a: &KArgs) -> CliResult {
    let report = toom_path(a.k)?;
    let holds = report.minimal_s == report.expected_s && report.conjugacy_holds;
    let text = match a.format {
        Format::Json => json(&report)?,
        Format::Text => {
            let mut out = format!(
                "k {}  tau {}  minimal_s {}  expected {}  conjugacy {}\n",
                report.k, report.tau, report.minimal_s, report.expected_s, report.conjugacy_holds
            );
            for (i, s) in report.path.iter().enumerate() {
                let _ = writeln!(out, "{i:>4}  {s}");
            }
            out
        }
        other => return Err(unsupported(other, "toom")),
    };
    Ok(Output::checked(text, holds))
}

#[derive(Serialize)]
struct SimulateOutput {
    config: ChainConfig,
    stats: bsol_core::stochastic::ChainStats,
    profile: bsol_core::stochastic::ShapeProfile,
}

fn run_simulate(a: &SimulateArgs) -> CliResult {
    let variant = match a.variant {
        RandomVariant::Popov => ChainVariant::Popov,
        RandomVariant::Ejs => ChainVariant::Ejs,
    };
    let mut config = ChainConfig::new(variant, a.n, a.p, a.seed);
    if let Some(s) = a.samples {
        config.samples = s;
    }
    if let Some(b) = a.burn_in {
        config.burn_in = b;
    }
    if let Some(init) = &a.initial {
        config.initial = Some(init.parse::<Partition>()?);
    }
    let stats = run_chain(&config)?;
    if a.format == Format::Csv {
        return Ok(Output::ok(stats.mean_shape_csv()));
    }
    let profile = shape_profile(&stats)?;
    let text = match a.format {
        Format::Json => json(&SimulateOutput {
            config,
            stats,
            profile,
        })?,
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{} n {} p {} seed {} burn_in {} samples {}",
                stats.variant, stats.n, stats.p, stats.seed, config.burn_in, stats.samples
            );
            let _ = writeln!(out, "generator {}", stats.generator);
            let _ = writeln!(out, "distinct states {}", stats.visit_counts.len());
            let _ = writeln!(
                out,
                "mean staircase distance {:.6}",
                stats.mean_staircase_distance
            );
            let _ = writeln!(out, "mean energy {:.3}", stats.mean_energy);
            let shape: Vec<String> = stats.mean_shape.iter().map(|v| format!("{v:.3}")).collect();
            let _ = writeln!(out, "mean shape {}", shape.join(","));
            let _ = writeln!(
                out,
                "fit over {} piles: linear residual {:.6}, exponential residual {:.6} ({} fits better)",
                profile.support,
                profile.linear.residual,
                profile.exponential.residual,
                profile.better_fit()
            );
            let _ = writeln!(out, "final state {}", stats.final_state);
            out
        }
        other => return Err(unsupported(other, "simulate")),
    };
    Ok(Output::ok(text))
}

fn run_render(a: &RenderArgs) -> CliResult {
    let lambda: Partition = a.state.parse()?;
    let style = match a.style {
        RenderStyle::Rows => Style::Rows,
        RenderStyle::Cradle => Style::Cradle,
    };
    Ok(Output::ok(render_young(&lambda, style) + "\n"))
}
