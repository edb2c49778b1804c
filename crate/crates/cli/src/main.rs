//! `specseq`: groups, character tables, Mackey modules, Ext/Tor and E2 pages
//! from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

mod commands;
mod gset;
mod input;

use clap::{Args, Parser, Subcommand, ValueEnum};
use specseq::corpus::DEFAULT_SEED;
use std::fmt;
use std::process::ExitCode;

/// A check that ran and failed; exit code 1.
#[derive(Debug)]
pub struct Failure(pub String);

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failure {}

#[derive(Parser)]
#[command(name = "specseq", version, about = "Mackey modules over Green functors and the E2 pages of their spectral sequences")]
pub struct Cli {
    /// Worker threads for the library's parallel loops.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group structure.
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Character table of a group.
    Chartable {
        spec: String,
        /// Write the table as JSON.
        #[arg(long, value_name = "FILE")]
        export: Option<String>,
        /// Load a JSON table and verify it.
        #[arg(long, value_name = "FILE", conflicts_with = "export")]
        import: Option<String>,
    },
    /// Table of marks.
    Tom { spec: String },
    /// The Burnside-Bouc category.
    Bouc {
        #[command(subcommand)]
        command: BoucCommand,
    },
    /// Module files and names.
    Module {
        #[command(subcommand)]
        command: ModuleCommand,
    },
    /// Hom(M, N), graded.
    Hom {
        m: String,
        n: String,
        #[command(flatten)]
        ws: WorkspaceArgs,
    },
    /// Ext^p(M, N), graded.
    Ext {
        m: String,
        n: String,
        #[arg(long, default_value_t = 3)]
        max_p: usize,
        #[command(flatten)]
        ws: WorkspaceArgs,
    },
    /// Tor_p(M, N), graded, per subgroup class.
    Tor {
        m: String,
        n: String,
        #[arg(long, default_value_t = 3)]
        max_p: usize,
        #[command(flatten)]
        ws: WorkspaceArgs,
    },
    /// E2 page of the UCT or Kunneth spectral sequence.
    E2 {
        kind: E2Arg,
        a: String,
        b: String,
        #[arg(long, default_value_t = 3)]
        max_p: usize,
        #[command(flatten)]
        ws: WorkspaceArgs,
    },
    /// Projective resolution with its exactness certificate.
    Resolve {
        m: String,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[command(flatten)]
        ws: WorkspaceArgs,
    },
    /// Induction from elementary subgroups onto R(G).
    BrauerCheck { spec: String },
    /// Rank of induction from cyclic subgroups into R(G).
    ArtinCheck { spec: String },
    /// The acceptance suite.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Order, exponent, elements and subgroup classes.
    Info { spec: String },
}

#[derive(Subcommand)]
enum BoucCommand {
    /// Basis of the morphisms X -> Y, indexed by double cosets.
    Hom {
        x: String,
        y: String,
        #[command(flatten)]
        ws: WorkspaceArgs,
    },
}

#[derive(Subcommand)]
enum ModuleCommand {
    /// Verify every Mackey module identity.
    Check {
        m: String,
        #[command(flatten)]
        ws: WorkspaceArgs,
    },
    /// Values at each subgroup class, or the module file with --json.
    Show {
        m: String,
        #[command(flatten)]
        ws: WorkspaceArgs,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Run acceptance criteria; exit 1 if any fails.
    Run {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Criteria to run (default: all).
        #[arg(long = "criterion", value_name = "N")]
        criteria: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum E2Arg {
    Uct,
    Kunneth,
}

#[derive(Args)]
struct WorkspaceArgs {
    /// Group spec; defaults to the group of the first module file.
    #[arg(short, long)]
    group: Option<String>,
    /// Green functor: representation (default) or burnside.
    #[arg(long)]
    functor: Option<String>,
    /// Seed of the module corpus behind `corpus:k`.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

impl WorkspaceArgs {
    fn open(&self, modules: &[&str]) -> anyhow::Result<input::Workspace> {
        input::Workspace::new(self.group.as_deref(), self.functor.as_deref(), self.seed, modules)
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    if let Some(n) = cli.threads {
        if n == 0 {
            anyhow::bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let json = cli.json;
    match cli.command {
        Command::Group {
            command: GroupCommand::Info { spec },
        } => commands::group_info(&spec, json),
        Command::Chartable { spec, export, import } => commands::chartable(&spec, export.as_deref(), import.as_deref(), json),
        Command::Tom { spec } => commands::tom(&spec, json),
        Command::Bouc {
            command: BoucCommand::Hom { x, y, ws },
        } => commands::bouc_hom(&ws.open(&[])?, &x, &y, json),
        Command::Module { command } => match command {
            ModuleCommand::Check { m, ws } => commands::module_check(&ws.open(&[&m])?, &m, json),
            ModuleCommand::Show { m, ws } => commands::module_show(&ws.open(&[&m])?, &m, json),
        },
        Command::Hom { m, n, ws } => commands::hom(&ws.open(&[&m, &n])?, &m, &n, json),
        Command::Ext { m, n, max_p, ws } => commands::ext(&ws.open(&[&m, &n])?, &m, &n, max_p, json),
        Command::Tor { m, n, max_p, ws } => commands::tor(&ws.open(&[&m, &n])?, &m, &n, max_p, json),
        Command::E2 { kind, a, b, max_p, ws } => {
            let kind = match kind {
                E2Arg::Uct => specseq::spectral::E2Kind::Uct,
                E2Arg::Kunneth => specseq::spectral::E2Kind::Kunneth,
            };
            commands::e2(&ws.open(&[&a, &b])?, kind, &a, &b, max_p, json)
        }
        Command::Resolve { m, max_len, ws } => commands::resolve(&ws.open(&[&m])?, &m, max_len, json),
        Command::BrauerCheck { spec } => commands::induction(&spec, true, json),
        Command::ArtinCheck { spec } => commands::induction(&spec, false, json),
        Command::Corpus {
            command: CorpusCommand::Run { seed, criteria },
        } => commands::corpus_run(seed, &criteria, json),
    }
}

fn main() -> ExitCode {
    // die quietly when stdout is a closed pipe, as in `specseq ... | head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(f) = e.downcast_ref::<Failure>() {
                eprintln!("verification failed: {f}");
                ExitCode::from(1)
            } else {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        }
    }
}
