//! `syncdfa`: command-line analysis of synchronizing automata.
//!
//! Exit codes: 0 on success (whatever the verdict), 1 on usage, input or
//! hypothesis errors, 2 when a size guard is exceeded.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "syncdfa",
    version,
    about = "Reset words, avoiding words and small-automaton census"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true, conflicts_with = "dot")]
    json: bool,

    /// Graphviz DOT output (only where the output is a single automaton).
    #[arg(long, global = true)]
    dot: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Strong connectivity, synchronization and bound comparison.
    Verify {
        /// Automaton file (text or JSON format), `-` for standard input.
        file: String,
    },
    /// Shortest reset word.
    SyncWord { file: String },
    /// Shortest avoiding words, for one state or all of them.
    Avoid {
        file: String,
        /// State name (`q0`) or index; every state when omitted.
        #[arg(long)]
        state: Option<String>,
    },
    /// Evaluate both parts of the avoidance lemma.
    Lemma3 { file: String },
    /// Census over all or random automata of a given size.
    Search(SearchArgs),
    /// Generate an automaton.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    states: usize,
    #[arg(long)]
    letters: usize,
    /// Sample this many random automata instead of enumerating all.
    #[arg(long, value_name = "N")]
    random: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// One automaton per isomorphism class (exhaustive mode).
    #[arg(long)]
    dedup: bool,
    /// Include automata that are not strongly connected in the reset-word
    /// statistics.
    #[arg(long)]
    all: bool,
    /// Lemma violators to keep in the report.
    #[arg(long, default_value_t = syncdfa::search::DEFAULT_MAX_WITNESSES)]
    witnesses: usize,
}

#[derive(Subcommand)]
enum GenCommand {
    /// The Černý automaton C_n.
    Cerny {
        #[arg(long)]
        n: usize,
    },
    /// A uniformly random automaton.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
    Dot,
}

pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<syncdfa::Error> for Failure {
    fn from(e: syncdfa::Error) -> Self {
        Failure {
            code: if e.is_guard() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mode = match (cli.json, cli.dot) {
        (true, _) => OutputMode::Json,
        (_, true) => OutputMode::Dot,
        _ => OutputMode::Text,
    };
    match run(cli.command, mode) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("syncdfa: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, mode: OutputMode) -> Result<String, Failure> {
    if mode == OutputMode::Dot && !matches!(command, Command::Gen(_)) {
        return Err(Failure::usage("--dot is only valid for `gen`"));
    }
    match command {
        Command::Verify { file } => commands::verify(&commands::load(&file)?, mode),
        Command::SyncWord { file } => commands::sync_word(&commands::load(&file)?, mode),
        Command::Avoid { file, state } => {
            commands::avoid(&commands::load(&file)?, state.as_deref(), mode)
        }
        Command::Lemma3 { file } => commands::lemma3(&commands::load(&file)?, mode),
        Command::Search(args) => {
            let mut params = match args.random {
                Some(samples) => syncdfa::search::SearchParams::random(
                    args.states,
                    args.letters,
                    samples,
                    args.seed,
                ),
                None => syncdfa::search::SearchParams::exhaustive(args.states, args.letters),
            };
            params.dedup = args.dedup;
            params.strongly_connected_only = !args.all;
            params.max_witnesses = args.witnesses;
            commands::search(&params, args.workers, mode)
        }
        Command::Gen(GenCommand::Cerny { n }) => {
            commands::emit(&syncdfa::search::gen_cerny(n)?, mode)
        }
        Command::Gen(GenCommand::Random { n, k, seed }) => {
            commands::emit(&syncdfa::search::random_dfa(n, k, seed)?, mode)
        }
    }
}
