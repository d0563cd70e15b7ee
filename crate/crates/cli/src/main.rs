use std::io::{self, BufRead};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use esgame_cli::commands::{self, USAGE};
use esgame_cli::store::Store;
use esgame_core::referee::GameMode;
use esgame_core::verify::Suite;
use esgame_core::GameVariant;

#[derive(Parser)]
#[command(name = "esgame", about = "Convex 5-gon game engine", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Play a game against the engine (human) or watch it beat a random player.
    Play {
        #[arg(long, default_value = "convex")]
        variant: GameVariant,
        #[arg(long, default_value = "human")]
        mode: GameMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Save the finished game as a JSON trace.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run lemma and theorem checks and print a summary table.
    Verify {
        #[arg(long, default_value = "all")]
        lemma: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Print the full reports as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Compute the step at which player 1 is forced to lose.
    Solve {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "convex")]
        variant: GameVariant,
    },
    /// Draw a saved game as SVG.
    Render {
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Shade the cells where the next point loses.
        #[arg(long)]
        overlay: bool,
    },
    /// Re-run a saved game through the referee.
    Replay {
        #[arg(long)]
        trace: PathBuf,
    },
    /// Serve the HTTP/JSON API.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        addr: String,
        /// Data directory (default: $ESGAME_DATA or ./data).
        #[arg(long)]
        data: Option<PathBuf>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            std::process::exit(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    let mut out = io::stdout();
    let code = match cli.command {
        Command::Play { variant, mode, seed, out: trace } => {
            let stdin = io::stdin();
            let mut input = stdin.lock();
            commands::play(variant, mode, seed, trace.as_deref(), &mut input as &mut dyn BufRead, &mut out)
        }
        Command::Verify { lemma, seed, samples, json } => commands::verify(lemma, samples, seed, json, &mut out),
        Command::Solve { k, variant } => commands::solve(k, variant, &mut out),
        Command::Render { trace, out: svg, overlay } => commands::render(&trace, &svg, overlay, &mut out),
        Command::Replay { trace } => commands::replay(&trace, &mut out),
        Command::Serve { addr, data } => serve(&addr, commands::default_data_dir(data)),
    };
    std::process::exit(code);
}

fn serve(addr: &str, dir: PathBuf) -> i32 {
    let store = match Store::open(&dir) {
        Ok(s) => Arc::new(s),
        Err(e) => {
            eprintln!("cannot open data directory {}: {e}", dir.display());
            return USAGE;
        }
    };
    let runtime = tokio::runtime::Runtime::new().expect("tokio runtime");
    runtime.block_on(async move {
        let listener = match tokio::net::TcpListener::bind(addr).await {
            Ok(l) => l,
            Err(e) => {
                eprintln!("cannot bind {addr}: {e}");
                return USAGE;
            }
        };
        println!("listening on http://{}  (data in {})", listener.local_addr().map(|a| a.to_string()).unwrap_or_default(), dir.display());
        let app = esgame_cli::api::router(store);
        let shutdown = async {
            let _ = tokio::signal::ctrl_c().await;
        };
        match axum::serve(listener, app).with_graceful_shutdown(shutdown).await {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("server error: {e}");
                1
            }
        }
    })
}
