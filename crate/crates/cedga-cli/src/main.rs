use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use cedga_analysis::{Bounds, Parity};
use cedga_coeff::CoeffRing;

mod commands;
mod input;

use commands::Outcome;
use input::CliError;

#[derive(Parser, Debug)]
#[command(name = "cedga", version, about = "Symbolic engine for free DG algebras over idempotents")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Longest word searched (default: $CEDGA_MAX_LEN, else 6).
    #[arg(long, global = true, value_name = "N")]
    max_len: Option<usize>,
    /// Highest chord level searched.
    #[arg(long, global = true, value_name = "P")]
    max_level: Option<u32>,
    /// Word-length bound for rewriting completion.
    #[arg(long, global = true, value_name = "N")]
    degree_bound: Option<usize>,
    /// Reinterpret coefficients in another ring: Q, GF2 or laurent(a,b).
    #[arg(long, global = true, value_name = "RING")]
    ring: Option<CoeffRing>,
}

#[derive(Args, Debug)]
struct Input {
    /// `.cedga` file, or `-` for standard input.
    file: String,
    /// Presentation to use when the file declares several.
    #[arg(long, short)]
    presentation: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that the differential squares to zero.
    CheckD2(Input),
    /// Check that every differential raises degree by one.
    Grade(Input),
    /// Check that the differential flips word-length parity.
    Parity(Input),
    /// Degree-zero homology by rewriting.
    H0(Input),
    /// Search for x with ∂x = TARGET.
    Exact {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        target: String,
        #[arg(long)]
        parity: Option<Parity>,
    },
    /// Search for x with ∂x = 1.
    Trivial(Input),
    /// Check that a map commutes with the differentials.
    VerifyMap {
        file: String,
        #[arg(long)]
        map: Option<String>,
        /// Further files whose presentations the map may refer to.
        #[arg(long = "with", value_name = "FILE")]
        with: Vec<String>,
    },
    /// Check that an augmentation is a chain map to the ground ring.
    VerifyAug {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        aug: Option<String>,
    },
    /// Evaluate short generators by an augmentation.
    Linearize {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        aug: Option<String>,
        /// Write the result here instead of standard output.
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Word-length parity obstruction to extending a link map.
    Obstruct {
        file: String,
        /// Domain presentation (default: the source of the link map).
        #[arg(long)]
        domain: Option<String>,
        /// File, or presentation name, of the codomain.
        #[arg(long)]
        codomain: Option<String>,
        /// File, or map name, of the link map.
        #[arg(long)]
        link_map: Option<String>,
    },
    /// List or emit built-in examples.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        /// Write the bundle in the text format.
        #[arg(long)]
        emit: bool,
        #[arg(long, default_value_t = cedga_catalog::DEFAULT_P_MAX)]
        p_max: u32,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckD2(_) => "check-d2",
            Command::Grade(_) => "grade",
            Command::Parity(_) => "parity",
            Command::H0(_) => "h0",
            Command::Exact { .. } => "exact",
            Command::Trivial(_) => "trivial",
            Command::VerifyMap { .. } => "verify-map",
            Command::VerifyAug { .. } => "verify-aug",
            Command::Linearize { .. } => "linearize",
            Command::Obstruct { .. } => "obstruct",
            Command::Catalog { .. } => "catalog",
        }
    }
}

fn bounds(g: &Global) -> Result<Bounds, CliError> {
    let mut b = Bounds::default();
    if let Ok(v) = std::env::var("CEDGA_MAX_LEN") {
        b.max_word_length = v.trim().parse().map_err(|_| CliError::Usage(format!("CEDGA_MAX_LEN=`{v}` is not a length")))?;
    }
    if let Some(n) = g.max_len {
        b.max_word_length = n;
    }
    if let Some(p) = g.max_level {
        b.max_level = p;
    }
    if let Some(d) = g.degree_bound {
        b.degree_bound = d;
    }
    if b.max_word_length == 0 || b.degree_bound == 0 {
        return Err(CliError::Usage("bounds must be positive".into()));
    }
    Ok(b)
}

fn run(cli: &Cli, bounds: &Bounds) -> Result<Outcome, CliError> {
    let ring = cli.global.ring.as_ref();
    match &cli.command {
        Command::CheckD2(i) => commands::check_d2(&i.file, i.presentation.as_deref(), ring),
        Command::Grade(i) => commands::grade(&i.file, i.presentation.as_deref(), ring),
        Command::Parity(i) => commands::parity(&i.file, i.presentation.as_deref(), ring),
        Command::H0(i) => commands::h0(&i.file, i.presentation.as_deref(), ring, bounds),
        Command::Exact { input, target, parity } => {
            commands::exact(&input.file, input.presentation.as_deref(), ring, bounds, target, *parity)
        }
        Command::Trivial(i) => commands::trivial(&i.file, i.presentation.as_deref(), ring, bounds),
        Command::VerifyMap { file, map, with } => commands::verify_map(file, map.as_deref(), with, ring),
        Command::VerifyAug { input, aug } => {
            commands::verify_aug(&input.file, input.presentation.as_deref(), aug.as_deref(), ring)
        }
        Command::Linearize { input, aug, output } => {
            commands::linearize(&input.file, input.presentation.as_deref(), aug.as_deref(), output.as_deref(), ring)
        }
        Command::Obstruct { file, domain, codomain, link_map } => {
            commands::obstruct(file, domain.as_deref(), codomain.as_deref(), link_map.as_deref(), ring, bounds)
        }
        Command::Catalog { name, list, emit, p_max } => commands::catalog(name.as_deref(), *list, *emit, *p_max),
    }
}

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|info| eprintln!("error: internal failure: {info}")));
    let cli = Cli::parse();
    let start = Instant::now();
    let result = bounds(&cli.global).and_then(|b| run(&cli, &b).map(|o| (o, b)));
    let (outcome, bounds) = match result {
        Ok(r) => r,
        Err(e) => {
            if cli.global.json {
                let v = json!({ "command": cli.command.name(), "error": e.to_string() });
                println!("{v}");
            } else {
                eprintln!("error: {e}");
            }
            return ExitCode::from(2);
        }
    };
    let total_ms = start.elapsed().as_millis() as u64;
    if cli.global.json {
        let v = json!({
            "command": cli.command.name(),
            "verdict": outcome.verdict,
            "certificates": outcome.certificates,
            "bounds": {
                "max_word_length": bounds.max_word_length,
                "max_level": bounds.max_level,
                "degree_bound": bounds.degree_bound,
            },
            "timings": { "total_ms": total_ms },
        });
        println!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
    } else {
        print!("{}", outcome.text);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
