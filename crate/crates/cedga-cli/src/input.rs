use std::io::Read;
use std::path::Path;

use cedga_algebra::Presentation;
use cedga_coeff::CoeffRing;
use cedga_dsl::{parse_with_context, serialize, Bundle};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{source}")]
    Parse { path: String, source: cedga_dsl::ParseError },
    #[error("{0}")]
    Engine(String),
}

impl CliError {
    pub fn engine(e: impl std::fmt::Display) -> CliError {
        CliError::Engine(e.to_string())
    }
}

/// Reads `path`, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

pub fn is_file(arg: &str) -> bool {
    arg == "-" || Path::new(arg).is_file()
}

/// Parses `path`, reinterpreting coefficients in `ring` when given.
pub fn load(path: &str, ring: Option<&CoeffRing>, context: &[&Bundle]) -> Result<Bundle, CliError> {
    let text = read_source(path)?;
    let parse = |text: &str| parse_with_context(text, context).map_err(|source| CliError::Parse { path: path.to_string(), source });
    let b = parse(&text)?;
    match ring {
        Some(r) if *r != b.ring => {
            let canonical = serialize(&b);
            let body = canonical.split_once('\n').map_or("", |(_, rest)| rest);
            parse(&format!("ring {r}\n{body}"))
        }
        _ => Ok(b),
    }
}

/// The presentation called `name`, or the bundle's main one.
pub fn pick<'a>(b: &'a Bundle, name: Option<&str>) -> Result<&'a Presentation, CliError> {
    match name {
        Some(n) => b.presentation(n).ok_or_else(|| CliError::Usage(format!("no presentation named `{n}`"))),
        None => b.main().ok_or_else(|| {
            let names: Vec<&str> = b.presentations.keys().map(String::as_str).collect();
            CliError::Usage(if names.is_empty() {
                "the input declares no presentation".into()
            } else {
                format!("several presentations ({}); choose one with --presentation", names.join(", "))
            })
        }),
    }
}

/// The presentation `name` from the first bundle that has it.
pub fn find<'a>(bundles: &[&'a Bundle], name: &str) -> Result<&'a Presentation, CliError> {
    bundles
        .iter()
        .find_map(|b| b.presentation(name))
        .ok_or_else(|| CliError::Usage(format!("no presentation named `{name}`")))
}
