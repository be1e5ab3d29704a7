//! Turning command-line arguments and ideal files into a validated request.

use std::fmt;
use std::path::PathBuf;
use std::sync::Arc;

use charclass::{jacobian_ideal, parse_polynomial, Error, FieldPrime, Ideal, RandomPolicy, Ring, DEFAULT_PRIME};
use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Segre,
    Chern,
    Csm,
    Euler,
    EulerComplement,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Segre => "segre",
            Command::Chern => "chern",
            Command::Csm => "csm",
            Command::Euler => "euler",
            Command::EulerComplement => "euler-complement",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    List,
    Poly,
    Json,
}

/// Degrees of Segre, Chern and CSM classes, and Euler characteristics, of
/// projective schemes given by homogeneous ideals.
#[derive(Debug, Parser)]
#[command(name = "ccc", version)]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Comma-separated variable names x_0, ..., x_n of P^n.
    #[arg(long)]
    pub ring: Option<String>,
    /// Comma-separated homogeneous generators, or "0" for the zero ideal.
    #[arg(long, conflicts_with = "ideal_file")]
    pub ideal: Option<String>,
    /// File with `ring:`, optional `prime:` and `ideal:` sections.
    #[arg(long, value_name = "PATH")]
    pub ideal_file: Option<PathBuf>,
    /// Ideal of the removed closed set (euler-complement).
    #[arg(long)]
    pub ideal2: Option<String>,
    #[arg(long)]
    pub prime: Option<u64>,
    /// Seed for all random choices; drawn from entropy when absent.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 5)]
    pub retries: usize,
    /// Recompute with an independent seed and require agreement.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value_t = Format::List)]
    pub format: Format,
    /// Replace the single generator f by its Jacobian ideal.
    #[arg(long)]
    pub singular_locus: bool,
    #[arg(long)]
    pub jobs: Option<usize>,
}

/// Exit status 2: the input could not be read or is not valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

#[derive(Debug)]
pub struct Request {
    pub command: Command,
    pub ring: Arc<Ring>,
    pub ideal: Ideal,
    pub second: Option<Ideal>,
    pub policy: RandomPolicy,
    pub format: Format,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct IdealFile {
    pub ring: Option<Vec<String>>,
    pub prime: Option<u64>,
    /// Generator text with its 1-based line number.
    pub generators: Vec<(usize, String)>,
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile, InputError> {
    let mut out = IdealFile::default();
    let mut in_ideal = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if in_ideal {
            out.generators.push((line_no, line.to_string()));
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(InputError(format!("line {line_no}, column 1: expected `ring:`, `prime:` or `ideal:`")));
        };
        let value = value.trim();
        match key.trim() {
            "ring" => out.ring = Some(split_names(value)),
            "prime" => {
                let col = raw.find(':').unwrap_or(0) + 2;
                out.prime = Some(value.parse().map_err(|_| {
                    InputError(format!("line {line_no}, column {col}: expected a prime, found {value:?}"))
                })?);
            }
            "ideal" => {
                in_ideal = true;
                if !value.is_empty() {
                    out.generators.push((line_no, value.to_string()));
                }
            }
            other => {
                return Err(InputError(format!("line {line_no}, column 1: unknown section {other:?}")));
            }
        }
    }
    if !in_ideal {
        return Err(InputError("missing `ideal:` section".into()));
    }
    Ok(out)
}

fn split_names(s: &str) -> Vec<String> {
    s.split(',').map(|v| v.trim().to_string()).collect()
}

fn located(line: usize, e: Error) -> InputError {
    match e {
        Error::Parse { column, message } => InputError(format!("line {line}, column {column}: {message}")),
        other => InputError(other.to_string()),
    }
}

fn ideal_from_text(ring: &Arc<Ring>, text: &str, what: &str) -> Result<Ideal, InputError> {
    let gens = charclass::parse_generators(text, ring).map_err(|e| InputError(format!("{what}: {}", located(1, e))))?;
    Ideal::new(ring, gens).map_err(|e| InputError(format!("{what}: {e}")))
}

fn ideal_from_lines(ring: &Arc<Ring>, lines: &[(usize, String)]) -> Result<Ideal, InputError> {
    if lines.len() == 1 && lines[0].1 == "0" {
        return Ok(Ideal::zero(ring));
    }
    let mut gens = Vec::with_capacity(lines.len());
    for (line, text) in lines {
        gens.push(parse_polynomial(text, ring).map_err(|e| located(*line, e))?);
    }
    Ideal::new(ring, gens).map_err(|e| match e {
        Error::NotHomogeneous { index } => {
            InputError(format!("generator {index} is not homogeneous (line {})", lines[index - 1].0))
        }
        other => other.into(),
    })
}

fn agree<T: PartialEq + fmt::Debug>(flag: Option<T>, file: Option<T>, what: &str) -> Result<Option<T>, InputError> {
    match (flag, file) {
        (Some(a), Some(b)) if a != b => {
            Err(InputError(format!("--{what} {a:?} disagrees with the ideal file ({b:?})")))
        }
        (a, b) => Ok(a.or(b)),
    }
}

/// Validate `args`; `file_text` is the content of `--ideal-file` if given.
pub fn build_request(args: &Args, file_text: Option<&str>, seed: u64) -> Result<Request, InputError> {
    let file = file_text.map(parse_ideal_file).transpose()?;
    let flag_names = args.ring.as_deref().map(split_names);
    let names = agree(flag_names, file.as_ref().and_then(|f| f.ring.clone()), "ring")?
        .ok_or_else(|| InputError("no ring given: use --ring or a `ring:` line".into()))?;
    let prime = agree(args.prime, file.as_ref().and_then(|f| f.prime), "prime")?.unwrap_or(DEFAULT_PRIME as u64);
    let ring = Ring::new(&names, FieldPrime::new(prime)?)?;

    let mut ideal = match (&args.ideal, &file) {
        (Some(text), None) => ideal_from_text(&ring, text, "--ideal")?,
        (None, Some(f)) => ideal_from_lines(&ring, &f.generators)?,
        _ => return Err(InputError("give exactly one of --ideal and --ideal-file".into())),
    };
    ideal.check_characteristic()?;
    if args.singular_locus {
        let [f] = ideal.generators() else {
            return Err(InputError("--singular-locus needs exactly one generator".into()));
        };
        ideal = jacobian_ideal(f)?;
    }

    let second = match (args.command, &args.ideal2) {
        (Command::EulerComplement, Some(text)) => {
            let j = ideal_from_text(&ring, text, "--ideal2")?;
            j.check_characteristic()?;
            Some(j)
        }
        (Command::EulerComplement, None) => return Err(InputError("euler-complement needs --ideal2".into())),
        (_, Some(_)) => return Err(InputError("--ideal2 is only used by euler-complement".into())),
        (_, None) => None,
    };

    let policy = RandomPolicy { seed, max_retries: args.retries, verify: args.verify };
    Ok(Request { command: args.command, ring, ideal, second, policy, format: args.format })
}
