//! `bbscheme`: command-line access to border basis schemes, Gröbner basis
//! schemes and their point/ideal correspondences.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use bbscheme_core::gb::GbConfig;
use bbscheme_core::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "bbscheme", version, about = "Border basis schemes and Gröbner basis schemes over the rationals")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Order ideal as a comma-separated list of terms, e.g. "1,x,y,x*y".
    #[arg(short = 'O', long = "order-ideal", global = true)]
    pub order_ideal: Option<String>,
    /// File holding the order ideal (text grammar or JSON list of exponent maps).
    #[arg(long, global = true)]
    pub order_ideal_file: Option<PathBuf>,
    /// Number of variables; names are x, y, z for n ≤ 3 and x1..xn beyond.
    #[arg(short = 'n', long, global = true)]
    pub n: Option<usize>,
    /// Term ordering σ on the x-variables.
    #[arg(long, value_enum, default_value_t = Sigma::Degrevlex, global = true)]
    pub sigma: Sigma,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Cutoff on the number of Gröbner basis elements.
    #[arg(long, global = true)]
    pub max_basis: Option<usize>,
    /// Cutoff on the degree of S-polynomials.
    #[arg(long, global = true)]
    pub max_degree: Option<u64>,
    /// Cutoff on the number of S-pairs processed.
    #[arg(long, global = true)]
    pub max_pairs: Option<usize>,
}

impl Common {
    pub fn gb_config(&self) -> GbConfig {
        let d = GbConfig::default();
        GbConfig {
            max_basis: self.max_basis.unwrap_or(d.max_basis),
            max_degree: self.max_degree.unwrap_or(d.max_degree),
            max_pairs: self.max_pairs.unwrap_or(d.max_pairs),
            ..d
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sigma {
    Lex,
    Deglex,
    Degrevlex,
}

impl Sigma {
    pub fn name(self) -> &'static str {
        match self {
            Sigma::Lex => "lex",
            Sigma::Deglex => "deglex",
            Sigma::Degrevlex => "degrevlex",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum RouteName {
    Substitution,
    Reduction,
    #[value(alias = "elimination-oracle")]
    Elimination,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    /// Reduce by the admissible corner with the smallest index.
    Smallest,
    /// Reduce by the admissible corner with the largest index.
    Largest,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeIdeal {
    BorderScheme,
    GbScheme,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preprocess {
    Linear,
    None,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an order ideal and list its border and corners.
    Validate,
    /// Generators of the border basis scheme ideal.
    BorderScheme {
        /// Also print the formal multiplication matrices.
        #[arg(long)]
        matrices: bool,
    },
    /// Generators of the Gröbner basis scheme ideal.
    GbScheme {
        #[arg(long, value_enum, default_value_t = RouteName::Substitution)]
        route: RouteName,
        /// Reducer choice for the reduction route.
        #[arg(long, value_enum, default_value_t = Policy::Smallest)]
        policy: Policy,
        /// Process S-pairs in reverse order on the reduction route.
        #[arg(long)]
        reverse_pairs: bool,
        /// Build the ideal along a second route and compare reduced Gröbner bases.
        #[arg(long, value_enum)]
        cross_check: Option<RouteName>,
    },
    /// Positive weights making the scheme ideals homogeneous.
    Weights {
        /// Also check the four homogeneity claims.
        #[arg(long)]
        verify: bool,
    },
    /// Decide whether a point lies on the border basis scheme and on the Gröbner basis scheme.
    CheckPoint {
        /// JSON file of the form {"c": {"i,j": "p/q", ...}}.
        #[arg(long)]
        point: PathBuf,
    },
    /// Ideal → point → ideal, or point → ideal → point.
    RoundTrip {
        /// Generators of a zero-dimensional ideal in the x-variables.
        #[arg(long, conflicts_with = "point")]
        ideal: Option<String>,
        /// A point of the Gröbner basis scheme of the order ideal given by -O.
        #[arg(long)]
        point: Option<PathBuf>,
    },
    /// Flat family through a point degenerating to the corner monomials.
    Deform {
        #[arg(long)]
        point: PathBuf,
        /// Parameter values whose fibers are printed.
        #[arg(long = "at", allow_negative_numbers = true)]
        at: Vec<String>,
    },
    /// Decide whether the Gröbner basis scheme is an affine space by linear eliminations.
    AffineCell,
    /// Krull dimension of a scheme ideal.
    Dimension {
        #[arg(long, value_enum, default_value_t = SchemeIdeal::BorderScheme)]
        ideal: SchemeIdeal,
        #[arg(long, value_enum, default_value_t = Preprocess::Linear)]
        preprocess: Preprocess,
    },
}

/// A failed run: message and exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(msg: impl Into<String>) -> Self {
        Failure {
            code: 4,
            message: msg.into(),
        }
    }

    pub fn math(msg: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: msg.into(),
        }
    }
}

impl From<bbscheme_core::Error> for Failure {
    fn from(e: bbscheme_core::Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Math => 2,
            ErrorKind::Resource => 3,
            ErrorKind::Input => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli.common, &cli.command) {
        Ok(out) => {
            match cli.common.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            match out.failure {
                Some(f) => {
                    eprintln!("error: {}", f.message);
                    ExitCode::from(f.code)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
