use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Budgets below this are rejected.
pub const MIN_BUDGET: u64 = 1 << 10;
/// Without `--long`, the budget is clamped here (roughly a minute of single-core enumeration).
pub const SHORT_BUDGET_CAP: u64 = 1 << 32;

#[derive(Parser, Debug)]
#[command(name = "tdesign", version, about = "Linear codes, MacWilliams spectra and the t-designs they hold")]
pub struct Cli {
    /// Maximum number of enumeration steps per computation.
    #[arg(long, global = true, env = "TDESIGN_BUDGET", default_value_t = tdesign::codes::DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(MIN_BUDGET..))]
    pub budget: u64,

    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1u64..))]
    pub workers: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Allow budgets above the short-run cap.
    #[arg(long, global = true)]
    pub long: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weight distribution of a code by brute force, MacWilliams or closed form.
    Spectrum(SpectrumArgs),
    /// Assmus–Mattson prediction followed by exhaustive design verification.
    Designs(DesignsArgs),
    /// Run the projective-code conjecture harness.
    Conjectures(ConjecturesArgs),
    /// Evaluate a tabulated dual spectrum and confirm it by enumeration.
    Reproduce(ReproduceArgs),
    /// Print a code's parameters and generator matrix.
    Code(CodeArgs),
    /// Differential uniformity of x^s over GF(q^m).
    Differential(DifferentialArgs),
}

#[derive(Args, Debug, Clone)]
pub struct SelectorArgs {
    /// Two-zero code from an exponent family (gold, kasami, welch, niho-1mod4, niho-3mod4, planar-3h1, planar-half, raw).
    #[arg(long)]
    pub family: Option<String>,
    /// Family parameter h.
    #[arg(long)]
    pub h: Option<u32>,
    /// Exponent s (overrides the family formula).
    #[arg(long)]
    pub s: Option<u64>,
    /// Reed–Muller code RM(r, m).
    #[arg(long, value_name = "R")]
    pub rm: Option<u32>,
    /// RM(m-2, m).
    #[arg(long)]
    pub rm_dual: bool,
    /// Hamming-like code over GF(q).
    #[arg(long)]
    pub hamming: bool,
    /// Projective ternary code of length (3^m-1)/2.
    #[arg(long, value_enum)]
    pub projective: Option<Projective>,
    /// Field characteristic for --hamming and raw exponents.
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long)]
    pub m: u32,
    /// Append an overall parity coordinate.
    #[arg(long)]
    pub extended: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Projective {
    Bch,
    TwoZero,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Macwilliams,
    ClosedForm,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Code,
    Dual,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub selector: SelectorArgs,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = SideArg::Code)]
    pub side: SideArg,
}

#[derive(Args, Debug)]
pub struct DesignsArgs {
    #[command(flatten)]
    pub selector: SelectorArgs,
    #[arg(long)]
    pub t: usize,
    /// Comma list of weights: N (code), dN (dual), or one of all, primal, dual, predicted.
    #[arg(long, default_value = "predicted")]
    pub weights: String,
    /// Include the blocks of every verified design in the JSON report.
    #[arg(long)]
    pub blocks: bool,
}

#[derive(Args, Debug)]
pub struct ConjecturesArgs {
    #[arg(long, default_value_t = 3)]
    pub m: u32,
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    /// 1, 2, 3 or gg2 (the projective ternary table).
    #[arg(long)]
    pub table: String,
    #[arg(long)]
    pub m: u32,
}

#[derive(Args, Debug)]
pub struct CodeArgs {
    #[command(flatten)]
    pub selector: SelectorArgs,
    #[arg(long, value_enum, default_value_t = SideArg::Code)]
    pub side: SideArg,
}

#[derive(Args, Debug)]
pub struct DifferentialArgs {
    #[arg(long)]
    pub s: Option<u64>,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub h: Option<u32>,
    #[arg(long)]
    pub m: u32,
    /// Characteristic, when --family does not fix it.
    #[arg(long, default_value_t = 2)]
    pub q: u32,
}
