use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "yugong", version, about = "Yu-Gong sequences: construction, autocorrelation and 2-adic complexity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for profile and scan computations (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit one sequence in ASCII and packed hex with its parameters.
    Generate(GenerateArgs),
    /// Reproduce the autocorrelation tables (1-3) and the complexity table (4).
    Tables(TablesArgs),
    /// Run the autocorrelation, congruence and gcd checks for a range of k.
    Verify(VerifyArgs),
    /// Prime and conjecture scans over k = 0 mod 4.
    Scan(ScanArgs),
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Sign parameter of the shift matrix.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true, value_parser = parse_delta)]
    pub delta: i64,

    /// Primitive modulus of GF(2^(2k)) as a hex bitmask, e.g. 0x13.
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long)]
    pub k: u32,
    #[command(flatten)]
    pub field: FieldArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct TablesArgs {
    /// Table to reproduce; all four when omitted.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub which: Option<u8>,

    /// Largest k for table 4.
    #[arg(long = "k-max", alias = "max-k", default_value_t = 5)]
    pub k_max: u32,

    #[command(flatten)]
    pub field: FieldArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// A single k or an inclusive range `a..b`.
    #[arg(long, default_value = "2..5")]
    pub k: KRange,

    #[arg(long, value_enum)]
    pub only: Option<Suite>,

    /// Largest k for which gcd operands of ~2^(k+1) bits are built.
    #[arg(long = "size-cap", default_value_t = yugong::adic::DEFAULT_SIZE_CAP)]
    pub size_cap: u32,

    #[command(flatten)]
    pub field: FieldArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    /// List k = 0 mod 4 up to --k-max with 2^(2k-1) - 2^k + 1 prime.
    #[arg(long, conflicts_with = "conjecture", required_unless_present = "conjecture")]
    pub primes: bool,

    /// gcd(2^(2k-1) - 2^k + 1, (2^(2(2^k+1)) + 1)/5) for each k in --ks.
    #[arg(long)]
    pub conjecture: bool,

    #[arg(long = "k-max", alias = "max-k", default_value_t = 24)]
    pub k_max: u32,

    #[arg(long, value_delimiter = ',', default_values_t = [4u32, 8, 12])]
    pub ks: Vec<u32>,

    #[arg(long = "size-cap", default_value_t = yugong::adic::DEFAULT_SIZE_CAP)]
    pub size_cap: u32,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Struct,
    Paper,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    Congruences,
    Lemma2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KRange {
    pub lo: u32,
    pub hi: u32,
}

impl KRange {
    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad k {t:?}: {e}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let k = parse(s)?;
                (k, k)
            }
        };
        if lo == 0 || lo > hi {
            return Err(format!("empty or invalid k range {s:?}"));
        }
        Ok(KRange { lo, hi })
    }
}

impl fmt::Display for KRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

fn parse_delta(s: &str) -> Result<i64, String> {
    match s.trim() {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        other => Err(format!("delta must be 1 or -1, got {other}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_ranges() {
        assert_eq!("3".parse::<KRange>().unwrap(), KRange { lo: 3, hi: 3 });
        assert_eq!("2..5".parse::<KRange>().unwrap(), KRange { lo: 2, hi: 5 });
        assert_eq!("2..=5".parse::<KRange>().unwrap(), KRange { lo: 2, hi: 5 });
        assert!("5..2".parse::<KRange>().is_err());
        assert!("0".parse::<KRange>().is_err());
        assert!("x".parse::<KRange>().is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
