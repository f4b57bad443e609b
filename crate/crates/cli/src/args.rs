use std::str::FromStr;

use circulant_trees::{CyclePowerSpec, CyclePowerVariant, DirectedCirculantSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "circulant-trees", version, about = "Spanning tree counts for circulant graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count with one method and print a JSON report.
    Count {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        precision: PrecisionArgs,
        /// Include elapsed wall time in the output.
        #[arg(long)]
        timing: bool,
    },
    /// Run every applicable method and check that they agree.
    Compare {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        precision: PrecisionArgs,
        #[arg(long)]
        timing: bool,
    },
    /// Count a one-parameter family over a range of n, as CSV.
    Sweep {
        #[command(flatten)]
        family: FamilyRangeArgs,
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        precision: PrecisionArgs,
        #[arg(long)]
        timing: bool,
    },
    /// Ratio of the cycle power count to its leading-order growth, as CSV.
    Converge {
        /// `beta,n[,n|n-1]`
        #[arg(long, value_name = "SPEC")]
        cycle_power_family: String,
        #[arg(long, value_name = "RANGE")]
        n: String,
        #[command(flatten)]
        precision: PrecisionArgs,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct FamilyArgs {
    /// `beta,n,p,g1[,g2...]`
    #[arg(long, value_name = "SPEC")]
    pub digraph: Option<String>,
    /// `beta,n,{n|n-1}`
    #[arg(long, value_name = "SPEC")]
    pub cycle_power: Option<String>,
}

#[derive(Args, Debug)]
pub struct FamilyRangeArgs {
    /// `beta,n,p,g1[,g2...]` with a literal `n`
    #[arg(long, value_name = "SPEC", conflicts_with = "cycle_power_family", required_unless_present = "cycle_power_family")]
    pub digraph_family: Option<String>,
    /// `beta,n[,n|n-1]`
    #[arg(long, value_name = "SPEC")]
    pub cycle_power_family: Option<String>,
    /// `a..b` (inclusive) or `n1,n2,...`
    #[arg(long, value_name = "RANGE")]
    pub n: String,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct PrecisionArgs {
    #[arg(long, default_value_t = 128)]
    pub bits_start: u32,
    #[arg(long, default_value_t = 65536)]
    pub bits_cap: u32,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Theorem1,
    Theorem2,
    Betaproduct,
    CyclePower,
    MatrixTree,
    Eigenproduct,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Self::Theorem1 => "theorem1",
            Self::Theorem2 => "theorem2",
            Self::Betaproduct => "betaproduct",
            Self::CyclePower => "cycle-power",
            Self::MatrixTree => "matrix-tree",
            Self::Eigenproduct => "eigenproduct",
        }
    }

    pub fn is_oracle(self) -> bool {
        matches!(self, Self::MatrixTree | Self::Eigenproduct)
    }
}

#[derive(Clone, Debug)]
pub enum Family {
    Digraph(DirectedCirculantSpec),
    CyclePower(CyclePowerSpec),
}

impl Family {
    pub fn order(&self) -> u64 {
        match self {
            Self::Digraph(s) => s.order(),
            Self::CyclePower(s) => s.order(),
        }
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

fn number<T: FromStr>(field: &str, what: &str) -> Result<T, CliError> {
    field
        .trim()
        .parse()
        .map_err(|_| invalid(format!("{what}: expected a number, got {field:?}")))
}

fn fields(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).collect()
}

fn variant(field: &str) -> Result<CyclePowerVariant, CliError> {
    match field {
        "n" => Ok(CyclePowerVariant::PowerN),
        "n-1" => Ok(CyclePowerVariant::PowerNMinus1),
        other => Err(invalid(format!("power must be n or n-1, got {other:?}"))),
    }
}

pub fn parse_digraph(s: &str) -> Result<DirectedCirculantSpec, CliError> {
    let f = fields(s);
    if f.len() < 4 {
        return Err(invalid("--digraph needs beta,n,p,g1[,g2...]"));
    }
    digraph_with_n(&f, number(f[1], "n")?)
}

fn digraph_with_n(f: &[&str], n: u64) -> Result<DirectedCirculantSpec, CliError> {
    let beta = number(f[0], "beta")?;
    let p = number(f[2], "p")?;
    let gammas = f[3..].iter().map(|g| number(g, "gamma")).collect::<Result<Vec<u64>, _>>()?;
    Ok(DirectedCirculantSpec::new(beta, n, p, gammas)?)
}

pub fn parse_cycle_power(s: &str) -> Result<CyclePowerSpec, CliError> {
    let f = fields(s);
    if f.len() != 3 {
        return Err(invalid("--cycle-power needs beta,n,{n|n-1}"));
    }
    Ok(CyclePowerSpec::new(number(f[0], "beta")?, number(f[1], "n")?, variant(f[2])?)?)
}

pub fn parse_family(args: &FamilyArgs) -> Result<Family, CliError> {
    match (&args.digraph, &args.cycle_power) {
        (Some(d), None) => Ok(Family::Digraph(parse_digraph(d)?)),
        (None, Some(c)) => Ok(Family::CyclePower(parse_cycle_power(c)?)),
        _ => Err(invalid("give exactly one of --digraph or --cycle-power")),
    }
}

/// A family with `n` left free.
#[derive(Clone, Debug)]
pub enum FamilyTemplate {
    Digraph(Vec<String>),
    CyclePower { beta: u64, variant: CyclePowerVariant },
}

impl FamilyTemplate {
    pub fn at(&self, n: u64) -> Result<Family, CliError> {
        match self {
            Self::Digraph(f) => {
                let f: Vec<&str> = f.iter().map(String::as_str).collect();
                Ok(Family::Digraph(digraph_with_n(&f, n)?))
            }
            Self::CyclePower { beta, variant } => Ok(Family::CyclePower(CyclePowerSpec::new(*beta, n, *variant)?)),
        }
    }
}

fn check_free_n(field: &str, flag: &str) -> Result<(), CliError> {
    if field != "n" {
        return Err(invalid(format!("{flag}: second field must be the letter n")));
    }
    Ok(())
}

pub fn parse_digraph_family(s: &str) -> Result<FamilyTemplate, CliError> {
    let f = fields(s);
    if f.len() < 4 {
        return Err(invalid("--digraph-family needs beta,n,p,g1[,g2...]"));
    }
    check_free_n(f[1], "--digraph-family")?;
    Ok(FamilyTemplate::Digraph(f.iter().map(|x| x.to_string()).collect()))
}

pub fn parse_cycle_power_family(s: &str) -> Result<FamilyTemplate, CliError> {
    let f = fields(s);
    if !(2..=3).contains(&f.len()) {
        return Err(invalid("--cycle-power-family needs beta,n[,n|n-1]"));
    }
    check_free_n(f[1], "--cycle-power-family")?;
    let variant = match f.get(2) {
        Some(v) => variant(v)?,
        None => CyclePowerVariant::PowerN,
    };
    Ok(FamilyTemplate::CyclePower {
        beta: number(f[0], "beta")?,
        variant,
    })
}

pub fn parse_range_template(args: &FamilyRangeArgs) -> Result<FamilyTemplate, CliError> {
    match (&args.digraph_family, &args.cycle_power_family) {
        (Some(d), None) => parse_digraph_family(d),
        (None, Some(c)) => parse_cycle_power_family(c),
        _ => Err(invalid("give exactly one of --digraph-family or --cycle-power-family")),
    }
}

/// `a..b` is inclusive; otherwise a comma list. Values must be ascending.
pub fn parse_n_range(s: &str) -> Result<Vec<u64>, CliError> {
    let values: Vec<u64> = if let Some((a, b)) = s.split_once("..") {
        let (a, b): (u64, u64) = (number(a, "range start")?, number(b, "range end")?);
        (a..=b).collect()
    } else {
        fields(s).iter().map(|x| number(x, "n")).collect::<Result<_, _>>()?
    };
    if values.is_empty() {
        return Err(invalid(format!("empty range {s:?}")));
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid(format!("n values must be strictly ascending in {s:?}")));
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_n_range("1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_n_range("50,100,200").unwrap(), vec![50, 100, 200]);
        assert!(parse_n_range("3..1").is_err());
        assert!(parse_n_range("2,2").is_err());
        assert!(parse_n_range("x").is_err());
    }

    #[test]
    fn specs() {
        let d = parse_digraph("3,2,3,2").unwrap();
        assert_eq!((d.beta(), d.n(), d.p(), d.gammas()), (3, 2, 3, &[2u64][..]));
        assert!(parse_digraph("3,2,3").is_err());
        assert!(parse_digraph("3,2,3,9").is_err());
        let c = parse_cycle_power("4,3,n-1").unwrap();
        assert_eq!(c.variant(), CyclePowerVariant::PowerNMinus1);
        assert!(parse_cycle_power("4,3,n+1").is_err());
        assert!(parse_digraph_family("3,5,3,2").is_err());
        let t = parse_cycle_power_family("3,n").unwrap();
        assert!(matches!(t.at(2).unwrap(), Family::CyclePower(s) if s.variant() == CyclePowerVariant::PowerN));
    }
}
