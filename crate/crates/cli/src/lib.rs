//! Command implementations behind the `circulant-trees` binary.

pub mod args;

use std::fmt::Write as _;
use std::time::Instant;

use circulant_trees::closed_form::{asymptotic_target, convergence_point};
use circulant_trees::{
    betaproduct_count, cycle_power_count, cycle_power_instance, reduce_to_instance, tau_directed,
    tau_eigenproduct_count, tau_undirected, theorem1_count, theorem2_count, CountResult, CyclePowerVariant,
    PrecisionBudget,
};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use args::{Cli, Command, Family, Method, PrecisionArgs};

/// Largest vertex count the oracle methods accept.
pub const ORACLE_LIMIT: u64 = 2000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Exhausted(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Invalid(_) => 2,
            Self::Exhausted(_) => 3,
            Self::Failed(_) => 1,
        }
    }
}

impl From<circulant_trees::Error> for CliError {
    fn from(e: circulant_trees::Error) -> Self {
        use circulant_trees::Error as E;
        match e {
            E::InvalidSpec(_) | E::IndexOutOfRange { .. } => Self::Invalid(e.to_string()),
            E::PrecisionExhausted { .. } => Self::Exhausted(e.to_string()),
            _ => Self::Failed(e.to_string()),
        }
    }
}

/// Text for stdout plus the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

#[derive(Serialize, Debug, Clone)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum SpecEcho {
    Digraph {
        beta: u64,
        n: u64,
        p: u64,
        gammas: Vec<u64>,
    },
    CyclePower {
        beta: u64,
        n: u64,
        power: &'static str,
    },
}

fn power_name(v: CyclePowerVariant) -> &'static str {
    match v {
        CyclePowerVariant::PowerN => "n",
        CyclePowerVariant::PowerNMinus1 => "n-1",
    }
}

impl From<&Family> for SpecEcho {
    fn from(f: &Family) -> Self {
        match f {
            Family::Digraph(s) => Self::Digraph {
                beta: s.beta(),
                n: s.n(),
                p: s.p(),
                gammas: s.gammas().to_vec(),
            },
            Family::CyclePower(s) => Self::CyclePower {
                beta: s.beta(),
                n: s.n(),
                power: power_name(s.variant()),
            },
        }
    }
}

#[derive(Serialize, Debug)]
pub struct CountReport {
    pub spec: SpecEcho,
    pub method: &'static str,
    pub count: String,
    pub certified: bool,
    pub bits_used: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Serialize, Debug)]
struct MethodEntry {
    method: &'static str,
    count: String,
    bits_used: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

#[derive(Serialize, Debug)]
struct CompareReport {
    spec: SpecEcho,
    methods: Vec<MethodEntry>,
    agree: bool,
}

fn budget(p: PrecisionArgs) -> Result<PrecisionBudget, CliError> {
    Ok(PrecisionBudget::new(p.bits_start, p.bits_cap)?)
}

fn default_method(family: &Family) -> Method {
    match family {
        Family::Digraph(_) => Method::Theorem1,
        Family::CyclePower(_) => Method::CyclePower,
    }
}

fn applicable_methods(family: &Family) -> Vec<Method> {
    match family {
        Family::Digraph(s) => {
            let mut m = vec![Method::Theorem1];
            if s.d() == 2 {
                m.push(Method::Theorem2);
            }
            m.extend([Method::Betaproduct, Method::MatrixTree, Method::Eigenproduct]);
            m
        }
        Family::CyclePower(_) => vec![Method::CyclePower, Method::MatrixTree, Method::Eigenproduct],
    }
}

/// Runs one method on one spec.
pub fn compute(family: &Family, method: Method, budget: PrecisionBudget) -> Result<CountResult, CliError> {
    if method.is_oracle() && family.order() > ORACLE_LIMIT {
        return Err(CliError::Invalid(format!(
            "{} refuses graphs with more than {ORACLE_LIMIT} vertices (this one has {})",
            method.name(),
            family.order()
        )));
    }
    let not_applicable = || CliError::Invalid(format!("method {} does not apply to this family", method.name()));
    let result = match (family, method) {
        (Family::Digraph(s), Method::Theorem1) => theorem1_count(s, budget)?,
        (Family::Digraph(s), Method::Theorem2) => theorem2_count(s, budget)?,
        (Family::Digraph(s), Method::Betaproduct) => betaproduct_count(s, budget)?,
        (Family::CyclePower(s), Method::CyclePower) => cycle_power_count(s, budget)?,
        (Family::Digraph(s), Method::MatrixTree) => CountResult::exact(tau_directed(&reduce_to_instance(s)?)?),
        (Family::CyclePower(s), Method::MatrixTree) => {
            CountResult::exact(tau_undirected(&cycle_power_instance(s)?)?)
        }
        (Family::Digraph(s), Method::Eigenproduct) => tau_eigenproduct_count(&reduce_to_instance(s)?, budget)?,
        (Family::CyclePower(s), Method::Eigenproduct) => {
            tau_eigenproduct_count(&cycle_power_instance(s)?, budget)?
        }
        _ => return Err(not_applicable()),
    };
    Ok(result)
}

fn timed<T>(on: bool, f: impl FnOnce() -> T) -> (T, Option<f64>) {
    let start = Instant::now();
    let out = f();
    let ms = on.then(|| start.elapsed().as_secs_f64() * 1e3);
    (out, ms)
}

fn to_json<T: Serialize>(v: &T) -> Result<String, CliError> {
    serde_json::to_string(v)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Failed(e.to_string()))
}

fn cmd_count(family: Family, method: Option<Method>, p: PrecisionArgs, timing: bool) -> Result<Outcome, CliError> {
    let method = method.unwrap_or_else(|| default_method(&family));
    let budget = budget(p)?;
    let (result, elapsed_ms) = timed(timing, || compute(&family, method, budget));
    let result = result?;
    let report = CountReport {
        spec: SpecEcho::from(&family),
        method: method.name(),
        count: result.count.to_string(),
        certified: true,
        bits_used: result.bits_used,
        reason: result.zero_reason.map(|r| r.as_str()),
        elapsed_ms,
    };
    Ok(Outcome {
        stdout: to_json(&report)?,
        code: 0,
    })
}

fn cmd_compare(family: Family, p: PrecisionArgs, timing: bool) -> Result<Outcome, CliError> {
    let budget = budget(p)?;
    let mut methods = applicable_methods(&family);
    if family.order() > ORACLE_LIMIT {
        eprintln!(
            "note: skipping oracle methods, {} vertices exceeds the limit of {ORACLE_LIMIT}",
            family.order()
        );
        methods.retain(|m| !m.is_oracle());
    }
    let results: Vec<_> = methods
        .par_iter()
        .map(|&m| (m, timed(timing, || compute(&family, m, budget))))
        .collect();
    let mut entries = Vec::new();
    for (m, (result, elapsed_ms)) in results {
        let result = result?;
        entries.push(MethodEntry {
            method: m.name(),
            count: result.count.to_string(),
            bits_used: result.bits_used,
            reason: result.zero_reason.map(|r| r.as_str()),
            elapsed_ms,
        });
    }
    let agree = entries.windows(2).all(|w| w[0].count == w[1].count);
    if !agree {
        eprintln!("methods disagree");
    }
    let report = CompareReport {
        spec: SpecEcho::from(&family),
        methods: entries,
        agree,
    };
    Ok(Outcome {
        stdout: to_json(&report)?,
        code: if agree { 0 } else { 1 },
    })
}

fn cmd_sweep(
    template: args::FamilyTemplate,
    ns: Vec<u64>,
    method: Option<Method>,
    p: PrecisionArgs,
    timing: bool,
) -> Result<Outcome, CliError> {
    let budget = budget(p)?;
    let families = ns.iter().map(|&n| template.at(n)).collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<_> = families
        .par_iter()
        .map(|f| {
            let m = method.unwrap_or_else(|| default_method(f));
            timed(timing, || compute(f, m, budget))
        })
        .collect();
    let mut out = String::new();
    match &template {
        args::FamilyTemplate::Digraph(_) => out.push_str("beta,n,p,gammas,count,reason"),
        args::FamilyTemplate::CyclePower { .. } => out.push_str("beta,n,power,count"),
    }
    out.push_str(if timing { ",elapsed_ms\n" } else { "\n" });
    for (family, (result, elapsed_ms)) in families.iter().zip(rows) {
        let result = result?;
        match family {
            Family::Digraph(s) => {
                let gammas: Vec<String> = s.gammas().iter().map(u64::to_string).collect();
                let reason = result.zero_reason.map(|r| r.as_str()).unwrap_or("");
                let _ = write!(
                    out,
                    "{},{},{},{},{},\"{}\"",
                    s.beta(),
                    s.n(),
                    s.p(),
                    gammas.join(";"),
                    result.count,
                    reason
                );
            }
            Family::CyclePower(s) => {
                let _ = write!(out, "{},{},{},{}", s.beta(), s.n(), power_name(s.variant()), result.count);
            }
        }
        if let Some(ms) = elapsed_ms {
            let _ = write!(out, ",{ms:.3}");
        }
        out.push('\n');
    }
    Ok(Outcome { stdout: out, code: 0 })
}

fn cmd_converge(template: args::FamilyTemplate, ns: Vec<u64>, p: PrecisionArgs) -> Result<Outcome, CliError> {
    let args::FamilyTemplate::CyclePower { beta, variant } = template else {
        return Err(CliError::Invalid("converge needs a cycle power family".into()));
    };
    let budget = budget(p)?;
    let specs = ns
        .iter()
        .map(|&n| Ok(circulant_trees::CyclePowerSpec::new(beta, n, variant)?))
        .collect::<Result<Vec<_>, CliError>>()?;
    let points: Vec<_> = specs.par_iter().map(|s| convergence_point(s, budget)).collect();
    let target = asymptotic_target(beta, variant, 128).to_f64();
    let mut out = String::from("n,ratio,target,relative_error\n");
    for point in points {
        let point = point?;
        let _ = writeln!(
            out,
            "{},{:.16e},{:.16e},{:.16e}",
            point.spec.n(),
            point.ratio.to_f64(),
            target,
            point.relative_error.to_f64()
        );
    }
    Ok(Outcome { stdout: out, code: 0 })
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Count {
            family,
            method,
            precision,
            timing,
        } => cmd_count(args::parse_family(&family)?, method, precision, timing),
        Command::Compare {
            family,
            precision,
            timing,
        } => cmd_compare(args::parse_family(&family)?, precision, timing),
        Command::Sweep {
            family,
            method,
            precision,
            timing,
        } => cmd_sweep(
            args::parse_range_template(&family)?,
            args::parse_n_range(&family.n)?,
            method,
            precision,
            timing,
        ),
        Command::Converge {
            cycle_power_family,
            n,
            precision,
        } => cmd_converge(
            args::parse_cycle_power_family(&cycle_power_family)?,
            args::parse_n_range(&n)?,
            precision,
        ),
    }
}
