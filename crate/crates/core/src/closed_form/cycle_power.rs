//! Cycle power graphs `C^n_{βn}` and `C^{n−1}_{βn}`.

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::certify::{certify_integer, PrecisionBudget};
use crate::closed_form::digraph::half_range;
use crate::count::{CountResult, TreeCount};
use crate::error::{Error, Result};
use crate::graph::{CyclePowerSpec, CyclePowerVariant};
use crate::interval::{ComplexInterval, Interval};

fn exponent(e: u64) -> Result<u32> {
    u32::try_from(e).map_err(|_| Error::InvalidSpec(format!("exponent {e} too large")))
}

/// The leading factor
/// `2^{β(n+1)}/(2β)² · n^{βn−2} · (1 ± 1/(2n))^{βn} · tail^n`, kept as its
/// printed components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclePowerPrefactor {
    /// `2^{β(n+1)}`
    pub power_of_two: Integer,
    /// `(2β)²`
    pub denominator: Integer,
    /// `n^{βn−2}`, the clique factor.
    pub clique: Rational,
    /// `(1 + 1/(2n))^{βn}` or `(1 − 1/(2n))^{βn}`
    pub half_step: Rational,
    /// `(1 − (2n+1)^{−β})^n` or `|(−1)^β − (2n−1)^{−β}|^n`
    pub tail: Rational,
}

impl CyclePowerPrefactor {
    pub fn new(spec: &CyclePowerSpec) -> Result<Self> {
        let (beta, n) = (spec.beta(), spec.n());
        let b = exponent(beta)?;
        let nn = exponent(n)?;
        let power_of_two = Integer::from(1) << exponent(beta * (n + 1))?;
        let denominator = Integer::from(2 * beta).pow(2);
        let clique = Rational::from(Integer::from(n).pow(exponent(beta * n - 2)?));
        let two_n = Integer::from(2 * n);
        let (step_num, tail_base) = match spec.variant() {
            CyclePowerVariant::PowerN => {
                let a = Integer::from(2 * n + 1);
                let inv = Rational::from((Integer::from(1), a.pow(b)));
                (Integer::from(2 * n + 1), Rational::from(1) - inv)
            }
            CyclePowerVariant::PowerNMinus1 => {
                let a = Integer::from(2 * n - 1);
                let inv = Rational::from((Integer::from(1), a.pow(b)));
                let sign = Rational::from(if beta % 2 == 0 { 1 } else { -1 });
                (Integer::from(2 * n - 1), (sign - inv).abs())
            }
        };
        let half_step = Rational::from((step_num, two_n)).pow(exponent(beta * n)?);
        let tail = tail_base.pow(nn);
        Ok(Self {
            power_of_two,
            denominator,
            clique,
            half_step,
            tail,
        })
    }

    pub fn value(&self) -> Rational {
        let mut v = Rational::from((self.power_of_two.clone(), self.denominator.clone()));
        v *= &self.clique;
        v *= &self.half_step;
        v *= &self.tail;
        v
    }
}

/// The same factor in lowest terms:
/// `2^β ((2n+1)^β − 1)^n / (4β²n²)` or `2^β |(2n−1)^β − (−1)^β|^n / (4β²n²)`.
pub fn cycle_power_prefactor_simplified(spec: &CyclePowerSpec) -> Result<Rational> {
    let (beta, n) = (spec.beta(), spec.n());
    let b = exponent(beta)?;
    let base = match spec.variant() {
        CyclePowerVariant::PowerN => Integer::from(2 * n + 1).pow(b) - 1,
        CyclePowerVariant::PowerNMinus1 => {
            let sign = if beta % 2 == 0 { 1 } else { -1 };
            let diff: Integer = Integer::from(2 * n - 1).pow(b) - sign;
            diff.abs()
        }
    };
    let num = (Integer::from(1) << b) * base.pow(exponent(n)?);
    let den = Integer::from(4) * Integer::from(beta).pow(2) * Integer::from(n).pow(2);
    Ok(Rational::from((num, den)))
}

/// Exact `∏_{k=1}^{β−1} |z_k|`: `((2n+1)^β − 1)/(2n)` or
/// `|(2n−1)^β − (−1)^β|/(2n)`.
pub fn modulus_product_exact(spec: &CyclePowerSpec) -> Result<Rational> {
    let (beta, n) = (spec.beta(), spec.n());
    let b = exponent(beta)?;
    let num = match spec.variant() {
        CyclePowerVariant::PowerN => Integer::from(2 * n + 1).pow(b) - 1,
        CyclePowerVariant::PowerNMinus1 => {
            let sign = if beta % 2 == 0 { 1 } else { -1 };
            let diff: Integer = Integer::from(2 * n - 1).pow(b) - sign;
            diff.abs()
        }
    };
    Ok(Rational::from((num, Integer::from(2 * n))))
}

#[derive(Clone, Debug)]
pub struct CyclePowerTerm {
    pub k: u64,
    /// `μ_k = 2 − 2cos(2πk/β)`
    pub mu: Interval,
    /// `2n cos(πk/β) − i(2n ± 2) sin(πk/β)`
    pub z: ComplexInterval,
    /// `|z_k|`, from `4n² ± (2n ± 1)μ_k`.
    pub modulus: Interval,
    /// `(n ± 1)/√(4n²/μ_k ± (2n ± 1))`
    pub arcsin_argument: Interval,
    /// Phase of `z_k` in `(−π, π]`.
    pub theta: Interval,
}

#[derive(Clone, Debug)]
pub struct CyclePowerTerms {
    pub spec: CyclePowerSpec,
    /// One term for each `k = 1, …, β − 1`.
    pub terms: Vec<CyclePowerTerm>,
}

/// Per-`k` data of the quotient by the `β` copies of `K_n`.
pub fn cycle_power_terms(spec: &CyclePowerSpec, prec: u32) -> Result<CyclePowerTerms> {
    let (beta, n) = (spec.beta(), spec.n());
    let (shift, sign): (i64, i64) = match spec.variant() {
        CyclePowerVariant::PowerN => (1, 1),
        CyclePowerVariant::PowerNMinus1 => (-1, -1),
    };
    let n_i = n as i64;
    let four_n2 = Interval::from_i64(prec, 4 * n_i * n_i);
    let mut terms = Vec::new();
    for k in 1..beta {
        let angle = Interval::pi_times(prec, k as i64, beta);
        let (c, s) = (angle.cos(), angle.sin());
        let mu = &Interval::from_i64(prec, 2)
            - &Interval::pi_times(prec, 2 * k as i64, beta).cos().mul_integer(&Integer::from(2));
        let z = ComplexInterval::new(
            c.mul_integer(&Integer::from(2 * n_i)),
            -&s.mul_integer(&Integer::from(2 * n_i + 2 * shift)),
        );
        let odd = Interval::from_i64(prec, sign * (2 * n_i + shift));
        let modulus = (&four_n2 + &(&odd * &mu)).sqrt()?;
        let radicand = &four_n2.div(&mu)? + &odd;
        let arcsin_argument = Interval::from_i64(prec, n_i + shift).div(&radicand.sqrt()?)?;
        let theta = phase(&z)?;
        terms.push(CyclePowerTerm {
            k,
            mu,
            z,
            modulus,
            arcsin_argument,
            theta,
        });
    }
    Ok(CyclePowerTerms { spec: *spec, terms })
}

/// `z` has a strictly negative imaginary part for `0 < k < β`.
fn phase(z: &ComplexInterval) -> Result<Interval> {
    let prec = z.prec();
    if !z.im.is_negative() {
        return Err(Error::Inconclusive {
            bits: prec,
            what: "sign of Im z_k",
        });
    }
    let half_pi = Interval::pi_times(prec, 1, 2);
    Ok(&(-&half_pi) - &z.re.div(&z.im)?.atan())
}

fn check_arcsin_domain(x: &Interval) -> Result<()> {
    let one = rug::Float::with_val(x.prec(), 1);
    if *x.hi() < one {
        Ok(())
    } else if *x.lo() >= one {
        Err(Error::Domain("arcsin argument is not below 1"))
    } else {
        Err(Error::Inconclusive {
            bits: x.prec(),
            what: "arcsin argument against 1",
        })
    }
}

/// Enclosure of the printed product for `β ≥ 3`.
pub fn cycle_power_enclosure(spec: &CyclePowerSpec, prec: u32) -> Result<Interval> {
    let (beta, n) = (spec.beta(), spec.n());
    if beta < 3 {
        return Err(Error::InvalidSpec("the product formula needs beta >= 3".into()));
    }
    let step: u64 = match spec.variant() {
        CyclePowerVariant::PowerN => n + 1,
        CyclePowerVariant::PowerNMinus1 => n - 1,
    };
    let terms = cycle_power_terms(spec, prec)?;
    let mut product = Interval::from_rational(prec, &CyclePowerPrefactor::new(spec)?.value());
    let two_beta = 2 * beta as u128;
    for term in terms.terms.iter().take(half_range(beta) as usize) {
        check_arcsin_domain(&term.arcsin_argument)?;
        let rotation = Interval::pi_times(prec, (step as u128 * term.k as u128 % two_beta) as i64, beta);
        let arcsin = term.arcsin_argument.asin()?;
        let s = (&rotation - &arcsin.mul_integer(&Integer::from(n))).sin();
        product = &product * &s.square();
    }
    Ok(product)
}

/// `(2n)^{2n−2} (1 ± 1/n)^n`, exact.
pub fn cycle_power_beta_two(n: u64, variant: CyclePowerVariant) -> Result<TreeCount> {
    let nn = exponent(n)?;
    let base = Integer::from(2 * n).pow(exponent(2 * n - 2)?);
    let step = match variant {
        CyclePowerVariant::PowerN => n + 1,
        CyclePowerVariant::PowerNMinus1 => n - 1,
    };
    let ratio = Rational::from((Integer::from(step), Integer::from(n))).pow(nn);
    let value = ratio * base;
    if *value.denom() != 1 {
        return Err(Error::Inconsistent(format!("non-integral count {value}")));
    }
    TreeCount::new(value.into_numer_denom().0)
}

/// Spanning tree count of `C^n_{βn}` or `C^{n−1}_{βn}`.
pub fn cycle_power_count(spec: &CyclePowerSpec, budget: PrecisionBudget) -> Result<CountResult> {
    if spec.beta() == 2 {
        return Ok(CountResult::exact(cycle_power_beta_two(spec.n(), spec.variant())?));
    }
    let certified = certify_integer(budget, |bits| cycle_power_enclosure(spec, bits))?;
    CountResult::from_certified(certified)
}
