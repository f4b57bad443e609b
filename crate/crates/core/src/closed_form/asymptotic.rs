//! Leading-order growth of cycle power tree counts.

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::certify::PrecisionBudget;
use crate::closed_form::cycle_power::cycle_power_count;
use crate::error::{Error, Result};
use crate::graph::{CyclePowerSpec, CyclePowerVariant};
use crate::interval::Interval;

fn exponent(e: u64) -> Result<u32> {
    u32::try_from(e).map_err(|_| Error::InvalidSpec(format!("exponent {e} too large")))
}

/// `e^{β/2}` for `C^n` and `e^{−β/2}` for `C^{n−1}`.
pub fn asymptotic_target(beta: u64, variant: CyclePowerVariant, prec: u32) -> Interval {
    let sign: i64 = match variant {
        CyclePowerVariant::PowerN => 1,
        CyclePowerVariant::PowerNMinus1 => -1,
    };
    Interval::from_rational(prec, &Rational::from((sign * beta as i64, 2))).exp()
}

/// `2^{βn}/(2β) · n^{βn−2} · e^{±β/2}`.
pub fn asymptotic_estimate(beta: u64, n: u64, variant: CyclePowerVariant, prec: u32) -> Result<Interval> {
    if beta < 2 || n == 0 {
        return Err(Error::InvalidSpec("need beta >= 2 and n >= 1".into()));
    }
    let scale = asymptotic_scale(beta, n)?;
    Ok(&Interval::from_rational(prec, &scale) * &asymptotic_target(beta, variant, prec))
}

/// `2^{βn} n^{βn−2} / (2β)`
fn asymptotic_scale(beta: u64, n: u64) -> Result<Rational> {
    let bn = beta * n;
    let num = (Integer::from(1) << exponent(bn)?) * Integer::from(n).pow(exponent(bn - 2)?);
    Ok(Rational::from((num, Integer::from(2 * beta))))
}

/// `r(β, n) = count · 2β / (2^{βn} n^{βn−2})`, exact.
pub fn asymptotic_ratio_exact(count: &Integer, beta: u64, n: u64) -> Result<Rational> {
    if beta < 2 || n == 0 {
        return Err(Error::InvalidSpec("need beta >= 2 and n >= 1".into()));
    }
    Ok(Rational::from(count.clone()) / asymptotic_scale(beta, n)?)
}

#[derive(Clone, Debug)]
pub struct ConvergencePoint {
    pub spec: CyclePowerSpec,
    pub count: Integer,
    pub ratio: Rational,
    /// Enclosure of `|r/e^{±β/2} − 1|`.
    pub relative_error: Interval,
    pub bits_used: u32,
}

pub fn convergence_point(spec: &CyclePowerSpec, budget: PrecisionBudget) -> Result<ConvergencePoint> {
    let result = cycle_power_count(spec, budget)?;
    let count = result.count.into_inner();
    let ratio = asymptotic_ratio_exact(&count, spec.beta(), spec.n())?;
    let prec = 128;
    let target = asymptotic_target(spec.beta(), spec.variant(), prec);
    let rel = &Interval::from_rational(prec, &ratio).div(&target)? - &Interval::one(prec);
    Ok(ConvergencePoint {
        spec: *spec,
        count,
        ratio,
        relative_error: rel.abs(),
        bits_used: result.bits_used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use CyclePowerVariant::*;

    #[test]
    fn beta_two_ratio_is_compound_interest() {
        for n in 1..=10u64 {
            for (v, step) in [(PowerN, n + 1), (PowerNMinus1, n - 1)] {
                let Ok(s) = CyclePowerSpec::new(2, n, v) else { continue };
                let c = cycle_power_count(&s, PrecisionBudget::default()).unwrap();
                let r = asymptotic_ratio_exact(c.count.value(), 2, n).unwrap();
                let expected = Rational::from((Integer::from(step), Integer::from(n))).pow(n as u32);
                assert_eq!(r, expected);
            }
        }
    }

    #[test]
    fn estimate_contains_scaled_target() {
        let e = asymptotic_estimate(2, 3, PowerN, 128).unwrap();
        // 2^6 · 3^4 / 4 · e = 1296 e
        let target = asymptotic_target(2, PowerN, 128).mul_integer(&Integer::from(1296));
        assert!(e.overlaps(&target));
        assert!(asymptotic_estimate(1, 3, PowerN, 128).is_err());
    }

    #[test]
    fn beta_two_error_shrinks() {
        let errs: Vec<f64> = [10u64, 100, 1000]
            .iter()
            .map(|&n| {
                let s = CyclePowerSpec::new(2, n, PowerN).unwrap();
                convergence_point(&s, PrecisionBudget::default()).unwrap().relative_error.to_f64()
            })
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2]);
        assert!(errs[2] < 1e-3);
    }
}
