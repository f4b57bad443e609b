//! Classical product identities the closed forms rest on, evaluated in
//! interval arithmetic so they can be checked independently.

use rug::Integer;

use crate::error::{Error, Result};
use crate::interval::{ComplexInterval, Interval};

/// `∏_{l=0}^{n−1} (x − exp(2πi lp/n))`; equals `xⁿ − 1` when `gcd(p, n) = 1`.
pub fn roots_of_unity_product(x: &Interval, n: u64, p: u64) -> Result<ComplexInterval> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be positive".into()));
    }
    let prec = x.prec();
    let base = ComplexInterval::from_real(x.clone());
    let mut acc = ComplexInterval::one(prec);
    for l in 0..n {
        let root = ComplexInterval::unit_root(prec, (l as u128 * p as u128 % n as u128) as u64, n);
        acc = &acc * &(&base - &root);
    }
    Ok(acc)
}

/// `∏_{k=1}^{m−1} sin(πk/m)`; equals `m / 2^{m−1}`.
pub fn sine_product(m: u64, prec: u32) -> Result<Interval> {
    if m == 0 {
        return Err(Error::InvalidSpec("m must be positive".into()));
    }
    let mut acc = Interval::one(prec);
    for k in 1..m {
        acc = &acc * &Interval::pi_times(prec, k as i64, m).sin();
    }
    Ok(acc)
}

/// `∏_{l=0}^{n−1} sin(ω + πl/n)`; equals `sin(nω) / 2^{n−1}`.
pub fn shifted_sine_product(omega: &Interval, n: u64) -> Result<Interval> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be positive".into()));
    }
    let prec = omega.prec();
    let mut acc = Interval::one(prec);
    for l in 0..n {
        acc = &acc * &(omega + &Interval::pi_times(prec, l as i64, n)).sin();
    }
    Ok(acc)
}

/// `∏_{k=1}^{β−1} |2n cos(πk/β) − i(2n+2) sin(πk/β)|`, from the complex
/// numbers themselves.
pub fn modulus_product(beta: u64, n: u64, prec: u32) -> Result<Interval> {
    if beta < 2 || n == 0 {
        return Err(Error::InvalidSpec("need beta >= 2 and n >= 1".into()));
    }
    let two_n = Integer::from(2 * n);
    let two_n2 = Integer::from(2 * n + 2);
    let mut acc = Interval::one(prec);
    for k in 1..beta {
        let angle = Interval::pi_times(prec, k as i64, beta);
        let z = ComplexInterval::new(angle.cos().mul_integer(&two_n), -&angle.sin().mul_integer(&two_n2));
        acc = &acc * &z.abs();
    }
    Ok(acc)
}

/// Both sides of `∏_{k=0}^{β−1} (2cosh t − 2cos(2πk/β)) = 2cosh(βt) − 2`.
pub fn cosh_product(beta: u64, t: &Interval) -> Result<(Interval, Interval)> {
    if beta == 0 {
        return Err(Error::InvalidSpec("beta must be positive".into()));
    }
    let prec = t.prec();
    let two = Integer::from(2);
    let two_cosh = t.cosh().mul_integer(&two);
    let mut lhs = Interval::one(prec);
    for k in 0..beta {
        let c = Interval::pi_times(prec, 2 * k as i64, beta).cos().mul_integer(&two);
        lhs = &lhs * &(&two_cosh - &c);
    }
    let rhs = &t.mul_integer(&Integer::from(beta)).cosh().mul_integer(&two) - &Interval::from_i64(prec, 2);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;
    use rug::Rational;

    const PREC: u32 = 256;

    #[test]
    fn roots_of_unity() {
        let x = Interval::from_rational(PREC, &Rational::from((3, 2)));
        let got = roots_of_unity_product(&x, 5, 2).unwrap();
        let expected = Rational::from((3, 2)).pow(5u32) - 1;
        assert!(got.re.contains_rational(&expected));
        assert!(got.im.contains_zero());
    }

    #[test]
    fn sines() {
        let got = sine_product(12, PREC).unwrap();
        assert!(got.contains_rational(&Rational::from((12, 2048))));
        let omega = Interval::from_rational(PREC, &Rational::from((1, 3)));
        let lhs = shifted_sine_product(&omega, 7).unwrap();
        let rhs = omega.mul_integer(&Integer::from(7)).sin().scale(&Rational::from((1, 64)));
        assert!(lhs.overlaps(&rhs));
    }

    #[test]
    fn modulus_and_cosh() {
        let got = modulus_product(5, 3, PREC).unwrap();
        assert!(got.contains_rational(&Rational::from((7i64.pow(5) - 1, 6))));
        let n = 3;
        let arg = Interval::from_rational(PREC, &(Rational::from((2 * n + 1, 2)) + Rational::from((1, 4 * n + 2))));
        let t = arg.acosh().unwrap();
        let (lhs, rhs) = cosh_product(5, &t).unwrap();
        assert!(lhs.overlaps(&rhs));
    }
}
