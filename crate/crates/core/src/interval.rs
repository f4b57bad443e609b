//! Outward-rounded interval arithmetic over MPFR floats.
//!
//! Every operation rounds the lower bound toward −∞ and the upper bound
//! toward +∞, so an [`Interval`] always encloses the exact real result of the
//! computation it records. Transcendental functions are enclosed either by
//! monotonicity (`atan`, `asin`, `exp`, ...) or by a midpoint–radius bound
//! with Lipschitz constant one (`sin`, `cos`).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::{Constant, Round};
use rug::ops::{AssignRound, Pow};
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

fn round_down<T>(prec: u32, val: T) -> Float
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, val, Round::Down).0
}

fn round_up<T>(prec: u32, val: T) -> Float
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, val, Round::Up).0
}

fn min_of(values: [Float; 4]) -> Float {
    let [a, b, c, d] = values;
    a.min(&b).min(&c).min(&d)
}

fn max_of(values: [Float; 4]) -> Float {
    let [a, b, c, d] = values;
    a.max(&b).max(&c).max(&d)
}

/// A closed real interval `[lo, hi]` with MPFR endpoints.
#[derive(Clone, Debug)]
pub struct Interval {
    lo: Float,
    hi: Float,
}

impl Interval {
    pub fn from_bounds(lo: Float, hi: Float) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(Error::Inconsistent(format!(
                "malformed interval [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_i64(prec, 0)
    }

    pub fn one(prec: u32) -> Self {
        Self::from_i64(prec, 1)
    }

    pub fn from_i64(prec: u32, value: i64) -> Self {
        Self {
            lo: round_down(prec, value),
            hi: round_up(prec, value),
        }
    }

    pub fn from_integer(prec: u32, value: &Integer) -> Self {
        Self {
            lo: round_down(prec, value),
            hi: round_up(prec, value),
        }
    }

    pub fn from_rational(prec: u32, value: &Rational) -> Self {
        Self {
            lo: round_down(prec, value),
            hi: round_up(prec, value),
        }
    }

    pub fn pi(prec: u32) -> Self {
        Self {
            lo: round_down(prec, Constant::Pi),
            hi: round_up(prec, Constant::Pi),
        }
    }

    /// Encloses `π · num / den`.
    pub fn pi_times(prec: u32, num: i64, den: u64) -> Self {
        let q = Rational::from((Integer::from(num), Integer::from(den)));
        Self::pi(prec).scale(&q)
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    /// Upper bound on `hi - lo`.
    pub fn width(&self) -> Float {
        round_up(self.prec(), &self.hi - &self.lo)
    }

    /// A point of the interval, close to its centre.
    pub fn midpoint(&self) -> Float {
        let mut mid = Float::with_val(self.prec() + 1, &self.lo + &self.hi);
        mid /= 2;
        mid
    }

    fn radius_about(&self, mid: &Float) -> Float {
        let prec = self.prec();
        let above = round_up(prec, &self.hi - mid);
        let below = round_up(prec, mid - &self.lo);
        above.max(&below)
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64()
    }

    /// `width / max(|lo|, |hi|)`, or `+inf` when the interval touches zero.
    pub fn relative_width(&self) -> f64 {
        if self.contains_zero() {
            return f64::INFINITY;
        }
        let prec = self.prec();
        let mag = Float::with_val(prec, self.lo.abs_ref()).max(&Float::with_val(prec, self.hi.abs_ref()));
        round_up(prec, self.width() / mag).to_f64()
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi < 0
    }

    pub fn contains_integer(&self, value: &Integer) -> bool {
        self.lo <= *value && self.hi >= *value
    }

    pub fn contains_rational(&self, value: &Rational) -> bool {
        self.lo <= *value && self.hi >= *value
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// The single integer inside the interval, provided the width is below
    /// 1/4 and exactly one integer lies in `[lo, hi]`.
    pub fn unique_integer(&self) -> Option<Integer> {
        if !self.lo.is_finite() || !self.hi.is_finite() {
            return None;
        }
        if self.width() >= 0.25f64 {
            return None;
        }
        let (ceil_lo, _) = self.lo.to_integer_round(Round::Up)?;
        let (floor_hi, _) = self.hi.to_integer_round(Round::Down)?;
        (ceil_lo == floor_hi).then_some(ceil_lo)
    }

    pub fn hull(&self, other: &Interval) -> Self {
        Self {
            lo: self.lo.clone().min(&other.lo),
            hi: self.hi.clone().max(&other.hi),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let prec = self.prec();
        let candidates = [
            round_down(prec, &self.lo * factor),
            round_down(prec, &self.hi * factor),
            round_up(prec, &self.lo * factor),
            round_up(prec, &self.hi * factor),
        ];
        let [a, b, c, d] = candidates;
        Self {
            lo: a.min(&b),
            hi: c.max(&d),
        }
    }

    pub fn mul_integer(&self, factor: &Integer) -> Self {
        self.scale(&Rational::from(factor))
    }

    pub fn abs(&self) -> Self {
        if self.lo >= 0 {
            self.clone()
        } else if self.hi <= 0 {
            -self
        } else {
            let prec = self.prec();
            let top = Float::with_val(prec, -&self.lo).max(&self.hi);
            Self {
                lo: Float::with_val(prec, 0),
                hi: top,
            }
        }
    }

    pub fn square(&self) -> Self {
        self.pow(2)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let prec = self.prec();
        if exp == 0 {
            return Self::one(prec);
        }
        // (small, large): endpoints whose powers bound the result
        let (small, large) = if exp % 2 == 1 || self.lo >= 0 {
            (&self.lo, &self.hi)
        } else if self.hi <= 0 {
            (&self.hi, &self.lo)
        } else {
            let abs = self.abs();
            return Self {
                lo: Float::with_val(prec, 0),
                hi: round_up(prec, abs.hi.pow(exp)),
            };
        };
        Self {
            lo: round_down(prec, small.pow(exp)),
            hi: round_up(prec, large.pow(exp)),
        }
    }

    /// `self^exp` for exponents given as `u64`, failing only when the
    /// exponent exceeds the MPFR integer power range.
    pub fn pow_u64(&self, exp: u64) -> Result<Self> {
        let exp = u32::try_from(exp).map_err(|_| Error::InvalidSpec(format!("exponent {exp} too large")))?;
        Ok(self.pow(exp))
    }

    pub fn div(&self, other: &Interval) -> Result<Self> {
        if other.contains_zero() {
            return Err(Error::Inconclusive {
                bits: self.prec(),
                what: "divisor enclosure contains zero",
            });
        }
        let prec = self.prec().max(other.prec());
        let (a, b, c, d) = (&self.lo, &self.hi, &other.lo, &other.hi);
        Ok(Self {
            lo: min_of([
                round_down(prec, a / c),
                round_down(prec, a / d),
                round_down(prec, b / c),
                round_down(prec, b / d),
            ]),
            hi: max_of([
                round_up(prec, a / c),
                round_up(prec, a / d),
                round_up(prec, b / c),
                round_up(prec, b / d),
            ]),
        })
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.hi < 0 {
            return Err(Error::Domain("sqrt of a negative enclosure"));
        }
        let prec = self.prec();
        let lo = if self.lo < 0 {
            Float::with_val(prec, 0)
        } else {
            round_down(prec, self.lo.sqrt_ref())
        };
        Ok(Self {
            lo,
            hi: round_up(prec, self.hi.sqrt_ref()),
        })
    }

    fn monotone_increasing(&self, f: fn(&mut Float, Round) -> Ordering) -> Self {
        let mut lo = self.lo.clone();
        f(&mut lo, Round::Down);
        let mut hi = self.hi.clone();
        f(&mut hi, Round::Up);
        Self { lo, hi }
    }

    fn unit_lipschitz(&self, f: fn(&mut Float, Round) -> Ordering) -> Self {
        let prec = self.prec();
        let mid = self.midpoint();
        let rad = self.radius_about(&mid);
        let mut lo = mid.clone();
        f(&mut lo, Round::Down);
        let mut hi = mid;
        f(&mut hi, Round::Up);
        let lo = round_down(prec, &lo - &rad).max(&Float::with_val(prec, -1));
        let hi = round_up(prec, &hi + &rad).min(&Float::with_val(prec, 1));
        Self { lo, hi }
    }

    pub fn sin(&self) -> Self {
        self.unit_lipschitz(Float::sin_round)
    }

    pub fn cos(&self) -> Self {
        self.unit_lipschitz(Float::cos_round)
    }

    pub fn atan(&self) -> Self {
        self.monotone_increasing(Float::atan_round)
    }

    pub fn exp(&self) -> Self {
        self.monotone_increasing(Float::exp_round)
    }

    pub fn asin(&self) -> Result<Self> {
        if self.lo > 1 || self.hi < -1 {
            return Err(Error::Domain("arcsin argument outside [-1, 1]"));
        }
        if self.hi > 1 || self.lo < -1 {
            return Err(Error::Inconclusive {
                bits: self.prec(),
                what: "arcsin argument enclosure crosses +-1",
            });
        }
        Ok(self.monotone_increasing(Float::asin_round))
    }

    pub fn acosh(&self) -> Result<Self> {
        if self.lo < 1 {
            return Err(Error::Domain("arcosh argument below 1"));
        }
        Ok(self.monotone_increasing(Float::acosh_round))
    }

    pub fn cosh(&self) -> Self {
        if self.lo >= 0 {
            self.monotone_increasing(Float::cosh_round)
        } else if self.hi <= 0 {
            (-self).monotone_increasing(Float::cosh_round)
        } else {
            let prec = self.prec();
            let top = self.abs().monotone_increasing(Float::cosh_round).hi;
            Self {
                lo: Float::with_val(prec, 1),
                hi: top,
            }
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo.to_f64(), self.hi.to_f64())
    }
}

impl Neg for &Interval {
    type Output = Interval;

    fn neg(self) -> Interval {
        Interval {
            lo: Float::with_val(self.hi.prec(), -&self.hi),
            hi: Float::with_val(self.lo.prec(), -&self.lo),
        }
    }
}

impl Neg for Interval {
    type Output = Interval;

    fn neg(self) -> Interval {
        -&self
    }
}

impl Add for &Interval {
    type Output = Interval;

    fn add(self, rhs: &Interval) -> Interval {
        let prec = self.prec().max(rhs.prec());
        Interval {
            lo: round_down(prec, &self.lo + &rhs.lo),
            hi: round_up(prec, &self.hi + &rhs.hi),
        }
    }
}

impl Sub for &Interval {
    type Output = Interval;

    fn sub(self, rhs: &Interval) -> Interval {
        let prec = self.prec().max(rhs.prec());
        Interval {
            lo: round_down(prec, &self.lo - &rhs.hi),
            hi: round_up(prec, &self.hi - &rhs.lo),
        }
    }
}

impl Mul for &Interval {
    type Output = Interval;

    fn mul(self, rhs: &Interval) -> Interval {
        let prec = self.prec().max(rhs.prec());
        let (a, b, c, d) = (&self.lo, &self.hi, &rhs.lo, &rhs.hi);
        Interval {
            lo: min_of([
                round_down(prec, a * c),
                round_down(prec, a * d),
                round_down(prec, b * c),
                round_down(prec, b * d),
            ]),
            hi: max_of([
                round_up(prec, a * c),
                round_up(prec, a * d),
                round_up(prec, b * c),
                round_up(prec, b * d),
            ]),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Interval {
            type Output = Interval;
            fn $method(self, rhs: Interval) -> Interval {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Interval> for Interval {
            type Output = Interval;
            fn $method(self, rhs: &Interval) -> Interval {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

/// A rectangular complex enclosure `re + i·im`.
#[derive(Clone, Debug)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub fn new(re: Interval, im: Interval) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Interval) -> Self {
        let im = Interval::zero(re.prec());
        Self { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_real(Interval::zero(prec))
    }

    pub fn one(prec: u32) -> Self {
        Self::from_real(Interval::one(prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// `cos(angle) + i·sin(angle)`.
    pub fn cis(angle: &Interval) -> Self {
        Self {
            re: angle.cos(),
            im: angle.sin(),
        }
    }

    /// `exp(2πi · num / den)`, with `num` reduced modulo `den` exactly first.
    pub fn unit_root(prec: u32, num: u64, den: u64) -> Self {
        let num = num % den;
        if num == 0 {
            return Self::one(prec);
        }
        let angle = Interval::pi_times(prec, 2 * num as i64, den);
        Self::cis(&angle)
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn scale(&self, factor: &Interval) -> Self {
        Self {
            re: &self.re * factor,
            im: &self.im * factor,
        }
    }

    pub fn div_real(&self, divisor: &Interval) -> Result<Self> {
        Ok(Self {
            re: self.re.div(divisor)?,
            im: self.im.div(divisor)?,
        })
    }

    pub fn norm_sqr(&self) -> Interval {
        &self.re.square() + &self.im.square()
    }

    pub fn abs(&self) -> Interval {
        self.norm_sqr()
            .sqrt()
            .expect("sum of squares encloses a nonnegative value")
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut result = Self::one(self.prec());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn overlaps(&self, other: &ComplexInterval) -> bool {
        self.re.overlaps(&other.re) && self.im.overlaps(&other.im)
    }
}

impl fmt::Display for ComplexInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + i{}", self.re, self.im)
    }
}

impl Add for &ComplexInterval {
    type Output = ComplexInterval;

    fn add(self, rhs: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &ComplexInterval {
    type Output = ComplexInterval;

    fn sub(self, rhs: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &ComplexInterval {
    type Output = ComplexInterval;

    fn mul(self, rhs: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}
