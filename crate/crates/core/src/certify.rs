//! Precision-doubling certification of integer-valued enclosures.

use rug::Integer;

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Working-precision schedule for certified evaluation.
///
/// Evaluation starts at `start_bits` and doubles until the enclosure isolates
/// one integer with width below 1/4, failing once `cap_bits` has been tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionBudget {
    pub start_bits: u32,
    pub cap_bits: u32,
}

impl Default for PrecisionBudget {
    fn default() -> Self {
        Self {
            start_bits: 128,
            cap_bits: 65536,
        }
    }
}

impl PrecisionBudget {
    pub fn new(start_bits: u32, cap_bits: u32) -> Result<Self> {
        if start_bits < 2 {
            return Err(Error::InvalidSpec(format!(
                "start_bits must be at least 2, got {start_bits}"
            )));
        }
        if start_bits > cap_bits {
            return Err(Error::InvalidSpec(format!(
                "start_bits {start_bits} exceeds cap_bits {cap_bits}"
            )));
        }
        Ok(Self { start_bits, cap_bits })
    }

    /// The precisions tried, in order; the last one is `cap_bits`.
    pub fn schedule(&self) -> Vec<u32> {
        let mut bits = self.start_bits;
        let mut out = vec![bits];
        while bits < self.cap_bits {
            bits = bits.saturating_mul(2).min(self.cap_bits);
            out.push(bits);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct CertifiedInteger {
    pub value: Integer,
    pub bits_used: u32,
    pub enclosure: Interval,
}

/// Runs `eval` at increasing precision until its enclosure certifies an
/// integer. [`Error::Inconclusive`] from `eval` means "try more bits"; any
/// other error is returned as is.
pub fn certify_integer<F>(budget: PrecisionBudget, mut eval: F) -> Result<CertifiedInteger>
where
    F: FnMut(u32) -> Result<Interval>,
{
    for bits in budget.schedule() {
        match eval(bits) {
            Ok(enclosure) => {
                if let Some(value) = enclosure.unique_integer() {
                    return Ok(CertifiedInteger {
                        value,
                        bits_used: bits,
                        enclosure,
                    });
                }
            }
            Err(Error::Inconclusive { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Err(Error::PrecisionExhausted {
        cap_bits: budget.cap_bits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    #[test]
    fn schedule_doubles_and_ends_at_cap() {
        let b = PrecisionBudget::new(100, 700).unwrap();
        assert_eq!(b.schedule(), vec![100, 200, 400, 700]);
        assert_eq!(PrecisionBudget::new(32, 32).unwrap().schedule(), vec![32]);
        assert!(PrecisionBudget::new(64, 32).is_err());
    }

    #[test]
    fn certifies_once_enclosure_is_narrow() {
        // 10^30 needs ~100 bits before its enclosure is narrow
        let target = Integer::from(10).pow(30);
        let got = certify_integer(PrecisionBudget::new(16, 1024).unwrap(), |bits| {
            Ok(Interval::from_integer(bits, &target))
        })
        .unwrap();
        assert_eq!(got.value, Integer::from(10).pow(30));
        assert!(got.bits_used >= 64);
    }

    #[test]
    fn starvation_reports_exhaustion() {
        let target = Integer::from(3).pow(200) + 1;
        let err = certify_integer(PrecisionBudget::new(32, 32).unwrap(), |bits| {
            Ok(Interval::from_integer(bits, &target))
        })
        .unwrap_err();
        assert_eq!(err, Error::PrecisionExhausted { cap_bits: 32 });
    }

    #[test]
    fn inconclusive_steps_are_retried() {
        let mut calls = 0;
        let got = certify_integer(PrecisionBudget::default(), |bits| {
            calls += 1;
            if bits < 512 {
                Err(Error::Inconclusive { bits, what: "test" })
            } else {
                Ok(Interval::from_i64(bits, 7))
            }
        })
        .unwrap();
        assert_eq!(got.value, 7);
        assert_eq!(got.bits_used, 512);
        assert_eq!(calls, 3);
    }
}
