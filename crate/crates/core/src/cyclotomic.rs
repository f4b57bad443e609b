//! Exact vanishing tests for integer combinations of roots of unity.
//!
//! `sum_j c_j ζ^j` with `ζ = exp(2πi/m)` is zero exactly when the
//! m-th cyclotomic polynomial divides `sum_j c_j x^j`.

fn poly_divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic; num is divisible by den
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
pub(crate) fn cyclotomic_polynomial(m: u64) -> Vec<i64> {
    assert!(m >= 1);
    let m = m as usize;
    let mut num = vec![0i64; m + 1];
    num[0] = -1;
    num[m] = 1;
    for d in (1..m).filter(|d| m % d == 0) {
        num = poly_divide_exact(&num, &cyclotomic_polynomial(d as u64));
    }
    num
}

fn poly_rem_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    while rem.len() > dd {
        let c = rem.pop().unwrap();
        let shift = rem.len() - dd;
        for (j, &dc) in den[..dd].iter().enumerate() {
            rem[shift + j] -= c * dc;
        }
    }
    rem
}

/// Whether `sum_j coeffs[j] * exp(2πi j / order)` is exactly zero.
/// Exponents are taken modulo `order`.
pub(crate) fn vanishes_at_root_of_unity(order: u64, terms: &[(i64, u64)]) -> bool {
    let mut poly = vec![0i64; order as usize];
    for &(coeff, exp) in terms {
        poly[(exp % order) as usize] += coeff;
    }
    let phi = cyclotomic_polynomial(order);
    poly_rem_monic(&poly, &phi).iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn detects_known_zero_sums() {
        // 1 + ζ3 + ζ3^2 = 0
        assert!(vanishes_at_root_of_unity(3, &[(1, 0), (1, 1), (1, 2)]));
        // 1 + ζ2 = 0
        assert!(vanishes_at_root_of_unity(2, &[(1, 0), (1, 1)]));
        // 2 + ζ3 + ζ3^{-1} = 1
        assert!(!vanishes_at_root_of_unity(3, &[(2, 0), (1, 1), (1, 2)]));
        // 1 + 2cos(2π/3) = 1 + ζ3 + ζ3^2 = 0
        assert!(vanishes_at_root_of_unity(3, &[(1, 0), (1, 1), (1, 2)]));
        // ζ6 − ζ6^{-1} = i√3 ≠ 0
        assert!(!vanishes_at_root_of_unity(6, &[(1, 1), (-1, 5)]));
        // 2 + ζ4^1 + ζ4^3 = 2 + 2cos(π/2) = 2
        assert!(!vanishes_at_root_of_unity(4, &[(2, 0), (1, 1), (1, 3)]));
        // exponent reduced modulo the order
        assert!(vanishes_at_root_of_unity(4, &[(1, 1), (1, 7)]));
    }
}
