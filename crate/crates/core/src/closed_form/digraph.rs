//! Directed circulants `C^{p, γ_1 n + p, …}_{βn}`: the general product over
//! `⌈β/2⌉ − 1` terms, the unsplit β-product, and the two-generator form.

use rug::ops::Pow;
use rug::Integer;

use crate::certify::{certify_integer, PrecisionBudget};
use crate::count::{CountResult, TreeCount};
use crate::cyclotomic::vanishes_at_root_of_unity;
use crate::error::{Error, Result};
use crate::graph::{gcd, is_structurally_zero, DirectedCirculantSpec, ZeroReason};
use crate::interval::{ComplexInterval, Interval};

/// Number of paired factors, `⌈β/2⌉ − 1`.
pub(crate) fn half_range(beta: u64) -> u64 {
    beta.div_ceil(2) - 1
}

fn exponent(e: u64) -> Result<u32> {
    u32::try_from(e).map_err(|_| Error::InvalidSpec(format!("exponent {e} too large")))
}

/// Spectral data of the β-vertex quotient for one `k ∈ 1..=⌈β/2⌉−1`.
#[derive(Clone, Debug)]
pub struct DigraphTerm {
    pub k: u64,
    /// `μ_k = d − 1 − Σ_m exp(2πi γ_m k/β)`
    pub mu: ComplexInterval,
    /// `η_k = 2(d − 1) − 2 Σ_m cos(2π γ_m k/β)`
    pub eta: Interval,
    /// `Σ_m sin(2π γ_m k/β)`
    pub sinsum: Interval,
    /// `d − η_k/2`, the real part of `d − μ_k`.
    pub real_part: Interval,
    /// `|1 − μ_k/d|`
    pub modulus: Interval,
    /// Principal phase of `1 − μ_k/d`; `None` when that number is exactly 0.
    pub phase: Option<Interval>,
    real_part_is_zero: bool,
}

#[derive(Clone, Debug)]
pub struct DigraphSpectralTerms {
    pub d: u64,
    pub terms: Vec<DigraphTerm>,
}

/// Residues `γ_m k mod β`.
fn gamma_residues(spec: &DirectedCirculantSpec, k: u64) -> Vec<u64> {
    let beta = spec.beta();
    spec.gammas().iter().map(|&g| (g % beta) * (k % beta) % beta).collect()
}

pub fn digraph_spectral_terms(spec: &DirectedCirculantSpec, prec: u32) -> Result<DigraphSpectralTerms> {
    let beta = spec.beta();
    let d = spec.d();
    let mut terms = Vec::new();
    for k in 1..=half_range(beta) {
        let residues = gamma_residues(spec, k);
        let mut cos_sum = Interval::zero(prec);
        let mut sin_sum = Interval::zero(prec);
        for &a in &residues {
            let root = ComplexInterval::unit_root(prec, a, beta);
            cos_sum = &cos_sum + &root.re;
            sin_sum = &sin_sum + &root.im;
        }
        let d_minus_1 = Interval::from_i64(prec, d as i64 - 1);
        let mu = ComplexInterval::new(&d_minus_1 - &cos_sum, -&sin_sum);
        let eta = (&d_minus_1 - &cos_sum).mul_integer(&Integer::from(2));
        let real_part = &Interval::one(prec) + &cos_sum;
        let d_iv = Interval::from_i64(prec, d as i64);
        let modulus = (&real_part.square() + &sin_sum.square()).sqrt()?.div(&d_iv)?;

        // 2·(d − η/2) = 2 + Σ (ζ^a + ζ^{−a}),  d − μ = 1 + Σ ζ^a
        let real_terms: Vec<(i64, u64)> = std::iter::once((2, 0))
            .chain(residues.iter().flat_map(|&a| [(1, a), (1, beta - a)]))
            .collect();
        let real_part_is_zero = vanishes_at_root_of_unity(beta, &real_terms);
        let full_terms: Vec<(i64, u64)> =
            std::iter::once((1, 0)).chain(residues.iter().map(|&a| (1, a))).collect();
        let phase = if vanishes_at_root_of_unity(beta, &full_terms) {
            None
        } else {
            Some(principal_phase(&real_part, &sin_sum, real_part_is_zero)?)
        };
        terms.push(DigraphTerm {
            k,
            mu,
            eta,
            sinsum: sin_sum,
            real_part,
            modulus,
            phase,
            real_part_is_zero,
        });
    }
    Ok(DigraphSpectralTerms { d, terms })
}

/// Phase of `x + iy` in `(−π, π]`, with `x = 0` known exactly when
/// `x_is_zero`. Near the negative real axis an enclosure around `+π` is
/// returned, which agrees with the principal value modulo 2π.
fn principal_phase(x: &Interval, y: &Interval, x_is_zero: bool) -> Result<Interval> {
    let prec = x.prec();
    let half_pi = Interval::pi_times(prec, 1, 2);
    if !x_is_zero && x.is_positive() {
        return Ok(y.div(x)?.atan());
    }
    if !x_is_zero && x.is_negative() {
        let base = y.div(x)?.atan();
        let pi = Interval::pi(prec);
        return Ok(if y.is_negative() { &base - &pi } else { &base + &pi });
    }
    if y.is_positive() {
        return Ok(&half_pi - &x.div(y)?.atan());
    }
    if y.is_negative() {
        return Ok(&(-&half_pi) - &x.div(y)?.atan());
    }
    Err(Error::Inconclusive {
        bits: prec,
        what: "phase of an enclosure around the origin",
    })
}

/// How the phase `φ_k` of `1 − μ_k/d` enters the paired factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseForm {
    /// `sgn(d − η_k/2) · cos(2πpk/β + n·Arctg(Σ sin / (d − η_k/2)))` with the
    /// sign factor only for odd `n`, and the ±π/2 limit when `d − η_k/2 = 0`.
    Arctangent,
    /// `cos(2πpk/β + n·φ_k)` with the true phase `φ_k`.
    Principal,
}

/// `n d^{βn−1} (1 − [β even] (−1)^p (1 + Σ(−1)^{γ_m})^n / d^n)`, exact.
fn theorem1_leading_factor(spec: &DirectedCirculantSpec) -> Result<Integer> {
    let (beta, n, d) = (spec.beta(), spec.n(), spec.d());
    let dn = Integer::from(d);
    let mut lead = Integer::from(n) * dn.clone().pow(exponent(beta * n - 1)?);
    if beta % 2 == 0 {
        let alt: i64 = 1 + spec.gammas().iter().map(|&g| if g % 2 == 0 { 1 } else { -1 }).sum::<i64>();
        let correction =
            Integer::from(n) * dn.pow(exponent((beta - 1) * n - 1)?) * Integer::from(alt).pow(exponent(n)?);
        if spec.p() % 2 == 0 {
            lead -= correction;
        } else {
            lead += correction;
        }
    }
    Ok(lead)
}

/// Enclosure of the `⌈β/2⌉ − 1` term product formula at `prec` bits.
pub fn theorem1_enclosure(spec: &DirectedCirculantSpec, prec: u32, form: PhaseForm) -> Result<Interval> {
    let (beta, n, p) = (spec.beta(), spec.n(), spec.p());
    let terms = digraph_spectral_terms(spec, prec)?;
    let mut product = Interval::from_integer(prec, &theorem1_leading_factor(spec)?);
    for term in &terms.terms {
        let Some(phase) = &term.phase else {
            // |1 − μ_k/d| = 0, the factor is exactly 1
            continue;
        };
        let (sign, angle) = match form {
            PhaseForm::Principal => (1, phase.clone()),
            PhaseForm::Arctangent => {
                let (sign, arctg) = if term.real_part_is_zero {
                    let half_pi = Interval::pi_times(prec, 1, 2);
                    if term.sinsum.is_positive() {
                        (1, half_pi)
                    } else if term.sinsum.is_negative() {
                        (1, -half_pi)
                    } else {
                        return Err(Error::Inconclusive {
                            bits: prec,
                            what: "sign of the sine sum",
                        });
                    }
                } else if term.real_part.is_positive() {
                    (1, term.sinsum.div(&term.real_part)?.atan())
                } else if term.real_part.is_negative() {
                    (-1, term.sinsum.div(&term.real_part)?.atan())
                } else {
                    return Err(Error::Inconclusive {
                        bits: prec,
                        what: "sign of d - eta_k/2",
                    });
                };
                (if n % 2 == 0 { 1 } else { sign }, arctg)
            }
        };
        let rotation = Interval::pi_times(prec, 2 * ((p % beta) * term.k % beta) as i64, beta);
        let argument = &rotation + &angle.mul_integer(&Integer::from(n));
        let r_n = term.modulus.pow_u64(n)?;
        let r_2n = term.modulus.pow_u64(2 * n)?;
        let cross = (&r_n * &argument.cos()).mul_integer(&Integer::from(2 * sign));
        let factor = &(&Interval::one(prec) - &cross) + &r_2n;
        product = &product * &factor;
    }
    Ok(product)
}

/// Spanning tree count of `C^Γ_{βn}` from the `⌈β/2⌉ − 1` term product.
/// Structural zeros return without numeric work.
pub fn theorem1_count(spec: &DirectedCirculantSpec, budget: PrecisionBudget) -> Result<CountResult> {
    if spec.d() < 2 {
        return Err(Error::InvalidSpec("the product formula needs at least two generators".into()));
    }
    if let Some(reason) = is_structurally_zero(spec) {
        return Ok(CountResult::structural_zero(reason));
    }
    let certified = certify_integer(budget, |bits| theorem1_enclosure(spec, bits, PhaseForm::Arctangent))?;
    CountResult::from_certified(certified)
}

/// `n d^{βn−1} ∏_{k=1}^{β−1} (1 − (1 + Σ_m ζ^{γ_m k})^n ζ^{pk} / d^n)`
/// with `ζ = exp(2πi/β)`, evaluated in complex interval arithmetic.
pub fn betaproduct_enclosure(spec: &DirectedCirculantSpec, prec: u32) -> Result<Interval> {
    let (beta, n, p, d) = (spec.beta(), spec.n(), spec.p(), spec.d());
    let d_iv = Interval::from_i64(prec, d as i64);
    let mut product = ComplexInterval::one(prec);
    for k in 1..beta {
        let mut w = ComplexInterval::one(prec);
        for a in gamma_residues(spec, k) {
            w = &w + &ComplexInterval::unit_root(prec, a, beta);
        }
        let twist = ComplexInterval::unit_root(prec, (p % beta) * k % beta, beta);
        let t = &w.div_real(&d_iv)?.pow(n) * &twist;
        product = &product * &(&ComplexInterval::one(prec) - &t);
    }
    if !product.im.contains_zero() {
        return Err(Error::Inconsistent(format!(
            "beta-product has nonzero imaginary part {}",
            product.im
        )));
    }
    let lead = Integer::from(n) * Integer::from(d).pow(exponent(beta * n - 1)?);
    Ok(product.re.mul_integer(&lead))
}

/// Branch-free reference path: zero when `gcd(p, n) ≠ 1`, otherwise the
/// certified β-product.
pub fn betaproduct_count(spec: &DirectedCirculantSpec, budget: PrecisionBudget) -> Result<CountResult> {
    if gcd(spec.p(), spec.n()) != 1 {
        return Ok(CountResult::structural_zero(ZeroReason::NotCoprime));
    }
    let certified = certify_integer(budget, |bits| betaproduct_enclosure(spec, bits))?;
    CountResult::from_certified(certified)
}

fn single_gamma(spec: &DirectedCirculantSpec) -> Result<u64> {
    match spec.gammas() {
        [g] => Ok(*g),
        _ => Err(Error::InvalidSpec("the two-generator formula needs exactly one gamma".into())),
    }
}

/// `n 2^{βn−1+[β, γ even]} ∏_k (1 − 2cos(2π(p + γn/2)k/β) cos^n(πγk/β) + cos^{2n}(πγk/β))`.
pub fn theorem2_enclosure(spec: &DirectedCirculantSpec, prec: u32) -> Result<Interval> {
    let gamma = single_gamma(spec)?;
    let (beta, n, p) = (spec.beta(), spec.n(), spec.p());
    let extra = u64::from(beta % 2 == 0 && gamma % 2 == 0);
    let lead = Integer::from(n) * Integer::from(2).pow(exponent(beta * n - 1 + extra)?);
    let mut product = Interval::from_integer(prec, &lead);
    let two_beta = 2 * beta as u128;
    // 2π(p + γn/2)k/β = π (2p + γn) k / β
    let doubled = (2 * p as u128 + gamma as u128 * n as u128) % two_beta;
    for k in 1..=half_range(beta) {
        let outer = Interval::pi_times(prec, (doubled * k as u128 % two_beta) as i64, beta).cos();
        let inner = Interval::pi_times(prec, (gamma as u128 * k as u128 % two_beta) as i64, beta).cos();
        let inner_n = inner.pow_u64(n)?;
        let inner_2n = inner.pow_u64(2 * n)?;
        let cross = (&outer * &inner_n).mul_integer(&Integer::from(2));
        let factor = &(&Interval::one(prec) - &cross) + &inner_2n;
        product = &product * &factor;
    }
    Ok(product)
}

pub fn theorem2_count(spec: &DirectedCirculantSpec, budget: PrecisionBudget) -> Result<CountResult> {
    single_gamma(spec)?;
    if let Some(reason) = is_structurally_zero(spec) {
        return Ok(CountResult::structural_zero(reason));
    }
    let certified = certify_integer(budget, |bits| theorem2_enclosure(spec, bits))?;
    CountResult::from_certified(certified)
}

/// The directed cycle `C^p_n`: `n` spanning trees when `gcd(p, n) = 1`,
/// none otherwise.
pub fn directed_cycle_count(p: u64, n: u64) -> Result<TreeCount> {
    if p == 0 || n == 0 {
        return Err(Error::InvalidSpec("p and n must be positive".into()));
    }
    Ok(if gcd(p, n) == 1 {
        TreeCount::from(n)
    } else {
        TreeCount::zero()
    })
}
