//! Circulant graph families, their concrete instances, Laplacians and
//! spectra.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::interval::{ComplexInterval, Interval};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The directed circulant `C^Γ_{βn}` with `Γ = {p, γ_1 n + p, …, γ_{d−1} n + p}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedCirculantSpec {
    beta: u64,
    n: u64,
    p: u64,
    gammas: Vec<u64>,
}

impl DirectedCirculantSpec {
    pub fn new(beta: u64, n: u64, p: u64, gammas: Vec<u64>) -> Result<Self> {
        if beta == 0 || n == 0 || p == 0 {
            return Err(Error::InvalidSpec(format!(
                "beta, n and p must be positive (got beta={beta}, n={n}, p={p})"
            )));
        }
        if let Some(&g) = gammas.iter().find(|&&g| g == 0 || g > beta) {
            return Err(Error::InvalidSpec(format!(
                "gamma {g} outside 1..={beta}"
            )));
        }
        if gammas.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidSpec("gammas must be nondecreasing".into()));
        }
        let order = beta
            .checked_mul(n)
            .ok_or_else(|| Error::InvalidSpec("beta * n overflows".into()))?;
        order
            .checked_add(p)
            .ok_or_else(|| Error::InvalidSpec("generators overflow".into()))?;
        Ok(Self { beta, n, p, gammas })
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn gammas(&self) -> &[u64] {
        &self.gammas
    }

    /// Number of generators, `1 + len(gammas)`.
    pub fn d(&self) -> u64 {
        1 + self.gammas.len() as u64
    }

    /// Vertex count `βn`.
    pub fn order(&self) -> u64 {
        self.beta * self.n
    }

    /// The unreduced generators `p, γ_m n + p`.
    pub fn generators(&self) -> Vec<u64> {
        std::iter::once(self.p)
            .chain(self.gammas.iter().map(|g| g * self.n + self.p))
            .collect()
    }
}

impl fmt::Display for DirectedCirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "digraph(beta={}, n={}, p={}, gammas={:?})", self.beta, self.n, self.p, self.gammas)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CyclePowerVariant {
    /// `C^n_{βn}`
    PowerN,
    /// `C^{n−1}_{βn}`
    PowerNMinus1,
}

impl CyclePowerVariant {
    /// The power `k` of the cycle for a given `n`.
    pub fn power(self, n: u64) -> u64 {
        match self {
            Self::PowerN => n,
            Self::PowerNMinus1 => n - 1,
        }
    }
}

/// The cycle power graph `C^n_{βn}` or `C^{n−1}_{βn}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclePowerSpec {
    beta: u64,
    n: u64,
    variant: CyclePowerVariant,
}

impl CyclePowerSpec {
    pub fn new(beta: u64, n: u64, variant: CyclePowerVariant) -> Result<Self> {
        if beta < 2 {
            return Err(Error::InvalidSpec(format!("beta must be at least 2, got {beta}")));
        }
        if n == 0 {
            return Err(Error::InvalidSpec("n must be positive".into()));
        }
        if variant == CyclePowerVariant::PowerNMinus1 && n < 2 {
            return Err(Error::InvalidSpec(
                "the (n-1)-th power needs n >= 2 (n = 1 is edgeless)".into(),
            ));
        }
        beta.checked_mul(n)
            .ok_or_else(|| Error::InvalidSpec("beta * n overflows".into()))?;
        Ok(Self { beta, n, variant })
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn variant(&self) -> CyclePowerVariant {
        self.variant
    }

    pub fn power(&self) -> u64 {
        self.variant.power(self.n)
    }

    pub fn order(&self) -> u64 {
        self.beta * self.n
    }
}

impl fmt::Display for CyclePowerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = match self.variant {
            CyclePowerVariant::PowerN => "n",
            CyclePowerVariant::PowerNMinus1 => "n-1",
        };
        write!(f, "cycle-power(beta={}, n={}, power={power})", self.beta, self.n)
    }
}

/// A concrete circulant graph on `order` vertices.
///
/// Directed instances connect `v → v + g` for every residue `g`, with residue
/// 0 kept as a self-loop. Undirected instances store `g ∈ [1, order/2]` and
/// connect `v` to `v ± g`; the multiplicity of `g` is the number of parallel
/// edges from `v` to `v + g` (and to `v − g`, which is the same vertex when
/// `2g = order`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralCirculantInstance {
    order: usize,
    directed: bool,
    generators: BTreeMap<usize, u32>,
}

impl GeneralCirculantInstance {
    pub fn new(order: usize, directed: bool, generators: BTreeMap<usize, u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidSpec("instance needs at least one vertex".into()));
        }
        for (&g, &m) in &generators {
            if m == 0 {
                return Err(Error::InvalidSpec(format!("generator {g} has multiplicity 0")));
            }
            if directed && g >= order {
                return Err(Error::InvalidSpec(format!("residue {g} not below {order}")));
            }
            if !directed && (g == 0 || 2 * g > order) {
                return Err(Error::InvalidSpec(format!(
                    "undirected generator {g} outside 1..={}",
                    order / 2
                )));
            }
        }
        Ok(Self {
            order,
            directed,
            generators,
        })
    }

    /// Builds an instance from generators, reducing them modulo `order` and
    /// accumulating multiplicities. Undirected generators are folded onto
    /// `[0, order/2]`.
    pub fn from_generators<I>(order: usize, directed: bool, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        if order == 0 {
            return Err(Error::InvalidSpec("instance needs at least one vertex".into()));
        }
        let mut map = BTreeMap::new();
        for g in generators {
            let mut r = (g % order as u64) as usize;
            if !directed {
                r = r.min(order - r);
            }
            *map.entry(r).or_insert(0) += 1;
        }
        Self::new(order, directed, map)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn generators(&self) -> &BTreeMap<usize, u32> {
        &self.generators
    }

    pub fn loop_multiplicity(&self) -> u32 {
        self.generators.get(&0).copied().unwrap_or(0)
    }

    /// Out-degree of every vertex, counting loops and parallel edges.
    pub fn degree(&self) -> u64 {
        self.generators
            .iter()
            .map(|(&g, &m)| {
                let m = u64::from(m);
                if self.directed || 2 * g == self.order {
                    m
                } else {
                    2 * m
                }
            })
            .sum()
    }

    /// Each directed edge `(from, to)` once per multiplicity; undirected
    /// edges appear in both orientations.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let n = self.order;
        let mut edges = Vec::new();
        for v in 0..n {
            for (&g, &m) in &self.generators {
                for _ in 0..m {
                    edges.push((v, (v + g) % n));
                    if !self.directed && 2 * g != n {
                        edges.push((v, (v + n - g) % n));
                    }
                }
            }
        }
        edges
    }
}

/// Combinatorial Laplacian `D − A` with exact integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaplacianMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl LaplacianMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.size + col]
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.entries[row * self.size..(row + 1) * self.size]
    }

    pub fn trace(&self) -> i64 {
        (0..self.size).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Builds `D − A` from an edge list with multiplicities; loops cancel.
    pub fn from_edges(size: usize, edges: &[(usize, usize)]) -> Self {
        let mut entries = vec![0i64; size * size];
        for &(from, to) in edges {
            entries[from * size + from] += 1;
            entries[from * size + to] -= 1;
        }
        Self { size, entries }
    }
}

/// `(β, n, p, γ)` ↦ instance on `βn` vertices with generators
/// `{p mod N} ∪ {(γ_m n + p) mod N}`.
pub fn reduce_to_instance(spec: &DirectedCirculantSpec) -> Result<GeneralCirculantInstance> {
    let order = usize::try_from(spec.order())
        .map_err(|_| Error::InvalidSpec("vertex count exceeds usize".into()))?;
    GeneralCirculantInstance::from_generators(order, true, spec.generators())
}

pub fn cycle_power_instance(spec: &CyclePowerSpec) -> Result<GeneralCirculantInstance> {
    let order = usize::try_from(spec.order())
        .map_err(|_| Error::InvalidSpec("vertex count exceeds usize".into()))?;
    let power = spec.power() as usize;
    let mut generators = BTreeMap::new();
    for g in 1..=power {
        // at β = 2 the last generator is N/2, reached from both sides
        let m = if 2 * g == order { 2 } else { 1 };
        generators.insert(g, m);
    }
    GeneralCirculantInstance::new(order, false, generators)
}

pub fn laplacian(inst: &GeneralCirculantInstance) -> LaplacianMatrix {
    let n = inst.order;
    let mut entries = vec![0i64; n * n];
    for v in 0..n {
        for (&g, &m) in &inst.generators {
            let m = i64::from(m);
            let targets: &[usize] = if inst.directed || 2 * g == n {
                &[(v + g) % n]
            } else {
                &[(v + g) % n, (v + n - g) % n]
            };
            for &t in targets {
                entries[v * n + v] += m;
                entries[v * n + t] -= m;
            }
        }
    }
    LaplacianMatrix { size: n, entries }
}

fn check_index(k: u64, order: u64) -> Result<()> {
    if k >= order {
        return Err(Error::IndexOutOfRange { index: k, order });
    }
    Ok(())
}

/// `2 cos(2π r / order)` with `r` folded to `min(r, order − r)`, so the
/// enclosures for `r` and `order − r` are identical.
fn two_cos_fraction(prec: u32, r: u64, order: u64) -> Interval {
    let r = r % order;
    let r = r.min(order - r);
    if r == 0 {
        return Interval::from_i64(prec, 2);
    }
    Interval::pi_times(prec, 2 * r as i64, order).cos().mul_integer(&2.into())
}

/// Eigenvalue `λ_k` of the Laplacian of any circulant instance, from the
/// character `χ_k(x) = exp(2πikx/N)`.
pub fn instance_eigenvalue(inst: &GeneralCirculantInstance, k: u64, prec: u32) -> Result<ComplexInterval> {
    let order = inst.order as u64;
    check_index(k, order)?;
    if k == 0 {
        return Ok(ComplexInterval::zero(prec));
    }
    let mut acc = ComplexInterval::zero(prec);
    for (&g, &m) in &inst.generators {
        let m = Interval::from_i64(prec, i64::from(m));
        let gk = (g as u128 * k as u128 % order as u128) as u64;
        let term = if inst.directed {
            &ComplexInterval::one(prec) - &ComplexInterval::unit_root(prec, gk, order)
        } else if 2 * g as u64 == order {
            let v = if k % 2 == 0 { 0 } else { 2 };
            ComplexInterval::from_real(Interval::from_i64(prec, v))
        } else {
            ComplexInterval::from_real(&Interval::from_i64(prec, 2) - &two_cos_fraction(prec, gk, order))
        };
        acc = &acc + &term.scale(&m);
    }
    Ok(acc)
}

/// `λ_k = d − Σ_{g ∈ Γ} exp(2πi g k / N)` for the directed family.
pub fn digraph_eigenvalue(spec: &DirectedCirculantSpec, k: u64, prec: u32) -> Result<ComplexInterval> {
    let order = spec.order();
    check_index(k, order)?;
    if k == 0 {
        return Ok(ComplexInterval::zero(prec));
    }
    let mut acc = ComplexInterval::from_real(Interval::from_i64(prec, spec.d() as i64));
    for g in spec.generators() {
        let gk = (g as u128 * k as u128 % order as u128) as u64;
        acc = &acc - &ComplexInterval::unit_root(prec, gk, order);
    }
    Ok(acc)
}

/// `λ_k = 2m − 2 Σ_{j=1}^{m} cos(2πkj/N)` with `m` the cycle power.
pub fn cycle_power_eigenvalue(spec: &CyclePowerSpec, k: u64, prec: u32) -> Result<Interval> {
    let order = spec.order();
    check_index(k, order)?;
    if k == 0 {
        return Ok(Interval::zero(prec));
    }
    let m = spec.power();
    let mut acc = Interval::from_i64(prec, 2 * m as i64);
    for j in 1..=m {
        let r = (k as u128 * j as u128 % order as u128) as u64;
        acc = &acc - &two_cos_fraction(prec, r, order);
    }
    Ok(acc)
}

/// Why a directed spec has no spanning trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZeroReason {
    /// `gcd(p, n) ≠ 1`
    NotCoprime,
    /// `gcd(p, n) = 1` but `β`, `p` and every `γ_m` are even.
    AllEven,
}

impl ZeroReason {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::NotCoprime => "gcd(p,n)!=1",
            Self::AllEven => "beta, p and all gammas even",
        }
    }
}

impl fmt::Display for ZeroReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn is_structurally_zero(spec: &DirectedCirculantSpec) -> Option<ZeroReason> {
    if gcd(spec.p, spec.n) != 1 {
        return Some(ZeroReason::NotCoprime);
    }
    let even = |x: u64| x % 2 == 0;
    if even(spec.beta) && even(spec.p) && spec.gammas.iter().all(|&g| even(g)) {
        return Some(ZeroReason::AllEven);
    }
    None
}
