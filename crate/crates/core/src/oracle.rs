//! Ground-truth counts: exact cofactor determinants and an independent
//! certified eigenvalue product.

use rug::Integer;

use crate::certify::{certify_integer, PrecisionBudget};
use crate::count::{CountResult, TreeCount};
use crate::error::{Error, Result};
use crate::graph::{instance_eigenvalue, laplacian, GeneralCirculantInstance, LaplacianMatrix};
use crate::interval::{ComplexInterval, Interval};

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    size: usize,
    entries: Vec<Integer>,
}

impl ExactMatrix {
    pub fn new(size: usize, entries: Vec<Integer>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::InvalidSpec(format!(
                "{} entries do not form a {size}x{size} matrix",
                entries.len()
            )));
        }
        Ok(Self { size, entries })
    }

    pub fn from_rows<T: Into<Integer> + Copy>(rows: &[Vec<T>]) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidSpec("matrix is not square".into()));
        }
        let entries = rows.iter().flatten().map(|&x| x.into()).collect();
        Ok(Self { size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &Integer {
        &self.entries[row * self.size + col]
    }

    /// The matrix with row and column `v` removed.
    pub fn minor(&self, v: usize) -> Self {
        let n = self.size;
        let entries = (0..n)
            .filter(|&i| i != v)
            .flat_map(|i| (0..n).filter(move |&j| j != v).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Self {
            size: n.saturating_sub(1),
            entries,
        }
    }
}

impl From<&LaplacianMatrix> for ExactMatrix {
    fn from(l: &LaplacianMatrix) -> Self {
        let n = l.size();
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| Integer::from(l.get(i, j)))
            .collect();
        Self { size: n, entries }
    }
}

/// Fraction-free Gaussian elimination. Every division is exact.
pub fn bareiss_determinant(m: &ExactMatrix) -> Integer {
    let n = m.size;
    if n == 0 {
        return Integer::from(1);
    }
    let mut a: Vec<Vec<Integer>> = (0..n)
        .map(|i| m.entries[i * n..(i + 1) * n].to_vec())
        .collect();
    let mut negate = false;
    let mut prev = Integer::from(1);
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Integer::new(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let v = Integer::from(&row[j] * &pivot_row[k]) - Integer::from(&row[k] * &pivot_row[j]);
                row[j] = v.div_exact(&prev);
            }
            row[k] = Integer::new();
        }
        prev = pivot_row[k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant of the Laplacian with row and column `v` deleted: converging
/// arborescences at `v` for directed graphs, spanning trees for undirected.
pub fn cofactor_count(l: &LaplacianMatrix, v: usize) -> Result<TreeCount> {
    if v >= l.size() {
        return Err(Error::IndexOutOfRange {
            index: v as u64,
            order: l.size() as u64,
        });
    }
    TreeCount::new(bareiss_determinant(&ExactMatrix::from(l).minor(v)))
}

/// Total arborescence count `Σ_v τ⁻(G, v) = N · τ⁻(G, 0)` of a circulant digraph.
pub fn tau_directed(inst: &GeneralCirculantInstance) -> Result<TreeCount> {
    if !inst.is_directed() {
        return Err(Error::InvalidSpec("tau_directed needs a directed instance".into()));
    }
    let l = laplacian(inst);
    let at_root = cofactor_count(&l, 0)?;
    #[cfg(any(debug_assertions, test))]
    if l.size() > 1 {
        let other = cofactor_count(&l, l.size() - 1)?;
        debug_assert_eq!(at_root, other, "circulant cofactors differ");
    }
    TreeCount::new(at_root.into_inner() * Integer::from(inst.order()))
}

pub fn tau_undirected(inst: &GeneralCirculantInstance) -> Result<TreeCount> {
    if inst.is_directed() {
        return Err(Error::InvalidSpec("tau_undirected needs an undirected instance".into()));
    }
    cofactor_count(&laplacian(inst), 0)
}

/// Enclosure of `∏_{k=1}^{N−1} λ_k` (directed) or that product over `N`
/// (undirected), computed from the characters of the instance.
pub fn tau_eigenproduct(inst: &GeneralCirculantInstance, prec: u32) -> Result<Interval> {
    let order = inst.order() as u64;
    let mut prod = ComplexInterval::one(prec);
    for k in 1..order {
        prod = &prod * &instance_eigenvalue(inst, k, prec)?;
    }
    if !prod.im.contains_zero() {
        return Err(Error::Inconsistent(format!(
            "eigenvalue product has nonzero imaginary part {}",
            prod.im
        )));
    }
    if inst.is_directed() {
        Ok(prod.re)
    } else {
        prod.re.div(&Interval::from_i64(prec, order as i64))
    }
}

/// Certified integer from [`tau_eigenproduct`].
pub fn tau_eigenproduct_count(inst: &GeneralCirculantInstance, budget: PrecisionBudget) -> Result<CountResult> {
    let certified = certify_integer(budget, |bits| tau_eigenproduct(inst, bits))?;
    CountResult::from_certified(certified)
}
