use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::hnf::{hnf, hnf_form};
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// A sublattice of `Z^n` stored as the nonzero rows of its Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeBasis {
    basis: IntMatrix,
}

impl LatticeBasis {
    /// Canonical basis of the row span of `generators`.
    pub fn from_generators(generators: &IntMatrix) -> Self {
        Self {
            basis: hnf_form(generators).nonzero_rows(),
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            basis: IntMatrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            basis: IntMatrix::identity(ambient_dim),
        }
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.rows() == 0
    }

    /// Membership by back-substitution against the echelon rows.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient_dim() {
            return false;
        }
        let mut v = v.to_vec();
        for row in self.basis.row_iter() {
            let p = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            if v[..p].iter().any(|x| !x.is_zero()) {
                return false;
            }
            let (q, r) = v[p].div_rem(&row[p]);
            if !r.is_zero() {
                return false;
            }
            if !q.is_zero() {
                for (x, b) in v.iter_mut().zip(row) {
                    *x -= &q * b;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }

    /// Columns (coordinates) on which every basis vector vanishes.
    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.ambient_dim())
            .filter(|&j| self.basis.is_zero_column(j))
            .collect()
    }
}

/// True iff the integer row spans of `a` and `b` coincide.
pub fn row_lattice_equal(a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    if a.cols() != b.cols() {
        return Err(Error::DimensionMismatch {
            expected: a.cols(),
            found: b.cols(),
        });
    }
    Ok(hnf_form(a).nonzero_rows() == hnf_form(b).nonzero_rows())
}

/// Basis of `{x in Z^cols : m x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> LatticeBasis {
    let n = m.cols();
    let t = m.transpose();
    let res = hnf(&t);
    let kernel_rows: Vec<usize> = (0..n).filter(|&i| res.form.is_zero_row(i)).collect();
    LatticeBasis::from_generators(&res.transform.select_rows(&kernel_rows))
}

/// An integer `x` with `a x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    // U a^T = H; solve z H = b^T by substitution, then x^T = z U.
    let res = hnf(&a.transpose());
    let mut r = b.to_vec();
    let mut z = vec![BigInt::zero(); a.cols()];
    for (k, row) in res.form.row_iter().enumerate() {
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            break;
        };
        if r[..p].iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        let (q, rem) = r[p].div_rem(&row[p]);
        if !rem.is_zero() {
            return Ok(None);
        }
        for (x, h) in r.iter_mut().zip(row) {
            *x -= &q * h;
        }
        z[k] = q;
    }
    if r.iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    let x = (0..a.cols())
        .map(|j| {
            z.iter()
                .enumerate()
                .map(|(k, zk)| zk * res.transform.get(k, j))
                .sum()
        })
        .collect();
    Ok(Some(x))
}

/// Kernel of `a` where the last `moduli.len()` rows are read modulo the given moduli.
///
/// Computed as the projection onto the first `n` coordinates of the kernel of
/// the augmented matrix `[a | C]` with `C = [0; diag(moduli)]`.
pub fn kernel_with_torsion(a: &IntMatrix, moduli: &[BigInt]) -> Result<LatticeBasis> {
    if let Some(c) = moduli.iter().find(|c| !c.is_positive()) {
        return Err(Error::NonPositiveModulus(c.to_string()));
    }
    let h = moduli.len();
    if h > a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: h,
        });
    }
    if h == 0 {
        return Ok(integer_kernel(a));
    }
    let free = a.rows() - h;
    let mut c = IntMatrix::zeros(a.rows(), h);
    for (j, modulus) in moduli.iter().enumerate() {
        c.set(free + j, j, modulus.clone());
    }
    let augmented = a.hstack(&c)?;
    let k = integer_kernel(&augmented);
    let n = a.cols();
    let cols: Vec<usize> = (0..n).collect();
    Ok(LatticeBasis::from_generators(
        &k.basis().select_columns(&cols),
    ))
}

/// Intersection of two sublattices of the same ambient space.
pub fn lattice_intersection(b1: &LatticeBasis, b2: &LatticeBasis) -> Result<LatticeBasis> {
    let d = b1.ambient_dim();
    if d != b2.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: b2.ambient_dim(),
        });
    }
    if b1.is_zero() || b2.is_zero() {
        return Ok(LatticeBasis::zero(d));
    }
    // x*B1 = y*B2  <=>  (x, y) in the left kernel of [B1; -B2].
    let mut neg = b2.basis().clone();
    for i in 0..neg.rows() {
        for v in neg.row_mut(i) {
            *v = -&*v;
        }
    }
    let stacked = b1.basis().vstack(&neg)?;
    let left = integer_kernel(&stacked.transpose());
    let r1: Vec<usize> = (0..b1.rank()).collect();
    let xs = left.basis().select_columns(&r1);
    let vectors = xs.checked_mul(b1.basis())?;
    Ok(LatticeBasis::from_generators(&vectors))
}
