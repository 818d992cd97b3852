use num_bigint::BigInt;
use num_traits::One;

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// A bijection on `0..n`, stored as `order[new_position] = old_index`.
///
/// As a column permutation matrix `Q`, `M * Q` places column `order[j]` of `M`
/// at position `j`. `Q^{-1} = Q^T`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    order: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            order: (0..n).collect(),
        }
    }

    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &i in &order {
            if i >= n || seen[i] {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: i,
                });
            }
            seen[i] = true;
        }
        Ok(Self { order })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.order.len()];
        for (new, &old) in self.order.iter().enumerate() {
            inv[old] = new;
        }
        Self { order: inv }
    }

    /// New position of original index `old`.
    pub fn position_of(&self, old: usize) -> usize {
        self.order
            .iter()
            .position(|&o| o == old)
            .expect("index in range")
    }

    pub fn matrix(&self) -> IntMatrix {
        let n = self.order.len();
        let mut q = IntMatrix::zeros(n, n);
        for (new, &old) in self.order.iter().enumerate() {
            q.set(old, new, BigInt::one());
        }
        q
    }

    /// `m * Q`.
    pub fn permute_columns(&self, m: &IntMatrix) -> IntMatrix {
        m.select_columns(&self.order)
    }

    /// `m * Q^T`, undoing [`Permutation::permute_columns`].
    pub fn unpermute_columns(&self, m: &IntMatrix) -> IntMatrix {
        self.inverse().permute_columns(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_agrees_with_column_selection() {
        let p = Permutation::from_order(vec![0, 1, 4, 5, 2, 3, 6]).unwrap();
        let m = IntMatrix::from_i64(&[&[1, 2, 3, 4, 5, 6, 7]]);
        assert_eq!(&m * &p.matrix(), p.permute_columns(&m));
        assert_eq!(p.unpermute_columns(&p.permute_columns(&m)), m);
        let q = p.matrix();
        assert_eq!(&q * &q.transpose(), IntMatrix::identity(7));
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_order(vec![0, 0]).is_err());
        assert!(Permutation::from_order(vec![0, 2]).is_err());
    }
}
