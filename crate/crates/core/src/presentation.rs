//! Generator matrices of finitely generated commutative semigroups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::linalg::{kernel_with_torsion, IntMatrix, LatticeBasis};

/// A semigroup `S` in `Z^m x Z/c_1 x ... x Z/c_h` generated by the columns of
/// `matrix`, whose last `h` rows are read modulo `moduli`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupPresentation {
    matrix: IntMatrix,
    moduli: Vec<BigInt>,
    labels: Option<Vec<String>>,
    small: Vec<Vec<i64>>,
    small_moduli: Vec<i64>,
}

impl SemigroupPresentation {
    pub fn new(matrix: IntMatrix, moduli: Vec<BigInt>) -> Result<Self> {
        if let Some(c) = moduli.iter().find(|c| !c.is_positive()) {
            return Err(Error::NonPositiveModulus(c.to_string()));
        }
        if moduli.len() > matrix.rows() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: moduli.len(),
            });
        }
        let free = matrix.rows() - moduli.len();
        let mut matrix = matrix;
        for (k, c) in moduli.iter().enumerate() {
            for j in 0..matrix.cols() {
                let v = matrix.get(free + k, j).mod_floor(c);
                matrix.set(free + k, j, v);
            }
        }
        if let Some(j) = (0..matrix.cols()).find(|&j| matrix.is_zero_column(j)) {
            return Err(Error::ZeroGenerator(j));
        }
        let small = matrix.to_i64_rows()?;
        let small_moduli = moduli
            .iter()
            .map(crate::linalg::matrix::to_i64)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            matrix,
            moduli,
            labels: None,
            small,
            small_moduli,
        })
    }

    pub fn torsion_free(matrix: IntMatrix) -> Result<Self> {
        Self::new(matrix, Vec::new())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.generator_count() {
            return Err(Error::DimensionMismatch {
                expected: self.generator_count(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn moduli(&self) -> &[BigInt] {
        &self.moduli
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn generator_count(&self) -> usize {
        self.matrix.cols()
    }

    /// Number of rows (free plus torsion) of a degree vector.
    pub fn degree_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn free_rows(&self) -> usize {
        self.matrix.rows() - self.moduli.len()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.moduli.is_empty()
    }

    /// The lattice `ker S` of integer relations among the generators.
    pub fn kernel(&self) -> LatticeBasis {
        kernel_with_torsion(&self.matrix, &self.moduli).expect("moduli validated at construction")
    }

    /// Sub-presentation generated by the listed columns (same ambient group).
    pub fn restrict(&self, columns: &[usize]) -> Result<Self> {
        let mut sub = Self::new(self.matrix.select_columns(columns), self.moduli.clone())?;
        if let Some(labels) = &self.labels {
            sub.labels = Some(columns.iter().map(|&j| labels[j].clone()).collect());
        }
        Ok(sub)
    }

    /// Rows of the generator matrix as machine integers (torsion rows reduced).
    pub(crate) fn small_rows(&self) -> &[Vec<i64>] {
        &self.small
    }

    pub(crate) fn small_moduli(&self) -> &[i64] {
        &self.small_moduli
    }

    /// Reduces torsion coordinates of a degree vector into `[0, c)`.
    pub(crate) fn normalize_degree(&self, degree: &mut [i64]) {
        let free = self.free_rows();
        for (k, &c) in self.small_moduli.iter().enumerate() {
            degree[free + k] = degree[free + k].rem_euclid(c);
        }
    }

    /// Label of generator `j`, defaulting to `x{j+1}`.
    pub fn label(&self, j: usize) -> String {
        match &self.labels {
            Some(l) => l[j].clone(),
            None => format!("x{}", j + 1),
        }
    }
}
