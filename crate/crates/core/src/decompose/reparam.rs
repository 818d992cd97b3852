//! Nice generating systems and monomial reparametrizations of torsion-free semigroups.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{decompose_semigroup, Block, Mode};
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Permutation};
use crate::presentation::SemigroupPresentation;

/// `D = P A Q` from the direct-mode diagonalization. The columns of `D`
/// generate a semigroup isomorphic to `S` whose blocks have disjoint supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceGenerators {
    pub matrix: IntMatrix,
    pub column_order: Permutation,
    pub blocks: Vec<Block>,
}

impl NiceGenerators {
    /// `D Q^T`: column `j` is the new generator replacing original generator `j`.
    pub fn unpermuted(&self) -> IntMatrix {
        self.column_order.unpermute_columns(&self.matrix)
    }
}

pub fn nice_generators(p: &SemigroupPresentation) -> Result<NiceGenerators> {
    let dec = decompose_semigroup(p, Mode::Direct)?;
    Ok(NiceGenerators {
        matrix: dec.diagonal,
        column_order: dec.column_order,
        blocks: dec.blocks,
    })
}

/// Monomial maps for the generators of one block, over its own parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterBlock {
    /// Original generator indices, ascending.
    pub generators: Vec<usize>,
    /// Global (0-based) parameter indices owned by this block.
    pub parameters: Vec<usize>,
    /// `exponents[k][c]` is the power of `parameters[k]` in the monomial of `generators[c]`.
    pub exponents: IntMatrix,
}

/// `x_j = prod_k q_k^{d_kj}` with parameters partitioned among blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parametrization {
    pub blocks: Vec<ParameterBlock>,
    labels: Vec<String>,
    parameter_count: usize,
}

impl Parametrization {
    pub fn generator_count(&self) -> usize {
        self.labels.len()
    }

    pub fn parameter_count(&self) -> usize {
        self.parameter_count
    }

    pub fn label(&self, j: usize) -> &str {
        &self.labels[j]
    }

    /// Nonzero `(parameter, exponent)` pairs of the monomial for generator `j`.
    pub fn monomial(&self, j: usize) -> Vec<(usize, BigInt)> {
        for b in &self.blocks {
            if let Some(c) = b.generators.iter().position(|&g| g == j) {
                return b
                    .parameters
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| !b.exponents.get(*k, c).is_zero())
                    .map(|(k, &q)| (q, b.exponents.get(k, c).clone()))
                    .collect();
            }
        }
        Vec::new()
    }

    /// All exponents as one `parameters x generators` matrix.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.parameter_count, self.generator_count());
        for b in &self.blocks {
            for (k, &q) in b.parameters.iter().enumerate() {
                for (c, &g) in b.generators.iter().enumerate() {
                    m.set(q, g, b.exponents.get(k, c).clone());
                }
            }
        }
        m
    }
}

impl fmt::Display for Parametrization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.generator_count() {
            write!(f, "{} =", self.labels[j])?;
            let mono = self.monomial(j);
            if mono.is_empty() {
                write!(f, " 1")?;
            }
            for (q, e) in mono {
                if e.is_one() {
                    write!(f, " q{}", q + 1)?;
                } else {
                    write!(f, " q{}^{}", q + 1, e)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Reparametrizes the toric variety of `S` through its nice generators; the
/// rows of each diagonal block become that block's parameters, numbered
/// consecutively across blocks.
pub fn reparametrize(p: &SemigroupPresentation) -> Result<Parametrization> {
    if !p.is_torsion_free() {
        return Err(Error::TorsionPresent(p.moduli().len()));
    }
    let nice = nice_generators(p)?;
    let mut next = 0;
    let blocks = nice
        .blocks
        .into_iter()
        .map(|b| {
            let rows = b.matrix.rows();
            let parameters: Vec<usize> = (next..next + rows).collect();
            next += rows;
            ParameterBlock {
                generators: b.generators,
                parameters,
                exponents: b.matrix,
            }
        })
        .collect();
    Ok(Parametrization {
        blocks,
        labels: (0..p.generator_count()).map(|j| p.label(j)).collect(),
        parameter_count: next,
    })
}
