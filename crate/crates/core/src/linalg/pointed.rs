//! Pointedness (`S ∩ -S = {0}`) and positive gradings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::to_i64;
use super::simplex::feasible_point;
use crate::error::{Error, Result};
use crate::presentation::SemigroupPresentation;

/// A positive grading certifying pointedness.
///
/// `functional` acts on the free coordinates of the ambient group and is scaled
/// so that `weights[i]`, its value on generator `i`, is a positive integer and
/// the weights are coprime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    pub functional: Vec<BigRational>,
    pub weights: Vec<i64>,
}

impl Grading {
    /// Weighted degree `sum(weights[i] * exponent[i])`.
    pub fn weigh(&self, exponent: &[i64]) -> i128 {
        self.weights
            .iter()
            .zip(exponent)
            .map(|(&w, &e)| w as i128 * e as i128)
            .sum()
    }

    /// `functional · m` on the free coordinates of a degree vector.
    pub fn evaluate(&self, degree: &[i64]) -> BigRational {
        self.functional
            .iter()
            .zip(degree)
            .map(|(f, &m)| f * BigRational::from_integer(BigInt::from(m)))
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pointedness {
    Pointed(Grading),
    /// A nonzero nonnegative element of `ker S`.
    NotPointed {
        witness: Vec<BigInt>,
    },
}

impl Pointedness {
    pub fn is_pointed(&self) -> bool {
        matches!(self, Pointedness::Pointed(_))
    }

    pub fn grading(&self) -> Option<&Grading> {
        match self {
            Pointedness::Pointed(g) => Some(g),
            Pointedness::NotPointed { .. } => None,
        }
    }

    /// The grading, or a `NotPointed` error carrying the witness.
    pub fn into_grading(self) -> Result<Grading> {
        match self {
            Pointedness::Pointed(g) => Ok(g),
            Pointedness::NotPointed { witness } => Err(Error::NotPointed {
                witness: witness.iter().map(ToString::to_string).collect(),
            }),
        }
    }
}

/// Decides `ker S ∩ N^n = {0}`.
///
/// A functional positive on every generator certifies pointedness directly;
/// the all-ones functional is tried first. Otherwise exact rational
/// feasibility of `{x >= 0, sum(x) = 1, A_free x = 0}` decides, and a feasible
/// point becomes the witness.
pub fn is_pointed(p: &SemigroupPresentation) -> Result<Pointedness> {
    let n = p.generator_count();
    let free = p.free_rows();
    let a = p.matrix();
    let ones_positive =
        (0..n).all(|j| (0..free).map(|i| a.get(i, j)).sum::<BigInt>().is_positive());
    if !ones_positive {
        let q = |v: &BigInt| BigRational::from_integer(v.clone());
        let mut rows: Vec<Vec<BigRational>> = (0..free)
            .map(|i| a.row(i).iter().map(q).collect())
            .collect();
        rows.push(vec![BigRational::one(); n]);
        let mut rhs = vec![BigRational::zero(); free];
        rhs.push(BigRational::one());
        if let Some(x) = feasible_point(&rows, &rhs) {
            return Ok(Pointedness::NotPointed {
                witness: kernel_witness(p, &x),
            });
        }
    }
    Ok(Pointedness::Pointed(positive_grading(p)?))
}

/// Scales a rational nonnegative relation to an element of `ker S`.
fn kernel_witness(p: &SemigroupPresentation, x: &[BigRational]) -> Vec<BigInt> {
    let denom = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut w: Vec<BigInt> = x.iter().map(|v| v.numer() * (&denom / v.denom())).collect();
    let g = w.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() {
        w.iter_mut().for_each(|v| *v /= &g);
    }
    // Torsion rows: scale until every row is divisible by its modulus.
    let free = p.free_rows();
    let mut scale = BigInt::one();
    for (k, c) in p.moduli().iter().enumerate() {
        let s: BigInt = p
            .matrix()
            .row(free + k)
            .iter()
            .zip(&w)
            .map(|(a, b)| a * b)
            .sum();
        let need = c / c.gcd(&s);
        scale = scale.lcm(&need);
    }
    w.iter().map(|v| v * &scale).collect()
}

/// A functional `y` on the free coordinates with `y · a_i > 0` for all generators.
///
/// Uses the all-ones functional when it already works, otherwise solves
/// `A_free^T y >= 1` by phase-one simplex.
fn positive_grading(p: &SemigroupPresentation) -> Result<Grading> {
    let n = p.generator_count();
    let free = p.free_rows();
    let a = p.matrix();

    let sums: Vec<BigInt> = (0..n)
        .map(|j| (0..free).map(|i| a.get(i, j).clone()).sum())
        .collect();
    let functional: Vec<BigRational> = if sums.iter().all(Signed::is_positive) {
        vec![BigRational::one(); free]
    } else {
        // Variables: y+ (free), y- (free), slack (n).
        let q = |v: &BigInt| BigRational::from_integer(v.clone());
        let rows: Vec<Vec<BigRational>> = (0..n)
            .map(|j| {
                let mut row = Vec::with_capacity(2 * free + n);
                row.extend((0..free).map(|i| q(a.get(i, j))));
                row.extend((0..free).map(|i| -q(a.get(i, j))));
                row.extend((0..n).map(|k| {
                    if k == j {
                        -BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                row
            })
            .collect();
        let rhs = vec![BigRational::one(); n];
        let sol = feasible_point(&rows, &rhs).expect("pointed semigroups admit a positive grading");
        (0..free).map(|i| &sol[i] - &sol[free + i]).collect()
    };

    let values: Vec<BigRational> = (0..n)
        .map(|j| {
            (0..free)
                .map(|i| &functional[i] * BigRational::from_integer(a.get(i, j).clone()))
                .sum()
        })
        .collect();
    let denom = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&denom / v.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let weights = ints
        .iter()
        .map(|v| to_i64(&(v / &g)))
        .collect::<Result<Vec<_>>>()?;
    debug_assert!(weights.iter().all(|&w| w > 0));
    let scale = BigRational::new(denom, g);
    let functional = functional.into_iter().map(|f| f * &scale).collect();
    Ok(Grading {
        functional,
        weights,
    })
}
