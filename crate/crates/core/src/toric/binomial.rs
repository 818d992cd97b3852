use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::SemigroupPresentation;

/// A pure binomial `x^{v+} - x^{v-}`, stored as `v` with its first nonzero
/// coordinate positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    vector: Vec<i64>,
}

impl Binomial {
    /// Normalizes the sign of `vector`.
    pub fn new(mut vector: Vec<i64>) -> Self {
        if vector.iter().find(|&&v| v != 0).is_some_and(|&v| v < 0) {
            vector.iter_mut().for_each(|v| *v = -*v);
        }
        Self { vector }
    }

    /// `x^a - x^b` with common factors cancelled.
    pub fn from_monomials(a: &[i64], b: &[i64]) -> Self {
        Self::new(a.iter().zip(b).map(|(x, y)| x - y).collect())
    }

    pub fn vector(&self) -> &[i64] {
        &self.vector
    }

    pub fn len(&self) -> usize {
        self.vector.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vector.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.vector.iter().all(|&v| v == 0)
    }

    pub fn plus(&self) -> Vec<i64> {
        self.vector.iter().map(|&v| v.max(0)).collect()
    }

    pub fn minus(&self) -> Vec<i64> {
        self.vector.iter().map(|&v| (-v).max(0)).collect()
    }

    pub fn support(&self) -> Vec<usize> {
        self.vector
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn norm1(&self) -> u64 {
        self.vector.iter().map(|v| v.unsigned_abs()).sum()
    }

    /// Places coordinate `k` at position `indices[k]` of a length-`n` vector.
    pub fn embed(&self, indices: &[usize], n: usize) -> Self {
        let mut v = vec![0; n];
        for (k, &i) in indices.iter().enumerate() {
            v[i] = self.vector[k];
        }
        Self::new(v)
    }

    /// Both terms have the same S-degree.
    pub fn is_homogeneous(&self, p: &SemigroupPresentation) -> bool {
        match (sdegree(&self.plus(), p), sdegree(&self.minus(), p)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    /// Renders the binomial using `label` for variable names.
    pub fn display_with<'a, F>(&'a self, label: F) -> impl fmt::Display + 'a
    where
        F: Fn(usize) -> String + 'a,
    {
        DisplayBinomial { b: self, label }
    }
}

struct DisplayBinomial<'a, F> {
    b: &'a Binomial,
    label: F,
}

impl<F: Fn(usize) -> String> fmt::Display for DisplayBinomial<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.b.plus(), &self.label)?;
        f.write_str(" - ")?;
        write_monomial(f, &self.b.minus(), &self.label)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(|i| format!("x{}", i + 1)))
    }
}

pub(crate) fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    exp: &[i64],
    label: &dyn Fn(usize) -> String,
) -> fmt::Result {
    let mut first = true;
    for (i, &e) in exp.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&label(i))?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// S-degree `Σ α_i a_i` of a monomial, torsion coordinates reduced.
pub fn sdegree(exponent: &[i64], p: &SemigroupPresentation) -> Result<Vec<i64>> {
    if exponent.len() != p.generator_count() {
        return Err(Error::DimensionMismatch {
            expected: p.generator_count(),
            found: exponent.len(),
        });
    }
    if let Some(i) = exponent.iter().position(|&e| e < 0) {
        return Err(Error::NegativeExponent(i));
    }
    let free = p.free_rows();
    let moduli = p.small_moduli();
    p.small_rows()
        .iter()
        .enumerate()
        .map(|(k, row)| {
            let mut s: i128 = row
                .iter()
                .zip(exponent)
                .map(|(&a, &e)| a as i128 * e as i128)
                .sum();
            if k >= free {
                s = s.rem_euclid(moduli[k - free] as i128);
            }
            i64::try_from(s).map_err(|_| Error::Overflow(s.to_string()))
        })
        .collect()
}
