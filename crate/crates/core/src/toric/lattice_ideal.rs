use std::collections::BTreeSet;

use super::binomial::Binomial;
use super::groebner::groebner_basis;
use super::order::TermOrder;
use crate::error::{Error, Result};
use crate::linalg::matrix::to_i64;
use crate::linalg::LatticeBasis;

/// Rows of a lattice basis as machine-integer binomials.
pub fn basis_binomials(k: &LatticeBasis) -> Result<Vec<Binomial>> {
    k.basis()
        .row_iter()
        .map(|row| {
            Ok(Binomial::new(
                row.iter().map(to_i64).collect::<Result<Vec<_>>>()?,
            ))
        })
        .collect()
}

/// `I : x_var^∞` for an ideal homogeneous with respect to `weights`.
///
/// Computes a Gröbner basis in weighted reverse lex with `x_var` cheapest and
/// divides every element by the largest power of `x_var` dividing both terms.
pub fn saturate(
    gens: &[(Vec<i64>, Vec<i64>)],
    var: usize,
    weights: &[i64],
) -> Vec<(Vec<i64>, Vec<i64>)> {
    let order = TermOrder::grevlex_cheapest(weights.to_vec(), var);
    groebner_basis(gens, &order)
        .elements()
        .iter()
        .map(|g| {
            let s = g.lead[var].min(g.trail[var]);
            let (mut a, mut b) = (g.lead.clone(), g.trail.clone());
            a[var] -= s;
            b[var] -= s;
            (a, b)
        })
        .collect()
}

/// A binomial generating set of the lattice ideal `I_K`.
///
/// Starts from the basis binomials of `K` and saturates by every variable in
/// turn. `weights` must be strictly positive and orthogonal to `K` (a positive
/// grading of the semigroup), so that every intermediate ideal is homogeneous.
pub fn lattice_ideal_gens(k: &LatticeBasis, weights: &[i64]) -> Result<Vec<Binomial>> {
    let n = k.ambient_dim();
    if weights.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: weights.len(),
        });
    }
    let basis = basis_binomials(k)?;
    let mut gens: Vec<(Vec<i64>, Vec<i64>)> = basis.iter().map(|b| (b.plus(), b.minus())).collect();
    let used: BTreeSet<usize> = basis.iter().flat_map(Binomial::support).collect();
    for var in used {
        gens = saturate(&gens, var, weights);
    }
    let out: BTreeSet<Binomial> = gens
        .iter()
        .map(|(a, b)| Binomial::from_monomials(a, b))
        .filter(|b| !b.is_zero())
        .collect();
    Ok(out.into_iter().collect())
}
