use std::collections::BTreeSet;

use super::binomial::Binomial;
use super::lattice_ideal::basis_binomials;
use crate::error::{Error, Result};
use crate::linalg::LatticeBasis;

/// `u ⊑ v`: `u` lies in the same orthant as `v` and is dominated by it.
fn conformal(u: &[i64], v: &[i64]) -> bool {
    u.iter()
        .zip(v)
        .all(|(&a, &b)| a == 0 || (a.signum() == b.signum() && a.abs() <= b.abs()))
}

fn norm1(v: &[i64]) -> u64 {
    v.iter().map(|x| x.unsigned_abs()).sum()
}

/// Default completion cap: twice the largest 1-norm of a basis vector.
pub fn default_graver_cap(k: &LatticeBasis) -> Result<u64> {
    Ok(2 * basis_binomials(k)?
        .iter()
        .map(Binomial::norm1)
        .max()
        .unwrap_or(0))
}

/// The Graver basis of `K`: its `⊑`-minimal nonzero vectors, one per sign pair.
///
/// Completion procedure: starting from `±basis`, sums of pairs are reduced by
/// conformal subtraction and kept when nonzero. Any vector that would enter
/// the working set with 1-norm above `cap` aborts the computation with
/// [`Error::CapExceeded`]; pass `None` for [`default_graver_cap`].
pub fn graver_basis(k: &LatticeBasis, cap: Option<u64>) -> Result<Vec<Binomial>> {
    let cap = match cap {
        Some(c) => c,
        None => default_graver_cap(k)?,
    };
    let mut set: Vec<Vec<i64>> = Vec::new();
    for b in basis_binomials(k)? {
        let v = b.vector().to_vec();
        set.push(v.iter().map(|x| -x).collect());
        set.push(v);
    }
    let mut pairs: Vec<(usize, usize)> = (0..set.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();

    while let Some((i, j)) = pairs.pop() {
        let mut s: Vec<i64> = set[i].iter().zip(&set[j]).map(|(a, b)| a + b).collect();
        'reduce: loop {
            if s.iter().all(|&x| x == 0) {
                break;
            }
            for g in &set {
                if conformal(g, &s) {
                    s.iter_mut().zip(g).for_each(|(x, y)| *x -= y);
                    continue 'reduce;
                }
            }
            let norm = norm1(&s);
            if norm > cap {
                return Err(Error::CapExceeded { cap, norm });
            }
            let j = set.len();
            pairs.extend((0..j).map(|i| (i, j)));
            set.push(s);
            break;
        }
    }

    let minimal: BTreeSet<Binomial> = set
        .iter()
        .filter(|v| !set.iter().any(|u| u != *v && conformal(u, v)))
        .map(|v| Binomial::new(v.clone()))
        .collect();
    Ok(minimal.into_iter().collect())
}
