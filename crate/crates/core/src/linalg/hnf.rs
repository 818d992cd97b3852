//! Row-style Hermite normal form with an explicit unimodular transform.
//!
//! Convention: pivots are positive, entries below a pivot are zero, entries
//! above a pivot lie in `[0, pivot)`, zero rows are collected at the bottom.
//! Entries in non-pivot columns are unconstrained.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Result of [`hnf`]: `transform * input == form`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hnf {
    pub form: IntMatrix,
    pub transform: IntMatrix,
}

impl Hnf {
    /// Number of nonzero rows of the normal form.
    pub fn rank(&self) -> usize {
        nonzero_row_count(&self.form)
    }
}

/// Hermite normal form `H` of `m` together with a unimodular `U` such that `U * m == H`.
pub fn hnf(m: &IntMatrix) -> Hnf {
    let mut form = m.clone();
    let mut transform = IntMatrix::identity(m.rows());
    reduce(&mut form, Some(&mut transform));
    Hnf { form, transform }
}

/// Hermite normal form alone, skipping the transform bookkeeping.
pub fn hnf_form(m: &IntMatrix) -> IntMatrix {
    let mut form = m.clone();
    reduce(&mut form, None);
    form
}

pub fn rank(m: &IntMatrix) -> usize {
    nonzero_row_count(&hnf_form(m))
}

fn nonzero_row_count(h: &IntMatrix) -> usize {
    (0..h.rows()).filter(|&i| !h.is_zero_row(i)).count()
}

/// Checks the normal form conditions directly.
pub fn is_hnf(m: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for i in 0..m.rows() {
        let Some(p) = (0..m.cols()).find(|&j| !m.get(i, j).is_zero()) else {
            seen_zero = true;
            continue;
        };
        if seen_zero {
            return false;
        }
        if last_pivot.is_some_and(|q| p <= q) {
            return false;
        }
        let pivot = m.get(i, p);
        if !pivot.is_positive() {
            return false;
        }
        for k in 0..i {
            let v = m.get(k, p);
            if v.is_negative() || v >= pivot {
                return false;
            }
        }
        last_pivot = Some(p);
    }
    true
}

fn reduce(h: &mut IntMatrix, mut u: Option<&mut IntMatrix>) {
    let (rows, cols) = (h.rows(), h.cols());
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        // Bring the smallest nonzero entry to the pivot slot; keeps coefficients small.
        let best = (r..rows)
            .filter(|&i| !h.get(i, col).is_zero())
            .min_by(|&a, &b| h.get(a, col).abs().cmp(&h.get(b, col).abs()));
        let Some(best) = best else { continue };
        h.swap_rows(r, best);
        if let Some(u) = u.as_deref_mut() {
            u.swap_rows(r, best);
        }

        for i in r + 1..rows {
            if h.get(i, col).is_zero() {
                continue;
            }
            let a = h.get(r, col).clone();
            let b = h.get(i, col).clone();
            if (&b % &a).is_zero() {
                let q = &b / &a;
                add_multiple(h, i, r, &-&q);
                if let Some(u) = u.as_deref_mut() {
                    add_multiple(u, i, r, &-&q);
                }
                continue;
            }
            let eg = a.extended_gcd(&b);
            let (mut g, mut s, mut t) = (eg.gcd, eg.x, eg.y);
            if g.is_negative() {
                g = -g;
                s = -s;
                t = -t;
            }
            let p = -(&b / &g);
            let q = &a / &g;
            combine(h, r, i, &s, &t, &p, &q);
            if let Some(u) = u.as_deref_mut() {
                combine(u, r, i, &s, &t, &p, &q);
            }
        }

        if h.get(r, col).is_negative() {
            negate_row(h, r);
            if let Some(u) = u.as_deref_mut() {
                negate_row(u, r);
            }
        }
        let pivot = h.get(r, col).clone();
        for i in 0..r {
            let q = h.get(i, col).div_floor(&pivot);
            if !q.is_zero() {
                add_multiple(h, i, r, &-&q);
                if let Some(u) = u.as_deref_mut() {
                    add_multiple(u, i, r, &-&q);
                }
            }
        }
        r += 1;
    }
}

/// row[target] += factor * row[source]
fn add_multiple(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    let src = m.row(source).to_vec();
    for (t, s) in m.row_mut(target).iter_mut().zip(&src) {
        if !s.is_zero() {
            *t += factor * s;
        }
    }
}

/// (row[a], row[b]) <- (s*row[a] + t*row[b], p*row[a] + q*row[b]); caller guarantees s*q - t*p = 1.
fn combine(m: &mut IntMatrix, a: usize, b: usize, s: &BigInt, t: &BigInt, p: &BigInt, q: &BigInt) {
    let ra = m.row(a).to_vec();
    let rb = m.row(b).to_vec();
    for (j, (x, y)) in ra.iter().zip(&rb).enumerate() {
        m.set(a, j, s * x + t * y);
        m.set(b, j, p * x + q * y);
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for v in m.row_mut(i) {
        *v = -&*v;
    }
}
