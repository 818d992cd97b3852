//! Exact phase-one simplex over the rationals, Bland's rule.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Finds some `x >= 0` with `rows * x == rhs`, or `None` if the system is infeasible.
///
/// The returned point is a basic feasible solution.
pub fn feasible_point(rows: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = rows.len();
    assert_eq!(m, rhs.len(), "one right-hand side per row");
    let n = rows.first().map_or(0, Vec::len);
    let width = n + m;

    // Tableau over [original | artificial] columns with nonnegative rhs.
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut b: Vec<BigRational> = Vec::with_capacity(m);
    for (i, (row, r)) in rows.iter().zip(rhs).enumerate() {
        assert_eq!(row.len(), n, "rectangular constraint matrix");
        let flip = r.is_negative();
        let mut line: Vec<BigRational> = row
            .iter()
            .map(|v| if flip { -v } else { v.clone() })
            .collect();
        line.extend((0..m).map(|k| {
            if k == i {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }));
        t.push(line);
        b.push(if flip { -r } else { r.clone() });
    }
    let mut basis: Vec<usize> = (n..width).collect();

    let mut cost: Vec<BigRational> = (0..width)
        .map(|j| {
            if j < n {
                -t.iter().map(|row| &row[j]).sum::<BigRational>()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    let mut value: BigRational = b.iter().sum();

    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &b[i] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase one is bounded below by zero, so some row always qualifies.
        let (row, _) = leave.expect("phase-one objective is bounded");

        let piv = t[row][enter].clone();
        for v in t[row].iter_mut() {
            *v /= &piv;
        }
        b[row] /= &piv;
        let pivot_row = t[row].clone();
        let pivot_rhs = b[row].clone();
        for i in 0..m {
            if i == row || t[i][enter].is_zero() {
                continue;
            }
            let f = t[i][enter].clone();
            for (v, p) in t[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            b[i] -= &f * &pivot_rhs;
        }
        let f = cost[enter].clone();
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
        value += &f * &pivot_rhs;
        basis[row] = enter;
    }

    if !value.is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            x[j] = b[i].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn check(rows: &[Vec<BigRational>], rhs: &[BigRational], x: &[BigRational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for (row, r) in rows.iter().zip(rhs) {
            let lhs: BigRational = row.iter().zip(x).map(|(a, b)| a * b).sum();
            assert_eq!(&lhs, r);
        }
    }

    #[test]
    fn feasible_system() {
        let rows = vec![vec![q(1), q(-1)], vec![q(1), q(1)]];
        let rhs = vec![q(0), q(1)];
        let x = feasible_point(&rows, &rhs).unwrap();
        check(&rows, &rhs, &x);
        assert_eq!(x, vec![BigRational::new(1.into(), 2.into()); 2]);
    }

    #[test]
    fn infeasible_system() {
        let rows = vec![vec![q(2), q(3)], vec![q(1), q(1)]];
        let rhs = vec![q(0), q(1)];
        assert!(feasible_point(&rows, &rhs).is_none());
    }

    #[test]
    fn negative_rhs_and_degenerate_rows() {
        let rows = vec![vec![q(-1), q(0), q(1)], vec![q(0), q(0), q(0)]];
        let rhs = vec![q(-2), q(0)];
        let x = feasible_point(&rows, &rhs).unwrap();
        check(&rows, &rhs, &x);
    }
}
