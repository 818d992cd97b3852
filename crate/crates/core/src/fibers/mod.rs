//! Fibers of the degree map, their simplicial complexes, membership, and
//! decomposability/gluing checks built on them.

mod combinatorial;
mod complex;
mod gluing;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::matrix::to_i64;
use crate::linalg::{is_pointed, solve_integer, Grading, IntMatrix};
use crate::presentation::SemigroupPresentation;

pub use combinatorial::combinatorial_decomposable;
pub use complex::{DeltaComplex, FiberComplex};
pub use gluing::{detect_gluing, GluingCertificate, DEFAULT_PARTITION_CAP};

/// Largest fiber [`Fibers::fiber`] will materialize unless overridden.
pub const DEFAULT_FIBER_CAP: usize = 2_000_000;

/// Fiber enumeration for a pointed presentation.
///
/// The fiber over `m` is `(α0 + ker S) ∩ N^n` for any integer solution `α0`
/// of `A α ≡ m`. It is walked along the Hermite basis of `ker S`: the
/// coefficient of each basis row fixes that row's pivot coordinate, and every
/// coordinate `α_j` is confined to `[0, w·m / w_j]` by the positive grading
/// `w`. Ascending coefficients visit the fiber in lexicographic order, so
/// [`Fibers::member`] returns the lex-smallest witness.
#[derive(Debug, Clone)]
pub struct Fibers<'a> {
    p: &'a SemigroupPresentation,
    grading: Grading,
    /// `[A | C]` with `C` holding the moduli on the torsion rows.
    augmented: IntMatrix,
    kernel: Vec<Vec<i128>>,
    pivots: Vec<usize>,
    cap: usize,
}

impl<'a> Fibers<'a> {
    /// Fails with [`Error::NotPointed`] when fibers may be infinite.
    pub fn new(p: &'a SemigroupPresentation) -> Result<Self> {
        let grading = is_pointed(p)?.into_grading()?;
        Self::with_grading(p, grading)
    }

    /// `grading` must be positive on every generator and vanish on `ker S`.
    pub fn with_grading(p: &'a SemigroupPresentation, grading: Grading) -> Result<Self> {
        let a = p.matrix();
        let h = p.moduli().len();
        let free = p.free_rows();
        let mut c = IntMatrix::zeros(a.rows(), h);
        for (k, modulus) in p.moduli().iter().enumerate() {
            c.set(free + k, k, modulus.clone());
        }
        let augmented = a.hstack(&c)?;
        let basis = p.kernel();
        let mut kernel = Vec::with_capacity(basis.rank());
        let mut pivots = Vec::with_capacity(basis.rank());
        for row in basis.basis().row_iter() {
            pivots.push(
                row.iter()
                    .position(|x| !x.is_zero())
                    .expect("basis rows are nonzero"),
            );
            kernel.push(
                row.iter()
                    .map(|x| to_i64(x).map(i128::from))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Ok(Self {
            p,
            grading,
            augmented,
            kernel,
            pivots,
            cap: DEFAULT_FIBER_CAP,
        })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn presentation(&self) -> &SemigroupPresentation {
        self.p
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    /// A nonnegative `α` with `A α ≡ m`, lexicographically smallest.
    pub fn member(&self, m: &[i64]) -> Result<Option<Vec<i64>>> {
        match self.offset(m)? {
            Some(alpha) => Ok(self.walk(&alpha, true)?.pop()),
            None => Ok(None),
        }
    }

    /// All `α >= 0` with `A α ≡ m`, in lexicographic order.
    pub fn fiber(&self, m: &[i64]) -> Result<Vec<Vec<i64>>> {
        match self.offset(m)? {
            Some(alpha) => self.walk(&alpha, false),
            None => Ok(Vec::new()),
        }
    }

    /// The fiber containing the exponent vector `alpha`.
    pub fn fiber_through(&self, alpha: &[i64]) -> Result<Vec<Vec<i64>>> {
        let n = self.p.generator_count();
        if alpha.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: alpha.len(),
            });
        }
        if let Some(i) = alpha.iter().position(|&e| e < 0) {
            return Err(Error::NegativeExponent(i));
        }
        self.walk(&alpha.iter().map(|&e| e as i128).collect::<Vec<_>>(), false)
    }

    /// An integer solution of `A α ≡ m`, not necessarily nonnegative.
    fn offset(&self, m: &[i64]) -> Result<Option<Vec<i128>>> {
        let p = self.p;
        if m.len() != p.degree_dim() {
            return Err(Error::DimensionMismatch {
                expected: p.degree_dim(),
                found: m.len(),
            });
        }
        let target: Vec<BigInt> = m.iter().map(|&v| BigInt::from(v)).collect();
        let Some(y) = solve_integer(&self.augmented, &target)? else {
            return Ok(None);
        };
        y[..p.generator_count()]
            .iter()
            .map(|v| to_i64(v).map(i128::from))
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    fn walk(&self, alpha: &[i128], first_only: bool) -> Result<Vec<Vec<i64>>> {
        let w = &self.grading.weights;
        let total: i128 = alpha.iter().zip(w).map(|(&a, &wj)| a * wj as i128).sum();
        if total < 0 {
            return Ok(Vec::new());
        }
        let mut walk = Walk {
            f: self,
            upper: w.iter().map(|&wj| total / wj as i128).collect(),
            x: alpha.to_vec(),
            out: Vec::new(),
            first_only,
        };
        let n = alpha.len();
        let first = self.pivots.first().copied().unwrap_or(n);
        if walk.in_range(0, first) {
            walk.descend(0)?;
        }
        Ok(walk.out)
    }
}

struct Walk<'f, 'a> {
    f: &'f Fibers<'a>,
    upper: Vec<i128>,
    x: Vec<i128>,
    out: Vec<Vec<i64>>,
    first_only: bool,
}

impl Walk<'_, '_> {
    fn in_range(&self, from: usize, to: usize) -> bool {
        (from..to).all(|j| self.x[j] >= 0 && self.x[j] <= self.upper[j])
    }

    /// Returns `true` once the walk should stop.
    fn descend(&mut self, level: usize) -> Result<bool> {
        let f = self.f;
        let n = self.x.len();
        if level == f.kernel.len() {
            if self.out.len() >= f.cap {
                return Err(Error::EnumerationCap {
                    what: "fiber",
                    needed: f.cap as u128 + 1,
                    cap: f.cap as u128,
                });
            }
            self.out.push(self.x.iter().map(|&v| v as i64).collect());
            return Ok(self.first_only);
        }
        let row = &f.kernel[level];
        let p = f.pivots[level];
        let next = f.pivots.get(level + 1).copied().unwrap_or(n);
        let (base, step) = (self.x[p], row[p]);
        let lo = (-base).div_euclid(step) + i128::from((-base).rem_euclid(step) != 0);
        let hi = (self.upper[p] - base).div_euclid(step);
        if lo > hi {
            return Ok(false);
        }
        self.shift(row, lo);
        let mut c = lo;
        let mut stop = false;
        loop {
            if self.in_range(p, next) {
                stop = self.descend(level + 1)?;
            }
            if stop || c == hi {
                break;
            }
            self.shift(row, 1);
            c += 1;
        }
        self.shift(row, -c);
        Ok(stop)
    }

    fn shift(&mut self, row: &[i128], c: i128) {
        for (x, r) in self.x.iter_mut().zip(row) {
            *x += c * r;
        }
    }
}

/// Membership of `m` in `S`; see [`Fibers::member`].
pub fn member(m: &[i64], p: &SemigroupPresentation) -> Result<Option<Vec<i64>>> {
    Fibers::new(p)?.member(m)
}

/// The fiber over `m`; see [`Fibers::fiber`].
pub fn fiber(m: &[i64], p: &SemigroupPresentation) -> Result<Vec<Vec<i64>>> {
    Fibers::new(p)?.fiber(m)
}

pub fn nabla(m: &[i64], p: &SemigroupPresentation) -> Result<FiberComplex> {
    Fibers::new(p)?.nabla(m)
}

pub fn delta(m: &[i64], p: &SemigroupPresentation) -> Result<DeltaComplex> {
    Fibers::new(p)?.delta(m)
}
