//! Comparisons between the library and the brute-force references, shared by
//! the property suites and the acceptance suite.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use semidec::decompose::{decompose_semigroup, hnf_diagonalize, Mode};
use semidec::fibers::{combinatorial_decomposable, Fibers};
use semidec::linalg::integer_kernel;
use semidec::toric::{
    betti_degrees, graver_basis, is_complete_intersection, is_unique_markov_with, markov_basis,
    markov_basis_decomposed, sdegree, MarkovBasis,
};
use semidec::{IntMatrix, SemigroupPresentation};

use super::oracle::{self, Planted};

pub const FIBER_CAP: usize = 300_000;

#[derive(Debug)]
pub enum Outcome {
    Checked,
    Skipped(String),
}

pub fn presentation(rows: &[Vec<i64>], n: usize) -> SemigroupPresentation {
    SemigroupPresentation::torsion_free(IntMatrix::from_rows(n, rows).unwrap()).unwrap()
}

/// Compares the minimal Markov basis of `A` with the fiber-graph reference on
/// every degree up to the largest Graver degree.
pub fn markov_vs_oracle(rows: &[Vec<i64>], n: usize) -> Result<Outcome, String> {
    let p = presentation(rows, n);
    let Some(w) = oracle::positive_grading(rows, n) else {
        return Ok(Outcome::Skipped("no small positive grading".into()));
    };
    let m = markov_basis(&p).map_err(|e| format!("markov failed: {e}"))?;
    let graver = match graver_basis(&p.kernel(), None) {
        Ok(g) => g,
        Err(e) => return Ok(Outcome::Skipped(format!("graver: {e}"))),
    };
    let weigh = |v: &[i64]| v.iter().zip(&w).map(|(a, b)| a.max(&0) * b).sum::<i64>();
    let bound = graver
        .iter()
        .chain(&m.binomials)
        .map(|b| weigh(b.vector()))
        .max()
        .unwrap_or(0);
    let Some(fibers) = oracle::fibers_up_to(rows, &w, bound, FIBER_CAP) else {
        return Ok(Outcome::Skipped(format!(
            "fibers up to weight {bound} too large"
        )));
    };
    let reference = oracle::oracle_markov(&fibers);

    let got: BTreeSet<Vec<i64>> = m.binomials.iter().map(|b| b.vector().to_vec()).collect();
    if got != reference.binomials || got.len() != m.len() {
        return Err(format!(
            "A={rows:?}: basis {got:?} vs reference {:?}",
            reference.binomials
        ));
    }
    let counts: BTreeMap<Vec<i64>, usize> = m.degree_counts().into_iter().collect();
    if counts != reference.counts {
        return Err(format!(
            "A={rows:?}: counts {counts:?} vs reference {:?}",
            reference.counts
        ));
    }
    let f = Fibers::new(&p).map_err(|e| e.to_string())?;
    for (d, c) in &counts {
        let comps = f.nabla(d).map_err(|e| e.to_string())?.components.len();
        if comps != c + 1 {
            return Err(format!(
                "A={rows:?}: degree {d:?} has {c} elements but {comps} components"
            ));
        }
    }
    let moves: Vec<Vec<i64>> = got.into_iter().collect();
    if let Some((d, _)) = fibers
        .iter()
        .find(|(_, fib)| !oracle::moves_connect(fib, &moves))
    {
        return Err(format!(
            "A={rows:?}: fiber over {d:?} not connected by the basis"
        ));
    }
    Ok(Outcome::Checked)
}

fn betti_set(m: &MarkovBasis) -> BTreeSet<Vec<i64>> {
    betti_degrees(m).unwrap().into_iter().collect()
}

/// Checks a planted instance: the recovered partition, the Betti degrees and
/// the propagation of the complete-intersection and uniqueness verdicts.
pub fn planted_check(inst: &Planted, combinatorial: bool) -> Result<(), String> {
    let p = presentation(&inst.rows, inst.n);
    let ctx = format!("A={:?} planted={:?}", inst.rows, inst.partition);
    let dec = decompose_semigroup(&p, Mode::Kernel).map_err(|e| e.to_string())?;
    if dec.partition() != inst.partition {
        return Err(format!("{ctx}: recovered {:?}", dec.partition()));
    }

    // planted kernel matrix with its rows mixed
    let l = integer_kernel(p.matrix());
    let mut rows = l.basis().to_rows();
    for i in 1..rows.len() {
        let prev = rows[i - 1].clone();
        for (x, y) in rows[i].iter_mut().zip(&prev) {
            *x += y * BigInt::from(i as i64);
        }
    }
    rows.reverse();
    let mixed = IntMatrix::from_rows(inst.n, &rows).unwrap();
    if hnf_diagonalize(&mixed).partition() != inst.partition {
        return Err(format!(
            "{ctx}: mixed kernel matrix recovered {:?}",
            hnf_diagonalize(&mixed).partition()
        ));
    }

    let (_, split) = markov_basis_decomposed(&p).map_err(|e| e.to_string())?;
    let whole = markov_basis(&p).map_err(|e| e.to_string())?;
    let sorted = |m: &MarkovBasis| m.binomials.iter().cloned().collect::<BTreeSet<_>>();
    if sorted(&split) != sorted(&whole) {
        return Err(format!("{ctx}: split basis differs from whole basis"));
    }

    let fibers = Fibers::new(&p).map_err(|e| e.to_string())?;
    let mut union: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut all_ci = true;
    let mut all_unique = true;
    for (cols, block_rows) in inst.partition.iter().zip(&inst.blocks) {
        let sub = presentation(block_rows, cols.len());
        let mb = markov_basis(&sub).map_err(|e| e.to_string())?;
        for b in &mb.binomials {
            let e = b.embed(cols, inst.n);
            union.insert(sdegree(&e.plus(), &p).unwrap());
        }
        all_ci &= is_complete_intersection(&mb, &sub.kernel()).unwrap();
        all_unique &= is_unique_markov_with(&mb, &Fibers::new(&sub).unwrap()).unwrap();
    }
    if betti_set(&whole) != union {
        return Err(format!(
            "{ctx}: Betti degrees {:?} vs union {union:?}",
            betti_set(&whole)
        ));
    }
    if is_complete_intersection(&whole, &p.kernel()).unwrap() != all_ci {
        return Err(format!("{ctx}: complete intersection does not propagate"));
    }
    if is_unique_markov_with(&whole, &fibers).unwrap() != all_unique {
        return Err(format!("{ctx}: uniqueness does not propagate"));
    }

    if combinatorial {
        let found = combinatorial_decomposable(&p, &whole).map_err(|e| e.to_string())?;
        if found.is_none() {
            return Err(format!("{ctx}: combinatorial check found no split"));
        }
    }
    Ok(())
}
