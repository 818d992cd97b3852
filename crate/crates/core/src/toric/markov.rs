use std::collections::BTreeMap;

use rayon::prelude::*;

use super::binomial::{sdegree, Binomial};
use super::lattice_ideal::lattice_ideal_gens;
use crate::decompose::{hnf_diagonalize, Decomposition};
use crate::error::{Error, Result};
use crate::fibers::Fibers;
use crate::linalg::{is_pointed, Grading, LatticeBasis};
use crate::presentation::SemigroupPresentation;

/// A binomial generating set of `I_S` with the S-degree of each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovBasis {
    pub binomials: Vec<Binomial>,
    pub sdegrees: Vec<Vec<i64>>,
    /// Index of the decomposition block each element came from, if assembled.
    pub block_ids: Vec<Option<usize>>,
    pub minimal: bool,
}

impl MarkovBasis {
    pub fn empty() -> Self {
        Self {
            binomials: Vec::new(),
            sdegrees: Vec::new(),
            block_ids: Vec::new(),
            minimal: true,
        }
    }

    pub fn len(&self) -> usize {
        self.binomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.binomials.is_empty()
    }

    /// Distinct degrees with the number of elements of each, in first-seen order.
    pub fn degree_counts(&self) -> Vec<(Vec<i64>, usize)> {
        let mut out: Vec<(Vec<i64>, usize)> = Vec::new();
        for d in &self.sdegrees {
            match out.iter_mut().find(|(e, _)| e == d) {
                Some((_, c)) => *c += 1,
                None => out.push((d.clone(), 1)),
            }
        }
        out
    }
}

/// Extracts a minimal generating set from any binomial generating set `gens`
/// of `I_S`.
///
/// Each distinct S-degree of `gens` is examined; if `∇_m` has `k > 1`
/// components, each component is represented by its lex-largest monomial and
/// the representative of the first component is joined to every other one,
/// giving `k - 1` binomials.
pub fn minimal_markov(gens: &[Binomial], p: &SemigroupPresentation) -> Result<MarkovBasis> {
    minimal_markov_with(gens, &Fibers::new(p)?)
}

pub fn minimal_markov_with(gens: &[Binomial], fibers: &Fibers<'_>) -> Result<MarkovBasis> {
    let p = fibers.presentation();
    let grading = fibers.grading();
    let mut degrees: BTreeMap<(i128, Vec<i64>), Vec<i64>> = BTreeMap::new();
    for g in gens {
        let plus = g.plus();
        degrees
            .entry((grading.weigh(&plus), sdegree(&plus, p)?))
            .or_insert(plus);
    }
    let per_degree: Vec<Vec<(Binomial, Vec<i64>)>> = degrees
        .par_iter()
        .map(|(_, plus)| {
            let nab = fibers.nabla_through(plus)?;
            let rep = |c: &Vec<usize>| &nab.vertices[c[c.len() - 1]];
            let center = rep(&nab.components[0]);
            Ok(nab.components[1..]
                .iter()
                .map(|c| (Binomial::from_monomials(center, rep(c)), nab.degree.clone()))
                .collect())
        })
        .collect::<Result<_>>()?;

    let (binomials, sdegrees): (Vec<_>, Vec<_>) = per_degree.into_iter().flatten().unzip();
    Ok(MarkovBasis {
        block_ids: vec![None; binomials.len()],
        binomials,
        sdegrees,
        minimal: true,
    })
}

/// Minimal Markov basis of `I_S` computed on the whole presentation.
pub fn markov_basis(p: &SemigroupPresentation) -> Result<MarkovBasis> {
    let grading = is_pointed(p)?.into_grading()?;
    let gens = lattice_ideal_gens(&p.kernel(), &grading.weights)?;
    minimal_markov_with(&gens, &Fibers::with_grading(p, grading)?)
}

/// Minimal Markov basis computed per irreducible summand (in parallel) and
/// reassembled.
///
/// Each block reuses the kernel block from the decomposition as its lattice
/// and the restriction of the global grading, so no per-block kernel or
/// pointedness computation is needed.
pub fn markov_basis_decomposed(p: &SemigroupPresentation) -> Result<(Decomposition, MarkovBasis)> {
    let grading = is_pointed(p)?.into_grading()?;
    let dec = hnf_diagonalize(p.kernel().basis());
    let per_block = dec
        .blocks
        .par_iter()
        .map(|b| {
            let sub = p.restrict(&b.generators)?;
            let weights: Vec<i64> = b.generators.iter().map(|&j| grading.weights[j]).collect();
            let gens = lattice_ideal_gens(&LatticeBasis::from_generators(&b.matrix), &weights)?;
            let sub_grading = Grading {
                functional: grading.functional.clone(),
                weights,
            };
            minimal_markov_with(&gens, &Fibers::with_grading(&sub, sub_grading)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let basis = assemble_decomposed(p, &dec, &per_block)?;
    Ok((dec, basis))
}

/// Embeds per-block bases (over block-local indices) into `Z^n` and
/// concatenates them in block order.
pub fn assemble_decomposed(
    p: &SemigroupPresentation,
    dec: &Decomposition,
    per_block: &[MarkovBasis],
) -> Result<MarkovBasis> {
    if per_block.len() != dec.blocks.len() {
        return Err(Error::DimensionMismatch {
            expected: dec.blocks.len(),
            found: per_block.len(),
        });
    }
    let n = p.generator_count();
    let mut seen = vec![false; n];
    let all = dec
        .blocks
        .iter()
        .flat_map(|b| b.generators.iter())
        .chain(&dec.free_generators);
    for &j in all {
        if j >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: j,
            });
        }
        if seen[j] {
            return Err(Error::IndexOverlap(j));
        }
        seen[j] = true;
    }

    let mut out = MarkovBasis::empty();
    for (id, (block, basis)) in dec.blocks.iter().zip(per_block).enumerate() {
        for b in &basis.binomials {
            if b.len() != block.generators.len() {
                return Err(Error::DimensionMismatch {
                    expected: block.generators.len(),
                    found: b.len(),
                });
            }
            let e = b.embed(&block.generators, n);
            out.sdegrees.push(sdegree(&e.plus(), p)?);
            out.binomials.push(e);
            out.block_ids.push(Some(id));
        }
        out.minimal &= basis.minimal;
    }
    Ok(out)
}

/// Distinct S-degrees of a minimal basis, in the order they first appear.
pub fn betti_degrees(m: &MarkovBasis) -> Result<Vec<Vec<i64>>> {
    if !m.minimal {
        return Err(Error::NotMinimal);
    }
    Ok(m.degree_counts().into_iter().map(|(d, _)| d).collect())
}

/// Whether `I_S` has a unique minimal binomial generating set: every Betti
/// fiber consists of exactly two monomials without common variables.
pub fn is_unique_markov(m: &MarkovBasis, p: &SemigroupPresentation) -> Result<bool> {
    is_unique_markov_with(m, &Fibers::new(p)?)
}

pub fn is_unique_markov_with(m: &MarkovBasis, fibers: &Fibers<'_>) -> Result<bool> {
    if !m.minimal {
        return Err(Error::NotMinimal);
    }
    let mut witnesses: BTreeMap<&[i64], Vec<i64>> = BTreeMap::new();
    for (b, d) in m.binomials.iter().zip(&m.sdegrees) {
        witnesses.entry(d.as_slice()).or_insert_with(|| b.plus());
    }
    let verdicts = witnesses
        .par_iter()
        .map(|(_, plus)| {
            let nab = fibers.nabla_through(plus)?;
            Ok(nab.components.len() == 2 && nab.components.iter().all(|c| c.len() == 1))
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(verdicts.into_iter().all(|v| v))
}

/// Complete intersection: the minimal basis has as many elements as the rank
/// of the kernel lattice (the height of `I_S`).
pub fn is_complete_intersection(m: &MarkovBasis, k: &LatticeBasis) -> Result<bool> {
    if !m.minimal {
        return Err(Error::NotMinimal);
    }
    Ok(m.len() == k.rank())
}
