use num_bigint::BigInt;
use num_traits::Zero;

use super::Fibers;
use crate::decompose::{decompose_semigroup, Mode};
use crate::error::{Error, Result};
use crate::linalg::matrix::to_i64;
use crate::linalg::{
    hnf_form, is_pointed, lattice_intersection, row_lattice_equal, IntMatrix, LatticeBasis,
};
use crate::presentation::SemigroupPresentation;
use crate::toric::sdegree;

/// Largest number of candidate bipartitions a search may visit.
pub const DEFAULT_PARTITION_CAP: u128 = 1 << 20;

/// `S` is the gluing of `⟨first⟩` and `⟨second⟩` along `degree`.
///
/// Found on block `block` of the kernel decomposition as the split
/// `block_first | block_second`; `second` adds every generator outside the
/// block. The witnesses are exponent vectors over all generators, supported in
/// `block_first` and `block_second` respectively, both of S-degree `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingCertificate {
    pub block: usize,
    pub block_first: Vec<usize>,
    pub block_second: Vec<usize>,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub degree: Vec<i64>,
    pub first_witness: Vec<i64>,
    pub second_witness: Vec<i64>,
}

impl GluingCertificate {
    /// Re-checks the certificate from scratch: the parts split the generators,
    /// both witnesses have S-degree `degree`, and `G(⟨first⟩) ∩ G(⟨second⟩)` is
    /// generated by `degree`.
    pub fn verify(&self, p: &SemigroupPresentation) -> Result<bool> {
        let n = p.generator_count();
        let mut all: Vec<usize> = self.first.iter().chain(&self.second).copied().collect();
        all.sort_unstable();
        if all != (0..n).collect::<Vec<_>>() || self.first.is_empty() || self.second.is_empty() {
            return Ok(false);
        }
        let within = |w: &[i64], part: &[usize]| {
            w.iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || part.contains(&i))
        };
        if !within(&self.first_witness, &self.block_first)
            || !within(&self.second_witness, &self.block_second)
        {
            return Ok(false);
        }
        let mut d = self.degree.clone();
        p.normalize_degree(&mut d);
        if d.iter().all(|&x| x == 0) {
            return Ok(false);
        }
        if sdegree(&self.first_witness, p)? != d || sdegree(&self.second_witness, p)? != d {
            return Ok(false);
        }
        Ok(match group_intersection(p, &self.first, &self.second)? {
            Some(g) => {
                let mut neg: Vec<i64> = g.iter().map(|x| -x).collect();
                p.normalize_degree(&mut neg);
                g == d || neg == d
            }
            None => false,
        })
    }
}

/// Preimage in `Z^rows` of the subgroup generated by the listed generators.
fn group_lattice(p: &SemigroupPresentation, cols: &[usize]) -> LatticeBasis {
    let a = p.matrix();
    let free = p.free_rows();
    let mut rows: Vec<Vec<BigInt>> = cols.iter().map(|&j| a.column(j)).collect();
    for (k, c) in p.moduli().iter().enumerate() {
        let mut r = vec![BigInt::zero(); a.rows()];
        r[free + k] = c.clone();
        rows.push(r);
    }
    let gens = IntMatrix::from_rows(a.rows(), &rows).expect("rows have ambient length");
    LatticeBasis::from_generators(&gens)
}

/// A generator `d` when `G(⟨c1⟩) ∩ G(⟨c2⟩)` is infinite cyclic, else `None`.
fn group_intersection(
    p: &SemigroupPresentation,
    c1: &[usize],
    c2: &[usize],
) -> Result<Option<Vec<i64>>> {
    let free = p.free_rows();
    let h = p.moduli().len();
    let inter = lattice_intersection(&group_lattice(p, c1), &group_lattice(p, c2))?;
    if inter.rank() != h + 1 {
        return Ok(None);
    }
    let basis = hnf_form(inter.basis());
    let first = basis.row(0);
    if !first[..free].iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    let rest: Vec<usize> = (1..=h).collect();
    let torsion = group_lattice(p, &[]);
    if !row_lattice_equal(&basis.select_rows(&rest), torsion.basis())? {
        return Ok(None);
    }
    let mut d = first.iter().map(to_i64).collect::<Result<Vec<_>>>()?;
    p.normalize_degree(&mut d);
    Ok(Some(d))
}

/// A gluing degree with one witness on each side.
type Glue = (Vec<i64>, Vec<i64>, Vec<i64>);

/// Looks for `d` or `-d` in both `⟨c1⟩` and `⟨c2⟩`; returns the degree and the
/// two witnesses over all generators.
fn glue(p: &SemigroupPresentation, c1: &[usize], c2: &[usize]) -> Result<Option<Glue>> {
    let Some(d) = group_intersection(p, c1, c2)? else {
        return Ok(None);
    };
    let s1 = p.restrict(c1)?;
    let s2 = p.restrict(c2)?;
    let f1 = Fibers::new(&s1)?;
    let f2 = Fibers::new(&s2)?;
    let embed = |w: Vec<i64>, part: &[usize]| {
        let mut v = vec![0; p.generator_count()];
        for (k, &j) in part.iter().enumerate() {
            v[j] = w[k];
        }
        v
    };
    let mut neg: Vec<i64> = d.iter().map(|x| -x).collect();
    p.normalize_degree(&mut neg);
    for cand in [d, neg] {
        if let (Some(w1), Some(w2)) = (f1.member(&cand)?, f2.member(&cand)?) {
            return Ok(Some((cand, embed(w1, c1), embed(w2, c2))));
        }
    }
    Ok(None)
}

/// Decides whether `S` is a gluing by searching the splits of each irreducible
/// summand of the kernel decomposition. The input is assumed to be a minimal
/// generating set.
pub fn detect_gluing(p: &SemigroupPresentation) -> Result<Option<GluingCertificate>> {
    detect_gluing_with_cap(p, DEFAULT_PARTITION_CAP)
}

pub fn detect_gluing_with_cap(
    p: &SemigroupPresentation,
    cap: u128,
) -> Result<Option<GluingCertificate>> {
    is_pointed(p)?.into_grading()?;
    let n = p.generator_count();
    let dec = decompose_semigroup(p, Mode::Kernel)?;
    for (id, block) in dec.blocks.iter().enumerate() {
        let g = &block.generators;
        let k = g.len();
        let candidates = (1u128 << (k - 1)) - 1;
        if candidates > cap {
            return Err(Error::EnumerationCap {
                what: "bipartitions",
                needed: candidates,
                cap,
            });
        }
        for rest in 0..candidates {
            let c1: Vec<usize> = (0..k)
                .filter(|&i| i == 0 || rest >> (i - 1) & 1 == 1)
                .map(|i| g[i])
                .collect();
            let c2: Vec<usize> = g.iter().copied().filter(|j| !c1.contains(j)).collect();
            if let Some((degree, first_witness, second_witness)) = glue(p, &c1, &c2)? {
                let second: Vec<usize> = (0..n).filter(|j| !c1.contains(j)).collect();
                return Ok(Some(GluingCertificate {
                    block: id,
                    first: c1.clone(),
                    second,
                    block_first: c1,
                    block_second: c2,
                    degree,
                    first_witness,
                    second_witness,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(rows: &[&[i64]]) -> SemigroupPresentation {
        SemigroupPresentation::torsion_free(IntMatrix::from_i64(rows)).unwrap()
    }

    #[test]
    fn numerical_semigroup_gluing() {
        let p = pres(&[&[2, 3]]);
        let cert = detect_gluing(&p).unwrap().unwrap();
        assert_eq!(cert.first, vec![0]);
        assert_eq!(cert.second, vec![1]);
        assert_eq!(cert.degree, vec![6]);
        assert_eq!(cert.first_witness, vec![3, 0]);
        assert_eq!(cert.second_witness, vec![0, 2]);
        assert!(cert.verify(&p).unwrap());
    }

    #[test]
    fn free_semigroup_is_not_a_gluing() {
        assert_eq!(detect_gluing(&pres(&[&[1, 0], &[0, 1]])).unwrap(), None);
    }

    #[test]
    fn block_of_product_lifts() {
        // D1 columns (1,0,0), (0,1,0), (0,0,1), (-1,1,1), plus a free generator.
        let p = pres(&[
            &[1, 0, 0, -1, 0],
            &[0, 1, 0, 1, 0],
            &[0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 1],
        ]);
        let cert = detect_gluing(&p).unwrap().unwrap();
        assert_eq!(cert.block_first, vec![0, 3]);
        assert_eq!(cert.block_second, vec![1, 2]);
        assert_eq!(cert.second, vec![1, 2, 4]);
        assert_eq!(cert.degree, vec![0, 1, 1, 0]);
        assert!(cert.verify(&p).unwrap());
    }

    #[test]
    fn torsion_gluing() {
        // <(1,0), (1,1)> in Z x Z/2: G1 = Z x 0, G2 = <(1,1)>; intersection 2Z x 0.
        let a = IntMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let p = SemigroupPresentation::new(a, vec![BigInt::from(2)]).unwrap();
        let cert = detect_gluing(&p).unwrap().unwrap();
        assert_eq!(cert.degree, vec![2, 0]);
        assert!(cert.verify(&p).unwrap());
    }

    #[test]
    fn tampered_certificate_fails() {
        let p = pres(&[&[2, 3]]);
        let mut cert = detect_gluing(&p).unwrap().unwrap();
        cert.degree = vec![12];
        cert.first_witness = vec![6, 0];
        cert.second_witness = vec![0, 4];
        assert!(!cert.verify(&p).unwrap());
    }
}
