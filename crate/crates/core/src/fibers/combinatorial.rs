use super::gluing::DEFAULT_PARTITION_CAP;
use super::Fibers;
use crate::error::{Error, Result};
use crate::presentation::SemigroupPresentation;
use crate::toric::{betti_degrees, MarkovBasis};

/// Searches for a bipartition `(C1, C2)` of the generators such that every
/// Betti fiber lives entirely in `k[C1]` or entirely in `k[C2]`, and each side
/// carries a Betti fiber or a generator that occurs in no relation.
///
/// Brute force over all `2^(n-1) - 1` bipartitions with generator 0 in `C1`;
/// meant as an independent check on the lattice-based decomposition.
pub fn combinatorial_decomposable(
    p: &SemigroupPresentation,
    m: &MarkovBasis,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let n = p.generator_count();
    let degrees = betti_degrees(m)?;
    let fibers = Fibers::new(p)?;
    if n < 2 {
        return Ok(None);
    }
    let candidates = (1u128 << (n - 1)) - 1;
    if candidates > DEFAULT_PARTITION_CAP {
        return Err(Error::EnumerationCap {
            what: "bipartitions",
            needed: candidates,
            cap: DEFAULT_PARTITION_CAP,
        });
    }

    let mut supports: Vec<u64> = Vec::with_capacity(degrees.len());
    for d in &degrees {
        let k = m
            .sdegrees
            .iter()
            .position(|e| e == d)
            .expect("Betti degrees come from the basis");
        let mask = fibers
            .delta_through(&m.binomials[k].plus())?
            .vertices
            .iter()
            .fold(0u64, |acc, &i| acc | 1 << i);
        supports.push(mask);
    }
    let in_relation = supports.iter().fold(0u64, |acc, s| acc | s);
    let all = (1u64 << n) - 1;
    let free = all & !in_relation;

    for rest in 0..candidates as u64 {
        let c1 = 1 | (rest << 1);
        let c2 = all & !c1;
        if supports.iter().any(|&s| s & c1 != 0 && s & c2 != 0) {
            continue;
        }
        let side_ok = |c: u64| c & free != 0 || supports.iter().any(|&s| s & c == s && s != 0);
        if side_ok(c1) && side_ok(c2) {
            let to_vec = |c: u64| (0..n).filter(|&i| c >> i & 1 == 1).collect::<Vec<_>>();
            return Ok(Some((to_vec(c1), to_vec(c2))));
        }
    }
    Ok(None)
}
