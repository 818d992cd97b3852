use std::collections::BTreeSet;

use super::Fibers;
use crate::error::Result;
use crate::toric::sdegree;
use crate::union_find::UnionFind;

/// The 1-skeleton of `∇_m`: fiber elements joined when their monomials share
/// a variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberComplex {
    pub degree: Vec<i64>,
    /// The fiber over `degree`, lexicographically sorted.
    pub vertices: Vec<Vec<i64>>,
    pub edges: Vec<(usize, usize)>,
    /// Vertex indices per component; components ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
}

impl FiberComplex {
    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }
}

/// `Δ_m`, stored by its facets: `F` is a face iff `m - Σ_{i∈F} a_i ∈ S`, which
/// holds iff `F` lies in the support of some fiber element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaComplex {
    pub degree: Vec<i64>,
    /// Generators `i` with `m - a_i ∈ S`, ascending.
    pub vertices: Vec<usize>,
    /// Maximal faces, each ascending, in lexicographic order.
    pub facets: Vec<Vec<usize>>,
    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
}

impl DeltaComplex {
    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.facets
            .iter()
            .any(|f| face.iter().all(|i| f.contains(i)))
    }
}

fn support(v: &[i64]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, _)| i)
        .collect()
}

impl Fibers<'_> {
    pub fn nabla(&self, m: &[i64]) -> Result<FiberComplex> {
        let vertices = self.fiber(m)?;
        let mut degree = m.to_vec();
        self.presentation().normalize_degree(&mut degree);
        Ok(Self::nabla_of(degree, vertices))
    }

    /// `∇` of the degree of the monomial `alpha`.
    pub fn nabla_through(&self, alpha: &[i64]) -> Result<FiberComplex> {
        let vertices = self.fiber_through(alpha)?;
        Ok(Self::nabla_of(
            sdegree(alpha, self.presentation())?,
            vertices,
        ))
    }

    fn nabla_of(degree: Vec<i64>, vertices: Vec<Vec<i64>>) -> FiberComplex {
        let supports: Vec<Vec<usize>> = vertices.iter().map(|v| support(v)).collect();
        let mut edges = Vec::new();
        let mut uf = UnionFind::new(vertices.len());
        for (a, sa) in supports.iter().enumerate() {
            for (b, vb) in vertices.iter().enumerate().skip(a + 1) {
                if sa.iter().any(|&i| vb[i] != 0) {
                    edges.push((a, b));
                    uf.union(a, b);
                }
            }
        }
        FiberComplex {
            degree,
            vertices,
            edges,
            components: uf.groups(),
        }
    }

    pub fn delta(&self, m: &[i64]) -> Result<DeltaComplex> {
        let fiber = self.fiber(m)?;
        let mut degree = m.to_vec();
        self.presentation().normalize_degree(&mut degree);
        Ok(self.delta_of(degree, &fiber))
    }

    /// `Δ` of the degree of the monomial `alpha`.
    pub fn delta_through(&self, alpha: &[i64]) -> Result<DeltaComplex> {
        let fiber = self.fiber_through(alpha)?;
        Ok(self.delta_of(sdegree(alpha, self.presentation())?, &fiber))
    }

    fn delta_of(&self, degree: Vec<i64>, fiber: &[Vec<i64>]) -> DeltaComplex {
        let supports: BTreeSet<Vec<usize>> = fiber.iter().map(|v| support(v)).collect();
        let facets: Vec<Vec<usize>> = supports
            .iter()
            .filter(|s| {
                !supports
                    .iter()
                    .any(|t| t.len() > s.len() && s.iter().all(|i| t.contains(i)))
            })
            .cloned()
            .collect();

        let vertices: Vec<usize> = facets
            .iter()
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let n = self.presentation().generator_count();
        let mut uf = UnionFind::new(n);
        for f in &facets {
            for w in f.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let components = uf
            .groups()
            .into_iter()
            .filter(|g| vertices.contains(&g[0]))
            .collect();
        DeltaComplex {
            degree,
            vertices,
            facets,
            components,
        }
    }
}
