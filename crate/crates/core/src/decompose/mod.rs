//! HNF-diagonalization of integer matrices and the induced decomposition of
//! semigroups into irreducible direct summands.

mod reparam;

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{hnf, is_hnf, IntMatrix, Permutation};
use crate::presentation::SemigroupPresentation;
use crate::union_find::UnionFind;

pub use reparam::{
    nice_generators, reparametrize, NiceGenerators, ParameterBlock, Parametrization,
};

/// One diagonal block `D_i` together with the original column indices it covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Original (0-based) column indices, ascending.
    pub generators: Vec<usize>,
    /// The block, in Hermite normal form with full row rank.
    pub matrix: IntMatrix,
}

/// Output of [`hnf_diagonalize`]: `row_transform * L * column_order = diagonal`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub column_order: Permutation,
    pub row_transform: IntMatrix,
    pub diagonal: IntMatrix,
    pub blocks: Vec<Block>,
    /// Columns of `L` that are identically zero.
    pub free_generators: Vec<usize>,
    pub decomposable: bool,
}

impl Decomposition {
    /// Number of direct summands: one per block plus one per free generator.
    pub fn summand_count(&self) -> usize {
        self.blocks.len() + self.free_generators.len()
    }

    /// Generator index sets of all summands, free generators as singletons,
    /// ordered by smallest member.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        let mut parts: Vec<Vec<usize>> = self.blocks.iter().map(|b| b.generators.clone()).collect();
        parts.extend(self.free_generators.iter().map(|&j| vec![j]));
        parts.sort_by_key(|p| p[0]);
        parts
    }
}

/// Finds a row transform `P` and column permutation `Q` such that `P L Q` is
/// HNF-diagonal.
///
/// Rows of `HNF(L)` are grouped by the transitive closure of "supports
/// intersect"; each group becomes one irreducible block. Blocks are ordered by
/// their smallest column, columns keep their relative order inside a block,
/// zero columns go last.
pub fn hnf_diagonalize(l: &IntMatrix) -> Decomposition {
    let (m, n) = (l.rows(), l.cols());
    let h = hnf(l);
    let rank = h.rank();

    let mut uf = UnionFind::new(rank);
    for j in 0..n {
        let mut first: Option<usize> = None;
        for i in 0..rank {
            if !h.form.get(i, j).is_zero() {
                match first {
                    Some(f) => {
                        uf.union(f, i);
                    }
                    None => first = Some(i),
                }
            }
        }
    }
    let components = uf.groups();

    let mut row_order: Vec<usize> = Vec::with_capacity(m);
    let mut col_order: Vec<usize> = Vec::with_capacity(n);
    let mut block_shapes: Vec<(Vec<usize>, usize, usize)> = Vec::new();
    for comp in &components {
        let cols: BTreeSet<usize> = comp.iter().flat_map(|&i| h.form.row_support(i)).collect();
        let cols: Vec<usize> = cols.into_iter().collect();
        block_shapes.push((cols.clone(), row_order.len(), col_order.len()));
        row_order.extend(comp.iter().copied());
        col_order.extend(cols);
    }
    row_order.extend(rank..m);
    let free_generators: Vec<usize> = (0..n).filter(|&j| h.form.is_zero_column(j)).collect();
    col_order.extend(free_generators.iter().copied());

    let row_perm = Permutation::from_order(row_order).expect("rows form a permutation");
    let column_order = Permutation::from_order(col_order).expect("columns form a permutation");
    let p1 = row_perm.matrix().transpose();
    let row_transform = &p1 * &h.transform;
    let diagonal =
        column_order.permute_columns(&p1.checked_mul(&h.form).expect("square row permutation"));

    let blocks: Vec<Block> = components
        .iter()
        .zip(&block_shapes)
        .map(|(comp, (cols, r0, c0))| {
            let rows: Vec<usize> = (*r0..r0 + comp.len()).collect();
            let dcols: Vec<usize> = (*c0..c0 + cols.len()).collect();
            Block {
                generators: cols.clone(),
                matrix: diagonal.select_rows(&rows).select_columns(&dcols),
            }
        })
        .collect();

    let decomposable = blocks.len() + free_generators.len() >= 2;
    Decomposition {
        column_order,
        row_transform,
        diagonal,
        blocks,
        free_generators,
        decomposable,
    }
}

/// Which matrix the diagonalization runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Diagonalize a basis of `ker S`; decides decomposability exactly.
    Kernel,
    /// Diagonalize the generator matrix itself (torsion-free only). A
    /// decomposition found this way is valid, but an irreducible verdict is
    /// not conclusive.
    Direct,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Kernel => "kernel",
            Mode::Direct => "direct",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "kernel" => Ok(Mode::Kernel),
            "direct" => Ok(Mode::Direct),
            other => Err(format!(
                "unknown mode `{other}` (expected kernel or direct)"
            )),
        }
    }
}

/// Splits `S` into irreducible summands.
///
/// In kernel mode the blocks give the generator sets `A_i` of the summands and
/// generators missing from every relation are reported as free summands.
pub fn decompose_semigroup(p: &SemigroupPresentation, mode: Mode) -> Result<Decomposition> {
    match mode {
        Mode::Kernel => Ok(hnf_diagonalize(p.kernel().basis())),
        Mode::Direct => {
            if !p.is_torsion_free() {
                return Err(Error::TorsionPresent(p.moduli().len()));
            }
            Ok(hnf_diagonalize(p.matrix()))
        }
    }
}

/// Checks the HNF-diagonal shape: zero rows at the bottom, zero columns at the
/// right, and a chain of support-connected full-rank HNF blocks along the
/// diagonal.
pub fn is_hnf_diagonal(d: &IntMatrix) -> bool {
    let (m, n) = (d.rows(), d.cols());
    let nonzero_rows = (0..m).take_while(|&i| !d.is_zero_row(i)).count();
    if (nonzero_rows..m).any(|i| !d.is_zero_row(i)) {
        return false;
    }
    let nonzero_cols = (0..n).take_while(|&j| !d.is_zero_column(j)).count();
    if (nonzero_cols..n).any(|j| !d.is_zero_column(j)) {
        return false;
    }

    let mut uf = UnionFind::new(nonzero_rows);
    for j in 0..nonzero_cols {
        let rows: Vec<usize> = (0..nonzero_rows)
            .filter(|&i| !d.get(i, j).is_zero())
            .collect();
        for w in rows.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut next_row = 0;
    let mut next_col = 0;
    for comp in uf.groups() {
        let expected_rows: Vec<usize> = (next_row..next_row + comp.len()).collect();
        if comp != expected_rows {
            return false;
        }
        let cols: BTreeSet<usize> = comp.iter().flat_map(|&i| d.row_support(i)).collect();
        let cols: Vec<usize> = cols.into_iter().collect();
        let expected_cols: Vec<usize> = (next_col..next_col + cols.len()).collect();
        if cols != expected_cols {
            return false;
        }
        let block = d.select_rows(&comp).select_columns(&cols);
        if !is_hnf(&block) {
            return false;
        }
        next_row += comp.len();
        next_col += cols.len();
    }
    next_col == nonzero_cols
}
