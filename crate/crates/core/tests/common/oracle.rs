//! Brute-force reference implementations over small `i64` instances, written
//! without the library so its answers can be checked against them.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

pub type Rows = Vec<Vec<i64>>;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn apply(rows: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    rows.iter()
        .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn column(rows: &[Vec<i64>], j: usize) -> Vec<i64> {
    rows.iter().map(|r| r[j]).collect()
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            let f = m[i][c];
            let g = m[r][c];
            let pivot_row = m[r].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                *x = *x * g - y * f;
            }
            let d = m[i].iter().fold(0i128, |acc, &v| {
                let (mut a, mut b) = (acc.abs(), v.abs());
                while b != 0 {
                    (a, b) = (b, a % b);
                }
                a
            });
            if d > 1 {
                m[i].iter_mut().for_each(|v| *v /= d);
            }
        }
        r += 1;
    }
    r
}

/// Sign-normalized copy: first nonzero entry positive.
pub fn normalize(mut v: Vec<i64>) -> Vec<i64> {
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

/// Positive integer weights `w = y A` with `y` searched in a small box.
pub fn positive_grading(rows: &[Vec<i64>], n: usize) -> Option<Vec<i64>> {
    let m = rows.len();
    let width = 7u32;
    let mut best: Option<Vec<i64>> = None;
    for code in 0..width.pow(m as u32) {
        let mut c = code;
        let y: Vec<i64> = (0..m)
            .map(|_| {
                let d = (c % width) as i64 - 3;
                c /= width;
                d
            })
            .collect();
        let w: Vec<i64> = (0..n)
            .map(|j| (0..m).map(|k| y[k] * rows[k][j]).sum())
            .collect();
        if w.iter().all(|&x| x > 0) {
            let g = w.iter().fold(0, |acc, &x| gcd(acc, x));
            let w: Vec<i64> = w.iter().map(|x| x / g).collect();
            if best
                .as_ref()
                .is_none_or(|b| w.iter().sum::<i64>() < b.iter().sum::<i64>())
            {
                best = Some(w);
            }
        }
    }
    best
}

/// All `α >= 0` with `w·α <= bound`, or `None` past `cap` monomials.
pub fn monomials_up_to(w: &[i64], bound: i64, cap: usize) -> Option<Vec<Vec<i64>>> {
    fn go(
        w: &[i64],
        i: usize,
        left: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
        cap: usize,
    ) -> bool {
        if i == w.len() {
            out.push(cur.clone());
            return out.len() <= cap;
        }
        let mut a = 0;
        while a * w[i] <= left {
            cur[i] = a;
            if !go(w, i + 1, left - a * w[i], cur, out, cap) {
                return false;
            }
            a += 1;
        }
        cur[i] = 0;
        true
    }
    let mut out = Vec::new();
    let mut cur = vec![0; w.len()];
    go(w, 0, bound, &mut cur, &mut out, cap).then_some(out)
}

/// Complete fibers of all degrees of `w`-weight at most `bound`, members
/// sorted lexicographically.
pub fn fibers_up_to(
    rows: &[Vec<i64>],
    w: &[i64],
    bound: i64,
    cap: usize,
) -> Option<BTreeMap<Vec<i64>, Vec<Vec<i64>>>> {
    let mut out: BTreeMap<Vec<i64>, Vec<Vec<i64>>> = BTreeMap::new();
    for alpha in monomials_up_to(w, bound, cap)? {
        out.entry(apply(rows, &alpha)).or_default().push(alpha);
    }
    for f in out.values_mut() {
        f.sort();
    }
    Some(out)
}

/// Components of the graph joining monomials with a common variable, each
/// sorted, ordered by smallest member.
pub fn support_components(fiber: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; fiber.len()];
    let mut out = Vec::new();
    for s in 0..fiber.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for b in 0..fiber.len() {
                if !seen[b]
                    && fiber[a]
                        .iter()
                        .zip(&fiber[b])
                        .any(|(&x, &y)| x > 0 && y > 0)
                {
                    seen[b] = true;
                    comp.push(b);
                    queue.push_back(b);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Minimal Markov basis read off fiber components: per degree, the
/// lex-largest monomial of each component joined to that of the first.
pub struct OracleMarkov {
    pub binomials: BTreeSet<Vec<i64>>,
    pub counts: BTreeMap<Vec<i64>, usize>,
}

pub fn oracle_markov(fibers: &BTreeMap<Vec<i64>, Vec<Vec<i64>>>) -> OracleMarkov {
    let mut binomials = BTreeSet::new();
    let mut counts = BTreeMap::new();
    for (d, f) in fibers {
        let comps = support_components(f);
        if comps.len() < 2 {
            continue;
        }
        counts.insert(d.clone(), comps.len() - 1);
        let rep = |c: &Vec<usize>| &f[*c.last().unwrap()];
        let center = rep(&comps[0]);
        for c in &comps[1..] {
            binomials.insert(normalize(
                center.iter().zip(rep(c)).map(|(a, b)| a - b).collect(),
            ));
        }
    }
    OracleMarkov { binomials, counts }
}

/// Whether the moves `±v` connect all of `fiber` while staying nonnegative.
pub fn moves_connect(fiber: &[Vec<i64>], moves: &[Vec<i64>]) -> bool {
    let index: BTreeMap<&Vec<i64>, usize> = fiber.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut seen = vec![false; fiber.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut reached = 1;
    while let Some(a) = queue.pop_front() {
        for mv in moves {
            for sign in [1, -1] {
                let next: Vec<i64> = fiber[a].iter().zip(mv).map(|(x, y)| x + sign * y).collect();
                if next.iter().any(|&x| x < 0) {
                    continue;
                }
                if let Some(&b) = index.get(&next) {
                    if !seen[b] {
                        seen[b] = true;
                        reached += 1;
                        queue.push_back(b);
                    }
                }
            }
        }
    }
    reached == fiber.len()
}

/// `true` when `u` is conformal to `v` (same signs, `|u_i| <= |v_i|`).
fn conformal(u: &[i64], v: &[i64]) -> bool {
    u.iter()
        .zip(v)
        .all(|(&a, &b)| a == 0 || (a.signum() == b.signum() && a.abs() <= b.abs()))
}

/// Conformally minimal nonzero kernel vectors with entries in `[-r, r]`, sign
/// normalized; complete for Graver elements whose entries fit the box.
pub fn graver_in_box(rows: &[Vec<i64>], n: usize, r: i64) -> BTreeSet<Vec<i64>> {
    let width = (2 * r + 1) as u64;
    let kernel: Vec<Vec<i64>> = (0..width.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let d = (code % width) as i64 - r;
                    code /= width;
                    d
                })
                .collect::<Vec<i64>>()
        })
        .filter(|x| x.iter().any(|&v| v != 0) && apply(rows, x).iter().all(|&v| v == 0))
        .collect();
    kernel
        .iter()
        .filter(|v| !kernel.iter().any(|u| u != *v && conformal(u, v)))
        .map(|v| normalize(v.clone()))
        .collect()
}

/// Whether the saturated lattice `ker A` splits along some bipartition of the
/// columns: `ker A` is a product iff the kernels of the two column
/// restrictions have ranks adding up to its rank.
pub fn kernel_splits(rows: &[Vec<i64>], n: usize) -> bool {
    let restrict = |cols: &[usize]| -> Rows {
        rows.iter()
            .map(|r| cols.iter().map(|&j| r[j]).collect())
            .collect()
    };
    let all: Vec<usize> = (0..n).collect();
    let total = n - rank(&restrict(&all));
    if total == 0 {
        return n > 1;
    }
    (1..(1u32 << (n - 1))).any(|mask| {
        let c1: Vec<usize> = (0..n)
            .filter(|&i| i == 0 || mask >> (i - 1) & 1 == 0)
            .collect();
        let c2: Vec<usize> = (0..n).filter(|i| !c1.contains(i)).collect();
        if c2.is_empty() {
            return false;
        }
        let k1 = c1.len() - rank(&restrict(&c1));
        let k2 = c2.len() - rank(&restrict(&c2));
        k1 + k2 == total
    })
}

/// Random `rows x n` matrix with entries in `lo..=hi` and no zero column.
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, n: usize, lo: i64, hi: i64) -> Rows {
    loop {
        let a: Rows = (0..rows)
            .map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect())
            .collect();
        if (0..n).all(|j| a.iter().any(|r| r[j] != 0)) {
            return a;
        }
    }
}

/// A decomposable presentation with known summands.
pub struct Planted {
    pub rows: Rows,
    pub n: usize,
    /// Blocks over the final column order, each sorted, in order of smallest index.
    pub partition: Vec<Vec<usize>>,
    /// Generator matrix of each summand over its own columns, aligned with `partition`.
    pub blocks: Vec<Rows>,
}

/// One pointed summand with an irreducible kernel of rank >= 1, or a single
/// free generator when `size == 1`.
fn random_block<R: Rng>(rng: &mut R, size: usize) -> Rows {
    if size == 1 {
        return vec![vec![rng.gen_range(1..=3)]];
    }
    loop {
        let r = rng.gen_range(1..size);
        let a = random_matrix(rng, r, size, -2, 3);
        if rank(&a) == size || positive_grading(&a, size).is_none() || kernel_splits(&a, size) {
            continue;
        }
        return a;
    }
}

/// Concatenates random summands block-diagonally, shuffles the columns and
/// mixes the rows by a random unimodular matrix.
pub fn planted<R: Rng>(rng: &mut R, sizes: &[usize]) -> Planted {
    let blocks: Vec<Rows> = sizes.iter().map(|&s| random_block(rng, s)).collect();
    assemble(rng, blocks)
}

/// Block-diagonal concatenation of the given summands, shuffled and mixed as
/// in [`planted`].
pub fn assemble<R: Rng>(rng: &mut R, blocks: Vec<Rows>) -> Planted {
    let n: usize = blocks.iter().map(|b| b[0].len()).sum();
    let mut rows: Rows = Vec::new();
    let mut offset = 0;
    let mut cols_of: Vec<Vec<usize>> = Vec::new();
    for b in &blocks {
        let k = b[0].len();
        for r in b {
            let mut row = vec![0; n];
            row[offset..offset + k].copy_from_slice(r);
            rows.push(row);
        }
        cols_of.push((offset..offset + k).collect());
        offset += k;
    }

    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    // new column perm[j] holds old column j
    let mut shuffled = vec![vec![0; n]; rows.len()];
    for (r, row) in rows.iter().enumerate() {
        for j in 0..n {
            shuffled[r][perm[j]] = row[j];
        }
    }
    let m = shuffled.len();
    for _ in 0..2 * m {
        let (i, k) = (rng.gen_range(0..m), rng.gen_range(0..m));
        if i != k {
            let f = rng.gen_range(-2..=2);
            let source = shuffled[k].clone();
            for (x, y) in shuffled[i].iter_mut().zip(&source) {
                *x += f * y;
            }
        }
        if rng.gen_bool(0.3) {
            shuffled.swap(i, k);
        }
    }

    let mut pairs: Vec<(Vec<usize>, Rows)> = cols_of
        .iter()
        .zip(&blocks)
        .map(|(cols, b)| {
            let mut idx: Vec<(usize, usize)> = cols
                .iter()
                .enumerate()
                .map(|(c, &j)| (perm[j], c))
                .collect();
            idx.sort_unstable();
            let block_rows: Rows = b
                .iter()
                .map(|r| idx.iter().map(|&(_, c)| r[c]).collect())
                .collect();
            (idx.iter().map(|&(j, _)| j).collect(), block_rows)
        })
        .collect();
    pairs.sort_by_key(|(cols, _)| cols[0]);
    let (partition, blocks) = pairs.into_iter().unzip();
    Planted {
        rows: shuffled,
        n,
        partition,
        blocks,
    }
}
