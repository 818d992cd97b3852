use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use super::binomial::Binomial;
use super::order::TermOrder;

/// `x^lead - x^trail` with `lead > trail` in the ambient order. Unlike
/// [`Binomial`], the two terms may share variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedBinomial {
    pub lead: Vec<i64>,
    pub trail: Vec<i64>,
}

impl OrientedBinomial {
    /// `None` when the two terms coincide.
    pub fn new(a: Vec<i64>, b: Vec<i64>, order: &TermOrder) -> Option<Self> {
        match order.cmp(&a, &b) {
            Ordering::Greater => Some(Self { lead: a, trail: b }),
            Ordering::Less => Some(Self { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }

    /// The pure binomial left after cancelling common factors.
    pub fn to_binomial(&self) -> Binomial {
        Binomial::from_monomials(&self.lead, &self.trail)
    }
}

/// A reduced Gröbner basis of a binomial ideal.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: TermOrder,
    elements: Vec<OrientedBinomial>,
}

fn divides(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

fn lcm(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

/// Normal form of a monomial against `basis`; for binomial generators this
/// is again a single monomial.
fn reduce_monomial(mut u: Vec<i64>, basis: &[OrientedBinomial], skip: Option<usize>) -> Vec<i64> {
    'outer: loop {
        for (k, g) in basis.iter().enumerate() {
            if Some(k) == skip {
                continue;
            }
            if divides(&g.lead, &u) {
                for ((x, l), t) in u.iter_mut().zip(&g.lead).zip(&g.trail) {
                    *x += t - l;
                }
                continue 'outer;
            }
        }
        return u;
    }
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Elements sorted by leading term, ascending.
    pub fn elements(&self) -> &[OrientedBinomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn normal_form(&self, monomial: &[i64]) -> Vec<i64> {
        reduce_monomial(monomial.to_vec(), &self.elements, None)
    }

    /// Ideal membership of `x^a - x^b`.
    pub fn contains(&self, a: &[i64], b: &[i64]) -> bool {
        self.normal_form(a) == self.normal_form(b)
    }

    pub fn contains_binomial(&self, b: &Binomial) -> bool {
        self.contains(&b.plus(), &b.minus())
    }

    pub fn to_binomials(&self) -> Vec<Binomial> {
        self.elements
            .iter()
            .map(OrientedBinomial::to_binomial)
            .collect()
    }
}

/// Buchberger's algorithm for binomial ideals: the reduced Gröbner basis of the
/// ideal generated by `gens` (given as term pairs `(a, b)` for `x^a - x^b`).
///
/// S-pairs are processed by ascending degree of their lcm; pairs with coprime
/// leading terms and pairs covered by the chain criterion are skipped.
pub fn groebner_basis(gens: &[(Vec<i64>, Vec<i64>)], order: &TermOrder) -> GroebnerBasis {
    let mut basis: Vec<OrientedBinomial> = Vec::new();
    let mut pairs: BinaryHeap<Reverse<(i128, usize, usize)>> = BinaryHeap::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();

    let insert =
        |basis: &mut Vec<OrientedBinomial>, pairs: &mut BinaryHeap<_>, g: OrientedBinomial| {
            let j = basis.len();
            for (i, f) in basis.iter().enumerate() {
                pairs.push(Reverse((order.degree(&lcm(&f.lead, &g.lead)), i, j)));
            }
            basis.push(g);
        };

    for (a, b) in gens {
        let a = reduce_monomial(a.clone(), &basis, None);
        let b = reduce_monomial(b.clone(), &basis, None);
        if let Some(g) = OrientedBinomial::new(a, b, order) {
            insert(&mut basis, &mut pairs, g);
        }
    }

    while let Some(Reverse((_, i, j))) = pairs.pop() {
        done.insert((i, j));
        let (f, g) = (&basis[i], &basis[j]);
        if coprime(&f.lead, &g.lead) {
            continue;
        }
        let l = lcm(&f.lead, &g.lead);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(&basis[k].lead, &l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let a: Vec<i64> = l
            .iter()
            .zip(&f.lead)
            .zip(&f.trail)
            .map(|((x, y), t)| x - y + t)
            .collect();
        let b: Vec<i64> = l
            .iter()
            .zip(&g.lead)
            .zip(&g.trail)
            .map(|((x, y), t)| x - y + t)
            .collect();
        let a = reduce_monomial(a, &basis, None);
        let b = reduce_monomial(b, &basis, None);
        if let Some(h) = OrientedBinomial::new(a, b, order) {
            insert(&mut basis, &mut pairs, h);
        }
    }

    GroebnerBasis {
        elements: interreduce(basis, order),
        order: order.clone(),
    }
}

/// Drops elements whose leading term is divisible by another's and fully
/// reduces the trailing terms.
fn interreduce(mut basis: Vec<OrientedBinomial>, order: &TermOrder) -> Vec<OrientedBinomial> {
    basis.sort_by(|a, b| {
        order
            .cmp(&a.lead, &b.lead)
            .then_with(|| order.cmp(&a.trail, &b.trail))
    });
    let mut minimal: Vec<OrientedBinomial> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|f| divides(&f.lead, &g.lead)) {
            minimal.push(g);
        }
    }
    let snapshot = minimal.clone();
    for (k, g) in minimal.iter_mut().enumerate() {
        g.trail = reduce_monomial(std::mem::take(&mut g.trail), &snapshot, Some(k));
    }
    minimal
}

/// Reduced Gröbner basis of the ideal generated by pure binomials.
pub fn buchberger(gens: &[Binomial], order: &TermOrder) -> GroebnerBasis {
    let pairs: Vec<(Vec<i64>, Vec<i64>)> = gens.iter().map(|b| (b.plus(), b.minus())).collect();
    groebner_basis(&pairs, order)
}
