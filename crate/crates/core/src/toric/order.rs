use std::cmp::Ordering;

/// How monomials of equal weighted degree (or all monomials, for lex) compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    GradedReverseLex,
    Lex,
    GradedLex,
}

/// A monomial order on exponent vectors.
///
/// `priority[0]` is the most significant variable. For graded orders, the
/// weighted degree `Σ weights[i] e_i` is compared first; weights must be
/// strictly positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    priority: Vec<usize>,
    weights: Vec<i64>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>, weights: Vec<i64>) -> Self {
        assert_eq!(priority.len(), weights.len(), "one weight per variable");
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        let mut seen = priority.clone();
        seen.sort_unstable();
        assert!(
            seen.iter().copied().eq(0..priority.len()),
            "priority must be a permutation"
        );
        Self {
            kind,
            priority,
            weights,
        }
    }

    /// Weighted reverse lex with `x_1 > x_2 > ... > x_n`.
    pub fn grevlex(weights: Vec<i64>) -> Self {
        let n = weights.len();
        Self::new(OrderKind::GradedReverseLex, (0..n).collect(), weights)
    }

    /// Weighted reverse lex in which `var` is the cheapest variable.
    pub fn grevlex_cheapest(weights: Vec<i64>, var: usize) -> Self {
        let n = weights.len();
        let mut priority: Vec<usize> = (0..n).filter(|&i| i != var).collect();
        priority.push(var);
        Self::new(OrderKind::GradedReverseLex, priority, weights)
    }

    pub fn lex(n: usize) -> Self {
        Self::new(OrderKind::Lex, (0..n).collect(), vec![1; n])
    }

    pub fn graded_lex(weights: Vec<i64>) -> Self {
        let n = weights.len();
        Self::new(OrderKind::GradedLex, (0..n).collect(), weights)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn degree(&self, e: &[i64]) -> i128 {
        self.weights
            .iter()
            .zip(e)
            .map(|(&w, &x)| w as i128 * x as i128)
            .sum()
    }

    pub fn cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        let lex = || {
            self.priority
                .iter()
                .map(|&i| a[i].cmp(&b[i]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        };
        match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::GradedLex => self.degree(a).cmp(&self.degree(b)).then_with(lex),
            OrderKind::GradedReverseLex => self.degree(a).cmp(&self.degree(b)).then_with(|| {
                self.priority
                    .iter()
                    .rev()
                    .map(|&i| b[i].cmp(&a[i]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
        }
    }
}
