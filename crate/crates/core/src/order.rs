//! The band-priority graded reverse-lexicographic term order.
//!
//! The priority list starts with the diagonal `x[1][1]` > `x[2][2]` > ... >
//! `x[n][n]`, continues with the band `x[1][3]` > `x[2][4]` > ... > `x[n-2][n]` >
//! `x[1][2]` > `x[n-1][n]`, and ends with the remaining variables. The tail on
//! those remaining variables is not forced by the construction; the standard
//! completion lists them by ascending (row, col), and alternate completions
//! are provided so the insensitivity of the results can be exercised.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::polynomial::Polynomial;
use crate::variable::{VarClass, Variable};
use std::cmp::Ordering;
use std::collections::HashMap;

/// Hard cap so variable ranks fit in the monomial encoding.
const MAX_N: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
}

/// A total priority on the C(n+1,2) matrix variables together with the
/// graded revlex comparison it induces. Monomials built through one order
/// must only be compared with monomials built through the same order.
#[derive(Debug, Clone)]
pub struct TermOrder {
    n: usize,
    vars: Vec<Variable>,
    rank: HashMap<Variable, usize>,
}

impl TermOrder {
    /// The order with the standard tail completion (ascending (row, col)).
    pub fn standard(n: usize) -> Result<Self> {
        Self::with_tail(n, tail_ascending(n))
    }

    /// The order with a caller-chosen permutation of the off-band tail.
    pub fn with_tail(n: usize, tail: Vec<Variable>) -> Result<Self> {
        if n < 4 {
            return Err(Error::MatrixTooSmall(n, 4));
        }
        if n > MAX_N {
            return Err(Error::MatrixTooLarge(n, MAX_N));
        }
        let mut expected = tail_ascending(n);
        expected.sort_unstable();
        let mut given = tail.clone();
        given.sort_unstable();
        if expected != given {
            return Err(Error::InvalidTailOrder);
        }

        let mut vars = Vec::with_capacity(n * (n + 1) / 2);
        for i in 1..=n {
            vars.push(Variable::new(i, i));
        }
        for i in 1..=n - 2 {
            vars.push(Variable::new(i, i + 2));
        }
        vars.push(Variable::new(1, 2));
        vars.push(Variable::new(n - 1, n));
        vars.extend(tail);
        debug_assert_eq!(vars.len(), n * (n + 1) / 2);

        let rank = vars.iter().enumerate().map(|(r, &v)| (v, r)).collect();
        Ok(TermOrder { n, vars, rank })
    }

    /// Two alternate tail completions used by the robustness checks: the
    /// standard tail reversed, and the tail sorted by ascending (col, row).
    pub fn alternates(n: usize) -> Result<[TermOrder; 2]> {
        let mut reversed = tail_ascending(n);
        reversed.reverse();
        let mut col_major = tail_ascending(n);
        col_major.sort_unstable_by_key(|v| (v.col(), v.row()));
        Ok([
            Self::with_tail(n, reversed)?,
            Self::with_tail(n, col_major)?,
        ])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Variables in descending priority (rank order).
    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn rank_of(&self, v: Variable) -> usize {
        self.rank[&v]
    }

    pub fn var_at(&self, rank: usize) -> Variable {
        self.vars[rank]
    }

    /// The diagonal variables `x[i][i]` in priority order.
    pub fn diagonal_vars(&self) -> Vec<Variable> {
        (1..=self.n).map(|i| Variable::new(i, i)).collect()
    }

    /// The band variables in priority order.
    pub fn band_vars(&self) -> Vec<Variable> {
        let mut u: Vec<Variable> = (1..=self.n - 2).map(|i| Variable::new(i, i + 2)).collect();
        u.push(Variable::new(1, 2));
        u.push(Variable::new(self.n - 1, self.n));
        u
    }

    /// Diagonal followed by band, i.e. the 2n variables carrying the cycle.
    pub fn band_region_vars(&self) -> Vec<Variable> {
        let mut all = self.diagonal_vars();
        all.extend(self.band_vars());
        all
    }

    pub fn class_of(&self, v: Variable) -> VarClass {
        v.class_in(self.n)
    }

    /// Graded revlex comparison of two monomials in this order's layout.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Comparison {
        debug_assert!(a.support().all(|r| r < self.num_vars()));
        debug_assert!(b.support().all(|r| r < self.num_vars()));
        match a.cmp(b) {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equal,
            Ordering::Greater => Comparison::Greater,
        }
    }

    pub fn var_monomial(&self, v: Variable) -> Monomial {
        Monomial::variable(self.rank_of(v))
    }

    pub fn monomial(&self, pairs: &[(Variable, u32)]) -> Monomial {
        Monomial::from_exps(pairs.iter().map(|&(v, e)| (self.rank_of(v), e)))
    }

    pub fn squarefree_monomial(&self, vars: impl IntoIterator<Item = Variable>) -> Monomial {
        Monomial::from_exps(vars.into_iter().map(|v| (self.rank_of(v), 1)))
    }

    /// (variable, exponent) pairs in descending priority.
    pub fn externalize(&self, m: &Monomial) -> Vec<(Variable, u32)> {
        m.iter().map(|(r, e)| (self.var_at(r), e)).collect()
    }

    /// Plain-text monomial: factors sorted by priority, e.g.
    /// `x[1][1]·x[1][2]^2`; the empty product prints as `1`.
    pub fn monomial_string(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        self.externalize(m)
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("\u{b7}")
    }

    /// Plain-text polynomial: terms in descending order, each as
    /// `c·<monomial>`, joined by " + " / " - ".
    pub fn polynomial_string(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in p.terms_desc().enumerate() {
            let negative = c < &num::BigRational::from_integer(0.into());
            let abs = if negative { -c.clone() } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&format!("{abs}\u{b7}{}", self.monomial_string(m)));
        }
        out
    }
}

fn tail_ascending(n: usize) -> Vec<Variable> {
    let mut tail = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let v = Variable::new(i, j);
            if v.class_in(n) == VarClass::Other {
                tail.push(v);
            }
        }
    }
    tail
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize, j: usize) -> Variable {
        Variable::new(i, j)
    }

    #[test]
    fn rejects_small_matrices() {
        assert!(TermOrder::standard(3).is_err());
        assert!(TermOrder::standard(4).is_ok());
    }

    #[test]
    fn priority_prefix_n5() {
        let order = TermOrder::standard(5).unwrap();
        let head: Vec<Variable> = order.variables()[..10].to_vec();
        assert_eq!(
            head,
            vec![
                v(1, 1),
                v(2, 2),
                v(3, 3),
                v(4, 4),
                v(5, 5),
                v(1, 3),
                v(2, 4),
                v(3, 5),
                v(1, 2),
                v(4, 5),
            ]
        );
        // Standard completion: x[1][4] precedes x[1][5] in the tail.
        assert!(order.rank_of(v(1, 4)) < order.rank_of(v(1, 5)));
        assert_eq!(order.num_vars(), 15);
    }

    #[test]
    fn priority_n4() {
        let order = TermOrder::standard(4).unwrap();
        let expected = vec![
            v(1, 1),
            v(2, 2),
            v(3, 3),
            v(4, 4),
            v(1, 3),
            v(2, 4),
            v(1, 2),
            v(3, 4),
            v(1, 4),
            v(2, 3),
        ];
        assert_eq!(order.variables(), expected.as_slice());
    }

    #[test]
    fn diagonal_pair_beats_band_square() {
        // x11*x22 > x12^2: the last differing variable is x12 and its
        // exponent is negative in the difference.
        let order = TermOrder::standard(5).unwrap();
        let a = order.monomial(&[(v(1, 1), 1), (v(2, 2), 1)]);
        let b = order.monomial(&[(v(1, 2), 2)]);
        assert_eq!(order.compare(&a, &b), Comparison::Greater);
        assert_eq!(order.compare(&a, &a), Comparison::Equal);
    }

    #[test]
    fn alternates_are_valid_and_distinct() {
        let [t1, t2] = TermOrder::alternates(5).unwrap();
        let std = TermOrder::standard(5).unwrap();
        assert_ne!(t1.variables(), std.variables());
        assert_ne!(t2.variables(), std.variables());
        assert_ne!(t1.variables(), t2.variables());
        // All three agree on the head of the priority list.
        assert_eq!(t1.variables()[..10], std.variables()[..10]);
        assert_eq!(t2.variables()[..10], std.variables()[..10]);
    }

    #[test]
    fn rejects_bad_tail() {
        let err = TermOrder::with_tail(5, vec![v(1, 4)]);
        assert!(err.is_err());
    }

    #[test]
    fn monomial_text_sorted_by_priority() {
        let order = TermOrder::standard(5).unwrap();
        let m = order.monomial(&[(v(1, 2), 2), (v(1, 1), 1)]);
        assert_eq!(order.monomial_string(&m), "x[1][1]\u{b7}x[1][2]^2");
    }
}
