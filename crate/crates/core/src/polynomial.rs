//! Sparse polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is the
//! term order, so the map is always sorted and the leading term is the last
//! entry. No zero coefficients are stored.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use num::{BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

pub type Coeff = BigRational;

#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(monomial: Monomial, coeff: Coeff) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(monomial, coeff);
        p
    }

    pub fn monomial(monomial: Monomial) -> Self {
        Self::term(monomial, Coeff::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    /// Terms in descending order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The maximal term, or `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.last_key_value()
    }

    pub fn try_leading_term(&self) -> Result<(&Monomial, &Coeff)> {
        self.leading_term().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.leading_term().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Total degree (the leading term has maximal degree under a graded
    /// order). `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_monomial().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// `self * c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| (tm.mul(m), tc * c))
            .collect();
        Polynomial { terms }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(), c)
    }

    fn add_assign_scaled(&mut self, other: &Polynomial, m: &Monomial, c: &Coeff) {
        for (tm, tc) in &other.terms {
            self.add_term(tm.mul(m), tc * c);
        }
    }

    /// Fully reduced normal form against `basis`, taking the first divisor
    /// in list order at every step. The result has no term divisible by any
    /// basis leading term, and `self - result` lies in the ideal generated
    /// by `basis`. Zero basis elements are skipped.
    pub fn normal_form(&self, basis: &[Polynomial]) -> Polynomial {
        Reducer::new(basis).reduce(self)
    }
}

/// Precomputed leading-term data for repeated reductions against one basis.
pub struct Reducer<'a> {
    entries: Vec<ReducerEntry<'a>>,
}

struct ReducerEntry<'a> {
    poly: &'a Polynomial,
    lt_monomial: &'a Monomial,
    lt_coeff: &'a Coeff,
    support: u64,
}

impl<'a> Reducer<'a> {
    pub fn new(basis: &'a [Polynomial]) -> Self {
        let entries = basis
            .iter()
            .filter_map(|p| {
                p.leading_term().map(|(m, c)| ReducerEntry {
                    poly: p,
                    lt_monomial: m,
                    lt_coeff: c,
                    support: m.support_mask(),
                })
            })
            .collect();
        Reducer { entries }
    }

    fn find_divisor(&self, m: &Monomial, mask: u64) -> Option<&ReducerEntry<'a>> {
        self.entries
            .iter()
            .find(|e| e.support & !mask == 0 && e.lt_monomial.divides(m))
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut work = p.clone();
        let mut remainder = Polynomial::zero();
        while let Some((m, c)) = work.leading_term() {
            let mask = m.support_mask();
            match self.find_divisor(m, mask) {
                Some(entry) => {
                    let q = m.checked_div(entry.lt_monomial).expect("divisor checked");
                    let factor = -(c / entry.lt_coeff);
                    work.add_assign_scaled(entry.poly, &q, &factor);
                }
                None => {
                    let (m, c) = (m.clone(), c.clone());
                    work.terms.remove(&m);
                    remainder.add_term(m, c);
                }
            }
        }
        remainder
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &rhs.terms {
            out.add_assign_scaled(self, m, c);
        }
        out
    }
}

/// Leading coefficient is +1 or -1.
pub fn has_unit_leading_coeff(p: &Polynomial) -> bool {
    p.leading_coeff().is_some_and(|c| c.abs().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::TermOrder;
    use crate::variable::Variable;

    fn rat(n: i64) -> Coeff {
        Coeff::from_integer(n.into())
    }

    fn v(i: usize, j: usize) -> Variable {
        Variable::new(i, j)
    }

    #[test]
    fn add_cancels() {
        let order = TermOrder::standard(5).unwrap();
        let m = order.var_monomial(v(1, 2));
        let p = Polynomial::term(m.clone(), rat(2));
        let q = Polynomial::term(m, rat(-2));
        assert!((&p + &q).is_zero());
    }

    #[test]
    fn leading_term_of_two_by_two_minor() {
        // x11*x22 - x12^2 has leading term x11*x22.
        let order = TermOrder::standard(5).unwrap();
        let lead = order.monomial(&[(v(1, 1), 1), (v(2, 2), 1)]);
        let p = Polynomial::from_terms([
            (lead.clone(), rat(1)),
            (order.monomial(&[(v(1, 2), 2)]), rat(-1)),
        ]);
        let (m, c) = p.leading_term().unwrap();
        assert_eq!(m, &lead);
        assert_eq!(c, &rat(1));
    }

    #[test]
    fn leading_term_of_band_pair() {
        // x12*x13 - x11*x23: the band product wins.
        let order = TermOrder::standard(5).unwrap();
        let band = order.monomial(&[(v(1, 2), 1), (v(1, 3), 1)]);
        let p = Polynomial::from_terms([
            (band.clone(), rat(1)),
            (order.monomial(&[(v(1, 1), 1), (v(2, 3), 1)]), rat(-1)),
        ]);
        assert_eq!(p.leading_monomial().unwrap(), &band);
    }

    #[test]
    fn zero_has_no_leading_term() {
        assert!(Polynomial::zero().try_leading_term().is_err());
    }

    #[test]
    fn reduce_by_divisor_and_miss() {
        let order = TermOrder::standard(5).unwrap();
        let x12 = Polynomial::monomial(order.var_monomial(v(1, 2)));
        let x12_sq = Polynomial::monomial(order.monomial(&[(v(1, 2), 2)]));
        let x11 = Polynomial::monomial(order.var_monomial(v(1, 1)));
        assert!(x12_sq.normal_form(std::slice::from_ref(&x12)).is_zero());
        assert_eq!(x11.normal_form(std::slice::from_ref(&x12)), x11);
    }

    #[test]
    fn self_reduction_is_zero() {
        let order = TermOrder::standard(5).unwrap();
        let f = Polynomial::from_terms([
            (order.monomial(&[(v(1, 1), 1), (v(2, 2), 1)]), rat(3)),
            (order.monomial(&[(v(1, 2), 2)]), rat(-5)),
        ]);
        assert!(f.normal_form(std::slice::from_ref(&f)).is_zero());
    }

    #[test]
    fn polynomial_text_with_leading_minus() {
        let order = TermOrder::standard(5).unwrap();
        let p = Polynomial::from_terms([
            (order.monomial(&[(v(1, 1), 1), (v(2, 2), 1)]), rat(-2)),
            (order.monomial(&[(v(1, 2), 2)]), rat(3)),
        ]);
        assert_eq!(
            order.polynomial_string(&p),
            "-2\u{b7}x[1][1]\u{b7}x[2][2] + 3\u{b7}x[1][2]^2"
        );
    }

    #[test]
    fn polynomial_text() {
        let order = TermOrder::standard(5).unwrap();
        let p = Polynomial::from_terms([
            (order.monomial(&[(v(1, 1), 1), (v(2, 2), 1)]), rat(1)),
            (order.monomial(&[(v(1, 2), 2)]), rat(-1)),
        ]);
        assert_eq!(
            order.polynomial_string(&p),
            "1\u{b7}x[1][1]\u{b7}x[2][2] - 1\u{b7}x[1][2]^2"
        );
    }
}
