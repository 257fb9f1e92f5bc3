use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::scalar::Field;
use crate::error::{Error, Result};

/// Exponent vector with graded-lex ordering (total degree first, then lex
/// with the first variable largest).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise quotient, `None` when not divisible.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            e.push(a - b);
        }
        Some(Monomial(e))
    }

    /// Image under the variable permutation x_k -> x_{w(k)}.
    pub fn permute(&self, w: &[usize]) -> Monomial {
        let mut e = vec![0; self.0.len()];
        for (k, &exp) in self.0.iter().enumerate() {
            e[w[k]] += exp;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with graded-lex term order.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<F: Field> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::constant(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::var(nvars, idx), F::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// Leading term under graded lex.
    pub fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    /// f^w with f^w(x_1,...,x_d) = f(x_{w(1)},...,x_{w(d)}), w 0-based.
    pub fn permute_vars(&self, w: &[usize]) -> Self {
        assert_eq!(w.len(), self.nvars);
        MultiPoly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.permute(w), c.clone())),
        )
    }

    /// Swap variables k and k+1 (0-based k).
    pub fn swap_vars(&self, k: usize) -> Self {
        let mut w: Vec<usize> = (0..self.nvars).collect();
        w.swap(k, k + 1);
        self.permute_vars(&w)
    }

    /// Exact quotient by the single-divisor division algorithm.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        assert_eq!(self.nvars, divisor.nvars);
        if divisor.is_zero() {
            return Err(Error::NotDivisible("division by zero polynomial".into()));
        }
        let (lm, lc) = divisor.leading().unwrap();
        let lc_inv = lc.inv().unwrap();
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero(self.nvars);
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let t = match m.checked_div(lm) {
                Some(t) => t,
                None => {
                    return Err(Error::NotDivisible(
                        "leading term not divisible by divisor leading term".into(),
                    ))
                }
            };
            let tc = c.mul(&lc_inv);
            let mut prod = divisor.clone();
            prod = prod.mul(&MultiPoly::from_terms(
                self.nvars,
                [(t.clone(), tc.clone())],
            ));
            rem = rem.sub(&prod);
            quo.add_term(t, tc);
        }
        Ok(quo)
    }
}

/// Demazure operator (f^{s_k} - f)/(x_k - x_{k+1}), k 1-based.
///
/// The numerator is antisymmetric under the transposition, so the quotient
/// is always an exact polynomial; an inexact division here is a bug.
pub fn demazure<F: Field>(f: &MultiPoly<F>, k: usize) -> MultiPoly<F> {
    assert!(k >= 1 && k + 1 <= f.nvars(), "demazure index out of range");
    let num = f.swap_vars(k - 1).sub(f);
    let den = MultiPoly::var(f.nvars(), k - 1).sub(&MultiPoly::var(f.nvars(), k));
    num.exact_div(&den)
        .expect("Demazure numerator must be divisible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::Rat;

    type P = MultiPoly<Rat>;

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    #[test]
    fn exact_div_difference_of_squares() {
        // (x1^2 - x2^2) / (x1 - x2) = x1 + x2
        let f = x(2, 0).mul(&x(2, 0)).sub(&x(2, 1).mul(&x(2, 1)));
        let g = x(2, 0).sub(&x(2, 1));
        assert_eq!(f.exact_div(&g).unwrap(), x(2, 0).add(&x(2, 1)));
    }

    #[test]
    fn exact_div_unit_divisor() {
        let f = x(2, 0).mul(&x(2, 1));
        assert_eq!(f.exact_div(&P::one(2)).unwrap(), f);
    }

    #[test]
    fn exact_div_detects_nondivisible() {
        assert!(x(2, 0).exact_div(&x(2, 1)).is_err());
    }

    #[test]
    fn demazure_examples() {
        // x1 -> -1
        assert_eq!(demazure(&x(2, 0), 1), P::constant(2, Rat::from_int(-1)));
        // symmetric input -> 0
        assert!(demazure(&x(2, 0).mul(&x(2, 1)), 1).is_zero());
        // x1^2 -> -(x1 + x2)
        assert_eq!(
            demazure(&x(2, 0).mul(&x(2, 0)), 1),
            x(2, 0).add(&x(2, 1)).neg()
        );
    }

    #[test]
    fn demazure_additive_and_kills_symmetric() {
        let f = x(3, 0).mul(&x(3, 0)).mul(&x(3, 2));
        let g = x(3, 1).add(&x(3, 0));
        let lhs = demazure(&f.add(&g), 1);
        assert_eq!(lhs, demazure(&f, 1).add(&demazure(&g, 1)));
        let sym = x(3, 0).mul(&x(3, 1)).add(&x(3, 0).add(&x(3, 1)));
        assert!(demazure(&sym, 1).is_zero());
    }
}
