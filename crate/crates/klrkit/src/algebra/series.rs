use std::collections::BTreeMap;

use super::multipoly::{Monomial, MultiPoly};
use super::poly::Poly;
use super::scalar::Field;
use crate::error::{Error, Result};

/// Multivariate power series truncated by total degree.
///
/// A value of order N represents a series known exactly in all total degrees
/// <= N; arithmetic discards higher terms and binary operations take the
/// minimum of the operand orders.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<F: Field> {
    nvars: usize,
    order: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> TruncSeries<F> {
    pub fn zero(nvars: usize, order: usize) -> Self {
        TruncSeries {
            nvars,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, order: usize, c: F) -> Self {
        let mut s = TruncSeries::zero(nvars, order);
        s.add_term(Monomial::constant(nvars), c);
        s
    }

    pub fn one(nvars: usize, order: usize) -> Self {
        TruncSeries::constant(nvars, order, F::one())
    }

    pub fn var(nvars: usize, idx: usize, order: usize) -> Self {
        assert!(idx < nvars);
        let mut s = TruncSeries::zero(nvars, order);
        s.add_term(Monomial::var(nvars, idx), F::one());
        s
    }

    pub fn from_poly(p: &MultiPoly<F>, order: usize) -> Self {
        let mut s = TruncSeries::zero(p.nvars(), order);
        for (m, c) in p.terms() {
            s.add_term(m.clone(), c.clone());
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(&Monomial::constant(self.nvars))
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() || m.total_degree() as usize > self.order {
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

    /// Re-truncate to a (usually lower) order.
    pub fn truncate(&self, order: usize) -> Self {
        let mut s = TruncSeries::zero(self.nvars, order);
        for (m, c) in &self.terms {
            s.add_term(m.clone(), c.clone());
        }
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let order = self.order.min(other.order);
        let mut s = self.truncate(order);
        for (m, c) in &other.terms {
            s.add_term(m.clone(), c.clone());
        }
        s
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let order = self.order.min(other.order);
        let mut s = TruncSeries::zero(self.nvars, order);
        for (ma, ca) in &self.terms {
            if ma.total_degree() as usize > order {
                continue;
            }
            for (mb, cb) in &other.terms {
                if (ma.total_degree() + mb.total_degree()) as usize > order {
                    continue;
                }
                s.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        s
    }

    /// Multiply by an exact polynomial; the truncation order is preserved.
    pub fn mul_poly(&self, p: &MultiPoly<F>) -> Self {
        self.mul(&TruncSeries::from_poly(p, self.order))
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        if c.is_zero() {
            return TruncSeries::zero(self.nvars, self.order);
        }
        TruncSeries {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    pub fn permute_vars(&self, w: &[usize]) -> Self {
        assert_eq!(w.len(), self.nvars);
        let mut s = TruncSeries::zero(self.nvars, self.order);
        for (m, c) in &self.terms {
            s.add_term(m.permute(w), c.clone());
        }
        s
    }

    pub fn swap_vars(&self, k: usize) -> Self {
        let mut w: Vec<usize> = (0..self.nvars).collect();
        w.swap(k, k + 1);
        self.permute_vars(&w)
    }

    /// Exact quotient by a homogeneous linear form, to order N-1.
    ///
    /// `linear[i]` is the coefficient of the i-th variable. Fails with
    /// `NotInIdeal` when the series does not lie in the ideal of the form
    /// up to the input order (in particular when the constant term is
    /// nonzero).
    pub fn divide_linear(&self, linear: &[F]) -> Result<Self> {
        assert_eq!(linear.len(), self.nvars);
        let pivot = match linear.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => {
                return Err(Error::NotInIdeal("linear form is zero".into()));
            }
        };
        if self.order == 0 {
            return Ok(TruncSeries::zero(self.nvars, 0));
        }
        let pivot_inv = linear[pivot].inv().unwrap();
        let out_order = self.order - 1;
        let mut quo = TruncSeries::zero(self.nvars, out_order);
        let mut rem = self.clone();
        // Single-divisor division: the leading monomial under "pivot exponent
        // first, then graded lex" must always carry the pivot variable.
        loop {
            let lead = rem
                .terms
                .iter()
                .max_by(|(ma, _), (mb, _)| {
                    (ma.0[pivot], *ma).cmp(&(mb.0[pivot], *mb))
                })
                .map(|(m, c)| (m.clone(), c.clone()));
            let (m, c) = match lead {
                Some(t) => t,
                None => break,
            };
            if m.0[pivot] == 0 {
                return Err(Error::NotInIdeal(format!(
                    "residual term of degree {} outside the ideal",
                    m.total_degree()
                )));
            }
            let mut t = m.clone();
            t.0[pivot] -= 1;
            let tc = c.mul(&pivot_inv);
            // rem -= tc * t * linear
            for (i, li) in linear.iter().enumerate() {
                if li.is_zero() {
                    continue;
                }
                let mut mi = t.clone();
                mi.0[i] += 1;
                rem.add_term(mi, tc.mul(li).neg());
            }
            quo.add_term(t, tc);
        }
        Ok(quo)
    }

    /// Composition: substitute `assign[i]` (zero constant term) for the i-th
    /// variable. The result is truncated to the minimum order involved.
    pub fn substitute(&self, assign: &[TruncSeries<F>]) -> Result<Self> {
        assert_eq!(assign.len(), self.nvars);
        let mut order = self.order;
        for a in assign {
            if !a.constant_term().is_zero() {
                return Err(Error::NonzeroConstantTerm);
            }
            order = order.min(a.order());
        }
        // Powers of each assigned series, computed on demand.
        let one = TruncSeries::one(self.nvars, order);
        let mut powers: Vec<Vec<TruncSeries<F>>> = vec![vec![one.clone()]; self.nvars];
        let mut out = TruncSeries::zero(self.nvars, order);
        for (m, c) in &self.terms {
            if m.total_degree() as usize > order {
                continue; // zero constant terms: degree m contributes only above the cut
            }
            let mut acc = TruncSeries::constant(self.nvars, order, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&assign[i].truncate(order));
                    powers[i].push(next);
                }
                acc = acc.mul(&powers[i][e as usize]);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.constant_term();
        let c_inv = c
            .inv()
            .ok_or_else(|| Error::Internal("series inverse of zero constant term".into()))?;
        // f = c(1 + g), val(g) >= 1: 1/f = c^{-1} sum (-g)^m
        let g_neg = self
            .mul_scalar(&c_inv)
            .sub(&TruncSeries::one(self.nvars, self.order))
            .neg();
        let mut acc = TruncSeries::one(self.nvars, self.order);
        let mut pow = TruncSeries::one(self.nvars, self.order);
        for _ in 0..self.order {
            pow = pow.mul(&g_neg);
            if pow.is_zero() {
                break;
            }
            acc = acc.add(&pow);
        }
        Ok(acc.mul_scalar(&c_inv))
    }
}

/// exp(x_idx) - 1 truncated at `order`.
pub fn exp_minus_one<F: Field>(nvars: usize, idx: usize, order: usize) -> TruncSeries<F> {
    let mut s = TruncSeries::zero(nvars, order);
    let mut factorial = F::one();
    let mut m = Monomial::constant(nvars);
    for k in 1..=order {
        factorial = factorial.mul(&F::from_int(k as i64));
        m.0[idx] += 1;
        s.add_term(m.clone(), factorial.inv().unwrap());
    }
    s
}

/// log(1 + x_idx) truncated at `order`.
pub fn log1p<F: Field>(nvars: usize, idx: usize, order: usize) -> TruncSeries<F> {
    let mut s = TruncSeries::zero(nvars, order);
    let mut m = Monomial::constant(nvars);
    for k in 1..=order {
        m.0[idx] += 1;
        let sign = if k % 2 == 1 { 1 } else { -1 };
        s.add_term(m.clone(), F::from_ratio(sign, k as i64));
    }
    s
}

/// Evaluate a univariate polynomial at a series (Horner). The series may
/// have a nonzero constant term.
pub fn eval_poly_at_series<F: Field>(p: &Poly<F>, at: &TruncSeries<F>) -> TruncSeries<F> {
    let mut acc = TruncSeries::zero(at.nvars(), at.order());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(at);
        acc = acc.add(&TruncSeries::constant(at.nvars(), at.order(), c.clone()));
    }
    acc
}
