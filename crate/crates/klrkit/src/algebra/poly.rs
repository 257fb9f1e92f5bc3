use super::scalar::Field;
use crate::error::{Error, Result};

/// Dense univariate polynomial over a field.
///
/// `coeffs[i]` is the coefficient of the i-th power; trailing zeros are
/// trimmed, the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        let mut p = Poly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The variable itself.
    pub fn var() -> Self {
        Poly {
            coeffs: vec![F::zero(), F::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// c * x^k
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k).add(&other.coeff(k)));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading().unwrap().mul(&lead_inv);
            let t = Poly::monomial(c, rd - dd);
            quo = quo.add(&t);
            rem = rem.sub(&t.mul(divisor));
        }
        (quo, rem)
    }

    /// Exact quotient; errors when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible(
                "univariate division left a remainder".into(),
            ))
        }
    }

    /// Monic normalization (leading coefficient 1); zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.mul_scalar(&l.inv().unwrap()),
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic lcm.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        self.mul(other).exact_div(&g).unwrap().monic()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Multiplicity of the root `point`, by repeated exact division.
    pub fn root_multiplicity(&self, point: &F) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Poly::from_coeffs(vec![point.neg(), F::one()]);
        let mut p = self.clone();
        let mut m = 0;
        while p.eval(point).is_zero() && !p.is_zero() {
            p = p.exact_div(&lin).unwrap();
            m += 1;
        }
        m
    }

    /// Format with an explicit variable name and coefficient renderer.
    pub fn format_with(&self, var: &str, fmt_coeff: &dyn Fn(&F) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = fmt_coeff(c);
            let part = match k {
                0 => cs,
                _ => {
                    let xs = if k == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{k}")
                    };
                    if cs == "1" {
                        xs
                    } else if cs == "-1" {
                        format!("-{xs}")
                    } else if cs.contains(['+', '-', '/']) && !cs.starts_with('-') {
                        format!("({cs})*{xs}")
                    } else if cs.contains(['+', '/']) || cs[1..].contains(['+', '-', '/']) {
                        format!("({cs})*{xs}")
                    } else {
                        format!("{cs}*{xs}")
                    }
                }
            };
            parts.push(part);
        }
        let mut out = String::new();
        for (idx, p) in parts.iter().enumerate() {
            if idx == 0 {
                out.push_str(p);
            } else if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::Rat;

    fn p(cs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(cs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    #[test]
    fn divrem_and_exact_div() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let f = p(&[-1, 0, 1]);
        let g = p(&[-1, 1]);
        assert_eq!(f.exact_div(&g).unwrap(), p(&[1, 1]));
        // x not divisible by x + 1
        assert!(p(&[0, 1]).exact_div(&p(&[1, 1])).is_err());
    }

    #[test]
    fn gcd_is_monic() {
        // gcd(2x^2 - 2, 4x - 4) = x - 1
        let a = p(&[-2, 0, 2]);
        let b = p(&[-4, 4]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn root_multiplicity_counts_factors() {
        // (x - 3)^2 (x + 1)
        let f = p(&[-3, 1]).mul(&p(&[-3, 1])).mul(&p(&[1, 1])).monic();
        assert_eq!(f.root_multiplicity(&Rat::from_int(3)), 2);
        assert_eq!(f.root_multiplicity(&Rat::from_int(-1)), 1);
        assert_eq!(f.root_multiplicity(&Rat::from_int(5)), 0);
    }
}
