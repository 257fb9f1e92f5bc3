use super::poly::Poly;
use super::scalar::{rat_to_string, Field, Rat};

/// Rational function in one variable over a field, in canonical form:
/// monic denominator, gcd(num, den) = 1. Equality is structural.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFn<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

/// The field Q(q) of rational functions in q.
pub type RatQ = RatFn<Rat>;

/// The field Q(q)(u) of rational functions in u over Q(q).
pub type RatQU = RatFn<RatQ>;

impl<F: Field> RatFn<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFn { num, den };
        r.canonicalize();
        r
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        RatFn::from_poly(Poly::constant(c))
    }

    /// The variable itself.
    pub fn var() -> Self {
        RatFn::from_poly(Poly::var())
    }

    /// var^e, with negative exponents allowed.
    pub fn var_pow(e: i64) -> Self {
        if e >= 0 {
            RatFn::from_poly(Poly::monomial(F::one(), e as usize))
        } else {
            RatFn {
                num: Poly::one(),
                den: Poly::monomial(F::one(), (-e) as usize),
            }
        }
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() != Some(0) {
            self.num = self.num.exact_div(&g).unwrap();
            self.den = self.den.exact_div(&g).unwrap();
        }
        let lead_inv = self.den.leading().unwrap().inv().unwrap();
        self.num = self.num.mul_scalar(&lead_inv);
        self.den = self.den.mul_scalar(&lead_inv);
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Substitute the variable by its reciprocal.
    pub fn subst_reciprocal(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let m = dn.max(dd);
        // x^m * f(1/x) reverses coefficients padded to length m+1.
        let rev = |p: &Poly<F>| {
            let mut cs: Vec<F> = (0..=m).map(|k| p.coeff(k)).collect();
            cs.reverse();
            Poly::from_coeffs(cs)
        };
        RatFn::new(rev(&self.num), rev(&self.den))
    }

    /// Evaluate at a field point; `None` when the denominator vanishes.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        d.inv().map(|di| self.num.eval(x).mul(&di))
    }
}

impl<F: Field> Field for RatFn<F> {
    fn zero() -> Self {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn one() -> Self {
        RatFn {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        RatFn::new(
            self.num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        RatFn::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFn::new(self.den.clone(), self.num.clone()))
        }
    }
    fn from_int(n: i64) -> Self {
        RatFn::constant(F::from_int(n))
    }
}

impl RatQ {
    /// q^e as an element of Q(q), e possibly negative.
    pub fn q_pow(e: i64) -> RatQ {
        RatQ::var_pow(e)
    }
}

/// Render an element of Q(q).
pub fn ratq_to_string(x: &RatQ) -> String {
    let num = x.numer().format_with("q", &rat_to_string);
    if x.is_polynomial() {
        num
    } else {
        let den = x.denom().format_with("q", &rat_to_string);
        format!("({num})/({den})")
    }
}

/// Render an element of Q(q)(u).
pub fn ratqu_to_string(x: &RatQU) -> String {
    let fmt_c = |c: &RatQ| ratq_to_string(c);
    let num = x.numer().format_with("u", &fmt_c);
    if x.is_polynomial() {
        num
    } else {
        let den = x.denom().format_with("u", &fmt_c);
        format!("({num})/({den})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_monic_coprime() {
        // (2q^2 - 2) / (2q - 2) = q + 1
        let num = Poly::from_coeffs(vec![Rat::from_int(-2), Rat::from_int(0), Rat::from_int(2)]);
        let den = Poly::from_coeffs(vec![Rat::from_int(-2), Rat::from_int(2)]);
        let r = RatQ::new(num, den);
        assert!(r.is_polynomial());
        assert_eq!(ratq_to_string(&r), "q + 1");
    }

    #[test]
    fn field_axioms_spot() {
        let q = RatQ::var();
        let x = q.add(&RatQ::one()).inv().unwrap(); // 1/(q+1)
        let y = x.mul(&q.add(&RatQ::one()));
        assert!(y.is_one());
        assert_eq!(RatQ::q_pow(-2).mul(&RatQ::q_pow(2)), RatQ::one());
    }

    #[test]
    fn reciprocal_substitution() {
        // f(u) = (u - q) / u ; f(1/u) = (1 - qu)/1 * ... = (1/u - q)/(1/u) = 1 - q u
        let u = RatQU::var();
        let f = u.sub(&RatQU::constant(RatQ::var())).mul(&u.inv().unwrap());
        let g = f.subst_reciprocal();
        let expect = RatQU::one().sub(&RatQU::constant(RatQ::var()).mul(&u));
        assert_eq!(g, expect);
    }
}
