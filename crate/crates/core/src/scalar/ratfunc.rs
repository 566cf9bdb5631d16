use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::intpoly::IntLaurent;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Element of Q(q).
///
/// Stored as `num / den` with `num` an integer Laurent polynomial and `den`
/// an integer polynomial with nonzero constant term, positive leading
/// coefficient, no common polynomial factor with `num` and coprime
/// contents. That form is unique, so derived equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: IntLaurent,
    den: IntLaurent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: IntLaurent::zero(), den: IntLaurent::one() }
    }

    pub fn one() -> Self {
        Self { num: IntLaurent::one(), den: IntLaurent::one() }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self { num: IntLaurent::monomial(BigInt::one(), k), den: IntLaurent::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self { num: IntLaurent::monomial(n.into(), 0), den: IntLaurent::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self { num: IntLaurent::monomial(r.numer().clone(), 0), den: IntLaurent::monomial(r.denom().clone(), 0) }
    }

    /// Integer Laurent polynomial as a rational function.
    pub fn from_int_laurent(p: IntLaurent) -> Self {
        Self { num: p, den: IntLaurent::one() }
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let mut lcm = BigInt::one();
        for (_, c) in p.terms() {
            lcm = lcm.lcm(c.denom());
        }
        let (low, high) = match (p.terms().next(), p.terms().last()) {
            (Some((lo, _)), Some((hi, _))) => (lo, hi),
            _ => return Self::zero(),
        };
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in p.terms() {
            coeffs[(e - low) as usize] = c.numer() * (&lcm / c.denom());
        }
        Self::from_parts(IntLaurent::from_coeffs(low, coeffs), IntLaurent::monomial(lcm, 0))
            .expect("nonzero denominator")
    }

    /// `num / den` reduced to canonical form.
    pub fn from_parts(num: IntLaurent, den: IntLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: IntLaurent, den: IntLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // q is a unit: move the power of q in den over to num.
        let mut num = num.shift(-den.low());
        let mut den = den.to_poly();
        if den.high() > 0 {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        if den.leading().is_some_and(Signed::is_negative) {
            num = num.neg();
            den = den.neg();
        }
        Self { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value lies in Z[q, q^-1].
    pub fn is_integral_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Constant value when the function does not depend on q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.num.low() == 0 && self.num.high() == 0 && self.den.high() == 0 {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    pub(crate) fn int_num(&self) -> &IntLaurent {
        &self.num
    }

    pub(crate) fn int_den(&self) -> &IntLaurent {
        &self.den
    }

    /// Numerator, scaled so that `denominator()` is monic.
    pub fn numerator(&self) -> LaurentPoly {
        let lead = self.den.leading().cloned().unwrap_or_else(BigInt::one);
        to_rational_poly(&self.num, &lead)
    }

    /// Denominator: a polynomial with lowest exponent 0 and leading
    /// coefficient 1.
    pub fn denominator(&self) -> LaurentPoly {
        let lead = self.den.leading().cloned().unwrap_or_else(BigInt::one);
        to_rational_poly(&self.den, &lead)
    }

    pub fn field_arith(&self, other: &Self, op: FieldOp) -> Result<Self> {
        Ok(match op {
            FieldOp::Add => self + other,
            FieldOp::Sub => self - other,
            FieldOp::Mul => self * other,
            FieldOp::Div => self.checked_div(other)?,
        })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.num.mul(&other.den), self.den.mul(&other.num)))
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact value at q = q0.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() {
            return Err(Error::EvaluationAtPole(q0.to_string()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::EvaluationAtPole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// `{"num": [[exp, "p/r"], ...], "den": [...]}` with monic denominator.
    pub fn to_json(&self) -> Value {
        json!({ "num": self.numerator().to_json(), "den": self.denominator().to_json() })
    }
}

fn to_rational_poly(p: &IntLaurent, scale: &BigInt) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().map(|(e, c)| (e, BigRational::new(c.clone(), scale.clone()))))
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator();
        if self.den.is_one() || self.den.high() == 0 {
            return write!(f, "{num}");
        }
        let den = self.denominator();
        if num.terms().count() > 1 {
            write!(f, "({num})/({den})")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = self.num.add(&rhs.num);
            if self.den.is_one() {
                return RatFunc { num, den: IntLaurent::one() };
            }
            return RatFunc::canonical(num, self.den.clone());
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        RatFunc::canonical(num, self.den.mul(&rhs.den))
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: self.num.mul(&rhs.num), den: IntLaurent::one() };
        }
        RatFunc::canonical(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &'a RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

/// The quantum integer `[k]_q = (q^k - q^-k) / (q - q^-1)`.
pub fn quantum_int(k: i32) -> RatFunc {
    let n = k.unsigned_abs() as i32;
    let mut coeffs = Vec::new();
    // q^{n-1} + q^{n-3} + ... + q^{1-n}
    for i in 0..(2 * n - 1).max(0) {
        coeffs.push(if i % 2 == 0 { BigInt::one() } else { BigInt::zero() });
    }
    let p = IntLaurent::from_coeffs(1 - n, coeffs);
    let p = if k < 0 { p.neg() } else { p };
    RatFunc::from_int_laurent(p)
}

/// The Markov weight `z_d = (1 - q^{-2d}) / (q - q^-1)`.
pub fn markov_weight(d: i32) -> RatFunc {
    &RatFunc::q_pow(-d) * &quantum_int(d)
}

/// `q - q^-1`.
pub fn delta() -> RatFunc {
    &RatFunc::q() - &RatFunc::q_pow(-1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn qp(k: i32) -> RatFunc {
        RatFunc::q_pow(k)
    }

    #[test]
    fn additive_identity() {
        assert_eq!(&delta() + &RatFunc::zero(), delta());
    }

    #[test]
    fn difference_of_squares_quotient() {
        let num = &qp(2) - &qp(-2);
        let got = num.checked_div(&delta()).unwrap();
        assert_eq!(got, &qp(1) + &qp(-1));
        assert!(got.is_integral_laurent());
    }

    #[test]
    fn one_minus_q_inv_sq_over_delta() {
        let num = &RatFunc::one() - &qp(-2);
        assert_eq!(num.checked_div(&delta()).unwrap(), qp(-1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RatFunc::one().checked_div(&RatFunc::zero()), Err(Error::DivisionByZero));
        assert_eq!(RatFunc::q().field_arith(&RatFunc::zero(), FieldOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_int(1), RatFunc::one());
        assert_eq!(quantum_int(0), RatFunc::zero());
        assert_eq!(quantum_int(2), &qp(1) + &qp(-1));
        assert_eq!(quantum_int(-3), -quantum_int(3));
    }

    #[test]
    fn markov_weights() {
        assert_eq!(markov_weight(1), qp(-1));
        assert_eq!(markov_weight(0), RatFunc::zero());
        assert_eq!(markov_weight(2), &qp(-1) + &qp(-3));
        for d in -4..=6 {
            let direct = (&RatFunc::one() - &qp(-2 * d)).checked_div(&delta()).unwrap();
            assert_eq!(markov_weight(d), direct);
        }
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!((&qp(1) + &qp(-1)).eval_at(&rat(2, 1)).unwrap(), rat(5, 2));
        assert_eq!(RatFunc::one().eval_at(&rat(7, 3)).unwrap(), rat(1, 1));
        let f = (&RatFunc::one() - &qp(-4)).checked_div(&delta()).unwrap();
        assert_eq!(f, &qp(-1) + &qp(-3));
        assert_eq!(f.eval_at(&rat(3, 1)).unwrap(), rat(10, 27));
    }

    #[test]
    fn evaluation_at_pole_fails() {
        let f = RatFunc::one().checked_div(&(&qp(1) - &RatFunc::one())).unwrap();
        assert!(matches!(f.eval_at(&rat(1, 1)), Err(Error::EvaluationAtPole(_))));
        assert!(matches!(qp(1).eval_at(&rat(0, 1)), Err(Error::EvaluationAtPole(_))));
    }

    #[test]
    fn denominator_is_monic_with_zero_low_exponent() {
        let f = RatFunc::from_int(3).checked_div(&(&(&qp(3) * &RatFunc::from_int(2)) + &qp(1))).unwrap();
        let den = f.denominator();
        assert_eq!(den.terms().next().unwrap().0, 0);
        assert!(den.terms().last().unwrap().1.is_one());
        assert_eq!(f.to_string(), "3/2*q^-1/(1/2 + q^2)");
    }

    #[test]
    fn rendering() {
        let f = &(&qp(3) - &qp(-1)) + &RatFunc::from_int(2);
        assert_eq!(f.to_string(), "-q^-1 + 2 + q^3");
        let g = RatFunc::one().checked_div(&(&qp(1) + &qp(-1))).unwrap();
        assert_eq!(g.to_string(), "q/(1 + q^2)");
    }

    #[test]
    fn json_shape() {
        let g = RatFunc::one().checked_div(&(&qp(1) + &qp(-1))).unwrap();
        assert_eq!(g.to_json().to_string(), r#"{"den":[[0,"1"],[2,"1"]],"num":[[1,"1"]]}"#);
    }
}
