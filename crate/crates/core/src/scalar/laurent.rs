use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::intpoly::pow_rational;

/// Laurent polynomial in q with rational coefficients. Only nonzero
/// coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn monomial(c: BigRational, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in other.terms() {
            r.add_term(e, c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.terms().map(|(e, c)| c * pow_rational(x, e)).fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms().map(|(e, c)| json!([e, c.to_string()])).collect())
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `-q^-1 + 2 + q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn render_ascending() {
        let p = LaurentPoly::from_terms([(3, r(1)), (-1, r(-1)), (0, r(2))]);
        assert_eq!(p.to_string(), "-q^-1 + 2 + q^3");
        let h = LaurentPoly::from_terms([(1, BigRational::new(1.into(), 2.into())), (0, r(-3))]);
        assert_eq!(h.to_string(), "-3 + 1/2*q");
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = LaurentPoly::q().sub(&LaurentPoly::q());
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }
}
