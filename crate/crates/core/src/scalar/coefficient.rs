use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::intpoly::IntLaurent;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// The operations the sparse basis-word product needs from its scalars.
pub trait Ring: Clone + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// A coefficient field for Hecke-algebra elements: either Q(q) itself or
/// the rationals after specializing q to a generic rational value.
pub trait Coefficient: Ring + PartialEq + fmt::Debug + fmt::Display + 'static {
    /// True when q is kept as an indeterminate.
    const SYMBOLIC: bool;

    fn one() -> Self;
    fn is_one(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &BigRational) -> Self;

    fn add_ref(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign_ref(other);
        r
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn inv(&self) -> Result<Self>;
    fn div_ref(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }

    fn to_json(&self) -> Value;

    /// Hook for a faster bulk product of coefficient vectors; see
    /// [`crate::hecke`]. The default runs the generic algorithm.
    fn clear_denominators(_items: &[&Self]) -> Option<(Vec<IntLaurent>, IntLaurent)> {
        None
    }

    /// Inverse of `clear_denominators`: `num / den`.
    fn from_fraction(_num: IntLaurent, _den: &IntLaurent) -> Self {
        unreachable!("coefficient type does not clear denominators")
    }

    fn int_laurent_delta() -> IntLaurent {
        IntLaurent::from_coeffs(-1, vec![(-1).into(), 0.into(), 1.into()])
    }
}

impl Ring for IntLaurent {
    fn zero() -> Self {
        IntLaurent::zero()
    }
    fn is_zero(&self) -> bool {
        IntLaurent::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        self.add_assign(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Coefficient for RatFunc {
    const SYMBOLIC: bool = true;

    fn one() -> Self {
        RatFunc::one()
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn from_i64(v: i64) -> Self {
        RatFunc::from_int(v)
    }
    fn from_rational(r: &BigRational) -> Self {
        RatFunc::from_rational(r)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn inv(&self) -> Result<Self> {
        RatFunc::inv(self)
    }
    fn div_ref(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }
    fn to_json(&self) -> Value {
        RatFunc::to_json(self)
    }

    fn clear_denominators(items: &[&Self]) -> Option<(Vec<IntLaurent>, IntLaurent)> {
        let mut lcm = IntLaurent::one();
        for c in items {
            if !c.int_den().is_one() && c.int_den() != &lcm {
                lcm = lcm.lcm(c.int_den());
            }
        }
        let nums =
            items
                .iter()
                .map(|c| {
                    if c.int_den() == &lcm {
                        c.int_num().clone()
                    } else {
                        c.int_num().mul(&lcm.div_exact(c.int_den()))
                    }
                })
                .collect();
        Some((nums, lcm))
    }

    fn from_fraction(num: IntLaurent, den: &IntLaurent) -> Self {
        RatFunc::from_parts(num, den.clone()).expect("nonzero denominator")
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Coefficient for BigRational {
    const SYMBOLIC: bool = false;

    fn one() -> Self {
        One::one()
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn to_json(&self) -> Value {
        json!(self.to_string())
    }
}
