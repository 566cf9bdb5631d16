use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial with integer coefficients, stored densely from the
/// lowest exponent. The coefficient vector never starts or ends with zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntLaurent {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl IntLaurent {
    pub fn zero() -> Self {
        Self { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, exp: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { low: exp, coeffs: vec![c] }
        }
    }

    pub fn from_coeffs(low: i32, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        let idx = exp - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonzero terms as (exponent, coefficient), ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        let low = self.low;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (low + i as i32, c))
    }

    pub fn shift(&self, by: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + by, coeffs: self.coeffs.clone() }
    }

    /// Drops the power of q so that the lowest exponent becomes zero.
    pub fn to_poly(&self) -> Self {
        self.shift(-self.low)
    }

    pub fn neg(&self) -> Self {
        Self { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add_assign(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.clone();
            return;
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        if low < self.low {
            let pad = (self.low - low) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = low;
        }
        let len = (high - low + 1) as usize;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        let off = (other.low - self.low) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[off + i] += c;
        }
        self.trim();
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(&other.neg());
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(self.low + other.low, out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self {
            low: self.low,
            coeffs: self
                .coeffs
                .iter()
                .map(|x| {
                    debug_assert!((x % c).is_zero());
                    x / c
                })
                .collect(),
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        // Horner in x, then multiply by x^low.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc * pow_rational(x, self.low)
    }
}

pub(crate) fn pow_rational(x: &BigRational, e: i32) -> BigRational {
    match e.cmp(&0) {
        Ordering::Equal => BigRational::one(),
        Ordering::Greater => num_traits::pow::pow(x.clone(), e as usize),
        Ordering::Less => num_traits::pow::pow(x.recip(), (-e) as usize),
    }
}

// ---------------------------------------------------------------------------
// Ordinary polynomials over Z, ascending coefficient vectors, no trailing zeros.

fn poly_trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn poly_primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let g = poly_content(&p);
    if !g.is_zero() && !g.is_one() {
        for c in p.iter_mut() {
            *c /= &g;
        }
    }
    if p.last().is_some_and(Signed::is_negative) {
        for c in p.iter_mut() {
            *c = -&*c;
        }
    }
    p
}

/// Pseudo-remainder of a by b (deg b >= 0, b nonzero).
fn poly_prem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().expect("nonzero divisor").clone();
    let db = b.len() - 1;
    poly_trim(&mut a);
    while !a.is_empty() && a.len() > db {
        let la = a.last().unwrap().clone();
        let shift = a.len() - 1 - db;
        for c in a.iter_mut() {
            *c *= &lb;
        }
        for (i, c) in b.iter().enumerate() {
            a[i + shift] -= &la * c;
        }
        poly_trim(&mut a);
    }
    a
}

/// Primitive gcd of two nonzero integer polynomials, positive leading
/// coefficient.
pub(crate) fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = poly_primitive(a.to_vec());
    let mut b = poly_primitive(b.to_vec());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = poly_prem(a, &b);
        a = b;
        b = poly_primitive(r);
    }
    poly_primitive(a)
}

/// Exact quotient a / b over Z. Panics if the division is not exact.
pub(crate) fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    poly_trim(&mut rem);
    if rem.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    assert!(rem.len() > db, "inexact polynomial division");
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + db];
        if top.is_zero() {
            continue;
        }
        let (qk, r) = top.div_rem(lb);
        assert!(r.is_zero(), "inexact polynomial division");
        for (i, c) in b.iter().enumerate() {
            rem[k + i] -= &qk * c;
        }
        quot[k] = qk;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    poly_trim(&mut quot);
    quot
}

impl IntLaurent {
    /// Gcd with another nonzero Laurent polynomial, as a primitive ordinary
    /// polynomial (powers of q are units and are dropped).
    pub fn gcd(&self, other: &Self) -> Self {
        let g = poly_gcd(&self.coeffs, &other.coeffs);
        Self::from_coeffs(0, g)
    }

    /// Exact quotient by `d` (treated up to powers of q: the result carries
    /// exponent `self.low - d.low`). Panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let q = poly_div_exact(&self.coeffs, &d.coeffs);
        Self::from_coeffs(self.low - d.low, q)
    }

    /// Least common multiple of two primitive polynomials with nonzero
    /// constant term.
    pub fn lcm(&self, other: &Self) -> Self {
        if self == other {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let g = self.gcd(other);
        self.div_exact(&g).mul(other)
    }
}
