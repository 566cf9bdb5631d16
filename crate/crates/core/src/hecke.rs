//! The Hecke algebra H_n(q) on the basis {T_w : w in S_n}.
//!
//! Products are computed by right-multiplying one generator at a time along
//! the staircase word of each basis word of the right factor:
//!
//!   T_w T_{s_i} = T_{w s_i}                     if length(w s_i) > length(w)
//!   T_w T_{s_i} = T_{w s_i} + (q - q^-1) T_w    otherwise.
//!
//! Symbolic coefficients are first brought over a common denominator so the
//! inner loop only does integer Laurent polynomial arithmetic.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_RANK};
use crate::scalar::{Coefficient, RatFunc, Ring};

/// Sparse combination of basis words T_w with nonzero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct HeckeElement<C> {
    n: usize,
    terms: BTreeMap<Permutation, C>,
}

impl<C: Coefficient> HeckeElement<C> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, C::one())
    }

    pub fn scalar(n: usize, c: C) -> Self {
        Self::from_terms(n, [(Permutation::identity(n), c)])
    }

    pub fn basis(w: Permutation) -> Self {
        Self::from_terms(w.rank(), [(w, C::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, C)>>(n: usize, terms: I) -> Self {
        let mut e = Self::zero(n);
        for (w, c) in terms {
            assert_eq!(w.rank(), n, "basis word {w} does not lie in S_{n}");
            e.add_term(w, &c);
        }
        e
    }

    fn add_term(&mut self, w: Permutation, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                slot.add_assign_ref(c);
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// The coefficient of T_1 when the element is a multiple of the unit.
    pub fn as_scalar(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                w.is_identity().then(|| c.clone())
            }
            _ => None,
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut r = self.clone();
        for (w, c) in other.terms() {
            r.add_term(*w, c);
        }
        Ok(r)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { n: self.n, terms: self.terms.iter().map(|(w, c)| (*w, c.neg_ref())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self { n: self.n, terms: self.terms.iter().map(|(w, x)| (*w, x.mul_ref(c))).collect() }
    }

    /// Explicit embedding H_m -> H_n (m <= n) by fixed points.
    pub fn promote(&self, n: usize) -> Self {
        assert!(n >= self.n, "cannot promote rank {} to {n}", self.n);
        Self { n, terms: self.terms.iter().map(|(w, c)| (w.promote(n), c.clone())).collect() }
    }

    /// Inverse of `promote`: succeeds when every basis word fixes m+1..n.
    pub fn restrict(&self, m: usize) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (w, c) in self.terms() {
            terms.insert(w.restrict(m)?, c.clone());
        }
        Some(Self { n: m, terms })
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> Result<D>) -> Result<HeckeElement<D>> {
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in self.terms() {
            out.add_term(*w, &f(c)?);
        }
        Ok(out)
    }

    /// `{"n": .., "terms": [{"perm": [...], "coeff": ...}]}` in lexicographic
    /// order of permutations.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.terms().map(|(w, c)| json!({ "perm": w.images(), "coeff": c.to_json() })).collect();
        json!({ "n": self.n, "terms": terms })
    }
}

impl HeckeElement<RatFunc> {
    /// Specialization q -> q0.
    pub fn eval_at(&self, q0: &BigRational) -> Result<HeckeElement<BigRational>> {
        self.map_coefficients(|c| c.eval_at(q0))
    }
}

impl<C: Coefficient> fmt::Display for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let basis = format!("T[{}]", w.word_string());
            let cs = c.to_string();
            if c.is_one() {
                write!(f, "{basis}")?;
            } else if cs.contains(' ') || cs.contains('/') {
                write!(f, "({cs})*{basis}")?;
            } else {
                write!(f, "{cs}*{basis}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------

type Terms<R> = HashMap<Permutation, R>;

fn accumulate<R: Ring>(map: &mut Terms<R>, w: Permutation, c: &R) {
    match map.get_mut(&w) {
        Some(slot) => slot.add_assign_ref(c),
        None => {
            map.insert(w, c.clone());
        }
    }
}

/// x * T_{s_i}.
fn right_mul_generator<R: Ring>(x: &Terms<R>, i: usize, delta: &R) -> Terms<R> {
    let mut out = HashMap::with_capacity(x.len() * 2);
    for (w, c) in x {
        let ws = w.mul_generator(i);
        accumulate(&mut out, ws, c);
        if !w.ascends_at(i) {
            accumulate(&mut out, *w, &c.mul_ref(delta));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// T_{s_i} * x.
fn left_mul_generator<R: Ring>(i: usize, x: &Terms<R>, delta: &R) -> Terms<R> {
    let mut out = HashMap::with_capacity(x.len() * 2);
    for (w, c) in x {
        // s_i w swaps the values i and i+1; it is shorter iff i+1 precedes i.
        let (mut a, mut b) = (usize::MAX, usize::MAX);
        for j in 1..=w.rank() {
            let v = w.apply(j);
            if v == i {
                a = j;
            } else if v == i + 1 {
                b = j;
            }
        }
        accumulate(&mut out, w.swap_positions(a, b), c);
        if b < a {
            accumulate(&mut out, *w, &c.mul_ref(delta));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// x * y_k, using y_k = T_{s_{k-1}} y_{k-1} T_{s_{k-1}}.
fn right_mul_jm<R: Ring>(x: Terms<R>, k: usize, delta: &R) -> Terms<R> {
    if k <= 1 {
        return x;
    }
    let t = right_mul_generator(&x, k - 1, delta);
    let t = right_mul_jm(t, k - 1, delta);
    right_mul_generator(&t, k - 1, delta)
}

/// y_k * x.
fn left_mul_jm<R: Ring>(k: usize, x: Terms<R>, delta: &R) -> Terms<R> {
    if k <= 1 {
        return x;
    }
    let t = left_mul_generator(k - 1, &x, delta);
    let t = left_mul_jm(k - 1, t, delta);
    left_mul_generator(k - 1, &t, delta)
}

/// x * prod_r (y_k - roots[r]), or the mirrored left product.
fn jm_polynomial<R: Ring>(mut x: Terms<R>, k: usize, roots: &[R], delta: &R, left: bool) -> Terms<R> {
    for root in roots {
        if x.is_empty() {
            break;
        }
        let shifted = if left { left_mul_jm(k, x.clone(), delta) } else { right_mul_jm(x.clone(), k, delta) };
        let mut next = shifted;
        let neg = root.neg_ref();
        for (w, c) in &x {
            accumulate(&mut next, *w, &c.mul_ref(&neg));
        }
        next.retain(|_, c| !c.is_zero());
        x = next;
    }
    x
}

/// Product of two coefficient vectors in the basis {T_w}.
fn basis_product<R: Ring>(a: Terms<R>, b: &[(Permutation, R)], delta: &R) -> Terms<R> {
    let mut words: Vec<(Vec<usize>, &R)> = b.iter().map(|(w, c)| (w.canonical_word(), c)).collect();
    words.sort_by(|x, y| x.0.cmp(&y.0));

    // stack[k] = a * T_{word[..k]}; consecutive sorted words share prefixes.
    let mut stack: Vec<Terms<R>> = vec![a];
    let mut prev: &[usize] = &[];
    let mut out: Terms<R> = HashMap::new();
    for (word, coeff) in &words {
        let common = prev.iter().zip(word.iter()).take_while(|(x, y)| x == y).count();
        stack.truncate(common + 1);
        for &i in &word[common..] {
            let next = right_mul_generator(stack.last().unwrap(), i, delta);
            stack.push(next);
        }
        for (w, c) in stack.last().unwrap() {
            accumulate(&mut out, *w, &c.mul_ref(coeff));
        }
        prev = word;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Coefficient specialization of the Hecke algebra: carries q, q^-1 and
/// q - q^-1 in the coefficient field. Elements carry their own rank.
#[derive(Clone, Debug)]
pub struct Hecke<C> {
    q: C,
    q_inv: C,
    delta: C,
}

impl Hecke<RatFunc> {
    /// q kept as an indeterminate.
    pub fn symbolic() -> Self {
        Self::with_q(RatFunc::q()).expect("q is invertible")
    }
}

impl Hecke<BigRational> {
    /// q specialized to the rational `q0`. Rational roots of unity are +-1;
    /// those (and 0) are rejected.
    pub fn at(q0: BigRational) -> Result<Self> {
        if One::is_one(&q0.abs()) || num_traits::Zero::is_zero(&q0) {
            return Err(Error::NonGenericQ(q0.to_string()));
        }
        Self::with_q(q0)
    }
}

impl<C: Coefficient> Hecke<C> {
    pub fn with_q(q: C) -> Result<Self> {
        let q_inv = q.inv()?;
        let delta = q.sub_ref(&q_inv);
        Ok(Self { q, q_inv, delta })
    }

    pub fn q(&self) -> &C {
        &self.q
    }

    /// q - q^-1.
    pub fn delta(&self) -> &C {
        &self.delta
    }

    pub fn q_pow(&self, k: i32) -> C {
        let base = if k < 0 { &self.q_inv } else { &self.q };
        let mut acc = C::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul_ref(base);
        }
        acc
    }

    /// [k]_q = (q^k - q^-k) / (q - q^-1), as the finite sum of powers.
    pub fn quantum_int(&self, k: i32) -> C {
        let n = k.unsigned_abs() as i32;
        let mut acc = C::zero();
        for j in 0..n {
            acc.add_assign_ref(&self.q_pow(n - 1 - 2 * j));
        }
        if k < 0 {
            acc.neg_ref()
        } else {
            acc
        }
    }

    /// z_d = (1 - q^{-2d}) / (q - q^-1) = q^{-d} [d]_q.
    pub fn markov_weight(&self, d: i32) -> C {
        self.q_pow(-d).mul_ref(&self.quantum_int(d))
    }

    fn check_generator(i: usize, n: usize) -> Result<()> {
        if n > MAX_RANK {
            return Err(Error::RankUnsupported(n));
        }
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        Ok(())
    }

    /// T_{s_i} in H_n.
    pub fn generator(&self, i: usize, n: usize) -> Result<HeckeElement<C>> {
        Self::check_generator(i, n)?;
        Ok(HeckeElement::basis(Permutation::identity(n).mul_generator(i)))
    }

    /// T_{s_i}^{-1} = T_{s_i} - (q - q^-1).
    pub fn inverse_generator(&self, i: usize, n: usize) -> Result<HeckeElement<C>> {
        self.generator(i, n)?.sub(&HeckeElement::scalar(n, self.delta.clone()))
    }

    /// T_w for the basis word given by a generator word.
    pub fn word(&self, word: &[usize], n: usize) -> Result<HeckeElement<C>> {
        let mut x = HeckeElement::one(n);
        for &i in word {
            x = self.mul_generator(&x, i)?;
        }
        Ok(x)
    }

    pub fn mul(&self, a: &HeckeElement<C>, b: &HeckeElement<C>) -> Result<HeckeElement<C>> {
        a.check_rank(b)?;
        let n = a.n;
        if a.is_zero() || b.is_zero() {
            return Ok(HeckeElement::zero(n));
        }
        if let Some(c) = b.as_scalar() {
            return Ok(a.scale(&c));
        }
        if let Some(c) = a.as_scalar() {
            return Ok(b.scale(&c));
        }
        let a_coeffs: Vec<&C> = a.terms.values().collect();
        let b_coeffs: Vec<&C> = b.terms.values().collect();
        if let (Some((an, ad)), Some((bn, bd))) = (C::clear_denominators(&a_coeffs), C::clear_denominators(&b_coeffs)) {
            let a_int: Terms<_> = a.terms.keys().copied().zip(an).collect();
            let b_int: Vec<_> = b.terms.keys().copied().zip(bn).collect();
            let prod = basis_product(a_int, &b_int, &C::int_laurent_delta());
            let den = ad.mul(&bd);
            return Ok(HeckeElement::from_terms(n, prod.into_iter().map(|(w, c)| (w, C::from_fraction(c, &den)))));
        }
        let a_terms: Terms<C> = a.terms.iter().map(|(w, c)| (*w, c.clone())).collect();
        let b_terms: Vec<(Permutation, C)> = b.terms.iter().map(|(w, c)| (*w, c.clone())).collect();
        let prod = basis_product(a_terms, &b_terms, &self.delta);
        Ok(HeckeElement::from_terms(n, prod))
    }

    /// x * prod_r (y_k - roots[r]).
    pub fn mul_jm_polynomial(&self, x: &HeckeElement<C>, k: usize, roots: &[C]) -> Result<HeckeElement<C>> {
        self.jm_polynomial(x, k, roots, false)
    }

    /// prod_r (y_k - roots[r]) * x.
    pub fn jm_polynomial_mul(&self, k: usize, roots: &[C], x: &HeckeElement<C>) -> Result<HeckeElement<C>> {
        self.jm_polynomial(x, k, roots, true)
    }

    /// x * y_k.
    pub fn mul_jucys_murphy(&self, x: &HeckeElement<C>, k: usize) -> Result<HeckeElement<C>> {
        self.jm_polynomial(x, k, &[C::zero()], false)
    }

    /// y_k * x.
    pub fn jucys_murphy_mul(&self, k: usize, x: &HeckeElement<C>) -> Result<HeckeElement<C>> {
        self.jm_polynomial(x, k, &[C::zero()], true)
    }

    fn jm_polynomial(&self, x: &HeckeElement<C>, k: usize, roots: &[C], left: bool) -> Result<HeckeElement<C>> {
        if k == 0 || k > x.n {
            return Err(Error::IndexOutOfRange { index: k, rank: x.n });
        }
        let n = x.n;
        let coeffs: Vec<&C> = x.terms.values().collect();
        let root_refs: Vec<&C> = roots.iter().collect();
        if let (Some((nums, den)), Some((int_roots, root_den))) =
            (C::clear_denominators(&coeffs), C::clear_denominators(&root_refs))
        {
            if root_den.is_one() {
                let terms: Terms<_> = x.terms.keys().copied().zip(nums).collect();
                let out = jm_polynomial(terms, k, &int_roots, &C::int_laurent_delta(), left);
                return Ok(HeckeElement::from_terms(n, out.into_iter().map(|(w, c)| (w, C::from_fraction(c, &den)))));
            }
        }
        let terms: Terms<C> = x.terms.iter().map(|(w, c)| (*w, c.clone())).collect();
        let out = jm_polynomial(terms, k, roots, &self.delta, left);
        Ok(HeckeElement::from_terms(n, out))
    }

    /// Product of several elements, left to right.
    pub fn product(&self, factors: &[&HeckeElement<C>]) -> Result<HeckeElement<C>> {
        let (first, rest) = factors.split_first().expect("at least one factor");
        let mut acc = (*first).clone();
        for f in rest {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// x * T_{s_i}.
    pub fn mul_generator(&self, x: &HeckeElement<C>, i: usize) -> Result<HeckeElement<C>> {
        Self::check_generator(i, x.n)?;
        let mut out = HeckeElement::zero(x.n);
        for (w, c) in x.terms() {
            out.add_term(w.mul_generator(i), c);
            if !w.ascends_at(i) {
                out.add_term(*w, &c.mul_ref(&self.delta));
            }
        }
        Ok(out)
    }

    /// T_{s_i} * x.
    pub fn generator_mul(&self, i: usize, x: &HeckeElement<C>) -> Result<HeckeElement<C>> {
        Self::check_generator(i, x.n)?;
        let terms: Terms<C> = x.terms.iter().map(|(w, c)| (*w, c.clone())).collect();
        Ok(HeckeElement::from_terms(x.n, left_mul_generator(i, &terms, &self.delta)))
    }

    pub fn pow(&self, x: &HeckeElement<C>, k: u32) -> Result<HeckeElement<C>> {
        let mut acc = HeckeElement::one(x.n);
        for _ in 0..k {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// Jucys-Murphy element y_i = 1 + (q - q^-1) sum_{k<i} T_{(k i)} of H_n.
    pub fn jucys_murphy(&self, i: usize, n: usize) -> Result<HeckeElement<C>> {
        if n > MAX_RANK {
            return Err(Error::RankUnsupported(n));
        }
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        let mut y = HeckeElement::one(n);
        for k in 1..i {
            y.add_term(Permutation::transposition(k, i, n), &self.delta);
        }
        Ok(y)
    }

    /// y_1 = 1, y_{i+1} = T_{s_i} y_i T_{s_i}, computed by multiplication.
    pub fn jucys_murphy_recursive(&self, i: usize, n: usize) -> Result<HeckeElement<C>> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        let mut y = HeckeElement::one(n);
        for k in 1..i {
            y = self.mul_generator(&self.generator_mul(k, &y)?, k)?;
        }
        Ok(y)
    }

    /// f_{1->k}: f_{1->1} = 1, f_{1->k+1} = 1 + f_{1->k} T_{s_k}, in H_n.
    pub fn one_shuffle(&self, k: usize, n: usize) -> Result<HeckeElement<C>> {
        let mut f = HeckeElement::one(n);
        for j in 1..k {
            f = HeckeElement::one(n).add(&self.mul_generator(&f, j)?)?;
        }
        Ok(f)
    }

    /// Sigma_{1->n} = f_{1->n} f_{1->n-1} ... f_{1->1}.
    pub fn shuffle(&self, n: usize) -> Result<HeckeElement<C>> {
        let mut acc = HeckeElement::one(n);
        for k in (1..=n).rev() {
            acc = self.mul(&acc, &self.one_shuffle(k, n)?)?;
        }
        Ok(acc)
    }

    /// U_{m+1} = T_{s_m} y_m - y_m T_{s_m} in H_n.
    pub fn intertwiner(&self, m: usize, n: usize) -> Result<HeckeElement<C>> {
        Self::check_generator(m, n)?;
        let y = self.jucys_murphy(m, n)?;
        self.generator_mul(m, &y)?.sub(&self.mul_generator(&y, m)?)
    }

    pub fn commutator(&self, a: &HeckeElement<C>, b: &HeckeElement<C>) -> Result<HeckeElement<C>> {
        self.mul(a, b)?.sub(&self.mul(b, a)?)
    }

    /// T_w^{-1} for a basis word: the product of inverse generators along the
    /// reversed word.
    pub fn basis_inverse(&self, w: &Permutation) -> Result<HeckeElement<C>> {
        let n = w.rank();
        let mut acc = HeckeElement::one(n);
        for &i in w.canonical_word().iter().rev() {
            acc = self.mul(&acc, &self.inverse_generator(i, n)?)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::delta;

    fn h() -> Hecke<RatFunc> {
        Hecke::symbolic()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let h = h();
        let s = h.generator(1, 2).unwrap();
        let sq = h.mul(&s, &s).unwrap();
        let expected = HeckeElement::one(2).add(&s.scale(&delta())).unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn braid_relation() {
        let h = h();
        let a = h.word(&[1, 2, 1], 3).unwrap();
        let b = h.word(&[2, 1, 2], 3).unwrap();
        assert_eq!(a, b);
        let s1 = h.generator(1, 3).unwrap();
        let s2 = h.generator(2, 3).unwrap();
        assert_eq!(h.product(&[&s1, &s2, &s1]).unwrap(), h.product(&[&s2, &s1, &s2]).unwrap());
    }

    #[test]
    fn generator_errors() {
        let h = h();
        assert_eq!(h.generator(2, 2), Err(Error::IndexOutOfRange { index: 2, rank: 2 }));
        assert!(h.generator(0, 3).is_err());
        assert!(h.inverse_generator(3, 3).is_err());
        let a = HeckeElement::<RatFunc>::one(2);
        let b = HeckeElement::<RatFunc>::one(3);
        assert_eq!(h.mul(&a, &b), Err(Error::RankMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn inverse_generator() {
        let h = h();
        let s = h.generator(1, 2).unwrap();
        let si = h.inverse_generator(1, 2).unwrap();
        assert_eq!(h.mul(&s, &si).unwrap(), HeckeElement::one(2));
        assert_eq!(h.mul(&si, &s).unwrap(), HeckeElement::one(2));
        let at_one = si.eval_at(&BigRational::from_integer(1.into())).unwrap();
        assert_eq!(at_one, s.eval_at(&BigRational::from_integer(1.into())).unwrap());
    }

    #[test]
    fn associativity_on_h3() {
        let h = h();
        let s1 = h.generator(1, 3).unwrap();
        let s2 = h.generator(2, 3).unwrap();
        let l = h.mul(&h.mul(&s1, &s2).unwrap(), &s1).unwrap();
        let r = h.mul(&s1, &h.mul(&s2, &s1).unwrap()).unwrap();
        assert_eq!(l, r);
        assert_eq!(l, HeckeElement::basis(perm(&[3, 2, 1])));
    }

    #[test]
    fn left_and_right_generator_products_agree_with_mul() {
        let h = h();
        let x = h.jucys_murphy(3, 4).unwrap().add(&h.word(&[3, 1, 2], 4).unwrap()).unwrap();
        for i in 1..4 {
            let g = h.generator(i, 4).unwrap();
            assert_eq!(h.mul_generator(&x, i).unwrap(), h.mul(&x, &g).unwrap());
            assert_eq!(h.generator_mul(i, &x).unwrap(), h.mul(&g, &x).unwrap());
        }
    }

    #[test]
    fn jucys_murphy_small() {
        let h = h();
        assert_eq!(h.jucys_murphy(1, 3).unwrap(), HeckeElement::one(3));
        let y2 = h.jucys_murphy(2, 2).unwrap();
        let expected = HeckeElement::one(2).add(&h.generator(1, 2).unwrap().scale(&delta())).unwrap();
        assert_eq!(y2, expected);
        for n in 1..=4 {
            for i in 1..=n {
                assert_eq!(h.jucys_murphy(i, n).unwrap(), h.jucys_murphy_recursive(i, n).unwrap());
            }
        }
        // y_3 = 1 + delta (T_{s2} + T_{s1 s2 s1})
        let y3 = h.jucys_murphy(3, 3).unwrap();
        assert_eq!(y3.coeff(&perm(&[1, 3, 2])), delta());
        assert_eq!(y3.coeff(&perm(&[3, 2, 1])), delta());
        assert_eq!(y3.len(), 3);
    }

    #[test]
    fn shuffle_is_sum_of_all_words() {
        let h = h();
        assert_eq!(h.shuffle(1).unwrap(), HeckeElement::one(1));
        let s2 = HeckeElement::one(2).add(&h.generator(1, 2).unwrap()).unwrap();
        assert_eq!(h.shuffle(2).unwrap(), s2);
        for n in 3..=4 {
            let sigma = h.shuffle(n).unwrap();
            let all = HeckeElement::from_terms(n, Permutation::all(n).into_iter().map(|w| (w, RatFunc::one())));
            assert_eq!(sigma, all);
        }
    }

    #[test]
    fn intertwiner_examples() {
        let h = h();
        assert!(h.intertwiner(1, 2).unwrap().is_zero());
        let u3 = h.intertwiner(2, 3).unwrap();
        let y2 = h.jucys_murphy(2, 3).unwrap();
        let y3 = h.jucys_murphy(3, 3).unwrap();
        let lhs = h.mul(&u3, &y2).unwrap();
        let rhs = h.mul(&y3, &u3).unwrap();
        assert_eq!(lhs, rhs);
        let sq = h.mul(&u3, &u3).unwrap();
        let q = HeckeElement::scalar(3, RatFunc::q());
        let qi = HeckeElement::scalar(3, RatFunc::q_pow(-1));
        let a = h.mul(&q, &y2).unwrap().sub(&h.mul(&qi, &y3).unwrap()).unwrap();
        let b = h.mul(&q, &y3).unwrap().sub(&h.mul(&qi, &y2).unwrap()).unwrap();
        assert_eq!(sq, h.mul(&a, &b).unwrap());
    }

    #[test]
    fn commutators() {
        let h = h();
        let y2 = h.jucys_murphy(2, 3).unwrap();
        let y3 = h.jucys_murphy(3, 3).unwrap();
        let s1 = h.generator(1, 3).unwrap();
        assert!(h.commutator(&y2, &y3).unwrap().is_zero());
        assert!(h.commutator(&s1, &y2.add(&y3).unwrap()).unwrap().is_zero());
        // y2 = s1^2, so s1 commutes with it; s2 does not.
        assert!(h.commutator(&s1, &y2).unwrap().is_zero());
        let s2 = h.generator(2, 3).unwrap();
        assert!(!h.commutator(&s2, &y2).unwrap().is_zero());
    }

    #[test]
    fn evaluated_arithmetic_matches_symbolic() {
        let q0 = BigRational::new(3.into(), 2.into());
        let he = Hecke::at(q0.clone()).unwrap();
        let hs = h();
        let a = hs.jucys_murphy(3, 3).unwrap();
        let b = hs.intertwiner(2, 3).unwrap();
        let sym = hs.mul(&a, &b).unwrap().eval_at(&q0).unwrap();
        let ev = he.mul(&a.eval_at(&q0).unwrap(), &b.eval_at(&q0).unwrap()).unwrap();
        assert_eq!(sym, ev);
        assert!(Hecke::at(BigRational::from_integer(1.into())).is_err());
        assert!(Hecke::at(-BigRational::from_integer(1.into())).is_err());
    }

    #[test]
    fn rendering() {
        let h = h();
        let y2 = h.jucys_murphy(2, 2).unwrap();
        assert_eq!(y2.to_string(), "T[] + (-q^-1 + q)*T[s1]");
        assert_eq!(
            y2.to_json().to_string(),
            r#"{"n":2,"terms":[{"coeff":{"den":[[0,"1"]],"num":[[0,"1"]]},"perm":[1,2]},{"coeff":{"den":[[0,"1"]],"num":[[-1,"-1"],[1,"1"]]},"perm":[2,1]}]}"#
        );
    }

    #[test]
    fn promote_and_restrict() {
        let h = h();
        let y2 = h.jucys_murphy(2, 2).unwrap();
        let p = y2.promote(4);
        assert_eq!(p, h.jucys_murphy(2, 4).unwrap());
        assert_eq!(p.restrict(2), Some(y2));
        assert_eq!(h.jucys_murphy(3, 3).unwrap().restrict(2), None);
    }

    #[test]
    fn jucys_murphy_products_match_mul() {
        let h = h();
        let x = h.intertwiner(2, 4).unwrap().add(&h.word(&[3, 2], 4).unwrap().scale(&RatFunc::q_pow(-3))).unwrap();
        let x = x.scale(&delta().inv().unwrap());
        for k in 1..=4 {
            let y = h.jucys_murphy(k, 4).unwrap();
            assert_eq!(h.mul_jucys_murphy(&x, k).unwrap(), h.mul(&x, &y).unwrap());
            assert_eq!(h.jucys_murphy_mul(k, &x).unwrap(), h.mul(&y, &x).unwrap());
        }
        let roots = [RatFunc::q_pow(2), RatFunc::q_pow(-4)];
        let y3 = h.jucys_murphy(3, 4).unwrap();
        let factor = |r: &RatFunc| y3.sub(&HeckeElement::scalar(4, r.clone())).unwrap();
        let expected = h.product(&[&x, &factor(&roots[0]), &factor(&roots[1])]).unwrap();
        assert_eq!(h.mul_jm_polynomial(&x, 3, &roots).unwrap(), expected);
        let expected = h.product(&[&factor(&roots[0]), &factor(&roots[1]), &x]).unwrap();
        assert_eq!(h.jm_polynomial_mul(3, &roots, &x).unwrap(), expected);
        let he = Hecke::at(BigRational::new(5.into(), 3.into())).unwrap();
        let xe = x.eval_at(he.q()).unwrap();
        let ye = y3.eval_at(he.q()).unwrap();
        assert_eq!(he.mul_jucys_murphy(&xe, 3).unwrap(), he.mul(&xe, &ye).unwrap());
    }

    #[test]
    fn basis_inverse() {
        let h = h();
        let w = perm(&[3, 1, 2]);
        let t = HeckeElement::basis(w);
        assert_eq!(h.mul(&t, &h.basis_inverse(&w).unwrap()).unwrap(), HeckeElement::one(3));
    }
}
