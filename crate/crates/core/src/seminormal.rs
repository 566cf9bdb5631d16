//! Seminormal irreducible representations: generators act on the basis of
//! standard tableaux of one shape, and every Jucys-Murphy element is
//! diagonal.
//!
//! For a tableau t with contents a = q^{2 m_i}, b = q^{2 m_{i+1}}:
//! i, i+1 in one row gives sigma_i v_t = q v_t, in one column gives
//! -q^-1 v_t, and otherwise t pairs with t' = s_i t. The pair is ordered so
//! that t comes first in the basis (its content string is the larger one)
//! and sigma_i acts on (v_t, v_t') by [`ah1_block`].
//!
//! Matrices act on column vectors: sigma v_k = sum_l M[l][k] v_l.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hecke::{Hecke, HeckeElement};
use crate::idempotents::IdempotentRecord;
use crate::perm::Permutation;
use crate::scalar::Coefficient;
use crate::tableaux::{enumerate_standard, frobenius_dim, StandardTableau, YoungDiagram};

/// Dense square-or-rectangular matrix, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Coefficient> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![C::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| C::one()).collect())
    }

    pub fn diagonal(entries: Vec<C>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (k, x) in entries.into_iter().enumerate() {
            m.data[k * n + k] = x;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &C {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: C) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(C::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    fn zip(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.add_ref(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.sub_ref(b))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.mul_ref(c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c].add_assign_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> C {
        let mut t = C::zero();
        for k in 0..self.rows.min(self.cols) {
            t.add_assign_ref(self.get(k, k));
        }
        t
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or_else(|| Error::NotInvertible("singular matrix".into()))?;
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                    inv.data.swap(pivot * n + c, col * n + c);
                }
            }
            let p = a.get(col, col).inv()?;
            for c in 0..n {
                a.data[col * n + c] = a.data[col * n + c].mul_ref(&p);
                inv.data[col * n + c] = inv.data[col * n + c].mul_ref(&p);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for c in 0..n {
                    let da = a.get(col, c).mul_ref(&f);
                    let di = inv.get(col, c).mul_ref(&f);
                    a.data[r * n + c] = a.data[r * n + c].sub_ref(&da);
                    inv.data[r * n + c] = inv.data[r * n + c].sub_ref(&di);
                }
            }
        }
        Ok(inv)
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> Result<D>) -> Result<Matrix<D>> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    /// Row-major nested arrays of coefficient JSON.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> =
            (0..self.rows).map(|r| Value::Array((0..self.cols).map(|c| self.get(r, c).to_json()).collect())).collect();
        Value::Array(rows)
    }
}

impl<C: Coefficient> fmt::Display for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// sigma_i on (v_t, v_t') for eigenvalues a = a_i, b = a_{i+1} of t:
///
///   [ -d b/(a-b)   1 - d^2 a b/(a-b)^2 ]
///   [  1           d a/(a-b)           ]      with d = q - q^-1.
pub fn ah1_block<C: Coefficient>(h: &Hecke<C>, a: &C, b: &C) -> Result<[[C; 2]; 2]> {
    let d = h.delta();
    let diff_inv = a.sub_ref(b).inv()?;
    let s00 = d.mul_ref(b).mul_ref(&diff_inv).neg_ref();
    let s11 = d.mul_ref(a).mul_ref(&diff_inv);
    let s01 = C::one().sub_ref(&d.mul_ref(d).mul_ref(a).mul_ref(b).mul_ref(&diff_inv).mul_ref(&diff_inv));
    Ok([[s00, s01], [C::one(), s11]])
}

#[derive(Clone, Debug)]
pub struct SeminormalRep<C> {
    shape: YoungDiagram,
    basis: Vec<StandardTableau>,
    generators: Vec<Matrix<C>>,
}

pub fn build_rep<C: Coefficient>(h: &Hecke<C>, shape: &YoungDiagram) -> Result<SeminormalRep<C>> {
    let basis = enumerate_standard(shape);
    let n = shape.size();
    let d = basis.len();
    let index: HashMap<&StandardTableau, usize> = basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut generators = Vec::new();
    for i in 1..n {
        let mut m = Matrix::zeros(d, d);
        for (k, t) in basis.iter().enumerate() {
            let (mi, mj) = (t.content(i), t.content(i + 1));
            if mj == mi + 1 {
                m.set(k, k, h.q().clone());
            } else if mj == mi - 1 {
                m.set(k, k, h.q_pow(-1).neg_ref());
            } else {
                let partner = t.swap(i).expect("i and i+1 in different rows and columns");
                let l = index[&partner];
                if k < l {
                    let s = ah1_block(h, &h.q_pow(2 * mi), &h.q_pow(2 * mj))?;
                    m.set(k, k, s[0][0].clone());
                    m.set(k, l, s[0][1].clone());
                    m.set(l, k, s[1][0].clone());
                    m.set(l, l, s[1][1].clone());
                }
            }
        }
        generators.push(m);
    }
    Ok(SeminormalRep { shape: shape.clone(), basis, generators })
}

impl<C: Coefficient> SeminormalRep<C> {
    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.shape.size()
    }

    /// rho(sigma_i).
    pub fn generator(&self, i: usize) -> &Matrix<C> {
        &self.generators[i - 1]
    }

    /// rho(y_i) as the diagonal of eigenvalues q^{2 m_i(t)}.
    pub fn jm_matrix(&self, h: &Hecke<C>, i: usize) -> Matrix<C> {
        Matrix::diagonal(self.basis.iter().map(|t| h.q_pow(2 * t.content(i))).collect())
    }

    /// rho(y_i) as the word sigma_{i-1} ... sigma_1 sigma_1 ... sigma_{i-1}.
    pub fn jm_matrix_via_words(&self, i: usize) -> Matrix<C> {
        let mut y = Matrix::identity(self.dim());
        for k in 1..i {
            y = self.generator(k).mul(&y).mul(self.generator(k));
        }
        y
    }

    /// rho(T_w) along the canonical word of w.
    pub fn basis_matrix(&self, w: &Permutation) -> Matrix<C> {
        let mut m = Matrix::identity(self.dim());
        for i in w.canonical_word() {
            m = m.mul(self.generator(i));
        }
        m
    }

    /// rho(x) for x in H_n.
    pub fn apply(&self, x: &HeckeElement<C>) -> Result<Matrix<C>> {
        if x.rank() != self.rank() {
            return Err(Error::RankMismatch { left: x.rank(), right: self.rank() });
        }
        let mut cache: HashMap<Permutation, Matrix<C>> = HashMap::new();
        cache.insert(Permutation::identity(self.rank()), Matrix::identity(self.dim()));
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for (w, c) in x.terms() {
            let m = self.cached_basis_matrix(w, &mut cache);
            out = out.add(&m.scale(c));
        }
        Ok(out)
    }

    fn cached_basis_matrix(&self, w: &Permutation, cache: &mut HashMap<Permutation, Matrix<C>>) -> Matrix<C> {
        if let Some(m) = cache.get(w) {
            return m.clone();
        }
        let word = w.canonical_word();
        let last = *word.last().unwrap();
        let prefix = w.mul_generator(last);
        let m = self.cached_basis_matrix(&prefix, cache).mul(self.generator(last));
        cache.insert(*w, m.clone());
        m
    }

    /// Quadratic, braid and far-commutation relations.
    pub fn relation_check(&self, h: &Hecke<C>) -> bool {
        let n = self.rank();
        let id = Matrix::identity(self.dim());
        for i in 1..n {
            let s = self.generator(i);
            if s.mul(s) != id.add(&s.scale(h.delta())) {
                return false;
            }
            for j in i + 1..n {
                let t = self.generator(j);
                let ok = if j == i + 1 { s.mul(t).mul(s) == t.mul(s).mul(t) } else { s.mul(t) == t.mul(s) };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Both forms of rho(y_i) agree for every i.
    pub fn jm_check(&self, h: &Hecke<C>) -> bool {
        (1..=self.rank()).all(|i| self.jm_matrix(h, i) == self.jm_matrix_via_words(i))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "shape": self.shape.to_json(),
            "basis": self.basis.iter().map(StandardTableau::to_json).collect::<Vec<_>>(),
            "generators": self.generators.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        })
    }
}

/// For every shape of size n: matrix size equals the Frobenius dimension,
/// and the squares of the sizes sum to n!.
pub fn rep_dimension_audit<C: Coefficient>(h: &Hecke<C>, n: usize) -> Result<bool> {
    let mut total = BigUint::from(0u32);
    for shape in YoungDiagram::all(n) {
        let rep = build_rep(h, &shape)?;
        if rep.generators.iter().any(|m| m.rows() != rep.dim() || m.cols() != rep.dim()) {
            return Ok(false);
        }
        let d = BigUint::from(rep.dim());
        if d != frobenius_dim(&shape) {
            return Ok(false);
        }
        total += &d * &d;
    }
    let fact = (1..=n).fold(BigUint::one(), |a, x| a * x);
    Ok(total == fact)
}

/// Conjugating the triangular action on (e, sigma_i e) by
/// V = [[1, d b/(a-b)], [0, 1]] gives the diagonal form.
pub fn similarity_check<C: Coefficient>(h: &Hecke<C>, a: &C, b: &C) -> Result<bool> {
    let d = h.delta();
    let c = d.mul_ref(b).div_ref(&a.sub_ref(b))?;
    let sigma = Matrix::from_rows(vec![vec![C::zero(), C::one()], vec![C::one(), d.clone()]]);
    let yi = Matrix::from_rows(vec![vec![a.clone(), d.mul_ref(b).neg_ref()], vec![C::zero(), b.clone()]]);
    let yj = Matrix::from_rows(vec![vec![b.clone(), d.mul_ref(b)], vec![C::zero(), a.clone()]]);
    let v = Matrix::from_rows(vec![vec![C::one(), c.clone()], vec![C::zero(), C::one()]]);
    let v_inv = Matrix::from_rows(vec![vec![C::one(), c.neg_ref()], vec![C::zero(), C::one()]]);
    let conj = |m: &Matrix<C>| v_inv.mul(m).mul(&v);
    let s = ah1_block(h, a, b)?;
    let target = Matrix::from_rows(vec![s[0].to_vec(), s[1].to_vec()]);
    Ok(v.mul(&v_inv) == Matrix::identity(2)
        && v.inverse()? == v_inv
        && conj(&sigma) == target
        && conj(&yi) == Matrix::diagonal(vec![a.clone(), b.clone()])
        && conj(&yj) == Matrix::diagonal(vec![b.clone(), a.clone()]))
}

/// rho_lambda(e) is the matrix unit at the record's tableau when lambda is
/// the record's shape, and zero for every other shape of the same size.
pub fn matrix_unit_check<C: Coefficient>(rep: &SeminormalRep<C>, rec: &IdempotentRecord<C>) -> Result<bool> {
    let m = rep.apply(&rec.element)?;
    if rep.shape() != rec.shape() {
        return Ok(m.is_zero());
    }
    let k = rep.basis.iter().position(|t| t == &rec.tableau).expect("tableau of this shape");
    let mut unit = Matrix::zeros(rep.dim(), rep.dim());
    unit.set(k, k, C::one());
    Ok(m == unit)
}
