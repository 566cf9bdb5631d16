//! Primitive orthogonal idempotents of H_n built from Jucys-Murphy elements
//! along the branching graph.
//!
//! A record for a tableau of shape lambda with m nodes is extended by one
//! node at corner j by
//!
//!   e' = e * prod_{r != j} (y_{m+1} - q^{2 c_r}) / (q^{2 c_j} - q^{2 c_r}),
//!
//! where c_r runs over the contents of the addable corners of lambda.
//! Starting from e = 1 in H_0 this produces one idempotent per standard
//! tableau. Each record keeps the linear factors it was built from, so
//! products x * e can be formed one factor at a time.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hecke::{Hecke, HeckeElement};
use crate::perm::MAX_RANK;
use crate::scalar::Coefficient;
use crate::seminormal::ah1_block;
use crate::tableaux::{ContentString, StandardTableau, YoungDiagram};

/// Largest ranks for which the resolution is built, per coefficient mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankLimits {
    pub symbolic: usize,
    pub evaluated: usize,
}

impl Default for RankLimits {
    fn default() -> Self {
        Self { symbolic: 5, evaluated: 6 }
    }
}

impl RankLimits {
    pub fn check<C: Coefficient>(&self, n: usize) -> Result<()> {
        if C::SYMBOLIC && n > self.symbolic {
            return Err(Error::RankLimit {
                rank: n,
                limit: self.symbolic,
                mode: "symbolic",
                hint: "; rerun in evaluated-q mode (--mode evaluated --q <rational>)",
            });
        }
        if !C::SYMBOLIC && n > self.evaluated {
            return Err(Error::RankLimit { rank: n, limit: self.evaluated, mode: "evaluated-q", hint: "" });
        }
        Ok(())
    }
}

/// One linear-factor block of an idempotent: prod_r (y_level - roots[r]) * scale.
#[derive(Clone, Debug, PartialEq)]
pub struct Branch<C> {
    pub level: usize,
    pub roots: Vec<C>,
    pub scale: C,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentRecord<C> {
    pub tableau: StandardTableau,
    pub element: HeckeElement<C>,
    pub eigenvalues: ContentString,
    branches: Vec<Branch<C>>,
}

impl<C: Coefficient> IdempotentRecord<C> {
    /// e = 1 in H_0, for the empty tableau.
    pub fn root() -> Self {
        Self {
            tableau: StandardTableau::from_rows(Vec::new()).expect("empty tableau"),
            element: HeckeElement::one(0),
            eigenvalues: ContentString(Vec::new()),
            branches: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.element.rank()
    }

    pub fn shape(&self) -> &YoungDiagram {
        self.tableau.shape()
    }

    pub fn branches(&self) -> &[Branch<C>] {
        &self.branches
    }

    pub fn to_json(&self) -> Value {
        json!({
            "tableau": self.tableau.to_json(),
            "eigenvalues": self.eigenvalues.to_json(),
            "element": self.element.to_json(),
        })
    }
}

/// q^{2m}, the Jucys-Murphy eigenvalue for content m.
pub fn eigenvalue<C: Coefficient>(h: &Hecke<C>, m: i32) -> C {
    h.q_pow(2 * m)
}

pub fn extend_idempotent<C: Coefficient>(
    h: &Hecke<C>,
    rec: &IdempotentRecord<C>,
    j: usize,
) -> Result<IdempotentRecord<C>> {
    let m = rec.rank();
    if m + 1 > MAX_RANK {
        return Err(Error::RankUnsupported(m + 1));
    }
    let corners = rec.shape().addable_corners();
    let chosen = corners.get(j).ok_or(Error::NotAddable { index: j, count: corners.len() })?;
    let mu = eigenvalue(h, chosen.content);
    let roots: Vec<C> =
        corners.iter().enumerate().filter(|&(r, _)| r != j).map(|(_, c)| eigenvalue(h, c.content)).collect();
    let mut norm = C::one();
    for r in &roots {
        norm = norm.mul_ref(&mu.sub_ref(r));
    }
    let scale = norm.inv().map_err(|_| Error::NonGenericQ(h.q().to_string()))?;
    let lifted = rec.element.promote(m + 1);
    let element = h.mul_jm_polynomial(&lifted, m + 1, &roots)?.scale(&scale);

    let mut eigenvalues = rec.eigenvalues.clone();
    eigenvalues.0.push(chosen.content);
    let mut branches = rec.branches.clone();
    branches.push(Branch { level: m + 1, roots, scale });
    Ok(IdempotentRecord { tableau: rec.tableau.extend(chosen.row)?, element, eigenvalues, branches })
}

fn order_key(rec: &IdempotentRecord<impl Coefficient>) -> impl Ord {
    (std::cmp::Reverse(rec.shape().clone()), std::cmp::Reverse(rec.eigenvalues.clone()))
}

/// Records for every level 0..=n, each level in the tableau order of
/// [`crate::tableaux::all_standard`]. Parents are shared between siblings.
pub fn resolution_levels<C: Coefficient>(
    h: &Hecke<C>,
    n: usize,
    limits: &RankLimits,
) -> Result<Vec<Vec<IdempotentRecord<C>>>> {
    limits.check::<C>(n)?;
    let mut levels = vec![vec![IdempotentRecord::root()]];
    for _ in 0..n {
        let mut next = Vec::new();
        for parent in levels.last().unwrap() {
            for j in 0..parent.shape().addable_corners().len() {
                next.push(extend_idempotent(h, parent, j)?);
            }
        }
        next.sort_by_cached_key(order_key);
        levels.push(next);
    }
    Ok(levels)
}

/// The complete system of primitive idempotents of H_n, one per standard
/// tableau with n nodes.
pub fn resolution<C: Coefficient>(h: &Hecke<C>, n: usize) -> Result<Vec<IdempotentRecord<C>>> {
    resolution_with_limits(h, n, &RankLimits::default())
}

pub fn resolution_with_limits<C: Coefficient>(
    h: &Hecke<C>,
    n: usize,
    limits: &RankLimits,
) -> Result<Vec<IdempotentRecord<C>>> {
    Ok(resolution_levels(h, n, limits)?.pop().unwrap())
}

/// The idempotent of a single tableau, built along its own path.
pub fn idempotent_of<C: Coefficient>(h: &Hecke<C>, t: &StandardTableau) -> Result<IdempotentRecord<C>> {
    let mut rec = IdempotentRecord::root();
    for i in 1..=t.size() {
        let row = t.position(i).0;
        let j = rec.shape().addable_corners().iter().position(|c| c.row == row).expect("standard tableau");
        rec = extend_idempotent(h, &rec, j)?;
    }
    Ok(rec)
}

/// x * e, applying the branch factors of `rec` one by one.
pub fn factored_product<C: Coefficient>(
    h: &Hecke<C>,
    x: &HeckeElement<C>,
    rec: &IdempotentRecord<C>,
) -> Result<HeckeElement<C>> {
    let mut acc = x.clone();
    for b in &rec.branches {
        if acc.is_zero() {
            break;
        }
        acc = h.mul_jm_polynomial(&acc, b.level, &b.roots)?.scale(&b.scale);
    }
    Ok(acc)
}

pub fn sum_is_one<C: Coefficient>(recs: &[IdempotentRecord<C>], n: usize) -> bool {
    let mut total = HeckeElement::zero(n);
    for r in recs {
        total = total.add(&r.element).expect("records share a rank");
    }
    total == HeckeElement::one(n)
}

/// e_a e_b = delta_ab e_a for all pairs, with the products formed factor by
/// factor.
pub fn orthogonality_check<C: Coefficient>(h: &Hecke<C>, recs: &[IdempotentRecord<C>]) -> Result<bool> {
    for (a, ra) in recs.iter().enumerate() {
        for (b, rb) in recs.iter().enumerate() {
            let p = factored_product(h, &ra.element, rb)?;
            let ok = if a == b { p == ra.element } else { p.is_zero() };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Same as [`orthogonality_check`] with every product taken by full
/// multiplication in the basis {T_w}.
pub fn orthogonality_check_direct<C: Coefficient>(h: &Hecke<C>, recs: &[IdempotentRecord<C>]) -> Result<bool> {
    for (a, ra) in recs.iter().enumerate() {
        for (b, rb) in recs.iter().enumerate() {
            let p = h.mul(&ra.element, &rb.element)?;
            let ok = if a == b { p == ra.element } else { p.is_zero() };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// y_i e = e y_i = q^{2 m_i} e for every i, with every m_i inside the
/// range 1-i..i-1.
pub fn eigen_check<C: Coefficient>(h: &Hecke<C>, rec: &IdempotentRecord<C>) -> Result<bool> {
    let e = &rec.element;
    for (k, &m) in rec.eigenvalues.0.iter().enumerate() {
        let i = k + 1;
        if m.unsigned_abs() as usize >= i {
            return Ok(false);
        }
        let expected = e.scale(&eigenvalue(h, m));
        if h.mul_jucys_murphy(e, i)? != expected || h.jucys_murphy_mul(i, e)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// e * prod over all addable corners (y_{m+1} - q^{2 c_r}) = 0.
pub fn branching_annihilator_check<C: Coefficient>(h: &Hecke<C>, rec: &IdempotentRecord<C>) -> Result<bool> {
    let m = rec.rank();
    let roots: Vec<C> = rec.shape().addable_corners().iter().map(|c| eigenvalue(h, c.content)).collect();
    Ok(h.mul_jm_polynomial(&rec.element.promote(m + 1), m + 1, &roots)?.is_zero())
}

/// P_j = e * Pi_j for each addable corner j, as child records.
pub fn spectral_projectors<C: Coefficient>(
    h: &Hecke<C>,
    rec: &IdempotentRecord<C>,
) -> Result<Vec<IdempotentRecord<C>>> {
    (0..rec.shape().addable_corners().len()).map(|j| extend_idempotent(h, rec, j)).collect()
}

/// sum_j P_j = e, P_j P_k = delta_jk P_j and y_{m+1} P_j = mu_j P_j.
pub fn projector_check<C: Coefficient>(h: &Hecke<C>, rec: &IdempotentRecord<C>) -> Result<bool> {
    let m = rec.rank();
    let ps = spectral_projectors(h, rec)?;
    let mut total = HeckeElement::zero(m + 1);
    for p in &ps {
        total = total.add(&p.element)?;
    }
    if total != rec.element.promote(m + 1) {
        return Ok(false);
    }
    for (j, pj) in ps.iter().enumerate() {
        let mu = eigenvalue(h, *pj.eigenvalues.0.last().unwrap());
        if h.jucys_murphy_mul(m + 1, &pj.element)? != pj.element.scale(&mu) {
            return Ok(false);
        }
        for (k, pk) in ps.iter().enumerate() {
            let prod = h.mul(&pj.element, &pk.element)?;
            let ok = if j == k { prod == pj.element } else { prod.is_zero() };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the two-dimensional block check at one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockCase {
    /// sigma_i e = q e (i, i+1 in one row).
    Row,
    /// sigma_i e = -q^-1 e (i, i+1 in one column).
    Column,
    /// sigma_i, y_i, y_{i+1} act on (e, sigma_i e + c e) by the 2x2 block.
    Pair,
}

/// Checks the left action of sigma_i, y_i, y_{i+1} near e for one i.
pub fn block_check<C: Coefficient>(h: &Hecke<C>, rec: &IdempotentRecord<C>, i: usize) -> Result<(BlockCase, bool)> {
    let e = &rec.element;
    let m = &rec.eigenvalues.0;
    let (mi, mj) = (m[i - 1], m[i]);
    let sigma_e = h.generator_mul(i, e)?;
    if mj == mi + 1 {
        return Ok((BlockCase::Row, sigma_e == e.scale(h.q())));
    }
    if mj == mi - 1 {
        return Ok((BlockCase::Column, sigma_e == e.scale(&h.q_pow(-1).neg_ref())));
    }
    let (a, b) = (eigenvalue(h, mi), eigenvalue(h, mj));
    let c = h.delta().mul_ref(&b).div_ref(&a.sub_ref(&b))?;
    let v1 = e.clone();
    let v2 = sigma_e.add(&e.scale(&c))?;
    let s = ah1_block(h, &a, &b)?;
    // column convention: sigma v_k = sum_l s[l][k] v_l
    let combo = |x: &C, y: &C| v1.scale(x).add(&v2.scale(y));
    let mut ok = !v2.is_zero();
    ok &= h.generator_mul(i, &v1)? == combo(&s[0][0], &s[1][0])?;
    ok &= h.generator_mul(i, &v2)? == combo(&s[0][1], &s[1][1])?;
    ok &= h.jucys_murphy_mul(i, &v1)? == v1.scale(&a);
    ok &= h.jucys_murphy_mul(i, &v2)? == v2.scale(&b);
    ok &= h.jucys_murphy_mul(i + 1, &v1)? == v1.scale(&b);
    ok &= h.jucys_murphy_mul(i + 1, &v2)? == v2.scale(&a);
    let mut swapped = rec.eigenvalues.clone();
    swapped.0.swap(i - 1, i);
    ok &= swapped.validate().is_ok();
    Ok((BlockCase::Pair, ok))
}

/// Runs [`block_check`] for every generator; true when all pass.
pub fn block_action_check<C: Coefficient>(h: &Hecke<C>, rec: &IdempotentRecord<C>) -> Result<bool> {
    for i in 1..rec.rank() {
        if !block_check(h, rec, i)?.1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RatFunc;
    use crate::tableaux::{all_standard, YoungDiagram};
    use num_rational::BigRational;

    fn h() -> Hecke<RatFunc> {
        Hecke::symbolic()
    }

    #[test]
    fn rank_two_idempotents() {
        let h = h();
        let recs = resolution(&h, 2).unwrap();
        assert_eq!(recs.len(), 2);
        let s1 = h.generator(1, 2).unwrap();
        let qi = HeckeElement::scalar(2, RatFunc::q_pow(-1));
        let q = HeckeElement::scalar(2, RatFunc::q());
        let norm = h.quantum_int(2).inv().unwrap();
        let row = s1.add(&qi).unwrap().scale(&norm);
        let col = q.sub(&s1).unwrap().scale(&norm);
        assert_eq!(recs[0].tableau.to_string(), "[[1,2]]");
        assert_eq!(recs[0].element, row);
        assert_eq!(recs[1].element, col);
        assert!(sum_is_one(&recs, 2));
    }

    #[test]
    fn initial_datum() {
        let h = h();
        let recs = resolution(&h, 1).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].element, HeckeElement::one(1));
        assert!(branching_annihilator_check(&h, &IdempotentRecord::root()).unwrap());
    }

    #[test]
    fn rank_three_resolution() {
        let h = h();
        let recs = resolution(&h, 3).unwrap();
        assert_eq!(recs.len(), 4);
        assert!(sum_is_one(&recs, 3));
        assert!(orthogonality_check_direct(&h, &recs).unwrap());
        assert!(orthogonality_check(&h, &recs).unwrap());
        for r in &recs {
            assert!(eigen_check(&h, r).unwrap());
            assert!(branching_annihilator_check(&h, r).unwrap());
            assert!(block_action_check(&h, r).unwrap());
        }
    }

    #[test]
    fn rank_four_resolution() {
        let h = h();
        let recs = resolution(&h, 4).unwrap();
        assert_eq!(recs.len(), 10);
        assert!(sum_is_one(&recs, 4));
        assert!(orthogonality_check_direct(&h, &recs).unwrap());
        assert!(orthogonality_check(&h, &recs).unwrap());
        let tableaux: Vec<_> = all_standard(4);
        for (r, t) in recs.iter().zip(&tableaux) {
            assert_eq!(&r.tableau, t);
            assert_eq!(r.eigenvalues, t.content_string());
            assert!(eigen_check(&h, r).unwrap());
            assert!(block_action_check(&h, r).unwrap());
        }
    }

    #[test]
    fn annihilators_on_pairs() {
        let h = h();
        let recs = resolution(&h, 2).unwrap();
        let row = &recs[0];
        let roots = [eigenvalue(&h, 2), eigenvalue(&h, -1)];
        assert!(h.mul_jm_polynomial(&row.element.promote(3), 3, &roots).unwrap().is_zero());
        let col = &recs[1];
        let roots = [eigenvalue(&h, -2), eigenvalue(&h, 1)];
        assert!(h.mul_jm_polynomial(&col.element.promote(3), 3, &roots).unwrap().is_zero());
        // dropping a factor leaves a nonzero element
        assert!(!h.mul_jm_polynomial(&col.element.promote(3), 3, &roots[..1]).unwrap().is_zero());
    }

    #[test]
    fn projectors() {
        let h = h();
        let root1 = resolution(&h, 1).unwrap().remove(0);
        let ps = spectral_projectors(&h, &root1).unwrap();
        let total = ps[0].element.add(&ps[1].element).unwrap();
        assert_eq!(total, HeckeElement::one(2));
        for rec in resolution(&h, 2).unwrap() {
            assert!(projector_check(&h, &rec).unwrap());
        }
    }

    #[test]
    fn block_cases() {
        let h = h();
        let recs = resolution(&h, 3).unwrap();
        // [[1,2],[3]] : s1 in a row, s2 pairs with [[1,3],[2]]
        assert_eq!(block_check(&h, &recs[1], 1).unwrap(), (BlockCase::Row, true));
        assert_eq!(block_check(&h, &recs[1], 2).unwrap(), (BlockCase::Pair, true));
        assert_eq!(block_check(&h, &recs[3], 2).unwrap(), (BlockCase::Column, true));
    }

    #[test]
    fn single_tableau_matches_resolution() {
        let h = h();
        let t = StandardTableau::parse("[[1,3],[2,4]]").unwrap();
        let rec = idempotent_of(&h, &t).unwrap();
        let recs = resolution(&h, 4).unwrap();
        assert!(recs.iter().any(|r| r.element == rec.element && r.tableau == t));
    }

    #[test]
    fn symbolic_limit() {
        let h = h();
        let err = resolution(&h, 6).unwrap_err();
        assert!(matches!(err, Error::RankLimit { rank: 6, limit: 5, .. }));
        assert!(err.to_string().contains("evaluated"));
    }

    #[test]
    fn evaluated_mode_agrees() {
        let q0 = BigRational::new(7.into(), 5.into());
        let he = Hecke::at(q0.clone()).unwrap();
        let sym = resolution(&h(), 3).unwrap();
        let ev = resolution(&he, 3).unwrap();
        for (s, e) in sym.iter().zip(&ev) {
            assert_eq!(s.element.eval_at(&q0).unwrap(), e.element);
        }
        assert!(orthogonality_check(&he, &ev).unwrap());
        let shapes: Vec<YoungDiagram> = ev.iter().map(|r| r.shape().clone()).collect();
        assert_eq!(shapes.len(), 4);
    }
}
