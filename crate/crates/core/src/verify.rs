//! Invariant suites over the whole library. Each check returns
//! `Err(CheckError::Violated(..))` naming the identity and the first place it
//! fails; arithmetic errors pass through as `CheckError::Error`.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::error::Error;
use crate::hecke::{Hecke, HeckeElement};
use crate::idempotents::{
    block_action_check, branching_annihilator_check, eigen_check, orthogonality_check, orthogonality_check_direct,
    resolution_levels, sum_is_one, RankLimits,
};
use crate::perm::Permutation;
use crate::scalar::Coefficient;
use crate::seminormal::{build_rep, matrix_unit_check, rep_dimension_audit, similarity_check};
use crate::tableaux::{all_standard, bijections, young_graph, ContentString, YoungDiagram};
use crate::trace::{
    conditional_expectation, default_t_samples, generating_identity_check, ocneanu_trace, projector_trace_check,
    qdim_closed, qdim_recurrence_check, qdim_via_trace, resolvent_identities_with, resolvent_trace, spectral_trace,
    trace_axioms, TraceContext,
};

#[derive(Debug)]
pub enum CheckError {
    Violated(String),
    Error(Error),
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::Violated(s) => write!(f, "violated: {s}"),
            CheckError::Error(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<Error> for CheckError {
    fn from(e: Error) -> Self {
        CheckError::Error(e)
    }
}

pub type CheckResult = std::result::Result<(), CheckError>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> CheckResult {
    if ok {
        Ok(())
    } else {
        Err(CheckError::Violated(what()))
    }
}

/// A random element of H_n: `terms` basis words with coefficients
/// +-k q^e, 1 <= k <= 3, |e| <= 2.
pub fn random_element<C: Coefficient>(h: &Hecke<C>, rng: &mut StdRng, n: usize, terms: usize) -> HeckeElement<C> {
    let mut x = HeckeElement::zero(n);
    for _ in 0..terms {
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        let w = Permutation::from_images(&images).expect("shuffled identity");
        let k = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let c = C::from_i64(k).mul_ref(&h.q_pow(rng.gen_range(-2..=2)));
        x = x.add(&HeckeElement::from_terms(n, [(w, c)])).expect("same rank");
    }
    x
}

/// `count` distinct rationals a/b in (1, 2) with b <= 30.
pub fn random_rationals_in_unit_interval(rng: &mut StdRng, count: usize) -> Vec<BigRational> {
    let mut seen = BTreeSet::new();
    while seen.len() < count {
        let b: i64 = rng.gen_range(2..=30);
        let a: i64 = rng.gen_range(1..b);
        seen.insert(BigRational::new((a + b).into(), b.into()));
    }
    seen.into_iter().collect()
}

/// Quadratic, braid and far-commutation relations of the generators of H_n.
pub fn defining_relations<C: Coefficient>(h: &Hecke<C>, n: usize) -> CheckResult {
    let one = HeckeElement::one(n);
    for i in 1..n {
        let s = h.generator(i, n)?;
        let lhs = h.mul(&s, &s)?;
        ensure(lhs == one.add(&s.scale(h.delta()))?, || format!("quadratic relation at s{i}, n={n}"))?;
        ensure(h.mul(&s, &h.inverse_generator(i, n)?)? == one, || format!("s{i} s{i}^-1 = 1, n={n}"))?;
        for j in i + 1..n {
            let t = h.generator(j, n)?;
            if j == i + 1 {
                let l = h.product(&[&s, &t, &s])?;
                let r = h.product(&[&t, &s, &t])?;
                ensure(l == r, || format!("braid relation s{i} s{j}, n={n}"))?;
            } else {
                ensure(h.commutator(&s, &t)?.is_zero(), || format!("far commutation s{i} s{j}, n={n}"))?;
            }
        }
    }
    Ok(())
}

/// Sum and recursive forms of every y_i agree, the y_i commute pairwise and
/// the sums and products of y_2..y_n commute with every generator.
pub fn jucys_murphy_consistency<C: Coefficient>(h: &Hecke<C>, n: usize) -> CheckResult {
    let mut ys = Vec::new();
    for i in 1..=n {
        let y = h.jucys_murphy(i, n)?;
        ensure(y == h.jucys_murphy_recursive(i, n)?, || format!("sum and recursive forms of y{i}, n={n}"))?;
        ys.push(y);
    }
    for i in 0..n {
        for j in i + 1..n {
            ensure(h.commutator(&ys[i], &ys[j])?.is_zero(), || format!("[y{}, y{}] = 0, n={n}", i + 1, j + 1))?;
        }
    }
    if n >= 2 {
        let mut sum = HeckeElement::zero(n);
        let mut prod = HeckeElement::one(n);
        for y in &ys[1..] {
            sum = sum.add(y)?;
            prod = h.mul(&prod, y)?;
        }
        for k in 1..n {
            let s = h.generator(k, n)?;
            ensure(h.commutator(&s, &sum)?.is_zero(), || format!("[s{k}, y2 + .. + y{n}] = 0"))?;
            ensure(h.commutator(&s, &prod)?.is_zero(), || format!("[s{k}, y2 .. y{n}] = 0"))?;
        }
    }
    Ok(())
}

/// U_{m+1} y_m = y_{m+1} U_{m+1}, U_{m+1} y_{m+1} = y_m U_{m+1},
/// [U_{m+1}, y_k] = 0 otherwise, U_{m+1}^2 = (q y_m - q^-1 y_{m+1})(q y_{m+1} - q^-1 y_m),
/// and U_m U_{m+1} U_m = U_{m+1} U_m U_{m+1}.
pub fn intertwiner_relations<C: Coefficient>(h: &Hecke<C>, n: usize) -> CheckResult {
    let ys: Vec<_> = (1..=n).map(|i| h.jucys_murphy(i, n)).collect::<Result<_, _>>()?;
    let us: Vec<_> = (1..n).map(|m| h.intertwiner(m, n)).collect::<Result<_, _>>()?;
    let q = h.q();
    let qi = h.q_pow(-1);
    for m in 1..n {
        let u = &us[m - 1];
        let (ym, yn) = (&ys[m - 1], &ys[m]);
        ensure(h.mul(u, ym)? == h.mul(yn, u)?, || format!("U{} y{m} = y{} U{}", m + 1, m + 1, m + 1))?;
        ensure(h.mul(u, yn)? == h.mul(ym, u)?, || format!("U{} y{} = y{m} U{}", m + 1, m + 1, m + 1))?;
        for (k, y) in ys.iter().enumerate() {
            if k + 1 != m && k + 1 != m + 1 {
                ensure(h.commutator(u, y)?.is_zero(), || format!("[U{}, y{}] = 0", m + 1, k + 1))?;
            }
        }
        let a = ym.scale(q).sub(&yn.scale(&qi))?;
        let b = yn.scale(q).sub(&ym.scale(&qi))?;
        ensure(h.mul(u, u)? == h.mul(&a, &b)?, || format!("U{}^2 factorization, n={n}", m + 1))?;
    }
    for m in 1..n.saturating_sub(1) {
        let (a, b) = (&us[m - 1], &us[m]);
        let l = h.product(&[a, b, a])?;
        let r = h.product(&[b, a, b])?;
        ensure(l == r, || format!("U{} U{} U{} braid relation, n={n}", m + 1, m + 2, m + 1))?;
    }
    Ok(())
}

/// Every string with m_i in 1-i..i-1 is accepted by the validator exactly
/// when it is the content string of a standard tableau, and the tableau,
/// string and path correspondences are mutually inverse.
pub fn spectrum_combinatorics(n: usize) -> CheckResult {
    let expected: BTreeSet<ContentString> = all_standard(n).iter().map(|t| t.content_string()).collect();
    let mut accepted = BTreeSet::new();
    let mut current: Vec<i32> = (0..n).map(|k| -(k as i32)).collect();
    loop {
        let s = ContentString(current.clone());
        if s.validate().is_ok() {
            ensure(!has_forbidden_pattern(&s.0), || format!("accepted string {s} contains z, z+-1, z"))?;
            accepted.insert(s);
        }
        // odometer over the bounded ranges
        let mut k = n;
        loop {
            if k == 0 {
                ensure(accepted == expected, || format!("validator and tableau strings differ at n={n}"))?;
                let b = bijections(n);
                return ensure(b.consistent && b.path_count == expected.len(), || {
                    format!("tableau/string/path bijection at n={n}")
                });
            }
            k -= 1;
            let bound = k as i32;
            if current[k] < bound {
                current[k] += 1;
                break;
            }
            current[k] = -bound;
        }
    }
}

fn has_forbidden_pattern(s: &[i32]) -> bool {
    s.windows(3).any(|w| w[0] == w[2] && (w[1] - w[0]).abs() == 1)
}

/// The level-4 graph: ten maximal paths and edge colours exactly
/// 1, q^{+-2}, q^{+-4}, q^{+-6}.
pub fn young_graph_h4() -> CheckResult {
    let g = young_graph(4);
    ensure(g.maximal_paths().len() == 10, || "ten paths to level 4".into())?;
    let colours: BTreeSet<i32> = g.edges.iter().map(|e| e.colour).collect();
    ensure(colours == (-3..=3).collect(), || format!("edge colours {colours:?}"))?;
    let from = YoungDiagram::new(vec![2, 1])?;
    let to = YoungDiagram::new(vec![3, 1])?;
    ensure(g.edge_colour(&from, &to) == Some(2), || "edge (2,1) -> (3,1) carries q^4".into())
}

/// Completeness, orthogonality and eigenvalue relations of the resolution
/// of H_n, and the branching annihilator of every record. `direct` forms
/// every product e_a e_b by full multiplication.
pub fn idempotent_resolution<C: Coefficient>(h: &Hecke<C>, n: usize, direct: bool, limits: &RankLimits) -> CheckResult {
    let levels = resolution_levels(h, n, limits)?;
    let recs = &levels[n];
    ensure(recs.len() == all_standard(n).len(), || format!("one idempotent per tableau, n={n}"))?;
    ensure(sum_is_one(recs, n), || format!("sum of idempotents = 1, n={n}"))?;
    let orth = if direct { orthogonality_check_direct(h, recs)? } else { orthogonality_check(h, recs)? };
    ensure(orth, || format!("e_a e_b = delta_ab e_a, n={n}"))?;
    for rec in recs {
        ensure(eigen_check(h, rec)?, || format!("y_i e = q^(2m_i) e for {}", rec.tableau))?;
        ensure(branching_annihilator_check(h, rec)?, || format!("branching annihilator for {}", rec.tableau))?;
    }
    Ok(())
}

/// Row, column and two-dimensional block actions on every idempotent of H_n.
pub fn block_actions<C: Coefficient>(h: &Hecke<C>, n: usize) -> CheckResult {
    for rec in &resolution_levels(h, n, &RankLimits::default())?[n] {
        ensure(block_action_check(h, rec)?, || format!("block action near {}", rec.tableau))?;
    }
    let (a, b) = (h.q_pow(2), h.q_pow(-2));
    ensure(similarity_check(h, &a, &b)?, || "triangular to diagonal similarity".into())
}

/// The five properties of Tr_{d(m+1)} on `samples` random triples
/// X, Y in H_m, Z in H_{m+1}.
pub fn trace_axiom_suite<C: Coefficient>(
    h: &Hecke<C>,
    m: usize,
    d: i32,
    samples: usize,
    rng: &mut StdRng,
) -> CheckResult {
    const NAMES: [&str; 5] = [
        "Tr(X) = z_d X",
        "Tr(X Z Y) = X Tr(Z) Y",
        "Tr(s^+-1 X s^-+1) = Tr(X)",
        "Tr(s_m) = 1",
        "Tr Tr(s_m Z) = Tr Tr(Z s_m)",
    ];
    let ctx = TraceContext::new(h, d);
    for _ in 0..samples {
        let x = random_element(h, rng, m, 3);
        let y = random_element(h, rng, m, 3);
        let z = random_element(h, rng, m + 1, 4);
        let res = trace_axioms(h, &x, &y, &z, &ctx)?;
        if let Some(k) = res.iter().position(|ok| !ok) {
            return Err(CheckError::Violated(format!("{} at m={m}, d={d}", NAMES[k])));
        }
    }
    let z_pow = (0..m).fold(C::one(), |acc, _| acc.mul_ref(&ctx.z_d));
    ensure(ocneanu_trace(h, &HeckeElement::one(m), &ctx)? == z_pow, || format!("Tr(1) = z_d^{m}"))
}

/// For every shape of size <= n: every tableau of the shape has the same
/// Ocneanu trace, equal to the closed hook-content formula.
pub fn qdim_suite<C: Coefficient>(h: &Hecke<C>, n: usize, d: i32) -> CheckResult {
    let ctx = TraceContext::new(h, d);
    ensure(qdim_closed(h, &YoungDiagram::new(vec![1])?, d) == ctx.z_d, || format!("qdim(1) = z_{d}"))?;
    let levels = resolution_levels(h, n, &RankLimits::default())?;
    for (k, recs) in levels.iter().enumerate().skip(1) {
        for shape in YoungDiagram::all(k) {
            let vals = qdim_via_trace(h, recs, &shape, &ctx)?;
            let closed = qdim_closed(h, &shape, d);
            ensure(vals.iter().all(|v| v == &vals[0]), || format!("equal traces over tableaux of {shape}, d={d}"))?;
            ensure(vals[0] == closed, || format!("trace = closed qdim for {shape}, d={d}"))?;
        }
    }
    Ok(())
}

/// Projector traces and the qdim recurrence at every corner of every
/// record of size <= n.
pub fn recurrence_suite<C: Coefficient>(h: &Hecke<C>, n: usize, d: i32) -> CheckResult {
    let ctx = TraceContext::new(h, d);
    for recs in &resolution_levels(h, n, &RankLimits::default())? {
        for rec in recs {
            for j in 0..rec.shape().addable_corners().len() {
                ensure(qdim_recurrence_check(h, rec.shape(), j, d)?, || {
                    format!("qdim recurrence at {} corner {j}, d={d}", rec.shape())
                })?;
            }
            ensure(projector_trace_check(h, rec, &ctx)?, || format!("projector traces for {}, d={d}", rec.tableau))?;
        }
    }
    Ok(())
}

/// The generating identity through tau^order on every record of size <= n.
pub fn generating_suite<C: Coefficient>(h: &Hecke<C>, n: usize, d: i32, order: usize) -> CheckResult {
    let ctx = TraceContext::new(h, d);
    for recs in &resolution_levels(h, n, &RankLimits::default())? {
        for rec in recs {
            ensure(generating_identity_check(h, rec, &ctx, order)?, || {
                format!("generating identity for {}, d={d}", rec.tableau)
            })?;
        }
    }
    Ok(())
}

/// Resolvent identities and the Z recurrence and closed form in every
/// seminormal representation of size <= n, for every admissible m, at
/// `samples` points t = 2, 3, ... Each identity must also be certified by
/// the sample count.
pub fn resolvent_suite<C: Coefficient>(h: &Hecke<C>, n: usize, d: i32, samples: usize) -> CheckResult {
    let ctx = TraceContext::new(h, d);
    let ts = default_t_samples(samples);
    let zs: Vec<_> = (1..=n + 1).map(|m| resolvent_trace(h, m, &ctx)).collect::<Result<_, _>>()?;
    for k in 1..=n {
        for shape in YoungDiagram::all(k) {
            for m in 1..=k {
                for o in resolvent_identities_with(h, &shape, m, &ts, &ctx, &zs[m], &zs[m - 1])? {
                    ensure(o.held, || format!("{} in rho_{shape}, m={m}, d={d}", o.name))?;
                    ensure(o.certified(samples), || format!("{} needs {} samples, got {samples}", o.name, o.needed))?;
                }
            }
        }
    }
    Ok(())
}

/// Relations in every representation of size n.
pub fn rep_relations<C: Coefficient>(h: &Hecke<C>, n: usize) -> CheckResult {
    for shape in YoungDiagram::all(n) {
        let rep = build_rep(h, &shape)?;
        ensure(rep.relation_check(h), || format!("defining relations in rho_{shape}"))?;
        ensure(rep.jm_check(h), || format!("diagonal y_i in rho_{shape}"))?;
    }
    Ok(())
}

pub fn rep_dimensions<C: Coefficient>(h: &Hecke<C>, n: usize) -> CheckResult {
    ensure(rep_dimension_audit(h, n)?, || format!("sum of squared dimensions = {n}!"))
}

/// rho_mu(e) is the matrix unit of e's tableau for mu = shape(e), zero otherwise.
pub fn matrix_units<C: Coefficient>(h: &Hecke<C>, n: usize) -> CheckResult {
    let recs = &resolution_levels(h, n, &RankLimits::default())?[n];
    for shape in YoungDiagram::all(n) {
        let rep = build_rep(h, &shape)?;
        for rec in recs {
            ensure(matrix_unit_check(&rep, rec)?, || format!("rho_{shape}({}) matrix unit", rec.tableau))?;
        }
    }
    Ok(())
}

/// Tr(x) = sum_lambda qdim(lambda) tr rho_lambda(x) for random x in H_n.
pub fn trace_consistency<C: Coefficient>(
    h: &Hecke<C>,
    n: usize,
    d: i32,
    samples: usize,
    rng: &mut StdRng,
) -> CheckResult {
    let ctx = TraceContext::new(h, d);
    for _ in 0..samples {
        let x = random_element(h, rng, n, 5);
        ensure(ocneanu_trace(h, &x, &ctx)? == spectral_trace(h, &x, d)?, || {
            format!("spectral decomposition of the trace, n={n}, d={d}")
        })?;
    }
    Ok(())
}

/// Tr_{d(m+1)}(1), Tr(s_m), Tr(s_m^-1) on H_2.
pub fn expectation_examples<C: Coefficient>(h: &Hecke<C>, d: i32) -> CheckResult {
    let ctx = TraceContext::new(h, d);
    let e = |x: &HeckeElement<C>| conditional_expectation(h, x, &ctx);
    ensure(e(&HeckeElement::one(2))? == HeckeElement::scalar(1, ctx.z_d.clone()), || "Tr(1) = z_d".into())?;
    ensure(e(&h.generator(1, 2)?)? == HeckeElement::one(1), || "Tr(s_1) = 1".into())?;
    let expected = C::one().sub_ref(&h.delta().mul_ref(&ctx.z_d));
    ensure(e(&h.inverse_generator(1, 2)?)? == HeckeElement::scalar(1, expected), || "Tr(s_1^-1)".into())
}

/// One suite entry of [`run_suite`].
#[derive(Debug)]
pub struct SuiteEntry {
    pub name: &'static str,
    pub outcome: CheckResult,
    pub elapsed: Duration,
}

fn timed(name: &'static str, f: impl FnOnce() -> CheckResult) -> SuiteEntry {
    let start = Instant::now();
    let outcome = f();
    SuiteEntry { name, outcome, elapsed: start.elapsed() }
}

/// Everything above at rank n and trace parameter d: algebra checks up to
/// n, trace and representation checks up to n as well, capped where the
/// derived elements would leave the configured limits. Deterministic for a
/// given seed.
pub fn run_suite<C: Coefficient>(h: &Hecke<C>, n: usize, d: i32, seed: u64, limits: &RankLimits) -> Vec<SuiteEntry> {
    let mut rng = StdRng::seed_from_u64(seed);
    let cap = if C::SYMBOLIC { limits.symbolic } else { limits.evaluated };
    let res_n = n.min(cap);
    let next = n.min(cap.saturating_sub(1));
    let mut out = Vec::new();
    out.push(timed("defining relations", || (2..=n).try_for_each(|k| defining_relations(h, k))));
    out.push(timed("jucys-murphy consistency", || (1..=n).try_for_each(|k| jucys_murphy_consistency(h, k))));
    out.push(timed("intertwiners", || (2..=n).try_for_each(|k| intertwiner_relations(h, k))));
    out.push(timed("spectrum combinatorics", || {
        (1..=n).try_for_each(spectrum_combinatorics)?;
        if n >= 4 {
            young_graph_h4()?;
        }
        Ok(())
    }));
    out.push(timed("idempotent resolution", || {
        (1..=res_n).try_for_each(|k| idempotent_resolution(h, k, false, limits))
    }));
    out.push(timed("block actions", || (1..=res_n).try_for_each(|k| block_actions(h, k))));
    out.push(timed("trace axioms", || {
        expectation_examples(h, d)?;
        (0..n).try_for_each(|m| trace_axiom_suite(h, m, d, 3, &mut rng))
    }));
    out.push(timed("qdim via trace", || qdim_suite(h, res_n, d)));
    out.push(timed("qdim recurrence and projector traces", || recurrence_suite(h, next, d)));
    out.push(timed("generating identity", || generating_suite(h, next, d, 6)));
    out.push(timed("resolvent identities", || resolvent_suite(h, n.min(4), d, 4 * n.min(4) + 3)));
    out.push(timed("representations", || {
        (1..=n).try_for_each(|k| rep_relations(h, k).and_then(|_| rep_dimensions(h, k)))?;
        (1..=res_n).try_for_each(|k| matrix_units(h, k))?;
        trace_consistency(h, n.min(3), d, 2, &mut rng)
    }));
    out
}
