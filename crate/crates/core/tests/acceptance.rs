//! The twelve acceptance criteria, run in order with their time budgets.
//! Prints one PASS/FAIL line per criterion and fails if any criterion does.

use std::time::{Duration, Instant};

use hecke_core::idempotents::RankLimits;
use hecke_core::scalar::RatFunc;
use hecke_core::verify::*;
use hecke_core::Hecke;
use rand::rngs::StdRng;
use rand::SeedableRng;

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Duration,
    run: Box<dyn Fn() -> CheckResult>,
}

fn sym() -> Hecke<RatFunc> {
    Hecke::symbolic()
}

const DS: [i32; 3] = [1, 2, 3];

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            name: "defining relations, n <= 5",
            budget: secs(10),
            run: Box::new(|| (2..=5).try_for_each(|n| defining_relations(&sym(), n))),
        },
        Criterion {
            id: 2,
            name: "Jucys-Murphy consistency, n <= 5 symbolic, n = 6 at 3 rational q in (1,2)",
            budget: secs(30),
            run: Box::new(|| {
                (1..=5).try_for_each(|n| jucys_murphy_consistency(&sym(), n))?;
                let mut rng = StdRng::seed_from_u64(2);
                for q0 in random_rationals_in_unit_interval(&mut rng, 3) {
                    jucys_murphy_consistency(&Hecke::at(q0)?, 6)?;
                }
                Ok(())
            }),
        },
        Criterion {
            id: 3,
            name: "intertwiner relations and braid, n <= 4",
            budget: secs(10),
            run: Box::new(|| (2..=4).try_for_each(|n| intertwiner_relations(&sym(), n))),
        },
        Criterion {
            id: 4,
            name: "spectrum strings vs tableaux, n <= 6; H_4 graph",
            budget: secs(10),
            run: Box::new(|| {
                (1..=6).try_for_each(spectrum_combinatorics)?;
                young_graph_h4()
            }),
        },
        Criterion {
            id: 5,
            name: "idempotent resolution, n <= 5, direct products",
            budget: secs(300),
            run: Box::new(|| (1..=5).try_for_each(|n| idempotent_resolution(&sym(), n, true, &RankLimits::default()))),
        },
        Criterion {
            id: 6,
            name: "row, column and 2x2 block actions, n <= 4",
            budget: secs(30),
            run: Box::new(|| (1..=4).try_for_each(|n| block_actions(&sym(), n))),
        },
        Criterion {
            id: 7,
            name: "conditional expectation axioms on random elements, m <= 4",
            budget: secs(30),
            run: Box::new(|| {
                let h = sym();
                let mut rng = StdRng::seed_from_u64(7);
                for d in DS {
                    expectation_examples(&h, d)?;
                    (0..=4).try_for_each(|m| trace_axiom_suite(&h, m, d, 3, &mut rng))?;
                }
                Ok(())
            }),
        },
        Criterion {
            id: 8,
            name: "traces of idempotents = closed qdim, |lambda| <= 5, d in {1,2,3}",
            budget: secs(300),
            run: Box::new(|| DS.iter().try_for_each(|&d| qdim_suite(&sym(), 5, d))),
        },
        Criterion {
            id: 9,
            name: "projector traces and qdim recurrence, |lambda| <= 4",
            budget: secs(60),
            run: Box::new(|| DS.iter().try_for_each(|&d| recurrence_suite(&sym(), 4, d))),
        },
        Criterion {
            id: 10,
            name: "generating identity through tau^6, |lambda| <= 4",
            budget: secs(60),
            run: Box::new(|| DS.iter().try_for_each(|&d| generating_suite(&sym(), 4, d, 6))),
        },
        Criterion {
            id: 11,
            name: "resolvent identities and Z recurrence in seminormal reps, |lambda| <= 4",
            budget: secs(60),
            run: Box::new(|| DS.iter().try_for_each(|&d| resolvent_suite(&sym(), 4, d, 19))),
        },
        Criterion {
            id: 12,
            name: "representation audit",
            budget: secs(60),
            run: Box::new(|| {
                let h = sym();
                (1..=5).try_for_each(|n| rep_relations(&h, n))?;
                (1..=8).try_for_each(|n| rep_dimensions(&h, n))?;
                (1..=4).try_for_each(|n| matrix_units(&h, n))?;
                let mut rng = StdRng::seed_from_u64(12);
                DS.iter().try_for_each(|&d| trace_consistency(&h, 3, d, 3, &mut rng))
            }),
        },
    ]
}

#[test]
fn acceptance() {
    let mut failures = Vec::new();
    for c in criteria() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= c.budget) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over budget {:?})", c.budget),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        println!("criterion {:>2}: {verdict} [{:.2?}] {}", c.id, elapsed, c.name);
        if !verdict.starts_with("PASS") {
            failures.push(c.id);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
