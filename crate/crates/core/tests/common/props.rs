//! Randomized property suites, shared by the `properties` test target and
//! the acceptance runner. Each suite runs a fixed number of cases and
//! returns the first counterexample as an error.

use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use rankone::alcove::translate;
use rankone::cartan::{all_selectors, NodeSet, RootSystem};
use rankone::catalog::match_sharp;
use rankone::classifier::{classify, Kind, PolytopeRecord};
use rankone::Q;

pub const CASES: u32 = 1000;

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

fn systems(affine: Option<bool>) -> Vec<RootSystem> {
    all_selectors()
        .iter()
        .map(|s| RootSystem::load(s).unwrap())
        .filter(|s| s.rank() <= 8 && affine.map_or(true, |a| s.is_affine() == a))
        .collect()
}

fn affine_systems() -> &'static [RootSystem] {
    static S: OnceLock<Vec<RootSystem>> = OnceLock::new();
    S.get_or_init(|| systems(Some(true)))
}

fn any_systems() -> &'static [RootSystem] {
    static S: OnceLock<Vec<RootSystem>> = OnceLock::new();
    S.get_or_init(|| systems(None))
}

fn rational() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Q::new(n, d))
}

fn weight(len: usize) -> impl Strategy<Value = Vec<Q>> {
    proptest::collection::vec(rational(), len)
}

/// A point of the closed alcove or chamber; about a third of the
/// coordinates vanish.
fn point(sys: &RootSystem) -> impl Strategy<Value = Vec<Q>> {
    let sys = sys.clone();
    proptest::collection::vec((0i64..3, 1i64..9), sys.len()).prop_filter_map("origin", move |raw| {
        let u: Vec<Q> = raw
            .iter()
            .map(|&(z, x)| Q::from_integer(if z == 0 { 0 } else { x }))
            .collect();
        if sys.is_affine() {
            let s: Q = u
                .iter()
                .zip(sys.marks())
                .map(|(v, &a)| v * Q::from_integer(a))
                .sum();
            (!s.is_zero()).then(|| u.iter().map(|v| v / s).collect())
        } else {
            Some(u)
        }
    })
}

fn sys_and<S: Strategy, F: Fn(&RootSystem) -> S>(
    pool: &'static [RootSystem],
    f: F,
) -> impl Strategy<Value = (usize, S::Value)> {
    (0..pool.len()).prop_flat_map(move |i| (Just(i), f(&pool[i])))
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

fn report(
    r: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>,
) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// `A a = 0`, `a^vee A = 0`, and adding `t delta` leaves pairings unchanged.
pub fn gcm_radical() -> Result<(), String> {
    let pool = affine_systems();
    let strat = sys_and(pool, |s| (weight(s.len()), rational()));
    report(runner().run(&strat, |(i, (w, t))| {
        let sys = &pool[i];
        let n = sys.len();
        for r in 0..n {
            let row: i64 = (0..n).map(|j| sys.a(r, j) * sys.marks()[j]).sum();
            let col: i64 = (0..n).map(|j| sys.comarks()[j] * sys.a(j, r)).sum();
            if row != 0 || col != 0 {
                return Err(fail(format!("{}: radical fails at row {r}", sys.id())));
            }
        }
        let shifted: Vec<Q> = w
            .iter()
            .zip(sys.marks())
            .map(|(k, &a)| k + t * Q::from_integer(a))
            .collect();
        prop_assert_eq!(sys.pairings(&shifted), sys.pairings(&w), "{}", sys.id());
        Ok(())
    }))
}

/// Moving along a weight is additive in the step and linear in the weight,
/// and keeps the alcove normalization.
pub fn transport_linearity() -> Result<(), String> {
    let pool = any_systems();
    let strat = sys_and(pool, |s| {
        (
            point(s),
            weight(s.len()),
            weight(s.len()),
            rational(),
            rational(),
        )
    });
    report(runner().run(&strat, |(i, (x, w1, w2, c1, c2))| {
        let sys = &pool[i];
        let sum: Vec<Q> = w1.iter().zip(&w2).map(|(a, b)| a + b).collect();
        let lhs = translate(sys, &x, c1 + c2, &w1);
        let rhs = translate(sys, &translate(sys, &x, c1, &w1), c2, &w1);
        prop_assert_eq!(&lhs, &rhs, "{}: additivity in c", sys.id());
        let a = translate(sys, &x, c1, &sum);
        let b = translate(sys, &translate(sys, &x, c1, &w1), c1, &w2);
        prop_assert_eq!(&a, &b, "{}: linearity in w", sys.id());
        prop_assert_eq!(translate(sys, &x, Q::zero(), &w1), x.clone());
        if sys.is_affine() {
            let norm = |v: &[Q]| -> Q {
                v.iter()
                    .zip(sys.marks())
                    .map(|(v, &m)| v * Q::from_integer(m))
                    .sum()
            };
            prop_assert_eq!(norm(&lhs), norm(&x), "{}: normalization", sys.id());
            let delta: Vec<Q> = sys.marks().iter().map(|&m| Q::from_integer(m)).collect();
            prop_assert_eq!(
                translate(sys, &x, c1, &delta),
                x.clone(),
                "{}: delta moves",
                sys.id()
            );
        }
        Ok(())
    }))
}

/// The four cases of how a wall is met after moving from `x` by `c w`. About
/// half the cases pick `c` so that some wall off the zero set is reached.
pub fn four_cases() -> Result<(), String> {
    let pool = any_systems();
    let strat = sys_and(pool, |s| {
        (
            point(s),
            weight(s.len()),
            rational(),
            any::<bool>(),
            0..s.len(),
        )
    });
    report(runner().run(&strat, |(i, (x, w, c0, aim, target))| {
        let sys = &pool[i];
        let rate: Vec<Q> = (0..sys.len()).map(|j| sys.transport_rate(&w, j)).collect();
        let crit = |j: usize| -x[j] / rate[j];
        let c =
            if aim && !x[target].is_zero() && !rate[target].is_zero() && crit(target).is_positive()
            {
                crit(target)
            } else {
                c0.abs() + Q::new(1, 7)
            };
        let y = translate(sys, &x, c, &w);
        for j in 0..sys.len() {
            let p0 = sys.pairing(&w, j).is_zero();
            let expect = match (x[j].is_zero(), p0) {
                (true, true) => true,
                (true, false) => false,
                (false, true) => false,
                (false, false) => c == crit(j),
            };
            prop_assert_eq!(y[j].is_zero(), expect, "{} node {} c={}", sys.id(), j, c);
        }
        Ok(())
    }))
}

fn all_records(pred: impl Fn(&PolytopeRecord) -> bool) -> Vec<(RootSystem, PolytopeRecord)> {
    let mut out = Vec::new();
    for sys in any_systems() {
        let cl = classify(sys).unwrap();
        for r in cl.records {
            if pred(&r) {
                out.push((sys.clone(), r));
            }
        }
    }
    out
}

fn positions(sys: &RootSystem, labels: &[usize]) -> NodeSet {
    NodeSet::from_iter(labels.iter().map(|&l| sys.position(l).unwrap()))
}

/// `omega + omega_sharp = t delta` on bihomogeneous records, and the catalog
/// lookup reproduces `t` and the far model.
pub fn sharp_identity() -> Result<(), String> {
    static R: OnceLock<Vec<(RootSystem, PolytopeRecord)>> = OnceLock::new();
    let recs = R.get_or_init(|| all_records(|r| r.kind == Kind::Bihom));
    if recs.is_empty() {
        return Err("no bihomogeneous records".into());
    }
    report(runner().run(&(0..recs.len()), |k| {
        let (sys, r) = &recs[k];
        let t =
            r.t.ok_or_else(|| fail(format!("{}: bihom without t", sys.id())))?;
        let sharp = r.sharp().unwrap();
        for i in 0..sys.len() {
            prop_assert_eq!(
                r.omega[i] + sharp[i],
                t * Q::from_integer(sys.marks()[i]),
                "{}",
                sys.id()
            );
        }
        let (t2, m) = match_sharp(sys, &r.omega, positions(sys, &r.s2))
            .map_err(|e| fail(e.to_string()))?
            .ok_or_else(|| fail(format!("{}: no sharp model", sys.id())))?;
        prop_assert_eq!(t2, t);
        prop_assert_eq!(&m.weight[..], sharp);
        Ok(())
    }))
}

/// Starting from an inhomogeneous end with distinguished node `k`, the other
/// end has zero set `S \ {k}`.
pub fn inhomogeneous_start() -> Result<(), String> {
    static R: OnceLock<Vec<(RootSystem, PolytopeRecord)>> = OnceLock::new();
    let recs = R.get_or_init(|| all_records(|r| r.kind != Kind::Bihom));
    if recs.is_empty() {
        return Err("no inhomogeneous records".into());
    }
    report(runner().run(&(0..recs.len()), |k| {
        let (sys, r) = &recs[k];
        for (m, other) in [(&r.model1, &r.s2), (&r.model2, &r.s1)] {
            if m.homogeneous {
                continue;
            }
            let node = m.node.unwrap();
            let want: Vec<usize> = sys
                .labels()
                .iter()
                .copied()
                .filter(|&l| l != node)
                .collect();
            prop_assert_eq!(
                other,
                &want,
                "{}: {} -> {}",
                sys.id(),
                r.model1.designation,
                r.model2.designation
            );
        }
        Ok(())
    }))
}

pub fn suites() -> Vec<(&'static str, fn() -> Result<(), String>)> {
    vec![
        ("gcm radical", gcm_radical),
        ("transport linearity and normalization", transport_linearity),
        ("four wall cases", four_cases),
        ("sharp identity", sharp_identity),
        ("inhomogeneous start", inhomogeneous_start),
    ]
}
