//! Hand transcriptions of the published case tables, and helpers to compare
//! them with classifier output up to diagram automorphism.
#![allow(dead_code)]

pub mod props;

use std::collections::BTreeSet;

use rankone::cartan::RootSystem;
use rankone::classifier::{EndModel, Kind, PolytopeRecord};
use rankone::rational::to_string;
use rankone::Q;

pub fn load(s: &str) -> RootSystem {
    RootSystem::load(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn fr(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// One end of a polytope: a homogeneous model given by its weight, or an
/// inhomogeneous one given by its distinguished node. Nodes are labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum End {
    Hom {
        missing: Vec<usize>,
        weight: Vec<(usize, Q)>,
    },
    Inhom {
        node: usize,
        missing: Vec<usize>,
    },
}

#[derive(Clone, Debug)]
pub struct Row {
    pub name: String,
    pub a: End,
    pub b: End,
}

pub fn hom(missing: &[usize], weight: &[(usize, Q)]) -> End {
    End::Hom {
        missing: missing.to_vec(),
        weight: weight.to_vec(),
    }
}

pub fn inhom(node: usize, missing: &[usize]) -> End {
    End::Inhom {
        node,
        missing: missing.to_vec(),
    }
}

/// `f * (alpha_lo + ... + alpha_hi)` with coefficient `mult`.
pub fn run(lo: usize, hi: usize, mult: Q) -> Vec<(usize, Q)> {
    (lo..=hi).map(|i| (i, mult)).collect()
}

pub fn scale(w: &[(usize, Q)], f: Q) -> Vec<(usize, Q)> {
    w.iter().map(|&(l, c)| (l, c * f)).collect()
}

fn row(name: impl Into<String>, a: End, b: End) -> Row {
    Row {
        name: name.into(),
        a,
        b,
    }
}

fn one() -> Q {
    Q::from_integer(1)
}

fn two() -> Q {
    Q::from_integer(2)
}

fn halves() -> [Q; 2] {
    [fr(1, 2), one()]
}

// ---- comparison up to automorphism ----

fn end_key(sys: &RootSystem, e: &End, p: &[usize]) -> String {
    let pos = |l: usize| p[sys.position(l).unwrap_or_else(|| panic!("no node {l}"))];
    let set = |m: &[usize]| {
        let mut v: Vec<usize> = m.iter().map(|&l| pos(l)).collect();
        v.sort();
        v.dedup();
        v
    };
    match e {
        End::Hom { missing, weight } => {
            let mut w = vec![Q::from_integer(0); sys.len()];
            for &(l, c) in weight {
                w[pos(l)] += c;
            }
            let w: Vec<String> = w.iter().map(to_string).collect();
            format!("H{:?}[{}]", set(missing), w.join(","))
        }
        End::Inhom { node, missing } => format!("I{}{:?}", pos(*node), set(missing)),
    }
}

/// Orientation- and automorphism-free key of a row.
pub fn row_key(sys: &RootSystem, r: &Row) -> String {
    sys.automorphisms()
        .iter()
        .map(|p| {
            let mut e = [end_key(sys, &r.a, p), end_key(sys, &r.b, p)];
            e.sort();
            e.join(" / ")
        })
        .min()
        .unwrap_or_default()
}

fn record_end(sys: &RootSystem, m: &EndModel, s: &[usize]) -> End {
    let missing: Vec<usize> = sys
        .labels()
        .iter()
        .copied()
        .filter(|l| !s.contains(l))
        .collect();
    if m.homogeneous {
        let weight = sys
            .labels()
            .iter()
            .copied()
            .zip(m.weight.iter().copied())
            .collect();
        End::Hom { missing, weight }
    } else {
        End::Inhom {
            node: m.node.expect("inhomogeneous end without node"),
            missing,
        }
    }
}

pub fn record_row(sys: &RootSystem, r: &PolytopeRecord) -> Row {
    row(
        format!("{} -> {}", r.model1.designation, r.model2.designation),
        record_end(sys, &r.model1, &r.s1),
        record_end(sys, &r.model2, &r.s2),
    )
}

/// Rows of `expected` with no record, and records matching no row.
pub fn compare(
    sys: &RootSystem,
    expected: &[Row],
    records: &[PolytopeRecord],
) -> (Vec<String>, Vec<String>) {
    let got: BTreeSet<String> = records
        .iter()
        .map(|r| row_key(sys, &record_row(sys, r)))
        .collect();
    let want: BTreeSet<String> = expected.iter().map(|r| row_key(sys, r)).collect();
    let missing = expected
        .iter()
        .filter(|r| !got.contains(&row_key(sys, r)))
        .map(|r| format!("{}: {}", sys.id(), r.name))
        .collect();
    let extra = records
        .iter()
        .filter(|r| !want.contains(&row_key(sys, &record_row(sys, r))))
        .map(|r| {
            let w: Vec<String> = r.omega.iter().map(to_string).collect();
            format!(
                "{}: {} -> {} omega=[{}]",
                sys.id(),
                r.model1.designation,
                r.model2.designation,
                w.join(" ")
            )
        })
        .collect();
    (missing, extra)
}

// ---- genuine case tables ----

/// Accepting rows of the table for `A_1^(1)`.
pub fn affine_a1_rows() -> Vec<Row> {
    vec![
        row("I_1 / I_0", inhom(1, &[0]), inhom(0, &[1])),
        row(
            "a1 / a0",
            hom(&[0], &[(1, one())]),
            hom(&[1], &[(0, one())]),
        ),
        row(
            "2a1 / 2a0",
            hom(&[0], &[(1, two())]),
            hom(&[1], &[(0, two())]),
        ),
    ]
}

/// Accepting rows of the table for `A_n^(1)`, `n >= 2`; indices mod `n+1`.
pub fn affine_a_rows(n: usize) -> Vec<Row> {
    let m = n + 1;
    let arc = |from: usize, to: usize| {
        let mut out = vec![(from % m, one())];
        let mut i = from % m;
        while i != to % m {
            i = (i + 1) % m;
            out.push((i, one()));
        }
        out
    };
    let mut rows = vec![
        row(
            "a_{1,n} / a0",
            hom(&[0], &run(1, n, one())),
            hom(&[1, n], &[(0, one())]),
        ),
        row("I_1 / I_0", inhom(1, &[0]), inhom(0, &[1])),
    ];
    for d in 0..m {
        for e in 0..m {
            if d == e || (d + 1) % m == e {
                continue;
            }
            rows.push(row(
                format!("S\\{{{d},{e}}}: a_{{d+1,e-1}} / a_{{e,d}}"),
                hom(&[d, e], &arc(d + 1, (e + m - 1) % m)),
                hom(&[(d + 1) % m, (e + m - 1) % m], &arc(e, d)),
            ));
        }
    }
    if n == 3 {
        for f in halves() {
            rows.push(row(
                format!("[{f}] a1+2a2+a3 / a3+2a0+a1"),
                hom(&[0], &[(1, f), (2, f * two()), (3, f)]),
                hom(&[2], &[(3, f), (0, f * two()), (1, f)]),
            ));
            rows.push(row(
                format!("[{f}] a1+a3 / a2+a0"),
                hom(&[0, 2], &[(1, f), (3, f)]),
                hom(&[1, 3], &[(2, f), (0, f)]),
            ));
        }
    }
    rows
}

/// Accepting rows of the table for `D_n^(1)`, `n >= 4`.
pub fn affine_d_rows(n: usize) -> Vec<Row> {
    let mut rows = Vec::new();
    if n == 4 {
        for f in halves() {
            rows.push(row(
                format!("[{f}] 2a3+2a2+a4+a1"),
                hom(
                    &[0],
                    &scale(&[(1, one()), (2, two()), (3, two()), (4, one())], f),
                ),
                hom(
                    &[3],
                    &scale(&[(0, two()), (1, one()), (2, two()), (4, one())], f),
                ),
            ));
            rows.push(row(
                format!("[{f}] a4+2a2+a3"),
                hom(&[0, 1], &scale(&[(2, two()), (3, one()), (4, one())], f)),
                hom(&[2], &scale(&[(0, one()), (1, one())], f)),
            ));
        }
        rows.push(row(
            "a4+a2+a3",
            hom(&[0, 1], &[(2, one()), (3, one()), (4, one())]),
            hom(&[3, 4], &[(0, one()), (1, one()), (2, one())]),
        ));
        return rows;
    }
    let tail = |lo: usize| {
        let mut w = run(lo, n - 2, two());
        w.push((n - 1, one()));
        w.push((n, one()));
        w
    };
    for f in halves() {
        let mut sharp = vec![(0, two())];
        sharp.extend(tail(2));
        rows.push(row(
            format!("[{f}] S\\{{0}}"),
            hom(&[0], &scale(&tail(1), f)),
            hom(&[1], &scale(&sharp, f)),
        ));
        rows.push(row(
            format!("[{f}] S\\{{0,1}}"),
            hom(&[0, 1], &scale(&tail(2), f)),
            hom(&[2], &scale(&[(0, one()), (1, one())], f)),
        ));
        for m in 3..=n - 2 {
            let mut w = vec![(0, one()), (1, one())];
            w.extend(run(2, m - 1, two()));
            rows.push(row(
                format!("[{f}] S\\{{{m}}}"),
                hom(&[m], &scale(&w, f)),
                hom(&[m - 1], &scale(&tail(m), f)),
            ));
        }
    }
    let mut sharp = vec![(0, one())];
    sharp.extend(run(2, n - 2, one()));
    sharp.push((n, one()));
    rows.push(row(
        "S\\{0,n}: a_{1,n-1}",
        hom(&[0, n], &run(1, n - 1, one())),
        hom(&[1, n - 1], &sharp),
    ));
    rows
}

// ---- the Hamiltonian list ----

pub fn ham_rows(fam: char, n: usize) -> Vec<Row> {
    let mut rows = Vec::new();
    let mut push = |name: String, a: End, b: End| rows.push(row(name, a, b));
    let chain = |k: usize| run(1, k, one());
    let h = fr(1, 2);
    match fam {
        'A' => {
            if n == 3 {
                push("A1".into(), hom(&[2], &[(1, h), (3, h)]), inhom(2, &[1, 3]));
            }
            if n == 4 {
                push(
                    "A2".into(),
                    hom(&[4], &[(1, one()), (2, two()), (3, one())]),
                    inhom(4, &[2]),
                );
            }
            for k in 1..n {
                push(
                    format!("A3 k={k}"),
                    hom(&[k + 1], &chain(k)),
                    inhom(k + 1, &[1, k]),
                );
                push(format!("A4 k={k}"), inhom(k, &[k + 1]), inhom(k + 1, &[k]));
            }
        }
        'B' => {
            if n == 3 {
                push("B1".into(), hom(&[2], &[(1, h), (3, h)]), inhom(2, &[1, 3]));
                push("B2".into(), inhom(3, &[1]), inhom(1, &[3]));
            }
            if n == 4 {
                let w = [(2, one()), (3, two()), (4, Q::from_integer(3))];
                push("B3".into(), hom(&[1], &w), inhom(1, &[4]));
                push(
                    "B4".into(),
                    hom(&[4], &[(1, h), (2, one()), (3, h)]),
                    inhom(4, &[2]),
                );
            }
            for k in 1..n {
                push(
                    format!("B5 k={k}"),
                    hom(&[k], &run(k + 1, n, one())),
                    inhom(k, &[k + 1]),
                );
            }
            push("B6".into(), inhom(n - 1, &[n]), inhom(n, &[n - 1]));
        }
        'C' => {
            for k in 1..n {
                push(
                    format!("C1 k={k}"),
                    hom(&[k + 1], &chain(k)),
                    inhom(k + 1, &[1, k]),
                );
                push(format!("C3 k={k}"), inhom(k, &[k + 1]), inhom(k + 1, &[k]));
            }
            if n >= 3 {
                let mut w = vec![(2, one())];
                w.extend(run(3, n - 1, two()));
                w.push((n, one()));
                push("C2".into(), hom(&[1], &w), inhom(1, &[3]));
            }
        }
        'D' => {
            if n == 4 {
                for (i, j, k) in [(1, 3, 4), (1, 4, 3), (3, 4, 1)] {
                    let d1 = [(i, h), (2, one()), (j, h)];
                    push(format!("D1 k={k}"), hom(&[k], &d1), inhom(k, &[2]));
                    push(
                        format!("D2 {i},{j}"),
                        hom(&[2], &[(i, h), (j, h)]),
                        inhom(2, &[i, j]),
                    );
                    let d3 = [(i, one()), (2, one()), (j, one())];
                    push(format!("D3 k={k}"), hom(&[k], &d3), inhom(k, &[i, j]));
                }
            }
            for k in 1..=n - 2 {
                let mut w = run(k + 1, n - 2, one());
                w.push((n - 1, h));
                w.push((n, h));
                // at k = n-2 the far end misses both fork nodes
                let far = if k == n - 2 {
                    inhom(k, &[n - 1, n])
                } else {
                    inhom(k, &[k + 1])
                };
                push(format!("D4 k={k}"), hom(&[k], &w), far);
            }
            push("D5".into(), hom(&[n], &chain(n - 1)), inhom(n, &[1, n - 1]));
            push("D6".into(), inhom(n - 1, &[n]), inhom(n, &[n - 1]));
        }
        'F' => {
            push(
                "F1".into(),
                hom(&[1], &[(2, one()), (3, two()), (4, one())]),
                inhom(1, &[3]),
            );
            push(
                "F2".into(),
                hom(&[2], &[(3, one()), (4, one())]),
                inhom(2, &[3, 4]),
            );
            push("F3".into(), hom(&[4], &chain(3)), inhom(4, &[1]));
            push("F4".into(), inhom(3, &[2]), inhom(2, &[3]));
        }
        'G' => push("G1".into(), hom(&[2], &[(1, one())]), inhom(2, &[1])),
        _ => {}
    }
    rows
}

/// Systems covered by the Hamiltonian list.
pub fn ham_systems() -> Vec<(char, usize)> {
    let mut v = Vec::new();
    for n in 2..=8 {
        v.push(('A', n));
        v.push(('C', n));
    }
    for n in 3..=8 {
        v.push(('B', n));
    }
    for n in 4..=8 {
        v.push(('D', n));
    }
    v.push(('F', 4));
    v.push(('G', 2));
    v.sort();
    v
}

/// Center subscripts printed in the Hamiltonian list, as
/// (system, kind of the row, inhomogeneous node, missing nodes, values).
pub fn ham_centers() -> Vec<(String, Kind, usize, Vec<usize>, Vec<Q>)> {
    let mut v = Vec::new();
    for n in 2..=8usize {
        for k in 1..n {
            let d = (n + 1) as i64;
            v.push((
                format!("A{n}"),
                Kind::Biinhom,
                k,
                vec![k + 1],
                vec![fr(-(k as i64), d)],
            ));
            v.push((
                format!("A{n}"),
                Kind::Biinhom,
                k + 1,
                vec![k],
                vec![fr((n - k) as i64, d)],
            ));
        }
    }
    v.push(("B3".into(), Kind::Biinhom, 3, vec![1], vec![fr(1, 2)]));
    v.push(("B3".into(), Kind::Biinhom, 1, vec![3], vec![fr(-1, 2)]));
    for n in 3..=8 {
        v.push((
            format!("B{n}"),
            Kind::Biinhom,
            n,
            vec![n - 1],
            vec![fr(-3, 2)],
        ));
    }
    v.push(("F4".into(), Kind::Mixed, 1, vec![3], vec![fr(-2, 1)]));
    for n in 4..=8 {
        v.push((
            format!("D{n}"),
            Kind::Biinhom,
            n - 1,
            vec![n],
            vec![fr(-1, 2)],
        ));
        v.push((
            format!("D{n}"),
            Kind::Biinhom,
            n,
            vec![n - 1],
            vec![fr(-1, 2)],
        ));
    }
    v
}

/// The center scalars reported at the given end of a record of the given
/// kind, if there is one.
pub fn center_at(
    records: &[PolytopeRecord],
    kind: Kind,
    node: usize,
    missing: &[usize],
    labels: &[usize],
) -> Option<Vec<Q>> {
    for r in records.iter().filter(|r| r.kind == kind) {
        for (m, s) in [(&r.model1, &r.s1), (&r.model2, &r.s2)] {
            let miss: Vec<usize> = labels.iter().copied().filter(|l| !s.contains(l)).collect();
            if !m.homogeneous && m.node == Some(node) && miss == missing {
                return Some(m.center.clone());
            }
        }
    }
    None
}

/// Selectors whose golden files are kept under `tests/fixtures`.
pub fn golden_selectors() -> Vec<(String, &'static str)> {
    let mut v: Vec<(String, &str)> = Vec::new();
    for n in 1..=8 {
        v.push((format!("A{n}~1"), "genuine"));
    }
    for n in 4..=8 {
        v.push((format!("D{n}~1"), "genuine"));
    }
    for n in 6..=8 {
        v.push((format!("E{n}~1"), "genuine"));
    }
    for (f, n) in ham_systems() {
        v.push((format!("{f}{n}"), "hamiltonian"));
    }
    v
}

pub fn fixture_path(sel: &str, mode: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(format!("{sel}_{mode}.json"))
}

pub fn golden_config(sel: &str, mode: &str) -> rankone::report::ReportConfig {
    use rankone::report::{ModeSel, ReportConfig, Target};
    let mut c = ReportConfig::new(Target::System(sel.to_string()));
    c.mode = if mode == "genuine" {
        ModeSel::Genuine
    } else {
        ModeSel::Hamiltonian
    };
    c
}
