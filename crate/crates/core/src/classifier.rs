//! Enumeration of rank-one momentum polytopes.
//!
//! A polytope is a segment `[X1, X2]` with `X2 = X1 + c w`, a local model at
//! each end, and the weight `w` generating its lattice. Genuine polytopes of
//! an affine system touch every wall of the alcove; Hamiltonian polytopes of
//! a finite system touch every wall of the chamber but not the origin.
//!
//! [`classify_genuine`] and [`classify_hamiltonian`] use the structure
//! theorems to restrict the starting faces. [`brute_force`] tries every pair
//! of faces and every pair of local models and serves as their oracle.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alcove::{self, face_solve, FaceSolution, Profile, Solved};
use crate::cartan::{NodeSet, RootSystem};
use crate::catalog::{self, LocalModel, ModelKind, Pattern};
use crate::rational::{self, q};
use crate::{Error, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Genuine,
    Hamiltonian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Bihom,
    Mixed,
    Biinhom,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Bihom => "bihom",
            Kind::Mixed => "mixed",
            Kind::Biinhom => "biinhom",
        })
    }
}

/// The local model at one end of a polytope, with nodes given by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndModel {
    /// `H(...)` or `I_k(...)`, listing the nodes missing at this end.
    pub designation: String,
    pub homogeneous: bool,
    pub pattern: Option<Pattern>,
    #[serde(with = "rational::serde_q::opt")]
    pub factor: Option<Q>,
    /// Distinguished node of an inhomogeneous model.
    pub node: Option<usize>,
    pub support: Vec<usize>,
    /// The weight at this end: `omega` at end 1; the sharp weight or `-omega`
    /// at end 2.
    #[serde(with = "rational::serde_q::vec")]
    pub weight: Vec<Q>,
    /// Center scalars, one per missing node, in label order.
    #[serde(with = "rational::serde_q::vec")]
    pub center: Vec<Q>,
    pub triple: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeRecord {
    pub system: String,
    pub kind: Kind,
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
    #[serde(with = "rational::serde_q::vec")]
    pub x1: Vec<Q>,
    #[serde(with = "rational::serde_q::vec")]
    pub x2: Vec<Q>,
    #[serde(with = "rational::serde_q")]
    pub c: Q,
    #[serde(with = "rational::serde_q::vec")]
    pub omega: Vec<Q>,
    #[serde(with = "rational::serde_q")]
    pub factor: Q,
    #[serde(with = "rational::serde_q::opt")]
    pub t: Option<Q>,
    pub model1: EndModel,
    pub model2: EndModel,
    /// Shared by all records whose segments lie in one automorphism orbit,
    /// in particular by factor variants.
    pub orbit_id: String,
    pub orbit_size: usize,
    pub canonical: bool,
}

impl PolytopeRecord {
    pub fn sharp(&self) -> Option<&[Q]> {
        (self.kind == Kind::Bihom).then_some(&self.model2.weight[..])
    }
}

/// Records of one system together with the reasons candidates were dropped.
#[derive(Clone, Debug, Default)]
pub struct Classification {
    pub records: Vec<PolytopeRecord>,
    pub log: Vec<String>,
}

impl Classification {
    pub fn canonical(&self) -> impl Iterator<Item = &PolytopeRecord> {
        self.records.iter().filter(|r| r.canonical)
    }
}

/// A polytope in position coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Raw {
    kind: Kind,
    s1: NodeSet,
    s2: NodeSet,
    x1: Vec<Q>,
    x2: Vec<Q>,
    c: Q,
    omega: Vec<Q>,
    far: Vec<Q>,
    t: Option<Q>,
    m1: LocalModel,
    m2: LocalModel,
}

fn first_missing(sys: &RootSystem, s: NodeSet) -> usize {
    sys.all_nodes().minus(s).iter().next().unwrap_or(0)
}

fn neg(v: &[Q]) -> Vec<Q> {
    v.iter().map(|x| -x).collect()
}

fn vec_str(v: &[Q]) -> String {
    v.iter()
        .map(rational::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn model_str(m: &LocalModel) -> String {
    match &m.kind {
        ModelKind::Homogeneous { pattern, factor } => {
            format!(
                "H:{pattern}:{}:{:08b}",
                rational::to_string(factor),
                m.support.0
            )
        }
        ModelKind::Inhomogeneous { node } => format!("I:{node}"),
    }
}

impl Raw {
    fn key(&self) -> String {
        format!(
            "{}|{:08x}|{:08x}|{}|{}|{}|{}|{}",
            self.kind as u8,
            self.s1.0,
            self.s2.0,
            vec_str(&self.x1),
            vec_str(&self.x2),
            vec_str(&self.omega),
            model_str(&self.m1),
            model_str(&self.m2)
        )
    }

    fn segment_key(&self, sys: &RootSystem) -> String {
        let a = vec_str(&self.x1);
        let b = vec_str(&self.x2);
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        format!("{}:{}:{}", sys.id(), a, b)
    }

    fn reversed(&self, sys: &RootSystem) -> Raw {
        let far = if self.m1.is_homogeneous() {
            self.omega.clone()
        } else {
            alcove::reduce(sys, &neg(&self.far), first_missing(sys, self.s1))
        };
        Raw {
            kind: self.kind,
            s1: self.s2,
            s2: self.s1,
            x1: self.x2.clone(),
            x2: self.x1.clone(),
            c: self.c,
            omega: self.far.clone(),
            far,
            t: self.t,
            m1: self.m2.clone(),
            m2: self.m1.clone(),
        }
    }

    fn permuted(&self, sys: &RootSystem, perm: &[usize]) -> Raw {
        let pv = |v: &[Q]| {
            let mut out = vec![Q::zero(); v.len()];
            for (i, x) in v.iter().enumerate() {
                out[perm[i]] = *x;
            }
            out
        };
        let pm = |m: &LocalModel| LocalModel {
            kind: match m.kind {
                ModelKind::Inhomogeneous { node } => ModelKind::Inhomogeneous { node: perm[node] },
                ref k => k.clone(),
            },
            support: m.support.map(perm),
            weight: if m.weight.is_empty() {
                Vec::new()
            } else {
                pv(&m.weight)
            },
            triple: m.triple.clone(),
        };
        let s1 = self.s1.map(perm);
        let s2 = self.s2.map(perm);
        let canon = |w: Vec<Q>, s: NodeSet| alcove::reduce(sys, &w, first_missing(sys, s));
        Raw {
            kind: self.kind,
            s1,
            s2,
            x1: pv(&self.x1),
            x2: pv(&self.x2),
            c: self.c,
            omega: canon(pv(&self.omega), s1),
            far: canon(pv(&self.far), s2),
            t: self.t,
            m1: pm(&self.m1),
            m2: pm(&self.m2),
        }
    }

    /// Unordered polytopes are stored in the orientation with the smaller key.
    fn oriented(self, sys: &RootSystem) -> Raw {
        if self.kind == Kind::Mixed {
            return self;
        }
        let r = self.reversed(sys);
        if r.key() < self.key() {
            r
        } else {
            self
        }
    }
}

/// Builds a polytope from a solved face problem, or explains why not.
fn assemble(
    sys: &RootSystem,
    s1: NodeSet,
    m1: &LocalModel,
    s2: NodeSet,
    m2: &LocalModel,
    sol: &Solved,
) -> Result<Raw, String> {
    if let Some(p) = sol.pairings.iter().find(|p| !p.is_integer()) {
        return Err(format!("non-integral pairing {p}"));
    }
    let omega = if m1.is_homogeneous() {
        m1.weight.clone()
    } else {
        alcove::weight_from_pairings(sys, &sol.pairings, first_missing(sys, s1))
            .ok_or("no weight with these pairings")?
    };
    let (far, t) = if m2.is_homogeneous() {
        if sys.is_affine() {
            let j = first_missing(sys, s2);
            let t = (omega[j] + m2.weight[j]) / q(sys.marks()[j]);
            let ok = t.is_positive()
                && (0..sys.len()).all(|i| omega[i] + m2.weight[i] == t * q(sys.marks()[i]));
            if !ok {
                return Err("far weight is not t delta - omega".into());
            }
            (m2.weight.clone(), Some(t))
        } else {
            if m2.weight != neg(&omega) {
                return Err("far weight is not -omega".into());
            }
            (m2.weight.clone(), None)
        }
    } else {
        (
            alcove::reduce(sys, &neg(&omega), first_missing(sys, s2)),
            None,
        )
    };
    let kind = match (m1.is_homogeneous(), m2.is_homogeneous()) {
        (true, true) => Kind::Bihom,
        (false, false) => Kind::Biinhom,
        _ => Kind::Mixed,
    };
    let raw = Raw {
        kind,
        s1,
        s2,
        x1: sol.x1.clone(),
        x2: sol.x2.clone(),
        c: sol.c,
        omega,
        far,
        t: if kind == Kind::Bihom { t } else { None },
        m1: m1.clone(),
        m2: m2.clone(),
    };
    // mixed polytopes keep the homogeneous end first
    Ok(if kind == Kind::Mixed && !m1.is_homogeneous() {
        raw.reversed(sys)
    } else {
        raw
    })
}

/// Pairing constraints on `omega` coming from the model at the far end.
fn far_profile(sys: &RootSystem, m2: &LocalModel, s2: NodeSet) -> Profile {
    Profile(
        m2.profile(sys, s2)
            .0
            .into_iter()
            .map(|p| p.map(|x| -x))
            .collect(),
    )
}

fn touches_all_walls(sys: &RootSystem, s1: NodeSet, s2: NodeSet) -> bool {
    s1.union(s2) == sys.all_nodes() && s1 != sys.all_nodes() && s2 != sys.all_nodes()
}

/// Solves for a polytope with the given ends, requiring exact zero sets.
fn try_pair(
    sys: &RootSystem,
    s1: NodeSet,
    m1: &LocalModel,
    s2: NodeSet,
    m2: &LocalModel,
    log: &mut Vec<String>,
) -> Option<Raw> {
    let merged = m1.profile(sys, s1).merge(&far_profile(sys, m2, s2))?;
    match face_solve(sys, s1, s2, &merged) {
        FaceSolution::Isolated(sol) if alcove::zero_set(&sol.x2) == s2 => {
            match assemble(sys, s1, m1, s2, m2, &sol) {
                Ok(r) => Some(r),
                Err(why) => {
                    log.push(why);
                    None
                }
            }
        }
        FaceSolution::Family(k) => {
            log.push(format!("{k}-parameter family"));
            None
        }
        _ => None,
    }
}

type Seed = (NodeSet, LocalModel);

fn seeds(sys: &RootSystem, faces: impl Iterator<Item = NodeSet>) -> Result<Vec<Seed>, Error> {
    let mut out = Vec::new();
    for s in faces {
        for m in catalog::homogeneous_models(sys, s)? {
            out.push((s, m));
        }
        for m in catalog::inhomogeneous_models(sys, s)? {
            out.push((s, m));
        }
    }
    Ok(out)
}

fn describe(sys: &RootSystem, s: NodeSet, m: &LocalModel) -> String {
    match &m.kind {
        ModelKind::Homogeneous { pattern, factor } => format!(
            "{} {pattern}[{}] on {:?}",
            m.designation(sys, s),
            rational::pretty(factor),
            m.support.iter().map(|i| sys.label(i)).collect::<Vec<_>>()
        ),
        ModelKind::Inhomogeneous { .. } => m.designation(sys, s),
    }
}

/// Pruned search from one seed.
fn search_seed(
    sys: &RootSystem,
    s1: NodeSet,
    m1: &LocalModel,
) -> Result<(Vec<Raw>, Vec<String>), Error> {
    let all = sys.all_nodes();
    let mut found = Vec::new();
    let mut log = Vec::new();
    let tag = describe(sys, s1, m1);
    // the far end must contain every node missing here
    let missing = all.minus(s1);

    if m1.is_homogeneous() {
        let pr = m1.profile(sys, s1);
        let sol = match face_solve(sys, s1, missing, &pr) {
            FaceSolution::Isolated(sol) => sol,
            FaceSolution::Family(k) => {
                log.push(format!("{tag}: {k}-parameter family"));
                return Ok((found, log));
            }
            FaceSolution::Empty => return Ok((found, log)),
        };
        let s2 = alcove::zero_set(&sol.x2);
        if !touches_all_walls(sys, s1, s2) {
            return Ok((found, log));
        }
        if sys.is_affine() {
            if let Some((_, m2)) = catalog::match_sharp(sys, &m1.weight, s2)? {
                match assemble(sys, s1, m1, s2, &m2, &sol) {
                    Ok(r) => found.push(r),
                    Err(why) => log.push(format!("{tag}: {why}")),
                }
            }
        }
        if missing.len() == 1 {
            for m2 in catalog::inhomogeneous_models(sys, s2)? {
                if let Some(r) = try_pair(sys, s1, m1, s2, &m2, &mut log) {
                    found.push(r);
                }
            }
        }
    } else {
        let ModelKind::Inhomogeneous { node: k } = m1.kind else {
            unreachable!()
        };
        // the far end of an inhomogeneous start misses exactly the node k
        let s2 = all.without(k);
        for m2 in catalog::inhomogeneous_models(sys, s2)? {
            let mut why = Vec::new();
            match try_pair(sys, s1, m1, s2, &m2, &mut why) {
                Some(r) => found.push(r),
                None => log.extend(why.into_iter().map(|w| format!("{tag}: {w}"))),
            }
        }
    }
    Ok((found, log))
}

fn faces_of_size(sys: &RootSystem, sizes: &[usize]) -> Vec<NodeSet> {
    sys.all_nodes()
        .subsets()
        .filter(|s| sizes.contains(&s.len()))
        .collect()
}

fn run_seeds(sys: &RootSystem, seeds: Vec<Seed>) -> Result<Classification, Error> {
    let parts: Vec<Result<(Vec<Raw>, Vec<String>), Error>> = seeds
        .par_iter()
        .map(|(s, m)| search_seed(sys, *s, m))
        .collect();
    let mut raws = Vec::new();
    let mut log = Vec::new();
    for p in parts {
        let (r, l) = p?;
        raws.extend(r);
        log.extend(l);
    }
    Ok(finish(sys, raws, log))
}

/// Genuine polytopes of an affine system.
pub fn classify_genuine(sys: &RootSystem) -> Result<Classification, Error> {
    assert!(sys.is_affine(), "classify_genuine needs an affine system");
    let n = sys.rank();
    let mut all = seeds(sys, faces_of_size(sys, &[n]).into_iter())?;
    // one missing node beyond the minimum is possible only for bihom
    for (s, m) in seeds(sys, faces_of_size(sys, &[n - 1]).into_iter())? {
        if m.is_homogeneous() {
            all.push((s, m));
        }
    }
    run_seeds(sys, all)
}

/// Hamiltonian polytopes of a finite system.
pub fn classify_hamiltonian(sys: &RootSystem) -> Result<Classification, Error> {
    assert!(
        !sys.is_affine(),
        "classify_hamiltonian needs a finite system"
    );
    let n = sys.rank();
    let all = seeds(sys, faces_of_size(sys, &[n - 1]).into_iter())?;
    run_seeds(sys, all)
}

pub fn classify(sys: &RootSystem) -> Result<Classification, Error> {
    if sys.is_affine() {
        classify_genuine(sys)
    } else {
        classify_hamiltonian(sys)
    }
}

/// Every pair of faces covering all nodes, every pair of catalog models.
pub fn brute_force(sys: &RootSystem) -> Result<Classification, Error> {
    let all = sys.all_nodes();
    let faces: Vec<NodeSet> = all
        .subsets()
        .filter(|s| !s.is_empty() && *s != all)
        .collect();
    let models = seeds(sys, faces.iter().copied())?;
    let mut by_face: BTreeMap<NodeSet, Vec<LocalModel>> = BTreeMap::new();
    for (s, m) in &models {
        by_face.entry(*s).or_default().push(m.clone());
    }
    let parts: Vec<(Vec<Raw>, Vec<String>)> = models
        .par_iter()
        .map(|(s1, m1)| {
            let mut found = Vec::new();
            let mut log = Vec::new();
            for (&s2, m2s) in &by_face {
                if !touches_all_walls(sys, *s1, s2) {
                    continue;
                }
                for m2 in m2s {
                    if let Some(r) = try_pair(sys, *s1, m1, s2, m2, &mut log) {
                        found.push(r);
                    }
                }
            }
            (found, log)
        })
        .collect();
    let mut raws = Vec::new();
    let mut log = Vec::new();
    for (r, l) in parts {
        raws.extend(r);
        log.extend(l);
    }
    Ok(finish(sys, raws, log))
}

/// Orients, deduplicates and labels raw polytopes, and attaches orbit data.
fn finish(sys: &RootSystem, raws: Vec<Raw>, mut log: Vec<String>) -> Classification {
    let autos = sys.automorphisms();
    let mut uniq: BTreeMap<String, Raw> = BTreeMap::new();
    for r in raws {
        let r = r.oriented(sys);
        uniq.entry(r.key()).or_insert(r);
    }
    let mut records: Vec<(Kind, String, PolytopeRecord)> = Vec::new();
    for (key, r) in &uniq {
        let orbit: BTreeSet<String> = autos
            .iter()
            .map(|p| r.permuted(sys, p).oriented(sys).key())
            .collect();
        let orbit_id = autos
            .iter()
            .map(|p| r.permuted(sys, p).segment_key(sys))
            .min()
            .unwrap_or_default();
        let canonical = orbit.iter().next() == Some(key);
        records.push((
            r.kind,
            key.clone(),
            to_record(sys, r, orbit_id, orbit.len(), canonical),
        ));
    }
    records.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    log.sort();
    log.dedup();
    Classification {
        records: records.into_iter().map(|x| x.2).collect(),
        log,
    }
}

/// `N_m = <w, zeta_m>` for every node `m` missing at an inhomogeneous end,
/// where `zeta_m` is the coweight dual to `alpha_m` (zero on all other
/// simple roots), i.e. the coefficient of `alpha_m` in `w`.
///
/// Homogeneous ends carry no scalars. At an affine end the complement of the
/// zero set has one node for every genuine polytope, and the local group has
/// no center; the list is empty there.
pub fn center_scalars(sys: &RootSystem, w: &[Q], s: NodeSet, homogeneous: bool) -> Vec<Q> {
    if homogeneous || sys.is_affine() {
        return Vec::new();
    }
    sys.all_nodes().minus(s).iter().map(|m| w[m]).collect()
}

fn end_model(sys: &RootSystem, m: &LocalModel, s: NodeSet, w: &[Q]) -> EndModel {
    let center = center_scalars(sys, w, s, m.is_homogeneous());
    let (pattern, factor, node) = match m.kind {
        ModelKind::Homogeneous { pattern, factor } => (Some(pattern), Some(factor), None),
        ModelKind::Inhomogeneous { node } => (None, None, Some(sys.label(node))),
    };
    let triple = if center.is_empty() {
        m.triple.clone()
    } else {
        let subs: Vec<String> = center.iter().map(rational::pretty).collect();
        let inner = m.triple.trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(", ").collect();
        format!(
            "(t1+{}, t1+{}, {}_{{{}}})",
            parts[0],
            parts[1],
            parts[2],
            subs.join(",")
        )
    };
    EndModel {
        designation: m.designation(sys, s),
        homogeneous: m.is_homogeneous(),
        pattern,
        factor,
        node,
        support: m.support.iter().map(|i| sys.label(i)).collect(),
        weight: w.to_vec(),
        center,
        triple,
    }
}

fn to_record(
    sys: &RootSystem,
    r: &Raw,
    orbit_id: String,
    orbit_size: usize,
    canonical: bool,
) -> PolytopeRecord {
    let labels = |s: NodeSet| s.iter().map(|i| sys.label(i)).collect::<Vec<_>>();
    let factor = match r.m1.kind {
        ModelKind::Homogeneous { factor, .. } => factor,
        ModelKind::Inhomogeneous { .. } => q(1),
    };
    PolytopeRecord {
        system: sys.id().to_string(),
        kind: r.kind,
        s1: labels(r.s1),
        s2: labels(r.s2),
        x1: r.x1.clone(),
        x2: r.x2.clone(),
        c: r.c,
        omega: r.omega.clone(),
        factor,
        t: r.t,
        model1: end_model(sys, &r.m1, r.s1, &r.omega),
        model2: end_model(sys, &r.m2, r.s2, &r.far),
        orbit_id,
        orbit_size,
        canonical,
    }
}

/// A broken invariant, with the offending record's index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub system: String,
    pub record: Option<usize>,
    pub message: String,
}

fn positions(sys: &RootSystem, labels: &[usize]) -> NodeSet {
    NodeSet::from_iter(labels.iter().filter_map(|&l| sys.position(l)))
}

/// Checks every record invariant and the set-level invariants.
pub fn check(sys: &RootSystem, mode: Mode, records: &[PolytopeRecord]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (idx, r) in records.iter().enumerate() {
        for msg in check_record(sys, mode, r) {
            out.push(Violation {
                system: sys.id().into(),
                record: Some(idx),
                message: msg,
            });
        }
    }
    // automorphism closure, on the underlying oriented polytopes
    let keys: BTreeSet<String> = records.iter().map(|r| record_signature(sys, r)).collect();
    let autos = sys.automorphisms();
    for (idx, r) in records.iter().enumerate() {
        for p in &autos {
            let img = permute_record_signature(sys, r, p);
            if !keys.contains(&img) {
                out.push(Violation {
                    system: sys.id().into(),
                    record: Some(idx),
                    message: format!("image under automorphism {p:?} is missing"),
                });
                break;
            }
        }
    }
    out
}

/// Orientation-free signature: kind, unordered ends (zero set, model, weight).
fn record_signature(sys: &RootSystem, r: &PolytopeRecord) -> String {
    signature_of(sys, r, &(0..sys.len()).collect::<Vec<_>>())
}

fn permute_record_signature(sys: &RootSystem, r: &PolytopeRecord, p: &[usize]) -> String {
    signature_of(sys, r, p)
}

fn signature_of(sys: &RootSystem, r: &PolytopeRecord, p: &[usize]) -> String {
    let pv = |v: &[Q]| {
        let mut out = vec![Q::zero(); v.len()];
        for (i, x) in v.iter().enumerate() {
            out[p[i]] = *x;
        }
        out
    };
    let ps = |labels: &[usize]| positions(sys, labels).map(p).0;
    let end = |x: &[Q], s: &[usize], m: &EndModel| {
        let node = m.node.and_then(|l| sys.position(l)).map(|i| p[i]);
        format!(
            "{}|{:b}|{:?}|{}|{:?}|{:b}",
            vec_str(&pv(x)),
            ps(s),
            m.pattern,
            m.factor
                .map(|f| rational::to_string(&f))
                .unwrap_or_default(),
            node,
            ps(&m.support)
        )
    };
    let a = end(&r.x1, &r.s1, &r.model1);
    let b = end(&r.x2, &r.s2, &r.model2);
    let (a, b) = if r.kind == Kind::Mixed || a <= b {
        (a, b)
    } else {
        (b, a)
    };
    format!("{}#{a}#{b}", r.kind)
}

fn check_record(sys: &RootSystem, mode: Mode, r: &PolytopeRecord) -> Vec<String> {
    let mut bad = Vec::new();
    let n = sys.len();
    let all = sys.all_nodes();
    let s1 = positions(sys, &r.s1);
    let s2 = positions(sys, &r.s2);
    if r.x1.len() != n || r.x2.len() != n || r.omega.len() != n {
        return vec!["vector length differs from node count".into()];
    }
    for (x, s, name) in [(&r.x1, s1, "X1"), (&r.x2, s2, "X2")] {
        if let Err(e) = alcove::AlcovePoint::new(sys, x.clone()) {
            bad.push(format!("{name}: {e}"));
        }
        if alcove::zero_set(x) != s {
            bad.push(format!("zero set of {name} differs from the recorded face"));
        }
    }
    if !r.c.is_positive() {
        bad.push("step c is not positive".into());
    }
    if alcove::translate(sys, &r.x1, r.c, &r.omega) != r.x2 {
        bad.push("X2 differs from X1 + c omega".into());
    }
    if !touches_all_walls(sys, s1, s2) {
        bad.push("polytope does not touch every wall, or an end is degenerate".into());
    }
    if sys.pairings(&r.omega).iter().any(|p| !p.is_integer()) {
        bad.push("omega is not integral".into());
    }
    // the weight at each end realizes its model
    for (m, s, w) in [(&r.model1, s1, &r.omega), (&r.model2, s2, &r.model2.weight)] {
        let p = sys.pairings(w);
        if m.homogeneous {
            let on_support = m
                .support
                .iter()
                .all(|&l| sys.position(l).map_or(false, |i| s.contains(i)));
            if !on_support {
                bad.push(format!("{}: support is not in the zero set", m.designation));
            }
        } else {
            let Some(k) = m.node.and_then(|l| sys.position(l)) else {
                bad.push("inhomogeneous model without node".into());
                continue;
            };
            for j in s.iter() {
                let want = if j == k { q(1) } else { Q::zero() };
                if p[j] != want {
                    bad.push(format!(
                        "{}: pairing at node {} is {}",
                        m.designation,
                        sys.label(j),
                        p[j]
                    ));
                }
            }
        }
    }
    // the far weight is -omega modulo delta
    let far_p = sys.pairings(&r.model2.weight);
    if far_p != neg(&sys.pairings(&r.omega)) {
        bad.push("far weight does not pair as -omega".into());
    }
    let miss1 = all.minus(s1).len();
    let miss2 = all.minus(s2).len();
    match r.kind {
        Kind::Bihom => {
            if mode == Mode::Hamiltonian || !sys.is_affine() {
                bad.push("bihomogeneous polytope in a finite system".into());
            } else {
                if miss1 > 2 || miss2 > 2 {
                    bad.push("bihom end misses more than two nodes".into());
                }
                match r.t {
                    Some(t) => {
                        let ok = (0..n)
                            .all(|i| r.omega[i] + r.model2.weight[i] == t * q(sys.marks()[i]));
                        if !ok || !t.is_positive() {
                            bad.push("omega + sharp differs from t delta".into());
                        }
                    }
                    None => bad.push("bihom record without t".into()),
                }
            }
        }
        Kind::Biinhom => {
            if miss1 != 1 || miss2 != 1 {
                bad.push("biinhom end misses more than one node".into());
            }
        }
        Kind::Mixed => {
            if miss1 != 1 {
                bad.push("homogeneous end of a mixed polytope misses more than one node".into());
            }
            if !r.model1.homogeneous || r.model2.homogeneous {
                bad.push("mixed record not stored homogeneous end first".into());
            }
        }
    }
    // an inhomogeneous end I_k has the other end missing exactly k
    for (m, other) in [(&r.model1, s2), (&r.model2, s1)] {
        if let Some(k) = m.node.and_then(|l| sys.position(l)) {
            if other != all.without(k) {
                bad.push(format!(
                    "{}: far zero set is not S minus node {}",
                    m.designation,
                    sys.label(k)
                ));
            }
        }
    }
    if mode == Mode::Genuine && (r.model1.center.iter().chain(&r.model2.center)).any(|x| *x != q(1))
    {
        bad.push("genuine record with center scalar other than 1".into());
    }
    bad
}
