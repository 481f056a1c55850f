//! Cartan data of finite and affine root systems.
//!
//! Diagrams come from the embedded table `data/diagrams.txt`. Finite types use
//! Bourbaki numbering `1..=n`; affine types add the node `0`. Nodes are
//! addressed by position (index into [`RootSystem::labels`]).
//!
//! The generalized Cartan matrix is stored as `a(i, j) = <alpha_j, alpha_i^vee>`,
//! so row `i` holds the values of the coroot `alpha_i^vee`.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::rational::q;
use crate::{Error, Q};

const TABLE: &str = include_str!("../data/diagrams.txt");

/// A set of node positions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeSet(pub u32);

impl NodeSet {
    pub fn empty() -> Self {
        NodeSet(0)
    }

    pub fn full(n: usize) -> Self {
        NodeSet(((1u64 << n) - 1) as u32)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        NodeSet(it.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        NodeSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        NodeSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Self) -> Self {
        NodeSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        NodeSet(self.0 & o.0)
    }

    pub fn minus(self, o: Self) -> Self {
        NodeSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    pub fn map(self, perm: &[usize]) -> Self {
        NodeSet::from_iter(self.iter().map(|i| perm[i]))
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = NodeSet> {
        let m = self.0 as u64;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == m {
                None
            } else {
                Some(((c | !m) + 1) & m)
            };
            Some(NodeSet(c as u32))
        })
    }
}

/// A connected finite Dynkin type such as `B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FiniteType {
    pub family: char,
    pub rank: usize,
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A connected component of a subdiagram together with its identification
/// with the standard diagram of `ty`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub ty: FiniteType,
    /// `nodes[t]` is the position of standard node `t + 1`.
    pub nodes: Vec<usize>,
    /// Every identification, `nodes` first.
    pub embeddings: Vec<Vec<usize>>,
}

impl Component {
    pub fn set(&self) -> NodeSet {
        NodeSet::from_iter(self.nodes.iter().copied())
    }
}

#[derive(Clone, Debug)]
struct Entry {
    id: String,
    labels: Vec<usize>,
    gcm: Vec<Vec<i64>>,
    marks: Vec<i64>,
}

fn table() -> &'static Result<Vec<Entry>, String> {
    static T: OnceLock<Result<Vec<Entry>, String>> = OnceLock::new();
    T.get_or_init(|| parse_table(TABLE).map_err(|e| e.to_string()))
}

fn parse_table(src: &str) -> Result<Vec<Entry>, Error> {
    let mut out = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| Error::Table {
            line: ln + 1,
            msg: msg.to_string(),
        };
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [id, labels, edges, marks] = fields[..] else {
            return Err(err("expected four fields"));
        };
        let labels: Vec<usize> = labels
            .split_whitespace()
            .map(|s| s.parse().map_err(|_| err("bad label")))
            .collect::<Result<_, _>>()?;
        let n = labels.len();
        let pos = |l: usize| {
            labels
                .iter()
                .position(|&x| x == l)
                .ok_or_else(|| err("unknown node"))
        };
        let mut gcm = vec![vec![0i64; n]; n];
        for i in 0..n {
            gcm[i][i] = 2;
        }
        for e in edges.split_whitespace() {
            let (ends, mult) = match e.split_once(':') {
                Some((ends, m)) => (ends, Some(m)),
                None => (e, None),
            };
            let (i, j) = ends.split_once('-').ok_or_else(|| err("bad edge"))?;
            let i = pos(i.parse().map_err(|_| err("bad edge"))?)?;
            let j = pos(j.parse().map_err(|_| err("bad edge"))?)?;
            let (p, r) = match mult {
                None => (1, 1),
                Some(m) => {
                    let (p, r) = m.split_once(',').ok_or_else(|| err("bad multiplicity"))?;
                    (
                        p.parse().map_err(|_| err("bad multiplicity"))?,
                        r.parse().map_err(|_| err("bad multiplicity"))?,
                    )
                }
            };
            gcm[i][j] = -p;
            gcm[j][i] = -r;
        }
        let marks = if marks == "-" {
            Vec::new()
        } else {
            marks
                .split_whitespace()
                .map(|s| s.parse().map_err(|_| err("bad mark")))
                .collect::<Result<Vec<i64>, _>>()?
        };
        if !marks.is_empty() && marks.len() != n {
            return Err(err("mark count differs from node count"));
        }
        out.push(Entry {
            id: id.to_string(),
            labels,
            gcm,
            marks,
        });
    }
    Ok(out)
}

/// Normalizes a selector such as `a3~1` to the table key `A3~1`.
pub fn normalize_selector(s: &str) -> Result<String, Error> {
    let bad = || Error::BadSelector(s.to_string());
    let s = s.trim();
    let mut chars = s.chars();
    let fam = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
    if !"ABCDEFG".contains(fam) {
        return Err(bad());
    }
    let rest: &str = chars.as_str();
    let (rank, twist) = match rest.split_once('~') {
        Some((r, t)) => (r, Some(t)),
        None => (rest, None),
    };
    let rank: usize = rank.parse().map_err(|_| bad())?;
    let twist: Option<u8> = twist.map(|t| t.parse().map_err(|_| bad())).transpose()?;
    if matches!(twist, Some(t) if !(1..=3).contains(&t)) {
        return Err(bad());
    }
    Ok(match twist {
        Some(t) => format!("{fam}{rank}~{t}"),
        None => format!("{fam}{rank}"),
    })
}

/// All selectors present in the embedded table.
pub fn all_selectors() -> Vec<String> {
    match table() {
        Ok(t) => t.iter().map(|e| e.id.clone()).collect(),
        Err(_) => Vec::new(),
    }
}

/// A finite or affine root system given by its Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    id: String,
    labels: Vec<usize>,
    gcm: Vec<Vec<i64>>,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    sym: Vec<Q>,
}

impl RootSystem {
    /// Loads a system by selector, e.g. `D5~1`, `A4~2` or `F4`.
    pub fn load(selector: &str) -> Result<Self, Error> {
        let id = normalize_selector(selector)?;
        let t = table().as_ref().map_err(|m| Error::Table {
            line: 0,
            msg: m.clone(),
        })?;
        let e = t
            .iter()
            .find(|e| e.id == id)
            .ok_or(Error::UnknownSystem(id.clone()))?;
        Ok(Self::from_parts(
            &e.id,
            e.labels.clone(),
            e.gcm.clone(),
            e.marks.clone(),
        ))
    }

    fn from_parts(id: &str, labels: Vec<usize>, gcm: Vec<Vec<i64>>, marks: Vec<i64>) -> Self {
        let sym = symmetrizer(&gcm);
        let comarks = if marks.is_empty() {
            Vec::new()
        } else {
            // a^vee_i is proportional to d_i a_i
            let raw: Vec<Q> = marks.iter().zip(&sym).map(|(&a, d)| d * q(a)).collect();
            primitive(&raw)
        };
        RootSystem {
            id: id.to_string(),
            labels,
            gcm,
            marks,
            comarks,
            sym,
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn is_affine(&self) -> bool {
        !self.marks.is_empty()
    }

    /// Number of diagram nodes.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The rank `n` of the underlying finite system.
    pub fn rank(&self) -> usize {
        if self.is_affine() {
            self.len() - 1
        } else {
            self.len()
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, pos: usize) -> usize {
        self.labels[pos]
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.len())
    }

    pub fn gcm(&self) -> &[Vec<i64>] {
        &self.gcm
    }

    /// `<alpha_j, alpha_i^vee>`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.gcm[i][j]
    }

    /// Marks `a_i` (coefficients of `delta`); empty for finite systems.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Comarks `a_i^vee` (coefficients of `K`); empty for finite systems.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    /// Symmetrizer `d_i`, proportional to the squared length of `alpha_i`,
    /// long roots normalized to 1.
    pub fn symmetrizer(&self) -> &[Q] {
        &self.sym
    }

    /// `<w, alpha_i^vee>` for a weight given by simple-root coefficients.
    pub fn pairing(&self, w: &[Q], i: usize) -> Q {
        self.gcm[i].iter().zip(w).map(|(&a, k)| k * q(a)).sum()
    }

    pub fn pairings(&self, w: &[Q]) -> Vec<Q> {
        (0..self.len()).map(|i| self.pairing(w, i)).collect()
    }

    /// Rate at which alcove coordinate `i` changes along `w`.
    pub fn transport_rate(&self, w: &[Q], i: usize) -> Q {
        self.sym[i] * self.pairing(w, i)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.gcm[i][j] != 0
    }

    /// Connected components of the subdiagram on `nodes`, each identified
    /// with a standard finite diagram.
    pub fn components(&self, nodes: NodeSet) -> Result<Vec<Component>, Error> {
        let mut seen = NodeSet::empty();
        let mut out = Vec::new();
        for start in nodes.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = vec![start];
            seen = seen.with(start);
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for j in nodes.iter() {
                    if !seen.contains(j) && self.adjacent(i, j) {
                        seen = seen.with(j);
                        comp.push(j);
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(self.identify(&comp)?);
        }
        Ok(out)
    }

    fn identify(&self, comp: &[usize]) -> Result<Component, Error> {
        let r = comp.len();
        let t = table().as_ref().map_err(|m| Error::Table {
            line: 0,
            msg: m.clone(),
        })?;
        let sub = |i: usize, j: usize| self.gcm[comp[i]][comp[j]];
        for fam in ['A', 'B', 'C', 'D', 'E', 'F', 'G'] {
            if fam == 'C' && r == 2 {
                continue; // C2 is recorded as B2
            }
            let id = format!("{fam}{r}");
            let Some(e) = t.iter().find(|e| e.id == id) else {
                continue;
            };
            let isos = isomorphisms(r, |i, j| e.gcm[i][j], sub, false);
            if !isos.is_empty() {
                let embeddings: Vec<Vec<usize>> = isos
                    .into_iter()
                    .map(|m| m.into_iter().map(|k| comp[k]).collect())
                    .collect();
                return Ok(Component {
                    ty: FiniteType {
                        family: fam,
                        rank: r,
                    },
                    nodes: embeddings[0].clone(),
                    embeddings,
                });
            }
        }
        Err(Error::NotFiniteType(
            comp.iter().map(|&p| self.labels[p]).collect(),
        ))
    }

    /// Diagram automorphisms as position permutations, identity first.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let g = |i: usize, j: usize| self.gcm[i][j];
        isomorphisms(self.len(), g, g, false)
    }
}

/// Bijections `phi` with `a(s, t) == b(phi[s], phi[t])`, in lexicographic
/// order of `phi`. With `first_only` the search stops at the first one.
fn isomorphisms(
    n: usize,
    a: impl Fn(usize, usize) -> i64,
    b: impl Fn(usize, usize) -> i64,
    first_only: bool,
) -> Vec<Vec<usize>> {
    fn rec(
        s: usize,
        n: usize,
        a: &dyn Fn(usize, usize) -> i64,
        b: &dyn Fn(usize, usize) -> i64,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        first_only: bool,
    ) {
        if s == n {
            out.push(phi.clone());
            return;
        }
        for t in 0..n {
            if used[t] {
                continue;
            }
            let ok = (0..s).all(|u| a(s, u) == b(t, phi[u]) && a(u, s) == b(phi[u], t));
            if !ok {
                continue;
            }
            used[t] = true;
            phi.push(t);
            rec(s + 1, n, a, b, phi, used, out, first_only);
            phi.pop();
            used[t] = false;
            if first_only && !out.is_empty() {
                return;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        0,
        n,
        &a,
        &b,
        &mut Vec::new(),
        &mut vec![false; n],
        &mut out,
        first_only,
    );
    out
}

fn symmetrizer(gcm: &[Vec<i64>]) -> Vec<Q> {
    let n = gcm.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(q(1));
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i != j && gcm[i][j] != 0 && d[j].is_none() {
                    // d_i a_ij = d_j a_ji
                    d[j] = Some(d[i].unwrap() * q(gcm[i][j]) / q(gcm[j][i]));
                    queue.push_back(j);
                }
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(Option::unwrap).collect();
    let max = d.iter().copied().max().unwrap_or(q(1));
    d.into_iter().map(|x| x / max).collect()
}

/// Scales a positive rational vector to a primitive integer vector.
fn primitive(v: &[Q]) -> Vec<i64> {
    let l = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = v.iter().map(|x| (x * q(l)).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / g).collect()
}
