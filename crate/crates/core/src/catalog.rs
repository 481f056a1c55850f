//! Local models at a vertex of a rank-one polytope.
//!
//! At a vertex `X` with zero set `S` the local model is either homogeneous
//! (the weight is one of a fixed list of patterns supported on `S`) or
//! inhomogeneous (a vector space on which one component of `S` acts by its
//! defining representation).

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::alcove::Profile;
use crate::cartan::{NodeSet, RootSystem};
use crate::rational::{frac, q};
use crate::{Error, Q};

/// Shapes of homogeneous weights, named by the component they live on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pattern {
    /// `alpha` on `A1`.
    #[serde(rename = "A1")]
    A1,
    /// `alpha + alpha'` on two orthogonal `A1` components.
    #[serde(rename = "A1xA1")]
    A1xA1,
    /// `alpha_1 + ... + alpha_r` on `A_r`, `r >= 2`.
    #[serde(rename = "A-chain")]
    AChain,
    /// `alpha_1 + 2 alpha_2 + alpha_3` on `A3`.
    #[serde(rename = "A3-middle")]
    A3Middle,
    /// `alpha_1 + ... + alpha_r` on `B_r`.
    #[serde(rename = "B-chain")]
    BChain,
    /// `alpha_1 + 2 alpha_2 + 3 alpha_3` on `B3`.
    #[serde(rename = "B3-spin")]
    B3Spin,
    /// `alpha_1 + 2 alpha_2 + ... + 2 alpha_{r-1} + alpha_r` on `C_r`, `r >= 3`.
    #[serde(rename = "C")]
    C,
    /// `2 alpha_1 + ... + 2 alpha_{r-2} + alpha_{r-1} + alpha_r` on `D_r`.
    #[serde(rename = "D")]
    D,
    /// `alpha_1 + 2 alpha_2 + 3 alpha_3 + 2 alpha_4` on `F4`.
    #[serde(rename = "F4")]
    F4,
    /// `2 alpha_1 + alpha_2` on `G2`, `alpha_1` short.
    #[serde(rename = "G2")]
    G2,
}

impl Pattern {
    /// Allowed scalings of the base weight.
    pub fn factors(self) -> Vec<Q> {
        match self {
            Pattern::A1 | Pattern::BChain | Pattern::G2 => vec![q(1), q(2)],
            Pattern::A1xA1 | Pattern::A3Middle | Pattern::B3Spin | Pattern::D => {
                vec![frac(1, 2), q(1)]
            }
            Pattern::AChain | Pattern::C | Pattern::F4 => vec![q(1)],
        }
    }

    /// Base coefficients on the standard nodes `1..=r`.
    fn base(self, r: usize) -> Vec<i64> {
        match self {
            Pattern::A1 => vec![1],
            Pattern::A1xA1 => vec![1, 1],
            Pattern::AChain | Pattern::BChain => vec![1; r],
            Pattern::A3Middle => vec![1, 2, 1],
            Pattern::B3Spin => vec![1, 2, 3],
            Pattern::C => (1..=r)
                .map(|i| if i == 1 || i == r { 1 } else { 2 })
                .collect(),
            Pattern::D => (1..=r).map(|i| if i + 2 <= r { 2 } else { 1 }).collect(),
            Pattern::F4 => vec![1, 2, 3, 2],
            Pattern::G2 => vec![2, 1],
        }
    }

    /// Patterns living on a component of the given family and rank.
    fn for_component(family: char, r: usize) -> Vec<Pattern> {
        match (family, r) {
            ('A', 1) => vec![Pattern::A1],
            ('A', 3) => vec![Pattern::AChain, Pattern::A3Middle],
            ('A', _) => vec![Pattern::AChain],
            ('B', 3) => vec![Pattern::BChain, Pattern::B3Spin],
            ('B', _) => vec![Pattern::BChain],
            ('C', _) => vec![Pattern::C],
            ('D', _) => vec![Pattern::D],
            ('F', 4) => vec![Pattern::F4],
            ('G', 2) => vec![Pattern::G2],
            _ => vec![],
        }
    }

    fn triple(self, r: usize) -> String {
        match self {
            Pattern::A1 => "(sl(2), gl(1), 0)".into(),
            Pattern::A1xA1 => "(sl(2)+sl(2), sl(2), 0)".into(),
            Pattern::AChain => format!("(sl({}), gl({r}), 0)", r + 1),
            Pattern::A3Middle => "(sl(4), sp(4), 0)".into(),
            Pattern::BChain => format!("(so({}), so({}), 0)", 2 * r + 1, 2 * r),
            Pattern::B3Spin => "(so(7), g2, 0)".into(),
            Pattern::C => format!("(sp({}), sp(2)+sp({}), 0)", 2 * r, 2 * r - 2),
            Pattern::D => format!("(so({}), so({}), 0)", 2 * r, 2 * r - 1),
            Pattern::F4 => "(f4, so(9), 0)".into(),
            Pattern::G2 => "(g2, sl(3), 0)".into(),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::A1 => "A1",
            Pattern::A1xA1 => "A1xA1",
            Pattern::AChain => "A-chain",
            Pattern::A3Middle => "A3-middle",
            Pattern::BChain => "B-chain",
            Pattern::B3Spin => "B3-spin",
            Pattern::C => "C",
            Pattern::D => "D",
            Pattern::F4 => "F4",
            Pattern::G2 => "G2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ModelKind {
    Homogeneous {
        pattern: Pattern,
        #[serde(with = "crate::rational::serde_q")]
        factor: Q,
    },
    /// The distinguished node is a diagram position.
    Inhomogeneous { node: usize },
}

/// A local model on a subdiagram `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalModel {
    pub kind: ModelKind,
    /// Nodes of the pattern or of the component acted on.
    pub support: NodeSet,
    /// Coefficients of the weight for homogeneous models.
    pub weight: Vec<Q>,
    pub triple: String,
}

impl LocalModel {
    pub fn is_homogeneous(&self) -> bool {
        matches!(self.kind, ModelKind::Homogeneous { .. })
    }

    /// Pairing constraints imposed on the weight at a vertex with zero set
    /// `s`. Homogeneous models fix every pairing.
    pub fn profile(&self, sys: &RootSystem, s: NodeSet) -> Profile {
        match self.kind {
            ModelKind::Homogeneous { .. } => Profile::of_weight(sys, &self.weight),
            ModelKind::Inhomogeneous { node } => Profile(
                (0..sys.len())
                    .map(|i| match (i == node, s.contains(i)) {
                        (true, _) => Some(q(1)),
                        (false, true) => Some(Q::zero()),
                        (false, false) => None,
                    })
                    .collect(),
            ),
        }
    }

    /// Short name such as `H(2)` or `I_2(1,3)`, listing the nodes missing
    /// from `s` by label.
    pub fn designation(&self, sys: &RootSystem, s: NodeSet) -> String {
        let missing: Vec<String> = sys
            .all_nodes()
            .minus(s)
            .iter()
            .map(|i| sys.label(i).to_string())
            .collect();
        match self.kind {
            ModelKind::Homogeneous { .. } => format!("H({})", missing.join(",")),
            ModelKind::Inhomogeneous { node } => {
                format!("I_{}({})", sys.label(node), missing.join(","))
            }
        }
    }
}

/// `{alpha in sub : <w, alpha^vee> = 0}`.
pub fn sp_set(sys: &RootSystem, w: &[Q], sub: NodeSet) -> NodeSet {
    NodeSet::from_iter(sub.iter().filter(|&i| sys.pairing(w, i).is_zero()))
}

fn embed(sys: &RootSystem, nodes: &[usize], coeffs: &[i64], factor: Q) -> Vec<Q> {
    let mut w = vec![Q::zero(); sys.len()];
    for (&p, &c) in nodes.iter().zip(coeffs) {
        w[p] = factor * q(c);
    }
    w
}

fn integral(sys: &RootSystem, w: &[Q]) -> bool {
    sys.pairings(w).iter().all(|p| p.is_integer())
}

/// Homogeneous models with support in `sub`, one per distinct weight.
///
/// `A1xA1` is tried on every orthogonal pair of nodes of `sub` and kept when
/// it is dominant on `sub`.
///
/// Every identification of a component with its standard diagram is tried,
/// so patterns that are not invariant under a diagram symmetry appear once
/// per image. Weights with a non-integral pairing are dropped.
pub fn homogeneous_models(sys: &RootSystem, sub: NodeSet) -> Result<Vec<LocalModel>, Error> {
    let comps = sys.components(sub)?;
    let mut out: Vec<LocalModel> = Vec::new();
    let mut push = |m: LocalModel| {
        if integral(sys, &m.weight) && !out.iter().any(|o| o.weight == m.weight) {
            out.push(m);
        }
    };
    for c in &comps {
        let r = c.ty.rank;
        for pat in Pattern::for_component(c.ty.family, r) {
            for emb in &c.embeddings {
                for f in pat.factors() {
                    push(LocalModel {
                        kind: ModelKind::Homogeneous {
                            pattern: pat,
                            factor: f,
                        },
                        support: c.set(),
                        weight: embed(sys, emb, &pat.base(r), f),
                        triple: pat.triple(r),
                    });
                }
            }
        }
    }
    // weights of an affine homogeneous variety are dominant for its group,
    // which keeps only pairs of isolated nodes
    let nodes: Vec<usize> = sub.iter().collect();
    for (i, &a) in nodes.iter().enumerate() {
        for &b in &nodes[i + 1..] {
            if sys.adjacent(a, b) {
                continue;
            }
            for f in Pattern::A1xA1.factors() {
                let weight = embed(sys, &[a, b], &[1, 1], f);
                if sub.iter().any(|j| sys.pairing(&weight, j).is_negative()) {
                    continue;
                }
                push(LocalModel {
                    kind: ModelKind::Homogeneous {
                        pattern: Pattern::A1xA1,
                        factor: f,
                    },
                    support: NodeSet::from_iter([a, b]),
                    weight,
                    triple: Pattern::A1xA1.triple(2),
                });
            }
        }
    }
    Ok(out)
}

/// Inhomogeneous models on `sub`: one per admissible node, namely the ends of
/// type `A` components and the short end of type `C` components (for `B2`
/// the short node).
pub fn inhomogeneous_models(sys: &RootSystem, sub: NodeSet) -> Result<Vec<LocalModel>, Error> {
    let mut out = Vec::new();
    for c in sys.components(sub)? {
        let r = c.ty.rank;
        let (nodes, triple) = match c.ty.family {
            'A' => {
                let mut v = vec![c.nodes[0], c.nodes[r - 1]];
                v.dedup();
                (v, format!("(sl({0}), sl({0}), C^{0})", r + 1))
            }
            'B' if r == 2 => (vec![c.nodes[1]], "(sp(4), sp(4), C^4)".to_string()),
            'C' => (
                vec![c.nodes[0]],
                format!("(sp({0}), sp({0}), C^{0})", 2 * r),
            ),
            _ => continue,
        };
        let mut nodes = nodes;
        nodes.sort_unstable();
        for node in nodes {
            out.push(LocalModel {
                kind: ModelKind::Inhomogeneous { node },
                support: c.set(),
                weight: Vec::new(),
                triple: triple.clone(),
            });
        }
    }
    Ok(out)
}

/// Looks for the homogeneous model at `s2` whose weight is the sharp weight
/// `t delta - w` (affine, `t > 0`) or `-w` (finite).
pub fn match_sharp(
    sys: &RootSystem,
    w: &[Q],
    s2: NodeSet,
) -> Result<Option<(Q, LocalModel)>, Error> {
    for m in homogeneous_models(sys, s2)? {
        if !sys.is_affine() {
            let neg: Vec<Q> = w.iter().map(|x| -x).collect();
            if m.weight == neg {
                return Ok(Some((Q::zero(), m)));
            }
            continue;
        }
        let Some(j) = (0..sys.len()).find(|&j| !s2.contains(j)) else {
            continue;
        };
        let t = w[j] / q(sys.marks()[j]);
        if !t.is_positive() {
            continue;
        }
        let sharp: Vec<Q> = w
            .iter()
            .zip(sys.marks())
            .map(|(k, &a)| t * q(a) - k)
            .collect();
        if sharp == m.weight {
            return Ok(Some((t, m)));
        }
    }
    Ok(None)
}
