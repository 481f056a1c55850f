//! Points of the fundamental alcove (or dominant chamber) and the linear
//! algebra of moving along a weight.
//!
//! A point is stored by its coordinates `v_i = alpha_i(X)`. For an affine
//! system the coordinates satisfy `sum a_i v_i = 1`; for a finite system
//! there is no normalization. Moving from `X` by `c * w` changes `v_i` by
//! `c * d_i * <w, alpha_i^vee>`, where `d_i` is the symmetrizer.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{NodeSet, RootSystem};
use crate::linalg::{self, Solution};
use crate::rational::q;
use crate::{Error, Q};

/// A point of the closed alcove (affine) or closed dominant chamber (finite).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlcovePoint {
    #[serde(with = "crate::rational::serde_q::vec")]
    values: Vec<Q>,
}

impl AlcovePoint {
    pub fn new(sys: &RootSystem, values: Vec<Q>) -> Result<Self, Error> {
        if values.len() != sys.len() {
            return Err(Error::Length {
                got: values.len(),
                expected: sys.len(),
            });
        }
        if let Some(v) = values.iter().find(|v| v.is_negative()) {
            return Err(Error::NotInAlcove(format!("negative coordinate {v}")));
        }
        if sys.is_affine() {
            let s: Q = values.iter().zip(sys.marks()).map(|(v, &a)| v * q(a)).sum();
            if s != q(1) {
                return Err(Error::NotInAlcove(format!("normalization is {s}, not 1")));
            }
        }
        Ok(AlcovePoint { values })
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn zero_set(&self) -> NodeSet {
        zero_set(&self.values)
    }
}

pub fn zero_set(values: &[Q]) -> NodeSet {
    NodeSet::from_iter(
        values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_zero())
            .map(|(i, _)| i),
    )
}

/// `X + c * w`, for `w` given by simple-root coefficients.
pub fn translate(sys: &RootSystem, x: &[Q], c: Q, w: &[Q]) -> Vec<Q> {
    (0..sys.len())
        .map(|i| x[i] + c * sys.transport_rate(w, i))
        .collect()
}

/// Same as [`translate`] with the weight given by its pairings.
pub fn translate_by_pairings(sys: &RootSystem, x: &[Q], c: Q, p: &[Q]) -> Vec<Q> {
    (0..sys.len())
        .map(|i| x[i] + c * sys.symmetrizer()[i] * p[i])
        .collect()
}

/// Pairings `<w, alpha_i^vee>` of a weight, each either fixed or unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile(pub Vec<Option<Q>>);

impl Profile {
    pub fn fixed(p: Vec<Q>) -> Self {
        Profile(p.into_iter().map(Some).collect())
    }

    pub fn of_weight(sys: &RootSystem, w: &[Q]) -> Self {
        Self::fixed(sys.pairings(w))
    }

    /// Combines two partial profiles; `None` if they disagree somewhere.
    pub fn merge(&self, other: &Profile) -> Option<Profile> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| match (a, b) {
                (Some(x), Some(y)) if x != y => Err(()),
                (Some(x), _) | (_, Some(x)) => Ok(Some(*x)),
                (None, None) => Ok(None),
            })
            .collect::<Result<Vec<_>, _>>()
            .ok()
            .map(Profile)
    }
}

/// An isolated solution of a face problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solved {
    pub x1: Vec<Q>,
    pub x2: Vec<Q>,
    pub c: Q,
    /// Resolved pairings of the weight.
    pub pairings: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceSolution {
    Isolated(Solved),
    /// Consistent, with free parameters left.
    Family(usize),
    Empty,
}

/// Finds `X1` with zero set exactly `s1`, a step `c > 0` and the unknown
/// pairings such that `X2 = X1 + c w` lies in the closed alcove and vanishes
/// on `s2`.
///
/// For a finite system the scale is fixed by `c = 1`.
pub fn face_solve(sys: &RootSystem, s1: NodeSet, s2: NodeSet, profile: &Profile) -> FaceSolution {
    let n = sys.len();
    let d = sys.symmetrizer();
    let outside: Vec<usize> = (0..n).filter(|&i| !s1.contains(i)).collect();
    let free: Vec<usize> = (0..n).filter(|&i| profile.0[i].is_none()).collect();
    let m = outside.len() + free.len() + 1;
    let ci = m - 1;
    let vi = |i: usize| outside.iter().position(|&j| j == i);
    let qi = |i: usize| free.iter().position(|&j| j == i).map(|k| outside.len() + k);

    // c * <w, alpha_i^vee> as a linear form in the unknowns
    let step = |i: usize| -> Vec<Q> {
        let mut row = vec![Q::zero(); m];
        match profile.0[i] {
            Some(p) => row[ci] = p,
            None => row[qi(i).unwrap()] = q(1),
        }
        row
    };

    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs: Vec<Q> = Vec::new();
    if sys.is_affine() {
        let mut row = vec![Q::zero(); m];
        for &i in &outside {
            row[vi(i).unwrap()] = q(sys.marks()[i]);
        }
        rows.push(row);
        rhs.push(q(1));
        let mut row = vec![Q::zero(); m];
        for i in 0..n {
            for (r, s) in row.iter_mut().zip(step(i)) {
                *r += s * q(sys.comarks()[i]);
            }
        }
        rows.push(row);
        rhs.push(Q::zero());
    } else {
        let mut row = vec![Q::zero(); m];
        row[ci] = q(1);
        rows.push(row);
        rhs.push(q(1));
    }
    for j in s2.iter() {
        let mut row: Vec<Q> = step(j).into_iter().map(|x| x * d[j]).collect();
        if let Some(k) = vi(j) {
            row[k] += q(1);
        }
        rows.push(row);
        rhs.push(Q::zero());
    }

    let x = match linalg::solve(&rows, &rhs, m) {
        Solution::Unique(x) => x,
        Solution::Family(k) => return FaceSolution::Family(k),
        Solution::Inconsistent => return FaceSolution::Empty,
    };
    let c = x[ci];
    if !c.is_positive() {
        return FaceSolution::Empty;
    }
    let mut x1 = vec![Q::zero(); n];
    for (k, &i) in outside.iter().enumerate() {
        if !x[k].is_positive() {
            return FaceSolution::Empty;
        }
        x1[i] = x[k];
    }
    let pairings: Vec<Q> = (0..n)
        .map(|i| match profile.0[i] {
            Some(p) => p,
            None => x[qi(i).unwrap()] / c,
        })
        .collect();
    let x2 = translate_by_pairings(sys, &x1, c, &pairings);
    if x2.iter().any(|v| v.is_negative()) {
        return FaceSolution::Empty;
    }
    FaceSolution::Isolated(Solved {
        x1,
        x2,
        c,
        pairings,
    })
}

/// Simple-root coefficients of the weight with the given pairings.
///
/// For an affine system the coefficients are defined modulo the marks; the
/// representative with coefficient zero at position `zero_at` is returned.
/// `None` if no such weight exists.
pub fn weight_from_pairings(sys: &RootSystem, p: &[Q], zero_at: usize) -> Option<Vec<Q>> {
    let n = sys.len();
    let mut rows: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| q(sys.a(i, j))).collect())
        .collect();
    let mut rhs = p.to_vec();
    if sys.is_affine() {
        let mut row = vec![Q::zero(); n];
        row[zero_at] = q(1);
        rows.push(row);
        rhs.push(Q::zero());
    }
    match linalg::solve(&rows, &rhs, n) {
        Solution::Unique(k) => Some(k),
        _ => None,
    }
}

/// Re-expresses an affine weight so that its coefficient at `zero_at`
/// vanishes, by adding a multiple of the marks. Finite weights are returned
/// unchanged.
pub fn reduce(sys: &RootSystem, w: &[Q], zero_at: usize) -> Vec<Q> {
    if !sys.is_affine() {
        return w.to_vec();
    }
    let t = w[zero_at] / q(sys.marks()[zero_at]);
    w.iter()
        .zip(sys.marks())
        .map(|(k, &a)| k - t * q(a))
        .collect()
}
