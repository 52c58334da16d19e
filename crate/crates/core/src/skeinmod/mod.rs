//! Bases of the skein module of the genus-2 handlebody and the loop actions on them.

mod dumbbell;
mod eval;
mod theta;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{ExactError, Scalars};

pub use dumbbell::{DumbbellAction, DumbbellVariant};
pub use eval::{chebyshev_apply, eval_map, eval_vector, monomial_to_theta};
pub use theta::{d_coeff, d_qprod, ThetaAction};

pub type Triple = [i64; 3];

pub fn is_admissible(i: i64, j: i64, k: i64) -> bool {
    i >= 0 && j >= 0 && k >= 0 && (i + j + k) % 2 == 0 && (i - j).abs() <= k && k <= i + j
}

/// Dumbbell labels: j even, (i,i,j) and (k,k,j) admissible.
pub fn is_dumbbell_index(i: i64, j: i64, k: i64) -> bool {
    j >= 0 && j % 2 == 0 && 2 * i >= j && 2 * k >= j
}

/// Writes an admissible triple as (x+d, y+d, x+y).
pub fn xyd_form(t: Triple) -> Option<(i64, i64, i64)> {
    let [i, j, k] = t;
    if !is_admissible(i, j, k) {
        return None;
    }
    let d = (i + j - k) / 2;
    Some((i - d, j - d, d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "n")]
    Theta,
    #[serde(rename = "m")]
    Dumbbell,
    #[serde(rename = "psi")]
    Psi,
}

impl Basis {
    pub fn admits(self, t: Triple) -> bool {
        match self {
            Basis::Theta | Basis::Psi => is_admissible(t[0], t[1], t[2]),
            Basis::Dumbbell => is_dumbbell_index(t[0], t[1], t[2]),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Basis::Theta => "n",
            Basis::Dumbbell => "m",
            Basis::Psi => "psi",
        }
    }

    /// All basis labels with index sum at most `bound`, in lexicographic order.
    pub fn elements(self, bound: i64) -> Vec<Triple> {
        let mut out = Vec::new();
        for i in 0..=bound {
            for j in 0..=bound - i {
                for k in 0..=bound - i - j {
                    if self.admits([i, j, k]) {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    }
}

impl FromStr for Basis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "n" | "theta" => Ok(Basis::Theta),
            "m" | "dumbbell" => Ok(Basis::Dumbbell),
            "psi" => Ok(Basis::Psi),
            _ => Err(format!("unknown basis {s:?} (expected n, m or psi)")),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Bound on i + j + k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    pub bound: u32,
}

impl Truncation {
    pub fn new(bound: u32) -> Self {
        Truncation { bound }
    }

    /// Checks that an element of index sum `depth` may be hit by something of weight `w`.
    pub fn check(&self, key: Triple, w: u32) -> Result<(), SkeinError> {
        let depth = key.iter().sum::<i64>();
        if depth + w as i64 > self.bound as i64 {
            Err(SkeinError::Truncation { key, weight: w, bound: self.bound })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Loop {
    A1,
    A2,
    A3,
    X,
    B12,
    B13,
    B23,
}

impl Loop {
    pub const ALL: [Loop; 7] = [Loop::A1, Loop::A2, Loop::A3, Loop::X, Loop::B12, Loop::B13, Loop::B23];
    pub const THETA: [Loop; 6] = [Loop::A1, Loop::A2, Loop::A3, Loop::B12, Loop::B13, Loop::B23];

    pub fn name(self) -> &'static str {
        match self {
            Loop::A1 => "A1",
            Loop::A2 => "A2",
            Loop::A3 => "A3",
            Loop::X => "X",
            Loop::B12 => "B12",
            Loop::B13 => "B13",
            Loop::B23 => "B23",
        }
    }
}

impl FromStr for Loop {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Loop::ALL.iter().copied().find(|l| l.name() == s).ok_or_else(|| format!("unknown loop {s:?}"))
    }
}

impl fmt::Display for Loop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("truncation violation: {key:?} under an operator of weight {weight} exceeds bound {bound}")]
    Truncation { key: Triple, weight: u32, bound: u32 },
    #[error("loop {lp} has no action on the {basis} basis")]
    Unsupported { lp: Loop, basis: Basis },
    #[error("{key:?} is not a label of the {basis} basis")]
    Inadmissible { key: Triple, basis: Basis },
    #[error("nonzero coefficient on a non-admissible target {key:?} ({what})")]
    NonzeroDropped { key: Triple, what: &'static str },
    #[error("support {key:?} exceeds the declared shift weight")]
    WeightExceeded { key: Triple },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Sparse vector over one basis; zero coefficients are never stored.
#[derive(Clone, Debug, Serialize)]
#[serde(bound(serialize = "E: Serialize"))]
pub struct SkeinVector<E> {
    pub basis: Basis,
    #[serde(serialize_with = "entries_json")]
    pub entries: BTreeMap<Triple, E>,
}

fn entries_json<E: Serialize, S: serde::Serializer>(m: &BTreeMap<Triple, E>, s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a, E> {
        key: &'a Triple,
        coeff: &'a E,
    }
    s.collect_seq(m.iter().map(|(key, coeff)| Entry { key, coeff }))
}

impl<E: Clone> SkeinVector<E> {
    pub fn zero(basis: Basis) -> Self {
        SkeinVector { basis, entries: BTreeMap::new() }
    }

    pub fn basis_element<K: Scalars<Elem = E>>(k: &K, basis: Basis, t: Triple) -> Result<Self, SkeinError> {
        if !basis.admits(t) {
            return Err(SkeinError::Inadmissible { key: t, basis });
        }
        let mut v = Self::zero(basis);
        v.entries.insert(t, k.one());
        Ok(v)
    }

    pub fn get(&self, t: &Triple) -> Option<&E> {
        self.entries.get(t)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_depth(&self) -> i64 {
        self.entries.keys().map(|t| t.iter().sum::<i64>()).max().unwrap_or(0)
    }

    pub fn add_term<K: Scalars<Elem = E>>(&mut self, k: &K, key: Triple, c: &E) {
        if k.is_zero(c) {
            return;
        }
        match self.entries.get_mut(&key) {
            Some(slot) => {
                let v = k.add(slot, c);
                if k.is_zero(&v) {
                    self.entries.remove(&key);
                } else {
                    *slot = v;
                }
            }
            None => {
                self.entries.insert(key, c.clone());
            }
        }
    }

    /// `self + c · other`.
    pub fn axpy<K: Scalars<Elem = E>>(&mut self, k: &K, c: &E, other: &Self) {
        for (key, x) in &other.entries {
            self.add_term(k, *key, &k.mul(c, x));
        }
    }

    pub fn scaled<K: Scalars<Elem = E>>(&self, k: &K, c: &E) -> Self {
        let mut r = Self::zero(self.basis);
        r.axpy(k, c, self);
        r
    }

    /// Entry-wise differences between two vectors: `(key, lhs, rhs)` with lhs ≠ rhs.
    pub fn differences<K: Scalars<Elem = E>>(&self, k: &K, other: &Self) -> Vec<(Triple, E, E)> {
        let mut keys: Vec<&Triple> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|t| {
                let a = self.entries.get(t).cloned().unwrap_or_else(|| k.zero());
                let b = other.entries.get(t).cloned().unwrap_or_else(|| k.zero());
                (!k.eq(&a, &b)).then_some((*t, a, b))
            })
            .collect()
    }
}

/// A loop action on one basis, written as the image of a single basis label.
pub trait LoopAction: Sync {
    fn basis(&self) -> Basis;

    /// Maximal change of i + j + k; `None` when the loop does not act on this basis.
    fn weight(&self, lp: Loop) -> Option<u32>;

    fn image<K: Scalars>(&self, k: &K, lp: Loop, t: Triple) -> Result<Vec<(Triple, K::Elem)>, SkeinError>;

    /// Linear extension, enforcing the truncation contract.
    fn apply<K: Scalars>(
        &self,
        k: &K,
        lp: Loop,
        v: &SkeinVector<K::Elem>,
        trunc: Truncation,
    ) -> Result<SkeinVector<K::Elem>, SkeinError> {
        let w = self.weight(lp).ok_or(SkeinError::Unsupported { lp, basis: self.basis() })?;
        if v.basis != self.basis() {
            return Err(SkeinError::Unsupported { lp, basis: v.basis });
        }
        let mut out = SkeinVector::zero(self.basis());
        for (t, c) in &v.entries {
            trunc.check(*t, w)?;
            for (target, x) in self.image(k, lp, *t)? {
                out.add_term(k, target, &k.mul(c, &x));
            }
        }
        Ok(out)
    }
}

/// Eigenvalue −s^{2n+2} − s^{−2n−2} of an A-loop on a label with color n.
pub fn a_eigenvalue<K: Scalars>(k: &K, n: i64) -> K::Elem {
    k.neg(&k.add(&k.s_pow(2 * n + 2), &k.s_pow(-2 * n - 2)))
}

/// Pushes a coefficient given as a quantum-integer product, asserting that terms landing
/// outside the basis vanish identically.
pub(crate) fn push_qterm<K: Scalars>(
    k: &K,
    out: &mut Vec<(Triple, K::Elem)>,
    basis: Basis,
    target: Triple,
    q: &crate::exactalg::QProduct,
    what: &'static str,
) -> Result<(), SkeinError> {
    let vanishes = q.den_vanishes() || q.is_zero();
    if !basis.admits(target) {
        return if vanishes { Ok(()) } else { Err(SkeinError::NonzeroDropped { key: target, what }) };
    }
    if !vanishes {
        out.push((target, k.qprod(q)?));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(1, 1, 0));
        assert!(!is_admissible(1, 0, 0));
        assert!(!is_admissible(-1, 1, 0));
        for x in 0..=10 {
            for y in 0..=10 {
                for d in 0..=10 {
                    assert!(is_admissible(x + d, y + d, x + y));
                    assert_eq!(xyd_form([x + d, y + d, x + y]), Some((x, y, d)));
                }
            }
        }
    }

    #[test]
    fn basis_enumeration() {
        assert_eq!(Basis::Theta.elements(0), vec![[0, 0, 0]]);
        assert!(Basis::Dumbbell.elements(6).iter().all(|t| t[1] % 2 == 0));
        assert!(Basis::Dumbbell.elements(6).contains(&[1, 2, 1]));
    }
}
