//! Posets with an antitone involution and the structural predicates on
//! them: orthogonality, paraorthomodularity, regularity, complementation,
//! orthomodularity, Booleanness and Kleene lattices.
//!
//! Conditions written `x ∧ y = 0` are read as `L(x, y) = {0}`, so none of
//! the predicates needs the meet to exist as an element.

use std::collections::HashMap;
use std::ops::Deref;

use thiserror::Error;

use crate::poset::{FinitePoset, PosetError, SetOrder};
use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrthoError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("involution lists {got} images for {expected} elements")]
    WrongLength { expected: usize, got: usize },
    #[error("element `{0}` has no involution image")]
    MissingImage(String),
    #[error("element `{0}` is given two different involution images")]
    ConflictingImage(String),
    #[error("involution image of element {0} is out of range")]
    ImageOutOfRange(usize),
    #[error("not an involution: `{0}''` differs from `{0}`")]
    InvolutionViolation(String),
    #[error("not antitone: `{0}` <= `{1}` but `{1}'` is not below `{0}'`")]
    AntitoneViolation(String, String),
    #[error("not an orthogonal poset: `{0}` and `{1}` are orthogonal but have no join")]
    NotOrthogonal(String, String),
    #[error("term undefined: a meet or join needed for `{0}`, `{1}` does not exist")]
    UndefinedTerm(String, String),
    #[error("not a lattice: `{0}` and `{1}` lack a meet or a join")]
    NotALattice(String, String),
    #[error("join of `{0}` and `{1}` does not exist")]
    JoinMissing(String, String),
}

/// Outcome of a checked property: either it holds, or a witness of failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub fn from_failure(failure: Option<W>) -> Self {
        match failure {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }
}

/// Why a poset is not orthomodular.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmFailure {
    /// `x ⊥ y` without a join.
    NotOrthogonal(usize, usize),
    /// `x <= y` but `y ∧ x'` does not exist.
    MissingMeet(usize, usize),
    /// `x <= y` but `x ∨ (y ∧ x') != y` (or the outer join is missing).
    Law(usize, usize),
    /// `x` and `x'` are not complements.
    NotComplement(usize),
}

/// A bounded poset with an antitone involution `'`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrthoPoset {
    poset: FinitePoset,
    inv: Vec<usize>,
}

impl Deref for OrthoPoset {
    type Target = FinitePoset;

    fn deref(&self) -> &FinitePoset {
        &self.poset
    }
}

impl OrthoPoset {
    /// Wraps `poset` with the map `inv`, checking that it is an antitone
    /// involution.
    pub fn new(poset: FinitePoset, inv: Vec<usize>) -> Result<Self, OrthoError> {
        validate_involution(&poset, &inv)?;
        Ok(OrthoPoset { poset, inv })
    }

    /// Builds from labels, cover pairs and involution pairs `(x, x')`.
    /// Each pair is read in both directions; a fixed point is `(m, m)`.
    pub fn from_labeled(
        labels: &[&str],
        covers: &[(&str, &str)],
        inv_pairs: &[(&str, &str)],
    ) -> Result<Self, OrthoError> {
        let poset = FinitePoset::from_labeled(labels, covers)?;
        let inv = involution_from_pairs(&poset, inv_pairs)?;
        Self::new(poset, inv)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn involution(&self) -> &[usize] {
        &self.inv
    }

    /// Image of a subset under `'`.
    pub fn inv_set(&self, a: &Subset) -> Subset {
        Subset::from_iter_in(self.len(), a.iter().map(|x| self.inv[x]))
    }

    fn name(&self, x: usize) -> String {
        self.label(x).to_string()
    }

    /// `x ⊥ y`, i.e. `x <= y'`.
    pub fn orthogonal(&self, x: usize, y: usize) -> bool {
        self.leq(x, self.inv[y])
    }

    /// First orthogonal pair without a join.
    pub fn orthogonality_failure(&self) -> Option<(usize, usize)> {
        for x in self.elements() {
            for y in x..self.len() {
                if self.orthogonal(x, y) && self.join(x, y).is_none() {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_orthogonal_poset(&self) -> bool {
        self.orthogonality_failure().is_none()
    }

    /// Fails with [`OrthoError::NotOrthogonal`] naming a witness.
    pub fn require_orthogonal(&self) -> Result<(), OrthoError> {
        match self.orthogonality_failure() {
            None => Ok(()),
            Some((x, y)) => Err(OrthoError::NotOrthogonal(self.name(x), self.name(y))),
        }
    }

    /// Fails with [`OrthoError::NotALattice`] naming a witness.
    pub fn require_lattice(&self) -> Result<(), OrthoError> {
        match self.lattice_failure() {
            None => Ok(()),
            Some((x, y)) => Err(OrthoError::NotALattice(self.name(x), self.name(y))),
        }
    }

    /// True when `L(x, y) = {0}`.
    pub fn meet_is_zero(&self, x: usize, y: usize) -> bool {
        self.lower_pair(x, y) == self.singleton(self.bottom())
    }

    /// True when `U(x, y) = {1}`.
    pub fn join_is_one(&self, x: usize, y: usize) -> bool {
        self.upper_pair(x, y) == self.singleton(self.top())
    }

    /// Condition (P): `x <= y` and `x' ∧ y = 0` imply `x = y`.
    /// The witness is the first pair `(x, y)` breaking it.
    pub fn paraorthomodular(&self) -> Verdict<(usize, usize)> {
        for x in self.elements() {
            for y in self.up_set(x).iter() {
                if x != y && self.meet_is_zero(self.inv[x], y) {
                    return Verdict::Fails((x, y));
                }
            }
        }
        Verdict::Holds
    }

    pub fn is_paraorthomodular(&self) -> bool {
        self.paraorthomodular().holds()
    }

    pub fn is_sharply_paraorthomodular(&self) -> bool {
        self.is_orthogonal_poset() && self.is_paraorthomodular()
    }

    /// Regularity `x ∧ x' <= y ∨ y'`. On posets where some needed meet or
    /// join is missing the condition is undefined and an error is returned;
    /// this cannot happen on orthogonal posets.
    pub fn regular(&self) -> Result<Verdict<(usize, usize)>, OrthoError> {
        let n = self.len();
        let mut lows = Vec::with_capacity(n);
        let mut highs = Vec::with_capacity(n);
        for x in 0..n {
            let lo = self.meet(x, self.inv[x]);
            let hi = self.join(x, self.inv[x]);
            match (lo, hi) {
                (Some(lo), Some(hi)) => {
                    lows.push(lo);
                    highs.push(hi);
                }
                _ => return Err(OrthoError::UndefinedTerm(self.name(x), self.name(self.inv[x]))),
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !self.leq(lows[x], highs[y]) {
                    return Ok(Verdict::Fails((x, y)));
                }
            }
        }
        Ok(Verdict::Holds)
    }

    pub fn is_regular(&self) -> bool {
        matches!(self.regular(), Ok(Verdict::Holds))
    }

    /// `'` is a complementation: `L(x, x') = {0}` and `U(x, x') = {1}`.
    pub fn complementation(&self) -> Verdict<usize> {
        Verdict::from_failure(
            self.elements()
                .find(|&x| !self.meet_is_zero(x, self.inv[x]) || !self.join_is_one(x, self.inv[x])),
        )
    }

    pub fn is_complementation(&self) -> bool {
        self.complementation().holds()
    }

    /// Orthomodularity: orthogonal, the law `x <= y ⟹ x ∨ (y ∧ x') = y`,
    /// and `'` a complementation, checked in that order.
    pub fn orthomodular(&self) -> Verdict<OmFailure> {
        let verdict = self.orthomodular_inner();
        #[cfg(debug_assertions)]
        if self.is_orthogonal_poset() {
            let om = verdict.holds();
            debug_assert_eq!(om, self.om_u().holds(), "(OM_U) disagrees on {self:?}");
            debug_assert_eq!(om, self.om_ue().holds(), "(OM_UE) disagrees on {self:?}");
        }
        verdict
    }

    fn orthomodular_inner(&self) -> Verdict<OmFailure> {
        if let Some((x, y)) = self.orthogonality_failure() {
            return Verdict::Fails(OmFailure::NotOrthogonal(x, y));
        }
        for x in self.elements() {
            for y in self.up_set(x).iter() {
                let Some(m) = self.meet(y, self.inv[x]) else {
                    return Verdict::Fails(OmFailure::MissingMeet(x, y));
                };
                if self.join(x, m) != Some(y) {
                    return Verdict::Fails(OmFailure::Law(x, y));
                }
            }
        }
        match self.complementation() {
            Verdict::Holds => Verdict::Holds,
            Verdict::Fails(x) => Verdict::Fails(OmFailure::NotComplement(x)),
        }
    }

    pub fn is_orthomodular(&self) -> bool {
        self.orthomodular().holds()
    }

    /// The set `x ∨ (Min U(x, y) ∧ x')` used by the two set-valued forms of
    /// orthomodularity; `None` when a term is undefined.
    fn om_u_image(&self, x: usize, mins: &Subset) -> Option<Subset> {
        let mut out = self.empty_set();
        for z in mins.iter() {
            let m = self.meet(z, self.inv[x])?;
            out.insert(self.join(x, m)?);
        }
        Some(out)
    }

    /// (OM_U): `x ∨ (Min U(x, y) ∧ x') = Min U(x, y)` as sets.
    pub fn om_u(&self) -> Verdict<(usize, usize)> {
        self.om_u_with(|_, a, b| a == b)
    }

    /// (OM_UE): the same identity up to `≈_2`.
    pub fn om_ue(&self) -> Verdict<(usize, usize)> {
        self.om_u_with(|p, a, b| p.subset_rel(a, b, SetOrder::Approx2))
    }

    fn om_u_with(&self, same: impl Fn(&FinitePoset, &Subset, &Subset) -> bool) -> Verdict<(usize, usize)> {
        for x in self.elements() {
            for y in self.elements() {
                let mins = self.min_of(&self.upper_pair(x, y));
                match self.om_u_image(x, &mins) {
                    Some(lhs) if same(&self.poset, &lhs, &mins) => {}
                    _ => return Verdict::Fails((x, y)),
                }
            }
        }
        Verdict::Holds
    }

    /// Weakly Boolean: `a ∧ b = a ∧ b' = 0` implies `a = 0`.
    pub fn weakly_boolean(&self) -> Verdict<(usize, usize)> {
        for a in self.elements() {
            if a == self.bottom() {
                continue;
            }
            for b in self.elements() {
                if self.meet_is_zero(a, b) && self.meet_is_zero(a, self.inv[b]) {
                    return Verdict::Fails((a, b));
                }
            }
        }
        Verdict::Holds
    }

    pub fn is_weakly_boolean(&self) -> bool {
        self.weakly_boolean().holds()
    }

    /// Bounded, distributive and complemented by `'`.
    pub fn is_boolean_poset(&self) -> bool {
        self.is_complementation() && self.is_distributive()
    }

    pub fn is_boolean_algebra(&self) -> bool {
        self.is_lattice() && self.is_boolean_poset()
    }

    /// Distributive, regular, paraorthomodular lattice.
    pub fn is_kleene_lattice(&self) -> bool {
        self.is_lattice() && self.is_distributive() && self.is_regular() && self.is_paraorthomodular()
    }

    /// A pair `(x, y)` with `x < y` and `x' ∧ y = 0` such that
    /// `{0, x, y, y', x', 1}` are six distinct elements ordered exactly as
    /// the benzene ring: `0 < x < y < 1`, `0 < y' < x' < 1`, and each of
    /// `x, y` incomparable with each of `x', y'`.
    pub fn find_benzene(&self) -> Option<(usize, usize)> {
        for x in self.elements() {
            for y in self.up_set(x).iter() {
                if x == y || !self.meet_is_zero(self.inv[x], y) {
                    continue;
                }
                let (x1, y1) = (self.inv[x], self.inv[y]);
                let six = [self.bottom(), x, y, y1, x1, self.top()];
                let distinct = (0..6).all(|i| ((i + 1)..6).all(|j| six[i] != six[j]));
                if !distinct {
                    continue;
                }
                let hexagon = self.lt(y1, x1)
                    && [x, y]
                        .iter()
                        .all(|&u| [x1, y1].iter().all(|&v| !self.comparable(u, v)));
                if hexagon {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// In a Kleene lattice `x ∧ y = 0` implies `x <= y'`; first failure.
    pub fn meet_zero_orthogonality_failure(&self) -> Option<(usize, usize)> {
        for x in self.elements() {
            for y in self.elements() {
                if self.meet_is_zero(x, y) && !self.orthogonal(x, y) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

fn validate_involution(p: &FinitePoset, inv: &[usize]) -> Result<(), OrthoError> {
    let n = p.len();
    if inv.len() != n {
        return Err(OrthoError::WrongLength {
            expected: n,
            got: inv.len(),
        });
    }
    if let Some(x) = (0..n).find(|&x| inv[x] >= n) {
        return Err(OrthoError::ImageOutOfRange(x));
    }
    if let Some(x) = (0..n).find(|&x| inv[inv[x]] != x) {
        return Err(OrthoError::InvolutionViolation(p.label(x).to_string()));
    }
    for x in 0..n {
        for y in p.up_set(x).iter() {
            if !p.leq(inv[y], inv[x]) {
                return Err(OrthoError::AntitoneViolation(
                    p.label(x).to_string(),
                    p.label(y).to_string(),
                ));
            }
        }
    }
    debug_assert_eq!(inv[p.bottom()], p.top());
    Ok(())
}

/// Every antitone involution of `p`, in lexicographic order of the image
/// vectors.
pub fn antitone_involutions(p: &FinitePoset) -> Vec<Vec<usize>> {
    const NONE: usize = usize::MAX;
    let n = p.len();
    let ups: Vec<usize> = p.elements().map(|x| p.up_set(x).len()).collect();
    let downs: Vec<usize> = p.elements().map(|x| p.down_set(x).len()).collect();

    fn consistent(p: &FinitePoset, inv: &[usize], x: usize) -> bool {
        let ix = inv[x];
        for u in p.elements() {
            let iu = inv[u];
            if iu == usize::MAX {
                continue;
            }
            if p.leq(x, u) && !p.leq(iu, ix) {
                return false;
            }
            if p.leq(u, x) && !p.leq(ix, iu) {
                return false;
            }
        }
        true
    }

    fn rec(
        p: &FinitePoset,
        inv: &mut Vec<usize>,
        ups: &[usize],
        downs: &[usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(x) = inv.iter().position(|&v| v == NONE) else {
            out.push(inv.clone());
            return;
        };
        for y in p.elements() {
            if inv[y] != NONE || ups[x] != downs[y] {
                continue;
            }
            inv[x] = y;
            inv[y] = x;
            if consistent(p, inv, x) && consistent(p, inv, y) {
                rec(p, inv, ups, downs, out);
            }
            inv[x] = NONE;
            inv[y] = NONE;
        }
    }

    let mut out = Vec::new();
    rec(p, &mut vec![NONE; n], &ups, &downs, &mut out);
    out.sort();
    out
}

/// Resolves label pairs `(x, x')` into a total map, reading each pair in
/// both directions.
pub fn involution_from_pairs(p: &FinitePoset, pairs: &[(&str, &str)]) -> Result<Vec<usize>, OrthoError> {
    let mut map: HashMap<usize, usize> = HashMap::new();
    for &(a, b) in pairs {
        let (x, y) = (p.elem(a)?, p.elem(b)?);
        for (u, v) in [(x, y), (y, x)] {
            if let Some(&old) = map.get(&u) {
                if old != v {
                    return Err(OrthoError::ConflictingImage(p.label(u).to_string()));
                }
            }
            map.insert(u, v);
        }
    }
    p.elements()
        .map(|x| {
            map.get(&x)
                .copied()
                .ok_or_else(|| OrthoError::MissingImage(p.label(x).to_string()))
        })
        .collect()
}
