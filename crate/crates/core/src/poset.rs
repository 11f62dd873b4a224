//! Finite bounded posets: cones, extremal elements, the four subset
//! relations, meets and joins, and the order-theoretic predicates built on
//! them.
//!
//! Elements are plain indices `0..n`. The order is stored twice, as the
//! up-set and the down-set of every element, so that the lower cone of a
//! subset is one bitset intersection per member.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("a poset needs at least one element")]
    Empty,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element `{0}`")]
    UnknownLabel(String),
    #[error("element index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("cover pair `{0} {0}` relates an element to itself")]
    SelfCover(String),
    #[error("order is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("order is not antisymmetric: `{0}` and `{1}` lie below each other")]
    NotAntisymmetric(String, String),
    #[error("order is not transitive: `{0}` <= `{1}` <= `{2}` but not `{0}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("poset has no least element")]
    NoBottom,
    #[error("poset has no greatest element")]
    NoTop,
}

/// The four relations between subsets of a poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetOrder {
    /// `A <= B`: every member of `A` lies below every member of `B`.
    All,
    /// `A <=_1 B`: every member of `A` lies below some member of `B`.
    Le1,
    /// `A <=_2 B`: every member of `B` lies above some member of `A`.
    Le2,
    /// `A ~_2 B`: `<=_2` in both directions.
    Approx2,
}

/// A finite bounded poset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    labels: Vec<String>,
    up: Vec<Subset>,
    down: Vec<Subset>,
    bottom: usize,
    top: usize,
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.labels[x], self.labels[y]))
            .collect();
        f.debug_struct("FinitePoset")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

impl FinitePoset {
    /// Builds the order as the reflexive-transitive closure of `covers`,
    /// where each pair `(x, y)` states `x < y`.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = labels.len();
        check_labels(&labels)?;
        let mut up: Vec<Subset> = (0..n).map(|x| Subset::singleton(n, x)).collect();
        for &(x, y) in covers {
            if x >= n {
                return Err(PosetError::IndexOutOfRange(x));
            }
            if y >= n {
                return Err(PosetError::IndexOutOfRange(y));
            }
            if x == y {
                return Err(PosetError::SelfCover(labels[x].clone()));
            }
            up[x].insert(y);
        }
        // Warshall over bitset rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        Self::from_up_sets(labels, up)
    }

    /// Convenience constructor from string labels and string cover pairs.
    pub fn from_labeled(labels: &[&str], covers: &[(&str, &str)]) -> Result<Self, PosetError> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        check_labels(&labels)?;
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let look = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| PosetError::UnknownLabel(s.to_string()))
        };
        let pairs = covers
            .iter()
            .map(|&(a, b)| Ok((look(a)?, look(b)?)))
            .collect::<Result<Vec<_>, PosetError>>()?;
        Self::from_covers(labels, &pairs)
    }

    /// Builds a poset from a full order matrix, validating that it is a
    /// bounded partial order.
    pub fn from_leq(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<Self, PosetError> {
        let n = labels.len();
        check_labels(&labels)?;
        let mut up = vec![Subset::empty(n); n];
        for x in 0..n {
            for y in 0..n {
                if leq[x][y] {
                    up[x].insert(y);
                }
            }
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(PosetError::NotReflexive(labels[x].clone()));
            }
            for y in up[x].iter() {
                for z in up[y].iter() {
                    if !up[x].contains(z) {
                        return Err(PosetError::NotTransitive(
                            labels[x].clone(),
                            labels[y].clone(),
                            labels[z].clone(),
                        ));
                    }
                }
            }
        }
        Self::from_up_sets(labels, up)
    }

    /// `up[x]` must already be the reflexive, transitive up-set of `x`.
    fn from_up_sets(labels: Vec<String>, up: Vec<Subset>) -> Result<Self, PosetError> {
        let n = labels.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        let mut down = vec![Subset::empty(n); n];
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(PosetError::NotAntisymmetric(
                        labels[x].clone(),
                        labels[y].clone(),
                    ));
                }
                down[y].insert(x);
            }
        }
        let bottom = (0..n).find(|&x| up[x].len() == n).ok_or(PosetError::NoBottom)?;
        let top = (0..n).find(|&x| down[x].len() == n).ok_or(PosetError::NoTop)?;
        Ok(FinitePoset {
            labels,
            up,
            down,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Looks up a label, failing with [`PosetError::UnknownLabel`].
    pub fn elem(&self, label: &str) -> Result<usize, PosetError> {
        self.index_of(label)
            .ok_or_else(|| PosetError::UnknownLabel(label.to_string()))
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// The principal filter `[x, 1]`.
    pub fn up_set(&self, x: usize) -> &Subset {
        &self.up[x]
    }

    /// The principal ideal `[0, x]`.
    pub fn down_set(&self, x: usize) -> &Subset {
        &self.down[x]
    }

    pub fn empty_set(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn singleton(&self, x: usize) -> Subset {
        Subset::singleton(self.len(), x)
    }

    /// Builds a subset, rejecting indices outside the poset.
    pub fn subset(&self, items: impl IntoIterator<Item = usize>) -> Result<Subset, PosetError> {
        let mut s = self.empty_set();
        for x in items {
            if x >= self.len() {
                return Err(PosetError::IndexOutOfRange(x));
            }
            s.insert(x);
        }
        Ok(s)
    }

    /// Builds a subset from labels.
    pub fn subset_of_labels(&self, labels: &[&str]) -> Result<Subset, PosetError> {
        let mut s = self.empty_set();
        for l in labels {
            s.insert(self.elem(l)?);
        }
        Ok(s)
    }

    /// `L(A)`: the elements below every member of `A`. `L(∅) = P`.
    pub fn lower_cone(&self, a: &Subset) -> Subset {
        let mut out = self.full_set();
        for x in a.iter() {
            out.intersect_with(&self.down[x]);
        }
        out
    }

    /// `U(A)`: the elements above every member of `A`. `U(∅) = P`.
    pub fn upper_cone(&self, a: &Subset) -> Subset {
        let mut out = self.full_set();
        for x in a.iter() {
            out.intersect_with(&self.up[x]);
        }
        out
    }

    /// `L(x, y)`.
    pub fn lower_pair(&self, x: usize, y: usize) -> Subset {
        self.down[x].intersection(&self.down[y])
    }

    /// `U(x, y)`.
    pub fn upper_pair(&self, x: usize, y: usize) -> Subset {
        self.up[x].intersection(&self.up[y])
    }

    /// Maximal elements of `A` in the induced order. `Max ∅ = ∅`.
    pub fn max_of(&self, a: &Subset) -> Subset {
        let mut out = self.empty_set();
        for x in a.iter() {
            let mut above = self.up[x].intersection(a);
            above.remove(x);
            if above.is_empty() {
                out.insert(x);
            }
        }
        out
    }

    /// Minimal elements of `A` in the induced order.
    pub fn min_of(&self, a: &Subset) -> Subset {
        let mut out = self.empty_set();
        for x in a.iter() {
            let mut below = self.down[x].intersection(a);
            below.remove(x);
            if below.is_empty() {
                out.insert(x);
            }
        }
        out
    }

    /// Decides one of the four relations between subsets.
    pub fn subset_rel(&self, a: &Subset, b: &Subset, kind: SetOrder) -> bool {
        match kind {
            SetOrder::All => a.iter().all(|x| b.is_subset(&self.up[x])),
            SetOrder::Le1 => a.iter().all(|x| self.up[x].intersects(b)),
            SetOrder::Le2 => b.iter().all(|y| self.down[y].intersects(a)),
            SetOrder::Approx2 => {
                self.subset_rel(a, b, SetOrder::Le2) && self.subset_rel(b, a, SetOrder::Le2)
            }
        }
    }

    /// `x ∧ y`, when the infimum exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.max_of(&self.lower_pair(x, y)).single()
    }

    /// `x ∨ y`, when the supremum exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.min_of(&self.upper_pair(x, y)).single()
    }

    /// Supremum of an arbitrary subset, if it exists.
    pub fn join_of(&self, a: &Subset) -> Option<usize> {
        self.min_of(&self.upper_cone(a)).single()
    }

    /// Infimum of an arbitrary subset, if it exists.
    pub fn meet_of(&self, a: &Subset) -> Option<usize> {
        self.max_of(&self.lower_cone(a)).single()
    }

    /// True when every pair has a meet and a join.
    pub fn is_lattice(&self) -> bool {
        self.lattice_failure().is_none()
    }

    /// First pair lacking a meet or a join.
    pub fn lattice_failure(&self) -> Option<(usize, usize)> {
        for x in self.elements() {
            for y in (x + 1)..self.len() {
                if self.join(x, y).is_none() || self.meet(x, y).is_none() {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// True when every pair has a join.
    pub fn is_join_semilattice(&self) -> bool {
        self.elements()
            .all(|x| ((x + 1)..self.len()).all(|y| self.join(x, y).is_some()))
    }

    /// Distributivity of a poset via `L(U(x,y),z) = LU(L(x,z),L(y,z))`.
    pub fn is_distributive(&self) -> bool {
        let verdict = self.distributivity_failure().is_none();
        #[cfg(debug_assertions)]
        for variant in 1..4 {
            debug_assert_eq!(
                verdict,
                self.distributive_variant_failure(variant).is_none(),
                "LU-identity variant {variant} disagrees with the first on {self:?}"
            );
        }
        verdict
    }

    /// A triple `(x, y, z)` violating the first LU-identity.
    pub fn distributivity_failure(&self) -> Option<(usize, usize, usize)> {
        self.distributive_variant_failure(0)
    }

    /// The four binary LU-identities; `variant` selects one of them.
    pub fn distributive_variant_failure(&self, variant: u8) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (lhs, rhs) = match variant {
                        0 => {
                            let lhs = self.lower_cone(&self.upper_pair(x, y)).intersection(&self.down[z]);
                            let rhs = self.lower_cone(
                                &self.upper_cone(&self.lower_pair(x, z).union(&self.lower_pair(y, z))),
                            );
                            (lhs, rhs)
                        }
                        1 => {
                            let lhs = self.upper_cone(&self.lower_pair(x, z).union(&self.lower_pair(y, z)));
                            let mut inner = self.upper_pair(x, y);
                            inner.insert(z);
                            let rhs = self.upper_cone(&self.lower_cone(&inner));
                            (lhs, rhs)
                        }
                        2 => {
                            let lhs = self.upper_cone(&self.lower_pair(x, y)).intersection(&self.up[z]);
                            let rhs = self.upper_cone(
                                &self.lower_cone(&self.upper_pair(x, z).union(&self.upper_pair(y, z))),
                            );
                            (lhs, rhs)
                        }
                        _ => {
                            let lhs = self.lower_cone(&self.upper_pair(x, z).union(&self.upper_pair(y, z)));
                            let mut inner = self.lower_pair(x, y);
                            inner.insert(z);
                            let rhs = self.lower_cone(&self.upper_cone(&inner));
                            (lhs, rhs)
                        }
                    };
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// The n-ary identity `L(U(x_1..x_k), z) = LU(L(x_1,z), .., L(x_k,z))`
    /// for one tuple.
    pub fn nary_lu_identity_holds(&self, xs: &[usize], z: usize) -> bool {
        let xs_set = Subset::from_iter_in(self.len(), xs.iter().copied());
        let lhs = self.lower_cone(&self.upper_cone(&xs_set)).intersection(&self.down[z]);
        let mut parts = self.empty_set();
        for &x in xs {
            parts.union_with(&self.lower_pair(x, z));
        }
        let rhs = self.lower_cone(&self.upper_cone(&parts));
        lhs == rhs
    }

    /// The dual n-ary identity `U(L(x_1..x_k), z) = UL(U(x_1,z), .., U(x_k,z))`.
    pub fn nary_ul_identity_holds(&self, xs: &[usize], z: usize) -> bool {
        let xs_set = Subset::from_iter_in(self.len(), xs.iter().copied());
        let lhs = self.upper_cone(&self.lower_cone(&xs_set)).intersection(&self.up[z]);
        let mut parts = self.empty_set();
        for &x in xs {
            parts.union_with(&self.upper_pair(x, z));
        }
        let rhs = self.upper_cone(&self.lower_cone(&parts));
        lhs == rhs
    }

    /// mub-completeness checked for every subset `M` with `|M| <= max_size`.
    ///
    /// On a finite poset the check passes for every size: the upper bounds
    /// of `M` below `x` form a nonempty finite set, whose minimal elements
    /// are minimal upper bounds of `M`. The default entry points use
    /// two-element subsets.
    pub fn is_mub_complete_up_to(&self, max_size: usize) -> bool {
        self.bound_completeness_up_to(max_size, true)
    }

    pub fn is_mlb_complete_up_to(&self, max_size: usize) -> bool {
        self.bound_completeness_up_to(max_size, false)
    }

    pub fn is_mub_complete(&self) -> bool {
        self.is_mub_complete_up_to(2)
    }

    pub fn is_mlb_complete(&self) -> bool {
        self.is_mlb_complete_up_to(2)
    }

    fn bound_completeness_up_to(&self, max_size: usize, upper: bool) -> bool {
        let n = self.len();
        let mut ok = true;
        for_each_subset_up_to(n, max_size.min(n), &mut |m: &[usize]| {
            if !ok {
                return;
            }
            let m = Subset::from_iter_in(n, m.iter().copied());
            let (bounds, extremal) = if upper {
                let u = self.upper_cone(&m);
                let mins = self.min_of(&u);
                (u, mins)
            } else {
                let l = self.lower_cone(&m);
                let maxs = self.max_of(&l);
                (l, maxs)
            };
            for x in bounds.iter() {
                let reach = if upper { &self.down[x] } else { &self.up[x] };
                if !extremal.intersects(reach) {
                    ok = false;
                    return;
                }
            }
        });
        ok
    }

    /// Every `L(a, b)` has a maximal element.
    pub fn has_maximality(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| !self.max_of(&self.lower_pair(a, b)).is_empty()))
    }

    /// True when `x < y` with nothing strictly between.
    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        if !self.lt(x, y) {
            return false;
        }
        let between = self.up[x].intersection(&self.down[y]);
        between.len() == 2
    }

    /// All cover pairs `(x, y)`: `x < y` and no `z` with `x < z < y`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.up[x].iter() {
                if self.is_cover(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Elements strictly between `x` and `y`.
    pub fn strictly_between(&self, x: usize, y: usize) -> Subset {
        let mut s = self.up[x].intersection(&self.down[y]);
        s.remove(x);
        s.remove(y);
        s
    }

    /// Atoms: covers of the bottom.
    pub fn atoms(&self) -> Subset {
        let b = self.bottom;
        self.subset(self.elements().filter(|&x| self.is_cover(b, x)))
            .expect("indices in range")
    }

    /// Coatoms: elements covered by the top.
    pub fn coatoms(&self) -> Subset {
        let t = self.top;
        self.subset(self.elements().filter(|&x| self.is_cover(x, t)))
            .expect("indices in range")
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.elements().collect();
        order.sort_by_key(|&x| self.down[x].len());
        let mut h = vec![0; self.len()];
        for &y in &order {
            for x in self.down[y].iter() {
                if x != y {
                    h[y] = h[y].max(h[x] + 1);
                }
            }
        }
        h
    }

    /// The subposet induced on `s`, with the index map back into `self`.
    pub fn induced(&self, s: &Subset) -> Result<(FinitePoset, Vec<usize>), PosetError> {
        let map: Vec<usize> = s.iter().collect();
        let labels = map.iter().map(|&x| self.labels[x].clone()).collect();
        let leq: Vec<Vec<bool>> = map
            .iter()
            .map(|&x| map.iter().map(|&y| self.leq(x, y)).collect())
            .collect();
        Ok((FinitePoset::from_leq(labels, &leq)?, map))
    }

    /// Renders a subset as `{a,b}` using element labels.
    pub fn fmt_set(&self, s: &Subset) -> String {
        let items: Vec<&str> = s.iter().map(|x| self.label(x)).collect();
        format!("{{{}}}", items.join(","))
    }
}

fn check_labels(labels: &[String]) -> Result<(), PosetError> {
    if labels.is_empty() {
        return Err(PosetError::Empty);
    }
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(PosetError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Calls `f` on every sorted subset of `0..n` with at most `k` members,
/// including the empty one.
pub(crate) fn for_each_subset_up_to(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        f(cur);
        if cur.len() == k {
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}
