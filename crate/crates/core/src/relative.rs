//! Posets carrying one antitone involution `^x` on every principal filter
//! `[x, 1]`, relative paraorthomodularity, the compatibility condition
//! between sections, and the implications `(Min U(x,y))^y` and `(x∨y)^y`.

use thiserror::Error;

use crate::check::{Agreement, Report};
use crate::ortho::{antitone_involutions, OrthoError, OrthoPoset, Verdict};
use crate::poset::{FinitePoset, PosetError};
use crate::subset::Subset;
use crate::table::SetValuedTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelativeError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("section on [{section}, 1]: {detail}")]
    SectionViolation { section: String, detail: String },
    #[error("no section given for [{0}, 1] and it admits {1} antitone involutions")]
    MissingSection(String, usize),
    #[error("join of `{0}` and `{1}` does not exist")]
    JoinMissing(String, String),
    #[error("not a join-semilattice: `{0}` and `{1}` have no join")]
    NotJoinSemilattice(String, String),
    #[error("compatibility fails at `{0}` <= `{1}` <= `{2}`")]
    CompatibilityFailed(String, String, String),
}

const UNDEFINED: usize = usize::MAX;

/// A bounded poset with a section involution on every principal filter.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SectionedPoset {
    poset: FinitePoset,
    /// `sections[x][y] = y^x` for `y >= x`, `UNDEFINED` elsewhere.
    sections: Vec<Vec<usize>>,
}

impl std::ops::Deref for SectionedPoset {
    type Target = FinitePoset;

    fn deref(&self) -> &FinitePoset {
        &self.poset
    }
}

impl SectionedPoset {
    /// Validates explicit section maps. `maps[x][y]` is read only for
    /// `y` in `[x, 1]`.
    pub fn new(poset: FinitePoset, maps: Vec<Vec<usize>>) -> Result<Self, RelativeError> {
        let n = poset.len();
        let mut sections = vec![vec![UNDEFINED; n]; n];
        for x in 0..n {
            let map = maps.get(x).ok_or_else(|| RelativeError::MissingSection(poset.label(x).to_string(), 0))?;
            for y in poset.up_set(x).iter() {
                sections[x][y] = *map.get(y).unwrap_or(&UNDEFINED);
            }
        }
        let s = SectionedPoset { poset, sections };
        s.validate()?;
        Ok(s)
    }

    /// Builds sections from partial pair lists, one list per element.
    /// Each pair `(y, z)` sets `y^x = z` and `z^x = y`. A filter with no
    /// pairs at all is completed automatically: the bottom filter, when
    /// `global` is given, takes that involution; any other filter takes
    /// its antitone involution if there is exactly one.
    pub fn from_pairs(
        poset: FinitePoset,
        pairs: &[Vec<(usize, usize)>],
        global: Option<&[usize]>,
    ) -> Result<Self, RelativeError> {
        let n = poset.len();
        let mut maps = vec![vec![UNDEFINED; n]; n];
        for x in 0..n {
            let given = pairs.get(x).map(Vec::as_slice).unwrap_or(&[]);
            if given.is_empty() {
                if x == poset.bottom() {
                    if let Some(g) = global {
                        maps[x] = g.to_vec();
                        continue;
                    }
                }
                let (filter, map) = poset.induced(poset.up_set(x))?;
                let all = antitone_involutions(&filter);
                if all.len() != 1 {
                    return Err(RelativeError::MissingSection(poset.label(x).to_string(), all.len()));
                }
                for (i, &j) in all[0].iter().enumerate() {
                    maps[x][map[i]] = map[j];
                }
                continue;
            }
            for &(y, z) in given {
                for (u, v) in [(y, z), (z, y)] {
                    let old = maps[x][u];
                    if old != UNDEFINED && old != v {
                        return Err(RelativeError::SectionViolation {
                            section: poset.label(x).to_string(),
                            detail: format!("`{}` is given two images", poset.label(u)),
                        });
                    }
                    maps[x][u] = v;
                }
            }
        }
        Self::new(poset, maps)
    }

    /// Sections induced by a global involution via `z^y = z' ∨ y`, the
    /// standard relative orthocomplement of an orthomodular lattice.
    pub fn from_relative_complements(o: &OrthoPoset) -> Result<Self, RelativeError> {
        let n = o.len();
        let mut maps = vec![vec![UNDEFINED; n]; n];
        for y in 0..n {
            for z in o.up_set(y).iter() {
                maps[y][z] = o
                    .join(o.inv(z), y)
                    .ok_or_else(|| RelativeError::JoinMissing(o.label(o.inv(z)).to_string(), o.label(y).to_string()))?;
            }
        }
        Self::new(o.poset().clone(), maps)
    }

    fn validate(&self) -> Result<(), RelativeError> {
        let p = &self.poset;
        for x in p.elements() {
            let bad = |detail: String| RelativeError::SectionViolation {
                section: p.label(x).to_string(),
                detail,
            };
            let filter = p.up_set(x);
            for y in filter.iter() {
                let s = self.sections[x][y];
                if s == UNDEFINED {
                    return Err(bad(format!("no image for `{}`", p.label(y))));
                }
                if !filter.contains(s) {
                    return Err(bad(format!("image of `{}` leaves the filter", p.label(y))));
                }
            }
            for y in filter.iter() {
                if self.sections[x][self.sections[x][y]] != y {
                    return Err(bad(format!("not an involution at `{}`", p.label(y))));
                }
                for z in filter.iter() {
                    if p.leq(y, z) && !p.leq(self.sections[x][z], self.sections[x][y]) {
                        return Err(bad(format!(
                            "not antitone on `{}` <= `{}`",
                            p.label(y),
                            p.label(z)
                        )));
                    }
                }
            }
            debug_assert_eq!(self.sections[x][x], p.top());
            debug_assert_eq!(self.sections[x][p.top()], x);
        }
        Ok(())
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    /// `y^x`; `y` must lie in `[x, 1]`.
    #[inline]
    pub fn sec(&self, x: usize, y: usize) -> usize {
        debug_assert!(self.poset.leq(x, y));
        self.sections[x][y]
    }

    /// The section map of `[x, 1]` as `(y, y^x)` pairs in index order.
    pub fn section_pairs(&self, x: usize) -> Vec<(usize, usize)> {
        self.poset.up_set(x).iter().map(|y| (y, self.sections[x][y])).collect()
    }

    /// The bounded poset `(P, <=, ^0, 0, 1)`.
    pub fn bottom_ortho(&self) -> Result<OrthoPoset, OrthoError> {
        OrthoPoset::new(self.poset.clone(), self.sections[self.poset.bottom()].clone())
    }

    /// (RP): `x <= y <= z` and `y^x ∧ z = x` (inside `[x, 1]`) imply
    /// `y = z`. The witness is `(x, y, z)`.
    pub fn relative_paraorthomodular(&self) -> Verdict<(usize, usize, usize)> {
        let p = &self.poset;
        for x in p.elements() {
            let filter = p.up_set(x);
            let only_x = p.singleton(x);
            for y in filter.iter() {
                for z in p.up_set(y).iter() {
                    if y == z {
                        continue;
                    }
                    let cone = p.lower_pair(self.sections[x][y], z).intersection(filter);
                    if cone == only_x {
                        return Verdict::Fails((x, y, z));
                    }
                }
            }
        }
        Verdict::Holds
    }

    pub fn is_relatively_paraorthomodular(&self) -> bool {
        self.relative_paraorthomodular().holds()
    }

    /// (C): `x <= y <= z` implies `z^y = z^x ∨ y`. Errors when a needed
    /// join does not exist.
    pub fn check_c(&self) -> Result<Verdict<(usize, usize, usize)>, RelativeError> {
        let p = &self.poset;
        for x in p.elements() {
            for y in p.up_set(x).iter() {
                for z in p.up_set(y).iter() {
                    let zx = self.sections[x][z];
                    let j = p
                        .join(zx, y)
                        .ok_or_else(|| RelativeError::JoinMissing(p.label(zx).to_string(), p.label(y).to_string()))?;
                    if j != self.sections[y][z] {
                        return Ok(Verdict::Fails((x, y, z)));
                    }
                }
            }
        }
        Ok(Verdict::Holds)
    }

    /// `x → y = (Min U(x, y))^y`.
    pub fn impl_i3(&self) -> SetValuedTable {
        let p = &self.poset;
        SetValuedTable::from_fn(p.len(), |x, y| {
            let mins = p.min_of(&p.upper_pair(x, y));
            Subset::from_iter_in(p.len(), mins.iter().map(|w| self.sections[y][w]))
        })
    }

    /// `x → y = (x ∨ y)^y` on join-semilattices.
    pub fn impl_i4(&self) -> Result<SetValuedTable, RelativeError> {
        let p = &self.poset;
        let n = p.len();
        let mut vals = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let j = p
                    .join(x, y)
                    .ok_or_else(|| RelativeError::NotJoinSemilattice(p.label(x).to_string(), p.label(y).to_string()))?;
                vals.push(self.sections[y][j]);
            }
        }
        Ok(SetValuedTable::from_single(n, |x, y| vals[x * n + y]))
    }

    /// The five properties of `(Min U(x,y))^y`. Clauses: `i`, `ii`,
    /// `iii-le`, `iii-join`, `iii-ge`, `iv`, `v`.
    pub fn check_th2(&self) -> Report {
        let p = &self.poset;
        let t = self.impl_i3();
        let top = p.singleton(p.top());
        let mut r = Report::new();
        for x in p.elements() {
            for y in p.elements() {
                let cell = t.cell(x, y);
                r.expect(cell.iter().all(|v| p.leq(y, v)), "i", &[x, y]);
                r.expect(p.leq(x, y) == (*cell == top), "ii", &[x, y]);
                if p.leq(x, y) {
                    r.expect(*cell == top, "iii-le", &[x, y]);
                }
                if let Some(j) = p.join(x, y) {
                    r.expect(*cell == p.singleton(self.sections[y][j]), "iii-join", &[x, y]);
                }
                if p.leq(y, x) {
                    r.expect(*cell == p.singleton(self.sections[y][x]), "iii-ge", &[x, y]);
                }
                let twice = t.lift_left(cell, y);
                r.expect(twice == p.min_of(&p.upper_pair(x, y)), "iv", &[x, y]);
                let thrice = t.lift_left(&twice, y);
                r.expect(thrice == *cell, "v", &[x, y]);
            }
        }
        r
    }

    /// `(P, <=, ^0)` paraorthomodular, against "`x <= y^0` and
    /// `x → y = {y}` imply `x = y^0`".
    pub fn para_via_i3(&self) -> Result<Agreement, OrthoError> {
        let p = &self.poset;
        let lhs = self.bottom_ortho()?.is_paraorthomodular();
        let t = self.impl_i3();
        let b = p.bottom();
        let rhs = p.elements().all(|x| {
            p.elements().all(|y| {
                let y0 = self.sections[b][y];
                !(p.leq(x, y0) && *t.cell(x, y) == p.singleton(y)) || x == y0
            })
        });
        Ok(Agreement::new(lhs, rhs))
    }

    /// Under (C): relative paraorthomodularity against "`x → y = {1}`
    /// implies `x <= y`".
    pub fn relpara_via_impl_under_c(&self) -> Result<Agreement, RelativeError> {
        if let Verdict::Fails((x, y, z)) = self.check_c()? {
            let l = |e: usize| self.poset.label(e).to_string();
            return Err(RelativeError::CompatibilityFailed(l(x), l(y), l(z)));
        }
        let p = &self.poset;
        let t = self.impl_i3();
        let top = p.singleton(p.top());
        let rhs = p
            .elements()
            .all(|x| p.elements().all(|y| *t.cell(x, y) != top || p.leq(x, y)));
        Ok(Agreement::new(self.is_relatively_paraorthomodular(), rhs))
    }

    /// `x <= y` implies `y → z <= x → z` for `(x ∨ y)^y`.
    pub fn antitone_first_arg_i4(&self) -> Result<Verdict<(usize, usize, usize)>, RelativeError> {
        let p = &self.poset;
        let t = self.impl_i4()?;
        for x in p.elements() {
            for y in p.up_set(x).iter() {
                for z in p.elements() {
                    let (yz, xz) = (t.single(y, z).unwrap(), t.single(x, z).unwrap());
                    if !p.leq(yz, xz) {
                        return Ok(Verdict::Fails((x, y, z)));
                    }
                }
            }
        }
        Ok(Verdict::Holds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn e(s: &SectionedPoset, l: &str) -> usize {
        s.elem(l).unwrap()
    }

    #[test]
    fn section_validation() {
        let s = fixtures::fig1a_sectioned();
        assert_eq!(s.sec(e(&s, "a"), e(&s, "a'")), e(&s, "b'"));
        assert_eq!(s.sec(e(&s, "b"), e(&s, "b'")), e(&s, "a'"));
        let f8 = fixtures::fig8_sectioned();
        assert_eq!(f8.sec(e(&f8, "d"), e(&f8, "b'")), e(&f8, "c'"));
        assert_eq!(f8.sec(e(&f8, "a"), e(&f8, "d'")), e(&f8, "d'"));
        let c = fixtures::chain(2);
        let s = SectionedPoset::from_pairs(c.poset().clone(), &[], None).unwrap();
        assert_eq!(s.sec(0, 0), 1);

        let p = fixtures::fig1a().poset().clone();
        let mut maps: Vec<Vec<usize>> = (0..p.len()).map(|_| (0..p.len()).collect()).collect();
        maps[0] = fixtures::fig1a().involution().to_vec();
        assert!(matches!(
            SectionedPoset::new(p, maps),
            Err(RelativeError::SectionViolation { .. })
        ));
    }

    #[test]
    fn relative_paraorthomodularity() {
        assert!(fixtures::fig1a_sectioned().is_relatively_paraorthomodular());
        assert!(fixtures::fig8_sectioned().is_relatively_paraorthomodular());
        let f7 = fixtures::fig7_sectioned();
        assert_eq!(
            f7.relative_paraorthomodular(),
            Verdict::Fails((f7.bottom(), e(&f7, "a"), e(&f7, "b'")))
        );
    }

    #[test]
    fn compatibility() {
        // (C) fails on Fig. 1(a) already at x = 0, y = z = a: a^a = 1 but
        // a^0 ∨ a = a' ∨ a = a'.
        let s = fixtures::fig1a_sectioned();
        assert_eq!(s.check_c(), Ok(Verdict::Fails((0, e(&s, "a"), e(&s, "a")))));
        let om = SectionedPoset::from_relative_complements(&fixtures::boolean_cube()).unwrap();
        assert_eq!(om.check_c(), Ok(Verdict::Holds));
        let c2 = SectionedPoset::from_pairs(fixtures::chain(2).poset().clone(), &[], None).unwrap();
        assert_eq!(c2.check_c(), Ok(Verdict::Holds));
    }

    #[test]
    fn i3_examples() {
        let s = fixtures::fig1a_sectioned();
        let t = s.impl_i3();
        let set = |ls: &[&str]| s.subset_of_labels(ls).unwrap();
        assert_eq!(*t.cell(e(&s, "a"), e(&s, "b")), set(&["a'", "b'"]));
        assert_eq!(*t.cell(e(&s, "a'"), 0), set(&["a"]));
        for x in s.elements() {
            assert_eq!(*t.cell(x, x), s.singleton(s.top()));
            assert_eq!(*t.cell(s.top(), x), s.singleton(x));
        }
    }

    #[test]
    fn i4_examples() {
        let s = fixtures::fig8_sectioned();
        let t = s.impl_i4().unwrap();
        // a ∨ b = d' and d' is fixed in [b, 1].
        assert_eq!(t.single(e(&s, "a"), e(&s, "b")), Some(e(&s, "d'")));
        assert_eq!(t, s.impl_i3());
        assert!(matches!(
            fixtures::fig1a_sectioned().impl_i4(),
            Err(RelativeError::NotJoinSemilattice(..))
        ));
        let om = fixtures::boolean_cube();
        let r = SectionedPoset::from_relative_complements(&om).unwrap();
        assert_eq!(r.impl_i4().unwrap(), crate::implication::impl_i2(&om).unwrap());
    }

    #[test]
    fn implication_properties() {
        for s in [fixtures::fig1a_sectioned(), fixtures::fig8_sectioned(), fixtures::fig7_sectioned()] {
            let r = s.check_th2();
            assert!(r.is_clean(), "{:?}", r.violations);
        }
        assert_eq!(fixtures::fig1a_sectioned().para_via_i3(), Ok(Agreement::new(true, true)));
        assert_eq!(fixtures::fig7_sectioned().para_via_i3(), Ok(Agreement::new(false, false)));
        assert_eq!(fixtures::fig8_sectioned().antitone_first_arg_i4(), Ok(Verdict::Holds));
    }

    #[test]
    fn characterisation_under_compatibility() {
        let r = SectionedPoset::from_relative_complements(&fixtures::boolean_cube()).unwrap();
        assert_eq!(r.relpara_via_impl_under_c(), Ok(Agreement::new(true, true)));
        assert!(matches!(
            fixtures::fig1a_sectioned().relpara_via_impl_under_c(),
            Err(RelativeError::CompatibilityFailed(..))
        ));
    }
}
