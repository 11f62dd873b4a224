//! Adjointness between a product and an implication.
//!
//! Four conditions are evaluated over all triples `(x, y, z)`:
//!
//! * (A)  `x ⊙ y ≤ z` implies `x ≤ y → z`
//! * (B)  `x ≤ y → z` implies `x ⊙ y ≤ z`
//! * (A)₂₁ `x ⊙ y ≤₂ z` implies `x ≤₁ y → z`
//! * (B)₁₂ `x ≤₁ y → z` implies `x ⊙ y ≤₂ z`
//!
//! Elements are read as singletons. In (A) and (B) a set-valued side is
//! compared with `≤` between subsets, every element against every element.

use serde::Serialize;
use thiserror::Error;

use crate::check::{Agreement, Report};
use crate::implication::{impl_i, sasaki_impl, sasaki_prod};
use crate::ortho::{OrthoError, OrthoPoset};
use crate::poset::{FinitePoset, SetOrder};
use crate::subset::Subset;
use crate::table::SetValuedTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdjointError {
    #[error(transparent)]
    Ortho(#[from] OrthoError),
    #[error("no least z with {0} <= {1} -> z")]
    NoLeastElement(String, String),
    #[error("no product is adjoint to the implication")]
    PreconditionUnmet,
}

pub type Triple = (usize, usize, usize);

/// Verdicts of the four conditions with the first failing triple of each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjointnessReport {
    pub holds_a: bool,
    pub holds_b: bool,
    pub holds_a21: bool,
    pub holds_b12: bool,
    pub witness_a: Option<Triple>,
    pub witness_b: Option<Triple>,
    pub witness_a21: Option<Triple>,
    pub witness_b12: Option<Triple>,
}

impl AdjointnessReport {
    /// (A) and (B) together: `x ⊙ y ≤ z` iff `x ≤ y → z`.
    pub fn full(&self) -> bool {
        self.holds_a && self.holds_b
    }

    /// (A)₂₁ and (B)₁₂ together.
    pub fn full21(&self) -> bool {
        self.holds_a21 && self.holds_b12
    }
}

/// Evaluates (A), (B), (A)₂₁ and (B)₁₂ for `prod` and `imp` on `p`.
pub fn check_conditions(p: &FinitePoset, prod: &SetValuedTable, imp: &SetValuedTable) -> AdjointnessReport {
    let mut w: [Option<Triple>; 4] = [None; 4];
    for x in p.elements() {
        let sx = p.singleton(x);
        for y in p.elements() {
            let pc = prod.cell(x, y);
            for z in p.elements() {
                let sz = p.singleton(z);
                let ic = imp.cell(y, z);
                let prod_le = p.subset_rel(pc, &sz, SetOrder::All);
                let x_le = p.subset_rel(&sx, ic, SetOrder::All);
                let prod_le2 = p.subset_rel(pc, &sz, SetOrder::Le2);
                let x_le1 = p.subset_rel(&sx, ic, SetOrder::Le1);
                let fails = [prod_le && !x_le, x_le && !prod_le, prod_le2 && !x_le1, x_le1 && !prod_le2];
                for (slot, f) in w.iter_mut().zip(fails) {
                    if f && slot.is_none() {
                        *slot = Some((x, y, z));
                    }
                }
            }
        }
    }
    AdjointnessReport {
        holds_a: w[0].is_none(),
        holds_b: w[1].is_none(),
        holds_a21: w[2].is_none(),
        holds_b12: w[3].is_none(),
        witness_a: w[0],
        witness_b: w[1],
        witness_a21: w[2],
        witness_b12: w[3],
    }
}

/// The report for the Sasaki pair `⊙_S`, `→_S`.
pub fn sasaki_conditions(o: &OrthoPoset) -> Result<AdjointnessReport, OrthoError> {
    Ok(check_conditions(o, &sasaki_prod(o)?, &sasaki_impl(o)?))
}

/// (A) ⟺ (B) and (A)₂₁ ⟺ (B)₁₂ for the Sasaki pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AbEquivalence {
    pub ab: Agreement,
    pub ab21: Agreement,
}

impl AbEquivalence {
    pub fn agree(&self) -> bool {
        self.ab.agree() && self.ab21.agree()
    }
}

pub fn lemma_ab_equiv(o: &OrthoPoset) -> Result<AbEquivalence, OrthoError> {
    let r = sasaki_conditions(o)?;
    Ok(AbEquivalence {
        ab: Agreement::new(r.holds_a, r.holds_b),
        ab21: Agreement::new(r.holds_a21, r.holds_b12),
    })
}

/// Both orthomodular identities on a lattice with an involution `inv`,
/// which need not be antitone:
/// `x ∨ ((x ∨ y) ∧ x') = x ∨ y` and `x ∧ (x' ∨ (x ∧ y)) = x ∧ y`.
pub fn orthomodular_identities(p: &FinitePoset, inv: &[usize]) -> Result<bool, OrthoError> {
    let (meet, join) = lattice_ops(p)?;
    for x in p.elements() {
        for y in p.elements() {
            let xy = join(x, y);
            if join(x, meet(xy, inv[x])) != xy {
                return Ok(false);
            }
            let m = meet(x, y);
            if meet(x, join(inv[x], m)) != m {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Two-sided adjointness `x ⊙_S y ≤ z ⟺ x ≤ y →_S z` on a lattice with an
/// involution, using `x ⊙_S y = y ∧ (x ∨ y')` and `x →_S y = x' ∨ (x ∧ y)`.
pub fn sasaki_adjoint_lattice(p: &FinitePoset, inv: &[usize]) -> Result<bool, OrthoError> {
    let (meet, join) = lattice_ops(p)?;
    for x in p.elements() {
        for y in p.elements() {
            let prod = meet(y, join(x, inv[y]));
            for z in p.elements() {
                let imp = join(inv[y], meet(y, z));
                if p.leq(prod, z) != p.leq(x, imp) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

type Op<'a> = Box<dyn Fn(usize, usize) -> usize + 'a>;

fn lattice_ops(p: &FinitePoset) -> Result<(Op<'_>, Op<'_>), OrthoError> {
    if let Some((x, y)) = p.lattice_failure() {
        return Err(OrthoError::NotALattice(p.label(x).to_string(), p.label(y).to_string()));
    }
    Ok((
        Box::new(|x, y| p.meet(x, y).expect("lattice")),
        Box::new(|x, y| p.join(x, y).expect("lattice")),
    ))
}

/// `oi`: both orthomodular identities; `adj`: Sasaki adjointness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OmIdentity {
    pub oi: bool,
    pub adj: bool,
}

impl OmIdentity {
    pub fn agree(&self) -> bool {
        self.oi == self.adj
    }
}

/// Works for any involution on a lattice; `inv` is not required to be
/// antitone.
pub fn omidentity_equiv_raw(p: &FinitePoset, inv: &[usize]) -> Result<OmIdentity, OrthoError> {
    Ok(OmIdentity {
        oi: orthomodular_identities(p, inv)?,
        adj: sasaki_adjoint_lattice(p, inv)?,
    })
}

pub fn omidentity_equiv(o: &OrthoPoset) -> Result<OmIdentity, OrthoError> {
    omidentity_equiv_raw(o, o.involution())
}

/// Orthomodularity against (A)₂₁ and (B)₁₂ for the Sasaki pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SasOm {
    pub om: bool,
    pub adj21: bool,
}

impl SasOm {
    pub fn agree(&self) -> bool {
        self.om == self.adj21
    }
}

pub fn sasom_equiv(o: &OrthoPoset) -> Result<SasOm, OrthoError> {
    o.require_orthogonal()?;
    let r = sasaki_conditions(o)?;
    Ok(SasOm {
        om: o.is_orthomodular(),
        adj21: r.full21(),
    })
}

/// (A) for `⊙_S`, `→_I` on lattices and (A)₂₁ on orthogonal posets, each
/// of which forces orthomodularity. `None` marks a condition that was not
/// applicable to the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Th3Outcome {
    pub a: Option<bool>,
    pub a21: Option<bool>,
    pub orthomodular: bool,
    pub report: Report,
}

impl Th3Outcome {
    /// Neither condition held, so nothing was asserted.
    pub fn vacuous(&self) -> bool {
        self.a != Some(true) && self.a21 != Some(true)
    }
}

pub fn th3_check(o: &OrthoPoset) -> Result<Th3Outcome, OrthoError> {
    o.require_orthogonal()?;
    let r = check_conditions(o, &sasaki_prod(o)?, &impl_i(o)?);
    let orthomodular = o.is_orthomodular();
    let mut report = Report::new();
    let a = o.is_lattice().then_some(r.holds_a);
    if a == Some(true) {
        report.expect(orthomodular, "th3", &[]);
    }
    if r.holds_a21 {
        report.expect(orthomodular, "posth3", &[]);
    }
    Ok(Th3Outcome {
        a,
        a21: Some(r.holds_a21),
        orthomodular,
        report,
    })
}

/// A single-valued product recovered from an implication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residuation {
    #[serde(skip)]
    pub prod: SetValuedTable,
    pub report: AdjointnessReport,
}

/// For each `(x, y)` takes the least `z` with `x ≤ y → z`, where `≤`
/// compares `x` with every element of the cell. Fails when some pair has
/// no least such `z`; otherwise returns the product and the report of the
/// four conditions for it.
pub fn residuate(p: &FinitePoset, imp: &SetValuedTable) -> Result<Residuation, AdjointError> {
    let n = p.len();
    let mut cells = vec![0; n * n];
    for x in p.elements() {
        let sx = p.singleton(x);
        for y in p.elements() {
            let zs = Subset::from_iter_in(n, p.elements().filter(|&z| p.subset_rel(&sx, imp.cell(y, z), SetOrder::All)));
            let least = zs.iter().find(|&z| zs.is_subset(p.up_set(z)));
            match least {
                Some(z) => cells[x * n + y] = z,
                None => {
                    return Err(AdjointError::NoLeastElement(
                        p.label(x).to_string(),
                        p.label(y).to_string(),
                    ))
                }
            }
        }
    }
    let prod = SetValuedTable::from_single(n, |x, y| cells[x * n + y]);
    let report = check_conditions(p, &prod, imp);
    Ok(Residuation { prod, report })
}

/// A product adjoint to `→_I`: `x ⊙ y ≤ z ⟺ x ≤ y →_I z`.
pub fn adjoint_to_impl_i(o: &OrthoPoset) -> Result<SetValuedTable, AdjointError> {
    let r = residuate(o, &impl_i(o)?)?;
    if r.report.full() {
        Ok(r.prod)
    } else {
        Err(AdjointError::PreconditionUnmet)
    }
}

/// The four consequences of a product adjoint to `→_I`: clauses `i`
/// (`x ⊙ x' = {0}`), `ii` (orthomodular), `iii` (`x ⊙ y ≤₁ Max L(x, y)`
/// and `x ⊙ y ≤ x, y`) and `iv` (weakly Boolean).
pub fn adji_consequences(o: &OrthoPoset, prod: &SetValuedTable) -> Result<Report, AdjointError> {
    let r = check_conditions(o, prod, &impl_i(o)?);
    if !r.full() {
        return Err(AdjointError::PreconditionUnmet);
    }
    let mut rep = Report::new();
    for x in o.elements() {
        rep.expect(*prod.cell(x, o.inv(x)) == o.singleton(o.bottom()), "i", &[x]);
    }
    rep.expect(o.is_orthomodular(), "ii", &[]);
    for x in o.elements() {
        for y in o.elements() {
            let c = prod.cell(x, y);
            let maxs = o.max_of(&o.lower_pair(x, y));
            let ok = o.subset_rel(c, &maxs, SetOrder::Le1)
                && o.subset_rel(c, &o.singleton(x), SetOrder::All)
                && o.subset_rel(c, &o.singleton(y), SetOrder::All);
            rep.expect(ok, "iii", &[x, y]);
        }
    }
    rep.expect(o.is_weakly_boolean(), "iv", &[]);
    Ok(rep)
}

/// Existence of a product adjoint to `→_I` against being a Boolean
/// algebra, plus the side assertion that a Boolean poset with the
/// maximality property is a Boolean algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Adjebp {
    pub exists_adjoint: bool,
    pub is_boolean_algebra: bool,
    /// `Some(ok)` when the input is a Boolean poset with maximality.
    pub boolean_poset_with_maximality: Option<bool>,
}

impl Adjebp {
    pub fn agree(&self) -> bool {
        self.exists_adjoint == self.is_boolean_algebra && self.boolean_poset_with_maximality != Some(false)
    }
}

pub fn adjebp_equiv(o: &OrthoPoset) -> Result<Adjebp, OrthoError> {
    o.require_orthogonal()?;
    let exists_adjoint = match adjoint_to_impl_i(o) {
        Ok(_) => true,
        Err(AdjointError::Ortho(e)) => return Err(e),
        Err(_) => false,
    };
    let is_boolean_algebra = o.is_boolean_algebra();
    let boolean_poset_with_maximality = (o.is_boolean_poset() && o.has_maximality()).then_some(is_boolean_algebra);
    Ok(Adjebp {
        exists_adjoint,
        is_boolean_algebra,
        boolean_poset_with_maximality,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// Direct transcription of the four conditions with explicit loops.
    fn oracle(o: &OrthoPoset, prod: &SetValuedTable, imp: &SetValuedTable) -> [bool; 4] {
        let mut out = [true; 4];
        for x in o.elements() {
            for y in o.elements() {
                for z in o.elements() {
                    let p = prod.cell(x, y).to_vec();
                    let i = imp.cell(y, z).to_vec();
                    let p_le = p.iter().all(|&a| o.leq(a, z));
                    let x_le = i.iter().all(|&b| o.leq(x, b));
                    let p_le2 = p.iter().any(|&a| o.leq(a, z));
                    let x_le1 = i.iter().any(|&b| o.leq(x, b));
                    out[0] &= !p_le || x_le;
                    out[1] &= !x_le || p_le;
                    out[2] &= !p_le2 || x_le1;
                    out[3] &= !x_le1 || p_le2;
                }
            }
        }
        out
    }

    #[test]
    fn conditions_match_oracle() {
        for o in [fixtures::boolean_cube(), fixtures::fig2a(), fixtures::fig2b(), fixtures::fig4(), fixtures::fig3()] {
            let (p, i) = (sasaki_prod(&o).unwrap(), sasaki_impl(&o).unwrap());
            let r = check_conditions(&o, &p, &i);
            assert_eq!([r.holds_a, r.holds_b, r.holds_a21, r.holds_b12], oracle(&o, &p, &i));
        }
    }

    #[test]
    fn cube_is_adjoint() {
        let o = fixtures::boolean_cube();
        let r = sasaki_conditions(&o).unwrap();
        assert!(r.full() && r.full21());
        assert_eq!(omidentity_equiv(&o).unwrap(), OmIdentity { oi: true, adj: true });
        let res = residuate(&o, &impl_i(&o).unwrap()).unwrap();
        assert!(res.report.full());
        for x in o.elements() {
            for y in o.elements() {
                assert_eq!(res.prod.single(x, y), o.meet(x, y));
            }
        }
        assert!(adji_consequences(&o, &res.prod).unwrap().is_clean());
        let e = adjebp_equiv(&o).unwrap();
        assert!(e.exists_adjoint && e.is_boolean_algebra && e.agree());
    }

    #[test]
    fn fig2a_has_no_adjoint() {
        let o = fixtures::fig2a();
        let r = sasaki_conditions(&o).unwrap();
        assert!(!r.holds_a);
        let (x, y, z) = r.witness_a.unwrap();
        let p = sasaki_prod(&o).unwrap();
        let i = sasaki_impl(&o).unwrap();
        assert!(o.subset_rel(p.cell(x, y), &o.singleton(z), SetOrder::All));
        assert!(!o.subset_rel(&o.singleton(x), i.cell(y, z), SetOrder::All));
        assert!(lemma_ab_equiv(&o).unwrap().agree());
        assert!(omidentity_equiv(&o).unwrap().agree());
        let e = adjebp_equiv(&o).unwrap();
        assert!(!e.exists_adjoint && !e.is_boolean_algebra);
    }

    #[test]
    fn fig2b_and_benzene_fail() {
        let o = fixtures::fig2b();
        assert_eq!(sasom_equiv(&o).unwrap(), SasOm { om: false, adj21: false });
        assert!(lemma_ab_equiv(&o).unwrap().agree());
        let e = adjebp_equiv(&o).unwrap();
        assert!(!e.exists_adjoint && !e.is_boolean_algebra);
        let b6 = fixtures::fig4();
        let t = th3_check(&b6);
        // Benzene is not orthogonal: x <= x' but x v x' does not exist.
        match t {
            Ok(t) => assert_eq!(t.a21, Some(false)),
            Err(e) => assert!(matches!(e, OrthoError::NotOrthogonal(..))),
        }
        assert!(!sasaki_conditions_lattice_full(&b6));
    }

    fn sasaki_conditions_lattice_full(o: &OrthoPoset) -> bool {
        sasaki_adjoint_lattice(o, o.involution()).unwrap()
    }

    #[test]
    fn chains() {
        let two = fixtures::chain(2);
        let p = adjoint_to_impl_i(&two).unwrap();
        assert!(adji_consequences(&two, &p).unwrap().is_clean());
        let three = fixtures::chain(4);
        let e = adjebp_equiv(&three).unwrap_or(Adjebp {
            exists_adjoint: false,
            is_boolean_algebra: false,
            boolean_poset_with_maximality: None,
        });
        assert!(!e.exists_adjoint && !e.is_boolean_algebra);
        let b4 = fixtures::boolean(2);
        let p = adjoint_to_impl_i(&b4).unwrap();
        assert!(adji_consequences(&b4, &p).unwrap().is_clean());
    }

    #[test]
    fn th3_on_cube_confirms() {
        let t = th3_check(&fixtures::boolean_cube()).unwrap();
        assert_eq!(t.a, Some(true));
        assert!(t.orthomodular && t.report.is_clean() && !t.vacuous());
    }

    #[test]
    fn omidentity_accepts_plain_involutions() {
        // 0 < a < 1 with the involution swapping 0 and a, fixing 1.
        let p = FinitePoset::from_labeled(&["0", "a", "1"], &[("0", "a"), ("a", "1")]).unwrap();
        let r = omidentity_equiv_raw(&p, &[1, 0, 2]).unwrap();
        assert!(r.agree());
    }
}
