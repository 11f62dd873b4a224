//! Exhaustive enumeration of small bounded posets and the structures
//! built on them, a registry of named predicates, counterexample search,
//! and the theorem harness that re-checks every statement on all
//! enumerated instances.
//!
//! Bounded posets are generated through natural labelings of their
//! interior: element `i` receives an order ideal of the interior elements
//! before it as its strict down-set. Isomorphism classes are represented
//! by the relabeling with the lexicographically least order matrix among
//! relabelings that keep elements sorted by `(|down|, |up|)`.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::adjoint;
use crate::amalgam::generated_families;
use crate::check::Report;
use crate::implication;
use crate::io::format::{emit, StructureFile};
use crate::ortho::{antitone_involutions, OmFailure, OrthoPoset, Verdict};
use crate::poset::FinitePoset;
use crate::relative::SectionedPoset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("instance budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("predicate `{0}` needs an involution")]
    NeedsInvolution(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("max_n must be at least 2")]
    TooSmall,
}

/// The kinds of structure the enumerator produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StructureClass {
    /// Bounded posets.
    Poset,
    /// Bounded lattices.
    Lattice,
    /// Bounded posets with an antitone involution.
    Ortho,
    /// Lattices with an arbitrary involution (a permutation of order at
    /// most two, not necessarily antitone).
    InvolutedLattice,
    /// Bounded posets with an antitone involution on every principal
    /// filter.
    Sectioned,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub class: StructureClass,
    pub min_n: usize,
    pub max_n: usize,
    pub up_to_iso: bool,
    /// Predicate names, all of which must hold.
    pub filters: Vec<String>,
    /// Maximal number of instances produced before giving up.
    pub budget: Option<usize>,
}

impl EnumerationSpec {
    pub fn new(class: StructureClass, max_n: usize) -> Self {
        EnumerationSpec {
            class,
            min_n: 2,
            max_n,
            up_to_iso: true,
            filters: Vec::new(),
            budget: None,
        }
    }

    pub fn with_filters(mut self, filters: &[&str]) -> Self {
        self.filters = filters.iter().map(|s| s.to_string()).collect();
        self
    }
}

/// One enumerated structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Poset(FinitePoset),
    Ortho(OrthoPoset),
    Involuted(FinitePoset, Vec<usize>),
    Sectioned(SectionedPoset),
}

impl Instance {
    pub fn poset(&self) -> &FinitePoset {
        match self {
            Instance::Poset(p) | Instance::Involuted(p, _) => p,
            Instance::Ortho(o) => o,
            Instance::Sectioned(s) => s,
        }
    }

    pub fn len(&self) -> usize {
        self.poset().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The structure as an antitone-involution poset, when it is one.
    pub fn ortho(&self) -> Option<OrthoPoset> {
        match self {
            Instance::Ortho(o) => Some(o.clone()),
            Instance::Sectioned(s) => s.bottom_ortho().ok(),
            _ => None,
        }
    }

    /// Canonical file text, used to report violations.
    pub fn describe(&self) -> String {
        let f = match self {
            Instance::Poset(p) => StructureFile::from_poset(None, p),
            Instance::Ortho(o) => StructureFile::from_ortho(None, o),
            Instance::Involuted(p, inv) => {
                let mut f = StructureFile::from_poset(None, p);
                let mut pairs: Vec<(usize, usize)> = inv.iter().enumerate().map(|(x, &y)| (x.min(y), x.max(y))).collect();
                pairs.sort_unstable();
                pairs.dedup();
                f.inv = pairs;
                f
            }
            Instance::Sectioned(s) => StructureFile::from_sectioned(None, s),
        };
        emit(&f)
    }
}

// ---------------------------------------------------------------------
// Posets

/// Strict down-sets of the interior elements as bitmasks, for every
/// naturally labeled poset on `k` elements, in generation order.
pub fn naturally_labeled(k: usize) -> Vec<Vec<u32>> {
    fn rec(k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = cur.len();
        if i == k {
            out.push(cur.clone());
            return;
        }
        for s in 0u32..(1 << i) {
            let closed = (0..i).all(|j| s & (1 << j) == 0 || cur[j] & !s == 0);
            if closed {
                cur.push(s);
                rec(k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// A canonical relabeling of an interior order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canon {
    pub code: u64,
    /// `order[p]` is the original interior element placed at position `p`.
    pub order: Vec<usize>,
    /// Number of relabelings reaching the least code, which equals the
    /// size of the automorphism group.
    pub automorphisms: usize,
}

fn signature_classes(down: &[u32]) -> Vec<usize> {
    let k = down.len();
    let mut up = vec![0u32; k];
    for (i, &d) in down.iter().enumerate() {
        for (j, u) in up.iter_mut().enumerate() {
            if d & (1 << j) != 0 {
                *u |= 1 << i;
            }
        }
    }
    let mut idx: Vec<usize> = (0..k).collect();
    idx.sort_by_key(|&i| (down[i].count_ones(), up[i].count_ones(), i));
    idx
}

/// Calls `f` with every permutation `perm[p] = element` that keeps the
/// elements of each signature class within the positions of that class.
fn for_each_class_perm(down: &[u32], mut f: impl FnMut(&[usize])) {
    let k = down.len();
    let sorted = signature_classes(down);
    let sig = |i: usize| {
        let up = (0..k).filter(|&j| down[j] & (1 << i) != 0).count();
        (down[i].count_ones(), up)
    };
    let class_of_pos: Vec<(u32, usize)> = sorted.iter().map(|&i| sig(i)).collect();
    fn rec(
        pos: usize,
        k: usize,
        class_of_pos: &[(u32, usize)],
        sig: &dyn Fn(usize) -> (u32, usize),
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if pos == k {
            f(perm);
            return;
        }
        for e in 0..k {
            if !used[e] && sig(e) == class_of_pos[pos] {
                used[e] = true;
                perm.push(e);
                rec(pos + 1, k, class_of_pos, sig, used, perm, f);
                perm.pop();
                used[e] = false;
            }
        }
    }
    rec(0, k, &class_of_pos, &sig, &mut vec![false; k], &mut Vec::with_capacity(k), &mut f);
}

fn code_of(down: &[u32], perm: &[usize]) -> u64 {
    let k = perm.len();
    let mut code = 0u64;
    for a in 0..k {
        for b in (a + 1)..k {
            code = (code << 1) | u64::from(down[perm[b]] & (1 << perm[a]) != 0);
        }
    }
    code
}

pub fn canonicalize(down: &[u32]) -> Canon {
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut count = 0;
    for_each_class_perm(down, |perm| {
        let c = code_of(down, perm);
        match &best {
            Some((b, _)) if c > *b => {}
            Some((b, _)) if c == *b => count += 1,
            _ => {
                best = Some((c, perm.to_vec()));
                count = 1;
            }
        }
    });
    let (code, order) = best.unwrap_or((0, Vec::new()));
    Canon {
        code,
        order,
        automorphisms: count,
    }
}

/// Interior automorphisms as permutations of interior indices.
pub fn interior_automorphisms(down: &[u32]) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..down.len()).collect();
    let base = code_of(down, &id);
    let mut out = Vec::new();
    for_each_class_perm(down, |perm| {
        // perm maps positions to elements; the relabeled order equals the
        // original exactly when perm is an automorphism.
        if code_of(down, perm) == base && (0..perm.len()).all(|i| relabel_ok(down, perm, i)) {
            out.push(perm.to_vec());
        }
    });
    out.sort();
    out
}

fn relabel_ok(down: &[u32], perm: &[usize], i: usize) -> bool {
    (0..perm.len()).all(|j| (down[i] & (1 << j) != 0) == (down[perm[i]] & (1 << perm[j]) != 0))
}

fn interior_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("e{i}")
    }
}

/// The bounded poset `0 < interior < 1`; interior element `i` becomes
/// element `i + 1`.
pub fn bounded_from_interior(down: &[u32]) -> FinitePoset {
    let k = down.len();
    let mut labels = vec!["0".to_string()];
    labels.extend((0..k).map(interior_label));
    labels.push("1".to_string());
    let mut pairs: Vec<(usize, usize)> = (1..=k).flat_map(|i| [(0, i), (i, k + 1)]).collect();
    if k == 0 {
        pairs.push((0, 1));
    }
    for (i, &d) in down.iter().enumerate() {
        for j in 0..k {
            if d & (1 << j) != 0 {
                pairs.push((j + 1, i + 1));
            }
        }
    }
    FinitePoset::from_covers(labels, &pairs).expect("bounded interior order")
}

fn interior_of(p: &FinitePoset) -> (Vec<usize>, Vec<u32>) {
    let inner: Vec<usize> = p.elements().filter(|&x| x != p.bottom() && x != p.top()).collect();
    let down = inner
        .iter()
        .map(|&x| {
            inner
                .iter()
                .enumerate()
                .filter(|&(_, &y)| y != x && p.leq(y, x))
                .fold(0u32, |m, (j, _)| m | (1 << j))
        })
        .collect();
    (inner, down)
}

fn canonical_interior(down: &[u32], c: &Canon) -> Vec<u32> {
    let k = down.len();
    let mut pos = vec![0; k];
    for (p, &e) in c.order.iter().enumerate() {
        pos[e] = p;
    }
    c.order
        .iter()
        .map(|&e| (0..k).filter(|&j| down[e] & (1 << j) != 0).fold(0u32, |m, j| m | (1 << pos[j])))
        .collect()
}

/// Bounded posets on exactly `n` elements: one per isomorphism class in
/// canonical form, or every natural labeling.
pub fn bounded_posets(n: usize, up_to_iso: bool) -> Vec<FinitePoset> {
    if n < 2 {
        return Vec::new();
    }
    let all = naturally_labeled(n - 2);
    if !up_to_iso {
        return all.iter().map(|d| bounded_from_interior(d)).collect();
    }
    let mut seen = std::collections::BTreeMap::new();
    for d in &all {
        let c = canonicalize(d);
        seen.entry(c.code).or_insert_with(|| canonical_interior(d, &c));
    }
    seen.values().map(|d| bounded_from_interior(d)).collect()
}

/// Full-element automorphisms of a bounded poset.
pub fn automorphisms(p: &FinitePoset) -> Vec<Vec<usize>> {
    let (inner, down) = interior_of(p);
    interior_automorphisms(&down)
        .into_iter()
        .map(|perm| {
            let mut full: Vec<usize> = p.elements().collect();
            for (i, &e) in perm.iter().enumerate() {
                full[inner[i]] = inner[e];
            }
            full
        })
        .collect()
}

fn conjugate(sigma: &[usize], map: &[usize]) -> Vec<usize> {
    let mut out = vec![0; map.len()];
    for x in 0..map.len() {
        out[sigma[x]] = sigma[map[x]];
    }
    out
}

/// Keeps each map that is least in its orbit under conjugation.
fn orbit_minimal(maps: Vec<Vec<usize>>, auts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    maps.into_iter()
        .filter(|m| auts.iter().all(|s| conjugate(s, m) >= *m))
        .collect()
}

/// All permutations of order at most two.
pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn rec(map: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(x) = map.iter().position(|&v| v == usize::MAX) else {
            out.push(map.clone());
            return;
        };
        for y in x..map.len() {
            if map[y] == usize::MAX {
                map[x] = y;
                map[y] = x;
                rec(map, out);
                map[x] = usize::MAX;
                map[y] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; n], &mut out);
    out.sort();
    out
}

/// Section families on `p`: every choice of an antitone involution on
/// each principal filter.
fn section_families(p: &FinitePoset, budget: usize) -> Result<Vec<Vec<Vec<usize>>>, SearchError> {
    let n = p.len();
    let mut options: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n);
    for x in p.elements() {
        let (filter, back) = p.induced(p.up_set(x)).expect("filter is bounded");
        let opts = antitone_involutions(&filter)
            .into_iter()
            .map(|inv| {
                let mut m = vec![usize::MAX; n];
                for (i, &j) in inv.iter().enumerate() {
                    m[back[i]] = back[j];
                }
                m
            })
            .collect::<Vec<_>>();
        options.push(opts);
    }
    let total = options.iter().try_fold(1usize, |acc, o| acc.checked_mul(o.len()));
    if total.is_none_or(|t| t > budget) {
        return Err(SearchError::BudgetExceeded(budget));
    }
    let mut out = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for fam in &out {
            for o in &opts {
                let mut f: Vec<Vec<usize>> = fam.clone();
                f.push(o.clone());
                next.push(f);
            }
        }
        out = next;
    }
    Ok(out)
}

fn conjugate_family(sigma: &[usize], fam: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = fam.len();
    let mut out = vec![vec![usize::MAX; n]; n];
    for x in 0..n {
        for y in 0..n {
            if fam[x][y] != usize::MAX {
                out[sigma[x]][sigma[y]] = sigma[fam[x][y]];
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// Predicates

type OrthoPred = fn(&OrthoPoset) -> bool;
type PosetPred = fn(&FinitePoset) -> bool;

/// A named property.
#[derive(Clone, Copy)]
pub enum Predicate {
    Poset(PosetPred),
    Ortho(OrthoPred),
}

impl Predicate {
    pub fn eval_ortho(&self, o: &OrthoPoset) -> bool {
        match self {
            Predicate::Poset(f) => f(o),
            Predicate::Ortho(f) => f(o),
        }
    }
}

const PREDICATES: &[(&str, Predicate)] = &[
    ("lattice", Predicate::Poset(|p| p.is_lattice())),
    ("distributive", Predicate::Poset(|p| p.is_distributive())),
    ("mlb_complete", Predicate::Poset(|p| p.is_mlb_complete())),
    ("mub_complete", Predicate::Poset(|p| p.is_mub_complete())),
    ("maximality", Predicate::Poset(|p| p.has_maximality())),
    ("orthogonal", Predicate::Ortho(|o| o.is_orthogonal_poset())),
    ("paraorthomodular", Predicate::Ortho(|o| o.is_paraorthomodular())),
    ("sharply_paraorthomodular", Predicate::Ortho(|o| o.is_sharply_paraorthomodular())),
    ("orthomodular", Predicate::Ortho(|o| o.is_orthomodular())),
    ("regular", Predicate::Ortho(|o| o.is_regular())),
    ("complementation", Predicate::Ortho(|o| o.is_complementation())),
    ("weakly_boolean", Predicate::Ortho(|o| o.is_weakly_boolean())),
    ("boolean_poset", Predicate::Ortho(|o| o.is_boolean_poset())),
    ("boolean_algebra", Predicate::Ortho(|o| o.is_boolean_algebra())),
    ("kleene_lattice", Predicate::Ortho(|o| o.is_kleene_lattice())),
    ("om_u", Predicate::Ortho(|o| o.om_u().holds())),
    ("om_ue", Predicate::Ortho(|o| o.om_ue().holds())),
    ("benzene_free", Predicate::Ortho(|o| o.find_benzene().is_none())),
];

fn canonical_name(name: &str) -> Option<&'static str> {
    let key = name.trim().replace('-', "_");
    let key = match key.trim_start_matches("is_") {
        "complemented" => "complementation",
        "kleene" => "kleene_lattice",
        "sharply" => "sharply_paraorthomodular",
        "orthogonal_poset" => "orthogonal",
        k => k,
    };
    PREDICATES.iter().map(|(n, _)| *n).find(|n| *n == key)
}

/// Looks a predicate up by name; an `is_` prefix and dashes are accepted.
pub fn predicate(name: &str) -> Option<Predicate> {
    let key = canonical_name(name)?;
    PREDICATES.iter().find(|(n, _)| *n == key).map(|(_, p)| *p)
}

/// Elements showing why the named predicate fails on `o`, for the
/// predicates that have a natural witness. `None` when it holds or no
/// witness is defined.
pub fn witness(name: &str, o: &OrthoPoset) -> Option<Vec<usize>> {
    let two = |w: Option<(usize, usize)>| w.map(|(a, b)| vec![a, b]);
    match canonical_name(name)? {
        "lattice" => two(o.lattice_failure()),
        "distributive" => o.distributivity_failure().map(|(a, b, c)| vec![a, b, c]),
        "orthogonal" => two(o.orthogonality_failure()),
        "paraorthomodular" => two(o.paraorthomodular().witness().copied()),
        "sharply_paraorthomodular" => two(o.orthogonality_failure()).or_else(|| two(o.paraorthomodular().witness().copied())),
        "orthomodular" => o.orthomodular().witness().map(|f| match *f {
            OmFailure::NotOrthogonal(a, b) | OmFailure::MissingMeet(a, b) | OmFailure::Law(a, b) => vec![a, b],
            OmFailure::NotComplement(a) => vec![a],
        }),
        "regular" => o.regular().ok().and_then(|v| two(v.witness().copied())),
        "complementation" => o.complementation().witness().map(|&a| vec![a]),
        "weakly_boolean" => two(o.weakly_boolean().witness().copied()),
        "om_u" => two(o.om_u().witness().copied()),
        "om_ue" => two(o.om_ue().witness().copied()),
        "benzene_free" => two(o.find_benzene()),
        _ => None,
    }
}

pub fn predicate_names() -> Vec<&'static str> {
    PREDICATES.iter().map(|(n, _)| *n).collect()
}

// ---------------------------------------------------------------------
// Enumeration

fn bump(count: &mut usize, budget: Option<usize>) -> Result<(), SearchError> {
    *count += 1;
    match budget {
        Some(b) if *count > b => Err(SearchError::BudgetExceeded(b)),
        _ => Ok(()),
    }
}

/// Every structure of the requested class with `min_n <= n <= max_n`
/// elements satisfying all filters, in a deterministic order: by size,
/// then canonical poset order, then involution or section family.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<Instance>, SearchError> {
    if spec.max_n < 2 {
        return Err(SearchError::TooSmall);
    }
    let preds = spec
        .filters
        .iter()
        .map(|f| predicate(f).ok_or_else(|| SearchError::UnknownPredicate(f.clone())).map(|p| (f, p)))
        .collect::<Result<Vec<_>, _>>()?;
    let needs_inv = preds.iter().find(|(_, p)| matches!(p, Predicate::Ortho(_)));
    if let (Some((name, _)), StructureClass::Poset | StructureClass::Lattice | StructureClass::InvolutedLattice) =
        (needs_inv, spec.class)
    {
        return Err(SearchError::NeedsInvolution(name.to_string()));
    }
    let poset_ok = |p: &FinitePoset| {
        preds.iter().all(|(_, pr)| match pr {
            Predicate::Poset(f) => f(p),
            Predicate::Ortho(_) => true,
        })
    };
    let ortho_ok = |o: &OrthoPoset| preds.iter().all(|(_, pr)| pr.eval_ortho(o));
    let mut out = Vec::new();
    let mut count = 0;
    for n in spec.min_n.max(2)..=spec.max_n {
        for p in bounded_posets(n, spec.up_to_iso) {
            let auts = if spec.up_to_iso { automorphisms(&p) } else { Vec::new() };
            match spec.class {
                StructureClass::Poset | StructureClass::Lattice => {
                    if (spec.class == StructureClass::Poset || p.is_lattice()) && poset_ok(&p) {
                        bump(&mut count, spec.budget)?;
                        out.push(Instance::Poset(p));
                    }
                }
                StructureClass::Ortho => {
                    if !poset_ok(&p) {
                        continue;
                    }
                    let invs = antitone_involutions(&p);
                    for inv in orbit_minimal(invs, &auts) {
                        let o = OrthoPoset::new(p.clone(), inv).expect("antitone involution");
                        if ortho_ok(&o) {
                            bump(&mut count, spec.budget)?;
                            out.push(Instance::Ortho(o));
                        }
                    }
                }
                StructureClass::InvolutedLattice => {
                    if !p.is_lattice() || !poset_ok(&p) {
                        continue;
                    }
                    for inv in orbit_minimal(involutions(n), &auts) {
                        bump(&mut count, spec.budget)?;
                        out.push(Instance::Involuted(p.clone(), inv));
                    }
                }
                StructureClass::Sectioned => {
                    if !poset_ok(&p) {
                        continue;
                    }
                    let cap = spec.budget.unwrap_or(usize::MAX).saturating_sub(count);
                    let fams = section_families(&p, cap)?;
                    for fam in fams {
                        if !auts.iter().all(|s| conjugate_family(s, &fam) >= fam) {
                            continue;
                        }
                        let s = SectionedPoset::new(p.clone(), fam).expect("valid sections");
                        if preds.is_empty() || s.bottom_ortho().is_ok_and(|o| ortho_ok(&o)) {
                            bump(&mut count, spec.budget)?;
                            out.push(Instance::Sectioned(s));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Canonical form of a bounded poset with antitone involution: the code
/// of its order and the least conjugate of its involution.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrthoKey {
    pub n: usize,
    pub code: u64,
    pub inv: Vec<usize>,
}

pub fn ortho_key(o: &OrthoPoset) -> OrthoKey {
    let (inner, down) = interior_of(o);
    let c = canonicalize(&down);
    let cdown = canonical_interior(&down, &c);
    // original element -> canonical index
    let mut to_canon = vec![0; o.len()];
    to_canon[o.bottom()] = 0;
    to_canon[o.top()] = o.len() - 1;
    for (pos, &e) in c.order.iter().enumerate() {
        to_canon[inner[e]] = pos + 1;
    }
    let mut inv = vec![0; o.len()];
    for x in o.elements() {
        inv[to_canon[x]] = to_canon[o.inv(x)];
    }
    let canon_poset = bounded_from_interior(&cdown);
    let inv = automorphisms(&canon_poset)
        .iter()
        .map(|s| conjugate(s, &inv))
        .min()
        .unwrap_or(inv);
    OrthoKey {
        n: o.len(),
        code: c.code,
        inv,
    }
}

// ---------------------------------------------------------------------
// Counterexamples

/// A structure satisfying one property and not another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    pub structure: OrthoPoset,
}

/// Smallest enumerated ortho structure satisfying `a` but not `b`, with
/// sizes taken from `spec`.
pub fn find_counterexample(a: &str, b: &str, spec: &EnumerationSpec) -> Result<Option<Counterexample>, SearchError> {
    let pa = predicate(a).ok_or_else(|| SearchError::UnknownPredicate(a.to_string()))?;
    let pb = predicate(b).ok_or_else(|| SearchError::UnknownPredicate(b.to_string()))?;
    let mut count = 0;
    for n in spec.min_n.max(2)..=spec.max_n {
        let layer = EnumerationSpec {
            class: StructureClass::Ortho,
            min_n: n,
            max_n: n,
            up_to_iso: spec.up_to_iso,
            filters: Vec::new(),
            budget: spec.budget.map(|b| b.saturating_sub(count)),
        };
        let layer = enumerate(&layer).map_err(|e| match (e, spec.budget) {
            (SearchError::BudgetExceeded(_), Some(b)) => SearchError::BudgetExceeded(b),
            (e, _) => e,
        })?;
        for inst in layer {
            bump(&mut count, spec.budget)?;
            let o = inst.ortho().expect("ortho class");
            if pa.eval_ortho(&o) && !pb.eval_ortho(&o) {
                return Ok(Some(Counterexample { n, structure: o }));
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------
// Harness

/// Sizes and budget for a harness run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessSpec {
    pub max_n: usize,
    /// Sectioned sweeps grow fast; they stop at this size.
    pub sectioned_max_n: usize,
    pub budget: Option<usize>,
}

impl HarnessSpec {
    pub fn new(max_n: usize) -> Self {
        HarnessSpec {
            max_n,
            sectioned_max_n: max_n.min(6),
            budget: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessViolation {
    pub structure: String,
    pub clause: String,
    pub witness: Vec<String>,
}

/// Outcome of one theorem over the enumerated universe. Wall time is kept
/// out of the serialized report so that repeated runs compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessResult {
    pub theorem: String,
    pub instances: usize,
    pub skipped: usize,
    pub violation_count: usize,
    /// The first violations, in enumeration order.
    pub violations: Vec<HarnessViolation>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl HarnessResult {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

const KEPT_VIOLATIONS: usize = 20;

/// Theorem ids understood by [`run_harness`].
pub const THEOREMS: &[&str] = &[
    "th1",
    "lemma-sharply",
    "para-impl",
    "duality",
    "i2-antitone",
    "amalgam",
    "th2",
    "para-i3",
    "relpara-c",
    "i4-antitone",
    "oml-sections",
    "lemadj",
    "aisb",
    "omidentity",
    "omui",
    "sasom",
    "th3",
    "adji",
    "adjibp",
    "adjebp",
];

/// One check: `None` when the instance is outside the statement's
/// hypotheses.
type Check = fn(&Instance) -> Option<Report>;

fn agreement(ok: bool, clause: &str) -> Report {
    let mut r = Report::new();
    r.expect(ok, clause, &[]);
    r
}

fn verdict(v: Verdict<Vec<usize>>, clause: &str) -> Report {
    let mut r = Report::new();
    match v {
        Verdict::Holds => r.expect(true, clause, &[]),
        Verdict::Fails(w) => r.expect(false, clause, &w),
    }
    r
}

fn pair((a, b): (usize, usize)) -> Vec<usize> {
    vec![a, b]
}

fn triple((a, b, c): (usize, usize, usize)) -> Vec<usize> {
    vec![a, b, c]
}

fn map_verdict<W, V>(v: Verdict<W>, f: impl Fn(W) -> V) -> Verdict<V> {
    match v {
        Verdict::Holds => Verdict::Holds,
        Verdict::Fails(w) => Verdict::Fails(f(w)),
    }
}

fn ortho_of(i: &Instance) -> Option<&OrthoPoset> {
    match i {
        Instance::Ortho(o) => Some(o),
        _ => None,
    }
}

fn orthogonal_mlb(i: &Instance) -> Option<&OrthoPoset> {
    ortho_of(i).filter(|o| o.is_orthogonal_poset() && o.is_mlb_complete())
}

fn sectioned_of(i: &Instance) -> Option<&SectionedPoset> {
    match i {
        Instance::Sectioned(s) => Some(s),
        _ => None,
    }
}

fn theorem(id: &str) -> Option<(StructureClass, Check)> {
    use StructureClass::*;
    let t: (StructureClass, Check) = match id {
        "th1" => (Ortho, |i| orthogonal_mlb(i).map(|o| implication::check_th1(o).expect("orthogonal"))),
        "lemma-sharply" => (Ortho, |i| {
            let o = ortho_of(i).filter(|o| o.is_sharply_paraorthomodular() && o.is_mlb_complete())?;
            Some(implication::check_lemma_sharply(o).expect("orthogonal"))
        }),
        "para-impl" => (Ortho, |i| {
            let o = orthogonal_mlb(i)?;
            Some(agreement(implication::paraortho_iff_impl(o).expect("orthogonal").agree(), "equivalence"))
        }),
        "duality" => (Ortho, |i| {
            let o = ortho_of(i).filter(|o| o.is_orthogonal_poset())?;
            Some(verdict(map_verdict(implication::duality_check(o).expect("orthogonal"), pair), "duality"))
        }),
        "i2-antitone" => (Ortho, |i| {
            let o = ortho_of(i).filter(|o| o.is_lattice())?;
            Some(verdict(map_verdict(implication::antitone_first_arg_i2(o).expect("lattice"), triple), "antitone"))
        }),
        "amalgam" => (Ortho, |_| None),
        "th2" => (Sectioned, |i| {
            let s = sectioned_of(i).filter(|s| s.is_relatively_paraorthomodular())?;
            Some(s.check_th2())
        }),
        "para-i3" => (Sectioned, |i| {
            let a = sectioned_of(i)?.para_via_i3().ok()?;
            Some(agreement(a.agree(), "equivalence"))
        }),
        "relpara-c" => (Sectioned, |i| {
            let a = sectioned_of(i)?.relpara_via_impl_under_c().ok()?;
            Some(agreement(a.agree(), "equivalence"))
        }),
        "i4-antitone" => (Sectioned, |i| {
            let s = sectioned_of(i).filter(|s| s.is_join_semilattice() && s.is_relatively_paraorthomodular())?;
            Some(verdict(map_verdict(s.antitone_first_arg_i4().expect("join-semilattice"), triple), "antitone"))
        }),
        "oml-sections" => (Ortho, |i| {
            let o = ortho_of(i).filter(|o| o.is_lattice() && o.is_orthomodular())?;
            let mut r = Report::new();
            match SectionedPoset::from_relative_complements(o) {
                Ok(s) => {
                    r.expect(matches!(s.check_c(), Ok(Verdict::Holds)), "compatibility", &[]);
                    r.expect(s.is_relatively_paraorthomodular(), "relatively-paraorthomodular", &[]);
                    let same = s.impl_i4().ok() == implication::impl_i2(o).ok();
                    r.expect(same, "i4-is-i2", &[]);
                }
                Err(_) => r.expect(false, "sections", &[]),
            }
            Some(r)
        }),
        "lemadj" => (Ortho, |i| {
            let o = ortho_of(i).filter(|o| o.is_lattice())?;
            Some(agreement(adjoint::lemma_ab_equiv(o).expect("lattice").ab.agree(), "a-iff-b"))
        }),
        "aisb" => (Ortho, |i| {
            let o = orthogonal_mlb(i)?;
            let e = adjoint::lemma_ab_equiv(o).expect("orthogonal");
            let mut r = agreement(e.ab.agree(), "a-iff-b");
            r.expect(e.ab21.agree(), "a21-iff-b12", &[]);
            Some(r)
        }),
        "omidentity" => (InvolutedLattice, |i| match i {
            Instance::Involuted(p, inv) => {
                let e = adjoint::omidentity_equiv_raw(p, inv).expect("lattice");
                Some(agreement(e.agree(), "equivalence"))
            }
            _ => None,
        }),
        "omui" => (Ortho, |i| {
            let o = ortho_of(i).filter(|o| o.is_orthogonal_poset() && o.is_mub_complete())?;
            let om = o.is_orthomodular();
            let mut r = agreement(om == o.om_u().holds(), "om-iff-om_u");
            r.expect(om == o.om_ue().holds(), "om-iff-om_ue", &[]);
            Some(r)
        }),
        "sasom" => (Ortho, |i| {
            let o = orthogonal_mlb(i)?;
            Some(agreement(adjoint::sasom_equiv(o).expect("orthogonal").agree(), "equivalence"))
        }),
        "th3" => (Ortho, |i| {
            let o = ortho_of(i).filter(|o| o.is_orthogonal_poset())?;
            Some(adjoint::th3_check(o).expect("orthogonal").report)
        }),
        "adji" => (Ortho, |i| {
            let o = orthogonal_mlb(i)?;
            let prod = adjoint::adjoint_to_impl_i(o).ok()?;
            Some(adjoint::adji_consequences(o, &prod).expect("adjoint exists"))
        }),
        "adjibp" => (Ortho, |i| {
            let o = ortho_of(i).filter(|o| o.is_orthogonal_poset() && o.is_boolean_poset() && o.has_maximality())?;
            Some(agreement(o.is_boolean_algebra(), "boolean-algebra"))
        }),
        "adjebp" => (Ortho, |i| {
            let o = orthogonal_mlb(i)?;
            Some(agreement(adjoint::adjebp_equiv(o).expect("orthogonal").agree(), "equivalence"))
        }),
        _ => return None,
    };
    Some(t)
}

/// Checks every generated amalgam family: the carrier is a bounded
/// paraorthomodular poset, unions of two blocks are lattices, covers
/// transfer, and the loop prediction matches the direct verdicts.
fn amalgam_result() -> (usize, Vec<HarnessViolation>, usize) {
    let fams = generated_families();
    let per: Vec<Vec<HarnessViolation>> = fams
        .par_iter()
        .map(|(desc, f)| {
            let mut v = Vec::new();
            let mut bad = |clause: &str, witness: Vec<String>| {
                v.push(HarnessViolation {
                    structure: desc.clone(),
                    clause: clause.to_string(),
                    witness,
                })
            };
            let a = match f.build() {
                Ok(a) => a,
                Err(e) => {
                    bad("bounded-poset", vec![e.to_string()]);
                    return v;
                }
            };
            if !a.carrier.is_paraorthomodular() {
                bad("paraorthomodular", Vec::new());
            }
            for i in 0..f.blocks().len() {
                for j in (i + 1)..f.blocks().len() {
                    if !f.two_block_union_is_lattice(i, j) {
                        bad("two-block-lattice", vec![f.blocks()[i].name.clone(), f.blocks()[j].name.clone()]);
                    }
                }
            }
            for viol in f.cover_transfer(&a).report.violations {
                bad(&format!("cover-{}", viol.clause), viol.witness.iter().skip(1).map(|&g| f.labels()[g].clone()).collect());
            }
            match f.classify() {
                Ok(c) if c.agrees() => {}
                Ok(c) => bad("classification", vec![format!("{:?} vs {:?}", c.predicted, c.direct)]),
                Err(e) => bad("classification", vec![e.to_string()]),
            }
            v
        })
        .collect();
    let count = per.iter().map(Vec::len).sum();
    (fams.len(), per.into_iter().flatten().collect(), count)
}

fn universe(class: StructureClass, spec: &HarnessSpec) -> Result<Vec<Instance>, SearchError> {
    let max_n = if class == StructureClass::Sectioned { spec.sectioned_max_n } else { spec.max_n };
    let mut e = EnumerationSpec::new(class, max_n);
    e.budget = spec.budget;
    enumerate(&e)
}

/// Runs the named theorems. Instances are checked in parallel on the
/// current rayon pool; results come back in enumeration order.
pub fn run_harness(spec: &HarnessSpec, theorems: &[&str]) -> Result<Vec<HarnessResult>, SearchError> {
    let mut cache: Vec<(StructureClass, Vec<Instance>)> = Vec::new();
    let mut out = Vec::new();
    for &id in theorems {
        let (class, check) = theorem(id).ok_or_else(|| SearchError::UnknownTheorem(id.to_string()))?;
        let start = Instant::now();
        if id == "amalgam" {
            let (n, violations, count) = amalgam_result();
            out.push(HarnessResult {
                theorem: id.to_string(),
                instances: n,
                skipped: 0,
                violation_count: count,
                violations: violations.into_iter().take(KEPT_VIOLATIONS).collect(),
                wall_time: start.elapsed(),
            });
            continue;
        }
        if !cache.iter().any(|(c, _)| *c == class) {
            cache.push((class, universe(class, spec)?));
        }
        let instances = &cache.iter().find(|(c, _)| *c == class).expect("cached").1;
        let reports: Vec<Option<Report>> = instances.par_iter().map(check).collect();
        let mut checked = 0;
        let mut skipped = 0;
        let mut count = 0;
        let mut violations = Vec::new();
        for (inst, r) in instances.iter().zip(reports) {
            let Some(r) = r else {
                skipped += 1;
                continue;
            };
            checked += 1;
            count += r.violations.len();
            for v in r.violations {
                if violations.len() < KEPT_VIOLATIONS {
                    let p = inst.poset();
                    violations.push(HarnessViolation {
                        structure: inst.describe(),
                        clause: v.clause,
                        witness: v.witness.iter().map(|&x| p.label(x).to_string()).collect(),
                    });
                }
            }
        }
        out.push(HarnessResult {
            theorem: id.to_string(),
            instances: checked,
            skipped,
            violation_count: count,
            violations,
            wall_time: start.elapsed(),
        });
    }
    Ok(out)
}

/// Machine-readable report, byte-identical across runs with equal input.
pub fn report_json(spec: &HarnessSpec, results: &[HarnessResult]) -> String {
    #[derive(Serialize)]
    struct Doc<'a> {
        spec: &'a HarnessSpec,
        results: &'a [HarnessResult],
    }
    serde_json::to_string_pretty(&Doc { spec, results }).expect("serializable") + "\n"
}

/// One line per theorem.
pub fn summary(results: &[HarnessResult]) -> String {
    let mut s = String::new();
    for r in results {
        s.push_str(&format!(
            "{:<14} {:<4} checked {:>6}  skipped {:>6}  violations {:>4}  {:.2?}\n",
            r.theorem,
            if r.passed() { "ok" } else { "FAIL" },
            r.instances,
            r.skipped,
            r.violation_count,
            r.wall_time
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(k: usize) -> usize {
        (1..=k).product()
    }

    #[test]
    fn naturally_labeled_counts() {
        let counts: Vec<usize> = (0..=6).map(|k| naturally_labeled(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 7, 40, 357, 4824]);
    }

    #[test]
    fn canonical_form_counts() {
        for (k, (unlabeled, labeled)) in [(1, 1), (1, 1), (2, 3), (5, 19), (16, 219), (63, 4231)].into_iter().enumerate() {
            let mut classes = std::collections::BTreeMap::new();
            for d in naturally_labeled(k) {
                let c = canonicalize(&d);
                classes.entry(c.code).or_insert(c.automorphisms);
            }
            assert_eq!(classes.len(), unlabeled, "k = {k}");
            let sum: usize = classes.values().map(|a| factorial(k) / a).sum();
            assert_eq!(sum, labeled, "k = {k}");
        }
    }

    #[test]
    fn two_chain_is_the_only_ortho_structure_at_two() {
        let spec = EnumerationSpec {
            min_n: 2,
            ..EnumerationSpec::new(StructureClass::Ortho, 2)
        };
        let all = enumerate(&spec).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].ortho().unwrap().involution(), &[1, 0]);
    }

    #[test]
    fn involution_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| involutions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76]);
    }

    #[test]
    fn predicate_lookup() {
        assert!(predicate("is_paraorthomodular").is_some());
        assert!(predicate("sharply-paraorthomodular").is_some());
        assert!(predicate("nonsense").is_none());
        let spec = EnumerationSpec::new(StructureClass::Poset, 3).with_filters(&["orthomodular"]);
        assert_eq!(enumerate(&spec), Err(SearchError::NeedsInvolution("orthomodular".into())));
    }

    #[test]
    fn budget_is_enforced() {
        let mut spec = EnumerationSpec::new(StructureClass::Poset, 6);
        spec.budget = Some(5);
        assert_eq!(enumerate(&spec), Err(SearchError::BudgetExceeded(5)));
    }

    #[test]
    fn ortho_key_is_label_independent() {
        let a = crate::fixtures::fig2a();
        let spec = EnumerationSpec::new(StructureClass::Ortho, 6);
        let keys: Vec<OrthoKey> = enumerate(&spec).unwrap().iter().map(|i| ortho_key(&i.ortho().unwrap())).collect();
        assert!(keys.contains(&ortho_key(&a)));
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), keys.len(), "orbit representatives are distinct");
    }
}
