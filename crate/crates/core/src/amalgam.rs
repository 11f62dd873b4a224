//! Pasted families of finite Kleene lattices, the atomic amalgam they
//! generate, atomic loops, and the loop-based classification of amalgams.
//!
//! A family is a list of blocks plus an explicit list of element
//! identifications between blocks. Bottoms and tops are always
//! identified. The carrier of the amalgam is the quotient of the disjoint
//! union; `x <= y` there iff `x <= y` in some block.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::check::Report;
use crate::ortho::{OrthoError, OrthoPoset};
use crate::poset::{FinitePoset, PosetError};
use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AmalgamError {
    #[error("a family needs at least one block")]
    NoBlocks,
    #[error(transparent)]
    Ortho(#[from] OrthoError),
    #[error("unknown block `{0}`")]
    UnknownBlock(String),
    #[error("duplicate block name `{0}`")]
    DuplicateBlock(String),
    #[error("block `{0}` has {1} elements, at least 6 are required")]
    BlockTooSmall(String, usize),
    #[error("block `{0}` is not a Kleene lattice")]
    NotKleene(String),
    #[error("glue identifies `{1}` and `{2}` inside block `{0}`")]
    GlueWithinBlock(String, String, String),
    #[error("blocks `{0}` and `{1}` share an invalid set: {2}")]
    BadIntersection(String, String, String),
    #[error("shared element `{0}` is neither an atom nor a coatom of block `{1}`")]
    NotAtomCoatom(String, String),
    #[error("blocks `{0}` and `{1}` share a three-element set")]
    K3Intersection(String, String),
    #[error("union of the block orders is not a partial order: {0}")]
    OrderViolation(String),
    #[error("blocks disagree on the involution image of `{0}`")]
    InvolutionClash(String),
}

/// A named Kleene lattice taking part in a pasting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub lattice: OrthoPoset,
}

impl Block {
    pub fn new(name: impl Into<String>, lattice: OrthoPoset) -> Self {
        Block {
            name: name.into(),
            lattice,
        }
    }

    /// The eight-element Boolean algebra with atoms `x, y, z`; the coatom
    /// opposite an atom `p` is labelled `p'`.
    pub fn cube(name: &str, atoms: [&str; 3]) -> Self {
        let [x, y, z] = atoms.map(String::from);
        let (x1, y1, z1) = (format!("{x}'"), format!("{y}'"), format!("{z}'"));
        let labels = ["0", &x, &y, &z, &z1, &y1, &x1, "1"];
        let covers = [
            ("0", x.as_str()),
            ("0", y.as_str()),
            ("0", z.as_str()),
            (x.as_str(), z1.as_str()),
            (x.as_str(), y1.as_str()),
            (y.as_str(), z1.as_str()),
            (y.as_str(), x1.as_str()),
            (z.as_str(), y1.as_str()),
            (z.as_str(), x1.as_str()),
            (z1.as_str(), "1"),
            (y1.as_str(), "1"),
            (x1.as_str(), "1"),
        ];
        let inv = [("0", "1"), (x.as_str(), x1.as_str()), (y.as_str(), y1.as_str()), (z.as_str(), z1.as_str())];
        Block::new(name, OrthoPoset::from_labeled(&labels, &covers, &inv).expect("cube is valid"))
    }

    /// The product of the three-element chain and the two-element chain.
    /// Its atoms are `k` (below its complement `k'`) and `b` (incomparable
    /// with `b'`).
    pub fn k3_times_b2(name: &str, k: &str, b: &str) -> Self {
        let (k1, b1) = (format!("{k}'"), format!("{b}'"));
        let labels = ["0", k, b, &b1, &k1, "1"];
        let covers = [
            ("0", k),
            ("0", b),
            (k, k1.as_str()),
            (b, k1.as_str()),
            (k, b1.as_str()),
            (b1.as_str(), "1"),
            (k1.as_str(), "1"),
        ];
        let inv = [("0", "1"), (k, k1.as_str()), (b, b1.as_str())];
        Block::new(name, OrthoPoset::from_labeled(&labels, &covers, &inv).expect("K3xB2 is valid"))
    }

    /// The four-element Boolean algebra on `u, u'` placed between a new
    /// atom `k` and its complement `k'`.
    pub fn crown(name: &str, k: &str, u: &str) -> Self {
        let (k1, u1) = (format!("{k}'"), format!("{u}'"));
        let labels = ["0", k, u, &u1, &k1, "1"];
        let covers = [
            ("0", k),
            (k, u),
            (k, u1.as_str()),
            (u, k1.as_str()),
            (u1.as_str(), k1.as_str()),
            (k1.as_str(), "1"),
        ];
        let inv = [("0", "1"), (k, k1.as_str()), (u, u1.as_str())];
        Block::new(name, OrthoPoset::from_labeled(&labels, &covers, &inv).expect("crown is valid"))
    }
}

/// An element of one block: `(block index, local element index)`.
pub type BlockElem = (usize, usize);

/// A validated pasted family of Kleene lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PastedFamily {
    blocks: Vec<Block>,
    glue: Vec<(BlockElem, BlockElem)>,
    labels: Vec<String>,
    global_of: Vec<Vec<usize>>,
    local_of: Vec<Vec<Option<usize>>>,
    members: Vec<Subset>,
}

/// A cyclic sequence of blocks forming an atomic loop, with the atoms
/// linking consecutive blocks (as carrier elements).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtomicLoop {
    pub blocks: Vec<usize>,
    pub atoms: Vec<usize>,
}

/// The glued structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomicAmalgam {
    pub carrier: OrthoPoset,
    /// Blocks containing each carrier element.
    pub origin: Vec<Vec<usize>>,
}

/// Paraorthomodularity, sharp paraorthomodularity and latticehood of an
/// amalgam.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub paraorthomodular: bool,
    pub sharply_paraorthomodular: bool,
    pub paraorthomodular_lattice: bool,
}

/// Loop-based prediction next to the directly computed profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub loops3: Vec<AtomicLoop>,
    pub loops4: Vec<AtomicLoop>,
    pub predicted: Profile,
    pub direct: Profile,
    /// For a loop of order 3, its first and last linking atoms: an
    /// orthogonal pair without a join in the carrier.
    pub unjoined_orthogonal_pair: Option<(usize, usize)>,
}

impl Classification {
    pub fn agrees(&self) -> bool {
        self.predicted == self.direct && (self.loops3.is_empty() || self.unjoined_orthogonal_pair.is_some())
    }
}

/// A pair that covers inside a block but not in the amalgam.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverException {
    pub block: usize,
    pub lower: usize,
    pub upper: usize,
    pub interlopers: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub report: Report,
    pub exceptions: Vec<CoverException>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

impl PastedFamily {
    /// Validates blocks and identifications.
    pub fn new(blocks: Vec<Block>, glue: Vec<(BlockElem, BlockElem)>) -> Result<Self, AmalgamError> {
        if blocks.is_empty() {
            return Err(AmalgamError::NoBlocks);
        }
        let mut names = BTreeSet::new();
        for b in &blocks {
            if !names.insert(b.name.as_str()) {
                return Err(AmalgamError::DuplicateBlock(b.name.clone()));
            }
        }
        for b in &blocks {
            if b.lattice.len() < 6 {
                return Err(AmalgamError::BlockTooSmall(b.name.clone(), b.lattice.len()));
            }
            if !b.lattice.is_kleene_lattice() {
                return Err(AmalgamError::NotKleene(b.name.clone()));
            }
        }

        let offsets: Vec<usize> = blocks
            .iter()
            .scan(0, |acc, b| {
                let o = *acc;
                *acc += b.lattice.len();
                Some(o)
            })
            .collect();
        let total: usize = blocks.iter().map(|b| b.lattice.len()).sum();
        let mut uf = UnionFind((0..total).collect());
        for (i, b) in blocks.iter().enumerate() {
            uf.union(offsets[0] + blocks[0].lattice.bottom(), offsets[i] + b.lattice.bottom());
            uf.union(offsets[0] + blocks[0].lattice.top(), offsets[i] + b.lattice.top());
        }
        for &((bi, x), (bj, y)) in &glue {
            for (b, e) in [(bi, x), (bj, y)] {
                if b >= blocks.len() {
                    return Err(AmalgamError::UnknownBlock(b.to_string()));
                }
                if e >= blocks[b].lattice.len() {
                    return Err(AmalgamError::Ortho(PosetError::IndexOutOfRange(e).into()));
                }
            }
            uf.union(offsets[bi] + x, offsets[bj] + y);
        }

        // Global ids in order of first appearance.
        let mut class_id = vec![usize::MAX; total];
        let mut labels: Vec<String> = Vec::new();
        let mut global_of = Vec::with_capacity(blocks.len());
        for (i, b) in blocks.iter().enumerate() {
            let mut row = Vec::with_capacity(b.lattice.len());
            for x in b.lattice.elements() {
                let r = uf.find(offsets[i] + x);
                if class_id[r] == usize::MAX {
                    class_id[r] = labels.len();
                    labels.push(b.lattice.label(x).to_string());
                }
                row.push(class_id[r]);
            }
            global_of.push(row);
        }
        let n = labels.len();
        disambiguate(&mut labels, &blocks, &global_of);

        let mut local_of = vec![vec![None; n]; blocks.len()];
        for (i, row) in global_of.iter().enumerate() {
            for (x, &g) in row.iter().enumerate() {
                if let Some(prev) = local_of[i][g] {
                    let l = &blocks[i].lattice;
                    return Err(AmalgamError::GlueWithinBlock(
                        blocks[i].name.clone(),
                        l.label(prev).to_string(),
                        l.label(x).to_string(),
                    ));
                }
                local_of[i][g] = Some(x);
            }
        }
        let members = global_of
            .iter()
            .map(|row| Subset::from_iter_in(n, row.iter().copied()))
            .collect();
        let family = PastedFamily {
            blocks,
            glue,
            labels,
            global_of,
            local_of,
            members,
        };
        family.validate_intersections()?;
        Ok(family)
    }

    /// Identifies, across blocks, all elements other than the bounds that
    /// carry the same label.
    pub fn by_shared_labels(blocks: Vec<Block>) -> Result<Self, AmalgamError> {
        let mut glue = Vec::new();
        for i in 0..blocks.len() {
            for j in (i + 1)..blocks.len() {
                let l = &blocks[i].lattice;
                for x in l.elements().filter(|&x| x != l.bottom() && x != l.top()) {
                    if let Some(y) = blocks[j].lattice.index_of(blocks[i].lattice.label(x)) {
                        glue.push(((i, x), (j, y)));
                    }
                }
            }
        }
        Self::new(blocks, glue)
    }

    fn validate_intersections(&self) -> Result<(), AmalgamError> {
        for i in 0..self.blocks.len() {
            for j in (i + 1)..self.blocks.len() {
                self.validate_pair(i, j)?;
            }
        }
        Ok(())
    }

    fn validate_pair(&self, i: usize, j: usize) -> Result<(), AmalgamError> {
        let shared = self.shared(i, j);
        let (ni, nj) = (self.blocks[i].name.clone(), self.blocks[j].name.clone());
        let bad = |why: &str| AmalgamError::BadIntersection(ni.clone(), nj.clone(), why.to_string());
        match shared.len() {
            2 => return Ok(()),
            3 => return Err(AmalgamError::K3Intersection(ni, nj)),
            4 => {}
            k => return Err(bad(&format!("{k} shared elements"))),
        }
        let (bi, bj) = (&self.blocks[i].lattice, &self.blocks[j].lattice);
        let li = |g: usize| self.local_of[i][g].expect("shared");
        let lj = |g: usize| self.local_of[j][g].expect("shared");
        for s in shared.iter() {
            let via_i = self.global_of[i][bi.inv(li(s))];
            let via_j = self.global_of[j][bj.inv(lj(s))];
            if via_i != via_j {
                return Err(bad(&format!("involutions disagree on `{}`", self.labels[s])));
            }
            if !shared.contains(via_i) {
                return Err(bad("not closed under the involution"));
            }
            for t in shared.iter() {
                if bi.leq(li(s), li(t)) != bj.leq(lj(s), lj(t)) {
                    return Err(bad("orders disagree"));
                }
                for (b, l, row) in [(bi, li(s), i), (bj, lj(s), j)] {
                    let lt = self.local_of[row][t].expect("shared");
                    let meet = b.meet(l, lt).map(|m| self.global_of[row][m]);
                    let join = b.join(l, lt).map(|m| self.global_of[row][m]);
                    if !meet.is_some_and(|m| shared.contains(m)) || !join.is_some_and(|m| shared.contains(m)) {
                        return Err(bad("not a sublattice"));
                    }
                }
            }
        }
        for s in shared.iter() {
            for (b, l, name) in [(bi, li(s), &ni), (bj, lj(s), &nj)] {
                if l == b.bottom() || l == b.top() {
                    continue;
                }
                if !b.is_cover(b.bottom(), l) && !b.is_cover(l, b.top()) {
                    return Err(AmalgamError::NotAtomCoatom(self.labels[s].clone(), name.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn glue(&self) -> &[(BlockElem, BlockElem)] {
        &self.glue
    }

    /// Number of carrier elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn block_index(&self, name: &str) -> Option<usize> {
        self.blocks.iter().position(|b| b.name == name)
    }

    /// Carrier element of a block element.
    pub fn global(&self, block: usize, local: usize) -> usize {
        self.global_of[block][local]
    }

    /// Block element of a carrier element, if the block contains it.
    pub fn local(&self, block: usize, global: usize) -> Option<usize> {
        self.local_of[block][global]
    }

    /// Carrier elements of one block.
    pub fn members(&self, block: usize) -> &Subset {
        &self.members[block]
    }

    /// `K_i ∩ K_j` as carrier elements.
    pub fn shared(&self, i: usize, j: usize) -> Subset {
        self.members[i].intersection(&self.members[j])
    }

    /// Glues the blocks. The order and the involution are re-checked even
    /// though a valid family always yields a bounded poset with antitone
    /// involution.
    pub fn build(&self) -> Result<AtomicAmalgam, AmalgamError> {
        let n = self.len();
        let mut leq = vec![vec![false; n]; n];
        let mut inv = vec![usize::MAX; n];
        for (i, b) in self.blocks.iter().enumerate() {
            let l = &b.lattice;
            for x in l.elements() {
                let gx = self.global_of[i][x];
                for y in l.up_set(x).iter() {
                    leq[gx][self.global_of[i][y]] = true;
                }
                let gi = self.global_of[i][l.inv(x)];
                if inv[gx] != usize::MAX && inv[gx] != gi {
                    return Err(AmalgamError::InvolutionClash(self.labels[gx].clone()));
                }
                inv[gx] = gi;
            }
        }
        let poset = FinitePoset::from_leq(self.labels.clone(), &leq)
            .map_err(|e| AmalgamError::OrderViolation(e.to_string()))?;
        let carrier = OrthoPoset::new(poset, inv)?;
        let origin = (0..n)
            .map(|g| (0..self.blocks.len()).filter(|&i| self.members[i].contains(g)).collect())
            .collect();
        Ok(AtomicAmalgam { carrier, origin })
    }

    /// All atomic loops of the given order, each once up to rotation and
    /// reflection. Triple intersections are checked for every triple of
    /// loop blocks.
    pub fn find_loops(&self, order: usize) -> Vec<AtomicLoop> {
        let k = self.blocks.len();
        if order < 3 || order > k {
            return Vec::new();
        }
        let size: Vec<Vec<usize>> = (0..k)
            .map(|i| (0..k).map(|j| if i == j { 0 } else { self.shared(i, j).len() }).collect())
            .collect();
        let mut out = Vec::new();
        let mut seq = Vec::with_capacity(order);
        for start in 0..k {
            seq.push(start);
            self.extend_loop(order, &size, &mut seq, &mut out);
            seq.pop();
        }
        out
    }

    fn extend_loop(&self, order: usize, size: &[Vec<usize>], seq: &mut Vec<usize>, out: &mut Vec<AtomicLoop>) {
        if seq.len() == order {
            let (first, last) = (seq[0], seq[order - 1]);
            if seq[1] < last && size[last][first] == 4 {
                if let Some(lp) = self.complete_loop(seq) {
                    out.push(lp);
                }
            }
            return;
        }
        let pos = seq.len();
        for b in (seq[0] + 1)..self.blocks.len() {
            if seq.contains(&b) || size[seq[pos - 1]][b] != 4 {
                continue;
            }
            let closes = pos == order - 1;
            let others_ok = seq[..pos - 1]
                .iter()
                .enumerate()
                .all(|(m, &c)| if closes && m == 0 { true } else { size[c][b] == 2 });
            if !others_ok {
                continue;
            }
            seq.push(b);
            self.extend_loop(order, size, seq, out);
            seq.pop();
        }
    }

    fn complete_loop(&self, seq: &[usize]) -> Option<AtomicLoop> {
        let n = seq.len();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    let t = self.members[seq[a]]
                        .intersection(&self.members[seq[b]])
                        .intersection(&self.members[seq[c]]);
                    if t.len() != 2 {
                        return None;
                    }
                }
            }
        }
        let mut atoms = Vec::with_capacity(n);
        for j in 0..n {
            let (bi, bj) = (seq[j], seq[(j + 1) % n]);
            let l = &self.blocks[bi].lattice;
            let atom = self.shared(bi, bj).iter().find(|&g| {
                let x = self.local_of[bi][g].expect("shared");
                l.is_cover(l.bottom(), x)
            })?;
            atoms.push(atom);
        }
        let distinct: BTreeSet<usize> = atoms.iter().copied().collect();
        (distinct.len() == n).then(|| AtomicLoop {
            blocks: seq.to_vec(),
            atoms,
        })
    }

    /// Predicted profile from loops next to the profile of the carrier.
    pub fn classify(&self) -> Result<Classification, AmalgamError> {
        let amalgam = self.build()?;
        let c = &amalgam.carrier;
        let loops3 = self.find_loops(3);
        let loops4 = self.find_loops(4);
        let predicted = Profile {
            paraorthomodular: true,
            sharply_paraorthomodular: loops3.is_empty(),
            paraorthomodular_lattice: loops3.is_empty() && loops4.is_empty(),
        };
        let para = c.is_paraorthomodular();
        let direct = Profile {
            paraorthomodular: para,
            sharply_paraorthomodular: para && c.is_orthogonal_poset(),
            paraorthomodular_lattice: para && c.is_lattice(),
        };
        let unjoined_orthogonal_pair = loops3.first().and_then(|lp| {
            let (a1, a3) = (lp.atoms[0], lp.atoms[2]);
            (c.orthogonal(a1, a3) && c.join(a1, a3).is_none()).then_some((a1, a3))
        });
        Ok(Classification {
            loops3,
            loops4,
            predicted,
            direct,
            unjoined_orthogonal_pair,
        })
    }

    /// Compares covers inside blocks with covers in the amalgam. Clause
    /// `i`: an amalgam cover is a block cover. Clause `ii`: for `y != x'`
    /// the two notions coincide. Block covers `x < x'` that are not
    /// amalgam covers are listed as exceptions with the elements between.
    pub fn cover_transfer(&self, amalgam: &AtomicAmalgam) -> CoverReport {
        let c = &amalgam.carrier;
        let mut report = Report::new();
        let mut exceptions = Vec::new();
        for (i, b) in self.blocks.iter().enumerate() {
            let l = &b.lattice;
            for x in l.elements() {
                for y in l.up_set(x).iter() {
                    if x == y {
                        continue;
                    }
                    let (gx, gy) = (self.global_of[i][x], self.global_of[i][y]);
                    let block_cover = l.is_cover(x, y);
                    let amalgam_cover = c.is_cover(gx, gy);
                    if amalgam_cover {
                        report.expect(block_cover, "i", &[i, gx, gy]);
                    }
                    if gy != c.inv(gx) {
                        report.expect(block_cover == amalgam_cover, "ii", &[i, gx, gy]);
                    } else if block_cover && !amalgam_cover {
                        exceptions.push(CoverException {
                            block: i,
                            lower: gx,
                            upper: gy,
                            interlopers: c.strictly_between(gx, gy).to_vec(),
                        });
                    }
                }
            }
        }
        CoverReport { report, exceptions }
    }

    /// The pasting of blocks `i` and `j` alone, glued along their common
    /// elements in this family.
    pub fn two_block_pasting(&self, i: usize, j: usize) -> Result<PastedFamily, AmalgamError> {
        let mut glue = Vec::new();
        for g in self.members[i].intersection(&self.members[j]).iter() {
            let (li, lj) = (self.local(i, g).expect("member"), self.local(j, g).expect("member"));
            glue.push(((0, li), (1, lj)));
        }
        PastedFamily::new(vec![self.blocks[i].clone(), self.blocks[j].clone()], glue)
    }

    /// `K_i ∪ K_j`, ordered as the pasting of the two blocks, is a
    /// paraorthomodular lattice with the same number of elements as the
    /// union inside the amalgam. The order induced from the whole amalgam
    /// may be larger when a third block closes a loop.
    pub fn two_block_union_is_lattice(&self, i: usize, j: usize) -> bool {
        let Ok(Ok(a)) = self.two_block_pasting(i, j).map(|f| f.build()) else {
            return false;
        };
        a.carrier.len() == self.members[i].union(&self.members[j]).len()
            && a.carrier.is_lattice()
            && a.carrier.is_paraorthomodular()
    }
}

/// Later elements whose label is already taken get the block name as a
/// prefix.
fn disambiguate(labels: &mut [String], blocks: &[Block], global_of: &[Vec<usize>]) {
    let mut seen = BTreeSet::new();
    let mut owner = vec![0; labels.len()];
    for (i, row) in global_of.iter().enumerate().rev() {
        for &g in row {
            owner[g] = i;
        }
    }
    for g in 0..labels.len() {
        if !seen.insert(labels[g].clone()) {
            labels[g] = format!("{}.{}", blocks[owner[g]].name, labels[g]);
            seen.insert(labels[g].clone());
        }
    }
}

/// Families used by the exhaustive amalgam sweep: all pastings of up to
/// three blocks drawn from cubes, `K3 × B2` and crowns, all cube pastings
/// of four blocks, four-cycles of mixed blocks, five- and six-cycles of
/// cubes, and three cubes through one atom.
pub fn generated_families() -> Vec<(String, PastedFamily)> {
    let mut out = Vec::new();
    let kinds = [Kind::Cube, Kind::K3B2, Kind::Crown];
    for k in 1..=3usize {
        let pairs = all_pairs(k);
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(e, _)| mask & (1 << e) != 0)
                .map(|(_, &p)| p)
                .collect();
            for choice in 0..kinds.len().pow(k as u32) {
                let ks: Vec<Kind> = (0..k).map(|i| kinds[(choice / kinds.len().pow(i as u32)) % kinds.len()]).collect();
                push_typed(&mut out, &ks, &edges);
            }
        }
    }
    let pairs4 = all_pairs(4);
    for mask in 0u32..(1 << pairs4.len()) {
        let edges: Vec<(usize, usize)> = pairs4
            .iter()
            .enumerate()
            .filter(|(e, _)| mask & (1 << e) != 0)
            .map(|(_, &p)| p)
            .collect();
        push_typed(&mut out, &[Kind::Cube; 4], &edges);
    }
    let cycle4 = [(0, 1), (1, 2), (2, 3), (0, 3)];
    for choice in 0..81usize {
        let ks: Vec<Kind> = (0..4).map(|i| kinds[(choice / 3usize.pow(i)) % 3]).collect();
        if ks.iter().all(|&k| k == Kind::Cube) {
            continue;
        }
        push_typed(&mut out, &ks, &cycle4);
    }
    for len in [5usize, 6] {
        let edges: Vec<(usize, usize)> = (0..len).map(|i| (i.min((i + 1) % len), i.max((i + 1) % len))).collect();
        push_typed(&mut out, &vec![Kind::Cube; len], &edges);
    }
    let star = vec![
        Block::cube("S1", ["p", "q1", "r1"]),
        Block::cube("S2", ["p", "q2", "r2"]),
        Block::cube("S3", ["p", "q3", "r3"]),
    ];
    if let Ok(f) = PastedFamily::by_shared_labels(star) {
        out.push(("three cubes through one atom".to_string(), f));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Cube,
    K3B2,
    Crown,
}

/// Slot types: `B` atoms are incomparable with their complements, `K`
/// atoms lie below them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    B,
    K,
}

impl Kind {
    fn slots(self) -> &'static [Slot] {
        match self {
            Kind::Cube => &[Slot::B, Slot::B, Slot::B],
            Kind::K3B2 => &[Slot::K, Slot::B],
            Kind::Crown => &[Slot::K],
        }
    }
}

fn all_pairs(k: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            v.push((i, j));
        }
    }
    v
}

/// Builds every family on the block graph `edges` obtained by choosing a
/// slot type per edge, when slots suffice.
fn push_typed(out: &mut Vec<(String, PastedFamily)>, kinds: &[Kind], edges: &[(usize, usize)]) {
    for types in 0u32..(1 << edges.len()) {
        let mut free: Vec<Vec<Slot>> = kinds.iter().map(|k| k.slots().to_vec()).collect();
        let mut atoms: Vec<Vec<Option<String>>> = kinds.iter().map(|k| vec![None; k.slots().len()]).collect();
        let mut ok = true;
        for (e, &(i, j)) in edges.iter().enumerate() {
            let want = if types & (1 << e) != 0 { Slot::K } else { Slot::B };
            let name = format!("s{e}");
            for b in [i, j] {
                match free[b].iter().position(|&s| s == want) {
                    Some(p) => {
                        free[b][p] = Slot::B;
                        let slot = (0..kinds[b].slots().len())
                            .find(|&s| kinds[b].slots()[s] == want && atoms[b][s].is_none())
                            .expect("free slot");
                        atoms[b][slot] = Some(name.clone());
                        free[b].remove(p);
                    }
                    None => ok = false,
                }
            }
            if !ok {
                break;
            }
        }
        if !ok {
            continue;
        }
        let blocks: Vec<Block> = kinds
            .iter()
            .enumerate()
            .map(|(b, &kind)| {
                let mut names = atoms[b].iter().enumerate().map(|(s, a)| a.clone().unwrap_or(format!("t{b}_{s}")));
                let name = format!("K{b}");
                match kind {
                    Kind::Cube => {
                        let (x, y, z) = (names.next().unwrap(), names.next().unwrap(), names.next().unwrap());
                        Block::cube(&name, [&x, &y, &z])
                    }
                    Kind::K3B2 => {
                        let (k, bb) = (names.next().unwrap(), names.next().unwrap());
                        Block::k3_times_b2(&name, &k, &bb)
                    }
                    Kind::Crown => {
                        let k = names.next().unwrap();
                        Block::crown(&name, &k, &format!("u{b}"))
                    }
                }
            })
            .collect();
        let desc = format!("kinds {kinds:?}, edges {edges:?}, types {types:b}");
        if let Ok(f) = PastedFamily::by_shared_labels(blocks) {
            out.push((desc, f));
        }
        if edges.is_empty() {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn building_blocks_are_kleene() {
        for b in [
            Block::cube("C", ["x", "y", "z"]),
            Block::k3_times_b2("K", "k", "b"),
            Block::crown("R", "k", "u"),
        ] {
            assert!(b.lattice.is_kleene_lattice(), "{}", b.name);
            assert_eq!(b.lattice.len().max(6), b.lattice.len());
        }
    }

    #[test]
    fn two_cubes_sharing_an_atom() {
        let f = PastedFamily::by_shared_labels(vec![
            Block::cube("A", ["p", "q", "r"]),
            Block::cube("B", ["p", "s", "t"]),
        ])
        .unwrap();
        assert_eq!(f.len(), 12);
        assert_eq!(f.shared(0, 1).len(), 4);
        assert!(f.find_loops(3).is_empty());
        assert!(f.build().unwrap().carrier.is_lattice());
        assert!(f.two_block_union_is_lattice(0, 1));
    }

    #[test]
    fn family_validation_errors() {
        let small = fixtures::fig3();
        assert_eq!(
            PastedFamily::new(vec![Block::new("F", small)], vec![]),
            Err(AmalgamError::BlockTooSmall("F".into(), 4))
        );
        assert_eq!(
            PastedFamily::new(vec![Block::new("B6", fixtures::fig4())], vec![]),
            Err(AmalgamError::NotKleene("B6".into()))
        );
        // K3 x B2 blocks glued along the fixed-point-free chain part 0 < k:
        // identifying k alone gives a three-element intersection.
        let a = Block::k3_times_b2("A", "k", "b");
        let b = Block::k3_times_b2("B", "k", "c");
        let k = a.lattice.elem("k").unwrap();
        assert_eq!(
            PastedFamily::new(vec![a.clone(), b.clone()], vec![((0, k), (1, k))]),
            Err(AmalgamError::K3Intersection("A".into(), "B".into()))
        );
        // A cube atom glued to a K3 x B2 atom lying below its complement.
        let c = Block::cube("C", ["k", "y", "z"]);
        assert!(matches!(
            PastedFamily::by_shared_labels(vec![a, c]),
            Err(AmalgamError::BadIntersection(..))
        ));
        // In a 16-element Boolean block, {0, ab, cd, 1} is a subalgebra
        // whose proper elements are neither atoms nor coatoms.
        let b16 = |n: &str| Block::new(n, fixtures::boolean(4));
        let l = fixtures::boolean(4);
        let (ab, cd) = (l.elem("ab").unwrap(), l.elem("cd").unwrap());
        assert_eq!(
            PastedFamily::new(vec![b16("P"), b16("Q")], vec![((0, ab), (1, ab)), ((0, cd), (1, cd))]),
            Err(AmalgamError::NotAtomCoatom("ab".into(), "P".into()))
        );
    }

    #[test]
    fn greechie_triangle() {
        let f = fixtures::greechie_triangle();
        assert_eq!(f.len(), 14);
        let loops = f.find_loops(3);
        assert_eq!(loops.len(), 1);
        assert!(f.find_loops(4).is_empty());
        let c = f.classify().unwrap();
        assert!(c.agrees());
        assert!(c.direct.paraorthomodular && !c.direct.sharply_paraorthomodular);
        let a = f.build().unwrap();
        let (x, y) = c.unjoined_orthogonal_pair.unwrap();
        assert!(a.carrier.orthogonal(x, y) && a.carrier.join(x, y).is_none());
    }

    #[test]
    fn greechie_square() {
        let f = fixtures::greechie_square();
        assert_eq!(f.len(), 18);
        assert!(f.find_loops(3).is_empty());
        assert_eq!(f.find_loops(4).len(), 1);
        let c = f.classify().unwrap();
        assert!(c.agrees());
        assert!(c.direct.sharply_paraorthomodular && !c.direct.paraorthomodular_lattice);
    }

    #[test]
    fn fig5_cover_anomaly() {
        let f = fixtures::fig5_family();
        let a = f.build().unwrap();
        assert_eq!(a.carrier.len(), 8);
        let r = f.cover_transfer(&a);
        assert!(r.report.is_clean());
        let lab = |g: usize| f.labels()[g].as_str();
        let ex: Vec<(&str, &str)> = r.exceptions.iter().map(|e| (lab(e.lower), lab(e.upper))).collect();
        assert_eq!(ex, vec![("a", "a'")]);
        let inter: Vec<&str> = r.exceptions[0].interlopers.iter().map(|&g| lab(g)).collect();
        assert_eq!(inter, vec!["c", "c'"]);
    }

    #[test]
    fn single_block_is_itself() {
        let b = Block::cube("C", ["x", "y", "z"]);
        let f = PastedFamily::new(vec![b.clone()], vec![]).unwrap();
        let a = f.build().unwrap();
        assert_eq!(a.carrier, b.lattice);
        assert!(f.cover_transfer(&a).exceptions.is_empty());
    }
}
