//! The figures of the theory as ready-made structures, plus a few
//! parametrised families. The figure files live in `fixtures/` and are
//! stored in canonical emitted form.

use crate::amalgam::{Block, PastedFamily};
use crate::io::format::{parse, StructureFile};
use crate::ortho::OrthoPoset;
use crate::poset::FinitePoset;
use crate::relative::SectionedPoset;

/// Every fixture file as `(file name, contents)`.
pub const FILES: &[(&str, &str)] = &[
    ("fig1a.txt", include_str!("../fixtures/fig1a.txt")),
    ("fig1b.txt", include_str!("../fixtures/fig1b.txt")),
    ("fig1c.txt", include_str!("../fixtures/fig1c.txt")),
    ("fig2a.txt", include_str!("../fixtures/fig2a.txt")),
    ("fig2b.txt", include_str!("../fixtures/fig2b.txt")),
    ("fig3.txt", include_str!("../fixtures/fig3.txt")),
    ("fig4.txt", include_str!("../fixtures/fig4.txt")),
    ("fig5.txt", include_str!("../fixtures/fig5.txt")),
    ("fig7.txt", include_str!("../fixtures/fig7.txt")),
    ("fig8.txt", include_str!("../fixtures/fig8.txt")),
    ("greechie_triangle.txt", include_str!("../fixtures/greechie_triangle.txt")),
    ("greechie_square.txt", include_str!("../fixtures/greechie_square.txt")),
    ("two_block.txt", include_str!("../fixtures/two_block.txt")),
];

/// Parsed fixture by file name.
pub fn file(name: &str) -> StructureFile {
    let (_, text) = FILES
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no fixture `{name}`"));
    parse(text).unwrap_or_else(|e| panic!("fixture `{name}`: {e}"))
}

fn ortho(name: &str) -> OrthoPoset {
    file(name).to_ortho().unwrap_or_else(|e| panic!("fixture `{name}`: {e}"))
}

fn sectioned(name: &str) -> SectionedPoset {
    file(name).to_sectioned().unwrap_or_else(|e| panic!("fixture `{name}`: {e}"))
}

fn family(name: &str) -> PastedFamily {
    file(name).to_family().unwrap_or_else(|e| panic!("fixture `{name}`: {e}"))
}

/// Paraorthomodular, not orthogonal: `a` and `b` have no join.
pub fn fig1a() -> OrthoPoset {
    ortho("fig1a.txt")
}

pub fn fig1a_sectioned() -> SectionedPoset {
    sectioned("fig1a.txt")
}

pub fn fig1b() -> OrthoPoset {
    ortho("fig1b.txt")
}

pub fn fig1c() -> OrthoPoset {
    ortho("fig1c.txt")
}

/// Two three-element chains side by side: a sharply paraorthomodular
/// lattice.
pub fn fig2a() -> OrthoPoset {
    ortho("fig2a.txt")
}

/// Sharply paraorthomodular, neither a lattice nor orthomodular.
pub fn fig2b() -> OrthoPoset {
    ortho("fig2b.txt")
}

/// The four-element Kleene chain.
pub fn fig3() -> OrthoPoset {
    ortho("fig3.txt")
}

/// The benzene ring.
pub fn fig4() -> OrthoPoset {
    ortho("fig4.txt")
}

/// A `K3 × B2` block and a crown glued along `{0, a, a', 1}`.
pub fn fig5_family() -> PastedFamily {
    family("fig5.txt")
}

pub fn fig5() -> OrthoPoset {
    fig5_family().build().expect("fig5 glues").carrier
}

/// A lattice that is not paraorthomodular.
pub fn fig7() -> OrthoPoset {
    ortho("fig7.txt")
}

pub fn fig7_sectioned() -> SectionedPoset {
    sectioned("fig7.txt")
}

pub fn fig8() -> OrthoPoset {
    ortho("fig8.txt")
}

pub fn fig8_sectioned() -> SectionedPoset {
    sectioned("fig8.txt")
}

/// Three cubes pairwise sharing one atom: a loop of order 3.
pub fn greechie_triangle() -> PastedFamily {
    family("greechie_triangle.txt")
}

/// Four cubes in a cycle: a loop of order 4.
pub fn greechie_square() -> PastedFamily {
    family("greechie_square.txt")
}

/// Two cubes sharing one atom.
pub fn two_block() -> PastedFamily {
    family("two_block.txt")
}

/// The blocks used by the amalgam fixture files.
pub fn greechie_blocks(kind: &str) -> Vec<Block> {
    match kind {
        "triangle" => vec![
            Block::cube("B1", ["a1", "a3", "e1"]),
            Block::cube("B2", ["a1", "a2", "e2"]),
            Block::cube("B3", ["a2", "a3", "e3"]),
        ],
        "square" => vec![
            Block::cube("B1", ["a1", "a2", "e1"]),
            Block::cube("B2", ["a2", "a3", "e2"]),
            Block::cube("B3", ["a3", "a4", "e3"]),
            Block::cube("B4", ["a4", "a1", "e4"]),
        ],
        "two_block" => vec![Block::cube("B1", ["p", "q", "r"]), Block::cube("B2", ["p", "s", "t"])],
        _ => panic!("unknown block set `{kind}`"),
    }
}

/// The chain `0 < c1 < ... < 1` on `n` elements with its reversal.
pub fn chain(n: usize) -> OrthoPoset {
    assert!(n >= 1);
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == n - 1 => "1".to_string(),
            i => format!("c{i}"),
        })
        .collect();
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let p = FinitePoset::from_covers(labels, &covers).expect("chain");
    OrthoPoset::new(p, (0..n).rev().collect()).expect("reversal is antitone")
}

/// The Boolean algebra with `k` atoms `a, b, c, ...`; elements are named
/// by their atoms, complement as involution.
pub fn boolean(k: usize) -> OrthoPoset {
    assert!((1..=6).contains(&k));
    let n = 1usize << k;
    let full = n - 1;
    let labels: Vec<String> = (0..n)
        .map(|m| match m {
            0 => "0".to_string(),
            m if m == full => "1".to_string(),
            m => (0..k).filter(|b| m & (1 << b) != 0).map(|b| (b'a' + b as u8) as char).collect(),
        })
        .collect();
    let mut covers = Vec::new();
    for m in 0..n {
        for b in 0..k {
            if m & (1 << b) == 0 {
                covers.push((m, m | (1 << b)));
            }
        }
    }
    let p = FinitePoset::from_covers(labels, &covers).expect("boolean");
    OrthoPoset::new(p, (0..n).map(|m| full ^ m).collect()).expect("complement")
}

/// The eight-element Boolean algebra.
pub fn boolean_cube() -> OrthoPoset {
    boolean(3)
}

/// All figure structures with a short name, for galleries and sweeps.
pub fn gallery() -> Vec<(&'static str, OrthoPoset)> {
    vec![
        ("fig1a", fig1a()),
        ("fig1b", fig1b()),
        ("fig1c", fig1c()),
        ("fig2a", fig2a()),
        ("fig2b", fig2b()),
        ("fig3", fig3()),
        ("fig4", fig4()),
        ("fig5", fig5()),
        ("fig7", fig7()),
        ("fig8", fig8()),
    ]
}
