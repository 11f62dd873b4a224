//! Gluing Kleene lattices: loops of order three and four, and the cover
//! anomaly of a two-block pasting.

use paraortho::amalgam::{Block, PastedFamily};
use paraortho::fixtures;

fn main() {
    for (name, f) in [
        ("triangle", fixtures::greechie_triangle()),
        ("square", fixtures::greechie_square()),
        ("two blocks", fixtures::two_block()),
    ] {
        let c = f.classify().unwrap();
        println!(
            "{name}: {} elements, loops {}/{}, paraorthomodular {}, sharply {}, lattice {}, agrees {}",
            f.len(),
            c.loops3.len(),
            c.loops4.len(),
            c.direct.paraorthomodular,
            c.direct.sharply_paraorthomodular,
            c.direct.paraorthomodular_lattice,
            c.agrees()
        );
    }

    let f = PastedFamily::by_shared_labels(vec![Block::k3_times_b2("A", "a", "b"), Block::crown("B", "a", "c")]).unwrap();
    let a = f.build().unwrap();
    for e in f.cover_transfer(&a).exceptions {
        let between: Vec<&str> = e.interlopers.iter().map(|&g| f.labels()[g].as_str()).collect();
        println!(
            "{} covers {} in block {} but not after gluing: {:?} lie between",
            f.labels()[e.upper],
            f.labels()[e.lower],
            f.blocks()[e.block].name,
            between
        );
    }
}
