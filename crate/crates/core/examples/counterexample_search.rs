//! Smallest structures separating pairs of properties.

use paraortho::io::format::{emit, StructureFile};
use paraortho::search::{find_counterexample, EnumerationSpec, StructureClass};

fn main() {
    let spec = EnumerationSpec::new(StructureClass::Ortho, 7);
    for (a, b) in [
        ("paraorthomodular", "orthomodular"),
        ("sharply_paraorthomodular", "lattice"),
        ("paraorthomodular", "orthogonal"),
        ("kleene", "boolean_algebra"),
        ("orthomodular", "paraorthomodular"),
    ] {
        match find_counterexample(a, b, &spec).unwrap() {
            Some(c) => {
                println!("{a} but not {b}: {} elements", c.n);
                print!("{}", emit(&StructureFile::from_ortho(None, &c.structure)));
            }
            None => println!("{a} implies {b} up to {} elements", spec.max_n),
        }
        println!();
    }
}
