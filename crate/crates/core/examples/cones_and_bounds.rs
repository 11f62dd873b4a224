//! Cones, maximal and minimal elements, and the set orders on a small
//! poset that is not a lattice.

use paraortho::{fixtures, SetOrder};

fn main() {
    let p = fixtures::fig1a();
    let (a, b) = (p.elem("a").unwrap(), p.elem("b").unwrap());

    let upper = p.upper_pair(a, b);
    let lower = p.lower_pair(a, b);
    println!("U(a, b) = {}", p.fmt_set(&upper));
    println!("Min U(a, b) = {}", p.fmt_set(&p.min_of(&upper)));
    println!("L(a, b) = {}", p.fmt_set(&lower));
    println!("a ∨ b = {:?}", p.join(a, b).map(|j| p.label(j)));

    let ab = p.subset_of_labels(&["a", "b"]).unwrap();
    let top = p.subset_of_labels(&["a'", "b'"]).unwrap();
    for (name, kind) in [("<=", SetOrder::All), ("<=1", SetOrder::Le1), ("<=2", SetOrder::Le2)] {
        println!("{{a,b}} {name} {{a',b'}}: {}", p.subset_rel(&ab, &top, kind));
    }
    println!("mlb-complete: {}, lattice: {}", p.is_mlb_complete(), p.is_lattice());
}
