//! Property profile of every bundled figure.

use paraortho::fixtures;

fn main() {
    println!(
        "{:<6} {:>3}  {:<8} {:<10} {:<5} {:<8} {:<6}",
        "figure", "n", "lattice", "orthogonal", "para", "sharply", "OM"
    );
    for (name, o) in fixtures::gallery() {
        println!(
            "{:<6} {:>3}  {:<8} {:<10} {:<5} {:<8} {:<6}",
            name,
            o.len(),
            o.is_lattice(),
            o.is_orthogonal_poset(),
            o.is_paraorthomodular(),
            o.is_sharply_paraorthomodular(),
            o.is_orthomodular()
        );
    }
    let b6 = fixtures::fig4();
    if let Some((x, y)) = b6.find_benzene() {
        println!("benzene ring found at ({}, {})", b6.label(x), b6.label(y));
    }
}
