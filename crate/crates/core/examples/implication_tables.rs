//! The set-valued implications and the Sasaki operators on a sharply
//! paraorthomodular lattice, followed by the checks tied to them.

use paraortho::fixtures;
use paraortho::implication::{check_th1, impl_i, impl_i2, paraortho_iff_impl, sasaki_impl, sasaki_prod};
use paraortho::io::render::render_table;

fn main() {
    let o = fixtures::fig2b();
    println!("x -> y = y ∨ Max L(x', y')\n{}", render_table(&o, &impl_i(&o).unwrap(), "->"));
    println!("Sasaki product\n{}", render_table(&o, &sasaki_prod(&o).unwrap(), "(.)"));
    println!("Sasaki implication\n{}", render_table(&o, &sasaki_impl(&o).unwrap(), "->S"));

    let l = fixtures::fig2a();
    println!("on a lattice, x' ∨ (x ∧ y)\n{}", render_table(&l, &impl_i2(&l).unwrap(), "->"));

    let r = check_th1(&o).unwrap();
    println!("implication properties: {} checks, {} violations", r.checked, r.violations.len());
    let e = paraortho_iff_impl(&o).unwrap();
    println!("paraorthomodular {} / (x -> y = 1 implies x <= y) {}", e.lhs, e.rhs);
}
