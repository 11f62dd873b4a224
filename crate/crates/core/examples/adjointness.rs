//! Adjointness of the Sasaki operations and of a product residuating the
//! implication x -> y = y ∨ Max L(x', y').

use paraortho::adjoint::{adjebp_equiv, lemma_ab_equiv, omidentity_equiv, sasaki_conditions, sasom_equiv, th3_check};
use paraortho::fixtures;

fn main() {
    for (name, o) in [
        ("cube", fixtures::boolean_cube()),
        ("fig2a", fixtures::fig2a()),
        ("fig2b", fixtures::fig2b()),
        ("fig3", fixtures::fig3()),
    ] {
        let r = sasaki_conditions(&o).unwrap();
        println!("{name}: (A) {} (B) {} (A)21 {} (B)12 {}", r.holds_a, r.holds_b, r.holds_a21, r.holds_b12);
        println!("  A iff B agrees: {}", lemma_ab_equiv(&o).unwrap().agree());
        if o.is_lattice() {
            let e = omidentity_equiv(&o).unwrap();
            println!("  orthomodular identities {} / adjoint {}", e.oi, e.adj);
        }
        let s = sasom_equiv(&o).unwrap();
        println!("  orthomodular {} / (A)21 {}", s.om, s.adj21);
        let t = th3_check(&o).unwrap();
        println!("  condition (A) with the first implication: {:?}", t.a);
        let b = adjebp_equiv(&o).unwrap();
        println!("  adjoint exists {} / Boolean algebra {}", b.exists_adjoint, b.is_boolean_algebra);
    }
}
