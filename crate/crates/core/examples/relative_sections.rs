//! Antitone involutions on principal filters: relative
//! paraorthomodularity, the compatibility condition and the implications
//! built from sections.

use paraortho::fixtures;
use paraortho::io::render::render_table;
use paraortho::relative::SectionedPoset;

fn main() {
    let s = fixtures::fig1a_sectioned();
    println!("relatively paraorthomodular: {}", s.is_relatively_paraorthomodular());
    for x in s.elements() {
        let pairs: Vec<String> = s
            .section_pairs(x)
            .iter()
            .map(|&(a, b)| format!("{}<->{}", s.label(a), s.label(b)))
            .collect();
        println!("  [{}, 1]: {}", s.label(x), pairs.join(" "));
    }
    println!("\nx -> y = (Min U(x, y))^y\n{}", render_table(&s, &s.impl_i3(), "->"));
    let r = s.check_th2();
    println!("properties of the implication: {} checks, {} violations", r.checked, r.violations.len());
    println!("compatibility: {:?}", s.check_c().map(|v| v.holds()));

    let l = fixtures::fig8_sectioned();
    println!("\nlattice with sections: relatively paraorthomodular {}", l.is_relatively_paraorthomodular());
    println!("x -> y = (x ∨ y)^y\n{}", render_table(&l, &l.impl_i4().unwrap(), "->"));

    let om = fixtures::boolean_cube();
    let rc = SectionedPoset::from_relative_complements(&om).unwrap();
    println!("relative complements in the cube satisfy compatibility: {:?}", rc.check_c().map(|v| v.holds()));
}
