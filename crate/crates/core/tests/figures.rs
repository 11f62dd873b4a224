mod common;

use common::{ortho_isomorphic, Raw};
use paraortho::fixtures;
use paraortho::search::{enumerate, ortho_key, EnumerationSpec, StructureClass};

fn labels(o: &paraortho::OrthoPoset, w: &[usize]) -> Vec<String> {
    w.iter().map(|&x| o.label(x).to_string()).collect()
}

#[test]
fn library_verdicts_match_brute_force() {
    for (name, o) in fixtures::gallery() {
        let r = Raw::of(&o);
        assert_eq!(o.is_lattice(), r.is_lattice(), "{name} lattice");
        assert_eq!(o.is_orthogonal_poset(), r.orthogonal(), "{name} orthogonal");
        assert_eq!(o.is_paraorthomodular(), r.paraorthomodular(), "{name} paraorthomodular");
        assert_eq!(o.is_orthomodular(), r.orthomodular(), "{name} orthomodular");
        assert_eq!(
            o.is_sharply_paraorthomodular(),
            r.orthogonal() && r.paraorthomodular(),
            "{name} sharply"
        );
    }
}

#[test]
fn first_figures_are_paraorthomodular_but_neither_sharp_nor_orthomodular() {
    for o in [fixtures::fig1a(), fixtures::fig1b(), fixtures::fig1c()] {
        assert!(o.is_paraorthomodular());
        assert!(!o.is_sharply_paraorthomodular());
        assert!(!o.is_orthomodular());
    }
}

#[test]
fn second_figures_are_sharply_paraorthomodular() {
    let a = fixtures::fig2a();
    assert!(a.is_sharply_paraorthomodular() && a.is_lattice());
    let b = fixtures::fig2b();
    assert!(b.is_sharply_paraorthomodular());
    assert!(!b.is_lattice());
    let w = b.orthomodular().witness().copied().expect("not orthomodular");
    let paraortho::ortho::OmFailure::Law(x, y) = w else {
        panic!("expected a failure of the orthomodular law, got {w:?}");
    };
    assert_eq!(labels(&b, &[x, y]), ["b", "d'"]);
}

#[test]
fn kleene_chain_and_benzene() {
    assert!(fixtures::fig3().is_kleene_lattice());
    let b6 = fixtures::fig4();
    assert!(!b6.is_paraorthomodular());
    assert!(b6.find_benzene().is_some());
}

#[test]
fn fig7_lattice_fails_paraorthomodularity_at_a_b_prime() {
    let o = fixtures::fig7();
    assert!(o.is_lattice());
    let (x, y) = *o.paraorthomodular().witness().expect("fails");
    assert_eq!(labels(&o, &[x, y]), ["a", "b'"]);
}

#[test]
fn fig8_sections_make_a_relatively_paraorthomodular_lattice() {
    let s = fixtures::fig8_sectioned();
    assert!(s.is_lattice());
    assert!(s.is_relatively_paraorthomodular());
}

#[test]
fn small_figures_occur_in_the_enumerated_universe() {
    let universe = enumerate(&EnumerationSpec::new(StructureClass::Ortho, 8)).unwrap();
    let mut found = 0;
    for (name, fig) in fixtures::gallery().into_iter().filter(|(_, o)| o.len() <= 8) {
        let key = ortho_key(&fig);
        let hit = universe
            .iter()
            .map(|i| i.ortho().unwrap())
            .find(|o| ortho_key(o) == key)
            .unwrap_or_else(|| panic!("{name} missing"));
        assert!(ortho_isomorphic(&Raw::of(&fig), &Raw::of(&hit)), "{name}: key collision");
        assert_eq!(fig.is_paraorthomodular(), hit.is_paraorthomodular());
        assert_eq!(fig.is_sharply_paraorthomodular(), hit.is_sharply_paraorthomodular());
        assert_eq!(fig.is_lattice(), hit.is_lattice());
        found += 1;
    }
    assert!(found >= 6);
}
