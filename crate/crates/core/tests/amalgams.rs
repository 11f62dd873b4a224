mod common;

use common::Raw;
use paraortho::amalgam::{generated_families, PastedFamily};
use paraortho::fixtures;

fn raw(f: &PastedFamily) -> Raw {
    Raw::of(&f.build().unwrap().carrier)
}

#[test]
fn greechie_triangle_is_paraorthomodular_not_sharply() {
    let f = fixtures::greechie_triangle();
    let r = raw(&f);
    assert_eq!(r.n, 14);
    assert!(r.paraorthomodular());
    assert!(!r.orthogonal());
    let (a1, a3) = (r.idx("a1"), r.idx("a3"));
    assert!(r.le[a1][r.inv[a3]], "a1 and a3 are orthogonal");
    assert_eq!(r.join(a1, a3), None);
    let c = f.classify().unwrap();
    assert_eq!(c.loops3.len(), 1);
    assert!(c.agrees());
    assert!(c.direct.paraorthomodular && !c.direct.sharply_paraorthomodular);
}

#[test]
fn greechie_square_is_sharply_paraorthomodular_not_a_lattice() {
    let f = fixtures::greechie_square();
    let r = raw(&f);
    assert_eq!(r.n, 18);
    assert!(r.paraorthomodular() && r.orthogonal());
    assert!(!r.is_lattice());
    let c = f.classify().unwrap();
    assert_eq!((c.loops3.len(), c.loops4.len()), (0, 1));
    assert!(c.agrees());
}

#[test]
fn loop_free_pasting_is_a_paraorthomodular_lattice() {
    let f = fixtures::two_block();
    let r = raw(&f);
    assert!(r.paraorthomodular() && r.is_lattice());
    let c = f.classify().unwrap();
    assert!(c.agrees() && c.direct.paraorthomodular_lattice);
}

#[test]
fn fig5_cover_anomaly() {
    let f = fixtures::fig5_family();
    let a = f.build().unwrap();
    let rep = f.cover_transfer(&a);
    assert_eq!(rep.exceptions.len(), 1);
    let e = &rep.exceptions[0];
    let l = |g: usize| f.labels()[g].as_str();
    assert_eq!((l(e.lower), l(e.upper)), ("a", "a'"));
    let between: Vec<&str> = e.interlopers.iter().map(|&g| l(g)).collect();
    assert!(between.contains(&"c"));
    // Independently: a < c < a' in the carrier.
    let r = Raw::of(&a.carrier);
    let (x, c, y) = (r.idx("a"), r.idx("c"), r.idx("a'"));
    assert!(r.le[x][c] && r.le[c][y] && x != c && c != y);
}

#[test]
fn two_block_pastings_inside_a_triangle_are_lattices() {
    let f = fixtures::greechie_triangle();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        assert!(f.two_block_union_is_lattice(i, j));
        let sub = f.two_block_pasting(i, j).unwrap().build().unwrap().carrier;
        let r = Raw::of(&sub);
        assert!(r.is_lattice() && r.paraorthomodular());
    }
}

#[test]
fn generated_families_agree_with_the_loop_prediction() {
    let fams = generated_families();
    assert!(fams.len() > 100);
    for (desc, f) in fams {
        let c = f.classify().unwrap_or_else(|e| panic!("{desc}: {e}"));
        assert!(c.agrees(), "{desc}");
        let r = raw(&f);
        assert_eq!(c.direct.paraorthomodular, r.paraorthomodular(), "{desc}");
        assert_eq!(c.direct.sharply_paraorthomodular, r.paraorthomodular() && r.orthogonal(), "{desc}");
    }
}
