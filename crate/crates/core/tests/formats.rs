mod common;

use std::collections::BTreeSet;

use common::Raw;
use paraortho::fixtures::{self, FILES};
use paraortho::implication::impl_i;
use paraortho::io::dot::{edge_count, export_dot, export_family_dot, export_ortho_dot, node_count};
use paraortho::io::format::{emit, emit_json, parse, StructureFile};
use paraortho::io::render::{render_cell, render_table};

#[test]
fn every_fixture_round_trips_byte_identically() {
    for (name, text) in FILES {
        let f = parse(text).unwrap();
        assert_eq!(emit(&f), *text, "{name}");
        assert_eq!(parse(&emit(&f)).unwrap(), f, "{name}");
        let json = emit_json(&f);
        assert_eq!(parse(&json).unwrap(), f, "{name} json");
    }
}

#[test]
fn emit_is_idempotent_on_reordered_input() {
    let text = "name: v\nelements: 0 a b 1\ncover: b 1\ncover: 0 b\ncover: a 1\ncover: 0 a\ninv: b a\ninv: 1 0\n";
    let once = emit(&parse(text).unwrap());
    assert_eq!(emit(&parse(&once).unwrap()), once);
    assert!(once.contains("cover: 0 a\ncover: 0 b\ncover: a 1\ncover: b 1\n"));
    assert!(once.contains("inv: 0 1\ninv: a b\n"));
}

#[test]
fn cycle_is_reported_as_not_antisymmetric() {
    let err = parse("elements: 0 a b 1\ncover: 0 a\ncover: a b\ncover: b a\ncover: b 1\n")
        .unwrap()
        .to_poset()
        .unwrap_err();
    assert!(err.message.contains("not antisymmetric"), "{err}");
}

#[test]
fn syntax_errors_carry_line_numbers() {
    let err = parse("elements: 0 1\ncover 0 1\n").unwrap_err();
    assert_eq!(err.line, Some(2));
}

/// Expected cells, rows and columns in the order 0 a b a' b' 1.
const FIG1A_I3: [[&str; 6]; 6] = [
    ["1", "1", "1", "1", "1", "1"],
    ["a'", "1", "{a',b'}", "1", "1", "1"],
    ["b'", "{a',b'}", "1", "1", "1", "1"],
    ["a", "b'", "b'", "1", "b'", "1"],
    ["b", "a'", "a'", "a'", "1", "1"],
    ["0", "a", "b", "a'", "b'", "1"],
];

#[test]
fn sectioned_fig1a_implication_table_cell_by_cell() {
    let s = fixtures::fig1a_sectioned();
    let t = s.impl_i3();
    let order = ["0", "a", "b", "a'", "b'", "1"];
    let mut cells = 0;
    for (i, x) in order.iter().enumerate() {
        for (j, y) in order.iter().enumerate() {
            let (x, y) = (s.elem(x).unwrap(), s.elem(y).unwrap());
            assert_eq!(render_cell(&s, &t, x, y), FIG1A_I3[i][j], "row {i} column {j}");
            cells += 1;
        }
    }
    assert_eq!(cells, 36);
}

#[test]
fn implication_table_against_brute_force() {
    // (Min U(x, y))^y from the raw order and the section data.
    for s in [fixtures::fig1a_sectioned(), fixtures::fig8_sectioned()] {
        let r = Raw::of_poset(&s);
        let t = s.impl_i3();
        for x in 0..r.n {
            for y in 0..r.n {
                let mins = r.minimal(&r.upper(x, y));
                let expect: BTreeSet<usize> = mins.iter().map(|&w| s.sec(y, w)).collect();
                let got: BTreeSet<usize> = t.cell(x, y).iter().collect();
                assert_eq!(got, expect);
            }
            assert_eq!(t.cell(x, x).single(), Some(r.top()));
        }
    }
}

#[test]
fn fig2a_first_implication_table_is_stable() {
    let o = fixtures::fig2a();
    let text = render_table(&o, &impl_i(&o).unwrap(), "->");
    let expected = "\
-> | 0  | a  | b  | a' | b' | 1
---+----+----+----+----+----+--
0  | 1  | a' | b' | a' | b' | 1
a  | a' | a' | b  | a' | b' | 1
b  | b' | a  | b' | a' | b' | 1
a' | a  | a  | b  | a' | b' | 1
b' | b  | a  | b  | a' | b' | 1
1  | 0  | a  | b  | a' | b' | 1
";
    assert_eq!(text, expected);
}

#[test]
fn dot_exports() {
    let chain = fixtures::chain(2);
    let d = export_dot("c2", &chain, None);
    assert_eq!((node_count(&d), edge_count(&d)), (2, 1));

    let b6 = export_ortho_dot("b6", &fixtures::fig4());
    assert_eq!((node_count(&b6), edge_count(&b6)), (6, 6));

    let fam = fixtures::fig5_family();
    let d = export_family_dot("fig5", &fam).unwrap();
    assert_eq!(node_count(&d), 8);
    let edges: BTreeSet<&str> = d.lines().map(str::trim).filter(|l| l.contains("->")).collect();
    let expected: BTreeSet<&str> = [
        "\"0\" -> \"a\";",
        "\"0\" -> \"b'\";",
        "\"a\" -> \"b\";",
        "\"a\" -> \"c\";",
        "\"a\" -> \"c'\";",
        "\"b'\" -> \"a'\";",
        "\"b\" -> \"1\";",
        "\"c\" -> \"a'\";",
        "\"c'\" -> \"a'\";",
        "\"a'\" -> \"1\";",
    ]
    .into_iter()
    .collect();
    assert_eq!(edges, expected);
    assert_eq!(d, export_family_dot("fig5", &fam).unwrap());
}

#[test]
fn structure_files_rebuild_the_same_structures() {
    let o = fixtures::fig2b();
    assert_eq!(parse(&emit(&StructureFile::from_ortho(None, &o))).unwrap().to_ortho().unwrap(), o);
    let s = fixtures::fig8_sectioned();
    assert_eq!(parse(&emit(&StructureFile::from_sectioned(None, &s))).unwrap().to_sectioned().unwrap(), s);
}
