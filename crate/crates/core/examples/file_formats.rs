//! Reading and writing structure files, JSON and DOT.

use paraortho::fixtures;
use paraortho::io::dot::export_ortho_dot;
use paraortho::io::format::{emit, emit_json, parse, StructureFile};

fn main() {
    let text = "\
name: square
elements: 0 a b 1
cover: 0 a
cover: 0 b
cover: a 1
cover: b 1
inv: 0 1
inv: a b
";
    let f = parse(text).unwrap();
    let o = f.to_ortho().unwrap();
    println!("parsed {} elements, orthomodular {}", o.len(), o.is_orthomodular());
    assert_eq!(emit(&f), text);
    println!("{}", emit_json(&f));

    let back = StructureFile::from_sectioned(Some("fig1a"), &fixtures::fig1a_sectioned());
    print!("{}", emit(&back));
    println!();
    print!("{}", export_ortho_dot("b6", &fixtures::fig4()));

    match parse("elements: 0 1\ncover: 0 2\n").and_then(|f| f.to_poset()) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("error: {e}"),
    }
}
