mod common;

use std::collections::BTreeSet;

use common::{automorphisms, ortho_isomorphic, permutations, Raw};
use paraortho::fixtures;
use paraortho::ortho::antitone_involutions;
use paraortho::search::{
    bounded_posets, enumerate, find_counterexample, ortho_key, EnumerationSpec, Instance, SearchError, StructureClass,
};

#[test]
fn antitone_involutions_match_permutation_scan() {
    for n in 2..=6 {
        for p in bounded_posets(n, true) {
            let r = Raw::of_poset(&p);
            let oracle: BTreeSet<Vec<usize>> = permutations(n).into_iter().filter(|f| r.antitone_involution(f)).collect();
            let lib: BTreeSet<Vec<usize>> = antitone_involutions(&p).into_iter().collect();
            assert_eq!(lib, oracle, "{:?}", p.labels());
        }
    }
}

#[test]
fn involution_orbits_follow_burnside() {
    // Orbits of antitone involutions under conjugation by automorphisms:
    // the average number of fixed points over the group.
    let universe = enumerate(&EnumerationSpec::new(StructureClass::Ortho, 7)).unwrap();
    for n in 2..=7 {
        for p in bounded_posets(n, true) {
            let r = Raw::of_poset(&p);
            let auts = automorphisms(&r);
            let invs: Vec<Vec<usize>> = permutations(n).into_iter().filter(|f| r.antitone_involution(f)).collect();
            let fixed: usize = auts
                .iter()
                .map(|s| invs.iter().filter(|f| (0..n).all(|x| s[f[x]] == f[s[x]])).count())
                .sum();
            assert_eq!(fixed % auts.len(), 0);
            let expected = fixed / auts.len();
            let got = universe.iter().filter(|i| i.poset() == &p).count();
            assert_eq!(got, expected, "{:?}", p.labels());
        }
    }
}

#[test]
fn unlabeled_poset_counts() {
    // Bounded posets on n elements correspond to posets on n - 2.
    let counts: Vec<usize> = (2..=8).map(|n| bounded_posets(n, true).len()).collect();
    assert_eq!(counts, [1, 1, 2, 5, 16, 63, 318]);
}

#[test]
fn canonical_representatives_are_pairwise_non_isomorphic() {
    let all: Vec<Raw> = bounded_posets(7, true).iter().map(Raw::of_poset).collect();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            assert!(!ortho_isomorphic(&all[i], &all[j]));
        }
    }
}

#[test]
fn labeled_and_iso_streams_cover_the_same_classes() {
    let iso: BTreeSet<_> = enumerate(&EnumerationSpec::new(StructureClass::Ortho, 6))
        .unwrap()
        .iter()
        .map(|i| ortho_key(&i.ortho().unwrap()))
        .collect();
    let mut spec = EnumerationSpec::new(StructureClass::Ortho, 6);
    spec.up_to_iso = false;
    let labeled: BTreeSet<_> = enumerate(&spec).unwrap().iter().map(|i| ortho_key(&i.ortho().unwrap())).collect();
    assert_eq!(iso, labeled);
}

#[test]
fn enumeration_is_deterministic() {
    let spec = EnumerationSpec::new(StructureClass::Sectioned, 6);
    assert_eq!(enumerate(&spec).unwrap(), enumerate(&spec).unwrap());
}

#[test]
fn two_element_ortho_class_is_the_two_chain() {
    let spec = EnumerationSpec {
        min_n: 2,
        ..EnumerationSpec::new(StructureClass::Ortho, 2)
    };
    let all = enumerate(&spec).unwrap();
    assert_eq!(all.len(), 1);
    let o = all[0].ortho().unwrap();
    assert_eq!(o.inv(o.bottom()), o.top());
}

#[test]
fn filtered_six_element_sweeps_contain_the_figures() {
    let spec = EnumerationSpec {
        min_n: 6,
        ..EnumerationSpec::new(StructureClass::Ortho, 6)
    };
    let para = enumerate(&spec.clone().with_filters(&["paraorthomodular"])).unwrap();
    let key1a = ortho_key(&fixtures::fig1a());
    assert!(para.iter().any(|i| {
        let o = i.ortho().unwrap();
        !o.is_orthogonal_poset() && ortho_key(&o) == key1a
    }));
    let sharp = enumerate(&spec.with_filters(&["sharply_paraorthomodular", "lattice"])).unwrap();
    let key2a = ortho_key(&fixtures::fig2a());
    assert!(sharp.iter().any(|i| ortho_key(&i.ortho().unwrap()) == key2a));
}

#[test]
fn sectioned_instances_carry_antitone_involutions_on_every_filter() {
    for inst in enumerate(&EnumerationSpec::new(StructureClass::Sectioned, 6)).unwrap() {
        let Instance::Sectioned(s) = inst else { unreachable!() };
        let r = Raw::of_poset(&s);
        for x in 0..r.n {
            for y in (0..r.n).filter(|&y| r.le[x][y]) {
                let fy = s.sec(x, y);
                assert!(r.le[x][fy]);
                assert_eq!(s.sec(x, fy), y);
                for z in (0..r.n).filter(|&z| r.le[y][z]) {
                    assert!(r.le[s.sec(x, z)][fy]);
                }
            }
        }
    }
}

#[test]
fn separations() {
    let spec = EnumerationSpec::new(StructureClass::Ortho, 7);
    let c = find_counterexample("paraorthomodular", "orthomodular", &spec).unwrap().unwrap();
    let r = Raw::of(&c.structure);
    assert!(r.paraorthomodular() && !r.orthomodular());
    // Nothing smaller exists: the two-chain is orthomodular.
    assert_eq!(c.n, 3);
    assert!(find_counterexample("orthomodular", "paraorthomodular", &spec).unwrap().is_none());
    assert_eq!(
        find_counterexample("orthomodular", "nonsense", &spec),
        Err(SearchError::UnknownPredicate("nonsense".into()))
    );
    let mut tight = spec;
    tight.budget = Some(3);
    assert_eq!(
        find_counterexample("orthomodular", "paraorthomodular", &tight),
        Err(SearchError::BudgetExceeded(3))
    );
}
