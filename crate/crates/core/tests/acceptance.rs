//! Acceptance run: one PASS/FAIL line per criterion. Time limits are
//! fixed below; the process exits nonzero when any criterion fails.

use std::time::{Duration, Instant};

use paraortho::fixtures::{self, FILES};
use paraortho::io::format::{emit, parse};
use paraortho::io::render::render_cell;
use paraortho::ortho::OmFailure;
use paraortho::search::{
    find_counterexample, ortho_key, predicate, report_json, run_harness, EnumerationSpec, HarnessSpec, StructureClass,
    THEOREMS,
};
use paraortho::OrthoPoset;

const GALLERY_LIMIT: Duration = Duration::from_secs(1);
const AMALGAM_LIMIT: Duration = Duration::from_secs(5);
const HARNESS_LIMIT: Duration = Duration::from_secs(600);

struct Outcome {
    failed: usize,
}

impl Outcome {
    fn line(&mut self, id: &str, ok: bool, what: &str, detail: String) {
        if !ok {
            self.failed += 1;
        }
        println!("[{}] {id}: {what} ({detail})", if ok { "PASS" } else { "FAIL" });
    }
}

fn pair(o: &OrthoPoset, (x, y): (usize, usize)) -> (String, String) {
    (o.label(x).to_string(), o.label(y).to_string())
}

fn gallery() -> (bool, String) {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut expect = |ok: bool, msg: &str| {
        if !ok {
            bad.push(msg.to_string());
        }
    };
    for (name, o) in [("1a", fixtures::fig1a()), ("1b", fixtures::fig1b()), ("1c", fixtures::fig1c())] {
        expect(o.is_paraorthomodular(), &format!("fig{name} paraorthomodular"));
        expect(!o.is_orthomodular(), &format!("fig{name} not orthomodular"));
        expect(!o.is_sharply_paraorthomodular(), &format!("fig{name} not sharply"));
    }
    let a = fixtures::fig2a();
    expect(a.is_sharply_paraorthomodular() && a.is_lattice(), "fig2a sharply lattice");
    let b = fixtures::fig2b();
    expect(b.is_sharply_paraorthomodular() && !b.is_lattice(), "fig2b sharply, not lattice");
    let w = match b.orthomodular().witness() {
        Some(OmFailure::Law(x, y)) => Some(pair(&b, (*x, *y))),
        _ => None,
    };
    expect(w == Some(("b".into(), "d'".into())), "fig2b witness (b, d')");
    expect(fixtures::fig3().is_kleene_lattice(), "fig3 Kleene lattice");
    let b6 = fixtures::fig4();
    expect(!b6.is_paraorthomodular() && b6.find_benzene().is_some(), "fig4 benzene");
    let f5 = fixtures::fig5();
    expect(f5.is_lattice() && f5.is_paraorthomodular(), "fig5 paraorthomodular lattice");
    let f7 = fixtures::fig7();
    expect(f7.is_lattice(), "fig7 lattice");
    let w7 = f7.paraorthomodular().witness().map(|&p| pair(&f7, p));
    expect(w7 == Some(("a".into(), "b'".into())), "fig7 witness (a, b')");
    let f8 = fixtures::fig8_sectioned();
    expect(f8.is_lattice() && f8.is_relatively_paraorthomodular(), "fig8 relatively paraorthomodular");
    let t = start.elapsed();
    let ok = bad.is_empty() && t < GALLERY_LIMIT;
    (ok, format!("{} mismatches {:?}, {t:.2?} < {GALLERY_LIMIT:?}", bad.len(), bad))
}

const FIG1A_I3: [[&str; 6]; 6] = [
    ["1", "1", "1", "1", "1", "1"],
    ["a'", "1", "{a',b'}", "1", "1", "1"],
    ["b'", "{a',b'}", "1", "1", "1", "1"],
    ["a", "b'", "b'", "1", "b'", "1"],
    ["b", "a'", "a'", "a'", "1", "1"],
    ["0", "a", "b", "a'", "b'", "1"],
];

fn fig1a_table() -> (bool, String) {
    let s = fixtures::fig1a_sectioned();
    let t = s.impl_i3();
    let order = ["0", "a", "b", "a'", "b'", "1"];
    let mut matched = 0;
    for (i, x) in order.iter().enumerate() {
        for (j, y) in order.iter().enumerate() {
            if render_cell(&s, &t, s.elem(x).unwrap(), s.elem(y).unwrap()) == FIG1A_I3[i][j] {
                matched += 1;
            }
        }
    }
    (matched == 36, format!("{matched}/36 cells"))
}

fn amalgams() -> (bool, String) {
    let start = Instant::now();
    let tri = fixtures::greechie_triangle();
    let ct = tri.classify().unwrap();
    let c = tri.build().unwrap().carrier;
    let (a1, a3) = (c.elem("a1").unwrap(), c.elem("a3").unwrap());
    let tri_ok = ct.agrees()
        && ct.direct.paraorthomodular
        && !ct.direct.sharply_paraorthomodular
        && c.orthogonal(a1, a3)
        && c.join(a1, a3).is_none();
    let cs = fixtures::greechie_square().classify().unwrap();
    let sq_ok = cs.agrees() && cs.direct.sharply_paraorthomodular && !cs.direct.paraorthomodular_lattice;
    let ctwo = fixtures::two_block().classify().unwrap();
    let two_ok = ctwo.agrees() && ctwo.direct.paraorthomodular_lattice;
    let t = start.elapsed();
    (
        tri_ok && sq_ok && two_ok && t < AMALGAM_LIMIT,
        format!("triangle {tri_ok}, square {sq_ok}, two-block {two_ok}, {t:.2?} < {AMALGAM_LIMIT:?}"),
    )
}

fn harness(max_n: usize) -> (bool, String) {
    let spec = HarnessSpec::new(max_n);
    let start = Instant::now();
    let results = run_harness(&spec, THEOREMS).unwrap();
    let t = start.elapsed();
    let failing: Vec<&str> = results.iter().filter(|r| !r.passed()).map(|r| r.theorem.as_str()).collect();
    let checked: usize = results.iter().map(|r| r.instances).sum();
    (
        failing.is_empty() && t < HARNESS_LIMIT,
        format!(
            "{} theorems, {checked} applicable checks, failing {failing:?}, {t:.2?} < {HARNESS_LIMIT:?}",
            results.len()
        ),
    )
}

fn separations() -> (bool, String) {
    let at6 = EnumerationSpec {
        min_n: 6,
        ..EnumerationSpec::new(StructureClass::Ortho, 6)
    };
    let six = find_counterexample("paraorthomodular", "orthomodular", &at6).unwrap();
    let six_ok = six.as_ref().is_some_and(|c| c.n == 6);
    // The Fig. 1(a) shape is among the six-element separations.
    let key = ortho_key(&fixtures::fig1a());
    let para = predicate("paraorthomodular").unwrap();
    let om = predicate("orthomodular").unwrap();
    let fig_type = paraortho::search::enumerate(&at6)
        .unwrap()
        .iter()
        .map(|i| i.ortho().unwrap())
        .any(|o| para.eval_ortho(&o) && !om.eval_ortho(&o) && ortho_key(&o) == key);
    let smallest = find_counterexample("paraorthomodular", "orthomodular", &EnumerationSpec::new(StructureClass::Ortho, 7))
        .unwrap()
        .map(|c| c.n);
    let b = fixtures::fig2b();
    let sharp_ok = b.len() == 10 && b.is_sharply_paraorthomodular() && !b.is_lattice();
    let none = find_counterexample("orthomodular", "paraorthomodular", &EnumerationSpec::new(StructureClass::Ortho, 7))
        .unwrap()
        .is_none();
    (
        six_ok && fig_type && sharp_ok && none,
        format!(
            "separation at n=6 {six_ok} (Fig. 1(a) type {fig_type}; smallest overall n={smallest:?}), \
             sharply-not-lattice at n=10 {sharp_ok}, orthomodular-not-para up to 7 none {none}"
        ),
    )
}

fn cover_anomaly() -> (bool, String) {
    let f = fixtures::fig5_family();
    let a = f.build().unwrap();
    let rep = f.cover_transfer(&a);
    let l = |g: usize| f.labels()[g].clone();
    let found: Vec<(String, String, Vec<String>)> = rep
        .exceptions
        .iter()
        .map(|e| (l(e.lower), l(e.upper), e.interlopers.iter().map(|&g| l(g)).collect()))
        .collect();
    let ok = found.len() == 1 && found[0].0 == "a" && found[0].1 == "a'" && found[0].2.contains(&"c".to_string());
    (ok, format!("exceptions {found:?}"))
}

fn round_trip() -> (bool, String) {
    let ok_files = FILES
        .iter()
        .filter(|(_, text)| parse(text).map(|f| emit(&f) == *text).unwrap_or(false))
        .count();
    let spec = HarnessSpec::new(6);
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        report_json(&spec, &pool.install(|| run_harness(&spec, THEOREMS)).unwrap())
    };
    let (r1, r2, r3) = (run(1), run(4), run(4));
    let same = r1 == r2 && r2 == r3;
    (
        ok_files == FILES.len() && same,
        format!("{ok_files}/{} fixtures round-trip, reports identical {same}", FILES.len()),
    )
}

fn main() {
    let mut out = Outcome { failed: 0 };
    let (ok, d) = gallery();
    out.line("criterion 1", ok, "figure gallery profiles", d);
    let (ok, d) = fig1a_table();
    out.line("criterion 2", ok, "Fig. 1(a) sectioned implication table", d);
    let (ok, d) = amalgams();
    out.line("criterion 3", ok, "Greechie triangle, square and two-block pasting", d);
    let (ok, d) = harness(6);
    out.line("criterion 4", ok, "theorem harness, n <= 6", d);
    let (ok, d) = harness(7);
    out.line("criterion 4 (extended)", ok, "theorem harness, n <= 7", d);
    let (ok, d) = separations();
    out.line("criterion 5", ok, "known separations", d);
    let (ok, d) = cover_anomaly();
    out.line("criterion 6", ok, "Fig. 5 cover anomaly", d);
    let (ok, d) = round_trip();
    out.line("criterion 7", ok, "round trip and report determinism", d);
    if out.failed > 0 {
        println!("{} criteria failed", out.failed);
        std::process::exit(1);
    }
}
