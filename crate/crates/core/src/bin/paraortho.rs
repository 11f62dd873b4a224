//! Command-line front end. Exit codes: 0 success, 1 a checked property is
//! false, 2 input or usage error, 3 a theorem violation in `verify`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use paraortho::implication;
use paraortho::io::dot::{export_dot, export_family_dot, export_ortho_dot};
use paraortho::io::format::{parse_with, StructureFile, StructureKind};
use paraortho::io::render::render_table;
use paraortho::ortho::OrthoPoset;
use paraortho::search::{self, EnumerationSpec, HarnessSpec, StructureClass};
use paraortho::table::SetValuedTable;

#[derive(Parser)]
#[command(name = "paraortho", version, about = "Finite paraorthomodular posets and their implications")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print predicate verdicts, with witnesses for failures.
    Check {
        file: PathBuf,
        /// Predicates to test; all applicable ones when omitted.
        #[arg(long = "predicate", value_name = "NAME")]
        predicates: Vec<String>,
    },
    /// Render an operator table.
    Table {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: Op,
    },
    /// Inspect a pasted family of blocks.
    Amalgam {
        file: PathBuf,
        /// Loop counts and predicted against direct verdicts.
        #[arg(long)]
        classify: bool,
        /// List atomic loops of this order.
        #[arg(long, value_name = "N")]
        loops: Option<usize>,
        /// Print the amalgam as DOT instead.
        #[arg(long)]
        export_dot: bool,
    },
    /// Re-check theorems on every enumerated structure.
    Verify {
        /// Comma-separated theorem ids, or `all`.
        #[arg(long, value_delimiter = ',', required = true)]
        theorems: Vec<String>,
        #[arg(long)]
        max_n: usize,
        /// Size bound for sectioned sweeps; defaults to min(max-n, 6).
        #[arg(long)]
        sectioned_max_n: Option<usize>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        budget: Option<usize>,
        /// Print the JSON report instead of the summary.
        #[arg(long)]
        json: bool,
    },
    /// Find the smallest structure with property A but not B.
    Search {
        #[arg(long, value_delimiter = ',', num_args = 1, value_name = "A,B")]
        implies: Vec<String>,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Export a structure.
    Export {
        file: PathBuf,
        #[arg(long, required = true)]
        dot: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    I1,
    I2,
    I3,
    I4,
    SasakiImpl,
    SasakiProd,
}

struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(2, e.to_string())
    }
}

fn load(path: &Path) -> Result<StructureFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let resolve = move |rel: &str| std::fs::read_to_string(dir.join(rel)).map_err(|e| format!("{rel}: {e}"));
    parse_with(&text, &resolve).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn ortho_of(f: &StructureFile) -> Result<Option<OrthoPoset>, Failure> {
    Ok(match f.kind() {
        StructureKind::Poset => None,
        StructureKind::Ortho => Some(f.to_ortho()?),
        StructureKind::Sectioned => Some(f.to_sectioned()?.bottom_ortho()?),
        StructureKind::Family => Some(f.to_family()?.build()?.carrier),
    })
}

fn labels(o: &OrthoPoset, w: &[usize]) -> String {
    w.iter().map(|&x| o.label(x)).collect::<Vec<_>>().join(", ")
}

fn check(file: &Path, requested: &[String]) -> Result<u8, Failure> {
    let f = load(file)?;
    let ortho = ortho_of(&f)?;
    let names: Vec<String> = if requested.is_empty() {
        search::predicate_names()
            .into_iter()
            .filter(|n| ortho.is_some() || matches!(search::predicate(n), Some(search::Predicate::Poset(_))))
            .map(String::from)
            .collect()
    } else {
        requested.to_vec()
    };
    let mut code = 0;
    for name in &names {
        let pred = search::predicate(name).ok_or_else(|| Failure(2, format!("unknown predicate `{name}`")))?;
        let (holds, wit) = match (&ortho, pred) {
            (Some(o), p) => {
                let h = p.eval_ortho(o);
                (h, if h { None } else { search::witness(name, o).map(|w| labels(o, &w)) })
            }
            (None, search::Predicate::Poset(p)) => (p(&f.to_poset()?), None),
            (None, search::Predicate::Ortho(_)) => {
                return Err(Failure(2, format!("`{name}` needs an involution")));
            }
        };
        match wit {
            Some(w) => println!("{name}: false  witness ({w})"),
            None => println!("{name}: {holds}"),
        }
        if !holds && !requested.is_empty() {
            code = 1;
        }
    }
    if f.kind() == StructureKind::Sectioned {
        let s = f.to_sectioned()?;
        println!("relatively_paraorthomodular: {}", s.is_relatively_paraorthomodular());
        match s.check_c() {
            Ok(v) => println!("compatibility: {}", v.holds()),
            Err(e) => println!("compatibility: undefined ({e})"),
        }
    }
    Ok(code)
}

fn table(file: &Path, op: Op) -> Result<u8, Failure> {
    let f = load(file)?;
    let (p, t, sym): (paraortho::FinitePoset, SetValuedTable, &str) = match op {
        Op::I3 | Op::I4 => {
            let s = f.to_sectioned()?;
            let t = if matches!(op, Op::I3) { s.impl_i3() } else { s.impl_i4()? };
            (s.poset().clone(), t, "->")
        }
        _ => {
            let o = ortho_of(&f)?.ok_or_else(|| Failure(2, "the structure has no involution".into()))?;
            let (t, sym) = match op {
                Op::I1 => (implication::impl_i(&o)?, "->"),
                Op::I2 => (implication::impl_i2(&o)?, "->"),
                Op::SasakiImpl => (implication::sasaki_impl(&o)?, "->S"),
                _ => (implication::sasaki_prod(&o)?, "(.)S"),
            };
            (o.poset().clone(), t, sym)
        }
    };
    print!("{}", render_table(&p, &t, sym));
    Ok(0)
}

fn amalgam(file: &Path, classify: bool, loops: Option<usize>, dot: bool) -> Result<u8, Failure> {
    let f = load(file)?;
    let fam = f.to_family()?;
    let name = f.name.clone().unwrap_or_else(|| "amalgam".into());
    if dot {
        print!("{}", export_family_dot(&name, &fam)?);
        return Ok(0);
    }
    let a = fam.build()?;
    println!("blocks: {}", fam.blocks().len());
    println!("elements: {}", a.carrier.len());
    let label = |g: usize| fam.labels()[g].clone();
    for e in fam.cover_transfer(&a).exceptions {
        let inter: Vec<String> = e.interlopers.iter().map(|&g| label(g)).collect();
        println!(
            "cover in block {} lost: {} < {} (between: {})",
            fam.blocks()[e.block].name,
            label(e.lower),
            label(e.upper),
            inter.join(", ")
        );
    }
    if let Some(order) = loops {
        for l in fam.find_loops(order) {
            let b: Vec<&str> = l.blocks.iter().map(|&i| fam.blocks()[i].name.as_str()).collect();
            let at: Vec<String> = l.atoms.iter().map(|&g| label(g)).collect();
            println!("loop: blocks {} atoms {}", b.join(" "), at.join(" "));
        }
    }
    let mut code = 0;
    if classify {
        let c = fam.classify()?;
        println!("loops of order 3: {}", c.loops3.len());
        println!("loops of order 4: {}", c.loops4.len());
        for (kind, p) in [("predicted", c.predicted), ("direct", c.direct)] {
            println!(
                "{kind}: paraorthomodular {}, sharply {}, lattice {}",
                p.paraorthomodular, p.sharply_paraorthomodular, p.paraorthomodular_lattice
            );
        }
        if let Some((x, y)) = c.unjoined_orthogonal_pair {
            println!("orthogonal pair without join: {}, {}", a.carrier.label(x), a.carrier.label(y));
        }
        if !c.agrees() {
            println!("prediction and direct check disagree");
            code = 1;
        }
    }
    Ok(code)
}

fn verify(
    theorems: &[String],
    max_n: usize,
    sectioned_max_n: Option<usize>,
    jobs: Option<usize>,
    budget: Option<usize>,
    json: bool,
) -> Result<u8, Failure> {
    let ids: Vec<&str> = if theorems.iter().any(|t| t == "all") {
        search::THEOREMS.to_vec()
    } else {
        theorems.iter().map(String::as_str).collect()
    };
    let mut spec = HarnessSpec::new(max_n);
    if let Some(m) = sectioned_max_n {
        spec.sectioned_max_n = m;
    }
    spec.budget = budget;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        pool = pool.num_threads(j);
    }
    let results = pool.build()?.install(|| search::run_harness(&spec, &ids))?;
    if json {
        print!("{}", search::report_json(&spec, &results));
    } else {
        print!("{}", search::summary(&results));
        for r in &results {
            for v in &r.violations {
                println!("\n[{}] clause {} witness ({})\n{}", r.theorem, v.clause, v.witness.join(", "), v.structure);
            }
        }
    }
    Ok(if results.iter().all(|r| r.passed()) { 0 } else { 3 })
}

fn search_cmd(implies: &[String], min_n: usize, max_n: usize, budget: Option<usize>) -> Result<u8, Failure> {
    let [a, b] = implies else {
        return Err(Failure(2, "--implies takes exactly two predicates A,B".into()));
    };
    let mut spec = EnumerationSpec::new(StructureClass::Ortho, max_n);
    spec.min_n = min_n;
    spec.budget = budget;
    match search::find_counterexample(a, b, &spec)? {
        Some(c) => {
            println!("{a} does not imply {b}: counterexample with {} elements", c.n);
            print!("{}", paraortho::io::format::emit(&StructureFile::from_ortho(None, &c.structure)));
            Ok(1)
        }
        None => {
            println!("no structure with {a} and not {b} up to {max_n} elements");
            Ok(0)
        }
    }
}

fn export(file: &Path) -> Result<u8, Failure> {
    let f = load(file)?;
    let name = f.name.clone().unwrap_or_else(|| "structure".into());
    let text = match f.kind() {
        StructureKind::Poset => export_dot(&name, &f.to_poset()?, None),
        StructureKind::Family => export_family_dot(&name, &f.to_family()?)?,
        _ => export_ortho_dot(&name, &ortho_of(&f)?.expect("has involution")),
    };
    print!("{text}");
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let res = match cli.command {
        Command::Check { file, predicates } => check(&file, &predicates),
        Command::Table { file, op } => table(&file, op),
        Command::Amalgam {
            file,
            classify,
            loops,
            export_dot,
        } => amalgam(&file, classify, loops, export_dot),
        Command::Verify {
            theorems,
            max_n,
            sectioned_max_n,
            jobs,
            budget,
            json,
        } => verify(&theorems, max_n, sectioned_max_n, jobs, budget, json),
        Command::Search {
            implies,
            max_n,
            min_n,
            budget,
        } => search_cmd(&implies, min_n, max_n, budget),
        Command::Export { file, .. } => export(&file),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
