//! Line-oriented structure files and their JSON variant.
//!
//! ```text
//! name: fig1a
//! elements: 0 a b a' b' 1
//! cover: 0 a
//! inv: a a'
//! section a: a' b'
//! ```
//!
//! `cover` lines may list any strict order pair; the order is their
//! reflexive-transitive closure. `inv` and `section` pairs are read in
//! both directions; a fixed point is written `inv m m`. Families replace
//! the element lines by blocks and glue:
//!
//! ```text
//! begin block B1
//! elements: ...
//! end block
//! block B2: cube.txt
//! glue: B1.a B2.a
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Text starting
//! with `{` is read as JSON with the same fields.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::amalgam::{AmalgamError, Block, PastedFamily};
use crate::ortho::{OrthoError, OrthoPoset};
use crate::poset::{FinitePoset, PosetError};
use crate::relative::{RelativeError, SectionedPoset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: Option<usize>,
    pub message: String,
}

impl FormatError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        FormatError {
            line: Some(line),
            message: message.into(),
        }
    }

    fn semantic(e: impl fmt::Display) -> Self {
        FormatError {
            line: None,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for FormatError {}

macro_rules! semantic_from {
    ($($t:ty),*) => {$(
        impl From<$t> for FormatError {
            fn from(e: $t) -> Self {
                FormatError::semantic(e)
            }
        }
    )*};
}
semantic_from!(PosetError, OrthoError, RelativeError, AmalgamError);

/// What a file describes, judged by which lines it has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    Poset,
    Ortho,
    Sectioned,
    Family,
}

/// A parsed structure file. Pairs refer to element indices in
/// declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StructureFile {
    pub name: Option<String>,
    pub elements: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    pub inv: Vec<(usize, usize)>,
    /// Per filter generator, the pairs of its section.
    pub sections: Vec<(usize, Vec<(usize, usize)>)>,
    pub blocks: Vec<(String, StructureFile)>,
    /// `((block, element), (block, element))`.
    pub glue: Vec<((usize, usize), (usize, usize))>,
}

/// Supplies the text of a `block NAME: path` reference.
pub type Resolver<'a> = &'a dyn Fn(&str) -> Result<String, String>;

fn no_resolver(path: &str) -> Result<String, String> {
    Err(format!("cannot load `{path}`: external blocks need a resolver"))
}

/// Parses text or JSON. External block references fail.
pub fn parse(text: &str) -> Result<StructureFile, FormatError> {
    parse_with(text, &no_resolver)
}

/// Parses text or JSON, loading external blocks through `resolve`.
pub fn parse_with(text: &str, resolve: Resolver<'_>) -> Result<StructureFile, FormatError> {
    if text.trim_start().starts_with('{') {
        return parse_json(text);
    }
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut pos = 0;
    parse_lines(&lines, &mut pos, false, resolve)
}

struct Pending {
    line: usize,
    kind: PendingKind,
}

enum PendingKind {
    Cover(String, String),
    Inv(String, String),
    Section(String, String, String),
}

fn parse_lines(
    lines: &[(usize, &str)],
    pos: &mut usize,
    nested: bool,
    resolve: Resolver<'_>,
) -> Result<StructureFile, FormatError> {
    let mut f = StructureFile::default();
    let mut elements_line = None;
    let mut pending = Vec::new();
    let mut glue_raw: Vec<(usize, String, String)> = Vec::new();
    while *pos < lines.len() {
        let (ln, line) = lines[*pos];
        *pos += 1;
        if line == "end block" {
            if nested {
                break;
            }
            return Err(FormatError::at(ln, "`end block` without `begin block`"));
        }
        if let Some(name) = line.strip_prefix("begin block ") {
            if nested {
                return Err(FormatError::at(ln, "blocks cannot be nested"));
            }
            let name = block_name(ln, name)?;
            let start = *pos;
            let block = parse_lines(lines, pos, true, resolve)?;
            if *pos > lines.len() || lines[*pos - 1].1 != "end block" || *pos == start {
                return Err(FormatError::at(ln, format!("block `{name}` is not closed")));
            }
            f.blocks.push((name, block));
            continue;
        }
        let Some((key, rest)) = line.split_once(':') else {
            return Err(FormatError::at(ln, format!("expected `key: value`, found `{line}`")));
        };
        let (key, rest) = (key.trim(), rest.trim());
        let words: Vec<&str> = rest.split_whitespace().collect();
        let pair = |what: &str| -> Result<(String, String), FormatError> {
            match words.as_slice() {
                [a, b] => Ok((a.to_string(), b.to_string())),
                _ => Err(FormatError::at(ln, format!("`{what}` takes two elements"))),
            }
        };
        match key {
            "name" => {
                if rest.is_empty() {
                    return Err(FormatError::at(ln, "empty name"));
                }
                f.name = Some(rest.to_string());
            }
            "elements" => {
                if elements_line.is_some() {
                    return Err(FormatError::at(ln, "elements declared twice"));
                }
                if words.is_empty() {
                    return Err(FormatError::at(ln, "no elements listed"));
                }
                elements_line = Some(ln);
                f.elements = words.iter().map(|w| w.to_string()).collect();
            }
            "cover" => {
                let (a, b) = pair("cover")?;
                pending.push(Pending { line: ln, kind: PendingKind::Cover(a, b) });
            }
            "inv" => {
                let (a, b) = pair("inv")?;
                pending.push(Pending { line: ln, kind: PendingKind::Inv(a, b) });
            }
            "glue" if !nested => {
                let (a, b) = pair("glue")?;
                glue_raw.push((ln, a, b));
            }
            _ if key.starts_with("section ") => {
                let x = key["section ".len()..].trim().to_string();
                let (a, b) = pair("section")?;
                pending.push(Pending { line: ln, kind: PendingKind::Section(x, a, b) });
            }
            _ if key.starts_with("block ") && !nested => {
                let name = block_name(ln, &key["block ".len()..])?;
                let text = resolve(rest).map_err(|e| FormatError::at(ln, e))?;
                let block = parse_with(&text, resolve).map_err(|e| FormatError::at(ln, format!("in block `{name}`: {e}")))?;
                f.blocks.push((name, block));
            }
            _ => return Err(FormatError::at(ln, format!("unknown key `{key}`"))),
        }
    }
    if nested && !matches!(lines.get(*pos - 1), Some((_, "end block"))) {
        return Err(FormatError::at(lines.last().map_or(0, |l| l.0), "missing `end block`"));
    }

    let index: BTreeMap<&str, usize> = f.elements.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    if index.len() != f.elements.len() {
        return Err(FormatError::at(elements_line.unwrap_or(0), "duplicate element label"));
    }
    if !pending.is_empty() && f.elements.is_empty() {
        return Err(FormatError::at(pending[0].line, "pairs given before any `elements` line"));
    }
    let look = |ln: usize, l: &str| {
        index
            .get(l)
            .copied()
            .ok_or_else(|| FormatError::at(ln, format!("unknown element `{l}`")))
    };
    let mut sections: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for p in &pending {
        match &p.kind {
            PendingKind::Cover(a, b) => f.covers.push((look(p.line, a)?, look(p.line, b)?)),
            PendingKind::Inv(a, b) => f.inv.push((look(p.line, a)?, look(p.line, b)?)),
            PendingKind::Section(x, a, b) => {
                let x = look(p.line, x)?;
                sections.entry(x).or_default().push((look(p.line, a)?, look(p.line, b)?));
            }
        }
    }
    f.sections = sections.into_iter().collect();

    for (ln, a, b) in glue_raw {
        let g = (glue_ref(&f, ln, &a)?, glue_ref(&f, ln, &b)?);
        f.glue.push(g);
    }
    if !f.blocks.is_empty() && !f.elements.is_empty() {
        return Err(FormatError::at(elements_line.unwrap_or(0), "a family file lists blocks, not elements"));
    }
    if f.blocks.is_empty() && f.elements.is_empty() {
        return Err(FormatError::semantic("no elements and no blocks"));
    }
    Ok(f)
}

fn block_name(ln: usize, s: &str) -> Result<String, FormatError> {
    let s = s.trim();
    if s.is_empty() || s.contains('.') || s.contains(char::is_whitespace) {
        return Err(FormatError::at(ln, format!("invalid block name `{s}`")));
    }
    Ok(s.to_string())
}

fn glue_ref(f: &StructureFile, ln: usize, s: &str) -> Result<(usize, usize), FormatError> {
    let (b, e) = s
        .split_once('.')
        .ok_or_else(|| FormatError::at(ln, format!("glue reference `{s}` is not BLOCK.element")))?;
    let bi = f
        .blocks
        .iter()
        .position(|(n, _)| n == b)
        .ok_or_else(|| FormatError::at(ln, format!("unknown block `{b}`")))?;
    let ei = f.blocks[bi]
        .1
        .elements
        .iter()
        .position(|l| l == e)
        .ok_or_else(|| FormatError::at(ln, format!("block `{b}` has no element `{e}`")))?;
    Ok((bi, ei))
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct JsonFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    inv: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    sections: Vec<(String, Vec<(String, String)>)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    blocks: Vec<(String, JsonFile)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    glue: Vec<(String, String)>,
}

fn parse_json(text: &str) -> Result<StructureFile, FormatError> {
    let j: JsonFile = serde_json::from_str(text).map_err(|e| FormatError::at(e.line(), e.to_string()))?;
    from_json(j)
}

fn from_json(j: JsonFile) -> Result<StructureFile, FormatError> {
    let look = |l: &str| {
        j.elements
            .iter()
            .position(|e| e == l)
            .ok_or_else(|| FormatError::semantic(format!("unknown element `{l}`")))
    };
    let pairs = |v: &[(String, String)]| -> Result<Vec<(usize, usize)>, FormatError> {
        v.iter().map(|(a, b)| Ok((look(a)?, look(b)?))).collect()
    };
    let mut f = StructureFile {
        name: j.name.clone(),
        elements: j.elements.clone(),
        covers: pairs(&j.covers)?,
        inv: pairs(&j.inv)?,
        ..Default::default()
    };
    let mut sections: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (x, ps) in &j.sections {
        sections.entry(look(x)?).or_default().extend(pairs(ps)?);
    }
    f.sections = sections.into_iter().collect();
    for (name, b) in j.blocks {
        f.blocks.push((name, from_json(b)?));
    }
    for (a, b) in &j.glue {
        f.glue.push((glue_ref(&f, 0, a)?, glue_ref(&f, 0, b)?));
    }
    if f.blocks.is_empty() && f.elements.is_empty() {
        return Err(FormatError::semantic("no elements and no blocks"));
    }
    Ok(f)
}

fn to_json(f: &StructureFile) -> JsonFile {
    let c = f.canonical();
    let l = |i: usize| c.elements[i].clone();
    let pairs = |v: &[(usize, usize)]| v.iter().map(|&(a, b)| (l(a), l(b))).collect();
    JsonFile {
        name: c.name.clone(),
        elements: c.elements.clone(),
        covers: pairs(&c.covers),
        inv: pairs(&c.inv),
        sections: c.sections.iter().map(|(x, ps)| (l(*x), pairs(ps))).collect(),
        blocks: c.blocks.iter().map(|(n, b)| (n.clone(), to_json(b))).collect(),
        glue: c
            .glue
            .iter()
            .map(|&((bi, x), (bj, y))| (c.glue_label(bi, x), c.glue_label(bj, y)))
            .collect(),
    }
}

/// Canonical JSON form.
pub fn emit_json(f: &StructureFile) -> String {
    serde_json::to_string_pretty(&to_json(f)).expect("serializable") + "\n"
}

/// Canonical text form: declared element order, pairs sorted by index,
/// symmetric pairs written once with the smaller index first.
pub fn emit(f: &StructureFile) -> String {
    let c = f.canonical();
    let mut out = String::new();
    if let Some(n) = &c.name {
        out.push_str(&format!("name: {n}\n"));
    }
    c.emit_body(&mut out);
    for (name, b) in &c.blocks {
        out.push_str(&format!("begin block {name}\n"));
        if let Some(n) = &b.name {
            out.push_str(&format!("name: {n}\n"));
        }
        b.emit_body(&mut out);
        out.push_str("end block\n");
    }
    for &((bi, x), (bj, y)) in &c.glue {
        out.push_str(&format!("glue: {} {}\n", c.glue_label(bi, x), c.glue_label(bj, y)));
    }
    out
}

fn sym(v: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = v.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    v.sort_unstable();
    v.dedup();
    v
}

impl StructureFile {
    pub fn kind(&self) -> StructureKind {
        if !self.blocks.is_empty() {
            StructureKind::Family
        } else if !self.sections.is_empty() {
            StructureKind::Sectioned
        } else if !self.inv.is_empty() {
            StructureKind::Ortho
        } else {
            StructureKind::Poset
        }
    }

    fn canonical(&self) -> StructureFile {
        let mut covers = self.covers.clone();
        covers.sort_unstable();
        covers.dedup();
        let mut glue: Vec<_> = self.glue.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        glue.sort_unstable();
        glue.dedup();
        StructureFile {
            name: self.name.clone(),
            elements: self.elements.clone(),
            covers,
            inv: sym(&self.inv),
            sections: self.sections.iter().map(|(x, ps)| (*x, sym(ps))).collect(),
            blocks: self.blocks.iter().map(|(n, b)| (n.clone(), b.canonical())).collect(),
            glue,
        }
    }

    fn emit_body(&self, out: &mut String) {
        if self.elements.is_empty() {
            return;
        }
        let l = |i: usize| self.elements[i].as_str();
        out.push_str(&format!("elements: {}\n", self.elements.join(" ")));
        for &(a, b) in &self.covers {
            out.push_str(&format!("cover: {} {}\n", l(a), l(b)));
        }
        for &(a, b) in &self.inv {
            out.push_str(&format!("inv: {} {}\n", l(a), l(b)));
        }
        for (x, ps) in &self.sections {
            for &(a, b) in ps {
                out.push_str(&format!("section {}: {} {}\n", l(*x), l(a), l(b)));
            }
        }
    }

    fn glue_label(&self, block: usize, elem: usize) -> String {
        let (name, b) = &self.blocks[block];
        format!("{name}.{}", b.elements[elem])
    }

    pub fn to_poset(&self) -> Result<FinitePoset, FormatError> {
        if self.elements.is_empty() {
            return Err(FormatError::semantic("a family file does not describe a single poset"));
        }
        Ok(FinitePoset::from_covers(self.elements.clone(), &self.covers)?)
    }

    fn involution(&self, p: &FinitePoset) -> Result<Vec<usize>, FormatError> {
        if self.inv.is_empty() {
            return Err(FormatError::semantic("no `inv` lines: the file has no involution"));
        }
        let mut map = vec![usize::MAX; p.len()];
        for &(a, b) in &self.inv {
            for (u, v) in [(a, b), (b, a)] {
                if map[u] != usize::MAX && map[u] != v {
                    return Err(OrthoError::ConflictingImage(p.label(u).to_string()).into());
                }
                map[u] = v;
            }
        }
        if let Some(x) = map.iter().position(|&v| v == usize::MAX) {
            return Err(OrthoError::MissingImage(p.label(x).to_string()).into());
        }
        Ok(map)
    }

    pub fn to_ortho(&self) -> Result<OrthoPoset, FormatError> {
        let p = self.to_poset()?;
        let inv = self.involution(&p)?;
        Ok(OrthoPoset::new(p, inv)?)
    }

    /// Filters without `section` lines are completed as described at
    /// [`SectionedPoset::from_pairs`].
    pub fn to_sectioned(&self) -> Result<SectionedPoset, FormatError> {
        let p = self.to_poset()?;
        let global = if self.inv.is_empty() { None } else { Some(self.involution(&p)?) };
        let mut pairs = vec![Vec::new(); p.len()];
        for (x, ps) in &self.sections {
            pairs[*x] = ps.clone();
        }
        Ok(SectionedPoset::from_pairs(p, &pairs, global.as_deref())?)
    }

    pub fn to_family(&self) -> Result<PastedFamily, FormatError> {
        if self.blocks.is_empty() {
            return Err(FormatError::semantic("no blocks: not a family file"));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|(n, b)| {
                b.to_ortho()
                    .map(|o| Block::new(n.clone(), o))
                    .map_err(|e| FormatError::semantic(format!("block `{n}`: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PastedFamily::new(blocks, self.glue.clone())?)
    }

    pub fn from_poset(name: Option<&str>, p: &FinitePoset) -> Self {
        StructureFile {
            name: name.map(String::from),
            elements: p.labels().to_vec(),
            covers: p.covers(),
            ..Default::default()
        }
    }

    pub fn from_ortho(name: Option<&str>, o: &OrthoPoset) -> Self {
        let mut f = Self::from_poset(name, o);
        f.inv = sym(&o.elements().map(|x| (x, o.inv(x))).collect::<Vec<_>>());
        f
    }

    /// Writes every section, including those of `0` and `1`, and the
    /// section of `0` again as the global involution.
    pub fn from_sectioned(name: Option<&str>, s: &SectionedPoset) -> Self {
        let mut f = Self::from_poset(name, s);
        f.inv = sym(&s.section_pairs(s.bottom()));
        f.sections = s.elements().map(|x| (x, sym(&s.section_pairs(x)))).collect();
        f
    }

    pub fn from_family(name: Option<&str>, fam: &PastedFamily) -> Self {
        StructureFile {
            name: name.map(String::from),
            blocks: fam
                .blocks()
                .iter()
                .map(|b| (b.name.clone(), Self::from_ortho(None, &b.lattice)))
                .collect(),
            glue: fam.glue().to_vec(),
            ..Default::default()
        }
    }
}
