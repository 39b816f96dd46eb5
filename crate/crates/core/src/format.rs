//! Plain-text file formats.
//!
//! Every file is a sequence of `key values…` lines; `#` starts a comment,
//! blank lines are ignored, and a line that starts with a number continues
//! the previous key, so long tables may be wrapped. All element indices are
//! decimal and 0-based.
//!
//! ```text
//! n 2                  n 2                  n 2
//! add 0 1 1 0          id 0                 lambda 1 0 0 1
//! neg 0 1              add 0 1 1 0          rho 0 1 1 0
//! mul 0 1 1 0          addinv 0 1
//! star 0 1             mul 0 1 1 0
//!                      mulinv 0 1
//! ```
//!
//! A structure file with `add`/`neg` omitted is a semigroup-only file.
//! Semilattice specs reference component files by path, relative to the
//! spec file:
//!
//! ```text
//! ysize 2
//! meet 0 1 1 1
//! component 0 file top.sb
//! component 1 square 2 group.brace
//! hom 0 1 0 0 0 0
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::pairmap::PairMap;
use crate::semilattice::{Component, SemilatticeSpec};
use crate::skew::SkewBrace;
use crate::square::SquareBraceSpec;
use crate::star::DualWeakStarBrace;
use crate::structure::{StarBraceStructure, StarSemigroup};
use crate::table::{ElementMap, OpTable, UnaryTable};

struct Line {
    number: usize,
    key: String,
    values: Vec<String>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn lines(text: &str) -> Result<Vec<Line>> {
    let mut out: Vec<Line> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(first) = tokens.next() else { continue };
        if first.chars().all(|c| c.is_ascii_digit()) {
            let Some(prev) = out.last_mut() else {
                return Err(parse_error(number, "continuation line before any key"));
            };
            prev.values.push(first.to_string());
            prev.values.extend(tokens.map(str::to_string));
        } else {
            out.push(Line {
                number,
                key: first.to_string(),
                values: tokens.map(str::to_string).collect(),
            });
        }
    }
    Ok(out)
}

/// The lines of a flat `key values` file, keyed uniquely.
struct Fields {
    map: BTreeMap<String, (usize, Vec<String>)>,
    end: usize,
}

impl Fields {
    fn new(text: &str, allowed: &[&str]) -> Result<Fields> {
        let mut map = BTreeMap::new();
        for l in lines(text)? {
            if !allowed.contains(&l.key.as_str()) {
                return Err(parse_error(l.number, format!("unexpected key `{}`", l.key)));
            }
            if map.insert(l.key.clone(), (l.number, l.values)).is_some() {
                return Err(parse_error(l.number, format!("duplicate key `{}`", l.key)));
            }
        }
        Ok(Fields {
            map,
            end: text.lines().count() + 1,
        })
    }

    fn has(&self, key: &str) -> bool {
        self.map.contains_key(key)
    }

    fn get(&self, key: &str) -> Result<(usize, &[String])> {
        self.map
            .get(key)
            .map(|(l, v)| (*l, v.as_slice()))
            .ok_or_else(|| parse_error(self.end, format!("missing `{key}` line")))
    }

    fn indices(&self, key: &str, count: usize) -> Result<(usize, Vec<usize>)> {
        let (line, values) = self.get(key)?;
        let parsed = parse_indices(line, values)?;
        if parsed.len() != count {
            return Err(parse_error(
                line,
                format!("`{key}` needs {count} entries, found {}", parsed.len()),
            ));
        }
        Ok((line, parsed))
    }

    fn size(&self) -> Result<usize> {
        let (line, v) = self.indices("n", 1)?;
        if v[0] == 0 {
            return Err(parse_error(line, "carrier must be non-empty"));
        }
        Ok(v[0])
    }

    fn binary(&self, key: &str, n: usize) -> Result<OpTable> {
        let (line, v) = self.indices(key, n * n)?;
        OpTable::from_flat(n, v).map_err(|e| parse_error(line, format!("`{key}`: {e}")))
    }

    fn unary(&self, key: &str, n: usize) -> Result<UnaryTable> {
        let (line, v) = self.indices(key, n)?;
        UnaryTable::new(n, v).map_err(|e| parse_error(line, format!("`{key}`: {e}")))
    }
}

fn parse_indices(line: usize, values: &[String]) -> Result<Vec<usize>> {
    values
        .iter()
        .map(|v| v.parse().map_err(|_| parse_error(line, format!("`{v}` is not an index"))))
        .collect()
}

fn join(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Any of the single-structure files.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureFile {
    Structure(StarBraceStructure),
    Semigroup(StarSemigroup),
    SkewBrace(SkewBrace),
}

impl StructureFile {
    pub fn n(&self) -> usize {
        match self {
            StructureFile::Structure(s) => s.n(),
            StructureFile::Semigroup(s) => s.n(),
            StructureFile::SkewBrace(g) => g.n(),
        }
    }

    /// The canonical text of the file.
    pub fn to_text(&self) -> String {
        match self {
            StructureFile::Structure(s) => write_structure(s),
            StructureFile::Semigroup(s) => write_star_semigroup(s),
            StructureFile::SkewBrace(g) => write_skew_brace(g),
        }
    }
}

/// Detects the kind of structure file from its keys.
pub fn parse_structure_file(text: &str) -> Result<StructureFile> {
    let f = Fields::new(text, &["n", "add", "neg", "mul", "star", "id", "addinv", "mulinv"])?;
    if f.has("id") || f.has("addinv") || f.has("mulinv") {
        return parse_skew_brace(text).map(StructureFile::SkewBrace);
    }
    if f.has("add") || f.has("neg") {
        return parse_structure(text).map(StructureFile::Structure);
    }
    parse_star_semigroup(text).map(StructureFile::Semigroup)
}

pub fn parse_structure(text: &str) -> Result<StarBraceStructure> {
    let f = Fields::new(text, &["n", "add", "neg", "mul", "star"])?;
    let n = f.size()?;
    StarBraceStructure::new(
        f.binary("add", n)?,
        f.unary("neg", n)?,
        f.binary("mul", n)?,
        f.unary("star", n)?,
    )
}

pub fn write_structure(s: &StarBraceStructure) -> String {
    format!(
        "n {}\nadd {}\nneg {}\nmul {}\nstar {}\n",
        s.n(),
        join(s.add_table().as_slice()),
        join(s.neg_table().as_slice()),
        join(s.mul_table().as_slice()),
        join(s.star_table().as_slice()),
    )
}

pub fn parse_star_semigroup(text: &str) -> Result<StarSemigroup> {
    let f = Fields::new(text, &["n", "mul", "star"])?;
    let n = f.size()?;
    StarSemigroup::new(f.binary("mul", n)?, f.unary("star", n)?)
}

pub fn write_star_semigroup(s: &StarSemigroup) -> String {
    format!(
        "n {}\nmul {}\nstar {}\n",
        s.n(),
        join(s.op().as_slice()),
        join(s.star_table().as_slice()),
    )
}

/// Parses a skew-brace file and checks the brace axioms.
pub fn parse_skew_brace(text: &str) -> Result<SkewBrace> {
    let f = Fields::new(text, &["n", "id", "add", "addinv", "mul", "mulinv"])?;
    let n = f.size()?;
    let (id_line, id) = f.indices("id", 1)?;
    if id[0] >= n {
        return Err(parse_error(id_line, format!("identity {} is out of range", id[0])));
    }
    let g = SkewBrace::new(
        f.binary("add", n)?,
        f.binary("mul", n)?,
        id[0],
        f.unary("addinv", n)?,
        f.unary("mulinv", n)?,
    )?;
    g.check()
        .map_err(|w| parse_error(f.end, format!("not a skew brace: {w}")))?;
    Ok(g)
}

pub fn write_skew_brace(g: &SkewBrace) -> String {
    format!(
        "n {}\nid {}\nadd {}\naddinv {}\nmul {}\nmulinv {}\n",
        g.n(),
        g.identity(),
        join(g.add_table().as_slice()),
        join(g.add_inv_table().as_slice()),
        join(g.mul_table().as_slice()),
        join(g.mul_inv_table().as_slice()),
    )
}

pub fn parse_pairmap(text: &str) -> Result<PairMap> {
    let f = Fields::new(text, &["n", "lambda", "rho"])?;
    let n = f.size()?;
    PairMap::new(f.binary("lambda", n)?, f.binary("rho", n)?)
}

/// `lambda` holds `λ_a(b)` at row `a`, column `b`; `rho` holds `ρ_b(a)` at
/// row `b`, column `a`.
pub fn write_pairmap(r: &PairMap) -> String {
    format!(
        "n {}\nlambda {}\nrho {}\n",
        r.n(),
        join(r.lambda_table().as_slice()),
        join(r.rho_table().as_slice()),
    )
}

/// How a semilattice spec file names a component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentRef {
    File(PathBuf),
    Square { index_set_size: usize, group: PathBuf },
}

/// A semilattice spec file before its component files are read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFile {
    pub meet: OpTable,
    pub components: Vec<ComponentRef>,
    pub homs: BTreeMap<(usize, usize), Vec<usize>>,
}

pub fn parse_spec_file(text: &str) -> Result<SpecFile> {
    let all = lines(text)?;
    let mut k = None;
    let mut meet = None;
    let mut components: BTreeMap<usize, ComponentRef> = BTreeMap::new();
    let mut homs = BTreeMap::new();
    for l in &all {
        let number = l.number;
        match l.key.as_str() {
            "ysize" => {
                let v = parse_indices(number, &l.values)?;
                if v.len() != 1 || v[0] == 0 || k.is_some() {
                    return Err(parse_error(number, "`ysize` takes one positive size, once"));
                }
                k = Some(v[0]);
            }
            "meet" => {
                let size = k.ok_or_else(|| parse_error(number, "`meet` before `ysize`"))?;
                let v = parse_indices(number, &l.values)?;
                if v.len() != size * size || meet.is_some() {
                    return Err(parse_error(number, format!("`meet` needs {} entries, once", size * size)));
                }
                meet = Some(OpTable::from_flat(size, v).map_err(|e| parse_error(number, e.to_string()))?);
            }
            "component" => {
                let (node, rest) = match l.values.split_first() {
                    Some((node, rest)) => (parse_indices(number, std::slice::from_ref(node))?[0], rest),
                    None => return Err(parse_error(number, "`component` needs a node")),
                };
                let c = match rest {
                    [kind, path] if kind == "file" => ComponentRef::File(PathBuf::from(path)),
                    [kind, size, path] if kind == "square" => ComponentRef::Square {
                        index_set_size: parse_indices(number, std::slice::from_ref(size))?[0],
                        group: PathBuf::from(path),
                    },
                    _ => {
                        return Err(parse_error(
                            number,
                            "expected `component <node> file <path>` or `component <node> square <size> <path>`",
                        ))
                    }
                };
                if components.insert(node, c).is_some() {
                    return Err(parse_error(number, format!("duplicate component {node}")));
                }
            }
            "hom" => {
                let v = parse_indices(number, &l.values)?;
                if v.len() < 2 {
                    return Err(parse_error(number, "`hom` needs two nodes and a table"));
                }
                if homs.insert((v[0], v[1]), v[2..].to_vec()).is_some() {
                    return Err(parse_error(number, format!("duplicate hom {} {}", v[0], v[1])));
                }
            }
            other => return Err(parse_error(number, format!("unexpected key `{other}`"))),
        }
    }
    let end = text.lines().count() + 1;
    let k = k.ok_or_else(|| parse_error(end, "missing `ysize` line"))?;
    let meet = meet.ok_or_else(|| parse_error(end, "missing `meet` line"))?;
    let ordered = (0..k)
        .map(|node| {
            components
                .remove(&node)
                .ok_or_else(|| parse_error(end, format!("missing component {node}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(&extra) = components.keys().next() {
        return Err(parse_error(end, format!("component {extra} is outside the semilattice")));
    }
    Ok(SpecFile {
        meet,
        components: ordered,
        homs,
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Reads a semilattice spec and every component file it names, resolving
/// relative paths against the spec's directory.
pub fn load_semilattice_spec(path: &Path) -> Result<SemilatticeSpec> {
    let file = parse_spec_file(&read(path)?)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let components = file
        .components
        .iter()
        .map(|c| match c {
            ComponentRef::File(p) => {
                let s = parse_structure(&read(&base.join(p))?)?;
                Ok(Component::Structure(DualWeakStarBrace::new(s)?))
            }
            ComponentRef::Square { index_set_size, group } => Ok(Component::Square(SquareBraceSpec {
                index_set_size: *index_set_size,
                group: parse_skew_brace(&read(&base.join(group))?)?,
            })),
        })
        .collect::<Result<Vec<_>>>()?;
    let sizes: Vec<usize> = components
        .iter()
        .map(|c| match c {
            Component::Structure(s) => s.n(),
            Component::Square(spec) => spec.n(),
        })
        .collect();
    let homs = file
        .homs
        .into_iter()
        .map(|((a, b), table)| {
            if a >= sizes.len() || b >= sizes.len() {
                return Err(Error::InvalidSpec(format!("hom {a} {b}: node out of range")));
            }
            let f = ElementMap::new(sizes[a], sizes[b], table)
                .map_err(|e| Error::InvalidSpec(format!("hom {a} {b}: {e}")))?;
            Ok(((a, b), f))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(SemilatticeSpec {
        meet: file.meet,
        components,
        homs,
    })
}

/// The spec file text, with component `α` named by `component_paths[α]`
/// (written as a structure file).
pub fn write_spec_file(spec: &SemilatticeSpec, component_paths: &[String]) -> String {
    let mut out = String::new();
    let k = spec.y_size();
    writeln!(out, "ysize {k}").expect("writing to a string");
    writeln!(out, "meet {}", join(spec.meet.as_slice())).expect("writing to a string");
    for (alpha, path) in component_paths.iter().enumerate() {
        writeln!(out, "component {alpha} file {path}").expect("writing to a string");
    }
    for (&(a, b), f) in &spec.homs {
        writeln!(out, "hom {a} {b} {}", join(f.as_slice())).expect("writing to a string");
    }
    out
}
