//! Problem files: a line-based description of a bound quiver algebra,
//! named modules and morphisms, and the analysis parameters.
//!
//! One directive per line; `#` starts a comment and blank lines are
//! skipped. The header declares the scalar field, the quiver, and the
//! relations; module and morphism blocks follow, then the subcategory and
//! atlas name lists and the numeric parameters:
//!
//! ```text
//! field rationals
//! quiver 3                  # three vertices, labeled 1..3
//! arrow a 1 2               # name, source label, target label
//! relation a b              # the composite path "a then b" vanishes
//! max_path_len 6            # optional path budget (default 6)
//!
//! module P12
//!   dims 1 1 0
//!   arrow a 1               # row-major entries, target-dim x source-dim
//! end                       # omitted arrows act by zero
//!
//! morphism f P12 S1
//!   vertex 1 1              # row-major entries, target-dim x source-dim
//! end                       # omitted vertex blocks are zero
//!
//! subcategory P12 P23 S1 S3
//! atlas P12 P23 S1 S2 S3
//! d 2
//! seed 7
//! ```

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use tiltkit::algebra::{build_algebra, AlgebraTable};
use tiltkit::matrix::Matrix;
use tiltkit::module::{Module, ModuleMap};
use tiltkit::quiver::{Quiver, Relation, RelationSet};
use tiltkit::scalar::{parse_scalar, s_int, Scalar};

/// A problem-file error: everything the parser rejects, with its line.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for InputError {}

fn at_line(line: usize, message: impl fmt::Display) -> InputError {
    InputError(format!("line {line}: {message}"))
}

/// A fully resolved problem: the algebra, every named object, and the
/// parameters the commands read.
pub struct Problem {
    pub algebra: Arc<AlgebraTable>,
    pub modules: Vec<Module>,
    pub morphisms: Vec<(String, ModuleMap)>,
    pub subcategory: Option<Vec<String>>,
    pub atlas: Option<Vec<String>>,
    pub d: usize,
    pub seed: u64,
}

impl Problem {
    pub fn module(&self, name: &str) -> Result<&Module, InputError> {
        self.modules
            .iter()
            .find(|m| m.name() == name)
            .ok_or_else(|| InputError(format!("unknown module `{name}`")))
    }

    pub fn morphism(&self, name: &str) -> Result<&ModuleMap, InputError> {
        self.morphisms
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, f)| f)
            .ok_or_else(|| {
                let known: Vec<&str> = self.morphisms.iter().map(|(n, _)| n.as_str()).collect();
                InputError(if known.is_empty() {
                    format!("unknown morphism `{name}` (the file declares none)")
                } else {
                    format!(
                        "unknown morphism `{name}` (the file declares: {})",
                        known.join(", ")
                    )
                })
            })
    }

    pub fn modules_named(&self, names: &[String]) -> Result<Vec<Module>, InputError> {
        names
            .iter()
            .map(|n| self.module(n).cloned())
            .collect()
    }
}

/// Header data collected before the algebra can be built.
struct Header {
    field_seen: bool,
    quiver: Option<Quiver>,
    arrows: Vec<(String, String, String)>,
    relations: Vec<(usize, Vec<String>)>,
    max_path_len: usize,
}

fn parse_entries(line_no: usize, tokens: &[&str]) -> Result<Vec<Scalar>, InputError> {
    tokens
        .iter()
        .map(|t| {
            parse_scalar(t).map_err(|_| at_line(line_no, format!("malformed rational `{t}`")))
        })
        .collect()
}

fn parse_count(line_no: usize, token: &str, what: &str) -> Result<usize, InputError> {
    token
        .parse::<usize>()
        .map_err(|_| at_line(line_no, format!("malformed {what} `{token}`")))
}

fn build_header_algebra(header: &Header) -> Result<Arc<AlgebraTable>, InputError> {
    if !header.field_seen {
        return Err(InputError(
            "missing `field rationals` directive".to_string(),
        ));
    }
    let q = header
        .quiver
        .as_ref()
        .ok_or_else(|| InputError("missing `quiver` directive".to_string()))?;
    let mut relations = Vec::new();
    for (line_no, word) in &header.relations {
        let indices: Result<Vec<usize>, InputError> = word
            .iter()
            .map(|name| {
                q.arrow_index(name)
                    .ok_or_else(|| at_line(*line_no, format!("unknown arrow `{name}` in relation")))
            })
            .collect();
        relations.push(Relation {
            terms: vec![(s_int(1), indices?)],
        });
    }
    let rels = RelationSet { relations };
    let alg = build_algebra(q, &rels, header.max_path_len)
        .map_err(|e| InputError(format!("invalid algebra: {e}")))?;
    let issues = alg.validate();
    if !issues.is_empty() {
        return Err(InputError(format!(
            "algebra fails validation: {}",
            issues.join("; ")
        )));
    }
    Ok(Arc::new(alg))
}

/// Parses a problem file, resolving every name; all rejected input comes
/// back as an [`InputError`] with a line number where one applies.
pub fn parse_problem(text: &str) -> Result<Problem, InputError> {
    let mut header = Header {
        field_seen: false,
        quiver: None,
        arrows: Vec::new(),
        relations: Vec::new(),
        max_path_len: 6,
    };
    let mut algebra: Option<Arc<AlgebraTable>> = None;
    let mut modules: Vec<Module> = Vec::new();
    let mut morphisms: Vec<(String, ModuleMap)> = Vec::new();
    let mut subcategory: Option<(usize, Vec<String>)> = None;
    let mut atlas: Option<(usize, Vec<String>)> = None;
    let mut d: Option<usize> = None;
    let mut seed: Option<u64> = None;

    // In-progress block state.
    enum Block {
        None,
        Module {
            start: usize,
            name: String,
            dims: Option<Vec<usize>>,
            entries: Vec<(usize, String, Vec<Scalar>)>,
        },
        Morphism {
            start: usize,
            name: String,
            source: String,
            target: String,
            entries: Vec<(usize, String, Vec<Scalar>)>,
        },
    }
    let mut block = Block::None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let keyword = tokens[0];

        match &mut block {
            Block::Module {
                name,
                dims,
                entries,
                start,
            } => {
                match keyword {
                    "dims" => {
                        if dims.is_some() {
                            return Err(at_line(line_no, "duplicate `dims` line"));
                        }
                        let parsed: Result<Vec<usize>, InputError> = tokens[1..]
                            .iter()
                            .map(|t| parse_count(line_no, t, "dimension"))
                            .collect();
                        *dims = Some(parsed?);
                    }
                    "arrow" => {
                        if tokens.len() < 2 {
                            return Err(at_line(line_no, "`arrow` needs a name"));
                        }
                        entries.push((
                            line_no,
                            tokens[1].to_string(),
                            parse_entries(line_no, &tokens[2..])?,
                        ));
                    }
                    "end" => {
                        let alg = algebra.as_ref().expect("set when the block opened");
                        let module =
                            finish_module(alg, *start, name, dims.as_deref(), entries)?;
                        modules.push(module);
                        block = Block::None;
                    }
                    other => {
                        return Err(at_line(
                            line_no,
                            format!("unexpected `{other}` inside a module block (expected `dims`, `arrow`, or `end`)"),
                        ));
                    }
                }
                continue;
            }
            Block::Morphism {
                start,
                name,
                source,
                target,
                entries,
            } => {
                match keyword {
                    "vertex" => {
                        if tokens.len() < 2 {
                            return Err(at_line(line_no, "`vertex` needs a label"));
                        }
                        entries.push((
                            line_no,
                            tokens[1].to_string(),
                            parse_entries(line_no, &tokens[2..])?,
                        ));
                    }
                    "end" => {
                        let alg = algebra.as_ref().expect("set when the block opened");
                        let src = modules
                            .iter()
                            .find(|m| m.name() == source.as_str())
                            .ok_or_else(|| {
                                at_line(*start, format!("unknown module `{source}` in morphism"))
                            })?;
                        let tgt = modules
                            .iter()
                            .find(|m| m.name() == target.as_str())
                            .ok_or_else(|| {
                                at_line(*start, format!("unknown module `{target}` in morphism"))
                            })?;
                        let map = finish_morphism(alg, *start, name, src, tgt, entries)?;
                        morphisms.push((name.clone(), map));
                        block = Block::None;
                    }
                    other => {
                        return Err(at_line(
                            line_no,
                            format!("unexpected `{other}` inside a morphism block (expected `vertex` or `end`)"),
                        ));
                    }
                }
                continue;
            }
            Block::None => {}
        }

        match keyword {
            "field" => {
                if tokens.len() != 2 || tokens[1] != "rationals" {
                    let got = tokens.get(1).copied().unwrap_or("");
                    return Err(at_line(
                        line_no,
                        format!("unknown field `{got}` (only `rationals` is supported)"),
                    ));
                }
                header.field_seen = true;
            }
            "quiver" => {
                if header.quiver.is_some() || !header.arrows.is_empty() {
                    return Err(at_line(line_no, "duplicate `quiver` directive"));
                }
                if tokens.len() != 2 {
                    return Err(at_line(line_no, "`quiver` needs a vertex count"));
                }
                let n = parse_count(line_no, tokens[1], "vertex count")?;
                if n == 0 {
                    return Err(at_line(line_no, "a quiver needs at least one vertex"));
                }
                header.quiver = Some(
                    Quiver::new((1..=n).map(|v| v.to_string()).collect(), Vec::new())
                        .expect("labels are distinct"),
                );
            }
            "arrow" => {
                if algebra.is_some() {
                    return Err(at_line(
                        line_no,
                        "`arrow` must appear before the first module",
                    ));
                }
                if tokens.len() != 4 {
                    return Err(at_line(line_no, "`arrow` needs a name, a source, and a target"));
                }
                header
                    .arrows
                    .push((tokens[1].to_string(), tokens[2].to_string(), tokens[3].to_string()));
                let q = header
                    .quiver
                    .as_ref()
                    .ok_or_else(|| at_line(line_no, "`arrow` before `quiver`"))?;
                header.quiver = Some(
                    Quiver::new(
                        q.vertex_labels().to_vec(),
                        header.arrows.clone(),
                    )
                    .map_err(|e| at_line(line_no, e))?,
                );
            }
            "relation" => {
                if algebra.is_some() {
                    return Err(at_line(
                        line_no,
                        "`relation` must appear before the first module",
                    ));
                }
                if tokens.len() < 2 {
                    return Err(at_line(line_no, "`relation` needs at least one arrow name"));
                }
                header
                    .relations
                    .push((line_no, tokens[1..].iter().map(|s| s.to_string()).collect()));
            }
            "max_path_len" => {
                if tokens.len() != 2 {
                    return Err(at_line(line_no, "`max_path_len` needs a value"));
                }
                header.max_path_len = parse_count(line_no, tokens[1], "path budget")?;
            }
            "module" => {
                if tokens.len() != 2 {
                    return Err(at_line(line_no, "`module` needs exactly one name"));
                }
                if algebra.is_none() {
                    algebra = Some(build_header_algebra(&header).map_err(|e| {
                        InputError(format!("line {line_no}: {e}"))
                    })?);
                }
                let name = tokens[1].to_string();
                if modules.iter().any(|m| m.name() == name) {
                    return Err(at_line(line_no, format!("duplicate module `{name}`")));
                }
                block = Block::Module {
                    start: line_no,
                    name,
                    dims: None,
                    entries: Vec::new(),
                };
            }
            "morphism" => {
                if tokens.len() != 4 {
                    return Err(at_line(
                        line_no,
                        "`morphism` needs a name, a source module, and a target module",
                    ));
                }
                if algebra.is_none() {
                    algebra = Some(build_header_algebra(&header).map_err(|e| {
                        InputError(format!("line {line_no}: {e}"))
                    })?);
                }
                let name = tokens[1].to_string();
                if morphisms.iter().any(|(n, _)| *n == name) {
                    return Err(at_line(line_no, format!("duplicate morphism `{name}`")));
                }
                block = Block::Morphism {
                    start: line_no,
                    name,
                    source: tokens[2].to_string(),
                    target: tokens[3].to_string(),
                    entries: Vec::new(),
                };
            }
            "subcategory" => {
                if subcategory.is_some() {
                    return Err(at_line(line_no, "duplicate `subcategory` directive"));
                }
                subcategory = Some((
                    line_no,
                    tokens[1..].iter().map(|s| s.to_string()).collect(),
                ));
            }
            "atlas" => {
                if atlas.is_some() {
                    return Err(at_line(line_no, "duplicate `atlas` directive"));
                }
                atlas = Some((
                    line_no,
                    tokens[1..].iter().map(|s| s.to_string()).collect(),
                ));
            }
            "d" => {
                if d.is_some() {
                    return Err(at_line(line_no, "duplicate `d` directive"));
                }
                if tokens.len() != 2 {
                    return Err(at_line(line_no, "`d` needs a value"));
                }
                let value = parse_count(line_no, tokens[1], "degree")?;
                if value == 0 {
                    return Err(at_line(line_no, "`d` must be at least 1"));
                }
                d = Some(value);
            }
            "seed" => {
                if seed.is_some() {
                    return Err(at_line(line_no, "duplicate `seed` directive"));
                }
                if tokens.len() != 2 {
                    return Err(at_line(line_no, "`seed` needs a value"));
                }
                seed = Some(
                    tokens[1]
                        .parse::<u64>()
                        .map_err(|_| at_line(line_no, format!("malformed seed `{}`", tokens[1])))?,
                );
            }
            other => {
                return Err(at_line(line_no, format!("unknown directive `{other}`")));
            }
        }
    }

    match block {
        Block::None => {}
        Block::Module { start, name, .. } => {
            return Err(at_line(start, format!("module `{name}` is missing `end`")));
        }
        Block::Morphism { start, name, .. } => {
            return Err(at_line(start, format!("morphism `{name}` is missing `end`")));
        }
    }
    let algebra = match algebra {
        Some(a) => a,
        None => build_header_algebra(&header)?,
    };

    // Resolve the name lists against the declared modules.
    let resolve = |section: &str,
                   names: &Option<(usize, Vec<String>)>|
     -> Result<Option<Vec<String>>, InputError> {
        let Some((line_no, names)) = names else {
            return Ok(None);
        };
        let mut seen = HashSet::new();
        for n in names {
            if !modules.iter().any(|m| m.name() == n.as_str()) {
                return Err(at_line(*line_no, format!("unknown module `{n}` in {section}")));
            }
            if !seen.insert(n.clone()) {
                return Err(at_line(*line_no, format!("duplicate module `{n}` in {section}")));
            }
        }
        Ok(Some(names.clone()))
    };
    let subcategory = resolve("subcategory", &subcategory)?;
    let atlas = resolve("atlas", &atlas)?;

    Ok(Problem {
        algebra,
        modules,
        morphisms,
        subcategory,
        atlas,
        d: d.unwrap_or(1),
        seed: seed.unwrap_or(0),
    })
}

fn finish_module(
    alg: &Arc<AlgebraTable>,
    start: usize,
    name: &str,
    dims: Option<&[usize]>,
    entries: &[(usize, String, Vec<Scalar>)],
) -> Result<Module, InputError> {
    let pres = alg
        .presentation()
        .expect("problem algebras come from quivers");
    let q = &pres.quiver;
    let dims = dims
        .ok_or_else(|| at_line(start, format!("module `{name}` has no `dims` line")))?
        .to_vec();
    if dims.len() != q.n_vertices() {
        return Err(at_line(
            start,
            format!(
                "module `{name}`: expected {} dimensions, got {}",
                q.n_vertices(),
                dims.len()
            ),
        ));
    }
    let mut actions: Vec<Matrix> = q
        .arrows()
        .iter()
        .map(|a| Matrix::zero(dims[a.target], dims[a.source]))
        .collect();
    let mut filled = HashSet::new();
    for (line_no, arrow_name, values) in entries {
        let ai = q.arrow_index(arrow_name).ok_or_else(|| {
            at_line(
                *line_no,
                format!("module `{name}`: unknown arrow `{arrow_name}`"),
            )
        })?;
        if !filled.insert(ai) {
            return Err(at_line(
                *line_no,
                format!("module `{name}`: duplicate block for arrow `{arrow_name}`"),
            ));
        }
        let arrow = &q.arrows()[ai];
        let (rows, cols) = (dims[arrow.target], dims[arrow.source]);
        if values.len() != rows * cols {
            return Err(at_line(
                *line_no,
                format!(
                    "module `{name}`, arrow `{arrow_name}`: expected a {rows}x{cols} block ({} entries), got {}",
                    rows * cols,
                    values.len()
                ),
            ));
        }
        actions[ai] = Matrix::from_fn(rows, cols, |r, c| values[r * cols + c].clone());
    }
    Module::new(alg.clone(), name, dims, actions)
        .map_err(|e| at_line(start, format!("invalid module: {e}")))
}

fn finish_morphism(
    alg: &Arc<AlgebraTable>,
    start: usize,
    name: &str,
    source: &Module,
    target: &Module,
    entries: &[(usize, String, Vec<Scalar>)],
) -> Result<ModuleMap, InputError> {
    let pres = alg
        .presentation()
        .expect("problem algebras come from quivers");
    let q = &pres.quiver;
    let mut blocks: Vec<Matrix> = (0..q.n_vertices())
        .map(|v| Matrix::zero(target.dim_at(v), source.dim_at(v)))
        .collect();
    let mut filled = HashSet::new();
    for (line_no, label, values) in entries {
        let v = q.vertex_index(label).ok_or_else(|| {
            at_line(
                *line_no,
                format!("morphism `{name}`: unknown vertex `{label}`"),
            )
        })?;
        if !filled.insert(v) {
            return Err(at_line(
                *line_no,
                format!("morphism `{name}`: duplicate block for vertex `{label}`"),
            ));
        }
        let (rows, cols) = (target.dim_at(v), source.dim_at(v));
        if values.len() != rows * cols {
            return Err(at_line(
                *line_no,
                format!(
                    "morphism `{name}`, vertex `{label}`: expected a {rows}x{cols} block ({} entries), got {}",
                    rows * cols,
                    values.len()
                ),
            ));
        }
        blocks[v] = Matrix::from_fn(rows, cols, |r, c| values[r * cols + c].clone());
    }
    ModuleMap::new(source.clone(), target.clone(), blocks)
        .map_err(|e| at_line(start, format!("invalid morphism `{name}`: {e}")))
}
