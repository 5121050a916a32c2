//! Command reports: a serde-stable JSON schema plus a plain-text
//! tabulation of the same data.
//!
//! Field order is fixed by the struct declarations, every collection is
//! emitted in a deterministic order, and timing data only appears when
//! explicitly requested, so identical inputs produce byte-identical
//! output.

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    /// Overall pass/fail where the command has one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict: Option<bool>,
    /// Wall-clock time; only present when timings were requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
    pub body: Body,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum Body {
    Validate(ValidateBody),
    ExtTable(ExtTableBody),
    CheckCt(CheckCtBody),
    SearchCt(SearchCtBody),
    Sequence(SequenceBody),
    MResolve(MResolveBody),
    Functor(FunctorBody),
    Cotorsion(CotorsionBody),
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ModuleInfo {
    pub name: String,
    pub dims: Vec<usize>,
    pub total_dim: usize,
    pub projective: bool,
    pub injective: bool,
    pub indecomposable: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct MorphismInfo {
    pub name: String,
    pub source: String,
    pub target: String,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ValidateBody {
    pub vertices: usize,
    pub arrows: usize,
    pub algebra_dim: usize,
    pub d: usize,
    pub modules: Vec<ModuleInfo>,
    pub morphisms: Vec<MorphismInfo>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub subcategory: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub atlas: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ExtTableBody {
    pub members: Vec<String>,
    pub max_degree: usize,
    /// `entries[i][j]` lists the extension dimensions from `members[i]` to
    /// `members[j]` in degrees `1..=max_degree`.
    pub entries: Vec<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct FailureInfo {
    pub condition: String,
    pub left: String,
    pub right: String,
    pub degree: usize,
    pub dimension: usize,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct CheckCtBody {
    pub d: usize,
    pub members: Vec<String>,
    pub failures: Vec<FailureInfo>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct SearchCtBody {
    pub d: usize,
    pub atlas: Vec<String>,
    pub count: usize,
    pub solutions: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ObjectInfo {
    pub name: String,
    pub dims: Vec<usize>,
    pub total_dim: usize,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct SequenceBody {
    pub morphism: String,
    pub d: usize,
    /// The chain from source to sink, including the input morphism's ends.
    pub objects: Vec<ObjectInfo>,
    /// Exactness after applying maps-into-members functors.
    pub exact_into_members: bool,
    /// Exactness after applying maps-from-members functors.
    pub exact_from_members: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ResolutionInfo {
    pub target: String,
    /// Number of resolution steps beyond the zeroth term.
    pub length: usize,
    pub terms: Vec<ObjectInfo>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct MResolveBody {
    pub resolutions: Vec<ResolutionInfo>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct FunctorBody {
    pub members: Vec<String>,
    pub marked_members: Vec<String>,
    pub dim_endomorphism_algebra: usize,
    pub dim_corner: usize,
    pub dim_base_algebra: usize,
    pub corner_matches: bool,
    /// Which composition order of the corner identification matched:
    /// `"direct"` or `"opposite"`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matched_side: Option<String>,
    pub hom_dims_match: bool,
    pub restriction_identity: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct CotorsionBody {
    pub members: Vec<String>,
    pub failures: Vec<String>,
}

/// Renders a report as JSON (pretty, trailing newline).
pub fn render_json(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports always serialize");
    out.push('\n');
    out
}

/// Renders a labeled grid with right-aligned cells.
fn grid(row_labels: &[String], col_labels: &[String], cell: impl Fn(usize, usize) -> String) -> String {
    let mut widths: Vec<usize> = col_labels.iter().map(String::len).collect();
    let mut cells = vec![vec![String::new(); col_labels.len()]; row_labels.len()];
    for (i, row) in cells.iter_mut().enumerate() {
        for (j, c) in row.iter_mut().enumerate() {
            *c = cell(i, j);
            widths[j] = widths[j].max(c.len());
        }
    }
    let left = row_labels.iter().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    out.push_str(&" ".repeat(left));
    for (j, label) in col_labels.iter().enumerate() {
        out.push_str(&format!("  {label:>width$}", width = widths[j]));
    }
    out.push('\n');
    for (i, row_label) in row_labels.iter().enumerate() {
        out.push_str(&format!("{row_label:<left$}"));
        for (j, value) in cells[i].iter().enumerate() {
            out.push_str(&format!("  {value:>width$}", width = widths[j]));
        }
        out.push('\n');
    }
    out
}

fn dims_text(dims: &[usize]) -> String {
    let parts: Vec<String> = dims.iter().map(usize::to_string).collect();
    format!("({})", parts.join(", "))
}

fn verdict_text(verdict: Option<bool>) -> &'static str {
    match verdict {
        Some(true) => "PASS",
        Some(false) => "FAIL",
        None => "-",
    }
}

/// Renders a report as plain text.
pub fn render_human(report: &Report) -> String {
    let mut out = format!("tiltkit {} (seed {})\n", report.command, report.seed);
    match &report.body {
        Body::Validate(b) => {
            out.push_str(&format!(
                "algebra: {} vertices, {} arrows, dimension {}\n",
                b.vertices, b.arrows, b.algebra_dim
            ));
            out.push_str(&format!("d: {}\n", b.d));
            out.push_str(&format!("modules ({}):\n", b.modules.len()));
            for m in &b.modules {
                let mut tags = Vec::new();
                if m.projective {
                    tags.push("projective");
                }
                if m.injective {
                    tags.push("injective");
                }
                tags.push(if m.indecomposable {
                    "indecomposable"
                } else {
                    "decomposable"
                });
                out.push_str(&format!(
                    "  {} dims {} [{}]\n",
                    m.name,
                    dims_text(&m.dims),
                    tags.join(", ")
                ));
            }
            if !b.morphisms.is_empty() {
                out.push_str(&format!("morphisms ({}):\n", b.morphisms.len()));
                for f in &b.morphisms {
                    let mut tags = vec![format!("rank {}", f.rank)];
                    if f.injective {
                        tags.push("injective".to_string());
                    }
                    if f.surjective {
                        tags.push("surjective".to_string());
                    }
                    out.push_str(&format!(
                        "  {}: {} -> {} [{}]\n",
                        f.name,
                        f.source,
                        f.target,
                        tags.join(", ")
                    ));
                }
            }
            if let Some(s) = &b.subcategory {
                out.push_str(&format!("subcategory: {}\n", s.join(", ")));
            }
            if let Some(a) = &b.atlas {
                out.push_str(&format!("atlas: {}\n", a.join(", ")));
            }
        }
        Body::ExtTable(b) => {
            for degree in 1..=b.max_degree {
                out.push_str(&format!("degree {degree}:\n"));
                out.push_str(&grid(&b.members, &b.members, |i, j| {
                    b.entries[i][j][degree - 1].to_string()
                }));
            }
        }
        Body::CheckCt(b) => {
            out.push_str(&format!("subcategory: {}\n", b.members.join(", ")));
            out.push_str(&format!("d: {}\n", b.d));
            for f in &b.failures {
                out.push_str(&format!(
                    "failure [{}]: ext^{}({}, {}) has dimension {}\n",
                    f.condition, f.degree, f.left, f.right, f.dimension
                ));
            }
        }
        Body::SearchCt(b) => {
            out.push_str(&format!("atlas: {}\n", b.atlas.join(", ")));
            out.push_str(&format!("d: {}\n", b.d));
            out.push_str(&format!("solutions: {}\n", b.count));
            for (i, s) in b.solutions.iter().enumerate() {
                out.push_str(&format!("  {}: {}\n", i + 1, s.join(", ")));
            }
        }
        Body::Sequence(b) => {
            out.push_str(&format!("morphism: {}\n", b.morphism));
            out.push_str(&format!("d: {}\n", b.d));
            out.push_str("chain:\n");
            for obj in &b.objects {
                out.push_str(&format!(
                    "  {} dims {} total {}\n",
                    obj.name,
                    dims_text(&obj.dims),
                    obj.total_dim
                ));
            }
            out.push_str(&format!(
                "exact after maps into members: {}\n",
                b.exact_into_members
            ));
            out.push_str(&format!(
                "exact after maps from members: {}\n",
                b.exact_from_members
            ));
        }
        Body::MResolve(b) => {
            for r in &b.resolutions {
                out.push_str(&format!("{} (length {}):\n", r.target, r.length));
                for t in &r.terms {
                    out.push_str(&format!(
                        "  {} dims {} total {}\n",
                        t.name,
                        dims_text(&t.dims),
                        t.total_dim
                    ));
                }
            }
        }
        Body::Functor(b) => {
            out.push_str(&format!("members: {}\n", b.members.join(", ")));
            out.push_str(&format!("marked (projective): {}\n", b.marked_members.join(", ")));
            out.push_str(&format!(
                "dimensions: endomorphism algebra {}, corner {}, base algebra {}\n",
                b.dim_endomorphism_algebra, b.dim_corner, b.dim_base_algebra
            ));
            out.push_str(&format!(
                "corner matches base algebra: {}{}\n",
                b.corner_matches,
                match &b.matched_side {
                    Some(side) => format!(" ({side} composition order)"),
                    None => String::new(),
                }
            ));
            out.push_str(&format!("hom dimensions preserved: {}\n", b.hom_dims_match));
            out.push_str(&format!(
                "restriction returns each member: {}\n",
                b.restriction_identity
            ));
        }
        Body::Cotorsion(b) => {
            out.push_str(&format!("subcategory: {}\n", b.members.join(", ")));
            for f in &b.failures {
                out.push_str(&format!("failure: {f}\n"));
            }
        }
    }
    if let Some(ms) = report.elapsed_ms {
        out.push_str(&format!("elapsed: {ms} ms\n"));
    }
    out.push_str(&format!("verdict: {}\n", verdict_text(report.verdict)));
    out
}
