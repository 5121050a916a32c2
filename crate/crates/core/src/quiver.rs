//! Quivers, path words, and relation sets.
//!
//! A path is stored as the sequence of arrow indices in *traversal order*:
//! the word `[a, b]` means "follow `a`, then follow `b`", and is printed as
//! `a*b`. Relations are rational linear combinations of parallel paths (same
//! source, same target), each path of length at least 2 so that the ideal
//! they generate is admissible.

use std::collections::HashSet;

use num_traits::Zero;

use crate::scalar::{format_scalar, Scalar};
use crate::{Error, Result};

/// A labelled arrow between vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver with labelled vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// A path as arrow indices in traversal order; empty means a trivial path
/// (whose vertex must be tracked separately).
pub type PathWord = Vec<usize>;

impl Quiver {
    /// Builds a quiver from vertex labels and `(name, source, target)` arrow
    /// triples given by label.
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::QuiverInvalid("no vertices".into()));
        }
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::QuiverInvalid(format!("duplicate vertex `{v}`")));
            }
        }
        let mut names = HashSet::new();
        let mut resolved = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            if !names.insert(name.clone()) {
                return Err(Error::QuiverInvalid(format!("duplicate arrow `{name}`")));
            }
            let source = vertices
                .iter()
                .position(|v| *v == s)
                .ok_or_else(|| Error::QuiverInvalid(format!("arrow `{name}`: unknown vertex `{s}`")))?;
            let target = vertices
                .iter()
                .position(|v| *v == t)
                .ok_or_else(|| Error::QuiverInvalid(format!("arrow `{name}`: unknown vertex `{t}`")))?;
            resolved.push(Arrow {
                name,
                source,
                target,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: resolved,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Source vertex of a nonempty path word.
    pub fn word_source(&self, word: &[usize]) -> usize {
        self.arrows[word[0]].source
    }

    /// Target vertex of a nonempty path word.
    pub fn word_target(&self, word: &[usize]) -> usize {
        self.arrows[*word.last().expect("nonempty word")].target
    }

    /// Checks that consecutive arrows of the word compose head-to-tail.
    pub fn word_is_composable(&self, word: &[usize]) -> bool {
        word.windows(2)
            .all(|w| self.arrows[w[0]].target == self.arrows[w[1]].source)
            && word.iter().all(|&a| a < self.arrows.len())
    }

    /// Prints a path word; trivial paths print as `e_<vertex>`.
    pub fn format_word(&self, source: usize, word: &[usize]) -> String {
        if word.is_empty() {
            format!("e_{}", self.vertices[source])
        } else {
            word.iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// The same quiver with every arrow reversed (names preserved).
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// One relation: a linear combination of parallel paths set to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, PathWord)>,
}

/// A set of relations cutting the path algebra down to finite dimension.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RelationSet {
    pub relations: Vec<Relation>,
}

impl RelationSet {
    pub fn empty() -> Self {
        RelationSet { relations: vec![] }
    }

    /// Validates every relation against the quiver: composable paths, length
    /// at least 2, parallel terms, at least one nonzero coefficient, and no
    /// repeated path within one relation.
    pub fn validate(&self, q: &Quiver) -> Result<()> {
        for (ri, rel) in self.relations.iter().enumerate() {
            let live: Vec<&(Scalar, PathWord)> =
                rel.terms.iter().filter(|(c, _)| !c.is_zero()).collect();
            if live.is_empty() {
                return Err(Error::RelationInvalid(format!(
                    "relation {ri} has no nonzero terms"
                )));
            }
            let mut endpoints: Option<(usize, usize)> = None;
            let mut seen_words: HashSet<&PathWord> = HashSet::new();
            for (_, word) in &live {
                if word.len() < 2 {
                    return Err(Error::RelationInvalid(format!(
                        "relation {ri}: path `{}` has length {} (< 2)",
                        q.format_word(q.word_source(word), word),
                        word.len()
                    )));
                }
                if !q.word_is_composable(word) {
                    return Err(Error::RelationInvalid(format!(
                        "relation {ri}: arrows do not compose"
                    )));
                }
                let st = (q.word_source(word), q.word_target(word));
                match endpoints {
                    None => endpoints = Some(st),
                    Some(prev) if prev != st => {
                        return Err(Error::RelationInvalid(format!(
                            "relation {ri}: terms are not parallel"
                        )))
                    }
                    _ => {}
                }
                if !seen_words.insert(word) {
                    return Err(Error::RelationInvalid(format!(
                        "relation {ri}: repeated path `{}`",
                        q.format_word(q.word_source(word), word)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Prints one relation for diagnostics.
    pub fn format_relation(&self, q: &Quiver, i: usize) -> String {
        self.relations[i]
            .terms
            .iter()
            .map(|(c, w)| format!("{} {}", format_scalar(c), q.format_word(q.word_source(w), w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
