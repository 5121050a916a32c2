//! Bundled example algebras with their complete lists of indecomposable
//! modules, shared by unit tests, the command-line fixtures, and the
//! acceptance suite.

use std::sync::Arc;

use crate::algebra::{build_algebra, AlgebraTable};
use crate::error::Result;
use crate::module::{simple, std_projective, Module};
use crate::quiver::{Quiver, Relation, RelationSet};
use crate::scalar::s_int;

/// A bundled example: an algebra together with one representative of every
/// isomorphism class of indecomposable module, in a fixed documented order.
pub struct Fixture {
    /// Short identifier used in file names and reports.
    pub name: &'static str,
    pub algebra: Arc<AlgebraTable>,
    /// One module per isomorphism class of indecomposables.
    pub atlas_modules: Vec<Module>,
}

impl Fixture {
    /// Looks up an atlas module by name.
    pub fn module_named(&self, name: &str) -> Option<&Module> {
        self.atlas_modules.iter().find(|m| m.name() == name)
    }
}

fn quiver(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
    Quiver::new(
        vertices.iter().map(|s| s.to_string()).collect(),
        arrows
            .iter()
            .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string()))
            .collect(),
    )
    .expect("bundled quiver data is well formed")
}

fn monomial_relations(words: &[&[usize]]) -> RelationSet {
    RelationSet {
        relations: words
            .iter()
            .map(|w| Relation {
                terms: vec![(s_int(1), w.to_vec())],
            })
            .collect(),
    }
}

/// Path algebra of `1 -> 2` with no relations.
///
/// Three indecomposables: the simples `S1`, `S2` and the projective cover
/// `P12` of `S1` (which is also the injective envelope of `S2`).
pub fn fix_a2() -> Fixture {
    let q = quiver(&["1", "2"], &[("a", "1", "2")]);
    let alg = Arc::new(build_algebra(&q, &RelationSet::empty(), 6).expect("bundled algebra"));
    let atlas_modules = vec![
        std_projective(&alg, 0).expect("projective").with_name("P12"),
        simple(&alg, 0).expect("simple").with_name("S1"),
        simple(&alg, 1).expect("simple").with_name("S2"),
    ];
    Fixture {
        name: "fix_a2",
        algebra: alg,
        atlas_modules,
    }
}

/// Path algebra of `1 -> 2 -> 3` bound by the composite `a*b = 0`.
///
/// Five indecomposables: the simples and the two-dimensional projectives
/// `P12` (supported on vertices 1,2) and `P23` (on 2,3). `P12` is also the
/// injective envelope of `S2`, `P23` of `S3`; `S1` is injective and `S3`
/// projective.
pub fn fix_n3() -> Fixture {
    let q = quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]);
    let rels = monomial_relations(&[&[0, 1]]);
    let alg = Arc::new(build_algebra(&q, &rels, 6).expect("bundled algebra"));
    let atlas_modules = vec![
        std_projective(&alg, 0).expect("projective").with_name("P12"),
        std_projective(&alg, 1).expect("projective").with_name("P23"),
        simple(&alg, 0).expect("simple").with_name("S1"),
        simple(&alg, 1).expect("simple").with_name("S2"),
        simple(&alg, 2).expect("simple").with_name("S3"),
    ];
    Fixture {
        name: "fix_n3",
        algebra: alg,
        atlas_modules,
    }
}

/// Cyclic quiver `1 -> 2 -> 1` with both length-two cycles set to zero.
///
/// A self-injective algebra with four indecomposables: the simples and the
/// two-dimensional projective-injectives `P1` (top `S1`) and `P2` (top
/// `S2`).
pub fn fix_c2() -> Fixture {
    let q = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
    let rels = monomial_relations(&[&[0, 1], &[1, 0]]);
    let alg = Arc::new(build_algebra(&q, &rels, 6).expect("bundled algebra"));
    let atlas_modules = vec![
        std_projective(&alg, 0).expect("projective").with_name("P1"),
        std_projective(&alg, 1).expect("projective").with_name("P2"),
        simple(&alg, 0).expect("simple").with_name("S1"),
        simple(&alg, 1).expect("simple").with_name("S2"),
    ];
    Fixture {
        name: "fix_c2",
        algebra: alg,
        atlas_modules,
    }
}

/// All bundled fixtures, in a stable order.
pub fn all_fixtures() -> Vec<Fixture> {
    vec![fix_a2(), fix_n3(), fix_c2()]
}

/// Convenience: the atlas modules whose names appear in `names`, cloned.
pub fn modules_named(fixture: &Fixture, names: &[&str]) -> Result<Vec<Module>> {
    names
        .iter()
        .map(|n| {
            fixture
                .module_named(n)
                .cloned()
                .ok_or_else(|| crate::Error::MissingMember((*n).to_string()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::is_indecomposable;
    use crate::resolve::{is_injective_module, is_projective_module};

    #[test]
    fn fixtures_are_valid_and_atlases_indecomposable() {
        for fx in all_fixtures() {
            assert!(fx.algebra.validate().is_empty(), "{}", fx.name);
            for m in &fx.atlas_modules {
                assert!(is_indecomposable(m).unwrap(), "{} / {}", fx.name, m.name());
            }
        }
    }

    #[test]
    fn fixture_dimensions_match_their_descriptions() {
        let a2 = fix_a2();
        assert_eq!(a2.algebra.dim(), 3);
        assert_eq!(a2.module_named("P12").unwrap().dims(), &[1, 1]);

        let n3 = fix_n3();
        assert_eq!(n3.algebra.dim(), 5);
        assert_eq!(n3.module_named("P12").unwrap().dims(), &[1, 1, 0]);
        assert_eq!(n3.module_named("P23").unwrap().dims(), &[0, 1, 1]);

        let c2 = fix_c2();
        assert_eq!(c2.algebra.dim(), 4);
        assert_eq!(c2.module_named("P1").unwrap().dims(), &[1, 1]);
        assert_eq!(c2.module_named("P2").unwrap().dims(), &[1, 1]);
    }

    #[test]
    fn projective_and_injective_flags() {
        let n3 = fix_n3();
        let flags: Vec<(bool, bool)> = n3
            .atlas_modules
            .iter()
            .map(|m| {
                (
                    is_projective_module(m).unwrap(),
                    is_injective_module(m).unwrap(),
                )
            })
            .collect();
        // P12, P23, S1, S2, S3.
        assert_eq!(
            flags,
            vec![
                (true, true),
                (true, true),
                (false, true),
                (false, false),
                (true, false)
            ]
        );

        let c2 = fix_c2();
        for m in &c2.atlas_modules {
            let p = is_projective_module(m).unwrap();
            let i = is_injective_module(m).unwrap();
            // Self-injective: projective and injective coincide.
            assert_eq!(p, i, "{}", m.name());
            assert_eq!(p, m.name().starts_with('P'), "{}", m.name());
        }
    }
}
