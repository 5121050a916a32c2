//! Property tests for the exact linear algebra layer and the structural
//! invariants of the module-theory layer, driven by proptest strategies and
//! seeded random sampling over the bundled example algebras.

use std::sync::Arc;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tiltkit::algebra::{build_algebra, AlgebraTable};
use tiltkit::approx::{verify_d_exact, DSequence, Subcategory};
use tiltkit::decompose::{decompose, is_isomorphic, tau, tau_inverse};
use tiltkit::matrix::Matrix;
use tiltkit::module::{
    dualize, hom_basis, hom_dim, simple, std_projective, Module, ModuleMap,
};
use tiltkit::quiver::{Quiver, RelationSet};
use tiltkit::resolve::{ext_dim, is_projective_module, projective_resolution};
use tiltkit::samples::{all_fixtures, fix_n3, modules_named};
use tiltkit::scalar::{format_scalar, parse_scalar, s_ratio, Scalar};

const SEED: u64 = 7;

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| s_ratio(n, d).unwrap())
}

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (0usize..=5, 0usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small_scalar(), r * c)
            .prop_map(move |entries| Matrix::from_fn(r, c, |i, j| entries[i * c + j].clone()))
    })
}

proptest! {
    #[test]
    fn row_reduction_is_idempotent(m in small_matrix()) {
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn rank_plus_nullity_is_the_column_count(m in small_matrix()) {
        let nullity = m.kernel_basis().cols();
        prop_assert_eq!(m.rank() + nullity, m.cols());
    }

    #[test]
    fn kernel_columns_are_annihilated(m in small_matrix()) {
        let k = m.kernel_basis();
        prop_assert!(m.mul(&k).unwrap().is_zero());
    }

    #[test]
    fn transpose_reverses_products(a in small_matrix(), b in small_matrix()) {
        if a.cols() == b.rows() {
            let lhs = a.mul(&b).unwrap().transpose();
            let rhs = b.transpose().mul(&a.transpose()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn solutions_returned_by_solve_are_solutions(m in small_matrix(), coeffs in proptest::collection::vec(small_scalar(), 0..=5)) {
        // Build a guaranteed-solvable right-hand side from the columns.
        if coeffs.len() == m.cols() {
            let x = Matrix::from_fn(m.cols(), 1, |i, _| coeffs[i].clone());
            let b = m.mul(&x).unwrap();
            let sol = m.solve_matrix(&b).expect("consistent system");
            prop_assert_eq!(m.mul(&sol).unwrap(), b);
        }
    }

    #[test]
    fn scalar_formatting_round_trips(x in small_scalar()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn inverse_certifies_itself(m in small_matrix()) {
        if m.is_square() {
            if let Some(inv) = m.inverse() {
                prop_assert!(m.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&m).unwrap().is_identity());
            } else {
                prop_assert!(m.rank() < m.rows());
            }
        }
    }
}

#[test]
fn rank_nullity_holds_for_two_hundred_seeded_matrices() {
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..200 {
        let rows = rng.gen_range(0..=8);
        let cols = rng.gen_range(0..=8);
        let m = Matrix::from_fn(rows, cols, |_, _| {
            s_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)).unwrap()
        });
        assert_eq!(m.rank() + m.kernel_basis().cols(), cols);
        assert_eq!(m.rank(), m.transpose().rank());
    }
}

#[test]
fn opposite_of_the_opposite_is_the_identity() {
    for fx in all_fixtures() {
        let opp = fx.algebra.opposite();
        let back = opp.opposite();
        assert_eq!(back.dim(), fx.algebra.dim());
        for i in 0..back.dim() {
            assert_eq!(back.basis[i].source, fx.algebra.basis[i].source, "{}", fx.name);
            assert_eq!(back.basis[i].target, fx.algebra.basis[i].target, "{}", fx.name);
            for j in 0..back.dim() {
                assert_eq!(back.mult(i, j), fx.algebra.mult(i, j), "{}", fx.name);
            }
        }
    }
}

#[test]
fn path_algebra_dimension_matches_the_path_count() {
    // On the linear quiver with n vertices and no relations the paths are
    // the intervals, so the dimension is n(n+1)/2.
    for n in 1..=5usize {
        let labels: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
        let arrows: Vec<(String, String, String)> = (1..n)
            .map(|v| (format!("a{v}"), v.to_string(), (v + 1).to_string()))
            .collect();
        let q = Quiver::new(labels, arrows).unwrap();
        let alg = build_algebra(&q, &RelationSet::empty(), n + 1).unwrap();
        assert_eq!(alg.dim(), n * (n + 1) / 2);
    }
}

#[test]
fn hom_dimension_is_additive_over_direct_sums() {
    let fx = fix_n3();
    let alg = &fx.algebra;
    let mods = &fx.atlas_modules;
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..20 {
        let a = &mods[rng.gen_range(0..mods.len())];
        let b = &mods[rng.gen_range(0..mods.len())];
        let c = &mods[rng.gen_range(0..mods.len())];
        let ab = Module::direct_sum(alg, &[a, b]).unwrap();
        assert_eq!(
            hom_dim(&ab, c).unwrap(),
            hom_dim(a, c).unwrap() + hom_dim(b, c).unwrap()
        );
        assert_eq!(
            hom_dim(c, &ab).unwrap(),
            hom_dim(c, a).unwrap() + hom_dim(c, b).unwrap()
        );
    }
}

#[test]
fn extension_dimensions_are_preserved_by_duality() {
    // ext^i(x, y) over A equals ext^i(D y, D x) over the opposite algebra.
    for fx in all_fixtures() {
        let opp = Arc::new(fx.algebra.opposite());
        for x in &fx.atlas_modules {
            for y in &fx.atlas_modules {
                let dx = dualize(x, &opp).unwrap();
                let dy = dualize(y, &opp).unwrap();
                for i in 0..=2usize {
                    assert_eq!(
                        ext_dim(x, y, i).unwrap(),
                        ext_dim(&dy, &dx, i).unwrap(),
                        "{}: ext^{i}({}, {})",
                        fx.name,
                        x.name(),
                        y.name()
                    );
                }
            }
        }
    }
}

#[test]
fn first_extensions_of_simples_count_arrows() {
    // All bundled algebras have radical square zero, where the dimension of
    // ext^1 between simples is the number of arrows between the vertices.
    for fx in all_fixtures() {
        let alg = &fx.algebra;
        let q = &alg.presentation().unwrap().quiver;
        let nv = q.n_vertices();
        for u in 0..nv {
            for v in 0..nv {
                let arrows = q
                    .arrows()
                    .iter()
                    .filter(|a| a.source == u && a.target == v)
                    .count();
                let su = simple(alg, u).unwrap();
                let sv = simple(alg, v).unwrap();
                assert_eq!(
                    ext_dim(&su, &sv, 1).unwrap(),
                    arrows,
                    "{}: ext^1(S{u}, S{v})",
                    fx.name
                );
            }
        }
    }
}

#[test]
fn decomposition_is_seed_independent() {
    let fx = fix_n3();
    let mods = modules_named(&fx, &["P12", "S2", "P23"]).unwrap();
    let x = Module::direct_sum(&fx.algebra, &mods.iter().collect::<Vec<_>>()).unwrap();
    let reference: Vec<Vec<usize>> = decompose(&x, 0)
        .unwrap()
        .iter()
        .map(|m| m.dims().to_vec())
        .collect();
    for seed in 1..=10u64 {
        let dims: Vec<Vec<usize>> = decompose(&x, seed)
            .unwrap()
            .iter()
            .map(|m| m.dims().to_vec())
            .collect();
        assert_eq!(dims, reference, "seed {seed}");
    }
}

#[test]
fn translate_and_inverse_translate_cancel() {
    for fx in all_fixtures() {
        for m in &fx.atlas_modules {
            if !is_projective_module(m).unwrap() {
                let back = tau_inverse(&tau(m).unwrap()).unwrap();
                assert!(
                    is_isomorphic(&back, m, SEED).unwrap(),
                    "{}: {}",
                    fx.name,
                    m.name()
                );
            }
        }
    }
}

#[test]
fn projective_resolutions_are_exact_complexes() {
    let fx = fix_n3();
    for m in &fx.atlas_modules {
        let res = projective_resolution(m, 4).unwrap();
        assert!(res.complete, "{}", m.name());
        for k in 1..res.maps.len() {
            let composite = res.maps[k].then(&res.maps[k - 1]).unwrap();
            assert!(composite.is_zero(), "{} at step {k}", m.name());
        }
    }
}

/// Builds the canonical subcategory of the three-vertex example and a
/// verified 2-exact chain inside it.
fn verified_chain() -> (Subcategory, DSequence) {
    let fx = fix_n3();
    let sub = Subcategory::new(modules_named(&fx, &["P12", "P23", "S1", "S3"]).unwrap()).unwrap();
    let p12 = fx.module_named("P12").unwrap();
    let s1 = fx.module_named("S1").unwrap();
    let proj = hom_basis(p12, s1)
        .unwrap()
        .into_iter()
        .find(ModuleMap::is_surjective)
        .unwrap();
    let seq = tiltkit::approx::d_kernel(&proj, &sub, 2, SEED).unwrap();
    assert!(verify_d_exact(&seq, &sub).unwrap().is_none());
    (sub, seq)
}

#[test]
fn verified_chains_have_vanishing_alternating_dimension_sum() {
    let (_, seq) = verified_chain();
    let mut total = 0i64;
    for (k, obj) in seq.objects.iter().enumerate() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        total += sign * obj.total_dim() as i64;
    }
    assert_eq!(total, 0);
}

#[test]
fn resolutions_by_a_subcategory_stay_inside_it() {
    let (sub, _) = verified_chain();
    let fx = fix_n3();
    for m in &fx.atlas_modules {
        let res = tiltkit::approx::m_resolution(m, &sub, 8).unwrap();
        for obj in &res.objects {
            assert!(
                tiltkit::approx::in_add(&sub, obj, SEED).unwrap(),
                "{} resolving {}",
                obj.name(),
                m.name()
            );
        }
        assert!(res.objects.len() <= 3, "{}", m.name());
        assert!(res.augment.is_surjective());
    }
}

#[test]
fn endomorphism_dimension_matches_the_hom_sum() {
    let (sub, _) = verified_chain();
    let gamma = tiltkit::functorcat::build_auslander_algebra(&sub).unwrap();
    let mut expected = 0;
    for x in sub.members() {
        for y in sub.members() {
            expected += hom_dim(x, y).unwrap();
        }
    }
    assert_eq!(gamma.dim(), expected);
}

#[test]
fn represented_functors_see_every_hom_space() {
    let (sub, _) = verified_chain();
    let gamma = tiltkit::functorcat::build_auslander_algebra(&sub).unwrap();
    for x in sub.members() {
        let y = tiltkit::functorcat::yoneda_module(x, &gamma).unwrap();
        for (i, m) in sub.members().iter().enumerate() {
            assert_eq!(y.spaces()[i], hom_dim(m, x).unwrap());
        }
    }
}

#[test]
fn standard_projectives_represent_evaluation() {
    // hom(P(v), m) has the dimension of m at v.
    for fx in all_fixtures() {
        let alg: &Arc<AlgebraTable> = &fx.algebra;
        for v in 0..alg.n_vertices() {
            let p = std_projective(alg, v).unwrap();
            for m in &fx.atlas_modules {
                assert_eq!(hom_dim(&p, m).unwrap(), m.dim_at(v), "{}", fx.name);
            }
        }
    }
}
