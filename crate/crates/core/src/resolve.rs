//! Kernels and cokernels of module maps, projective covers, resolutions,
//! and extension-space dimensions.
//!
//! Covers are minimal: the cover of a module is the direct sum of standard
//! projectives matching its top (the quotient by the span of all arrow
//! images), with lifts chosen canonically from row-reduction pivots so the
//! whole construction is deterministic. Extension dimensions are read off a
//! projective resolution by ranking the induced maps between Hom spaces.

use num_traits::Zero;

use crate::matrix::Matrix;
use crate::module::{hom_basis, std_projective, Module, ModuleMap};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// The kernel of a map, with its inclusion into the source.
pub fn map_kernel(f: &ModuleMap) -> Result<(Module, ModuleMap)> {
    let m = f.source();
    let nv = m.dims().len();
    let kers: Vec<Matrix> = (0..nv).map(|v| f.block(v).kernel_basis()).collect();
    let dims: Vec<usize> = kers.iter().map(Matrix::cols).collect();
    let pres = m.algebra().presentation()?;
    let mut actions = Vec::with_capacity(pres.quiver.arrows().len());
    for (ai, arrow) in pres.quiver.arrows().iter().enumerate() {
        let (u, w) = (arrow.source, arrow.target);
        let img = m.action(ai).mul(&kers[u])?;
        let act = kers[w].solve_matrix(&img).ok_or_else(|| {
            Error::Internal("kernel spaces are not closed under the action".into())
        })?;
        let _ = (dims[u], dims[w]);
        actions.push(act);
    }
    let kernel = Module::new(
        m.algebra().clone(),
        format!("ker[{}->{}]", m.name(), f.target().name()),
        dims,
        actions,
    )?;
    let inclusion = ModuleMap::new(kernel.clone(), m.clone(), kers)?;
    Ok((kernel, inclusion))
}

/// The cokernel of a map, with the projection from the target.
pub fn map_cokernel(f: &ModuleMap) -> Result<(Module, ModuleMap)> {
    let n = f.target();
    let nv = n.dims().len();
    // Rows of the left kernel of each block annihilate the image, so they
    // are coordinates on the quotient.
    let projs: Vec<Matrix> = (0..nv).map(|v| f.block(v).left_kernel_basis()).collect();
    let dims: Vec<usize> = projs.iter().map(Matrix::rows).collect();
    let pres = n.algebra().presentation()?;
    let mut actions = Vec::with_capacity(pres.quiver.arrows().len());
    for (ai, arrow) in pres.quiver.arrows().iter().enumerate() {
        let (u, w) = (arrow.source, arrow.target);
        // Solve C(a) . proj_u = proj_w . N(a); transpose to use left-division.
        let rhs = projs[w].mul(n.action(ai))?.transpose();
        let lhs = projs[u].transpose();
        let sol = lhs.solve_matrix(&rhs).ok_or_else(|| {
            Error::Internal("cokernel action is not well defined".into())
        })?;
        actions.push(sol.transpose());
    }
    let coker = Module::new(
        n.algebra().clone(),
        format!("coker[{}->{}]", f.source().name(), n.name()),
        dims,
        actions,
    )?;
    let projection = ModuleMap::new(n.clone(), coker.clone(), projs)?;
    Ok((coker, projection))
}

/// The image of a map factored as source ->> image >-> target.
pub fn map_image(f: &ModuleMap) -> Result<(Module, ModuleMap, ModuleMap)> {
    let (_, proj) = map_cokernel(f)?;
    let (img, incl) = map_kernel(&proj)?;
    // Factor f through the inclusion: solve incl . g = f vertexwise.
    let mut blocks = Vec::with_capacity(f.blocks().len());
    for v in 0..f.blocks().len() {
        let g = incl
            .block(v)
            .solve_matrix(f.block(v))
            .ok_or_else(|| Error::Internal("image factorization failed".into()))?;
        blocks.push(g);
    }
    let onto = ModuleMap::new(f.source().clone(), img.clone(), blocks)?;
    Ok((img, onto, incl))
}

/// A projective cover: the covering module, the vertex of each indecomposable
/// summand (in block order), and the surjection onto the covered module.
#[derive(Clone, Debug)]
pub struct ProjCover {
    pub cover: Module,
    pub summand_vertices: Vec<usize>,
    pub map: ModuleMap,
}

/// Computes the projective cover of a module.
///
/// The top at each vertex is the quotient by the span of all incoming arrow
/// images; each top dimension contributes one standard projective summand.
/// Lifts of the top basis are standard coordinate vectors chosen by the
/// pivots of a row reduction, so the output is canonical.
pub fn projective_cover(m: &Module) -> Result<ProjCover> {
    let alg = m.algebra();
    let pres = alg.presentation()?;
    let q = &pres.quiver;
    let nv = q.n_vertices();

    let mut summand_vertices = Vec::new();
    let mut lifts: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for (v, lift) in lifts.iter_mut().enumerate() {
        let d = m.dim_at(v);
        let incoming: Vec<Matrix> = q
            .arrows()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.target == v)
            .map(|(ai, _)| m.action(ai).clone())
            .collect();
        let rad = if incoming.is_empty() {
            Matrix::zero(d, 0)
        } else {
            let mut acc = incoming[0].clone();
            for mat in &incoming[1..] {
                acc = acc.hstack(mat)?;
            }
            acc.column_space_basis()
        };
        // Pivot columns of [rad | I] landing in the identity part pick out
        // coordinate vectors completing the radical to a basis.
        let aug = rad.hstack(&Matrix::identity(d))?;
        let (_, pivots) = aug.rref();
        for p in pivots {
            if p >= rad.cols() {
                lift.push(p - rad.cols());
            }
        }
        for _ in 0..lift.len() {
            summand_vertices.push(v);
        }
    }

    let projs: Vec<Module> = summand_vertices
        .iter()
        .map(|&v| std_projective(alg, v))
        .collect::<Result<_>>()?;
    let proj_refs: Vec<&Module> = projs.iter().collect();
    let cover = Module::direct_sum(alg, &proj_refs)?;

    // Column offsets of each summand inside the cover, per vertex.
    let mut blocks: Vec<Matrix> = (0..nv)
        .map(|w| Matrix::zero(m.dim_at(w), cover.dim_at(w)))
        .collect();
    let mut col_offset = vec![0usize; nv];
    let mut lift_iter: Vec<std::vec::IntoIter<usize>> =
        lifts.into_iter().map(Vec::into_iter).collect();
    for &v in &summand_vertices {
        let lift = lift_iter[v].next().expect("one lift per summand");
        let slots = crate::module::projective_slots(alg, v)?;
        for w in 0..nv {
            for (slot_pos, &bidx) in slots[w].iter().enumerate() {
                let act = m.elem_action(bidx)?;
                for r in 0..m.dim_at(w) {
                    *blocks[w].at_mut(r, col_offset[w] + slot_pos) = act.at(r, lift).clone();
                }
            }
            col_offset[w] += slots[w].len();
        }
    }
    let map = ModuleMap::new(cover.clone(), m.clone(), blocks)?;
    if !map.is_surjective() {
        return Err(Error::Internal("projective cover is not surjective".into()));
    }
    Ok(ProjCover {
        cover,
        summand_vertices,
        map,
    })
}

/// True when the module is projective: its cover maps isomorphically.
pub fn is_projective_module(m: &Module) -> Result<bool> {
    let cover = projective_cover(m)?;
    Ok(cover.map.is_injective())
}

/// True when the module is injective: its dual over the opposite algebra is
/// projective.
pub fn is_injective_module(m: &Module) -> Result<bool> {
    let op = std::sync::Arc::new(m.algebra().opposite());
    let d = crate::module::dualize(m, &op)?;
    is_projective_module(&d)
}

/// A minimal presentation: the covers of the module and of the first
/// syzygy, and the connecting map between the covers.
pub struct Presentation {
    pub p0: ProjCover,
    pub p1: ProjCover,
    /// The composite `p1.cover -> syzygy -> p0.cover`.
    pub d1: ModuleMap,
}

/// Computes a minimal projective presentation `P1 -> P0 ->> m`.
pub fn minimal_presentation(m: &Module) -> Result<Presentation> {
    let p0 = projective_cover(m)?;
    let (_, incl) = map_kernel(&p0.map)?;
    let p1 = projective_cover(incl.source())?;
    let d1 = p1.map.then(&incl)?;
    Ok(Presentation { p0, p1, d1 })
}

/// A projective resolution `... -> P_1 -> P_0 ->> m`, cut off after
/// `max_steps` differentials if the kernels have not reached zero.
pub struct Resolution {
    pub covers: Vec<ProjCover>,
    /// `maps[i]` is the differential `P_{i+1} -> P_i`.
    pub maps: Vec<ModuleMap>,
    /// True when the final syzygy is zero, i.e. the resolution is complete.
    pub complete: bool,
}

/// Resolves a module by projective covers.
pub fn projective_resolution(m: &Module, max_steps: usize) -> Result<Resolution> {
    let mut covers = vec![projective_cover(m)?];
    let mut maps = Vec::new();
    let mut complete = false;
    for _ in 0..max_steps {
        let last = covers.last().expect("nonempty");
        let (syzygy, incl) = map_kernel(&last.map)?;
        if syzygy.is_zero_module() {
            complete = true;
            break;
        }
        let next = projective_cover(&syzygy)?;
        maps.push(next.map.then(&incl)?);
        covers.push(next);
    }
    if !complete {
        // One more look: the very last kernel may be zero already.
        let last = covers.last().expect("nonempty");
        let (syzygy, _) = map_kernel(&last.map)?;
        complete = syzygy.is_zero_module();
    }
    Ok(Resolution {
        covers,
        maps,
        complete,
    })
}

/// Flattens all vertex blocks of a map into one coordinate vector (vertices
/// in order, entries row-major).
pub fn flatten_blocks(f: &ModuleMap) -> Vec<Scalar> {
    let mut out = Vec::new();
    for b in f.blocks() {
        out.extend(b.to_vec_rowmajor());
    }
    out
}

/// Coordinates of `f` in a basis of its Hom space.
pub fn coords_in_hom_basis(f: &ModuleMap, basis: &[ModuleMap]) -> Result<Vec<Scalar>> {
    let target = flatten_blocks(f);
    if basis.is_empty() {
        if target.iter().all(Scalar::is_zero) {
            return Ok(Vec::new());
        }
        return Err(Error::Internal(
            "map does not lie in the span of an empty basis".into(),
        ));
    }
    let rows = target.len();
    let mut mat = Matrix::zero(rows, basis.len());
    for (j, b) in basis.iter().enumerate() {
        for (i, x) in flatten_blocks(b).into_iter().enumerate() {
            *mat.at_mut(i, j) = x;
        }
    }
    mat.solve(&target)
        .ok_or_else(|| Error::Internal("map does not lie in the basis span".into()))
}

/// Matrix of the map `Hom(B, Y) -> Hom(A, Y)`, `phi -> pre . phi`, in the
/// given bases (`dom_basis` spans Hom(B, Y), `cod_basis` spans Hom(A, Y),
/// `pre: A -> B`). Columns are indexed by `dom_basis`.
pub fn hom_pre_matrix(
    pre: &ModuleMap,
    dom_basis: &[ModuleMap],
    cod_basis: &[ModuleMap],
) -> Result<Matrix> {
    let mut cols = Vec::with_capacity(dom_basis.len());
    for phi in dom_basis {
        let composite = pre.then(phi)?;
        cols.push(coords_in_hom_basis(&composite, cod_basis)?);
    }
    let mut mat = Matrix::zero(cod_basis.len(), dom_basis.len());
    for (j, col) in cols.into_iter().enumerate() {
        for (i, x) in col.into_iter().enumerate() {
            *mat.at_mut(i, j) = x;
        }
    }
    Ok(mat)
}

/// Matrix of the map `Hom(Y, A) -> Hom(Y, B)`, `phi -> phi . post`, in the
/// given bases (`post: A -> B`). Columns are indexed by `dom_basis`.
pub fn hom_post_matrix(
    post: &ModuleMap,
    dom_basis: &[ModuleMap],
    cod_basis: &[ModuleMap],
) -> Result<Matrix> {
    let mut cols = Vec::with_capacity(dom_basis.len());
    for phi in dom_basis {
        let composite = phi.then(post)?;
        cols.push(coords_in_hom_basis(&composite, cod_basis)?);
    }
    let mut mat = Matrix::zero(cod_basis.len(), dom_basis.len());
    for (j, col) in cols.into_iter().enumerate() {
        for (i, x) in col.into_iter().enumerate() {
            *mat.at_mut(i, j) = x;
        }
    }
    Ok(mat)
}

/// Dimension of the degree-`i` extension space between two modules,
/// computed from a projective resolution of the first argument.
pub fn ext_dim(x: &Module, y: &Module, i: usize) -> Result<usize> {
    if i == 0 {
        return crate::module::hom_dim(x, y);
    }
    let res = projective_resolution(x, i + 1)?;
    let n_covers = res.covers.len();
    if i >= n_covers {
        // The resolution stopped early, so the higher syzygies vanish.
        return Ok(0);
    }
    let h_i = hom_basis(&res.covers[i].cover, y)?;
    if h_i.is_empty() {
        return Ok(0);
    }
    // Rank of Hom(P_i, Y) -> Hom(P_{i+1}, Y).
    let rank_out = if i < res.maps.len() {
        let h_next = hom_basis(&res.covers[i + 1].cover, y)?;
        hom_pre_matrix(&res.maps[i], &h_i, &h_next)?.rank()
    } else {
        0
    };
    // Rank of Hom(P_{i-1}, Y) -> Hom(P_i, Y).
    let h_prev = hom_basis(&res.covers[i - 1].cover, y)?;
    let rank_in = hom_pre_matrix(&res.maps[i - 1], &h_prev, &h_i)?.rank();
    Ok(h_i.len() - rank_out - rank_in)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, AlgebraTable};
    use crate::module::{dualize, hom_dim, simple};
    use crate::quiver::{Quiver, Relation, RelationSet};
    use crate::scalar::s_int;
    use std::sync::Arc;

    fn line3() -> Arc<AlgebraTable> {
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "3".into()),
            ],
        )
        .unwrap();
        let rels = RelationSet {
            relations: vec![Relation {
                terms: vec![(s_int(1), vec![0, 1])],
            }],
        };
        Arc::new(build_algebra(&q, &rels, 6).unwrap())
    }

    #[test]
    fn cover_of_a_simple() {
        let alg = line3();
        let s1 = simple(&alg, 0).unwrap();
        let cover = projective_cover(&s1).unwrap();
        assert_eq!(cover.summand_vertices, vec![0]);
        assert_eq!(cover.cover.dims(), &[1, 1, 0]);
        assert!(cover.map.is_surjective());
        let (syz, _) = map_kernel(&cover.map).unwrap();
        assert_eq!(syz.dims(), &[0, 1, 0]); // the simple at the middle vertex
    }

    #[test]
    fn projectivity_detection() {
        let alg = line3();
        for v in 0..3 {
            let p = std_projective(&alg, v).unwrap();
            assert!(is_projective_module(&p).unwrap());
        }
        let s1 = simple(&alg, 0).unwrap();
        assert!(!is_projective_module(&s1).unwrap());
        // The sink simple is projective but has a proper essential
        // extension (the string over {2,3}), so it is not injective.
        let s3 = simple(&alg, 2).unwrap();
        assert!(is_projective_module(&s3).unwrap());
        assert!(!is_injective_module(&s3).unwrap());
        // Both strings are projective-injective.
        assert!(is_injective_module(&std_projective(&alg, 0).unwrap()).unwrap());
        assert!(is_injective_module(&std_projective(&alg, 1).unwrap()).unwrap());
    }

    #[test]
    fn injectivity_detection() {
        let alg = line3();
        let i2 = crate::module::std_injective(&alg, 1).unwrap();
        let i3 = crate::module::std_injective(&alg, 2).unwrap();
        assert!(is_injective_module(&i2).unwrap());
        assert!(is_injective_module(&i3).unwrap());
        let s2 = simple(&alg, 1).unwrap();
        assert!(!is_injective_module(&s2).unwrap());
    }

    #[test]
    fn kernel_and_cokernel_of_string_maps() {
        let alg = line3();
        let m23 = std_projective(&alg, 1).unwrap(); // the string over {2,3}
        let s3 = simple(&alg, 2).unwrap();
        let s2 = simple(&alg, 1).unwrap();
        // The socle inclusion S(3) -> [2,3].
        let incl = &hom_basis(&s3, &m23).unwrap()[0];
        let (coker, proj) = map_cokernel(incl).unwrap();
        assert_eq!(coker.dims(), s2.dims());
        assert!(proj.is_surjective());
        // The top quotient [2,3] -> S(2).
        let quot = &hom_basis(&m23, &s2).unwrap()[0];
        let (ker, inc) = map_kernel(quot).unwrap();
        assert_eq!(ker.dims(), s3.dims());
        assert!(inc.is_injective());
    }

    #[test]
    fn image_factorization() {
        let alg = line3();
        let m23 = std_projective(&alg, 1).unwrap();
        let m12 = std_projective(&alg, 0).unwrap();
        let f = &hom_basis(&m23, &m12).unwrap()[0];
        let (img, onto, incl) = map_image(f).unwrap();
        assert_eq!(img.dims(), &[0, 1, 0]);
        assert!(onto.is_surjective());
        assert!(incl.is_injective());
        assert_eq!(onto.then(&incl).unwrap(), *f);
    }

    #[test]
    fn resolution_of_the_source_simple() {
        let alg = line3();
        let s1 = simple(&alg, 0).unwrap();
        let res = projective_resolution(&s1, 5).unwrap();
        assert!(res.complete);
        let vertices: Vec<Vec<usize>> = res
            .covers
            .iter()
            .map(|c| c.summand_vertices.clone())
            .collect();
        assert_eq!(vertices, vec![vec![0], vec![1], vec![2]]);
        // Differentials compose to zero.
        for i in 0..res.maps.len().saturating_sub(1) {
            assert!(res.maps[i + 1].then(&res.maps[i]).unwrap().is_zero());
        }
    }

    #[test]
    fn ext_dimensions_on_the_line() {
        let alg = line3();
        let s1 = simple(&alg, 0).unwrap();
        let s2 = simple(&alg, 1).unwrap();
        let s3 = simple(&alg, 2).unwrap();
        // One extension glues consecutive simples into a string.
        assert_eq!(ext_dim(&s1, &s2, 1).unwrap(), 1);
        assert_eq!(ext_dim(&s2, &s3, 1).unwrap(), 1);
        assert_eq!(ext_dim(&s1, &s3, 1).unwrap(), 0);
        // The squashed composite produces a second-degree extension.
        assert_eq!(ext_dim(&s1, &s3, 2).unwrap(), 1);
        assert_eq!(ext_dim(&s1, &s2, 2).unwrap(), 0);
        // Nothing extends a module by itself here.
        for s in [&s1, &s2, &s3] {
            assert_eq!(ext_dim(s, s, 1).unwrap(), 0);
        }
        // Degree zero agrees with Hom.
        assert_eq!(ext_dim(&s1, &s1, 0).unwrap(), hom_dim(&s1, &s1).unwrap());
        // High degrees vanish (the algebra has finite global dimension).
        assert_eq!(ext_dim(&s1, &s3, 3).unwrap(), 0);
    }

    #[test]
    fn presentation_of_the_source_simple() {
        let alg = line3();
        let s1 = simple(&alg, 0).unwrap();
        let pres = minimal_presentation(&s1).unwrap();
        assert_eq!(pres.p0.summand_vertices, vec![0]);
        assert_eq!(pres.p1.summand_vertices, vec![1]);
        // d1 then the cover map is zero.
        assert!(pres.d1.then(&pres.p0.map).unwrap().is_zero());
    }

    #[test]
    fn ext_duality_under_dualization() {
        let alg = line3();
        let op = Arc::new(alg.opposite());
        let s1 = simple(&alg, 0).unwrap();
        let s3 = simple(&alg, 2).unwrap();
        let d1 = dualize(&s1, &op).unwrap();
        let d3 = dualize(&s3, &op).unwrap();
        for i in 0..=2 {
            assert_eq!(
                ext_dim(&s1, &s3, i).unwrap(),
                ext_dim(&d3, &d1, i).unwrap(),
                "degree {i}"
            );
        }
    }
}
