//! Indecomposability certificates, direct-sum decomposition, isomorphism
//! testing, and the Auslander–Reiten translate.
//!
//! Indecomposability is decided exactly: the endomorphism algebra is local
//! iff its quotient by the radical is one-dimensional, and the radical is
//! the kernel of the trace form, which is computable over the rationals.
//!
//! Splitting a decomposable module uses two randomized strategies under one
//! seeded generator: kernels of coprime characteristic-polynomial factors
//! of a random endomorphism (separates non-isomorphic summand groups), and
//! cyclic submodules generated by random vectors together with an explicit
//! retraction (separates isomorphic copies). Every candidate split is
//! verified exactly before it is used; if the attempt budget runs out the
//! failure is reported, never papered over.
//!
//! Isomorphism of indecomposables is decided without randomness: maps that
//! are not isomorphisms form a proper subspace of the Hom space whenever an
//! isomorphism exists, so some Hom-basis element must be invertible.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraTable, LinComb};
use crate::matrix::Matrix;
use crate::module::{dualize, hom_basis, projective_slots, std_projective, Module, ModuleMap};
use crate::poly::{char_poly, rational_roots, Poly};
use crate::resolve::{map_cokernel, map_kernel, minimal_presentation, Presentation};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Trace of an endomorphism: the sum of its vertex-block traces.
pub fn map_trace(f: &ModuleMap) -> Result<Scalar> {
    if f.source() != f.target() {
        return Err(Error::MapInvalid("trace needs an endomorphism".into()));
    }
    let mut acc = Scalar::zero();
    for b in f.blocks() {
        acc += b.trace()?;
    }
    Ok(acc)
}

/// Dimension of the radical of the endomorphism algebra: the kernel of the
/// trace form on a Hom basis.
pub fn endo_radical_dim(m: &Module) -> Result<usize> {
    let endos = hom_basis(m, m)?;
    let k = endos.len();
    let mut gram = Matrix::zero(k, k);
    for i in 0..k {
        for j in 0..k {
            *gram.at_mut(i, j) = map_trace(&endos[i].then(&endos[j])?)?;
        }
    }
    Ok(k - gram.rank())
}

/// A nonzero module is indecomposable iff its endomorphism algebra is
/// local, i.e. one-dimensional modulo its radical.
pub fn is_indecomposable(m: &Module) -> Result<bool> {
    if m.is_zero_module() {
        return Ok(false);
    }
    let total = crate::module::hom_dim(m, m)?;
    Ok(total - endo_radical_dim(m)? == 1)
}

/// A random integer-coefficient combination of the given maps.
fn random_combo(maps: &[ModuleMap], rng: &mut ChaCha8Rng) -> Result<Option<ModuleMap>> {
    let Some(first) = maps.first() else {
        return Ok(None);
    };
    let mut acc = ModuleMap::zero(first.source(), first.target())?;
    for f in maps {
        let c: i64 = rng.gen_range(-4..=4);
        if c != 0 {
            acc = acc.add(&f.scale(&crate::scalar::s_int(c)))?;
        }
    }
    Ok(Some(acc))
}

/// Evaluates a polynomial at an endomorphism, block by block.
fn poly_of_endo(p: &Poly, f: &ModuleMap) -> Result<ModuleMap> {
    let blocks: Result<Vec<Matrix>> = f.blocks().iter().map(|b| p.eval_matrix(b)).collect();
    ModuleMap::new(f.source().clone(), f.target().clone(), blocks?)
}

/// Tries to split off generalized eigenspaces of a random endomorphism:
/// the kernels of coprime characteristic-polynomial factors are submodules
/// and their direct sum is the whole module. Pieces come with their
/// inclusions.
fn try_char_split(
    m: &Module,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Vec<(Module, ModuleMap)>>> {
    let endos = hom_basis(m, m)?;
    let Some(phi) = random_combo(&endos, rng)? else {
        return Ok(None);
    };
    let total = Matrix::block_diag(phi.blocks());
    let p = char_poly(&total)?;
    let roots = rational_roots(&p)?;
    // Coprime factors: one (t - r)^mult per rational root, plus the
    // root-free cofactor if it is nonconstant.
    let mut factors: Vec<Poly> = Vec::new();
    let mut cofactor = p.clone();
    for (r, mult) in &roots {
        let mut f = Poly::one();
        for _ in 0..*mult {
            f = f.mul(&Poly::linear_root(r));
            cofactor = cofactor.divexact(&Poly::linear_root(r))?;
        }
        factors.push(f);
    }
    if cofactor.degree().unwrap_or(0) > 0 {
        factors.push(cofactor);
    }
    if factors.len() < 2 {
        return Ok(None);
    }
    let mut pieces = Vec::new();
    let mut dim_sum = 0;
    for f in &factors {
        let (ker, incl) = map_kernel(&poly_of_endo(f, &phi)?)?;
        dim_sum += ker.total_dim();
        if !ker.is_zero_module() {
            pieces.push((ker, incl));
        }
    }
    if dim_sum != m.total_dim() {
        return Err(Error::Internal(
            "eigenspace split does not exhaust the module".into(),
        ));
    }
    if pieces.len() < 2 {
        return Ok(None);
    }
    Ok(Some(pieces))
}

/// The smallest submodule containing the given vectors, with its inclusion.
fn spin_submodule(m: &Module, vectors: &[Vec<Vec<Scalar>>]) -> Result<(Module, ModuleMap)> {
    let pres = m.algebra().presentation()?;
    let q = &pres.quiver;
    let nv = q.n_vertices();
    let mut spans: Vec<Matrix> = (0..nv)
        .map(|v| {
            let mut cols = Matrix::zero(m.dim_at(v), 0);
            for vec in vectors {
                cols = cols
                    .hstack(&Matrix::column(vec[v].clone()))
                    .expect("heights match");
            }
            cols.column_space_basis()
        })
        .collect();
    loop {
        let before: usize = spans.iter().map(Matrix::cols).sum();
        for (ai, arrow) in q.arrows().iter().enumerate() {
            let img = m.action(ai).mul(&spans[arrow.source])?;
            let combined = spans[arrow.target].hstack(&img)?;
            spans[arrow.target] = combined.column_space_basis();
        }
        let after: usize = spans.iter().map(Matrix::cols).sum();
        if after == before {
            break;
        }
    }
    let dims: Vec<usize> = spans.iter().map(Matrix::cols).collect();
    let mut actions = Vec::with_capacity(q.arrows().len());
    for (ai, arrow) in q.arrows().iter().enumerate() {
        let img = m.action(ai).mul(&spans[arrow.source])?;
        let act = spans[arrow.target]
            .solve_matrix(&img)
            .ok_or_else(|| Error::Internal("span is not closed under the action".into()))?;
        actions.push(act);
    }
    let sub = Module::new(
        m.algebra().clone(),
        format!("sub[{}]", m.name()),
        dims,
        actions,
    )?;
    let incl = ModuleMap::new(sub.clone(), m.clone(), spans)?;
    Ok((sub, incl))
}

/// Tries to split off the submodule generated by random vectors, by solving
/// exactly for a retraction onto it. Pieces come with their inclusions.
fn try_spin_split(
    m: &Module,
    rng: &mut ChaCha8Rng,
    n_vectors: usize,
) -> Result<Option<Vec<(Module, ModuleMap)>>> {
    let vectors: Vec<Vec<Vec<Scalar>>> = (0..n_vectors)
        .map(|_| {
            m.dims()
                .iter()
                .map(|&d| {
                    (0..d)
                        .map(|_| crate::scalar::s_int(rng.gen_range(-4..=4)))
                        .collect()
                })
                .collect()
        })
        .collect();
    if vectors
        .iter()
        .all(|v| v.iter().all(|c| c.iter().all(Scalar::is_zero)))
    {
        return Ok(None);
    }
    let (sub, incl) = spin_submodule(m, &vectors)?;
    if sub.is_zero_module() || sub.total_dim() == m.total_dim() {
        return Ok(None);
    }
    // A retraction rho: m -> sub with rho . incl = id exhibits sub as a
    // direct summand with complement ker(rho).
    let homs = hom_basis(m, &sub)?;
    if homs.is_empty() {
        return Ok(None);
    }
    let composites: Result<Vec<ModuleMap>> = homs.iter().map(|h| incl.then(h)).collect();
    let composites = composites?;
    let id_target = crate::resolve::flatten_blocks(&ModuleMap::identity(&sub));
    let rows = id_target.len();
    let mut mat = Matrix::zero(rows, composites.len());
    for (j, c) in composites.iter().enumerate() {
        for (i, x) in crate::resolve::flatten_blocks(c).into_iter().enumerate() {
            *mat.at_mut(i, j) = x;
        }
    }
    let Some(lambda) = mat.solve(&id_target) else {
        return Ok(None);
    };
    let mut rho = ModuleMap::zero(m, &sub)?;
    for (j, h) in homs.iter().enumerate() {
        if !lambda[j].is_zero() {
            rho = rho.add(&h.scale(&lambda[j]))?;
        }
    }
    let (complement, compl_incl) = map_kernel(&rho)?;
    if complement.total_dim() + sub.total_dim() != m.total_dim() {
        return Err(Error::Internal("retraction split has wrong dimensions".into()));
    }
    Ok(Some(vec![(sub, incl), (complement, compl_incl)]))
}

const SPLIT_ATTEMPTS: u32 = 25;

/// Splits a decomposable module into two or more nonzero pieces with their
/// inclusions, or reports failure after the attempt budget.
fn split_once(m: &Module, rng: &mut ChaCha8Rng) -> Result<Vec<(Module, ModuleMap)>> {
    for attempt in 0..SPLIT_ATTEMPTS {
        if let Some(pieces) = try_char_split(m, rng)? {
            return Ok(pieces);
        }
        let n_vectors = 1 + (attempt as usize) / 5;
        if let Some(pieces) = try_spin_split(m, rng, n_vectors)? {
            return Ok(pieces);
        }
    }
    Err(Error::SplitFailure {
        dims: m.dims().to_vec(),
        attempts: SPLIT_ATTEMPTS,
    })
}

/// Decomposes a module into indecomposable summands, each paired with its
/// inclusion back into the input. The blockwise concatenation of the
/// inclusions is an isomorphism from the direct sum of the summands.
///
/// The result is deterministic for a fixed seed, and the multiset of
/// summand dimension vectors is independent of the seed. Summands are
/// sorted by total dimension, then by dimension vector.
pub fn decompose_embedded(m: &Module, seed: u64) -> Result<Vec<(Module, ModuleMap)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut queue = vec![(m.clone(), ModuleMap::identity(m))];
    let mut out: Vec<(Module, ModuleMap)> = Vec::new();
    while let Some((x, into_m)) = queue.pop() {
        if x.is_zero_module() {
            continue;
        }
        if is_indecomposable(&x)? {
            out.push((x, into_m));
            continue;
        }
        for (piece, incl) in split_once(&x, &mut rng)? {
            let composed = incl.then(&into_m)?;
            queue.push((piece, composed));
        }
    }
    out.sort_by(|a, b| {
        (a.0.total_dim(), a.0.dims().to_vec()).cmp(&(b.0.total_dim(), b.0.dims().to_vec()))
    });
    out.into_iter()
        .enumerate()
        .map(|(i, (s, f))| {
            let named = s.with_name(format!("{}#{}", m.name(), i));
            let map = ModuleMap::new(named.clone(), m.clone(), f.blocks().to_vec())?;
            Ok((named, map))
        })
        .collect()
}

/// Decomposes a module into indecomposable summands; see
/// [`decompose_embedded`] for the variant that keeps the inclusions.
pub fn decompose(m: &Module, seed: u64) -> Result<Vec<Module>> {
    Ok(decompose_embedded(m, seed)?
        .into_iter()
        .map(|(s, _)| s)
        .collect())
}

/// Exact isomorphism test for indecomposable modules: when an isomorphism
/// exists the non-isomorphisms form a proper subspace, so a Hom basis must
/// contain an invertible element.
fn indecomposable_iso(a: &Module, b: &Module) -> Result<bool> {
    if a.dims() != b.dims() {
        return Ok(false);
    }
    Ok(hom_basis(a, b)?.iter().any(ModuleMap::is_isomorphism))
}

/// Tests whether two modules over the same algebra are isomorphic, by
/// decomposing both and matching indecomposable summands exactly.
pub fn is_isomorphic(m: &Module, n: &Module, seed: u64) -> Result<bool> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero_module() {
        return Ok(true);
    }
    let ms = decompose(m, seed)?;
    let mut ns = decompose(n, seed.wrapping_add(1))?;
    if ms.len() != ns.len() {
        return Ok(false);
    }
    for a in &ms {
        let mut matched = None;
        for (i, b) in ns.iter().enumerate() {
            if indecomposable_iso(a, b)? {
                matched = Some(i);
                break;
            }
        }
        match matched {
            Some(i) => {
                ns.remove(i);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Reads the entries of the presentation map as algebra elements:
/// `entries[i][j]` lies in the slice of paths from `p0`'s summand vertex
/// `v_j` to `p1`'s summand vertex `u_i`, defined by where the generator of
/// the `i`-th summand goes.
fn extract_entries(pres: &Presentation, alg: &AlgebraTable) -> Result<Vec<Vec<LinComb>>> {
    let us = &pres.p1.summand_vertices;
    let vs = &pres.p0.summand_vertices;
    let mut entries = vec![vec![LinComb::new(); vs.len()]; us.len()];
    for (i, &ui) in us.iter().enumerate() {
        // Column of the generator of summand i inside P1 at vertex ui.
        let mut col = 0usize;
        for &uk in us.iter().take(i) {
            col += projective_slots(alg, uk)?[ui].len();
        }
        let slot = projective_slots(alg, ui)?;
        let pos = slot[ui]
            .binary_search(&alg.e_idx[ui])
            .map_err(|_| Error::Internal("projective misses its own generator".into()))?;
        col += pos;
        let block = pres.d1.block(ui);
        let image: Vec<Scalar> = (0..block.rows()).map(|r| block.at(r, col).clone()).collect();
        // Decode the image against the slot layout of P0 at vertex ui.
        let mut row = 0usize;
        for (j, &vj) in vs.iter().enumerate() {
            let slots_j = projective_slots(alg, vj)?;
            let here = &slots_j[ui];
            let mut lc = LinComb::new();
            for (p, &bidx) in here.iter().enumerate() {
                let c = image[row + p].clone();
                if !c.is_zero() {
                    lc.push((bidx, c));
                }
            }
            entries[i][j] = lc;
            row += here.len();
        }
    }
    Ok(entries)
}

/// Builds the transposed presentation map between standard projectives over
/// the opposite algebra and returns its cokernel. `alg` is the algebra the
/// presentation lives over; `op` must be its opposite.
fn transpose_presentation(
    pres: &Presentation,
    alg: &AlgebraTable,
    op: &Arc<AlgebraTable>,
) -> Result<Module> {
    let us = &pres.p1.summand_vertices;
    let vs = &pres.p0.summand_vertices;
    let entries = extract_entries(pres, alg)?;

    let src_parts: Vec<Module> = vs.iter().map(|&v| std_projective(op, v)).collect::<Result<_>>()?;
    let tgt_parts: Vec<Module> = us.iter().map(|&u| std_projective(op, u)).collect::<Result<_>>()?;
    let src_refs: Vec<&Module> = src_parts.iter().collect();
    let tgt_refs: Vec<&Module> = tgt_parts.iter().collect();
    let src = Module::direct_sum(op, &src_refs)?;
    let tgt = Module::direct_sum(op, &tgt_refs)?;

    let nv = op.n_vertices();
    let mut blocks: Vec<Matrix> = (0..nv)
        .map(|w| Matrix::zero(tgt.dim_at(w), src.dim_at(w)))
        .collect();
    for w in 0..nv {
        let mut col_off = 0usize;
        for (j, &vj) in vs.iter().enumerate() {
            let slots_j = projective_slots(op, vj)?;
            for (c, &p_idx) in slots_j[w].iter().enumerate() {
                let mut row_off = 0usize;
                for (i, &ui) in us.iter().enumerate() {
                    let slots_i = projective_slots(op, ui)?;
                    // Left-compose the basis path with the matrix entry.
                    let prod =
                        op.mult_lincomb(&entries[i][j], &vec![(p_idx, Scalar::one())]);
                    for (k, coeff) in prod {
                        let r = slots_i[w].binary_search(&k).map_err(|_| {
                            Error::Internal("transpose block decode failed".into())
                        })?;
                        *blocks[w].at_mut(row_off + r, col_off + c) = coeff;
                    }
                    row_off += slots_i[w].len();
                }
            }
            col_off += slots_j[w].len();
        }
    }
    let g = ModuleMap::new(src, tgt, blocks)?;
    let (coker, _) = map_cokernel(&g)?;
    Ok(coker)
}

/// The Auslander–Reiten translate: the dual of the transpose of a minimal
/// presentation. Projective modules translate to zero.
pub fn tau(m: &Module) -> Result<Module> {
    let alg = m.algebra().clone();
    let pres = minimal_presentation(m)?;
    let op = Arc::new(alg.opposite());
    let tr = transpose_presentation(&pres, &alg, &op)?;
    let back = Arc::new(op.opposite());
    let d = dualize(&tr, &back)?;
    Ok(d.rebind(&alg)?.with_name(format!("tau({})", m.name())))
}

/// The inverse translate: the transpose of a minimal presentation of the
/// dual. Injective modules translate to zero.
pub fn tau_inverse(m: &Module) -> Result<Module> {
    let alg = m.algebra().clone();
    let op = Arc::new(alg.opposite());
    let dm = dualize(m, &op)?;
    let pres = minimal_presentation(&dm)?;
    let back = Arc::new(op.opposite());
    let tr = transpose_presentation(&pres, &op, &back)?;
    Ok(tr.rebind(&alg)?.with_name(format!("tau_inv({})", m.name())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::module::{simple, std_injective};
    use crate::quiver::{Quiver, Relation, RelationSet};
    use crate::resolve::{is_injective_module, is_projective_module};
    use crate::scalar::s_int;

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
    fn indecomposability_certificates() {
        let alg = line3();
        let s1 = simple(&alg, 0).unwrap();
        let p1 = std_projective(&alg, 0).unwrap();
        assert!(is_indecomposable(&s1).unwrap());
        assert!(is_indecomposable(&p1).unwrap());
        let sum = Module::direct_sum(&alg, &[&s1, &p1]).unwrap();
        assert!(!is_indecomposable(&sum).unwrap());
        let zero = Module::zero(alg.clone()).unwrap();
        assert!(!is_indecomposable(&zero).unwrap());
    }

    #[test]
    fn decompose_distinct_summands() {
        let alg = line3();
        let s3 = simple(&alg, 2).unwrap();
        let p1 = std_projective(&alg, 0).unwrap();
        let sum = Module::direct_sum(&alg, &[&p1, &s3]).unwrap();
        let parts = decompose(&sum, 7).unwrap();
        assert_eq!(parts.len(), 2);
        let mut dims: Vec<Vec<usize>> = parts.iter().map(|p| p.dims().to_vec()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![0, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn decompose_isotypic_square() {
        let alg = line3();
        let p1 = std_projective(&alg, 0).unwrap();
        let sum = Module::direct_sum(&alg, &[&p1, &p1]).unwrap();
        let parts = decompose(&sum, 3).unwrap();
        assert_eq!(parts.len(), 2);
        for p in &parts {
            assert!(is_indecomposable(p).unwrap());
            assert!(indecomposable_iso(p, &p1).unwrap());
        }
    }

    #[test]
    fn decompose_mixed_with_multiplicity() {
        let alg = line3();
        let p1 = std_projective(&alg, 0).unwrap();
        let s2 = simple(&alg, 1).unwrap();
        let sum = Module::direct_sum(&alg, &[&p1, &s2, &p1]).unwrap();
        let parts = decompose(&sum, 11).unwrap();
        assert_eq!(parts.len(), 3);
        let mut dims: Vec<Vec<usize>> = parts.iter().map(|p| p.dims().to_vec()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![0, 1, 0], vec![1, 1, 0], vec![1, 1, 0]]);
    }

    #[test]
    fn decompose_is_seed_stable() {
        let alg = line3();
        let p1 = std_projective(&alg, 0).unwrap();
        let p2 = std_projective(&alg, 1).unwrap();
        let s1 = simple(&alg, 0).unwrap();
        let sum = Module::direct_sum(&alg, &[&p1, &p2, &s1]).unwrap();
        let mut seen: Option<Vec<Vec<usize>>> = None;
        for seed in 0..6 {
            let parts = decompose(&sum, seed).unwrap();
            let mut dims: Vec<Vec<usize>> = parts.iter().map(|p| p.dims().to_vec()).collect();
            dims.sort();
            match &seen {
                None => seen = Some(dims),
                Some(s) => assert_eq!(*s, dims, "seed {seed}"),
            }
        }
    }

    #[test]
    fn decompose_zero_and_indecomposable() {
        let alg = line3();
        let zero = Module::zero(alg.clone()).unwrap();
        assert!(decompose(&zero, 0).unwrap().is_empty());
        let s1 = simple(&alg, 0).unwrap();
        let parts = decompose(&s1, 0).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].dims(), s1.dims());
    }

    #[test]
    fn embedded_decomposition_reassembles_to_an_isomorphism() {
        let alg = line3();
        let p1 = std_projective(&alg, 0).unwrap();
        let s2 = simple(&alg, 1).unwrap();
        let sum = Module::direct_sum(&alg, &[&p1, &s2, &p1]).unwrap();
        let parts = decompose_embedded(&sum, 5).unwrap();
        assert_eq!(parts.len(), 3);
        let summands: Vec<&Module> = parts.iter().map(|(s, _)| s).collect();
        let joined = Module::direct_sum(&alg, &summands).unwrap();
        let blocks: Vec<crate::matrix::Matrix> = (0..sum.dims().len())
            .map(|v| {
                let mut acc = crate::matrix::Matrix::zero(sum.dim_at(v), 0);
                for (_, incl) in &parts {
                    acc = acc.hstack(incl.block(v)).unwrap();
                }
                acc
            })
            .collect();
        let combined = ModuleMap::new(joined, sum.clone(), blocks).unwrap();
        assert!(combined.is_isomorphism());
    }

    #[test]
    fn isomorphism_detects_rebased_copies() {
        let alg = line3();
        let p1 = std_projective(&alg, 0).unwrap();
        // The same string with a scaled action matrix.
        let other = Module::new(
            alg.clone(),
            "scaled",
            vec![1, 1, 0],
            vec![
                Matrix::from_rows(vec![vec![s_int(2)]]).unwrap(),
                Matrix::zero(0, 1),
            ],
        )
        .unwrap();
        assert!(is_isomorphic(&p1, &other, 0).unwrap());
    }

    #[test]
    fn isomorphism_distinguishes_sum_from_string() {
        let alg = line3();
        let p1 = std_projective(&alg, 0).unwrap();
        let s1 = simple(&alg, 0).unwrap();
        let s2 = simple(&alg, 1).unwrap();
        let sum = Module::direct_sum(&alg, &[&s1, &s2]).unwrap();
        // Same dimension vector, different module.
        assert_eq!(sum.dims(), p1.dims());
        assert!(!is_isomorphic(&sum, &p1, 0).unwrap());
        assert!(is_isomorphic(&sum, &sum, 0).unwrap());
    }

    #[test]
    fn translate_walks_down_the_line() {
        let alg = line3();
        let s1 = simple(&alg, 0).unwrap();
        let s2 = simple(&alg, 1).unwrap();
        let s3 = simple(&alg, 2).unwrap();
        let t1 = tau(&s1).unwrap();
        assert_eq!(t1.dims(), s2.dims());
        assert!(is_isomorphic(&t1, &s2, 0).unwrap());
        let t2 = tau(&s2).unwrap();
        assert!(is_isomorphic(&t2, &s3, 0).unwrap());
    }

    #[test]
    fn translate_kills_projectives() {
        let alg = line3();
        for v in 0..3 {
            let p = std_projective(&alg, v).unwrap();
            assert!(tau(&p).unwrap().is_zero_module());
        }
    }

    #[test]
    fn inverse_translate_walks_up_and_kills_injectives() {
        let alg = line3();
        let s1 = simple(&alg, 0).unwrap();
        let s2 = simple(&alg, 1).unwrap();
        let s3 = simple(&alg, 2).unwrap();
        assert!(is_isomorphic(&tau_inverse(&s2).unwrap(), &s1, 0).unwrap());
        assert!(is_isomorphic(&tau_inverse(&s3).unwrap(), &s2, 0).unwrap());
        for v in 0..3 {
            let i = std_injective(&alg, v).unwrap();
            assert!(tau_inverse(&i).unwrap().is_zero_module());
        }
    }

    #[test]
    fn translate_round_trip_on_non_projectives() {
        let alg = line3();
        for v in [0usize, 1] {
            let s = simple(&alg, v).unwrap();
            assert!(!is_projective_module(&s).unwrap());
            let back = tau_inverse(&tau(&s).unwrap()).unwrap();
            assert!(is_isomorphic(&back, &s, 0).unwrap(), "vertex {v}");
        }
        // And the other way around on non-injectives.
        for v in [1usize, 2] {
            let s = simple(&alg, v).unwrap();
            assert!(!is_injective_module(&s).unwrap());
            let back = tau(&tau_inverse(&s).unwrap()).unwrap();
            assert!(is_isomorphic(&back, &s, 0).unwrap(), "vertex {v}");
        }
    }

    #[test]
    fn endo_radical_of_a_string_sum() {
        let alg = line3();
        let p1 = std_projective(&alg, 0).unwrap();
        let s1 = simple(&alg, 0).unwrap();
        // End([1,2] + S(1)): id on each part and the quotient map between
        // them; the quotient map is the whole radical.
        let sum = Module::direct_sum(&alg, &[&p1, &s1]).unwrap();
        assert_eq!(crate::module::hom_dim(&sum, &sum).unwrap(), 3);
        assert_eq!(endo_radical_dim(&sum).unwrap(), 1);
    }
}
