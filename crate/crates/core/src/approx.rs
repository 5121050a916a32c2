//! Approximations relative to an additive subcategory, higher kernels and
//! cokernels, exactness verification, and resolutions by members.
//!
//! A [`Subcategory`] is the additive closure of a finite list of modules. A
//! right approximation of `x` is a map `C -> x` with `C` in the closure
//! through which every map from a member factors; left approximations are
//! dual. Both are built from the universal candidate (one copy of a member
//! per Hom-basis element) and then minimized greedily, dropping summands
//! whose removal preserves the factoring property — every intermediate
//! candidate is checked exactly.
//!
//! Higher cokernels iterate "cokernel, then left approximation" a fixed
//! number of times, producing a chain whose exactness under Hom functors is
//! checked by [`verify_d_exact`]; higher kernels are the mirror image.

use crate::decompose::{decompose, is_isomorphic};
use crate::matrix::Matrix;
use crate::module::{hom_basis, Module, ModuleMap};
use crate::resolve::{hom_post_matrix, hom_pre_matrix, map_cokernel, map_kernel};
use crate::{Error, Result};

/// The additive closure of a finite list of modules over one algebra.
#[derive(Clone, Debug)]
pub struct Subcategory {
    members: Vec<Module>,
}

impl Subcategory {
    pub fn new(members: Vec<Module>) -> Result<Subcategory> {
        for pair in members.windows(2) {
            if !pair[0].same_algebra(&pair[1]) {
                return Err(Error::AlgebraMismatch);
            }
        }
        if members.iter().any(Module::is_zero_module) {
            return Err(Error::SubcategoryInvalid(
                "members must be nonzero modules".into(),
            ));
        }
        Ok(Subcategory { members })
    }

    pub fn members(&self) -> &[Module] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The direct sum of all members (the additive generator).
    pub fn generator(&self) -> Result<Module> {
        let first = self
            .members
            .first()
            .ok_or_else(|| Error::SubcategoryInvalid("no members".into()))?;
        let refs: Vec<&Module> = self.members.iter().collect();
        Module::direct_sum(first.algebra(), &refs)
    }
}

/// Tests membership in the additive closure: every indecomposable summand
/// of `x` must be isomorphic to a summand of some member.
pub fn in_add(sub: &Subcategory, x: &Module, seed: u64) -> Result<bool> {
    if x.is_zero_module() {
        return Ok(true);
    }
    let mut pool: Vec<Module> = Vec::new();
    for m in &sub.members {
        pool.extend(decompose(m, seed)?);
    }
    for part in decompose(x, seed)? {
        let mut found = false;
        for cand in &pool {
            if is_isomorphic(&part, cand, seed)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An approximation map together with the number of copies of each member
/// used in its subcategory end.
#[derive(Clone, Debug)]
pub struct Approximation {
    /// `C -> x` for right approximations, `x -> C` for left ones.
    pub map: ModuleMap,
    /// Copies of each member (by member index) summed into `C`.
    pub multiplicities: Vec<usize>,
}

/// Checks the right-approximation property of `f: C -> x`: composition with
/// `f` must carry `Hom(M, C)` onto `Hom(M, x)` for every member `M`.
pub fn is_right_approximation(sub: &Subcategory, f: &ModuleMap) -> Result<bool> {
    for m in &sub.members {
        let dom = hom_basis(m, f.source())?;
        let cod = hom_basis(m, f.target())?;
        let mat = hom_post_matrix(f, &dom, &cod)?;
        if mat.rank() != cod.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the left-approximation property of `f: x -> C`: precomposition
/// with `f` must carry `Hom(C, M)` onto `Hom(x, M)` for every member `M`.
pub fn is_left_approximation(sub: &Subcategory, f: &ModuleMap) -> Result<bool> {
    for m in &sub.members {
        let dom = hom_basis(f.target(), m)?;
        let cod = hom_basis(f.source(), m)?;
        let mat = hom_pre_matrix(f, &dom, &cod)?;
        if mat.rank() != cod.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Assembles `⊕ sources -> x` from pieces `(member index, map to x)`.
fn assemble_into(x: &Module, pieces: &[(usize, ModuleMap)]) -> Result<ModuleMap> {
    let alg = x.algebra();
    let sources: Vec<&Module> = pieces.iter().map(|(_, f)| f.source()).collect();
    let sum = Module::direct_sum(alg, &sources)?;
    let nv = x.dims().len();
    let mut blocks = Vec::with_capacity(nv);
    for v in 0..nv {
        let mut b = Matrix::zero(x.dim_at(v), 0);
        for (_, f) in pieces {
            b = b.hstack(f.block(v))?;
        }
        blocks.push(b);
    }
    ModuleMap::new(sum, x.clone(), blocks)
}

/// Assembles `x -> ⊕ targets` from pieces `(member index, map from x)`.
fn assemble_from(x: &Module, pieces: &[(usize, ModuleMap)]) -> Result<ModuleMap> {
    let alg = x.algebra();
    let targets: Vec<&Module> = pieces.iter().map(|(_, f)| f.target()).collect();
    let sum = Module::direct_sum(alg, &targets)?;
    let nv = x.dims().len();
    let mut blocks = Vec::with_capacity(nv);
    for v in 0..nv {
        let mut b = Matrix::zero(0, x.dim_at(v));
        for (_, f) in pieces {
            b = b.vstack(f.block(v))?;
        }
        blocks.push(b);
    }
    ModuleMap::new(x.clone(), sum, blocks)
}

fn multiplicity_profile(n_members: usize, pieces: &[(usize, ModuleMap)]) -> Vec<usize> {
    let mut mults = vec![0usize; n_members];
    for (i, _) in pieces {
        mults[*i] += 1;
    }
    mults
}

/// A right approximation `C -> x`, minimized greedily from the universal
/// candidate with one summand per Hom-basis element.
pub fn right_approximation(sub: &Subcategory, x: &Module) -> Result<Approximation> {
    let mut pieces: Vec<(usize, ModuleMap)> = Vec::new();
    for (i, m) in sub.members.iter().enumerate() {
        for f in hom_basis(m, x)? {
            pieces.push((i, f));
        }
    }
    // Greedy minimization: drop any summand whose removal keeps the
    // factoring property, scanning in a fixed order.
    let mut idx = 0;
    while idx < pieces.len() {
        let mut trial = pieces.clone();
        trial.remove(idx);
        let map = assemble_into(x, &trial)?;
        if is_right_approximation(sub, &map)? {
            pieces = trial;
        } else {
            idx += 1;
        }
    }
    let map = assemble_into(x, &pieces)?;
    if !is_right_approximation(sub, &map)? {
        return Err(Error::Internal("candidate is not a right approximation".into()));
    }
    Ok(Approximation {
        multiplicities: multiplicity_profile(sub.members.len(), &pieces),
        map,
    })
}

/// A left approximation `x -> C`, minimized greedily from the universal
/// candidate with one summand per Hom-basis element.
pub fn left_approximation(sub: &Subcategory, x: &Module) -> Result<Approximation> {
    let mut pieces: Vec<(usize, ModuleMap)> = Vec::new();
    for (i, m) in sub.members.iter().enumerate() {
        for f in hom_basis(x, m)? {
            pieces.push((i, f));
        }
    }
    let mut idx = 0;
    while idx < pieces.len() {
        let mut trial = pieces.clone();
        trial.remove(idx);
        let map = assemble_from(x, &trial)?;
        if is_left_approximation(sub, &map)? {
            pieces = trial;
        } else {
            idx += 1;
        }
    }
    let map = assemble_from(x, &pieces)?;
    if !is_left_approximation(sub, &map)? {
        return Err(Error::Internal("candidate is not a left approximation".into()));
    }
    Ok(Approximation {
        multiplicities: multiplicity_profile(sub.members.len(), &pieces),
        map,
    })
}

/// A chain of composable maps whose consecutive composites vanish.
#[derive(Clone, Debug)]
pub struct DSequence {
    pub objects: Vec<Module>,
    /// `maps[i]` goes from `objects[i]` to `objects[i+1]`.
    pub maps: Vec<ModuleMap>,
}

impl DSequence {
    pub fn new(objects: Vec<Module>, maps: Vec<ModuleMap>) -> Result<DSequence> {
        if objects.len() != maps.len() + 1 {
            return Err(Error::MapInvalid(
                "chain needs one more object than maps".into(),
            ));
        }
        for (i, f) in maps.iter().enumerate() {
            if f.source() != &objects[i] || f.target() != &objects[i + 1] {
                return Err(Error::MapInvalid(format!(
                    "map {i} does not match the surrounding objects"
                )));
            }
        }
        for i in 0..maps.len().saturating_sub(1) {
            if !maps[i].then(&maps[i + 1])?.is_zero() {
                return Err(Error::MapInvalid(format!(
                    "composite of maps {i} and {} is nonzero",
                    i + 1
                )));
            }
        }
        Ok(DSequence { objects, maps })
    }

    pub fn dims_profile(&self) -> Vec<usize> {
        self.objects.iter().map(Module::total_dim).collect()
    }
}

/// Extends a map `f: X0 -> X1` between members of the closure to the chain
/// `X0 -> X1 -> ... -> X^{d+1}` by iterating "cokernel, then left
/// approximation"; the final object is the genuine cokernel of the last
/// approximation step and must land back in the closure.
pub fn d_cokernel(f: &ModuleMap, sub: &Subcategory, d: usize, seed: u64) -> Result<DSequence> {
    if d == 0 {
        return Err(Error::SubcategoryInvalid("d must be at least 1".into()));
    }
    let mut objects = vec![f.source().clone(), f.target().clone()];
    let mut maps = vec![f.clone()];
    // Invariant: proj is the projection from the last listed object onto
    // the cokernel of the last listed map.
    let (mut coker, mut proj) = map_cokernel(f)?;
    for stage in 1..d {
        let approx = left_approximation(sub, &coker)?;
        let alpha = proj.then(&approx.map)?;
        objects.push(approx.map.target().clone());
        maps.push(alpha.clone());
        let (c, p) = map_cokernel(&alpha)?;
        coker = c;
        proj = p;
        let _ = stage;
    }
    // Final stage: the honest cokernel must lie in the closure.
    if !in_add(sub, &coker, seed)? {
        return Err(Error::NotInAdd {
            stage: d,
            detail: format!(
                "final cokernel has dimension vector {:?}",
                coker.dims().to_vec()
            ),
        });
    }
    objects.push(coker.clone());
    maps.push(proj);
    DSequence::new(objects, maps)
}

/// Mirror of [`d_cokernel`]: extends `f: Y1 -> Y0` to the chain
/// `Y^{d+1} -> Y^d -> ... -> Y1 -> Y0` by iterating "kernel, then right
/// approximation"; the final kernel must land back in the closure.
pub fn d_kernel(f: &ModuleMap, sub: &Subcategory, d: usize, seed: u64) -> Result<DSequence> {
    if d == 0 {
        return Err(Error::SubcategoryInvalid("d must be at least 1".into()));
    }
    // Build from the right end towards the left.
    let mut rev_objects = vec![f.target().clone(), f.source().clone()];
    let mut rev_maps = vec![f.clone()];
    let (mut kernel, mut incl) = map_kernel(f)?;
    for _stage in 1..d {
        let approx = right_approximation(sub, &kernel)?;
        let beta = approx.map.then(&incl)?;
        rev_objects.push(approx.map.source().clone());
        rev_maps.push(beta.clone());
        let (k, i) = map_kernel(&beta)?;
        kernel = k;
        incl = i;
    }
    if !in_add(sub, &kernel, seed)? {
        return Err(Error::NotInAdd {
            stage: d,
            detail: format!(
                "final kernel has dimension vector {:?}",
                kernel.dims().to_vec()
            ),
        });
    }
    rev_objects.push(kernel.clone());
    rev_maps.push(incl);
    rev_objects.reverse();
    rev_maps.reverse();
    DSequence::new(rev_objects, rev_maps)
}

/// Which Hom direction failed, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactSide {
    /// Maps INTO members: the chain `0 -> Hom(last, M) -> ... -> Hom(first, M)`.
    IntoMembers,
    /// Maps FROM members: the chain `0 -> Hom(M, first) -> ... -> Hom(M, last)`.
    FromMembers,
}

/// A witness for a failed exactness check: the member used as test object,
/// the position in the Hom chain (0 = the end required to be injective),
/// and the direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessFailure {
    pub side: ExactSide,
    pub member: String,
    pub position: usize,
}

/// Verifies one Hom direction of the chain against every member: applying
/// the contravariant Hom (`IntoMembers`) must give sequences exact
/// everywhere except at `Hom(objects[0], m)`, the covariant Hom
/// (`FromMembers`) exact everywhere except at `Hom(m, objects[last])`.
/// Returns the first failure, or `None` when the side passes.
///
/// The `IntoMembers` side is exactly the defining property of the higher
/// cokernel of the chain's first map, and `FromMembers` of the higher
/// kernel of its last; a chain passing both is called d-exact.
pub fn verify_half_exact(
    seq: &DSequence,
    sub: &Subcategory,
    side: ExactSide,
) -> Result<Option<ExactnessFailure>> {
    let n = seq.maps.len();
    for m in &sub.members {
        match side {
            ExactSide::IntoMembers => {
                // Contravariant: Hom(objects[k], m), maps go down the indices.
                let bases: Result<Vec<Vec<ModuleMap>>> =
                    seq.objects.iter().map(|x| hom_basis(x, m)).collect();
                let bases = bases?;
                let mats: Result<Vec<Matrix>> = (0..n)
                    .map(|k| hom_pre_matrix(&seq.maps[k], &bases[k + 1], &bases[k]))
                    .collect();
                let mats = mats?;
                // Injectivity at the top of the chain.
                if mats[n - 1].rank() != bases[n].len() {
                    return Ok(Some(ExactnessFailure {
                        side: ExactSide::IntoMembers,
                        member: m.name().to_string(),
                        position: 0,
                    }));
                }
                // Interior exactness at Hom(objects[k], m) for k = n-1 down to 1.
                for k in (1..n).rev() {
                    if mats[k].rank() + mats[k - 1].rank() != bases[k].len() {
                        return Ok(Some(ExactnessFailure {
                            side: ExactSide::IntoMembers,
                            member: m.name().to_string(),
                            position: n - k,
                        }));
                    }
                }
            }
            ExactSide::FromMembers => {
                // Covariant: Hom(m, objects[k]), maps go up the indices.
                let bases: Result<Vec<Vec<ModuleMap>>> =
                    seq.objects.iter().map(|x| hom_basis(m, x)).collect();
                let bases = bases?;
                let mats: Result<Vec<Matrix>> = (0..n)
                    .map(|k| hom_post_matrix(&seq.maps[k], &bases[k], &bases[k + 1]))
                    .collect();
                let mats = mats?;
                if mats[0].rank() != bases[0].len() {
                    return Ok(Some(ExactnessFailure {
                        side: ExactSide::FromMembers,
                        member: m.name().to_string(),
                        position: 0,
                    }));
                }
                for k in 1..n {
                    if mats[k - 1].rank() + mats[k].rank() != bases[k].len() {
                        return Ok(Some(ExactnessFailure {
                            side: ExactSide::FromMembers,
                            member: m.name().to_string(),
                            position: k,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Verifies that applying Hom to the chain, against every member in both
/// directions, yields sequences that are exact everywhere except at the
/// final listed term. Returns the first failure, or `None` when the chain
/// passes.
pub fn verify_d_exact(seq: &DSequence, sub: &Subcategory) -> Result<Option<ExactnessFailure>> {
    if let Some(failure) = verify_half_exact(seq, sub, ExactSide::IntoMembers)? {
        return Ok(Some(failure));
    }
    verify_half_exact(seq, sub, ExactSide::FromMembers)
}

/// A finite resolution of a module by members of the closure:
/// `0 -> C_m -> ... -> C_0 -> x -> 0`, exact by construction.
#[derive(Clone, Debug)]
pub struct AddResolution {
    pub target: Module,
    /// `C_0, C_1, ..., C_m`.
    pub objects: Vec<Module>,
    /// `maps[k]: C_{k+1} -> C_k`.
    pub maps: Vec<ModuleMap>,
    /// The surjection `C_0 ->> x`.
    pub augment: ModuleMap,
}

/// Resolves a module by iterated right approximations. Fails honestly when
/// an approximation is not surjective or the kernels do not reach zero
/// within `max_steps`.
pub fn m_resolution(x: &Module, sub: &Subcategory, max_steps: usize) -> Result<AddResolution> {
    if x.is_zero_module() {
        let zero = Module::zero(x.algebra().clone())?;
        let augment = ModuleMap::zero(&zero, x)?;
        return Ok(AddResolution {
            target: x.clone(),
            objects: vec![],
            maps: vec![],
            augment,
        });
    }
    let first = right_approximation(sub, x)?;
    if !first.map.is_surjective() {
        return Err(Error::ResolutionNotClosed {
            steps: 0,
            dims: x.dims().to_vec(),
        });
    }
    let mut objects = vec![first.map.source().clone()];
    let mut maps: Vec<ModuleMap> = Vec::new();
    let (mut kernel, mut incl) = map_kernel(&first.map)?;
    let augment = first.map;
    let mut steps = 1usize;
    while !kernel.is_zero_module() {
        if steps > max_steps {
            return Err(Error::ResolutionNotClosed {
                steps,
                dims: kernel.dims().to_vec(),
            });
        }
        let approx = right_approximation(sub, &kernel)?;
        if !approx.map.is_surjective() {
            return Err(Error::ResolutionNotClosed {
                steps,
                dims: kernel.dims().to_vec(),
            });
        }
        objects.push(approx.map.source().clone());
        maps.push(approx.map.then(&incl)?);
        let (k, i) = map_kernel(&approx.map)?;
        kernel = k;
        incl = i;
        steps += 1;
    }
    Ok(AddResolution {
        target: x.clone(),
        objects,
        maps,
        augment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, AlgebraTable};
    use crate::module::{simple, std_projective};
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

    /// The projective-injective atlas: both strings plus the two corner
    /// simples; the only indecomposable left out is the middle simple.
    fn corner_sub(alg: &Arc<AlgebraTable>) -> Subcategory {
        Subcategory::new(vec![
            std_projective(alg, 0).unwrap(), // [1,2]
            std_projective(alg, 1).unwrap(), // [2,3]
            simple(alg, 0).unwrap(),         // S(1)
            simple(alg, 2).unwrap(),         // S(3)
        ])
        .unwrap()
    }

    #[test]
    fn membership_in_the_closure() {
        let alg = line3();
        let sub = corner_sub(&alg);
        let p1 = std_projective(&alg, 0).unwrap();
        let s2 = simple(&alg, 1).unwrap();
        let both = Module::direct_sum(&alg, &[&p1, &p1]).unwrap();
        assert!(in_add(&sub, &p1, 0).unwrap());
        assert!(in_add(&sub, &both, 0).unwrap());
        assert!(!in_add(&sub, &s2, 0).unwrap());
        let zero = Module::zero(alg.clone()).unwrap();
        assert!(in_add(&sub, &zero, 0).unwrap());
    }

    #[test]
    fn right_approximation_of_the_middle_simple() {
        let alg = line3();
        let sub = corner_sub(&alg);
        let s2 = simple(&alg, 1).unwrap();
        let approx = right_approximation(&sub, &s2).unwrap();
        // Only the string over {2,3} maps onto S(2).
        assert_eq!(approx.multiplicities, vec![0, 1, 0, 0]);
        assert!(approx.map.is_surjective());
        let (k, _) = map_kernel(&approx.map).unwrap();
        assert_eq!(k.dims(), &[0, 0, 1]);
    }

    #[test]
    fn left_approximation_of_the_middle_simple() {
        let alg = line3();
        let sub = corner_sub(&alg);
        let s2 = simple(&alg, 1).unwrap();
        let approx = left_approximation(&sub, &s2).unwrap();
        // Only the string over {1,2} receives a map from S(2).
        assert_eq!(approx.multiplicities, vec![1, 0, 0, 0]);
        assert!(approx.map.is_injective());
        let (c, _) = map_cokernel(&approx.map).unwrap();
        assert_eq!(c.dims(), &[1, 0, 0]);
    }

    #[test]
    fn approximation_of_a_member_is_an_isomorphism() {
        let alg = line3();
        let sub = corner_sub(&alg);
        let p1 = std_projective(&alg, 0).unwrap();
        let approx = right_approximation(&sub, &p1).unwrap();
        assert!(approx.map.is_isomorphism());
        let total: usize = approx.multiplicities.iter().sum();
        assert_eq!(total, 1);
    }

    #[test]
    fn two_cokernel_of_the_socle_inclusion() {
        let alg = line3();
        let sub = corner_sub(&alg);
        let s3 = simple(&alg, 2).unwrap();
        let p2 = std_projective(&alg, 1).unwrap(); // [2,3]
        let incl = hom_basis(&s3, &p2).unwrap().remove(0);
        let seq = d_cokernel(&incl, &sub, 2, 0).unwrap();
        let dims: Vec<Vec<usize>> = seq.objects.iter().map(|o| o.dims().to_vec()).collect();
        assert_eq!(
            dims,
            vec![
                vec![0, 0, 1], // S(3)
                vec![0, 1, 1], // [2,3]
                vec![1, 1, 0], // [1,2]
                vec![1, 0, 0], // S(1)
            ]
        );
        assert!(verify_d_exact(&seq, &sub).unwrap().is_none());
    }

    #[test]
    fn two_kernel_of_the_top_quotient() {
        let alg = line3();
        let sub = corner_sub(&alg);
        let p1 = std_projective(&alg, 0).unwrap(); // [1,2]
        let s1 = simple(&alg, 0).unwrap();
        let quot = hom_basis(&p1, &s1).unwrap().remove(0);
        let seq = d_kernel(&quot, &sub, 2, 0).unwrap();
        let dims: Vec<Vec<usize>> = seq.objects.iter().map(|o| o.dims().to_vec()).collect();
        assert_eq!(
            dims,
            vec![
                vec![0, 0, 1],
                vec![0, 1, 1],
                vec![1, 1, 0],
                vec![1, 0, 0],
            ]
        );
        assert!(verify_d_exact(&seq, &sub).unwrap().is_none());
    }

    #[test]
    fn chain_dimensions_alternate_to_zero() {
        let alg = line3();
        let sub = corner_sub(&alg);
        let s3 = simple(&alg, 2).unwrap();
        let p2 = std_projective(&alg, 1).unwrap();
        let incl = hom_basis(&s3, &p2).unwrap().remove(0);
        let seq = d_cokernel(&incl, &sub, 2, 0).unwrap();
        let mut alternating: i64 = 0;
        for (k, obj) in seq.objects.iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            alternating += sign * obj.total_dim() as i64;
        }
        assert_eq!(alternating, 0);
    }

    #[test]
    fn identity_map_extends_with_a_zero_tail() {
        let alg = line3();
        let sub = corner_sub(&alg);
        let p1 = std_projective(&alg, 0).unwrap();
        let id = ModuleMap::identity(&p1);
        let seq = d_cokernel(&id, &sub, 2, 0).unwrap();
        assert_eq!(seq.objects.len(), 4);
        assert!(seq.objects[2].is_zero_module());
        assert!(seq.objects[3].is_zero_module());
        assert!(verify_d_exact(&seq, &sub).unwrap().is_none());
    }

    #[test]
    fn exactness_failure_is_witnessed() {
        let alg = line3();
        let sub = corner_sub(&alg);
        let p1 = std_projective(&alg, 0).unwrap();
        let s1 = simple(&alg, 0).unwrap();
        let quot = hom_basis(&p1, &s1).unwrap().remove(0);
        // Chain [1,2] -> S(1) -> 0 -> 0 pretends the quotient has no kernel.
        let zero = Module::zero(alg.clone()).unwrap();
        let seq = DSequence::new(
            vec![p1.clone(), s1.clone(), zero.clone(), zero.clone()],
            vec![
                quot,
                ModuleMap::zero(&s1, &zero).unwrap(),
                ModuleMap::zero(&zero, &zero).unwrap(),
            ],
        )
        .unwrap();
        let failure = verify_d_exact(&seq, &sub).unwrap();
        assert!(failure.is_some());
    }

    #[test]
    fn resolution_of_the_middle_simple() {
        let alg = line3();
        let sub = corner_sub(&alg);
        let s2 = simple(&alg, 1).unwrap();
        let res = m_resolution(&s2, &sub, 8).unwrap();
        let dims: Vec<Vec<usize>> = res.objects.iter().map(|o| o.dims().to_vec()).collect();
        assert_eq!(dims, vec![vec![0, 1, 1], vec![0, 0, 1]]);
        assert!(res.augment.is_surjective());
        // The single chain map is the kernel inclusion.
        assert_eq!(res.maps.len(), 1);
        assert!(res.maps[0].is_injective());
        assert!(res.maps[0].then(&res.augment).unwrap().is_zero());
    }

    #[test]
    fn resolution_of_a_member_is_immediate() {
        let alg = line3();
        let sub = corner_sub(&alg);
        let p1 = std_projective(&alg, 0).unwrap();
        let res = m_resolution(&p1, &sub, 8).unwrap();
        assert_eq!(res.objects.len(), 1);
        assert!(res.augment.is_isomorphism());
    }

    #[test]
    fn resolution_fails_without_enough_members() {
        let alg = line3();
        let sub = Subcategory::new(vec![simple(&alg, 0).unwrap()]).unwrap();
        let s2 = simple(&alg, 1).unwrap();
        let err = m_resolution(&s2, &sub, 4).unwrap_err();
        assert!(matches!(err, Error::ResolutionNotClosed { steps: 0, .. }));
    }

    #[test]
    fn zero_module_resolves_trivially() {
        let alg = line3();
        let sub = corner_sub(&alg);
        let zero = Module::zero(alg.clone()).unwrap();
        let res = m_resolution(&zero, &sub, 4).unwrap();
        assert!(res.objects.is_empty());
    }
}
