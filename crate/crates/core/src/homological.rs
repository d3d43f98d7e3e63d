//! Projective covers, Ext¹ (absolute and over a quotient algebra),
//! extension middle terms and injective envelopes.

use alloc::vec::Vec;

use crate::algebra::{self, Algebra, Ideal, ProjectiveModule};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{Complement, Matrix};
use crate::rep::{self, Morphism, Representation};

/// A projective cover `p: P₀ → M` with its syzygy `Ω = ker p`.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub module: Representation,
    /// Top generators as `(vertex, vector of M at that vertex)`.
    pub generators: Vec<(usize, Vec<Scalar>)>,
    pub projective: Representation,
    pub cover: Morphism,
    pub syzygy: Representation,
    pub inclusion: Morphism,
}

impl Presentation {
    /// Dimension vector of the top `M / rad M`.
    pub fn top_dims(&self) -> Vec<usize> {
        let mut dims = alloc::vec![0; self.module.dims().len()];
        for (v, _) in &self.generators {
            dims[*v] += 1;
        }
        dims
    }
}

/// `rad M`, vertexwise: the sum of the images of the arrows ending there.
fn radical_spans(alg: &Algebra, m: &Representation) -> Vec<Matrix> {
    let field = alg.field();
    (0..alg.vertex_count())
        .map(|v| {
            let mut span = Matrix::zeros(field, m.dims()[v], 0);
            for (ai, a) in alg.quiver().arrows().iter().enumerate() {
                if a.target == v {
                    span = Matrix::hstack(field, m.dims()[v], &[&span, &m.maps()[ai]]);
                }
            }
            span
        })
        .collect()
}

/// Top generators chosen among standard basis vectors, vertex by vertex.
pub fn top_generators(alg: &Algebra, m: &Representation) -> Vec<(usize, Vec<Scalar>)> {
    let field = alg.field();
    let mut out = Vec::new();
    for (v, span) in radical_spans(alg, m).iter().enumerate() {
        let complement = Complement::new(span);
        for &k in &complement.positions {
            let mut e = alloc::vec![field.zero(); m.dims()[v]];
            e[k] = field.one();
            out.push((v, e));
        }
    }
    out
}

/// The projective cover by the indecomposable projectives of `alg`.
pub fn projective_cover(alg: &Algebra, m: &Representation) -> Result<Presentation> {
    let projectives: Vec<Option<ProjectiveModule>> = (0..alg.vertex_count())
        .map(|v| Some(alg.projective(v)))
        .collect();
    cover_with(alg, &projectives, m)
}

/// The projective cover by the given projectives (those of a quotient
/// algebra, typically); `None` marks a vertex where no projective exists.
pub fn cover_with(
    alg: &Algebra,
    projectives: &[Option<ProjectiveModule>],
    m: &Representation,
) -> Result<Presentation> {
    m.check_against(alg)?;
    let generators = top_generators(alg, m);
    let mut maps = Vec::with_capacity(generators.len());
    for (v, e) in &generators {
        let p = projectives[*v]
            .as_ref()
            .ok_or_else(|| Error::input("module is not annihilated by the ideal"))?;
        maps.push(p.map_to(alg, m, e));
    }
    let cover = rep::sum_of_maps(alg, m, &maps);
    if !cover.is_epi() {
        return Err(Error::inconsistency(
            "top generators do not generate the module",
        ));
    }
    let projective = cover.source().clone();
    let (syzygy, inclusion) = rep::kernel(alg, &cover)?;
    Ok(Presentation {
        module: m.clone(),
        generators,
        projective,
        cover,
        syzygy,
        inclusion,
    })
}

/// `Ext¹(M, N) = coker(Hom(P₀, N) → Hom(Ω, N))` with representatives.
#[derive(Debug, Clone)]
pub struct Ext1Space {
    presentation: Presentation,
    target: Representation,
    hom_syzygy: Vec<Morphism>,
    complement: Complement,
    representatives: Vec<Morphism>,
}

impl Ext1Space {
    fn build(alg: &Algebra, presentation: Presentation, n: &Representation) -> Result<Ext1Space> {
        let field = alg.field();
        let hom_syzygy = rep::hom_basis(alg, &presentation.syzygy, n)?;
        let restricted = rep::hom_basis(alg, &presentation.projective, n)?;
        let mut image = Matrix::zeros(field, hom_syzygy.len(), restricted.len());
        for (c, h) in restricted.iter().enumerate() {
            let r = h.after(&presentation.inclusion);
            let coords = rep::hom_coordinates(&r, &hom_syzygy)
                .ok_or_else(|| Error::inconsistency("restriction left the Hom space"))?;
            for (row, x) in coords.into_iter().enumerate() {
                image.set(row, c, x);
            }
        }
        let complement = Complement::new(&image);
        let representatives = complement
            .positions
            .iter()
            .map(|&k| hom_syzygy[k].clone())
            .collect();
        Ok(Ext1Space {
            presentation,
            target: n.clone(),
            hom_syzygy,
            complement,
            representatives,
        })
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_zero(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn source(&self) -> &Representation {
        &self.presentation.module
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    /// Morphisms `Ω → N` whose classes form a basis.
    pub fn representatives(&self) -> &[Morphism] {
        &self.representatives
    }

    /// The cocycle `Σ c_k e_k` for a coefficient vector.
    pub fn element(&self, coeffs: &[Scalar]) -> Morphism {
        Morphism::combination(
            &self.presentation.syzygy,
            &self.target,
            coeffs,
            &self.representatives,
        )
    }

    /// Coordinates of the class of a cocycle `Ω → N`.
    pub fn class_of(&self, e: &Morphism) -> Result<Vec<Scalar>> {
        let coords = rep::hom_coordinates(e, &self.hom_syzygy)
            .ok_or_else(|| Error::input("morphism is not a cocycle on this syzygy"))?;
        Ok(self.complement.project(&coords))
    }

    /// `0 → N → E → M → 0` for the class with coordinates `coeffs`,
    /// obtained as the pushout of `Ω → P₀` along the cocycle.
    pub fn middle_term(&self, alg: &Algebra, coeffs: &[Scalar]) -> Result<Extension> {
        if coeffs.len() != self.dim() {
            return Err(Error::shape(
                "coefficient vector does not match the Ext space",
            ));
        }
        let e = self.element(coeffs);
        let pres = &self.presentation;
        let minus_e = e.scale(&-&alg.field().one());
        let diff = rep::product_of_maps(alg, &pres.syzygy, &[pres.inclusion.clone(), minus_e]);
        let (middle, proj) = rep::cokernel(alg, &diff)?;
        let (_, injections, _) =
            rep::direct_sum_with_maps(alg, &[pres.projective.clone(), self.target.clone()]);
        let inclusion = proj.after(&injections[1]);
        let onto = rep::sum_of_maps(
            alg,
            &pres.module,
            &[
                pres.cover.clone(),
                Morphism::zero(&self.target, &pres.module),
            ],
        );
        let projection = onto
            .factor_through_epi(&proj)
            .ok_or_else(|| Error::inconsistency("cover does not factor through the pushout"))?;
        let ext = Extension {
            middle,
            inclusion,
            projection,
        };
        ext.verify(alg)?;
        Ok(ext)
    }
}

/// A short exact sequence `0 → N → E → M → 0`.
#[derive(Debug, Clone)]
pub struct Extension {
    pub middle: Representation,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

impl Extension {
    /// Checks exactness at all three places.
    pub fn verify(&self, alg: &Algebra) -> Result<()> {
        let ok = self.inclusion.is_mono()
            && self.projection.is_epi()
            && self.projection.after(&self.inclusion).is_zero()
            && self.inclusion.intertwines_on(alg)
            && self.projection.intertwines_on(alg)
            && self
                .middle
                .dims()
                .iter()
                .zip(self.inclusion.source().dims())
                .zip(self.projection.target().dims())
                .all(|((e, n), m)| *e == n + m);
        if ok {
            Ok(())
        } else {
            Err(Error::inconsistency(
                "constructed sequence is not short exact",
            ))
        }
    }
}

pub fn ext1(alg: &Algebra, m: &Representation, n: &Representation) -> Result<Ext1Space> {
    n.check_against(alg)?;
    Ext1Space::build(alg, projective_cover(alg, m)?, n)
}

pub fn ext1_dim(alg: &Algebra, m: &Representation, n: &Representation) -> Result<usize> {
    Ok(ext1(alg, m, n)?.dim())
}

/// Ext¹ over `A/I`, for modules annihilated by `I`.
pub fn ext1_relative(
    alg: &Algebra,
    m: &Representation,
    n: &Representation,
    ideal: &Ideal,
) -> Result<Ext1Space> {
    let projectives = alg.quotient_algebra_data(ideal)?;
    ext1_relative_with(alg, &projectives, ideal, m, n)
}

/// As [`ext1_relative`], reusing precomputed quotient projectives.
pub fn ext1_relative_with(
    alg: &Algebra,
    projectives: &[Option<ProjectiveModule>],
    ideal: &Ideal,
    m: &Representation,
    n: &Representation,
) -> Result<Ext1Space> {
    n.check_against(alg)?;
    if !alg.kills(ideal, m) || !alg.kills(ideal, n) {
        return Err(Error::input(
            "relative Ext needs modules annihilated by the ideal",
        ));
    }
    Ext1Space::build(alg, cover_with(alg, projectives, m)?, n)
}

pub fn is_projective(alg: &Algebra, m: &Representation) -> Result<bool> {
    Ok(projective_cover(alg, m)?.syzygy.is_zero())
}

/// Injective means the dual is projective over the opposite algebra.
pub fn is_injective(op: &Algebra, m: &Representation) -> Result<bool> {
    is_projective(op, &algebra::dual(m))
}

/// The injective envelope `M → I(M) = D P(D M)`.
pub fn injective_envelope(op: &Algebra, m: &Representation) -> Result<Morphism> {
    let pres = projective_cover(op, &algebra::dual(m))?;
    Ok(algebra::dual_morphism(&pres.cover))
}

/// `id M ≤ 1` iff the cokernel of the injective envelope is injective.
pub fn injective_dimension_le_1(alg: &Algebra, op: &Algebra, m: &Representation) -> Result<bool> {
    let env = injective_envelope(op, m)?;
    let (cok, _) = rep::cokernel(alg, &env)?;
    is_injective(op, &cok)
}

/// Second route: `id M ≤ 1` iff `Ext¹(Ω S_v, M) = 0` for every simple.
pub fn injective_dimension_le_1_via_syzygies(alg: &Algebra, m: &Representation) -> Result<bool> {
    for v in 0..alg.vertex_count() {
        let omega = projective_cover(alg, &alg.simple(v))?.syzygy;
        if !ext1(alg, &omega, m)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
