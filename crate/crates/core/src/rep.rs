//! Representations, morphisms and the constructions between them.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Complement, Matrix};
use crate::quiver::Path;

/// A representation of the quiver satisfying the relations.
///
/// A representation does not hold a pointer to its algebra; operations that
/// need the relations or the path basis take the [`Algebra`] explicitly and
/// validate shapes against it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    field: Field,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Representation {
    /// Validated constructor: shapes, field and relations are checked.
    pub fn new(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        let m = Representation {
            field: alg.field(),
            dims,
            maps,
        };
        m.check_against(alg)?;
        Ok(m)
    }

    pub(crate) fn from_parts(field: Field, dims: Vec<usize>, maps: Vec<Matrix>) -> Representation {
        Representation { field, dims, maps }
    }

    pub fn from_dims_zero_maps(alg: &Algebra, dims: Vec<usize>) -> Representation {
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(alg.field(), dims[a.target], dims[a.source]))
            .collect();
        Representation {
            field: alg.field(),
            dims,
            maps,
        }
    }

    pub fn zero(alg: &Algebra) -> Representation {
        Representation::from_dims_zero_maps(alg, vec![0; alg.vertex_count()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Start of each vertex block inside `⊕_v M_v`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.dims
            .iter()
            .map(|d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }

    /// The linear map `M_source → M_target` of a path.
    pub fn path_action(&self, path: &Path) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.dims[path.source]);
        for &a in &path.arrows {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// Checks the shape against `alg`, that every relation acts as zero and
    /// that every path of length equal to the nilpotency bound acts as zero.
    pub fn check_against(&self, alg: &Algebra) -> Result<()> {
        if self.field != alg.field() {
            return Err(Error::FieldMismatch(alg.field(), self.field));
        }
        if self.dims.len() != alg.vertex_count() || self.maps.len() != alg.arrow_count() {
            return Err(Error::AlgebraMismatch(format!(
                "representation has {} vertices and {} arrows, algebra has {} and {}",
                self.dims.len(),
                self.maps.len(),
                alg.vertex_count(),
                alg.arrow_count()
            )));
        }
        for (m, a) in self.maps.iter().zip(alg.quiver().arrows()) {
            if m.field() != self.field {
                return Err(Error::FieldMismatch(self.field, m.field()));
            }
            if m.rows() != self.dims[a.target] || m.cols() != self.dims[a.source] {
                return Err(Error::shape(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    a.name,
                    self.dims[a.target],
                    self.dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        for r in alg.relations() {
            let mut acc = Matrix::zeros(self.field, self.dims[r.target()], self.dims[r.source()]);
            for (c, p) in r.terms() {
                acc = acc.add(&self.path_action(p).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::input("representation does not satisfy a relation"));
            }
        }
        for p in alg.paths_of_length(alg.bound()) {
            if !self.path_action(p).is_zero() {
                return Err(Error::input(format!(
                    "path {} of length {} acts nontrivially",
                    alg.quiver().path_name(p),
                    alg.bound()
                )));
            }
        }
        Ok(())
    }
}

/// A vertex-indexed family of linear maps commuting with the arrows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    components: Vec<Matrix>,
}

impl Morphism {
    /// Validated constructor: shapes and intertwining are checked.
    pub fn new(
        alg: &Algebra,
        source: Representation,
        target: Representation,
        components: Vec<Matrix>,
    ) -> Result<Morphism> {
        source.check_shape(alg)?;
        target.check_shape(alg)?;
        if source.field != target.field {
            return Err(Error::FieldMismatch(source.field, target.field));
        }
        if source.dims.len() != target.dims.len() || components.len() != source.dims.len() {
            return Err(Error::AlgebraMismatch("vertex counts differ".into()));
        }
        for (v, c) in components.iter().enumerate() {
            if c.rows() != target.dims[v] || c.cols() != source.dims[v] {
                return Err(Error::shape(format!(
                    "component at vertex {v} has the wrong shape"
                )));
            }
        }
        let f = Morphism {
            source,
            target,
            components,
        };
        if !f.intertwines_on(alg) {
            return Err(Error::input("components do not commute with the arrows"));
        }
        Ok(f)
    }

    pub(crate) fn from_parts(
        source: Representation,
        target: Representation,
        components: Vec<Matrix>,
    ) -> Morphism {
        Morphism {
            source,
            target,
            components,
        }
    }

    /// Checks `N_a φ_i = φ_j M_a` for every arrow `a: i → j`.
    pub fn intertwines_on(&self, alg: &Algebra) -> bool {
        alg.quiver().arrows().iter().enumerate().all(|(ai, a)| {
            self.target.maps[ai].mul(&self.components[a.source])
                == self.components[a.target].mul(&self.source.maps[ai])
        })
    }

    pub fn zero(source: &Representation, target: &Representation) -> Morphism {
        let components = source
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&s, &t)| Matrix::zeros(source.field, t, s))
            .collect();
        Morphism {
            source: source.clone(),
            target: target.clone(),
            components,
        }
    }

    pub fn identity(m: &Representation) -> Morphism {
        let components = m
            .dims
            .iter()
            .map(|&d| Matrix::identity(m.field, d))
            .collect();
        Morphism {
            source: m.clone(),
            target: m.clone(),
            components,
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Morphism) -> Morphism {
        assert_eq!(
            first.target.dims, self.source.dims,
            "composition of incompatible morphisms"
        );
        let components = self
            .components
            .iter()
            .zip(&first.components)
            .map(|(g, f)| g.mul(f))
            .collect();
        Morphism {
            source: first.source.clone(),
            target: self.target.clone(),
            components,
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect();
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            components,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Morphism {
        let components = self.components.iter().map(|a| a.scale(s)).collect();
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            components,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn is_mono(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    pub fn rank_vector(&self) -> Vec<usize> {
        self.components.iter().map(Matrix::rank).collect()
    }

    /// Concatenated row-major entries of all components.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.components
            .iter()
            .flat_map(|c| c.entries().iter().cloned())
            .collect()
    }

    /// The linear combination `Σ c_k f_k` of morphisms with equal endpoints.
    pub fn combination(
        source: &Representation,
        target: &Representation,
        coeffs: &[Scalar],
        basis: &[Morphism],
    ) -> Morphism {
        let mut acc = Morphism::zero(source, target);
        for (c, f) in coeffs.iter().zip(basis) {
            if !c.is_zero() {
                acc = acc.add(&f.scale(c));
            }
        }
        acc
    }

    /// Whether `self = g ∘ epi` for some `g`, and if so `g`. Requires `epi`
    /// to be surjective at every vertex and to share its source with `self`.
    pub fn factor_through_epi(&self, epi: &Morphism) -> Option<Morphism> {
        let mut components = Vec::with_capacity(self.components.len());
        for (h, p) in self.components.iter().zip(&epi.components) {
            let x = p.transpose().solve_right(&h.transpose()).ok().flatten()?;
            components.push(x.transpose());
        }
        Some(Morphism {
            source: epi.target.clone(),
            target: self.target.clone(),
            components,
        })
    }

    /// Whether `self = mono ∘ g` for some `g`, and if so `g`.
    pub fn factor_through_mono(&self, mono: &Morphism) -> Option<Morphism> {
        let mut components = Vec::with_capacity(self.components.len());
        for (h, i) in self.components.iter().zip(&mono.components) {
            components.push(i.solve_right(h).ok().flatten()?);
        }
        Some(Morphism {
            source: self.source.clone(),
            target: mono.source.clone(),
            components,
        })
    }
}

/// A basis of `Hom(M, N)`, as the kernel of the intertwining system
/// `N_a φ_i − φ_j M_a = 0`.
pub fn hom_basis(alg: &Algebra, m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    m.check_shape(alg)?;
    n.check_shape(alg)?;
    let field = alg.field();
    let nv = alg.vertex_count();
    // variable offsets for φ_v (n_v × m_v, row-major)
    let mut var_off = Vec::with_capacity(nv);
    let mut vars = 0;
    for v in 0..nv {
        var_off.push(vars);
        vars += n.dims[v] * m.dims[v];
    }
    let eq_count: usize = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| n.dims[a.target] * m.dims[a.source])
        .sum();
    let mut system = Matrix::zeros(field, eq_count, vars);
    let mut row0 = 0;
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (na, ma) = (&n.maps[ai], &m.maps[ai]);
        let (mi, nj) = (m.dims[i], n.dims[j]);
        for s in 0..nj {
            for t in 0..mi {
                let row = row0 + s * mi + t;
                // (N_a φ_i)[s][t] = Σ_r N_a[s][r] φ_i[r][t]
                for r in 0..n.dims[i] {
                    let c = na.get(s, r);
                    if !c.is_zero() {
                        let var = var_off[i] + r * m.dims[i] + t;
                        let cur = system.get(row, var).clone();
                        system.set(row, var, &cur + c);
                    }
                }
                // (φ_j M_a)[s][t] = Σ_c φ_j[s][c] M_a[c][t]
                for c in 0..m.dims[j] {
                    let x = ma.get(c, t);
                    if !x.is_zero() {
                        let var = var_off[j] + s * m.dims[j] + c;
                        let cur = system.get(row, var).clone();
                        system.set(row, var, &cur - x);
                    }
                }
            }
        }
        row0 += nj * mi;
    }
    let kernel = system.kernel_basis();
    let mut out = Vec::with_capacity(kernel.cols());
    for k in 0..kernel.cols() {
        let col = kernel.column(k);
        let components = (0..nv)
            .map(|v| {
                let entries = col[var_off[v]..var_off[v] + n.dims[v] * m.dims[v]].to_vec();
                Matrix::from_entries(field, n.dims[v], m.dims[v], entries).expect("shape")
            })
            .collect();
        out.push(Morphism::from_parts(m.clone(), n.clone(), components));
    }
    Ok(out)
}

pub fn hom_dim(alg: &Algebra, m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_basis(alg, m, n)?.len())
}

/// Coordinates of `f` over a basis of the Hom space it lives in.
pub fn hom_coordinates(f: &Morphism, basis: &[Morphism]) -> Option<Vec<Scalar>> {
    let field = f.source.field;
    let target = f.flatten();
    if basis.is_empty() {
        return target.iter().all(Scalar::is_zero).then(Vec::new);
    }
    let cols: Vec<Vec<Scalar>> = basis.iter().map(Morphism::flatten).collect();
    let rows = target.len();
    let mut a = Matrix::zeros(field, rows, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, x) in col.iter().enumerate() {
            a.set(r, c, x.clone());
        }
    }
    let b = Matrix::column_vector(field, target).ok()?;
    a.solve_right(&b).ok().flatten().map(|x| x.column(0))
}

impl Representation {
    fn check_shape(&self, alg: &Algebra) -> Result<()> {
        if self.field != alg.field() {
            return Err(Error::FieldMismatch(alg.field(), self.field));
        }
        if self.dims.len() != alg.vertex_count() || self.maps.len() != alg.arrow_count() {
            return Err(Error::AlgebraMismatch(
                "module built over another quiver".into(),
            ));
        }
        Ok(())
    }
}

/// The submodule spanned vertexwise by the columns of `spans` (which must
/// be closed under the arrows), with its inclusion.
pub fn submodule(
    alg: &Algebra,
    m: &Representation,
    spans: &[Matrix],
) -> Result<(Representation, Morphism)> {
    m.check_shape(alg)?;
    let field = alg.field();
    let bases: Vec<Matrix> = spans.iter().map(Matrix::column_space).collect();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let mut maps = Vec::with_capacity(alg.arrow_count());
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let image = m.maps[ai].mul(&bases[a.source]);
        let x = bases[a.target]
            .solve_right(&image)?
            .ok_or_else(|| Error::input("subspace family is not closed under the arrows"))?;
        maps.push(x);
    }
    let sub = Representation::from_parts(field, dims, maps);
    let inc = Morphism::from_parts(sub.clone(), m.clone(), bases);
    Ok((sub, inc))
}

/// `M / S` where `S` is given vertexwise by spanning columns, with the
/// projection. The quotient uses the standard-vector complement of `S`.
pub fn quotient(
    alg: &Algebra,
    m: &Representation,
    spans: &[Matrix],
) -> Result<(Representation, Morphism)> {
    m.check_shape(alg)?;
    let field = alg.field();
    let complements: Vec<Complement> = spans.iter().map(Complement::new).collect();
    let dims: Vec<usize> = complements.iter().map(Complement::dim).collect();
    let projections: Vec<Matrix> = complements.iter().map(|c| c.projection(field)).collect();
    let lifts: Vec<Matrix> = complements.iter().map(|c| c.lift(field)).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| projections[a.target].mul(&m.maps[ai]).mul(&lifts[a.source]))
        .collect();
    let q = Representation::from_parts(field, dims, maps);
    let proj = Morphism::from_parts(m.clone(), q.clone(), projections);
    Ok((q, proj))
}

pub fn kernel(alg: &Algebra, f: &Morphism) -> Result<(Representation, Morphism)> {
    let spans: Vec<Matrix> = f.components.iter().map(Matrix::kernel_basis).collect();
    submodule(alg, &f.source, &spans)
}

/// Image with the factorization `source → image → target`.
pub fn image(alg: &Algebra, f: &Morphism) -> Result<(Representation, Morphism, Morphism)> {
    let (im, inc) = submodule(alg, &f.target, &f.components)?;
    let epi = f
        .factor_through_mono(&inc)
        .ok_or_else(|| Error::inconsistency("morphism does not factor through its image"))?;
    Ok((im, epi, inc))
}

pub fn cokernel(alg: &Algebra, f: &Morphism) -> Result<(Representation, Morphism)> {
    quotient(alg, &f.target, &f.components)
}

/// Direct sum of representations with the same vertex count.
pub fn direct_sum_modules(
    field: Field,
    vertex_count: usize,
    parts: &[Representation],
) -> Representation {
    let mut dims = vec![0; vertex_count];
    for p in parts {
        for (d, x) in dims.iter_mut().zip(&p.dims) {
            *d += x;
        }
    }
    let arrow_count = parts.first().map_or(0, |p| p.maps.len());
    let maps = (0..arrow_count)
        .map(|a| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.maps[a]).collect();
            Matrix::block_diagonal(field, &blocks)
        })
        .collect();
    if parts.is_empty() {
        return Representation {
            field,
            dims,
            maps: Vec::new(),
        };
    }
    Representation { field, dims, maps }
}

pub fn direct_sum(alg: &Algebra, parts: &[Representation]) -> Representation {
    if parts.is_empty() {
        return Representation::zero(alg);
    }
    direct_sum_modules(alg.field(), alg.vertex_count(), parts)
}

/// `⊕ X_k` with its canonical injections and projections.
pub fn direct_sum_with_maps(
    alg: &Algebra,
    parts: &[Representation],
) -> (Representation, Vec<Morphism>, Vec<Morphism>) {
    let sum = direct_sum(alg, parts);
    let field = alg.field();
    let mut offsets = vec![0; alg.vertex_count()];
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for p in parts {
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for (v, offset) in offsets.iter_mut().enumerate() {
            let mut i = Matrix::zeros(field, sum.dims[v], p.dims[v]);
            i.paste(*offset, 0, &Matrix::identity(field, p.dims[v]));
            proj.push(i.transpose());
            inj.push(i);
            *offset += p.dims[v];
        }
        injections.push(Morphism::from_parts(p.clone(), sum.clone(), inj));
        projections.push(Morphism::from_parts(sum.clone(), p.clone(), proj));
    }
    (sum, injections, projections)
}

/// `[f_1 … f_k]: ⊕ X_k → target`.
pub fn sum_of_maps(alg: &Algebra, target: &Representation, maps: &[Morphism]) -> Morphism {
    let sources: Vec<Representation> = maps.iter().map(|f| f.source.clone()).collect();
    let source = direct_sum(alg, &sources);
    let components = (0..alg.vertex_count())
        .map(|v| {
            let blocks: Vec<&Matrix> = maps.iter().map(|f| &f.components[v]).collect();
            Matrix::hstack(alg.field(), target.dims[v], &blocks)
        })
        .collect();
    Morphism::from_parts(source, target.clone(), components)
}

/// `(f_1, …, f_k)ᵀ: source → ⊕ Y_k`.
pub fn product_of_maps(alg: &Algebra, source: &Representation, maps: &[Morphism]) -> Morphism {
    let targets: Vec<Representation> = maps.iter().map(|f| f.target.clone()).collect();
    let target = direct_sum(alg, &targets);
    let components = (0..alg.vertex_count())
        .map(|v| {
            let blocks: Vec<&Matrix> = maps.iter().map(|f| &f.components[v]).collect();
            Matrix::vstack(alg.field(), source.dims[v], &blocks)
        })
        .collect();
    Morphism::from_parts(source.clone(), target, components)
}

/// `f ⊕ g: A ⊕ C → B ⊕ D`.
pub fn direct_sum_of_maps(alg: &Algebra, maps: &[Morphism]) -> Morphism {
    let sources: Vec<Representation> = maps.iter().map(|f| f.source.clone()).collect();
    let targets: Vec<Representation> = maps.iter().map(|f| f.target.clone()).collect();
    let components = (0..alg.vertex_count())
        .map(|v| {
            let blocks: Vec<&Matrix> = maps.iter().map(|f| &f.components[v]).collect();
            Matrix::block_diagonal(alg.field(), &blocks)
        })
        .collect();
    Morphism::from_parts(
        direct_sum(alg, &sources),
        direct_sum(alg, &targets),
        components,
    )
}

/// The evaluation map `N → M^d`, `d = dim Hom(N, M)`, whose blocks are the
/// Hom basis. `N` is cogenerated by `M` iff it is a monomorphism.
pub fn evaluation_map(alg: &Algebra, n: &Representation, m: &Representation) -> Result<Morphism> {
    let basis = hom_basis(alg, n, m)?;
    Ok(product_of_maps(alg, n, &basis))
}

/// Vertexwise intersection of the kernels of `maps`, the route independent
/// of assembling the evaluation map.
pub fn common_kernel_is_zero(source: &Representation, maps: &[Morphism]) -> bool {
    (0..source.dims.len()).all(|v| {
        let d = source.dims[v];
        if d == 0 {
            return true;
        }
        let mut space = Matrix::identity(source.field, d);
        for f in maps {
            if space.cols() == 0 {
                break;
            }
            let restricted = f.components[v].mul(&space);
            let k = restricted.kernel_basis();
            space = space.mul(&k);
        }
        space.cols() == 0
    })
}

/// The pushout of `f: A → B` and `g: A → C`, as `(B ⊕ C) / {(f a, −g a)}`.
pub fn pushout(
    alg: &Algebra,
    f: &Morphism,
    g: &Morphism,
) -> Result<(Representation, Morphism, Morphism)> {
    if f.source != g.source {
        return Err(Error::input("pushout of morphisms with different sources"));
    }
    let diff = product_of_maps(alg, &f.source, &[f.clone(), g.scale(&-&alg.field().one())]);
    let (p, proj) = cokernel(alg, &diff)?;
    let (_, injections, _) = direct_sum_with_maps(alg, &[f.target.clone(), g.target.clone()]);
    let to_p_b = proj.after(&injections[0]);
    let to_p_c = proj.after(&injections[1]);
    Ok((p, to_p_b, to_p_c))
}

/// The pullback of `f: B → D` and `g: C → D`, as `{(b, c) : f b = g c}`.
pub fn pullback(
    alg: &Algebra,
    f: &Morphism,
    g: &Morphism,
) -> Result<(Representation, Morphism, Morphism)> {
    if f.target != g.target {
        return Err(Error::input("pullback of morphisms with different targets"));
    }
    let diff = sum_of_maps(alg, &f.target, &[f.clone(), g.scale(&-&alg.field().one())]);
    let (k, inc) = kernel(alg, &diff)?;
    let (_, _, projections) = direct_sum_with_maps(alg, &[f.source.clone(), g.source.clone()]);
    Ok((k, projections[0].after(&inc), projections[1].after(&inc)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn a2() -> Algebra {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
        Algebra::build(q, Vec::new(), Field::Prime(2), 2).unwrap()
    }

    #[test]
    fn hom_dimensions_over_a2() {
        let a = a2();
        let p1 = a.projective(0).module;
        let (s1, s2) = (a.simple(0), a.simple(1));
        assert_eq!(hom_dim(&a, &p1, &s1).unwrap(), 1);
        assert_eq!(hom_dim(&a, &p1, &s2).unwrap(), 0);
        assert_eq!(hom_dim(&a, &s1, &p1).unwrap(), 0);
        assert_eq!(hom_dim(&a, &s2, &p1).unwrap(), 1);
        for f in hom_basis(&a, &p1, &p1).unwrap() {
            assert!(f.intertwines_on(&a));
        }
    }

    #[test]
    fn kernel_of_top_projection() {
        let a = a2();
        let p1 = a.projective(0).module;
        let f = &hom_basis(&a, &p1, &a.simple(0)).unwrap()[0];
        let (k, inc) = kernel(&a, f).unwrap();
        assert_eq!(k.dims(), &[0, 1]);
        assert!(f.after(&inc).is_zero());
        let (c, _) = cokernel(&a, f).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn evaluation_map_detects_cogeneration() {
        let a = a2();
        let p1 = a.projective(0).module;
        let ev = evaluation_map(&a, &p1, &a.simple(0)).unwrap();
        assert!(!ev.is_mono());
        let ev = evaluation_map(&a, &a.simple(1), &p1).unwrap();
        assert!(ev.is_mono());
    }

    #[test]
    fn pushout_along_identity() {
        let a = a2();
        let p1 = a.projective(0).module;
        let s2 = a.simple(1);
        let inc = hom_basis(&a, &s2, &p1).unwrap().remove(0);
        let (p, _, _) = pushout(&a, &inc, &Morphism::identity(&s2)).unwrap();
        assert_eq!(p, p1);
        let zero = Representation::zero(&a);
        let (p, _, _) =
            pushout(&a, &Morphism::zero(&zero, &p1), &Morphism::zero(&zero, &s2)).unwrap();
        assert_eq!(p.dims(), &[1, 2]);
    }

    #[test]
    fn direct_sums_are_block_diagonal() {
        let a = a2();
        assert!(direct_sum(&a, &[]).is_zero());
        let s = direct_sum(&a, &[a.simple(0), a.simple(1)]);
        assert_eq!(s.dims(), &[1, 1]);
        assert!(s.maps()[0].is_zero());
        s.check_against(&a).unwrap();
    }
}
