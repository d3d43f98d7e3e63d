//! Finite-dimensional algebras presented by a quiver with relations.
//!
//! An [`Algebra`] is `kQ / (I + kQ_{≥N})` where `I` is generated by the
//! relations and `N` is the declared nilpotency bound. Construction checks
//! that the bound is harmless, i.e. every path of length `N` already lies in
//! the relation ideal (modulo longer paths), and then picks residue paths as
//! a basis. Leading terms are taken on the longest paths, so the basis
//! prefers short paths.
//!
//! Left modules are covariant representations: an arrow `a: i → j` acts by
//! a linear map `M_i → M_j`, and the product `x·y` means "first `y`, then `x`".

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Complement, Matrix, Rref};
use crate::quiver::{Path, Quiver, Relation};
use crate::rep::{self, Morphism, Representation};

/// Upper limit on the number of paths of length at most `N`.
pub const MAX_PATHS: usize = 20_000;

#[derive(Debug, Clone)]
pub struct Algebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    field: Field,
    bound: usize,
    basis: Vec<Path>,
    /// All paths of length `< bound`, keyed by `(source, arrows)`, mapped to
    /// their normal form over `basis`.
    normal_forms: BTreeMap<(usize, Vec<usize>), Vec<Scalar>>,
    paths_by_length: Vec<Vec<Path>>,
}

impl Algebra {
    pub fn build(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: Field,
        bound: usize,
    ) -> Result<Algebra> {
        if bound == 0 {
            return Err(Error::input("nilpotency bound must be at least 1"));
        }
        for r in &relations {
            for (c, p) in r.terms() {
                if c.field() != field {
                    return Err(Error::FieldMismatch(field, c.field()));
                }
                quiver.path(p.source, p.arrows.clone())?;
            }
        }

        let paths_by_length = enumerate_paths(&quiver, bound)?;
        // Ambient coordinates: longest paths first so that leading terms of
        // the relation ideal land on long paths.
        let ambient: Vec<&Path> = paths_by_length.iter().rev().flatten().collect();
        let index: BTreeMap<(usize, &[usize]), usize> = ambient
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.source, p.arrows.as_slice()), i))
            .collect();
        let n = ambient.len();

        let mut generators: Vec<Vec<Scalar>> = Vec::new();
        for r in &relations {
            let shortest = r.terms().iter().map(|(_, p)| p.len()).min().unwrap_or(0);
            if shortest > bound {
                continue;
            }
            let room = bound - shortest;
            for before in paths_by_length.iter().take(room + 1).flatten() {
                if before.target != r.source() {
                    continue;
                }
                for after in paths_by_length
                    .iter()
                    .take(room - before.len() + 1)
                    .flatten()
                {
                    if after.source != r.target() {
                        continue;
                    }
                    let mut row = vec![field.zero(); n];
                    let mut any = false;
                    for (c, term) in r.terms() {
                        let len = before.len() + term.len() + after.len();
                        if len > bound {
                            continue;
                        }
                        let mut arrows = before.arrows.clone();
                        arrows.extend_from_slice(&term.arrows);
                        arrows.extend_from_slice(&after.arrows);
                        let i = index[&(before.source, arrows.as_slice())];
                        row[i] = &row[i] + c;
                        any = true;
                    }
                    if any && row.iter().any(|x| !x.is_zero()) {
                        generators.push(row);
                    }
                }
            }
        }
        let reducer = if generators.is_empty() {
            Matrix::zeros(field, 0, n).rref()
        } else {
            Matrix::from_rows(field, generators)?.rref()
        };

        // Paths of length `bound` must vanish modulo the relations.
        let unit = |i: usize| {
            let mut e = vec![field.zero(); n];
            e[i] = field.one();
            e
        };
        for p in &paths_by_length[bound] {
            let i = index[&(p.source, p.arrows.as_slice())];
            if reducer.reduce(&unit(i)).iter().any(|x| !x.is_zero()) {
                return Err(Error::capability(format!(
                    "presentation is not admissible at nilpotency bound {bound}: path {} survives",
                    quiver.path_name(p)
                )));
            }
        }

        let mut basis: Vec<Path> = ambient
            .iter()
            .enumerate()
            .filter(|(i, p)| p.len() < bound && !reducer.pivots.contains(i))
            .map(|(_, p)| (*p).clone())
            .collect();
        basis.sort_by(|a, b| (a.len(), a.source, &a.arrows).cmp(&(b.len(), b.source, &b.arrows)));
        let basis_pos: Vec<usize> = basis
            .iter()
            .map(|p| index[&(p.source, p.arrows.as_slice())])
            .collect();

        let mut normal_forms = BTreeMap::new();
        for p in paths_by_length.iter().take(bound).flatten() {
            let i = index[&(p.source, p.arrows.as_slice())];
            let reduced = reducer.reduce(&unit(i));
            let coords: Vec<Scalar> = basis_pos.iter().map(|&j| reduced[j].clone()).collect();
            normal_forms.insert((p.source, p.arrows.clone()), coords);
        }
        drop(index);

        Ok(Algebra {
            quiver,
            relations,
            field,
            bound,
            basis,
            normal_forms,
            paths_by_length,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrow_count()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Residue paths forming a basis, ordered by length, source, arrows.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// All quiver paths of exactly `len` arrows, `len ≤ bound`.
    pub fn paths_of_length(&self, len: usize) -> &[Path] {
        self.paths_by_length.get(len).map_or(&[], Vec::as_slice)
    }

    /// Coordinates of a path over the basis; zero for paths of length
    /// at least the bound.
    pub fn normal_form(&self, path: &Path) -> Vec<Scalar> {
        self.normal_forms
            .get(&(path.source, path.arrows.clone()))
            .cloned()
            .unwrap_or_else(|| vec![self.field.zero(); self.dim()])
    }

    /// `x · y` for basis elements: first `y`, then `x`.
    pub fn multiply_basis(&self, x: usize, y: usize) -> Vec<Scalar> {
        match self.basis[x].after(&self.basis[y]) {
            Some(p) if p.len() < self.bound => self.normal_form(&p),
            _ => vec![self.field.zero(); self.dim()],
        }
    }

    /// `x · y` for arbitrary elements given by basis coordinates.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let coeff = a * b;
                for (slot, c) in out.iter_mut().zip(self.multiply_basis(i, j)) {
                    if !c.is_zero() {
                        *slot = &*slot + &(&coeff * &c);
                    }
                }
            }
        }
        out
    }

    pub fn identity_element(&self) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, p) in self.basis.iter().enumerate() {
            if p.is_empty() {
                out[i] = self.field.one();
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Scalar> {
        let mut e = vec![self.field.zero(); self.dim()];
        e[i] = self.field.one();
        e
    }

    /// Same algebra with every arrow reversed.
    pub fn opposite(&self) -> Result<Algebra> {
        Algebra::build(
            self.quiver.opposite(),
            self.relations.iter().map(Relation::reversed).collect(),
            self.field,
            self.bound,
        )
    }

    /// The same presentation read over another field. Coefficients are
    /// carried over through their integer or fractional values.
    pub fn with_field(&self, field: Field) -> Result<Algebra> {
        let mut relations = Vec::new();
        for r in &self.relations {
            let mut terms = Vec::new();
            for (c, p) in r.terms() {
                terms.push((field.parse(&format!("{c}"))?, p.clone()));
            }
            relations.push(Relation::new(field, terms)?);
        }
        Algebra::build(self.quiver.clone(), relations, field, self.bound)
    }

    /// Human readable form of an element, e.g. `eb + 2*a`.
    pub fn describe(&self, x: &[Scalar]) -> String {
        let mut parts = Vec::new();
        for (c, p) in x.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            let name = self.quiver.path_name(p);
            if c.is_one() {
                parts.push(name);
            } else {
                parts.push(format!("{c}*{name}"));
            }
        }
        if parts.is_empty() {
            String::from("0")
        } else {
            parts.join(" + ")
        }
    }

    /// `P_v = A e_v` together with the path behind each basis vector.
    pub fn projective(&self, v: usize) -> ProjectiveModule {
        let nv = self.vertex_count();
        let mut paths: Vec<Vec<Path>> = vec![Vec::new(); nv];
        let mut coordinate: Vec<usize> = vec![usize::MAX; self.dim()];
        for (i, p) in self.basis.iter().enumerate() {
            if p.source == v {
                coordinate[i] = paths[p.target].len();
                paths[p.target].push(p.clone());
            }
        }
        let dims: Vec<usize> = paths.iter().map(Vec::len).collect();
        let mut maps = Vec::with_capacity(self.arrow_count());
        for (ai, arrow) in self.quiver.arrows().iter().enumerate() {
            let (j, k) = (arrow.source, arrow.target);
            let mut m = Matrix::zeros(self.field, dims[k], dims[j]);
            let step = Path {
                source: j,
                target: k,
                arrows: vec![ai],
            };
            for (col, q) in paths[j].iter().enumerate() {
                let prod = step.after(q).expect("composable");
                if prod.len() >= self.bound {
                    continue;
                }
                for (i, c) in self.normal_form(&prod).into_iter().enumerate() {
                    if !c.is_zero() {
                        m.set(coordinate[i], col, c);
                    }
                }
            }
            maps.push(m);
        }
        ProjectiveModule {
            vertex: v,
            module: Representation::from_parts(self.field, dims, maps),
            paths,
        }
    }

    /// One indecomposable projective per vertex, `P_v = A e_v`.
    pub fn indecomposable_projectives(&self) -> Vec<Representation> {
        (0..self.vertex_count())
            .map(|v| self.projective(v).module)
            .collect()
    }

    /// The regular module `A = ⊕ P_v`.
    pub fn regular_module(&self) -> Representation {
        rep::direct_sum_modules(
            self.field,
            self.vertex_count(),
            &self.indecomposable_projectives(),
        )
    }

    /// The simple module at `v`.
    pub fn simple(&self, v: usize) -> Representation {
        let mut dims = vec![0; self.vertex_count()];
        dims[v] = 1;
        Representation::from_dims_zero_maps(self, dims)
    }

    /// `I_v = D(e_v A)`, computed as the dual of the projective `P_v` of the
    /// opposite algebra.
    pub fn indecomposable_injectives(&self) -> Result<Vec<Representation>> {
        let op = self.opposite()?;
        Ok((0..self.vertex_count())
            .map(|v| dual(&op.projective(v).module))
            .collect())
    }

    /// The minimal injective cogenerator `D(A) = ⊕ I_v`.
    pub fn injective_cogenerator(&self) -> Result<Representation> {
        Ok(rep::direct_sum_modules(
            self.field,
            self.vertex_count(),
            &self.indecomposable_injectives()?,
        ))
    }

    /// `{ r ∈ A : r·M = 0 }`.
    pub fn annihilator(&self, m: &Representation) -> Result<Ideal> {
        m.check_against(self)?;
        let total = m.total_dim();
        let offsets = m.offsets();
        let mut columns = Matrix::zeros(self.field, total * total, self.dim());
        for (b, path) in self.basis.iter().enumerate() {
            let act = m.path_action(path);
            let (r0, c0) = (offsets[path.target], offsets[path.source]);
            for r in 0..act.rows() {
                for c in 0..act.cols() {
                    columns.set((r0 + r) * total + c0 + c, b, act.get(r, c).clone());
                }
            }
        }
        let kernel = columns.kernel_basis();
        let gens = (0..kernel.cols()).map(|c| kernel.column(c)).collect();
        Ideal::new(self, gens)
    }

    /// Whether every element of `ideal` acts as zero on `m`.
    pub fn kills(&self, ideal: &Ideal, m: &Representation) -> bool {
        ideal
            .elements()
            .iter()
            .all(|x| self.element_action(x, m).is_zero())
    }

    /// The action of an element on `⊕_v M_v` as a block matrix.
    pub fn element_action(&self, x: &[Scalar], m: &Representation) -> Matrix {
        let total = m.total_dim();
        let offsets = m.offsets();
        let mut out = Matrix::zeros(self.field, total, total);
        for (c, path) in x.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            let act = m.path_action(path).scale(c);
            let (r0, c0) = (offsets[path.target], offsets[path.source]);
            for r in 0..act.rows() {
                for col in 0..act.cols() {
                    let cur = out.get(r0 + r, c0 + col).clone();
                    out.set(r0 + r, c0 + col, &cur + act.get(r, col));
                }
            }
        }
        out
    }

    /// Projectives of `A/I` as `A`-modules: `P̄_v = P_v / I e_v`, `None`
    /// where `e_v ∈ I`.
    pub fn quotient_algebra_data(&self, ideal: &Ideal) -> Result<Vec<Option<ProjectiveModule>>> {
        let mut out = Vec::with_capacity(self.vertex_count());
        for v in 0..self.vertex_count() {
            let proj = self.projective(v);
            let dims = proj.module.dims().to_vec();
            let mut spans: Vec<Matrix> = dims
                .iter()
                .map(|&d| Matrix::zeros(self.field, d, 0))
                .collect();
            for x in ideal.elements() {
                // x·e_v keeps the coordinates on paths starting at v.
                let mut cols: Vec<Vec<Scalar>> =
                    dims.iter().map(|&d| vec![self.field.zero(); d]).collect();
                let mut any = false;
                for (i, p) in self.basis.iter().enumerate() {
                    if p.source == v && !x[i].is_zero() {
                        let k = proj.paths[p.target]
                            .iter()
                            .position(|q| q == p)
                            .expect("path of P_v");
                        cols[p.target][k] = x[i].clone();
                        any = true;
                    }
                }
                if !any {
                    continue;
                }
                for (w, col) in cols.into_iter().enumerate() {
                    let d = dims[w];
                    let c = Matrix::from_entries(self.field, d, 1, col)?;
                    spans[w] = Matrix::hstack(self.field, d, &[&spans[w], &c]);
                }
            }
            let complements: Vec<Complement> = spans.iter().map(Complement::new).collect();
            if complements.iter().all(|c| c.dim() == 0) {
                out.push(None);
                continue;
            }
            let (quotient, _) = rep::quotient(self, &proj.module, &spans)?;
            let paths = complements
                .iter()
                .enumerate()
                .map(|(w, c)| {
                    c.positions
                        .iter()
                        .map(|&k| proj.paths[w][k].clone())
                        .collect()
                })
                .collect();
            out.push(Some(ProjectiveModule {
                vertex: v,
                module: quotient,
                paths,
            }));
        }
        Ok(out)
    }
}

fn enumerate_paths(quiver: &Quiver, bound: usize) -> Result<Vec<Vec<Path>>> {
    let mut by_len: Vec<Vec<Path>> = vec![(0..quiver.vertex_count()).map(Path::trivial).collect()];
    let mut total = by_len[0].len();
    for _ in 0..bound {
        let mut next = Vec::new();
        for p in by_len.last().expect("nonempty") {
            for (ai, a) in quiver.arrows().iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path {
                        source: p.source,
                        target: a.target,
                        arrows,
                    });
                }
            }
        }
        total += next.len();
        if total > MAX_PATHS {
            return Err(Error::capability(format!(
                "more than {MAX_PATHS} paths of length at most {bound}"
            )));
        }
        by_len.push(next);
    }
    Ok(by_len)
}

/// An indecomposable projective (or a projective of a quotient algebra) with
/// the path whose action on the top generator gives each basis vector.
#[derive(Debug, Clone)]
pub struct ProjectiveModule {
    pub vertex: usize,
    pub module: Representation,
    pub paths: Vec<Vec<Path>>,
}

impl ProjectiveModule {
    /// The morphism to `target` sending the top generator to `image`, a
    /// vector of `target` at this projective's vertex.
    pub fn map_to(&self, alg: &Algebra, target: &Representation, image: &[Scalar]) -> Morphism {
        let field = alg.field();
        let t = Matrix::column_vector(field, image.to_vec()).expect("vector in the target field");
        let components = self
            .paths
            .iter()
            .enumerate()
            .map(|(w, ps)| {
                let mut m = Matrix::zeros(field, target.dims()[w], ps.len());
                for (c, p) in ps.iter().enumerate() {
                    let col = target.path_action(p).mul(&t);
                    for r in 0..col.rows() {
                        m.set(r, c, col.get(r, 0).clone());
                    }
                }
                m
            })
            .collect();
        Morphism::from_parts(self.module.clone(), target.clone(), components)
    }
}

/// The vector-space dual: a representation of the opposite algebra with
/// transposed arrow matrices. `dual(dual(M)) = M` on the nose.
pub fn dual(m: &Representation) -> Representation {
    Representation::from_parts(
        m.field(),
        m.dims().to_vec(),
        m.maps().iter().map(Matrix::transpose).collect(),
    )
}

/// Dual of a morphism `f: M → N`, as `D f: D N → D M`.
pub fn dual_morphism(f: &Morphism) -> Morphism {
    Morphism::from_parts(
        dual(f.target()),
        dual(f.source()),
        f.components().iter().map(Matrix::transpose).collect(),
    )
}

/// A two-sided ideal, stored as a canonical (row reduced) basis of
/// coordinate vectors over the path basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    basis: Vec<Vec<Scalar>>,
}

impl Ideal {
    /// Span of `generators`; fails unless the span is closed under left and
    /// right multiplication by every basis path.
    pub fn new(alg: &Algebra, generators: Vec<Vec<Scalar>>) -> Result<Ideal> {
        let n = alg.dim();
        if generators.iter().any(|g| g.len() != n) {
            return Err(Error::shape("ideal generator of the wrong length"));
        }
        let span = if generators.is_empty() {
            Matrix::zeros(alg.field(), 0, n)
        } else {
            Matrix::from_rows(alg.field(), generators)?
        };
        let rref = span.rref();
        let k = rref.pivots.len();
        let basis: Vec<Vec<Scalar>> = (0..k).map(|r| rref.reduced.row(r).to_vec()).collect();
        let ideal = Ideal { basis };
        for x in &ideal.basis {
            for b in 0..n {
                let e = alg.unit_vector(b);
                if !ideal.contains_with(&rref, &alg.multiply(&e, x))
                    || !ideal.contains_with(&rref, &alg.multiply(x, &e))
                {
                    return Err(Error::input("span is not a two-sided ideal"));
                }
            }
        }
        Ok(ideal)
    }

    pub fn zero() -> Ideal {
        Ideal { basis: Vec::new() }
    }

    /// The arrow ideal, i.e. the Jacobson radical.
    pub fn radical(alg: &Algebra) -> Result<Ideal> {
        let gens = alg
            .basis()
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_empty())
            .map(|(i, _)| alg.unit_vector(i))
            .collect();
        Ideal::new(alg, gens)
    }

    fn contains_with(&self, rref: &Rref, v: &[Scalar]) -> bool {
        let _ = self;
        rref.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains(&self, alg: &Algebra, v: &[Scalar]) -> bool {
        if self.basis.is_empty() {
            return v.iter().all(Scalar::is_zero);
        }
        let m = Matrix::from_rows(alg.field(), self.basis.clone()).expect("ideal basis");
        self.contains_with(&m.rref(), v)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn elements(&self) -> &[Vec<Scalar>] {
        &self.basis
    }
}
