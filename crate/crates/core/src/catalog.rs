//! Precomputed tables over a complete registry.
//!
//! A [`Catalog`] fixes an algebra together with its registry and caches
//! everything the predicates consult repeatedly: Hom bases between
//! indecomposables, Ext¹ spaces, mono and epi existence, middle terms of
//! extensions and the positions of projectives, injectives and simples.
//! It is immutable once built and can be shared between threads.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::classes::IndecSet;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::homological::{self, Ext1Space};
use crate::matrix::Matrix;
use crate::registry::{IndecId, IndecRegistry};
use crate::rep::{self, Morphism, Representation};
use crate::search::{self, Budgets, SearchVerdict};

/// Multiplicities of the registered indecomposables in a module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition {
    multiplicities: Vec<usize>,
}

impl Decomposition {
    pub fn from_multiplicities(multiplicities: Vec<usize>) -> Decomposition {
        Decomposition { multiplicities }
    }

    pub fn single(len: usize, id: IndecId) -> Decomposition {
        let mut multiplicities = vec![0; len];
        multiplicities[id.0] = 1;
        Decomposition { multiplicities }
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn multiplicity(&self, id: IndecId) -> usize {
        self.multiplicities[id.0]
    }

    pub fn support(&self) -> IndecSet {
        IndecSet::from_ids(
            self.multiplicities
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(i, _)| IndecId(i)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.iter().all(|&m| m == 0)
    }

    pub fn is_basic(&self) -> bool {
        self.multiplicities.iter().all(|&m| m <= 1)
    }

    /// Number of indecomposable summands counted with multiplicity.
    pub fn count(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn add(&self, other: &Decomposition) -> Decomposition {
        Decomposition {
            multiplicities: self
                .multiplicities
                .iter()
                .zip(&other.multiplicities)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `S2 ⊕ P1^2`, or `0`.
    pub fn describe(&self, registry: &IndecRegistry) -> String {
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| {
                let label = registry.label(IndecId(i));
                if m == 1 {
                    String::from(label)
                } else {
                    format!("{label}^{m}")
                }
            })
            .collect();
        if parts.is_empty() {
            String::from("0")
        } else {
            parts.join(" ⊕ ")
        }
    }
}

/// Middle terms of extensions `0 → X → E → Z → 0` between two
/// indecomposables, one per enumerated nonzero class.
#[derive(Debug, Clone)]
pub struct MiddleTerms {
    pub terms: Vec<(Vec<Scalar>, Decomposition)>,
    /// Every nonzero class was enumerated (finite fields); over ℚ only the
    /// representatives and their sum are.
    pub exhaustive: bool,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    alg: Algebra,
    op: Algebra,
    registry: IndecRegistry,
    budgets: Budgets,
    hom: Vec<Vec<Vec<Morphism>>>,
    gram_inverse: Matrix,
    ext: Vec<Vec<Ext1Space>>,
    mono: Vec<Vec<SearchVerdict>>,
    epi: Vec<Vec<SearchVerdict>>,
    middle: Vec<Vec<MiddleTerms>>,
    projectives: Vec<IndecId>,
    injectives: Vec<IndecId>,
    simples: Vec<IndecId>,
    cogenerator: Representation,
    cogenerator_parts: Decomposition,
    injective_dim_le_1: Vec<bool>,
}

impl Catalog {
    pub fn new(alg: Algebra, registry: IndecRegistry, budgets: Budgets) -> Result<Catalog> {
        if !registry.is_complete() {
            return Err(Error::IncompleteRegistry(String::from(
                "a catalog needs a registry marked complete",
            )));
        }
        let op = alg.opposite()?;
        let n = registry.len();
        let modules: Vec<Representation> =
            registry.ids().map(|i| registry.module(i).clone()).collect();

        let mut hom = Vec::with_capacity(n);
        for x in &modules {
            let mut row = Vec::with_capacity(n);
            for y in &modules {
                row.push(rep::hom_basis(&alg, x, y)?);
            }
            hom.push(row);
        }
        let gram_values: Vec<i64> = hom
            .iter()
            .flat_map(|r| r.iter().map(|b| b.len() as i64))
            .collect();
        let gram = Matrix::from_i64(Field::Rational, n, n, &gram_values)?;
        let gram_inverse = gram.inverse().ok_or_else(|| {
            Error::capability("Hom dimensions between the indecomposables form a singular matrix; decomposition by Hom counts is unavailable")
        })?;

        let mut ext = Vec::with_capacity(n);
        for x in &modules {
            let mut row = Vec::with_capacity(n);
            for y in &modules {
                row.push(homological::ext1(&alg, x, y)?);
            }
            ext.push(row);
        }

        let mut mono = Vec::with_capacity(n);
        let mut epi = Vec::with_capacity(n);
        for x in &modules {
            let mut mrow = Vec::with_capacity(n);
            let mut erow = Vec::with_capacity(n);
            for y in &modules {
                mrow.push(search::exists_mono(&alg, x, y, &budgets)?);
                erow.push(search::exists_epi(&alg, x, y, &budgets)?);
            }
            mono.push(mrow);
            epi.push(erow);
        }

        let mut cat = Catalog {
            alg,
            op,
            registry,
            budgets,
            hom,
            gram_inverse,
            ext,
            mono,
            epi,
            middle: Vec::new(),
            projectives: Vec::new(),
            injectives: Vec::new(),
            simples: Vec::new(),
            cogenerator: Representation::from_parts(Field::Rational, Vec::new(), Vec::new()),
            cogenerator_parts: Decomposition::from_multiplicities(vec![0; n]),
            injective_dim_le_1: Vec::new(),
        };

        let mut middle = Vec::with_capacity(n);
        for z in 0..n {
            let mut row = Vec::with_capacity(n);
            for x in 0..n {
                row.push(cat.enumerate_middle_terms(IndecId(z), IndecId(x))?);
            }
            middle.push(row);
        }
        cat.middle = middle;

        let nv = cat.alg.vertex_count();
        let single = |cat: &Catalog, m: &Representation, what: &str| -> Result<IndecId> {
            let d = cat.decompose(m)?;
            let s = d.support();
            if d.count() != 1 {
                return Err(Error::inconsistency(format!(
                    "an indecomposable {what} decomposes further"
                )));
            }
            Ok(s.iter().next().expect("one summand"))
        };
        let mut projectives = Vec::with_capacity(nv);
        let mut injectives = Vec::with_capacity(nv);
        let mut simples = Vec::with_capacity(nv);
        let inj_modules = cat.alg.indecomposable_injectives()?;
        for (v, inj) in inj_modules.iter().enumerate() {
            projectives.push(single(&cat, &cat.alg.projective(v).module, "projective")?);
            injectives.push(single(&cat, inj, "injective")?);
            simples.push(single(&cat, &cat.alg.simple(v), "simple")?);
        }
        cat.projectives = projectives;
        cat.injectives = injectives;
        cat.simples = simples;
        cat.cogenerator = cat.alg.injective_cogenerator()?;
        cat.cogenerator_parts = cat.decompose(&cat.cogenerator)?;
        let mut idle1 = Vec::with_capacity(n);
        for m in &modules {
            idle1.push(homological::injective_dimension_le_1(&cat.alg, &cat.op, m)?);
        }
        cat.injective_dim_le_1 = idle1;
        Ok(cat)
    }

    fn enumerate_middle_terms(&self, z: IndecId, x: IndecId) -> Result<MiddleTerms> {
        let space = &self.ext[z.0][x.0];
        let d = space.dim();
        let field = self.alg.field();
        let mut terms = Vec::new();
        if d == 0 {
            return Ok(MiddleTerms {
                terms,
                exhaustive: true,
            });
        }
        match field {
            Field::Prime(_) => {
                search::enumerate_vectors(field, d, self.budgets.ext, |coeffs| {
                    if coeffs.iter().all(Scalar::is_zero) {
                        return Ok(false);
                    }
                    let e = space.middle_term(&self.alg, coeffs)?;
                    terms.push((coeffs.to_vec(), self.decompose(&e.middle)?));
                    Ok(false)
                })?;
                Ok(MiddleTerms {
                    terms,
                    exhaustive: true,
                })
            }
            Field::Rational => {
                let mut vectors: Vec<Vec<Scalar>> = (0..d)
                    .map(|k| {
                        (0..d)
                            .map(|j| if j == k { field.one() } else { field.zero() })
                            .collect()
                    })
                    .collect();
                if d > 1 {
                    vectors.push(vec![field.one(); d]);
                }
                for coeffs in vectors {
                    let e = space.middle_term(&self.alg, &coeffs)?;
                    terms.push((coeffs, self.decompose(&e.middle)?));
                }
                Ok(MiddleTerms {
                    terms,
                    exhaustive: false,
                })
            }
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn opposite(&self) -> &Algebra {
        &self.op
    }

    pub fn registry(&self) -> &IndecRegistry {
        &self.registry
    }

    pub fn budgets(&self) -> &Budgets {
        &self.budgets
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn len(&self) -> usize {
        self.registry.len()
    }

    pub fn is_empty(&self) -> bool {
        self.registry.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = IndecId> {
        self.registry.ids()
    }

    pub fn all(&self) -> IndecSet {
        IndecSet::all(self.len())
    }

    pub fn module(&self, id: IndecId) -> &Representation {
        self.registry.module(id)
    }

    pub fn label(&self, id: IndecId) -> &str {
        self.registry.label(id)
    }

    /// Hom basis from `X_a` to `X_b`.
    pub fn hom(&self, a: IndecId, b: IndecId) -> &[Morphism] {
        &self.hom[a.0][b.0]
    }

    pub fn hom_dim(&self, a: IndecId, b: IndecId) -> usize {
        self.hom[a.0][b.0].len()
    }

    pub fn ext(&self, a: IndecId, b: IndecId) -> &Ext1Space {
        &self.ext[a.0][b.0]
    }

    pub fn ext_dim(&self, a: IndecId, b: IndecId) -> usize {
        self.ext[a.0][b.0].dim()
    }

    /// Existence of a monomorphism `X_y → X_x`.
    pub fn mono(&self, y: IndecId, x: IndecId) -> SearchVerdict {
        self.mono[y.0][x.0]
    }

    /// Existence of an epimorphism `X_x → X_y`.
    pub fn epi(&self, x: IndecId, y: IndecId) -> SearchVerdict {
        self.epi[x.0][y.0]
    }

    /// Middle terms of the nonsplit extensions `0 → X_x → E → X_z → 0`.
    pub fn middle_terms(&self, z: IndecId, x: IndecId) -> &MiddleTerms {
        &self.middle[z.0][x.0]
    }

    pub fn projective(&self, v: usize) -> IndecId {
        self.projectives[v]
    }

    pub fn injective(&self, v: usize) -> IndecId {
        self.injectives[v]
    }

    pub fn simple(&self, v: usize) -> IndecId {
        self.simples[v]
    }

    pub fn projectives(&self) -> IndecSet {
        IndecSet::from_ids(self.projectives.iter().copied())
    }

    pub fn injectives(&self) -> IndecSet {
        IndecSet::from_ids(self.injectives.iter().copied())
    }

    /// The minimal injective cogenerator `Q = D(A)`.
    pub fn cogenerator(&self) -> &Representation {
        &self.cogenerator
    }

    pub fn cogenerator_parts(&self) -> &Decomposition {
        &self.cogenerator_parts
    }

    pub fn injective_dim_le_1(&self, id: IndecId) -> bool {
        self.injective_dim_le_1[id.0]
    }

    /// Decomposition by Hom counts: solve `dim Hom(X_i, M) = Σ_j m_j dim
    /// Hom(X_i, X_j)` and confirm the answer against the dimension vector
    /// and against `dim Hom(M, X_j)`.
    pub fn decompose(&self, m: &Representation) -> Result<Decomposition> {
        m.check_against(&self.alg)?;
        let n = self.len();
        if let Some(i) = self.registry.entries().iter().position(|e| &e.module == m) {
            return Ok(Decomposition::single(n, IndecId(i)));
        }
        let mut h = Vec::with_capacity(n);
        for id in self.ids() {
            h.push(rep::hom_dim(&self.alg, self.module(id), m)? as i64);
        }
        let h = Matrix::from_i64(Field::Rational, n, 1, &h)?;
        let solution = self.gram_inverse.mul(&h);
        let mut multiplicities = Vec::with_capacity(n);
        for i in 0..n {
            let value = solution
                .get(i, 0)
                .to_i64()
                .filter(|&v| v >= 0)
                .ok_or_else(|| {
                    self.incomplete(m, "Hom counts have no nonnegative integral solution")
                })?;
            multiplicities.push(value as usize);
        }
        let d = Decomposition { multiplicities };
        let mut dims = vec![0; self.alg.vertex_count()];
        for (id, mult) in self.ids().map(|i| (i, d.multiplicity(i))) {
            for (acc, x) in dims.iter_mut().zip(self.module(id).dims()) {
                *acc += mult * x;
            }
        }
        if dims != m.dims() {
            return Err(self.incomplete(m, "dimension vectors do not add up"));
        }
        for j in self.ids() {
            let direct = rep::hom_dim(&self.alg, m, self.module(j))?;
            let predicted: usize = self
                .ids()
                .map(|i| d.multiplicity(i) * self.hom_dim(i, j))
                .sum();
            if direct != predicted {
                return Err(self.incomplete(m, "Hom counts into the registry do not match"));
            }
        }
        Ok(d)
    }

    fn incomplete(&self, m: &Representation, why: &str) -> Error {
        Error::IncompleteRegistry(format!(
            "module with dimension vector {:?}: {why}",
            m.dims()
        ))
    }

    pub fn is_isomorphic(&self, a: &Representation, b: &Representation) -> Result<bool> {
        Ok(self.decompose(a)? == self.decompose(b)?)
    }

    /// `⊕ X_i^{m_i}`.
    pub fn module_of(&self, d: &Decomposition) -> Representation {
        let mut parts = Vec::new();
        for id in self.ids() {
            for _ in 0..d.multiplicity(id) {
                parts.push(self.module(id).clone());
            }
        }
        rep::direct_sum(&self.alg, &parts)
    }

    /// The basic module with the given support.
    pub fn basic_module(&self, set: IndecSet) -> Representation {
        let parts: Vec<Representation> = set.iter().map(|i| self.module(i).clone()).collect();
        rep::direct_sum(&self.alg, &parts)
    }

    pub fn decomposition_of_set(&self, set: IndecSet) -> Decomposition {
        let mut multiplicities = vec![0; self.len()];
        for i in set.iter() {
            multiplicities[i.0] = 1;
        }
        Decomposition { multiplicities }
    }

    /// `{X_a, X_b}` as labels, e.g. `{S2, P1}`.
    pub fn describe_set(&self, set: IndecSet) -> String {
        let labels: Vec<&str> = set.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", labels.join(", "))
    }

    /// Basic module notation, `S2 ⊕ P1` or `0`.
    pub fn describe_sum(&self, set: IndecSet) -> String {
        if set.is_empty() {
            return String::from("0");
        }
        let labels: Vec<&str> = set.iter().map(|i| self.label(i)).collect();
        labels.join(" ⊕ ")
    }

    /// Whether every sampled Ext and search table entry is exact.
    pub fn tables_exact(&self) -> bool {
        let searches_exact = self
            .mono
            .iter()
            .chain(&self.epi)
            .flatten()
            .all(|v| v.certain);
        let ext_exact = self.middle.iter().flatten().all(|m| m.exhaustive);
        searches_exact && ext_exact
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn a2_catalog(field: Field) -> Catalog {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = Algebra::build(q, Vec::new(), field, 2).unwrap();
        let r = IndecRegistry::enumerate(&a, 4, &Budgets::default()).unwrap();
        Catalog::new(a, r, Budgets::default()).unwrap()
    }

    #[test]
    fn regular_module_decomposes() {
        let cat = a2_catalog(Field::Prime(2));
        let d = cat.decompose(&cat.algebra().regular_module()).unwrap();
        assert_eq!(d.describe(cat.registry()), "S2 ⊕ P1");
        let q = cat.cogenerator_parts().describe(cat.registry());
        assert_eq!(q, "S1 ⊕ P1");
    }

    #[test]
    fn same_dimension_vector_different_modules() {
        let cat = a2_catalog(Field::Rational);
        let a = cat.algebra();
        let s = rep::direct_sum(a, &[a.simple(0), a.simple(1)]);
        assert!(!cat.is_isomorphic(&s, &a.projective(0).module).unwrap());
        let t = rep::direct_sum(a, &[a.simple(1), a.simple(0)]);
        assert!(cat.is_isomorphic(&s, &t).unwrap());
    }

    #[test]
    fn middle_term_of_the_nonsplit_extension() {
        let cat = a2_catalog(Field::Prime(2));
        let s1 = cat.registry().find_label("S1").unwrap();
        let s2 = cat.registry().find_label("S2").unwrap();
        let p1 = cat.registry().find_label("P1").unwrap();
        let terms = cat.middle_terms(s1, s2);
        assert!(terms.exhaustive);
        assert_eq!(terms.terms.len(), 1);
        assert_eq!(terms.terms[0].1, Decomposition::single(3, p1));
    }

    #[test]
    fn missing_indecomposable_is_reported() {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = Algebra::build(q, Vec::new(), Field::Prime(2), 2).unwrap();
        let partial =
            IndecRegistry::user_supplied(&a, vec![a.simple(0), a.simple(1)], &Budgets::default())
                .unwrap();
        assert!(matches!(
            Catalog::new(a, partial, Budgets::default()),
            Err(Error::IncompleteRegistry(_))
        ));
    }
}
