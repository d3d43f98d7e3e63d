//! Constructions relating quasi-cotilting modules to torsion-free classes
//! and verifiers for the identities they satisfy.

use alloc::format;
use alloc::vec::Vec;

use super::approximations;
use super::predicates;
use super::report::PredicateReport;
use crate::catalog::{Catalog, Decomposition};
use crate::classes::{self, IndecSet};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::rep::{self, Morphism, Representation};

/// `0 → M₁ → M₀ → Q` with `M₀ → Q` a `Cogen M`-cover.
#[derive(Debug, Clone)]
pub struct PrecoverSequence {
    pub m1: Representation,
    pub m0: Representation,
    pub q: Representation,
    pub inclusion: Morphism,
    pub alpha: Morphism,
    pub m0_parts: Decomposition,
    pub m1_parts: Decomposition,
    pub is_precover: bool,
    pub is_cover: bool,
    pub m0_in_add: bool,
    pub m1_in_add: bool,
    /// `Ext¹(N, M₁) = 0` for every `N ∈ Cogen M`.
    pub kernel_ext_orthogonal: bool,
}

pub fn precover_sequence(cat: &Catalog, m: &Representation) -> Result<PrecoverSequence> {
    let alg = cat.algebra();
    let support = cat.decompose(m)?.support();
    if !predicates::is_ext_injective_in_cogen(cat, m)?.verdict {
        return Err(Error::precondition("M is not Ext-injective in Cogen M"));
    }
    let class = classes::cogen_set(cat, support);
    let q = cat.cogenerator().clone();
    let cover = approximations::cover(cat, &q, class)?;
    let alpha = cover.map.clone();
    let (m1, inclusion) = rep::kernel(alg, &alpha)?;
    let m1_parts = cat.decompose(&m1)?;
    let m0_in_add = cover.parts.support().is_subset(support);
    let m1_in_add = m1_parts.support().is_subset(support);
    let kernel_ext_orthogonal = approximations::kernel_ext_violation(cat, &alpha, class)?.is_none();
    if !alpha.after(&inclusion).is_zero() {
        return Err(Error::inconsistency("M₁ → M₀ → Q is not zero"));
    }
    if predicates::quasi_cotilting_holds(cat, m)?
        && !(m0_in_add && m1_in_add && kernel_ext_orthogonal)
    {
        return Err(Error::inconsistency(format!(
            "quasi-cotilting {} with M₀ ∈ add M: {m0_in_add}, M₁ ∈ add M: {m1_in_add}, Ext¹(Cogen M, M₁) = 0: {kernel_ext_orthogonal}",
            cat.decompose(m)?.describe(cat.registry())
        )));
    }
    Ok(PrecoverSequence {
        m0: cover.source().clone(),
        m1,
        q,
        inclusion,
        alpha,
        m0_parts: cover.parts,
        m1_parts,
        is_precover: true,
        is_cover: cover.minimal,
        m0_in_add,
        m1_in_add,
        kernel_ext_orthogonal,
    })
}

/// `M = A ⊕ B` built from a torsion-free class through the cover
/// `B → Q` and its kernel `A`.
#[derive(Debug, Clone)]
pub struct ClassModule {
    pub module: Representation,
    pub parts: Decomposition,
    pub kernel_parts: Decomposition,
    pub cover_parts: Decomposition,
}

pub fn module_from_class(cat: &Catalog, class: IndecSet) -> Result<ClassModule> {
    let alg = cat.algebra();
    let verdict = classes::is_torsion_free_class(cat, class)?;
    if !verdict.holds {
        return Err(Error::precondition(format!(
            "{} is not a torsion-free class",
            cat.describe_set(class)
        )));
    }
    let cover = approximations::cover(cat, cat.cogenerator(), class)?;
    let (a, _) = rep::kernel(alg, &cover.map)?;
    let kernel_parts = cat.decompose(&a)?;
    let module = rep::direct_sum(alg, &[a, cover.source().clone()]);
    let parts = kernel_parts.add(&cover.parts);
    if classes::cogen_set(cat, parts.support()) != class
        || !predicates::quasi_cotilting_holds(cat, &module)?
    {
        return Err(Error::inconsistency(format!(
            "{} built from {} is not a quasi-cotilting module cogenerating it",
            parts.describe(cat.registry()),
            cat.describe_set(class)
        )));
    }
    Ok(ClassModule {
        module,
        parts,
        kernel_parts,
        cover_parts: cover.parts,
    })
}

fn require_quasi_cotilting(cat: &Catalog, m: &Representation) -> Result<()> {
    if predicates::quasi_cotilting_holds(cat, m)? {
        Ok(())
    } else {
        Err(Error::precondition("M is not quasi-cotilting"))
    }
}

/// For quasi-cotilting `M`: an indecomposable lies in `add M` iff it lies
/// in `Cogen M` and is Ext-injective there.
pub fn verify_add_closure_identity(cat: &Catalog, m: &Representation) -> Result<PredicateReport> {
    require_quasi_cotilting(cat, m)?;
    let parts = cat.decompose(m)?;
    let support = parts.support();
    let class = classes::cogen_set(cat, support);
    for x in cat.ids() {
        let lhs = support.contains(x);
        let rhs = class.contains(x) && class.iter().all(|c| cat.ext_dim(c, x) == 0);
        if lhs != rhs {
            return Err(Error::inconsistency(format!(
                "{}: in add M is {lhs}, Ext-injective member of Cogen M is {rhs}",
                cat.label(x)
            )));
        }
    }
    PredicateReport::new(
        "add_closure_identity",
        parts.describe(cat.registry()),
        true,
        cat.len(),
    )
    .finish()
}

/// For the image `I` of the cover `α: M₀ → Q` and `π: Q → coker α`, with
/// `D = {N : Hom(N, π) = 0}`: `Cogen M ⊆ D`, every member of `D` embeds
/// in a power of `I`, and enumerated extensions inside `D` are
/// `Hom(−, I)`-exact.
pub fn verify_image_cogenerator(cat: &Catalog, m: &Representation) -> Result<PredicateReport> {
    let alg = cat.algebra();
    let parts = cat.decompose(m)?;
    let seq = precover_sequence(cat, m)?;
    let (im, _, _) = rep::image(alg, &seq.alpha)?;
    let (_, pi) = rep::cokernel(alg, &seq.alpha)?;
    let mut d = IndecSet::empty();
    for n in cat.ids() {
        if rep::hom_basis(alg, cat.module(n), &seq.q)?
            .iter()
            .all(|h| pi.after(h).is_zero())
        {
            d = d.with(n);
        }
    }
    let class = classes::cogen_set(cat, parts.support());
    let contains_class = class.is_subset(d);
    let mut cogenerates = true;
    let mut report_witness = Vec::new();
    for n in d.iter() {
        if !classes::in_cogen(cat, cat.module(n), &im)? {
            cogenerates = false;
            report_witness.push(format!(
                "{} ∈ D does not embed in a power of Im α",
                cat.label(n)
            ));
            break;
        }
    }
    let mut into_image = Vec::with_capacity(cat.len());
    for n in cat.ids() {
        into_image.push(rep::hom_dim(alg, cat.module(n), &im)?);
    }
    let hom = |e: &Decomposition| -> usize {
        cat.ids().map(|i| e.multiplicity(i) * into_image[i.0]).sum()
    };
    let mut exact = true;
    let mut exhaustive = true;
    'outer: for z in d.iter() {
        for x in d.iter() {
            let terms = cat.middle_terms(z, x);
            exhaustive &= terms.exhaustive;
            for (_, e) in &terms.terms {
                if e.support().is_subset(d) && hom(e) != into_image[z.0] + into_image[x.0] {
                    exact = false;
                    report_witness.push(format!(
                        "0 → {} → {} → {} → 0 is not Hom(−, Im α)-exact",
                        cat.label(x),
                        e.describe(cat.registry()),
                        cat.label(z)
                    ));
                    break 'outer;
                }
            }
        }
    }
    if !contains_class {
        report_witness.push(format!(
            "Cogen M = {} is not inside D = {}",
            cat.describe_set(class),
            cat.describe_set(d)
        ));
    }
    let mut report = PredicateReport::new(
        "image_cogenerator",
        parts.describe(cat.registry()),
        contains_class && cogenerates && exact,
        d.len(),
    )
    .necessary("cogen_inside_d", contains_class)
    .bounded(!exhaustive);
    for w in report_witness {
        report = report.witness(w);
    }
    report.finish()
}

/// A short exact sequence `0 → A → B → C → 0`.
#[derive(Debug, Clone)]
pub struct ShortSequence {
    pub f: Morphism,
    pub g: Morphism,
}

impl ShortSequence {
    pub fn first(&self) -> &Representation {
        self.f.source()
    }

    pub fn middle(&self) -> &Representation {
        self.f.target()
    }

    pub fn last(&self) -> &Representation {
        self.g.target()
    }

    pub fn is_exact(&self) -> bool {
        self.f.target() == self.g.source()
            && self.f.is_mono()
            && self.g.is_epi()
            && self.g.after(&self.f).is_zero()
            && self
                .middle()
                .dims()
                .iter()
                .zip(self.first().dims())
                .zip(self.last().dims())
                .all(|((b, a), c)| *b == a + c)
    }

    /// `Hom(B, M) → Hom(A, M)` is onto, by the rank of restriction.
    pub fn is_hom_exact(&self, cat: &Catalog, m: &Representation) -> Result<bool> {
        let alg = cat.algebra();
        let from_b = rep::hom_basis(alg, self.middle(), m)?;
        let from_a = rep::hom_basis(alg, self.first(), m)?;
        if from_a.is_empty() {
            return Ok(true);
        }
        let mut restriction = Matrix::zeros(cat.field(), from_a.len(), from_b.len());
        for (c, h) in from_b.iter().enumerate() {
            let coords = rep::hom_coordinates(&h.after(&self.f), &from_a)
                .ok_or_else(|| Error::inconsistency("restriction left the Hom space"))?;
            for (r, x) in coords.into_iter().enumerate() {
                restriction.set(r, c, x);
            }
        }
        Ok(restriction.rank() == from_a.len())
    }
}

/// `0 → A → M^h ⊕ E → C → 0` from the evaluation map of `A` into `M`
/// joined with a map `A → E` whose Hom coordinates come from `next`;
/// `A` must lie in `Cogen M`.
pub fn approximation_sequence(
    cat: &Catalog,
    a: &Representation,
    m: &Representation,
    extra: &Decomposition,
    mut next: impl FnMut() -> Scalar,
) -> Result<ShortSequence> {
    let alg = cat.algebra();
    let eval = rep::evaluation_map(alg, a, m)?;
    if !eval.is_mono() {
        return Err(Error::precondition("A is not cogenerated by M"));
    }
    let e = cat.module_of(extra);
    let basis = rep::hom_basis(alg, a, &e)?;
    let coeffs: Vec<Scalar> = basis.iter().map(|_| next()).collect();
    let to_e = Morphism::combination(a, &e, &coeffs, &basis);
    let f = rep::product_of_maps(alg, a, &[eval, to_e]);
    let (_, g) = rep::cokernel(alg, &f)?;
    Ok(ShortSequence { f, g })
}

fn check_sequence(cat: &Catalog, m: &Representation, s: &ShortSequence, which: &str) -> Result<()> {
    if !s.is_exact() {
        return Err(Error::precondition(format!(
            "{which} sequence is not short exact"
        )));
    }
    if !s.is_hom_exact(cat, m)? {
        return Err(Error::precondition(format!(
            "{which} sequence is not Hom(−, M)-exact"
        )));
    }
    Ok(())
}

/// For `Hom(−, M)`-exact `0 → A → B → C → 0` and `0 → A → B' → C' → 0`
/// with `B, B' ∈ add M`: whether `B ⊕ C' ≅ B' ⊕ C`.
pub fn verify_sequence_cancellation(
    cat: &Catalog,
    m: &Representation,
    first: &ShortSequence,
    second: &ShortSequence,
) -> Result<bool> {
    if first.first() != second.first() {
        return Err(Error::precondition(
            "sequences do not start at the same module",
        ));
    }
    check_sequence(cat, m, first, "first")?;
    check_sequence(cat, m, second, "second")?;
    let support = cat.decompose(m)?.support();
    for (s, which) in [(first, "first"), (second, "second")] {
        if !cat.decompose(s.middle())?.support().is_subset(support) {
            return Err(Error::precondition(format!(
                "middle term of the {which} sequence is not in add M"
            )));
        }
    }
    let alg = cat.algebra();
    let lhs = rep::direct_sum(alg, &[first.middle().clone(), second.last().clone()]);
    let rhs = rep::direct_sum(alg, &[second.middle().clone(), first.last().clone()]);
    cat.is_isomorphic(&lhs, &rhs)
}

/// For costar `M` and a `Hom(−, M)`-exact `0 → A → B → C → 0` with
/// `A ∈ Cogen M`: the memberships of `B` and `C` in `Cogen M`, which must
/// coincide.
pub fn verify_cogen_two_of_three(
    cat: &Catalog,
    m: &Representation,
    s: &ShortSequence,
) -> Result<(bool, bool)> {
    if !predicates::is_costar(cat, m)?.verdict {
        return Err(Error::precondition("M is not costar"));
    }
    check_sequence(cat, m, s, "given")?;
    if !classes::in_cogen(cat, s.first(), m)? {
        return Err(Error::precondition("A is not in Cogen M"));
    }
    let b = classes::in_cogen(cat, s.middle(), m)?;
    let c = classes::in_cogen(cat, s.last(), m)?;
    if b != c {
        return Err(Error::inconsistency(format!(
            "B ∈ Cogen M is {b} but C ∈ Cogen M is {c}"
        )));
    }
    Ok((b, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::Field;
    use crate::quiver::Quiver;
    use crate::registry::IndecRegistry;
    use crate::search::Budgets;

    fn a2_catalog() -> Catalog {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = Algebra::build(q, Vec::new(), Field::Prime(2), 2).unwrap();
        let r = IndecRegistry::enumerate(&a, 4, &Budgets::default()).unwrap();
        Catalog::new(a, r, Budgets::default()).unwrap()
    }

    fn set(cat: &Catalog, labels: &[&str]) -> IndecSet {
        IndecSet::from_ids(labels.iter().map(|l| cat.registry().find_label(l).unwrap()))
    }

    #[test]
    fn sequences() {
        let cat = a2_catalog();
        let m = cat.basic_module(set(&cat, &["S2", "P1"]));
        let s = precover_sequence(&cat, &m).unwrap();
        assert_eq!(s.m0_parts.describe(cat.registry()), "P1^2");
        assert_eq!(s.m1_parts.describe(cat.registry()), "S2");
        assert!(s.m0_in_add && s.m1_in_add && s.is_cover && s.kernel_ext_orthogonal);
        let s2 = cat.basic_module(set(&cat, &["S2"]));
        let s = precover_sequence(&cat, &s2).unwrap();
        assert_eq!(s.m0_parts.describe(cat.registry()), "S2");
        assert!(s.m1.is_zero());
        let q = precover_sequence(&cat, cat.cogenerator()).unwrap();
        assert!(q.m1.is_zero() && q.alpha.is_iso());
        let bad = cat.basic_module(set(&cat, &["S1", "S2"]));
        assert!(matches!(
            precover_sequence(&cat, &bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn modules_from_classes() {
        let cat = a2_catalog();
        let c = module_from_class(&cat, set(&cat, &["S2", "P1"])).unwrap();
        assert_eq!(c.parts.describe(cat.registry()), "S2 ⊕ P1^2");
        assert!(module_from_class(&cat, IndecSet::empty())
            .unwrap()
            .module
            .is_zero());
        let all = module_from_class(&cat, cat.all()).unwrap();
        assert!(cat.is_isomorphic(&all.module, cat.cogenerator()).unwrap());
        assert!(matches!(
            module_from_class(&cat, set(&cat, &["S1", "S2"])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn verifiers() {
        let cat = a2_catalog();
        for labels in [&[][..], &["S1"], &["S2"], &["S2", "P1"], &["S1", "P1"]] {
            let m = cat.basic_module(set(&cat, labels));
            assert!(verify_add_closure_identity(&cat, &m).unwrap().verdict);
            assert!(
                verify_image_cogenerator(&cat, &m).unwrap().verdict,
                "{labels:?}"
            );
        }
    }

    #[test]
    fn cancellation_and_two_of_three() {
        let cat = a2_catalog();
        let alg = cat.algebra();
        let m = cat.basic_module(set(&cat, &["S2", "P1"]));
        let s2 = cat.module(cat.registry().find_label("S2").unwrap()).clone();
        let one = alg.field().one();
        let plain = approximation_sequence(
            &cat,
            &s2,
            &m,
            &cat.decomposition_of_set(IndecSet::empty()),
            || one.clone(),
        )
        .unwrap();
        let extra = approximation_sequence(
            &cat,
            &s2,
            &m,
            &cat.decomposition_of_set(set(&cat, &["P1"])),
            || one.clone(),
        )
        .unwrap();
        assert!(verify_sequence_cancellation(&cat, &m, &plain, &extra).unwrap());
        assert_eq!(
            verify_cogen_two_of_three(&cat, &m, &plain).unwrap(),
            (true, true)
        );

        // 0 → S2 → P1 → S1 → 0 is not Hom(−, M)-exact
        let p1 = cat.module(cat.registry().find_label("P1").unwrap()).clone();
        let inc = rep::hom_basis(alg, &s2, &p1).unwrap().remove(0);
        let (_, g) = rep::cokernel(alg, &inc).unwrap();
        let s = ShortSequence { f: inc, g };
        assert!(s.is_exact());
        assert!(matches!(
            verify_cogen_two_of_three(&cat, &m, &s),
            Err(Error::Precondition(_))
        ));
    }
}
