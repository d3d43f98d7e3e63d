//! Precovers and right-minimal covers by a class of modules.

use alloc::format;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::catalog::{Catalog, Decomposition};
use crate::classes::IndecSet;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::registry::IndecId;
use crate::rep::{self, Morphism, Representation};
use crate::search;

/// A map from a module of `add(class)` to a target.
#[derive(Debug, Clone)]
pub struct Approximation {
    pub map: Morphism,
    pub parts: Decomposition,
    /// Right minimality, decided by nilpotency of `{h : f h = 0}`.
    pub minimal: bool,
    /// Over GF(p) within budget: every `1 + h` with `f h = 0` was
    /// enumerated and found invertible.
    pub exhaustive_minimality: Option<bool>,
}

impl Approximation {
    pub fn source(&self) -> &Representation {
        self.map.source()
    }
}

fn blocks(
    cat: &Catalog,
    target: &Representation,
    class: IndecSet,
) -> Result<Vec<(IndecId, Morphism)>> {
    let mut out = Vec::new();
    for t in class.iter() {
        for f in rep::hom_basis(cat.algebra(), cat.module(t), target)? {
            out.push((t, f));
        }
    }
    Ok(out)
}

fn assemble(cat: &Catalog, target: &Representation, blocks: &[(IndecId, Morphism)]) -> Morphism {
    let maps: Vec<Morphism> = blocks.iter().map(|(_, f)| f.clone()).collect();
    rep::sum_of_maps(cat.algebra(), target, &maps)
}

/// Whether `Hom(Y, f)` is onto for every member `Y` of `class`.
pub fn is_precover(cat: &Catalog, f: &Morphism, class: IndecSet) -> Result<bool> {
    let alg = cat.algebra();
    for y in class.iter() {
        let into_target = rep::hom_basis(alg, cat.module(y), f.target())?;
        if into_target.is_empty() {
            continue;
        }
        let into_source = rep::hom_basis(alg, cat.module(y), f.source())?;
        let mut image = Matrix::zeros(cat.field(), into_target.len(), into_source.len());
        for (c, g) in into_source.iter().enumerate() {
            let coords = rep::hom_coordinates(&f.after(g), &into_target)
                .ok_or_else(|| Error::inconsistency("composite left the Hom space"))?;
            for (r, x) in coords.into_iter().enumerate() {
                image.set(r, c, x);
            }
        }
        if image.rank() < into_target.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The universal map `⊕ X^{dim Hom(X, target)} → target` over the members
/// `X` of `class`, whose blocks are Hom bases.
pub fn precover(cat: &Catalog, target: &Representation, class: IndecSet) -> Result<Approximation> {
    target.check_against(cat.algebra())?;
    let b = blocks(cat, target, class)?;
    let map = assemble(cat, target, &b);
    if !is_precover(cat, &map, class)? {
        return Err(Error::inconsistency("the universal map is not a precover"));
    }
    let mut mult = alloc::vec![0; cat.len()];
    for (t, _) in &b {
        mult[t.0] += 1;
    }
    Ok(Approximation {
        map,
        parts: Decomposition::from_multiplicities(mult),
        minimal: false,
        exhaustive_minimality: None,
    })
}

/// A right-minimal precover: blocks of the universal precover are dropped
/// while the precover property survives, then any summand of the source
/// killed by the map is split off.
pub fn cover(cat: &Catalog, target: &Representation, class: IndecSet) -> Result<Approximation> {
    target.check_against(cat.algebra())?;
    let mut b = blocks(cat, target, class)?;
    let mut i = b.len();
    while i > 0 {
        i -= 1;
        let removed = b.remove(i);
        if !is_precover(cat, &assemble(cat, target, &b), class)? {
            b.insert(i, removed);
        }
    }
    let mut map = assemble(cat, target, &b);
    if !is_precover(cat, &map, class)? {
        return Err(Error::inconsistency("pruned map is not a precover"));
    }
    loop {
        match killed_summand(cat, &map)? {
            None => break,
            Some(h) => {
                let power = nilpotent_power(&h, map.source().total_dim());
                let (_, inc) = rep::kernel(cat.algebra(), &power)?;
                map = map.after(&inc);
            }
        }
    }
    if !is_precover(cat, &map, class)? {
        return Err(Error::inconsistency(
            "minimal version lost the precover property",
        ));
    }
    let exhaustive_minimality = exhaustive_minimality(cat, &map)?;
    if exhaustive_minimality == Some(false) {
        return Err(Error::inconsistency(
            "nilpotent kernel ideal but a non-invertible 1 + h exists",
        ));
    }
    let parts = cat.decompose(map.source())?;
    if !parts.support().is_subset(class) {
        return Err(Error::inconsistency("cover source left the class"));
    }
    Ok(Approximation {
        map,
        parts,
        minimal: true,
        exhaustive_minimality,
    })
}

/// Basis of `H = {h ∈ End(X) : f h = 0}`.
fn kernel_ideal(cat: &Catalog, f: &Morphism) -> Result<Vec<Morphism>> {
    let x = f.source();
    let ends = rep::hom_basis(cat.algebra(), x, x)?;
    if ends.is_empty() {
        return Ok(Vec::new());
    }
    let columns: Vec<Vec<Scalar>> = ends.iter().map(|e| f.after(e).flatten()).collect();
    let rows = columns[0].len();
    let mut m = Matrix::zeros(cat.field(), rows, ends.len());
    for (c, col) in columns.into_iter().enumerate() {
        for (r, v) in col.into_iter().enumerate() {
            m.set(r, c, v);
        }
    }
    let k = m.kernel_basis();
    Ok((0..k.cols())
        .map(|c| Morphism::combination(x, x, &k.column(c), &ends))
        .collect())
}

fn span_basis(field: Field, maps: Vec<Morphism>) -> Vec<Morphism> {
    let mut kept: Vec<Morphism> = Vec::new();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for f in maps {
        let mut candidate = rows.clone();
        candidate.push(f.flatten());
        let width = candidate[0].len();
        if width == 0 {
            continue;
        }
        let rank = Matrix::from_rows(field, candidate.clone())
            .map(|m| m.rank())
            .unwrap_or(0);
        if rank > rows.len() {
            rows = candidate;
            kept.push(f);
        }
    }
    kept
}

/// Whether a space of endomorphisms closed under right multiplication by
/// itself is nilpotent: its powers shrink to zero.
pub fn ideal_is_nilpotent(field: Field, h: &[Morphism]) -> bool {
    let mut power: Vec<Morphism> = h.to_vec();
    loop {
        if power.is_empty() {
            return true;
        }
        let products: Vec<Morphism> = power
            .iter()
            .flat_map(|a| h.iter().map(move |b| a.after(b)))
            .collect();
        let next = span_basis(field, products);
        if next.len() == power.len() {
            return false;
        }
        power = next;
    }
}

fn nilpotent_power(h: &Morphism, n: usize) -> Morphism {
    let mut result = Morphism::identity(h.source());
    let mut base = h.clone();
    let mut e = n.max(1);
    while e > 0 {
        if e & 1 == 1 {
            result = result.after(&base);
        }
        base = base.after(&base);
        e >>= 1;
    }
    result
}

fn is_nilpotent(h: &Morphism) -> bool {
    nilpotent_power(h, h.source().total_dim()).is_zero()
}

/// A non-nilpotent `h` with `f h = 0`, if `f` is not right minimal.
fn killed_summand(cat: &Catalog, f: &Morphism) -> Result<Option<Morphism>> {
    let field = cat.field();
    let h = kernel_ideal(cat, f)?;
    if ideal_is_nilpotent(field, &h) {
        return Ok(None);
    }
    if let Some(g) = h.iter().find(|g| !is_nilpotent(g)) {
        return Ok(Some(g.clone()));
    }
    let x = f.source();
    let mut found = None;
    match field {
        Field::Prime(_) => {
            search::enumerate_vectors(field, h.len(), cat.budgets().minimality, |coeffs| {
                let g = Morphism::combination(x, x, coeffs, &h);
                if !is_nilpotent(&g) {
                    found = Some(g);
                    return Ok(true);
                }
                Ok(false)
            })?;
        }
        Field::Rational => {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
            for t in 0..u64::from(cat.budgets().rational_trials) {
                let radius = 1 + t as i64;
                let coeffs: Vec<Scalar> = (0..h.len())
                    .map(|_| {
                        field.from_i64((rng.next_u64() % (2 * radius as u64 + 1)) as i64 - radius)
                    })
                    .collect();
                let g = Morphism::combination(x, x, &coeffs, &h);
                if !is_nilpotent(&g) {
                    found = Some(g);
                    break;
                }
            }
        }
    }
    match found {
        Some(g) => Ok(Some(g)),
        None => Err(Error::capability(format!(
            "no non-nilpotent element found in a {}-dimensional non-nilpotent ideal",
            h.len()
        ))),
    }
}

/// Over GF(p), every `1 + h` with `f h = 0` is invertible; `None` over ℚ or
/// past the minimality budget.
fn exhaustive_minimality(cat: &Catalog, f: &Morphism) -> Result<Option<bool>> {
    let field = cat.field();
    let Some(p) = field.order() else {
        return Ok(None);
    };
    let h = kernel_ideal(cat, f)?;
    let fits = p
        .checked_pow(h.len() as u32)
        .is_some_and(|t| t <= cat.budgets().minimality);
    if !fits {
        return Ok(None);
    }
    let x = f.source();
    let id = Morphism::identity(x);
    let mut all = true;
    search::enumerate_vectors(field, h.len(), cat.budgets().minimality, |coeffs| {
        let g = id.add(&Morphism::combination(x, x, coeffs, &h));
        if !g.is_iso() {
            all = false;
            return Ok(true);
        }
        Ok(false)
    })?;
    Ok(Some(all))
}

/// First member `N` of `class` with `Ext¹(N, ker f) ≠ 0`.
pub fn kernel_ext_violation(
    cat: &Catalog,
    f: &Morphism,
    class: IndecSet,
) -> Result<Option<IndecId>> {
    let (k, _) = rep::kernel(cat.algebra(), f)?;
    for n in class.iter() {
        if !crate::homological::ext1(cat.algebra(), cat.module(n), &k)?.is_zero() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::quiver::Quiver;
    use crate::registry::IndecRegistry;
    use crate::search::Budgets;

    fn a2_catalog(field: Field) -> Catalog {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = Algebra::build(q, Vec::new(), field, 2).unwrap();
        let r = IndecRegistry::enumerate(&a, 4, &Budgets::default()).unwrap();
        Catalog::new(a, r, Budgets::default()).unwrap()
    }

    fn ids(cat: &Catalog, labels: &[&str]) -> IndecSet {
        IndecSet::from_ids(labels.iter().map(|l| cat.registry().find_label(l).unwrap()))
    }

    #[test]
    fn universal_precover_of_q() {
        let cat = a2_catalog(Field::Prime(2));
        let class = ids(&cat, &["S2", "P1"]);
        let p = precover(&cat, cat.cogenerator(), class).unwrap();
        assert_eq!(p.parts.describe(cat.registry()), "S2 ⊕ P1^2");
        let zero = precover(&cat, cat.cogenerator(), IndecSet::empty()).unwrap();
        assert!(zero.source().is_zero());
    }

    #[test]
    fn covers() {
        for field in [Field::Prime(2), Field::Prime(3), Field::Rational] {
            let cat = a2_catalog(field);
            let class = ids(&cat, &["S2", "P1"]);
            let s1 = cat.module(cat.registry().find_label("S1").unwrap()).clone();
            let c = cover(&cat, &s1, class).unwrap();
            assert_eq!(c.parts.describe(cat.registry()), "P1");
            assert!(c.minimal);
            let (k, _) = rep::kernel(cat.algebra(), &c.map).unwrap();
            assert_eq!(k.dims(), &[0, 1]);
            let q = cover(&cat, cat.cogenerator(), class).unwrap();
            assert_eq!(q.parts.describe(cat.registry()), "P1^2");
            assert_eq!(kernel_ext_violation(&cat, &q.map, class).unwrap(), None);
            let p1 = cat.module(cat.registry().find_label("P1").unwrap()).clone();
            let own = cover(&cat, &p1, class).unwrap();
            assert!(own.map.is_iso());
            let none = cover(&cat, &s1, ids(&cat, &["S2"])).unwrap();
            assert!(none.source().is_zero());
        }
    }

    #[test]
    fn splitting_off_a_killed_diagonal_summand() {
        // f = (g, g): P1 ⊕ P1 → P1 has the diagonal-free kernel summand
        let cat = a2_catalog(Field::Prime(3));
        let alg = cat.algebra();
        let p1 = cat.module(cat.registry().find_label("P1").unwrap()).clone();
        let id = Morphism::identity(&p1);
        let f = rep::sum_of_maps(alg, &p1, &[id.clone(), id]);
        let h = killed_summand(&cat, &f).unwrap().unwrap();
        assert!(!is_nilpotent(&h));
        assert!(killed_summand(&cat, &Morphism::identity(&p1))
            .unwrap()
            .is_none());
    }
}
