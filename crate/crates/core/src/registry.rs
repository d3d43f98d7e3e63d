//! The registry of indecomposable modules.
//!
//! Three builders are available. Quivers whose underlying graph is a
//! disjoint union of paths with no relations get their interval modules;
//! Nakayama quivers (at most one arrow in and one arrow out at every vertex)
//! get the uniserial quotients `P_v / rad^j P_v`; anything else over a
//! finite field falls back to a brute-force search by dimension vector.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homological;
use crate::matrix::Matrix;
use crate::rep::{self, Representation};
use crate::search::{self, Budgets};

/// Largest registry supported; class bitmasks are `u64`.
pub const MAX_REGISTRY: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndecId(pub usize);

impl fmt::Display for IndecId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    BuiltinTypeA,
    BuiltinNakayama,
    UserSupplied,
    BruteForce,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::BuiltinTypeA => "builtin-type-a",
            Provenance::BuiltinNakayama => "builtin-nakayama",
            Provenance::UserSupplied => "user-supplied",
            Provenance::BruteForce => "brute-force",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegistryEntry {
    pub module: Representation,
    pub label: String,
    pub provenance: Provenance,
}

/// Pairwise non-isomorphic indecomposables in canonical order: total
/// dimension, then dimension vector, then registration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndecRegistry {
    entries: Vec<RegistryEntry>,
    complete: bool,
}

impl IndecRegistry {
    /// Picks the builder that applies to `alg`. `bound` caps the total
    /// dimension explored by the brute-force builder.
    pub fn enumerate(alg: &Algebra, bound: usize, budgets: &Budgets) -> Result<IndecRegistry> {
        if let Some(modules) = type_a_intervals(alg) {
            return IndecRegistry::finish(alg, modules, Provenance::BuiltinTypeA, true, budgets);
        }
        if is_nakayama(alg) {
            let modules = nakayama_uniserials(alg)?;
            return IndecRegistry::finish(alg, modules, Provenance::BuiltinNakayama, true, budgets);
        }
        let modules = brute_force(alg, bound, budgets)?;
        IndecRegistry::finish(alg, modules, Provenance::BruteForce, true, budgets)
    }

    /// Forces the brute-force builder (useful to cross-check the others).
    pub fn brute_force(alg: &Algebra, bound: usize, budgets: &Budgets) -> Result<IndecRegistry> {
        let modules = brute_force(alg, bound, budgets)?;
        IndecRegistry::finish(alg, modules, Provenance::BruteForce, true, budgets)
    }

    /// A registry supplied by the caller. It is never marked complete.
    pub fn user_supplied(
        alg: &Algebra,
        modules: Vec<Representation>,
        budgets: &Budgets,
    ) -> Result<IndecRegistry> {
        for m in &modules {
            m.check_against(alg)?;
        }
        IndecRegistry::finish(alg, modules, Provenance::UserSupplied, false, budgets)
    }

    fn finish(
        alg: &Algebra,
        modules: Vec<Representation>,
        provenance: Provenance,
        complete: bool,
        budgets: &Budgets,
    ) -> Result<IndecRegistry> {
        if modules.len() > MAX_REGISTRY {
            return Err(Error::capability(format!(
                "{} indecomposables exceed the supported registry size {MAX_REGISTRY}",
                modules.len()
            )));
        }
        for m in &modules {
            if m.is_zero() || !is_indecomposable(alg, m, budgets)? {
                return Err(Error::input("registry entry is not indecomposable"));
            }
        }
        let mut order: Vec<usize> = (0..modules.len()).collect();
        order.sort_by(|&a, &b| {
            let (x, y) = (&modules[a], &modules[b]);
            (x.total_dim(), x.dims(), a).cmp(&(y.total_dim(), y.dims(), b))
        });
        let labels = labels_for(alg, &order.iter().map(|&i| &modules[i]).collect::<Vec<_>>())?;
        let entries = order
            .into_iter()
            .zip(labels)
            .map(|(i, label)| RegistryEntry {
                module: modules[i].clone(),
                label,
                provenance,
            })
            .collect();
        Ok(IndecRegistry { entries, complete })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn entries(&self) -> &[RegistryEntry] {
        &self.entries
    }

    pub fn ids(&self) -> impl Iterator<Item = IndecId> {
        (0..self.entries.len()).map(IndecId)
    }

    pub fn module(&self, id: IndecId) -> &Representation {
        &self.entries[id.0].module
    }

    pub fn label(&self, id: IndecId) -> &str {
        &self.entries[id.0].label
    }

    pub fn find_label(&self, label: &str) -> Option<IndecId> {
        self.entries
            .iter()
            .position(|e| e.label == label)
            .map(IndecId)
    }
}

/// Labels: `S<v>` for simples, `P<v>` for projectives, `I<v>` for
/// injectives (first match wins), otherwise the dimension vector.
fn labels_for(alg: &Algebra, modules: &[&Representation]) -> Result<Vec<String>> {
    let projectives = alg.indecomposable_projectives();
    let injectives = alg.indecomposable_injectives()?;
    let name = |v: usize| alg.quiver().vertex_name(v);
    let mut out: Vec<String> = Vec::with_capacity(modules.len());
    for m in modules {
        let dims = m.dims();
        let top = homological::top_generators(alg, m);
        let socle = socle_dims(alg, m);
        let label = if m.total_dim() == 1 {
            let v = dims.iter().position(|&d| d == 1).expect("one-dimensional");
            format!("S{}", name(v))
        } else if let Some(v) = (0..alg.vertex_count())
            .find(|&v| top.len() == 1 && top[0].0 == v && projectives[v].dims() == dims)
        {
            format!("P{}", name(v))
        } else if let Some(v) = (0..alg.vertex_count()).find(|&v| {
            socle.iter().sum::<usize>() == 1 && socle[v] == 1 && injectives[v].dims() == dims
        }) {
            format!("I{}", name(v))
        } else {
            let parts: Vec<String> = dims.iter().map(|d| format!("{d}")).collect();
            format!("M({})", parts.join(","))
        };
        let clashes = out
            .iter()
            .filter(|l| l.split('#').next() == Some(label.as_str()))
            .count();
        if clashes > 0 {
            out.push(format!("{label}#{}", clashes + 1));
        } else {
            out.push(label);
        }
    }
    Ok(out)
}

/// Dimension vector of the socle `∩_{a: v→·} ker M_a`.
pub fn socle_dims(alg: &Algebra, m: &Representation) -> Vec<usize> {
    (0..alg.vertex_count())
        .map(|v| {
            let mut stacked = Matrix::zeros(alg.field(), 0, m.dims()[v]);
            for (ai, a) in alg.quiver().arrows().iter().enumerate() {
                if a.source == v {
                    stacked = Matrix::vstack(alg.field(), m.dims()[v], &[&stacked, &m.maps()[ai]]);
                }
            }
            m.dims()[v] - stacked.rank()
        })
        .collect()
}

/// Local endomorphism ring test.
///
/// Over GF(p) every endomorphism is enumerated (within the mono budget)
/// and checked for being a nontrivial idempotent. Over ℚ the radical of
/// `End M` is the kernel of the trace form `(x, y) ↦ tr(xy)`; the module is
/// reported indecomposable when the quotient is one-dimensional, and a
/// larger semisimple quotient is a capability error.
pub fn is_indecomposable(alg: &Algebra, m: &Representation, budgets: &Budgets) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let basis = rep::hom_basis(alg, m, m)?;
    if basis.len() == 1 {
        return Ok(true);
    }
    let field = alg.field();
    let totals: Vec<Matrix> = basis
        .iter()
        .map(|f| {
            let blocks: Vec<&Matrix> = f.components().iter().collect();
            Matrix::block_diagonal(field, &blocks)
        })
        .collect();
    // Fitting: φ^n splits M as Im φ^n ⊕ Ker φ^n.
    let n = m.total_dim();
    for x in &totals {
        let mut power = x.clone();
        for _ in 1..n {
            power = power.mul(x);
        }
        let r = power.rank();
        if r != 0 && r != n {
            return Ok(false);
        }
    }
    match field {
        Field::Prime(_) => {
            let identity = Matrix::identity(field, n);
            let mut found = false;
            search::enumerate_vectors(field, basis.len(), budgets.mono, |c| {
                let mut x = Matrix::zeros(field, n, n);
                for (coef, b) in c.iter().zip(&totals) {
                    if !coef.is_zero() {
                        x = x.add(&b.scale(coef));
                    }
                }
                if !x.is_zero() && x != identity && x.mul(&x) == x {
                    found = true;
                }
                Ok(found)
            })?;
            Ok(!found)
        }
        Field::Rational => {
            let e = totals.len();
            let mut gram = Matrix::zeros(field, e, e);
            for i in 0..e {
                for j in 0..e {
                    let prod = totals[i].mul(&totals[j]);
                    let mut tr = field.zero();
                    for k in 0..prod.rows() {
                        tr = &tr + prod.get(k, k);
                    }
                    gram.set(i, j, tr);
                }
            }
            match gram.rank() {
                1 => Ok(true),
                r => Err(Error::capability(format!(
                    "endomorphism ring has a semisimple quotient of dimension {r}; indecomposability over the rationals is only decided when it is 1"
                ))),
            }
        }
    }
}

/// Interval modules when the quiver is a disjoint union of paths (any
/// orientation) and there are no relations.
fn type_a_intervals(alg: &Algebra) -> Option<Vec<Representation>> {
    if !alg.relations().is_empty() {
        return None;
    }
    let n = alg.vertex_count();
    let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in alg.quiver().arrows() {
        if a.source == a.target || neighbours[a.source].contains(&a.target) {
            return None;
        }
        neighbours[a.source].push(a.target);
        neighbours[a.target].push(a.source);
    }
    if neighbours.iter().any(|nb| nb.len() > 2) {
        return None;
    }
    let mut seen = vec![false; n];
    let mut walks = Vec::new();
    for start in 0..n {
        if seen[start] || neighbours[start].len() == 2 {
            continue;
        }
        let mut walk = vec![start];
        seen[start] = true;
        let mut prev = usize::MAX;
        let mut at = start;
        while let Some(&next) = neighbours[at].iter().find(|&&w| w != prev && !seen[w]) {
            walk.push(next);
            seen[next] = true;
            prev = at;
            at = next;
        }
        walks.push(walk);
    }
    if seen.iter().any(|s| !s) {
        // a cycle in the underlying graph
        return None;
    }
    let field = alg.field();
    let mut out = Vec::new();
    for walk in &walks {
        for i in 0..walk.len() {
            for j in i..walk.len() {
                let mut dims = vec![0; n];
                for &v in &walk[i..=j] {
                    dims[v] = 1;
                }
                let maps = alg
                    .quiver()
                    .arrows()
                    .iter()
                    .map(|a| {
                        let (s, t) = (dims[a.source], dims[a.target]);
                        if s == 1 && t == 1 {
                            Matrix::identity(field, 1)
                        } else {
                            Matrix::zeros(field, t, s)
                        }
                    })
                    .collect();
                out.push(Representation::from_parts(field, dims, maps));
            }
        }
    }
    Some(out)
}

fn is_nakayama(alg: &Algebra) -> bool {
    let n = alg.vertex_count();
    let mut ins = vec![0; n];
    let mut outs = vec![0; n];
    for a in alg.quiver().arrows() {
        outs[a.source] += 1;
        ins[a.target] += 1;
    }
    ins.iter().chain(&outs).all(|&d| d <= 1)
}

/// `P_v / rad^j P_v` for every vertex and every `j` up to the Loewy length.
fn nakayama_uniserials(alg: &Algebra) -> Result<Vec<Representation>> {
    let field = alg.field();
    let mut out = Vec::new();
    for v in 0..alg.vertex_count() {
        let p = alg.projective(v).module;
        let mut layer: Vec<Matrix> = p
            .dims()
            .iter()
            .map(|&d| Matrix::identity(field, d))
            .collect();
        loop {
            let next: Vec<Matrix> = (0..alg.vertex_count())
                .map(|w| {
                    let mut span = Matrix::zeros(field, p.dims()[w], 0);
                    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
                        if a.target == w {
                            let img = p.maps()[ai].mul(&layer[a.source]);
                            span = Matrix::hstack(field, p.dims()[w], &[&span, &img]);
                        }
                    }
                    span.column_space()
                })
                .collect();
            let (q, _) = rep::quotient(alg, &p, &next)?;
            out.push(q);
            if next.iter().all(|m| m.cols() == 0) {
                break;
            }
            layer = next;
        }
    }
    Ok(out)
}

/// Every indecomposable of total dimension at most `bound`, up to
/// isomorphism, by enumerating all arrow matrices over GF(p).
///
/// The list is declared complete only when no indecomposable was found in
/// the upper half `(bound/2, bound]`; otherwise the algebra is not
/// verified representation-finite within the bound.
fn brute_force(alg: &Algebra, bound: usize, budgets: &Budgets) -> Result<Vec<Representation>> {
    let field = alg.field();
    let Field::Prime(p) = field else {
        return Err(Error::capability(
            "brute-force enumeration of indecomposables needs a finite field",
        ));
    };
    let n = alg.vertex_count();
    let mut found: Vec<Representation> = Vec::new();
    let mut spent: u64 = 0;
    let mut largest = 0;
    for total in 1..=bound {
        for dims in dim_vectors(n, total) {
            let shapes: Vec<(usize, usize)> = alg
                .quiver()
                .arrows()
                .iter()
                .map(|a| (dims[a.target], dims[a.source]))
                .collect();
            let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
            let count = u64::from(p)
                .checked_pow(entries as u32)
                .ok_or_else(|| Error::capability("brute-force search space overflow"))?;
            spent = spent.saturating_add(count);
            if spent > budgets.brute_force {
                return Err(Error::capability(format!(
                    "brute-force enumeration exceeded its budget of {} representations at dimension vector {dims:?}",
                    budgets.brute_force
                )));
            }
            search::enumerate_vectors(field, entries, u64::MAX, |values| {
                let mut maps = Vec::with_capacity(shapes.len());
                let mut at = 0;
                for &(r, c) in &shapes {
                    maps.push(Matrix::from_entries(
                        field,
                        r,
                        c,
                        values[at..at + r * c].to_vec(),
                    )?);
                    at += r * c;
                }
                let m = Representation::from_parts(field, dims.clone(), maps);
                if m.check_against(alg).is_err() || !is_indecomposable(alg, &m, budgets)? {
                    return Ok(false);
                }
                for other in found.iter().filter(|o| o.dims() == m.dims()) {
                    if search::exists_mono(alg, &m, other, budgets)?.exists {
                        return Ok(false);
                    }
                }
                found.push(m);
                largest = total;
                Ok(false)
            })?;
        }
    }
    if largest * 2 > bound {
        return Err(Error::capability(format!(
            "not verified representation-finite within total dimension {bound}: an indecomposable of dimension {largest} was found"
        )));
    }
    Ok(found)
}

fn dim_vectors(n: usize, total: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in dim_vectors(n - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{Quiver, Relation};

    fn linear(n: usize, field: Field) -> Algebra {
        let names: Vec<String> = (1..=n).map(|i| format!("{i}")).collect();
        let arrows: Vec<(String, String, String)> = (1..n)
            .map(|i| (format!("a{i}"), format!("{i}"), format!("{}", i + 1)))
            .collect();
        let q = Quiver::new(names, arrows).unwrap();
        Algebra::build(q, Vec::new(), field, n).unwrap()
    }

    #[test]
    fn a2_registry_in_canonical_order() {
        let a = linear(2, Field::Prime(2));
        let r = IndecRegistry::enumerate(&a, 6, &Budgets::default()).unwrap();
        let labels: Vec<&str> = r.ids().map(|i| r.label(i)).collect();
        assert_eq!(labels, ["S2", "S1", "P1"]);
        assert!(r.is_complete());
        assert_eq!(r.entries()[0].provenance, Provenance::BuiltinTypeA);
    }

    #[test]
    fn a3_has_six_intervals() {
        let a = linear(3, Field::Rational);
        let r = IndecRegistry::enumerate(&a, 6, &Budgets::default()).unwrap();
        assert_eq!(r.len(), 6);
    }

    #[test]
    fn semisimple_and_dual_numbers() {
        let q = Quiver::from_names(&["1", "2"], &[]).unwrap();
        let kk = Algebra::build(q, Vec::new(), Field::Prime(3), 1).unwrap();
        assert_eq!(
            IndecRegistry::enumerate(&kk, 4, &Budgets::default())
                .unwrap()
                .len(),
            2
        );

        let f = Field::Prime(2);
        let q = Quiver::from_names(&["1"], &[("x", "1", "1")]).unwrap();
        let r = Relation::new(f, vec![(f.one(), q.parse_path("x.x").unwrap())]).unwrap();
        let d = Algebra::build(q, vec![r], f, 2).unwrap();
        let reg = IndecRegistry::enumerate(&d, 4, &Budgets::default()).unwrap();
        let labels: Vec<&str> = reg.ids().map(|i| reg.label(i)).collect();
        assert_eq!(labels, ["S1", "P1"]);
        assert_eq!(reg.entries()[0].provenance, Provenance::BuiltinNakayama);
    }

    #[test]
    fn brute_force_agrees_with_intervals() {
        let a = linear(3, Field::Prime(2));
        let builtin = IndecRegistry::enumerate(&a, 6, &Budgets::default()).unwrap();
        let brute = IndecRegistry::brute_force(&a, 6, &Budgets::default()).unwrap();
        let dims = |r: &IndecRegistry| {
            r.entries()
                .iter()
                .map(|e| e.module.dims().to_vec())
                .collect::<Vec<_>>()
        };
        assert_eq!(dims(&builtin), dims(&brute));
    }

    #[test]
    fn decomposable_modules_are_detected() {
        for field in [Field::Prime(2), Field::Rational] {
            let a = linear(2, field);
            let s = rep::direct_sum(&a, &[a.simple(0), a.simple(1)]);
            let b = Budgets::default();
            assert!(!is_indecomposable(&a, &s, &b).unwrap());
            assert!(is_indecomposable(&a, &a.projective(0).module, &b).unwrap());
        }
    }
}
