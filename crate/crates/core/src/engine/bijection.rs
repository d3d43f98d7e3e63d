//! Quasi-cotilting basic modules against torsion-free classes.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::constructions;
use super::predicates;
use crate::catalog::Catalog;
use crate::classes::{self, IndecSet, Lattice};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionRow {
    pub class: IndecSet,
    /// Support of the basic quasi-cotilting module cogenerating `class`.
    pub module: IndecSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub lattice: Lattice,
    pub quasi_cotilting: Vec<IndecSet>,
    /// One row per torsion-free class, in lattice order.
    pub rows: Vec<BijectionRow>,
}

impl BijectionReport {
    pub fn render(&self, cat: &Catalog) -> String {
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            let _ = writeln!(
                out,
                "tf{i}: {} ↔ {}",
                cat.describe_set(row.class),
                cat.describe_sum(row.module)
            );
        }
        let n = self.rows.len();
        let _ = writeln!(out, "BIJECTION: verified ({n} ↔ {n})");
        out
    }
}

/// Supports among subset bitmasks `lo..hi` whose basic module is
/// quasi-cotilting, with every cross-check evaluated.
pub fn quasi_cotilting_in_range(cat: &Catalog, lo: u64, hi: u64) -> Result<Vec<IndecSet>> {
    classes::subset_count(cat)?;
    let mut out = Vec::new();
    for bits in lo..hi {
        let set = IndecSet(bits);
        if predicates::is_quasi_cotilting(cat, &cat.basic_module(set))?.verdict {
            out.push(set);
        }
    }
    Ok(out)
}

fn dump(cat: &Catalog, qct: &[IndecSet], lattice: &Lattice) -> String {
    let modules: Vec<String> = qct.iter().map(|s| cat.describe_sum(*s)).collect();
    let classes: Vec<String> = lattice
        .classes
        .iter()
        .map(|s| cat.describe_set(*s))
        .collect();
    format!(
        "quasi-cotilting: [{}]; torsion-free: [{}]",
        modules.join("; "),
        classes.join("; ")
    )
}

/// Pairs each torsion-free class with the unique basic quasi-cotilting
/// module cogenerating it, and checks the pairing against the module
/// built from the class.
pub fn assemble_bijection(
    cat: &Catalog,
    mut qct: Vec<IndecSet>,
    lattice: Lattice,
) -> Result<BijectionReport> {
    qct.sort_by_key(|s| (s.len(), s.bits()));
    qct.dedup();
    let cogens: Vec<IndecSet> = qct.iter().map(|&s| classes::cogen_set(cat, s)).collect();
    for i in 0..qct.len() {
        for j in i + 1..qct.len() {
            if cogens[i] == cogens[j] {
                return Err(Error::inconsistency(format!(
                    "{} and {} cogenerate the same class with different add-closures; {}",
                    cat.describe_sum(qct[i]),
                    cat.describe_sum(qct[j]),
                    dump(cat, &qct, &lattice)
                )));
            }
        }
    }
    let mut rows = Vec::with_capacity(lattice.classes.len());
    for &class in &lattice.classes {
        let Some(k) = cogens.iter().position(|&c| c == class) else {
            return Err(Error::inconsistency(format!(
                "no quasi-cotilting module cogenerates {}; {}",
                cat.describe_set(class),
                dump(cat, &qct, &lattice)
            )));
        };
        let built = constructions::module_from_class(cat, class)?;
        if built.parts.support() != qct[k] {
            return Err(Error::inconsistency(format!(
                "{} is cogenerated by {} but the construction gives {}",
                cat.describe_set(class),
                cat.describe_sum(qct[k]),
                built.parts.describe(cat.registry())
            )));
        }
        rows.push(BijectionRow {
            class,
            module: qct[k],
        });
    }
    if rows.len() != qct.len() {
        return Err(Error::inconsistency(format!(
            "{} quasi-cotilting modules against {} torsion-free classes; {}",
            qct.len(),
            rows.len(),
            dump(cat, &qct, &lattice)
        )));
    }
    Ok(BijectionReport {
        lattice,
        quasi_cotilting: qct,
        rows,
    })
}

pub fn bijection_report(cat: &Catalog) -> Result<BijectionReport> {
    let total = classes::subset_count(cat)?;
    let qct = quasi_cotilting_in_range(cat, 0, total)?;
    let lattice = classes::enumerate_torsion_free_classes(cat)?;
    assemble_bijection(cat, qct, lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::Field;
    use crate::quiver::Quiver;
    use crate::registry::IndecRegistry;
    use crate::search::Budgets;

    #[test]
    fn a2_pairing() {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = Algebra::build(q, Vec::new(), Field::Prime(2), 2).unwrap();
        let r = IndecRegistry::enumerate(&a, 4, &Budgets::default()).unwrap();
        let cat = Catalog::new(a, r, Budgets::default()).unwrap();
        let b = bijection_report(&cat).unwrap();
        assert_eq!(b.rows.len(), 5);
        let text = b.render(&cat);
        assert!(text.contains("tf0: {} ↔ 0\n"));
        assert!(text.ends_with("BIJECTION: verified (5 ↔ 5)\n"));
    }
}
