#![allow(dead_code)]

use cotilt_core::{Algebra, Budgets, Catalog, Field, IndecRegistry, IndecSet, Quiver, Relation};

pub fn linear(n: usize, field: Field) -> Algebra {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let vertices: Vec<&str> = names.iter().map(String::as_str).collect();
    let arrow_names: Vec<String> = (0..n.saturating_sub(1))
        .map(|i| format!("a{}", i + 1))
        .collect();
    let arrows: Vec<(&str, &str, &str)> = (0..n.saturating_sub(1))
        .map(|i| (arrow_names[i].as_str(), vertices[i], vertices[i + 1]))
        .collect();
    let q = Quiver::from_names(&vertices, &arrows).unwrap();
    Algebra::build(q, Vec::new(), field, n.max(1)).unwrap()
}

pub fn two_points(field: Field) -> Algebra {
    let q = Quiver::from_names(&["1", "2"], &[]).unwrap();
    Algebra::build(q, Vec::new(), field, 1).unwrap()
}

pub fn dual_numbers(field: Field) -> Algebra {
    let q = Quiver::from_names(&["1"], &[("x", "1", "1")]).unwrap();
    let r = Relation::new(field, vec![(field.one(), q.parse_path("x.x").unwrap())]).unwrap();
    Algebra::build(q, vec![r], field, 2).unwrap()
}

/// `1 → 2 → 3` with the composite zero.
pub fn a3_zero_relation(field: Field) -> Algebra {
    let q = Quiver::from_names(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
    let r = Relation::new(field, vec![(field.one(), q.parse_path("b.a").unwrap())]).unwrap();
    Algebra::build(q, vec![r], field, 2).unwrap()
}

/// `1 ← 2 → 3`.
pub fn a3_source(field: Field) -> Algebra {
    let q = Quiver::from_names(&["1", "2", "3"], &[("a", "2", "1"), ("b", "2", "3")]).unwrap();
    Algebra::build(q, Vec::new(), field, 3).unwrap()
}

/// Two vertices in a cycle with radical square zero.
pub fn cyclic_pair(field: Field) -> Algebra {
    let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
    let r1 = Relation::new(field, vec![(field.one(), q.parse_path("b.a").unwrap())]).unwrap();
    let r2 = Relation::new(field, vec![(field.one(), q.parse_path("a.b").unwrap())]).unwrap();
    Algebra::build(q, vec![r1, r2], field, 2).unwrap()
}

pub fn catalog(alg: Algebra) -> Catalog {
    let budgets = Budgets::default();
    let registry = IndecRegistry::enumerate(&alg, 8, &budgets).unwrap();
    Catalog::new(alg, registry, budgets).unwrap()
}

pub fn set(cat: &Catalog, labels: &[&str]) -> IndecSet {
    IndecSet::from_ids(
        labels
            .iter()
            .map(|l| cat.registry().find_label(l).expect(l)),
    )
}

pub fn corpus(field: Field) -> Vec<(&'static str, Catalog)> {
    vec![
        ("a2", catalog(linear(2, field))),
        ("a3", catalog(linear(3, field))),
        ("kxk", catalog(two_points(field))),
        ("kx2", catalog(dual_numbers(field))),
        ("a3_rel", catalog(a3_zero_relation(field))),
        ("a3_source", catalog(a3_source(field))),
        ("cyclic", catalog(cyclic_pair(field))),
    ]
}
