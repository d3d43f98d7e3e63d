//! Counts fixed by brute force over GF(2), independent of the engine.

mod common;

use cotilt_core::classes;
use cotilt_core::engine;
use cotilt_core::{Catalog, Field, IndecId};

/// A module over GF(2) given by dimensions and one 0/1 matrix per arrow.
#[derive(Clone)]
struct Small {
    dims: Vec<usize>,
    maps: Vec<Vec<Vec<u8>>>,
}

type Arrows = Vec<(usize, usize)>;

fn mat_mul(a: &[Vec<u8>], b: &[Vec<u8>], inner: usize, cols: usize) -> Vec<Vec<u8>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).map(|k| row[k] & b[k][c]).fold(0, |x, y| x ^ y))
                .collect()
        })
        .collect()
}

/// `log₂` of the number of intertwiners, counted one by one.
fn brute_hom_dim(arrows: &Arrows, m: &Small, n: &Small) -> usize {
    let sizes: Vec<usize> = m.dims.iter().zip(&n.dims).map(|(a, b)| a * b).collect();
    let bits: usize = sizes.iter().sum();
    assert!(bits <= 20, "oracle space too large");
    let mut count = 0u64;
    for code in 0u64..1 << bits {
        let mut offset = 0;
        let comps: Vec<Vec<Vec<u8>>> = m
            .dims
            .iter()
            .zip(&n.dims)
            .map(|(&c, &r)| {
                let block = (0..r)
                    .map(|i| {
                        (0..c)
                            .map(|j| ((code >> (offset + i * c + j)) & 1) as u8)
                            .collect()
                    })
                    .collect();
                offset += r * c;
                block
            })
            .collect();
        let ok = arrows.iter().enumerate().all(|(ai, &(s, t))| {
            let left = mat_mul(&n.maps[ai], &comps[s], n.dims[s], m.dims[s]);
            let right = mat_mul(&comps[t], &m.maps[ai], m.dims[t], m.dims[s]);
            left == right
        });
        if ok {
            count += 1;
        }
    }
    count.trailing_zeros() as usize
}

/// Interval modules `[i, j]` of the linear quiver `1 → … → n`.
fn intervals(n: usize) -> (Arrows, Vec<Small>) {
    let arrows: Arrows = (0..n - 1).map(|i| (i, i + 1)).collect();
    let mut mods = Vec::new();
    for i in 0..n {
        for j in i..n {
            let dims: Vec<usize> = (0..n).map(|v| usize::from(i <= v && v <= j)).collect();
            let maps = arrows
                .iter()
                .map(|&(s, t)| {
                    (0..dims[t])
                        .map(|_| (0..dims[s]).map(|_| 1u8).collect())
                        .collect()
                })
                .collect();
            mods.push(Small { dims, maps });
        }
    }
    (arrows, mods)
}

fn dual_number_modules() -> (Arrows, Vec<Small>) {
    let s = Small {
        dims: vec![1],
        maps: vec![vec![vec![0]]],
    };
    let p = Small {
        dims: vec![2],
        maps: vec![vec![vec![0, 0], vec![1, 0]]],
    };
    (vec![(0, 0)], vec![s, p])
}

fn two_point_modules() -> (Arrows, Vec<Small>) {
    (
        Vec::new(),
        vec![
            Small {
                dims: vec![1, 0],
                maps: vec![],
            },
            Small {
                dims: vec![0, 1],
                maps: vec![],
            },
        ],
    )
}

fn hom_table(arrows: &Arrows, mods: &[Small]) -> Vec<Vec<usize>> {
    mods.iter()
        .map(|m| mods.iter().map(|n| brute_hom_dim(arrows, m, n)).collect())
        .collect()
}

/// Subsets `F` with `F = (°F)°`.
fn count_torsion_free(hom: &[Vec<usize>]) -> usize {
    let n = hom.len();
    let mut count = 0;
    for f in 0u32..1 << n {
        let in_f = |i: usize| f >> i & 1 == 1;
        let left: Vec<usize> = (0..n)
            .filter(|&x| (0..n).all(|y| !in_f(y) || hom[x][y] == 0))
            .collect();
        let closure: u32 = (0..n)
            .filter(|&y| left.iter().all(|&x| hom[x][y] == 0))
            .fold(0, |acc, y| acc | 1 << y);
        if closure == f {
            count += 1;
        }
    }
    count
}

/// Matches each oracle module with the registry entry of the same
/// dimension vector and compares Hom dimensions.
fn assert_hom_agrees(cat: &Catalog, mods: &[Small], hom: &[Vec<usize>]) {
    let ids: Vec<IndecId> = mods
        .iter()
        .map(|m| {
            cat.ids()
                .find(|&i| cat.module(i).dims() == &m.dims[..])
                .expect("registered")
        })
        .collect();
    for (a, &x) in ids.iter().enumerate() {
        for (b, &y) in ids.iter().enumerate() {
            assert_eq!(cat.hom_dim(x, y), hom[a][b]);
        }
    }
}

#[test]
fn linear_quivers() {
    for (n, expected) in [(2, 5), (3, 14)] {
        let (arrows, mods) = intervals(n);
        let hom = hom_table(&arrows, &mods);
        let oracle = count_torsion_free(&hom);
        assert_eq!(oracle, expected);
        let cat = common::catalog(common::linear(n, Field::Prime(2)));
        assert_eq!(cat.len(), mods.len());
        assert_hom_agrees(&cat, &mods, &hom);
        assert_eq!(
            classes::enumerate_torsion_free_classes(&cat)
                .unwrap()
                .classes
                .len(),
            oracle
        );
        assert_eq!(engine::bijection_report(&cat).unwrap().rows.len(), oracle);
    }
}

#[test]
fn local_and_semisimple() {
    let cases = [
        (
            dual_number_modules(),
            common::catalog(common::dual_numbers(Field::Prime(2))),
            2,
        ),
        (
            two_point_modules(),
            common::catalog(common::two_points(Field::Prime(2))),
            4,
        ),
    ];
    for ((arrows, mods), cat, expected) in cases {
        let hom = hom_table(&arrows, &mods);
        assert_eq!(count_torsion_free(&hom), expected);
        assert_hom_agrees(&cat, &mods, &hom);
        assert_eq!(
            classes::enumerate_torsion_free_classes(&cat)
                .unwrap()
                .classes
                .len(),
            expected
        );
    }
}

/// Hereditary algebras: `dim Hom − dim Ext¹` is the Euler form of the
/// dimension vectors.
#[test]
fn ext_matches_euler_form() {
    for n in 2..=4 {
        let cat = common::catalog(common::linear(n, Field::Prime(2)));
        for a in cat.ids() {
            for b in cat.ids() {
                let (x, y) = (cat.module(a).dims(), cat.module(b).dims());
                let mut euler: i64 = x.iter().zip(y).map(|(p, q)| (p * q) as i64).sum();
                for v in 0..n - 1 {
                    euler -= (x[v] * y[v + 1]) as i64;
                }
                assert_eq!(cat.hom_dim(a, b) as i64 - cat.ext_dim(a, b) as i64, euler);
            }
        }
    }
}
