use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use cotilt::format;
use cotilt_core::classes;
use cotilt_core::engine::{self, approximations, constructions, predicates};
use cotilt_core::{
    rep, Algebra, Budgets, Catalog, Decomposition, Field, IndecId, IndecRegistry, IndecSet,
    Representation,
};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

const CORPUS: [&str; 7] = ["a2", "a3", "kxk", "kx2", "a3rel", "a3source", "cyclic"];

fn algebra(name: &str, field: Field) -> Algebra {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(format!("{name}.alg"));
    let text = std::fs::read_to_string(&path).unwrap();
    let alg = format::parse_algebra(&text).unwrap();
    if alg.field() == field {
        alg
    } else {
        alg.with_field(field).unwrap()
    }
}

fn catalog(name: &str, field: Field) -> Catalog {
    let alg = algebra(name, field);
    let budgets = Budgets::default();
    let registry = IndecRegistry::enumerate(&alg, 8, &budgets).unwrap();
    Catalog::new(alg, registry, budgets).unwrap()
}

fn gf2(name: &str) -> Catalog {
    catalog(name, Field::Prime(2))
}

fn set(cat: &Catalog, labels: &[&str]) -> IndecSet {
    IndecSet::from_ids(
        labels
            .iter()
            .map(|l| cat.registry().find_label(l).expect(l)),
    )
}

fn subsets(cat: &Catalog) -> impl Iterator<Item = IndecSet> {
    (0..1u64 << cat.len()).map(IndecSet)
}

/// Torsion-free classes as the sets `F` with `F = (°F)°`, computed from
/// raw Hom dimensions.
fn oracle_torsion_free(cat: &Catalog) -> Vec<u64> {
    let alg = cat.algebra();
    let n = cat.len();
    let mut zero = vec![vec![false; n]; n];
    for (i, row) in zero.iter_mut().enumerate() {
        for (j, z) in row.iter_mut().enumerate() {
            *z = rep::hom_dim(alg, cat.module(IndecId(i)), cat.module(IndecId(j))).unwrap() == 0;
        }
    }
    let left = |f: u64| {
        (0..n)
            .filter(|&x| (0..n).all(|y| f >> y & 1 == 0 || zero[x][y]))
            .fold(0u64, |a, x| a | 1 << x)
    };
    let right = |t: u64| {
        (0..n)
            .filter(|&y| (0..n).all(|x| t >> x & 1 == 0 || zero[x][y]))
            .fold(0u64, |a, y| a | 1 << y)
    };
    let mut out: Vec<u64> = (0..1u64 << n).filter(|&f| right(left(f)) == f).collect();
    out.sort_by_key(|f| (f.count_ones(), *f));
    out
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, secs: u64) -> Result<(), String> {
    check(elapsed < Duration::from_secs(secs), || {
        format!("took {elapsed:?}, limit {secs} s")
    })
}

fn lattice_matches_oracle(cat: &Catalog, expected: usize) -> Result<(), String> {
    let lattice = classes::enumerate_torsion_free_classes(cat).map_err(|e| e.to_string())?;
    let oracle = oracle_torsion_free(cat);
    check(oracle.len() == expected, || {
        format!("oracle found {} classes", oracle.len())
    })?;
    let engine: Vec<u64> = lattice.classes.iter().map(|c| c.bits()).collect();
    check(engine == oracle, || {
        format!("engine classes {engine:?} differ from oracle {oracle:?}")
    })?;
    let b = engine::bijection_report(cat).map_err(|e| e.to_string())?;
    check(
        b.rows.len() == expected && b.quasi_cotilting.len() == expected,
        || format!("bijection {} ↔ {}", b.quasi_cotilting.len(), b.rows.len()),
    )
}

type Criterion = fn() -> Result<String, String>;

fn criterion_1() -> Result<String, String> {
    let start = Instant::now();
    let cat = gf2("a2");
    check(cat.len() == 3, || format!("{} indecomposables", cat.len()))?;
    lattice_matches_oracle(&cat, 5)?;
    let mut qct = Vec::new();
    let mut cot = Vec::new();
    for s in subsets(&cat) {
        let m = cat.basic_module(s);
        if engine::is_quasi_cotilting(&cat, &m).unwrap().verdict {
            qct.push(s);
        }
        if engine::is_cotilting(&cat, &m).unwrap().verdict {
            cot.push(s);
        }
    }
    let mut want_qct: Vec<IndecSet> = [&[][..], &["S1"], &["S2"], &["S2", "P1"], &["S1", "P1"]]
        .iter()
        .map(|l| set(&cat, l))
        .collect();
    let mut want_cot: Vec<IndecSet> = [&["S2", "P1"][..], &["S1", "P1"]]
        .iter()
        .map(|l| set(&cat, l))
        .collect();
    want_qct.sort_by_key(|s| s.bits());
    want_cot.sort_by_key(|s| s.bits());
    check(qct == want_qct, || format!("quasi-cotilting {qct:?}"))?;
    check(cot == want_cot, || format!("cotilting {cot:?}"))?;
    within(start.elapsed(), 5)?;
    Ok(format!(
        "3 indecs, 5 classes, 5 ↔ 5 in {:?}",
        start.elapsed()
    ))
}

fn criterion_2() -> Result<String, String> {
    let start = Instant::now();
    let cat = gf2("a3");
    check(cat.len() == 6, || format!("{} indecomposables", cat.len()))?;
    lattice_matches_oracle(&cat, 14)?;
    within(start.elapsed(), 30)?;
    Ok(format!(
        "6 indecs, 14 classes, 14 ↔ 14 in {:?}",
        start.elapsed()
    ))
}

fn criterion_3() -> Result<String, String> {
    let start = Instant::now();
    let kxk = gf2("kxk");
    lattice_matches_oracle(&kxk, 4)?;
    let kx2 = gf2("kx2");
    let expected = oracle_torsion_free(&kx2).len();
    lattice_matches_oracle(&kx2, expected)?;
    within(start.elapsed(), 5)?;
    Ok(format!(
        "k×k 4 classes, k[x]/(x²) {expected} classes in {:?}",
        start.elapsed()
    ))
}

fn copresented(cat: &Catalog, m: &Representation, support: IndecSet) -> bool {
    classes::cogen_set(cat, support)
        .iter()
        .all(|n| predicates::copres_membership(cat, cat.module(n), m).unwrap())
}

fn criterion_4() -> Result<String, String> {
    let mut checked = 0;
    for name in CORPUS {
        let cat = gf2(name);
        for s in subsets(&cat) {
            let m = cat.basic_module(s);
            let fac_perp = predicates::quasi_cotilting_holds(&cat, &m).unwrap();
            let ext_inj = engine::is_ext_injective_in_cogen(&cat, &m).unwrap().verdict;
            let copres = ext_inj && copresented(&cat, &m, s);
            let costar = engine::is_costar(&cat, &m).unwrap().verdict;
            let tf = classes::is_torsion_free_class(&cat, classes::cogen_set(&cat, s))
                .unwrap()
                .holds;
            check(fac_perp == copres && fac_perp == (costar && tf), || {
                format!(
                    "{name} {}: fac∩perp {fac_perp}, copresented+ext-injective {copres}, costar+torsion-free {}",
                    cat.describe_sum(s),
                    costar && tf
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} basic modules, 0 disagreements"))
}

fn criterion_5() -> Result<String, String> {
    let mut checked = 0;
    for name in CORPUS {
        let cat = gf2(name);
        for s in subsets(&cat) {
            let m = cat.basic_module(s);
            let cot = engine::is_cotilting(&cat, &m).unwrap().verdict;
            let faithful = engine::is_faithful(&cat, &m).unwrap().verdict;
            let qct = engine::is_quasi_cotilting(&cat, &m).unwrap().verdict;
            check(cot == (faithful && qct), || {
                format!("{name} {}", cat.describe_sum(s))
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} basic modules, 0 disagreements"))
}

fn criterion_6() -> Result<String, String> {
    let mut checked = 0;
    for name in CORPUS {
        let cat = gf2(name);
        for s in subsets(&cat) {
            let m = cat.basic_module(s);
            let costar = engine::is_costar(&cat, &m).unwrap().verdict;
            let rel = engine::is_relative_cotilting(&cat, &m).unwrap().verdict;
            check(costar == rel, || format!("{name} {}", cat.describe_sum(s)))?;
            checked += 1;
        }
    }
    let cat = gf2("a2");
    for (labels, costar, faithful) in [
        (&["S1"][..], true, false),
        (&["S2"], true, false),
        (&["P1"], false, true),
    ] {
        let m = cat.basic_module(set(&cat, labels));
        let c = engine::is_costar(&cat, &m).unwrap().verdict;
        let f = engine::is_faithful(&cat, &m).unwrap().verdict;
        check(c == costar && f == faithful, || {
            format!("{labels:?}: costar {c}, faithful {f}")
        })?;
    }
    Ok(format!(
        "{checked} basic modules, 0 disagreements; S1, S2, P1 over A2 as expected"
    ))
}

fn criterion_7() -> Result<String, String> {
    let mut checked = 0;
    for name in CORPUS {
        let cat = gf2(name);
        for s in subsets(&cat) {
            let m = cat.basic_module(s);
            if !predicates::quasi_cotilting_holds(&cat, &m).unwrap() {
                continue;
            }
            let what = || format!("{name} {}", cat.describe_sum(s));
            let seq = constructions::precover_sequence(&cat, &m)
                .map_err(|e| format!("{}: {e}", what()))?;
            check(seq.kernel_ext_orthogonal, || {
                format!("{}: kernel not Ext-orthogonal", what())
            })?;
            check(seq.m0_in_add && seq.m1_in_add, || {
                format!("{}: M₀ or M₁ outside add M", what())
            })?;
            check(seq.is_precover && seq.is_cover, || {
                format!("{}: not a cover", what())
            })?;
            let adp = constructions::verify_add_closure_identity(&cat, &m).unwrap();
            check(adp.verdict, || format!("{}: add-closure identity", what()))?;
            let cog = constructions::verify_image_cogenerator(&cat, &m).unwrap();
            check(cog.verdict, || format!("{}: image cogenerator", what()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} quasi-cotilting modules verified"))
}

fn criterion_8() -> Result<String, String> {
    let start = Instant::now();
    let mut covers = 0;
    for name in CORPUS {
        let cat = gf2(name);
        for s in subsets(&cat) {
            let m = cat.basic_module(s);
            if !predicates::quasi_cotilting_holds(&cat, &m).unwrap() {
                continue;
            }
            let class = classes::cogen_set(&cat, s);
            for t in cat.ids() {
                let c = approximations::cover(&cat, cat.module(t), class).map_err(|e| {
                    format!("{name} {} → {}: {e}", cat.describe_sum(s), cat.label(t))
                })?;
                check(c.minimal && c.exhaustive_minimality != Some(false), || {
                    format!(
                        "{name} {} → {}: not minimal",
                        cat.describe_sum(s),
                        cat.label(t)
                    )
                })?;
                covers += 1;
            }
        }
    }
    within(start.elapsed(), 60)?;
    Ok(format!("{covers} covers minimal in {:?}", start.elapsed()))
}

fn verdict_table(cat: &Catalog) -> Vec<[bool; 6]> {
    subsets(cat)
        .map(|s| {
            let m = cat.basic_module(s);
            [
                engine::is_quasi_cotilting(cat, &m).unwrap().verdict,
                engine::is_cotilting(cat, &m).unwrap().verdict,
                engine::is_costar(cat, &m).unwrap().verdict,
                engine::is_faithful(cat, &m).unwrap().verdict,
                engine::is_ext_injective_in_cogen(cat, &m).unwrap().verdict,
                classes::is_torsion_free_class(cat, classes::cogen_set(cat, s))
                    .unwrap()
                    .holds,
            ]
        })
        .collect()
}

fn criterion_9() -> Result<String, String> {
    let fields = [Field::Prime(2), Field::Prime(3), Field::Rational];
    let mut rows = 0;
    for name in ["a2", "a3", "a3source"] {
        let cats: Vec<Catalog> = fields.iter().map(|f| catalog(name, *f)).collect();
        let labels = |c: &Catalog| c.ids().map(|i| c.label(i).to_string()).collect::<Vec<_>>();
        let reference = verdict_table(&cats[0]);
        for (cat, f) in cats.iter().zip(fields).skip(1) {
            check(labels(cat) == labels(&cats[0]), || {
                format!("{name}: registry differs over {f:?}")
            })?;
            let table = verdict_table(cat);
            if let Some(k) = (0..table.len()).find(|&k| table[k] != reference[k]) {
                return Err(format!(
                    "{name} {} over {f:?}: {:?} vs {:?} over GF(2)",
                    cat.describe_sum(IndecSet(k as u64)),
                    table[k],
                    reference[k]
                ));
            }
        }
        rows += reference.len();
    }
    Ok(format!(
        "{rows} basic modules agree over GF(2), GF(3) and ℚ"
    ))
}

fn criterion_10() -> Result<String, String> {
    let cats: Vec<Catalog> = CORPUS.iter().map(|n| gf2(n)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x00c0_ffee);
    let mut pairs = 0;
    let mut attempts = 0;
    while pairs < 100 {
        attempts += 1;
        if attempts > 100_000 {
            return Err(format!("only {pairs} pairs generated"));
        }
        let cat = &cats[rng.next_u32() as usize % cats.len()];
        let support = IndecSet(rng.next_u64() & cat.all().bits());
        if support.is_empty() {
            continue;
        }
        let m = cat.basic_module(support);
        let cogen: Vec<IndecId> = classes::cogen_set(cat, support).iter().collect();
        let mut a = vec![0usize; cat.len()];
        for _ in 0..1 + rng.next_u32() % 2 {
            a[cogen[rng.next_u32() as usize % cogen.len()].0] += 1;
        }
        let a = cat.module_of(&Decomposition::from_multiplicities(a));
        let mut extra = || {
            let mult: Vec<usize> = cat
                .ids()
                .map(|i| {
                    if support.contains(i) {
                        (rng.next_u32() % 3) as usize
                    } else {
                        0
                    }
                })
                .collect();
            Decomposition::from_multiplicities(mult)
        };
        let (e1, e2) = (extra(), extra());
        let field = cat.field();
        let mut coeff = || field.from_i64(i64::from(rng.next_u32() % 5) - 2);
        let first = constructions::approximation_sequence(cat, &a, &m, &e1, &mut coeff)
            .map_err(|e| e.to_string())?;
        let second = constructions::approximation_sequence(cat, &a, &m, &e2, &mut coeff)
            .map_err(|e| e.to_string())?;
        let ok = constructions::verify_sequence_cancellation(cat, &m, &first, &second)
            .map_err(|e| e.to_string())?;
        check(ok, || {
            format!("cancellation failed for M = {}", cat.describe_sum(support))
        })?;
        pairs += 1;
    }
    Ok(format!("{pairs} pairs, 0 failures"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 10] = [
        (
            "A2 classes, quasi-cotilting and cotilting modules",
            criterion_1,
        ),
        ("A3 classes and bijection", criterion_2),
        ("k×k and dual numbers", criterion_3),
        ("quasi-cotilting characterizations agree", criterion_4),
        ("cotilting = faithful + quasi-cotilting", criterion_5),
        ("costar = relative cotilting", criterion_6),
        ("precover sequence and verifiers", criterion_7),
        ("covers exist and are minimal", criterion_8),
        ("cross-field consistency", criterion_9),
        ("cancellation of Hom-exact sequences", criterion_10),
    ];
    let mut stderr = std::io::stderr();
    let mut failed = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let line = match &outcome {
            Ok(detail) => format!("criterion {:>2} PASS  {title}: {detail}", i + 1),
            Err(why) => format!("criterion {:>2} FAIL  {title}: {why}", i + 1),
        };
        writeln!(stderr, "{line}").unwrap();
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
