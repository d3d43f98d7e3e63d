//! Classes of modules, represented by the indecomposables they contain.
//!
//! A class is closed under finite direct sums and summands, so it is the
//! set of its indecomposable members and a module belongs to it when every
//! summand does. Sets are `u64` bitmasks over registry ids.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::catalog::{Catalog, Decomposition};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::homological;
use crate::matrix::{self, Matrix};
use crate::registry::IndecId;
use crate::rep::{self, Representation};

/// A set of registered indecomposables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndecSet(pub u64);

impl IndecSet {
    pub const fn empty() -> IndecSet {
        IndecSet(0)
    }

    pub fn all(n: usize) -> IndecSet {
        if n >= 64 {
            IndecSet(u64::MAX)
        } else {
            IndecSet((1u64 << n) - 1)
        }
    }

    pub fn from_ids(ids: impl IntoIterator<Item = IndecId>) -> IndecSet {
        IndecSet(ids.into_iter().fold(0, |acc, i| acc | (1u64 << i.0)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, id: IndecId) -> bool {
        self.0 & (1u64 << id.0) != 0
    }

    pub fn with(self, id: IndecId) -> IndecSet {
        IndecSet(self.0 | (1u64 << id.0))
    }

    pub fn without(self, id: IndecId) -> IndecSet {
        IndecSet(self.0 & !(1u64 << id.0))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: IndecSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: IndecSet) -> IndecSet {
        IndecSet(self.0 | other.0)
    }

    pub fn intersection(self, other: IndecSet) -> IndecSet {
        IndecSet(self.0 & other.0)
    }

    pub fn difference(self, other: IndecSet) -> IndecSet {
        IndecSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = IndecId> {
        (0..64)
            .filter(move |&i| self.0 & (1u64 << i) != 0)
            .map(IndecId)
    }
}

impl fmt::Display for IndecSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", i.0)?;
        }
        write!(f, "}}")
    }
}

/// Closure properties, each verified on indecomposables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClosureFlags {
    pub submodule_closed: bool,
    pub extension_closed: bool,
    pub quotient_closed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModuleClass {
    pub members: IndecSet,
    pub flags: ClosureFlags,
}

impl ModuleClass {
    pub fn new(cat: &Catalog, members: IndecSet) -> Result<ModuleClass> {
        let tf = is_torsion_free_class(cat, members)?;
        let submodule_closed = !matches!(tf.violation, Some(Violation::Submodule { .. }))
            && first_submodule_violation(cat, members).is_none();
        let extension_closed = first_extension_violation(cat, members).is_none();
        let quotient_closed = cat.ids().filter(|&x| members.contains(x)).all(|x| {
            cat.ids()
                .all(|y| members.contains(y) || !cat.epi(x, y).exists)
        });
        Ok(ModuleClass {
            members,
            flags: ClosureFlags {
                submodule_closed,
                extension_closed,
                quotient_closed,
            },
        })
    }

    /// Whether every summand of `m` is a member.
    pub fn contains_module(&self, cat: &Catalog, m: &Representation) -> Result<bool> {
        Ok(cat.decompose(m)?.support().is_subset(self.members))
    }
}

/// `Cogen(⊕_{s ∈ support} X_s)` on indecomposables: `N` belongs iff the
/// common kernel of all maps `N → X_s` vanishes.
pub fn cogen_set(cat: &Catalog, support: IndecSet) -> IndecSet {
    IndecSet::from_ids(cat.ids().filter(|&n| {
        let maps: Vec<_> = support
            .iter()
            .flat_map(|s| cat.hom(n, s).iter().cloned())
            .collect();
        rep::common_kernel_is_zero(cat.module(n), &maps)
    }))
}

pub fn cogen_class(cat: &Catalog, m: &Representation) -> Result<ModuleClass> {
    let support = cat.decompose(m)?.support();
    ModuleClass::new(cat, cogen_set(cat, support))
}

/// `N ∈ Cogen M` by the evaluation map of an arbitrary `N` into `M`.
pub fn in_cogen(cat: &Catalog, n: &Representation, m: &Representation) -> Result<bool> {
    Ok(rep::evaluation_map(cat.algebra(), n, m)?.is_mono())
}

/// Whether the trace of `add(class)` in `n` is all of `n`, i.e. whether `n`
/// is a quotient of a module of `add(class)`.
pub fn trace_covers(cat: &Catalog, n: &Representation, class: IndecSet) -> Result<bool> {
    let alg = cat.algebra();
    let mut maps = Vec::new();
    for t in class.iter() {
        maps.extend(rep::hom_basis(alg, cat.module(t), n)?);
    }
    Ok(images_span(cat, n, &maps))
}

fn images_span(cat: &Catalog, n: &Representation, maps: &[rep::Morphism]) -> bool {
    (0..cat.algebra().vertex_count()).all(|v| {
        let d = n.dims()[v];
        if d == 0 {
            return true;
        }
        let spans: Vec<Matrix> = maps.iter().map(|f| f.components()[v].clone()).collect();
        if spans.is_empty() {
            return false;
        }
        matrix::subspace_sum(&spans)
            .map(|s| s.cols() == d)
            .unwrap_or(false)
    })
}

/// Table route of [`trace_covers`] for a registered indecomposable.
pub fn trace_covers_id(cat: &Catalog, n: IndecId, class: IndecSet) -> bool {
    let maps: Vec<_> = class
        .iter()
        .flat_map(|t| cat.hom(t, n).iter().cloned())
        .collect();
    images_span(cat, cat.module(n), &maps)
}

/// `N ∈ Fac(Cogen M)`.
pub fn fac_cogen_membership(cat: &Catalog, n: &Representation, m: &Representation) -> Result<bool> {
    let class = cogen_set(cat, cat.decompose(m)?.support());
    trace_covers(cat, n, class)
}

/// `Ext¹(N, M) = 0`.
pub fn perp_ext_membership(cat: &Catalog, n: &Representation, m: &Representation) -> Result<bool> {
    Ok(homological::ext1(cat.algebra(), n, m)?.is_zero())
}

/// `Hom(N, M) = 0`.
pub fn hom_zero_membership(cat: &Catalog, n: &Representation, m: &Representation) -> Result<bool> {
    Ok(rep::hom_dim(cat.algebra(), n, m)? == 0)
}

/// Indecomposables `N` with `Ext¹(N, X_s) = 0` for every `s` in `support`.
pub fn perp_ext_set(cat: &Catalog, support: IndecSet) -> IndecSet {
    IndecSet::from_ids(
        cat.ids()
            .filter(|&n| support.iter().all(|s| cat.ext_dim(n, s) == 0)),
    )
}

/// Indecomposables `N` with `Hom(N, X_s) = 0` for every `s` in `support`.
pub fn hom_zero_set(cat: &Catalog, support: IndecSet) -> IndecSet {
    IndecSet::from_ids(
        cat.ids()
            .filter(|&n| support.iter().all(|s| cat.hom_dim(n, s) == 0)),
    )
}

/// Indecomposables `N` with `Hom(X_s, N) = 0` for every `s` in `set`.
pub fn hom_zero_from_set(cat: &Catalog, set: IndecSet) -> IndecSet {
    IndecSet::from_ids(
        cat.ids()
            .filter(|&n| set.iter().all(|s| cat.hom_dim(s, n) == 0)),
    )
}

/// `(°C)°`: the smallest class of the form `T°` containing `C`. A class of
/// finite-dimensional modules is torsion-free iff it equals this.
pub fn double_orthogonal(cat: &Catalog, set: IndecSet) -> IndecSet {
    hom_zero_from_set(cat, hom_zero_set(cat, set))
}

/// Why a set fails to be a torsion-free class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `sub` embeds in the member `of` but is not a member.
    Submodule { sub: IndecId, of: IndecId },
    /// A nonsplit `0 → start → E → end → 0` with `E` leaving the class.
    Extension {
        end: IndecId,
        start: IndecId,
        class: Vec<Scalar>,
        middle: Decomposition,
    },
}

impl Violation {
    pub fn describe(&self, cat: &Catalog) -> alloc::string::String {
        match self {
            Violation::Submodule { sub, of } => {
                format!(
                    "{} embeds in {} but is not a member",
                    cat.label(*sub),
                    cat.label(*of)
                )
            }
            Violation::Extension {
                end,
                start,
                class,
                middle,
            } => {
                let coeffs: Vec<alloc::string::String> =
                    class.iter().map(|c| format!("{c}")).collect();
                format!(
                    "extension 0 -> {} -> {} -> {} -> 0 with class ({}) leaves the class",
                    cat.label(*start),
                    middle.describe(cat.registry()),
                    cat.label(*end),
                    coeffs.join(",")
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionFreeVerdict {
    pub holds: bool,
    pub violation: Option<Violation>,
    /// False when a negative search over ℚ or a sampled Ext space was used.
    pub exact: bool,
}

fn first_submodule_violation(cat: &Catalog, set: IndecSet) -> Option<Violation> {
    for of in set.iter() {
        for sub in cat.ids() {
            if !set.contains(sub) && cat.mono(sub, of).exists {
                return Some(Violation::Submodule { sub, of });
            }
        }
    }
    None
}

fn first_extension_violation(cat: &Catalog, set: IndecSet) -> Option<Violation> {
    for end in set.iter() {
        for start in set.iter() {
            for (class, middle) in &cat.middle_terms(end, start).terms {
                if !middle.support().is_subset(set) {
                    return Some(Violation::Extension {
                        end,
                        start,
                        class: class.clone(),
                        middle: middle.clone(),
                    });
                }
            }
        }
    }
    None
}

/// Closed under submodules and extensions, checked on indecomposables
/// through the mono and middle-term tables.
pub fn is_torsion_free_class(cat: &Catalog, set: IndecSet) -> Result<TorsionFreeVerdict> {
    if !set.is_subset(cat.all()) {
        return Err(Error::input("set mentions ids outside the registry"));
    }
    let exact = cat.tables_exact();
    let violation =
        first_submodule_violation(cat, set).or_else(|| first_extension_violation(cat, set));
    Ok(TorsionFreeVerdict {
        holds: violation.is_none(),
        violation,
        exact,
    })
}

/// Least set containing `seed` closed under indecomposable submodules of
/// members and summands of middle terms between members.
pub fn class_closure_torsion_free(cat: &Catalog, seed: IndecSet) -> Result<ModuleClass> {
    let mut set = seed;
    loop {
        let mut next = set;
        for of in set.iter() {
            for sub in cat.ids() {
                if cat.mono(sub, of).exists {
                    next = next.with(sub);
                }
            }
        }
        for end in set.iter() {
            for start in set.iter() {
                for (_, middle) in &cat.middle_terms(end, start).terms {
                    next = next.union(middle.support());
                }
            }
        }
        if next == set {
            break;
        }
        set = next;
    }
    let verdict = is_torsion_free_class(cat, set)?;
    if !verdict.holds {
        return Err(Error::inconsistency(
            "closure of a seed is not torsion-free",
        ));
    }
    ModuleClass::new(cat, set)
}

/// The pair `(°M, Cogen M)`, verified to be a torsion pair on
/// indecomposables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionPair {
    pub torsion: IndecSet,
    pub torsion_free: IndecSet,
}

pub fn torsion_pair_from_module(cat: &Catalog, m: &Representation) -> Result<TorsionPair> {
    let support = cat.decompose(m)?.support();
    let cogen = cogen_set(cat, support);
    if let Some(n) = cogen
        .iter()
        .find(|&n| support.iter().any(|s| cat.ext_dim(n, s) != 0))
    {
        return Err(Error::precondition(format!(
            "M is not Ext-injective in Cogen M: Ext¹({}, M) ≠ 0",
            cat.label(n)
        )));
    }
    let torsion = hom_zero_set(cat, support);
    let orthogonal = torsion
        .iter()
        .all(|x| cogen.iter().all(|y| cat.hom_dim(x, y) == 0));
    if !orthogonal
        || hom_zero_set(cat, cogen) != torsion
        || hom_zero_from_set(cat, torsion) != cogen
    {
        return Err(Error::inconsistency(format!(
            "({}, {}) is not a torsion pair",
            cat.describe_set(torsion),
            cat.describe_set(cogen)
        )));
    }
    Ok(TorsionPair {
        torsion,
        torsion_free: cogen,
    })
}

/// Torsion-free classes ordered by size then members, with the covering
/// relations of inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    pub classes: Vec<IndecSet>,
    /// `(i, j)`: class `i` is covered by class `j`.
    pub edges: Vec<(usize, usize)>,
}

fn check_size(cat: &Catalog) -> Result<()> {
    if cat.len() > cat.budgets().class_size {
        return Err(Error::capability(format!(
            "{} indecomposables exceed the subset enumeration bound {}",
            cat.len(),
            cat.budgets().class_size
        )));
    }
    Ok(())
}

/// Number of subsets in a Gray-code sweep over the registry.
pub fn subset_count(cat: &Catalog) -> Result<u64> {
    check_size(cat)?;
    Ok(1u64 << cat.len())
}

/// The `k`-th subset of the reflected Gray code.
pub fn gray_subset(k: u64) -> IndecSet {
    IndecSet(k ^ (k >> 1))
}

/// Torsion-free subsets among Gray-code positions `lo..hi`, verified
/// against the double-orthogonal characterization.
pub fn torsion_free_in_gray_range(cat: &Catalog, lo: u64, hi: u64) -> Result<Vec<IndecSet>> {
    check_size(cat)?;
    let mut out = Vec::new();
    for k in lo..hi {
        let set = gray_subset(k);
        let verdict = is_torsion_free_class(cat, set)?;
        let by_hom = double_orthogonal(cat, set) == set;
        if verdict.holds != by_hom {
            return Err(Error::inconsistency(format!(
                "{}: closure tables say {}, Hom orthogonality says {}",
                cat.describe_set(set),
                verdict.holds,
                by_hom
            )));
        }
        if verdict.holds {
            out.push(set);
        }
    }
    Ok(out)
}

/// Sorts classes and computes the Hasse diagram; checks that the result is
/// closed under intersection.
pub fn assemble_lattice(cat: &Catalog, mut classes: Vec<IndecSet>) -> Result<Lattice> {
    classes.sort_by_key(|s| (s.len(), s.bits()));
    classes.dedup();
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            if !classes.contains(&a.intersection(*b)) {
                return Err(Error::inconsistency(format!(
                    "torsion-free classes {} and {} meet outside the list",
                    cat.describe_set(*a),
                    cat.describe_set(*b)
                )));
            }
        }
    }
    let mut edges = Vec::new();
    for (i, a) in classes.iter().enumerate() {
        for (j, b) in classes.iter().enumerate() {
            if a == b || !a.is_subset(*b) {
                continue;
            }
            let between = classes
                .iter()
                .any(|c| c != a && c != b && a.is_subset(*c) && c.is_subset(*b));
            if !between {
                edges.push((i, j));
            }
        }
    }
    Ok(Lattice { classes, edges })
}

pub fn enumerate_torsion_free_classes(cat: &Catalog) -> Result<Lattice> {
    let total = subset_count(cat)?;
    let classes = torsion_free_in_gray_range(cat, 0, total)?;
    assemble_lattice(cat, classes)
}
