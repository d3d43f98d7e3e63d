//! Existence of monomorphisms and epimorphisms inside a Hom space.
//!
//! Over GF(p) the Hom space is enumerated exhaustively within a budget, so
//! both answers are exact. Over ℚ maximal-rank elements are generic; random
//! integer combinations are tried on a widening grid, so positives are
//! certain and negatives are probabilistic.

use alloc::format;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::rep::{self, Morphism, Representation};

/// Enumeration bounds shared by the whole engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Elements of a Hom space enumerated when looking for a mono or epi.
    pub mono: u64,
    /// Elements of an Ext¹ space enumerated for middle terms.
    pub ext: u64,
    /// Elements of an endomorphism ideal enumerated for minimality.
    pub minimality: u64,
    /// Random trials over ℚ.
    pub rational_trials: u32,
    /// Representations enumerated by the brute-force registry builder.
    pub brute_force: u64,
    /// Largest registry accepted by subset enumerations.
    pub class_size: usize,
    /// Total multiplicity explored by the copresentation fallback.
    pub copres_multiplicity: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            mono: 1 << 20,
            ext: 1 << 16,
            minimality: 1 << 16,
            rational_trials: 64,
            brute_force: 1 << 22,
            class_size: 16,
            copres_multiplicity: 4,
        }
    }
}

/// Outcome of an existence search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchVerdict {
    pub exists: bool,
    /// False only for negatives obtained by sampling.
    pub certain: bool,
    /// Elements examined.
    pub trials: u64,
}

impl SearchVerdict {
    fn certain(exists: bool, trials: u64) -> Self {
        SearchVerdict {
            exists,
            certain: true,
            trials,
        }
    }
}

const SEED: u64 = 0x5eed_c0de;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Mono,
    Epi,
}

/// Is there a monomorphism `y → x`?
pub fn exists_mono(
    alg: &Algebra,
    y: &Representation,
    x: &Representation,
    budgets: &Budgets,
) -> Result<SearchVerdict> {
    if y.is_zero() {
        return Ok(SearchVerdict::certain(true, 0));
    }
    if y.dims().iter().zip(x.dims()).any(|(a, b)| a > b) {
        return Ok(SearchVerdict::certain(false, 0));
    }
    let basis = rep::hom_basis(alg, y, x)?;
    if !rep::common_kernel_is_zero(y, &basis) {
        return Ok(SearchVerdict::certain(false, 0));
    }
    search(alg, y, x, &basis, Kind::Mono, budgets)
}

/// Is there an epimorphism `x → y`?
pub fn exists_epi(
    alg: &Algebra,
    x: &Representation,
    y: &Representation,
    budgets: &Budgets,
) -> Result<SearchVerdict> {
    if y.is_zero() {
        return Ok(SearchVerdict::certain(true, 0));
    }
    if y.dims().iter().zip(x.dims()).any(|(a, b)| a > b) {
        return Ok(SearchVerdict::certain(false, 0));
    }
    let basis = rep::hom_basis(alg, x, y)?;
    let spans_everything = (0..alg.vertex_count()).all(|v| {
        let blocks: Vec<&Matrix> = basis.iter().map(|f| &f.components()[v]).collect();
        Matrix::hstack(alg.field(), y.dims()[v], &blocks).rank() == y.dims()[v]
    });
    if !spans_everything {
        return Ok(SearchVerdict::certain(false, 0));
    }
    search(alg, x, y, &basis, Kind::Epi, budgets)
}

fn has_kind(f: &Morphism, kind: Kind) -> bool {
    match kind {
        Kind::Mono => f.is_mono(),
        Kind::Epi => f.is_epi(),
    }
}

fn search(
    alg: &Algebra,
    source: &Representation,
    target: &Representation,
    basis: &[Morphism],
    kind: Kind,
    budgets: &Budgets,
) -> Result<SearchVerdict> {
    let field = alg.field();
    let d = basis.len();
    if basis.iter().any(|f| has_kind(f, kind)) {
        return Ok(SearchVerdict::certain(true, 1));
    }
    match field {
        Field::Prime(p) => {
            let total = u64::from(p)
                .checked_pow(d as u32)
                .filter(|&t| t <= budgets.mono)
                .ok_or_else(|| {
                    Error::capability(format!(
                        "Hom space of size {p}^{d} exceeds the search budget {}",
                        budgets.mono
                    ))
                })?;
            let mut coeffs: Vec<Scalar> = (0..d).map(|_| field.zero()).collect();
            for index in 1..total {
                let mut rest = index;
                for c in coeffs.iter_mut() {
                    *c = field.element(rest % u64::from(p));
                    rest /= u64::from(p);
                }
                let f = Morphism::combination(source, target, &coeffs, basis);
                if has_kind(&f, kind) {
                    return Ok(SearchVerdict::certain(true, index));
                }
            }
            Ok(SearchVerdict::certain(false, total))
        }
        Field::Rational => {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED);
            let trials = u64::from(budgets.rational_trials);
            for t in 0..trials {
                let radius = 1 + t as i64;
                let coeffs: Vec<Scalar> = (0..d)
                    .map(|_| {
                        let width = (2 * radius + 1) as u64;
                        field.from_i64((rng.next_u64() % width) as i64 - radius)
                    })
                    .collect();
                let f = Morphism::combination(source, target, &coeffs, basis);
                if has_kind(&f, kind) {
                    return Ok(SearchVerdict::certain(true, t + 1));
                }
            }
            Ok(SearchVerdict {
                exists: false,
                certain: false,
                trials,
            })
        }
    }
}

/// Enumerates every coefficient vector of `k^d` over GF(p), zero first,
/// calling `visit` until it returns `true`. Returns the number of vectors
/// visited, or a capability error past `budget`.
pub fn enumerate_vectors(
    field: Field,
    d: usize,
    budget: u64,
    mut visit: impl FnMut(&[Scalar]) -> Result<bool>,
) -> Result<u64> {
    let Field::Prime(p) = field else {
        return Err(Error::capability(
            "exhaustive enumeration needs a finite field",
        ));
    };
    let total = u64::from(p)
        .checked_pow(d as u32)
        .filter(|&t| t <= budget)
        .ok_or_else(|| Error::capability(format!("{p}^{d} vectors exceed the budget {budget}")))?;
    let mut coeffs: Vec<Scalar> = (0..d).map(|_| field.zero()).collect();
    for index in 0..total {
        let mut rest = index;
        for c in coeffs.iter_mut() {
            *c = field.element(rest % u64::from(p));
            rest /= u64::from(p);
        }
        if visit(&coeffs)? {
            return Ok(index + 1);
        }
    }
    Ok(total)
}
