//! Threaded versions of the subset sweeps. Each worker takes a contiguous
//! range; results are merged in canonical order, so output does not depend
//! on the number of workers.

use std::thread;

use cotilt_core::classes::{self, IndecSet, Lattice};
use cotilt_core::engine::bijection::{self, BijectionReport};
use cotilt_core::{Catalog, Result};

fn split(total: u64, jobs: usize) -> Vec<(u64, u64)> {
    let jobs = (jobs.max(1) as u64).min(total.max(1));
    let chunk = total.div_ceil(jobs);
    (0..jobs)
        .map(|j| (j * chunk, ((j + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

fn sweep<F>(total: u64, jobs: usize, work: F) -> Result<Vec<IndecSet>>
where
    F: Fn(u64, u64) -> Result<Vec<IndecSet>> + Sync,
{
    let ranges = split(total, jobs);
    let work = &work;
    let parts: Vec<Result<Vec<IndecSet>>> = thread::scope(|s| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| s.spawn(move || work(lo, hi)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

pub fn torsion_free_classes(cat: &Catalog, jobs: usize) -> Result<Lattice> {
    let total = classes::subset_count(cat)?;
    let found = sweep(total, jobs, |lo, hi| {
        classes::torsion_free_in_gray_range(cat, lo, hi)
    })?;
    classes::assemble_lattice(cat, found)
}

pub fn bijection(cat: &Catalog, jobs: usize) -> Result<BijectionReport> {
    let total = classes::subset_count(cat)?;
    let qct = sweep(total, jobs, |lo, hi| {
        bijection::quasi_cotilting_in_range(cat, lo, hi)
    })?;
    let lattice = torsion_free_classes(cat, jobs)?;
    bijection::assemble_bijection(cat, qct, lattice)
}
