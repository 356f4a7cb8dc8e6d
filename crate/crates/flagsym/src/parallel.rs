//! Census over a bounded rayon pool; the result is in canonical-code order
//! whatever the number of workers.

use flagsym_core::isoclass::enumerate_classes;
use flagsym_core::survey::{census_record, CensusRecord, FamilyIndex, RangeError, MAX_CENSUS};
use rayon::prelude::*;

/// `jobs = None` uses rayon's default pool size.
pub fn census(n: usize, jobs: Option<usize>) -> Result<Vec<CensusRecord>, RangeError> {
    if !(3..=MAX_CENSUS).contains(&n) {
        return Err(RangeError { what: "census", n, min: 3, max: MAX_CENSUS });
    }
    let classes = enumerate_classes(n).expect("range checked");
    let families = FamilyIndex::for_n(n);
    let run = || classes.par_iter().map(|c| census_record(*c, &families)).collect();
    Ok(match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    })
}
