//! Fixtures shared by the benchmarks.

use definetti_core::numeric::rat;
use definetti_core::{Partition, Spectrum};

/// `(λ, n)` with rows proportional to `(1/2, 1/3, 1/6)`.
pub fn scaled_diagram(n: usize) -> (Partition, usize) {
    let mut rows = vec![n / 2, n / 3, n - n / 2 - n / 3];
    rows.sort_unstable_by(|a, b| b.cmp(a));
    (Partition::new(rows).expect("nonincreasing"), n)
}

pub fn generic_spectrum() -> Spectrum {
    Spectrum::new(vec![rat(1, 2), rat(1, 3), rat(1, 6)]).expect("normalized")
}
