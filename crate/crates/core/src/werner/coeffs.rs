//! Twirled products and the two partial-trace coefficient formulas.

use num_bigint::BigInt;
use num_traits::{pow, Zero};

use super::{check_in_par, WernerState};
use crate::error::{Error, Result};
use crate::lr::lr_weighted_skew_sum;
use crate::numeric::{clear_denominators, Rational};
use crate::partitions::{dim_sn, enumerate_partitions, falling_factorial, Partition};
use crate::symfunc::{schur_eval_int, shifted_schur_at, Spectrum};

/// Which formula computes partial-trace coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// `α_μ = dim V_μ · s*_μ(λ) / (n↓k)`.
    Shifted,
    /// `α_μ = dim V_μ · Σ_ν c^λ_{μν} dim V_ν / dim V_λ`.
    Lr,
}

/// `f^k(r)`: the Werner state `𝕋^k(σ^{⊗k})` for a state σ with spectrum `r`,
/// with weights `w_λ = dim V_λ · s_λ(r)`.
pub fn twirled_product(r: &Spectrum, k: usize, d: usize) -> Result<WernerState> {
    if r.dim() != d {
        return Err(Error::DimensionMismatch(format!(
            "spectrum has length {}, expected {d}",
            r.dim()
        )));
    }
    let (v, scale) = clear_denominators(r.entries());
    let den = pow(scale, k);
    let weights = enumerate_partitions(k, d)
        .iter()
        .map(|lambda| {
            let num = BigInt::from(dim_sn(lambda)) * schur_eval_int(lambda, &v);
            Rational::new(num, den.clone())
        })
        .collect();
    WernerState::from_weights(k, d, weights).map_err(|e| Error::Invariant(format!("twirled product: {e}")))
}

fn check_trace_args(lambda: &Partition, n: usize, k: usize, d: usize) -> Result<()> {
    check_in_par(lambda, n, d)?;
    if k > n {
        return Err(Error::Domain(format!("cannot keep {k} of {n} systems")));
    }
    Ok(())
}

/// Coefficients of `tr_{n−k} ρ^n_λ` in the `ρ^k_μ` basis via shifted Schur
/// functions.
pub fn partial_trace_coeffs_shifted(lambda: &Partition, n: usize, k: usize, d: usize) -> Result<WernerState> {
    check_trace_args(lambda, n, k, d)?;
    let ff = falling_factorial(n as i64, k);
    let weights = enumerate_partitions(k, d)
        .iter()
        .map(|mu| {
            if !lambda.contains(mu) {
                return Rational::zero();
            }
            let num = BigInt::from(dim_sn(mu)) * shifted_schur_at(mu, lambda, d);
            Rational::new(num, ff.clone())
        })
        .collect();
    WernerState::from_weights(k, d, weights).map_err(|e| Error::Invariant(format!("shifted route: {e}")))
}

/// Coefficients of `tr_{n−k} ρ^n_λ` via Littlewood–Richardson coefficients.
pub fn partial_trace_coeffs_lr(lambda: &Partition, n: usize, k: usize, d: usize) -> Result<WernerState> {
    check_trace_args(lambda, n, k, d)?;
    let dim_lambda = BigInt::from(dim_sn(lambda));
    let weights = enumerate_partitions(k, d)
        .iter()
        .map(|mu| {
            if !lambda.contains(mu) {
                return Rational::zero();
            }
            let num = BigInt::from(dim_sn(mu)) * BigInt::from(lr_weighted_skew_sum(lambda, mu));
            Rational::new(num, dim_lambda.clone())
        })
        .collect();
    WernerState::from_weights(k, d, weights).map_err(|e| Error::Invariant(format!("LR route: {e}")))
}

pub fn partial_trace_coeffs_with(route: Route, lambda: &Partition, n: usize, k: usize, d: usize) -> Result<WernerState> {
    match route {
        Route::Shifted => partial_trace_coeffs_shifted(lambda, n, k, d),
        Route::Lr => partial_trace_coeffs_lr(lambda, n, k, d),
    }
}

/// Largest `n` at which debug builds also run the LR route and compare.
const CROSS_CHECK_MAX_N: usize = 12;

/// Default route (shifted). Debug builds cross-check against the LR route for
/// small `n`.
pub fn partial_trace_coeffs(lambda: &Partition, n: usize, k: usize, d: usize) -> Result<WernerState> {
    let w = partial_trace_coeffs_shifted(lambda, n, k, d)?;
    if cfg!(debug_assertions) && n <= CROSS_CHECK_MAX_N {
        let lr = partial_trace_coeffs_lr(lambda, n, k, d)?;
        if lr != w {
            return Err(Error::Invariant(format!("partial-trace routes disagree at {lambda}, k={k}")));
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use proptest::prelude::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn spec(v: &[(i64, i64)]) -> Spectrum {
        Spectrum::new(v.iter().map(|&(a, b)| rat(a, b)).collect()).unwrap()
    }

    fn weights(w: &WernerState) -> Vec<Rational> {
        w.values().cloned().collect()
    }

    #[test]
    fn vertex_images() {
        let f = |q| weights(&twirled_product(&Spectrum::vertex(q, 3), 3, 3).unwrap());
        assert_eq!(f(1), vec![rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(f(2), vec![rat(1, 2), rat(1, 2), rat(0, 1)]);
        assert_eq!(f(3), vec![rat(10, 27), rat(16, 27), rat(1, 27)]);
        assert!(twirled_product(&Spectrum::vertex(1, 3), 3, 2).is_err());
        assert!(Spectrum::new(vec![rat(1, 2), rat(1, 3)]).is_err());
    }

    #[test]
    fn partial_trace_examples() {
        for route in [Route::Shifted, Route::Lr] {
            let w = partial_trace_coeffs_with(route, &p(&[2, 1]), 3, 2, 2).unwrap();
            assert_eq!(weights(&w), vec![rat(1, 2), rat(1, 2)]);
            let w = partial_trace_coeffs_with(route, &p(&[2]), 2, 1, 2).unwrap();
            assert_eq!(weights(&w), vec![rat(1, 1)]);
            let w = partial_trace_coeffs_with(route, &p(&[3, 2, 1]), 6, 6, 3).unwrap();
            assert_eq!(w.weight(&p(&[3, 2, 1])), rat(1, 1));
            let w = partial_trace_coeffs_with(route, &p(&[3, 2, 1]), 6, 0, 3).unwrap();
            assert_eq!(w.weight(&Partition::empty()), rat(1, 1));
            assert!(partial_trace_coeffs_with(route, &p(&[2, 1]), 3, 2, 1).is_err());
            assert!(partial_trace_coeffs_with(route, &p(&[2, 1]), 4, 2, 2).is_err());
            assert!(partial_trace_coeffs_with(route, &p(&[2, 1]), 3, 4, 2).is_err());
        }
    }

    #[test]
    fn routes_agree() {
        for n in 0..=8 {
            for d in 1..=4 {
                for lambda in enumerate_partitions(n, d) {
                    for k in 0..=n {
                        assert_eq!(
                            partial_trace_coeffs_shifted(&lambda, n, k, d).unwrap(),
                            partial_trace_coeffs_lr(&lambda, n, k, d).unwrap(),
                            "{lambda} k={k} d={d}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn semigroup() {
        for n in 0..=8 {
            for lambda in enumerate_partitions(n, 3) {
                for k in 0..=n {
                    let step = partial_trace_coeffs(&lambda, n, k, 3).unwrap();
                    for j in 0..=k {
                        let direct = partial_trace_coeffs(&lambda, n, j, 3).unwrap();
                        assert_eq!(step.trace_down(j).unwrap(), direct, "{lambda} {k} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn one_system_marginal_is_normalized_rows() {
        for lambda in enumerate_partitions(7, 4) {
            let w = partial_trace_coeffs(&lambda, 7, 1, 4).unwrap();
            let r = Spectrum::from_partition(&lambda, 4).unwrap();
            assert_eq!(w, twirled_product(&r, 1, 4).unwrap());
        }
    }

    #[test]
    fn symmetric_partition_traces_to_symmetric() {
        for k in 0..=6 {
            let w = partial_trace_coeffs(&p(&[6]), 6, k, 3).unwrap();
            assert_eq!(w.weight(&Partition::row_shape(k)), rat(1, 1));
        }
        let w = twirled_product(&spec(&[(1, 1), (0, 1)]), 4, 2).unwrap();
        assert_eq!(w.weight(&p(&[4])), rat(1, 1));
    }

    proptest! {
        #[test]
        fn twirl_is_permutation_invariant(raw in proptest::collection::vec(0i64..20, 3), k in 0usize..5) {
            let total: i64 = raw.iter().sum();
            prop_assume!(total > 0);
            let entries: Vec<Rational> = raw.iter().map(|&v| rat(v, total)).collect();
            let sorted = Spectrum::new(entries.clone()).unwrap();
            let mut rev = entries.clone();
            rev.reverse();
            let shuffled = Spectrum::unsorted(rev).unwrap();
            prop_assert_eq!(twirled_product(&sorted, k, 3).unwrap(), twirled_product(&shuffled, k, 3).unwrap());
        }
    }
}
