//! Trace distances between Werner states and from reduced Werner states to
//! twirled products.

use num_bigint::{BigInt, BigUint};
use num_traits::{pow, One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{check_in_par, partial_trace_coeffs_shifted, twirled_product, WernerState};
use crate::error::{Error, Result};
use crate::numeric::{clear_denominators, Rational};
use crate::partitions::{count_partitions, dim_sn, dim_ud, enumerate_partitions, falling_factorial, Partition};
use crate::symfunc::{schur_eval, schur_eval_int, schur_eval_with, shifted_schur_at, Spectrum};

/// `½ Σ_μ |w1_μ − w2_μ|`; the blocks have orthogonal supports.
pub fn trace_distance(w1: &WernerState, w2: &WernerState) -> Result<Rational> {
    if w1.k() != w2.k() || w1.d() != w2.d() {
        return Err(Error::DimensionMismatch(format!(
            "Werner states on (k,d)=({},{}) and ({},{})",
            w1.k(),
            w1.d(),
            w2.k(),
            w2.d()
        )));
    }
    let total: Rational = w1.values().zip(w2.values()).map(|(a, b)| (a - b).abs()).sum();
    Ok(total / Rational::from_integer(2.into()))
}

const CROSS_CHECK_MAX_N: usize = 16;

/// `‖tr_{n−k} ρ^n_λ − f^k(r)‖`, by the closed sum
/// `½ Σ_μ dim V_μ |s*_μ(λ)/(n↓k) − s_μ(r)|` with `d = r.dim()`.
pub fn distance_to_twirled(lambda: &Partition, n: usize, k: usize, r: &Spectrum) -> Result<Rational> {
    let d = r.dim();
    check_in_par(lambda, n, d)?;
    if k > n {
        return Err(Error::Domain(format!("cannot keep {k} of {n} systems")));
    }
    let ff = Rational::from_integer(falling_factorial(n as i64, k));
    let total: Rational = enumerate_partitions(k, d)
        .iter()
        .map(|mu| {
            let a = if lambda.contains(mu) {
                Rational::from_integer(shifted_schur_at(mu, lambda, d)) / &ff
            } else {
                Rational::zero()
            };
            let b = schur_eval(mu, r.entries());
            (a - b).abs() * Rational::from_integer(dim_sn(mu).into())
        })
        .sum();
    let value = total / Rational::from_integer(2.into());
    if cfg!(debug_assertions) && n <= CROSS_CHECK_MAX_N {
        let other = trace_distance(
            &partial_trace_coeffs_shifted(lambda, n, k, d)?,
            &twirled_product(r, k, d)?,
        )?;
        if other != value {
            return Err(Error::Invariant(format!("distance formulas disagree at {lambda}, k={k}")));
        }
    }
    Ok(value)
}

/// Distance from `w = a ρ_(2) + b ρ_(1²)` to the product states among
/// two-system Werner states: `max(0, b − ½(1 − 1/d))`.
pub fn distance_to_products_k2(w: &WernerState) -> Result<Rational> {
    if w.k() != 2 {
        return Err(Error::Domain(format!("expected k = 2, got k = {}", w.k())));
    }
    let b = w.weight(&Partition::new(vec![1, 1])?);
    let d = Rational::from_integer(w.d().into());
    let edge = (Rational::one() - d.recip()) / Rational::from_integer(2.into());
    let gap = b - edge;
    Ok(if gap.is_positive() { gap } else { Rational::zero() })
}

/// `½ Σ_μ dim V_μ |s*_μ(nλ̄)/(n↓k) − s*_μ(mλ̄)/(m↓k)|`: the distance between
/// the `k`-marginals of `ρ^n_{nλ̄}` and `ρ^m_{mλ̄}`.
pub fn exchange_distance(lambda_bar: &Spectrum, n: usize, m: usize, k: usize) -> Result<Rational> {
    if !(m >= n && n >= k) {
        return Err(Error::Domain(format!("need m ≥ n ≥ k, got m={m}, n={n}, k={k}")));
    }
    let d = lambda_bar.dim();
    let small = scaled_partition(lambda_bar, n)?;
    let large = scaled_partition(lambda_bar, m)?;
    let a = partial_trace_coeffs_shifted(&small, n, k, d)?;
    let b = partial_trace_coeffs_shifted(&large, m, k, d)?;
    trace_distance(&a, &b)
}

/// `n·r` as a partition; errors unless every entry is an integer and the
/// entries are nonincreasing.
pub fn scaled_partition(r: &Spectrum, n: usize) -> Result<Partition> {
    if !r.is_canonical() {
        return Err(Error::Domain(format!("{r} is not sorted nonincreasing")));
    }
    let scale = Rational::from_integer(n.into());
    let rows = r
        .entries()
        .iter()
        .map(|x| {
            let v = x * &scale;
            if !v.is_integer() {
                return Err(Error::Domain(format!("{n}·{r} is not an integer partition")));
            }
            v.to_integer()
                .to_usize()
                .ok_or_else(|| Error::Domain(format!("row {v} out of range")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(rows)
}

/// Precomputed `dim V_μ · s_μ(v)` over the barycentric lattice
/// `{v/R : v ∈ Par(R,d)}`, reused across targets.
///
/// Points are ordered lexicographically increasing as padded vectors, so
/// `(1,0,…,0)` comes last; ties go to the lowest index.
#[derive(Clone, Debug)]
pub struct TwirlGrid {
    k: usize,
    d: usize,
    resolution: usize,
    points: Vec<Partition>,
    // Row-major: points × Par(k,d); exactly one representation is filled.
    values: Vec<BigInt>,
    small: Option<Vec<i128>>,
    max_value: BigInt,
    width: usize,
}

/// Result of a grid search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridMinimum {
    pub index: usize,
    pub point: Spectrum,
    pub value: Rational,
}

const I128_BUDGET: u32 = 120;

/// Largest lattice accepted by [`TwirlGrid::new`].
pub const MAX_GRID_POINTS: usize = 1 << 23;

impl TwirlGrid {
    pub fn new(k: usize, d: usize, resolution: usize) -> Result<Self> {
        if resolution < 1 || d < 1 {
            return Err(Error::Domain("grid needs resolution ≥ 1 and d ≥ 1".into()));
        }
        let count = count_partitions(resolution, d);
        if count > BigUint::from(MAX_GRID_POINTS) {
            return Err(Error::SizeCap(format!("grid has {count} points, cap is {MAX_GRID_POINTS}")));
        }
        let mut points = enumerate_partitions(resolution, d);
        points.reverse();
        let index = enumerate_partitions(k, d);
        let dims: Vec<BigInt> = index.iter().map(|mu| BigInt::from(dim_sn(mu))).collect();
        // dim V_μ · s_μ(v) ≤ dim V_μ · dim U_μ · R^k.
        let bound = index
            .iter()
            .zip(&dims)
            .map(|(mu, dv)| dv * BigInt::from(dim_ud(mu, d)))
            .max()
            .unwrap_or_else(BigInt::one)
            * pow(BigInt::from(resolution), k);
        let fits = bound.bits() < I128_BUDGET as u64;
        let width = index.len();
        let (values, small) = if fits {
            let dims_small: Vec<i128> = dims.iter().map(|v| v.to_i128().expect("fits")).collect();
            let small: Vec<i128> = points
                .par_iter()
                .flat_map_iter(|v| {
                    let x: Vec<i128> = v.padded(d).into_iter().map(|e| e as i128).collect();
                    index
                        .iter()
                        .zip(&dims_small)
                        .map(move |(mu, dv)| dv * schur_eval_with::<i128>(mu, &x))
                        .collect::<Vec<_>>()
                })
                .collect();
            (Vec::new(), Some(small))
        } else {
            let values: Vec<BigInt> = points
                .par_iter()
                .flat_map_iter(|v| {
                    let x: Vec<BigInt> = v.padded(d).into_iter().map(BigInt::from).collect();
                    index
                        .iter()
                        .zip(&dims)
                        .map(move |(mu, dv)| dv * schur_eval_int(mu, &x))
                        .collect::<Vec<_>>()
                })
                .collect();
            (values, None)
        };
        let max_value = match &small {
            Some(v) => BigInt::from(v.iter().map(|x| x.abs()).max().unwrap_or(0)),
            None => values.iter().map(|v| v.abs()).max().unwrap_or_default(),
        };
        Ok(TwirlGrid {
            k,
            d,
            resolution,
            points,
            values,
            small,
            max_value,
            width,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// The `i`-th lattice point as a spectrum.
    pub fn point(&self, i: usize) -> Spectrum {
        Spectrum::from_partition(&self.points[i], self.d).expect("lattice point")
    }

    /// The grid point nearest to `target` in trace distance after twirling.
    pub fn minimize(&self, target: &WernerState) -> Result<GridMinimum> {
        if target.k() != self.k || target.d() != self.d {
            return Err(Error::DimensionMismatch(format!(
                "grid is for (k,d)=({},{}), target is ({},{})",
                self.k,
                self.d,
                target.k(),
                target.d()
            )));
        }
        // Distance at v equals Σ_μ |T_μ R^k − D val_μ| / (2 D R^k), where the
        // target weights are T_μ / D.
        let t: Vec<Rational> = target.values().cloned().collect();
        let (tn, den) = clear_denominators(&t);
        let rk = pow(BigInt::from(self.resolution), self.k);
        let a: Vec<BigInt> = tn.iter().map(|v| v * &rk).collect();
        let max_val = &self.max_value;
        let max_a = a.iter().map(|v| v.abs()).max().unwrap_or_default();
        let bound = (max_a + &den * max_val) * BigInt::from(self.width.max(1));
        let (index, score) = match (&self.small, bound.bits() < I128_BUDGET as u64) {
            (Some(small), true) => {
                let a: Vec<i128> = a.iter().map(|v| v.to_i128().expect("fits")).collect();
                let den = den.to_i128().expect("fits");
                let (i, s) = small
                    .par_chunks(self.width.max(1))
                    .enumerate()
                    .map(|(i, row)| {
                        let s: i128 = row.iter().zip(&a).map(|(v, t)| (t - den * v).abs()).sum();
                        (i, s)
                    })
                    .min_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)))
                    .expect("nonempty grid");
                (i, BigInt::from(s))
            }
            (Some(small), false) => small
                .par_chunks(self.width.max(1))
                .enumerate()
                .map(|(i, row)| {
                    let s: BigInt = row.iter().zip(&a).map(|(v, t)| (t - &den * BigInt::from(*v)).abs()).sum();
                    (i, s)
                })
                .min_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)))
                .expect("nonempty grid"),
            (None, _) => self
                .values
                .par_chunks(self.width.max(1))
                .enumerate()
                .map(|(i, row)| {
                    let s: BigInt = row.iter().zip(&a).map(|(v, t)| (t - &den * v).abs()).sum();
                    (i, s)
                })
                .min_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)))
                .expect("nonempty grid"),
        };
        let value = Rational::new(score, den * rk * BigInt::from(2));
        Ok(GridMinimum {
            index,
            point: self.point(index),
            value,
        })
    }
}

/// Minimizes [`distance_to_twirled`] over the barycentric grid of `Δ(d)`.
pub fn min_distance_grid(lambda: &Partition, n: usize, k: usize, d: usize, resolution: usize) -> Result<GridMinimum> {
    if resolution < 2 {
        return Err(Error::Domain(format!("resolution must be ≥ 2, got {resolution}")));
    }
    let target = partial_trace_coeffs_shifted(lambda, n, k, d)?;
    TwirlGrid::new(k, d, resolution)?.minimize(&target)
}
