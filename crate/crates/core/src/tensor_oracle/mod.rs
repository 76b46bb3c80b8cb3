//! Brute-force checks on explicit tensor spaces.
//!
//! Nothing here is needed by the combinatorial routes; it exists to test them.

mod characters;
mod mixture;
mod operators;

pub use characters::{centralizer_order, class_size, cycle_type, permutations, sn_character, CharacterTable};
pub use mixture::{
    compositions, symmetric_mixture_gap, symmetric_mixture_gap_dense, MixtureGap, SymmetricState,
    MAX_SYMMETRIC_DIM,
};
pub use operators::{
    dense_partial_trace, dense_trace_distance, werner_block, young_projector, young_projectors, DenseOperator,
    ExactOperator, MAX_AXIS, MAX_PERMUTATION_WORK,
};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::partitions::{enumerate_partitions, Partition};
use crate::symfunc::Spectrum;
use crate::werner::WernerState;

/// `w_λ = tr(P_λ σ^{⊗k})` for `σ = diag(r)`.
pub fn oracle_twirl_coeffs(r: &Spectrum, k: usize, d: usize) -> Result<WernerState> {
    if r.dim() != d {
        return Err(Error::DimensionMismatch(format!("spectrum has length {}, expected {d}", r.dim())));
    }
    let size = operators::axis(k, d)?;
    // Diagonal of σ^{⊗k}.
    let diag: Vec<Rational> = (0..size)
        .map(|x| {
            operators::digits(x, k, d)
                .iter()
                .fold(Rational::one(), |acc, &i| acc * &r.entries()[i])
        })
        .collect();
    let weights = young_projectors(k, d)?
        .iter()
        .map(|(_, p)| {
            (0..size)
                .filter(|&x| !diag[x].is_zero())
                .map(|x| p.entry(x, x) * &diag[x])
                .sum()
        })
        .collect();
    WernerState::from_weights(k, d, weights)
}

/// `tr(P_μ · tr_{n−k} ρ^n_λ)` for each `μ ∈ Par(k,d)`, on dense matrices.
pub fn oracle_partial_trace_coeffs(lambda: &Partition, n: usize, k: usize, d: usize) -> Result<WernerState> {
    if k > n {
        return Err(Error::Domain(format!("cannot keep {k} of {n} systems")));
    }
    let reduced = werner_block(lambda, n, d)?.partial_trace(k)?;
    let weights = young_projectors(k, d)?
        .iter()
        .map(|(_, p)| p.trace_product(&reduced))
        .collect::<Result<Vec<_>>>()?;
    WernerState::from_weights(k, d, weights)
}

/// `Σ_λ w_λ ρ^k_λ` as a dense operator.
pub fn werner_operator(w: &WernerState) -> Result<DenseOperator> {
    let size = operators::axis(w.k(), w.d())?;
    let mut m = DMatrix::<Complex64>::zeros(size, size);
    for (lambda, weight) in w.weights() {
        if weight.is_zero() {
            continue;
        }
        let block = werner_block(lambda, w.k(), w.d())?.to_dense();
        m += block.matrix * Complex64::new(crate::numeric::to_f64(weight), 0.0);
    }
    DenseOperator::new(w.k(), w.d(), m)
}

/// A Haar-random unitary from the QR decomposition of a complex Ginibre
/// matrix, with the phases of `R`'s diagonal absorbed into `Q`.
pub fn random_unitary<R: Rng>(d: usize, rng: &mut R) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(d, d, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im)
    });
    let qr = g.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..d {
        let z = r[(j, j)];
        let phase = if z.norm() > 0.0 { z / z.norm() } else { Complex64::one() };
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// `g^{⊗n}`.
pub fn tensor_power(g: &DMatrix<Complex64>, n: usize) -> DMatrix<Complex64> {
    (0..n).fold(DMatrix::from_element(1, 1, Complex64::one()), |acc, _| acc.kronecker(g))
}

/// All `(λ, ρ^n_λ partial-trace coefficients)` for `λ ∈ Par(n,d)`.
pub fn oracle_sweep(n: usize, k: usize, d: usize) -> Result<Vec<(Partition, WernerState)>> {
    enumerate_partitions(n, d)
        .into_iter()
        .map(|l| {
            let w = oracle_partial_trace_coeffs(&l, n, k, d)?;
            Ok((l, w))
        })
        .collect()
}
