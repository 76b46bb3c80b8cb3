//! The constructive de Finetti mixture for states in `Sym^n(ℂ^d)`.
//!
//! For `|Ψ⟩ ∈ Sym^n` the measure `dm(φ) = D_n |⟨φ^{⊗n}|Ψ⟩|² dφ` gives
//! `M = (D_n/D_{n+k}) tr_{first n}[(|Ψ⟩⟨Ψ| ⊗ 1_k) Π_sym^{n+k}]`, with
//! `D_m = dim Sym^m(ℂ^d)`. Everything is evaluated in the occupation-number
//! basis `|S_o⟩ = N_o^{-1/2} Σ_{type(x)=o} |x⟩`, so `d^n` never appears.

use std::collections::HashMap;

use nalgebra::DMatrix;
use num_bigint::BigUint;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::operators::{axis, digits, dense_trace_distance, DenseOperator};
use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::partitions::binomial;
use crate::werner::eps_symmetric;

const TOL: f64 = 1e-9;

/// Largest `dim Sym^n(ℂ^d)` accepted by [`SymmetricState::random`].
pub const MAX_SYMMETRIC_DIM: usize = 1 << 20;

/// Compositions of `n` into `d` nonnegative parts, first part largest first.
pub fn compositions(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in (0..=rem).rev() {
            cur.push(v);
            rec(rem - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

struct LnFact(Vec<f64>);

impl LnFact {
    fn new(max: usize) -> Self {
        let mut t = vec![0.0; max + 1];
        for i in 1..=max {
            t[i] = t[i - 1] + (i as f64).ln();
        }
        LnFact(t)
    }

    /// `ln(|o|! / Π o_i!)`.
    fn multinomial(&self, o: &[usize]) -> f64 {
        let n: usize = o.iter().sum();
        self.0[n] - o.iter().map(|&v| self.0[v]).sum::<f64>()
    }

    fn binomial(&self, n: usize, k: usize) -> f64 {
        self.0[n] - self.0[k] - self.0[n - k]
    }
}

fn occupation(x: &[usize], d: usize) -> Vec<usize> {
    let mut o = vec![0; d];
    for &v in x {
        o[v] += 1;
    }
    o
}

/// A pure state of `Sym^n(ℂ^d)` by its amplitudes on `|S_o⟩`, with
/// occupations in [`compositions`] order.
#[derive(Clone, Debug)]
pub struct SymmetricState {
    n: usize,
    d: usize,
    occupations: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    amplitudes: Vec<Complex64>,
}

impl SymmetricState {
    pub fn new(n: usize, d: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("local dimension must be positive".into()));
        }
        let occupations = compositions(n, d);
        if amplitudes.len() != occupations.len() {
            return Err(Error::DimensionMismatch(format!(
                "Sym^{n}(C^{d}) has dimension {}, got {} amplitudes",
                occupations.len(),
                amplitudes.len()
            )));
        }
        let norm: f64 = amplitudes.iter().map(|c| c.norm_sqr()).sum();
        if (norm - 1.0).abs() > TOL {
            return Err(Error::NotNormalized(format!("squared norm {norm}")));
        }
        let index = occupations.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
        Ok(SymmetricState {
            n,
            d,
            occupations,
            index,
            amplitudes,
        })
    }

    /// `|0⟩^{⊗n}`.
    pub fn coherent_zero(n: usize, d: usize) -> Result<Self> {
        let len = compositions(n, d).len();
        let mut amps = vec![Complex64::new(0.0, 0.0); len];
        amps[0] = Complex64::new(1.0, 0.0);
        Self::new(n, d, amps)
    }

    /// Complex-Gaussian amplitudes, normalized; reproducible per seed.
    pub fn random(n: usize, d: usize, seed: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("local dimension must be positive".into()));
        }
        let dim = binomial(n + d - 1, d - 1);
        if dim > BigUint::from(MAX_SYMMETRIC_DIM) {
            return Err(Error::SizeCap(format!("dim Sym^{n}(C^{d}) = {dim} exceeds {MAX_SYMMETRIC_DIM}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let len = compositions(n, d).len();
        let mut amps: Vec<Complex64> = (0..len)
            .map(|_| {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                Complex64::new(re, im)
            })
            .collect();
        let norm = amps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        for a in amps.iter_mut() {
            *a /= norm;
        }
        Self::new(n, d, amps)
    }

    /// Reads a dense vector on `(ℂ^d)^{⊗n}`; errors if it is not normalized
    /// or has weight outside the symmetric subspace.
    pub fn from_dense(n: usize, d: usize, psi: &[Complex64]) -> Result<Self> {
        let size = axis(n, d)?;
        if psi.len() != size {
            return Err(Error::DimensionMismatch(format!("expected {size} entries, got {}", psi.len())));
        }
        let norm: f64 = psi.iter().map(|c| c.norm_sqr()).sum();
        if (norm - 1.0).abs() > TOL {
            return Err(Error::NotNormalized(format!("squared norm {norm}")));
        }
        let occupations = compositions(n, d);
        let index: HashMap<Vec<usize>, usize> = occupations.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
        let lf = LnFact::new(n);
        let mut sums = vec![Complex64::new(0.0, 0.0); occupations.len()];
        for (x, amp) in psi.iter().enumerate() {
            let o = occupation(&digits(x, n, d), d);
            sums[index[&o]] += amp;
        }
        let amps: Vec<Complex64> = sums
            .iter()
            .zip(&occupations)
            .map(|(s, o)| s / lf.multinomial(o).exp().sqrt())
            .collect();
        let kept: f64 = amps.iter().map(|c| c.norm_sqr()).sum();
        if (norm - kept).abs() > TOL {
            return Err(Error::Domain(format!(
                "vector has weight {} outside the symmetric subspace",
                norm - kept
            )));
        }
        Self::new(n, d, amps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    fn amp(&self, o: &[usize]) -> Complex64 {
        self.index
            .get(o)
            .map(|&i| self.amplitudes[i])
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    /// The dense vector on `(ℂ^d)^{⊗n}`.
    pub fn to_dense(&self) -> Result<Vec<Complex64>> {
        let size = axis(self.n, self.d)?;
        let lf = LnFact::new(self.n);
        Ok((0..size)
            .map(|x| {
                let o = occupation(&digits(x, self.n, self.d), self.d);
                self.amp(&o) / lf.multinomial(&o).exp().sqrt()
            })
            .collect())
    }

    /// Expands a function of `(occ(a), occ(b))` to a `d^k × d^k` operator.
    fn expand(&self, k: usize, block: impl Fn(&[usize], &[usize]) -> Complex64) -> Result<DenseOperator> {
        let size = axis(k, self.d)?;
        let occs = compositions(k, self.d);
        let pos: HashMap<Vec<usize>, usize> = occs.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
        let mut table = vec![Complex64::new(0.0, 0.0); occs.len() * occs.len()];
        for (i, oa) in occs.iter().enumerate() {
            for (j, ob) in occs.iter().enumerate() {
                table[i * occs.len() + j] = block(oa, ob);
            }
        }
        let labels: Vec<usize> = (0..size).map(|x| pos[&occupation(&digits(x, k, self.d), self.d)]).collect();
        let m = DMatrix::from_fn(size, size, |a, b| table[labels[a] * occs.len() + labels[b]]);
        DenseOperator::new(k, self.d, m)
    }

    /// `tr_{n−k} |Ψ⟩⟨Ψ|`.
    pub fn reduced(&self, k: usize) -> Result<DenseOperator> {
        if k > self.n {
            return Err(Error::Domain(format!("cannot keep {k} of {} systems", self.n)));
        }
        let lf = LnFact::new(self.n);
        let rest = compositions(self.n - k, self.d);
        self.expand(k, |oa, ob| {
            rest.iter()
                .map(|o| {
                    let xa: Vec<usize> = oa.iter().zip(o).map(|(a, b)| a + b).collect();
                    let xb: Vec<usize> = ob.iter().zip(o).map(|(a, b)| a + b).collect();
                    let w = (lf.multinomial(o) - 0.5 * (lf.multinomial(&xa) + lf.multinomial(&xb))).exp();
                    self.amp(&xa) * self.amp(&xb).conj() * w
                })
                .sum()
        })
    }

    /// The mixture `∫ dm(φ) |φ⟩⟨φ|^{⊗k}`.
    pub fn mixture(&self, k: usize) -> Result<DenseOperator> {
        let (n, d) = (self.n, self.d);
        let lf = LnFact::new(n + k + d);
        let scale = (lf.binomial(n + d - 1, d - 1) - lf.binomial(n + k + d - 1, d - 1)).exp();
        self.expand(k, |oa, ob| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, o1) in self.occupations.iter().enumerate() {
                let m: Vec<usize> = o1.iter().zip(oa).map(|(x, y)| x + y).collect();
                if m.iter().zip(ob).any(|(x, y)| x < y) {
                    continue;
                }
                let o2: Vec<usize> = m.iter().zip(ob).map(|(x, y)| x - y).collect();
                let w = (0.5 * (lf.multinomial(o1) + lf.multinomial(&o2)) - lf.multinomial(&m)).exp();
                acc += self.amplitudes[i].conj() * self.amp(&o2) * w;
            }
            acc * scale
        })
    }
}

/// Outcome of [`symmetric_mixture_gap`].
#[derive(Clone, Debug, PartialEq)]
pub struct MixtureGap {
    pub gap: f64,
    pub bound: Rational,
    pub min_eigenvalue: f64,
    pub trace_error: f64,
}

/// `‖tr_{n−k}|Ψ⟩⟨Ψ| − M‖` for the constructed mixture `M`, next to `2dk/n`.
///
/// `M` is checked to be a state: eigenvalues `≥ −1e-9`, trace within `1e-9`
/// of one, and invariant under swapping two systems.
pub fn symmetric_mixture_gap(psi: &SymmetricState, k: usize) -> Result<MixtureGap> {
    let (n, d) = (psi.n, psi.d);
    if k > n {
        return Err(Error::Domain(format!("cannot keep {k} of {n} systems")));
    }
    let reduced = psi.reduced(k)?;
    let m = psi.mixture(k)?;
    let eig = m.eigenvalues()?;
    let min_eigenvalue = eig.iter().copied().fold(f64::INFINITY, f64::min);
    let trace_error = (m.trace() - Complex64::new(1.0, 0.0)).norm();
    if min_eigenvalue < -TOL || trace_error > TOL {
        return Err(Error::Invariant(format!(
            "mixture is not a state: min eigenvalue {min_eigenvalue}, trace error {trace_error}"
        )));
    }
    if k >= 2 {
        let swap = swap_first_two(&m);
        let defect = (&swap.matrix - &m.matrix).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if defect > TOL {
            return Err(Error::Invariant(format!("mixture not permutation invariant ({defect})")));
        }
    }
    let gap = dense_trace_distance(&reduced, &m)?;
    Ok(MixtureGap {
        gap,
        bound: eps_symmetric(n, k, d)?,
        min_eigenvalue,
        trace_error,
    })
}

/// Dense-vector entry point: validates symmetry and normalization first.
pub fn symmetric_mixture_gap_dense(psi: &[Complex64], n: usize, d: usize, k: usize) -> Result<MixtureGap> {
    axis(n + k, d)?;
    symmetric_mixture_gap(&SymmetricState::from_dense(n, d, psi)?, k)
}

fn swap_first_two(op: &DenseOperator) -> DenseOperator {
    let (k, d) = (op.n, op.d);
    let size = op.matrix.nrows();
    let sw = |x: usize| {
        let mut ds = digits(x, k, d);
        ds.swap(0, 1);
        super::operators::undigits(&ds, d)
    };
    DenseOperator {
        n: k,
        d,
        matrix: DMatrix::from_fn(size, size, |a, b| op.matrix[(sw(a), sw(b))]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use crate::tensor_oracle::characters::permutations;
    use crate::tensor_oracle::operators::permute_index;

    fn close(a: &DenseOperator, b: &DenseOperator, tol: f64) -> bool {
        (&a.matrix - &b.matrix).iter().all(|z| z.norm() < tol)
    }

    /// `(1/m!) Σ_π π` on `(ℂ^d)^{⊗m}`, built from permutation operators.
    fn symmetrizer(m: usize, d: usize) -> DMatrix<f64> {
        let size = d.pow(m as u32);
        let mut out = DMatrix::zeros(size, size);
        let mut count = 0.0;
        for perm in permutations(m) {
            count += 1.0;
            for x in 0..size {
                out[(permute_index(&perm, x, m, d), x)] += 1.0;
            }
        }
        out / count
    }

    fn dense_mixture(psi: &SymmetricState, k: usize) -> DMatrix<Complex64> {
        let (n, d) = (psi.n(), psi.d());
        let v = psi.to_dense().unwrap();
        let pi = symmetrizer(n + k, d);
        let dn = compositions(n, d).len() as f64;
        let dnk = compositions(n + k, d).len() as f64;
        let out = d.pow(k as u32);
        let inner = d.pow(n as u32);
        // ⟨a|M|b⟩ = c Σ_{y,y'} Ψ(y) Ψ*(y') ⟨y'a|Π|yb⟩.
        DMatrix::from_fn(out, out, |a, b| {
            let mut acc = Complex64::new(0.0, 0.0);
            for y in 0..inner {
                for y2 in 0..inner {
                    acc += v[y] * v[y2].conj() * pi[(y2 * out + a, y * out + b)];
                }
            }
            acc * (dn / dnk)
        })
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 2), vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
        assert_eq!(compositions(4, 3).len(), 15);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn closed_form_matches_dense_symmetrizer() {
        for (n, d, k) in [(3, 2, 1), (3, 2, 2), (4, 2, 2), (2, 3, 1), (2, 3, 2), (5, 2, 2)] {
            for seed in 0..3 {
                let psi = SymmetricState::random(n, d, seed).unwrap();
                let m = psi.mixture(k).unwrap();
                let dense = dense_mixture(&psi, k);
                assert!((&m.matrix - &dense).iter().all(|z| z.norm() < 1e-10), "n={n} d={d} k={k}");
                let v = psi.to_dense().unwrap();
                let reduced = DenseOperator::pure(n, d, &v).unwrap().partial_trace(k).unwrap();
                assert!(close(&psi.reduced(k).unwrap(), &reduced, 1e-10));
            }
        }
    }

    #[test]
    fn coherent_state_gap() {
        // d = 2, k = 1: |⟨φ|0⟩|² is uniform on [0,1], so M_00 = (n+1)/(n+2).
        for n in 1..=12 {
            let psi = SymmetricState::coherent_zero(n, 2).unwrap();
            let g = symmetric_mixture_gap(&psi, 1).unwrap();
            assert!((g.gap - 1.0 / (n as f64 + 2.0)).abs() < 1e-12);
        }
        let g = symmetric_mixture_gap(&SymmetricState::coherent_zero(8, 3).unwrap(), 2).unwrap();
        assert!(g.gap <= 2.0 * 3.0 * 2.0 / 8.0);
    }

    #[test]
    fn random_gaps_within_bound() {
        for seed in 0..20 {
            let psi = SymmetricState::random(8, 2, seed).unwrap();
            let g = symmetric_mixture_gap(&psi, 2).unwrap();
            assert_eq!(g.bound, rat(1, 1));
            assert!(g.gap <= 0.5, "seed {seed}: {}", g.gap);
        }
    }

    #[test]
    fn dense_entry_validates() {
        let psi = SymmetricState::random(3, 2, 7).unwrap();
        let v = psi.to_dense().unwrap();
        let g = symmetric_mixture_gap_dense(&v, 3, 2, 2).unwrap();
        assert!((g.gap - symmetric_mixture_gap(&psi, 2).unwrap().gap).abs() < 1e-12);
        let mut w = vec![Complex64::new(0.0, 0.0); 8];
        w[1] = Complex64::new(1.0, 0.0);
        assert!(symmetric_mixture_gap_dense(&w, 3, 2, 1).is_err());
        let half: Vec<Complex64> = v.iter().map(|z| z * 0.5).collect();
        assert!(symmetric_mixture_gap_dense(&half, 3, 2, 1).is_err());
    }

    #[test]
    fn uniform_symmetric_basis_reduces_to_symmetric_block() {
        let (n, d, k) = (4, 2, 2);
        let basis = compositions(n, d);
        let size = d.pow(k as u32);
        let mut avg = DMatrix::<Complex64>::zeros(size, size);
        for i in 0..basis.len() {
            let mut amps = vec![Complex64::new(0.0, 0.0); basis.len()];
            amps[i] = Complex64::new(1.0, 0.0);
            let s = SymmetricState::new(n, d, amps).unwrap();
            avg += s.reduced(k).unwrap().matrix;
        }
        avg /= Complex64::new(basis.len() as f64, 0.0);
        let target = crate::tensor_oracle::werner_block(&crate::Partition::row_shape(k), k, d)
            .unwrap()
            .to_dense();
        assert!((&avg - &target.matrix).iter().all(|z| z.norm() < 1e-12));
        let w = crate::tensor_oracle::oracle_partial_trace_coeffs(&crate::Partition::row_shape(n), n, k, d).unwrap();
        assert_eq!(w.weight(&crate::Partition::row_shape(k)), rat(1, 1));
    }
}
