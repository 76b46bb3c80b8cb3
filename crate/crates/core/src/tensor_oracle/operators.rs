//! Explicit operators on `(ℂ^d)^{⊗n}`: exact projectors with an integer
//! numerator matrix over a common denominator, and complex dense operators for
//! the floating-point trace norm.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::characters::{cycle_type, permutations, sn_character};
use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::partitions::{dim_sn, dim_ud, enumerate_partitions, Partition};

/// Largest local-dimension power `d^n` accepted per axis.
pub const MAX_AXIS: usize = 1024;
/// Largest `n!·d^n` accepted when summing permutation operators.
pub const MAX_PERMUTATION_WORK: usize = 1 << 26;

pub(crate) fn axis(n: usize, d: usize) -> Result<usize> {
    let mut size = 1usize;
    for _ in 0..n {
        size = size
            .checked_mul(d)
            .filter(|&s| s <= MAX_AXIS)
            .ok_or_else(|| Error::SizeCap(format!("{d}^{n} exceeds {MAX_AXIS}")))?;
    }
    Ok(size)
}

/// Digits of a tensor index, most significant (first system) first.
pub(crate) fn digits(mut x: usize, n: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = x % d;
        x /= d;
    }
    out
}

pub(crate) fn undigits(ds: &[usize], d: usize) -> usize {
    ds.iter().fold(0, |acc, &v| acc * d + v)
}

/// An operator `num / den` on `(ℂ^d)^{⊗n}` with real integer numerators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactOperator {
    n: usize,
    d: usize,
    size: usize,
    den: i128,
    num: Vec<i128>,
}

impl ExactOperator {
    pub fn zeros(n: usize, d: usize, den: i128) -> Result<Self> {
        let size = axis(n, d)?;
        Ok(ExactOperator {
            n,
            d,
            size,
            den,
            num: vec![0; size * size],
        })
    }

    pub fn identity(n: usize, d: usize) -> Result<Self> {
        let mut op = Self::zeros(n, d, 1)?;
        for i in 0..op.size {
            op.num[i * op.size + i] = 1;
        }
        Ok(op)
    }

    /// The operator `|x⟩ ↦ |π·x⟩` with `(π·x)_i = x_{π⁻¹(i)}`.
    pub fn permutation(perm: &[usize], d: usize) -> Result<Self> {
        let n = perm.len();
        let mut op = Self::zeros(n, d, 1)?;
        for x in 0..op.size {
            let y = permute_index(perm, x, n, d);
            op.num[y * op.size + x] = 1;
        }
        Ok(op)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn numerator(&self, i: usize, j: usize) -> i128 {
        self.num[i * self.size + j]
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        Rational::new(self.numerator(i, j).into(), self.den.into())
    }

    pub fn trace(&self) -> Rational {
        let t: i128 = (0..self.size).map(|i| self.numerator(i, i)).sum();
        Rational::new(t.into(), self.den.into())
    }

    /// `tr(self · other)`.
    pub fn trace_product(&self, other: &ExactOperator) -> Result<Rational> {
        self.same_shape(other)?;
        let s = self.size;
        let mut acc = BigInt::zero();
        for i in 0..s {
            let mut row: i128 = 0;
            for j in 0..s {
                row += self.num[i * s + j] * other.num[j * s + i];
            }
            acc += row;
        }
        Ok(Rational::new(acc, BigInt::from(self.den) * BigInt::from(other.den)))
    }

    pub fn matmul(&self, other: &ExactOperator) -> Result<ExactOperator> {
        self.same_shape(other)?;
        let s = self.size;
        let mut num = vec![0i128; s * s];
        for i in 0..s {
            for l in 0..s {
                let a = self.num[i * s + l];
                if a == 0 {
                    continue;
                }
                for j in 0..s {
                    num[i * s + j] += a * other.num[l * s + j];
                }
            }
        }
        Ok(ExactOperator {
            n: self.n,
            d: self.d,
            size: s,
            den: self.den * other.den,
            num,
        })
    }

    pub fn add(&self, other: &ExactOperator) -> Result<ExactOperator> {
        self.same_shape(other)?;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * other.den + b * self.den)
            .collect();
        Ok(ExactOperator {
            den: self.den * other.den,
            num,
            ..self.clone()
        })
    }

    pub fn scale_den(&self, factor: i128) -> ExactOperator {
        ExactOperator {
            den: self.den * factor,
            ..self.clone()
        }
    }

    /// Entrywise rational equality.
    pub fn same_value(&self, other: &ExactOperator) -> bool {
        self.n == other.n
            && self.d == other.d
            && self.num.iter().zip(&other.num).all(|(a, b)| a * other.den == b * self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&v| v == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        let s = self.size;
        (0..s).all(|i| (0..i).all(|j| self.num[i * s + j] == self.num[j * s + i]))
    }

    /// Traces out the last `n − keep` systems.
    pub fn partial_trace(&self, keep: usize) -> Result<ExactOperator> {
        if keep > self.n {
            return Err(Error::Domain(format!("cannot keep {keep} of {} systems", self.n)));
        }
        let out = axis(keep, self.d)?;
        let inner = self.size / out;
        let mut num = vec![0i128; out * out];
        for a in 0..out {
            for b in 0..out {
                num[a * out + b] = (0..inner)
                    .map(|c| self.num[(a * inner + c) * self.size + b * inner + c])
                    .sum();
            }
        }
        let op = ExactOperator {
            n: keep,
            d: self.d,
            size: out,
            den: self.den,
            num,
        };
        debug_assert_eq!(op.trace(), self.trace());
        Ok(op)
    }

    pub fn to_dense(&self) -> DenseOperator {
        let den = self.den as f64;
        DenseOperator {
            n: self.n,
            d: self.d,
            matrix: DMatrix::from_fn(self.size, self.size, |i, j| {
                Complex64::new(self.numerator(i, j) as f64 / den, 0.0)
            }),
        }
    }

    fn same_shape(&self, other: &ExactOperator) -> Result<()> {
        if self.n != other.n || self.d != other.d {
            return Err(Error::DimensionMismatch(format!(
                "operators on ({},{}) and ({},{})",
                self.n, self.d, other.n, other.d
            )));
        }
        Ok(())
    }
}

pub(crate) fn permute_index(perm: &[usize], x: usize, n: usize, d: usize) -> usize {
    let xs = digits(x, n, d);
    let mut ys = vec![0; n];
    for (i, &target) in perm.iter().enumerate() {
        ys[target] = xs[i];
    }
    undigits(&ys, d)
}

/// `P_λ = (dim V_λ / n!) Σ_π χ_λ(π) π` on `(ℂ^d)^{⊗n}`.
pub fn young_projector(lambda: &Partition, n: usize, d: usize) -> Result<ExactOperator> {
    if lambda.size() != n {
        return Err(Error::NotInPar {
            partition: lambda.to_string(),
            boxes: n,
            dim: d,
        });
    }
    let size = axis(n, d)?;
    let perms: usize = (1..=n).product();
    if perms.saturating_mul(size) > MAX_PERMUTATION_WORK {
        return Err(Error::SizeCap(format!("{n}!·{d}^{n} exceeds {MAX_PERMUTATION_WORK}")));
    }
    let dim = dim_sn(lambda).to_i128().expect("small");
    let mut op = ExactOperator::zeros(n, d, perms as i128)?;
    if lambda.len() > d {
        return Ok(op);
    }
    let mut chi_cache = std::collections::HashMap::new();
    for perm in permutations(n) {
        let ct = cycle_type(&perm);
        let chi = *chi_cache
            .entry(ct.clone())
            .or_insert_with(|| sn_character(lambda, &ct).expect("same size"));
        if chi == 0 {
            continue;
        }
        let c = dim * chi as i128;
        for x in 0..size {
            let y = permute_index(&perm, x, n, d);
            op.num[y * size + x] += c;
        }
    }
    Ok(op)
}

/// `ρ^n_λ = P_λ / (dim U_λ · dim V_λ)`.
pub fn werner_block(lambda: &Partition, n: usize, d: usize) -> Result<ExactOperator> {
    let p = young_projector(lambda, n, d)?;
    let du = dim_ud(lambda, d).to_i128().expect("small");
    let dv = dim_sn(lambda).to_i128().expect("small");
    if du == 0 {
        return Err(Error::NotInPar {
            partition: lambda.to_string(),
            boxes: n,
            dim: d,
        });
    }
    Ok(p.scale_den(du * dv))
}

/// All projectors `P_λ`, `λ ∈ Par(n,d)`, in enumeration order.
pub fn young_projectors(n: usize, d: usize) -> Result<Vec<(Partition, ExactOperator)>> {
    enumerate_partitions(n, d)
        .into_iter()
        .map(|l| {
            let p = young_projector(&l, n, d)?;
            Ok((l, p))
        })
        .collect()
}

/// A complex `d^n × d^n` operator.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    pub n: usize,
    pub d: usize,
    pub matrix: DMatrix<Complex64>,
}

const HERMITIAN_TOL: f64 = 1e-9;

impl DenseOperator {
    pub fn new(n: usize, d: usize, matrix: DMatrix<Complex64>) -> Result<Self> {
        let size = axis(n, d)?;
        if matrix.nrows() != size || matrix.ncols() != size {
            return Err(Error::DimensionMismatch(format!(
                "{}×{} matrix on {n} systems of dimension {d}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        Ok(DenseOperator { n, d, matrix })
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn pure(n: usize, d: usize, psi: &[Complex64]) -> Result<Self> {
        let v = nalgebra::DVector::from_column_slice(psi);
        Self::new(n, d, &v * v.adjoint())
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// Largest entry of `|A − A†|`.
    pub fn hermitian_defect(&self) -> f64 {
        (&self.matrix - self.matrix.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Traces out the last `n − keep` systems.
    pub fn partial_trace(&self, keep: usize) -> Result<DenseOperator> {
        if keep > self.n {
            return Err(Error::Domain(format!("cannot keep {keep} of {} systems", self.n)));
        }
        let out = axis(keep, self.d)?;
        let inner = self.matrix.nrows() / out;
        let m = DMatrix::from_fn(out, out, |a, b| {
            (0..inner).map(|c| self.matrix[(a * inner + c, b * inner + c)]).sum()
        });
        Ok(DenseOperator {
            n: keep,
            d: self.d,
            matrix: m,
        })
    }

    /// Eigenvalues of the Hermitian part; errors if the defect exceeds 1e-9.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let defect = self.hermitian_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::NotHermitian(defect));
        }
        let h = (&self.matrix + self.matrix.adjoint()) * Complex64::new(0.5, 0.0);
        Ok(h.symmetric_eigenvalues().iter().copied().collect())
    }
}

/// `tr_{n−keep}` of a dense operator.
pub fn dense_partial_trace(op: &DenseOperator, keep: usize) -> Result<DenseOperator> {
    op.partial_trace(keep)
}

/// `½ Σ |eig(a − b)|`.
pub fn dense_trace_distance(a: &DenseOperator, b: &DenseOperator) -> Result<f64> {
    if a.n != b.n || a.d != b.d {
        return Err(Error::DimensionMismatch(format!(
            "operators on ({},{}) and ({},{})",
            a.n, a.d, b.n, b.d
        )));
    }
    let diff = DenseOperator {
        n: a.n,
        d: a.d,
        matrix: &a.matrix - &b.matrix,
    };
    Ok(diff.eigenvalues()?.iter().map(|e| e.abs()).sum::<f64>() / 2.0)
}
