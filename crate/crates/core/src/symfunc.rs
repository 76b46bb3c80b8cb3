//! Evaluation of Schur, shifted Schur and monomial symmetric functions at
//! exact rational points, the Kostka transition matrix, and the quadrature
//! evaluator for the classical lower-bound function `φ(α)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{clear_denominators, Rational};
use crate::partitions::{enumerate_partitions, enumerate_ssyt, weighted_tableau_sum, Partition, Rule, SkewShape};

/// A point of `Spec^d`: a length-`d` vector of nonnegative rationals.
///
/// Constructors sort the entries nonincreasing (the canonical representative of
/// `Δ(d)`), except [`Spectrum::unsorted`], which keeps the given order so that
/// permutation symmetry can be tested directly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum {
    entries: Vec<Rational>,
}

impl Spectrum {
    /// A state spectrum: nonnegative entries summing to exactly 1.
    pub fn new(mut entries: Vec<Rational>) -> Result<Self> {
        validate_state(&entries)?;
        entries.sort_by(|a, b| b.cmp(a));
        Ok(Spectrum { entries })
    }

    /// A state spectrum in the given coordinate order.
    pub fn unsorted(entries: Vec<Rational>) -> Result<Self> {
        validate_state(&entries)?;
        Ok(Spectrum { entries })
    }

    /// The vertex `x^q` of `Δ(d)`: first `q` coordinates `1/q`, the rest zero.
    pub fn vertex(q: usize, d: usize) -> Self {
        assert!(q >= 1 && q <= d, "vertex index {q} out of range 1..={d}");
        let mut entries = vec![Rational::zero(); d];
        for e in entries.iter_mut().take(q) {
            *e = Rational::new(BigInt::one(), BigInt::from(q));
        }
        Spectrum { entries }
    }

    /// The normalized row lengths `λ̄ = λ/n`, padded to length `d`.
    pub fn from_partition(lambda: &Partition, d: usize) -> Result<Self> {
        if lambda.len() > d {
            return Err(Error::DimensionMismatch(format!("{lambda} has more than {d} rows")));
        }
        let n = BigInt::from(lambda.size());
        if lambda.is_empty() {
            return Err(Error::Domain("the empty partition has no normalized spectrum".into()));
        }
        let entries = lambda
            .padded(d)
            .into_iter()
            .map(|r| Rational::new(BigInt::from(r), n.clone()))
            .collect();
        Ok(Spectrum { entries })
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_canonical(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(crate::numeric::to_f64).collect()
    }
}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(crate::numeric::fmt_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn validate_state(entries: &[Rational]) -> Result<()> {
    if let Some(neg) = entries.iter().find(|e| e.is_negative()) {
        return Err(Error::NegativeEntry(neg.to_string()));
    }
    let sum: Rational = entries.iter().sum();
    if !sum.is_one() {
        return Err(Error::NotNormalized(crate::numeric::fmt_rational(&sum)));
    }
    Ok(())
}

/// `s_μ` at an integer point, summed over semistandard tableaux.
pub fn schur_eval_int(mu: &Partition, x: &[BigInt]) -> BigInt {
    schur_eval_with(mu, x)
}

/// `s_μ` over any commutative ring with cheap clones (used with `i128` on
/// lattice points whose values are known to fit).
pub(crate) fn schur_eval_with<T>(mu: &Partition, x: &[T]) -> T
where
    T: Clone + Zero + One + for<'a> std::ops::AddAssign<&'a T>,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    if mu.len() > x.len() {
        return T::zero();
    }
    let shape = SkewShape::from(mu.clone());
    weighted_tableau_sum(&shape, x.len(), Rule::Semistandard, |_, e| x[e - 1].clone())
}

/// `s_μ(x) = Σ_T Π_α x_{T(α)}` over semistandard tableaux with entries `≤ d`.
///
/// Evaluated by clearing denominators: `s_μ(v/L) = s_μ(v)/L^{|μ|}`.
pub fn schur_eval(mu: &Partition, x: &[Rational]) -> Rational {
    let (v, scale) = clear_denominators(x);
    let num = schur_eval_int(mu, &v);
    Rational::new(num, num_traits::pow(scale, mu.size()))
}

/// `s*_μ(λ) = Σ_T Π_α (λ_{T(α)} − c(α))` over reverse tableaux of shape `μ`
/// with entries `≤ λ.len()`.
///
/// `lambda` is an ordered integer vector; it is never re-sorted, since shifted
/// Schur functions are not symmetric.
pub fn shifted_schur_eval(mu: &Partition, lambda: &[i64]) -> BigInt {
    if mu.len() > lambda.len() {
        return BigInt::zero();
    }
    let shape = SkewShape::from(mu.clone());
    weighted_tableau_sum(&shape, lambda.len(), Rule::Reverse, |cell, e| {
        BigInt::from(lambda[e - 1] - cell.content())
    })
}

/// Shifted Schur function at a partition zero-padded to length `d`.
pub fn shifted_schur_at(mu: &Partition, lambda: &Partition, d: usize) -> BigInt {
    let v: Vec<i64> = lambda.padded(d).into_iter().map(|r| r as i64).collect();
    shifted_schur_eval(mu, &v)
}

/// The monomial symmetric function `m_λ(x)`: the sum of `x^a` over distinct
/// rearrangements `a` of `λ` padded to `x.len()`.
pub fn monomial_eval(lambda: &Partition, x: &[Rational]) -> Rational {
    if lambda.len() > x.len() {
        return Rational::zero();
    }
    let mut exps = lambda.padded(x.len());
    exps.sort_unstable();
    let mut total = Rational::zero();
    loop {
        let term = exps
            .iter()
            .zip(x)
            .fold(Rational::one(), |acc, (&e, xi)| acc * num_traits::pow(xi.clone(), e));
        total += term;
        if !next_permutation(&mut exps) {
            break;
        }
    }
    total
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Number of semistandard tableaux of shape `λ` and content `ν` (entries `≤ d`).
pub fn kostka_number(lambda: &Partition, nu: &Partition, d: usize) -> BigInt {
    let content = nu.padded(d);
    if content.len() > d {
        return BigInt::zero();
    }
    let count = enumerate_ssyt(&SkewShape::from(lambda.clone()), d)
        .iter()
        .filter(|t| t.content(d) == content)
        .count();
    BigInt::from(count)
}

/// The Kostka matrix on `Par(k,d)` and its inverse.
///
/// `s_λ = Σ_ν K[λ][ν] m_ν`; the inverse gives `m_μ = Σ_λ κ_{λ,μ} s_λ` with
/// `κ_{λ,μ} = inverse[μ][λ]`.
#[derive(Clone, Debug)]
pub struct KostkaMatrix {
    pub index: Vec<Partition>,
    pub kostka: Vec<Vec<BigInt>>,
    pub inverse: Vec<Vec<BigInt>>,
}

impl KostkaMatrix {
    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.index.iter().position(|q| q == p)
    }

    /// Coefficient of `s_λ` in the Schur expansion of `m_μ`.
    pub fn kappa(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        Some(&self.inverse[self.position(mu)?][self.position(lambda)?])
    }
}

/// Builds `K` on `Par(k,d)` (reverse-lexicographic order, which refines
/// dominance, so `K` is upper unitriangular) and inverts it by back
/// substitution over the integers.
pub fn kostka_matrix(k: usize, d: usize) -> Result<KostkaMatrix> {
    let index = enumerate_partitions(k, d);
    let n = index.len();
    let kostka: Vec<Vec<BigInt>> = index
        .iter()
        .map(|l| index.iter().map(|nu| kostka_number(l, nu, d)).collect())
        .collect();
    for i in 0..n {
        if !kostka[i][i].is_one() || (0..i).any(|j| !kostka[i][j].is_zero()) {
            return Err(Error::Invariant(format!(
                "Kostka matrix for Par({k},{d}) is not upper unitriangular at row {}",
                index[i]
            )));
        }
    }
    let mut inverse = vec![vec![BigInt::zero(); n]; n];
    for i in (0..n).rev() {
        for j in 0..n {
            let mut v = if i == j { BigInt::one() } else { BigInt::zero() };
            for l in i + 1..n {
                v -= &kostka[i][l] * &inverse[l][j];
            }
            inverse[i][j] = v;
        }
    }
    Ok(KostkaMatrix { index, kostka, inverse })
}

/// Nodes and weights of the `m`-point Gauss–Legendre rule on `[-1, 1]`.
fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    for i in 0..m.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=m {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[m - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
    (nodes, weights)
}

/// Composite Gauss–Legendre quadrature on `[a, b]`, doubling the panel count
/// until successive estimates agree within `tol`.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let (nodes, weights) = gauss_legendre(8);
    let composite = |panels: usize| {
        let h = (b - a) / panels as f64;
        (0..panels)
            .map(|p| {
                let lo = a + p as f64 * h;
                let mid = lo + h / 2.0;
                nodes
                    .iter()
                    .zip(&weights)
                    .map(|(x, w)| w * f(mid + x * h / 2.0))
                    .sum::<f64>()
                    * h
                    / 2.0
            })
            .sum::<f64>()
    };
    let mut panels = 1;
    let mut prev = composite(panels);
    loop {
        panels *= 2;
        let next = composite(panels);
        if (next - prev).abs() < tol || panels >= 1 << 16 {
            return next;
        }
        prev = next;
    }
}

/// `φ(α) = 1/(2√(2π)) ∫ |1 − √(1−α) e^{αu²/2}| e^{−u²/2} du` for `0 < α < 1/2`.
///
/// The integrand is even, so the half line is integrated and doubled. The
/// half line is split at the kink `u₀ = √(−ln(1−α)/α)` where the absolute value
/// changes sign, and truncated at `U` where the Gaussian tail is below `1e-12`.
pub fn df_phi(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 0.5) {
        return Err(Error::Domain(format!("df_phi needs 0 < alpha < 1/2, got {alpha}")));
    }
    let s = (1.0 - alpha).sqrt();
    let integrand = |u: f64| (1.0 - s * (alpha * u * u / 2.0).exp()).abs() * (-u * u / 2.0).exp();
    let kink = (-(1.0 - alpha).ln() / alpha).sqrt();
    // Beyond the kink the integrand is bounded by s·exp(−(1−α)u²/2).
    let beta = 1.0 - alpha;
    let mut cutoff = kink + 1.0;
    while s * (-beta * cutoff * cutoff / 2.0).exp() / (beta * cutoff) > 1e-12 {
        cutoff += 0.5;
    }
    let tol = 1e-11;
    let half = integrate(integrand, 0.0, kink, tol) + integrate(integrand, kink, cutoff, tol);
    Ok(2.0 * half / (2.0 * (2.0 * std::f64::consts::PI).sqrt()))
}

/// Complete homogeneous `h_m(x)` by the recursion `h_m(x_1..x_j) = h_m(x_1..x_{j-1}) + x_j h_{m-1}(x_1..x_j)`.
pub fn complete_homogeneous(m: i64, x: &[Rational]) -> Rational {
    if m < 0 {
        return Rational::zero();
    }
    let m = m as usize;
    let mut h = vec![Rational::zero(); m + 1];
    h[0] = Rational::one();
    for xi in x {
        for j in 1..=m {
            let prev = h[j - 1].clone();
            h[j] += xi * prev;
        }
    }
    h[m].clone()
}

/// Determinant by exact Gaussian elimination.
pub fn rational_det(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut sign = Rational::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if piv != c {
            a.swap(piv, c);
            sign = -sign;
        }
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for cc in c..n {
                let v = &f * &a[c][cc];
                a[r][cc] -= v;
            }
        }
    }
    (0..n).fold(sign, |acc, i| acc * &a[i][i])
}

/// `det(h_{μ_i − i + j}(x))`, an independent route to `s_μ(x)`.
pub fn jacobi_trudi(mu: &Partition, x: &[Rational]) -> Rational {
    let l = mu.len();
    let m = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| complete_homogeneous(mu.row(i) as i64 - i as i64 + j as i64, x))
                .collect()
        })
        .collect();
    rational_det(m)
}
