//! De Finetti error bounds and the antisymmetric lower bound.

use num_bigint::BigInt;
use num_traits::{pow, One};
use serde::Serialize;

use super::{check_in_par, distance_to_twirled, partial_trace_coeffs_shifted};
use crate::error::{Error, Result};
use crate::numeric::{fmt_rational, from_big, int, Rational};
use crate::partitions::{binomial, dim_ud, Partition};
use crate::symfunc::{schur_eval, Spectrum};

/// Whether a report compares against an upper or a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
}

/// An exact distance next to the bound it is compared with.
///
/// `satisfied` is `exact_distance ≤ bound_value` for upper bounds and
/// `exact_distance ≥ bound_value` for lower bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub exact_distance: Rational,
    pub bound_value: Rational,
    pub bound_name: String,
    pub kind: BoundKind,
    pub satisfied: bool,
}

impl BoundReport {
    pub fn new(exact_distance: Rational, bound_value: Rational, bound_name: &str, kind: BoundKind) -> Self {
        let satisfied = match kind {
            BoundKind::Upper => exact_distance <= bound_value,
            BoundKind::Lower => exact_distance >= bound_value,
        };
        BoundReport {
            exact_distance,
            bound_value,
            bound_name: bound_name.to_string(),
            kind,
            satisfied,
        }
    }
}

impl Serialize for BoundReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BoundReport", 5)?;
        st.serialize_field("exact_distance", &fmt_rational(&self.exact_distance))?;
        st.serialize_field("bound_value", &fmt_rational(&self.bound_value))?;
        st.serialize_field("bound_name", &self.bound_name)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("satisfied", &self.satisfied)?;
        st.end()
    }
}

/// Distance of `tr_{n−k} ρ^n_λ` to `f^k(λ̄)` against `¾·k(k−1)/λ_ℓ`, with
/// `λ_ℓ` the smallest nonzero row. The bound is only the leading term, so
/// `satisfied` may fail for small `λ_ℓ`.
pub fn definetti_bound_werner(lambda: &Partition, n: usize, k: usize, d: usize) -> Result<BoundReport> {
    check_in_par(lambda, n, d)?;
    let bar = Spectrum::from_partition(lambda, d)?;
    let exact = distance_to_twirled(lambda, n, k, &bar)?;
    let k_ = k as i64;
    let bound = Rational::new(BigInt::from(3 * k_ * (k_ - 1)), BigInt::from(4 * lambda.last_row() as i64));
    Ok(BoundReport::new(exact, bound, "3/4*k(k-1)/lambda_l", BoundKind::Upper))
}

/// Lower bound for `λ = (m^d)`, `n = md`: the `k=2` marginal differs from
/// every twirled product by at least `d/(2(n−1))·(1 − 1/d²)`.
///
/// For `k = 2` the reported distance is the exact gap
/// `s*_(1²)(λ)/(n↓2) − s_(1²)(λ̄)`, which is the distance to the nearest twirled
/// product since `s_(1²)` peaks at `λ̄`. It is checked against
/// `C(d,2)(d+1)/((n−1)d²)`. For `k > 2` the reported distance is taken at
/// `r = λ̄`, which only bounds the minimum from above.
pub fn lower_bound_antisym(d: usize, m: usize, k: usize) -> Result<BoundReport> {
    if k < 2 || k >= d {
        return Err(Error::Domain(format!("need 2 ≤ k < d, got k={k}, d={d}")));
    }
    if m == 0 {
        return Err(Error::Domain("m must be positive".into()));
    }
    let n = m * d;
    if k > n {
        return Err(Error::Domain(format!("cannot keep {k} of {n} systems")));
    }
    let lambda = Partition::rectangle(m, d);
    let dd = int(d as i64);
    let closed = Rational::new(
        BigInt::from(d * d - 1),
        BigInt::from(2 * (n - 1) * d),
    );
    let via_dim = from_big(&binomial(d, 2)) * (&dd + Rational::one()) / (int(n as i64 - 1) * &dd * &dd);
    if closed != via_dim {
        return Err(Error::Invariant(format!("closed forms differ: {closed} vs {via_dim}")));
    }
    let bar = Spectrum::from_partition(&lambda, d)?;
    let e = Partition::new(vec![1, 1])?;
    let alpha = partial_trace_coeffs_shifted(&lambda, n, 2, d)?.weight(&e);
    let gap = alpha - schur_eval(&e, bar.entries());
    if gap != via_dim {
        return Err(Error::Invariant(format!("antisymmetric gap {gap} differs from {via_dim}")));
    }
    let exact = if k == 2 { gap } else { distance_to_twirled(&lambda, n, k, &bar)? };
    Ok(BoundReport::new(exact, closed, "d/(2(n-1))*(1-1/d^2)", BoundKind::Lower))
}

/// `2(1 − dim U_ν / dim U_{μ+ν})` with `μ+ν` taken row-wise.
pub fn eps_coherent(mu: &Partition, nu: &Partition, d: usize) -> Result<Rational> {
    if mu.len() > d || nu.len() > d {
        return Err(Error::DimensionMismatch(format!("{mu} or {nu} has more than {d} rows")));
    }
    let sum = mu.row_sum(nu);
    let ratio = Rational::new(dim_ud(nu, d).into(), dim_ud(&sum, d).into());
    Ok(int(2) * (Rational::one() - ratio))
}

/// `2dk/n`.
pub fn eps_symmetric(n: usize, k: usize, d: usize) -> Result<Rational> {
    nonzero_n(n)?;
    Ok(Rational::new(BigInt::from(2 * d * k), BigInt::from(n)))
}

/// `2d²k/n`.
pub fn eps_mixed(n: usize, k: usize, d: usize) -> Result<Rational> {
    nonzero_n(n)?;
    Ok(Rational::new(BigInt::from(2 * d * d * k), BigInt::from(n)))
}

/// Bosonic bound; the same value as [`eps_symmetric`].
pub fn eps_bose(n: usize, k: usize, d: usize) -> Result<Rational> {
    eps_symmetric(n, k, d)
}

/// `min(dk/n, k(k−1)/(2n))`.
pub fn eps_classical(n: usize, k: usize, d: usize) -> Result<Rational> {
    nonzero_n(n)?;
    let a = Rational::new(BigInt::from(d * k), BigInt::from(n));
    let b = Rational::new(BigInt::from(k * k.saturating_sub(1)), BigInt::from(2 * n));
    Ok(a.min(b))
}

/// Leading term `k/(n·√(2πe))` of the classical lower bound for `k = o(n)`.
pub fn df_small_ratio_bound(n: usize, k: usize) -> f64 {
    k as f64 / (n as f64 * (2.0 * std::f64::consts::PI * std::f64::consts::E).sqrt())
}

fn nonzero_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    Ok(())
}

/// The chain bounding `dim Sym^{n−k}/dim Sym^n` from below:
/// `[ratio, ((n−k+1)/(n+1))^{d−1}, 1 − (d−1)k/(n+1), 1 − dk/n]`.
pub fn symmetric_ratio_chain(n: usize, k: usize, d: usize) -> Result<[Rational; 4]> {
    nonzero_n(n)?;
    if k > n || d == 0 {
        return Err(Error::Domain(format!("need k ≤ n and d ≥ 1, got n={n}, k={k}, d={d}")));
    }
    let ratio = Rational::new(
        BigInt::from(binomial(n - k + d - 1, n - k)),
        BigInt::from(binomial(n + d - 1, n)),
    );
    let base = Rational::new(BigInt::from(n - k + 1), BigInt::from(n + 1));
    let power = pow(base, d - 1);
    let union = Rational::one() - Rational::new(BigInt::from((d - 1) * k), BigInt::from(n + 1));
    let last = Rational::one() - Rational::new(BigInt::from(d * k), BigInt::from(n));
    Ok([ratio, power, union, last])
}
