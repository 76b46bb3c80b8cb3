//! Symmetric Werner states as coefficient vectors over `Par(k,d)`.
//!
//! A symmetric Werner state is `ρ^k = Σ_λ w_λ ρ^k_λ` with `ρ^k_λ` the
//! normalized projector onto the isotypic component `U_λ^d ⊗ V_λ`. The blocks
//! have orthogonal supports, so all the algebra here (partial traces, trace
//! distances, twirled products) reduces to exact rational vectors.

mod bounds;
mod coeffs;
mod distance;

pub use bounds::{
    definetti_bound_werner, df_small_ratio_bound, eps_bose, eps_classical, eps_coherent, eps_mixed,
    eps_symmetric, lower_bound_antisym, symmetric_ratio_chain, BoundKind, BoundReport,
};
pub use coeffs::{
    partial_trace_coeffs, partial_trace_coeffs_lr, partial_trace_coeffs_shifted, partial_trace_coeffs_with,
    twirled_product, Route,
};
pub use distance::{
    distance_to_products_k2, distance_to_twirled, exchange_distance, min_distance_grid, trace_distance,
    scaled_partition, GridMinimum, TwirlGrid, MAX_GRID_POINTS,
};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::partitions::{enumerate_partitions, Partition};

/// Weights `w_λ ≥ 0`, `Σ w_λ = 1`, over exactly `Par(k,d)` in enumeration
/// order. Zero weights are stored explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WernerState {
    k: usize,
    d: usize,
    weights: Vec<(Partition, Rational)>,
}

impl WernerState {
    /// Validates and reorders `weights` into `Par(k,d)` order. Missing
    /// partitions are an error, as are duplicates and foreign keys.
    pub fn new(k: usize, d: usize, weights: Vec<(Partition, Rational)>) -> Result<Self> {
        let index = enumerate_partitions(k, d);
        if weights.len() != index.len() {
            return Err(Error::InvalidWerner(format!(
                "expected {} weights over Par({k},{d}), got {}",
                index.len(),
                weights.len()
            )));
        }
        let mut ordered = Vec::with_capacity(index.len());
        for lambda in index {
            let w = weights
                .iter()
                .find(|(p, _)| *p == lambda)
                .map(|(_, w)| w.clone())
                .ok_or_else(|| Error::InvalidWerner(format!("missing weight for {lambda}")))?;
            ordered.push((lambda, w));
        }
        Self::from_ordered(k, d, ordered)
    }

    /// Weights listed in `Par(k,d)` order.
    pub fn from_weights(k: usize, d: usize, weights: Vec<Rational>) -> Result<Self> {
        let index = enumerate_partitions(k, d);
        if weights.len() != index.len() {
            return Err(Error::InvalidWerner(format!(
                "expected {} weights over Par({k},{d}), got {}",
                index.len(),
                weights.len()
            )));
        }
        Self::from_ordered(k, d, index.into_iter().zip(weights).collect())
    }

    fn from_ordered(k: usize, d: usize, weights: Vec<(Partition, Rational)>) -> Result<Self> {
        if let Some((p, w)) = weights.iter().find(|(_, w)| w.is_negative()) {
            return Err(Error::InvalidWerner(format!("negative weight {w} on {p}")));
        }
        let total: Rational = weights.iter().map(|(_, w)| w).sum();
        if !total.is_one() {
            return Err(Error::InvalidWerner(format!("weights sum to {total}, expected 1")));
        }
        Ok(WernerState { k, d, weights })
    }

    /// The extremal state `ρ^k_λ`.
    pub fn point_mass(k: usize, d: usize, lambda: &Partition) -> Result<Self> {
        let index = enumerate_partitions(k, d);
        if !index.contains(lambda) {
            return Err(Error::NotInPar {
                partition: lambda.to_string(),
                boxes: k,
                dim: d,
            });
        }
        let weights = index
            .into_iter()
            .map(|p| {
                let w = if &p == lambda { Rational::one() } else { Rational::zero() };
                (p, w)
            })
            .collect();
        Ok(WernerState { k, d, weights })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn weights(&self) -> &[(Partition, Rational)] {
        &self.weights
    }

    /// Weights in `Par(k,d)` order.
    pub fn values(&self) -> impl Iterator<Item = &Rational> {
        self.weights.iter().map(|(_, w)| w)
    }

    /// Weight on `λ`, zero if `λ ∉ Par(k,d)`.
    pub fn weight(&self, lambda: &Partition) -> Rational {
        self.weights
            .iter()
            .find(|(p, _)| p == lambda)
            .map(|(_, w)| w.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// `tr_{k−j}` of this state, expanded in the `ρ^j_μ` basis.
    pub fn trace_down(&self, j: usize) -> Result<WernerState> {
        let index = enumerate_partitions(j, self.d);
        let mut acc = vec![Rational::zero(); index.len()];
        for (lambda, w) in &self.weights {
            if w.is_zero() {
                continue;
            }
            let part = partial_trace_coeffs(lambda, self.k, j, self.d)?;
            for (slot, v) in acc.iter_mut().zip(part.values()) {
                *slot += w * v;
            }
        }
        WernerState::from_weights(j, self.d, acc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct WeightRecord {
    partition: Partition,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct WernerRecord {
    k: usize,
    d: usize,
    weights: Vec<WeightRecord>,
}

impl Serialize for WernerState {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WernerRecord {
            k: self.k,
            d: self.d,
            weights: self
                .weights
                .iter()
                .map(|(p, w)| WeightRecord {
                    partition: p.clone(),
                    num: w.numer().to_string(),
                    den: w.denom().to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WernerState {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = WernerRecord::deserialize(de)?;
        let weights = rec
            .weights
            .into_iter()
            .map(|w| {
                let num: BigInt = w.num.parse().map_err(D::Error::custom)?;
                let den: BigInt = w.den.parse().map_err(D::Error::custom)?;
                if den.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok((w.partition, Rational::new(num, den)))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        WernerState::new(rec.k, rec.d, weights).map_err(D::Error::custom)
    }
}

/// Checks `λ ∈ Par(n,d)`.
pub(crate) fn check_in_par(lambda: &Partition, n: usize, d: usize) -> Result<()> {
    if lambda.size() != n || lambda.len() > d {
        return Err(Error::NotInPar {
            partition: lambda.to_string(),
            boxes: n,
            dim: d,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(WernerState::from_weights(3, 3, vec![rat(1, 2), rat(1, 2), rat(0, 1)]).is_ok());
        assert!(WernerState::from_weights(3, 3, vec![rat(1, 2), rat(1, 2)]).is_err());
        assert!(WernerState::from_weights(3, 3, vec![rat(1, 2), rat(1, 3), rat(0, 1)]).is_err());
        assert!(WernerState::from_weights(2, 2, vec![rat(3, 2), rat(-1, 2)]).is_err());
        let w = WernerState::new(2, 2, vec![(p(&[1, 1]), rat(1, 4)), (p(&[2]), rat(3, 4))]).unwrap();
        assert_eq!(w.weights()[0].0, p(&[2]));
        assert!(WernerState::new(2, 2, vec![(p(&[1, 1]), rat(1, 4)), (p(&[1, 1]), rat(3, 4))]).is_err());
        assert!(WernerState::point_mass(2, 1, &p(&[1, 1])).is_err());
    }

    #[test]
    fn json_schema() {
        let w = WernerState::from_weights(2, 2, vec![rat(3, 4), rat(1, 4)]).unwrap();
        let s = w.to_json();
        assert_eq!(
            s,
            r#"{"k":2,"d":2,"weights":[{"partition":[2],"num":"3","den":"4"},{"partition":[1,1],"num":"1","den":"4"}]}"#
        );
        assert_eq!(WernerState::from_json(&s).unwrap(), w);
        assert!(WernerState::from_json(r#"{"k":2,"d":2,"weights":[{"partition":[2],"num":"1","den":"1"}]}"#).is_err());
    }
}
