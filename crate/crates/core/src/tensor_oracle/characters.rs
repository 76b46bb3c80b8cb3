//! Symmetric-group characters by the Murnaghan–Nakayama rule.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, factorial, Partition};

/// `χ_λ` at the class of cycle type `ρ`.
///
/// Border strips are removed through the beta-set of `λ`: removing a strip of
/// length `r` moves one bead from `b` to `b − r`, with sign `(−1)^h` where `h`
/// counts beads strictly between the two positions.
pub fn sn_character(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    if lambda.size() != cycle_type.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.size(),
            cycle_type: cycle_type.size(),
        });
    }
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.row(i) + (len - 1 - i)).collect();
    let mut memo = HashMap::new();
    Ok(mn_rec(beta, cycle_type.rows(), &mut memo))
}

fn mn_rec(beta: Vec<usize>, cycles: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (beta.clone(), cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Cycle type of a permutation given in one-line notation (0-based images).
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(lens).expect("cycle lengths form a partition")
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = Some((0..n).collect());
    std::iter::from_fn(move || {
        let out = cur.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            cur = Some(next);
        }
        Some(out)
    })
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Size of the conjugacy class of cycle type `ρ`: `n!/z_ρ`.
pub fn class_size(cycle_type: &Partition) -> u128 {
    let n = cycle_type.size();
    let z = centralizer_order(cycle_type);
    let nf: u128 = factorial(n).try_into().expect("n! fits in u128");
    nf / z
}

/// `z_ρ = Π_i i^{m_i} m_i!`.
pub fn centralizer_order(cycle_type: &Partition) -> u128 {
    let mut counts: HashMap<usize, u32> = HashMap::new();
    for &r in cycle_type.rows() {
        *counts.entry(r).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(i, m)| (i as u128).pow(m) * (1..=m as u128).product::<u128>())
        .product()
}

/// The full character table of `S_n`, rows and columns both in
/// `Par(n,n)` order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = enumerate_partitions(n, n);
        let values = partitions
            .iter()
            .map(|l| {
                partitions
                    .iter()
                    .map(|c| sn_character(l, c).expect("same size"))
                    .collect()
            })
            .collect();
        CharacterTable { n, partitions, values }
    }

    pub fn get(&self, lambda: &Partition, cycle_type: &Partition) -> Option<i64> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        let j = self.partitions.iter().position(|p| p == cycle_type)?;
        Some(self.values[i][j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{dim_sn, dim_ud};
    use num_bigint::BigUint;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(sn_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert!(sn_character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn s3_from_fixed_points() {
        // The permutation module on C^3 is V_(3) ⊕ V_(2,1).
        for perm in permutations(3) {
            let fixed = perm.iter().enumerate().filter(|(i, &v)| *i == v).count() as i64;
            assert_eq!(sn_character(&p(&[2, 1]), &cycle_type(&perm)).unwrap(), fixed - 1);
        }
    }

    #[test]
    fn identity_column_is_dimension() {
        for n in 0..=8 {
            for l in enumerate_partitions(n, n) {
                let chi = sn_character(&l, &Partition::new(vec![1; n]).unwrap()).unwrap();
                assert_eq!(BigUint::from(chi as u64), dim_sn(&l));
            }
        }
    }

    #[test]
    fn orthogonality() {
        for n in 1..=7 {
            let t = CharacterTable::new(n);
            let m = t.partitions.len();
            for a in 0..m {
                for b in 0..m {
                    let col: i128 = (0..m).map(|l| (t.values[l][a] * t.values[l][b]) as i128).sum();
                    let expect = if a == b { centralizer_order(&t.partitions[a]) as i128 } else { 0 };
                    assert_eq!(col, expect);
                    let row: i128 = (0..m)
                        .map(|c| t.values[a][c] as i128 * t.values[b][c] as i128 * class_size(&t.partitions[c]) as i128)
                        .sum();
                    let expect = if a == b { factorial(n).try_into().unwrap() } else { 0 };
                    assert_eq!(row, expect);
                }
            }
        }
    }

    #[test]
    fn tensor_trace_decomposes() {
        // tr(π on (C^d)^{⊗n}) = d^{#cycles} = Σ_λ χ_λ(π) dim U_λ.
        for n in 1..=6 {
            for d in 1..=4usize {
                for c in enumerate_partitions(n, n) {
                    let lhs = (d as i128).pow(c.len() as u32);
                    let rhs: i128 = enumerate_partitions(n, d)
                        .iter()
                        .map(|l| {
                            let u: u64 = dim_ud(l, d).try_into().unwrap();
                            sn_character(l, &c).unwrap() as i128 * u as i128
                        })
                        .sum();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn permutation_enumeration() {
        assert_eq!(permutations(4).count(), 24);
        assert_eq!(permutations(0).count(), 1);
        let total: u128 = enumerate_partitions(5, 5).iter().map(class_size).sum();
        assert_eq!(total, 120);
    }
}
