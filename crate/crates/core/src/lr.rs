//! Littlewood–Richardson coefficients by direct enumeration of LR tableaux.
//!
//! An LR tableau of shape `λ/μ` and content `ν` is a semistandard filling whose
//! reverse reading word (rows top to bottom, each row right to left) is a
//! lattice word: every prefix contains at least as many `i` as `i+1`.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Result;
use crate::partitions::{contained_partitions, dim_skew, dim_sn, Partition, SkewShape};

/// Counts LR tableaux of shape `λ/μ` with content `ν`. Always fills `λ/μ`;
/// [`lr_coefficient`] picks the cheaper of the two symmetric forms.
pub fn lr_fillings(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    let outer = lambda.rows();
    let inner = mu.padded(outer.len());
    // Reading order: row by row, right to left within a row.
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|i| (inner[i]..outer[i]).rev().map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = outer.iter().map(|&r| vec![0; r]).collect();
    let mut used = vec![0usize; nu.len() + 1];
    let content = nu.rows();

    struct Ctx<'a> {
        outer: &'a [usize],
        inner: &'a [usize],
        cells: &'a [(usize, usize)],
        content: &'a [usize],
    }

    fn rec(ctx: &Ctx<'_>, pos: usize, grid: &mut Vec<Vec<usize>>, used: &mut Vec<usize>) -> u64 {
        if pos == ctx.cells.len() {
            return 1;
        }
        let (i, j) = ctx.cells[pos];
        let mut hi = ctx.content.len();
        if j + 1 < ctx.outer[i] {
            hi = hi.min(grid[i][j + 1]);
        }
        let mut lo = 1;
        if i > 0 && j >= ctx.inner[i - 1] {
            lo = grid[i - 1][j] + 1;
        }
        let mut count = 0;
        for v in lo..=hi {
            if used[v] + 1 > ctx.content[v - 1] || (v > 1 && used[v] + 1 > used[v - 1]) {
                continue;
            }
            grid[i][j] = v;
            used[v] += 1;
            count += rec(ctx, pos + 1, grid, used);
            used[v] -= 1;
        }
        grid[i][j] = 0;
        count
    }

    let ctx = Ctx {
        outer,
        inner: &inner,
        cells: &cells,
        content,
    };
    rec(&ctx, 0, &mut grid, &mut used)
}

/// `c^λ_{μν}`: multiplicity of `U_λ` in `U_μ ⊗ U_ν`. Zero unless
/// `|λ| = |μ| + |ν|` and `μ, ν ⊆ λ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() <= nu.size() {
        lr_fillings(lambda, nu, mu)
    } else {
        lr_fillings(lambda, mu, nu)
    }
}

/// `Σ_ν c^λ_{μν} dim V_ν` over `ν ⊢ |λ| − |μ|`.
pub fn lr_weighted_skew_sum(lambda: &Partition, mu: &Partition) -> BigUint {
    contained_partitions(lambda, lambda.size() - mu.size())
        .iter()
        .map(|nu| {
            let c = lr_coefficient(lambda, mu, nu);
            if c == 0 {
                BigUint::zero()
            } else {
                dim_sn(nu) * c
            }
        })
        .sum()
}

/// Checks `dim λ/μ = Σ_ν c^λ_{μν} dim V_ν`.
pub fn skew_dim_identity_check(lambda: &Partition, mu: &Partition) -> Result<bool> {
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    Ok(dim_skew(&shape) == lr_weighted_skew_sum(lambda, mu))
}
