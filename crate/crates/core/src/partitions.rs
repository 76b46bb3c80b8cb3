//! Partitions, Young diagrams, tableaux, and the dimension formulas for the
//! irreducible representations of `S_n` and `U(d)`.
//!
//! A [`Partition`] is stored without trailing zeros. Every operation that takes
//! a pair `(λ, d)` treats `λ` as zero-padded to length `d`.
//!
//! Enumeration orders are part of the contract: partitions are produced in
//! reverse-lexicographic order (largest first row first) and tableaux by a
//! row-major backtracking search that tries entries in increasing order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers (a Young diagram).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(
                rows.iter().map(|&r| r as i64).collect(),
            ));
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    /// The single-row partition `(n)`.
    pub fn row_shape(n: usize) -> Self {
        Partition::new(vec![n]).expect("single row")
    }

    /// The rectangle `(m^h)`: `h` rows of length `m`.
    pub fn rectangle(m: usize, h: usize) -> Self {
        Partition::new(vec![m; h]).expect("rectangle")
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row `i` (0-based), zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// The rows zero-padded (never truncated) to length `d`.
    pub fn padded(&self, d: usize) -> Vec<usize> {
        let mut v = self.rows.clone();
        if v.len() < d {
            v.resize(d, 0);
        }
        v
    }

    /// Smallest non-zero row, or 0 for the empty partition.
    pub fn last_row(&self) -> usize {
        self.rows.last().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(0);
        let cols = (0..width)
            .map(|j| self.rows.iter().take_while(|&&r| r > j).count())
            .collect();
        Partition { rows: cols }
    }

    /// `true` when `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    /// Row-wise sum `(μ+ν)_i = μ_i + ν_i`.
    pub fn row_sum(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition {
            rows: (0..len).map(|i| self.row(i) + other.row(i)).collect(),
        }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (0..r).map(move |j| Cell::new(i + 1, j + 1)))
    }

    /// Hook length of the 1-based cell `(i, j)`.
    pub fn hook(&self, cell: Cell) -> usize {
        let arm = self.row(cell.row - 1) - cell.col;
        let leg = self.rows[cell.row..]
            .iter()
            .take_while(|&&r| r >= cell.col)
            .count();
        arm + leg + 1
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.rows
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Parses a comma list such as `2,1`. Surrounding parentheses are accepted and
/// an empty string (or `()`) is the empty partition.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let rows = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad partition row {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Content `c = j − i`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A skew diagram `λ/μ` with `μ ⊆ λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotASkewShape {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells of the skew shape in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.outer.len()).flat_map(move |i| {
            (self.inner.row(i)..self.outer.row(i)).map(move |j| Cell::new(i + 1, j + 1))
        })
    }
}

impl From<Partition> for SkewShape {
    fn from(p: Partition) -> Self {
        SkewShape {
            outer: p,
            inner: Partition::empty(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Which filling discipline a [`Tableau`] satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauKind {
    Semistandard,
    Reverse,
    /// Both disciplines hold (constant rows, columns of length at most one).
    Both,
    Neither,
}

/// A filling of a skew shape with positive integers.
///
/// `entries[i]` holds the entries of row `i` (0-based) for columns
/// `inner[i] .. outer[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    entries: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, entries: Vec<Vec<usize>>) -> Result<Self> {
        let ok = entries.len() == shape.outer.len()
            && entries
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == shape.outer.row(i) - shape.inner.row(i));
        if !ok {
            return Err(Error::DimensionMismatch(format!(
                "filling {entries:?} does not fit shape {shape}"
            )));
        }
        Ok(Tableau { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.entries
    }

    /// Entry at 0-based row `i` and absolute 0-based column `j`, if that cell
    /// belongs to the skew shape.
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        let lo = self.shape.inner.row(i);
        if i >= self.entries.len() || j < lo || j >= self.shape.outer.row(i) {
            return None;
        }
        Some(self.entries[i][j - lo])
    }

    /// Entry of a 1-based cell.
    pub fn at(&self, cell: Cell) -> Option<usize> {
        self.get(cell.row - 1, cell.col - 1)
    }

    fn check(&self, row_ok: impl Fn(usize, usize) -> bool, col_ok: impl Fn(usize, usize) -> bool) -> bool {
        for (i, r) in self.entries.iter().enumerate() {
            if r.contains(&0) || r.windows(2).any(|w| !row_ok(w[0], w[1])) {
                return false;
            }
            if i == 0 {
                continue;
            }
            let lo = self.shape.inner.row(i);
            for j in lo..self.shape.outer.row(i) {
                if let Some(above) = self.get(i - 1, j) {
                    if !col_ok(above, self.entries[i][j - lo]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Weakly increasing along rows, strictly increasing down columns.
    pub fn is_semistandard(&self) -> bool {
        self.check(|a, b| a <= b, |a, b| a < b)
    }

    /// Weakly decreasing along rows, strictly decreasing down columns.
    pub fn is_reverse(&self) -> bool {
        self.check(|a, b| a >= b, |a, b| a > b)
    }

    /// Semistandard and uses each of `1..=size` exactly once.
    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<usize> = self.entries.iter().flatten().copied().collect();
        seen.sort_unstable();
        self.is_semistandard() && seen.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn kind(&self) -> TableauKind {
        match (self.is_semistandard(), self.is_reverse()) {
            (true, true) => TableauKind::Both,
            (true, false) => TableauKind::Semistandard,
            (false, true) => TableauKind::Reverse,
            (false, false) => TableauKind::Neither,
        }
    }

    /// Multiplicity of each entry `1..=max_entry`.
    pub fn content(&self, max_entry: usize) -> Vec<usize> {
        let mut c = vec![0; max_entry];
        for &v in self.entries.iter().flatten() {
            if v <= max_entry {
                c[v - 1] += 1;
            }
        }
        c
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Filling discipline used by the backtracking search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Rule {
    Semistandard,
    Reverse,
}

struct Filler<'a> {
    inner: &'a [usize],
    outer: &'a [usize],
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    max: usize,
    rule: Rule,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a SkewShape, max: usize, rule: Rule) -> Self {
        let outer = shape.outer.rows();
        let cells = shape.cells().map(|c| (c.row - 1, c.col - 1)).collect();
        let grid = outer.iter().map(|&r| vec![0; r]).collect();
        Filler {
            inner: shape.inner.rows(),
            outer,
            cells,
            grid,
            max,
            rule,
        }
    }

    fn inner_row(&self, i: usize) -> usize {
        self.inner.get(i).copied().unwrap_or(0)
    }

    /// Admissible entries for cell `(i, j)` given already-placed neighbours.
    fn range(&self, i: usize, j: usize) -> (usize, usize) {
        let left = (j > self.inner_row(i)).then(|| self.grid[i][j - 1]);
        let above = (i > 0 && j >= self.inner_row(i - 1) && j < self.outer[i - 1])
            .then(|| self.grid[i - 1][j]);
        match self.rule {
            Rule::Semistandard => {
                let mut lo = 1;
                if let Some(l) = left {
                    lo = lo.max(l);
                }
                if let Some(a) = above {
                    lo = lo.max(a + 1);
                }
                (lo, self.max)
            }
            Rule::Reverse => {
                let mut hi = self.max;
                if let Some(l) = left {
                    hi = hi.min(l);
                }
                if let Some(a) = above {
                    hi = hi.min(a.saturating_sub(1));
                }
                (1, hi)
            }
        }
    }

    fn visit(&mut self, pos: usize, f: &mut dyn FnMut(&[Vec<usize>])) {
        if pos == self.cells.len() {
            f(&self.grid);
            return;
        }
        let (i, j) = self.cells[pos];
        let (lo, hi) = self.range(i, j);
        for v in lo..=hi {
            self.grid[i][j] = v;
            self.visit(pos + 1, f);
        }
        self.grid[i][j] = 0;
    }

    fn weighted<T, W>(&mut self, pos: usize, acc: &T, weight: &W, total: &mut T)
    where
        T: Clone + Zero + for<'x> std::ops::AddAssign<&'x T>,
        for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
        W: Fn(Cell, usize) -> T,
    {
        if pos == self.cells.len() {
            *total += acc;
            return;
        }
        let (i, j) = self.cells[pos];
        let (lo, hi) = self.range(i, j);
        for v in lo..=hi {
            let w = weight(Cell::new(i + 1, j + 1), v);
            if w.is_zero() {
                continue;
            }
            self.grid[i][j] = v;
            let next = acc * &w;
            self.weighted(pos + 1, &next, weight, total);
        }
        self.grid[i][j] = 0;
    }
}

/// `Σ_T Π_{α} weight(α, T(α))` over all fillings of `shape` obeying `rule`
/// with entries in `1..=max`. Subtrees with a zero factor are pruned.
pub(crate) fn weighted_tableau_sum<T, W>(shape: &SkewShape, max: usize, rule: Rule, weight: W) -> T
where
    T: Clone + Zero + One + for<'x> std::ops::AddAssign<&'x T>,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
    W: Fn(Cell, usize) -> T,
{
    let mut filler = Filler::new(shape, max, rule);
    let mut total = T::zero();
    filler.weighted(0, &T::one(), &weight, &mut total);
    total
}

fn collect_fillings(shape: &SkewShape, max: usize, rule: Rule) -> Vec<Tableau> {
    let inner = shape.inner.clone();
    let mut out = Vec::new();
    let mut filler = Filler::new(shape, max, rule);
    filler.visit(0, &mut |grid| {
        let entries = grid
            .iter()
            .enumerate()
            .map(|(i, r)| r[inner.row(i)..].to_vec())
            .collect();
        out.push(Tableau {
            shape: shape.clone(),
            entries,
        });
    });
    out
}

/// All partitions of `k` with at most `d` rows, largest first row first.
pub fn enumerate_partitions(k: usize, d: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { rows: cur.clone() });
            return;
        }
        if rows_left == 0 {
            return;
        }
        for r in (1..=max.min(rem)).rev() {
            cur.push(r);
            rec(rem - r, r, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, d, &mut Vec::new(), &mut out);
    out
}

/// `|Par(k,d)|` without enumerating.
pub fn count_partitions(k: usize, d: usize) -> BigUint {
    // p(j, ≤ i parts): add one part-count at a time.
    let mut ways = vec![BigUint::zero(); k + 1];
    ways[0] = BigUint::one();
    for parts in 1..=d.min(k.max(1)) {
        // Partitions into at most `parts` parts = partitions with largest part ≤ `parts` (conjugation).
        for j in parts..=k {
            let prev = ways[j - parts].clone();
            ways[j] += prev;
        }
    }
    ways[k].clone()
}

/// Partitions `ν ⊆ λ` with `|ν| = size`, in reverse-lexicographic order.
pub fn contained_partitions(lambda: &Partition, size: usize) -> Vec<Partition> {
    fn rec(lambda: &Partition, i: usize, rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { rows: cur.clone() });
            return;
        }
        if i >= lambda.len() {
            return;
        }
        let cap = max.min(lambda.row(i)).min(rem);
        for r in (1..=cap).rev() {
            cur.push(r);
            rec(lambda, i + 1, rem - r, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, size, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Dimension of the `S_n` irreducible `V_λ` by the hook-length formula.
pub fn dim_sn(lambda: &Partition) -> BigUint {
    let hooks = lambda
        .cells()
        .fold(BigUint::one(), |acc, c| acc * lambda.hook(c));
    factorial(lambda.size()) / hooks
}

/// Dimension of the `U(d)` irreducible `U_λ^d` by the hook-content formula;
/// zero when `λ` has more than `d` rows.
pub fn dim_ud(lambda: &Partition, d: usize) -> BigUint {
    if lambda.len() > d {
        return BigUint::zero();
    }
    let (num, den) = lambda.cells().fold((BigUint::one(), BigUint::one()), |(n, h), c| {
        let factor = (d as i64 + c.content()) as u64;
        (n * factor, h * lambda.hook(c))
    });
    num / den
}

/// Every semistandard filling of `shape` with entries `≤ max_entry`.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize) -> Vec<Tableau> {
    collect_fillings(shape, max_entry, Rule::Semistandard)
}

/// Every reverse filling of `shape` with entries `≤ max_entry`.
pub fn enumerate_reverse(shape: &SkewShape, max_entry: usize) -> Vec<Tableau> {
    collect_fillings(shape, max_entry, Rule::Reverse)
}

/// Every standard filling of `shape`: entries `1..=|shape|` each used once,
/// increasing along rows and down columns.
pub fn enumerate_standard(shape: &SkewShape) -> Vec<Tableau> {
    let n = shape.size();
    let outer = shape.outer.padded(0);
    let inner = shape.inner.padded(outer.len());
    let mut grid: Vec<Vec<usize>> = outer.iter().map(|&r| vec![0; r]).collect();
    let mut filled = inner.clone();
    let mut out = Vec::new();

    fn rec(
        next: usize,
        n: usize,
        shape: &SkewShape,
        outer: &[usize],
        inner: &[usize],
        filled: &mut Vec<usize>,
        grid: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if next > n {
            let entries = grid
                .iter()
                .enumerate()
                .map(|(i, r)| r[inner[i]..].to_vec())
                .collect();
            out.push(Tableau {
                shape: shape.clone(),
                entries,
            });
            return;
        }
        for i in 0..outer.len() {
            let j = filled[i];
            let addable = j < outer[i] && (i == 0 || filled[i - 1] > j);
            if addable {
                grid[i][j] = next;
                filled[i] += 1;
                rec(next + 1, n, shape, outer, inner, filled, grid, out);
                filled[i] -= 1;
                grid[i][j] = 0;
            }
        }
    }
    rec(1, n, shape, &outer, &inner, &mut filled, &mut grid, &mut out);
    out
}

/// Number of standard fillings of the skew shape `λ/μ` (1 for the empty shape).
///
/// Counts lattice paths from `μ` to `λ` in Young's lattice by removing the
/// largest entry, which must sit in an outer corner.
pub fn dim_skew(shape: &SkewShape) -> BigUint {
    fn rec(cur: &mut Vec<usize>, inner: &[usize], memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
        if cur.iter().zip(inner).all(|(a, b)| a == b) {
            return BigUint::one();
        }
        if let Some(v) = memo.get(cur.as_slice()) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..cur.len() {
            let below = cur.get(i + 1).copied().unwrap_or(0);
            if cur[i] > inner[i] && cur[i] > below {
                cur[i] -= 1;
                total += rec(cur, inner, memo);
                cur[i] += 1;
            }
        }
        memo.insert(cur.clone(), total.clone());
        total
    }
    let mut cur = shape.outer.padded(0);
    let inner = shape.inner.padded(cur.len());
    rec(&mut cur, &inner, &mut HashMap::new())
}

/// Falling factorial `n(n−1)⋯(n−k+1)`, and 1 if `k = 0`.
pub fn falling_factorial(n: i64, k: usize) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, i| acc * (n - i))
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn counting_matches_enumeration() {
        for k in 0..=14 {
            for d in 0..=7 {
                assert_eq!(count_partitions(k, d), BigUint::from(enumerate_partitions(k, d).len()), "k={k} d={d}");
            }
        }
        assert_eq!(count_partitions(100, 100), "190569292".parse::<BigUint>().unwrap());
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let a = p(&[2, 1, 0, 0]);
        assert_eq!(a.rows(), &[2, 1]);
        assert_eq!(a.padded(4), vec![2, 1, 0, 0]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!("2,1".parse::<Partition>().unwrap(), a);
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(serde_json::to_string(&a).unwrap(), "[2,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn partitions_in_reverse_lex_order() {
        assert_eq!(enumerate_partitions(0, 3), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4, 3),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
        assert_eq!(enumerate_partitions(5, 2), vec![p(&[5]), p(&[4, 1]), p(&[3, 2])]);
    }

    #[test]
    fn partitions_match_filtered_compositions() {
        // Oracle: every weakly decreasing vector of length d summing to k.
        fn compositions(k: usize, d: usize) -> Vec<Vec<usize>> {
            if d == 0 {
                return if k == 0 { vec![vec![]] } else { vec![] };
            }
            (0..=k)
                .flat_map(|first| {
                    compositions(k - first, d - 1).into_iter().map(move |mut rest| {
                        rest.insert(0, first);
                        rest
                    })
                })
                .collect()
        }
        for k in 0..=9 {
            for d in 1..=4 {
                let mut oracle: Vec<Vec<usize>> = compositions(k, d)
                    .into_iter()
                    .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
                    .collect();
                oracle.sort_by(|a, b| b.cmp(a));
                let got: Vec<Vec<usize>> =
                    enumerate_partitions(k, d).iter().map(|l| l.padded(d)).collect();
                assert_eq!(got, oracle, "k={k} d={d}");
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_sn(&p(&[5])), BigUint::from(1u32));
        assert_eq!(dim_sn(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(dim_sn(&p(&[1, 1, 1])), BigUint::from(1u32));
        assert_eq!(dim_ud(&p(&[2]), 2), BigUint::from(3u32));
        assert_eq!(dim_ud(&p(&[2, 1]), 3), BigUint::from(8u32));
        assert_eq!(dim_ud(&p(&[1, 1]), 3), BigUint::from(3u32));
        assert_eq!(dim_ud(&p(&[1, 1, 1]), 2), BigUint::zero());
    }

    #[test]
    fn tableau_enumeration_examples() {
        let one = enumerate_ssyt(&p(&[1]).into(), 2);
        assert_eq!(one.len(), 2);
        assert_eq!(one[0].rows(), &[vec![1]]);
        assert_eq!(one[1].rows(), &[vec![2]]);
        assert_eq!(enumerate_ssyt(&p(&[2, 1]).into(), 3).len(), 8);
        assert!(enumerate_ssyt(&p(&[1, 1, 1]).into(), 2).is_empty());

        let rev = enumerate_reverse(&p(&[1, 1]).into(), 2);
        assert_eq!(rev.len(), 1);
        assert_eq!(rev[0].rows(), &[vec![2], vec![1]]);
        assert_eq!(enumerate_reverse(&p(&[2, 1]).into(), 3).len(), 8);
        let flat = enumerate_reverse(&p(&[2]).into(), 1);
        assert_eq!(flat.len(), 1);
        assert_eq!(flat[0].rows(), &[vec![1, 1]]);
    }

    #[test]
    fn validators_are_total() {
        let shape: SkewShape = p(&[2, 1]).into();
        let t = Tableau::new(shape.clone(), vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(t.kind(), TableauKind::Semistandard);
        let r = Tableau::new(shape.clone(), vec![vec![2, 2], vec![1]]).unwrap();
        assert_eq!(r.kind(), TableauKind::Reverse);
        let bad = Tableau::new(shape.clone(), vec![vec![2, 1], vec![2]]).unwrap();
        assert_eq!(bad.kind(), TableauKind::Neither);
        let zero = Tableau::new(shape.clone(), vec![vec![0, 1], vec![2]]).unwrap();
        assert_eq!(zero.kind(), TableauKind::Neither);
        let single = Tableau::new(p(&[1]).into(), vec![vec![3]]).unwrap();
        assert_eq!(single.kind(), TableauKind::Both);
        assert!(Tableau::new(shape, vec![vec![1]]).is_err());
    }

    #[test]
    fn skew_dimension_examples() {
        let sk = |o: &[usize], i: &[usize]| SkewShape::new(p(o), p(i));
        assert_eq!(dim_skew(&sk(&[1, 1], &[1, 1]).unwrap()), BigUint::one());
        assert_eq!(dim_skew(&sk(&[2, 1], &[1]).unwrap()), BigUint::from(2u32));
        assert!(matches!(sk(&[2, 1], &[2, 1, 1]), Err(Error::NotASkewShape { .. })));
        let shape = sk(&[3, 2, 1], &[1]).unwrap();
        let standard = enumerate_standard(&shape);
        assert!(standard.iter().all(|t| t.is_standard()));
        assert_eq!(BigUint::from(standard.len()), dim_skew(&shape));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(7, 0), BigInt::one());
        assert_eq!(falling_factorial(3, 4), BigInt::zero());
    }

    #[test]
    fn contents_and_hooks() {
        let l = p(&[3, 1]);
        let cells: Vec<Cell> = l.cells().collect();
        assert_eq!(cells[0].content(), 0);
        assert_eq!(cells[1].content(), 1);
        assert_eq!(cells[3].content(), -1);
        assert_eq!(l.hook(Cell::new(1, 1)), 4);
        assert_eq!(l.conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn contained_partitions_are_subdiagrams() {
        let l = p(&[3, 2, 1]);
        let subs = contained_partitions(&l, 3);
        assert_eq!(subs, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert!(subs.iter().all(|s| l.contains(s)));
    }
}
