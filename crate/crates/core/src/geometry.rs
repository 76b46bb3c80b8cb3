//! Images of the simplex `Δ(d)` under `f^k`, their convex hulls in a
//! two-coordinate projection, and the polytope diagnostics.

use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{to_f64, Rational};
use crate::partitions::{count_partitions, enumerate_partitions, Partition};
use crate::symfunc::Spectrum;
use crate::werner::{partial_trace_coeffs_shifted, twirled_product, WernerState, MAX_GRID_POINTS};

/// Canonical points `v/R`, `v ∈ Par(R,d)`, together with every vertex
/// `x^q`, deduplicated and sorted lexicographically increasing.
pub fn simplex_grid(d: usize, resolution: usize) -> Result<Vec<Spectrum>> {
    if resolution < 1 || d < 1 {
        return Err(Error::Domain("grid needs resolution ≥ 1 and d ≥ 1".into()));
    }
    let count = count_partitions(resolution, d);
    if count > BigUint::from(MAX_GRID_POINTS) {
        return Err(Error::SizeCap(format!("grid has {count} points, cap is {MAX_GRID_POINTS}")));
    }
    let mut pts: Vec<Spectrum> = enumerate_partitions(resolution, d)
        .iter()
        .map(|v| Spectrum::from_partition(v, d).expect("lattice point"))
        .collect();
    pts.extend((1..=d).map(|q| Spectrum::vertex(q, d)));
    pts.sort_by(|a, b| a.entries().cmp(b.entries()));
    pts.dedup();
    Ok(pts)
}

/// One projected point with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CloudPoint {
    pub x: Rational,
    pub y: Rational,
    pub tag: String,
    pub group: String,
}

/// Werner states projected onto the weights of two named partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectedCloud {
    pub k: usize,
    pub d: usize,
    pub labels: (Partition, Partition),
    pub points: Vec<CloudPoint>,
}

impl ProjectedCloud {
    pub fn coordinates(&self) -> Vec<(Rational, Rational)> {
        self.points.iter().map(|p| (p.x.clone(), p.y.clone())).collect()
    }
}

fn check_coords(k: usize, d: usize, coords: &(Partition, Partition)) -> Result<()> {
    let index = enumerate_partitions(k, d);
    for c in [&coords.0, &coords.1] {
        if !index.contains(c) {
            return Err(Error::NotInPar {
                partition: c.to_string(),
                boxes: k,
                dim: d,
            });
        }
    }
    Ok(())
}

fn project(w: &WernerState, coords: &(Partition, Partition)) -> (Rational, Rational) {
    (w.weight(&coords.0), w.weight(&coords.1))
}

/// `f^k` over [`simplex_grid`], projected onto `coords`.
pub fn fk_image(k: usize, d: usize, resolution: usize, coords: (Partition, Partition)) -> Result<ProjectedCloud> {
    check_coords(k, d, &coords)?;
    let grid = simplex_grid(d, resolution)?;
    let points = grid
        .par_iter()
        .map(|r| {
            let w = twirled_product(r, k, d)?;
            let (x, y) = project(&w, &coords);
            let vertex = (1..=d).find(|&q| *r == Spectrum::vertex(q, d));
            Ok(CloudPoint {
                x,
                y,
                tag: format!("r={r}"),
                group: vertex.map(|q| format!("x{q}")).unwrap_or_else(|| "grid".into()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProjectedCloud {
        k,
        d,
        labels: coords,
        points,
    })
}

/// `tr_{n−k} ρ^n_λ` for every `λ ∈ Par(n,d)`, projected onto `coords` and
/// grouped by first-row length.
pub fn striations_data(n: usize, k: usize, d: usize, coords: (Partition, Partition)) -> Result<ProjectedCloud> {
    check_coords(k, d, &coords)?;
    let points = enumerate_partitions(n, d)
        .par_iter()
        .map(|lambda| {
            let w = partial_trace_coeffs_shifted(lambda, n, k, d)?;
            let (x, y) = project(&w, &coords);
            Ok(CloudPoint {
                x,
                y,
                tag: format!("lambda={lambda}"),
                group: lambda.row(0).to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProjectedCloud {
        k,
        d,
        labels: coords,
        points,
    })
}

type Point = (Rational, Rational);

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Counterclockwise convex hull by the monotone chain, exact predicates,
/// collinear points dropped. Starts at the lexicographically smallest point.
pub fn convex_hull_2d(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Whether `p` lies in the closed convex polygon `hull` (counterclockwise).
pub fn hull_contains(hull: &[Point], p: &Point) -> bool {
    match hull.len() {
        0 => false,
        1 => hull[0] == *p,
        2 => cross(&hull[0], &hull[1], p).is_zero() && on_segment(&hull[0], &hull[1], p),
        n => (0..n).all(|i| !cross(&hull[i], &hull[(i + 1) % n], p).is_negative()),
    }
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    let within = |x: &Rational, lo: &Rational, hi: &Rational| (lo.min(hi) <= x) && (x <= lo.max(hi));
    within(&p.0, &a.0, &b.0) && within(&p.1, &a.1, &b.1)
}

fn segment_distance(a: (f64, f64), b: (f64, f64), p: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0)
    };
    let (cx, cy) = (a.0 + t * dx, a.1 + t * dy);
    ((p.0 - cx).powi(2) + (p.1 - cy).powi(2)).sqrt()
}

/// Euclidean distance from `p` to the polygon `hull`; zero inside.
pub fn distance_to_hull(hull: &[Point], p: &Point) -> f64 {
    if hull.is_empty() {
        return f64::INFINITY;
    }
    if hull_contains(hull, p) {
        return 0.0;
    }
    let f = |q: &Point| (to_f64(&q.0), to_f64(&q.1));
    let pf = f(p);
    let n = hull.len();
    (0..n)
        .map(|i| segment_distance(f(&hull[i]), f(&hull[(i + 1) % n]), pf))
        .fold(f64::INFINITY, f64::min)
}

/// Largest distance from any cloud point to `hull`.
pub fn max_distance_to_hull(hull: &[Point], cloud: &ProjectedCloud) -> f64 {
    cloud
        .points
        .iter()
        .map(|p| distance_to_hull(hull, &(p.x.clone(), p.y.clone())))
        .fold(0.0, f64::max)
}

/// Exact row-echelon basis of a set of rational vectors.
struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Residual of `v` after elimination against the basis.
    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = &v[*pivot] / &row[*pivot];
            for (x, r) in v.iter_mut().zip(row) {
                *x -= &f * r;
            }
        }
        v
    }

    /// Adds `v`; returns whether it was independent.
    fn insert(&mut self, v: &[Rational]) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, r));
                true
            }
            None => false,
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Outcome of [`polytope_span_test`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub rank: usize,
    pub escapes: bool,
    pub partitions: usize,
    pub grid_points: usize,
}

/// Rank of the span `X` of `{f^k(x^q)}` and whether any grid image leaves
/// `X`. Image points have unit weight sum, so linear and affine membership
/// agree.
pub fn polytope_span_test(k: usize, d: usize, resolution: usize) -> Result<SpanReport> {
    let mut basis = Echelon::new();
    for q in 1..=d {
        let w = twirled_product(&Spectrum::vertex(q, d), k, d)?;
        basis.insert(&w.values().cloned().collect::<Vec<_>>());
    }
    let grid = simplex_grid(d, resolution)?;
    let escapes = grid.par_iter().try_fold(
        || false,
        |acc, r| -> Result<bool> {
            if acc {
                return Ok(true);
            }
            let w = twirled_product(r, k, d)?;
            let res = basis.reduce(&w.values().cloned().collect::<Vec<_>>());
            Ok(res.iter().any(|x| !x.is_zero()))
        },
    );
    let escapes = escapes.try_reduce(|| false, |a, b| Ok(a || b))?;
    Ok(SpanReport {
        rank: basis.rank(),
        escapes,
        partitions: enumerate_partitions(k, d).len(),
        grid_points: grid.len(),
    })
}

/// The face of `Δ(d)` through a canonical non-vertex point: `(q₁, q₂)`, the
/// first two positions where the value drops (a drop to the end counts).
fn face_indices(a: &Spectrum) -> Result<(usize, usize)> {
    if !a.is_canonical() {
        return Err(Error::Domain(format!("{a} is not sorted nonincreasing")));
    }
    let e = a.entries();
    let d = e.len();
    let drops: Vec<usize> = (1..=d)
        .filter(|&i| i == d || e[i - 1] > e[i])
        .filter(|&i| e[i - 1].is_positive())
        .collect();
    if drops.len() < 2 {
        return Err(Error::Domain(format!("{a} is a vertex of the simplex")));
    }
    Ok((drops[0], drops[1]))
}

/// `ξ = (1,…,1, β,…,β, 0,…,0)` with `q₁` ones, `q₂−q₁` entries
/// `β = −q₁/(q₂−q₁)`.
pub fn tangent_direction(a: &Spectrum) -> Result<Vec<Rational>> {
    let (q1, q2) = face_indices(a)?;
    let beta = Rational::new(BigInt::from(-(q1 as i64)), BigInt::from((q2 - q1) as i64));
    Ok((0..a.dim())
        .map(|i| {
            if i < q1 {
                Rational::one()
            } else if i < q2 {
                beta.clone()
            } else {
                Rational::zero()
            }
        })
        .collect())
}

/// `ξ·∇(Σ_i r_i^k)` at `a`.
pub fn directional_derivative(k: usize, a: &[Rational], xi: &[Rational]) -> Rational {
    let kk = Rational::from_integer(BigInt::from(k));
    a.iter()
        .zip(xi)
        .map(|(ai, x)| x * &kk * num_traits::pow(ai.clone(), k.saturating_sub(1)))
        .sum()
}

/// The component of the tangent of `t ↦ f^k(a + tξ)` along `τ`, where
/// `τ·f^k(r) = Σ r_i^k`. Equals `k q₁ (A^{k−1} − B^{k−1})` for the two top
/// values `A > B` of `a`, so it is positive; that is asserted.
pub fn tangent_test(k: usize, d: usize, a: &Spectrum) -> Result<Rational> {
    if a.dim() != d {
        return Err(Error::DimensionMismatch(format!("{a} does not have length {d}")));
    }
    if k < 2 {
        return Err(Error::Domain(format!("need k ≥ 2, got {k}")));
    }
    let xi = tangent_direction(a)?;
    let v = directional_derivative(k, a.entries(), &xi);
    if !v.is_positive() {
        return Err(Error::Invariant(format!("tangent component {v} is not positive at {a}")));
    }
    Ok(v)
}

/// Writes `x,y,tag,group` rows.
pub fn write_cloud_csv<W: Write>(cloud: &ProjectedCloud, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "y", "tag", "group"]).map_err(csv_err)?;
    for p in &cloud.points {
        w.write_record([
            to_f64(&p.x).to_string(),
            to_f64(&p.y).to_string(),
            p.tag.clone(),
            p.group.clone(),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))
}

/// Writes hull vertices in order, tagged `hull` and numbered.
pub fn write_hull_csv<W: Write>(hull: &[Point], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "y", "tag", "group"]).map_err(csv_err)?;
    for (i, (x, y)) in hull.iter().enumerate() {
        w.write_record([to_f64(x).to_string(), to_f64(y).to_string(), "hull".into(), i.to_string()])
            .map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};
    use crate::symfunc::{kostka_matrix, schur_eval};
    use crate::werner::distance_to_twirled;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn pt(a: (i64, i64), b: (i64, i64)) -> Point {
        (rat(a.0, a.1), rat(b.0, b.1))
    }

    #[test]
    fn grid_examples() {
        let g = simplex_grid(2, 2).unwrap();
        assert_eq!(g, vec![Spectrum::vertex(2, 2), Spectrum::vertex(1, 2)]);
        let g = simplex_grid(3, 3).unwrap();
        assert!(g.contains(&Spectrum::vertex(1, 3)) && g.contains(&Spectrum::vertex(3, 3)));
        assert!(g.contains(&Spectrum::new(vec![rat(2, 3), rat(1, 3), int(0)]).unwrap()));
        for d in 1..=4 {
            let lcm = [1, 1, 2, 6, 12][d];
            for m in 1..=3 {
                let lattice = enumerate_partitions(lcm * m, d).len();
                assert_eq!(simplex_grid(d, lcm * m).unwrap().len(), lattice);
            }
        }
        assert_eq!(simplex_grid(3, 2).unwrap().len(), enumerate_partitions(2, 3).len() + 1);
    }

    #[test]
    fn image_examples() {
        let c = fk_image(3, 3, 6, (p(&[1, 1, 1]), p(&[2, 1]))).unwrap();
        assert!(c.coordinates().contains(&pt((1, 27), (16, 27))));
        for d in 2..=5 {
            let c = fk_image(2, d, 12, (p(&[2]), p(&[1, 1]))).unwrap();
            let edge = (Rational::one() - int(d as i64).recip()) / int(2);
            for q in &c.points {
                assert!(q.y >= int(0) && q.y <= edge);
                assert_eq!(&q.x + &q.y, int(1));
            }
            assert!(c.coordinates().iter().any(|q| q.1 == edge));
        }
        for q in fk_image(4, 3, 12, (p(&[4]), p(&[2, 2]))).unwrap().points {
            assert!(q.x >= int(0) && q.y >= int(0) && &q.x + &q.y <= int(1));
        }
        assert!(fk_image(3, 2, 4, (p(&[1, 1, 1]), p(&[2, 1]))).is_err());
    }

    #[test]
    fn hull_examples() {
        let tri = vec![pt((0, 1), (0, 1)), pt((1, 1), (0, 1)), pt((0, 1), (1, 1))];
        assert_eq!(convex_hull_2d(&tri).len(), 3);
        let seg = vec![pt((0, 1), (0, 1)), pt((1, 2), (1, 2)), pt((1, 1), (1, 1)), pt((1, 4), (1, 4))];
        assert_eq!(convex_hull_2d(&seg), vec![pt((0, 1), (0, 1)), pt((1, 1), (1, 1))]);
        assert_eq!(convex_hull_2d(&[pt((1, 3), (1, 3))]).len(), 1);
        let mut sq = vec![pt((0, 1), (0, 1)), pt((1, 1), (0, 1)), pt((1, 1), (1, 1)), pt((0, 1), (1, 1))];
        sq.push(pt((1, 2), (0, 1)));
        sq.push(pt((1, 2), (1, 2)));
        let h = convex_hull_2d(&sq);
        assert_eq!(h, vec![pt((0, 1), (0, 1)), pt((1, 1), (0, 1)), pt((1, 1), (1, 1)), pt((0, 1), (1, 1))]);
        assert!(hull_contains(&h, &pt((1, 2), (1, 2))));
        assert!(!hull_contains(&h, &pt((3, 2), (1, 2))));
        assert!((distance_to_hull(&h, &pt((3, 2), (1, 2))) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn k3_d3_hull_is_vertex_triangle() {
        let coords = (p(&[1, 1, 1]), p(&[2, 1]));
        let c = fk_image(3, 3, 60, coords.clone()).unwrap();
        let hull = convex_hull_2d(&c.coordinates());
        let mut verts: Vec<Point> = (1..=3)
            .map(|q| project(&twirled_product(&Spectrum::vertex(q, 3), 3, 3).unwrap(), &coords))
            .collect();
        verts.sort();
        let mut h = hull.clone();
        h.sort();
        assert_eq!(h, verts);
    }

    #[test]
    fn k4_d3_hull_has_curved_boundary() {
        let c = fk_image(4, 3, 60, (p(&[4]), p(&[2, 2]))).unwrap();
        assert!(convex_hull_2d(&c.coordinates()).len() > 4);
    }

    #[test]
    fn span_tests() {
        for (k, d, escapes) in [(2, 2, false), (2, 3, false), (2, 5, false), (3, 3, false), (4, 3, true), (3, 2, false), (3, 4, false), (4, 4, true)] {
            let r = polytope_span_test(k, d, 12).unwrap();
            assert_eq!(r.escapes, escapes, "k={k} d={d}");
            assert_eq!(r.rank, d.min(r.partitions));
        }
        for k in 2..=5 {
            for d in 2..=4 {
                let r = polytope_span_test(k, d, 12).unwrap();
                if r.partitions > d {
                    assert!(r.escapes, "k={k} d={d}");
                }
            }
        }
    }

    #[test]
    fn tangent_examples() {
        let a = Spectrum::new(vec![rat(3, 4), rat(1, 4), int(0)]).unwrap();
        assert!(tangent_test(3, 3, &a).unwrap().is_positive());
        assert!(tangent_test(3, 3, &Spectrum::vertex(2, 3)).is_err());
        assert!(tangent_test(3, 3, &Spectrum::vertex(1, 3)).is_err());
        let xi = tangent_direction(&a).unwrap();
        let base = directional_derivative(3, a.entries(), &xi);
        for s in [rat(1, 3), int(2), int(7)] {
            let scaled: Vec<Rational> = xi.iter().map(|x| x * &s).collect();
            let v = directional_derivative(3, a.entries(), &scaled);
            assert_eq!(v, &base * &s);
            assert!(v.is_positive());
        }
    }

    /// `d/dt` at 0 of a degree-`k` polynomial from its values at `t = 0..=k`.
    fn derivative_at_zero(values: &[Rational]) -> Rational {
        let nodes: Vec<Rational> = (0..values.len()).map(|j| int(j as i64)).collect();
        let mut total = Rational::zero();
        for (j, vj) in values.iter().enumerate() {
            // L_j'(0) = Σ_{m≠j} Π_{l≠j,m} (0 − t_l) / Π_{l≠j} (t_j − t_l).
            let denom: Rational = (0..nodes.len())
                .filter(|&l| l != j)
                .map(|l| &nodes[j] - &nodes[l])
                .product();
            let numer: Rational = (0..nodes.len())
                .filter(|&m| m != j)
                .map(|m| {
                    (0..nodes.len())
                        .filter(|&l| l != j && l != m)
                        .map(|l| -&nodes[l])
                        .product::<Rational>()
                })
                .sum();
            total += vj * numer / denom;
        }
        total
    }

    #[test]
    fn tangent_matches_kostka_inverse_direction() {
        for (k, d) in [(3, 3), (4, 3), (4, 5), (5, 4), (2, 4)] {
            let km = kostka_matrix(k, d).unwrap();
            let row = Partition::row_shape(k);
            let index = enumerate_partitions(k, d);
            for raw in [vec![3, 1, 0, 0, 0], vec![2, 2, 1, 1, 0], vec![5, 2, 2, 0, 0], vec![1, 1, 1, 1, 0]] {
                let raw = &raw[..d];
                let total: i64 = raw.iter().sum();
                let Ok(a) = Spectrum::new(raw.iter().map(|&v| rat(v, total)).collect()) else { continue };
                let Ok(xi) = tangent_direction(&a) else { continue };
                // τ·f^k(r) = Σ_λ κ_{λ,(k)} s_λ(r), evaluated along a + tξ.
                let tau_f = |r: &[Rational]| -> Rational {
                    index
                        .iter()
                        .map(|l| Rational::from_integer(km.kappa(l, &row).unwrap().clone()) * schur_eval(l, r))
                        .sum()
                };
                let values: Vec<Rational> = (0..=k)
                    .map(|t| {
                        let r: Vec<Rational> = a.entries().iter().zip(&xi).map(|(x, y)| x + y * int(t as i64)).collect();
                        tau_f(&r)
                    })
                    .collect();
                let expected = derivative_at_zero(&values);
                assert_eq!(tangent_test(k, d, &a).unwrap(), expected, "k={k} d={d} a={a}");
            }
        }
    }

    #[test]
    fn striation_counts() {
        let c = striations_data(3, 3, 3, (p(&[3]), p(&[2, 1]))).unwrap();
        let mut pts = c.coordinates();
        pts.sort();
        assert_eq!(pts, vec![pt((0, 1), (0, 1)), pt((0, 1), (1, 1)), pt((1, 1), (0, 1))]);
        let c = striations_data(10, 4, 5, (p(&[4]), p(&[2, 2]))).unwrap();
        assert_eq!(c.points.len(), 30);
    }

    #[test]
    fn striations_approach_image_hull() {
        let coords = (p(&[4]), p(&[2, 2]));
        let image = fk_image(4, 5, 30, coords.clone()).unwrap();
        let hull = convex_hull_2d(&image.coordinates());
        let dist: Vec<f64> = [10, 20, 60]
            .iter()
            .map(|&n| max_distance_to_hull(&hull, &striations_data(n, 4, 5, coords.clone()).unwrap()))
            .collect();
        assert!(dist[0] > dist[1] && dist[1] > dist[2], "{dist:?}");
    }

    #[test]
    fn scaled_diagrams_converge() {
        let bar = [(1usize, 2usize), (1, 3), (1, 6)];
        let mut prev: Option<Rational> = None;
        for n in [6usize, 12, 24, 48] {
            let rows: Vec<usize> = bar.iter().map(|(a, b)| n * a / b).collect();
            let lambda = Partition::new(rows).unwrap();
            let r = Spectrum::from_partition(&lambda, 3).unwrap();
            let v = distance_to_twirled(&lambda, n, 4, &r).unwrap();
            let lead = Rational::new(BigInt::from(3 * 4 * 3), BigInt::from(4 * lambda.last_row()));
            assert!(v <= lead * int(2));
            if let Some(p) = prev {
                assert!(v < p);
            }
            prev = Some(v);
        }
    }

    #[test]
    fn csv_output() {
        let c = fk_image(2, 2, 2, (p(&[2]), p(&[1, 1]))).unwrap();
        let mut buf = Vec::new();
        write_cloud_csv(&c, &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s.lines().next().unwrap(), "x,y,tag,group");
        assert!(s.contains("\"r=(1/2,1/2)\""));
        let mut buf = Vec::new();
        write_hull_csv(&convex_hull_2d(&c.coordinates()), &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 3);
    }
}
