//! The cross-check suite: every invariant as a named, independently
//! runnable check. Shared by the `verify` command and the test targets.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{
    convex_hull_2d, fk_image, max_distance_to_hull, polytope_span_test, striations_data, tangent_test,
};
use crate::lr::{lr_coefficient, skew_dim_identity_check};
use crate::numeric::{from_big, int, rat, to_f64, Rational};
use crate::partitions::{
    contained_partitions, dim_skew, dim_sn, dim_ud, enumerate_partitions, enumerate_reverse, enumerate_ssyt,
    enumerate_standard, falling_factorial, Partition, SkewShape,
};
use crate::symfunc::{
    jacobi_trudi, kostka_matrix, monomial_eval, schur_eval, shifted_schur_at, shifted_schur_eval, Spectrum,
};
use crate::tensor_oracle::{
    dense_partial_trace, dense_trace_distance, oracle_partial_trace_coeffs, oracle_twirl_coeffs, permutations,
    random_unitary, symmetric_mixture_gap, tensor_power, werner_block, werner_operator, young_projectors,
    ExactOperator, SymmetricState,
};
use crate::werner::{
    distance_to_products_k2, distance_to_twirled, eps_coherent, lower_bound_antisym, partial_trace_coeffs_lr,
    partial_trace_coeffs_shifted, symmetric_ratio_chain, twirled_product, TwirlGrid, WernerState,
};

/// A named check. `run` returns a one-line summary on success.
#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub run: fn() -> Result<String>,
}

/// The outcome of one check.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

pub fn run_check(check: &Check) -> Outcome {
    let start = Instant::now();
    let res = (check.run)();
    let seconds = start.elapsed().as_secs_f64();
    match res {
        Ok(detail) => Outcome {
            name: check.name,
            passed: true,
            detail,
            seconds,
        },
        Err(e) => Outcome {
            name: check.name,
            passed: false,
            detail: e.to_string(),
            seconds,
        },
    }
}

pub fn run_all() -> Vec<Outcome> {
    suite().iter().map(run_check).collect()
}

pub fn find(name: &str) -> Option<Check> {
    suite().into_iter().find(|c| c.name == name)
}

pub fn suite() -> Vec<Check> {
    macro_rules! checks {
        ($($name:literal => $f:ident),* $(,)?) => { vec![$(Check { name: $name, run: $f }),*] };
    }
    checks![
        "vertex-exactness" => vertex_exactness,
        "route-equivalence" => route_equivalence,
        "dense-oracle" => dense_oracle,
        "okounkov-olshanski" => okounkov_olshanski,
        "lower-bound" => lower_bound,
        "symmetric-definetti" => symmetric_definetti,
        "scaling-slope" => scaling_slope,
        "geometry" => geometry,
        "k2-grid" => k2_grid,
        "hook-length" => hook_length,
        "hook-content" => hook_content,
        "schur-weyl-count" => schur_weyl_count,
        "reverse-ssyt-count" => reverse_ssyt_count,
        "schur-properties" => schur_properties,
        "kostka-inverse" => kostka_inverse,
        "jacobi-trudi" => jacobi_trudi_check,
        "schur-normalization" => schur_normalization,
        "lr-symmetry" => lr_symmetry,
        "lr-dimension" => lr_dimension,
        "skew-identity" => skew_identity,
        "semigroup" => semigroup,
        "antisym-vertex-optimality" => antisym_vertex_optimality,
        "coherent-bound" => coherent_bound,
        "ratio-chain" => ratio_chain,
        "projector-algebra" => projector_algebra,
        "unitary-invariance" => unitary_invariance,
        "permutation-invariance" => permutation_invariance,
        "partial-trace-preservation" => partial_trace_preservation,
        "twirl-symmetry" => twirl_symmetry,
        "striation-convergence" => striation_convergence,
        "hull-vertex-counts" => hull_vertex_counts,
        "tangent-positivity" => tangent_positivity,
        "striations-approach-image" => striations_approach_image,
    ]
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Invariant(msg()))
    }
}

fn p(rows: &[usize]) -> Partition {
    Partition::new(rows.to_vec()).expect("valid partition literal")
}

fn values(w: &WernerState) -> Vec<Rational> {
    w.values().cloned().collect()
}

fn random_spectrum(rng: &mut ChaCha8Rng, d: usize) -> Spectrum {
    let raw: Vec<i64> = (0..d).map(|_| rng.gen_range(0..12)).collect();
    let total: i64 = raw.iter().sum();
    if total == 0 {
        return Spectrum::vertex(1, d);
    }
    Spectrum::new(raw.iter().map(|&v| rat(v, total)).collect()).expect("normalized")
}

fn random_point(rng: &mut ChaCha8Rng, d: usize) -> Vec<Rational> {
    (0..d).map(|_| rat(rng.gen_range(-9..10), rng.gen_range(1..8))).collect()
}

pub fn vertex_exactness() -> Result<String> {
    let expected = [
        vec![int(1), int(0), int(0)],
        vec![rat(1, 2), rat(1, 2), int(0)],
        vec![rat(10, 27), rat(16, 27), rat(1, 27)],
    ];
    for (q, e) in (1..=3).zip(expected) {
        let w = twirled_product(&Spectrum::vertex(q, 3), 3, 3)?;
        ensure(values(&w) == e, || format!("f^3(x^{q}) = {:?}", values(&w)))?;
    }
    Ok("f^3 at the three vertices of Δ(3) is exact".into())
}

pub fn route_equivalence() -> Result<String> {
    let (mut cases, mut coefficients) = (0usize, 0usize);
    for n in 0..=8 {
        for d in 1..=4 {
            for lambda in enumerate_partitions(n, d) {
                for k in 0..=n {
                    let a = partial_trace_coeffs_shifted(&lambda, n, k, d)?;
                    let b = partial_trace_coeffs_lr(&lambda, n, k, d)?;
                    ensure(a == b, || format!("routes differ at λ={lambda} k={k} d={d}"))?;
                    cases += 1;
                    coefficients += a.weights().len();
                }
            }
        }
    }
    Ok(format!("{cases} (λ,k,d) cases, {coefficients} coefficients, n ≤ 8, d ≤ 4"))
}

pub fn dense_oracle() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut exact = 0usize;
    for d in 1..=3 {
        for k in 0..=5 {
            for _ in 0..3 {
                let r = random_spectrum(&mut rng, d);
                ensure(oracle_twirl_coeffs(&r, k, d)? == twirled_product(&r, k, d)?, || {
                    format!("twirl oracle differs at r={r} k={k}")
                })?;
                exact += 1;
            }
        }
    }
    let mut worst = 0.0f64;
    for n in 0..=5 {
        for d in 1..=3 {
            let r = random_spectrum(&mut rng, d);
            for lambda in enumerate_partitions(n, d) {
                let block = werner_block(&lambda, n, d)?;
                for k in 0..=n {
                    let w = oracle_partial_trace_coeffs(&lambda, n, k, d)?;
                    ensure(w == partial_trace_coeffs_shifted(&lambda, n, k, d)?, || {
                        format!("partial-trace oracle differs at λ={lambda} k={k} d={d}")
                    })?;
                    ensure(w == partial_trace_coeffs_lr(&lambda, n, k, d)?, || {
                        format!("partial-trace oracle differs from LR at λ={lambda} k={k} d={d}")
                    })?;
                    exact += 1;
                    let reduced = dense_partial_trace(&block.to_dense(), k)?;
                    let twirl = werner_operator(&twirled_product(&r, k, d)?)?;
                    let dense = dense_trace_distance(&reduced, &twirl)?;
                    let closed = to_f64(&distance_to_twirled(&lambda, n, k, &r)?);
                    worst = worst.max((dense - closed).abs());
                }
            }
        }
    }
    ensure(worst < 1e-9, || format!("dense distance deviates by {worst:e}"))?;
    Ok(format!("{exact} exact matches, distance deviation {worst:.1e}"))
}

pub fn okounkov_olshanski() -> Result<String> {
    let mut pairs = 0usize;
    for n in 0..=8 {
        for d in 1..=4 {
            for lambda in enumerate_partitions(n, d) {
                let dim = from_big(&dim_sn(&lambda));
                for k in 0..=n {
                    let fall = Rational::from_integer(falling_factorial(n as i64, k));
                    for mu in contained_partitions(&lambda, k) {
                        let skew = SkewShape::new(lambda.clone(), mu.clone())?;
                        let lhs = from_big(&dim_skew(&skew)) / &dim;
                        let rhs = Rational::from_integer(shifted_schur_at(&mu, &lambda, d)) / &fall;
                        ensure(lhs == rhs, || format!("identity fails at λ={lambda} μ={mu}"))?;
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} containing pairs"))
}

pub fn lower_bound() -> Result<String> {
    for d in 3..=5usize {
        for m in 1..=3usize {
            let rep = lower_bound_antisym(d, m, 2)?;
            let n = (m * d) as i64;
            let dd = d as i64;
            let closed = rat(dd * (dd - 1) / 2 * (dd + 1), (n - 1) * dd * dd);
            ensure(rep.exact_distance == closed, || {
                format!("gap {} ≠ {closed} at d={d} m={m}", rep.exact_distance)
            })?;
        }
    }
    let mut worst = Rational::one();
    for d in 2..=6 {
        let lambda = Partition::new(vec![1; d])?;
        let w = partial_trace_coeffs_shifted(&lambda, d, 2, d)?;
        let dist = distance_to_products_k2(&w)?;
        ensure(dist >= rat(1, 2), || format!("distance {dist} < 1/2 at d={d}"))?;
        worst = worst.min(dist);
    }
    Ok(format!("closed forms exact for d ≤ 5, m ≤ 3; alternating distance ≥ {worst}"))
}

pub fn symmetric_definetti() -> Result<String> {
    let mut worst: f64 = 0.0;
    let mut runs = 0;
    for (n, ks) in [(8usize, &[1usize, 2, 3][..]), (6, &[1, 2][..])] {
        for &k in ks {
            for seed in 0..20 {
                let psi = SymmetricState::random(n, 2, seed)?;
                let g = symmetric_mixture_gap(&psi, k)?;
                let bound = to_f64(&g.bound);
                ensure(g.gap <= bound + 1e-9, || format!("gap {} > {bound} at n={n} k={k} seed={seed}", g.gap))?;
                worst = worst.max(g.gap / bound);
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} states, largest gap/bound {worst:.3}"))
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|(x, y)| (x.ln(), y.ln())).collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    sxy / sxx
}

pub fn scaling_slope() -> Result<String> {
    let bar = Spectrum::new(vec![rat(1, 2), rat(1, 2)])?;
    let mut pts = Vec::new();
    for n in [20usize, 40, 80, 160] {
        let lambda = p(&[n / 2, n / 2]);
        let v = distance_to_twirled(&lambda, n, 2, &bar)?;
        pts.push((n as f64, to_f64(&v)));
    }
    let slope = loglog_slope(&pts);
    ensure((-1.2..=-0.8).contains(&slope), || format!("slope {slope}"))?;
    Ok(format!("slope {slope:.4}"))
}

pub fn geometry() -> Result<String> {
    for (k, d, esc) in [(2, 2, false), (2, 3, false), (3, 3, false), (4, 3, true)] {
        let r = polytope_span_test(k, d, 12)?;
        ensure(r.escapes == esc, || format!("escapes={} at k={k} d={d}", r.escapes))?;
    }
    let coords = (p(&[1, 1, 1]), p(&[2, 1]));
    let cloud = fk_image(3, 3, 60, coords.clone())?;
    let mut hull = convex_hull_2d(&cloud.coordinates());
    let mut verts: Vec<(Rational, Rational)> = (1..=3)
        .map(|q| {
            let w = twirled_product(&Spectrum::vertex(q, 3), 3, 3)?;
            Ok((w.weight(&coords.0), w.weight(&coords.1)))
        })
        .collect::<Result<_>>()?;
    hull.sort();
    verts.sort();
    ensure(hull == verts, || format!("hull of f^3 image has {} vertices", hull.len()))?;
    Ok(format!("span tests as expected; f^3 hull is the vertex triangle over {} points", cloud.points.len()))
}

pub const K2_GRID_RESOLUTION: usize = 200;

pub fn k2_grid() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let step = rat(1, K2_GRID_RESOLUTION as i64);
    let mut worst = Rational::zero();
    for d in [2usize, 3, 5] {
        let grid = TwirlGrid::new(2, d, K2_GRID_RESOLUTION)?;
        for _ in 0..10 {
            let b = rat(rng.gen_range(0..=1000), 1000);
            let w = WernerState::new(2, d, vec![(p(&[2]), Rational::one() - &b), (p(&[1, 1]), b)])?;
            let closed = distance_to_products_k2(&w)?;
            let found = grid.minimize(&w)?.value;
            let diff = (&found - &closed).abs();
            ensure(found >= closed && diff <= step, || {
                format!("grid {found} vs closed form {closed} at d={d}")
            })?;
            worst = worst.max(diff);
        }
    }
    Ok(format!("30 states, largest deviation {worst} (step 1/{K2_GRID_RESOLUTION})"))
}

pub fn hook_length() -> Result<String> {
    for n in 0..=8 {
        for l in enumerate_partitions(n, n) {
            let count = enumerate_standard(&SkewShape::new(l.clone(), Partition::empty())?).len();
            ensure(dim_sn(&l) == BigUint::from(count), || format!("dim V_{l}"))?;
        }
    }
    Ok("n ≤ 8".into())
}

pub fn hook_content() -> Result<String> {
    for n in 0..=6 {
        for d in 1..=4 {
            for l in enumerate_partitions(n, n) {
                let count = enumerate_ssyt(&SkewShape::new(l.clone(), Partition::empty())?, d).len();
                ensure(dim_ud(&l, d) == BigUint::from(count), || format!("dim U_{l}^{d}"))?;
            }
        }
    }
    Ok("n ≤ 6, d ≤ 4".into())
}

pub fn schur_weyl_count() -> Result<String> {
    for n in 0..=6u32 {
        for d in 1..=3usize {
            let total: BigUint = enumerate_partitions(n as usize, d).iter().map(|l| dim_sn(l) * dim_ud(l, d)).sum();
            ensure(total == BigUint::from(d).pow(n), || format!("n={n} d={d}"))?;
        }
    }
    Ok("n ≤ 6, d ≤ 3".into())
}

pub fn reverse_ssyt_count() -> Result<String> {
    let mut shapes = 0;
    for n in 0..=6 {
        for outer in enumerate_partitions(n, n) {
            for j in 0..=n {
                for inner in contained_partitions(&outer, j) {
                    let s = SkewShape::new(outer.clone(), inner)?;
                    for d in 1..=3 {
                        ensure(enumerate_reverse(&s, d).len() == enumerate_ssyt(&s, d).len(), || {
                            format!("{outer} d={d}")
                        })?;
                    }
                    shapes += 1;
                }
            }
        }
    }
    Ok(format!("{shapes} skew shapes"))
}

pub fn schur_properties() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..20 {
        let d = rng.gen_range(1..=4);
        let x = random_point(&mut rng, d);
        let c = rat(rng.gen_range(1..7), rng.gen_range(1..7));
        let mut perm = x.clone();
        perm.rotate_left(1);
        let mut padded = x.clone();
        padded.push(Rational::zero());
        for k in 0..=5 {
            for mu in enumerate_partitions(k, 4) {
                let s = schur_eval(&mu, &x);
                let scaled: Vec<Rational> = x.iter().map(|v| v * &c).collect();
                let ck = num_traits::pow(c.clone(), k);
                ensure(schur_eval(&mu, &scaled) == &s * ck, || format!("homogeneity of s_{mu}"))?;
                ensure(schur_eval(&mu, &perm) == s, || format!("symmetry of s_{mu}"))?;
                ensure(monomial_eval(&mu, &perm) == monomial_eval(&mu, &x), || format!("symmetry of m_{mu}"))?;
                ensure(schur_eval(&mu, &padded) == s, || format!("stability of s_{mu}"))?;
                let lam: Vec<i64> = (0..d).map(|_| rng.gen_range(0..6)).collect();
                let mut lam_padded = lam.clone();
                lam_padded.push(0);
                ensure(shifted_schur_eval(&mu, &lam) == shifted_schur_eval(&mu, &lam_padded), || {
                    format!("stability of s*_{mu}")
                })?;
            }
        }
    }
    Ok("homogeneity, symmetry and stability at 20 points".into())
}

pub fn kostka_inverse() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for k in 0..=4 {
        for d in 1..=3 {
            let km = kostka_matrix(k, d)?;
            let index = enumerate_partitions(k, d);
            for _ in 0..20 {
                let x = random_point(&mut rng, d);
                for mu in &index {
                    let via: Rational = index
                        .iter()
                        .map(|l| Rational::from_integer(km.kappa(l, mu).expect("indexed").clone()) * schur_eval(l, &x))
                        .sum();
                    ensure(via == monomial_eval(mu, &x), || format!("m_{mu} at k={k} d={d}"))?;
                }
            }
        }
    }
    Ok("k ≤ 4, d ≤ 3, 20 points each".into())
}

pub fn jacobi_trudi_check() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for d in 1..=4 {
        for _ in 0..5 {
            let x = random_point(&mut rng, d);
            for k in 0..=5 {
                for mu in enumerate_partitions(k, k) {
                    ensure(jacobi_trudi(&mu, &x) == schur_eval(&mu, &x), || format!("s_{mu} d={d}"))?;
                }
            }
        }
    }
    Ok("|μ| ≤ 5, d ≤ 4".into())
}

pub fn schur_normalization() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for d in 1..=4 {
        for _ in 0..5 {
            let r = random_spectrum(&mut rng, d);
            for k in 0..=6 {
                let total: Rational = enumerate_partitions(k, d)
                    .iter()
                    .map(|l| from_big(&dim_sn(l)) * schur_eval(l, r.entries()))
                    .sum();
                ensure(total.is_one(), || format!("Σ dim V s_λ({r}) = {total} at k={k}"))?;
            }
        }
    }
    Ok("k ≤ 6, d ≤ 4".into())
}

pub fn lr_symmetry() -> Result<String> {
    let mut triples = 0;
    for n in 0..=8 {
        for lambda in enumerate_partitions(n, n) {
            for j in 0..=n {
                for mu in contained_partitions(&lambda, j) {
                    for nu in enumerate_partitions(n - j, n - j) {
                        ensure(lr_coefficient(&lambda, &mu, &nu) == lr_coefficient(&lambda, &nu, &mu), || {
                            format!("c^{lambda}_{mu},{nu}")
                        })?;
                        triples += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{triples} triples, |λ| ≤ 8"))
}

pub fn lr_dimension() -> Result<String> {
    for a in 0..=6 {
        for b in 0..=(6 - a) {
            for d in 1..=3 {
                for mu in enumerate_partitions(a, d) {
                    for nu in enumerate_partitions(b, d) {
                        let lhs = dim_ud(&mu, d) * dim_ud(&nu, d);
                        let rhs: BigUint = enumerate_partitions(a + b, d)
                            .iter()
                            .map(|l| BigUint::from(lr_coefficient(l, &mu, &nu)) * dim_ud(l, d))
                            .sum();
                        ensure(lhs == rhs, || format!("U_{mu} ⊗ U_{nu} at d={d}"))?;
                    }
                }
            }
        }
    }
    Ok("|μ|+|ν| ≤ 6, d ≤ 3".into())
}

pub fn skew_identity() -> Result<String> {
    let mut pairs = 0;
    for n in 0..=8 {
        for lambda in enumerate_partitions(n, n) {
            for k in 0..=n {
                for mu in contained_partitions(&lambda, k) {
                    ensure(skew_dim_identity_check(&lambda, &mu)?, || format!("{lambda}/{mu}"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

pub fn semigroup() -> Result<String> {
    for n in 0..=8 {
        for d in 1..=4 {
            for lambda in enumerate_partitions(n, d) {
                for k in 0..=n {
                    let wk = partial_trace_coeffs_shifted(&lambda, n, k, d)?;
                    for j in 0..=k {
                        ensure(wk.trace_down(j)? == partial_trace_coeffs_shifted(&lambda, n, j, d)?, || {
                            format!("λ={lambda} n→{k}→{j}")
                        })?;
                    }
                }
            }
        }
    }
    Ok("n ≤ 8, d ≤ 4".into())
}

pub fn antisym_vertex_optimality() -> Result<String> {
    let mu = p(&[1, 1]);
    for d in 2..=5 {
        let top = (Rational::one() - int(d as i64).recip()) / int(2);
        for r in crate::geometry::simplex_grid(d, 12)? {
            ensure(schur_eval(&mu, r.entries()) <= top, || format!("s_(1,1)({r}) exceeds {top}"))?;
        }
        ensure(schur_eval(&mu, Spectrum::vertex(d, d).entries()) == top, || format!("value at x^{d}"))?;
    }
    Ok("d ≤ 5".into())
}

pub fn coherent_bound() -> Result<String> {
    let mut cases = 0;
    for n in (1..=200).step_by(3) {
        for d in 1..=5 {
            for k in (0..=n).step_by(1 + n / 20) {
                let v = eps_coherent(&Partition::row_shape(k), &Partition::row_shape(n - k), d)?;
                let bound = rat(2 * (d * k) as i64, n as i64);
                ensure(v <= bound, || format!("coherent error {v} > {bound}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

pub fn ratio_chain() -> Result<String> {
    for n in 1..=40 {
        for k in 1..=n {
            for d in 1..=5 {
                let c = symmetric_ratio_chain(n, k, d)?;
                ensure(c[0] >= c[1] && c[1] >= c[2] && c[2] >= c[3], || format!("n={n} k={k} d={d}"))?;
            }
        }
    }
    Ok("n ≤ 40, d ≤ 5".into())
}

pub fn projector_algebra() -> Result<String> {
    for n in 0..=5 {
        for d in 1..=3 {
            let ps = young_projectors(n, d)?;
            let mut sum = ExactOperator::zeros(n, d, 1)?;
            for (i, (l, pl)) in ps.iter().enumerate() {
                ensure(pl.matmul(pl)?.same_value(pl), || format!("P_{l}² ≠ P_{l}"))?;
                ensure(pl.is_symmetric(), || format!("P_{l} not self-adjoint"))?;
                for (m, pm) in &ps[i + 1..] {
                    ensure(pl.matmul(pm)?.is_zero(), || format!("P_{l} P_{m} ≠ 0"))?;
                }
                sum = sum.add(pl)?;
            }
            ensure(sum.same_value(&ExactOperator::identity(n, d)?), || format!("Σ P ≠ 1 at n={n} d={d}"))?;
        }
    }
    Ok("n ≤ 5, d ≤ 3".into())
}

pub fn unitary_invariance() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let mut worst = 0.0f64;
    for n in 1..=4 {
        for d in 2..=3 {
            for (_, pl) in young_projectors(n, d)? {
                let dense = pl.to_dense().matrix;
                for _ in 0..5 {
                    let g = tensor_power(&random_unitary(d, &mut rng), n);
                    worst = worst.max((&g * &dense * g.adjoint() - &dense).norm());
                }
            }
        }
    }
    ensure(worst < 1e-9, || format!("deviation {worst:e}"))?;
    Ok(format!("largest deviation {worst:.1e}"))
}

pub fn permutation_invariance() -> Result<String> {
    for n in 0..=4 {
        for d in 1..=3 {
            let ps = young_projectors(n, d)?;
            for perm in permutations(n) {
                let pi = ExactOperator::permutation(&perm, d)?;
                for (l, pl) in &ps {
                    ensure(pi.matmul(pl)?.same_value(&pl.matmul(&pi)?), || format!("π P_{l} ≠ P_{l} π"))?;
                }
            }
        }
    }
    Ok("n ≤ 4, d ≤ 3".into())
}

pub fn partial_trace_preservation() -> Result<String> {
    for n in 0..=5 {
        for d in 1..=3 {
            for lambda in enumerate_partitions(n, d) {
                let block = werner_block(&lambda, n, d)?;
                let dense = block.to_dense();
                for k in 0..=n {
                    let exact = block.partial_trace(k)?;
                    ensure(exact.trace() == block.trace(), || format!("exact trace at λ={lambda} k={k}"))?;
                    let t = dense_partial_trace(&dense, k)?.trace();
                    ensure((t.re - 1.0).abs() < 1e-12 && t.im.abs() < 1e-12, || format!("dense trace {t}"))?;
                }
            }
        }
    }
    Ok("n ≤ 5, d ≤ 3".into())
}

pub fn twirl_symmetry() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for d in 1..=4 {
        for _ in 0..5 {
            let r = random_spectrum(&mut rng, d);
            let mut e = r.entries().to_vec();
            e.reverse();
            e.rotate_left(rng.gen_range(0..d));
            let shuffled = Spectrum::unsorted(e)?;
            for k in 0..=5 {
                ensure(twirled_product(&shuffled, k, d)? == twirled_product(&r, k, d)?, || {
                    format!("f^{k} at {r}")
                })?;
            }
        }
    }
    Ok("d ≤ 4, k ≤ 5".into())
}

pub fn striation_convergence() -> Result<String> {
    let bars: [&[(usize, usize)]; 3] = [&[(1, 2), (1, 2)], &[(1, 2), (1, 3), (1, 6)], &[(2, 3), (1, 3)]];
    for bar in bars {
        let d = bar.len();
        let mut prev: Option<Rational> = None;
        for n in [12usize, 24, 48, 96] {
            let rows: Vec<usize> = bar.iter().map(|(a, b)| n * a / b).collect();
            let lambda = Partition::new(rows)?;
            let r = Spectrum::from_partition(&lambda, d)?;
            for k in 2..=3usize {
                let v = distance_to_twirled(&lambda, n, k, &r)?;
                let lead = Rational::new(BigInt::from(3 * k * (k - 1)), BigInt::from(4 * lambda.last_row()));
                ensure(v <= &lead * int(2), || format!("distance {v} vs leading term {lead} at {lambda}"))?;
                if k == 2 {
                    if let Some(pv) = &prev {
                        ensure(&v < pv, || format!("no decrease at n={n} for {lambda}"))?;
                    }
                    prev = Some(v);
                }
            }
        }
    }
    Ok("three directions, n = 12..96".into())
}

pub fn hull_vertex_counts() -> Result<String> {
    let h3 = convex_hull_2d(&fk_image(3, 3, 60, (p(&[1, 1, 1]), p(&[2, 1])))?.coordinates()).len();
    ensure(h3 == 3, || format!("f^3 hull has {h3} vertices"))?;
    let h4 = convex_hull_2d(&fk_image(4, 3, 60, (p(&[4]), p(&[2, 2])))?.coordinates()).len();
    ensure(h4 > 4, || format!("f^4 hull has {h4} vertices"))?;
    Ok(format!("{h3} and {h4} hull vertices"))
}

pub fn tangent_positivity() -> Result<String> {
    let mut cases = 0;
    for d in 2..=5 {
        for r in crate::geometry::simplex_grid(d, 12)? {
            for k in 2..=5 {
                match tangent_test(k, d, &r) {
                    Ok(_) => cases += 1,
                    Err(Error::Domain(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(format!("{cases} non-vertex points"))
}

pub fn striations_approach_image() -> Result<String> {
    let coords = (p(&[4]), p(&[2, 2]));
    let hull = convex_hull_2d(&fk_image(4, 5, 30, coords.clone())?.coordinates());
    let mut dist = Vec::new();
    for n in [10usize, 20, 60] {
        dist.push(max_distance_to_hull(&hull, &striations_data(n, 4, 5, coords.clone())?));
    }
    ensure(dist.windows(2).all(|w| w[0] > w[1]), || format!("{dist:?}"))?;
    Ok(format!("max distance {:.4} → {:.4} → {:.4}", dist[0], dist[1], dist[2]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = suite().iter().map(|c| c.name).collect();
        names.sort();
        let len = names.len();
        names.dedup();
        assert_eq!(names.len(), len);
        assert!(find("geometry").is_some());
    }

    #[test]
    fn slope_of_power_law() {
        let pts: Vec<(f64, f64)> = [1.0, 2.0, 4.0, 8.0].iter().map(|&x: &f64| (x, 3.0 / x)).collect();
        assert!((loglog_slope(&pts) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn cheap_checks_pass() {
        for name in ["vertex-exactness", "lower-bound", "scaling-slope", "twirl-symmetry", "ratio-chain"] {
            let o = run_check(&find(name).unwrap());
            assert!(o.passed, "{name}: {}", o.detail);
        }
    }
}
