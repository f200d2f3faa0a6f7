//! Acceptance checks. Run with `--nocapture` to see one line per criterion.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewspec::graphs::{bipartition, regularity, Bipartite, Graph, OrientedGraph};
use skewspec::linalg::{skew_spectrum, symmetric_eigenvalues, FloatMatrix, IntMatrix};
use skewspec::maxenergy::{
    build_family, certify_max_energy, find_commuting_kn, iterate_kronecker, seed, FamilyName,
    FamilySpec, Seed, DEFAULT_SIZE_LIMIT,
};
use skewspec::products::{orient_cartesian, orient_kronecker, orient_lexicographic, orient_strong};
use skewspec::random::{random_graph, random_orientation, random_oriented_bipartite};
use skewspec::search::{code_of, enumerate_max_energy};
use skewspec::spectra::{compare, predict_kronecker, predict_strong};

type Check = Result<(), String>;
type Law = fn(f64) -> f64;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(actual: f64, expected: f64, tol: f64, what: &str) -> Check {
    ensure((actual - expected).abs() <= tol, || {
        format!("{what}: got {actual}, expected {expected} (tol {tol:e})")
    })
}

fn timed(limit: Duration, what: &str, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure(took < limit, || {
        format!("{what} took {took:?}, limit {limit:?}")
    })
}

fn c4() -> Bipartite {
    Bipartite::x_first(seed(Seed::C4).unwrap()).unwrap()
}

fn k4() -> OrientedGraph {
    seed(Seed::K4).unwrap()
}

/// Order, regularity, energy within `1e-9` and an exact certificate.
fn max_energy_product(g: &OrientedGraph, order: usize, degree: usize) -> Check {
    ensure(g.order() == order, || {
        format!("order {} != {order}", g.order())
    })?;
    let k = regularity(g.underlying());
    ensure(k == Some(degree), || {
        format!("regularity {k:?} != {degree}")
    })?;
    let s = g.skew_adjacency();
    let spectral = skew_spectrum(&s).map_err(|e| e.to_string())?.energy();
    let bound = order as f64 * (degree as f64).sqrt();
    within(spectral, bound, 1e-9, "energy")?;
    let cert = certify_max_energy(&s, degree).map_err(|e| e.to_string())?;
    ensure(cert.holds, || format!("certificate: {}", cert.witness))
}

fn exact_certificates() -> Check {
    timed(Duration::from_secs(1), "seed certificates", || {
        let seeds = [
            Seed::P2,
            Seed::C4,
            Seed::K4,
            Seed::K44,
            Seed::Hypercube(1),
            Seed::Hypercube(2),
            Seed::Hypercube(3),
            Seed::Hypercube(4),
        ];
        for s in seeds {
            let g = seed(s).map_err(|e| format!("{s}: {e}"))?;
            let k = regularity(g.underlying()).ok_or(format!("{s} is not regular"))?;
            let gram = g.skew_adjacency().gram().map_err(|e| e.to_string())?;
            ensure(gram == IntMatrix::scalar(g.order(), k as i64), || {
                format!("{s}: SᵀS is not {k}I")
            })?;
        }
        Ok(())
    })
}

fn kronecker_c4_k4() -> Check {
    let g = orient_kronecker(&c4(), &k4());
    ensure(bipartition(g.underlying()).is_ok(), || {
        "product is not bipartite".into()
    })?;
    max_energy_product(&g, 16, 6)?;
    within(
        skew_spectrum(&g.skew_adjacency()).unwrap().energy(),
        16.0 * 6f64.sqrt(),
        1e-9,
        "16√6",
    )
}

fn strong_c4_k4() -> Check {
    let g = orient_strong(&c4(), &k4());
    max_energy_product(&g, 16, 11)?;
    within(
        skew_spectrum(&g.skew_adjacency()).unwrap().energy(),
        16.0 * 11f64.sqrt(),
        1e-9,
        "16√11",
    )
}

fn cartesian_c4_k4() -> Check {
    let g = orient_cartesian(&c4(), &k4());
    max_energy_product(&g, 16, 5)?;
    within(
        skew_spectrum(&g.skew_adjacency()).unwrap().energy(),
        16.0 * 5f64.sqrt(),
        1e-9,
        "16√5",
    )
}

fn family_laws() -> Check {
    let laws: [(FamilyName, Law); 4] = [
        (FamilyName::KronC4Iter, |r| 3.0 * 2f64.powf(r)),
        (FamilyName::KronK4Iter, |r| 2.0 * 3f64.powf(r)),
        (FamilyName::StrongC4Iter, |r| 4.0 * 3f64.powf(r) - 1.0),
        (FamilyName::CartesianC4K4, |r| 2.0 * r + 3.0),
    ];
    for (name, radicand) in laws {
        for r in 0..=2u32 {
            let limit = if r == 2 {
                Duration::from_secs(5)
            } else {
                Duration::MAX
            };
            timed(limit, &format!("{name} r={r}"), || {
                let built = build_family(FamilySpec { name, r }, DEFAULT_SIZE_LIMIT)
                    .map_err(|e| format!("{name} r={r}: {e}"))?;
                let law = 4f64.powi(r as i32 + 1) * radicand(f64::from(r)).sqrt();
                let energy = skew_spectrum(&built.graph.skew_adjacency())
                    .unwrap()
                    .energy();
                ensure((energy - law).abs() <= 1e-9 * law, || {
                    format!("{name} r={r}: energy {energy}, law {law}")
                })?;
                ensure(built.certificate.holds, || {
                    format!("{name} r={r}: certificate {}", built.certificate.witness)
                })
            })?;
        }
    }
    Ok(())
}

fn iterated_block_form() -> Check {
    let h = c4();
    let g = iterate_kronecker(&h, &[k4(), k4()]).map_err(|e| e.to_string())?;
    max_energy_product(g.graph(), 64, 18)?;
    within(
        skew_spectrum(&g.graph().skew_adjacency()).unwrap().energy(),
        64.0 * 18f64.sqrt(),
        1e-9,
        "64√18",
    )?;
    // C4 is relabeled X-first, and X × V(K4) × V(K4) stays a prefix.
    let s = k4().skew_adjacency();
    let block = h
        .biadjacency()
        .kronecker(&s)
        .unwrap()
        .kronecker(&s)
        .unwrap();
    let zero = |r, c| IntMatrix::zeros(r, c);
    let (r, c) = (block.rows(), block.cols());
    let expected = IntMatrix::from_blocks(
        &zero(r, r),
        &block,
        &block.transpose().neg().unwrap(),
        &zero(c, c),
    )
    .unwrap();
    ensure(g.graph().skew_adjacency() == expected, || {
        "block form differs".into()
    })
}

fn random_product_trials() -> Check {
    timed(Duration::from_secs(30), "200 trials", || {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for strong in [false, true] {
            for trial in 0..100 {
                let m = rng.gen_range(1..=6);
                let n = rng.gen_range(1..=5);
                let h = random_oriented_bipartite(&mut rng, m, 0.5);
                let base = random_graph(&mut rng, n, 0.5);
                let g = random_orientation(&mut rng, &base);
                let mu = skew_spectrum(&h.graph().skew_adjacency())
                    .unwrap()
                    .positive_values();
                let lambda = skew_spectrum(&g.skew_adjacency())
                    .unwrap()
                    .positive_values();
                let (pred, prod) = if strong {
                    (predict_strong(&mu, m, &lambda, n), orient_strong(&h, &g))
                } else {
                    (
                        predict_kronecker(&mu, m, &lambda, n),
                        orient_kronecker(&h, &g),
                    )
                };
                let pred = pred.map_err(|e| e.to_string())?;
                let computed = skew_spectrum(&prod.skew_adjacency()).unwrap();
                let report = compare(&pred, &computed, 1e-8).map_err(|e| e.to_string())?;
                ensure(report.pass, || {
                    format!(
                        "strong={strong} trial {trial}: deviation {}",
                        report.max_abs_dev
                    )
                })?;
            }
        }
        Ok(())
    })
}

fn lexicographic_p2_c4() -> Check {
    let c4 = seed(Seed::C4).unwrap();
    let kn = find_commuting_kn(&c4)
        .map_err(|e| e.to_string())?
        .ok_or("no commuting K4 orientation")?;
    let s2 = c4.skew_adjacency();
    let s3 = kn.skew_adjacency();
    ensure(s3.gram().unwrap() == IntMatrix::scalar(4, 3), || {
        "S₃ᵀS₃ ≠ 3I".into()
    })?;
    ensure(s2.matmul(&s3).unwrap() == s3.matmul(&s2).unwrap(), || {
        "S₂S₃ ≠ S₃S₂".into()
    })?;
    let p2 = Bipartite::x_first(seed(Seed::P2).unwrap()).unwrap();
    let g = orient_lexicographic(&p2, &c4, &kn).map_err(|e| e.to_string())?;
    max_energy_product(&g, 8, 6)?;
    within(
        skew_spectrum(&g.skew_adjacency()).unwrap().energy(),
        8.0 * 6f64.sqrt(),
        1e-9,
        "8√6",
    )
}

fn exhaustive_search() -> Check {
    timed(Duration::from_secs(1), "searches", || {
        let c4_codes = enumerate_max_energy(&Graph::cycle(4)).map_err(|e| e.to_string())?;
        ensure(c4_codes.len() == 8, || {
            format!("C4 gave {} codes", c4_codes.len())
        })?;
        let k4_codes = enumerate_max_energy(&Graph::complete(4)).map_err(|e| e.to_string())?;
        let canonical = code_of(&k4());
        ensure(k4_codes.contains(&canonical), || {
            "K4 search misses the seed".into()
        })
    })
}

/// Random orthogonal matrix as a product of Householder reflections.
fn random_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<f64>> {
    let mut q: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| f64::from(u8::from(i == j))).collect())
        .collect();
    for _ in 0..n.min(6) {
        let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let norm2: f64 = v.iter().map(|x| x * x).sum();
        if norm2 < 1e-6 {
            continue;
        }
        // Q ← Q (I − 2vvᵀ/vᵀv)
        for row in q.iter_mut() {
            let dot: f64 = row.iter().zip(&v).map(|(a, b)| a * b).sum();
            for (x, vi) in row.iter_mut().zip(&v) {
                *x -= 2.0 * dot / norm2 * vi;
            }
        }
    }
    q
}

fn numerical_kernel() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..50 {
        let n = rng.gen_range(1..=32);
        let d: Vec<f64> = (0..n).map(|_| rng.gen_range(-10.0..10.0)).collect();
        let q = random_orthogonal(&mut rng, n);
        let mut a =
            FloatMatrix::from_fn(n, n, |i, j| (0..n).map(|k| q[i][k] * d[k] * q[j][k]).sum());
        // symmetrize away the rounding in QDQᵀ
        a = FloatMatrix::from_fn(n, n, |i, j| 0.5 * (a.get(i, j) + a.get(j, i)));
        let got = symmetric_eigenvalues(&a).map_err(|e| e.to_string())?;
        let mut want = d.clone();
        want.sort_by(f64::total_cmp);
        let dev = got
            .iter()
            .zip(&want)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        ensure(dev <= 1e-9, || {
            format!("trial {trial} (n={n}): deviation {dev:e}")
        })?;
    }
    for trial in 0..100 {
        let n = rng.gen_range(1..=20);
        let p = rng.gen_range(0.0..1.0);
        let base = random_graph(&mut rng, n, p);
        let g = random_orientation(&mut rng, &base);
        let spectrum = skew_spectrum(&g.skew_adjacency()).map_err(|e| e.to_string())?;
        let squares: f64 = spectrum.values().iter().map(|x| x * x).sum();
        within(
            squares,
            2.0 * g.arc_count() as f64,
            1e-8,
            &format!("graph {trial} Σλ²"),
        )?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("exact seed certificates", exact_certificates),
        ("C4 ⊗ K4 energy 16√6", kronecker_c4_k4),
        ("C4 ∗ K4 energy 16√11", strong_c4_k4),
        ("C4 □ K4 energy 16√5", cartesian_c4_k4),
        ("family energy laws r ≤ 2", family_laws),
        ("iterated Kronecker block form", iterated_block_form),
        ("random Kronecker and strong spectra", random_product_trials),
        ("lexicographic P2[C4] energy 8√6", lexicographic_p2_c4),
        ("exhaustive orientation search", exhaustive_search),
        ("eigensolver and trace identity", numerical_kernel),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
