use statrs::distribution::{ContinuousCDF, Normal};
use unfriend::{derive_stream, normal};

#[test]
fn one_million_normals_pass_ks_at_alpha_001() {
    let mut rng = derive_stream(42, 5, 7);
    let n = 1_000_000;
    let mut draws: Vec<f64> = (0..n).map(|_| rng.standard_normal()).collect();
    draws.sort_by(f64::total_cmp);
    let reference = Normal::new(0.0, 1.0).unwrap();
    let nf = n as f64;
    let d = draws
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = reference.cdf(x);
            ((i + 1) as f64 / nf - f).max(f - i as f64 / nf)
        })
        .fold(0.0, f64::max);
    // asymptotic Kolmogorov critical value at alpha = 0.001
    let critical = 1.949 / nf.sqrt();
    assert!(d < critical, "D = {d}, critical {critical}");
}

fn correlation(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma) * (x - ma);
        sbb += (y - mb) * (y - mb);
    }
    sab / (saa * sbb).sqrt()
}

#[test]
fn distinct_streams_are_uncorrelated() {
    let keys = [
        (42, 0, 0),
        (42, 0, 1),
        (42, 1, 0),
        (43, 0, 0),
        (42, 5, 7),
        (42, 7, 5),
        (0, 0, 0),
    ];
    let draws: Vec<Vec<f64>> = keys
        .iter()
        .map(|&(s, c, r)| {
            let mut rng = derive_stream(s, c, r);
            (0..100_000).map(|_| rng.uniform()).collect()
        })
        .collect();
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            let r = correlation(&draws[i], &draws[j]);
            assert!(r.abs() < 0.01, "{:?} vs {:?}: {r}", keys[i], keys[j]);
        }
    }
}

#[test]
fn cdf_matches_independent_implementation() {
    let reference = Normal::new(0.0, 1.0).unwrap();
    for k in -800..=800 {
        let x = k as f64 / 100.0;
        let (got, want) = (normal::cdf(x), reference.cdf(x));
        assert!((got - want).abs() <= 1e-9 * want, "x = {x}: {got} vs {want}");
    }
}

#[test]
fn quantile_matches_independent_implementation() {
    let reference = Normal::new(0.0, 1.0).unwrap();
    for k in 1..1000 {
        let p = k as f64 / 1000.0;
        let (got, want) = (normal::quantile(p), reference.inverse_cdf(p));
        assert!(
            (got - want).abs() <= 1e-9 * want.abs().max(1e-3),
            "p = {p}: {got} vs {want}"
        );
    }
    for p in [1e-12, 1e-8, 1e-4, 1.0 - 1e-8] {
        let x = normal::quantile(p);
        assert!((reference.cdf(x) - p).abs() <= 1e-9 * p.min(1.0 - p), "p = {p}");
    }
}
