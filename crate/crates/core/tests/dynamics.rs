use proptest::prelude::*;
use unfriend::{derive_stream, draw_shocks, update_traits, DirectedNetwork};

#[test]
fn shock_sd_within_three_standard_errors() {
    let n = 1_000_000;
    let shocks = draw_shocks(n, 5.0, &mut derive_stream(11, 0, 0)).unwrap();
    let mean = shocks.iter().sum::<f64>() / n as f64;
    let var = shocks.iter().map(|u| (u - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    // sd of the sample sd of a normal sample is about sigma / sqrt(2(n-1))
    let se = 5.0 / (2.0 * (n - 1) as f64).sqrt();
    assert!((var.sqrt() - 5.0).abs() <= 3.0 * se, "sd {}", var.sqrt());
    assert!(mean.abs() <= 3.0 * 5.0 / (n as f64).sqrt());
}

fn network(n: usize, edges: &[(usize, usize)]) -> DirectedNetwork {
    let edges: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(i, j)| (i % n, j % n))
        .filter(|(i, j)| i != j)
        .collect();
    DirectedNetwork::from_edges(n, &edges).unwrap()
}

fn case() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, Vec<(usize, usize)>)> {
    (2usize..25).prop_flat_map(|n| {
        (
            prop::collection::vec(0.0f64..100.0, n),
            prop::collection::vec(-15.0f64..15.0, n),
            prop::collection::vec((0usize..n, 0usize..n), 0..60),
        )
    })
}

proptest! {
    #[test]
    fn without_influence_the_network_is_irrelevant((y, u, edges) in case()) {
        let n = y.len();
        let full = update_traits(&y, &u, &network(n, &edges), 0.0).unwrap();
        let empty = update_traits(&y, &u, &DirectedNetwork::empty(n), 0.0).unwrap();
        prop_assert_eq!(&full, &empty);
        for i in 0..n {
            prop_assert_eq!(full[i], y[i] + u[i]);
        }
    }

    #[test]
    fn shifting_traits_shifts_the_update((y, u, edges) in case(), b1 in 0.0f64..=1.0, c in -50.0f64..50.0) {
        let n = y.len();
        let net = network(n, &edges);
        let base = update_traits(&y, &u, &net, b1).unwrap();
        let shifted: Vec<f64> = y.iter().map(|v| v + c).collect();
        let moved = update_traits(&shifted, &u, &net, b1).unwrap();
        for i in 0..n {
            prop_assert!((moved[i] - base[i] - c).abs() <= 1e-10 * (200.0 + c.abs()));
        }
    }

    #[test]
    fn sums_are_conserved_without_influence((y, u, edges) in case()) {
        let n = y.len();
        let out = update_traits(&y, &u, &network(n, &edges), 0.0).unwrap();
        let lhs: f64 = out.iter().sum();
        let rhs: f64 = y.iter().sum::<f64>() + u.iter().sum::<f64>();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
    }
}
