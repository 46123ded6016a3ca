use proptest::prelude::*;
use prpv::stats::{total_variation, Histogram};
use prpv::{
    random_pure_state, sample, sample_unbiased, state_norm, Error, Method, Mt19937, UniformSource,
};

fn method_strategy() -> impl Strategy<Value = (Method, bool)> {
    prop_oneof![
        Just((Method::Iid, false)),
        Just((Method::Normalization, false)),
        Just((Method::Normalization, true)),
        Just((Method::Trig, false)),
        Just((Method::Trig, true)),
        Just((Method::TrigExact, false)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn vectors_lie_on_the_simplex(seed in any::<u32>(), d in 2usize..=1024, (method, shuffled) in method_strategy()) {
        let mut rng = Mt19937::new(seed);
        match sample(method, d, shuffled, &mut rng) {
            Ok(p) => {
                prop_assert_eq!(p.dim(), d);
                prop_assert!(p.components().iter().all(|&c| c >= 0.0));
                let sum: f64 = p.components().iter().sum();
                prop_assert!((sum - 1.0).abs() <= 1e-12, "sum {}", sum);
                prop_assert_eq!(p.draws_used(), rng.draw_count());
            }
            Err(Error::Domain { index, argument }) => {
                prop_assert_eq!(method, Method::TrigExact);
                prop_assert!(index >= 1 && index < d);
                prop_assert!(argument > 1.0);
            }
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn states_have_unit_norm(seed in any::<u32>(), d in 2usize..=256, trig in any::<bool>()) {
        let method = if trig { Method::Trig } else { Method::Normalization };
        let mut rng = Mt19937::new(seed);
        let psi = random_pure_state(d, method, &mut rng).unwrap();
        prop_assert!((state_norm(&psi) - 1.0).abs() <= 1e-12);
        prop_assert_eq!(rng.draw_count(), (3 * d - 2) as u64);
    }

    #[test]
    fn same_seed_same_vector(seed in any::<u32>(), d in 2usize..64) {
        let a = sample_unbiased(Method::Trig, d, &mut Mt19937::new(seed)).unwrap();
        let b = sample_unbiased(Method::Trig, d, &mut Mt19937::new(seed)).unwrap();
        prop_assert_eq!(a, b);
    }
}

fn mean_vector(method: Method, d: usize, shuffled: bool, n: usize, seed: u32) -> Vec<f64> {
    let mut rng = Mt19937::new(seed);
    let mut sums = vec![0.0; d];
    for _ in 0..n {
        let p = sample(method, d, shuffled, &mut rng).unwrap();
        sums.iter_mut()
            .zip(p.components())
            .for_each(|(s, c)| *s += c);
    }
    sums.into_iter().map(|s| s / n as f64).collect()
}

#[test]
fn biased_mean_laws() {
    for d in [3usize, 6] {
        let norm = mean_vector(Method::Normalization, d, false, 1_000_000, 10 + d as u32);
        let trig = mean_vector(Method::Trig, d, false, 1_000_000, 20 + d as u32);
        for j in 1..=d {
            let expected = if j < d {
                0.5f64.powi(j as i32)
            } else {
                0.5f64.powi(d as i32 - 1)
            };
            assert!(
                (norm[j - 1] - expected).abs() < 0.003,
                "norm d={d} j={j} {norm:?}"
            );
            // trig mirrors the normalization pattern
            assert!(
                (trig[d - j] - expected).abs() < 0.003,
                "trig d={d} j={j} {trig:?}"
            );
        }
    }
}

#[test]
fn trig_means_are_reversed_normalization_means() {
    let norm = mean_vector(Method::Normalization, 5, false, 1_000_000, 1);
    let trig = mean_vector(Method::Trig, 5, false, 1_000_000, 2);
    for (t, n) in trig.iter().zip(norm.iter().rev()) {
        assert!((t - n).abs() < 0.003, "{trig:?} vs {norm:?}");
    }
}

#[test]
fn shuffled_components_are_exchangeable() {
    for method in [Method::Normalization, Method::Trig] {
        let d = 5;
        let mut rng = Mt19937::new(404);
        let mut first = Histogram::new(64).unwrap();
        let mut last = Histogram::new(64).unwrap();
        for _ in 0..1_000_000 {
            let q = sample_unbiased(method, d, &mut rng).unwrap();
            first.push(q[0]).unwrap();
            last.push(q[d - 1]).unwrap();
        }
        let tv = total_variation(&first, &last).unwrap();
        assert!(tv < 0.01, "{method}: tv {tv}");
    }
}

#[test]
fn uniforms_are_half_open() {
    let mut rng = Mt19937::new(0);
    assert!((0..100_000)
        .map(|_| rng.next_uniform())
        .all(|u| (0.0..1.0).contains(&u)));
}
