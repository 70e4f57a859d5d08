use diskdet_cli::{Profile, RunConfig, ToleranceOverrides};
use proptest::prelude::*;

fn tabulated(radius: f64, inner: Vec<(f64, f64)>, start: f64, end: f64) -> Vec<(f64, f64)> {
    let mut r: Vec<f64> = inner.iter().map(|p| p.0 * radius).collect();
    r.sort_by(f64::total_cmp);
    r.dedup();
    let mut nodes = vec![(0.0, start)];
    nodes.extend(r.into_iter().filter(|&x| x > 0.0 && x < radius).zip(inner.iter().map(|p| p.1)));
    nodes.push((radius, end));
    nodes
}

proptest! {
    #[test]
    fn polynomial_round_trip(
        radius in 1e-3..1e3f64,
        coeffs in prop::collection::vec(-1e6..1e6f64, 0..6),
        quad in prop::option::of(1e-14..0.5f64),
        tail in prop::option::of(1e-14..0.5f64),
        path in prop::option::of("[a-z]{1,8}\\.json"),
    ) {
        let cfg = RunConfig {
            radius,
            profile: Profile::Polynomial(coeffs),
            tolerances: if quad.is_none() && tail.is_none() {
                None
            } else {
                Some(ToleranceOverrides { quadrature: quad, zeta_tail: tail })
            },
            output_path: path.map(Into::into),
        };
        let text = cfg.to_json();
        let back = RunConfig::from_json(&text).unwrap();
        prop_assert_eq!(&back, &cfg);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn tabulated_round_trip(
        radius in 0.1..10.0f64,
        inner in prop::collection::vec((0.0..1.0f64, -5.0..5.0f64), 0..8),
        start in -5.0..5.0f64,
        end in -5.0..5.0f64,
    ) {
        let cfg = RunConfig {
            radius,
            profile: Profile::Tabulated(tabulated(radius, inner, start, end)),
            tolerances: None,
            output_path: None,
        };
        let back = RunConfig::from_json(&cfg.to_json()).unwrap();
        prop_assert_eq!(back, cfg);
    }
}
