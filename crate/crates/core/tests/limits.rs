use mapblocks::limits::{
    discriminate_scale, frechet_type_cdf, frechet_type_median, gamma_sample, inverse_gamma_power_cdf,
    ks_critical_one, ks_one_sample, ks_two_sample, laplace_estimate, median, ScalePreset, StableSpec,
};
use mapblocks::rng::rng_from_seed;

#[test]
fn stable_laplace_transform() {
    let spec = StableSpec::calibrated();
    let mut rng = rng_from_seed(1_000_003);
    let xs: Vec<f64> = (0..1_000_000).map(|_| spec.sample(&mut rng)).collect();
    for t in [0.25, 0.5, 1.0] {
        let e = laplace_estimate(&xs, t, &spec);
        assert!(e.within(3.0), "t = {t}: {e:?}");
    }
    // spectrally positive with mean zero
    let mean = xs.iter().sum::<f64>() / xs.len() as f64;
    assert!(mean.abs() < 0.1, "{mean}");
}

#[test]
fn frechet_type_law_of_a_gamma_power() {
    // G_2 ~ Exp(1), G_3 ~ Γ(2)
    for k in [2usize, 3] {
        let mut rng = rng_from_seed(k as u64);
        let g: Vec<f64> = (0..20_000).map(|_| gamma_sample((k - 1) as f64, &mut rng).powf(-1.5)).collect();
        let d = ks_one_sample(&g, |x| frechet_type_cdf(k, x));
        assert!(d < ks_critical_one(g.len()), "k = {k}: {d}");
        let h: Vec<f64> = g.iter().map(|v| v.powf(4.0 / 9.0)).collect(); // G^{-2/3}
        let d = ks_one_sample(&h, |x| inverse_gamma_power_cdf(k, x));
        assert!(d < ks_critical_one(h.len()), "k = {k}: {d}");
    }
    assert!((frechet_type_cdf(2, frechet_type_median()) - 0.5).abs() < 1e-12);
}

#[test]
fn ks_statistics_are_exact_on_small_inputs() {
    assert_eq!(ks_two_sample(&[1.0, 2.0], &[3.0, 4.0]), 1.0);
    assert_eq!(ks_two_sample(&[1.0, 3.0], &[2.0, 4.0]), 0.5);
    let d = ks_one_sample(&[0.5], |x| x.clamp(0.0, 1.0));
    assert!((d - 0.5).abs() < 1e-15);
    assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
}

#[test]
fn presets_and_discrimination() {
    assert!((ScalePreset::Theorem.value() - 1.2795).abs() < 1e-3);
    assert!((ScalePreset::Proof.value() - 0.5958).abs() < 1e-3);
    let v = discriminate_scale(ScalePreset::Proof.value());
    assert_eq!(v.closer, ScalePreset::Proof);
    assert!(v.ratio.is_infinite() || v.ratio > 1e6);
    let mid = (ScalePreset::Proof.value() * ScalePreset::Theorem.value()).sqrt();
    assert!((discriminate_scale(mid).ratio - 1.0).abs() < 1e-9);
}
