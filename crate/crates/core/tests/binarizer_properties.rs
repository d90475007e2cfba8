mod oracle;

use binbench::binarize::{
    binarize, ensemble_threshold_map, otsu_threshold, su_contrast,
    su_contrast_stages, BinarizerParams, Method,
};
use binbench::metrics::{confusion_counts, f_measure};
use binbench::raster::{connected_components, histogram};
use binbench::synth::{generate, DegradationKind, DegradationSpec, SplitMix64};
use binbench::GrayImage;
use proptest::prelude::*;

#[test]
fn otsu_equals_exhaustive_scan_on_random_histograms() {
    let mut rng = SplitMix64::new(0x075);
    for case in 0..100 {
        let mut hist = [0u64; 256];
        let occupied = rng.range(1, 256);
        for _ in 0..occupied {
            hist[rng.below(256) as usize] += rng.range(1, 60) as u64;
        }
        assert_eq!(otsu_threshold(&hist), oracle::otsu_scan(&hist), "case {case}");
    }
}

#[test]
fn otsu_edge_histograms() {
    let mut one = [0u64; 256];
    one[77] = 10;
    assert_eq!(otsu_threshold(&one), 0);
    assert_eq!(oracle::otsu_scan(&one), 0);
    let mut two = [0u64; 256];
    two[10] = 5;
    two[200] = 5;
    assert_eq!(otsu_threshold(&two), oracle::otsu_scan(&two));
    assert_eq!(otsu_threshold(&two), 11);
}

fn random_gray(rng: &mut SplitMix64, w: usize, h: usize) -> GrayImage {
    GrayImage::from_fn(w, h, |x, _| {
        let base = if x % 7 < 2 { 40 } else { 190 };
        (base + rng.range(-30, 30)).clamp(0, 255) as u8
    })
}

#[test]
fn ensemble_threshold_is_mean_of_four_formulas() {
    let mut rng = SplitMix64::new(41);
    for (w, h, window) in [(23, 17, 5), (30, 12, 9), (16, 16, 15)] {
        let img = random_gray(&mut rng, w, h);
        let p = BinarizerParams {
            window,
            ..BinarizerParams::for_method(Method::NiblackEnsemble)
        };
        let want = oracle::ensemble_thresholds(&img, window, p.r_dynamic);
        let got = ensemble_threshold_map(&img, &p).unwrap();
        for i in 0..got.len() {
            assert!((got[i] - want[i]).abs() < 1e-9, "{w}x{h} w{window} px {i}");
        }
    }
}

#[test]
fn su_beats_otsu_on_bleed_through() {
    let (mut su, mut ot) = (0.0, 0.0);
    for seed in 0..6 {
        let spec = DegradationSpec {
            seed,
            width: 192,
            height: 128,
            strokes: 25,
            ..DegradationSpec::default()
        }
        .with(DegradationKind::BleedThrough, 0.8)
        .with(DegradationKind::IlluminationGradient, 0.7);
        let g = generate(&spec).unwrap();
        let p = BinarizerParams::for_method(Method::SuContrast);
        su += f_measure(&confusion_counts(&g.ground_truth, &su_contrast(&g.page, &p).unwrap()).unwrap());
        let o = binarize(&g.page, &BinarizerParams::for_method(Method::Otsu)).unwrap();
        ot += f_measure(&confusion_counts(&g.ground_truth, &o).unwrap());
    }
    assert!(su > ot, "su {su} otsu {ot}");
}

fn image_strategy() -> impl Strategy<Value = GrayImage> {
    (8usize..40, 8usize..40, any::<u64>()).prop_map(|(w, h, seed)| {
        let mut rng = SplitMix64::new(seed);
        random_gray(&mut rng, w, h)
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::with_cases(24)
    })]

    #[test]
    fn every_method_is_deterministic_and_shape_preserving(img in image_strategy()) {
        for m in Method::ALL {
            let p = BinarizerParams { window: 7, grid_cell: 8, ..BinarizerParams::for_method(m) };
            let a = binarize(&img, &p).unwrap();
            let b = binarize(&img, &p).unwrap();
            prop_assert_eq!((a.width(), a.height()), (img.width(), img.height()));
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn su_stages_nest(img in image_strategy(), min_component in 1usize..10) {
        let p = BinarizerParams { min_component, ..BinarizerParams::for_method(Method::SuContrast) };
        let s = su_contrast_stages(&img, &p).unwrap();
        prop_assert!(s.text_edges.is_subset_of(&s.edges));
        prop_assert!(s.text_edges.is_subset_of(&s.high_contrast));
        prop_assert!(s.mask.is_subset_of(&s.thresholded));
        let labels = connected_components(&s.mask);
        prop_assert!(labels.sizes.iter().all(|&n| n >= min_component));
    }

    #[test]
    fn histogram_counts_every_pixel(img in image_strategy()) {
        prop_assert_eq!(histogram(&img).iter().sum::<u64>() as usize, img.len());
    }
}
