mod oracle;

use binbench::metrics::{
    confusion_counts, drd, drd_distortion_sum, drd_weight_matrix, evaluate_pair, f_measure, mpm,
    mpm_with, nrm, pseudo_f_measure, psnr, EvalOptions, MpmNormalization, NrmMode,
};
use binbench::raster::skeletonize;
use binbench::synth::SplitMix64;
use binbench::BinaryImage;
use proptest::prelude::*;

const TOL: f64 = 1e-9;

#[test]
fn counting_measures_match_per_pixel_oracle() {
    let mut rng = SplitMix64::new(0xC0FFEE);
    for case in 0..500 {
        let (gt, b) = oracle::random_pair(&mut rng, 16, 16);
        let c = confusion_counts(&gt, &b).unwrap();
        let skel = skeletonize(&gt);
        let checks = [
            ("F", f_measure(&c), oracle::f_measure(&gt, &b)),
            ("pF", pseudo_f_measure(&gt, &b).unwrap(), oracle::pseudo_f_measure(&gt, &skel, &b)),
            ("PSNR", psnr(&gt, &b).unwrap(), oracle::psnr(&gt, &b)),
            ("NRM", nrm(&c, NrmMode::PaperLiteral), oracle::nrm_literal(&gt, &b)),
            ("NRM std", nrm(&c, NrmMode::Standard), oracle::nrm_standard(&gt, &b)),
        ];
        for (name, got, want) in checks {
            assert!(oracle::close(got, want, TOL), "case {case} {name}: {got} vs {want}");
        }
    }
}

#[test]
fn drd_matches_literal_double_loop() {
    let mut rng = SplitMix64::new(0xD2D);
    for case in 0..200 {
        let (gt, b) = oracle::random_pair(&mut rng, 16, 16);
        let got = drd(&gt, &b).unwrap();
        let want = oracle::drd(&gt, &b);
        assert!((got - want).abs() <= TOL, "case {case}: {got} vs {want}");
    }
}

#[test]
fn drd_on_ragged_sizes() {
    let mut rng = SplitMix64::new(17);
    for _ in 0..60 {
        let w = rng.range(1, 21) as usize;
        let h = rng.range(1, 21) as usize;
        let (gt, b) = oracle::random_pair(&mut rng, w, h);
        assert!((drd(&gt, &b).unwrap() - oracle::drd(&gt, &b)).abs() <= TOL, "{w}x{h}");
    }
}

#[test]
fn mpm_matches_brute_force_in_both_modes() {
    let mut rng = SplitMix64::new(0x3A3);
    for case in 0..200 {
        let (gt, b) = oracle::random_pair(&mut rng, 16, 16);
        let image = mpm(&gt, &b).unwrap();
        let object = mpm_with(&gt, &b, MpmNormalization::Object).unwrap();
        assert!((image - oracle::mpm(&gt, &b, false)).abs() <= TOL, "case {case}");
        assert!((object - oracle::mpm(&gt, &b, true)).abs() <= TOL, "case {case}");
    }
}

#[test]
fn report_fields_equal_standalone_measures() {
    let mut rng = SplitMix64::new(5);
    for _ in 0..50 {
        let (gt, b) = oracle::random_pair(&mut rng, 16, 16);
        let opts = EvalOptions {
            nrm_mode: NrmMode::Standard,
            mpm_d: MpmNormalization::Object,
        };
        let r = evaluate_pair(&gt, &b, opts).unwrap();
        let c = confusion_counts(&gt, &b).unwrap();
        assert_eq!(r.f_measure, f_measure(&c));
        assert_eq!(r.pseudo_f_measure, pseudo_f_measure(&gt, &b).unwrap());
        assert_eq!(r.psnr, psnr(&gt, &b).unwrap());
        assert_eq!(r.drd, drd(&gt, &b).unwrap());
        assert_eq!(r.mpm, mpm_with(&gt, &b, MpmNormalization::Object).unwrap());
        assert_eq!(r.nrm, nrm(&c, NrmMode::Standard));
    }
}

#[test]
fn weight_matrix_symmetries() {
    let w = drd_weight_matrix();
    assert!((w.sum() - 1.0).abs() <= 1e-12);
    assert_eq!(w.at(0, 0), 0.0);
    for dy in -2..=2 {
        for dx in -2..=2 {
            let v = w.at(dy, dx);
            assert!(v >= 0.0);
            for u in [w.at(dx, dy), w.at(-dy, dx), w.at(dy, -dx), w.at(-dy, -dx), w.at(-dx, dy)] {
                assert!((u - v).abs() <= 1e-12);
            }
            assert!((v - oracle::drd_weight(dy as i64, dx as i64)).abs() <= 1e-15);
        }
    }
}

fn pair_strategy() -> impl Strategy<Value = (BinaryImage, BinaryImage)> {
    (1usize..14, 1usize..14, any::<u64>()).prop_map(|(w, h, seed)| {
        let mut rng = SplitMix64::new(seed);
        oracle::random_pair(&mut rng, w, h)
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::with_cases(256)
    })]

    #[test]
    fn report_is_finite_except_perfect_psnr((gt, b) in pair_strategy()) {
        let r = evaluate_pair(&gt, &b, EvalOptions::default()).unwrap();
        for v in [r.f_measure, r.pseudo_f_measure, r.drd, r.mpm, r.nrm] {
            prop_assert!(v.is_finite() && v >= 0.0);
        }
        prop_assert!(r.psnr >= 0.0);
        prop_assert_eq!(r.psnr.is_infinite(), gt == b);
        prop_assert!(r.f_measure <= 100.0 && r.pseudo_f_measure <= 100.0 && r.nrm <= 1.0);
        let perfect = r.f_measure == 100.0 && r.drd == 0.0 && r.mpm == 0.0;
        prop_assert_eq!(perfect, gt == b);
    }

    #[test]
    fn extra_flip_never_lowers_drd_numerator((gt, b) in pair_strategy(), pick in any::<u64>()) {
        let before = drd_distortion_sum(&gt, &b).unwrap();
        let wrong: Vec<usize> = (0..gt.len()).filter(|&i| gt.mask()[i] == b.mask()[i]).collect();
        prop_assume!(!wrong.is_empty());
        let i = wrong[(pick % wrong.len() as u64) as usize];
        let mut b2 = b.clone();
        b2.mask_mut()[i] = !b2.mask()[i];
        prop_assert!(drd_distortion_sum(&gt, &b2).unwrap() >= before);
    }

    #[test]
    fn mpm_treats_fp_and_fn_alike(seed in any::<u64>(), w in 4usize..14, h in 4usize..14) {
        // an FN and an FP at the same contour distance contribute equally
        let mut rng = SplitMix64::new(seed);
        let gt = oracle::random_mask(&mut rng, w, h, 450);
        prop_assume!(gt.count_foreground() > 0);
        let d = oracle::contour_distances(&gt);
        let at = |i: usize| d[i / w][i % w];
        let fg: Vec<usize> = (0..gt.len()).filter(|&i| gt.mask()[i] && at(i) > 0.0).collect();
        let pair = fg.iter().find_map(|&p| {
            (0..gt.len()).find(|&q| !gt.mask()[q] && at(q) == at(p)).map(|q| (p, q))
        });
        prop_assume!(pair.is_some());
        let (p, q) = pair.unwrap();
        let mut common = gt.clone();
        for i in 0..gt.len() {
            if i != p && i != q && rng.chance(100) {
                common.mask_mut()[i] ^= true;
            }
        }
        let mut with_fn = common.clone();
        with_fn.mask_mut()[p] = false;
        let mut with_fp = common;
        with_fp.mask_mut()[q] = true;
        let a = mpm(&gt, &with_fn).unwrap();
        let b = mpm(&gt, &with_fp).unwrap();
        prop_assert!((a - b).abs() <= 1e-12, "{} vs {}", a, b);
    }
}
