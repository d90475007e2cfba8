//! Brute-force reference implementations used by the integration suites.
//! Everything here is written directly from the measure definitions with
//! plain loops; nothing calls into the library's metric code.

#![allow(dead_code, clippy::needless_range_loop)]

use binbench::synth::SplitMix64;
use binbench::{BinaryImage, GrayImage};

pub struct Counts {
    pub tp: f64,
    pub fp: f64,
    pub fn_: f64,
    pub tn: f64,
}

pub fn counts(gt: &BinaryImage, b: &BinaryImage) -> Counts {
    let mut c = Counts { tp: 0.0, fp: 0.0, fn_: 0.0, tn: 0.0 };
    for y in 0..gt.height() {
        for x in 0..gt.width() {
            match (gt.get(x, y), b.get(x, y)) {
                (true, true) => c.tp += 1.0,
                (false, true) => c.fp += 1.0,
                (true, false) => c.fn_ += 1.0,
                (false, false) => c.tn += 1.0,
            }
        }
    }
    c
}

fn div0(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        0.0
    } else {
        a / b
    }
}

pub fn f_measure(gt: &BinaryImage, b: &BinaryImage) -> f64 {
    let c = counts(gt, b);
    let recall = div0(c.tp, c.tp + c.fn_);
    let precision = div0(c.tp, c.tp + c.fp);
    if c.tp == 0.0 || recall + precision == 0.0 {
        return 0.0;
    }
    100.0 * 2.0 * recall * precision / (recall + precision)
}

/// Pseudo F-Measure given the ground-truth skeleton.
pub fn pseudo_f_measure(gt: &BinaryImage, skel: &BinaryImage, b: &BinaryImage) -> f64 {
    let (mut skel_n, mut skel_hit) = (0.0, 0.0);
    for y in 0..gt.height() {
        for x in 0..gt.width() {
            if skel.get(x, y) {
                skel_n += 1.0;
                if b.get(x, y) {
                    skel_hit += 1.0;
                }
            }
        }
    }
    if skel_n == 0.0 {
        return 0.0;
    }
    let c = counts(gt, b);
    let recall = skel_hit / skel_n;
    let precision = div0(c.tp, c.tp + c.fp);
    if recall + precision == 0.0 {
        return 0.0;
    }
    100.0 * 2.0 * recall * precision / (recall + precision)
}

pub fn psnr(gt: &BinaryImage, b: &BinaryImage) -> f64 {
    let n = (gt.width() * gt.height()) as f64;
    let mut sq = 0.0;
    for y in 0..gt.height() {
        for x in 0..gt.width() {
            let d = gt.get(x, y) as i32 as f64 - b.get(x, y) as i32 as f64;
            sq += d * d;
        }
    }
    let mse = sq / n;
    if mse == 0.0 {
        f64::INFINITY
    } else {
        10.0 * (1.0 / mse).log10()
    }
}

pub fn nrm_literal(gt: &BinaryImage, b: &BinaryImage) -> f64 {
    let c = counts(gt, b);
    (div0(c.fn_, c.fn_ + c.fp) + div0(c.fp, c.fp + c.tn)) / 2.0
}

pub fn nrm_standard(gt: &BinaryImage, b: &BinaryImage) -> f64 {
    let c = counts(gt, b);
    (div0(c.fn_, c.fn_ + c.tp) + div0(c.fp, c.fp + c.tn)) / 2.0
}

pub fn drd_weight(i: i64, j: i64) -> f64 {
    let mut total = 0.0;
    for a in -2i64..=2 {
        for c in -2i64..=2 {
            if (a, c) != (0, 0) {
                total += 1.0 / ((a * a + c * c) as f64).sqrt();
            }
        }
    }
    if (i, j) == (0, 0) {
        0.0
    } else {
        1.0 / ((i * i + j * j) as f64).sqrt() / total
    }
}

pub fn nubn(gt: &BinaryImage) -> usize {
    let mut n = 0;
    for by in (0..gt.height()).step_by(8) {
        for bx in (0..gt.width()).step_by(8) {
            let (mut fg, mut bg) = (false, false);
            for y in by..(by + 8).min(gt.height()) {
                for x in bx..(bx + 8).min(gt.width()) {
                    if gt.get(x, y) {
                        fg = true;
                    } else {
                        bg = true;
                    }
                }
            }
            if fg && bg {
                n += 1;
            }
        }
    }
    n
}

pub fn drd(gt: &BinaryImage, b: &BinaryImage) -> f64 {
    let (w, h) = (gt.width() as i64, gt.height() as i64);
    let mut sum = 0.0;
    for y in 0..h {
        for x in 0..w {
            let bv = b.get(x as usize, y as usize);
            if gt.get(x as usize, y as usize) == bv {
                continue;
            }
            for j in -2..=2 {
                for i in -2..=2 {
                    let (xx, yy) = (x + i, y + j);
                    let g = if xx >= 0 && yy >= 0 && xx < w && yy < h {
                        gt.get(xx as usize, yy as usize)
                    } else {
                        false
                    };
                    let diff = (g as i32 - bv as i32).abs() as f64;
                    sum += diff * drd_weight(j, i);
                }
            }
        }
    }
    sum / nubn(gt).max(1) as f64
}

/// Foreground pixels with a background 4-neighbour; outside counts as background.
pub fn contour(gt: &BinaryImage) -> Vec<(i64, i64)> {
    let (w, h) = (gt.width() as i64, gt.height() as i64);
    let fg = |x: i64, y: i64| x >= 0 && y >= 0 && x < w && y < h && gt.get(x as usize, y as usize);
    let mut out = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if fg(x, y) && !(fg(x - 1, y) && fg(x + 1, y) && fg(x, y - 1) && fg(x, y + 1)) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Euclidean distance from every pixel to the nearest contour pixel.
pub fn contour_distances(gt: &BinaryImage) -> Vec<Vec<f64>> {
    let c = contour(gt);
    (0..gt.height() as i64)
        .map(|y| {
            (0..gt.width() as i64)
                .map(|x| {
                    c.iter()
                        .map(|&(cx, cy)| (((x - cx).pow(2) + (y - cy).pow(2)) as f64).sqrt())
                        .fold(f64::INFINITY, f64::min)
                })
                .collect()
        })
        .collect()
}

/// MPM with D summed over the whole image (`object == false`) or over the
/// ground-truth foreground only, the latter falling back to 1 when zero.
pub fn mpm(gt: &BinaryImage, b: &BinaryImage, object: bool) -> f64 {
    let d = contour_distances(gt);
    let (mut fn_sum, mut fp_sum, mut total) = (0.0, 0.0, 0.0);
    for y in 0..gt.height() {
        for x in 0..gt.width() {
            let (g, v) = (gt.get(x, y), b.get(x, y));
            if g && !v {
                fn_sum += d[y][x];
            }
            if !g && v {
                fp_sum += d[y][x];
            }
            if !object || g {
                total += d[y][x];
            }
        }
    }
    if object && total == 0.0 {
        total = 1.0;
    }
    if fn_sum + fp_sum == 0.0 {
        return 0.0;
    }
    (fn_sum + fp_sum) / (2.0 * total)
}

/// Random image of the given size with foreground density `permille`.
pub fn random_mask(rng: &mut SplitMix64, w: usize, h: usize, permille: u32) -> BinaryImage {
    BinaryImage::from_fn(w, h, |_, _| rng.chance(permille))
}

/// A random ground truth with at least one foreground pixel and a
/// binarization made by flipping some of its pixels.
pub fn random_pair(rng: &mut SplitMix64, w: usize, h: usize) -> (BinaryImage, BinaryImage) {
    let density = rng.range(50, 600) as u32;
    let mut gt = random_mask(rng, w, h, density);
    if gt.count_foreground() == 0 {
        gt.set(w / 2, h / 2, true);
    }
    let flip = rng.range(0, 400) as u32;
    let b = BinaryImage::from_fn(w, h, |x, y| gt.get(x, y) ^ rng.chance(flip));
    (gt, b)
}

/// Closeness check with an absolute tolerance; equal infinities match.
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    if a.is_infinite() || b.is_infinite() {
        return a == b;
    }
    (a - b).abs() <= tol
}

/// Exhaustive Otsu in exact integer arithmetic. The between-class variance
/// of split t is proportional to (n*s0 - n0*S)^2 / (n0*n1); candidates are
/// compared by cross-multiplication.
pub fn otsu_scan(hist: &[u64; 256]) -> u8 {
    let n: i128 = hist.iter().map(|&c| c as i128).sum();
    let total: i128 = hist.iter().enumerate().map(|(v, &c)| v as i128 * c as i128).sum();
    let mut best: Option<(u8, i128, i128)> = None;
    for t in 0..256usize {
        let n0: i128 = hist[..t].iter().map(|&c| c as i128).sum();
        let s0: i128 = hist[..t].iter().enumerate().map(|(v, &c)| v as i128 * c as i128).sum();
        let n1 = n - n0;
        if n0 == 0 || n1 == 0 {
            continue;
        }
        let num = (n * s0 - n0 * total).pow(2);
        let den = n0 * n1;
        let better = match best {
            None => true,
            Some((_, bn, bd)) => num * bd > bn * den,
        };
        if better {
            best = Some((t as u8, num, den));
        }
    }
    best.map_or(0, |b| b.0)
}

/// Naive replicate-padded window statistics (population stddev).
pub fn window_stats(img: &GrayImage, window: usize) -> (Vec<f64>, Vec<f64>) {
    let r = (window / 2) as isize;
    let (mut means, mut devs) = (Vec::new(), Vec::new());
    for y in 0..img.height() as isize {
        for x in 0..img.width() as isize {
            let mut vals = Vec::new();
            for dy in -r..=r {
                for dx in -r..=r {
                    vals.push(img.get_clamped(x + dx, y + dy) as f64);
                }
            }
            let m = vals.iter().sum::<f64>() / vals.len() as f64;
            let var = vals.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / vals.len() as f64;
            means.push(m);
            devs.push(var.sqrt());
        }
    }
    (means, devs)
}

/// 3x3 replicate-padded median, applied where it differs from the pixel by
/// more than `max_dev`.
pub fn conditional_median(img: &GrayImage, max_dev: u8) -> GrayImage {
    GrayImage::from_fn(img.width(), img.height(), |x, y| {
        let mut v = Vec::new();
        for dy in -1..=1 {
            for dx in -1..=1 {
                v.push(img.get_clamped(x as isize + dx, y as isize + dy));
            }
        }
        v.sort();
        let p = img.get(x, y);
        if p.abs_diff(v[4]) > max_dev {
            v[4]
        } else {
            p
        }
    })
}

/// Mean of the Niblack (k = -0.2), Sauvola (k = 0.2, R), Wolf-Jolion
/// (k = 0.5) and NICK (k = -0.1) thresholds over the median-cleaned page.
pub fn ensemble_thresholds(img: &GrayImage, window: usize, r: f64) -> Vec<f64> {
    let clean = conditional_median(img, 50);
    let (m, s) = window_stats(&clean, window);
    let s_max = s.iter().cloned().fold(0.0, f64::max);
    let lo = *clean.data().iter().min().unwrap() as f64;
    (0..m.len())
        .map(|i| {
            let niblack = m[i] - 0.2 * s[i];
            let sauvola = m[i] * (1.0 + 0.2 * (s[i] / r - 1.0));
            let ratio = if s_max > 0.0 { s[i] / s_max } else { 0.0 };
            let wolf = (1.0 - 0.5) * m[i] + 0.5 * lo + 0.5 * ratio * (m[i] - lo);
            let nick = m[i] - 0.1 * (s[i] * s[i] + m[i] * m[i]).sqrt();
            (niblack + sauvola + wolf + nick) / 4.0
        })
        .collect()
}

/// Squared distance from every pixel to the nearest seed, by scanning all
/// seeds.
pub fn squared_distances(seed: &BinaryImage) -> Vec<i64> {
    let (w, h) = (seed.width() as i64, seed.height() as i64);
    let seeds: Vec<(i64, i64)> = (0..h)
        .flat_map(|y| (0..w).map(move |x| (x, y)))
        .filter(|&(x, y)| seed.get(x as usize, y as usize))
        .collect();
    (0..h)
        .flat_map(|y| (0..w).map(move |x| (x, y)))
        .map(|(x, y)| {
            seeds
                .iter()
                .map(|&(sx, sy)| (x - sx).pow(2) + (y - sy).pow(2))
                .min()
                .unwrap()
        })
        .collect()
}
