use crate::error::{Error, Result};
use crate::image::BinaryImage;

/// Euclidean distance from every pixel to the nearest seed pixel.
#[derive(Clone, Debug)]
pub struct DistanceField {
    pub width: usize,
    pub height: usize,
    pub dist: Vec<f64>,
}

impl DistanceField {
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.dist[y * self.width + x]
    }
}

/// Exact squared Euclidean distances, as integers.
///
/// Two separable passes of the lower-envelope-of-parabolas transform
/// (columns, then rows). All arithmetic stays in `i64`.
pub fn squared_distance_transform(seed: &BinaryImage) -> Result<Vec<i64>> {
    let (w, h) = (seed.width(), seed.height());
    if !seed.mask().iter().any(|&m| m) {
        return Err(Error::EmptySeed);
    }
    // larger than any real squared distance on the image
    let inf = ((w + h) as i64 + 1).pow(2);

    let mut grid: Vec<i64> = seed.mask().iter().map(|&m| if m { 0 } else { inf }).collect();

    let n = w.max(h);
    let mut f = vec![0i64; n];
    let mut out = vec![0i64; n];
    let mut v = vec![0usize; n];
    let mut z = vec![0f64; n + 1];

    for x in 0..w {
        for y in 0..h {
            f[y] = grid[y * w + x];
        }
        lower_envelope(&f[..h], &mut out[..h], &mut v, &mut z, inf);
        for y in 0..h {
            grid[y * w + x] = out[y];
        }
    }
    for y in 0..h {
        f[..w].copy_from_slice(&grid[y * w..(y + 1) * w]);
        lower_envelope(&f[..w], &mut out[..w], &mut v, &mut z, inf);
        grid[y * w..(y + 1) * w].copy_from_slice(&out[..w]);
    }
    Ok(grid)
}

/// 1D squared distance transform: `out[q] = min_p (q - p)^2 + f[p]`.
fn lower_envelope(f: &[i64], out: &mut [i64], v: &mut [usize], z: &mut [f64], inf: i64) {
    let n = f.len();
    let sites: Vec<usize> = (0..n).filter(|&q| f[q] < inf).collect();
    if sites.is_empty() {
        out.fill(inf);
        return;
    }
    // intersection abscissa of the parabolas rooted at p and q (p < q)
    let meet = |p: usize, q: usize| -> f64 {
        let (pi, qi) = (p as i64, q as i64);
        ((f[q] + qi * qi) - (f[p] + pi * pi)) as f64 / (2 * (qi - pi)) as f64
    };
    let mut k = 0usize;
    v[0] = sites[0];
    z[0] = f64::NEG_INFINITY;
    z[1] = f64::INFINITY;
    for &q in &sites[1..] {
        let mut s = meet(v[k], q);
        while s <= z[k] {
            k -= 1;
            s = meet(v[k], q);
        }
        k += 1;
        v[k] = q;
        z[k] = s;
        z[k + 1] = f64::INFINITY;
    }
    k = 0;
    for (q, o) in out.iter_mut().enumerate() {
        while z[k + 1] < q as f64 {
            k += 1;
        }
        let d = q as i64 - v[k] as i64;
        *o = d * d + f[v[k]];
    }
}

/// Exact Euclidean distance transform to the nearest `true` pixel.
pub fn distance_transform(seed: &BinaryImage) -> Result<DistanceField> {
    let sq = squared_distance_transform(seed)?;
    Ok(DistanceField {
        width: seed.width(),
        height: seed.height(),
        dist: sq.into_iter().map(|d| (d as f64).sqrt()).collect(),
    })
}
