use crate::error::{Error, Result};
use crate::image::GrayImage;

/// Per-pixel mean and population standard deviation over a square window.
#[derive(Clone, Debug)]
pub struct LocalStats {
    pub width: usize,
    pub height: usize,
    pub window: usize,
    pub mean: Vec<f64>,
    pub stddev: Vec<f64>,
}

impl LocalStats {
    #[inline]
    pub fn mean_at(&self, x: usize, y: usize) -> f64 {
        self.mean[y * self.width + x]
    }

    #[inline]
    pub fn stddev_at(&self, x: usize, y: usize) -> f64 {
        self.stddev[y * self.width + x]
    }
}

pub(crate) fn check_window(window: usize) -> Result<()> {
    if window < 3 || window.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "window must be odd and at least 3, got {window}"
        )));
    }
    Ok(())
}

/// Sliding-window mean and standard deviation with replicate padding.
///
/// Sums are accumulated in integers over a padded summed-area table, so the
/// variance `n*sum(x^2) - sum(x)^2` is exact before the final division.
pub fn local_stats(img: &GrayImage, window: usize) -> Result<LocalStats> {
    check_window(window)?;
    let (w, h) = (img.width(), img.height());
    let r = (window / 2) as isize;
    let pw = w + 2 * r as usize;
    let ph = h + 2 * r as usize;
    let stride = pw + 1;

    let mut sum = vec![0u64; stride * (ph + 1)];
    let mut sq = vec![0u64; stride * (ph + 1)];
    for py in 0..ph {
        let mut row_sum = 0u64;
        let mut row_sq = 0u64;
        let y = py as isize - r;
        for px in 0..pw {
            let v = img.get_clamped(px as isize - r, y) as u64;
            row_sum += v;
            row_sq += v * v;
            let i = (py + 1) * stride + px + 1;
            sum[i] = sum[i - stride] + row_sum;
            sq[i] = sq[i - stride] + row_sq;
        }
    }

    let n = (window * window) as u128;
    let nf = (window * window) as f64;
    let mut mean = Vec::with_capacity(w * h);
    let mut stddev = Vec::with_capacity(w * h);
    for y in 0..h {
        // padded rows y..y+window cover original rows y-r..=y+r
        let top = y * stride;
        let bottom = (y + window) * stride;
        for x in 0..w {
            let (l, rt) = (x, x + window);
            let s = sum[bottom + rt] + sum[top + l] - sum[bottom + l] - sum[top + rt];
            let q = sq[bottom + rt] + sq[top + l] - sq[bottom + l] - sq[top + rt];
            let var_num = n * q as u128 - (s as u128) * (s as u128);
            mean.push(s as f64 / nf);
            stddev.push((var_num as f64 / (nf * nf)).sqrt());
        }
    }

    Ok(LocalStats {
        width: w,
        height: h,
        window,
        mean,
        stddev,
    })
}
