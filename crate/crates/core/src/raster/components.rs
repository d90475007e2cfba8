use super::NEIGHBORS_8;
use crate::image::BinaryImage;

/// 8-connected labelling of foreground pixels.
///
/// Labels start at 1 and follow first-encounter raster order; 0 is background.
/// `sizes[i]` is the pixel count of label `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub width: usize,
    pub height: usize,
    pub labels: Vec<u32>,
    pub sizes: Vec<usize>,
}

impl Labeling {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    #[inline]
    pub fn label_at(&self, x: usize, y: usize) -> u32 {
        self.labels[y * self.width + x]
    }
}

pub fn connected_components(b: &BinaryImage) -> Labeling {
    let (w, h) = (b.width(), b.height());
    let mut labels = vec![0u32; w * h];
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for start in 0..w * h {
        if !b.mask()[start] || labels[start] != 0 {
            continue;
        }
        let label = sizes.len() as u32 + 1;
        labels[start] = label;
        stack.push(start);
        let mut size = 0usize;
        while let Some(i) = stack.pop() {
            size += 1;
            let (x, y) = ((i % w) as isize, (i / w) as isize);
            for &(dx, dy) in &NEIGHBORS_8 {
                let (nx, ny) = (x + dx, y + dy);
                if nx < 0 || ny < 0 || nx >= w as isize || ny >= h as isize {
                    continue;
                }
                let j = ny as usize * w + nx as usize;
                if b.mask()[j] && labels[j] == 0 {
                    labels[j] = label;
                    stack.push(j);
                }
            }
        }
        sizes.push(size);
    }
    Labeling {
        width: w,
        height: h,
        labels,
        sizes,
    }
}

/// Drops foreground components with fewer than `min_size` pixels.
pub fn remove_small_components(b: &BinaryImage, min_size: usize) -> BinaryImage {
    if min_size <= 1 {
        return b.clone();
    }
    let lab = connected_components(b);
    let mask = lab
        .labels
        .iter()
        .map(|&l| l != 0 && lab.sizes[l as usize - 1] >= min_size)
        .collect();
    BinaryImage::new(b.width(), b.height(), mask).expect("same shape")
}
