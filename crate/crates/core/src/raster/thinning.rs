//! Two-subpass 3x3 thinning (Zhang-Suen conditions).
//!
//! Neighbours are named clockwise from north:
//!
//! ```text
//!   p9 p2 p3
//!   p8 p1 p4
//!   p7 p6 p5
//! ```
//!
//! A subpass marks every pixel satisfying the classic conditions against a
//! snapshot of the mask. Marked pixels are then committed in raster order,
//! and each commit re-checks that the pixel is still a non-end pixel with a
//! single 0->1 transition. The re-check only fires where two parallel
//! deletions would disconnect a component (the 2x2 block is the smallest
//! case), so 8-connected component counts are preserved.

use crate::image::BinaryImage;

/// Ring values p2..p9 around (x, y); outside the image is background.
#[inline]
fn ring(b: &BinaryImage, x: usize, y: usize) -> [bool; 8] {
    let (x, y) = (x as isize, y as isize);
    [
        b.get_or_bg(x, y - 1),
        b.get_or_bg(x + 1, y - 1),
        b.get_or_bg(x + 1, y),
        b.get_or_bg(x + 1, y + 1),
        b.get_or_bg(x, y + 1),
        b.get_or_bg(x - 1, y + 1),
        b.get_or_bg(x - 1, y),
        b.get_or_bg(x - 1, y - 1),
    ]
}

#[inline]
fn neighbor_count(r: &[bool; 8]) -> usize {
    r.iter().filter(|&&v| v).count()
}

#[inline]
fn transitions(r: &[bool; 8]) -> usize {
    (0..8).filter(|&i| !r[i] && r[(i + 1) % 8]).count()
}

#[inline]
fn removable(r: &[bool; 8]) -> bool {
    (2..=6).contains(&neighbor_count(r)) && transitions(r) == 1
}

fn subpass(b: &mut BinaryImage, first: bool) -> usize {
    let (w, h) = (b.width(), b.height());
    let mut marked = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if !b.get(x, y) {
                continue;
            }
            let r = ring(b, x, y);
            if !removable(&r) {
                continue;
            }
            // r[0]=p2 r[2]=p4 r[4]=p6 r[6]=p8
            let ok = if first {
                !(r[0] && r[2] && r[4]) && !(r[2] && r[4] && r[6])
            } else {
                !(r[0] && r[2] && r[6]) && !(r[0] && r[4] && r[6])
            };
            if ok {
                marked.push((x, y));
            }
        }
    }
    let mut removed = 0;
    for (x, y) in marked {
        if removable(&ring(b, x, y)) {
            b.set(x, y, false);
            removed += 1;
        }
    }
    removed
}

/// Thins foreground strokes to one-pixel-wide curves. Iterates until a full
/// pass (both subpasses) removes nothing.
pub fn skeletonize(b: &BinaryImage) -> BinaryImage {
    let mut out = b.clone();
    loop {
        let removed = subpass(&mut out, true) + subpass(&mut out, false);
        if removed == 0 {
            return out;
        }
    }
}
