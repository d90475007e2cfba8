use super::NEIGHBORS_4;
use crate::image::BinaryImage;

/// Foreground pixels with at least one background 4-neighbour. Pixels on the
/// image border count as touching background.
pub fn extract_contour(b: &BinaryImage) -> BinaryImage {
    BinaryImage::from_fn(b.width(), b.height(), |x, y| {
        b.get(x, y)
            && NEIGHBORS_4
                .iter()
                .any(|&(dx, dy)| !b.get_or_bg(x as isize + dx, y as isize + dy))
    })
}
