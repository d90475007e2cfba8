use crate::image::GrayImage;

/// 256-bin intensity histogram.
pub fn histogram(img: &GrayImage) -> [u64; 256] {
    let mut bins = [0u64; 256];
    for &v in img.data() {
        bins[v as usize] += 1;
    }
    bins
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_image() {
        let h = histogram(&GrayImage::filled(2, 2, 0));
        assert_eq!(h[0], 4);
        assert_eq!(h.iter().sum::<u64>(), 4);
    }

    #[test]
    fn two_extremes() {
        let h = histogram(&GrayImage::new(2, 1, vec![0, 255]).unwrap());
        assert_eq!((h[0], h[255]), (1, 1));
        assert_eq!(h[1..255].iter().sum::<u64>(), 0);
    }

    #[test]
    fn matches_per_pixel_tally() {
        let mut state = 0x1234_5678u32;
        let img = GrayImage::from_fn(16, 16, |_, _| {
            state = state.wrapping_mul(1_103_515_245).wrapping_add(12345);
            (state >> 16) as u8
        });
        let h = histogram(&img);
        assert_eq!(h.iter().sum::<u64>(), 256);
        for v in 0..256 {
            let naive = img.data().iter().filter(|&&p| p as usize == v).count() as u64;
            assert_eq!(h[v], naive);
        }
    }
}
