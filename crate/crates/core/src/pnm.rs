//! Netpbm codec.
//!
//! Decoding accepts P1 through P6. Colour inputs are reduced to gray with
//! luma weights 0.299/0.587/0.114. Samples with a maxval other than 255 are
//! rescaled to 8 bits. Bitmaps (P1, P4) use 1 = ink.
//!
//! Encoding writes P5 (8-bit gray) and P4 (packed bitmap, 1 = ink) with a
//! minimal header: `P5\n<w> <h>\n255\n` and `P4\n<w> <h>\n`.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::image::{BinaryImage, GrayImage};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    AsciiBitmap,
    AsciiGray,
    AsciiColor,
    RawBitmap,
    RawGray,
    RawColor,
}

impl Kind {
    fn from_magic(m: u8) -> Option<Self> {
        Some(match m {
            b'1' => Kind::AsciiBitmap,
            b'2' => Kind::AsciiGray,
            b'3' => Kind::AsciiColor,
            b'4' => Kind::RawBitmap,
            b'5' => Kind::RawGray,
            b'6' => Kind::RawColor,
            _ => return None,
        })
    }

    fn is_bitmap(self) -> bool {
        matches!(self, Kind::AsciiBitmap | Kind::RawBitmap)
    }
}

struct Header {
    kind: Kind,
    width: usize,
    height: usize,
    maxval: u32,
}

struct Cursor<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_space_and_comments(&mut self) {
        while self.pos < self.buf.len() {
            let c = self.buf[self.pos];
            if c == b'#' {
                while self.pos < self.buf.len() && self.buf[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn read_uint(&mut self) -> Result<u32> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.pos < self.buf.len() && self.buf[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Decode(format!("expected integer at byte {start}")));
        }
        std::str::from_utf8(&self.buf[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Decode(format!("integer out of range at byte {start}")))
    }

    /// P1 allows samples without separating whitespace.
    fn read_bit(&mut self) -> Result<bool> {
        self.skip_space_and_comments();
        match self.buf.get(self.pos) {
            Some(b'0') => {
                self.pos += 1;
                Ok(false)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(true)
            }
            _ => Err(Error::Decode(format!("expected bitmap sample at byte {}", self.pos))),
        }
    }
}

fn parse_header(buf: &[u8]) -> Result<(Header, usize)> {
    if buf.len() < 2 || buf[0] != b'P' {
        return Err(Error::Decode("missing netpbm magic number".into()));
    }
    let kind = Kind::from_magic(buf[1])
        .ok_or_else(|| Error::Decode(format!("unsupported netpbm variant P{}", buf[1] as char)))?;
    let mut cur = Cursor { buf, pos: 2 };
    let width = cur.read_uint()? as usize;
    let height = cur.read_uint()? as usize;
    if width == 0 || height == 0 {
        return Err(Error::Decode(format!("zero-sized image {width}x{height}")));
    }
    let maxval = if kind.is_bitmap() {
        1
    } else {
        let m = cur.read_uint()?;
        if m == 0 || m > 65535 {
            return Err(Error::Decode(format!("maxval {m} out of range")));
        }
        m
    };
    // exactly one whitespace byte separates the header from a raw raster
    if matches!(kind, Kind::RawBitmap | Kind::RawGray | Kind::RawColor) {
        match buf.get(cur.pos) {
            Some(c) if c.is_ascii_whitespace() => cur.pos += 1,
            _ => return Err(Error::Decode("truncated header".into())),
        }
    }
    Ok((
        Header {
            kind,
            width,
            height,
            maxval,
        },
        cur.pos,
    ))
}

#[inline]
fn scale(v: u32, maxval: u32) -> u8 {
    if maxval == 255 {
        v.min(255) as u8
    } else {
        ((v.min(maxval) * 255 + maxval / 2) / maxval) as u8
    }
}

#[inline]
fn luma(r: u8, g: u8, b: u8) -> u8 {
    ((299 * r as u32 + 587 * g as u32 + 114 * b as u32 + 500) / 1000) as u8
}

enum Raster {
    Bits(Vec<bool>),
    Gray(Vec<u8>),
}

fn decode_raster(buf: &[u8]) -> Result<(usize, usize, Raster)> {
    let (h, start) = parse_header(buf)?;
    let n = h.width * h.height;
    let mut cur = Cursor { buf, pos: start };
    let raster = match h.kind {
        Kind::AsciiBitmap => Raster::Bits((0..n).map(|_| cur.read_bit()).collect::<Result<_>>()?),
        Kind::AsciiGray => Raster::Gray(
            (0..n)
                .map(|_| cur.read_uint().map(|v| scale(v, h.maxval)))
                .collect::<Result<_>>()?,
        ),
        Kind::AsciiColor => {
            let mut out = Vec::with_capacity(n);
            for _ in 0..n {
                let r = scale(cur.read_uint()?, h.maxval);
                let g = scale(cur.read_uint()?, h.maxval);
                let b = scale(cur.read_uint()?, h.maxval);
                out.push(luma(r, g, b));
            }
            Raster::Gray(out)
        }
        Kind::RawBitmap => {
            let stride = h.width.div_ceil(8);
            let body = buf
                .get(start..start + stride * h.height)
                .ok_or_else(|| Error::Decode("truncated P4 raster".into()))?;
            let mut bits = Vec::with_capacity(n);
            for row in body.chunks_exact(stride) {
                for x in 0..h.width {
                    bits.push(row[x / 8] & (0x80 >> (x % 8)) != 0);
                }
            }
            Raster::Bits(bits)
        }
        Kind::RawGray | Kind::RawColor => {
            let channels = if h.kind == Kind::RawColor { 3 } else { 1 };
            let bytes_per = if h.maxval > 255 { 2 } else { 1 };
            let len = n * channels * bytes_per;
            let body = buf
                .get(start..start + len)
                .ok_or_else(|| Error::Decode("truncated raster".into()))?;
            let samples: Vec<u8> = if bytes_per == 2 {
                body.chunks_exact(2)
                    .map(|c| scale(u16::from_be_bytes([c[0], c[1]]) as u32, h.maxval))
                    .collect()
            } else {
                body.iter().map(|&v| scale(v as u32, h.maxval)).collect()
            };
            if channels == 3 {
                Raster::Gray(samples.chunks_exact(3).map(|c| luma(c[0], c[1], c[2])).collect())
            } else {
                Raster::Gray(samples)
            }
        }
    };
    Ok((h.width, h.height, raster))
}

/// Decodes any netpbm image to 8-bit gray. Bitmap ink becomes 0.
pub fn decode_gray(buf: &[u8]) -> Result<GrayImage> {
    let (w, h, raster) = decode_raster(buf)?;
    let data = match raster {
        Raster::Gray(g) => g,
        Raster::Bits(b) => b.into_iter().map(|ink| if ink { 0 } else { 255 }).collect(),
    };
    GrayImage::new(w, h, data)
}

/// Decodes a mask. Bitmaps are taken as-is; gray images are split at 128
/// with darker pixels as ink.
pub fn decode_binary(buf: &[u8]) -> Result<BinaryImage> {
    let (w, h, raster) = decode_raster(buf)?;
    let mask = match raster {
        Raster::Bits(b) => b,
        Raster::Gray(g) => g.into_iter().map(|v| v < 128).collect(),
    };
    BinaryImage::new(w, h, mask)
}

pub fn encode_pgm(img: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend_from_slice(img.data());
    out
}

pub fn encode_pbm(img: &BinaryImage) -> Vec<u8> {
    let mut out = format!("P4\n{} {}\n", img.width(), img.height()).into_bytes();
    let stride = img.width().div_ceil(8);
    for y in 0..img.height() {
        let mut row = vec![0u8; stride];
        for x in 0..img.width() {
            if img.get(x, y) {
                row[x / 8] |= 0x80 >> (x % 8);
            }
        }
        out.extend_from_slice(&row);
    }
    out
}

fn read_file(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::Decode(format!("{}: {e}", path.display())))
}

pub fn read_gray(path: impl AsRef<Path>) -> Result<GrayImage> {
    let path = path.as_ref();
    decode_gray(&read_file(path)?)
        .map_err(|e| Error::Decode(format!("{}: {e}", path.display())))
}

pub fn read_binary(path: impl AsRef<Path>) -> Result<BinaryImage> {
    let path = path.as_ref();
    decode_binary(&read_file(path)?)
        .map_err(|e| Error::Decode(format!("{}: {e}", path.display())))
}

pub fn write_pgm(path: impl AsRef<Path>, img: &GrayImage) -> Result<()> {
    fs::write(path, encode_pgm(img))?;
    Ok(())
}

pub fn write_pbm(path: impl AsRef<Path>, img: &BinaryImage) -> Result<()> {
    fs::write(path, encode_pbm(img))?;
    Ok(())
}

/// Writes a mask as P5 with ink = 0, or P4 when the extension is `.pbm`.
pub fn write_mask(path: impl AsRef<Path>, img: &BinaryImage) -> Result<()> {
    let path = path.as_ref();
    let is_pbm = path
        .extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("pbm"));
    if is_pbm {
        write_pbm(path, img)
    } else {
        write_pgm(path, &img.to_gray())
    }
}
