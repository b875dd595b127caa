//! Plain-text scene files.
//!
//! ```text
//! kind nested
//! n 10
//! exponents -1 0
//! count 11
//! 0x1p+0 0x0p+0 ... (10 hexadecimal floats per quadric)
//! ```
//!
//! Coefficients are written as hexadecimal floats so a round trip is
//! bit-exact. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::geometry::Quadric;
use crate::scenes::{ExponentRange, Scene, SceneKind};

/// Hexadecimal float text for a single-precision value, e.g. `-0x1.8p-3`.
pub fn format_hex_f32(x: f32) -> String {
    let x = f64::from(x);
    let sign = if x.is_sign_negative() { "-" } else { "" };
    if x == 0.0 {
        return format!("{sign}0x0p+0");
    }
    let bits = x.abs().to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i64 - 1023;
    let mantissa = bits & ((1u64 << 52) - 1);
    let mut digits = format!("{mantissa:013x}");
    while digits.ends_with('0') {
        digits.pop();
    }
    if digits.is_empty() {
        format!("{sign}0x1p{exp:+}")
    } else {
        format!("{sign}0x1.{digits}p{exp:+}")
    }
}

pub fn parse_hex_f32(s: &str) -> Option<f32> {
    hexf_parse::parse_hexf32(s, false).ok()
}

pub fn write_scene(scene: &Scene) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kind {}", scene.kind.name());
    let _ = writeln!(out, "n {}", scene.n);
    let _ = writeln!(
        out,
        "exponents {} {}",
        scene.exponents.min, scene.exponents.max
    );
    let _ = writeln!(out, "count {}", scene.quadrics.len());
    for q in &scene.quadrics {
        let fields: Vec<String> = q.coeffs.iter().map(|&c| format_hex_f32(c)).collect();
        let _ = writeln!(out, "{}", fields.join(" "));
    }
    out
}

pub fn read_scene(text: &str) -> Result<Scene> {
    let err = |line: usize, message: &str| Error::Parse {
        line,
        message: message.to_string(),
    };
    let mut kind = None;
    let mut n = None;
    let mut exponents = None;
    let mut count = None;
    let mut quadrics = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        let head = words.next().unwrap_or_default();
        match head {
            "kind" => {
                let name = words.next().ok_or_else(|| err(lineno, "missing kind"))?;
                kind = Some(
                    SceneKind::from_name(name).ok_or_else(|| err(lineno, "unknown scene kind"))?,
                );
            }
            "n" | "count" => {
                let v: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| err(lineno, "expected an unsigned integer"))?;
                if head == "n" {
                    n = Some(v);
                } else {
                    count = Some(v);
                }
            }
            "exponents" => {
                let mut num = || words.next().and_then(|w| w.parse::<i32>().ok());
                match (num(), num()) {
                    (Some(lo), Some(hi)) if lo <= hi => {
                        exponents = Some(ExponentRange::new(lo, hi))
                    }
                    _ => return Err(err(lineno, "expected two exponents min <= max")),
                }
            }
            _ => {
                let coeffs: Vec<f32> = line
                    .split_whitespace()
                    .map(|w| parse_hex_f32(w).ok_or_else(|| err(lineno, "bad hexadecimal float")))
                    .collect::<Result<_>>()?;
                let coeffs: [f32; 10] = coeffs
                    .try_into()
                    .map_err(|_| err(lineno, "expected 10 coefficients"))?;
                quadrics.push(Quadric::new(coeffs));
            }
        }
    }

    let kind = kind.ok_or_else(|| err(0, "missing kind header"))?;
    let n = n.ok_or_else(|| err(0, "missing n header"))?;
    let exponents = exponents.ok_or_else(|| err(0, "missing exponents header"))?;
    if let Some(c) = count {
        if c != quadrics.len() {
            return Err(err(0, "quadric count does not match header"));
        }
    }
    let scene = Scene {
        kind,
        n,
        exponents,
        quadrics,
    };
    scene.validate()?;
    Ok(scene)
}

pub fn save_scene(scene: &Scene, path: &Path) -> Result<()> {
    std::fs::write(path, write_scene(scene))?;
    Ok(())
}

pub fn load_scene(path: &Path) -> Result<Scene> {
    read_scene(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenes::gen_nested_spheres;

    #[test]
    fn hex_formatting() {
        assert_eq!(format_hex_f32(1.0), "0x1p+0");
        assert_eq!(format_hex_f32(-0.75), "-0x1.8p-1");
        assert_eq!(format_hex_f32(0.0), "0x0p+0");
        assert_eq!(format_hex_f32(1.0 / 256.0), "0x1p-8");
        for x in [0.1f32, -3.3e-5, f32::MAX, f32::MIN_POSITIVE, 1e-42] {
            assert_eq!(
                parse_hex_f32(&format_hex_f32(x)).unwrap().to_bits(),
                x.to_bits()
            );
        }
    }

    #[test]
    fn scene_round_trip() {
        let s = gen_nested_spheres(10).unwrap();
        let back = read_scene(&write_scene(&s)).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(read_scene("kind nested\nn 1\nexponents -1 0\n0x1p+0\n").is_err());
        assert!(read_scene("kind cubes\n").is_err());
        let out_of_range =
            "kind nested\nn 1\nexponents -1 0\n".to_string() + &["0x1p+3"; 10].join(" ");
        assert!(matches!(
            read_scene(&out_of_range),
            Err(Error::ExponentRange { .. })
        ));
    }
}
