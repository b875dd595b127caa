//! The two synthetic benchmark scenes and their line samplers.

use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::{stable_roots, substitute, LineSegment, Quadratic, Quadric};
use crate::scalar::binary_exponent;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SceneKind {
    PackedSpheres,
    NestedSpheres,
}

impl SceneKind {
    pub fn name(self) -> &'static str {
        match self {
            SceneKind::PackedSpheres => "packed",
            SceneKind::NestedSpheres => "nested",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "packed" => Some(SceneKind::PackedSpheres),
            "nested" => Some(SceneKind::NestedSpheres),
            _ => None,
        }
    }
}

/// Inclusive range of binary exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentRange {
    pub min: i32,
    pub max: i32,
}

impl ExponentRange {
    pub const fn new(min: i32, max: i32) -> Self {
        ExponentRange { min, max }
    }

    /// Zero is always admissible.
    pub fn admits(&self, x: f64) -> bool {
        match binary_exponent(x) {
            None => x == 0.0,
            Some(e) => (self.min..=self.max).contains(&e),
        }
    }

    pub fn check(&self, x: f64) -> Result<()> {
        match binary_exponent(x) {
            Some(e) if !(self.min..=self.max).contains(&e) => Err(Error::ExponentRange {
                exponent: e,
                min: self.min,
                max: self.max,
            }),
            None if x != 0.0 => Err(Error::Overflow),
            _ => Ok(()),
        }
    }
}

/// Exponent range imposed on the nonzero line-restricted coefficients of
/// every quadric a sampled line intersects.
pub const LINE_EXPONENTS: ExponentRange = ExponentRange::new(-20, 0);

/// Give up sampling a line after this many rejected candidates.
pub const RESAMPLE_CAP: u32 = 1000;

#[derive(Clone, Debug, PartialEq)]
pub struct Scene {
    pub kind: SceneKind,
    pub n: usize,
    pub exponents: ExponentRange,
    pub quadrics: Vec<Quadric<f32>>,
}

impl Scene {
    pub fn validate(&self) -> Result<()> {
        for q in &self.quadrics {
            for &c in &q.coeffs {
                self.exponents.check(f64::from(c))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PackedParams {
    pub radius: f64,
    /// Center-to-center distance of touching neighbours.
    pub spacing: f64,
    pub per_axis: usize,
}

impl Default for PackedParams {
    fn default() -> Self {
        PackedParams {
            radius: 1.0 / 16.0,
            spacing: 0.1,
            per_axis: 11,
        }
    }
}

/// Hexagonally close packed spheres in ABAB layers. Rows run along `y`,
/// neighbouring rows are offset by half a spacing, layers stack along `z`,
/// and the sphere at lattice index zero sits at the origin.
pub fn gen_packed_spheres() -> Result<Scene> {
    gen_packed_spheres_with(&PackedParams::default())
}

pub fn gen_packed_spheres_with(params: &PackedParams) -> Result<Scene> {
    let d = params.spacing;
    let row = d * 3f64.sqrt() / 2.0;
    let layer = d * (2.0f64 / 3.0).sqrt();
    let shift = [d / (2.0 * 3f64.sqrt()), d / 2.0];
    let mut quadrics = Vec::with_capacity(params.per_axis.pow(3));
    for k in 0..params.per_axis {
        for j in 0..params.per_axis {
            for i in 0..params.per_axis {
                let b = (k % 2) as f64;
                let x = j as f64 * row + b * shift[0];
                let y = i as f64 * d + (j % 2) as f64 * d / 2.0 + b * shift[1];
                let z = k as f64 * layer;
                quadrics.push(Quadric::sphere([x, y, z], params.radius));
            }
        }
    }
    let scene = Scene {
        kind: SceneKind::PackedSpheres,
        n: quadrics.len(),
        exponents: ExponentRange::new(-8, 1),
        quadrics,
    };
    scene.validate()?;
    Ok(scene)
}

/// Outer sphere radius and the smallest sphere radius of the nested scene.
pub const NESTED_OUTER_RADIUS: f64 = 0.5;
pub const NESTED_INNER_RADIUS: f64 = 1.0 / 65536.0;
/// Gap between consecutive spheres at the shared far side.
pub const NESTED_GAP: f64 = 1.0 / 524288.0;

/// `n + 1` spheres inside the unit cube, each one inside the previous, all
/// crowding towards a common point on the `+x` side.
pub fn gen_nested_spheres(n: usize) -> Result<Scene> {
    let quadrics = nested_sphere_params(n)?
        .into_iter()
        .map(|(center, radius)| Quadric::sphere(center, radius))
        .collect();
    let scene = Scene {
        kind: SceneKind::NestedSpheres,
        n,
        exponents: ExponentRange::new(-1, 0),
        quadrics,
    };
    scene.validate()?;
    Ok(scene)
}

/// Centers and radii of the nested scene before rounding to storage.
pub fn nested_sphere_params(n: usize) -> Result<Vec<([f64; 3], f64)>> {
    if n == 0 {
        return Err(Error::ContractViolation("nested scene needs n >= 1"));
    }
    let step = (NESTED_OUTER_RADIUS - NESTED_INNER_RADIUS) / n as f64;
    let mut radius = NESTED_OUTER_RADIUS;
    let mut x = 0.5;
    let mut out = Vec::with_capacity(n + 1);
    out.push(([x, 0.5, 0.5], radius));
    for _ in 1..=n {
        radius -= step;
        x += step - NESTED_GAP;
        out.push(([x, 0.5, 0.5], radius));
    }
    Ok(out)
}

/// A sampled line together with how many candidates were thrown away.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampledLine {
    pub line: LineSegment<f32>,
    pub rejected: u32,
}

/// Whether the segment `t ∈ [0, 1]` meets the quadric, judged on the
/// double-precision roots.
pub fn segment_hits(q: &Quadratic<f64>) -> bool {
    match stable_roots(q) {
        Ok(r) => r.hi >= 0.0 && r.lo <= 1.0,
        Err(_) => false,
    }
}

/// Whether every quadric the segment meets yields coefficients in range.
/// The linear term is screened as the half coefficient `b/2` of
/// `a·t² + 2·(b/2)·t + c`.
pub fn line_admissible(
    scene: &Scene,
    line: &LineSegment<f32>,
    range: &ExponentRange,
) -> Result<bool> {
    for quadric in &scene.quadrics {
        let q: Quadratic<f64> = substitute(line, quadric)?;
        if !segment_hits(&q) {
            continue;
        }
        if ![*q.a(), 0.5 * *q.b(), *q.c()]
            .iter()
            .all(|&c| range.admits(c))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn sample_with<R: Rng>(
    scene: &Scene,
    rng: &mut R,
    mut candidate: impl FnMut(&mut R) -> Option<LineSegment<f32>>,
) -> Result<SampledLine> {
    let mut rejected = 0;
    while rejected < RESAMPLE_CAP {
        if let Some(line) = candidate(rng) {
            if line_admissible(scene, &line, &LINE_EXPONENTS)? {
                return Ok(SampledLine { line, rejected });
            }
        }
        rejected += 1;
    }
    Err(Error::ResampleCapExceeded(rejected))
}

fn unit_cube_point<R: Rng>(rng: &mut R) -> [f32; 3] {
    [rng.gen::<f32>(), rng.gen::<f32>(), rng.gen::<f32>()]
}

/// Origin uniform in the unit cube, direction a normalised uniform draw
/// from the cube `[−1, 1]³` (near-zero draws are redrawn).
pub fn sample_line_packed<R: Rng>(scene: &Scene, rng: &mut R) -> Result<SampledLine> {
    sample_with(scene, rng, |rng| {
        let origin = unit_cube_point(rng);
        let v: [f64; 3] = [
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
        ];
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if norm < 1e-3 {
            return None;
        }
        LineSegment::new(origin, v.map(|c| (c / norm) as f32)).ok()
    })
}

/// Origin uniform in the unit cube, aimed at the point `(1, ½, ½)` the
/// nested spheres crowd towards.
pub fn sample_line_nested<R: Rng>(scene: &Scene, rng: &mut R) -> Result<SampledLine> {
    sample_with(scene, rng, |rng| {
        let origin = unit_cube_point(rng);
        let target = [1.0f32, 0.5, 0.5];
        let dir = [
            target[0] - origin[0],
            target[1] - origin[1],
            target[2] - origin[2],
        ];
        LineSegment::new(origin, dir).ok()
    })
}

pub fn sample_line<R: Rng>(scene: &Scene, rng: &mut R) -> Result<SampledLine> {
    match scene.kind {
        SceneKind::PackedSpheres => sample_line_packed(scene, rng),
        SceneKind::NestedSpheres => sample_line_nested(scene, rng),
    }
}
