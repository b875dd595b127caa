mod common;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use quadorder_core::scene_io::{read_scene, write_scene};
use quadorder_core::scenes::{
    gen_nested_spheres, gen_packed_spheres, nested_sphere_params, sample_line, sample_line_nested,
    sample_line_packed, SceneKind, LINE_EXPONENTS, NESTED_GAP, NESTED_INNER_RADIUS,
    NESTED_OUTER_RADIUS,
};
use quadorder_core::{exact_rational, substitute, LineSegment, Quadratic};

fn center(coeffs: &[f32; 10]) -> [f64; 3] {
    [
        -0.5 * f64::from(coeffs[6]),
        -0.5 * f64::from(coeffs[7]),
        -0.5 * f64::from(coeffs[8]),
    ]
}

fn dist(p: [f64; 3], q: [f64; 3]) -> f64 {
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2) + (p[2] - q[2]).powi(2)).sqrt()
}

#[test]
fn packed_lattice() {
    let s = gen_packed_spheres().unwrap();
    assert_eq!(s.quadrics.len(), 1331);
    assert_eq!((s.exponents.min, s.exponents.max), (-8, 1));
    let radius = 1.0 / 16.0;
    assert_eq!(
        s.quadrics[0].coeffs,
        [
            1.0,
            0.0,
            0.0,
            1.0,
            0.0,
            1.0,
            0.0,
            0.0,
            0.0,
            -radius as f32 * radius as f32
        ]
    );
    // the first row runs along y
    let c1 = center(&s.quadrics[1].coeffs);
    assert!(c1[0].abs() < 1e-7 && c1[2].abs() < 1e-7 && c1[1] > 0.0);

    let centers: Vec<[f64; 3]> = s.quadrics.iter().map(|q| center(&q.coeffs)).collect();
    for (i, &c) in centers.iter().enumerate() {
        let nearest = centers
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &d)| dist(c, d))
            .fold(f64::INFINITY, f64::min);
        assert!(nearest <= 2.0 * radius + 0.051, "sphere {i}: {nearest}");
        assert!(nearest > 0.1 - 1e-6);
    }
}

#[test]
fn nested_recurrence_examples() {
    let params = nested_sphere_params(10).unwrap();
    let step = (0.5 - 2f64.powi(-16)) / 10.0;
    assert_eq!(params.len(), 11);
    assert_eq!(params[0], ([0.5, 0.5, 0.5], 0.5));
    assert_eq!(params[1].1, 0.5 - step);
    assert!((params[1].0[0] - params[0].0[0] - (step - 2f64.powi(-19))).abs() < 1e-16);
    assert!((params[10].1 - 2f64.powi(-16)).abs() < 1e-15);
    let scene = gen_nested_spheres(10).unwrap();
    assert_eq!(
        scene.quadrics[0].coeffs,
        [1.0, 0.0, 0.0, 1.0, 0.0, 1.0, -1.0, -1.0, -1.0, 0.5]
    );
    assert_eq!((scene.exponents.min, scene.exponents.max), (-1, 0));
}

#[test]
fn nested_gap_is_exact_before_rounding() {
    let q = |x: f64| exact_rational(x);
    for n in [10usize, 100, 1000] {
        let step =
            (q(NESTED_OUTER_RADIUS) - q(NESTED_INNER_RADIUS)) / BigRational::from_integer(n.into());
        let eps = q(NESTED_GAP);
        let mut radius = q(NESTED_OUTER_RADIUS);
        let mut x = q(0.5);
        let params = nested_sphere_params(n).unwrap();
        for (i, (c, r)) in params.iter().enumerate().skip(1) {
            let (next_radius, next_x) = (&radius - &step, &x + &step - &eps);
            // far-side extremes differ by ε, and since the inner sphere is
            // offset along x only, that is also the closest approach
            let far_gap = (&x + &radius) - (&next_x + &next_radius);
            let closest = &radius - &next_radius - (&next_x - &x).abs();
            assert_eq!(far_gap, eps, "n={n} sphere {i}");
            assert_eq!(closest, eps, "n={n} sphere {i}");
            // the double-precision recurrence tracks the exact one
            assert!((q(c[0]) - &next_x).abs() < q(1e-12));
            assert!((q(*r) - &next_radius).abs() < q(1e-12));
            radius = next_radius;
            x = next_x;
        }
        assert_eq!(radius, q(NESTED_INNER_RADIUS));
    }
}

#[test]
fn every_generated_coefficient_is_in_range() {
    for scene in [
        gen_packed_spheres().unwrap(),
        gen_nested_spheres(10).unwrap(),
        gen_nested_spheres(1000).unwrap(),
    ] {
        for quadric in &scene.quadrics {
            for &c in &quadric.coeffs {
                assert!(scene.exponents.admits(f64::from(c)), "{c}");
            }
        }
    }
}

#[test]
fn sampling_is_deterministic() {
    let packed = gen_packed_spheres().unwrap();
    let nested = gen_nested_spheres(10).unwrap();
    for scene in [&packed, &nested] {
        let a: Vec<_> = {
            let mut rng = common::rng(42);
            (0..20)
                .map(|_| sample_line(scene, &mut rng).unwrap())
                .collect()
        };
        let mut rng = common::rng(42);
        let b: Vec<_> = (0..20)
            .map(|_| sample_line(scene, &mut rng).unwrap())
            .collect();
        assert_eq!(a, b);
    }
    assert_eq!(
        gen_nested_spheres(100).unwrap(),
        gen_nested_spheres(100).unwrap()
    );
}

/// Two-sided Kolmogorov–Smirnov statistic against the uniform distribution.
fn ks_uniform(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, &x)| (x - i as f64 / n).max((i + 1) as f64 / n - x))
        .fold(0.0, f64::max)
}

#[test]
fn packed_lines_are_uniform_and_screened() {
    let scene = gen_packed_spheres().unwrap();
    let mut rng = common::rng(7);
    let n = 10_000;
    let lines: Vec<LineSegment<f32>> = (0..n)
        .map(|_| sample_line_packed(&scene, &mut rng).unwrap().line)
        .collect();
    let critical = 1.628 / (n as f64).sqrt();
    for axis in 0..3 {
        let d = ks_uniform(lines.iter().map(|l| f64::from(l.origin[axis])).collect());
        assert!(d < critical, "axis {axis}: D = {d}, critical {critical}");
        let dir_mean: f64 = lines
            .iter()
            .map(|l| f64::from(l.direction[axis]))
            .sum::<f64>()
            / n as f64;
        assert!(
            dir_mean.abs() < 0.03,
            "direction axis {axis} mean {dir_mean}"
        );
    }
    for line in &lines {
        let norm: f64 = line
            .direction
            .iter()
            .map(|&c| f64::from(c).powi(2))
            .sum::<f64>()
            .sqrt();
        assert!((norm - 1.0).abs() < 1e-6);
        for quadric in &scene.quadrics {
            let q: Quadratic<f64> = substitute(line, quadric).unwrap();
            let (a, b, c) = (*q.a(), *q.b(), *q.c());
            let disc = b * b - 4.0 * a * c;
            if disc < 0.0 {
                continue;
            }
            let (t1, t2) = (
                (-b - disc.sqrt()) / (2.0 * a),
                (-b + disc.sqrt()) / (2.0 * a),
            );
            if t1.max(t2) >= 0.0 && t1.min(t2) <= 1.0 {
                // half the linear coefficient, as in a·t² + 2b·t + c
                for c in [a, 0.5 * b, c] {
                    assert!(LINE_EXPONENTS.admits(c), "{c}");
                }
            }
        }
    }
}

#[test]
fn nested_lines_aim_at_the_cluster() {
    let scene = gen_nested_spheres(10).unwrap();
    let mut rng = common::rng(8);
    let lines = 2000;
    let mut hitting = 0;
    for _ in 0..lines {
        let line = sample_line_nested(&scene, &mut rng).unwrap().line;
        for axis in 0..3 {
            let target = [1.0f32, 0.5, 0.5][axis];
            assert!((line.origin[axis] + line.direction[axis] - target).abs() < 1e-6);
        }
        let meets = scene.quadrics.iter().any(|quadric| {
            let q: Quadratic<BigRational> = substitute(&line, quadric).unwrap();
            !q.disc().is_negative() && !q.disc().is_zero()
        });
        hitting += usize::from(meets);
    }
    assert!(
        hitting as f64 >= 0.99 * lines as f64,
        "{hitting} of {lines}"
    );
}

#[test]
fn nested_direction_through_the_axis() {
    let line = LineSegment::new([0.0f32, 0.5, 0.5], [1.0, 0.0, 0.0]).unwrap();
    assert_eq!(line.direction, [1.0, 0.0, 0.0]);
    assert!(LineSegment::new([1.0f32, 0.5, 0.5], [0.0; 3]).is_err());
}

#[test]
fn scene_files_round_trip() {
    for scene in [
        gen_packed_spheres().unwrap(),
        gen_nested_spheres(100).unwrap(),
    ] {
        let text = write_scene(&scene);
        let back = read_scene(&text).unwrap();
        assert_eq!(back, scene);
        assert_eq!(
            back.kind,
            if scene.quadrics.len() == 1331 {
                SceneKind::PackedSpheres
            } else {
                SceneKind::NestedSpheres
            }
        );
    }
}
