//! Per-line pipeline: intersect a line with every quadric, sort the
//! intersection parameters with a pluggable comparator, score against the
//! exact oracle.

use crate::comparators::{
    approx_compare, extended_compare, precompute_minors, resolve_known_pairs, resultant_compare,
    Minors, PrecisionSchedule,
};
use crate::error::{Error, Result};
use crate::geometry::{
    discriminant_screen, stable_roots, substitute, LineSegment, Quadratic, Quadric, RootPair,
    RootSelector, Screen,
};
use crate::mp::MpFloat;
use crate::oracle::{exact_compare, exact_sign_diff, ExactRoot};
use crate::scalar::{Scalar, Sign};

/// Root differences below this magnitude are handed to the accurate method.
pub const DEFAULT_THRESHOLD: f64 = 1.0 / 65536.0;

/// Precision of the resultant evaluation: 24 times single precision.
pub const RESULTANT_BITS: usize = 576;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Compare the single-precision roots, never escalate.
    Approximate,
    /// Escalate to roots recomputed in staged extended precision.
    Extended(PrecisionSchedule),
    /// Escalate to the known-pair resolution plus resultant sign.
    Resultant { bits: usize },
}

impl Method {
    pub fn extended() -> Self {
        Method::Extended(PrecisionSchedule::default())
    }

    pub fn resultant() -> Self {
        Method::Resultant {
            bits: RESULTANT_BITS,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Method::Approximate => "approx",
            Method::Extended(_) => "extended",
            Method::Resultant { .. } => "resultant",
        }
    }
}

/// Which root values feed the threshold test of the escalating methods.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prefilter {
    /// Roots of the working-precision quadratic.
    Working,
    /// Roots of the quadratic rounded to storage precision.
    Storage,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrackerConfig {
    pub method: Method,
    pub threshold: f64,
    pub prefilter: Prefilter,
}

impl TrackerConfig {
    pub fn new(method: Method) -> Self {
        TrackerConfig {
            method,
            threshold: DEFAULT_THRESHOLD,
            prefilter: Prefilter::Working,
        }
    }
}

/// Data the resultant escalation needs, prepared once per intersected quadric.
#[derive(Clone, Debug)]
pub struct ExactData {
    pub quad: Quadratic<MpFloat>,
    pub minors: Minors<MpFloat>,
}

/// One quadric the line meets.
#[derive(Clone, Debug)]
pub struct Hit {
    pub quadric: usize,
    pub quad: Quadratic<f64>,
    pub roots: RootPair<f64>,
    /// Roots of the quadratic rounded to storage precision.
    pub approx: RootPair<f32>,
    pub exact: Option<ExactData>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Intersection {
    pub hit: usize,
    pub which: RootSelector,
    pub root: f64,
    pub approx: f32,
}

#[derive(Clone, Debug, Default)]
pub struct LineHits {
    pub hits: Vec<Hit>,
    pub items: Vec<Intersection>,
    /// Quadrics admitted by the storage-precision screen whose
    /// working-precision discriminant is negative; dropped.
    pub phantoms: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SortStats {
    pub comparisons: u64,
    pub escalations: u64,
    pub ties: u64,
    /// Escalations whose method reported an error and were settled by the oracle.
    pub fallbacks: u64,
}

impl SortStats {
    /// The count used as the timing regressor: escalations for the accurate
    /// methods, every comparison for the approximate one.
    pub fn regressor(&self, method: &Method) -> u64 {
        match method {
            Method::Approximate => self.comparisons,
            _ => self.escalations,
        }
    }
}

pub fn intersect_line(
    line: &LineSegment<f32>,
    quadrics: &[Quadric<f32>],
    method: &Method,
) -> Result<LineHits> {
    let mut out = LineHits::default();
    for (index, quadric) in quadrics.iter().enumerate() {
        let quad: Quadratic<f64> = substitute(line, quadric)?;
        let storage = quad.map(|&x| x as f32);
        if discriminant_screen(&storage) == Screen::Miss {
            continue;
        }
        let approx = stable_roots(&storage)?;
        let roots = match stable_roots(&quad) {
            Ok(r) => r,
            Err(Error::NoRealRoots) => {
                out.phantoms += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let exact = match method {
            Method::Resultant { bits } => {
                let q = quad.map(|&x| MpFloat::from_f64(x, *bits));
                Some(ExactData {
                    minors: precompute_minors(&q),
                    quad: q,
                })
            }
            _ => None,
        };
        let hit = out.hits.len();
        for which in [RootSelector::Lo, RootSelector::Hi] {
            out.items.push(Intersection {
                hit,
                which,
                root: roots.get(which),
                approx: approx.get(which),
            });
        }
        out.hits.push(Hit {
            quadric: index,
            quad,
            roots,
            approx,
            exact,
        });
    }
    Ok(out)
}

/// Stable merge sort driven by a three-valued comparator. Every ordering
/// decision goes through `cmp`; equal elements keep their input order.
pub fn merge_sort_by<T: Clone>(items: &mut [T], cmp: &mut impl FnMut(&T, &T) -> Sign) {
    let n = items.len();
    if n < 2 {
        return;
    }
    let mid = n / 2;
    merge_sort_by(&mut items[..mid], cmp);
    merge_sort_by(&mut items[mid..], cmp);
    let left = items[..mid].to_vec();
    let right = items[mid..].to_vec();
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < left.len() && j < right.len() {
        if cmp(&left[i], &right[j]) == Sign::Positive {
            items[k] = right[j].clone();
            j += 1;
        } else {
            items[k] = left[i].clone();
            i += 1;
        }
        k += 1;
    }
    for x in left[i..].iter().chain(&right[j..]) {
        items[k] = x.clone();
        k += 1;
    }
}

fn escalate(hits: &LineHits, a: &Intersection, b: &Intersection, method: &Method) -> Result<Sign> {
    let (ha, hb) = (&hits.hits[a.hit], &hits.hits[b.hit]);
    match method {
        Method::Approximate => Ok(approx_compare(&a.approx, &b.approx)),
        Method::Extended(schedule) => {
            extended_compare(&ha.quad, a.which, &hb.quad, b.which, schedule)
        }
        Method::Resultant { .. } => {
            let (ea, eb) = match (&ha.exact, &hb.exact) {
                (Some(ea), Some(eb)) => (ea, eb),
                _ => return Err(Error::ContractViolation("resultant data missing")),
            };
            if a.hit == b.hit {
                return Ok(same_quadratic_order(
                    ea.quad.disc().sign(),
                    a.which,
                    b.which,
                ));
            }
            let pairs = resolve_known_pairs(&ea.quad, &eb.quad)?;
            if let Some(s) = pairs.get(a.which, b.which) {
                return Ok(s);
            }
            let known = pairs.to_known().ok_or(Error::MoreThanOneAmbiguousPair)?;
            resultant_compare(
                &ea.quad, a.which, &eb.quad, b.which, &known, &ea.minors, &eb.minors,
            )
        }
    }
}

fn same_quadratic_order(disc: Sign, s1: RootSelector, s2: RootSelector) -> Sign {
    if s1 == s2 || disc.is_zero() {
        return Sign::Zero;
    }
    match s1 {
        RootSelector::Lo => Sign::Negative,
        RootSelector::Hi => Sign::Positive,
    }
}

/// The sort comparator: sign of `items[i] − items[j]`, updating `stats`.
pub fn compare_items(
    hits: &LineHits,
    i: usize,
    j: usize,
    config: &TrackerConfig,
    stats: &mut SortStats,
) -> Sign {
    stats.comparisons += 1;
    let (a, b) = (&hits.items[i], &hits.items[j]);
    let s = match config.method {
        Method::Approximate => approx_compare(&a.approx, &b.approx),
        ref method => {
            let diff = match config.prefilter {
                Prefilter::Working => a.root - b.root,
                Prefilter::Storage => f64::from(a.approx) - f64::from(b.approx),
            };
            if diff.abs() >= config.threshold {
                diff.sign()
            } else {
                stats.escalations += 1;
                match escalate(hits, a, b, method) {
                    Ok(s) => s,
                    Err(_) => {
                        stats.fallbacks += 1;
                        let (ha, hb) = (&hits.hits[a.hit], &hits.hits[b.hit]);
                        exact_compare(&ha.quad, a.which, &hb.quad, b.which).unwrap_or(diff.sign())
                    }
                }
            }
        }
    };
    if s.is_zero() {
        stats.ties += 1;
    }
    s
}

/// Sorts the intersections of one line. Returns indices into `hits.items`.
pub fn sort_intersections(hits: &LineHits, config: &TrackerConfig) -> (Vec<usize>, SortStats) {
    let mut stats = SortStats::default();
    let mut order: Vec<usize> = (0..hits.items.len()).collect();
    merge_sort_by(&mut order, &mut |&i: &usize, &j: &usize| {
        compare_items(hits, i, j, config, &mut stats)
    });
    (order, stats)
}

#[derive(Clone, Debug)]
pub struct LineOutcome {
    pub hits: LineHits,
    pub order: Vec<usize>,
    pub stats: SortStats,
}

/// The timed part of the pipeline: intersection, roots, sort.
pub fn track_line(
    line: &LineSegment<f32>,
    quadrics: &[Quadric<f32>],
    config: &TrackerConfig,
) -> Result<LineOutcome> {
    let hits = intersect_line(line, quadrics, &config.method)?;
    let (order, stats) = sort_intersections(&hits, config);
    Ok(LineOutcome { hits, order, stats })
}

/// Whether the produced order misplaces any pair of intersections, judged
/// by the exact roots of each working-precision quadratic. Roots whose exact
/// discriminant is negative are left out.
pub fn score_line(order: &[usize], hits: &LineHits) -> bool {
    let exact: Vec<Option<(ExactRoot, ExactRoot)>> = hits
        .hits
        .iter()
        .map(|h| {
            let lo = ExactRoot::from_quadratic(&h.quad, RootSelector::Lo).ok()?;
            let hi = ExactRoot::from_quadratic(&h.quad, RootSelector::Hi).ok()?;
            Some((lo, hi))
        })
        .collect();
    let roots: Vec<&ExactRoot> = order
        .iter()
        .filter_map(|&i| {
            let item = &hits.items[i];
            exact[item.hit].as_ref().map(|(lo, hi)| match item.which {
                RootSelector::Lo => lo,
                RootSelector::Hi => hi,
            })
        })
        .collect();
    roots
        .windows(2)
        .any(|w| exact_sign_diff(w[0], w[1]) == Sign::Positive)
}

/// Intersections whose working-precision quadratic has no real roots in
/// exact arithmetic.
pub fn exact_phantoms(hits: &LineHits) -> usize {
    hits.hits
        .iter()
        .filter(|h| ExactRoot::from_quadratic(&h.quad, RootSelector::Lo).is_err())
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_spheres() -> Vec<Quadric<f32>> {
        vec![
            Quadric::sphere([0.25, 0.5, 0.5], 0.125),
            Quadric::sphere([0.75, 0.5, 0.5], 0.125),
        ]
    }

    #[test]
    fn line_through_two_spheres() {
        let line = LineSegment::new([0.0f32, 0.5, 0.5], [1.0, 0.0, 0.0]).unwrap();
        for method in [Method::Approximate, Method::extended(), Method::resultant()] {
            let out = track_line(&line, &two_spheres(), &TrackerConfig::new(method)).unwrap();
            assert_eq!(out.hits.items.len(), 4);
            let roots: Vec<f64> = out.order.iter().map(|&i| out.hits.items[i].root).collect();
            assert_eq!(roots, vec![0.125, 0.375, 0.625, 0.875]);
            assert_eq!(out.stats.escalations, 0);
            assert!(!score_line(&out.order, &out.hits));
        }
    }

    #[test]
    fn missing_line_is_empty() {
        let line = LineSegment::new([0.0f32, 0.0, 0.0], [1.0, 0.0, 0.0]).unwrap();
        let out = track_line(
            &line,
            &two_spheres(),
            &TrackerConfig::new(Method::Approximate),
        )
        .unwrap();
        assert!(out.hits.items.is_empty());
        assert!(!score_line(&out.order, &out.hits));
    }

    #[test]
    fn close_roots_escalate() {
        // two spheres whose far sides are 2^-20 apart along the line
        let e = 2f64.powi(-20);
        let scene = vec![
            Quadric::sphere([0.5, 0.5, 0.5], 0.25),
            Quadric::sphere([0.5 + e, 0.5, 0.5], 0.25),
        ];
        let line = LineSegment::new([0.0f32, 0.5, 0.5], [1.0, 0.0, 0.0]).unwrap();
        let out = track_line(&line, &scene, &TrackerConfig::new(Method::resultant())).unwrap();
        assert!(out.stats.escalations >= 1);
        assert_eq!(out.stats.fallbacks, 0);
        assert!(!score_line(&out.order, &out.hits));
    }

    #[test]
    fn merge_sort_is_stable() {
        let mut v = vec![(1, 'a'), (0, 'b'), (1, 'c'), (0, 'd')];
        merge_sort_by(&mut v, &mut |x: &(i32, char), y: &(i32, char)| {
            Sign::from_ordering(x.0.cmp(&y.0))
        });
        assert_eq!(v, vec![(0, 'b'), (0, 'd'), (1, 'a'), (1, 'c')]);
    }

    #[test]
    fn scoring_detects_swaps() {
        let line = LineSegment::new([0.0f32, 0.5, 0.5], [1.0, 0.0, 0.0]).unwrap();
        let out = track_line(
            &line,
            &two_spheres(),
            &TrackerConfig::new(Method::Approximate),
        )
        .unwrap();
        let mut order = out.order.clone();
        order.swap(1, 2);
        assert!(score_line(&order, &out.hits));
    }
}
