//! Constructive families: nested-rectangle windows, `(3,3)_h` curl chains,
//! L-path insertion for `(k,k)` curls, and the `(3,5)_2` curl.
//!
//! Every generator returns a spiral in normalized form (lexicographically
//! smallest vertex at the origin, counterclockwise first turn) so outputs
//! are stable fixtures. The curl layouts were derived by composing Z-path
//! gluings and verified against the free-region predicates, which remain
//! the ground truth in the test suite.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::Point;
use crate::spiral::{HvSequence, SquaredSpiral};

/// Errors from the generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("parameter must be at least 1")]
    ZeroParameter,
    #[error("family needs an odd repeat count of at least 3, got {0}")]
    BadRunLength(u32),
    #[error("insertion count must be a positive even integer, got {0}")]
    BadInsertionCount(u32),
    #[error("input spiral is not a generated (k,k) curl")]
    NotApplicable,
    #[error("unsupported blueprint pattern {0}")]
    UnsupportedPattern(HvSequence),
}

/// Layout style for the chained `(3,3)_h` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurlStyle {
    /// Teeth packed directly along the main diagonal.
    Consecutive,
    /// The same chain with stretched connector segments, so consecutive
    /// pairs join through elongated L-shaped jogs.
    LConnected,
}

/// A curl family to realize: a target hv-sequence plus a layout style.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurlBlueprint {
    pub pattern: HvSequence,
    pub style: CurlStyle,
}

impl CurlBlueprint {
    pub fn new(pattern: HvSequence, style: CurlStyle) -> Result<CurlBlueprint, GenerateError> {
        if pattern.runs.contains(&0) || pattern.repeat == 0 {
            return Err(GenerateError::ZeroParameter);
        }
        Ok(CurlBlueprint { pattern, style })
    }

    /// Builds a spiral realizing the blueprint, for the supported families:
    /// `(3,3)_h`, `(k,k)_1` with odd `k >= 3`, and `(3,5)_2`.
    pub fn realize(&self) -> Result<SquaredSpiral, GenerateError> {
        match (self.pattern.runs.as_slice(), self.pattern.repeat) {
            ([3, 3], h) => gen_curl_33(h, self.style),
            ([k, k2], 1) if k == k2 => gen_curl_kk(*k),
            ([3, 5], 2) => Ok(gen_curl_35()),
            _ => Err(GenerateError::UnsupportedPattern(self.pattern.clone())),
        }
    }
}

/// A window of size `n`: `n` nested rectangles joined into one spiral, all
/// vertices separated into the four quadrant classes along the diagonal.
/// The separating rectangle is `[n-1, n]^2`.
pub fn gen_window(n: u32) -> Result<SquaredSpiral, GenerateError> {
    if n == 0 {
        return Err(GenerateError::ZeroParameter);
    }
    let n = n as i32;
    let m = 2 * n - 1;
    let mut vertices = Vec::with_capacity(4 * n as usize);
    for k in 0..n {
        vertices.push(Point::new(k, k));
        vertices.push(Point::new(m - k, k));
        vertices.push(Point::new(m - k, m - k));
        if k < n - 1 {
            vertices.push(Point::new(k + 1, m - k));
        } else {
            vertices.push(Point::new(0, n));
        }
    }
    Ok(SquaredSpiral::build(vertices).expect("window family is valid"))
}

/// An hv-convex curl with hv-sequence `(3,3)_h`.
///
/// `h = 1` is the vertex-gluing of two unit-ish rectangles crossing once
/// (the simplest hv-convex curl). For `h >= 2` the curl chains `h`
/// crossing pairs of simple SW-NE Z-paths along the main diagonal: `h`
/// ascending `hvh` staircases through a shared middle column alternate
/// with `h` descending `vhv` staircases, consecutive staircases sharing
/// their endpoint vertices.
pub fn gen_curl_33(h: u32, style: CurlStyle) -> Result<SquaredSpiral, GenerateError> {
    if h == 0 {
        return Err(GenerateError::ZeroParameter);
    }
    if h == 1 {
        // Both styles coincide on the single crossing pair.
        return Ok(
            SquaredSpiral::build([(0, 0), (2, 0), (2, 2), (3, 2), (3, 1), (0, 1)])
                .expect("base curl is valid"),
        );
    }
    let h = h as i32;
    let mut v = Vec::with_capacity(6 * h as usize);
    for u in 0..h {
        // Ascent u: hvh staircase from (u, -u) up to (2h-u, 2h-1-u).
        v.push(Point::new(u, -u));
        v.push(Point::new(h, -u));
        v.push(Point::new(h, 2 * h - 1 - u));
        v.push(Point::new(2 * h - u, 2 * h - 1 - u));
        // Descent u: vhv staircase down to the next tooth's start.
        if u < h - 1 {
            v.push(Point::new(2 * h - u, h - 1 - u));
            v.push(Point::new(u + 1, h - 1 - u));
        } else {
            v.push(Point::new(h + 1, h - 1));
            v.push(Point::new(0, h - 1));
        }
    }
    let spiral = match style {
        CurlStyle::Consecutive => SquaredSpiral::build(v),
        // Stretching coordinate gaps preserves every order comparison, so
        // validity, the sequence, and hv-convexity carry over while the
        // connectors become long L-shaped jogs.
        CurlStyle::LConnected => SquaredSpiral::build(
            v.into_iter()
                .map(|p| Point::new(stretch(p.i, h), stretch(p.j, h)))
                .collect::<Vec<_>>(),
        ),
    };
    Ok(spiral.expect("chained curl family is valid").normalized())
}

/// Strictly increasing coordinate map spreading everything beyond the
/// chain's middle band outward.
fn stretch(x: i32, h: i32) -> i32 {
    if x > h {
        h + 2 * (x - h)
    } else if x < 0 {
        2 * x
    } else {
        x
    }
}

/// The `(k,k)` single-repeat hv-convex curl family, odd `k >= 3`: two
/// simple Z-paths whose connecting arcs sweep through `k` columns in the
/// order `0, k-1, 1, 2', ...` with rows `(-1)^t * min(t, k-t)`, an
/// accordion that deepens toward the middle and unwinds back.
pub fn gen_curl_kk(k: u32) -> Result<SquaredSpiral, GenerateError> {
    if k < 3 || k % 2 == 0 {
        return Err(GenerateError::BadRunLength(k));
    }
    let k = k as i32;
    let col = |t: i32| -> i32 {
        if t == 0 {
            0
        } else if t % 2 == 0 {
            t - 1
        } else {
            k - t
        }
    };
    let row = |t: i32| -> i32 {
        let mag = t.min(k - t);
        if t % 2 == 0 {
            mag
        } else {
            -mag
        }
    };
    let mut verts = Vec::with_capacity(2 * k as usize);
    for t in 0..k {
        verts.push(Point::new(col(t), row(t)));
        verts.push(Point::new(col((t + 1) % k), row(t)));
    }
    Ok(SquaredSpiral::build(verts).expect("accordion family is valid"))
}

/// Splits the two staircases of a generated `(k,k)` curl and reconnects
/// their extremal vertices through additional degenerate Z-paths, growing
/// the sequence from `(k,k)` to `(k + count, k + count)`.
///
/// Accepts the `(3,3)_1` base curl and any spiral of the generated `(k,k)`
/// family, up to translation, rotation of the cycle, and traversal
/// direction.
pub fn insert_l_paths(curl: &SquaredSpiral, count: u32) -> Result<SquaredSpiral, GenerateError> {
    if count == 0 || count % 2 != 0 {
        return Err(GenerateError::BadInsertionCount(count));
    }
    let seq = curl.hv_sequence();
    let k = match (seq.runs.as_slice(), seq.repeat) {
        ([a, b], 1) if a == b && a % 2 == 1 => *a,
        _ => return Err(GenerateError::NotApplicable),
    };
    let normalized = curl.normalized();
    let known_base = k == 3
        && normalized
            == gen_curl_33(1, CurlStyle::Consecutive)
                .expect("base")
                .normalized();
    let known_family = normalized == gen_curl_kk(k)?.normalized();
    if !known_base && !known_family {
        return Err(GenerateError::NotApplicable);
    }
    gen_curl_kk(k + count)
}

/// The 16-vertex hv-convex curl with hv-sequence `(3,5)_2`: one vertical
/// sweep per column and one horizontal per row, coordinates fixed as a
/// golden fixture.
pub fn gen_curl_35() -> SquaredSpiral {
    let verts = [
        (0, 0),
        (6, 0),
        (6, -3),
        (3, -3),
        (3, 3),
        (2, 3),
        (2, -2),
        (7, -2),
        (7, -1),
        (1, -1),
        (1, 2),
        (4, 2),
        (4, -4),
        (5, -4),
        (5, 1),
        (0, 1),
    ];
    SquaredSpiral::build(verts).expect("fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characterize::{even_run_witness, window_certificate, window_size};
    use crate::lattice::Quadrant;
    use crate::spiral::{HvSequence, SpiralClass};

    #[test]
    fn windows_certify_for_small_sizes() {
        for n in 1..=10 {
            let w = gen_window(n).unwrap();
            assert_eq!(w.len(), 4 * n as usize);
            assert_eq!(w.hv_sequence(), HvSequence::new(vec![4 * n], 1));
            let cert = window_certificate(&w)
                .unwrap()
                .unwrap_or_else(|| panic!("window n={n} must certify"));
            assert_eq!(window_size(&cert, &w), n);
            assert!(w.to_switching().is_hv_convex_by_cover());
        }
    }

    #[test]
    fn window_one_is_the_unit_rectangle() {
        let w = gen_window(1).unwrap();
        assert_eq!(
            w.vertices(),
            &[
                Point::new(0, 0),
                Point::new(1, 0),
                Point::new(1, 1),
                Point::new(0, 1)
            ]
        );
    }

    #[test]
    fn base_curl_row_counts_are_all_two() {
        let c = gen_curl_33(1, CurlStyle::Consecutive).unwrap();
        let set: crate::lattice::LatticeSet = c.vertices().iter().copied().collect();
        let h = set.horizontal_projection().unwrap();
        assert!(h.counts.iter().all(|&c| c == 2));
    }

    #[test]
    fn base_curl_matches_known_free_regions() {
        let c = gen_curl_33(1, CurlStyle::Consecutive).unwrap();
        assert_eq!(c.hv_sequence(), HvSequence::new(vec![3, 3], 1));
        let sw = c.to_switching();
        assert!(sw.is_hv_convex_by_cover());
        let expected = [
            ((0, 0), Quadrant::Z0),
            ((2, 0), Quadrant::Z1),
            ((2, 2), Quadrant::Z3),
            ((3, 2), Quadrant::Z2),
            ((3, 1), Quadrant::Z1),
            ((0, 1), Quadrant::Z3),
        ];
        for ((i, j), q) in expected {
            assert_eq!(sw.free_region(Point::new(i, j)).unwrap(), Some(q));
        }
    }

    #[test]
    fn chained_curls_are_convex_in_both_styles() {
        for h in 1..=6 {
            for style in [CurlStyle::Consecutive, CurlStyle::LConnected] {
                let c = gen_curl_33(h, style).unwrap();
                assert_eq!(c.len(), 6 * h as usize);
                assert_eq!(
                    c.hv_sequence(),
                    HvSequence::new(vec![3, 3], h),
                    "h={h} {style:?}"
                );
                assert_eq!(c.classify(), SpiralClass::Curl);
                assert!(
                    c.to_switching().is_hv_convex_by_cover(),
                    "h={h} {style:?} must be hv-convex"
                );
            }
        }
    }

    #[test]
    fn styles_differ_geometrically_beyond_the_base() {
        for h in 2..=6 {
            let a = gen_curl_33(h, CurlStyle::Consecutive).unwrap();
            let b = gen_curl_33(h, CurlStyle::LConnected).unwrap();
            assert_ne!(a, b, "h={h}");
        }
    }

    #[test]
    fn accordion_family_is_convex() {
        for k in [3, 5, 7, 9, 11] {
            let c = gen_curl_kk(k).unwrap();
            assert_eq!(c.hv_sequence(), HvSequence::new(vec![k, k], 1));
            assert!(c.to_switching().is_hv_convex_by_cover(), "k={k}");
            assert_eq!(even_run_witness(&c).unwrap(), None);
        }
        assert!(matches!(
            gen_curl_kk(4),
            Err(GenerateError::BadRunLength(4))
        ));
    }

    #[test]
    fn l_path_insertion_grows_the_sequence() {
        let base = gen_curl_33(1, CurlStyle::Consecutive).unwrap();
        let five = insert_l_paths(&base, 2).unwrap();
        assert_eq!(five.hv_sequence(), HvSequence::new(vec![5, 5], 1));
        assert!(five.to_switching().is_hv_convex_by_cover());
        let seven = insert_l_paths(&five, 2).unwrap();
        assert_eq!(seven.hv_sequence(), HvSequence::new(vec![7, 7], 1));
        assert!(seven.to_switching().is_hv_convex_by_cover());
        // a single step of four is the same as two steps of two
        assert_eq!(insert_l_paths(&base, 4).unwrap(), seven);

        assert!(matches!(
            insert_l_paths(&base, 0),
            Err(GenerateError::BadInsertionCount(0))
        ));
        assert!(matches!(
            insert_l_paths(&base, 3),
            Err(GenerateError::BadInsertionCount(3))
        ));
        let window = gen_window(2).unwrap();
        assert!(matches!(
            insert_l_paths(&window, 2),
            Err(GenerateError::NotApplicable)
        ));
    }

    #[test]
    fn curl_35_fixture() {
        let c = gen_curl_35();
        assert_eq!(c.len(), 16);
        assert_eq!(c.hv_sequence(), HvSequence::new(vec![3, 5], 2));
        assert!(c.to_switching().is_hv_convex_by_cover());
        assert_eq!(even_run_witness(&c).unwrap(), None);
        assert_eq!(c.normalized(), c, "fixture is stored normalized");
    }

    #[test]
    fn blueprint_dispatch() {
        let bp =
            CurlBlueprint::new(HvSequence::new(vec![3, 3], 2), CurlStyle::Consecutive).unwrap();
        assert_eq!(
            bp.realize().unwrap(),
            gen_curl_33(2, CurlStyle::Consecutive).unwrap()
        );
        let bp =
            CurlBlueprint::new(HvSequence::new(vec![9, 9], 1), CurlStyle::Consecutive).unwrap();
        assert_eq!(bp.realize().unwrap(), gen_curl_kk(9).unwrap());
        let bp =
            CurlBlueprint::new(HvSequence::new(vec![1, 2], 1), CurlStyle::Consecutive).unwrap();
        assert!(matches!(
            bp.realize(),
            Err(GenerateError::UnsupportedPattern(_))
        ));
    }

    #[test]
    fn zero_parameters_are_rejected() {
        assert_eq!(gen_window(0).unwrap_err(), GenerateError::ZeroParameter);
        assert_eq!(
            gen_curl_33(0, CurlStyle::Consecutive).unwrap_err(),
            GenerateError::ZeroParameter
        );
    }
}
