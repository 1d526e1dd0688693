//! Executable characterizations: quadrant-separating certificates for
//! windows and the even-run obstruction for curls.
//!
//! A window is an hv-convex switching exactly when some point `x` of the
//! plane sees the vertices of one component only in its lower-left and
//! upper-right quadrants and the other component only in the remaining two.
//! The set of such points is a closed axis-aligned rectangle computed from
//! four supporting lines; [`window_certificate`] builds it constructively
//! and returns a witness in its interior.
//!
//! For curls, a maximal even-length run in the turn profile forbids
//! hv-convexity; [`even_run_witness`] extracts the two flanking vertices
//! and the run between them. The condition is necessary, not sufficient.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::Point;
use crate::spiral::{HvSequence, SpiralClass, SquaredSpiral};

/// Errors from the characterization checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizeError {
    #[error("operation applies to windows only")]
    NotAWindow,
    #[error("operation applies to curls only")]
    NotACurl,
    #[error("operation applies to curl sequences (at least two runs)")]
    NotACurlSequence,
}

/// An exact coordinate on the half-integer grid, stored as twice its value.
///
/// Certificate rectangles have integer corners and witnesses sit at
/// half-integer centers, so doubling makes every comparison exact integer
/// arithmetic. Serializes as the plain value (halves are exact in floats).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfCoord(pub i64);

impl HalfCoord {
    pub fn from_int(v: i32) -> HalfCoord {
        HalfCoord(v as i64 * 2)
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    /// Compares against an integer lattice coordinate.
    pub fn cmp_int(self, v: i32) -> std::cmp::Ordering {
        self.0.cmp(&(v as i64 * 2))
    }
}

impl Serialize for HalfCoord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.as_f64())
    }
}

impl<'de> Deserialize<'de> for HalfCoord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = f64::deserialize(d)?;
        let doubled = v * 2.0;
        if doubled.fract() != 0.0 {
            return Err(serde::de::Error::custom("not a half-integer"));
        }
        Ok(HalfCoord(doubled as i64))
    }
}

/// A point with exact half-integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfPoint {
    pub i: HalfCoord,
    pub j: HalfCoord,
}

/// The closed rectangle of all certificate points, with integer corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertRect {
    pub min_i: i32,
    pub max_i: i32,
    pub min_j: i32,
    pub max_j: i32,
}

impl CertRect {
    pub fn interior_is_empty(&self) -> bool {
        self.min_i >= self.max_i || self.min_j >= self.max_j
    }

    /// Exact center, a half-integer point.
    pub fn center(&self) -> HalfPoint {
        HalfPoint {
            i: HalfCoord(self.min_i as i64 + self.max_i as i64),
            j: HalfCoord(self.min_j as i64 + self.max_j as i64),
        }
    }
}

/// Certificate that a window is an hv-convex switching.
///
/// `rotation` assigns vertex at canonical position `p` to quadrant class
/// `(p + rotation) mod 4`; `rect` is the rectangle of all points whose
/// quadrants realize that assignment, and `witness` is its center. Around
/// any interior point, vertices of one parity class occupy the lower-left
/// and upper-right quadrants, the other parity the remaining two, with the
/// same number of vertices in each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowCertificate {
    pub rect: CertRect,
    pub witness: HalfPoint,
    pub rotation: u8,
}

impl WindowCertificate {
    /// Quadrant class of the vertex at canonical position `pos`.
    pub fn class_of(&self, pos: usize) -> u8 {
        ((pos + self.rotation as usize) % 4) as u8
    }
}

/// Constructive window check.
///
/// Walks the four possible class rotations; for each, intersects the
/// half-plane constraints the classes impose on a separating point. A
/// rotation whose rectangle has non-empty interior certifies hv-convexity;
/// `None` means no separating point exists. Works on the canonical form,
/// independently of the free-region machinery.
pub fn window_certificate(
    spiral: &SquaredSpiral,
) -> Result<Option<WindowCertificate>, CharacterizeError> {
    if spiral.classify() != SpiralClass::Window {
        return Err(CharacterizeError::NotAWindow);
    }
    let canon = spiral.canonical();
    let verts = canon.vertices();
    for rotation in 0u8..4 {
        // Class 0 wants x at or above-right of the vertex, class 2 at or
        // below-left, classes 1 and 3 mixed; intersect all constraints.
        let mut min_i = i32::MIN;
        let mut max_i = i32::MAX;
        let mut min_j = i32::MIN;
        let mut max_j = i32::MAX;
        for (pos, v) in verts.iter().enumerate() {
            match (pos + rotation as usize) % 4 {
                0 => {
                    min_i = min_i.max(v.i);
                    min_j = min_j.max(v.j);
                }
                1 => {
                    max_i = max_i.min(v.i);
                    min_j = min_j.max(v.j);
                }
                2 => {
                    max_i = max_i.min(v.i);
                    max_j = max_j.min(v.j);
                }
                _ => {
                    min_i = min_i.max(v.i);
                    max_j = max_j.min(v.j);
                }
            }
        }
        if min_i < max_i && min_j < max_j {
            let rect = CertRect {
                min_i,
                max_i,
                min_j,
                max_j,
            };
            return Ok(Some(WindowCertificate {
                rect,
                witness: rect.center(),
                rotation,
            }));
        }
    }
    Ok(None)
}

/// Window size: the per-quadrant vertex count at the witness, which is a
/// quarter of the vertex count.
pub fn window_size(cert: &WindowCertificate, spiral: &SquaredSpiral) -> u32 {
    let canon = spiral.canonical();
    let n = canon.vertices().len();
    debug_assert_eq!(n % 4, 0);
    if cfg!(debug_assertions) {
        let mut counts = [0usize; 4];
        for pos in 0..n {
            counts[cert.class_of(pos) as usize] += 1;
        }
        debug_assert!(counts.iter().all(|&c| c == n / 4));
    }
    (n / 4) as u32
}

/// Two same-orientation vertices with an even-length run of opposite
/// orientation strictly between them: a proof the curl is not hv-convex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenRunWitness {
    pub v: Point,
    pub w: Point,
    pub between: Vec<Point>,
}

/// Finds the first maximal even run in canonical traversal order, if any.
///
/// Equivalently: the hv-sequence of the curl contains an even entry.
pub fn even_run_witness(
    spiral: &SquaredSpiral,
) -> Result<Option<EvenRunWitness>, CharacterizeError> {
    if spiral.classify() != SpiralClass::Curl {
        return Err(CharacterizeError::NotACurl);
    }
    let canon = spiral.canonical();
    let verts = canon.vertices();
    let turns = canon.turn_profile().turns().to_vec();
    let n = turns.len();
    // Runs as (start, length), ordered by start position.
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for p in 0..n {
        if turns[p] != turns[(p + n - 1) % n] {
            let mut len = 1;
            while turns[(p + len) % n] == turns[p] {
                len += 1;
            }
            runs.push((p, len));
        }
    }
    for &(start, len) in &runs {
        if len % 2 == 0 {
            let v = verts[(start + n - 1) % n];
            let w = verts[(start + len) % n];
            debug_assert_eq!(
                turns[(start + n - 1) % n],
                turns[(start + len) % n],
                "flanking vertices share orientation"
            );
            let between = (0..len).map(|k| verts[(start + k) % n]).collect();
            return Ok(Some(EvenRunWitness { v, w, between }));
        }
    }
    Ok(None)
}

/// Does the sequence admit a window? Windows are exactly the single runs of
/// length `4n`.
pub fn sequence_admits_window(seq: &HvSequence) -> bool {
    seq.repeat == 1 && seq.runs.len() == 1 && seq.runs[0] >= 4 && seq.runs[0] % 4 == 0
}

/// Necessary condition for a curl sequence to be hv-convex: every run is
/// odd. Not sufficient.
pub fn sequence_odd_necessary(seq: &HvSequence) -> Result<bool, CharacterizeError> {
    if seq.runs.len() < 2 {
        return Err(CharacterizeError::NotACurlSequence);
    }
    Ok(seq.runs.iter().all(|k| k % 2 == 1))
}

/// Evaluates the separation pattern at an exact rational point `x` given as
/// `(numerator, denominator)` pairs per axis: vertices at even canonical
/// positions must lie in the closed lower-left or upper-right quadrant of
/// `x`, odd positions in the other two, or the mirrored assignment.
///
/// This is the literal statement the certificate rectangle promises; tests
/// use it to probe sampled points for and against.
pub fn separation_pattern_holds_at(spiral: &SquaredSpiral, xi: (i64, i64), xj: (i64, i64)) -> bool {
    let verts = spiral.canonical().vertices().to_vec();
    // p.i <= x.i  <=>  p.i * den <= num  (den > 0)
    let le_i = |p: &Point| (p.i as i64) * xi.1 <= xi.0;
    let ge_i = |p: &Point| (p.i as i64) * xi.1 >= xi.0;
    let le_j = |p: &Point| (p.j as i64) * xj.1 <= xj.0;
    let ge_j = |p: &Point| (p.j as i64) * xj.1 >= xj.0;
    let diag = |p: &Point| (le_i(p) && le_j(p)) || (ge_i(p) && ge_j(p));
    let anti = |p: &Point| (ge_i(p) && le_j(p)) || (le_i(p) && ge_j(p));
    let (evens, odds): (Vec<_>, Vec<_>) =
        verts.iter().enumerate().partition(|(pos, _)| pos % 2 == 0);
    let pattern_a = evens.iter().all(|(_, p)| diag(p)) && odds.iter().all(|(_, p)| anti(p));
    let pattern_b = evens.iter().all(|(_, p)| anti(p)) && odds.iter().all(|(_, p)| diag(p));
    pattern_a || pattern_b
}

/// Brute-force oracle for the window characterization: scans half-integer
/// points one step beyond the bounding rectangle for any separating point.
/// Exists for differential testing against [`window_certificate`].
pub fn separating_point_exists_brute(spiral: &SquaredSpiral) -> bool {
    let rect = spiral.bounding_rect();
    let lo_i = (rect.min_i as i64 - 1) * 2;
    let hi_i = (rect.max_i as i64 + 1) * 2;
    let lo_j = (rect.min_j as i64 - 1) * 2;
    let hi_j = (rect.max_j as i64 + 1) * 2;
    for di in lo_i..=hi_i {
        for dj in lo_j..=hi_j {
            if separation_pattern_holds_at(spiral, (di, 2), (dj, 2)) {
                return true;
            }
        }
    }
    false
}
