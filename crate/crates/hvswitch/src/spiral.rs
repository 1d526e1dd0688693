//! Closed squared spirals: validation, turn analysis, classification,
//! hv-sequences, Z-path decomposition, and induced switching pairs.
//!
//! A squared spiral is a closed polygon whose segments strictly alternate
//! between horizontal and vertical. Segments may cross each other freely;
//! only repeated vertices are rejected. A spiral that can be travelled
//! turning one way only is a *window*; any other is a *curl*.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{LatticeSet, Point};
use crate::switching::SwitchingPair;

/// Validation errors for squared spirals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpiralError {
    #[error("vertex count must be even, got {0}")]
    OddVertexCount(usize),
    #[error("a closed spiral needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices {0} and {1} differ in both coordinates")]
    DiagonalSegment(usize, usize),
    #[error("vertices {0} and {1} coincide (zero-length segment)")]
    ZeroLengthSegment(usize, usize),
    #[error("segments around vertex {0} do not alternate direction")]
    NonAlternating(usize),
    #[error("vertex {0} appears more than once")]
    DuplicateVertex(Point),
}

/// Turning sense at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Turn {
    Cw,
    Ccw,
}

impl Turn {
    pub fn flip(self) -> Turn {
        match self {
            Turn::Cw => Turn::Ccw,
            Turn::Ccw => Turn::Cw,
        }
    }
}

/// Window or curl.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpiralClass {
    Window,
    Curl,
}

/// Per-vertex turn signs of a spiral, in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TurnProfile {
    turns: Vec<Turn>,
}

impl TurnProfile {
    pub fn turns(&self) -> &[Turn] {
        &self.turns
    }

    pub fn len(&self) -> usize {
        self.turns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.turns.is_empty()
    }

    /// Count of counterclockwise turns minus clockwise turns.
    pub fn turn_balance(&self) -> i64 {
        self.turns
            .iter()
            .map(|t| match t {
                Turn::Ccw => 1i64,
                Turn::Cw => -1,
            })
            .sum()
    }

    /// Cyclic run lengths of equal turn signs, starting from the run that
    /// contains or begins at position 0.
    pub fn run_lengths(&self) -> Vec<u32> {
        cyclic_runs(&self.turns)
    }
}

/// Run-length encoding of a turn profile, canonical up to circular shift,
/// with maximal periodic compression: `(k1, ..., kn')_h`.
///
/// `runs` is the base pattern and `repeat` the repetition count, so the
/// full cyclic sequence is `runs` written `repeat` times. Windows have a
/// single run and `repeat` 1; curls have an even number of base runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HvSequence {
    pub runs: Vec<u32>,
    pub repeat: u32,
}

impl HvSequence {
    pub fn new(runs: Vec<u32>, repeat: u32) -> HvSequence {
        HvSequence { runs, repeat }
    }

    /// Total vertex count: sum of base runs times the repetition.
    pub fn total_vertices(&self) -> u64 {
        self.runs.iter().map(|&k| k as u64).sum::<u64>() * self.repeat as u64
    }

    /// The full run list, base repeated `repeat` times.
    pub fn expanded(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.runs.len() * self.repeat as usize);
        for _ in 0..self.repeat {
            out.extend_from_slice(&self.runs);
        }
        out
    }

    pub fn has_even_entry(&self) -> bool {
        self.runs.iter().any(|k| k % 2 == 0)
    }

    /// Renders with the repetition always explicit, e.g. `(3,3)_1`.
    pub fn to_string_explicit(&self) -> String {
        format!("{}_{}", self.base_string(), self.repeat)
    }

    fn base_string(&self) -> String {
        let inner: Vec<String> = self.runs.iter().map(|k| k.to_string()).collect();
        format!("({})", inner.join(","))
    }
}

impl std::fmt::Display for HvSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.repeat == 1 {
            write!(f, "{}", self.base_string())
        } else {
            write!(f, "{}_{}", self.base_string(), self.repeat)
        }
    }
}

/// Travel diagonal of a Z-path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZPathKind {
    SeNw,
    SwNe,
}

impl std::fmt::Display for ZPathKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ZPathKind::SeNw => write!(f, "SE-NW"),
            ZPathKind::SwNe => write!(f, "SW-NE"),
        }
    }
}

/// Segment-pattern tag of a Z-path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZPathShape {
    /// Odd level, horizontal first and last segment (`hvh` and extensions).
    HvhLike,
    /// Odd level, vertical first and last segment.
    VhvLike,
    /// Even positive level, horizontal first segment.
    HvRepeated,
    /// Even positive level, vertical first segment.
    VhRepeated,
    /// Level zero: an L formed by one horizontal and one vertical segment.
    DegenerateL,
}

/// A staircase slice of a spiral: two endpoint vertices around a stretch of
/// interior vertices with strictly alternating turn signs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZPath {
    /// Endpoints and interior vertices, in traversal order.
    pub vertices: Vec<Point>,
    /// Number of sign alternations among interior vertices; 0 for an L.
    pub level: u32,
    pub kind: ZPathKind,
    pub shape: ZPathShape,
    /// Position of `vertices[0]` in the spiral's cyclic vertex list.
    pub start: usize,
}

impl ZPath {
    pub fn is_degenerate(&self) -> bool {
        self.level == 0
    }

    pub fn interior(&self) -> &[Point] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn endpoints(&self) -> (Point, Point) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }
}

/// Tight axis-aligned bounding rectangle of a spiral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundingRect {
    pub min_i: i32,
    pub min_j: i32,
    pub max_i: i32,
    pub max_j: i32,
}

impl BoundingRect {
    pub fn width(&self) -> i32 {
        self.max_i - self.min_i
    }

    pub fn height(&self) -> i32 {
        self.max_j - self.min_j
    }
}

/// A validated closed squared spiral.
///
/// The vertex list is kept exactly as supplied (cyclic order and traversal
/// direction matter to the turn profile); [`SquaredSpiral::canonical`] gives
/// the normalized representative used for deterministic serialization and
/// the component split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquaredSpiral {
    vertices: Vec<Point>,
}

impl SquaredSpiral {
    /// Validates a cyclic vertex list as a squared spiral.
    pub fn build<I>(vertices: I) -> Result<SquaredSpiral, SpiralError>
    where
        I: IntoIterator,
        I::Item: Into<Point>,
    {
        let vertices: Vec<Point> = vertices.into_iter().map(Into::into).collect();
        let n = vertices.len();
        if n < 4 {
            if n % 2 == 1 {
                return Err(SpiralError::OddVertexCount(n));
            }
            return Err(SpiralError::TooFewVertices(n));
        }
        if n % 2 == 1 {
            return Err(SpiralError::OddVertexCount(n));
        }
        {
            let mut seen = std::collections::BTreeSet::new();
            for &v in &vertices {
                if !seen.insert(v) {
                    return Err(SpiralError::DuplicateVertex(v));
                }
            }
        }
        // Every cyclic segment must move along exactly one axis, and
        // consecutive segments must use different axes. Checked in walking
        // order so the earliest offence is the one reported.
        let mut axes: Vec<bool> = Vec::with_capacity(n);
        for p in 0..n {
            let a = vertices[p];
            let b = vertices[(p + 1) % n];
            let horizontal = a.j == b.j && a.i != b.i;
            let vertical = a.i == b.i && a.j != b.j;
            if a == b {
                return Err(SpiralError::ZeroLengthSegment(p, (p + 1) % n));
            }
            if !horizontal && !vertical {
                return Err(SpiralError::DiagonalSegment(p, (p + 1) % n));
            }
            if let Some(&prev) = axes.last() {
                if prev == horizontal {
                    return Err(SpiralError::NonAlternating(p));
                }
            }
            axes.push(horizontal);
        }
        if axes[n - 1] == axes[0] {
            return Err(SpiralError::NonAlternating(0));
        }
        Ok(SquaredSpiral { vertices })
    }

    /// Wraps vertices already known to satisfy the invariants.
    fn from_valid(vertices: Vec<Point>) -> SquaredSpiral {
        debug_assert!(SquaredSpiral::build(vertices.clone()).is_ok());
        SquaredSpiral { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Vertex count; validated spirals always have at least four.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Never true; present for container-like API symmetry.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bounding_rect(&self) -> BoundingRect {
        let min_i = self.vertices.iter().map(|p| p.i).min().unwrap();
        let max_i = self.vertices.iter().map(|p| p.i).max().unwrap();
        let min_j = self.vertices.iter().map(|p| p.j).min().unwrap();
        let max_j = self.vertices.iter().map(|p| p.j).max().unwrap();
        BoundingRect {
            min_i,
            min_j,
            max_i,
            max_j,
        }
    }

    /// The same curve traversed in the opposite direction from the same
    /// starting vertex.
    pub fn reversed(&self) -> SquaredSpiral {
        let mut v = self.vertices.clone();
        v[1..].reverse();
        SquaredSpiral::from_valid(v)
    }

    /// Rotates and, if needed, reverses the cycle so that the vertex list
    /// starts at the lexicographically smallest vertex and the turn there is
    /// counterclockwise. Geometrically equal curves share canonical forms.
    pub fn canonical(&self) -> SquaredSpiral {
        let n = self.len();
        let start = (0..n).min_by_key(|&p| self.vertices[p]).expect("non-empty");
        let forward_ccw = self.turn_at(start) == Turn::Ccw;
        let mut v = Vec::with_capacity(n);
        if forward_ccw {
            for k in 0..n {
                v.push(self.vertices[(start + k) % n]);
            }
        } else {
            for k in 0..n {
                v.push(self.vertices[(start + n - k) % n]);
            }
        }
        SquaredSpiral::from_valid(v)
    }

    /// Canonical form translated so the starting vertex is the origin: the
    /// unique representative of the spiral's translation class.
    pub fn normalized(&self) -> SquaredSpiral {
        let canon = self.canonical();
        let start = canon.vertices[0];
        canon.translate(-start.i, -start.j)
    }

    /// Translates every vertex by `(di, dj)`.
    pub fn translate(&self, di: i32, dj: i32) -> SquaredSpiral {
        SquaredSpiral::from_valid(
            self.vertices
                .iter()
                .map(|p| Point::new(p.i + di, p.j + dj))
                .collect(),
        )
    }

    fn turn_at(&self, p: usize) -> Turn {
        let n = self.len();
        let prev = self.vertices[(p + n - 1) % n];
        let here = self.vertices[p];
        let next = self.vertices[(p + 1) % n];
        let inn = (here.i - prev.i, here.j - prev.j);
        let out = (next.i - here.i, next.j - here.j);
        let cross = inn.0 as i64 * out.1 as i64 - inn.1 as i64 * out.0 as i64;
        debug_assert!(cross != 0, "validated spirals have no straight vertices");
        if cross > 0 {
            Turn::Ccw
        } else {
            Turn::Cw
        }
    }

    /// One turn sign per vertex, in the stored traversal order.
    pub fn turn_profile(&self) -> TurnProfile {
        TurnProfile {
            turns: (0..self.len()).map(|p| self.turn_at(p)).collect(),
        }
    }

    /// Window when every turn has the same sign, curl otherwise.
    pub fn classify(&self) -> SpiralClass {
        let profile = self.turn_profile();
        let first = profile.turns[0];
        if profile.turns.iter().all(|&t| t == first) {
            SpiralClass::Window
        } else {
            SpiralClass::Curl
        }
    }

    /// The canonical hv-sequence: cyclic run lengths of the turn profile,
    /// rotated to the lexicographically smallest form, compressed into
    /// `(k1,...,kn')_h` with maximal `h`.
    pub fn hv_sequence(&self) -> HvSequence {
        let profile = self.canonical().turn_profile();
        let runs = cyclic_runs(&profile.turns);
        let canon = smallest_rotation(&runs);
        compress_periodic(&canon)
    }

    /// Splits the cycle into Z-paths: maximal alternating-sign stretches
    /// become staircase paths (endpoints one vertex beyond each side), and
    /// longer same-sign stretches fill in as degenerate L-paths. In a
    /// window every vertex is the corner of its own L.
    pub fn z_path_decomposition(&self) -> Vec<ZPath> {
        let n = self.len();
        let turns = self.turn_profile().turns;
        let alt: Vec<bool> = (0..n).map(|p| turns[p] != turns[(p + 1) % n]).collect();

        if alt.iter().all(|a| !a) {
            // Window: one degenerate path per vertex.
            return (0..n).map(|p| self.slice_zpath(p + n - 1, 3, 0)).collect();
        }

        // Maximal chains of consecutive alternating adjacencies; chain
        // [a..b] of adjacencies covers interior vertices a..=b+1.
        let mut chains: Vec<(usize, usize)> = Vec::new();
        let mut p = 0;
        while p < n {
            if alt[p] && !alt[(p + n - 1) % n] {
                let mut q = p;
                while alt[(q + 1) % n] {
                    q += 1;
                }
                chains.push((p, q));
                p = q + 1;
            } else {
                p += 1;
            }
        }
        debug_assert!(!chains.is_empty());

        let mut paths = Vec::new();
        for (ix, &(a, b)) in chains.iter().enumerate() {
            let interior = b - a + 2;
            paths.push(self.slice_zpath(a + n - 1, interior + 2, interior as u32 - 1));
            // Corridor vertices between this chain and the next carry the
            // degenerate paths; the first and last corridor vertices are the
            // neighbouring staircases' endpoints.
            let (a_next, _) = chains[(ix + 1) % chains.len()];
            let corridor_start = b + 2; // first vertex after this chain's interior
            let corridor_len = (a_next + n - corridor_start) % n;
            if corridor_len == 2 {
                // Both corridor vertices are endpoints; one L still has to
                // carry the segment between them.
                paths.push(self.slice_zpath(corridor_start + n - 1, 3, 0));
            }
            for k in 1..corridor_len.saturating_sub(1) {
                paths.push(self.slice_zpath(corridor_start + k - 1, 3, 0));
            }
        }
        paths.sort_by_key(|z| z.start);
        paths
    }

    fn slice_zpath(&self, start: usize, count: usize, level: u32) -> ZPath {
        let n = self.len();
        let start = start % n;
        let vertices: Vec<Point> = (0..count).map(|k| self.vertices[(start + k) % n]).collect();
        let first = vertices[0];
        let last = *vertices.last().unwrap();
        let di = last.i - first.i;
        let dj = last.j - first.j;
        debug_assert!(di != 0 && dj != 0);
        let kind = if (di > 0) == (dj > 0) {
            ZPathKind::SwNe
        } else {
            ZPathKind::SeNw
        };
        let first_horizontal = vertices[0].j == vertices[1].j;
        let shape = if level == 0 {
            ZPathShape::DegenerateL
        } else if level % 2 == 1 {
            if first_horizontal {
                ZPathShape::HvhLike
            } else {
                ZPathShape::VhvLike
            }
        } else if first_horizontal {
            ZPathShape::HvRepeated
        } else {
            ZPathShape::VhRepeated
        };
        ZPath {
            vertices,
            level,
            kind,
            shape,
            start,
        }
    }

    /// The switching induced by alternating vertices: even canonical
    /// positions form one component, odd positions the other.
    ///
    /// Every segment contributes one endpoint to each component on its own
    /// line, so the projections always match and validation cannot fail.
    pub fn to_switching(&self) -> SwitchingPair {
        let canon = self.canonical();
        let mut s0 = LatticeSet::new();
        let mut s1 = LatticeSet::new();
        for (pos, &v) in canon.vertices.iter().enumerate() {
            if pos % 2 == 0 {
                s0.insert(v);
            } else {
                s1.insert(v);
            }
        }
        SwitchingPair::validate(s0, s1)
            .expect("alternating vertices of a valid spiral form a switching")
    }

    /// JSON format: `{"vertices": [[i, j], ...]}` in cyclic order.
    pub fn from_json(json: &str) -> Result<SquaredSpiral, SpiralJsonError> {
        let raw: SpiralJson = serde_json::from_str(json)?;
        Ok(SquaredSpiral::build(
            raw.vertices.into_iter().map(|[i, j]| Point::new(i, j)),
        )?)
    }

    pub fn to_json(&self) -> String {
        let raw = SpiralJson {
            vertices: self.vertices.iter().map(|p| [p.i, p.j]).collect(),
        };
        serde_json::to_string(&raw).expect("spiral serializes")
    }
}

impl Serialize for SquaredSpiral {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let raw = SpiralJson {
            vertices: self.vertices.iter().map(|p| [p.i, p.j]).collect(),
        };
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SquaredSpiral {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = SpiralJson::deserialize(d)?;
        SquaredSpiral::build(raw.vertices.into_iter().map(|[i, j]| Point::new(i, j)))
            .map_err(serde::de::Error::custom)
    }
}

/// Errors from parsing spiral files.
#[derive(Debug, Error)]
pub enum SpiralJsonError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] SpiralError),
}

#[derive(Serialize, Deserialize)]
struct SpiralJson {
    vertices: Vec<[i32; 2]>,
}

/// Cyclic run lengths of equal elements, starting at the first boundary.
fn cyclic_runs(turns: &[Turn]) -> Vec<u32> {
    let n = turns.len();
    let first_start = (0..n).find(|&p| turns[p] != turns[(p + n - 1) % n]);
    let start = match first_start {
        None => return vec![n as u32],
        Some(s) => s,
    };
    let mut runs = Vec::new();
    let mut len = 1u32;
    for k in 1..n {
        let p = (start + k) % n;
        if turns[p] == turns[(p + n - 1) % n] {
            len += 1;
        } else {
            runs.push(len);
            len = 1;
        }
    }
    runs.push(len);
    runs
}

/// Lexicographically smallest rotation of a run list.
fn smallest_rotation(runs: &[u32]) -> Vec<u32> {
    let n = runs.len();
    (0..n)
        .map(|shift| {
            let mut rot = Vec::with_capacity(n);
            rot.extend_from_slice(&runs[shift..]);
            rot.extend_from_slice(&runs[..shift]);
            rot
        })
        .min()
        .unwrap_or_default()
}

/// Maximal periodic compression with a sign-consistent (even-length) base.
fn compress_periodic(runs: &[u32]) -> HvSequence {
    let n = runs.len();
    for h in (2..=n).rev() {
        if n % h != 0 {
            continue;
        }
        let base = n / h;
        if base % 2 != 0 {
            continue;
        }
        if (0..n).all(|ix| runs[ix] == runs[ix % base]) {
            return HvSequence::new(runs[..base].to_vec(), h as u32);
        }
    }
    HvSequence::new(runs.to_vec(), 1)
}
