//! Property and invariant tests across the library: quadrant geometry,
//! projection bookkeeping, the equivalence of the hv-convexity conditions,
//! polyomino facts at desk scale, and spiral structure.

use proptest::prelude::*;

use hvswitch::enumerate::{
    brute_force_hv_convex, enumerate_hv_polyominoes, enumerate_spirals, SearchSpace,
};
use hvswitch::lattice::{in_quadrant, LatticeSet, Point, Quadrant};
use hvswitch::spiral::{SpiralClass, SquaredSpiral};
use hvswitch::switching::SwitchingPair;

fn point_strategy() -> impl Strategy<Value = Point> {
    (-6i32..7, -6i32..7).prop_map(|(i, j)| Point::new(i, j))
}

proptest! {
    /// Every point lies in at least one closed quadrant of any anchor, and
    /// in exactly one iff both coordinates differ from the anchor's.
    #[test]
    fn quadrant_cover_and_exactness(p in point_strategy(), v in point_strategy()) {
        let hits = Quadrant::ALL
            .iter()
            .filter(|&&q| in_quadrant(p, v, q))
            .count();
        prop_assert!(hits >= 1);
        let strict = p.i != v.i && p.j != v.j;
        prop_assert_eq!(hits == 1, strict);
    }

    /// Closed quadrants pair up diagonally: p sees v exactly where v sees p
    /// from the opposite corner.
    #[test]
    fn opposite_quadrant_duality(p in point_strategy(), v in point_strategy()) {
        for q in Quadrant::ALL {
            prop_assert_eq!(in_quadrant(p, v, q), in_quadrant(v, p, q.opposite()));
        }
    }

    /// Both projections of any set count every point exactly once.
    #[test]
    fn projection_conservation(pts in proptest::collection::btree_set(point_strategy(), 1..25)) {
        let a = LatticeSet::from_points(pts);
        let h = a.horizontal_projection().unwrap();
        let v = a.vertical_projection().unwrap();
        prop_assert_eq!(h.total(), a.len() as u64);
        prop_assert_eq!(v.total(), a.len() as u64);
        prop_assert!(*h.counts.first().unwrap() > 0 && *h.counts.last().unwrap() > 0);
        prop_assert!(*v.counts.first().unwrap() > 0 && *v.counts.last().unwrap() > 0);
    }
}

/// Disjoint same-column permutation graphs make easy valid switchings that
/// are not spiral-induced.
fn permutation_pair() -> impl Strategy<Value = SwitchingPair> {
    let n = 6usize;
    let perm = Just((0..n as i32).collect::<Vec<i32>>()).prop_shuffle();
    (perm.clone(), perm)
        .prop_filter("components must be disjoint", |(a, b)| {
            a.iter().zip(b).all(|(x, y)| x != y)
        })
        .prop_map(move |(a, b)| {
            let s0 = LatticeSet::from_points(
                a.iter().enumerate().map(|(i, &j)| Point::new(i as i32, j)),
            );
            let s1 = LatticeSet::from_points(
                b.iter().enumerate().map(|(i, &j)| Point::new(i as i32, j)),
            );
            SwitchingPair::validate(s0, s1).expect("permutation pairs always validate")
        })
}

proptest! {
    /// The two hv-convexity conditions and the naive scan agree on pairs
    /// far outside the spiral-induced family.
    #[test]
    fn lemma2_agreement_on_permutation_pairs(pair in permutation_pair()) {
        let cover = pair.is_hv_convex_by_cover();
        prop_assert_eq!(pair.is_hv_convex_by_pairs(), cover);
        prop_assert_eq!(brute_force_hv_convex(&pair), cover);
    }

    /// Whenever a free region is reported, the opposite component really is
    /// absent from that quadrant.
    #[test]
    fn free_region_component_purity(pair in permutation_pair()) {
        for p in pair.union().iter() {
            if let Ok(Some(q)) = pair.free_region(p) {
                let other = if pair.s0().contains(p) { pair.s1() } else { pair.s0() };
                prop_assert!(other.iter().all(|w| !in_quadrant(w, p, q)));
            }
        }
    }

    /// Swapping components through a host set is an involution that
    /// preserves both projections.
    #[test]
    fn dual_involution_and_projection_invariance(
        extra in proptest::collection::btree_set((0i32..6, 0i32..6).prop_map(|(i, j)| Point::new(i, j)), 0..12),
    ) {
        let curl = SquaredSpiral::build([(0, 0), (2, 0), (2, 2), (3, 2), (3, 1), (0, 1)])
            .unwrap();
        let pair = curl.to_switching();
        let host_extra: LatticeSet = extra
            .into_iter()
            .map(|p| Point::new(p.i + 10, p.j + 10))
            .collect();
        let host = pair.s0().union(&host_extra);
        let dual = pair.dual_set(&host).unwrap();
        prop_assert_eq!(
            host.horizontal_projection().unwrap(),
            dual.horizontal_projection().unwrap()
        );
        prop_assert_eq!(
            host.vertical_projection().unwrap(),
            dual.vertical_projection().unwrap()
        );
        let back = pair.clone().mirror().dual_set(&dual).unwrap();
        prop_assert_eq!(back, host);
    }
}

#[test]
fn hv_convex_polyominoes_are_q_convex_up_to_4x4() {
    for p in enumerate_hv_polyominoes(4) {
        assert!(p.is_hv_convex_polyomino().unwrap());
        assert!(
            p.is_q_convex().unwrap(),
            "hv-convex implies Q-convex: {p:?}"
        );
    }
}

/// Any point of the bounding box whose four quadrants are hit by three
/// points of an hv-convex polyomino belongs to it.
#[test]
fn prisoner_lemma_up_to_4x4() {
    for p in enumerate_hv_polyominoes(4) {
        let pts: Vec<Point> = p.iter().collect();
        let (i0, j0, i1, j1) = p.bounding_box().unwrap();
        for i in i0..=i1 {
            for j in j0..=j1 {
                let v = Point::new(i, j);
                if p.contains(v) {
                    continue;
                }
                let trapped_by_triple = triples(&pts).any(|(a, b, c)| {
                    Quadrant::ALL.iter().all(|&q| {
                        in_quadrant(a, v, q) || in_quadrant(b, v, q) || in_quadrant(c, v, q)
                    })
                });
                assert!(
                    !trapped_by_triple,
                    "three points of {pts:?} trap {v} outside the polyomino"
                );
            }
        }
    }
}

fn triples(pts: &[Point]) -> impl Iterator<Item = (Point, Point, Point)> + '_ {
    pts.iter().enumerate().flat_map(move |(a, &pa)| {
        pts[a + 1..]
            .iter()
            .enumerate()
            .flat_map(move |(b, &pb)| pts[a + b + 2..].iter().map(move |&pc| (pa, pb, pc)))
    })
}

/// Spiral-level structure over an exhaustive small space.
#[test]
fn spiral_structure_over_small_space() {
    let space = SearchSpace::new(4, 8).unwrap();
    for s in enumerate_spirals(space) {
        let profile = s.turn_profile();
        // Closed rectilinear curves turn a whole number of full revolutions.
        assert_eq!(profile.turn_balance().rem_euclid(4), 0);
        let seq = s.hv_sequence();
        assert_eq!(seq.total_vertices(), s.len() as u64);
        let single_run = seq.runs.len() == 1 && seq.repeat == 1;
        assert_eq!(s.classify() == SpiralClass::Window, single_run);
        if s.classify() == SpiralClass::Window {
            assert_eq!(profile.turn_balance().unsigned_abs() as usize, s.len());
            assert_eq!(seq.runs[0] % 4, 0);
        } else {
            assert_eq!(seq.expanded().len() % 2, 0, "curl run count is even");
        }

        // Alternating split: every populated line holds as many points of
        // one component as the other, and the union's column counts are even.
        let pair = s.to_switching();
        let u = pair.union();
        let v = u.vertical_projection().unwrap();
        assert!(v.counts.iter().all(|c| c % 2 == 0));
        for (set, other) in [(pair.s0(), pair.s1()), (pair.s1(), pair.s0())] {
            let h0 = set.horizontal_projection().unwrap();
            let h1 = other.horizontal_projection().unwrap();
            assert_eq!(h0, h1);
        }

        // The decomposition's slices tile the cycle.
        let n = s.len();
        let mut covered = vec![false; n];
        for z in s.z_path_decomposition() {
            for k in 0..z.vertices.len() - 1 {
                covered[(z.start + k) % n] = true;
            }
        }
        assert!(covered.iter().all(|&c| c));
    }
}

/// The certificate rectangle is maximal: half a step beyond any edge the
/// separation pattern breaks.
#[test]
fn certificate_rect_is_tight() {
    use hvswitch::characterize::{separation_pattern_holds_at, window_certificate};
    let space = SearchSpace::new(4, 8).unwrap();
    for s in enumerate_spirals(space) {
        if s.classify() != SpiralClass::Window {
            continue;
        }
        let cert = match window_certificate(&s).unwrap() {
            Some(c) => c,
            None => continue,
        };
        let r = cert.rect;
        let ci = (r.min_i + r.max_i) as i64; // doubled center
        let cj = (r.min_j + r.max_j) as i64;
        let probes = [
            ((2 * r.min_i as i64 - 1, 2), (cj, 2)),
            ((2 * r.max_i as i64 + 1, 2), (cj, 2)),
            ((ci, 2), (2 * r.min_j as i64 - 1, 2)),
            ((ci, 2), (2 * r.max_j as i64 + 1, 2)),
        ];
        for (xi, xj) in probes {
            assert!(
                !separation_pattern_holds_at(&s, xi, xj),
                "pattern must fail just outside {r:?} at {xi:?},{xj:?} for {:?}",
                s.vertices()
            );
        }
    }
}

proptest! {
    /// Rotating or reversing the stored cycle never changes the canonical
    /// form, the classification, or the hv-sequence.
    #[test]
    fn canonical_form_is_traversal_invariant(rot in 0usize..8, reverse in any::<bool>()) {
        let base = SquaredSpiral::build([
            (0, 0),
            (3, 0),
            (3, 3),
            (2, 3),
            (2, -1),
            (1, -1),
            (1, 2),
            (4, 2),
            (4, 1),
            (0, 1),
        ])
        .unwrap();
        let mut verts: Vec<Point> = base.vertices().to_vec();
        let n = verts.len();
        verts.rotate_left(rot % n);
        if reverse {
            verts.reverse();
        }
        let other = SquaredSpiral::build(verts).unwrap();
        prop_assert_eq!(other.canonical(), base.canonical());
        prop_assert_eq!(other.hv_sequence(), base.hv_sequence());
        prop_assert_eq!(other.classify(), base.classify());
    }
}
