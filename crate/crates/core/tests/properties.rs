use std::f64::consts::{PI, TAU};

use dirant_core::fourpoint::{orient_four, verify_four};
use dirant_core::geometry::{angular_distance, classify_quad, normalize_angle, Point, QuadClass, Wedge, EPS};
use dirant_core::instances::random_connected_udg;
use dirant_core::io::{format_orientation, format_points, parse_orientation, parse_points};
use dirant_core::topology::{bounded_degree_mst, build_udg, is_connected};
use dirant_core::verifier::{build_comm_graph, min_strong_radius, strong_at_radius, strongly_connected};
use dirant_core::{orient_all_180, orient_all_90, OrientationAssignment, RADIUS_180, RADIUS_90};
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

fn quad() -> impl Strategy<Value = [Point; 4]> {
    prop::array::uniform4((coord(), coord()))
        .prop_map(|c| [0, 1, 2, 3].map(|i| Point::new(i, c[i].0, c[i].1)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalized_angles_land_in_range(a in -1e6..1e6f64) {
        let n = normalize_angle(a);
        prop_assert!((0.0..TAU).contains(&n));
        prop_assert!(angular_distance(a, n) < 1e-6);
    }

    #[test]
    fn angular_distance_is_a_symmetric_metric(a in -10.0..10.0f64, b in -10.0..10.0f64) {
        let d = angular_distance(a, b);
        prop_assert!((0.0..=PI + 1e-12).contains(&d));
        prop_assert_eq!(d, angular_distance(b, a));
    }

    #[test]
    fn wedge_membership_is_disk_and_cone(
        theta in 0.0..TAU, alpha in 0.1..TAU, r in 0.1..5.0f64,
        x in coord(), y in coord(),
    ) {
        let w = Wedge::new(Point::new(0, 0.0, 0.0), theta, alpha, r);
        let q = Point::new(1, x, y);
        let expected = q.dist(&w.apex) <= r + EPS && w.covers_direction(&q, EPS);
        prop_assert_eq!(w.contains(&q, EPS), expected);
    }

    #[test]
    fn four_points_in_general_position_are_oriented(p in quad()) {
        prop_assume!(classify_quad(&p) != QuadClass::Degenerate);
        let res = orient_four(&p).unwrap();
        prop_assert!(verify_four(&p, &res.theta, res.dmax));
    }

    #[test]
    fn point_files_round_trip(c in prop::collection::vec((coord(), coord()), 0..30)) {
        let pts: Vec<Point> = c.iter().enumerate().map(|(i, &(x, y))| Point::new(i, x, y)).collect();
        prop_assert_eq!(parse_points(&format_points(&pts)).unwrap(), pts);
    }

    #[test]
    fn orientation_files_round_trip(thetas in prop::collection::vec(-20.0..20.0f64, 0..30), r in 0.0..10.0f64) {
        let a = OrientationAssignment::new(PI, thetas, r);
        prop_assert_eq!(parse_orientation(&format_orientation(&a)).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_instances_are_connected(n in 1usize..80, seed in any::<u64>()) {
        let points = random_connected_udg(n, seed, (n as f64).sqrt()).unwrap();
        prop_assert_eq!(points.len(), n);
        prop_assert!(is_connected(&build_udg(&points).unwrap()));
    }

    #[test]
    fn spanning_tree_degree_and_length(n in 2usize..80, seed in any::<u64>()) {
        let points = random_connected_udg(n, seed, (n as f64).sqrt()).unwrap();
        let t = bounded_degree_mst(&points).unwrap();
        prop_assert!(t.max_degree() <= 5);
        prop_assert_eq!(t.edges().len(), n - 1);
        for (a, b) in t.edges() {
            prop_assert!(points[a].dist(&points[b]) <= 1.0 + EPS);
        }
    }

    #[test]
    fn half_plane_construction_is_strong(n in 2usize..120, seed in any::<u64>()) {
        let points = random_connected_udg(n, seed, (n as f64).sqrt()).unwrap();
        let a = orient_all_180(&points).unwrap();
        prop_assert!(strong_at_radius(&points, &a, RADIUS_180).unwrap());
    }

    #[test]
    fn quarter_plane_construction_is_strong(n in 2usize..120, seed in any::<u64>()) {
        let points = random_connected_udg(n, seed, (n as f64).sqrt()).unwrap();
        let a = orient_all_90(&points).unwrap();
        prop_assert!(strong_at_radius(&points, &a, RADIUS_90).unwrap());
    }

    #[test]
    fn min_radius_is_tight(n in 2usize..40, seed in any::<u64>(), rot in 0.0..TAU) {
        let points = random_connected_udg(n, seed, (n as f64).sqrt()).unwrap();
        let thetas = (0..n).map(|i| rot + i as f64).collect();
        let a = OrientationAssignment::new(PI, thetas, 1.0);
        if let Some(r) = min_strong_radius(&points, &a).unwrap() {
            prop_assert!(strong_at_radius(&points, &a, r).unwrap());
            let below = build_comm_graph(&points, &a, Some(r - 1e-6)).unwrap();
            prop_assert!(!strongly_connected(&below));
        } else {
            prop_assert!(!strong_at_radius(&points, &a, 1e9).unwrap());
        }
    }
}
