use super::*;
use crate::poly::{parse_polynomial, rat, rat_int};
use crate::roots::AlgebraicNumber;

fn p(s: &str) -> Polynomial {
    parse_polynomial(s).unwrap()
}

#[test]
fn critical_values_examples() {
    // Circle: tangents at x = -1, 1.
    let roots = critical_x_values(&p("x^2 + y^2 - 1")).unwrap();
    assert_eq!(roots.len(), 2);
    assert!(roots.intervals()[0].contains(&rat_int(-1)));
    assert!(roots.intervals()[1].contains(&rat_int(1)));

    // Parabola y - x^2: h_y = 1, no critical values.
    assert_eq!(critical_x_values(&p("y - x^2")).unwrap().len(), 0);

    // Crossing lines: node at the origin.
    let roots = critical_x_values(&p("y^2 - x^2")).unwrap();
    assert_eq!(roots.len(), 1);
    assert!(roots.intervals()[0].contains(&rat_int(0)));

    // Non-constant leading coefficient is rejected.
    assert!(matches!(
        critical_x_values(&p("x*y + 1")),
        Err(Error::NotGeneric(_))
    ));
}

#[test]
fn fiber_points_examples() {
    let circle = p("x^2 + y^2 - 1");
    let at = |x: i64| fiber_points(&circle, &XPoint::Rational(rat_int(x))).unwrap();
    let f0 = at(0);
    assert_eq!(f0.len(), 2);
    assert!(f0[0].contains(&rat_int(-1)));
    assert!(f0[1].contains(&rat_int(1)));
    let f1 = at(1);
    assert_eq!(f1.len(), 1);
    assert!(f1[0].contains(&rat_int(0)));
    assert!(at(2).is_empty());

    // Vertical line component is reported.
    assert!(matches!(
        fiber_points(&p("x*y - y"), &XPoint::Rational(rat_int(1))),
        Err(Error::VerticalLine(_))
    ));
}

#[test]
fn generic_position_examples() {
    assert!(is_generic_plane(&p("x^2 + y^2 - 1")).unwrap().is_generic());
    // Stacked circles: both tangents at x = +-1 share their x.
    let stacked = &p("x^2 + (y-2)^2 - 1") * &p("x^2 + (y+2)^2 - 1");
    assert!(!is_generic_plane(&stacked).unwrap().is_generic());
    // Non-constant lc.
    assert!(!is_generic_plane(&p("x*y + 1")).unwrap().is_generic());
    // Node and cusp-free cases stay generic.
    assert!(is_generic_plane(&p("y^2 - x^2")).unwrap().is_generic());
    assert!(is_generic_plane(&p("y^2 - x^2*(x+1)")).unwrap().is_generic());
}

#[test]
fn pcgp_accepts_zero_for_already_generic() {
    let circle = p("x^2 + y^2 - 1");
    let sheared = circle.shear_symbolic(Var::X, Var::Y);
    assert_eq!(pcgp_search(&sheared).unwrap(), rat_int(0));
}

#[test]
fn pcgp_fixes_stacked_circles() {
    let stacked = &p("x^2 + (y-2)^2 - 1") * &p("x^2 + (y+2)^2 - 1");
    let sheared = stacked.shear_symbolic(Var::X, Var::Y);
    let s0 = pcgp_search(&sheared).unwrap();
    assert_ne!(s0, rat_int(0));
    let fixed = sheared.evaluate_partial(&[(Var::S, s0)]);
    assert!(is_generic_plane(&crate::poly::squarefree_part(&fixed).unwrap())
        .unwrap()
        .is_generic());
}

#[test]
fn pcgp_rejects_zero_input() {
    assert!(matches!(
        pcgp_search(&Polynomial::zero()),
        Err(Error::SearchFailed(_))
    ));
}

#[test]
fn plane_topology_circle() {
    let t = plane_topology(&p("x^2 + y^2 - 1")).unwrap();
    assert_eq!(t.component_count(), 1);
    assert_eq!(t.betti(), 1);
    assert!(t.high_degrees().is_empty());
    // Fibers: sentinel, critical, middle, critical, sentinel.
    assert_eq!(t.fibers.len(), 5);
    assert_eq!(t.fibers[0].points.len(), 0);
    assert_eq!(t.fibers[1].points.len(), 1);
    assert_eq!(t.fibers[2].points.len(), 2);
}

#[test]
fn plane_topology_parabola() {
    let t = plane_topology(&p("y - x^2")).unwrap();
    assert_eq!(t.component_count(), 1);
    assert_eq!(t.betti(), 0);
    // Two unbounded branch endpoints at the sentinels.
    let deg1: usize = t
        .fibers
        .iter()
        .enumerate()
        .map(|(fi, f)| {
            (0..f.points.len()).filter(|&pi| t.degree_of((fi, pi)) == 1).count()
        })
        .sum();
    assert_eq!(deg1, 2);
}

#[test]
fn plane_topology_crossing_lines() {
    let t = plane_topology(&p("y^2 - x^2")).unwrap();
    assert_eq!(t.component_count(), 1);
    assert_eq!(t.betti(), 0);
    assert_eq!(t.high_degrees(), vec![4]);
}

#[test]
fn plane_topology_nodal_cubic() {
    let t = plane_topology(&p("y^2 - x^2*(x+1)")).unwrap();
    assert_eq!(t.component_count(), 1);
    assert_eq!(t.betti(), 1);
    assert_eq!(t.high_degrees(), vec![4]);
}

#[test]
fn plane_topology_empty_curve() {
    let t = plane_topology(&p("x^2 + y^2 + 1")).unwrap();
    assert_eq!(t.num_vertices(), 0);
    assert_eq!(t.component_count(), 0);
}

#[test]
fn refine_with_fibers_examples() {
    let circle = p("x^2 + y^2 - 1");
    let t = plane_topology(&circle).unwrap();
    let (v, e) = (t.num_vertices(), t.num_edges());

    // Duplicate of an existing fiber: unchanged counts (idempotent).
    let dup = t.refine_with_fibers(&[XPoint::Rational(rat_int(0))]).unwrap();
    assert_eq!(dup.num_vertices(), v);
    assert_eq!(dup.num_edges(), e);

    // A genuinely new fiber at x = 1/2 subdivides two edges.
    let fine = t.refine_with_fibers(&[XPoint::Rational(rat(1, 2))]).unwrap();
    assert_eq!(fine.num_vertices(), v + 2);
    assert_eq!(fine.num_edges(), e + 2);
    assert_eq!(fine.betti(), t.betti());
    assert_eq!(fine.component_count(), t.component_count());

    // Duplicate given as an algebraic number is also detected.
    let crit = AlgebraicNumber::new(
        crate::roots::UPoly::from_polynomial(&p("x^2 - 1"), Var::X).unwrap(),
        Interval::new(rat(1, 2), rat(3, 2)),
    )
    .unwrap();
    let dup2 = t.refine_with_fibers(&[XPoint::Algebraic(crit)]).unwrap();
    assert_eq!(dup2.num_vertices(), v);

    // Out-of-range fibers are rejected.
    assert!(t.refine_with_fibers(&[XPoint::Rational(rat_int(100))]).is_err());
}

#[test]
fn refine_parabola_adds_one_vertex() {
    let t = plane_topology(&p("y - x^2")).unwrap();
    let (v, e, c) = (t.num_vertices(), t.num_edges(), t.component_count());
    let fine = t.refine_with_fibers(&[XPoint::Rational(rat_int(-1))]).unwrap();
    assert_eq!(fine.num_vertices(), v + 1);
    assert_eq!(fine.num_edges(), e + 1);
    assert_eq!(fine.component_count(), c);
}

#[test]
fn interior_points_have_degree_two_and_branch_sums_match() {
    for src in ["x^2 + y^2 - 1", "y^2 - x^2*(x+1)", "y^2 - x^2", "y - x^2"] {
        let t = plane_topology(&p(src)).unwrap();
        let last = t.fibers.len() - 1;
        for (fi, f) in t.fibers.iter().enumerate() {
            let mut left_sum = 0;
            let mut right_sum = 0;
            for (pi, pt) in f.points.iter().enumerate() {
                left_sum += pt.branch_left;
                right_sum += pt.branch_right;
                if fi != 0 && fi != last && !pt.is_critical {
                    assert_eq!(t.degree_of((fi, pi)), 2, "{} fiber {} point {}", src, fi, pi);
                }
            }
            // Edge endpoints at this fiber match the branch counts.
            let incoming = t.edges.iter().filter(|(_, b)| b.0 == fi).count();
            let outgoing = t.edges.iter().filter(|(a, _)| a.0 == fi).count();
            assert_eq!(incoming, left_sum);
            assert_eq!(outgoing, right_sum);
        }
    }
}

#[test]
fn branch_counts_constant_between_criticals() {
    // Three sample points inside a generic strip give the same count.
    let cubic = p("y^2 - x^2*(x+1)");
    for xq in [rat(1, 3), rat(1, 2), rat(2, 3)] {
        assert_eq!(fiber_points(&cubic, &XPoint::Rational(xq)).unwrap().len(), 2);
    }
    for xq in [rat(-3, 4), rat(-1, 2), rat(-2, 3)] {
        assert_eq!(fiber_points(&cubic, &XPoint::Rational(xq)).unwrap().len(), 2);
    }
}

#[test]
fn json_and_dot_render() {
    let t = plane_topology(&p("x^2 + y^2 - 1")).unwrap();
    let j = plane_to_json(&t);
    assert_eq!(j["schema"], 1);
    assert_eq!(j["betti"], 1);
    assert_eq!(j["vertices"].as_array().unwrap().len(), t.num_vertices());
    let dot = plane_to_dot(&t);
    assert!(dot.starts_with("graph"));
    assert!(dot.contains("--"));
}
