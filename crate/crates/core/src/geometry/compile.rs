//! Compilation of a geometric system into its combinatorial arrangement:
//! node discovery, walk extraction, exact counterclockwise rotations, and
//! designation of the unbounded face.

use super::{
    angle_class, ccw_cmp, cross, pt, sub, GeometricSystem, Point, SegIntersection, SystemError,
    Vec2,
};
use crate::arrangement::{
    faces::dart_to_branch,
    Arrangement, Branch, Dart, Dir, EndKind, Faces, Node, StringWalk,
};
use crate::rational::{rat, Rational};
use num::traits::Zero;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompileError {
    #[error(transparent)]
    Invalid(#[from] SystemError),
    #[error("strings {0} and {1} leave a node in the same direction")]
    ParallelBranches(String, String),
}

struct NodeData {
    point: Point,
    strings: BTreeSet<usize>,
}

/// Compiles a geometric system into an arrangement: one node per point on at
/// least two strings, exact counterclockwise rotations, walks in parameter
/// order, and the unbounded face designated by witness branches.
pub fn compile_system(g: &GeometricSystem) -> Result<Arrangement, CompileError> {
    g.validate()?;

    // Intersection points and the strings through them.
    let mut by_point: BTreeMap<Point, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..g.strings.len() {
        for j in i + 1..g.strings.len() {
            for (a1, a2) in g.strings[i].segments() {
                for (b1, b2) in g.strings[j].segments() {
                    if let SegIntersection::Point { p, .. } = seg_pair(a1, a2, b1, b2) {
                        let e = by_point.entry(p).or_default();
                        e.insert(i);
                        e.insert(j);
                    }
                }
            }
        }
    }
    let nodes: Vec<NodeData> = by_point
        .into_iter()
        .map(|(point, strings)| NodeData { point, strings })
        .collect();
    let width = nodes.len().to_string().len().max(1);
    let node_id = |idx: usize| format!("n{idx:0width$}");

    let mut arr = Arrangement::default();
    // Walks in parameter order, with end flags.
    let mut walk_params: Vec<Vec<(Rational, usize)>> = vec![Vec::new(); g.strings.len()];
    for (ni, nd) in nodes.iter().enumerate() {
        for &si in &nd.strings {
            let param = g.strings[si]
                .locate(&nd.point)
                .expect("node point lies on each incident string");
            walk_params[si].push((param, ni));
        }
    }
    for (si, s) in g.strings.iter().enumerate() {
        walk_params[si].sort();
        let params = &walk_params[si];
        let nsegs = rat(s.segment_count() as i64);
        let start = if params.first().map(|(p, _)| p.is_zero()) == Some(true) {
            EndKind::AtNode
        } else {
            EndKind::Free
        };
        let end = if params.last().map(|(p, _)| *p == nsegs) == Some(true) {
            EndKind::AtNode
        } else {
            EndKind::Free
        };
        arr.walks.insert(
            s.name.clone(),
            StringWalk {
                string: s.name.clone(),
                nodes: params.iter().map(|(_, ni)| node_id(*ni)).collect(),
                start,
                end,
            },
        );
    }

    // Rotations: every branch with its exact outgoing direction, sorted
    // counterclockwise.
    let mut node_dirs: BTreeMap<String, Vec<(Branch, Vec2)>> = BTreeMap::new();
    for (ni, nd) in nodes.iter().enumerate() {
        let mut branches: Vec<(Branch, Vec2)> = Vec::new();
        for &si in &nd.strings {
            let s = &g.strings[si];
            let wi = walk_params[si]
                .iter()
                .position(|(_, n)| *n == ni)
                .expect("node is on the walk");
            let param = walk_params[si][wi].0.clone();
            if let Some(d) = s.forward_dir(&param) {
                branches.push((Branch::new(&s.name, wi, Dir::Forward), d));
            }
            if let Some(d) = s.backward_dir(&param) {
                branches.push((Branch::new(&s.name, wi, Dir::Backward), d));
            }
        }
        branches.sort_by(|a, b| ccw_cmp(&a.1, &b.1).then_with(|| a.0.cmp(&b.0)));
        for w in branches.windows(2) {
            if ccw_cmp(&w[0].1, &w[1].1) == Ordering::Equal {
                return Err(CompileError::ParallelBranches(
                    w[0].0.string.clone(),
                    w[1].0.string.clone(),
                ));
            }
        }
        // Anchor the cyclic order at the smallest branch token.
        let anchor = branches
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.0.cmp(&b.0))
            .map(|(i, _)| i)
            .unwrap_or(0);
        branches.rotate_left(anchor);
        let id = node_id(ni);
        arr.nodes.insert(
            id.clone(),
            Node { id: id.clone(), rotation: branches.iter().map(|(b, _)| b.clone()).collect() },
        );
        node_dirs.insert(id, branches);
    }

    designate_outer(g, &mut arr, &nodes, &walk_params, &node_dirs, &node_id);
    debug_assert_eq!(arr.validate(), Ok(()));
    Ok(arr)
}

fn seg_pair(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> SegIntersection {
    super::seg_intersect(a1, a2, b1, b2)
}

/// Where the vertical downward ray from `origin` first meets a segment, as
/// the hit's y coordinate (x is `origin.x`).
fn downward_hit(origin: &Point, a: &Point, b: &Point) -> Option<Rational> {
    let (lo, hi) = if a.x <= b.x { (a, b) } else { (b, a) };
    if origin.x < lo.x || origin.x > hi.x {
        return None;
    }
    if a.x == b.x {
        // Vertical segment on the ray line: it cannot contain the origin
        // (that would make the origin a shared point), so it lies entirely
        // below or entirely above.
        let top = if a.y >= b.y { &a.y } else { &b.y };
        return if *top < origin.y { Some(top.clone()) } else { None };
    }
    let t = (&origin.x - &a.x) / (&b.x - &a.x);
    let y = &a.y + &t * (&b.y - &a.y);
    if y < origin.y {
        Some(y)
    } else {
        None
    }
}

/// Rank of `v` when sweeping counterclockwise starting just after `a`.
/// 0..=4; directions equal to `a` rank 5 (callers exclude them first).
fn ccw_rank(a: &Vec2, v: &Vec2) -> u8 {
    let diff = (4 + angle_class(v) - angle_class(a)) % 4;
    if diff == 0 {
        match cross(a, v).cmp(&Rational::zero()) {
            Ordering::Greater => 0,
            Ordering::Equal => 5,
            Ordering::Less => 4, // behind a, reached after the full wrap
        }
    } else {
        diff
    }
}

/// True iff `m` lies strictly inside the counterclockwise arc from `a` to `b`.
fn ccw_between(a: &Vec2, m: &Vec2, b: &Vec2) -> bool {
    if ccw_cmp(a, m) == Ordering::Equal || ccw_cmp(m, b) == Ordering::Equal {
        return false;
    }
    if ccw_cmp(a, b) == Ordering::Equal {
        // Degenerate full-circle arc: everything else is inside.
        return true;
    }
    let (rm, rb) = (ccw_rank(a, m), ccw_rank(a, b));
    if rm != rb {
        return rm < rb;
    }
    // Same rank class means both lie in one open half plane, where the
    // counterclockwise order is decided by the cross product.
    cross(m, b) > Rational::zero()
}

#[allow(clippy::too_many_arguments)]
fn designate_outer(
    g: &GeometricSystem,
    arr: &mut Arrangement,
    nodes: &[NodeData],
    walk_params: &[Vec<(Rational, usize)>],
    node_dirs: &BTreeMap<String, Vec<(Branch, Vec2)>>,
    node_id: &dyn Fn(usize) -> String,
) {
    if g.strings.is_empty() {
        return;
    }
    let faces = Faces::build(arr);

    // Components over strings: union by shared node.
    let mut dsu: Vec<usize> = (0..g.strings.len()).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let r = find(dsu, dsu[x]);
            dsu[x] = r;
        }
        dsu[x]
    }
    for nd in nodes {
        let mut it = nd.strings.iter();
        let first = *it.next().expect("node has strings");
        for &s in it {
            let (a, b) = (find(&mut dsu, first), find(&mut dsu, s));
            if a != b {
                dsu[a] = b;
            }
        }
    }
    let mut comp_strings: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for si in 0..g.strings.len() {
        let r = find(&mut dsu, si);
        comp_strings.entry(r).or_default().push(si);
    }

    // Union-find over face orbits plus a virtual "infinity" element.
    let inf = faces.face_count();
    let mut fdsu: Vec<usize> = (0..=inf).collect();

    for strings in comp_strings.values() {
        // Bottom-most point of the component drawing (min y, then min x).
        let mut bottom: Option<(Point, usize)> = None;
        for &si in strings {
            for v in &g.strings[si].vertices {
                let better = match &bottom {
                    None => true,
                    Some((b, _)) => (&v.y, &v.x) < (&b.y, &b.x),
                };
                if better {
                    bottom = Some((v.clone(), si));
                }
            }
        }
        let (b_point, b_string) = bottom.expect("component has vertices");
        let outer_orbit = orbit_at_wedge_below(
            g, arr, &faces, nodes, walk_params, node_dirs, node_id, &b_point, b_string,
        );

        // Downward ray against all segments of other components.
        let in_comp: BTreeSet<usize> = strings.iter().copied().collect();
        let mut hit: Option<(Rational, usize)> = None;
        for (si, s) in g.strings.iter().enumerate() {
            if in_comp.contains(&si) {
                continue;
            }
            for (a, bseg) in s.segments() {
                if let Some(y) = downward_hit(&b_point, a, bseg) {
                    if hit.as_ref().map_or(true, |(cur, _)| y > *cur) {
                        hit = Some((y, si));
                    }
                }
            }
        }
        let target = match hit {
            None => inf,
            Some((y, si)) => {
                let h = Point::new(b_point.x.clone(), y);
                orbit_at_wedge_above(
                    g, arr, &faces, nodes, walk_params, node_dirs, node_id, &h, si,
                )
            }
        };
        let (a, b) = (find(&mut fdsu, outer_orbit), find(&mut fdsu, target));
        if a != b {
            fdsu[a] = b;
        }
    }

    let inf_root = find(&mut fdsu, inf);
    let mut witnesses = Vec::new();
    for o in 0..faces.face_count() {
        if find(&mut fdsu, o) != inf_root {
            continue;
        }
        // Any node dart of the orbit serves as a serializable witness.
        let mut branch: Option<Branch> = None;
        for d in faces.orbit_darts(o) {
            if let Some(b) = dart_to_branch(arr, &d) {
                let better = branch.as_ref().map_or(true, |cur| b < *cur);
                if better {
                    branch = Some(b);
                }
            }
        }
        if let Some(b) = branch {
            witnesses.push(b);
        }
    }
    witnesses.sort();
    arr.outer = witnesses;
}

/// Face orbit at the wedge below a bottom-most point of a component.
#[allow(clippy::too_many_arguments)]
fn orbit_at_wedge_below(
    g: &GeometricSystem,
    arr: &Arrangement,
    faces: &Faces,
    nodes: &[NodeData],
    walk_params: &[Vec<(Rational, usize)>],
    node_dirs: &BTreeMap<String, Vec<(Branch, Vec2)>>,
    node_id: &dyn Fn(usize) -> String,
    p: &Point,
    on_string: usize,
) -> usize {
    // At a bottom-most point all outgoing directions have angles in
    // [0, pi); the face below is the corner after the maximal direction.
    if let Some(ni) = nodes.iter().position(|nd| nd.point == *p) {
        let dirs = &node_dirs[&node_id(ni)];
        let max = dirs
            .iter()
            .max_by(|a, b| ccw_cmp(&a.1, &b.1))
            .expect("node has branches");
        return faces.orbit_of_branch(arr, &max.0).expect("branch dart");
    }
    let s = &g.strings[on_string];
    let param = s.locate(p).expect("bottom point lies on its string");
    let fwd = s.forward_dir(&param);
    let bwd = s.backward_dir(&param);
    match (fwd, bwd) {
        (Some(f), Some(b)) => {
            let hi_forward = ccw_cmp(&f, &b) == Ordering::Greater;
            dart_orbit_at(arr, faces, walk_params, on_string, g, &param, hi_forward)
        }
        (Some(_), None) => marker_orbit(arr, faces, &s.name, true),
        (None, Some(_)) => marker_orbit(arr, faces, &s.name, false),
        (None, None) => unreachable!("string has at least one segment"),
    }
}

/// Face orbit at the wedge above a ray hit point.
#[allow(clippy::too_many_arguments)]
fn orbit_at_wedge_above(
    g: &GeometricSystem,
    arr: &Arrangement,
    faces: &Faces,
    nodes: &[NodeData],
    walk_params: &[Vec<(Rational, usize)>],
    node_dirs: &BTreeMap<String, Vec<(Branch, Vec2)>>,
    node_id: &dyn Fn(usize) -> String,
    h: &Point,
    on_string: usize,
) -> usize {
    let up: Vec2 = (Rational::zero(), rat(1));
    if let Some(ni) = nodes.iter().position(|nd| nd.point == *h) {
        // The corner containing the up direction starts at the cyclic
        // predecessor of "up" among the branch directions.
        let dirs = &node_dirs[&node_id(ni)];
        debug_assert!(dirs.iter().all(|(_, d)| ccw_cmp(d, &up) != Ordering::Equal));
        let pred = dirs
            .iter()
            .filter(|(_, d)| ccw_cmp(d, &up) == Ordering::Less)
            .max_by(|a, b| ccw_cmp(&a.1, &b.1))
            .or_else(|| dirs.iter().max_by(|a, b| ccw_cmp(&a.1, &b.1)))
            .expect("node has branches");
        return faces.orbit_of_branch(arr, &pred.0).expect("branch dart");
    }
    let s = &g.strings[on_string];
    let param = s.locate(h).expect("hit lies on the string");
    let fwd = s.forward_dir(&param);
    let bwd = s.backward_dir(&param);
    match (fwd, bwd) {
        (Some(f), Some(b)) => {
            // Wedge (d, other) containing "up": departing dart d.
            let use_forward = ccw_between(&f, &up, &b);
            debug_assert!(use_forward ^ ccw_between(&b, &up, &f));
            dart_orbit_at(arr, faces, walk_params, on_string, g, &param, use_forward)
        }
        (Some(_), None) => marker_orbit(arr, faces, &s.name, true),
        (None, Some(_)) => marker_orbit(arr, faces, &s.name, false),
        (None, None) => unreachable!(),
    }
}

/// Orbit of the dart of the walk edge containing `param`, oriented forward
/// or backward along the string.
fn dart_orbit_at(
    arr: &Arrangement,
    faces: &Faces,
    walk_params: &[Vec<(Rational, usize)>],
    si: usize,
    g: &GeometricSystem,
    param: &Rational,
    forward: bool,
) -> usize {
    let s = &g.strings[si];
    let w = &arr.walks[&s.name];
    let has_start_marker = w.start == EndKind::Free;
    let before = walk_params[si].iter().filter(|(q, _)| q < param).count()
        + usize::from(has_start_marker);
    debug_assert!(before >= 1);
    let edge = before - 1;
    let d = Dart { walk: s.name.clone(), edge, forward };
    faces.orbit_of_dart(&d).expect("edge exists")
}

fn marker_orbit(arr: &Arrangement, faces: &Faces, name: &str, start: bool) -> usize {
    let w = &arr.walks[name];
    let has_start = w.start == EndKind::Free;
    let mut tokens = w.nodes.len() + usize::from(has_start);
    if w.end == EndKind::Free {
        tokens += 1;
    }
    let d = if start {
        Dart { walk: name.to_string(), edge: 0, forward: true }
    } else {
        Dart { walk: name.to_string(), edge: tokens - 2, forward: false }
    };
    faces.orbit_of_dart(&d).expect("marker dart exists")
}

#[cfg(test)]
mod tests {
    use super::super::{GeometricSystem, PolylineString, WhichEnd};
    use super::*;
    use crate::arrangement::NodeKind;

    fn compile(strings: Vec<PolylineString>) -> Arrangement {
        let arr = compile_system(&GeometricSystem::new(strings)).unwrap();
        arr.validate().unwrap();
        arr
    }

    #[test]
    fn two_segments_sharing_a_point() {
        let arr = compile(vec![
            PolylineString::new("a", vec![pt(0, 0), pt(2, 0)]),
            PolylineString::new("b", vec![pt(1, 0), pt(1, 2)]),
        ]);
        assert_eq!(arr.nodes.len(), 1);
        let profile = arr.profile();
        assert_eq!(profile.k, 2);
        assert_eq!(profile.c, 1);
        assert_eq!(profile.free_ends, 3);
        let cls = arr.classify_node(arr.nodes.keys().next().unwrap()).unwrap();
        assert_eq!(cls.kind, NodeKind::Flat);
    }

    #[test]
    fn three_segment_ends_make_a_peak() {
        let arr = compile(vec![
            PolylineString::new("a", vec![pt(0, 0), pt(2, 0)]),
            PolylineString::new("b", vec![pt(0, 0), pt(-1, 2)]),
            PolylineString::new("c", vec![pt(0, 0), pt(-1, -2)]),
        ]);
        assert_eq!(arr.nodes.len(), 1);
        let id = arr.nodes.keys().next().unwrap().clone();
        let cls = arr.classify_node(&id).unwrap();
        assert_eq!(cls.kind, NodeKind::Peak);
        assert_eq!(cls.multiplicity, 3);
    }

    #[test]
    fn properly_crossing_segments_compile_and_report_a_crossing() {
        let arr = compile(vec![
            PolylineString::new("a", vec![pt(0, 0), pt(2, 2)]),
            PolylineString::new("b", vec![pt(0, 2), pt(2, 0)]),
        ]);
        let crossings = arr.find_crossings();
        assert_eq!(crossings.len(), 1);
    }

    #[test]
    fn walk_order_follows_parameterization() {
        let arr = compile(vec![
            PolylineString::new("a", vec![pt(0, 0), pt(10, 0)]),
            PolylineString::new("b", vec![pt(2, 0), pt(2, 2)]),
            PolylineString::new("c", vec![pt(7, 0), pt(7, -2)]),
        ]);
        let w = &arr.walks["a"];
        assert_eq!(w.nodes.len(), 2);
        // Node ids are ordered by (x, y), so b's contact precedes c's.
        assert!(w.nodes[0] < w.nodes[1]);
    }

    #[test]
    fn rotation_matches_exact_angle_order() {
        let arr = compile(vec![
            PolylineString::new("a", vec![pt(-2, 0), pt(2, 0)]),
            PolylineString::new("b", vec![pt(0, 0), pt(1, 2)]),
            PolylineString::new("c", vec![pt(0, 0), pt(-1, 2)]),
        ]);
        let node = arr.nodes.values().next().unwrap();
        // CCW from east: a forward (east), b end (NE), c end (NW), a backward (west).
        let names: Vec<(String, Dir)> =
            node.rotation.iter().map(|b| (b.string.clone(), b.dir)).collect();
        let east_first = names
            .iter()
            .cycle()
            .skip_while(|(s, d)| !(s == "a" && *d == Dir::Forward))
            .take(4)
            .cloned()
            .collect::<Vec<_>>();
        assert_eq!(
            east_first,
            vec![
                ("a".to_string(), Dir::Forward),
                ("b".to_string(), Dir::Forward),
                ("c".to_string(), Dir::Forward),
                ("a".to_string(), Dir::Backward),
            ]
        );
    }

    #[test]
    fn compile_is_deterministic() {
        let mk = || {
            compile(vec![
                PolylineString::new("a", vec![pt(0, 0), pt(4, 0)]),
                PolylineString::new("b", vec![pt(1, 0), pt(1, 3)]),
                PolylineString::new("c", vec![pt(3, 0), pt(3, -3)]),
            ])
        };
        assert_eq!(mk(), mk());
    }

    #[test]
    fn outer_face_designated_for_triangle() {
        // Triangle of three segments touching endpoint to endpoint: two
        // faces; all three peaks lie on the outer one.
        let arr = compile(vec![
            PolylineString::new("a", vec![pt(0, 0), pt(4, 0)]),
            PolylineString::new("b", vec![pt(4, 0), pt(2, 3)]),
            PolylineString::new("c", vec![pt(2, 3), pt(0, 0)]),
        ]);
        assert!(!arr.outer.is_empty());
        let g = arr.contact_plane_graph().unwrap();
        let peaks = g.outer_face_peaks.unwrap();
        assert_eq!(peaks.len(), 3);
    }

    #[test]
    fn nested_component_is_not_on_the_outer_face() {
        // A triangle inside a larger triangle: the inner peaks are not on
        // the unbounded face.
        let arr = compile(vec![
            PolylineString::new("a", vec![pt(0, 0), pt(12, 0)]),
            PolylineString::new("b", vec![pt(12, 0), pt(6, 10)]),
            PolylineString::new("c", vec![pt(6, 10), pt(0, 0)]),
            PolylineString::new("x", vec![pt(4, 2), pt(8, 2)]),
            PolylineString::new("y", vec![pt(8, 2), pt(6, 5)]),
            PolylineString::new("z", vec![pt(6, 5), pt(4, 2)]),
        ]);
        let g = arr.contact_plane_graph().unwrap();
        let peaks = g.outer_face_peaks.unwrap();
        // Only the outer triangle's three corners.
        assert_eq!(peaks.len(), 3);
        let profile = arr.profile();
        assert_eq!(profile.p.get(&2), Some(&6));
    }

    #[test]
    fn side_by_side_components_share_the_outer_face() {
        let arr = compile(vec![
            PolylineString::new("a", vec![pt(0, 0), pt(2, 0)]),
            PolylineString::new("b", vec![pt(2, 0), pt(1, 2)]),
            PolylineString::new("c", vec![pt(1, 2), pt(0, 0)]),
            PolylineString::new("x", vec![pt(10, 0), pt(12, 0)]),
            PolylineString::new("y", vec![pt(12, 0), pt(11, 2)]),
            PolylineString::new("z", vec![pt(11, 2), pt(10, 0)]),
        ]);
        let g = arr.contact_plane_graph().unwrap();
        let peaks = g.outer_face_peaks.unwrap();
        assert_eq!(peaks.len(), 6);
    }

    #[test]
    fn extend_onto_existing_node_raises_multiplicity() {
        let g = GeometricSystem::new(vec![
            PolylineString::new("a", vec![pt(0, 0), pt(1, 0)]),
            PolylineString::new("wall", vec![pt(2, -2), pt(2, 2)]),
            PolylineString::new("t", vec![pt(2, 0), pt(4, 0)]),
        ]);
        // "t" already touches the wall at (2,0) with multiplicity 2.
        let arr0 = compile_system(&g).unwrap();
        assert_eq!(arr0.profile().k, 2);
        let g2 = super::super::extend_to_contact(&g, "a", WhichEnd::End).unwrap();
        let arr = compile_system(&g2).unwrap();
        assert_eq!(arr.profile().k, 3);
        assert_eq!(arr.nodes.len(), 1);
    }
}
