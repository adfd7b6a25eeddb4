//! Generators for the extremal constructions: braids, suns, string cliques,
//! the named figure systems, and the random segment supply for the property
//! suites.

mod fig5a;

pub use fig5a::{fano_realization, search_fano_realization};

use crate::arrangement::{Arrangement, Branch, Dir, EndKind, Faces, Node, StringWalk};
use crate::geometry::{
    compile_system, extend_to_contact, GeometricSystem, Point, PolylineString, WhichEnd,
};
use crate::rational::rat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("unknown construction name {0}")]
    UnknownName(String),
}

/// A generator output: some constructions are naturally geometric, the
/// purely topological ones are combinatorial rotation systems.
#[derive(Debug, Clone)]
pub enum Generated {
    Geometric(GeometricSystem),
    Combinatorial(Arrangement),
}

impl Generated {
    /// The combinatorial arrangement, compiling geometric output.
    pub fn arrangement(&self) -> Arrangement {
        match self {
            Generated::Geometric(g) => compile_system(g).expect("generator output compiles"),
            Generated::Combinatorial(a) => a.clone(),
        }
    }

    pub fn geometric(&self) -> Option<&GeometricSystem> {
        match self {
            Generated::Geometric(g) => Some(g),
            Generated::Combinatorial(_) => None,
        }
    }
}

fn sname(prefix: &str, j: usize) -> String {
    format!("{prefix}s{j:02}")
}

fn cname(prefix: &str, m: usize) -> String {
    format!("{prefix}c{m:02}")
}

/// An n-braid: n strings passing through n common points in the same order,
/// with the nested (heights construction) rotation at every node: forward
/// branches in height order, then backward branches in reverse.
pub fn gen_braid(n: usize) -> Result<Arrangement, GenError> {
    gen_braid_prefixed(n, "")
}

fn gen_braid_prefixed(n: usize, prefix: &str) -> Result<Arrangement, GenError> {
    if n < 2 {
        return Err(GenError::BadParam("braid needs n >= 2".into()));
    }
    let mut arr = Arrangement::default();
    for j in 1..=n {
        arr.walks.insert(
            sname(prefix, j),
            StringWalk {
                string: sname(prefix, j),
                nodes: (1..=n).map(|m| cname(prefix, m)).collect(),
                start: EndKind::Free,
                end: EndKind::Free,
            },
        );
    }
    for m in 1..=n {
        let mut rotation = Vec::new();
        for j in 1..=n {
            rotation.push(Branch::new(&sname(prefix, j), m - 1, Dir::Forward));
        }
        for j in (1..=n).rev() {
            rotation.push(Branch::new(&sname(prefix, j), m - 1, Dir::Backward));
        }
        arr.nodes.insert(cname(prefix, m), Node { id: cname(prefix, m), rotation });
    }
    Ok(arr)
}

/// A 2l-sun: three 2l-braids attached cyclically, each string of braid t
/// ending at a distinct node of braid t+1, so that all 6l strings pairwise
/// intersect and every remaining free end lies on the outer face.
pub fn gen_sun(l: usize) -> Result<Arrangement, GenError> {
    gen_sun_prefixed(l, "")
}

fn gen_sun_prefixed(l: usize, prefix: &str) -> Result<Arrangement, GenError> {
    if l < 1 {
        return Err(GenError::BadParam("sun needs l >= 1".into()));
    }
    let w = 2 * l;
    let mut arr = Arrangement::default();
    let bs = |t: usize, j: usize| sname(&format!("{prefix}b{t}"), j);
    let bc = |t: usize, m: usize| cname(&format!("{prefix}b{t}"), m);
    for t in 0..3 {
        for j in 1..=w {
            // walk: own braid nodes in order, then the terminal node of the
            // next braid (reversed index keeps the bundle planar)
            let mut nodes: Vec<String> = (1..=w).map(|m| bc(t, m)).collect();
            nodes.push(bc((t + 1) % 3, w + 1 - j));
            arr.walks.insert(
                bs(t, j),
                StringWalk { string: bs(t, j), nodes, start: EndKind::Free, end: EndKind::AtNode },
            );
        }
    }
    for t in 0..3 {
        for m in 1..=w {
            // arriving string from the previous braid ends here
            let arriving = bs((t + 2) % 3, w + 1 - m);
            let mut rotation = vec![Branch::new(&arriving, w, Dir::Backward)];
            for j in 1..=w {
                rotation.push(Branch::new(&bs(t, j), m - 1, Dir::Backward));
            }
            for j in (1..=w).rev() {
                rotation.push(Branch::new(&bs(t, j), m - 1, Dir::Forward));
            }
            arr.nodes.insert(bc(t, m), Node { id: bc(t, m), rotation });
        }
    }
    // designate the unbounded face: the single orbit carrying all free ends
    let faces = Faces::build(&arr);
    let marker_orbits = faces.marker_orbits();
    let mut orbits: Vec<usize> = marker_orbits.values().flatten().copied().collect();
    orbits.sort_unstable();
    orbits.dedup();
    if orbits.len() == 1 {
        let o = orbits[0];
        let mut witness: Option<Branch> = None;
        for d in faces.orbit_darts(o) {
            if let Some(b) = crate::arrangement::faces::dart_to_branch(&arr, &d) {
                if witness.as_ref().map_or(true, |cur| b < *cur) {
                    witness = Some(b);
                }
            }
        }
        arr.outer = witness.into_iter().collect();
    }
    Ok(arr)
}

/// Free ends of a sun in cyclic order around its outer face.
fn outer_marker_cycle(arr: &Arrangement) -> Vec<String> {
    use crate::arrangement::faces::branch_to_dart;
    let faces = Faces::build(arr);
    let outer_orbit = arr
        .outer
        .first()
        .and_then(|b| faces.orbit_of_branch(arr, b))
        .expect("sun designates its outer face");
    // trace the orbit in face order
    let darts = faces.orbit_darts(outer_orbit);
    let start = darts.first().expect("outer face has darts").clone();
    // rebuild the phi permutation locally by following successor lookups
    let mut order = Vec::new();
    let mut cur = start.clone();
    loop {
        // a start-marker dart is (walk, 0, forward) for walks with free start
        let w = &arr.walks[&cur.walk];
        if w.start == EndKind::Free && cur.edge == 0 && cur.forward {
            order.push(cur.walk.clone());
        }
        cur = next_in_face(arr, &cur);
        if cur == start {
            break;
        }
    }
    // sanity: phi successor helper must agree with the orbit membership
    debug_assert!(order.iter().all(|s| {
        let d = crate::arrangement::Dart { walk: s.clone(), edge: 0, forward: true };
        faces.orbit_of_dart(&d) == Some(outer_orbit)
    }));
    let _ = branch_to_dart;
    order
}

/// The face-tracing successor sigma(alpha(d)) of a dart.
fn next_in_face(arr: &Arrangement, d: &crate::arrangement::Dart) -> crate::arrangement::Dart {
    use crate::arrangement::faces::{branch_to_dart, dart_to_branch};
    use crate::arrangement::Dart;
    let rev = Dart { walk: d.walk.clone(), edge: d.edge, forward: !d.forward };
    // the reversed dart sits at the head vertex of d
    match dart_to_branch(arr, &rev) {
        Some(branch) => {
            let node_id = arr.walks[&branch.string].nodes[branch.walk_index].clone();
            let node = &arr.nodes[&node_id];
            let pos = node
                .rotation
                .iter()
                .position(|b| *b == branch)
                .expect("branch in rotation");
            let nb = &node.rotation[(pos + 1) % node.rotation.len()];
            branch_to_dart(arr, nb).expect("rotation darts exist")
        }
        None => rev, // marker vertex: single dart cycles to itself
    }
}

/// A k-touching set of 9(k-1)/2 pairwise-intersecting strings (k odd):
/// three 2l-suns with their outer free ends identified in pairs.
pub fn gen_string_clique(k: usize) -> Result<Arrangement, GenError> {
    if k < 3 || k % 2 == 0 {
        return Err(GenError::BadParam("string clique needs odd k >= 3".into()));
    }
    let l = (k - 1) / 2;
    let mut arr = Arrangement::default();
    let mut cycles = Vec::new();
    for q in 0..3 {
        let sun = gen_sun_prefixed(l, &format!("x{q}"))?;
        cycles.push(outer_marker_cycle(&sun));
        arr.nodes.extend(sun.nodes);
        arr.walks.extend(sun.walks);
    }
    arr.outer.clear();
    // Sun q's first 3l outer ends pair with sun q+1's last 3l, reversed so
    // the two bundles run antiparallel along their shared corridor.
    let h = 3 * l;
    for q in 0..3 {
        let out_group = &cycles[q][0..h];
        let in_group = &cycles[(q + 1) % 3][h..2 * h];
        for j in 0..h {
            let a = &out_group[j];
            let b = &in_group[h - 1 - j];
            arr.merge_at_starts(a, b, &format!("m{q}{j:02}"));
        }
    }
    Ok(arr)
}

/// Explicit coordinates for the fan construction: k segments from a common
/// peak to collinear far ends on a transversal segment, a (k+1)-clique of
/// k-touching segments.
pub fn gen_fig7c(k: usize) -> Result<GeometricSystem, GenError> {
    if k < 2 {
        return Err(GenError::BadParam("fig7c needs k >= 2".into()));
    }
    let mut strings = Vec::new();
    for i in 1..=k {
        strings.push(PolylineString::new(
            &sname("f", i),
            vec![Point::new(rat(0), rat(0)), Point::new(rat(i as i64), rat(1))],
        ));
    }
    strings.push(PolylineString::new(
        "t",
        vec![
            Point::new(crate::rational::ratq(1, 2), rat(1)),
            Point::new(crate::rational::ratq(2 * k as i64 + 1, 2), rat(1)),
        ],
    ));
    Ok(GeometricSystem::new(strings))
}

/// k strings through a central k-fold node (hairpins through the origin, a
/// nested non-crossing rotation) plus transversals a and b touching every
/// hairpin end and each other: k+2 pairwise-intersecting 1-intersecting
/// k-touching strings.
pub fn gen_fig5b(k: usize) -> Result<GeometricSystem, GenError> {
    if k < 3 {
        return Err(GenError::BadParam("fig5b needs k >= 3".into()));
    }
    let ki = k as i64;
    let mut strings = Vec::new();
    for j in 1..=k {
        strings.push(PolylineString::new(
            &sname("", j),
            vec![
                Point::new(rat(j as i64), rat(1)),
                Point::new(rat(0), rat(0)),
                Point::new(rat(j as i64), rat(-1)),
            ],
        ));
    }
    strings.push(PolylineString::new(
        "a",
        vec![
            Point::new(crate::rational::ratq(1, 2), rat(1)),
            Point::new(crate::rational::ratq(2 * ki + 1, 2), rat(1)),
            Point::new(rat(ki + 2), rat(0)),
        ],
    ));
    strings.push(PolylineString::new(
        "b",
        vec![
            Point::new(crate::rational::ratq(1, 2), rat(-1)),
            Point::new(crate::rational::ratq(2 * ki + 1, 2), rat(-1)),
            Point::new(rat(ki + 2), rat(0)),
        ],
    ));
    Ok(GeometricSystem::new(strings))
}

/// Four 2-touching segments: a triangle of endpoint contacts plus a chord
/// touching two sides. Five of the six pairs touch; the full K4 is not
/// achievable at k = 2 (one-sided 2-touching systems have clique number 3).
pub fn gen_fig7a() -> GeometricSystem {
    GeometricSystem::new(vec![
        PolylineString::new("a", vec![Point::new(rat(0), rat(0)), Point::new(rat(4), rat(0))]),
        PolylineString::new("b", vec![Point::new(rat(0), rat(0)), Point::new(rat(2), rat(3))]),
        PolylineString::new("c", vec![Point::new(rat(2), rat(3)), Point::new(rat(4), rat(0))]),
        PolylineString::new(
            "d",
            vec![Point::new(rat(2), rat(0)), Point::new(rat(1), crate::rational::ratq(3, 2))],
        ),
    ])
}

/// Six 3-touching segments whose intersection graph has 13 edges on 6
/// vertices, hence is non-planar: a plane drawing of K4 as segments with
/// one edge prolonged through its contact point onto another.
pub fn gen_fig7b() -> GeometricSystem {
    GeometricSystem::new(vec![
        PolylineString::new("ab", vec![Point::new(rat(0), rat(8)), Point::new(rat(-7), rat(-4))]),
        PolylineString::new("bc", vec![Point::new(rat(-7), rat(-4)), Point::new(rat(7), rat(-4))]),
        PolylineString::new("ca", vec![Point::new(rat(7), rat(-4)), Point::new(rat(0), rat(8))]),
        PolylineString::new("da", vec![Point::new(rat(0), rat(0)), Point::new(rat(0), rat(8))]),
        PolylineString::new("db", vec![Point::new(rat(0), rat(0)), Point::new(rat(-7), rat(-4))]),
        PolylineString::new(
            "dc",
            vec![Point::new(rat(7), rat(-4)), Point::new(crate::rational::ratq(-7, 2), rat(2))],
        ),
    ])
}

/// Named figure constructions.
pub fn gen_named(name: &str, k: Option<usize>) -> Result<Generated, GenError> {
    match name {
        "fig5a" => Ok(Generated::Combinatorial(fano_realization())),
        "fig5b" => {
            let k = k.ok_or_else(|| GenError::BadParam("fig5b needs k".into()))?;
            Ok(Generated::Geometric(gen_fig5b(k)?))
        }
        "fig7a" => Ok(Generated::Geometric(gen_fig7a())),
        "fig7b" => Ok(Generated::Geometric(gen_fig7b())),
        "fig7c" => {
            let k = k.ok_or_else(|| GenError::BadParam("fig7c needs k".into()))?;
            Ok(Generated::Geometric(gen_fig7c(k)?))
        }
        other => Err(GenError::UnknownName(other.to_string())),
    }
}

/// Deterministic random contact system of segments: disjoint integer
/// segments in the box, then free ends repeatedly prolonged to contact
/// (rejecting extensions that would exceed max_k).
pub fn gen_random_segments(seed: u64, count: usize, bbox: i64, max_k: usize) -> GeometricSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = GeometricSystem::default();
    let mut placed = 0;
    let mut attempts = 0;
    while placed < count && attempts < 200 * (count + 1) {
        attempts += 1;
        let x1 = rng.gen_range(0..=bbox);
        let y1 = rng.gen_range(0..=bbox);
        let dx = rng.gen_range(-bbox / 2..=bbox / 2);
        let dy = rng.gen_range(-bbox / 2..=bbox / 2);
        if dx == 0 && dy == 0 {
            continue;
        }
        let x2 = (x1 + dx).clamp(0, bbox);
        let y2 = (y1 + dy).clamp(0, bbox);
        if (x1, y1) == (x2, y2) {
            continue;
        }
        let cand = PolylineString::new(
            &format!("r{placed:03}"),
            vec![Point::new(rat(x1), rat(y1)), Point::new(rat(x2), rat(y2))],
        );
        // keep seed segments pairwise disjoint; contacts come from extension
        let disjoint = g.strings.iter().all(|s| {
            s.segments().all(|(a1, a2)| {
                cand.segments().all(|(b1, b2)| {
                    crate::geometry::seg_intersect(a1, a2, b1, b2)
                        == crate::geometry::SegIntersection::Empty
                })
            })
        });
        if disjoint {
            g.strings.push(cand);
            placed += 1;
        }
    }
    extend_all_to_contact(g, max_k)
}

/// Prolongs every free end to contact where possible, in deterministic
/// order, skipping extensions that would exceed max_k at the hit point.
pub fn extend_all_to_contact(mut g: GeometricSystem, max_k: usize) -> GeometricSystem {
    loop {
        let mut changed = false;
        let names: Vec<String> = g.strings.iter().map(|s| s.name.clone()).collect();
        for name in names {
            for end in [WhichEnd::Start, WhichEnd::End] {
                if g.is_free_end(&name, end) != Some(true) {
                    continue;
                }
                if let Ok(next) = extend_to_contact(&g, &name, end) {
                    // reject if the hit point would exceed max_k strings
                    let s = next.string(&name).expect("exists");
                    let tip = match end {
                        WhichEnd::Start => s.vertices.first().expect("nonempty"),
                        WhichEnd::End => s.vertices.last().expect("nonempty"),
                    };
                    let mult = 1 + g
                        .strings
                        .iter()
                        .filter(|t| t.name != name && t.locate(tip).is_some())
                        .count();
                    if mult <= max_k && compile_system(&next).is_ok() {
                        g = next;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return g;
        }
    }
}

/// Surrounds a system with a square frame of four segments meeting at
/// corner peaks, so that every interior prolongation finds a hit.
pub fn with_frame(mut g: GeometricSystem, lo: i64, hi: i64) -> GeometricSystem {
    let c = |x: i64, y: i64| Point::new(rat(x), rat(y));
    g.strings.push(PolylineString::new("zfr0", vec![c(lo, lo), c(hi, lo)]));
    g.strings.push(PolylineString::new("zfr1", vec![c(hi, lo), c(hi, hi)]));
    g.strings.push(PolylineString::new("zfr2", vec![c(hi, hi), c(lo, hi)]));
    g.strings.push(PolylineString::new("zfr3", vec![c(lo, hi), c(lo, lo)]));
    g
}
