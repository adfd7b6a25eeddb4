//! Face tracing over the rotation system.
//!
//! The embedded graph has one vertex per node plus one marker vertex per
//! free string end; its edges are the walk pieces between consecutive
//! tokens. Faces are the orbits of the permutation sigma(alpha(d)) where
//! sigma is the counterclockwise rotation at each vertex and alpha reverses
//! a dart; with this convention every face lies to the left of its darts.

use super::{Arrangement, Branch, Dir, EndKind, NodeId, StrId};
use std::collections::BTreeMap;

/// A directed half-edge of the embedded graph. `edge` indexes the gap
/// between consecutive tokens of the walk (markers included); `forward`
/// means the dart points toward the higher token.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub walk: StrId,
    pub edge: usize,
    pub forward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum VRef {
    Node(NodeId),
    StartMarker(StrId),
    EndMarker(StrId),
}

struct WalkShape {
    has_start_marker: bool,
    tokens: usize,
}

impl WalkShape {
    fn of(w: &super::StringWalk) -> Self {
        let mut tokens = w.nodes.len();
        let has_start_marker = w.start == EndKind::Free;
        if has_start_marker {
            tokens += 1;
        }
        if w.end == EndKind::Free {
            tokens += 1;
        }
        WalkShape { has_start_marker, tokens }
    }

    fn edges(&self) -> usize {
        self.tokens.saturating_sub(1)
    }
}

/// Face structure of an arrangement: dart permutation, face orbits,
/// connected components, Euler counts.
pub struct Faces {
    darts: Vec<Dart>,
    index: BTreeMap<Dart, usize>,
    orbit: Vec<usize>,
    n_orbits: usize,
    n_vertices: usize,
    n_edges: usize,
    n_components: usize,
    /// orbit ids that contain at least one marker dart, per walk
    marker_orbits: BTreeMap<StrId, Vec<usize>>,
    /// component id per dart (via its tail vertex)
    component_of_dart: Vec<usize>,
}

impl Faces {
    pub fn build(arr: &Arrangement) -> Faces {
        // Enumerate darts.
        let mut darts = Vec::new();
        let mut index = BTreeMap::new();
        for (id, w) in &arr.walks {
            let shape = WalkShape::of(w);
            for e in 0..shape.edges() {
                for forward in [true, false] {
                    let d = Dart { walk: id.clone(), edge: e, forward };
                    index.insert(d.clone(), darts.len());
                    darts.push(d);
                }
            }
        }

        // Tail vertex of each dart.
        let vertex_ref = |arr: &Arrangement, d: &Dart| -> VRef {
            let w = &arr.walks[&d.walk];
            let shape = WalkShape::of(w);
            let token = if d.forward { d.edge } else { d.edge + 1 };
            if shape.has_start_marker && token == 0 {
                VRef::StartMarker(d.walk.clone())
            } else if w.end == EndKind::Free && token == shape.tokens - 1 {
                VRef::EndMarker(d.walk.clone())
            } else {
                let i = token - usize::from(shape.has_start_marker);
                VRef::Node(w.nodes[i].clone())
            }
        };

        // Vertex table and per-vertex dart cycles (counterclockwise).
        let mut vertex_ids: BTreeMap<VRef, usize> = BTreeMap::new();
        let mut dart_vertex = vec![0usize; darts.len()];
        for (di, d) in darts.iter().enumerate() {
            let v = vertex_ref(arr, d);
            let next = vertex_ids.len();
            let vid = *vertex_ids.entry(v).or_insert(next);
            dart_vertex[di] = vid;
        }
        let n_vertices = vertex_ids.len();

        let mut cycles: Vec<Vec<usize>> = vec![Vec::new(); n_vertices];
        // Node vertices follow the stored rotation order.
        for node in arr.nodes.values() {
            let vid = vertex_ids[&VRef::Node(node.id.clone())];
            for b in &node.rotation {
                let d = branch_to_dart(arr, b).expect("validated branch");
                cycles[vid].push(index[&d]);
            }
        }
        // Marker vertices carry a single dart.
        for (id, w) in &arr.walks {
            let shape = WalkShape::of(w);
            if shape.has_start_marker {
                let d = Dart { walk: id.clone(), edge: 0, forward: true };
                let vid = vertex_ids[&VRef::StartMarker(id.clone())];
                cycles[vid].push(index[&d]);
            }
            if w.end == EndKind::Free {
                let d = Dart { walk: id.clone(), edge: shape.edges() - 1, forward: false };
                let vid = vertex_ids[&VRef::EndMarker(id.clone())];
                cycles[vid].push(index[&d]);
            }
        }

        // sigma: next dart counterclockwise at the same vertex.
        let mut sigma = vec![usize::MAX; darts.len()];
        for cycle in &cycles {
            for (i, &d) in cycle.iter().enumerate() {
                sigma[d] = cycle[(i + 1) % cycle.len()];
            }
        }
        debug_assert!(sigma.iter().all(|&s| s != usize::MAX));

        // alpha: dart reversal. phi = sigma(alpha(d)) traces faces.
        let alpha = |di: usize| -> usize {
            let d = &darts[di];
            index[&Dart { walk: d.walk.clone(), edge: d.edge, forward: !d.forward }]
        };

        let mut orbit = vec![usize::MAX; darts.len()];
        let mut n_orbits = 0;
        for start in 0..darts.len() {
            if orbit[start] != usize::MAX {
                continue;
            }
            let id = n_orbits;
            n_orbits += 1;
            let mut d = start;
            while orbit[d] == usize::MAX {
                orbit[d] = id;
                d = sigma[alpha(d)];
            }
        }

        // Connected components over vertices, via edges.
        let mut dsu: Vec<usize> = (0..n_vertices).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let r = find(dsu, dsu[x]);
                dsu[x] = r;
            }
            dsu[x]
        }
        let mut n_edges = 0;
        for di in (0..darts.len()).step_by(2) {
            n_edges += 1;
            let a = find(&mut dsu, dart_vertex[di]);
            let b = find(&mut dsu, dart_vertex[di + 1]);
            if a != b {
                dsu[a] = b;
            }
        }
        let mut roots = std::collections::BTreeSet::new();
        for v in 0..n_vertices {
            let r = find(&mut dsu, v);
            roots.insert(r);
        }
        let n_components = roots.len();

        let mut marker_orbits: BTreeMap<StrId, Vec<usize>> = BTreeMap::new();
        for (id, w) in &arr.walks {
            let shape = WalkShape::of(w);
            let mut v = Vec::new();
            if shape.has_start_marker {
                let d = Dart { walk: id.clone(), edge: 0, forward: true };
                v.push(orbit[index[&d]]);
            }
            if w.end == EndKind::Free {
                let d = Dart { walk: id.clone(), edge: shape.edges() - 1, forward: false };
                v.push(orbit[index[&d]]);
            }
            if !v.is_empty() {
                marker_orbits.insert(id.clone(), v);
            }
        }

        let vertex_root: Vec<usize> = (0..n_vertices).map(|v| find(&mut dsu, v)).collect();
        let component_of_dart = (0..darts.len()).map(|di| vertex_root[dart_vertex[di]]).collect();

        Faces {
            darts,
            index,
            orbit,
            n_orbits,
            n_vertices,
            n_edges,
            n_components,
            marker_orbits,
            component_of_dart,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n_vertices
    }
    pub fn edge_count(&self) -> usize {
        self.n_edges
    }
    /// Number of face-tracing orbits. For a disconnected genus-0 arrangement
    /// each component's outer face is its own orbit, so the plane drawing has
    /// `face_count() - (components - 1)` faces.
    pub fn face_count(&self) -> usize {
        self.n_orbits
    }
    pub fn component_count(&self) -> usize {
        self.n_components
    }

    /// Euler test: V - E + F = 2C holds iff every component has genus 0.
    pub fn genus_zero(&self) -> bool {
        self.n_vertices + self.n_orbits == 2 * self.n_components + self.n_edges
    }

    pub fn orbit_of_dart(&self, d: &Dart) -> Option<usize> {
        self.index.get(d).map(|&i| self.orbit[i])
    }

    /// Orbit of the face traced from a branch dart.
    pub fn orbit_of_branch(&self, arr: &Arrangement, b: &Branch) -> Option<usize> {
        branch_to_dart(arr, b).and_then(|d| self.orbit_of_dart(&d))
    }

    /// All face orbits incident to a node (one per corner).
    pub fn orbits_at_node(&self, arr: &Arrangement, id: &str) -> Vec<usize> {
        let mut v = Vec::new();
        if let Some(node) = arr.nodes.get(id) {
            for b in &node.rotation {
                if let Some(o) = self.orbit_of_branch(arr, b) {
                    v.push(o);
                }
            }
        }
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Orbits containing the free-end marker darts of each walk.
    pub fn marker_orbits(&self) -> &BTreeMap<StrId, Vec<usize>> {
        &self.marker_orbits
    }

    /// Component id of a branch dart (ids are arbitrary but stable).
    pub fn component_of_branch(&self, arr: &Arrangement, b: &Branch) -> Option<usize> {
        branch_to_dart(arr, b)
            .and_then(|d| self.index.get(&d).copied())
            .map(|i| self.component_of_dart[i])
    }

    /// All darts of one orbit, in trace order starting from an arbitrary dart.
    pub fn orbit_darts(&self, o: usize) -> Vec<Dart> {
        self.darts
            .iter()
            .enumerate()
            .filter(|(i, _)| self.orbit[*i] == o)
            .map(|(_, d)| d.clone())
            .collect()
    }
}

/// The branch a node dart corresponds to; None for marker darts.
pub fn dart_to_branch(arr: &Arrangement, d: &Dart) -> Option<Branch> {
    let w = arr.walks.get(&d.walk)?;
    let shape = WalkShape::of(w);
    let token = if d.forward { d.edge } else { d.edge + 1 };
    if shape.has_start_marker && token == 0 {
        return None;
    }
    if w.end == EndKind::Free && token == shape.tokens - 1 {
        return None;
    }
    let i = token - usize::from(shape.has_start_marker);
    Some(Branch {
        string: d.walk.clone(),
        walk_index: i,
        dir: if d.forward { Dir::Forward } else { Dir::Backward },
    })
}

/// The dart leaving a node along a branch.
pub fn branch_to_dart(arr: &Arrangement, b: &Branch) -> Option<Dart> {
    let w = arr.walks.get(&b.string)?;
    let shape = WalkShape::of(w);
    let token = b.walk_index + usize::from(shape.has_start_marker);
    match b.dir {
        Dir::Forward => Some(Dart { walk: b.string.clone(), edge: token, forward: true }),
        Dir::Backward => {
            if token == 0 {
                None
            } else {
                Some(Dart { walk: b.string.clone(), edge: token - 1, forward: false })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Arrangement, Branch, Dir, EndKind, Node, StringWalk};
    use super::*;

    #[test]
    fn bare_string_is_one_face() {
        let mut arr = Arrangement::default();
        arr.walks.insert(
            "a".into(),
            StringWalk {
                string: "a".into(),
                nodes: vec![],
                start: EndKind::Free,
                end: EndKind::Free,
            },
        );
        let f = Faces::build(&arr);
        assert_eq!(f.vertex_count(), 2);
        assert_eq!(f.edge_count(), 1);
        assert_eq!(f.face_count(), 1);
        assert_eq!(f.component_count(), 1);
        assert!(f.genus_zero());
    }

    #[test]
    fn nested_touch_point_euler() {
        // Two open arcs tangent at one point enclose nothing: one face.
        // V = 1 node + 4 markers, E = 4, F from tracing must give V-E+F=2.
        let mut arr = Arrangement::default();
        arr.nodes.insert(
            "x".into(),
            Node {
                id: "x".into(),
                rotation: vec![
                    Branch::new("s", 0, Dir::Forward),
                    Branch::new("t", 0, Dir::Forward),
                    Branch::new("t", 0, Dir::Backward),
                    Branch::new("s", 0, Dir::Backward),
                ],
            },
        );
        for s in ["s", "t"] {
            arr.walks.insert(
                s.into(),
                StringWalk {
                    string: s.into(),
                    nodes: vec!["x".into()],
                    start: EndKind::Free,
                    end: EndKind::Free,
                },
            );
        }
        let f = Faces::build(&arr);
        assert_eq!(f.vertex_count(), 5);
        assert_eq!(f.edge_count(), 4);
        assert!(f.genus_zero());
        assert_eq!(f.face_count(), 1);
    }
}
