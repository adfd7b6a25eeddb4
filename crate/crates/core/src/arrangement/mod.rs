//! Combinatorial model of a touching system: contact nodes carrying cyclic
//! rotation systems, one walk per string, crossing detection, node
//! classification, census, the plane graph of contact points, and the
//! counting relations.

mod edit;
pub(crate) mod faces;
mod relations;

pub use faces::{Dart, Faces};
pub use relations::{all_ends_at_nodes, check_relations, RelationReport, RelationVariant};

use crate::rational::Rational;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

pub type NodeId = String;
pub type StrId = String;

/// Direction in which a string's parameterization leaves a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    Forward,
    Backward,
}

/// One branch end incident to a node: a string leaving the node either
/// forward or backward along its parameterization.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Branch {
    pub string: StrId,
    pub walk_index: usize,
    pub dir: Dir,
}

impl Branch {
    pub fn new(string: &str, walk_index: usize, dir: Dir) -> Self {
        Branch { string: string.to_string(), walk_index, dir }
    }
}

/// A contact node with its counterclockwise cyclic rotation of branches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub id: NodeId,
    pub rotation: Vec<Branch>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndKind {
    Free,
    AtNode,
}

/// The ordered sequence of nodes along one string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringWalk {
    pub string: StrId,
    pub nodes: Vec<NodeId>,
    pub start: EndKind,
    pub end: EndKind,
}

/// Combinatorial arrangement: nodes with rotations plus one walk per string.
/// `outer` optionally designates the unbounded face by witness branches (one
/// per face-tracing orbit belonging to it); empty means unknown.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Arrangement {
    pub nodes: BTreeMap<NodeId, Node>,
    pub walks: BTreeMap<StrId, StringWalk>,
    pub outer: Vec<Branch>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrError {
    #[error("unknown node {0}")]
    UnknownNode(String),
    #[error("walk {0} references missing node {1}")]
    DanglingNode(String, String),
    #[error("rotation of {node} references invalid branch {branch:?}")]
    BadBranch { node: String, branch: Branch },
    #[error("branch {0:?} appears {1} times across rotations, expected exactly once")]
    BranchMultiplicity(Branch, usize),
    #[error("walk {0} visits node {1} twice")]
    RepeatedNode(String, String),
    #[error("walk {0} has no nodes but an at-node end")]
    EmptyWalkAtNode(String),
    #[error("walk {0} is a single node with both ends at it")]
    PointString(String),
    #[error("node {0} has fewer than two strings")]
    TooFewStrings(String),
    #[error("arrangement is not embeddable in the plane (genus > 0)")]
    NotGenusZero,
}

/// Node kind per the peak/flat classification, extended with `Mixed` for
/// general touching systems where several strings pass through one point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Peak,
    Flat,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeClass {
    pub multiplicity: usize,
    pub kind: NodeKind,
    /// For flat nodes: whether all ending strings attach on one side of the
    /// through string. `None` for peaks and mixed nodes.
    pub one_sided: Option<bool>,
}

/// Census of a system: counts n, k, mu, c, the peak/flat vectors and the
/// classification flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemProfile {
    pub n: usize,
    pub k: usize,
    pub mu: usize,
    pub c: usize,
    pub free_ends: usize,
    /// p[i] = number of peaks of multiplicity i (populated for contact systems).
    pub p: BTreeMap<usize, usize>,
    /// f[i] = number of flat points of multiplicity i.
    pub f: BTreeMap<usize, usize>,
    pub is_contact_system: bool,
    pub is_one_sided: bool,
    pub is_1_intersecting: bool,
    pub is_two_touching: bool,
}

/// The plane graph whose vertices are contact points and whose edges are
/// string pieces between consecutive contact points.
#[derive(Debug, Clone)]
pub struct PlaneContactGraph {
    pub vertices: Vec<NodeId>,
    /// Edge multiset; one entry per consecutive node pair along some walk.
    pub edges: Vec<(NodeId, NodeId)>,
    /// Peaks incident to the unbounded face, when it is designated.
    pub outer_face_peaks: Option<BTreeSet<NodeId>>,
}

impl Arrangement {
    pub fn node(&self, id: &str) -> Option<&Node> {
        self.nodes.get(id)
    }

    pub fn walk(&self, s: &str) -> Option<&StringWalk> {
        self.walks.get(s)
    }

    /// Branches a walk is expected to contribute at walk position `i`.
    fn expected_dirs(walk: &StringWalk, i: usize) -> Vec<Dir> {
        let last = walk.nodes.len() - 1;
        let mut dirs = Vec::new();
        if i > 0 || walk.start == EndKind::Free {
            dirs.push(Dir::Backward);
        }
        if i < last || walk.end == EndKind::Free {
            dirs.push(Dir::Forward);
        }
        dirs
    }

    /// Whether `b` is the single branch of a string ending at the node
    /// (serialized with the `e` tag).
    pub fn is_end_branch(&self, b: &Branch) -> bool {
        match self.walks.get(&b.string) {
            None => false,
            Some(w) => {
                (b.walk_index == 0 && b.dir == Dir::Forward && w.start == EndKind::AtNode)
                    || (b.walk_index + 1 == w.nodes.len()
                        && b.dir == Dir::Backward
                        && w.end == EndKind::AtNode)
            }
        }
    }

    /// Structural validation: walk/rotation cross-consistency, branch
    /// multiplicities, and the genus-0 (planarity) invariant.
    pub fn validate(&self) -> Result<(), ArrError> {
        for (id, w) in &self.walks {
            let mut seen = BTreeSet::new();
            for n in &w.nodes {
                if !self.nodes.contains_key(n) {
                    return Err(ArrError::DanglingNode(id.clone(), n.clone()));
                }
                if !seen.insert(n.clone()) {
                    return Err(ArrError::RepeatedNode(id.clone(), n.clone()));
                }
            }
            if w.nodes.is_empty() && (w.start == EndKind::AtNode || w.end == EndKind::AtNode) {
                return Err(ArrError::EmptyWalkAtNode(id.clone()));
            }
            if w.nodes.len() == 1 && w.start == EndKind::AtNode && w.end == EndKind::AtNode {
                return Err(ArrError::PointString(id.clone()));
            }
        }
        // Every expected branch appears exactly once, at the right node.
        let mut expected: BTreeMap<Branch, NodeId> = BTreeMap::new();
        for (id, w) in &self.walks {
            for (i, n) in w.nodes.iter().enumerate() {
                for d in Self::expected_dirs(w, i) {
                    expected.insert(Branch::new(id, i, d), n.clone());
                }
            }
        }
        let mut seen: BTreeMap<Branch, usize> = BTreeMap::new();
        for node in self.nodes.values() {
            let mut strings = BTreeSet::new();
            for b in &node.rotation {
                strings.insert(b.string.clone());
                match expected.get(b) {
                    Some(n) if *n == node.id => {}
                    _ => {
                        return Err(ArrError::BadBranch { node: node.id.clone(), branch: b.clone() })
                    }
                }
                *seen.entry(b.clone()).or_insert(0) += 1;
            }
            if strings.len() < 2 {
                return Err(ArrError::TooFewStrings(node.id.clone()));
            }
        }
        for b in expected.keys() {
            if seen.get(b) != Some(&1) {
                return Err(ArrError::BranchMultiplicity(
                    b.clone(),
                    seen.get(b).copied().unwrap_or(0),
                ));
            }
        }
        for (b, n) in &seen {
            if *n != 1 || !expected.contains_key(b) {
                return Err(ArrError::BranchMultiplicity(b.clone(), *n));
            }
        }
        for b in &self.outer {
            if seen.get(b) != Some(&1) {
                return Err(ArrError::BadBranch { node: "outer".into(), branch: b.clone() });
            }
        }
        let faces = Faces::build(self);
        if !faces.genus_zero() {
            return Err(ArrError::NotGenusZero);
        }
        Ok(())
    }

    /// Strings present at a node, with their branch count (1 = ends here,
    /// 2 = passes through).
    pub fn strings_at(&self, node: &Node) -> BTreeMap<StrId, usize> {
        let mut m = BTreeMap::new();
        for b in &node.rotation {
            *m.entry(b.string.clone()).or_insert(0) += 1;
        }
        m
    }

    /// Classifies one node as peak / flat / mixed, with one-sidedness for
    /// flats.
    pub fn classify_node(&self, id: &str) -> Result<NodeClass, ArrError> {
        let node = self.node(id).ok_or_else(|| ArrError::UnknownNode(id.to_string()))?;
        let strings = self.strings_at(node);
        let multiplicity = strings.len();
        let through: Vec<&StrId> = strings.iter().filter(|(_, c)| **c == 2).map(|(s, _)| s).collect();
        let kind = match through.len() {
            0 => NodeKind::Peak,
            1 => NodeKind::Flat,
            _ => NodeKind::Mixed,
        };
        let one_sided = if kind == NodeKind::Flat {
            let s = through[0];
            let pos: Vec<usize> = node
                .rotation
                .iter()
                .enumerate()
                .filter(|(_, b)| b.string == **s)
                .map(|(i, _)| i)
                .collect();
            // Branches strictly between the through string's two branches,
            // in cyclic order.
            let (a, b) = (pos[0], pos[1]);
            let len = node.rotation.len();
            let inside = (a + 1..b).len();
            let outside = len - 2 - inside;
            Some(inside == 0 || outside == 0)
        } else {
            None
        };
        Ok(NodeClass { multiplicity, kind, one_sided })
    }

    /// All crossing witnesses: pairs of strings whose branch pairs alternate
    /// cyclically around a common node. Empty for touching systems.
    pub fn find_crossings(&self) -> Vec<(StrId, StrId, NodeId)> {
        let mut out = Vec::new();
        for node in self.nodes.values() {
            let strings = self.strings_at(node);
            let through: Vec<&StrId> =
                strings.iter().filter(|(_, c)| **c == 2).map(|(s, _)| s).collect();
            for i in 0..through.len() {
                for j in i + 1..through.len() {
                    let (s, t) = (through[i], through[j]);
                    let sp: Vec<usize> = node
                        .rotation
                        .iter()
                        .enumerate()
                        .filter(|(_, b)| b.string == **s)
                        .map(|(x, _)| x)
                        .collect();
                    let between = node.rotation[sp[0] + 1..sp[1]]
                        .iter()
                        .filter(|b| b.string == **t)
                        .count();
                    if between == 1 {
                        out.push((s.to_string(), t.to_string(), node.id.clone()));
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Number of shared nodes for every intersecting string pair.
    pub fn pair_counts(&self) -> BTreeMap<(StrId, StrId), usize> {
        let mut m = BTreeMap::new();
        for node in self.nodes.values() {
            let strings: Vec<StrId> = self.strings_at(node).into_keys().collect();
            for i in 0..strings.len() {
                for j in i + 1..strings.len() {
                    let key = (strings[i].clone(), strings[j].clone());
                    *m.entry(key).or_insert(0) += 1;
                }
            }
        }
        m
    }

    /// Exact census of the arrangement.
    pub fn profile(&self) -> SystemProfile {
        let n = self.walks.len();
        let c = self.nodes.len();
        let mut k = 0;
        let mut free_ends = 0;
        for w in self.walks.values() {
            if w.start == EndKind::Free {
                free_ends += 1;
            }
            if w.end == EndKind::Free {
                free_ends += 1;
            }
        }
        let mut p = BTreeMap::new();
        let mut f = BTreeMap::new();
        let mut contact = true;
        let mut one_sided = true;
        let mut classes = Vec::new();
        for id in self.nodes.keys() {
            let cls = self.classify_node(id).expect("node exists");
            k = k.max(cls.multiplicity);
            classes.push(cls);
        }
        for cls in &classes {
            match cls.kind {
                NodeKind::Peak => *p.entry(cls.multiplicity).or_insert(0) += 1,
                NodeKind::Flat => {
                    *f.entry(cls.multiplicity).or_insert(0) += 1;
                    if cls.one_sided != Some(true) {
                        one_sided = false;
                    }
                }
                NodeKind::Mixed => contact = false,
            }
        }
        if !contact {
            p.clear();
            f.clear();
        }
        let mu = self.pair_counts().into_values().max().unwrap_or(0);
        SystemProfile {
            n,
            k,
            mu,
            c,
            free_ends,
            p,
            f,
            is_contact_system: contact,
            is_one_sided: contact && one_sided,
            is_1_intersecting: mu <= 1,
            is_two_touching: k <= 2,
        }
    }

    /// The plane graph of contact points of a contact system.
    pub fn contact_plane_graph(&self) -> Result<PlaneContactGraph, NotAContactSystem> {
        let profile = self.profile();
        if !profile.is_contact_system {
            return Err(NotAContactSystem);
        }
        let vertices: Vec<NodeId> = self.nodes.keys().cloned().collect();
        let mut edges = Vec::new();
        for w in self.walks.values() {
            for pair in w.nodes.windows(2) {
                let (a, b) = (pair[0].clone(), pair[1].clone());
                if a <= b {
                    edges.push((a, b));
                } else {
                    edges.push((b, a));
                }
            }
        }
        edges.sort();
        if profile.is_1_intersecting {
            // Parallel edges would mean two strings sharing two points.
            assert!(
                edges.windows(2).all(|w| w[0] != w[1]),
                "parallel edge in 1-intersecting contact plane graph"
            );
        }
        let outer_face_peaks = if self.outer.is_empty() {
            None
        } else {
            let faces = Faces::build(self);
            let outer_orbits: BTreeSet<usize> =
                self.outer.iter().filter_map(|b| faces.orbit_of_branch(self, b)).collect();
            let mut peaks = BTreeSet::new();
            for id in self.nodes.keys() {
                let cls = self.classify_node(id).expect("node exists");
                if cls.kind == NodeKind::Peak
                    && faces
                        .orbits_at_node(self, id)
                        .iter()
                        .any(|o| outer_orbits.contains(o))
                {
                    peaks.insert(id.clone());
                }
            }
            Some(peaks)
        };
        Ok(PlaneContactGraph { vertices, edges, outer_face_peaks })
    }

    /// Degree-sum identity of the contact plane graph:
    /// 2|E| = sum i*p_i + sum (i+1)*f_i, valid when every end is at a node
    /// and every string has at least two nodes.
    pub fn plane_graph_degree_identity(&self) -> Option<bool> {
        let profile = self.profile();
        if !profile.is_contact_system
            || profile.free_ends != 0
            || self.walks.values().any(|w| w.nodes.len() < 2)
        {
            return None;
        }
        let g = self.contact_plane_graph().ok()?;
        let lhs = 2 * g.edges.len();
        let rhs: usize = profile.p.iter().map(|(i, c)| i * c).sum::<usize>()
            + profile.f.iter().map(|(i, c)| (i + 1) * c).sum::<usize>();
        Some(lhs == rhs)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("not a contact system")]
pub struct NotAContactSystem;

/// Convenience: exact rational from usize counts.
pub(crate) fn ratu(n: usize) -> Rational {
    crate::rational::rat(n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two segments touching at one node where both end: the minimal peak.
    fn two_segment_peak() -> Arrangement {
        let mut arr = Arrangement::default();
        arr.nodes.insert(
            "n0".into(),
            Node {
                id: "n0".into(),
                rotation: vec![Branch::new("a", 0, Dir::Forward), Branch::new("b", 0, Dir::Forward)],
            },
        );
        arr.walks.insert(
            "a".into(),
            StringWalk {
                string: "a".into(),
                nodes: vec!["n0".into()],
                start: EndKind::AtNode,
                end: EndKind::Free,
            },
        );
        arr.walks.insert(
            "b".into(),
            StringWalk {
                string: "b".into(),
                nodes: vec!["n0".into()],
                start: EndKind::AtNode,
                end: EndKind::Free,
            },
        );
        arr
    }

    /// One node where s1 passes through and s2, s3 end, with the given
    /// placement of the ends relative to s1's branches.
    fn flat_triple(one_sided: bool) -> Arrangement {
        let mut arr = Arrangement::default();
        let rotation = if one_sided {
            vec![
                Branch::new("s1", 0, Dir::Forward),
                Branch::new("s2", 0, Dir::Forward),
                Branch::new("s3", 0, Dir::Forward),
                Branch::new("s1", 0, Dir::Backward),
            ]
        } else {
            vec![
                Branch::new("s1", 0, Dir::Forward),
                Branch::new("s2", 0, Dir::Forward),
                Branch::new("s1", 0, Dir::Backward),
                Branch::new("s3", 0, Dir::Forward),
            ]
        };
        arr.nodes.insert("x".into(), Node { id: "x".into(), rotation });
        arr.walks.insert(
            "s1".into(),
            StringWalk {
                string: "s1".into(),
                nodes: vec!["x".into()],
                start: EndKind::Free,
                end: EndKind::Free,
            },
        );
        for s in ["s2", "s3"] {
            arr.walks.insert(
                s.into(),
                StringWalk {
                    string: s.into(),
                    nodes: vec!["x".into()],
                    start: EndKind::AtNode,
                    end: EndKind::Free,
                },
            );
        }
        arr
    }

    #[test]
    fn classify_flat_one_sided() {
        let arr = flat_triple(true);
        arr.validate().unwrap();
        let cls = arr.classify_node("x").unwrap();
        assert_eq!(cls.kind, NodeKind::Flat);
        assert_eq!(cls.multiplicity, 3);
        assert_eq!(cls.one_sided, Some(true));
    }

    #[test]
    fn classify_flat_two_sided() {
        let arr = flat_triple(false);
        arr.validate().unwrap();
        let cls = arr.classify_node("x").unwrap();
        assert_eq!(cls.kind, NodeKind::Flat);
        assert_eq!(cls.one_sided, Some(false));
    }

    #[test]
    fn classify_peak() {
        let mut arr = two_segment_peak();
        // add a third ending string
        arr.walks.insert(
            "c".into(),
            StringWalk {
                string: "c".into(),
                nodes: vec!["n0".into()],
                start: EndKind::AtNode,
                end: EndKind::Free,
            },
        );
        arr.nodes.get_mut("n0").unwrap().rotation.push(Branch::new("c", 0, Dir::Forward));
        arr.validate().unwrap();
        let cls = arr.classify_node("n0").unwrap();
        assert_eq!(cls.kind, NodeKind::Peak);
        assert_eq!(cls.multiplicity, 3);
        assert_eq!(cls.one_sided, None);
    }

    #[test]
    fn crossing_detected_by_alternation() {
        let mut arr = Arrangement::default();
        arr.nodes.insert(
            "x".into(),
            Node {
                id: "x".into(),
                rotation: vec![
                    Branch::new("s", 0, Dir::Forward),
                    Branch::new("t", 0, Dir::Forward),
                    Branch::new("s", 0, Dir::Backward),
                    Branch::new("t", 0, Dir::Backward),
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
        // Alternating rotation: one crossing. (This arrangement is still a
        // valid rotation system; crossings are a property, not an error.)
        let crossings = arr.find_crossings();
        assert_eq!(crossings.len(), 1);
        assert_eq!(crossings[0].2, "x");
    }

    #[test]
    fn nesting_is_not_a_crossing() {
        let arr = flat_triple(true);
        assert!(arr.find_crossings().is_empty());
        // two through strings, nested
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
        arr.validate().unwrap();
        assert!(arr.find_crossings().is_empty());
    }

    #[test]
    fn empty_profile() {
        let arr = Arrangement::default();
        arr.validate().unwrap();
        let p = arr.profile();
        assert_eq!(p.n, 0);
        assert_eq!(p.c, 0);
        assert_eq!(p.k, 0);
    }

    #[test]
    fn peak_profile_counts() {
        let arr = two_segment_peak();
        arr.validate().unwrap();
        let p = arr.profile();
        assert_eq!(p.n, 2);
        assert_eq!(p.c, 1);
        assert_eq!(p.k, 2);
        assert_eq!(p.mu, 1);
        assert_eq!(p.free_ends, 2);
        assert!(p.is_contact_system);
        assert_eq!(p.p.get(&2), Some(&1));
    }

    #[test]
    fn validation_rejects_bad_branch_multiplicity() {
        let mut arr = two_segment_peak();
        arr.nodes.get_mut("n0").unwrap().rotation.push(Branch::new("a", 0, Dir::Forward));
        assert!(matches!(arr.validate(), Err(ArrError::BranchMultiplicity(_, 2))));
    }
}
