//! Intersection graphs of arrangements, degeneracy orderings, greedy and
//! exact coloring, and combinatorial planarity testing.

use crate::arrangement::Arrangement;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Simple undirected graph over string identifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: Vec<String>,
    index: BTreeMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(mut vertices: Vec<String>) -> Self {
        vertices.sort();
        vertices.dedup();
        let index = vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let adj = vec![BTreeSet::new(); vertices.len()];
        SimpleGraph { vertices, index, adj }
    }

    pub fn complete(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| format!("v{i:02}")).collect();
        let mut g = SimpleGraph::new(names.clone());
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(&names[i], &names[j]);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| format!("v{i:02}")).collect();
        let mut g = SimpleGraph::new(names.clone());
        for i in 0..n {
            g.add_edge(&names[i], &names[(i + 1) % n]);
        }
        g
    }

    pub fn add_edge(&mut self, u: &str, v: &str) {
        if u == v {
            return;
        }
        let (i, j) = (self.index[u], self.index[v]);
        self.adj[i].insert(j);
        self.adj[j].insert(i);
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index.get(u), self.index.get(v)) {
            (Some(&i), Some(&j)) => self.adj[i].contains(&j),
            _ => false,
        }
    }

    pub fn degree(&self, v: &str) -> usize {
        self.adj[self.index[v]].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(|a| a.len()).min()
    }

    pub fn edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (i, a) in self.adj.iter().enumerate() {
            for &j in a {
                if i < j {
                    out.push((self.vertices[i].clone(), self.vertices[j].clone()));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * (n - 1) / 2
    }
}

/// Multigraph with one edge per shared contact point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    pub vertices: Vec<String>,
    /// multiplicity of each unordered pair
    pub edges: BTreeMap<(String, String), usize>,
}

impl MultiGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }
}

/// Edge uv iff strings u and v share at least one node.
pub fn intersection_graph(arr: &Arrangement) -> SimpleGraph {
    let mut g = SimpleGraph::new(arr.walks.keys().cloned().collect());
    for ((u, v), _) in arr.pair_counts() {
        g.add_edge(&u, &v);
    }
    g
}

/// Pair multiplicity equals the shared-node count; the total edge count is
/// sum over nodes of C(d(c), 2).
pub fn string_multigraph(arr: &Arrangement) -> MultiGraph {
    MultiGraph { vertices: arr.walks.keys().cloned().collect(), edges: arr.pair_counts() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyReport {
    pub order: Vec<String>,
    pub degeneracy: usize,
}

/// Repeated minimum-degree removal, ties broken by lexicographically
/// smallest vertex name; the largest degree seen at removal time is the
/// exact degeneracy.
pub fn degeneracy_order(g: &SimpleGraph) -> DegeneracyReport {
    let n = g.vertex_count();
    let mut removed = vec![false; n];
    let mut deg: Vec<usize> = (0..n).map(|i| g.adj[i].len()).collect();
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&i| !removed[i])
            .min_by_key(|&i| (deg[i], g.vertices[i].clone()))
            .expect("vertices remain");
        degeneracy = degeneracy.max(deg[v]);
        removed[v] = true;
        order.push(g.vertices[v].clone());
        for &w in &g.adj[v] {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    DegeneracyReport { order, degeneracy }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: BTreeMap<String, usize>,
    pub colors_used: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &SimpleGraph) -> bool {
        g.edges().iter().all(|(u, v)| self.assignment[u] != self.assignment[v])
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("order is not a permutation of the vertex set")]
pub struct BadOrder;

/// Greedy coloring along a peeling order: vertices are colored in reverse of
/// `order` with the smallest positive integer unused by already-colored
/// neighbors. On a degeneracy order this uses at most degeneracy+1 colors.
pub fn greedy_color(g: &SimpleGraph, order: &[String]) -> Result<Coloring, BadOrder> {
    let as_set: BTreeSet<&String> = order.iter().collect();
    if order.len() != g.vertex_count() || as_set.len() != g.vertex_count() {
        return Err(BadOrder);
    }
    if !g.vertices().iter().all(|v| as_set.contains(v)) {
        return Err(BadOrder);
    }
    let mut assignment: BTreeMap<String, usize> = BTreeMap::new();
    for v in order.iter().rev() {
        let vi = g.index[v];
        let used: BTreeSet<usize> = g.adj[vi]
            .iter()
            .filter_map(|&w| assignment.get(&g.vertices[w]).copied())
            .collect();
        let mut c = 1;
        while used.contains(&c) {
            c += 1;
        }
        assignment.insert(v.clone(), c);
    }
    let colors_used = assignment.values().collect::<BTreeSet<_>>().len();
    Ok(Coloring { assignment, colors_used })
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("graph exceeds the exact-chromatic vertex cap")]
pub struct TooLarge;

/// Greedy clique built from each vertex in descending-degree order.
fn greedy_clique(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    let mut best = usize::from(n > 0);
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&i| (std::cmp::Reverse(g.adj[i].len()), i));
    for &seed in &by_degree {
        let mut clique = vec![seed];
        for &v in &by_degree {
            if v != seed && clique.iter().all(|&c| g.adj[c].contains(&v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn colorable_with(g: &SimpleGraph, k: usize) -> bool {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(g.adj[i].len()), i));
    let mut color = vec![usize::MAX; n];
    fn rec(g: &SimpleGraph, order: &[usize], color: &mut [usize], pos: usize, k: usize, used: usize) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        let cap = k.min(used + 1);
        for c in 0..cap {
            if g.adj[v].iter().all(|&w| color[w] != c) {
                color[v] = c;
                if rec(g, order, color, pos + 1, k, used.max(c + 1)) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    rec(g, &order, &mut color, 0, k, 0)
}

/// Exact chromatic number by branch and bound, seeded with a greedy clique
/// lower bound and the degeneracy greedy upper bound. The shortcut when the
/// two meet makes cliques instant.
pub fn chromatic_exact(g: &SimpleGraph, cap: usize) -> Result<usize, TooLarge> {
    if g.vertex_count() > cap {
        return Err(TooLarge);
    }
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    let lower = greedy_clique(g);
    let order = degeneracy_order(g);
    let upper = greedy_color(g, &order.order).expect("order is a permutation").colors_used;
    if lower == upper {
        return Ok(lower);
    }
    for k in lower..upper {
        if colorable_with(g, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Exact combinatorial planarity decision (left-right criterion),
/// independent of any embedding.
pub fn is_planar(g: &SimpleGraph) -> bool {
    lr::is_planar(g)
}

/// Left-right planarity test (de Fraysseix / Rosenstiehl criterion, in the
/// formulation of Brandes). Decision only, no embedding output.
mod lr {
    use super::SimpleGraph;
    use std::collections::BTreeMap;

    // Edges are ordered pairs after orientation; NONE marks "no edge".
    type Edge = (usize, usize);
    const NONE: usize = usize::MAX;

    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    struct Interval {
        low: Option<Edge>,
        high: Option<Edge>,
    }

    impl Interval {
        const EMPTY: Interval = Interval { low: None, high: None };
        fn is_empty(&self) -> bool {
            self.low.is_none() && self.high.is_none()
        }
    }

    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    struct ConflictPair {
        l: Interval,
        r: Interval,
    }

    impl ConflictPair {
        fn swap(&mut self) {
            std::mem::swap(&mut self.l, &mut self.r);
        }
    }

    struct Lr {
        adj: Vec<Vec<usize>>,
        height: Vec<usize>,
        parent_edge: Vec<Option<Edge>>,
        oriented: BTreeMap<Edge, bool>,
        lowpt: BTreeMap<Edge, usize>,
        lowpt2: BTreeMap<Edge, usize>,
        nesting_depth: BTreeMap<Edge, i64>,
        ordered_adj: Vec<Vec<usize>>,
        refer: BTreeMap<Edge, Option<Edge>>,
        lowpt_edge: BTreeMap<Edge, Edge>,
        stack: Vec<ConflictPair>,
        stack_bottom: BTreeMap<Edge, usize>,
    }

    pub fn is_planar(g: &SimpleGraph) -> bool {
        let n = g.vertex_count();
        if n <= 4 {
            return n < 3 || g.edge_count() <= 3 * n - 6;
        }
        if g.edge_count() > 3 * n - 6 {
            return false;
        }
        let adj: Vec<Vec<usize>> = (0..n).map(|i| g.adj[i].iter().copied().collect()).collect();
        let mut lr = Lr {
            adj,
            height: vec![NONE, NONE].into_iter().cycle().take(n).collect(),
            parent_edge: vec![None; n],
            oriented: BTreeMap::new(),
            lowpt: BTreeMap::new(),
            lowpt2: BTreeMap::new(),
            nesting_depth: BTreeMap::new(),
            ordered_adj: vec![Vec::new(); n],
            refer: BTreeMap::new(),
            lowpt_edge: BTreeMap::new(),
            stack: Vec::new(),
            stack_bottom: BTreeMap::new(),
        };
        for v in 0..n {
            if lr.height[v] == NONE {
                lr.height[v] = 0;
                lr.dfs_orient(v);
            }
        }
        for v in 0..n {
            let mut order = lr.adj[v].clone();
            order.retain(|&w| lr.oriented.get(&(v, w)) == Some(&true));
            order.sort_by_key(|&w| lr.nesting_depth[&(v, w)]);
            lr.ordered_adj[v] = order;
        }
        let roots: Vec<usize> = (0..n).filter(|&v| lr.parent_edge[v].is_none()).collect();
        for v in roots {
            if !lr.dfs_test(v) {
                return false;
            }
        }
        true
    }

    impl Lr {
        fn dfs_orient(&mut self, root: usize) {
            let mut stack = vec![(root, 0usize)];
            while let Some((v, mut i)) = stack.pop() {
                let mut descended = false;
                while i < self.adj[v].len() {
                    let w = self.adj[v][i];
                    i += 1;
                    if self.oriented.contains_key(&(v, w)) || self.oriented.contains_key(&(w, v)) {
                        continue;
                    }
                    let e = (v, w);
                    self.oriented.insert(e, true);
                    self.oriented.insert((w, v), false);
                    self.lowpt.insert(e, self.height[v]);
                    self.lowpt2.insert(e, self.height[v]);
                    if self.height[w] == NONE {
                        // tree edge
                        self.parent_edge[w] = Some(e);
                        self.height[w] = self.height[v] + 1;
                        stack.push((v, i));
                        stack.push((w, 0));
                        descended = true;
                        break;
                    } else {
                        // back edge
                        self.lowpt.insert(e, self.height[w]);
                        self.finish_edge(v, e);
                    }
                }
                if descended {
                    continue;
                }
                // all edges of v processed: finish the parent edge
                if let Some(pe) = self.parent_edge[v] {
                    self.finish_edge(pe.0, pe);
                }
            }
        }

        fn finish_edge(&mut self, v: usize, e: Edge) {
            // nesting depth
            let mut nd = 2 * self.lowpt[&e] as i64;
            if self.lowpt2[&e] < self.height[v] {
                nd += 1;
            }
            self.nesting_depth.insert(e, nd);
            // update lowpoints of the parent edge of v
            if let Some(pe) = self.parent_edge[v] {
                if self.lowpt[&e] < self.lowpt[&pe] {
                    let m = self.lowpt[&pe].min(self.lowpt2[&e]);
                    self.lowpt2.insert(pe, m);
                    self.lowpt.insert(pe, self.lowpt[&e]);
                } else if self.lowpt[&e] > self.lowpt[&pe] {
                    let m = self.lowpt2[&pe].min(self.lowpt[&e]);
                    self.lowpt2.insert(pe, m);
                } else {
                    let m = self.lowpt2[&pe].min(self.lowpt2[&e]);
                    self.lowpt2.insert(pe, m);
                }
            }
        }

        fn lowest(&self, p: &ConflictPair) -> usize {
            match (p.l.low, p.r.low) {
                (None, Some(r)) => self.lowpt[&r],
                (Some(l), None) => self.lowpt[&l],
                (Some(l), Some(r)) => self.lowpt[&l].min(self.lowpt[&r]),
                (None, None) => usize::MAX,
            }
        }

        fn conflicting(&self, i: &Interval, b: Edge) -> bool {
            match i.high {
                None => false,
                Some(h) => self.lowpt[&h] > self.lowpt[&b],
            }
        }

        fn dfs_test(&mut self, root: usize) -> bool {
            // Recursive formulation; depth is bounded by the vertex count.
            self.dfs_test_rec(root)
        }

        fn dfs_test_rec(&mut self, v: usize) -> bool {
            let e = self.parent_edge[v];
            let order = self.ordered_adj[v].clone();
            for (idx, &w) in order.iter().enumerate() {
                let ei = (v, w);
                self.stack_bottom.insert(ei, self.stack.len());
                if Some(ei) == self.parent_edge[w] {
                    if !self.dfs_test_rec(w) {
                        return false;
                    }
                } else {
                    self.lowpt_edge.insert(ei, ei);
                    self.stack.push(ConflictPair {
                        l: Interval::EMPTY,
                        r: Interval { low: Some(ei), high: Some(ei) },
                    });
                }
                if self.lowpt[&ei] < self.height[v] {
                    // ei has a return edge
                    if idx == 0 {
                        if let Some(pe) = e {
                            let le = self.lowpt_edge[&ei];
                            self.lowpt_edge.insert(pe, le);
                        }
                    } else if !self.add_constraints(ei, e.expect("non-first child has parent")) {
                        return false;
                    }
                }
            }
            if let Some(pe) = e {
                let u = pe.0;
                self.trim_back_edges(u);
                // side of pe is the side of a highest return edge (not needed
                // for the decision beyond ref bookkeeping)
                if self.lowpt[&pe] < self.height[u] {
                    if let Some(top) = self.stack.last() {
                        let hl = top.l.high;
                        let hr = top.r.high;
                        let refer = match (hl, hr) {
                            (Some(l), Some(r)) => {
                                if self.lowpt[&l] > self.lowpt[&r] {
                                    Some(l)
                                } else {
                                    Some(r)
                                }
                            }
                            (Some(l), None) => Some(l),
                            (None, r) => r,
                        };
                        self.refer.insert(pe, refer);
                    }
                }
            }
            true
        }

        fn add_constraints(&mut self, ei: Edge, e: Edge) -> bool {
            let mut p = ConflictPair { l: Interval::EMPTY, r: Interval::EMPTY };
            // merge return edges of ei into p.r
            loop {
                let mut q = self.stack.pop().expect("stack holds ei's pairs");
                if !q.l.is_empty() {
                    q.swap();
                }
                if !q.l.is_empty() {
                    return false;
                }
                let q_r_low = q.r.low.expect("nonempty right interval");
                if self.lowpt[&q_r_low] > self.lowpt[&e] {
                    // merge intervals
                    match p.r.low {
                        None => p.r.high = q.r.high,
                        Some(prl) => {
                            self.refer.insert(prl, q.r.high);
                        }
                    }
                    p.r.low = q.r.low;
                } else {
                    // align
                    self.refer.insert(q_r_low, Some(self.lowpt_edge[&e]));
                }
                if self.stack.len() == self.stack_bottom[&ei] {
                    break;
                }
            }
            // merge conflicting return edges of previous children into p.l
            while {
                let top = self.stack.last().expect("stack nonempty while conflicts remain");
                self.conflicting(&top.l, ei) || self.conflicting(&top.r, ei)
            } {
                let mut q = self.stack.pop().expect("checked nonempty");
                if self.conflicting(&q.r, ei) {
                    q.swap();
                }
                if self.conflicting(&q.r, ei) {
                    return false;
                }
                // merge interval below lowpt(ei) into p.r
                if let Some(prl) = p.r.low {
                    self.refer.insert(prl, q.r.high);
                }
                if q.r.low.is_some() {
                    p.r.low = q.r.low;
                }
                match p.l.low {
                    None => p.l.high = q.l.high,
                    Some(pll) => {
                        self.refer.insert(pll, q.l.high);
                    }
                }
                p.l.low = q.l.low;
            }
            if !(p.l.is_empty() && p.r.is_empty()) {
                self.stack.push(p);
            }
            true
        }

        fn trim_back_edges(&mut self, u: usize) {
            // drop entire conflict pairs
            while let Some(top) = self.stack.last() {
                if self.lowest(top) == self.height[u] {
                    self.stack.pop();
                } else {
                    break;
                }
            }
            if let Some(mut p) = self.stack.pop() {
                // trim left interval
                while let Some(h) = p.l.high {
                    if h.1 == u {
                        p.l.high = self.refer.get(&h).copied().flatten();
                    } else {
                        break;
                    }
                }
                if p.l.high.is_none() && p.l.low.is_some() {
                    let low = p.l.low.take().expect("checked");
                    self.refer.insert(low, p.r.low);
                }
                // trim right interval
                while let Some(h) = p.r.high {
                    if h.1 == u {
                        p.r.high = self.refer.get(&h).copied().flatten();
                    } else {
                        break;
                    }
                }
                if p.r.high.is_none() && p.r.low.is_some() {
                    let low = p.r.low.take().expect("checked");
                    self.refer.insert(low, p.l.low);
                }
                if !(p.l.is_empty() && p.r.is_empty()) {
                    self.stack.push(p);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i:02}")).collect()
    }

    fn graph_from(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let names = named(n);
        let mut g = SimpleGraph::new(names.clone());
        for &(u, v) in edges {
            g.add_edge(&names[u], &names[v]);
        }
        g
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy_order(&SimpleGraph::complete(4)).degeneracy, 3);
        let path = graph_from(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(degeneracy_order(&path).degeneracy, 1);
        assert_eq!(degeneracy_order(&SimpleGraph::complete(9)).degeneracy, 8);
        assert_eq!(degeneracy_order(&SimpleGraph::new(vec![])).degeneracy, 0);
    }

    #[test]
    fn greedy_color_on_cliques_and_trees() {
        let k5 = SimpleGraph::complete(5);
        let c = greedy_color(&k5, k5.vertices()).unwrap();
        assert_eq!(c.colors_used, 5);
        assert!(c.is_proper(&k5));

        let tree = graph_from(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]);
        let order = degeneracy_order(&tree);
        let c = greedy_color(&tree, &order.order).unwrap();
        assert!(c.colors_used <= 2);
        assert!(c.is_proper(&tree));
    }

    #[test]
    fn greedy_color_rejects_bad_order() {
        let g = SimpleGraph::complete(3);
        assert_eq!(greedy_color(&g, &[]), Err(BadOrder));
        let mut order = g.vertices().to_vec();
        order[0] = order[1].clone();
        assert_eq!(greedy_color(&g, &order), Err(BadOrder));
    }

    #[test]
    fn greedy_respects_degeneracy_bound() {
        // random-ish sparse graph: greedy on the degeneracy order uses at
        // most degeneracy + 1 colors
        let g = graph_from(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6)],
        );
        let r = degeneracy_order(&g);
        let c = greedy_color(&g, &r.order).unwrap();
        assert!(c.colors_used <= r.degeneracy + 1);
        assert!(c.is_proper(&g));
    }

    #[test]
    fn chromatic_small_cases() {
        assert_eq!(chromatic_exact(&SimpleGraph::cycle(5), 24), Ok(3));
        assert_eq!(chromatic_exact(&SimpleGraph::cycle(6), 24), Ok(2));
        assert_eq!(chromatic_exact(&SimpleGraph::complete(7), 24), Ok(7));
        let petersen = graph_from(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        );
        assert_eq!(chromatic_exact(&petersen, 24), Ok(3));
        assert_eq!(chromatic_exact(&SimpleGraph::complete(25), 24), Err(TooLarge));
        // clique shortcut: K18 resolves without search
        assert_eq!(chromatic_exact(&SimpleGraph::complete(18), 24), Ok(18));
    }

    /// Brute force: try all assignments with at most k colors.
    fn brute_chromatic(g: &SimpleGraph) -> usize {
        let n = g.vertex_count();
        if n == 0 {
            return 0;
        }
        'k: for k in 1..=n {
            let mut colors = vec![0usize; n];
            loop {
                let proper = (0..n).all(|i| {
                    g.adj[i].iter().all(|&j| colors[i] != colors[j])
                });
                if proper {
                    return k;
                }
                // increment base-k counter
                let mut pos = 0;
                loop {
                    if pos == n {
                        continue 'k;
                    }
                    colors[pos] += 1;
                    if colors[pos] == k {
                        colors[pos] = 0;
                        pos += 1;
                    } else {
                        break;
                    }
                }
            }
        }
        n
    }

    #[test]
    fn chromatic_matches_brute_force_up_to_8_vertices() {
        let cases = vec![
            graph_from(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]),
            graph_from(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3), (1, 4)]),
            SimpleGraph::cycle(7),
            graph_from(8, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (5, 6), (6, 7), (7, 4), (3, 4)]),
            SimpleGraph::new(vec![]),
        ];
        for g in cases {
            assert_eq!(chromatic_exact(&g, 24).unwrap(), brute_chromatic(&g), "graph {:?}", g.edges());
        }
    }

    #[test]
    fn planarity_small_classics() {
        assert!(is_planar(&SimpleGraph::complete(4)));
        assert!(!is_planar(&SimpleGraph::complete(5)));
        let k33 = graph_from(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        assert!(!is_planar(&k33));
    }

    #[test]
    fn planarity_more_cases() {
        // octahedron K2,2,2 is planar
        let oct = graph_from(
            6,
            &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        );
        assert!(is_planar(&oct));
        // Petersen graph is not planar
        let petersen = graph_from(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        );
        assert!(!is_planar(&petersen));
        // the square of C7 contains a K3,3 subdivision
        let c7sq = graph_from(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 0), (6, 1)],
        );
        assert!(!is_planar(&c7sq));
        // grid 4x4 planar
        let mut edges = Vec::new();
        for r in 0..4usize {
            for c in 0..4usize {
                let i = 4 * r + c;
                if c + 1 < 4 {
                    edges.push((i, i + 1));
                }
                if r + 1 < 4 {
                    edges.push((i, i + 4));
                }
            }
        }
        assert!(is_planar(&graph_from(16, &edges)));
        // disconnected: planar + planar
        let two_triangles = graph_from(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(is_planar(&two_triangles));
        // disconnected with one non-planar part
        let mut edges = vec![(5, 6), (6, 7), (7, 5)];
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((i, j));
            }
        }
        assert!(!is_planar(&graph_from(8, &edges)));
        // wheel W6 planar
        let wheel = graph_from(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]);
        assert!(is_planar(&wheel));
        // maximal planar graph on 6 vertices plus one edge is non-planar
        let mut oct_plus = graph_from(
            6,
            &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        );
        oct_plus.add_edge("v00", "v01");
        assert!(!is_planar(&oct_plus));
    }
}
