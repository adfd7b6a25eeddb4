//! The seven-string figure: a 3-touching, 1-intersecting, pairwise
//! intersecting system. Seven triple nodes covering all 21 pairs force the
//! Fano incidence structure, so the realization is found by exhaustive
//! search over walk middles and non-crossing rotations, Euler-tested for
//! genus 0, and persisted as a golden file.

use crate::arrangement::{Arrangement, Branch, Dir, EndKind, Node, StringWalk};

/// Fano line i = {i, i+1, i+3} (mod 7); strings are points, nodes are lines.
fn fano_nodes_of_string(j: usize) -> [usize; 3] {
    let mut v = [j, (j + 6) % 7, (j + 4) % 7];
    v.sort_unstable();
    v
}

/// The golden realization found by `search_fano_realization`.
pub fn fano_realization() -> Arrangement {
    let text = include_str!("../../golden/fig5a.arr");
    crate::io::parse_arr(text).expect("golden fig5a file parses")
}

/// One string's walk for a chosen middle node: the other two incident nodes
/// in index order around the middle.
fn walk_of(j: usize, middle: usize) -> [usize; 3] {
    let nodes = fano_nodes_of_string(j);
    let rest: Vec<usize> = nodes.iter().copied().filter(|&n| n != middle).collect();
    [rest[0], middle, rest[1]]
}

/// Branch = (string, walk position); encoded per node during the search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct SBranch {
    string: usize,
    pos: usize, // 0, 1, 2 along the walk
    forward: bool,
}

/// Exhaustive search for a planar (genus-0) rotation system realizing the
/// Fano contact pattern with every string end at a node. Returns the first
/// realization in a deterministic enumeration, or None if none exists
/// (free-end tails never affect realizability, so this decides the
/// question).
pub fn search_fano_realization() -> Option<Arrangement> {
    // By flag-transitivity of the Fano automorphisms, string 0's middle can
    // be fixed to its smallest incident node.
    let mut middles = [0usize; 7];
    let choices: Vec<[usize; 3]> = (0..7).map(fano_nodes_of_string).collect();
    let mut counter = [0usize; 7];
    loop {
        for j in 0..7 {
            middles[j] = choices[j][counter[j]];
        }
        if let Some(arr) = try_middles(&middles) {
            return Some(arr);
        }
        // next counter; string 0 fixed at its first choice
        let mut idx = 1;
        loop {
            if idx == 7 {
                return None;
            }
            counter[idx] += 1;
            if counter[idx] == 3 {
                counter[idx] = 0;
                idx += 1;
            } else {
                break;
            }
        }
    }
}

fn try_middles(middles: &[usize; 7]) -> Option<Arrangement> {
    let walks: Vec<[usize; 3]> = (0..7).map(|j| walk_of(j, middles[j])).collect();

    // Quick planarity prefilter on the simple hop graph.
    let names: Vec<String> = (0..7).map(|i| format!("n{i}")).collect();
    let mut hop = crate::graphs::SimpleGraph::new(names.clone());
    for w in &walks {
        hop.add_edge(&names[w[0]], &names[w[1]]);
        hop.add_edge(&names[w[1]], &names[w[2]]);
    }
    if !crate::graphs::is_planar(&hop) {
        return None;
    }

    // Branches per node. Dart encoding: string j has edges 2j (walk 0-1)
    // and 2j+1 (walk 1-2); dart id = 4j + edge_local*2 + direction.
    let mut node_branches: Vec<Vec<SBranch>> = vec![Vec::new(); 7];
    for j in 0..7 {
        for (pos, &node) in walks[j].iter().enumerate() {
            match pos {
                0 => node_branches[node].push(SBranch { string: j, pos, forward: true }),
                2 => node_branches[node].push(SBranch { string: j, pos, forward: false }),
                _ => {
                    node_branches[node].push(SBranch { string: j, pos, forward: true });
                    node_branches[node].push(SBranch { string: j, pos, forward: false });
                }
            }
        }
    }

    // dart id of a branch: the dart leaving the node along it
    let dart_of = |b: &SBranch| -> usize {
        match (b.pos, b.forward) {
            (0, true) => 4 * b.string,          // edge (0,1) forward
            (1, true) => 4 * b.string + 2,      // edge (1,2) forward
            (1, false) => 4 * b.string + 1,     // edge (0,1) backward
            (2, false) => 4 * b.string + 3,     // edge (1,2) backward
            _ => unreachable!("ends are at nodes"),
        }
    };

    // All valid cyclic rotations per node: first branch fixed, through-pairs
    // must not alternate.
    let rotations: Vec<Vec<Vec<SBranch>>> = (0..7)
        .map(|i| {
            let br = &node_branches[i];
            let mut out = Vec::new();
            let mut rest: Vec<usize> = (1..br.len()).collect();
            permute(&mut rest, 0, &mut |perm| {
                let mut rot = vec![br[0]];
                rot.extend(perm.iter().map(|&x| br[x]));
                if non_crossing(&rot) {
                    out.push(rot);
                }
            });
            out
        })
        .collect();

    // Backtracking over nodes with an Euler check at the leaves.
    let mut sigma_next = [usize::MAX; 28];
    fn rec(
        rotations: &[Vec<Vec<SBranch>>],
        dart_of: &dyn Fn(&SBranch) -> usize,
        sigma_next: &mut [usize; 28],
        node: usize,
    ) -> Option<Vec<usize>> {
        if node == 7 {
            return if euler_ok(sigma_next) { Some(Vec::new()) } else { None };
        }
        for (ri, rot) in rotations[node].iter().enumerate() {
            let darts: Vec<usize> = rot.iter().map(|b| dart_of(b)).collect();
            for (i, &d) in darts.iter().enumerate() {
                sigma_next[d] = darts[(i + 1) % darts.len()];
            }
            if let Some(mut rest) = rec(rotations, dart_of, sigma_next, node + 1) {
                rest.insert(0, ri);
                return Some(rest);
            }
        }
        None
    }
    let chosen = rec(&rotations, &dart_of, &mut sigma_next, 0)?;

    // Assemble the arrangement from the chosen rotations.
    let mut arr = Arrangement::default();
    for j in 0..7 {
        arr.walks.insert(
            format!("s{j}"),
            StringWalk {
                string: format!("s{j}"),
                nodes: walks[j].iter().map(|&n| format!("n{n}")).collect(),
                start: EndKind::AtNode,
                end: EndKind::AtNode,
            },
        );
    }
    for i in 0..7 {
        let rot = &rotations[i][chosen[i]];
        let rotation: Vec<Branch> = rot
            .iter()
            .map(|b| {
                Branch::new(
                    &format!("s{}", b.string),
                    b.pos,
                    if b.forward { Dir::Forward } else { Dir::Backward },
                )
            })
            .collect();
        arr.nodes.insert(format!("n{i}"), Node { id: format!("n{i}"), rotation });
    }
    arr.validate().ok()?;
    Some(arr)
}

/// Through-string pairs must not alternate around the node.
fn non_crossing(rot: &[SBranch]) -> bool {
    let mut seen: Vec<usize> = Vec::new();
    for b in rot {
        if rot.iter().filter(|c| c.string == b.string).count() == 2 {
            if !seen.contains(&b.string) {
                seen.push(b.string);
            }
        }
    }
    for &s in &seen {
        let pos: Vec<usize> =
            rot.iter().enumerate().filter(|(_, b)| b.string == s).map(|(i, _)| i).collect();
        for &t in &seen {
            if t <= s {
                continue;
            }
            let between = rot[pos[0] + 1..pos[1]].iter().filter(|b| b.string == t).count();
            if between == 1 {
                return false;
            }
        }
    }
    true
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// V - E + F = 2 check on the fixed 7-node, 14-edge structure: exactly 9
/// face orbits of sigma(alpha(d)).
fn euler_ok(sigma_next: &[usize; 28]) -> bool {
    let alpha = |d: usize| d ^ 1;
    let mut seen = [false; 28];
    let mut orbits = 0;
    for start in 0..28 {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = sigma_next[alpha(d)];
        }
    }
    orbits == 9
}
