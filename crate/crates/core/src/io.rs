//! Text formats for geometric and combinatorial systems, canonical
//! serialization, graph/coloring export, and SVG rendering.
//!
//! Strings file: lines `string <name> <x1> <y1> <x2> <y2> ...` with integer
//! or `p/q` coordinates; `#` comments and blank lines ignored.
//!
//! Arrangement file: `node <id>`, `walk <name> <tok>...` (tok is a node id
//! or `end` for a free end), `rot <id> <branch>...` with branch
//! `<name>@<walkIndex><+|-|e>` in counterclockwise order, and optional
//! `outer <branch>` lines designating the unbounded face.

use crate::arrangement::{Arrangement, Branch, Dir, EndKind, Node, StringWalk};
use crate::geometry::{GeometricSystem, Point, PolylineString, SegIntersection};
use crate::graphs::{Coloring, SimpleGraph};
use crate::rational::{format_rational, parse_rational, Rational};
use num::ToPrimitive;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, col {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: {msg}")]
    Semantic { line: usize, msg: String },
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, col, msg: msg.into() }
}

fn semantic(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Semantic { line, msg: msg.into() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Strings,
    Arr,
}

/// Guesses the format from the first directive line.
pub fn sniff_kind(text: &str) -> FileKind {
    for line in text.lines() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if t.starts_with("string ") {
            return FileKind::Strings;
        }
        return FileKind::Arr;
    }
    FileKind::Strings
}

fn effective_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a strings file into a geometric system.
pub fn parse_strings(text: &str) -> Result<GeometricSystem, ParseError> {
    let mut strings = Vec::new();
    for (ln, line) in effective_lines(text) {
        let mut tok = line.split_whitespace();
        let head = tok.next().expect("nonempty");
        if head != "string" {
            return Err(syntax(ln, 1, format!("expected `string`, found `{head}`")));
        }
        let name = tok.next().ok_or_else(|| syntax(ln, 8, "missing string name"))?;
        let coords: Vec<&str> = tok.collect();
        if coords.len() < 4 || coords.len() % 2 != 0 {
            return Err(syntax(ln, line.len(), "need an even number (>= 4) of coordinates"));
        }
        let mut vertices = Vec::new();
        for pair in coords.chunks(2) {
            let x = parse_rational(pair[0])
                .ok_or_else(|| syntax(ln, 1, format!("bad coordinate `{}`", pair[0])))?;
            let y = parse_rational(pair[1])
                .ok_or_else(|| syntax(ln, 1, format!("bad coordinate `{}`", pair[1])))?;
            vertices.push(Point::new(x, y));
        }
        strings.push(PolylineString::new(name, vertices));
    }
    Ok(GeometricSystem::new(strings))
}

/// Canonical text form of a geometric system: strings sorted by name,
/// rationals as `p/q` with the denominator omitted when 1.
pub fn serialize_strings(g: &GeometricSystem) -> String {
    let mut strings: Vec<&PolylineString> = g.strings.iter().collect();
    strings.sort_by(|a, b| a.name.cmp(&b.name));
    let mut out = String::from("# strings\n");
    for s in strings {
        write!(out, "string {}", s.name).unwrap();
        for v in &s.vertices {
            write!(out, " {} {}", format_rational(&v.x), format_rational(&v.y)).unwrap();
        }
        out.push('\n');
    }
    out
}

fn branch_token(arr: &Arrangement, b: &Branch) -> String {
    let tag = if arr.is_end_branch(b) {
        'e'
    } else {
        match b.dir {
            Dir::Forward => '+',
            Dir::Backward => '-',
        }
    };
    format!("{}@{}{}", b.string, b.walk_index, tag)
}

fn parse_branch(
    tok: &str,
    ln: usize,
    walks: &BTreeMap<String, StringWalk>,
) -> Result<Branch, ParseError> {
    let (name, rest) = tok
        .rsplit_once('@')
        .ok_or_else(|| semantic(ln, format!("branch `{tok}` missing `@`")))?;
    if rest.len() < 2 {
        return Err(semantic(ln, format!("branch `{tok}` missing index or tag")));
    }
    let (idx_str, tag) = rest.split_at(rest.len() - 1);
    let walk_index: usize =
        idx_str.parse().map_err(|_| semantic(ln, format!("bad walk index in `{tok}`")))?;
    let w = walks
        .get(name)
        .ok_or_else(|| semantic(ln, format!("branch `{tok}` references unknown walk `{name}`")))?;
    if walk_index >= w.nodes.len() {
        return Err(semantic(ln, format!("branch `{tok}` index out of range")));
    }
    let dir = match tag {
        "+" => Dir::Forward,
        "-" => Dir::Backward,
        "e" => {
            if walk_index == 0 && w.start == EndKind::AtNode {
                Dir::Forward
            } else if walk_index + 1 == w.nodes.len() && w.end == EndKind::AtNode {
                Dir::Backward
            } else {
                return Err(semantic(ln, format!("branch `{tok}`: `e` at a non-end position")));
            }
        }
        _ => return Err(semantic(ln, format!("branch `{tok}`: bad tag `{tag}`"))),
    };
    Ok(Branch::new(name, walk_index, dir))
}

/// Parses an arrangement file.
pub fn parse_arr(text: &str) -> Result<Arrangement, ParseError> {
    let mut arr = Arrangement::default();
    let mut rot_lines: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut outer_lines: Vec<(usize, String)> = Vec::new();
    for (ln, line) in effective_lines(text) {
        let mut tok = line.split_whitespace();
        match tok.next().expect("nonempty") {
            "node" => {
                let id = tok.next().ok_or_else(|| syntax(ln, 6, "missing node id"))?;
                arr.nodes
                    .insert(id.to_string(), Node { id: id.to_string(), rotation: Vec::new() });
            }
            "walk" => {
                let name = tok.next().ok_or_else(|| syntax(ln, 6, "missing walk name"))?;
                let toks: Vec<&str> = tok.collect();
                if toks.is_empty() {
                    return Err(syntax(ln, line.len(), "walk needs at least one token"));
                }
                let start =
                    if toks.first() == Some(&"end") { EndKind::Free } else { EndKind::AtNode };
                let end = if toks.len() > 1 && toks.last() == Some(&"end") {
                    EndKind::Free
                } else {
                    EndKind::AtNode
                };
                let mut nodes = Vec::new();
                for (i, t) in toks.iter().enumerate() {
                    if *t == "end" {
                        if !(i == 0 || i == toks.len() - 1) {
                            return Err(semantic(ln, "`end` only allowed at walk extremities"));
                        }
                    } else {
                        nodes.push(t.to_string());
                    }
                }
                arr.walks.insert(
                    name.to_string(),
                    StringWalk { string: name.to_string(), nodes, start, end },
                );
            }
            "rot" => {
                let id = tok.next().ok_or_else(|| syntax(ln, 5, "missing node id"))?;
                rot_lines.push((ln, id.to_string(), tok.map(|s| s.to_string()).collect()));
            }
            "outer" => {
                let b = tok.next().ok_or_else(|| syntax(ln, 7, "missing branch token"))?;
                outer_lines.push((ln, b.to_string()));
            }
            other => return Err(syntax(ln, 1, format!("unknown directive `{other}`"))),
        }
    }
    for (ln, id, toks) in rot_lines {
        if !arr.nodes.contains_key(&id) {
            return Err(semantic(ln, format!("rot references unknown node `{id}`")));
        }
        let mut rotation = Vec::new();
        for t in &toks {
            rotation.push(parse_branch(t, ln, &arr.walks)?);
        }
        arr.nodes.get_mut(&id).expect("checked").rotation = rotation;
    }
    for (ln, tok) in outer_lines {
        arr.outer.push(parse_branch(&tok, ln, &arr.walks)?);
    }
    for (name, w) in &arr.walks {
        for n in &w.nodes {
            if !arr.nodes.contains_key(n) {
                return Err(semantic(0, format!("walk `{name}` references unknown node `{n}`")));
            }
        }
    }
    Ok(arr)
}

/// Canonical text form: walks sorted by name, nodes by id, each rotation
/// anchored at its smallest branch token.
pub fn serialize_arr(arr: &Arrangement) -> String {
    let mut out = String::from("# arrangement\n");
    for id in arr.nodes.keys() {
        writeln!(out, "node {id}").unwrap();
    }
    for (name, w) in &arr.walks {
        write!(out, "walk {name}").unwrap();
        if w.start == EndKind::Free {
            out.push_str(" end");
        }
        for n in &w.nodes {
            write!(out, " {n}").unwrap();
        }
        if w.end == EndKind::Free {
            out.push_str(" end");
        }
        out.push('\n');
    }
    for (id, node) in &arr.nodes {
        let tokens: Vec<String> = node.rotation.iter().map(|b| branch_token(arr, b)).collect();
        let anchor = tokens
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.cmp(b))
            .map(|(i, _)| i)
            .unwrap_or(0);
        write!(out, "rot {id}").unwrap();
        for i in 0..tokens.len() {
            write!(out, " {}", tokens[(anchor + i) % tokens.len()]).unwrap();
        }
        out.push('\n');
    }
    let mut outer: Vec<String> = arr.outer.iter().map(|b| branch_token(arr, b)).collect();
    outer.sort();
    for b in outer {
        writeln!(out, "outer {b}").unwrap();
    }
    out
}

/// Graph export: `p edge <n> <m>` header then one `e <u> <v>` line per edge.
pub fn serialize_graph(g: &SimpleGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// Coloring export: one `c <vertex> <color>` line per vertex.
pub fn serialize_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, col) in &c.assignment {
        writeln!(out, "c {v} {col}").unwrap();
    }
    out
}

fn fl(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

fn hue(i: usize) -> usize {
    (i * 137) % 360
}

/// Exact positions of all contact nodes of a geometric system, in the
/// canonical (x, y) node order used by compilation.
pub fn node_points(g: &GeometricSystem) -> Vec<(Point, usize)> {
    let mut by_point: BTreeMap<Point, std::collections::BTreeSet<String>> = BTreeMap::new();
    for i in 0..g.strings.len() {
        for j in i + 1..g.strings.len() {
            for (a1, a2) in g.strings[i].segments() {
                for (b1, b2) in g.strings[j].segments() {
                    if let SegIntersection::Point { p, .. } =
                        crate::geometry::seg_intersect(a1, a2, b1, b2)
                    {
                        let e = by_point.entry(p).or_default();
                        e.insert(g.strings[i].name.clone());
                        e.insert(g.strings[j].name.clone());
                    }
                }
            }
        }
    }
    by_point.into_iter().map(|(p, s)| (p, s.len())).collect()
}

/// Renders a geometric system as SVG: strings as polylines with distinct
/// hues, nodes as circles scaled by multiplicity. Deterministic; this is
/// the only place floating point appears.
pub fn render_svg(g: &GeometricSystem) -> String {
    let mut min_x = f64::INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for s in &g.strings {
        for v in &s.vertices {
            min_x = min_x.min(fl(&v.x));
            max_x = max_x.max(fl(&v.x));
            min_y = min_y.min(fl(&v.y));
            max_y = max_y.max(fl(&v.y));
        }
    }
    if g.strings.is_empty() {
        (min_x, min_y, max_x, max_y) = (0.0, 0.0, 1.0, 1.0);
    }
    let pad = 0.08 * ((max_x - min_x).max(max_y - min_y)).max(1.0);
    let scale = 100.0;
    let tx = |x: f64| (x - min_x + pad) * scale;
    // SVG y grows downward; flip so the output matches plane coordinates.
    let ty = |y: f64| (max_y + pad - y) * scale;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {:.6} {:.6}">"#,
        (max_x - min_x + 2.0 * pad) * scale,
        (max_y - min_y + 2.0 * pad) * scale
    )
    .unwrap();
    let mut strings: Vec<&PolylineString> = g.strings.iter().collect();
    strings.sort_by(|a, b| a.name.cmp(&b.name));
    for (i, s) in strings.iter().enumerate() {
        let pts: Vec<String> = s
            .vertices
            .iter()
            .map(|v| format!("{:.6},{:.6}", tx(fl(&v.x)), ty(fl(&v.y))))
            .collect();
        writeln!(
            out,
            r#"  <polyline points="{}" fill="none" stroke="hsl({},70%,45%)" stroke-width="2"><title>{}</title></polyline>"#,
            pts.join(" "),
            hue(i),
            s.name
        )
        .unwrap();
    }
    for (p, mult) in node_points(g) {
        writeln!(
            out,
            r#"  <circle cx="{:.6}" cy="{:.6}" r="{:.6}" fill="black"><title>x{}</title></circle>"#,
            tx(fl(&p.x)),
            ty(fl(&p.y)),
            2.0 + 1.5 * mult as f64,
            mult
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
