//! Exact rational plane geometry: points, segment intersection, polyline
//! validation, prolongation of free ends, and compilation of a geometric
//! system into its combinatorial arrangement.

mod compile;

pub use compile::{compile_system, CompileError};

use crate::rational::{rat, Rational};
use num::traits::Zero;
use std::cmp::Ordering;
use thiserror::Error;

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }
}

/// Integer-coordinate point.
pub fn pt(x: i64, y: i64) -> Point {
    Point::new(rat(x), rat(y))
}

pub(crate) type Vec2 = (Rational, Rational);

pub(crate) fn sub(p: &Point, q: &Point) -> Vec2 {
    (&p.x - &q.x, &p.y - &q.y)
}

pub(crate) fn cross(u: &Vec2, v: &Vec2) -> Rational {
    &u.0 * &v.1 - &u.1 * &v.0
}

pub(crate) fn dot(u: &Vec2, v: &Vec2) -> Rational {
    &u.0 * &v.0 + &u.1 * &v.1
}

pub(crate) fn neg(u: &Vec2) -> Vec2 {
    (-u.0.clone(), -u.1.clone())
}

/// Counterclockwise angle class from the positive x axis:
/// 0 = east, 1 = open upper half plane, 2 = west, 3 = open lower half plane.
pub(crate) fn angle_class(v: &Vec2) -> u8 {
    if v.1.is_zero() {
        if v.0 > Rational::zero() {
            0
        } else {
            2
        }
    } else if v.1 > Rational::zero() {
        1
    } else {
        3
    }
}

/// Exact counterclockwise comparison of nonzero direction vectors measured
/// from the positive x axis. Equal iff the directions coincide.
pub(crate) fn ccw_cmp(a: &Vec2, b: &Vec2) -> Ordering {
    let (ca, cb) = (angle_class(a), angle_class(b));
    if ca != cb {
        return ca.cmp(&cb);
    }
    // Same class: cross > 0 means a is counterclockwise-before b.
    let cr = cross(a, b);
    if cr > Rational::zero() {
        Ordering::Less
    } else if cr < Rational::zero() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// On which part of a segment an intersection point lies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Locus {
    Interior,
    Endpoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegIntersection {
    Empty,
    Point { p: Point, locus_a: Locus, locus_b: Locus },
    /// Collinear segments sharing a positive-length span.
    Overlap,
}

fn locus_on(p: &Point, a: &Point, b: &Point) -> Locus {
    if p == a || p == b {
        Locus::Endpoint
    } else {
        Locus::Interior
    }
}

/// Exact intersection of two segments with distinct endpoints.
pub fn seg_intersect(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> SegIntersection {
    let d1 = sub(a2, a1);
    let d2 = sub(b2, b1);
    let denom = cross(&d1, &d2);
    let offset = sub(b1, a1);
    if denom.is_zero() {
        if !cross(&offset, &d1).is_zero() {
            return SegIntersection::Empty;
        }
        // Collinear: compare parameter spans along d1.
        let len2 = dot(&d1, &d1);
        let t1 = dot(&offset, &d1) / &len2;
        let t2 = dot(&sub(b2, a1), &d1) / &len2;
        let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        let lo = lo.max(Rational::zero());
        let hi = hi.min(rat(1));
        match lo.cmp(&hi) {
            Ordering::Greater => SegIntersection::Empty,
            Ordering::Less => SegIntersection::Overlap,
            Ordering::Equal => {
                let p = Point::new(&a1.x + &lo * &d1.0, &a1.y + &lo * &d1.1);
                SegIntersection::Point {
                    locus_a: locus_on(&p, a1, a2),
                    locus_b: locus_on(&p, b1, b2),
                    p,
                }
            }
        }
    } else {
        let t = cross(&offset, &d2) / &denom;
        let u = cross(&offset, &d1) / &denom;
        let zero = Rational::zero();
        let one = rat(1);
        if t < zero || t > one || u < zero || u > one {
            return SegIntersection::Empty;
        }
        let p = Point::new(&a1.x + &t * &d1.0, &a1.y + &t * &d1.1);
        SegIntersection::Point {
            locus_a: locus_on(&p, a1, a2),
            locus_b: locus_on(&p, b1, b2),
            p,
        }
    }
}

/// A simple polygonal curve with exact rational vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolylineString {
    pub name: String,
    pub vertices: Vec<Point>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StringError {
    #[error("string needs at least two vertices")]
    TooFewVertices,
    #[error("degenerate edge at index {0}")]
    DegenerateEdge(usize),
    #[error("self-intersecting: segments {0} and {1}")]
    SelfIntersecting(usize, usize),
}

impl PolylineString {
    pub fn new(name: &str, vertices: Vec<Point>) -> Self {
        PolylineString { name: name.to_string(), vertices }
    }

    pub fn segments(&self) -> impl Iterator<Item = (&Point, &Point)> {
        self.vertices.windows(2).map(|w| (&w[0], &w[1]))
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Accepts iff consecutive vertices are distinct and the polyline is
    /// simple (checked exhaustively over segment pairs).
    pub fn validate(&self) -> Result<(), StringError> {
        if self.vertices.len() < 2 {
            return Err(StringError::TooFewVertices);
        }
        for (i, w) in self.vertices.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(StringError::DegenerateEdge(i));
            }
        }
        let segs: Vec<(&Point, &Point)> = self.segments().collect();
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                let r = seg_intersect(segs[i].0, segs[i].1, segs[j].0, segs[j].1);
                if j == i + 1 {
                    // Adjacent segments must meet exactly at the shared vertex.
                    match r {
                        SegIntersection::Point { ref p, .. } if p == segs[j].0 => {}
                        _ => return Err(StringError::SelfIntersecting(i, j)),
                    }
                } else if r != SegIntersection::Empty {
                    return Err(StringError::SelfIntersecting(i, j));
                }
            }
        }
        Ok(())
    }

    /// Exact parameter of `p` on this polyline (segment index plus fraction),
    /// or None if the point is not on the curve.
    pub fn locate(&self, p: &Point) -> Option<Rational> {
        for (i, (a, b)) in self.segments().enumerate() {
            let d = sub(b, a);
            let ap = sub(p, a);
            if !cross(&d, &ap).is_zero() {
                continue;
            }
            let t = dot(&ap, &d) / dot(&d, &d);
            if t >= Rational::zero() && t <= rat(1) {
                return Some(rat(i as i64) + t);
            }
        }
        None
    }

    /// Point at an exact parameter value.
    pub fn eval(&self, param: &Rational) -> Point {
        let nsegs = rat(self.segment_count() as i64);
        assert!(*param >= Rational::zero() && *param <= nsegs);
        let i = if *param == nsegs {
            self.segment_count() - 1
        } else {
            param.floor().to_integer().try_into().unwrap()
        };
        let t = param - rat(i as i64);
        let a = &self.vertices[i];
        let b = &self.vertices[i + 1];
        let d = sub(b, a);
        Point::new(&a.x + &t * &d.0, &a.y + &t * &d.1)
    }

    /// Direction of the curve leaving `param` toward larger parameters, if any.
    pub(crate) fn forward_dir(&self, param: &Rational) -> Option<Vec2> {
        let nsegs = rat(self.segment_count() as i64);
        if *param >= nsegs {
            return None;
        }
        let i: usize = param.floor().to_integer().try_into().unwrap();
        Some(sub(&self.vertices[i + 1], &self.vertices[i]))
    }

    /// Direction leaving `param` toward smaller parameters, if any.
    pub(crate) fn backward_dir(&self, param: &Rational) -> Option<Vec2> {
        if *param <= Rational::zero() {
            return None;
        }
        let i: usize = if param.is_integer() {
            let j: usize = param.to_integer().try_into().unwrap();
            j - 1
        } else {
            param.floor().to_integer().try_into().unwrap()
        };
        Some(neg(&sub(&self.vertices[i + 1], &self.vertices[i])))
    }
}

/// A named family of strings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeometricSystem {
    pub strings: Vec<PolylineString>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SystemError {
    #[error("duplicate string name {0}")]
    DuplicateName(String),
    #[error("string {0}: {1}")]
    InvalidString(String, StringError),
    #[error("strings {0} and {1} overlap along a segment")]
    OverlapDetected(String, String),
}

impl GeometricSystem {
    pub fn new(strings: Vec<PolylineString>) -> Self {
        GeometricSystem { strings }
    }

    pub fn string(&self, name: &str) -> Option<&PolylineString> {
        self.strings.iter().find(|s| s.name == name)
    }

    pub fn validate(&self) -> Result<(), SystemError> {
        let mut names = std::collections::BTreeSet::new();
        for s in &self.strings {
            if !names.insert(s.name.clone()) {
                return Err(SystemError::DuplicateName(s.name.clone()));
            }
            s.validate().map_err(|e| SystemError::InvalidString(s.name.clone(), e))?;
        }
        for i in 0..self.strings.len() {
            for j in i + 1..self.strings.len() {
                let (a, b) = (&self.strings[i], &self.strings[j]);
                for (a1, a2) in a.segments() {
                    for (b1, b2) in b.segments() {
                        if seg_intersect(a1, a2, b1, b2) == SegIntersection::Overlap {
                            return Err(SystemError::OverlapDetected(
                                a.name.clone(),
                                b.name.clone(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether the given endpoint lies on no other string.
    pub fn is_free_end(&self, name: &str, end: WhichEnd) -> Option<bool> {
        let s = self.string(name)?;
        let p = match end {
            WhichEnd::Start => s.vertices.first()?,
            WhichEnd::End => s.vertices.last()?,
        };
        Some(self.strings.iter().filter(|t| t.name != name).all(|t| t.locate(p).is_none()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhichEnd {
    Start,
    End,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtendError {
    #[error("unknown string {0}")]
    UnknownString(String),
    #[error("the chosen end is not a free end")]
    NotAFreeEnd,
    #[error("the prolongation ray escapes all strings")]
    NoHit,
    #[error("the prolongation hits the string itself first")]
    Blocked,
}

/// First hit of the ray p + t*dir (t > 0) against a segment, as the smallest
/// positive t such that the ray point lies on [a, b]. Collinear segments
/// ahead of the ray report their nearest endpoint.
fn ray_segment_hit(p: &Point, dir: &Vec2, a: &Point, b: &Point) -> Option<Rational> {
    let s = sub(b, a);
    let denom = cross(dir, &s);
    let offset = sub(a, p);
    let zero = Rational::zero();
    if denom.is_zero() {
        if !cross(&offset, dir).is_zero() {
            return None;
        }
        let len2 = dot(dir, dir);
        let ta = dot(&offset, dir) / &len2;
        let tb = dot(&sub(b, p), dir) / &len2;
        let lo = ta.clone().min(tb.clone());
        let hi = ta.max(tb);
        if hi <= zero {
            return None;
        }
        // p itself is never on another string here (free end), so lo > 0.
        Some(if lo > zero { lo } else { hi })
    } else {
        let t = cross(&offset, &s) / &denom;
        let u = cross(&offset, dir) / &denom;
        if t > zero && u >= zero && u <= rat(1) {
            Some(t)
        } else {
            None
        }
    }
}

/// Prolongs the chosen free end along its last segment's direction until the
/// first exact hit on another string, per the prolongation device used to
/// push peaks to the outer face.
pub fn extend_to_contact(
    g: &GeometricSystem,
    name: &str,
    end: WhichEnd,
) -> Result<GeometricSystem, ExtendError> {
    let s = g.string(name).ok_or_else(|| ExtendError::UnknownString(name.to_string()))?;
    if g.is_free_end(name, end) != Some(true) {
        return Err(ExtendError::NotAFreeEnd);
    }
    let n = s.vertices.len();
    let (tip, dir) = match end {
        WhichEnd::End => (&s.vertices[n - 1], sub(&s.vertices[n - 1], &s.vertices[n - 2])),
        WhichEnd::Start => (&s.vertices[0], sub(&s.vertices[0], &s.vertices[1])),
    };
    let mut best: Option<Rational> = None;
    for t in &g.strings {
        if t.name == name {
            continue;
        }
        for (a, b) in t.segments() {
            if let Some(hit) = ray_segment_hit(tip, &dir, a, b) {
                if best.as_ref().map_or(true, |cur| hit < *cur) {
                    best = Some(hit);
                }
            }
        }
    }
    let best = best.ok_or(ExtendError::NoHit)?;
    // The extension must reach the hit before re-meeting its own string.
    for (a, b) in s.segments() {
        if let Some(own) = ray_segment_hit(tip, &dir, a, b) {
            if own <= best {
                return Err(ExtendError::Blocked);
            }
        }
    }
    let hit_point = Point::new(&tip.x + &best * &dir.0, &tip.y + &best * &dir.1);
    let mut out = g.clone();
    let sm = out.strings.iter_mut().find(|t| t.name == name).expect("exists");
    match end {
        WhichEnd::End => *sm.vertices.last_mut().unwrap() = hit_point,
        WhichEnd::Start => sm.vertices[0] = hit_point,
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratq;

    #[test]
    fn crossing_segments_meet_at_interior_point() {
        let r = seg_intersect(&pt(0, 0), &pt(2, 2), &pt(0, 2), &pt(2, 0));
        match r {
            SegIntersection::Point { p, locus_a, locus_b } => {
                assert_eq!(p, pt(1, 1));
                assert_eq!(locus_a, Locus::Interior);
                assert_eq!(locus_b, Locus::Interior);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn shared_endpoint_is_endpoint_endpoint() {
        let r = seg_intersect(&pt(0, 0), &pt(1, 0), &pt(1, 0), &pt(2, 1));
        match r {
            SegIntersection::Point { p, locus_a, locus_b } => {
                assert_eq!(p, pt(1, 0));
                assert_eq!(locus_a, Locus::Endpoint);
                assert_eq!(locus_b, Locus::Endpoint);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn collinear_shared_span_is_overlap() {
        let r = seg_intersect(&pt(0, 0), &pt(2, 0), &pt(1, 0), &pt(3, 0));
        assert_eq!(r, SegIntersection::Overlap);
        // Collinear but disjoint: empty. Touching end to end: a point.
        assert_eq!(seg_intersect(&pt(0, 0), &pt(1, 0), &pt(2, 0), &pt(3, 0)), SegIntersection::Empty);
        match seg_intersect(&pt(0, 0), &pt(1, 0), &pt(1, 0), &pt(3, 0)) {
            SegIntersection::Point { p, .. } => assert_eq!(p, pt(1, 0)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn seg_intersect_is_symmetric() {
        let (a1, a2, b1, b2) = (pt(0, 0), pt(3, 1), pt(1, 2), pt(2, -2));
        let r1 = seg_intersect(&a1, &a2, &b1, &b2);
        let r2 = seg_intersect(&b1, &b2, &a1, &a2);
        match (r1, r2) {
            (
                SegIntersection::Point { p: p1, locus_a: la1, locus_b: lb1 },
                SegIntersection::Point { p: p2, locus_a: la2, locus_b: lb2 },
            ) => {
                assert_eq!(p1, p2);
                assert_eq!(la1, lb2);
                assert_eq!(lb1, la2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn validate_string_examples() {
        let ok = PolylineString::new("a", vec![pt(0, 0), pt(2, 0), pt(2, 2)]);
        assert_eq!(ok.validate(), Ok(()));

        let selfx = PolylineString::new("b", vec![pt(0, 0), pt(2, 0), pt(2, 2), pt(1, -1)]);
        assert!(matches!(selfx.validate(), Err(StringError::SelfIntersecting(_, _))));

        let degen = PolylineString::new("c", vec![pt(0, 0), pt(0, 0), pt(1, 1)]);
        assert_eq!(degen.validate(), Err(StringError::DegenerateEdge(0)));

        // Doubling back over the previous segment overlaps it.
        let back = PolylineString::new("d", vec![pt(0, 0), pt(2, 0), pt(1, 0)]);
        assert!(matches!(back.validate(), Err(StringError::SelfIntersecting(0, 1))));
    }

    #[test]
    fn locate_and_eval() {
        let s = PolylineString::new("a", vec![pt(0, 0), pt(2, 0), pt(2, 2)]);
        assert_eq!(s.locate(&pt(1, 0)), Some(ratq(1, 2)));
        assert_eq!(s.locate(&pt(2, 0)), Some(rat(1)));
        assert_eq!(s.locate(&pt(2, 2)), Some(rat(2)));
        assert_eq!(s.locate(&pt(5, 5)), None);
        assert_eq!(s.eval(&ratq(3, 2)), pt(2, 1));
    }

    #[test]
    fn extend_straight_hit() {
        let g = GeometricSystem::new(vec![
            PolylineString::new("a", vec![pt(0, 0), pt(1, 0)]),
            PolylineString::new("wall", vec![pt(2, -1), pt(2, 1)]),
        ]);
        let out = extend_to_contact(&g, "a", WhichEnd::End).unwrap();
        assert_eq!(out.string("a").unwrap().vertices, vec![pt(0, 0), pt(2, 0)]);
    }

    #[test]
    fn extend_no_hit() {
        let g = GeometricSystem::new(vec![
            PolylineString::new("a", vec![pt(0, 0), pt(1, 0)]),
            PolylineString::new("b", vec![pt(-5, -1), pt(-5, 1)]),
        ]);
        assert_eq!(extend_to_contact(&g, "a", WhichEnd::End), Err(ExtendError::NoHit));
    }

    #[test]
    fn extend_requires_free_end() {
        let g = GeometricSystem::new(vec![
            PolylineString::new("a", vec![pt(0, 0), pt(2, 0)]),
            PolylineString::new("b", vec![pt(2, 0), pt(3, 1)]),
        ]);
        assert_eq!(extend_to_contact(&g, "a", WhichEnd::End), Err(ExtendError::NotAFreeEnd));
    }
}
