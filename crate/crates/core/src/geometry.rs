//! Rational plane geometry: exact distances, certified rational triangles
//! and their areas.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn origin() -> Self {
        Point2::new(Rational::zero(), Rational::zero())
    }

    /// Reflection across the line `y = x`.
    pub fn swapped(&self) -> Self {
        Point2::new(self.y.clone(), self.x.clone())
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub fn squared_distance(p: &Point2, r: &Point2) -> Rational {
    (&p.x - &r.x).square() + (&p.y - &r.y).square()
}

/// The exact distance between `p` and `r` when it is rational.
pub fn rational_distance(p: &Point2, r: &Point2) -> Option<Rational> {
    squared_distance(p, r).sqrt()
}

/// Twice the signed area of the triangle `abc`.
pub fn twice_signed_area(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    &a.x * (&b.y - &c.y) + &b.x * (&c.y - &a.y) + &c.x * (&a.y - &b.y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rejection {
    NotRational,
    Degenerate,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NotRational => f.write_str("a side length is irrational"),
            Rejection::Degenerate => f.write_str("vertices are collinear"),
        }
    }
}

/// A non-degenerate triangle whose three side lengths are rational.
///
/// Sides are stored, not recomputed: `sides()[0]` is `|v0 v1|`,
/// `sides()[1]` is `|v1 v2|` and `sides()[2]` is `|v2 v0|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    vertices: [Point2; 3],
    sides: [Rational; 3],
}

impl Triangle {
    pub fn vertices(&self) -> &[Point2; 3] {
        &self.vertices
    }

    pub fn sides(&self) -> &[Rational; 3] {
        &self.sides
    }

    pub fn perimeter(&self) -> Rational {
        self.sides.iter().cloned().sum()
    }

    pub fn is_isosceles(&self) -> bool {
        let [a, b, c] = &self.sides;
        a == b || b == c || c == a
    }

    pub fn is_right(&self) -> bool {
        let mut sq: Vec<Rational> = self.sides.iter().map(Rational::square).collect();
        sq.sort();
        &sq[0] + &sq[1] == sq[2]
    }
}

/// Certifies `a, b, c` as a rational triangle.
pub fn make_triangle(a: Point2, b: Point2, c: Point2) -> Result<Triangle, Rejection> {
    if twice_signed_area(&a, &b, &c).is_zero() {
        return Err(Rejection::Degenerate);
    }
    let s01 = rational_distance(&a, &b).ok_or(Rejection::NotRational)?;
    let s12 = rational_distance(&b, &c).ok_or(Rejection::NotRational)?;
    let s20 = rational_distance(&c, &a).ok_or(Rejection::NotRational)?;
    Ok(Triangle {
        vertices: [a, b, c],
        sides: [s01, s12, s20],
    })
}

/// Exact area from the coordinates. Heron's radicand `s(s-a)(s-b)(s-c)`
/// must equal the square of the result; that identity is asserted.
pub fn heron_area(t: &Triangle) -> Rational {
    let [a, b, c] = &t.vertices;
    let area = twice_signed_area(a, b, c).abs() / 2;
    let s = t.perimeter() / 2;
    let radicand = t.sides.iter().fold(s.clone(), |acc, side| acc * (&s - side));
    assert_eq!(radicand, area.square(), "Heron radicand disagrees with coordinate area");
    area
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Isosceles,
    Right,
    Heron,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Isosceles => "isosceles",
            Tag::Right => "right",
            Tag::Heron => "heron",
        }
    }
}

/// A certified triangle together with its area and classification.
///
/// Every triangle here has rational vertices, hence rational area, so the
/// `heron` tag is always present. Right triangles carry their area as a
/// congruent number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRecord {
    triangle: Triangle,
    area: Rational,
    tags: BTreeSet<Tag>,
    congruent_number: Option<Rational>,
}

impl TriangleRecord {
    pub fn new(triangle: Triangle) -> Self {
        let area = heron_area(&triangle);
        let mut tags = BTreeSet::from([Tag::Heron]);
        if triangle.is_isosceles() {
            tags.insert(Tag::Isosceles);
        }
        let congruent_number = if triangle.is_right() {
            tags.insert(Tag::Right);
            Some(area.clone())
        } else {
            None
        };
        TriangleRecord {
            triangle,
            area,
            tags,
            congruent_number,
        }
    }

    pub fn from_vertices(a: Point2, b: Point2, c: Point2) -> Result<Self, Rejection> {
        make_triangle(a, b, c).map(TriangleRecord::new)
    }

    pub fn triangle(&self) -> &Triangle {
        &self.triangle
    }

    pub fn area(&self) -> &Rational {
        &self.area
    }

    pub fn tags(&self) -> &BTreeSet<Tag> {
        &self.tags
    }

    pub fn has_tag(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }

    pub fn congruent_number(&self) -> Option<&Rational> {
        self.congruent_number.as_ref()
    }

    pub fn to_wire(&self) -> RecordWire {
        RecordWire {
            vertices: self
                .triangle
                .vertices
                .clone()
                .map(|p| [p.x, p.y]),
            sides: self.triangle.sides.clone(),
            area: self.area.clone(),
            tags: self.tags.iter().map(|t| t.as_str().to_string()).collect(),
            congruent_number: self.congruent_number.clone(),
        }
    }
}

/// The JSON shape of a [`TriangleRecord`]. Deserializing into this type
/// performs no validation; it is what a verifier reads back.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordWire {
    pub vertices: [[Rational; 2]; 3],
    pub sides: [Rational; 3],
    pub area: Rational,
    pub tags: Vec<String>,
    #[serde(default)]
    pub congruent_number: Option<Rational>,
}

impl Serialize for TriangleRecord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_wire().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn pt(x: Rational, y: Rational) -> Point2 {
        Point2::new(x, y)
    }

    fn int(n: i64) -> Rational {
        Rational::integer(n)
    }

    #[test]
    fn distance_examples() {
        let o = Point2::origin();
        assert_eq!(rational_distance(&o, &pt(int(3), int(4))), Some(int(5)));
        assert_eq!(rational_distance(&o, &pt(rat(-25, 9), rat(125, 24))), Some(rat(425, 72)));
        assert_eq!(rational_distance(&o, &pt(int(1), int(1))), None);
    }

    #[test]
    fn make_triangle_examples() {
        let t = make_triangle(Point2::origin(), pt(rat(3, 4), int(0)), pt(int(0), int(1))).unwrap();
        assert_eq!(t.sides(), &[rat(3, 4), rat(5, 4), int(1)]);
        assert_eq!(
            make_triangle(Point2::origin(), pt(int(1), int(0)), pt(int(2), int(0))),
            Err(Rejection::Degenerate)
        );
        assert_eq!(
            make_triangle(Point2::origin(), pt(int(1), int(0)), pt(int(1), int(1))),
            Err(Rejection::NotRational)
        );
    }

    #[test]
    fn area_examples() {
        let t = make_triangle(Point2::origin(), pt(rat(3, 4), int(0)), pt(int(0), int(1))).unwrap();
        assert_eq!(heron_area(&t), rat(3, 8));
        let t = make_triangle(Point2::origin(), pt(rat(-4, 7), int(0)), pt(rat(-4, 7), rat(3, 7))).unwrap();
        assert_eq!(heron_area(&t), rat(6, 49));
        // |q(mX + b)|/2 with q = -4/7, m = b = 1, X = -4/7
        let q = rat(-4, 7);
        assert_eq!((&q * (rat(-4, 7) + 1)).abs() / 2, rat(6, 49));
        let t = make_triangle(Point2::origin(), pt(int(2), int(0)), pt(int(1), int(1)));
        // sides sqrt(2): not a rational triangle, but the area formula itself is exact
        assert_eq!(t, Err(Rejection::NotRational));
        assert_eq!(twice_signed_area(&Point2::origin(), &pt(int(2), int(0)), &pt(int(1), int(1))).abs() / 2, int(1));
    }

    #[test]
    fn record_tags() {
        let rec = TriangleRecord::from_vertices(Point2::origin(), pt(rat(3, 4), int(0)), pt(int(0), int(1))).unwrap();
        assert!(rec.has_tag(Tag::Right) && rec.has_tag(Tag::Heron) && !rec.has_tag(Tag::Isosceles));
        assert_eq!(rec.congruent_number(), Some(&rat(3, 8)));
        let rec = TriangleRecord::from_vertices(Point2::origin(), pt(int(6), int(0)), pt(int(3), int(4))).unwrap();
        assert!(rec.has_tag(Tag::Isosceles) && !rec.has_tag(Tag::Right));
        assert_eq!(rec.congruent_number(), None);
    }

    #[test]
    fn record_json_shape() {
        let rec = TriangleRecord::from_vertices(Point2::origin(), pt(rat(3, 4), int(0)), pt(int(0), int(1))).unwrap();
        let v = serde_json::to_value(&rec).unwrap();
        assert_eq!(v["vertices"][1], serde_json::json!(["3/4", "0"]));
        assert_eq!(v["sides"], serde_json::json!(["3/4", "5/4", "1"]));
        assert_eq!(v["area"], "3/8");
        assert_eq!(v["tags"], serde_json::json!(["right", "heron"]));
        let wire: RecordWire = serde_json::from_value(v).unwrap();
        assert_eq!(wire, rec.to_wire());
    }
}
