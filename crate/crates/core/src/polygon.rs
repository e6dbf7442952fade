//! Rational polygons: exact angles in units of π, the normalized triangle
//! notation `T(a,b,c)`, and the conversion of angles into unit π/k.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{checked_mul, lcm_all, reduce};
use crate::error::{Error, Result};

/// An interior angle `(num/den)·π`, stored in lowest terms.
///
/// A vertex angle is strictly between 0 and 2π and is never a straight
/// angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalAngle {
    num: u64,
    den: u64,
}

impl RationalAngle {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den <= 0 {
            return Err(Error::InvalidPolygon(format!(
                "angle denominator must be positive, got {den}"
            )));
        }
        if num <= 0 {
            return Err(Error::InvalidPolygon(format!(
                "angle {num}/{den}·π is not positive"
            )));
        }
        let (num, den) = reduce(num as u64, den as u64);
        if num >= 2 * den {
            return Err(Error::InvalidPolygon(format!(
                "angle {num}/{den}·π is not below 2π"
            )));
        }
        if num == den {
            return Err(Error::InvalidPolygon("straight angle π at a vertex".into()));
        }
        Ok(RationalAngle { num, den })
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// The angle expressed as `(m/n)·(π/k)` with `m/n` in lowest terms.
    pub fn in_unit(&self, k: u64) -> Result<(u64, u64)> {
        let scaled = checked_mul(self.num, k, "angle in unit π/k")?;
        Ok(reduce(scaled, self.den))
    }

    pub fn is_reflex(&self) -> bool {
        self.num > self.den
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for RationalAngle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad angle fraction {s:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => RationalAngle::new(parse(n)?, parse(d)?),
            None => RationalAngle::new(parse(s)?, 1),
        }
    }
}

/// The triangle with angles `(aπ/d, bπ/d, cπ/d)`, `d = a+b+c`, normalized so
/// that `a ≤ b ≤ c` and `gcd(a,b,c) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleSpec {
    a: u64,
    b: u64,
    c: u64,
}

impl TriangleSpec {
    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn d(&self) -> u64 {
        self.a + self.b + self.c
    }

    pub fn numerators(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    /// The triangle as a polygon with vertices in the order of `(a, b, c)`.
    pub fn to_polygon(&self) -> PolygonSpec {
        let d = self.d() as i64;
        let angles = self
            .numerators()
            .iter()
            .map(|&n| RationalAngle::new(n as i64, d))
            .collect::<Result<Vec<_>>>()
            .expect("normalized triangle angles are valid");
        PolygonSpec {
            angles,
            side_lengths: None,
            label: Some(self.to_string()),
        }
    }

    pub fn shape(&self) -> ShapeClass {
        triangle_shape(self)
    }
}

impl fmt::Display for TriangleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{},{})", self.a, self.b, self.c)
    }
}

/// Accepts both `T(a,b,c)` and the bare `a,b,c`; the result is normalized.
impl FromStr for TriangleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix("T(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad triangle {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        match parts[..] {
            [a, b, c] => make_triangle(a, b, c),
            _ => Err(Error::Parse(format!(
                "triangle needs three numerators, got {s:?}"
            ))),
        }
    }
}

impl Serialize for TriangleSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TriangleSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Normalize a triple of angle numerators into `T(a,b,c)`.
pub fn make_triangle(a: i64, b: i64, c: i64) -> Result<TriangleSpec> {
    if a < 1 || b < 1 || c < 1 {
        return Err(Error::InvalidTriangle(format!(
            "angle numerators must be positive, got ({a},{b},{c})"
        )));
    }
    let mut v = [a as u64, b as u64, c as u64];
    v.sort_unstable();
    v[0].checked_add(v[1])
        .and_then(|s| s.checked_add(v[2]))
        .ok_or(Error::Overflow("triangle angle sum"))?;
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    Ok(TriangleSpec {
        a: v[0] / g,
        b: v[1] / g,
        c: v[2] / g,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleKind {
    Acute,
    Right,
    Obtuse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryKind {
    Equilateral,
    Isosceles,
    Scalene,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShapeClass {
    pub angle_kind: AngleKind,
    pub symmetry_kind: SymmetryKind,
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let angle = match self.angle_kind {
            AngleKind::Acute => "acute",
            AngleKind::Right => "right",
            AngleKind::Obtuse => "obtuse",
        };
        let sym = match self.symmetry_kind {
            SymmetryKind::Equilateral => "equilateral",
            SymmetryKind::Isosceles => "isosceles",
            SymmetryKind::Scalene => "scalene",
        };
        write!(f, "{angle}-{sym}")
    }
}

impl FromStr for ShapeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad shape {s:?}"));
        let (angle, sym) = s.split_once('-').ok_or_else(bad)?;
        let angle_kind = match angle {
            "acute" => AngleKind::Acute,
            "right" => AngleKind::Right,
            "obtuse" => AngleKind::Obtuse,
            _ => return Err(bad()),
        };
        let symmetry_kind = match sym {
            "equilateral" => SymmetryKind::Equilateral,
            "isosceles" => SymmetryKind::Isosceles,
            "scalene" => SymmetryKind::Scalene,
            _ => return Err(bad()),
        };
        Ok(ShapeClass {
            angle_kind,
            symmetry_kind,
        })
    }
}

impl Serialize for ShapeClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ShapeClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn triangle_shape(t: &TriangleSpec) -> ShapeClass {
    let (twice_c, d) = (2 * t.c, t.d());
    let angle_kind = if twice_c == d {
        AngleKind::Right
    } else if twice_c > d {
        AngleKind::Obtuse
    } else {
        AngleKind::Acute
    };
    let symmetry_kind = if t.a == t.c {
        SymmetryKind::Equilateral
    } else if t.a == t.b || t.b == t.c {
        SymmetryKind::Isosceles
    } else {
        SymmetryKind::Scalene
    };
    ShapeClass {
        angle_kind,
        symmetry_kind,
    }
}

/// A simply connected rational polygon given by its interior angles in
/// counterclockwise order. Side `i` joins vertex `i` to vertex `i+1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonSpec {
    angles: Vec<RationalAngle>,
    side_lengths: Option<Vec<f64>>,
    label: Option<String>,
}

impl PolygonSpec {
    pub fn angles(&self) -> &[RationalAngle] {
        &self.angles
    }

    pub fn side_lengths(&self) -> Option<&[f64]> {
        self.side_lengths.as_deref()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn sides(&self) -> usize {
        self.angles.len()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Attach side lengths, ordered as the sides. Closure is not checked here.
    pub fn with_side_lengths(self, side_lengths: Vec<f64>) -> Result<Self> {
        let label = self.label.clone();
        let mut p = validate_polygon(self.angles, Some(side_lengths))?;
        p.label = label;
        Ok(p)
    }

    /// Angles rendered as comma-separated fractions of π.
    pub fn angles_text(&self) -> String {
        self.angles
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for PolygonSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(label) => f.write_str(label),
            None => f.write_str(&self.angles_text()),
        }
    }
}

/// Parses comma-separated angle fractions in units of π, e.g. `1/2,1/2,1/2,1/2`.
impl FromStr for PolygonSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let angles = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<RationalAngle>>>()?;
        validate_polygon(angles, None)
    }
}

pub fn validate_polygon(
    angles: Vec<RationalAngle>,
    side_lengths: Option<Vec<f64>>,
) -> Result<PolygonSpec> {
    let s = angles.len();
    if s < 3 {
        return Err(Error::InvalidPolygon(format!(
            "a polygon needs at least 3 angles, got {s}"
        )));
    }
    let common = lcm_all(angles.iter().map(|a| a.den))?;
    let mut sum: u64 = 0;
    for a in &angles {
        let term = checked_mul(a.num, common / a.den, "angle sum")?;
        sum = sum.checked_add(term).ok_or(Error::Overflow("angle sum"))?;
    }
    let expected = checked_mul(s as u64 - 2, common, "angle sum")?;
    if sum != expected {
        let (n, d) = reduce(sum, common);
        return Err(Error::InvalidPolygon(format!(
            "angle sum is {n}/{d}·π, expected {}·π for {s} vertices",
            s - 2
        )));
    }
    if let Some(lengths) = &side_lengths {
        if lengths.len() != s {
            return Err(Error::InvalidPolygon(format!(
                "{} side lengths for {s} angles",
                lengths.len()
            )));
        }
        if let Some(bad) = lengths.iter().find(|l| !(l.is_finite() && **l > 0.0)) {
            return Err(Error::InvalidPolygon(format!(
                "side length {bad} is not a positive number"
            )));
        }
    }
    Ok(PolygonSpec {
        angles,
        side_lengths,
        label: None,
    })
}

/// Regular `n`-gon with unit sides.
pub fn make_regular(n: i64) -> Result<PolygonSpec> {
    if n < 3 {
        return Err(Error::InvalidPolygon(format!(
            "a regular polygon needs n ≥ 3, got {n}"
        )));
    }
    let angle = RationalAngle::new(n - 2, n)?;
    let p = validate_polygon(vec![angle; n as usize], Some(vec![1.0; n as usize]))?;
    Ok(p.with_label(format!("regular {n}-gon")))
}

/// Rectangle with sides `width, height, width, height`. The aspect ratio
/// never affects combinatorial output.
pub fn make_rectangle(width: f64, height: f64) -> Result<PolygonSpec> {
    let right = RationalAngle::new(1, 2)?;
    let p = validate_polygon(vec![right; 4], Some(vec![width, height, width, height]))?;
    Ok(p.with_label("rectangle"))
}

/// Each angle as `(m_i, n_i)` in lowest terms with `α_i = (m_i/n_i)(π/k)`.
pub fn angles_in_unit(p: &PolygonSpec, k: i64) -> Result<Vec<(u64, u64)>> {
    if k < 1 {
        return Err(Error::InvalidUnit(k));
    }
    p.angles.iter().map(|a| a.in_unit(k as u64)).collect()
}
