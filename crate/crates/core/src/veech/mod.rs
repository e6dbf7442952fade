//! Lattice-property decisions for rational triangles and regular polygons.
//!
//! Triangles are decided by a [`Registry`] of known theorems: every rule that
//! applies is evaluated, their verdicts must agree, and the merged result
//! records which rules fired. When no rule applies the answer is
//! [`LatticeStatus::Unknown`]; the engine never extrapolates.

mod registry;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polygon::TriangleSpec;

pub use registry::{Registry, Rule, Verdict, REGISTRY, REGISTRY_VERSION};

/// One entry of a triangle group signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Period {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Period::Finite(p) => write!(f, "{p}"),
            Period::Infinite => f.write_str("inf"),
        }
    }
}

/// Conjugacy class of the hyperbolic triangle group `△(p,q,r)`, stored
/// sorted with `∞` last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleGroupSpec([Period; 3]);

impl TriangleGroupSpec {
    pub fn new(p: Period, q: Period, r: Period) -> Result<Self> {
        let mut v = [p, q, r];
        v.sort_unstable();
        if v.iter().any(|x| matches!(x, Period::Finite(n) if *n < 2)) {
            return Err(Error::Domain(format!(
                "triangle group periods must be at least 2, got ({p},{q},{r})"
            )));
        }
        // 1/p + 1/q + 1/r < 1, cleared of denominators
        let finite: Vec<u64> = v
            .iter()
            .filter_map(|x| match x {
                Period::Finite(n) => Some(*n),
                Period::Infinite => None,
            })
            .collect();
        let product: u128 = finite.iter().map(|&n| n as u128).product();
        let numerator: u128 = finite.iter().map(|&n| product / n as u128).sum();
        if numerator >= product {
            return Err(Error::Domain(format!("△({p},{q},{r}) is not hyperbolic")));
        }
        Ok(TriangleGroupSpec(v))
    }

    /// `△(2,3,∞)`, the class of PSL(2,Z).
    pub fn modular() -> Self {
        TriangleGroupSpec([Period::Finite(2), Period::Finite(3), Period::Infinite])
    }

    pub fn periods(&self) -> [Period; 3] {
        self.0
    }

    pub fn is_modular(&self) -> bool {
        *self == Self::modular()
    }

    pub(crate) fn finite(p: u64, q: u64) -> Self {
        Self::new(Period::Finite(p), Period::Finite(q), Period::Infinite)
            .expect("registry emits hyperbolic groups")
    }

    pub(crate) fn cusped(m: u64) -> Self {
        Self::new(Period::Finite(m), Period::Infinite, Period::Infinite)
            .expect("registry emits hyperbolic groups")
    }
}

impl fmt::Display for TriangleGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = self.0;
        write!(f, "D({p},{q},{r})")
    }
}

impl FromStr for TriangleGroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad triangle group {s:?}"));
        let inner = s
            .trim()
            .strip_prefix("D(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let periods = inner
            .split(',')
            .map(|t| match t.trim() {
                "inf" => Ok(Period::Infinite),
                n => n.parse().map(Period::Finite).map_err(|_| bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        match periods[..] {
            [p, q, r] => TriangleGroupSpec::new(p, q, r),
            _ => Err(bad()),
        }
    }
}

impl Serialize for TriangleGroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TriangleGroupSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticeStatus {
    Lattice,
    NonLattice,
    Unknown,
}

impl fmt::Display for LatticeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for LatticeStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Lattice" => Ok(LatticeStatus::Lattice),
            "NonLattice" => Ok(LatticeStatus::NonLattice),
            "Unknown" => Ok(LatticeStatus::Unknown),
            _ => Err(Error::Parse(format!("bad status {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arithmeticity {
    Yes,
    No,
    NotComputed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremTag {
    Arithmetic,
    RightTriangle,
    AcuteIsosceles,
    AcuteScaleneExceptional,
    ObtuseIsosceles,
    SharpCriterion,
    VorobetsWardFamily,
    ExplicitNonLattice,
    RegularPolygon,
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for TheoremTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use TheoremTag::*;
        [
            Arithmetic,
            RightTriangle,
            AcuteIsosceles,
            AcuteScaleneExceptional,
            ObtuseIsosceles,
            SharpCriterion,
            VorobetsWardFamily,
            ExplicitNonLattice,
            RegularPolygon,
        ]
        .into_iter()
        .find(|t| t.to_string() == s)
        .ok_or_else(|| Error::Parse(format!("bad theorem tag {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub status: LatticeStatus,
    pub veech_group: Option<TriangleGroupSpec>,
    pub ambient_group: Option<TriangleGroupSpec>,
    /// Index of the Veech group in `ambient_group`.
    pub index: Option<u64>,
    pub torus: bool,
    pub arithmetic: Arithmeticity,
    pub theorem_tags: Vec<TheoremTag>,
}

impl Classification {
    pub fn unknown() -> Self {
        Classification {
            status: LatticeStatus::Unknown,
            veech_group: None,
            ambient_group: None,
            index: None,
            torus: false,
            arithmetic: Arithmeticity::NotComputed,
            theorem_tags: Vec::new(),
        }
    }

    fn check(self) -> Result<Self> {
        let has_group =
            self.veech_group.is_some() || (self.ambient_group.is_some() && self.index.is_some());
        let ok = match self.status {
            LatticeStatus::Unknown => {
                self.veech_group.is_none() && self.ambient_group.is_none() && self.index.is_none()
            }
            LatticeStatus::NonLattice => self.veech_group.is_none() && !self.torus,
            LatticeStatus::Lattice => has_group,
        } && (!self.torus
            || (self.arithmetic == Arithmeticity::Yes
                && self.veech_group.is_some_and(|g| g.is_modular())));
        if ok {
            Ok(self)
        } else {
            Err(Error::Consistency(format!(
                "incoherent classification {self:?}"
            )))
        }
    }
}

/// External form of a classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub triangle: Option<TriangleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regular: Option<u64>,
    pub status: LatticeStatus,
    pub veech_group: Option<TriangleGroupSpec>,
    pub ambient_group: Option<TriangleGroupSpec>,
    pub index: Option<u64>,
    pub torus: bool,
    pub arithmetic: Arithmeticity,
    pub theorem_tags: Vec<TheoremTag>,
    pub registry_version: String,
}

impl ClassificationRecord {
    pub fn for_triangle(t: TriangleSpec, c: &Classification) -> Self {
        Self::build(Some(t), None, c)
    }

    pub fn for_regular(n: u64, c: &Classification) -> Self {
        Self::build(None, Some(n), c)
    }

    fn build(triangle: Option<TriangleSpec>, regular: Option<u64>, c: &Classification) -> Self {
        ClassificationRecord {
            triangle,
            regular,
            status: c.status,
            veech_group: c.veech_group,
            ambient_group: c.ambient_group,
            index: c.index,
            torus: c.torus,
            arithmetic: c.arithmetic,
            theorem_tags: c.theorem_tags.clone(),
            registry_version: REGISTRY_VERSION.to_owned(),
        }
    }
}

/// Dedekind's ψ: `n · ∏_{p | n} (1 + 1/p)`.
pub fn dedekind_omega(n: i64) -> Result<u64> {
    if n < 1 {
        return Err(Error::Domain(format!("ω(n) needs n ≥ 1, got {n}")));
    }
    let mut rest = n as u64;
    let mut value: u64 = 1;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut power = 1u64;
            while rest.is_multiple_of(p) {
                rest /= p;
                power *= p;
            }
            value *= power / p * (p + 1);
        }
        p += 1;
    }
    if rest > 1 {
        value *= rest + 1;
    }
    Ok(value)
}

/// Index of the Veech group of the regular `n`-gon in `△(2,n,∞)`.
pub fn regular_ngon_index(n: i64) -> Result<u64> {
    if n < 5 {
        return Err(Error::Domain(format!(
            "the index formula covers n ≥ 5, got {n}"
        )));
    }
    let epsilon = n.gcd(&2);
    let reduced = n / epsilon;
    let sigma = reduced.gcd(&4);
    let (top, bottom) = (dedekind_omega(reduced)?, dedekind_omega(sigma)?);
    if top % bottom != 0 {
        return Err(Error::Consistency(format!(
            "ω({reduced}) = {top} is not divisible by ω({sigma}) = {bottom}"
        )));
    }
    Ok(top / bottom * epsilon as u64)
}

/// Ward's sharp form `(π/m, pπ/m, qπ/m)` with `p < q` and `4p ≤ m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SharpForm {
    pub m: u64,
    pub p: u64,
    pub q: u64,
    /// The criterion covers the form only when `p` or `m` is odd.
    pub applicable: bool,
}

pub fn sharp_decompose(t: &TriangleSpec) -> Option<SharpForm> {
    let (a, b, c, d) = (t.a(), t.b(), t.c(), t.d());
    (a == 1 && b < c && 4 * b <= d).then_some(SharpForm {
        m: d,
        p: b,
        q: c,
        applicable: b % 2 == 1 || d % 2 == 1,
    })
}

pub fn classify_triangle(t: &TriangleSpec) -> Result<Classification> {
    REGISTRY.classify(t)
}

pub fn classify_regular(n: i64) -> Result<Classification> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "a regular polygon needs n ≥ 3, got {n}"
        )));
    }
    let c = if n <= 4 {
        Classification {
            status: LatticeStatus::Lattice,
            veech_group: Some(TriangleGroupSpec::modular()),
            ambient_group: None,
            index: None,
            torus: true,
            arithmetic: Arithmeticity::Yes,
            theorem_tags: vec![TheoremTag::Arithmetic, TheoremTag::RegularPolygon],
        }
    } else {
        Classification {
            status: LatticeStatus::Lattice,
            veech_group: None,
            ambient_group: Some(TriangleGroupSpec::finite(2, n as u64)),
            index: Some(regular_ngon_index(n)?),
            torus: false,
            arithmetic: Arithmeticity::NotComputed,
            theorem_tags: vec![TheoremTag::RegularPolygon],
        }
    };
    c.check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::make_triangle;

    fn t(a: i64, b: i64, c: i64) -> TriangleSpec {
        make_triangle(a, b, c).unwrap()
    }

    /// |P¹(Z/nZ)| by brute force: primitive pairs modulo units.
    fn projective_line_size(n: u64) -> u64 {
        if n == 1 {
            return 1;
        }
        let primitive = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a.gcd(&b).gcd(&n) == 1)
            .count() as u64;
        let units = (1..n).filter(|u| u.gcd(&n) == 1).count() as u64;
        primitive / units
    }

    #[test]
    fn omega_against_projective_line() {
        for n in 1..=60 {
            assert_eq!(
                dedekind_omega(n as i64).unwrap(),
                projective_line_size(n),
                "n={n}"
            );
        }
        assert_eq!(dedekind_omega(1).unwrap(), 1);
        assert_eq!(dedekind_omega(4).unwrap(), 6);
        assert_eq!(dedekind_omega(6).unwrap(), 12);
        assert!(matches!(dedekind_omega(0), Err(Error::Domain(_))));
    }

    #[test]
    fn index_values() {
        assert_eq!(regular_ngon_index(5).unwrap(), 6);
        assert_eq!(regular_ngon_index(7).unwrap(), 8);
        assert_eq!(regular_ngon_index(8).unwrap(), 2);
        assert_eq!(regular_ngon_index(12).unwrap(), 8);
        assert!(matches!(regular_ngon_index(4), Err(Error::Domain(_))));
    }

    #[test]
    fn group_specs() {
        let g: TriangleGroupSpec = "D(inf,2,3)".parse().unwrap();
        assert!(g.is_modular());
        assert_eq!(g.to_string(), "D(2,3,inf)");
        assert_eq!(TriangleGroupSpec::cusped(9).to_string(), "D(9,inf,inf)");
        // Euclidean and spherical signatures are rejected
        assert!("D(2,3,6)".parse::<TriangleGroupSpec>().is_err());
        assert!("D(2,3,5)".parse::<TriangleGroupSpec>().is_err());
        assert!("D(2,2,inf)".parse::<TriangleGroupSpec>().is_err());
        assert!("D(1,inf,inf)".parse::<TriangleGroupSpec>().is_err());
        assert!("D(2,3,7)".parse::<TriangleGroupSpec>().is_ok());
    }

    #[test]
    fn sharp_forms() {
        assert_eq!(
            sharp_decompose(&t(1, 3, 8)),
            Some(SharpForm {
                m: 12,
                p: 3,
                q: 8,
                applicable: true
            })
        );
        assert_eq!(
            sharp_decompose(&t(1, 2, 5)),
            Some(SharpForm {
                m: 8,
                p: 2,
                q: 5,
                applicable: false
            })
        );
        assert_eq!(sharp_decompose(&t(2, 3, 7)), None);
        // 4p > m
        assert_eq!(sharp_decompose(&t(1, 3, 4)), None);
    }

    #[test]
    fn regular_polygons() {
        let c = classify_regular(4).unwrap();
        assert!(c.torus);
        assert_eq!(c.veech_group, Some(TriangleGroupSpec::modular()));
        let c = classify_regular(5).unwrap();
        assert_eq!(c.status, LatticeStatus::Lattice);
        assert_eq!(c.ambient_group.unwrap().to_string(), "D(2,5,inf)");
        assert_eq!(c.index, Some(6));
        let c = classify_regular(7).unwrap();
        assert_eq!(
            (c.ambient_group.unwrap().to_string(), c.index),
            ("D(2,7,inf)".into(), Some(8))
        );
        let c = classify_regular(6).unwrap();
        assert!(!c.torus);
        assert_eq!(c.arithmetic, Arithmeticity::NotComputed);
        assert!(classify_regular(2).is_err());
    }

    #[test]
    fn record_serialization() {
        let tri = t(3, 5, 7);
        let c = classify_triangle(&tri).unwrap();
        let json = serde_json::to_string(&ClassificationRecord::for_triangle(tri, &c)).unwrap();
        assert_eq!(
            json,
            r#"{"triangle":"T(3,5,7)","status":"Lattice","veech_group":"D(15,inf,inf)","ambient_group":null,"index":null,"torus":false,"arithmetic":"not_computed","theorem_tags":["AcuteScaleneExceptional"],"registry_version":"1.0.0"}"#
        );
        let back: ClassificationRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.veech_group, c.veech_group);
    }
}
