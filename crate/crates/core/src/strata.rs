//! Singularity data of the flat surfaces attached to a rational polygon,
//! computed from the angles alone.
//!
//! Writing each angle as `(m_i/n_i)·(π/k)` in lowest terms and letting
//! `N = lcm(n_i)`, vertex `i` contributes `N/n_i` cone points of angle
//! `m_i·2π/k`, i.e. zeros of order `m_i − k` of a `k`-differential. `k = 1`
//! is the translation surface, `k = 2` the half-translation surface.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::lcm_all;
use crate::error::{Error, Result};
use crate::polygon::{angles_in_unit, PolygonSpec};

/// Cone points coming from one polygon vertex, all with the same angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConePointClass {
    pub vertex: usize,
    /// Cone angle is `multiplicity · 2π/k`.
    pub multiplicity: u64,
    pub count: u64,
    /// `multiplicity − k`; negative values are poles.
    pub order: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityProfile {
    k: u64,
    #[serde(rename = "N")]
    n: u64,
    genus: u64,
    classes: Vec<ConePointClass>,
}

impl SingularityProfile {
    /// Builds a profile, deriving the genus from Gauss–Bonnet. Classes are
    /// kept sorted by vertex.
    pub fn new(k: u64, n: u64, mut classes: Vec<ConePointClass>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidUnit(0));
        }
        if let Some(c) = classes
            .iter()
            .find(|c| c.order != c.multiplicity as i64 - k as i64)
        {
            return Err(Error::Consistency(format!(
                "vertex {} has order {} but multiplicity {} at k = {k}",
                c.vertex, c.order, c.multiplicity
            )));
        }
        classes.sort();
        let genus = genus_from_orders(k, classes.iter().map(|c| (c.order, c.count)))?;
        Ok(SingularityProfile {
            k,
            n,
            genus,
            classes,
        })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Least common multiple of the angle denominators in unit π/k.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn classes(&self) -> &[ConePointClass] {
        &self.classes
    }

    pub fn point_count(&self) -> u64 {
        self.classes.iter().map(|c| c.count).sum()
    }

    /// Orders of all points with repetition, ascending.
    pub fn orders(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self
            .classes
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.order, c.count as usize))
            .collect();
        v.sort_unstable();
        v
    }

    /// Orders of the non-removable points (order ≠ 0), ascending.
    pub fn stratum(&self) -> Vec<i64> {
        self.orders().into_iter().filter(|&o| o != 0).collect()
    }
}

impl fmt::Display for SingularityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k = {}, N = {}, genus = {}", self.k, self.n, self.genus)?;
        for c in &self.classes {
            writeln!(
                f,
                "  vertex {}: {} point(s), cone angle {}·2π/{}, order {}",
                c.vertex, c.count, c.multiplicity, self.k, c.order
            )?;
        }
        Ok(())
    }
}

/// The unique `g ≥ 0` with `Σ order·count = k(2g − 2)`.
pub fn genus_from_orders<I>(k: u64, orders: I) -> Result<u64>
where
    I: IntoIterator<Item = (i64, u64)>,
{
    let total: i128 = orders
        .into_iter()
        .map(|(order, count)| order as i128 * count as i128)
        .sum();
    let k = k as i128;
    if total % (2 * k) != 0 {
        return Err(Error::Consistency(format!(
            "order sum {total} is not a multiple of 2k = {}",
            2 * k
        )));
    }
    let genus = total / (2 * k) + 1;
    u64::try_from(genus)
        .map_err(|_| Error::Consistency(format!("order sum {total} gives negative genus")))
}

/// Recomputes the genus of `profile` from its orders.
pub fn genus_of(profile: &SingularityProfile) -> Result<u64> {
    genus_from_orders(
        profile.k,
        profile.classes.iter().map(|c| (c.order, c.count)),
    )
}

/// Singularity profile of the `k`-differential obtained by unfolding `p`.
pub fn profile(p: &PolygonSpec, k: i64) -> Result<SingularityProfile> {
    let units = angles_in_unit(p, k)?;
    let k = k as u64;
    let n = lcm_all(units.iter().map(|&(_, den)| den))?;
    let classes = units
        .iter()
        .enumerate()
        .map(|(vertex, &(m, den))| ConePointClass {
            vertex,
            multiplicity: m,
            count: n / den,
            order: m as i64 - k as i64,
        })
        .collect();
    SingularityProfile::new(k, n, classes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationVariant {
    Identical,
    BranchedDoubleCover,
}

impl fmt::Display for RelationVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationVariant::Identical => "identical",
            RelationVariant::BranchedDoubleCover => "branched-double-cover",
        })
    }
}

impl std::str::FromStr for RelationVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identical" => Ok(RelationVariant::Identical),
            "branched-double-cover" => Ok(RelationVariant::BranchedDoubleCover),
            _ => Err(Error::Parse(format!("bad relation {s:?}"))),
        }
    }
}

/// How the translation surface (k=1) relates to the half-translation
/// surface (k=2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstructionRelation {
    pub variant: RelationVariant,
    /// Points of odd order on the half-translation surface; zero when the
    /// constructions coincide.
    pub branch_point_count: u64,
}

pub fn compare_constructions(p: &PolygonSpec) -> Result<ConstructionRelation> {
    let classical = profile(p, 1)?;
    if classical.n() % 2 == 1 {
        return Ok(ConstructionRelation {
            variant: RelationVariant::Identical,
            branch_point_count: 0,
        });
    }
    let quadratic = profile(p, 2)?;
    let branch_point_count = quadratic
        .classes()
        .iter()
        .filter(|c| c.order.rem_euclid(2) == 1)
        .map(|c| c.count)
        .sum();
    Ok(ConstructionRelation {
        variant: RelationVariant::BranchedDoubleCover,
        branch_point_count,
    })
}

/// The least `k` for which every angle is a multiple of π/k, with its
/// profile: two copies of the polygon glued along their boundary.
pub fn minimal_unit(p: &PolygonSpec) -> Result<(u64, SingularityProfile)> {
    let k = lcm_all(p.angles().iter().map(|a| a.denominator()))?;
    let k_signed = i64::try_from(k).map_err(|_| Error::Overflow("minimal unit"))?;
    let prof = profile(p, k_signed)?;
    debug_assert_eq!(prof.n(), 1);
    Ok((k, prof))
}

/// Forgets the removable (order 0) points of a translation-surface profile.
pub fn strip_removable(profile: &SingularityProfile) -> Result<SingularityProfile> {
    if profile.k != 1 {
        return Err(Error::UnsupportedUnit(profile.k));
    }
    let classes = profile
        .classes
        .iter()
        .copied()
        .filter(|c| c.order != 0)
        .collect();
    SingularityProfile::new(profile.k, profile.n, classes)
}
