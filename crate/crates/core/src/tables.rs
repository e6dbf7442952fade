//! Survey tables over all rational triangles up to a denominator bound.

use std::io::{Read, Write};

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polygon::{make_triangle, ShapeClass, TriangleSpec};
use crate::strata::{compare_constructions, profile, ConstructionRelation, RelationVariant};
use crate::veech::{classify_triangle, Classification, LatticeStatus, REGISTRY_VERSION};

/// Normalized triangles `T(a,b,c)` with `a+b+c ≤ d_max`, ordered by
/// `(d, a, b)`. Lazy: memory use does not grow with `d_max`.
#[derive(Debug, Clone)]
pub struct TriangleEnumerator {
    d_max: u64,
    d: u64,
    a: u64,
    b: u64,
}

impl Iterator for TriangleEnumerator {
    type Item = TriangleSpec;

    fn next(&mut self) -> Option<TriangleSpec> {
        loop {
            if self.d > self.d_max {
                return None;
            }
            let (d, a, b) = (self.d, self.a, self.b);
            // advance: b up to (d−a)/2 keeps c ≥ b; a up to d/3 keeps b ≥ a
            if b < (d - a) / 2 {
                self.b += 1;
            } else if a < d / 3 {
                self.a += 1;
                self.b = self.a;
            } else {
                self.d += 1;
                self.a = 1;
                self.b = 1;
            }
            let c = d - a - b;
            if b >= a && c >= b && a.gcd(&b).gcd(&c) == 1 {
                return Some(make_triangle(a as i64, b as i64, c as i64).expect("positive"));
            }
        }
    }
}

pub fn enumerate_triangles(d_max: i64) -> Result<TriangleEnumerator> {
    if d_max < 3 {
        return Err(Error::Domain(format!(
            "the denominator bound must be at least 3, got {d_max}"
        )));
    }
    Ok(TriangleEnumerator {
        d_max: d_max as u64,
        d: 3,
        a: 1,
        b: 1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub triangle: TriangleSpec,
    pub shape: ShapeClass,
    #[serde(rename = "N")]
    pub n: u64,
    /// Orders of the non-removable zeros of the Abelian differential.
    pub abelian_orders: Vec<i64>,
    pub abelian_genus: u64,
    /// Orders of the non-removable zeros and poles of the quadratic differential.
    pub quadratic_orders: Vec<i64>,
    pub quadratic_genus: u64,
    pub relation: ConstructionRelation,
    pub classification: Classification,
    pub registry_version: String,
}

impl TableRow {
    pub fn for_triangle(t: TriangleSpec) -> Result<Self> {
        let polygon = t.to_polygon();
        let abelian = profile(&polygon, 1)?;
        let quadratic = profile(&polygon, 2)?;
        Ok(TableRow {
            triangle: t,
            shape: t.shape(),
            n: abelian.n(),
            abelian_orders: abelian.stratum(),
            abelian_genus: abelian.genus(),
            quadratic_orders: quadratic.stratum(),
            quadratic_genus: quadratic.genus(),
            relation: compare_constructions(&polygon)?,
            classification: classify_triangle(&t)?,
            registry_version: REGISTRY_VERSION.to_owned(),
        })
    }

    pub fn to_csv_record(&self) -> CsvRecord {
        let join = |v: &[i64]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("+")
        };
        let c = &self.classification;
        CsvRecord {
            a: self.triangle.a(),
            b: self.triangle.b(),
            c: self.triangle.c(),
            d: self.triangle.d(),
            shape: self.shape.to_string(),
            n: self.n,
            abelian_orders: join(&self.abelian_orders),
            abelian_genus: self.abelian_genus,
            quadratic_orders: join(&self.quadratic_orders),
            quadratic_genus: self.quadratic_genus,
            relation: self.relation.variant.to_string(),
            branch_points: self.relation.branch_point_count,
            status: c.status.to_string(),
            group: c
                .veech_group
                .or(c.ambient_group)
                .map(|g| g.to_string())
                .unwrap_or_default(),
            theorems: c
                .theorem_tags
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("+"),
            registry_version: self.registry_version.clone(),
        }
    }
}

/// One CSV line. Column order is fixed:
/// `a,b,c,d,shape,N,abelian_orders,abelian_genus,quadratic_orders,`
/// `quadratic_genus,relation,branch_points,status,group,theorems,registry_version`.
/// Order multisets are ascending and `+`-joined, e.g. `1+3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRecord {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub shape: String,
    #[serde(rename = "N")]
    pub n: u64,
    pub abelian_orders: String,
    pub abelian_genus: u64,
    pub quadratic_orders: String,
    pub quadratic_genus: u64,
    pub relation: String,
    pub branch_points: u64,
    pub status: String,
    pub group: String,
    pub theorems: String,
    pub registry_version: String,
}

impl CsvRecord {
    /// Checks that every text column parses back into its domain type.
    pub fn validate(&self) -> Result<()> {
        let t = make_triangle(self.a as i64, self.b as i64, self.c as i64)?;
        if (t.a(), t.b(), t.c(), t.d()) != (self.a, self.b, self.c, self.d) {
            return Err(Error::Parse(format!("row {t} is not normalized")));
        }
        self.shape.parse::<ShapeClass>()?;
        self.relation.parse::<RelationVariant>()?;
        self.status.parse::<LatticeStatus>()?;
        if !self.group.is_empty() {
            self.group.parse::<crate::veech::TriangleGroupSpec>()?;
        }
        for orders in [&self.abelian_orders, &self.quadratic_orders] {
            if !orders.is_empty() {
                for o in orders.split('+') {
                    o.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad order list {orders:?}")))?;
                }
            }
        }
        if !self.theorems.is_empty() {
            for tag in self.theorems.split('+') {
                tag.parse::<crate::veech::TheoremTag>()?;
            }
        }
        Ok(())
    }
}

/// One row per triangle with `d ≤ d_max`, in enumeration order.
pub fn build_table(d_max: i64) -> Result<Vec<TableRow>> {
    let triangles: Vec<TriangleSpec> = enumerate_triangles(d_max)?.collect();
    triangles
        .into_par_iter()
        .map(TableRow::for_triangle)
        .collect()
}

pub fn write_csv<W: Write>(rows: &[TableRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row.to_csv_record())
            .map_err(|e| Error::Parse(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<CsvRecord>> {
    let mut r = csv::Reader::from_reader(input);
    let records = r
        .deserialize()
        .collect::<std::result::Result<Vec<CsvRecord>, _>>()
        .map_err(|e| Error::Parse(e.to_string()))?;
    records.iter().try_for_each(CsvRecord::validate)?;
    Ok(records)
}

pub fn to_json(rows: &[TableRow]) -> Result<String> {
    serde_json::to_string_pretty(rows).map_err(|e| Error::Parse(e.to_string()))
}

pub fn from_json(text: &str) -> Result<Vec<TableRow>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TableSummary {
    pub rows: u64,
    pub lattice: u64,
    pub non_lattice: u64,
    pub unknown: u64,
    pub torus: u64,
    pub max_abelian_genus: u64,
}

pub fn summarize(rows: &[TableRow]) -> TableSummary {
    rows.iter().fold(TableSummary::default(), |mut s, row| {
        s.rows += 1;
        match row.classification.status {
            LatticeStatus::Lattice => s.lattice += 1,
            LatticeStatus::NonLattice => s.non_lattice += 1,
            LatticeStatus::Unknown => s.unknown += 1,
        }
        s.torus += row.classification.torus as u64;
        s.max_abelian_genus = s.max_abelian_genus.max(row.abelian_genus);
        s
    })
}
