//! Explicit gluing of the translation surface of a rational polygon.
//!
//! The copies of the polygon are indexed by the dihedral group generated by
//! the reflections in its sides. Copy `g` side `s` is glued to copy `g∘r_s`
//! side `s`, where `r_s` is the reflection in the direction of side `s`.
//! Cone angles are then read off by walking around each vertex.

mod group;
mod realize;

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::Serialize;

use crate::arith::reduce;
use crate::error::{Error, Result};
use crate::polygon::PolygonSpec;
use crate::strata::{self, ConePointClass, SingularityProfile};

pub use group::{DihedralGroup, GroupElement};
pub use realize::{realize, realize_with_tolerance, Layout, PlacedCopy, DEFAULT_TOLERANCE};

/// A side of one copy: `(copy position, side index)`.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClass {
    pub vertex: usize,
    /// Copies whose corner at `vertex` lies in this class, in traversal order.
    pub corners: Vec<usize>,
    /// Cone angle in units of π, lowest terms.
    pub cone_angle: (u64, u64),
}

impl VertexClass {
    pub fn corner_count(&self) -> usize {
        self.corners.len()
    }

    /// The cone angle divided by 2π, if it is an integer.
    pub fn multiple_of_two_pi(&self) -> Option<u64> {
        let (num, den) = self.cone_angle;
        (num % (2 * den) == 0).then(|| num / (2 * den))
    }
}

#[derive(Debug, Clone)]
pub struct SurfaceComplex {
    polygon: PolygonSpec,
    group: DihedralGroup,
    side_classes: Vec<u64>,
    copies: Vec<GroupElement>,
    pairs: Vec<(Edge, Edge)>,
    vertex_classes: Vec<VertexClass>,
}

impl SurfaceComplex {
    pub fn polygon(&self) -> &PolygonSpec {
        &self.polygon
    }

    pub fn n(&self) -> u64 {
        self.group.n()
    }

    pub fn group(&self) -> DihedralGroup {
        self.group
    }

    pub fn side_classes(&self) -> &[u64] {
        &self.side_classes
    }

    pub fn copies(&self) -> &[GroupElement] {
        &self.copies
    }

    /// Glued edge pairs, each with the smaller edge first, sorted.
    pub fn pairs(&self) -> &[(Edge, Edge)] {
        &self.pairs
    }

    pub fn vertex_classes(&self) -> &[VertexClass] {
        &self.vertex_classes
    }

    /// The edge glued to `(copy, side)`.
    pub fn partner(&self, (copy, side): Edge) -> Edge {
        let g = self.copies[copy];
        let r = self.group.reflection(self.side_classes[side]);
        (self.group.compose(g, r).position(self.n()), side)
    }

    pub fn to_record(&self) -> SurfaceRecord {
        let polygon = PolygonRecord {
            angles: self.polygon.angles_text(),
            label: self.polygon.label().map(str::to_owned),
        };
        let mut vertex_classes: Vec<VertexClassRecord> = self
            .vertex_classes
            .iter()
            .map(|c| VertexClassRecord {
                vertex: c.vertex,
                cone_angle_multiple_of_2pi: c.multiple_of_two_pi().unwrap_or(0),
                corner_count: c.corner_count(),
            })
            .collect();
        vertex_classes.sort();
        SurfaceRecord {
            polygon,
            n: self.n(),
            copy_count: self.copies.len(),
            pairs: self
                .pairs
                .iter()
                .map(|&(a, b)| [[a.0, a.1], [b.0, b.1]])
                .collect(),
            vertex_classes,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolygonRecord {
    /// Comma-separated angle fractions in units of π.
    pub angles: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct VertexClassRecord {
    pub vertex: usize,
    pub cone_angle_multiple_of_2pi: u64,
    pub corner_count: usize,
}

/// Serialized form of a [`SurfaceComplex`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceRecord {
    pub polygon: PolygonRecord,
    #[serde(rename = "N")]
    pub n: u64,
    pub copy_count: usize,
    pub pairs: Vec<[[usize; 2]; 2]>,
    pub vertex_classes: Vec<VertexClassRecord>,
}

/// Direction of each side in units of π/N, modulo N, with side 0 at 0.
pub fn side_direction_classes(p: &PolygonSpec) -> Result<Vec<u64>> {
    let n = strata::profile(p, 1)?.n();
    direction_classes(p, n)
}

fn direction_classes(p: &PolygonSpec, n: u64) -> Result<Vec<u64>> {
    // Side i-1 turns into side i at vertex i by the exterior angle π − α_i;
    // modulo π this is a turn by −α_i.
    let steps = p
        .angles()
        .iter()
        .map(|a| {
            if !n.is_multiple_of(a.denominator()) {
                return Err(Error::Consistency(format!(
                    "angle {a}·π is not a multiple of π/{n}"
                )));
            }
            Ok((a.numerator() % n) * (n / a.denominator()) % n)
        })
        .collect::<Result<Vec<u64>>>()?;
    let s = steps.len();
    let mut classes = Vec::with_capacity(s);
    let mut current = 0u64;
    classes.push(current);
    for step in &steps[1..] {
        current = (current + n - step) % n;
        classes.push(current);
    }
    if !(current + n - steps[0]).is_multiple_of(n) {
        return Err(Error::Consistency(format!(
            "side directions do not close up: last side at class {current}"
        )));
    }
    Ok(classes)
}

/// Closure of the side reflections under composition, in canonical order.
pub fn generate_reflection_group(p: &PolygonSpec) -> Result<Vec<GroupElement>> {
    let n = strata::profile(p, 1)?.n();
    let classes = direction_classes(p, n)?;
    closure(n, &classes)
}

fn closure(n: u64, side_classes: &[u64]) -> Result<Vec<GroupElement>> {
    let group = DihedralGroup::new(n);
    let generators: Vec<GroupElement> = side_classes.iter().map(|&j| group.reflection(j)).collect();
    let mut seen = HashSet::from([group.identity()]);
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(g) = queue.pop_front() {
        for &r in &generators {
            let h = group.compose(g, r);
            if seen.insert(h) {
                queue.push_back(h);
            }
        }
    }
    let mut elements: Vec<GroupElement> = seen.into_iter().collect();
    elements.sort_unstable();
    if elements.len() != group.order() {
        return Err(Error::Consistency(format!(
            "side reflections generate a group of order {}, expected 2N = {}",
            elements.len(),
            group.order()
        )));
    }
    Ok(elements)
}

/// Glues `2N` copies of `p` into its translation surface.
pub fn build_surface(p: &PolygonSpec) -> Result<SurfaceComplex> {
    let n = strata::profile(p, 1)?.n();
    let side_classes = direction_classes(p, n)?;
    let copies = closure(n, &side_classes)?;
    let group = DihedralGroup::new(n);
    let sides = p.sides();

    let mut surface = SurfaceComplex {
        polygon: p.clone(),
        group,
        side_classes,
        copies,
        pairs: Vec::new(),
        vertex_classes: Vec::new(),
    };

    let mut pairs = Vec::with_capacity(surface.copies.len() * sides / 2);
    for copy in 0..surface.copies.len() {
        for side in 0..sides {
            let here = (copy, side);
            let there = surface.partner(here);
            if there == here || surface.partner(there) != here {
                return Err(Error::Consistency(format!(
                    "gluing of edge {here:?} is not a fixed-point-free involution"
                )));
            }
            if here < there {
                pairs.push((here, there));
            }
        }
    }
    surface.pairs = pairs;
    surface.vertex_classes = trace_vertices(&surface);
    Ok(surface)
}

/// Walks counterclockwise around every vertex. Vertex `i` sits between
/// sides `i−1` and `i`; in a positively oriented copy the counterclockwise
/// turn leaves through side `i−1`, in a mirrored copy through side `i`.
fn trace_vertices(surface: &SurfaceComplex) -> Vec<VertexClass> {
    let sides = surface.polygon.sides();
    let copies = surface.copies.len();
    let mut visited = vec![false; copies * sides];
    let mut classes = Vec::new();
    for vertex in 0..sides {
        let before = (vertex + sides - 1) % sides;
        let angle = surface.polygon.angles()[vertex];
        for start in 0..copies {
            if visited[start * sides + vertex] {
                continue;
            }
            let mut corners = Vec::new();
            let mut copy = start;
            loop {
                visited[copy * sides + vertex] = true;
                corners.push(copy);
                let exit = if surface.copies[copy].det() > 0 {
                    before
                } else {
                    vertex
                };
                copy = surface.partner((copy, exit)).0;
                if copy == start {
                    break;
                }
            }
            let cone_angle = reduce(
                corners.len() as u64 * angle.numerator(),
                angle.denominator(),
            );
            classes.push(VertexClass {
                vertex,
                corners,
                cone_angle,
            });
        }
    }
    classes
}

/// Singularity profile read off the glued surface (k = 1).
pub fn cone_points(s: &SurfaceComplex) -> Result<SingularityProfile> {
    let mut by_vertex: BTreeMap<(usize, u64), u64> = BTreeMap::new();
    for class in &s.vertex_classes {
        let multiple = class
            .multiple_of_two_pi()
            .filter(|&m| m > 0)
            .ok_or_else(|| {
                Error::Consistency(format!(
                    "cone angle {}/{}·π at vertex {} is not a positive multiple of 2π",
                    class.cone_angle.0, class.cone_angle.1, class.vertex
                ))
            })?;
        *by_vertex.entry((class.vertex, multiple)).or_default() += 1;
    }
    let classes = by_vertex
        .into_iter()
        .map(|((vertex, multiplicity), count)| ConePointClass {
            vertex,
            multiplicity,
            count,
            order: multiplicity as i64 - 1,
        })
        .collect();
    SingularityProfile::new(1, s.n(), classes)
}

/// Cell counts of the glued surface and the genus they imply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EulerData {
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    pub genus: u64,
}

impl EulerData {
    pub fn characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

pub fn euler_genus(s: &SurfaceComplex) -> Result<EulerData> {
    let vertices = s.vertex_classes.len() as u64;
    let edges = s.pairs.len() as u64;
    let faces = s.copies.len() as u64;
    let chi = vertices as i64 - edges as i64 + faces as i64;
    if chi % 2 != 0 || chi > 2 {
        return Err(Error::Consistency(format!(
            "Euler characteristic {chi} of a closed orientable surface"
        )));
    }
    Ok(EulerData {
        vertices,
        edges,
        faces,
        genus: ((2 - chi) / 2) as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::{make_rectangle, make_regular, make_triangle};

    fn tri(a: i64, b: i64, c: i64) -> PolygonSpec {
        make_triangle(a, b, c).unwrap().to_polygon()
    }

    fn cone_multiset(s: &SurfaceComplex) -> Vec<(usize, u64)> {
        let mut v: Vec<_> = s
            .vertex_classes()
            .iter()
            .map(|c| (c.vertex, c.multiple_of_two_pi().unwrap()))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn side_directions() {
        assert_eq!(
            side_direction_classes(&tri(1, 1, 1)).unwrap(),
            vec![0, 2, 1]
        );
        let rect = make_rectangle(3.0, 1.0).unwrap();
        assert_eq!(side_direction_classes(&rect).unwrap(), vec![0, 1, 0, 1]);
        // side 0 is the hypotenuse (between the two π/4 corners)
        let c = side_direction_classes(&tri(1, 1, 2)).unwrap();
        assert_eq!(c, vec![0, 3, 1]);
        assert!(c.iter().all(|&j| j < 4));
        assert_ne!(c[0], c[1]);
        assert_ne!(c[0], c[2]);
    }

    #[test]
    fn group_orders() {
        let rect = make_rectangle(1.0, 1.0).unwrap();
        assert_eq!(generate_reflection_group(&rect).unwrap().len(), 4);
        assert_eq!(generate_reflection_group(&tri(1, 1, 1)).unwrap().len(), 6);
        assert_eq!(generate_reflection_group(&tri(1, 3, 4)).unwrap().len(), 16);
    }

    #[test]
    fn closure_detects_small_groups() {
        // two parallel side classes cannot generate all of D_4
        assert!(matches!(
            closure(4, &[0, 2, 0, 2]),
            Err(Error::Consistency(_))
        ));
    }

    #[test]
    fn equilateral_surface() {
        let s = build_surface(&tri(1, 1, 1)).unwrap();
        assert_eq!(s.copies().len(), 6);
        assert_eq!(s.pairs().len(), 9);
        assert_eq!(cone_multiset(&s), vec![(0, 1), (1, 1), (2, 1)]);
        let e = euler_genus(&s).unwrap();
        assert_eq!((e.vertices, e.edges, e.faces, e.genus), (3, 9, 6, 1));
        assert_eq!(cone_points(&s).unwrap().orders(), vec![0, 0, 0]);
    }

    #[test]
    fn t113_surface() {
        let s = build_surface(&tri(1, 1, 3)).unwrap();
        assert_eq!(s.copies().len(), 10);
        assert_eq!(s.pairs().len(), 15);
        assert_eq!(cone_multiset(&s), vec![(0, 1), (1, 1), (2, 3)]);
        let e = euler_genus(&s).unwrap();
        assert_eq!((e.vertices, e.edges, e.faces, e.genus), (3, 15, 10, 2));
    }

    #[test]
    fn rectangle_surface() {
        let s = build_surface(&make_rectangle(2.0, 1.0).unwrap()).unwrap();
        assert_eq!(s.copies().len(), 4);
        assert_eq!(s.pairs().len(), 8);
        assert_eq!(s.vertex_classes().len(), 4);
        assert!(s
            .vertex_classes()
            .iter()
            .all(|c| c.multiple_of_two_pi() == Some(1)));
        assert_eq!(euler_genus(&s).unwrap().genus, 1);
    }

    #[test]
    fn t234_and_hexagon() {
        let s = build_surface(&tri(2, 3, 4)).unwrap();
        assert_eq!(s.copies().len(), 18);
        let p = cone_points(&s).unwrap();
        assert_eq!(p.orders(), vec![0, 0, 0, 1, 3]);
        assert_eq!(p.genus(), 3);
        let e = euler_genus(&s).unwrap();
        assert_eq!((e.vertices, e.edges, e.faces, e.genus), (5, 27, 18, 3));

        let hex = build_surface(&make_regular(6).unwrap()).unwrap();
        let p = cone_points(&hex).unwrap();
        assert_eq!(p.orders(), vec![1; 6]);
        assert_eq!(p.genus(), 4);
        assert!(hex.vertex_classes().iter().all(|c| c.corner_count() == 6));
    }

    #[test]
    fn traversal_alternates_orientation() {
        let s = build_surface(&tri(1, 3, 4)).unwrap();
        for class in s.vertex_classes() {
            for w in class.corners.windows(2) {
                assert_ne!(s.copies()[w[0]].det(), s.copies()[w[1]].det());
            }
        }
    }

    #[test]
    fn record_is_canonical() {
        let s = build_surface(&tri(1, 1, 1)).unwrap();
        let json = serde_json::to_string(&s.to_record()).unwrap();
        assert!(json.starts_with(r#"{"polygon":{"angles":"1/3,1/3,1/3","label":"T(1,1,1)"},"N":3,"copy_count":6,"pairs":[[[0,0],[3,0]]"#));
        assert_eq!(
            json,
            serde_json::to_string(&build_surface(&tri(1, 1, 1)).unwrap().to_record()).unwrap()
        );
    }
}
