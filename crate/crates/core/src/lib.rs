//! Exact unfolding of rational billiard tables.
//!
//! A rational polygon unfolds into a flat surface tiled by copies of itself.
//! This crate computes the singularity data of those surfaces in two
//! independent ways ([`strata`] from the angles, [`unfold`] from an explicit
//! gluing), relates the translation and half-translation constructions, and
//! decides the lattice property for triangles and regular polygons from the
//! known classification results ([`veech`]).
//!
//! All combinatorial arithmetic is exact; floating point appears only in
//! [`unfold::realize`] for drawing.

mod arith;
pub mod error;
pub mod polygon;
pub mod strata;
pub mod tables;
pub mod unfold;
pub mod veech;

pub use error::{Error, Result};
pub use polygon::{
    angles_in_unit, make_rectangle, make_regular, make_triangle, triangle_shape, validate_polygon,
    AngleKind, PolygonSpec, RationalAngle, ShapeClass, SymmetryKind, TriangleSpec,
};
pub use strata::{
    compare_constructions, genus_from_orders, genus_of, minimal_unit, profile, strip_removable,
    ConePointClass, ConstructionRelation, RelationVariant, SingularityProfile,
};
pub use tables::{build_table, enumerate_triangles, TableRow};
pub use unfold::{
    build_surface, cone_points, euler_genus, generate_reflection_group, realize,
    side_direction_classes, EulerData, GroupElement, SurfaceComplex,
};
pub use veech::{
    classify_regular, classify_triangle, dedekind_omega, regular_ngon_index, sharp_decompose,
    Classification, LatticeStatus, SharpForm, TheoremTag, TriangleGroupSpec, REGISTRY_VERSION,
};

/// Version of this crate.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
