//! Fixtures shared by the benchmarks.

use billiard_core::{make_regular, make_triangle, PolygonSpec, TriangleSpec};

/// Triangles with growing unfolding size, labelled for benchmark ids.
pub fn triangle_fixtures() -> Vec<(&'static str, TriangleSpec)> {
    [
        ("T(1,1,2)", (1, 1, 2)),
        ("T(3,5,7)", (3, 5, 7)),
        ("T(2,9,29)", (2, 9, 29)),
        ("T(13,31,57)", (13, 31, 57)),
    ]
    .into_iter()
    .map(|(name, (a, b, c))| (name, make_triangle(a, b, c).expect("valid fixture")))
    .collect()
}

/// Triangles plus a few regular polygons, as generic polygons.
pub fn polygon_fixtures() -> Vec<(String, PolygonSpec)> {
    triangle_fixtures()
        .into_iter()
        .map(|(name, t)| (name.to_owned(), t.to_polygon()))
        .chain([5, 8, 12].into_iter().map(|n| {
            (
                format!("regular-{n}"),
                make_regular(n).expect("valid fixture"),
            )
        }))
        .collect()
}
