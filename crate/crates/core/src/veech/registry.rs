//! The theorem registry. Each rule looks at a normalized triangle and either
//! stays silent or returns a verdict; the lists of isolated triangles are
//! plain data so new results only extend the tables.

use super::{Arithmeticity, Classification, LatticeStatus, TheoremTag, TriangleGroupSpec};
use crate::error::{Error, Result};
use crate::polygon::{AngleKind, SymmetryKind, TriangleSpec};

use super::sharp_decompose;

pub const REGISTRY_VERSION: &str = "1.0.0";

/// Triangles whose unfolding is a flat torus.
const TORUS_TRIANGLES: [(u64, u64, u64); 3] = [(1, 1, 1), (1, 1, 2), (1, 2, 3)];

/// Acute scalene lattice triangles and the `m` of their group `△(m,∞,∞)`.
const ACUTE_EXCEPTIONAL: [((u64, u64, u64), u64); 3] =
    [((2, 3, 4), 9), ((3, 4, 5), 6), ((3, 5, 7), 15)];

/// Triangles individually shown not to have the lattice property.
const EXPLICIT_NON_LATTICE: [(u64, u64, u64); 2] = [(1, 3, 8), (2, 3, 7)];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub status: LatticeStatus,
    pub group: Option<TriangleGroupSpec>,
    pub torus: bool,
}

impl Verdict {
    fn lattice(group: Option<TriangleGroupSpec>) -> Self {
        Verdict {
            status: LatticeStatus::Lattice,
            group,
            torus: false,
        }
    }

    fn non_lattice() -> Self {
        Verdict {
            status: LatticeStatus::NonLattice,
            group: None,
            torus: false,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Rule {
    pub tag: TheoremTag,
    /// `None` when the rule does not apply to the triangle.
    pub decide: fn(&TriangleSpec) -> Option<Verdict>,
}

#[derive(Debug, Clone, Copy)]
pub struct Registry {
    pub version: &'static str,
    pub rules: &'static [Rule],
}

pub static REGISTRY: Registry = Registry {
    version: REGISTRY_VERSION,
    rules: &[
        Rule {
            tag: TheoremTag::Arithmetic,
            decide: arithmetic,
        },
        Rule {
            tag: TheoremTag::RightTriangle,
            decide: right_triangle,
        },
        Rule {
            tag: TheoremTag::AcuteIsosceles,
            decide: acute_isosceles,
        },
        Rule {
            tag: TheoremTag::AcuteScaleneExceptional,
            decide: acute_scalene,
        },
        Rule {
            tag: TheoremTag::ObtuseIsosceles,
            decide: obtuse_isosceles,
        },
        Rule {
            tag: TheoremTag::SharpCriterion,
            decide: sharp_criterion,
        },
        Rule {
            tag: TheoremTag::VorobetsWardFamily,
            decide: vorobets_ward_family,
        },
        Rule {
            tag: TheoremTag::ExplicitNonLattice,
            decide: explicit_non_lattice,
        },
    ],
};

impl Registry {
    /// Runs every rule and merges the verdicts, failing if two disagree.
    pub fn classify(&self, t: &TriangleSpec) -> Result<Classification> {
        let fired: Vec<(TheoremTag, Verdict)> = self
            .rules
            .iter()
            .filter_map(|rule| (rule.decide)(t).map(|v| (rule.tag, v)))
            .collect();
        let Some(&(_, first)) = fired.first() else {
            return Ok(Classification::unknown());
        };
        let mut group = None;
        let mut torus = false;
        for &(tag, v) in &fired {
            if v.status != first.status {
                return Err(Error::Consistency(format!(
                    "{t}: {tag} says {} but {} says {}",
                    v.status, fired[0].0, first.status
                )));
            }
            if let Some(g) = v.group {
                match group {
                    Some(prev) if prev != g => {
                        return Err(Error::Consistency(format!(
                            "{t}: {tag} gives {g} but an earlier rule gave {prev}"
                        )));
                    }
                    _ => group = Some(g),
                }
            }
            torus |= v.torus;
        }
        let mut theorem_tags: Vec<TheoremTag> = fired.iter().map(|&(tag, _)| tag).collect();
        theorem_tags.sort_unstable();
        Classification {
            status: first.status,
            veech_group: group,
            ambient_group: None,
            index: None,
            torus,
            arithmetic: if torus {
                Arithmeticity::Yes
            } else {
                Arithmeticity::NotComputed
            },
            theorem_tags,
        }
        .check()
    }
}

fn triple(t: &TriangleSpec) -> (u64, u64, u64) {
    (t.a(), t.b(), t.c())
}

fn is_torus(t: &TriangleSpec) -> bool {
    TORUS_TRIANGLES.contains(&triple(t))
}

/// Group for the right-triangle and obtuse-isosceles series with smallest
/// angle π/n: `△(2,n,∞)` for odd n, `△(n/2,∞,∞)` for even n.
fn series_group(n: u64) -> Option<TriangleGroupSpec> {
    match n {
        _ if n < 5 => None,
        _ if n % 2 == 1 => Some(TriangleGroupSpec::finite(2, n)),
        _ => Some(TriangleGroupSpec::cusped(n / 2)),
    }
}

fn arithmetic(t: &TriangleSpec) -> Option<Verdict> {
    is_torus(t).then(|| Verdict {
        status: LatticeStatus::Lattice,
        group: Some(TriangleGroupSpec::modular()),
        torus: true,
    })
}

fn right_triangle(t: &TriangleSpec) -> Option<Verdict> {
    if t.shape().angle_kind != AngleKind::Right || is_torus(t) {
        return None;
    }
    let (a, d) = (t.a(), t.d());
    if d % a == 0 && d / a >= 4 {
        Some(Verdict::lattice(series_group(d / a)))
    } else {
        Some(Verdict::non_lattice())
    }
}

fn acute_isosceles(t: &TriangleSpec) -> Option<Verdict> {
    let shape = t.shape();
    if shape.angle_kind != AngleKind::Acute || shape.symmetry_kind != SymmetryKind::Isosceles {
        return None;
    }
    let apex = if t.a() == t.b() { t.c() } else { t.a() };
    let d = t.d();
    if d.is_multiple_of(apex) && d / apex >= 3 {
        let n = d / apex;
        Some(Verdict::lattice(
            (n >= 4).then(|| TriangleGroupSpec::cusped(n)),
        ))
    } else {
        Some(Verdict::non_lattice())
    }
}

fn acute_scalene(t: &TriangleSpec) -> Option<Verdict> {
    let shape = t.shape();
    if shape.angle_kind != AngleKind::Acute || shape.symmetry_kind != SymmetryKind::Scalene {
        return None;
    }
    Some(
        match ACUTE_EXCEPTIONAL.iter().find(|(abc, _)| *abc == triple(t)) {
            Some(&(_, m)) => Verdict::lattice(Some(TriangleGroupSpec::cusped(m))),
            None => Verdict::non_lattice(),
        },
    )
}

fn obtuse_isosceles(t: &TriangleSpec) -> Option<Verdict> {
    let (a, d) = (t.a(), t.d());
    let applies =
        t.shape().angle_kind == AngleKind::Obtuse && a == t.b() && d % a == 0 && d / a >= 5;
    applies.then(|| Verdict::lattice(series_group(d / a)))
}

fn sharp_criterion(t: &TriangleSpec) -> Option<Verdict> {
    let form = sharp_decompose(t).filter(|f| f.applicable)?;
    Some(if form.p == 1 {
        Verdict::lattice(None)
    } else {
        Verdict::non_lattice()
    })
}

/// `(π/2n, π/n, (2n−3)π/2n)` for `n ≥ 4`, i.e. `T(1,2,2n−3)`.
fn vorobets_ward_family(t: &TriangleSpec) -> Option<Verdict> {
    let d = t.d();
    let applies = t.a() == 1 && t.b() == 2 && d.is_multiple_of(2) && d / 2 >= 4;
    applies.then(|| Verdict::lattice(Some(TriangleGroupSpec::finite(3, d / 2))))
}

fn explicit_non_lattice(t: &TriangleSpec) -> Option<Verdict> {
    EXPLICIT_NON_LATTICE
        .contains(&triple(t))
        .then(Verdict::non_lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::make_triangle;

    fn classify(a: i64, b: i64, c: i64) -> Classification {
        REGISTRY.classify(&make_triangle(a, b, c).unwrap()).unwrap()
    }

    fn group(c: &Classification) -> String {
        c.veech_group.map(|g| g.to_string()).unwrap_or_default()
    }

    #[test]
    fn torus_cases() {
        for (a, b, c) in TORUS_TRIANGLES {
            let cl = classify(a as i64, b as i64, c as i64);
            assert_eq!(cl.status, LatticeStatus::Lattice);
            assert!(cl.torus);
            assert_eq!(cl.arithmetic, Arithmeticity::Yes);
            assert_eq!(group(&cl), "D(2,3,inf)");
        }
        assert_eq!(
            classify(1, 1, 2).theorem_tags,
            vec![TheoremTag::Arithmetic, TheoremTag::SharpCriterion]
        );
    }

    #[test]
    fn right_triangles() {
        assert_eq!(group(&classify(2, 7, 9)), "D(2,9,inf)");
        assert_eq!(group(&classify(1, 4, 5)), "D(5,inf,inf)");
        assert_eq!(group(&classify(2, 3, 5)), "D(2,5,inf)");
        assert_eq!(group(&classify(1, 3, 4)), "D(4,inf,inf)");
        assert_eq!(classify(3, 5, 8).status, LatticeStatus::NonLattice);
    }

    #[test]
    fn acute_triangles() {
        assert_eq!(group(&classify(1, 3, 3)), "D(7,inf,inf)");
        assert_eq!(classify(3, 4, 4).status, LatticeStatus::NonLattice);
        assert_eq!(group(&classify(2, 3, 4)), "D(9,inf,inf)");
        assert_eq!(group(&classify(3, 4, 5)), "D(6,inf,inf)");
        assert_eq!(group(&classify(3, 5, 7)), "D(15,inf,inf)");
        assert_eq!(classify(4, 5, 6).status, LatticeStatus::NonLattice);
    }

    #[test]
    fn obtuse_triangles() {
        assert_eq!(group(&classify(1, 1, 3)), "D(2,5,inf)");
        assert_eq!(group(&classify(1, 1, 4)), "D(3,inf,inf)");
        assert_eq!(group(&classify(1, 2, 5)), "D(3,4,inf)");
        assert_eq!(group(&classify(1, 2, 7)), "D(3,5,inf)");
        let c = classify(1, 3, 8);
        assert_eq!(c.status, LatticeStatus::NonLattice);
        assert_eq!(
            c.theorem_tags,
            vec![TheoremTag::SharpCriterion, TheoremTag::ExplicitNonLattice]
        );
        assert_eq!(classify(2, 3, 7).status, LatticeStatus::NonLattice);
        let c = classify(2, 2, 5);
        assert_eq!(c, Classification::unknown());
    }

    #[test]
    fn disagreeing_rules_are_reported() {
        fn always_non_lattice(_: &TriangleSpec) -> Option<Verdict> {
            Some(Verdict::non_lattice())
        }
        static BROKEN: Registry = Registry {
            version: "test",
            rules: &[
                Rule {
                    tag: TheoremTag::Arithmetic,
                    decide: arithmetic,
                },
                Rule {
                    tag: TheoremTag::ExplicitNonLattice,
                    decide: always_non_lattice,
                },
            ],
        };
        let err = BROKEN
            .classify(&make_triangle(1, 1, 1).unwrap())
            .unwrap_err();
        assert!(err.is_internal());
    }
}
