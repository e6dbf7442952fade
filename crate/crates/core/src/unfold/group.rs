//! The dihedral group of order `2N` generated by reflections in lines whose
//! directions are multiples of π/N.

use std::fmt;

/// A linear isometry of the plane preserving the set of directions `jπ/N`.
///
/// `Rotation(r)` rotates by `2πr/N`; `Reflection(j)` reflects across the line
/// at angle `jπ/N`. The derived ordering (rotations by index, then
/// reflections by index) is the canonical copy order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Rotation(u64),
    Reflection(u64),
}

impl GroupElement {
    pub fn det(&self) -> i8 {
        match self {
            GroupElement::Rotation(_) => 1,
            GroupElement::Reflection(_) => -1,
        }
    }

    pub fn index(&self) -> u64 {
        match *self {
            GroupElement::Rotation(i) | GroupElement::Reflection(i) => i,
        }
    }

    /// Position in the canonical order of a group of order `2n`.
    pub fn position(&self, n: u64) -> usize {
        match *self {
            GroupElement::Rotation(r) => r as usize,
            GroupElement::Reflection(j) => (n + j) as usize,
        }
    }

    /// Column-major 2×2 matrix of the element in a group of order `2n`.
    pub fn matrix(&self, n: u64) -> [[f64; 2]; 2] {
        use std::f64::consts::PI;
        match *self {
            GroupElement::Rotation(r) => {
                let t = 2.0 * PI * r as f64 / n as f64;
                [[t.cos(), t.sin()], [-t.sin(), t.cos()]]
            }
            GroupElement::Reflection(j) => {
                let t = 2.0 * PI * j as f64 / n as f64;
                [[t.cos(), t.sin()], [t.sin(), -t.cos()]]
            }
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Rotation(r) => write!(f, "rot{r}"),
            GroupElement::Reflection(j) => write!(f, "refl{j}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DihedralGroup {
    n: u64,
}

impl DihedralGroup {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1, "dihedral group needs N ≥ 1");
        DihedralGroup { n }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn order(&self) -> usize {
        2 * self.n as usize
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::Rotation(0)
    }

    pub fn reflection(&self, j: u64) -> GroupElement {
        GroupElement::Reflection(j % self.n)
    }

    /// `lhs ∘ rhs`: apply `rhs` first.
    pub fn compose(&self, lhs: GroupElement, rhs: GroupElement) -> GroupElement {
        use GroupElement::*;
        let n = self.n;
        match (lhs, rhs) {
            (Rotation(r), Rotation(s)) => Rotation((r + s) % n),
            (Rotation(r), Reflection(j)) => Reflection((j + r) % n),
            (Reflection(j), Rotation(r)) => Reflection((j + n - r) % n),
            (Reflection(j), Reflection(i)) => Rotation((j + n - i) % n),
        }
    }

    pub fn is_involution(&self, g: GroupElement) -> bool {
        match g {
            GroupElement::Reflection(_) => true,
            GroupElement::Rotation(r) => r == 0 || 2 * r == self.n,
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.n)
            .map(GroupElement::Rotation)
            .chain((0..self.n).map(GroupElement::Reflection))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
        // column-major: m[col][row]
        let mut out = [[0.0; 2]; 2];
        for col in 0..2 {
            for row in 0..2 {
                out[col][row] = a[0][row] * b[col][0] + a[1][row] * b[col][1];
            }
        }
        out
    }

    fn close(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> bool {
        a.iter()
            .flatten()
            .zip(b.iter().flatten())
            .all(|(x, y)| (x - y).abs() < 1e-12)
    }

    #[test]
    fn composition_table_matches_matrices() {
        for n in 1..=12 {
            let g = DihedralGroup::new(n);
            for &a in &g.elements() {
                for &b in &g.elements() {
                    let c = g.compose(a, b);
                    assert!(
                        close(c.matrix(n), mul(a.matrix(n), b.matrix(n))),
                        "N={n}: {a} ∘ {b} = {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn involutions() {
        let g = DihedralGroup::new(6);
        let invs: Vec<_> = g
            .elements()
            .into_iter()
            .filter(|&e| g.is_involution(e))
            .collect();
        assert_eq!(invs.len(), 2 + 6);
        for e in invs {
            assert_eq!(g.compose(e, e), g.identity());
        }
    }

    #[test]
    fn canonical_positions() {
        let g = DihedralGroup::new(5);
        for (i, e) in g.elements().iter().enumerate() {
            assert_eq!(e.position(5), i);
        }
    }
}
