//! Finite groups as multiplication tables (identity element `0`).

use crate::core::groupoid::{FiniteGroupoid, Verdict};

/// A finite group given by its multiplication table `mul[a][b] = a·b`,
/// with the identity at index `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub mul: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup { mul }
    }

    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1)
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (n, m) = (a.order(), b.order());
        let mul = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| a.mul[x / m][y / m] * m + b.mul[x % m][y % m])
                    .collect()
            })
            .collect();
        FiniteGroup { mul }
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul[a][b] == 0).expect("group inverse")
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// Group axioms: identity at 0, associativity, inverses.
    pub fn validate(&self) -> Verdict {
        let n = self.order();
        for (a, row) in self.mul.iter().enumerate() {
            if row.len() != n {
                return Verdict::fail("group-table-shape", &[a]);
            }
            for &v in row {
                if v >= n {
                    return Verdict::fail("group-table-range", &[a, v]);
                }
            }
        }
        for a in 0..n {
            if self.mul[0][a] != a || self.mul[a][0] != a {
                return Verdict::fail("group-identity", &[a]);
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]] {
                        return Verdict::fail("group-associativity", &[a, b, c]);
                    }
                }
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| self.mul[a][b] == 0 && self.mul[b][a] == 0) {
                return Verdict::fail("group-inverse", &[a]);
            }
        }
        Verdict::pass()
    }

    /// The one-object groupoid with this automorphism group.
    pub fn delooping(&self) -> FiniteGroupoid {
        FiniteGroupoid::delooping(&self.mul)
    }

    /// A group homomorphism check for a table `phi : self → other`.
    pub fn is_homomorphism(&self, other: &FiniteGroup, phi: &[usize]) -> Verdict {
        if phi.len() != self.order() {
            return Verdict::fail("hom-table-shape", &[phi.len()]);
        }
        for &v in phi {
            if v >= other.order() {
                return Verdict::fail("hom-table-range", &[v]);
            }
        }
        if phi[0] != 0 {
            return Verdict::fail("hom-identity", &[phi[0]]);
        }
        for a in 0..self.order() {
            for b in 0..self.order() {
                if phi[self.mul[a][b]] != other.mul[phi[a]][phi[b]] {
                    return Verdict::fail("hom-multiplicative", &[a, b]);
                }
            }
        }
        Verdict::pass()
    }
}
