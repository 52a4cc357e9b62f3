//! The linear matroid on the lines of a root system.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::roots::{Lines, RootSystem};
use crate::scalar::{primitive_integer_vector, QuadExt, Rational};

mod classical;
pub mod elim;

pub use classical::classical_circuits;

/// Default node budget for circuit enumeration.
pub const DEFAULT_CIRCUIT_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug)]
enum Ground {
    /// Rational vectors, kept alongside primitive integer rows for Bareiss.
    Rational {
        vectors: Vec<Vec<Rational>>,
        rows: Vec<Vec<BigInt>>,
    },
    /// Vectors over Q(√5) with, per vector, the integer rows of v and √5·v
    /// written in rational coordinates (a-parts then b-parts). The Q(√5)-span
    /// of a set equals the Q-span of those rows, so ranks halve.
    Quad {
        vectors: Vec<Vec<QuadExt>>,
        rows: Vec<[Vec<BigInt>; 2]>,
    },
    /// Uniform matroid of the given rank.
    Uniform { rank: usize },
}

#[derive(Clone, Debug)]
pub struct LinearMatroid {
    ground_size: usize,
    ground: Ground,
}

/// A minimal dependent set, elements strictly increasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Circuit(Vec<usize>);

impl Circuit {
    /// Sorts and deduplicates the given elements.
    pub fn new(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Circuit(elements)
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl LinearMatroid {
    pub fn from_rational(vectors: Vec<Vec<Rational>>) -> Self {
        let rows = vectors
            .iter()
            .map(|v| primitive_integer_vector(v))
            .collect();
        LinearMatroid {
            ground_size: vectors.len(),
            ground: Ground::Rational { vectors, rows },
        }
    }

    pub fn from_quad(vectors: Vec<Vec<QuadExt>>) -> Self {
        let rows = vectors
            .iter()
            .map(|v| {
                let flat: Vec<Rational> = v
                    .iter()
                    .map(|x| x.a.clone())
                    .chain(v.iter().map(|x| x.b.clone()))
                    .collect();
                // √5·(a + b√5) = 5b + a√5
                let five = Rational::from_int(5);
                let scaled: Vec<Rational> = v
                    .iter()
                    .map(|x| five.clone() * &x.b)
                    .chain(v.iter().map(|x| x.a.clone()))
                    .collect();
                [
                    primitive_integer_vector(&flat),
                    primitive_integer_vector(&scaled),
                ]
            })
            .collect();
        LinearMatroid {
            ground_size: vectors.len(),
            ground: Ground::Quad { vectors, rows },
        }
    }

    /// The uniform matroid U_{rank, size}.
    pub fn uniform(rank: usize, size: usize) -> Self {
        LinearMatroid {
            ground_size: size,
            ground: Ground::Uniform { rank },
        }
    }

    /// M(R): the lines of `system`; I₂(m) becomes U_{2,m}.
    pub fn from_system(system: &RootSystem) -> Self {
        match system.lines() {
            Lines::Rational(v) => LinearMatroid::from_rational(v.clone()),
            Lines::Quad(v) => LinearMatroid::from_quad(v.clone()),
            Lines::Planar(m) => LinearMatroid::uniform(2, *m),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn is_uniform(&self) -> bool {
        matches!(self.ground, Ground::Uniform { .. })
    }

    pub fn quad_vectors(&self) -> Option<&[Vec<QuadExt>]> {
        match &self.ground {
            Ground::Quad { vectors, .. } => Some(vectors),
            _ => None,
        }
    }

    pub fn rational_vectors(&self) -> Option<&[Vec<Rational>]> {
        match &self.ground {
            Ground::Rational { vectors, .. } => Some(vectors),
            _ => None,
        }
    }

    /// Rank of a subset. Panics if an index is out of range.
    pub fn rank(&self, subset: &[usize]) -> usize {
        for &i in subset {
            assert!(i < self.ground_size, "element {i} out of range");
        }
        match &self.ground {
            Ground::Rational { rows, .. } => {
                elim::bareiss_rank(subset.iter().map(|&i| rows[i].clone()).collect())
            }
            Ground::Quad { rows, .. } => {
                elim::bareiss_rank(subset.iter().flat_map(|&i| rows[i].clone()).collect()) / 2
            }
            Ground::Uniform { rank } => {
                let mut s = subset.to_vec();
                s.sort_unstable();
                s.dedup();
                s.len().min(*rank)
            }
        }
    }

    pub fn full_rank(&self) -> usize {
        let all: Vec<usize> = (0..self.ground_size).collect();
        self.rank(&all)
    }

    pub fn is_independent(&self, subset: &[usize]) -> bool {
        self.rank(subset) == subset.len()
    }

    /// Dependent with every single-element deletion independent.
    pub fn is_circuit(&self, subset: &[usize]) -> bool {
        let k = subset.len();
        if k == 0 || self.rank(subset) != k - 1 {
            return false;
        }
        (0..k).all(|skip| {
            let rest: Vec<usize> = subset
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != skip)
                .map(|(_, &x)| x)
                .collect();
            self.rank(&rest) == k - 1
        })
    }

    /// All 3-element circuits, lexicographically sorted.
    pub fn circuits3(&self) -> Vec<Circuit> {
        let n = self.ground_size;
        let loops: Vec<bool> = (0..n).map(|i| self.rank(&[i]) == 0).collect();
        let mut indep2 = alloc::vec![false; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let ok = !loops[i] && !loops[j] && self.rank(&[i, j]) == 2;
                indep2[i * n + j] = ok;
            }
        }
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !indep2[i * n + j] {
                    continue;
                }
                for k in j + 1..n {
                    if indep2[i * n + k] && indep2[j * n + k] && self.rank(&[i, j, k]) == 2 {
                        out.push(Circuit(alloc::vec![i, j, k]));
                    }
                }
            }
        }
        out
    }

    /// Every circuit of order at most `kmax` (capped at rank + 1), found by
    /// extending independent sets in increasing index order.
    pub fn all_circuits_upto(&self, kmax: usize, budget: u64) -> Result<Vec<Circuit>> {
        let kmax = kmax.min(self.full_rank() + 1);
        let mut out = Vec::new();
        let mut nodes = 0u64;
        let mut current = Vec::new();
        self.extend_independent(&mut current, kmax, budget, &mut nodes, &mut out)?;
        out.sort();
        Ok(out)
    }

    fn extend_independent(
        &self,
        current: &mut Vec<usize>,
        kmax: usize,
        budget: u64,
        nodes: &mut u64,
        out: &mut Vec<Circuit>,
    ) -> Result<()> {
        let start = current.last().map_or(0, |&x| x + 1);
        for x in start..self.ground_size {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::BudgetExceeded {
                    what: "circuit enumeration",
                    limit: budget,
                });
            }
            current.push(x);
            if self.is_independent(current) {
                if current.len() < kmax {
                    self.extend_independent(current, kmax, budget, nodes, out)?;
                }
            } else if self.is_circuit(current) {
                out.push(Circuit(current.clone()));
            }
            current.pop();
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootSystem;

    fn m(id: &str) -> LinearMatroid {
        LinearMatroid::from_system(&id.parse::<RootSystem>().unwrap())
    }

    fn circuit(v: &[usize]) -> Circuit {
        Circuit::new(v.to_vec())
    }

    #[test]
    fn ranks_in_a3() {
        // A3 lines: 0:e0-e1 1:e0-e2 2:e0-e3 3:e1-e2 4:e1-e3 5:e2-e3
        let a3 = m("A3");
        assert_eq!(a3.rank(&[]), 0);
        assert_eq!(a3.full_rank(), 3);
        assert_eq!(a3.rank(&[0, 3, 1]), 2);
        assert!(a3.is_circuit(&[0, 1, 3]));
    }

    #[test]
    fn b2_circuits_and_independence() {
        // B2 lines: 0:e0 1:e1 2:e0-e1 3:e0+e1
        let b2 = m("B2");
        assert!(b2.is_circuit(&[0, 1, 3]));
        assert!(b2.is_independent(&[0, 1]));
        assert!(!b2.is_circuit(&[0, 1]));
        assert_eq!(b2.circuits3().len(), 4);
        assert_eq!(
            b2.all_circuits_upto(3, DEFAULT_CIRCUIT_BUDGET).unwrap(),
            b2.circuits3()
        );
    }

    #[test]
    fn four_cycle_in_a4() {
        let s: RootSystem = "A4".parse().unwrap();
        let mat = LinearMatroid::from_system(&s);
        let e = |i: usize, j: usize| {
            let mut v = alloc::vec![Rational::from_int(0); 5];
            v[i] = Rational::from_int(1);
            v[j] = Rational::from_int(-1);
            s.find_line(&v).unwrap()
        };
        let c = [e(0, 1), e(1, 2), e(2, 3), e(0, 3)];
        assert!(mat.is_circuit(&c));
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn a3_circuit_counts() {
        let a3 = m("A3");
        let c3 = a3.circuits3();
        assert_eq!(c3.len(), 4);
        let all = a3.all_circuits_upto(4, DEFAULT_CIRCUIT_BUDGET).unwrap();
        assert_eq!(all.len(), 7);
        assert_eq!(all.iter().filter(|c| c.order() == 4).count(), 3);
        assert!(c3.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn uniform_matroid() {
        let u = m("I2_6");
        assert!(u.is_uniform());
        assert_eq!(u.rank(&[0, 1, 2, 3]), 2);
        assert_eq!(u.circuits3().len(), 20);
        assert!(u.is_circuit(&[1, 3, 5]));
        assert!(!u.is_circuit(&[1, 3, 4, 5]));
    }

    #[test]
    fn budget_is_enforced() {
        let d5 = m("D5");
        assert!(matches!(
            d5.all_circuits_upto(6, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn circuit_display_and_sorting() {
        assert_eq!(circuit(&[5, 1, 3]).elements(), &[1, 3, 5]);
        assert_eq!(alloc::format!("{}", circuit(&[2, 0])), "{0,2}");
    }

    #[test]
    fn quad_rank_matches_field_elimination() {
        let h3 = m("H3");
        let vs = h3.quad_vectors().unwrap();
        for i in 0..15 {
            for j in i + 1..15 {
                for k in j + 1..15 {
                    let direct =
                        elim::field_rank(alloc::vec![vs[i].clone(), vs[j].clone(), vs[k].clone()]);
                    assert_eq!(h3.rank(&[i, j, k]), direct, "{i} {j} {k}");
                }
            }
        }
    }

    #[test]
    fn quad_ranks() {
        let h3 = m("H3");
        assert_eq!(h3.full_rank(), 3);
        let h4 = m("H4");
        assert_eq!(h4.full_rank(), 4);
    }
}
