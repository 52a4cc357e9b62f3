//! Permutation groups via a deterministic Schreier–Sims construction.
//!
//! Base points are chosen as the smallest point moved by the element that
//! forces a new level, so the base and strong generating set depend only on
//! the generator list. Orders are exact big integers.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    /// Indices into `strong_gens` of the generators of this stabilizer.
    gens: Vec<usize>,
    orbit: Vec<usize>,
    /// For each orbit point β: (u, u⁻¹) with u mapping the base point to β.
    transversal: Vec<Option<(Perm, Perm)>>,
    /// Schreier generators already shown to lie in the next stabilizer.
    checked: BTreeSet<(usize, usize)>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut transversal = alloc::vec![None; degree];
        transversal[point] = Some((Perm::identity(degree), Perm::identity(degree)));
        Level {
            point,
            gens: Vec::new(),
            orbit: alloc::vec![point],
            transversal,
            checked: BTreeSet::new(),
        }
    }

    /// Extends orbit and transversal after `gens` grew; existing
    /// transversal elements are kept.
    fn close_orbit(&mut self, strong: &[Perm]) {
        let mut k = 0;
        let mut queue: Vec<usize> = self.orbit.clone();
        while k < queue.len() {
            let gamma = queue[k];
            k += 1;
            for &s in &self.gens {
                let img = strong[s].apply(gamma);
                if self.transversal[img].is_none() {
                    let u = self.transversal[gamma]
                        .as_ref()
                        .expect("orbit point")
                        .0
                        .then(&strong[s]);
                    let uinv = u.inverse();
                    self.transversal[img] = Some((u, uinv));
                    self.orbit.push(img);
                    queue.push(img);
                }
            }
        }
    }
}

/// A permutation group with a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    strong_gens: Vec<Perm>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            strong_gens: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Runs Schreier–Sims on the given generators.
    pub fn from_generators(degree: usize, generators: &[Perm]) -> Result<Self> {
        let mut group = PermGroup::trivial(degree);
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        for g in generators {
            if !group.contains_unchecked(g) {
                group.extend(g.clone());
            }
        }
        group.generators = generators.to_vec();
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The generators the group was built from, as given.
    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong_gens
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Sifts `g` through the stabilizer chain. Returns the residue and the
    /// number of levels passed.
    fn strip(&self, g: &Perm) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate() {
            let beta = h.apply(level.point);
            match &level.transversal[beta] {
                Some((_, uinv)) => h = h.then(uinv),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    fn contains_unchecked(&self, g: &Perm) -> bool {
        let (h, j) = self.strip(g);
        j == self.levels.len() && h.is_identity()
    }

    pub fn contains(&self, g: &Perm) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        Ok(self.contains_unchecked(g))
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: other.degree,
                found: self.degree,
            });
        }
        Ok(self.strong_gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// Equality by order comparison and mutual inclusion.
    pub fn equals(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        if self.order() != other.order() {
            return Ok(false);
        }
        Ok(self.is_subgroup_of(other)? && other.is_subgroup_of(self)?)
    }

    /// Orbits of the whole group on points, each sorted, listed by smallest
    /// point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = alloc::vec![start];
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                k += 1;
                for g in &self.strong_gens {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    fn push_level(&mut self, point: usize) {
        self.levels.push(Level::new(point, self.degree));
    }

    fn add_strong(&mut self, h: Perm, levels: core::ops::RangeInclusive<usize>) {
        let idx = self.strong_gens.len();
        self.strong_gens.push(h);
        for l in levels {
            self.levels[l].gens.push(idx);
            let (strong, level) = (&self.strong_gens, &mut self.levels[l]);
            level.close_orbit(strong);
        }
    }

    /// Adds a non-member `g` and restores the BSGS property.
    fn extend(&mut self, g: Perm) {
        let base = self.base();
        let top = match base.iter().position(|&b| g.apply(b) != b) {
            Some(t) => t,
            None => {
                let p = g.first_moved_point().expect("non-identity");
                self.push_level(p);
                self.levels.len() - 1
            }
        };
        self.add_strong(g, 0..=top);

        let mut i = top as isize;
        while i >= 0 {
            let level_idx = i as usize;
            match self.find_unsifted_schreier(level_idx) {
                None => i -= 1,
                Some((h, j)) => {
                    let depth = if j < self.levels.len() {
                        j
                    } else {
                        let p = h.first_moved_point().expect("non-identity residue");
                        self.push_level(p);
                        self.levels.len() - 1
                    };
                    self.add_strong(h, level_idx + 1..=depth);
                    i = depth as isize;
                }
            }
        }
    }

    /// Checks Schreier generators at `level`, returning the first residue that
    /// does not sift through the deeper levels.
    fn find_unsifted_schreier(&mut self, level: usize) -> Option<(Perm, usize)> {
        let mut k = 0;
        while k < self.levels[level].orbit.len() {
            let gamma = self.levels[level].orbit[k];
            k += 1;
            for gi in 0..self.levels[level].gens.len() {
                let s = self.levels[level].gens[gi];
                if self.levels[level].checked.contains(&(gamma, s)) {
                    continue;
                }
                let lv = &self.levels[level];
                let img = self.strong_gens[s].apply(gamma);
                let u = &lv.transversal[gamma].as_ref().expect("orbit point").0;
                let vinv = &lv.transversal[img].as_ref().expect("orbit point").1;
                let schreier = u.then(&self.strong_gens[s]).then(vinv);
                if !schreier.is_identity() {
                    let (h, j) = self.strip_from(&schreier, level + 1);
                    if j < self.levels.len() || !h.is_identity() {
                        return Some((h, j));
                    }
                }
                self.levels[level].checked.insert((gamma, s));
            }
        }
        None
    }

    fn strip_from(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for i in start..self.levels.len() {
            let level = &self.levels[i];
            let beta = h.apply(level.point);
            match &level.transversal[beta] {
                Some((_, uinv)) => h = h.then(uinv),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symmetric_gens(n: usize) -> Vec<Perm> {
        let cycle: Vec<usize> = (0..n).collect();
        alloc::vec![
            Perm::from_cycles(n, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(n, &[&cycle]).unwrap(),
        ]
    }

    fn factorial(n: u64) -> BigUint {
        (1..=n).fold(BigUint::one(), |a, k| a * BigUint::from(k))
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=8 {
            let g = PermGroup::from_generators(n, &symmetric_gens(n)).unwrap();
            assert_eq!(g.order(), factorial(n as u64), "S_{n}");
        }
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = PermGroup::from_generators(5, &[]).unwrap();
        assert_eq!(g.order(), BigUint::one());
        assert!(g.contains(&Perm::identity(5)).unwrap());
        assert!(!g
            .contains(&Perm::from_cycles(5, &[&[0, 1]]).unwrap())
            .unwrap());
    }

    #[test]
    fn dihedral_and_cyclic() {
        let rot = Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap();
        let flip = Perm::from_cycles(6, &[&[1, 5], &[2, 4]]).unwrap();
        let c6 = PermGroup::from_generators(6, core::slice::from_ref(&rot)).unwrap();
        let d6 = PermGroup::from_generators(6, &[rot, flip.clone()]).unwrap();
        assert_eq!(c6.order(), BigUint::from(6u32));
        assert_eq!(d6.order(), BigUint::from(12u32));
        assert!(c6.is_subgroup_of(&d6).unwrap());
        assert!(!d6.is_subgroup_of(&c6).unwrap());
        assert!(!c6.contains(&flip).unwrap());
        assert!(!c6.equals(&d6).unwrap());
    }

    #[test]
    fn transposition_in_s3() {
        let s3 = PermGroup::from_generators(3, &symmetric_gens(3)).unwrap();
        let t =
            PermGroup::from_generators(3, &[Perm::from_cycles(3, &[&[0, 1]]).unwrap()]).unwrap();
        assert!(t.is_subgroup_of(&s3).unwrap());
        assert!(s3.contains(&Perm::identity(3)).unwrap());
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let s3 = PermGroup::from_generators(3, &symmetric_gens(3)).unwrap();
        assert!(matches!(
            s3.contains(&Perm::identity(4)),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(PermGroup::from_generators(3, &[Perm::identity(2)]).is_err());
    }

    #[test]
    fn direct_product_order_is_multiplicative() {
        // S3 on {0,1,2} × S4 on {3,4,5,6}
        let gens = alloc::vec![
            Perm::from_cycles(7, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(7, &[&[0, 1, 2]]).unwrap(),
            Perm::from_cycles(7, &[&[3, 4]]).unwrap(),
            Perm::from_cycles(7, &[&[3, 4, 5, 6]]).unwrap(),
        ];
        let g = PermGroup::from_generators(7, &gens).unwrap();
        assert_eq!(g.order(), BigUint::from(144u32));
        assert_eq!(
            g.orbits(),
            alloc::vec![alloc::vec![0, 1, 2], alloc::vec![3, 4, 5, 6]]
        );
    }

    #[test]
    fn order_is_product_of_basic_orbits() {
        let g = PermGroup::from_generators(6, &symmetric_gens(6)).unwrap();
        let prod: usize = g.basic_orbit_lengths().iter().product();
        assert_eq!(BigUint::from(prod), g.order());
        for s in g.generators() {
            assert!(g.contains(s).unwrap());
        }
    }
}
