//! Root systems stored as one canonical representative per antipodal pair.
//!
//! A representative is canonical when its first nonzero coordinate is
//! positive. Lengths are never normalized, so B_n and F₄ keep their two root
//! lengths and all coordinates stay in Q or Q(√5). Every group action in the
//! crate is an action on these lines, which absorbs both the antipodal map
//! and sign bookkeeping.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::scalar::{QuadExt, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    D,
    /// The copy of D₄ formed by ±e_i and (±½, ±½, ±½, ±½).
    Dprime4,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2,
    DirectSum,
}

/// Coordinates of the line representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lines {
    Rational(Vec<Vec<Rational>>),
    Quad(Vec<Vec<QuadExt>>),
    /// I₂(m) carries no coordinates: its matroid is uniform of rank 2.
    Planar(usize),
}

impl Lines {
    pub fn len(&self) -> usize {
        match self {
            Lines::Rational(v) => v.len(),
            Lines::Quad(v) => v.len(),
            Lines::Planar(m) => *m,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank_param: usize,
    ambient_dim: usize,
    lines: Lines,
    components: Vec<RootSystem>,
}

// ---------------------------------------------------------------------------
// Vector helpers, generic over the scalar field.

fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y)
}

/// Representative of the line through `v` whose first nonzero coordinate is
/// positive.
pub fn canonical<S: Scalar>(v: Vec<S>) -> Vec<S> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.signum() == Ordering::Less => v.into_iter().map(|x| -x).collect(),
        _ => v,
    }
}

/// Projective normal form: first nonzero coordinate scaled to 1. Two nonzero
/// vectors span the same line iff their keys agree.
fn line_key<S: Scalar>(v: &[S]) -> Option<Vec<S>> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let inv = lead.inv().ok()?;
    Some(v.iter().map(|x| x.clone() * &inv).collect())
}

/// Reflection of `w` in the hyperplane orthogonal to `v`.
fn reflect<S: Scalar>(v: &[S], w: &[S]) -> Vec<S> {
    let coeff = (S::from_integer(2) * dot(w, v))
        .checked_div(&dot(v, v))
        .expect("root vectors are nonzero");
    w.iter()
        .zip(v)
        .map(|(wi, vi)| wi.clone() - coeff.clone() * vi)
        .collect()
}

fn unit<S: Scalar>(dim: usize, i: usize) -> Vec<S> {
    (0..dim)
        .map(|k| if k == i { S::one() } else { S::zero() })
        .collect()
}

fn combo<S: Scalar>(dim: usize, i: usize, j: usize, sign_j: i64) -> Vec<S> {
    let mut v = unit::<S>(dim, i);
    v[j] = S::from_integer(sign_j);
    v
}

/// Canonicalizes and deduplicates roots into lines, rejecting parallels that
/// are not equal (which would mean two representatives of one line).
fn lines_from_roots<S: Scalar>(roots: impl IntoIterator<Item = Vec<S>>) -> Vec<Vec<S>> {
    let mut keys = BTreeSet::new();
    let mut out = Vec::new();
    for r in roots {
        let key = line_key(&r).expect("roots are nonzero");
        if keys.insert(key) {
            out.push(canonical(r));
        }
    }
    out
}

struct LineTable<S: Scalar> {
    index: BTreeMap<Vec<S>, usize>,
}

impl<S: Scalar> LineTable<S> {
    fn new(lines: &[Vec<S>]) -> Self {
        let index = lines
            .iter()
            .enumerate()
            .map(|(i, v)| (line_key(v).expect("nonzero line"), i))
            .collect();
        LineTable { index }
    }

    fn find(&self, v: &[S]) -> Option<usize> {
        self.index.get(&line_key(v)?).copied()
    }

    /// The line permutation induced by `map`, which must send every line
    /// onto a line of the table.
    fn induced(&self, lines: &[Vec<S>], map: impl Fn(&[S]) -> Vec<S>) -> Result<Perm> {
        let images = lines
            .iter()
            .enumerate()
            .map(|(i, v)| {
                self.find(&map(v)).ok_or_else(|| {
                    Error::Unsupported(format!("map sends line {i} outside the line set"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(images)
            .map_err(|_| Error::Unsupported("map is not injective on lines".to_string()))
    }
}

fn half() -> Rational {
    Rational::new(1, 2).expect("nonzero denominator")
}

fn a_lines(n: usize) -> Vec<Vec<Rational>> {
    let dim = n + 1;
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            out.push(combo(dim, i, j, -1));
        }
    }
    out
}

fn d_lines(n: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(combo(n, i, j, -1));
            out.push(combo(n, i, j, 1));
        }
    }
    out
}

fn b_lines(n: usize) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = (0..n).map(|i| unit(n, i)).collect();
    out.extend(d_lines(n));
    out
}

/// Half-integer vectors (±½, …, ±½) of the given dimension with first
/// coordinate +½, optionally restricted to an even number of minus signs.
fn half_vectors(dim: usize, even_minus_only: bool) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << (dim - 1)) {
        if even_minus_only && mask.count_ones() % 2 == 1 {
            continue;
        }
        let mut v = alloc::vec![half(); dim];
        for (k, x) in v.iter_mut().enumerate().skip(1) {
            if mask & (1 << (k - 1)) != 0 {
                *x = -half();
            }
        }
        out.push(v);
    }
    out
}

fn dprime4_lines() -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = (0..4).map(|i| unit(4, i)).collect();
    out.extend(half_vectors(4, false));
    out
}

fn e8_lines() -> Vec<Vec<Rational>> {
    let mut out = d_lines(8);
    out.extend(half_vectors(8, true));
    out
}

fn e7_lines() -> Vec<Vec<Rational>> {
    let ortho: Vec<Rational> = combo(8, 6, 7, 1);
    e8_lines()
        .into_iter()
        .filter(|v| dot(v, &ortho).is_zero())
        .collect()
}

fn e6_lines() -> Vec<Vec<Rational>> {
    let a: Vec<Rational> = combo(8, 5, 6, -1);
    let b: Vec<Rational> = combo(8, 6, 7, 1);
    e8_lines()
        .into_iter()
        .filter(|v| dot(v, &a).is_zero() && dot(v, &b).is_zero())
        .collect()
}

fn f4_lines() -> Vec<Vec<Rational>> {
    let mut out = d_lines(4);
    out.extend(dprime4_lines());
    out
}

fn sign_variants(v: &[QuadExt]) -> Vec<Vec<QuadExt>> {
    let mut out = alloc::vec![Vec::new()];
    for x in v {
        let mut next = Vec::new();
        for prefix in &out {
            let mut p = prefix.clone();
            p.push(x.clone());
            next.push(p);
            if !x.is_zero() {
                let mut p = prefix.clone();
                p.push(-x.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn is_even_permutation(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Even coordinate permutations and all sign changes of `base`.
fn even_permutation_orbit(base: &[QuadExt]) -> Vec<Vec<QuadExt>> {
    let mut out = Vec::new();
    for p in permutations(base.len()) {
        if !is_even_permutation(&p) {
            continue;
        }
        let permuted: Vec<QuadExt> = p.iter().map(|&k| base[k].clone()).collect();
        out.extend(sign_variants(&permuted));
    }
    out
}

fn quad_half(a: i64, b: i64) -> QuadExt {
    // (a + b√5)/2
    QuadExt::new(
        Rational::new(a, 2).expect("nonzero"),
        Rational::new(b, 2).expect("nonzero"),
    )
}

/// ½φ, ½, ½φ⁻¹ with φ⁻¹ = φ − 1.
fn golden_halves() -> [QuadExt; 3] {
    let half_phi = QuadExt::phi() * &QuadExt::from_rational(half());
    let half_phi_inv = quad_half(-1, 1) * &QuadExt::from_rational(half());
    [half_phi, QuadExt::from_rational(half()), half_phi_inv]
}

fn h3_lines() -> Vec<Vec<QuadExt>> {
    let mut roots: Vec<Vec<QuadExt>> = (0..3).map(|i| unit(3, i)).collect();
    roots.extend(even_permutation_orbit(&golden_halves()));
    lines_from_roots(roots)
}

fn h4_lines() -> Vec<Vec<QuadExt>> {
    let mut roots: Vec<Vec<QuadExt>> = (0..4).map(|i| unit(4, i)).collect();
    roots.extend(
        half_vectors(4, false)
            .into_iter()
            .map(|v| v.into_iter().map(QuadExt::from_rational).collect()),
    );
    let [a, b, c] = golden_halves();
    roots.extend(even_permutation_orbit(&[a, b, c, QuadExt::zero()]));
    lines_from_roots(roots)
}

fn to_quad(lines: &[Vec<Rational>]) -> Vec<Vec<QuadExt>> {
    lines
        .iter()
        .map(|v| v.iter().cloned().map(QuadExt::from_rational).collect())
        .collect()
}

fn block_sum<S: Scalar>(blocks: &[(usize, Vec<Vec<S>>)]) -> Vec<Vec<S>> {
    let dim: usize = blocks.iter().map(|(d, _)| d).sum();
    let mut out = Vec::new();
    let mut offset = 0;
    for (d, lines) in blocks {
        for v in lines {
            let mut w = alloc::vec![S::zero(); dim];
            w[offset..offset + d].clone_from_slice(v);
            out.push(w);
        }
        offset += d;
    }
    out
}

impl RootSystem {
    /// Builds an irreducible system. `param` is n for A/B/D, m for I₂(m),
    /// and ignored for the exceptional families.
    pub fn build(family: Family, param: usize) -> Result<RootSystem> {
        let invalid = |family, constraint| Err(Error::InvalidParameter { family, constraint });
        let (rank_param, ambient_dim, lines) = match family {
            Family::A => {
                if param < 1 {
                    return invalid("A_n", "n >= 1");
                }
                (param, param + 1, Lines::Rational(a_lines(param)))
            }
            Family::B => {
                if param < 2 {
                    return invalid("B_n", "n >= 2");
                }
                (param, param, Lines::Rational(b_lines(param)))
            }
            Family::D => {
                if param < 4 {
                    return invalid("D_n", "n >= 4 (D3 coincides with A3)");
                }
                (param, param, Lines::Rational(d_lines(param)))
            }
            Family::Dprime4 => (4, 4, Lines::Rational(dprime4_lines())),
            Family::E6 => (6, 8, Lines::Rational(e6_lines())),
            Family::E7 => (7, 8, Lines::Rational(e7_lines())),
            Family::E8 => (8, 8, Lines::Rational(e8_lines())),
            Family::F4 => (4, 4, Lines::Rational(f4_lines())),
            Family::H3 => (3, 3, Lines::Quad(h3_lines())),
            Family::H4 => (4, 4, Lines::Quad(h4_lines())),
            Family::I2 => {
                if param < 5 {
                    return invalid("I2(m)", "m >= 5 (smaller m alias A1+A1, A2, B2)");
                }
                (param, 2, Lines::Planar(param))
            }
            Family::DirectSum => {
                return Err(Error::Unsupported(
                    "direct sums are built with RootSystem::direct_sum".to_string(),
                ))
            }
        };
        Ok(RootSystem {
            family,
            rank_param,
            ambient_dim,
            lines,
            components: Vec::new(),
        })
    }

    /// Orthogonal direct sum with block-diagonal coordinates. Components
    /// that are themselves sums are flattened.
    pub fn direct_sum(components: Vec<RootSystem>) -> Result<RootSystem> {
        let mut flat = Vec::new();
        for c in components {
            if c.family == Family::DirectSum {
                flat.extend(c.components);
            } else {
                flat.push(c);
            }
        }
        if flat.len() < 2 {
            return Err(Error::Unsupported(
                "a direct sum needs at least two components".to_string(),
            ));
        }
        if flat.iter().any(|c| matches!(c.lines, Lines::Planar(_))) {
            return Err(Error::Unsupported(
                "I2(m) has no coordinates and cannot appear in a direct sum".to_string(),
            ));
        }
        let any_quad = flat.iter().any(|c| matches!(c.lines, Lines::Quad(_)));
        let lines = if any_quad {
            let blocks: Vec<_> = flat
                .iter()
                .map(|c| {
                    let ls = match &c.lines {
                        Lines::Rational(v) => to_quad(v),
                        Lines::Quad(v) => v.clone(),
                        Lines::Planar(_) => unreachable!(),
                    };
                    (c.ambient_dim, ls)
                })
                .collect();
            Lines::Quad(block_sum(&blocks))
        } else {
            let blocks: Vec<_> = flat
                .iter()
                .map(|c| match &c.lines {
                    Lines::Rational(v) => (c.ambient_dim, v.clone()),
                    _ => unreachable!(),
                })
                .collect();
            Lines::Rational(block_sum(&blocks))
        };
        Ok(RootSystem {
            family: Family::DirectSum,
            rank_param: flat.iter().map(RootSystem::rank).sum(),
            ambient_dim: flat.iter().map(|c| c.ambient_dim).sum(),
            lines,
            components: flat,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank_param(&self) -> usize {
        self.rank_param
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn lines(&self) -> &Lines {
        &self.lines
    }

    pub fn components(&self) -> &[RootSystem] {
        &self.components
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    /// Dimension of the span of the roots.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::I2 => 2,
            _ => self.rank_param,
        }
    }

    pub fn is_coordinate_based(&self) -> bool {
        !matches!(self.lines, Lines::Planar(_))
    }

    /// Ground-set offset of each component inside a direct sum.
    pub fn component_offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.components
            .iter()
            .map(|c| {
                let o = acc;
                acc += c.num_lines();
                o
            })
            .collect()
    }

    /// The index of the line spanned by a rational vector, if present.
    pub fn find_line(&self, v: &[Rational]) -> Option<usize> {
        let key = line_key(v)?;
        match &self.lines {
            Lines::Rational(ls) => ls.iter().position(|w| line_key(w).as_ref() == Some(&key)),
            Lines::Quad(ls) => {
                let qv: Vec<QuadExt> = v.iter().cloned().map(QuadExt::from_rational).collect();
                let qkey = line_key(&qv)?;
                ls.iter().position(|w| line_key(w).as_ref() == Some(&qkey))
            }
            Lines::Planar(_) => None,
        }
    }

    fn require_coordinates(&self) -> Result<()> {
        if self.is_coordinate_based() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "{} has no coordinates; its symmetries are not isometry-induced here",
                self.id()
            )))
        }
    }

    /// Line permutation induced by the reflection in line `line_index`.
    pub fn reflection_perm(&self, line_index: usize) -> Result<Perm> {
        self.require_coordinates()?;
        if line_index >= self.num_lines() {
            return Err(Error::IndexOutOfRange {
                index: line_index,
                size: self.num_lines(),
            });
        }
        match &self.lines {
            Lines::Rational(ls) => LineTable::new(ls).induced(ls, |w| reflect(&ls[line_index], w)),
            Lines::Quad(ls) => LineTable::new(ls).induced(ls, |w| reflect(&ls[line_index], w)),
            Lines::Planar(_) => unreachable!(),
        }
    }

    /// Line permutations induced by symmetries beyond the reflection group:
    /// the sign change e₁ ↦ −e₁ for B_n and D_n (n ≥ 5), reflections in the
    /// short roots of F₄ for D₄ (long roots for D′₄), the duality of F₄
    /// exchanging its long and short roots, and Galois conjugation for H₃/H₄.
    pub fn extra_symmetry_perms(&self) -> Result<Vec<Perm>> {
        match (&self.lines, self.family) {
            (Lines::Rational(ls), Family::B) => Ok(alloc::vec![sign_flip(ls)?]),
            (Lines::Rational(ls), Family::D) if self.rank_param >= 5 => {
                Ok(alloc::vec![sign_flip(ls)?])
            }
            (Lines::Rational(ls), Family::D) => {
                let table = LineTable::new(ls);
                dprime4_lines()
                    .iter()
                    .map(|short| table.induced(ls, |w| reflect(short, w)))
                    .collect()
            }
            (Lines::Rational(ls), Family::Dprime4) => {
                let table = LineTable::new(ls);
                d_lines(4)
                    .iter()
                    .map(|long| table.induced(ls, |w| reflect(long, w)))
                    .collect()
            }
            (Lines::Rational(ls), Family::F4) => {
                Ok(alloc::vec![LineTable::new(ls).induced(ls, f4_duality)?])
            }
            (Lines::Quad(ls), Family::H3 | Family::H4) => {
                Ok(alloc::vec![LineTable::new(ls).induced(ls, galois_swap)?])
            }
            _ => Ok(Vec::new()),
        }
    }

    /// Reflections in every line plus the extra symmetries.
    pub fn known_group_generators(&self) -> Result<Vec<Perm>> {
        self.require_coordinates()?;
        let mut gens = (0..self.num_lines())
            .map(|i| self.reflection_perm(i))
            .collect::<Result<Vec<_>>>()?;
        gens.extend(self.extra_symmetry_perms()?);
        Ok(gens)
    }

    /// String id, e.g. `A3`, `I2_7`, `A2+A2+B3`.
    pub fn id(&self) -> String {
        match self.family {
            Family::A => format!("A{}", self.rank_param),
            Family::B => format!("B{}", self.rank_param),
            Family::D => format!("D{}", self.rank_param),
            Family::Dprime4 => "Dp4".to_string(),
            Family::E6 => "E6".to_string(),
            Family::E7 => "E7".to_string(),
            Family::E8 => "E8".to_string(),
            Family::F4 => "F4".to_string(),
            Family::H3 => "H3".to_string(),
            Family::H4 => "H4".to_string(),
            Family::I2 => format!("I2_{}", self.rank_param),
            Family::DirectSum => {
                let ids: Vec<String> = self.components.iter().map(RootSystem::id).collect();
                ids.join("+")
            }
        }
    }
}

fn sign_flip(lines: &[Vec<Rational>]) -> Result<Perm> {
    LineTable::new(lines).induced(lines, |w| {
        let mut v = w.to_vec();
        v[0] = -v[0].clone();
        v
    })
}

/// The integer matrix [[1,1,0,0],[1,−1,0,0],[0,0,1,1],[0,0,1,−1]], a scalar
/// multiple of an isometry exchanging D₄ and √2·D′₄.
pub fn f4_duality(w: &[Rational]) -> Vec<Rational> {
    alloc::vec![
        w[0].clone() + &w[1],
        w[0].clone() - &w[1],
        w[2].clone() + &w[3],
        w[2].clone() - &w[3],
    ]
}

/// Coordinatewise Galois conjugation followed by swapping the first two
/// coordinates (H₄) or the first and last (H₃). Conjugation alone maps the
/// even-permutation coordinates onto their odd-permutation mirror; the
/// transposition brings them back.
pub fn galois_swap(w: &[QuadExt]) -> Vec<QuadExt> {
    let mut v: Vec<QuadExt> = w.iter().map(QuadExt::galois).collect();
    let last = if v.len() == 3 { 2 } else { 1 };
    v.swap(0, last);
    v
}

fn parse_component(s: &str) -> Result<RootSystem> {
    let bad = || Error::Parse(format!("unknown root system id {s:?}"));
    match s {
        "E6" => return RootSystem::build(Family::E6, 6),
        "E7" => return RootSystem::build(Family::E7, 7),
        "E8" => return RootSystem::build(Family::E8, 8),
        "F4" => return RootSystem::build(Family::F4, 4),
        "H3" => return RootSystem::build(Family::H3, 3),
        "H4" => return RootSystem::build(Family::H4, 4),
        "Dp4" | "D'4" => return RootSystem::build(Family::Dprime4, 4),
        _ => {}
    }
    if let Some(m) = s.strip_prefix("I2_") {
        return RootSystem::build(Family::I2, m.parse().map_err(|_| bad())?);
    }
    if s.starts_with('G') {
        return Err(Error::Parse(format!(
            "{s:?}: G2 is not a named constructor; its matroid is that of I2_6"
        )));
    }
    let (head, num) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
    let n: usize = num.parse().map_err(|_| bad())?;
    let family = match head {
        "A" => Family::A,
        "B" => Family::B,
        "D" => Family::D,
        _ => return Err(bad()),
    };
    RootSystem::build(family, n)
}

impl FromStr for RootSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('+').map(str::trim).collect();
        if parts.iter().any(|p| p.is_empty()) {
            return Err(Error::Parse(format!("empty component in {s:?}")));
        }
        if parts.len() == 1 {
            return parse_component(parts[0]);
        }
        RootSystem::direct_sum(
            parts
                .into_iter()
                .map(parse_component)
                .collect::<Result<_>>()?,
        )
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(id: &str) -> RootSystem {
        id.parse().unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn line_counts() {
        let cases = [
            ("A1", 1),
            ("A3", 6),
            ("B2", 4),
            ("B5", 25),
            ("D4", 12),
            ("D6", 30),
            ("Dp4", 12),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("H3", 15),
            ("H4", 60),
            ("I2_7", 7),
        ];
        for (id, n) in cases {
            assert_eq!(sys(id).num_lines(), n, "{id}");
        }
        assert_eq!(sys("A3").ambient_dim(), 4);
    }

    #[test]
    fn direct_sums() {
        let s = sys("A1+A1");
        assert_eq!((s.num_lines(), s.ambient_dim()), (2, 4));
        assert_eq!(sys("A2+A2").num_lines(), 6);
        assert_eq!(sys("A2+B2").num_lines(), 7);
        assert_eq!(sys("A2+B2").rank(), 4);
        assert_eq!(sys("A2+A2+B3").id(), "A2+A2+B3");
        assert!(matches!(
            "A2+I2_5".parse::<RootSystem>(),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(sys("A2+H3").lines(), Lines::Quad(_)));
    }

    #[test]
    fn parameter_errors() {
        for id in ["A0", "B1", "D3", "I2_4", "G2", "X5", "A", "I2_x", "A2++A1"] {
            assert!(id.parse::<RootSystem>().is_err(), "{id}");
        }
        assert!(matches!(
            RootSystem::build(Family::D, 3),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn representatives_are_canonical_and_not_parallel() {
        for id in ["B4", "D5", "E6", "E7", "E8", "F4", "H3", "H4"] {
            let s = sys(id);
            match s.lines() {
                Lines::Rational(ls) => check_lines(ls, id),
                Lines::Quad(ls) => check_lines(ls, id),
                Lines::Planar(_) => unreachable!(),
            }
        }
    }

    fn check_lines<S: Scalar>(ls: &[Vec<S>], id: &str) {
        let mut keys = BTreeSet::new();
        for v in ls {
            let lead = v.iter().find(|x| !x.is_zero()).expect("nonzero");
            assert_eq!(lead.signum(), Ordering::Greater, "{id}");
            assert_eq!(
                canonical(v.clone()),
                *v,
                "{id}: canonicalization idempotent"
            );
            assert!(keys.insert(line_key(v).unwrap()), "{id}: parallel lines");
        }
    }

    #[test]
    fn a2_reflection() {
        // lines: e0-e1, e0-e2, e1-e2
        let s = sys("A2");
        let r = s.reflection_perm(0).unwrap();
        assert_eq!(r.images(), &[0, 2, 1]);
    }

    #[test]
    fn b2_reflection_in_short_root() {
        // lines: e0, e1, e0-e1, e0+e1
        let s = sys("B2");
        let r = s.reflection_perm(0).unwrap();
        assert_eq!(r.images(), &[0, 1, 3, 2]);
    }

    #[test]
    fn reflections_are_involutions() {
        for id in ["A4", "B3", "D5", "F4", "H3", "E6"] {
            let s = sys(id);
            for i in 0..s.num_lines() {
                let r = s.reflection_perm(i).unwrap();
                assert!(r.then(&r).is_identity(), "{id} line {i}");
                assert_eq!(r.apply(i), i);
            }
        }
    }

    #[test]
    fn b3_sign_flip() {
        let s = sys("B3");
        let flip = &s.extra_symmetry_perms().unwrap()[0];
        let e0 = s.find_line(&[q(1), q(0), q(0)]).unwrap();
        let p = s.find_line(&[q(1), q(1), q(0)]).unwrap();
        let m = s.find_line(&[q(1), q(-1), q(0)]).unwrap();
        assert_eq!(flip.apply(e0), e0);
        assert_eq!(flip.apply(p), m);
        assert_eq!(flip.apply(m), p);
    }

    #[test]
    fn f4_duality_exchanges_long_and_short() {
        let s = sys("F4");
        let Lines::Rational(ls) = s.lines() else {
            unreachable!()
        };
        // Every image spans an F4 line: brute force over all 24 lines.
        let table = LineTable::new(ls);
        for v in ls {
            assert!(table.find(&f4_duality(v)).is_some(), "{v:?}");
        }
        let sigma = &s.extra_symmetry_perms().unwrap()[0];
        let idx = |v: [i64; 4]| s.find_line(&v.map(q)).unwrap();
        assert_eq!(sigma.apply(idx([1, 1, 0, 0])), idx([1, 0, 0, 0]));
        assert_eq!(sigma.apply(idx([1, -1, 0, 0])), idx([0, 1, 0, 0]));
        // long lines (first 12) go to short lines
        for i in 0..12 {
            assert!(sigma.apply(i) >= 12);
        }
    }

    #[test]
    fn galois_swap_preserves_h3_and_h4() {
        for id in ["H3", "H4"] {
            let s = sys(id);
            let Lines::Quad(ls) = s.lines() else {
                unreachable!()
            };
            let table = LineTable::new(ls);
            for v in ls {
                assert!(table.find(&galois_swap(v)).is_some(), "{id}: {v:?}");
            }
        }
    }

    #[test]
    fn plain_galois_maps_h3_to_its_mirror() {
        let s = sys("H3");
        let Lines::Quad(ls) = s.lines() else {
            unreachable!()
        };
        let table = LineTable::new(ls);
        let misses = ls
            .iter()
            .filter(|v| {
                table
                    .find(&v.iter().map(QuadExt::galois).collect::<Vec<_>>())
                    .is_none()
            })
            .count();
        assert_eq!(misses, 12);
    }

    #[test]
    fn planar_systems_have_no_isometry_generators() {
        let s = sys("I2_5");
        assert!(s.known_group_generators().is_err());
        assert!(s.reflection_perm(0).is_err());
    }
}
