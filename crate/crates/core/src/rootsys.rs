//! Root systems in fundamental-weight coordinates.
//!
//! A [`Weight`] is stored by its pairings with the simple coroots, so entry
//! `i` is the coefficient of the fundamental weight `ω_{i+1}`. Nodes of the
//! Dynkin diagram are labelled `1..=rank` everywhere in the public API; only
//! the coordinate vectors themselves are zero-indexed.
//!
//! Simple roots are the rows of the Cartan matrix: `α_i = Σ_j ⟨α_i, α_j∨⟩ ω_j`,
//! and the simple reflection `s_i` acts by `λ ↦ λ − λ_i α_i`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_node` (1-based node label).
    pub fn fundamental(rank: usize, node: usize) -> Self {
        assert!(node >= 1 && node <= rank, "node {node} out of range");
        let mut coords = vec![0; rank];
        coords[node - 1] = 1;
        Weight(coords)
    }

    /// Sum of fundamental weights over the given 1-based nodes.
    pub fn sum_of_fundamentals(rank: usize, nodes: &[usize]) -> Self {
        let mut w = Weight::zero(rank);
        for &n in nodes {
            w += &Weight::fundamental(rank, n);
        }
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        self += &rhs;
        self
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(mut self, rhs: Weight) -> Weight {
        self -= &rhs;
        self
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

/// Renders as `-2w2+w4`; the zero weight renders as `0`.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}w{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}w{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Parses comma-separated fundamental coordinates such as `0,-2,0,1`.
impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidParameter(format!("bad weight coordinate `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight(coords))
    }
}

/// Cartan–Killing type of an irreducible component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A,
    C,
    D,
    F4,
    G2,
}

impl CartanType {
    /// Checks that `rank` is a supported rank for this type.
    pub fn validate_rank(self, rank: usize) -> Result<()> {
        let ok = match self {
            CartanType::A | CartanType::C => rank >= 1,
            CartanType::D => rank >= 3,
            CartanType::F4 => rank == 4,
            CartanType::G2 => rank == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedType {
                label: self.to_string(),
                rank,
            })
        }
    }

    fn cartan(self, n: usize) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let link = |m: &mut Vec<Vec<i64>>, i: usize, j: usize, ij: i64, ji: i64| {
            m[i][j] = ij;
            m[j][i] = ji;
        };
        match self {
            CartanType::A => {
                for i in 0..n.saturating_sub(1) {
                    link(&mut m, i, i + 1, -1, -1);
                }
            }
            CartanType::C => {
                for i in 0..n.saturating_sub(2) {
                    link(&mut m, i, i + 1, -1, -1);
                }
                if n >= 2 {
                    // α_n = 2L_n is long: ⟨α_{n-1}, α_n∨⟩ = -1, ⟨α_n, α_{n-1}∨⟩ = -2
                    link(&mut m, n - 2, n - 1, -1, -2);
                }
            }
            CartanType::D => {
                for i in 0..n - 2 {
                    link(&mut m, i, i + 1, -1, -1);
                }
                link(&mut m, n - 3, n - 1, -1, -1);
            }
            CartanType::F4 => {
                link(&mut m, 0, 1, -1, -1);
                link(&mut m, 1, 2, -2, -1);
                link(&mut m, 2, 3, -1, -1);
            }
            CartanType::G2 => {
                link(&mut m, 0, 1, -1, -3);
            }
        }
        m
    }

    /// Half squared lengths of the simple roots, short roots normalized to 1.
    fn symmetrizer(self, n: usize) -> Vec<i64> {
        match self {
            CartanType::A | CartanType::D => vec![1; n],
            CartanType::C => {
                let mut d = vec![1; n];
                if n >= 2 {
                    d[n - 1] = 2;
                }
                d
            }
            CartanType::F4 => vec![2, 2, 1, 1],
            CartanType::G2 => vec![1, 3],
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::F4 => "F",
            CartanType::G2 => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "F" | "F4" => Ok(CartanType::F4),
            "G" | "G2" => Ok(CartanType::G2),
            _ => Err(Error::UnknownLabel(s.to_string())),
        }
    }
}

/// A positive root with both of its coordinate views.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    /// Coefficients in the simple roots.
    pub coeffs: Vec<i64>,
    /// The same root in fundamental-weight coordinates.
    pub weight: Weight,
    /// Coefficients of the coroot in the simple coroots.
    pub coroot: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// True when the root lies in the span of the given 0-based simple roots.
    pub fn supported_on(&self, mask: &[bool]) -> bool {
        self.coeffs
            .iter()
            .zip(mask)
            .all(|(&c, &inside)| c == 0 || inside)
    }
}

/// A (possibly reducible) crystallographic root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    components: Vec<(CartanType, usize)>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    rho: Weight,
    two_rho_check: Vec<i64>,
}

impl RootSystem {
    /// Builds the irreducible root system of the given type and rank.
    pub fn build(ty: CartanType, rank: usize) -> Result<Self> {
        Self::direct_sum(&[(ty, rank)])
    }

    /// Builds a direct sum of irreducible systems; nodes are numbered
    /// consecutively through the components.
    pub fn direct_sum(parts: &[(CartanType, usize)]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("empty root system".into()));
        }
        for &(ty, n) in parts {
            ty.validate_rank(n)?;
        }
        let rank: usize = parts.iter().map(|p| p.1).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut symmetrizer = Vec::with_capacity(rank);
        let mut offset = 0;
        for &(ty, n) in parts {
            let block = ty.cartan(n);
            for i in 0..n {
                for j in 0..n {
                    cartan[offset + i][offset + j] = block[i][j];
                }
            }
            symmetrizer.extend(ty.symmetrizer(n));
            offset += n;
        }
        let positive_roots = close_roots(&cartan, &symmetrizer);
        let mut two_rho_check = vec![0i64; rank];
        for r in &positive_roots {
            for (acc, c) in two_rho_check.iter_mut().zip(&r.coroot) {
                *acc += c;
            }
        }
        Ok(RootSystem {
            components: parts.to_vec(),
            rank,
            cartan,
            symmetrizer,
            positive_roots,
            rho: Weight(vec![1; rank]),
            two_rho_check,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[(CartanType, usize)] {
        &self.components
    }

    /// `C5`, `F4`, `A2xA2`, ...
    pub fn label(&self) -> String {
        self.components
            .iter()
            .map(|(t, n)| format!("{t}{n}"))
            .collect::<Vec<_>>()
            .join("x")
    }

    /// `cartan()[i][j] = ⟨α_{i+1}, α_{j+1}∨⟩`; row `i` is the simple root `α_{i+1}`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Half squared lengths `(α_i, α_i)/2` of the simple roots.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// The simple root `α_node` as a weight.
    pub fn simple_root(&self, node: usize) -> Weight {
        Weight(self.cartan[node - 1].clone())
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node >= 1 && node <= self.rank {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node,
                rank: self.rank,
            })
        }
    }

    pub fn check_weight(&self, chi: &Weight) -> Result<()> {
        if chi.rank() == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank,
                got: chi.rank(),
            })
        }
    }

    /// `⟨χ, α_node∨⟩`.
    pub fn pair(&self, chi: &Weight, node: usize) -> Result<i64> {
        self.check_node(node)?;
        self.check_weight(chi)?;
        Ok(chi[node - 1])
    }

    /// `⟨χ, β∨⟩` for an arbitrary positive root.
    pub fn pair_root(&self, chi: &Weight, root: &Root) -> i64 {
        root.coroot
            .iter()
            .zip(chi.coords())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `(λ, γ)` for `γ` given by its simple-root coefficients, with short
    /// roots of squared length 2.
    pub fn form_with_root(&self, chi: &Weight, coeffs: &[i64]) -> i64 {
        coeffs
            .iter()
            .zip(&self.symmetrizer)
            .zip(chi.coords())
            .map(|((c, d), x)| c * d * x)
            .sum()
    }

    /// `(γ, γ')` for two elements of the root lattice given by coefficients.
    pub fn root_form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (&ai, row) in a.iter().zip(&self.cartan).filter(|(&ai, _)| ai != 0) {
            for ((&bj, &c), &d) in b.iter().zip(row).zip(&self.symmetrizer) {
                acc += ai * bj * c * d;
            }
        }
        acc
    }

    /// `⟨λ, 2ρ∨⟩`, the sum of the pairings with all positive coroots.
    pub fn height(&self, chi: &Weight) -> i64 {
        self.two_rho_check
            .iter()
            .zip(chi.coords())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Converts simple-root coefficients to a weight.
    pub fn root_lattice_to_weight(&self, coeffs: &[i64]) -> Weight {
        let mut out = vec![0i64; self.rank];
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                for (o, a) in out.iter_mut().zip(&self.cartan[i]) {
                    *o += c * a;
                }
            }
        }
        Weight(out)
    }

    /// Applies `s_node` in place.
    pub fn reflect_in_place(&self, node: usize, chi: &mut Weight) {
        let k = chi[node - 1];
        if k != 0 {
            for (x, a) in chi.coords_mut().iter_mut().zip(&self.cartan[node - 1]) {
                *x -= k * a;
            }
        }
    }

    pub fn reflect(&self, node: usize, chi: &Weight) -> Weight {
        let mut out = chi.clone();
        self.reflect_in_place(node, &mut out);
        out
    }

    fn classical(&self) -> Result<(CartanType, usize)> {
        match self.components.as_slice() {
            [(t @ (CartanType::A | CartanType::C | CartanType::D), n)] => Ok((*t, *n)),
            _ => Err(Error::UnsupportedBasis(self.label())),
        }
    }

    /// Dimension of the orthogonal `L_j` coordinate space.
    pub fn orthogonal_dim(&self) -> Result<usize> {
        let (t, n) = self.classical()?;
        Ok(if t == CartanType::A { n + 1 } else { n })
    }

    /// Expresses `χ` in the `L_j` basis (`ω_i = L_1 + ⋯ + L_i`, with the two
    /// spin weights of `D_n` halved).
    pub fn to_orthogonal(&self, chi: &Weight) -> Result<Vec<Rational64>> {
        self.check_weight(chi)?;
        let (t, n) = self.classical()?;
        let dim = self.orthogonal_dim()?;
        let mut out = vec![Rational64::zero(); dim];
        for (i, &c) in chi.coords().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let c = Rational64::from_integer(c);
            let half = Rational64::new(1, 2);
            match (t, i + 1) {
                (CartanType::D, k) if k == n - 1 => {
                    for o in out.iter_mut().take(n - 1) {
                        *o += c * half;
                    }
                    out[n - 1] -= c * half;
                }
                (CartanType::D, k) if k == n => {
                    for o in out.iter_mut() {
                        *o += c * half;
                    }
                }
                (_, k) => {
                    for o in out.iter_mut().take(k) {
                        *o += c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Inverse of [`RootSystem::to_orthogonal`], pairing against the simple
    /// coroots written in the `L_j` basis.
    pub fn from_orthogonal(&self, v: &[Rational64]) -> Result<Weight> {
        let (t, n) = self.classical()?;
        let dim = self.orthogonal_dim()?;
        if v.len() != dim {
            return Err(Error::RankMismatch {
                expected: dim,
                got: v.len(),
            });
        }
        let mut coords = Vec::with_capacity(n);
        for i in 0..n {
            let x = match (t, i + 1) {
                (CartanType::C, k) if k == n => v[n - 1],
                (CartanType::D, k) if k == n => v[n - 2] + v[n - 1],
                _ => v[i] - v[i + 1],
            };
            if !x.is_integer() {
                return Err(Error::NonIntegral);
            }
            coords.push(x.to_integer());
        }
        Ok(Weight(coords))
    }

    /// Convenience wrapper for integral `L_j` coordinates.
    pub fn from_orthogonal_ints(&self, v: &[i64]) -> Result<Weight> {
        let v: Vec<_> = v.iter().map(|&x| Rational64::from_integer(x)).collect();
        self.from_orthogonal(&v)
    }
}

/// Generates the positive roots by closing the simple roots under simple
/// reflections, tracking simple-root coefficients so positivity is a sign test.
fn close_roots(cartan: &[Vec<i64>], symmetrizer: &[i64]) -> Vec<Root> {
    let rank = cartan.len();
    let to_weight = |coeffs: &[i64]| -> Vec<i64> {
        let mut w = vec![0i64; rank];
        for (i, &c) in coeffs.iter().enumerate() {
            for (o, a) in w.iter_mut().zip(&cartan[i]) {
                *o += c * a;
            }
        }
        w
    };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    let mut found = Vec::new();
    while let Some(coeffs) = queue.pop_front() {
        let w = to_weight(&coeffs);
        for i in 0..rank {
            // s_i permutes Φ⁺ \ {α_i}; a negative pairing moves up in height
            if w[i] < 0 {
                let mut next = coeffs.clone();
                next[i] -= w[i];
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        found.push(coeffs);
    }
    found.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    found
        .into_iter()
        .map(|coeffs| {
            let weight = to_weight(&coeffs);
            // (β, β)/2 = Σ c_i d_i ⟨β, α_i∨⟩ / 2
            let norm2: i64 = coeffs
                .iter()
                .zip(symmetrizer)
                .zip(&weight)
                .map(|((c, d), w)| c * d * w)
                .sum();
            let half = norm2 / 2;
            let coroot = coeffs
                .iter()
                .zip(symmetrizer)
                .map(|(c, d)| {
                    debug_assert_eq!((c * d) % half, 0);
                    c * d / half
                })
                .collect();
            Root {
                coeffs,
                weight: Weight(weight),
                coroot,
            }
        })
        .collect()
}

/// Number of positive roots predicted by the classification.
pub fn expected_positive_root_count(ty: CartanType, n: usize) -> usize {
    match ty {
        CartanType::A => n * (n + 1) / 2,
        CartanType::C => n * n,
        CartanType::D => n * (n - 1),
        CartanType::F4 => 24,
        CartanType::G2 => 6,
    }
}
