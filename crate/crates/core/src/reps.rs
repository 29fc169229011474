//! Irreducible representations of `G` and of Levi factors of parabolics.
//!
//! A parabolic with nothing crossed stands in for `G` itself, so every routine
//! here works uniformly for `V_G(χ)` and `V_P(χ)`. Levi quantities use the
//! positive roots supported on retained nodes; `⟨ρ_L, α_i∨⟩ = 1` for every
//! retained `i`, so `ρ_L` never needs to be materialized.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::rootsys::Weight;
use crate::weyl::ParabolicSubgroup;

/// `χ` is dominant for `P` when it pairs non-negatively with every retained
/// simple coroot.
pub fn is_dominant(chi: &Weight, p: &ParabolicSubgroup) -> bool {
    p.retained().iter().all(|&n| chi[n - 1] >= 0)
}

pub(crate) fn require_dominant(chi: &Weight, p: &ParabolicSubgroup) -> Result<()> {
    p.root_system().check_weight(chi)?;
    match p.retained().iter().find(|&&n| chi[n - 1] < 0) {
        None => Ok(()),
        Some(&node) => Err(Error::NotDominant {
            weight: chi.to_string(),
            node,
            value: chi[node - 1],
        }),
    }
}

/// Weyl dimension formula over the Levi factor of `p`:
/// `∏ ⟨χ+ρ_L, β∨⟩ / ⟨ρ_L, β∨⟩` over the Levi positive roots.
pub fn weyl_dimension(p: &ParabolicSubgroup, chi: &Weight) -> Result<BigUint> {
    require_dominant(chi, p)?;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for root in p.levi_roots() {
        let mut top = 0i64;
        let mut bottom = 0i64;
        for (i, &c) in root.coroot.iter().enumerate() {
            if c != 0 {
                top += c * (chi[i] + 1);
                bottom += c;
            }
        }
        num *= top as u64;
        den *= bottom as u64;
    }
    let (q, r) = num.div_rem(&den);
    if r != BigUint::from(0u32) {
        return Err(Error::InexactDivision(format!(
            "Weyl dimension of {chi} is not integral"
        )));
    }
    Ok(q)
}

/// A multiset of weights with strictly positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_weights<I: IntoIterator<Item = Weight>>(ws: I) -> Self {
        let mut m = Self::new();
        for w in ws {
            m.insert(w, 1);
        }
        m
    }

    pub fn insert(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Total size, counting multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in lexicographic order of the weights.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.entries.keys()
    }

    pub fn merge(&mut self, other: &WeightMultiset) {
        for (w, m) in other.iter() {
            self.insert(w.clone(), m);
        }
    }

    /// Removes `times` copies of `other`; fails without modifying `self` if
    /// any multiplicity would go negative.
    pub fn subtract(&mut self, other: &WeightMultiset, times: u64) -> Result<()> {
        for (w, m) in other.iter() {
            if self.multiplicity(w) < m * times {
                return Err(Error::NotARepresentation(format!(
                    "weight {w} needed {} times, present {}",
                    m * times,
                    self.multiplicity(w)
                )));
            }
        }
        for (w, m) in other.iter() {
            let slot = self.entries.get_mut(w).expect("checked above");
            *slot -= m * times;
            if *slot == 0 {
                self.entries.remove(w);
            }
        }
        Ok(())
    }

    /// Adds `shift` to every weight.
    pub fn shifted(&self, shift: &Weight) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w, m) in self.iter() {
            out.insert(w + shift, m);
        }
        out
    }
}

impl FromIterator<(Weight, u64)> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = (Weight, u64)>>(iter: I) -> Self {
        let mut m = Self::new();
        for (w, k) in iter {
            m.insert(w, k);
        }
        m
    }
}

/// The irreducible representation `V_P(χ)` of a parabolic.
#[derive(Clone, Debug)]
pub struct LeviIrrep {
    parabolic: ParabolicSubgroup,
    highest_weight: Weight,
}

impl LeviIrrep {
    pub fn new(parabolic: ParabolicSubgroup, highest_weight: Weight) -> Result<Self> {
        require_dominant(&highest_weight, &parabolic)?;
        Ok(LeviIrrep {
            parabolic,
            highest_weight,
        })
    }

    pub fn parabolic(&self) -> &ParabolicSubgroup {
        &self.parabolic
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn dimension(&self) -> BigUint {
        weyl_dimension(&self.parabolic, &self.highest_weight).expect("dominance checked")
    }

    /// All weights with multiplicities, via Freudenthal on the dominant ones
    /// followed by `W_I`-orbit expansion.
    pub fn weights(&self, cap: usize) -> Result<WeightMultiset> {
        weight_multiset(&self.parabolic, &self.highest_weight, cap)
    }

    /// Dominant weights with their multiplicities, sorted by depth below the
    /// highest weight.
    pub fn dominant_character(&self, cap: usize) -> Result<Vec<(Weight, u64)>> {
        dominant_character(&self.parabolic, &self.highest_weight, cap)
    }
}

/// Weight multiset of `V_P(χ)`.
pub fn weight_multiset(p: &ParabolicSubgroup, chi: &Weight, cap: usize) -> Result<WeightMultiset> {
    let dim = weyl_dimension(p, chi)?;
    if dim.to_usize().is_none_or(|d| d > cap) {
        return Err(Error::ResourceLimit {
            cap,
            what: "weight multiset",
        });
    }
    let mut out = WeightMultiset::new();
    for (mu, m) in dominant_character(p, chi, cap)? {
        for w in p.orbit(&mu, cap)? {
            out.insert(w, m);
        }
    }
    Ok(out)
}

/// Freudenthal's recursion restricted to dominant weights.
///
/// Dominant weights below `χ` are reached from `χ` by subtracting Levi
/// positive roots while staying dominant. Multiplicities are then filled in
/// by increasing depth; any weight needed on the right-hand side is looked up
/// through its dominant conjugate, which is always strictly higher.
fn dominant_character(
    p: &ParabolicSubgroup,
    chi: &Weight,
    cap: usize,
) -> Result<Vec<(Weight, u64)>> {
    require_dominant(chi, p)?;
    let sys = p.root_system();
    let roots: Vec<_> = p.levi_roots().collect();
    let rank = sys.rank();

    // depth vector γ with μ = χ − γ, γ in simple-root coordinates
    let mut depth: HashMap<Weight, Vec<i64>> = HashMap::new();
    let mut queue = VecDeque::new();
    depth.insert(chi.clone(), vec![0; rank]);
    queue.push_back(chi.clone());
    while let Some(mu) = queue.pop_front() {
        let gamma = depth[&mu].clone();
        for root in &roots {
            let nu = &mu - &root.weight;
            if !is_dominant(&nu, p) || depth.contains_key(&nu) {
                continue;
            }
            if depth.len() >= cap {
                return Err(Error::ResourceLimit {
                    cap,
                    what: "dominant weights",
                });
            }
            let g: Vec<i64> = gamma.iter().zip(&root.coeffs).map(|(a, b)| a + b).collect();
            depth.insert(nu.clone(), g);
            queue.push_back(nu);
        }
    }

    let mut order: Vec<(Weight, Vec<i64>)> = depth.into_iter().collect();
    order.sort_by(|a, b| {
        let ha: i64 = a.1.iter().sum();
        let hb: i64 = b.1.iter().sum();
        ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
    });

    // (χ + ρ_L, γ) only involves retained nodes, where ⟨ρ_L, α_i∨⟩ = 1
    let shifted_top: Weight = Weight::new(
        (0..rank)
            .map(|i| {
                if p.is_retained(i + 1) {
                    chi[i] + 1
                } else {
                    chi[i]
                }
            })
            .collect(),
    );

    let mut mult: HashMap<Weight, u64> = HashMap::new();
    let mut out = Vec::with_capacity(order.len());
    for (mu, gamma) in order {
        let m = if gamma.iter().all(|&g| g == 0) {
            1
        } else {
            let denom =
                2 * sys.form_with_root(&shifted_top, &gamma) - sys.root_form(&gamma, &gamma);
            let mut numer: i128 = 0;
            for root in &roots {
                let mut nu = &mu + &root.weight;
                loop {
                    let m_nu = mult.get(&p.dominant_conjugate(&nu)).copied().unwrap_or(0);
                    if m_nu == 0 {
                        break;
                    }
                    numer += m_nu as i128 * sys.form_with_root(&nu, &root.coeffs) as i128;
                    nu += &root.weight;
                }
            }
            numer *= 2;
            if denom <= 0 || numer % denom as i128 != 0 {
                return Err(Error::InexactDivision(format!(
                    "Freudenthal step at {mu}: {numer}/{denom}"
                )));
            }
            (numer / denom as i128) as u64
        };
        if m > 0 {
            mult.insert(mu.clone(), m);
            out.push((mu, m));
        }
    }
    Ok(out)
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Weights of `∧^p V` given the weights of `V`: all sums over `p`-element
/// sub-multisets.
pub fn exterior_power(weights: &WeightMultiset, p: usize, cap: usize) -> Result<WeightMultiset> {
    let size = weights.total();
    if size == 0 {
        // the rank of the ambient lattice is unknown for an empty multiset
        return Err(Error::InvalidParameter(
            "exterior power of an empty multiset".into(),
        ));
    }
    if p as u64 > size {
        return Err(Error::PowerOutOfRange { p, size });
    }
    if binomial(size, p as u64).to_usize().is_none_or(|n| n > cap) {
        return Err(Error::ResourceLimit {
            cap,
            what: "exterior power",
        });
    }
    let flat: Vec<&Weight> = weights
        .iter()
        .flat_map(|(w, m)| std::iter::repeat_n(w, m as usize))
        .collect();
    let rank = flat[0].rank();
    let mut out = WeightMultiset::new();
    for combo in flat.iter().combinations(p) {
        let mut sum = Weight::zero(rank);
        for w in combo {
            sum += w;
        }
        out.insert(sum, 1);
    }
    Ok(out)
}

/// Splits a `W_I`-stable multiset into Levi irreducibles by repeatedly
/// peeling off the highest dominant weight present.
///
/// "Highest" maximizes `⟨λ, 2ρ∨⟩`, ties broken by the larger coordinate
/// vector. Returns highest weights with multiplicities in peeling order.
pub fn decompose_levi(
    weights: &WeightMultiset,
    p: &ParabolicSubgroup,
    cap: usize,
) -> Result<Vec<(Weight, u64)>> {
    let sys = p.root_system();
    let mut rest = weights.clone();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let top = rest
            .iter()
            .filter(|(w, _)| is_dominant(w, p))
            .max_by(|a, b| {
                sys.height(a.0)
                    .cmp(&sys.height(b.0))
                    .then_with(|| a.0.cmp(b.0))
            })
            .map(|(w, m)| (w.clone(), m));
        let Some((top, times)) = top else {
            return Err(Error::NotARepresentation(format!(
                "{} weights left with no dominant member",
                rest.total()
            )));
        };
        let piece = weight_multiset(p, &top, cap)?;
        rest.subtract(&piece, times)?;
        out.push((top, times));
    }
    Ok(out)
}

/// Highest weight of the dual `V_P(χ)∨`, namely `−w_0(χ)` for the longest
/// element `w_0` of `W_I`.
pub fn dual_highest_weight(chi: &Weight, p: &ParabolicSubgroup) -> Result<Weight> {
    require_dominant(chi, p)?;
    let w0 = p.longest_element();
    Ok(-p.root_system().act(&w0, chi))
}

/// True when `V_P(χ)` is one-dimensional, i.e. `χ` defines a line bundle.
pub fn line_bundle_rank_check(chi: &Weight, p: &ParabolicSubgroup) -> Result<bool> {
    Ok(weyl_dimension(p, chi)? == BigUint::one())
}

/// Ampleness on `G/P`: positive on crossed nodes, non-negative on retained.
pub fn is_ample(chi: &Weight, p: &ParabolicSubgroup) -> bool {
    (1..=p.rank()).all(|n| {
        if p.is_retained(n) {
            chi[n - 1] >= 0
        } else {
            chi[n - 1] > 0
        }
    })
}

/// Sum of all weights with multiplicity, the weight of the top exterior power.
pub fn determinant_weight(weights: &WeightMultiset, rank: usize) -> Weight {
    let mut acc = Weight::zero(rank);
    for (w, m) in weights.iter() {
        acc += &(w * m as i64);
    }
    acc
}

/// Set of distinct weights, for quick membership checks in tests and reports.
pub fn support(weights: &WeightMultiset) -> HashSet<Weight> {
    weights.weights().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{CartanType, RootSystem};
    use crate::weyl::DEFAULT_CAP;
    use std::sync::Arc;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn f4_p(crossed: &[usize]) -> ParabolicSubgroup {
        let f4 = Arc::new(RootSystem::build(CartanType::F4, 4).unwrap());
        ParabolicSubgroup::new(f4, crossed).unwrap()
    }

    fn full(t: CartanType, n: usize) -> ParabolicSubgroup {
        ParabolicSubgroup::full(Arc::new(RootSystem::build(t, n).unwrap()))
    }

    #[test]
    fn dominance_examples() {
        assert!(is_dominant(&w(&[0, 1, 1, 0]), &f4_p(&[2, 3])));
        assert!(is_dominant(&w(&[0, -2, 0, 1]), &f4_p(&[2])));
        assert!(!is_dominant(&w(&[0, -1, -1, 0]), &f4_p(&[2])));
    }

    #[test]
    fn f4_fundamental_dimensions() {
        let g = full(CartanType::F4, 4);
        let dims: Vec<u64> = (1..=4)
            .map(|i| {
                weyl_dimension(&g, &Weight::fundamental(4, i))
                    .unwrap()
                    .to_u64()
                    .unwrap()
            })
            .collect();
        assert_eq!(dims, vec![52, 1274, 273, 26]);
        assert_eq!(
            weyl_dimension(&g, &Weight::zero(4)).unwrap(),
            BigUint::one()
        );
    }

    #[test]
    fn c5_fundamental_dimensions_match_binomial_formula() {
        let g = full(CartanType::C, 5);
        let d3 = weyl_dimension(&g, &Weight::fundamental(5, 3)).unwrap();
        let d4 = weyl_dimension(&g, &Weight::fundamental(5, 4)).unwrap();
        assert_eq!(d3, binomial(10, 3) - binomial(10, 1));
        assert_eq!(d4, binomial(10, 4) - binomial(10, 2));
        assert_eq!(d3, BigUint::from(110u32));
        assert_eq!(d4, BigUint::from(165u32));
    }

    #[test]
    fn weyl_dimension_rejects_non_dominant() {
        let err = weyl_dimension(&f4_p(&[2]), &w(&[0, -1, -1, 0])).unwrap_err();
        assert!(matches!(
            err,
            Error::NotDominant {
                node: 3,
                value: -1,
                ..
            }
        ));
    }

    #[test]
    fn a1_adjoint_weights() {
        let g = full(CartanType::A, 1);
        let ws = weight_multiset(&g, &w(&[2]), DEFAULT_CAP).unwrap();
        let expected: WeightMultiset = [(w(&[2]), 1), (w(&[0]), 1), (w(&[-2]), 1)]
            .into_iter()
            .collect();
        assert_eq!(ws, expected);
    }

    #[test]
    fn freudenthal_known_multiplicities() {
        // adjoint of A2: zero weight has multiplicity 2
        let g = full(CartanType::A, 2);
        let ws = weight_multiset(&g, &w(&[1, 1]), DEFAULT_CAP).unwrap();
        assert_eq!(ws.total(), 8);
        assert_eq!(ws.multiplicity(&w(&[0, 0])), 2);
        // adjoint of G2: zero weight multiplicity 2, 14-dimensional
        let g2 = full(CartanType::G2, 2);
        let ws = weight_multiset(&g2, &w(&[0, 1]), DEFAULT_CAP).unwrap();
        assert_eq!(ws.total(), 14);
        assert_eq!(ws.multiplicity(&w(&[0, 0])), 2);
        // 26-dim of F4: zero weight multiplicity 2
        let f4 = full(CartanType::F4, 4);
        let ws = weight_multiset(&f4, &w(&[0, 0, 0, 1]), DEFAULT_CAP).unwrap();
        assert_eq!(ws.total(), 26);
        assert_eq!(ws.multiplicity(&Weight::zero(4)), 2);
    }

    #[test]
    fn f4_dual_bundle_triple() {
        let p1 = f4_p(&[2]);
        let dual = dual_highest_weight(&w(&[0, 1, 1, 0]), &p1).unwrap();
        assert_eq!(dual, w(&[0, -2, 0, 1]));
        let ws = weight_multiset(&p1, &dual, DEFAULT_CAP).unwrap();
        let expected = WeightMultiset::from_weights([
            w(&[0, -2, 0, 1]),
            w(&[0, -2, 1, -1]),
            w(&[0, -1, -1, 0]),
        ]);
        assert_eq!(ws, expected);

        let wedge2 = exterior_power(&ws, 2, DEFAULT_CAP).unwrap();
        let expected2 = WeightMultiset::from_weights([
            w(&[0, -4, 1, 0]),
            w(&[0, -3, -1, 1]),
            w(&[0, -3, 0, -1]),
        ]);
        assert_eq!(wedge2, expected2);
        assert_eq!(
            decompose_levi(&wedge2, &p1, DEFAULT_CAP).unwrap(),
            vec![(w(&[0, -4, 1, 0]), 1)]
        );

        let wedge3 = exterior_power(&ws, 3, DEFAULT_CAP).unwrap();
        assert_eq!(wedge3, WeightMultiset::from_weights([w(&[0, -5, 0, 0])]));
        assert_eq!(exterior_power(&ws, 1, DEFAULT_CAP).unwrap(), ws);
        assert!(matches!(
            exterior_power(&ws, 4, DEFAULT_CAP),
            Err(Error::PowerOutOfRange { p: 4, size: 3 })
        ));
    }

    #[test]
    fn decompose_single_irrep_is_idempotent() {
        let p = f4_p(&[3]);
        let chi = w(&[2, 1, -3, 1]);
        let ws = weight_multiset(&p, &chi, DEFAULT_CAP).unwrap();
        assert_eq!(
            decompose_levi(&ws, &p, DEFAULT_CAP).unwrap(),
            vec![(chi, 1)]
        );
    }

    #[test]
    fn decompose_rejects_unstable_input() {
        let p = f4_p(&[2]);
        let bad = WeightMultiset::from_weights([w(&[0, -2, 0, 1])]);
        assert!(matches!(
            decompose_levi(&bad, &p, DEFAULT_CAP),
            Err(Error::NotARepresentation(_))
        ));
        let no_dominant = WeightMultiset::from_weights([w(&[0, 0, -1, 0])]);
        assert!(matches!(
            decompose_levi(&no_dominant, &p, DEFAULT_CAP),
            Err(Error::NotARepresentation(_))
        ));
    }

    #[test]
    fn dual_of_zero_is_zero() {
        assert_eq!(
            dual_highest_weight(&Weight::zero(4), &f4_p(&[2])).unwrap(),
            Weight::zero(4)
        );
        assert!(dual_highest_weight(&w(&[0, 0, -1, 0]), &f4_p(&[2])).is_err());
    }

    #[test]
    fn line_bundle_examples() {
        let p = f4_p(&[2]);
        assert!(line_bundle_rank_check(&w(&[0, 1, 0, 0]), &p).unwrap());
        assert!(!line_bundle_rank_check(&w(&[0, 0, 1, 0]), &p).unwrap());
        assert!(line_bundle_rank_check(&w(&[0, 5, 0, 0]), &p).unwrap());
    }

    #[test]
    fn ampleness_examples() {
        assert!(is_ample(&w(&[0, 1, 1, 0]), &f4_p(&[2, 3])));
        assert!(!is_ample(&Weight::zero(4), &f4_p(&[2, 3])));
        assert!(!is_ample(&w(&[1, 0, 0, 0]), &f4_p(&[2])));
    }

    #[test]
    fn weight_multiset_respects_cap() {
        let g = full(CartanType::C, 4);
        assert!(matches!(
            weight_multiset(&g, &w(&[2, 2, 2, 2]), 1000),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
