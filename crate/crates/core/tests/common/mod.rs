//! Independent oracles and property checks shared by the integration tests.
//!
//! The oracles only use the primitive operations of the engine (simple
//! reflections and the coroot pairing); everything else is recomputed here
//! by brute force or closed formulas.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use rand::Rng;

use roofcalc::bwb::{bwb, CohomologyResult};
use roofcalc::motive::{class_of_quotient, igr_class, igr_point_count};
use roofcalc::reps::{
    decompose_levi, dual_highest_weight, exterior_power, line_bundle_rank_check, weight_multiset,
    weyl_dimension, WeightMultiset,
};
use roofcalc::{CartanType, ParabolicSubgroup, RootSystem, Weight, DEFAULT_CAP};

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn sys(ty: CartanType, rank: usize) -> Arc<RootSystem> {
    Arc::new(RootSystem::build(ty, rank).unwrap())
}

pub fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec())
}

pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// Closed-form Weyl group orders.
pub fn weyl_order_formula(ty: CartanType, n: usize) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    match ty {
        CartanType::A => fact(n + 1),
        CartanType::C => (1u128 << n) * fact(n),
        CartanType::D => (1u128 << (n - 1)) * fact(n),
        CartanType::F4 => 1152,
        CartanType::G2 => 12,
    }
}

/// Every element of `W` as a word, found by breadth-first search on the
/// orbit of `ρ` using simple reflections only. Words are reduced.
pub fn enumerate_group(sys: &RootSystem) -> Vec<Vec<usize>> {
    let mut seen: HashMap<Weight, Vec<usize>> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(sys.rho().clone(), Vec::new());
    queue.push_back(sys.rho().clone());
    while let Some(v) = queue.pop_front() {
        let word = seen[&v].clone();
        for i in 1..=sys.rank() {
            let u = sys.reflect(i, &v);
            if !seen.contains_key(&u) {
                // s_i w: apply w first, then s_i
                let mut next = vec![i];
                next.extend_from_slice(&word);
                seen.insert(u.clone(), next);
                queue.push_back(u);
            }
        }
    }
    seen.into_values().collect()
}

/// Applies a word right to left: `s_{a1} s_{a2} ... s_{ak} (χ)`.
pub fn apply_word(sys: &RootSystem, word: &[usize], chi: &Weight) -> Weight {
    word.iter()
        .rev()
        .fold(chi.clone(), |acc, &i| sys.reflect(i, &acc))
}

/// Length generating function of `W^I` by brute force: group all of `W` by
/// the image of a weight whose stabilizer is `W_I`, keep the shortest word.
pub fn coset_histogram_oracle(sys: &RootSystem, crossed: &[usize]) -> Vec<u64> {
    let probe = Weight::sum_of_fundamentals(sys.rank(), crossed);
    let mut best: HashMap<Weight, usize> = HashMap::new();
    for word in enumerate_group(sys) {
        let img = apply_word(sys, &word, &probe);
        let e = best.entry(img).or_insert(usize::MAX);
        *e = (*e).min(word.len());
    }
    let mut hist = vec![0u64; best.values().max().map_or(0, |m| m + 1)];
    for len in best.values() {
        hist[*len] += 1;
    }
    hist
}

/// `|W_I|` as the stabilizer of the probe weight in the enumerated group.
pub fn levi_order_oracle(sys: &RootSystem, crossed: &[usize]) -> usize {
    let probe = Weight::sum_of_fundamentals(sys.rank(), crossed);
    enumerate_group(sys)
        .iter()
        .filter(|word| apply_word(sys, word, &probe) == probe)
        .count()
}

/// Hook-content formula for `A_n`: the irrep with highest weight `χ` has
/// partition `λ_k = χ_k + ... + χ_n`.
pub fn type_a_dimension(chi: &Weight) -> BigUint {
    let n = chi.rank();
    let size = n + 1;
    let lambda: Vec<i64> = (0..n).map(|k| chi.coords()[k..].iter().sum()).collect();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for (row, &len) in lambda.iter().enumerate() {
        for col in 0..len as usize {
            num *= (size + col - row) as u64;
            let arm = len as usize - col - 1;
            let leg = lambda[row + 1..]
                .iter()
                .filter(|&&l| l as usize > col)
                .count();
            den *= (arm + leg + 1) as u64;
        }
    }
    num / den
}

/// Descends `v` to the dominant chamber with simple reflections; returns the
/// number of steps and the result, or `None` if `v` is singular.
fn descend(sys: &RootSystem, v: &Weight) -> Option<(usize, Weight)> {
    let mut v = v.clone();
    let mut steps = 0;
    loop {
        if v.coords().contains(&0) {
            return None;
        }
        match v.coords().iter().position(|&c| c < 0) {
            None => return Some((steps, v)),
            Some(i) => {
                v = sys.reflect(i + 1, &v);
                steps += 1;
            }
        }
    }
}

// ---------------------------------------------------------------- random inputs

/// Groups of rank at most five used by the randomized suites.
pub const SMALL_GROUPS: [(CartanType, usize); 14] = [
    (CartanType::A, 1),
    (CartanType::A, 2),
    (CartanType::A, 3),
    (CartanType::A, 4),
    (CartanType::A, 5),
    (CartanType::C, 2),
    (CartanType::C, 3),
    (CartanType::C, 4),
    (CartanType::C, 5),
    (CartanType::D, 4),
    (CartanType::D, 5),
    (CartanType::F4, 4),
    (CartanType::G2, 2),
    (CartanType::D, 3),
];

/// A random parabolic with at least one crossed node.
pub fn random_parabolic<R: Rng>(rng: &mut R) -> ParabolicSubgroup {
    let (ty, n) = SMALL_GROUPS[rng.gen_range(0..SMALL_GROUPS.len())];
    let mut crossed: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.4)).collect();
    if crossed.is_empty() {
        crossed.push(rng.gen_range(1..=n));
    }
    ParabolicSubgroup::new(sys(ty, n), &crossed).unwrap()
}

/// Random weight dominant for `p`: retained coordinates in `0..=hi`,
/// crossed coordinates in `lo..=hi`.
pub fn random_dominant<R: Rng>(rng: &mut R, p: &ParabolicSubgroup, lo: i64, hi: i64) -> Weight {
    Weight::new(
        (1..=p.rank())
            .map(|i| {
                if p.is_retained(i) {
                    rng.gen_range(0..=hi)
                } else {
                    rng.gen_range(lo..=hi)
                }
            })
            .collect(),
    )
}

pub fn random_weight<R: Rng>(rng: &mut R, rank: usize, lo: i64, hi: i64) -> Weight {
    Weight::new((0..rank).map(|_| rng.gen_range(lo..=hi)).collect())
}

// ---------------------------------------------------------------- properties

pub fn check_reflection_involution(sys: &RootSystem, node: usize, chi: &Weight) -> Check {
    let once = sys.reflect(node, chi);
    ensure!(
        sys.reflect(node, &once) == *chi,
        "s{node} s{node} {chi} != {chi}"
    );
    let before = sys.pair(chi, node).unwrap();
    let after = sys.pair(&once, node).unwrap();
    ensure!(
        after == -before,
        "s{node} does not negate the pairing with alpha{node}"
    );
    ensure!(
        once == chi - &(&sys.simple_root(node) * before),
        "s{node}({chi}) is not chi - <chi, a{node}v> a{node}"
    );
    Ok(())
}

/// Nonnegative palindromic coefficients, degree `dim G/P`, sum `|W| / |W_I|`.
pub fn check_coset_polynomial(p: &ParabolicSubgroup) -> Check {
    let class = class_of_quotient(p, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let coeffs = class.coeffs();
    ensure!(
        coeffs.iter().all(|c| *c >= BigInt::from(0)),
        "negative coefficient in {class}"
    );
    ensure!(
        coeffs.iter().eq(coeffs.iter().rev()),
        "{class} is not palindromic"
    );
    ensure!(
        class.degree() == Some(p.quotient_dimension()),
        "degree of {class}"
    );
    let sys = p.root_system();
    let index = sys.weyl_group_order() / levi_order_oracle(sys, p.crossed()) as u128;
    ensure!(
        class.coefficient_sum() == BigInt::from(index),
        "coefficient sum {} != index {index}",
        class.coefficient_sum()
    );
    Ok(())
}

/// Vanishing iff `χ + ρ` is singular; otherwise the degree is the number of
/// positive roots pairing negatively with `χ + ρ`, the result is dominant and
/// conjugate to `χ + ρ`, and degree 0 happens exactly for G-dominant `χ`.
pub fn check_bwb(p: &ParabolicSubgroup, chi: &Weight) -> Check {
    let sys = p.root_system();
    let shifted = chi + sys.rho();
    let pairings: Vec<i64> = sys
        .positive_roots()
        .iter()
        .map(|b| sys.pair_root(&shifted, b))
        .collect();
    let singular = pairings.contains(&0);
    let inversions = pairings.iter().filter(|&&x| x < 0).count();
    let res = bwb(p, chi).map_err(|e| e.to_string())?;
    match res {
        CohomologyResult::Vanishes => {
            ensure!(singular, "{chi}: vanishing but chi + rho is regular")
        }
        CohomologyResult::Single {
            degree,
            g_highest_weight,
            dimension,
        } => {
            ensure!(
                !singular,
                "{chi}: cohomology although chi + rho is singular"
            );
            ensure!(
                degree == inversions,
                "{chi}: degree {degree}, expected {inversions}"
            );
            let top = &g_highest_weight + sys.rho();
            ensure!(
                top.coords().iter().all(|&c| c > 0),
                "{chi}: w.chi + rho not regular dominant"
            );
            let (_, oracle) = descend(sys, &shifted).unwrap();
            ensure!(
                top == oracle,
                "{chi}: w.chi + rho not conjugate to chi + rho"
            );
            let g_dominant = chi.coords().iter().all(|&c| c >= 0);
            ensure!(
                (degree == 0) == g_dominant,
                "{chi}: degree 0 iff G-dominant fails"
            );
            let full = ParabolicSubgroup::full(p.root_system_arc().clone());
            let dim = weyl_dimension(&full, &g_highest_weight).map_err(|e| e.to_string())?;
            ensure!(dim == dimension, "{chi}: dimension mismatch");
        }
    }
    Ok(())
}

/// Freudenthal multiplicities sum to the Weyl dimension and are invariant
/// under the Levi Weyl group; the highest weight has multiplicity one.
pub fn check_freudenthal(p: &ParabolicSubgroup, chi: &Weight) -> Check {
    let dim = weyl_dimension(p, chi).map_err(|e| e.to_string())?;
    let ws = weight_multiset(p, chi, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure!(
        BigUint::from(ws.total()) == dim,
        "{chi}: Freudenthal total {} != Weyl {dim}",
        ws.total()
    );
    ensure!(
        ws.multiplicity(chi) == 1,
        "{chi}: highest weight multiplicity"
    );
    let sys = p.root_system();
    for (mu, m) in ws.iter() {
        for &i in p.retained() {
            let image = sys.reflect(i, mu);
            ensure!(
                ws.multiplicity(&image) == m,
                "{chi}: multiplicities not W_P-invariant at {mu}"
            );
        }
    }
    if p.crossed().is_empty() && sys.components() == [(CartanType::A, sys.rank())] {
        ensure!(
            type_a_dimension(chi) == dim,
            "{chi}: hook-content formula disagrees"
        );
    }
    Ok(())
}

/// `(χ∨)∨ = χ`, equal dimensions, and the weights of the dual are negatives.
pub fn check_duality(p: &ParabolicSubgroup, chi: &Weight) -> Check {
    let dual = dual_highest_weight(chi, p).map_err(|e| e.to_string())?;
    let back = dual_highest_weight(&dual, p).map_err(|e| e.to_string())?;
    ensure!(back == *chi, "{chi}: double dual is {back}");
    let d1 = weyl_dimension(p, chi).map_err(|e| e.to_string())?;
    let d2 = weyl_dimension(p, &dual).map_err(|e| e.to_string())?;
    ensure!(d1 == d2, "{chi}: dual changes dimension");
    let ws = weight_multiset(p, chi, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let wd = weight_multiset(p, &dual, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let negated: WeightMultiset = ws.iter().map(|(w, m)| (-w.clone(), m)).collect();
    ensure!(
        negated == wd,
        "{chi}: weights of dual are not the negated weights"
    );
    Ok(())
}

/// The pieces returned by `decompose_levi` add back up to `∧^k V` exactly.
pub fn check_decompose_partition(p: &ParabolicSubgroup, chi: &Weight, k: usize) -> Check {
    let ws = weight_multiset(p, chi, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let wedge = exterior_power(&ws, k, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure!(
        BigUint::from(wedge.total()) == binom(ws.total(), k as u64),
        "wedge^{k} has the wrong size"
    );
    let pieces = decompose_levi(&wedge, p, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let mut rebuilt = WeightMultiset::new();
    for (mu, m) in &pieces {
        let part = weight_multiset(p, mu, DEFAULT_CAP).map_err(|e| e.to_string())?;
        for _ in 0..*m {
            rebuilt.merge(&part);
        }
    }
    ensure!(rebuilt == wedge, "{chi}: wedge^{k} pieces do not recombine");
    Ok(())
}

/// `igr_class` against coset enumeration and against direct point counts.
pub fn check_igr(d: usize, n: usize, qs: &[u64]) -> Check {
    let class = igr_class(d, n).map_err(|e| e.to_string())?;
    let p = ParabolicSubgroup::new(sys(CartanType::C, n), &[d]).unwrap();
    let cells = class_of_quotient(&p, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure!(
        class == cells,
        "IGr({d}, {}): {class} vs cells {cells}",
        2 * n
    );
    for &q in qs {
        let count = igr_point_count(d, n, q).map_err(|e| e.to_string())?;
        ensure!(
            BigInt::from(count.clone()) == class.eval(&BigInt::from(q)),
            "IGr({d}, {}) over F_{q}: {count} vs class evaluation",
            2 * n
        );
        // direct product formula, recomputed here
        let mut num = BigUint::from(1u32);
        let mut den = BigUint::from(1u32);
        for j in 1..=d as u32 {
            num *= BigUint::from(q).pow(2 * (n as u32 - j + 1)) - 1u32;
            den *= BigUint::from(q).pow(j) - 1u32;
        }
        ensure!(
            num / den == count,
            "IGr({d}, {}) product formula at q = {q}",
            2 * n
        );
    }
    Ok(())
}

/// `V_P(χ)` is a line iff `χ` vanishes on every retained node.
pub fn check_line_bundle(p: &ParabolicSubgroup, chi: &Weight) -> Check {
    let line = line_bundle_rank_check(chi, p).map_err(|e| e.to_string())?;
    let supported = p.retained().iter().all(|&i| chi[i - 1] == 0);
    ensure!(
        line == supported,
        "{chi}: line bundle check {line}, support on crossed nodes {supported}"
    );
    Ok(())
}

/// Serre duality: `H^d(E) ≅ H^{N-d}(E∨ ⊗ K)∨` with `K = E_P(−Σ nilradical roots)`.
pub fn check_serre(p: &ParabolicSubgroup, chi: &Weight) -> Check {
    let partner = &dual_highest_weight(chi, p).map_err(|e| e.to_string())? - &p.nilradical_weight();
    let a = bwb(p, chi).map_err(|e| e.to_string())?;
    let b = bwb(p, &partner).map_err(|e| e.to_string())?;
    let n = p.quotient_dimension();
    match (&a, &b) {
        (CohomologyResult::Vanishes, CohomologyResult::Vanishes) => Ok(()),
        (
            CohomologyResult::Single {
                degree: d1,
                dimension: x,
                ..
            },
            CohomologyResult::Single {
                degree: d2,
                dimension: y,
                ..
            },
        ) => {
            ensure!(
                d1 + d2 == n && x == y,
                "{chi}: Serre partner {partner} gives {b:?} for {a:?}"
            );
            Ok(())
        }
        _ => Err(format!("{chi}: only one side of the Serre pair vanishes")),
    }
}

/// Histogram of coset lengths from the engine.
pub fn engine_histogram(p: &ParabolicSubgroup) -> Vec<u64> {
    roofcalc::weyl::length_histogram(&p.coset_lengths(DEFAULT_CAP).unwrap())
}

/// Orthogonal coordinates of a weight as `(numerator, denominator)` pairs.
pub fn ortho(sys: &RootSystem, chi: &Weight) -> Vec<(i64, i64)> {
    sys.to_orthogonal(chi)
        .unwrap()
        .into_iter()
        .map(|r| (*r.numer(), *r.denom()))
        .collect()
}

/// Integer orthogonal vector (all denominators one).
pub fn ortho_int(sys: &RootSystem, chi: &Weight) -> Vec<i64> {
    ortho(sys, chi)
        .into_iter()
        .map(|(n, d)| {
            assert_eq!(d, 1, "non-integral orthogonal coordinate");
            n
        })
        .collect()
}

pub fn count_map(ws: &WeightMultiset) -> BTreeMap<Weight, u64> {
    ws.iter().map(|(w, m)| (w.clone(), m)).collect()
}
