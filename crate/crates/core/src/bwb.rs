//! Borel–Weil–Bott for homogeneous bundles `E_P(χ)` on `G/P`.
//!
//! `χ + ρ` is straightened into the dominant chamber by simple reflections.
//! A zero coordinate at any point means `χ + ρ` is singular and all
//! cohomology vanishes; otherwise the number of reflections is the unique
//! nonzero degree and `w•χ` is the highest weight whose dual irrep appears.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::reps::{require_dominant, weyl_dimension};
use crate::rootsys::{RootSystem, Weight};
use crate::serde_big;
use crate::weyl::{ParabolicSubgroup, WeylElement};

/// Outcome of Borel–Weil–Bott for one weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum CohomologyResult {
    Vanishes,
    Single {
        degree: usize,
        /// `w•χ`; the cohomology is the dual of `V_G(w•χ)`.
        g_highest_weight: Weight,
        #[serde(
            serialize_with = "serde_big::ser_uint",
            deserialize_with = "serde_big::de_uint"
        )]
        dimension: BigUint,
    },
}

impl CohomologyResult {
    pub fn is_vanishing(&self) -> bool {
        matches!(self, CohomologyResult::Vanishes)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomologyResult::Vanishes => None,
            CohomologyResult::Single { degree, .. } => Some(*degree),
        }
    }

    pub fn dimension(&self) -> Option<&BigUint> {
        match self {
            CohomologyResult::Vanishes => None,
            CohomologyResult::Single { dimension, .. } => Some(dimension),
        }
    }
}

/// `w•χ = w(χ + ρ) − ρ`.
pub fn dot_action(sys: &RootSystem, w: &WeylElement, chi: &Weight) -> Weight {
    &sys.act(w, &(chi + sys.rho())) - sys.rho()
}

/// Straightening trace: the reflections applied (in order) and the final
/// vector, or `None` if a zero coordinate appeared.
pub fn straighten(sys: &RootSystem, chi: &Weight) -> Option<(Vec<usize>, Weight)> {
    let mut v = chi + sys.rho();
    let mut steps = Vec::new();
    loop {
        if v.coords().contains(&0) {
            return None;
        }
        match v.coords().iter().position(|&c| c < 0) {
            None => return Some((steps, v)),
            Some(i) => {
                sys.reflect_in_place(i + 1, &mut v);
                steps.push(i + 1);
            }
        }
    }
}

/// Cohomology of `E_P(χ)` on `G/P` for `χ` dominant for `P`.
pub fn bwb(p: &ParabolicSubgroup, chi: &Weight) -> Result<CohomologyResult> {
    require_dominant(chi, p)?;
    let sys = p.root_system();
    Ok(match straighten(sys, chi) {
        None => CohomologyResult::Vanishes,
        Some((steps, v)) => {
            let top = &v - sys.rho();
            let dimension =
                weyl_dimension(&ParabolicSubgroup::full(p.root_system_arc().clone()), &top)?;
            CohomologyResult::Single {
                degree: steps.len(),
                g_highest_weight: top,
                dimension,
            }
        }
    })
}

/// One nonzero degree of a direct sum of homogeneous bundles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeEntry {
    #[serde(
        serialize_with = "serde_big::ser_uint",
        deserialize_with = "serde_big::de_uint"
    )]
    pub dimension: BigUint,
    /// `(summand χ, w•χ)` for every summand contributing here.
    pub contributions: Vec<(Weight, Weight)>,
}

/// Cohomology of `⊕ E_P(χ_k)`, degree by degree; absent degrees are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleCohomology {
    pub per_degree: BTreeMap<usize, DegreeEntry>,
}

impl BundleCohomology {
    pub fn is_zero(&self) -> bool {
        self.per_degree.is_empty()
    }

    pub fn dimension_in(&self, degree: usize) -> BigUint {
        self.per_degree
            .get(&degree)
            .map(|e| e.dimension.clone())
            .unwrap_or_default()
    }

    pub fn dimensions(&self) -> BTreeMap<usize, BigUint> {
        self.per_degree
            .iter()
            .map(|(&d, e)| (d, e.dimension.clone()))
            .collect()
    }
}

/// Runs [`bwb`] on every summand and adds up the results per degree.
pub fn bundle_cohomology(p: &ParabolicSubgroup, summands: &[Weight]) -> Result<BundleCohomology> {
    let mut out = BundleCohomology::default();
    for chi in summands {
        if let CohomologyResult::Single {
            degree,
            g_highest_weight,
            dimension,
        } = bwb(p, chi)?
        {
            let entry = out.per_degree.entry(degree).or_insert_with(|| DegreeEntry {
                dimension: BigUint::default(),
                contributions: Vec::new(),
            });
            entry.dimension += dimension;
            entry.contributions.push((chi.clone(), g_highest_weight));
        }
    }
    Ok(out)
}
