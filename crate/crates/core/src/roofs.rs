//! Homogeneous roofs, Koszul cohomology of their Calabi–Yau zero loci, and
//! L-equivalence reports.
//!
//! A roof is `G/Q` with `Q` obtained by crossing two Dynkin nodes; crossing
//! either node alone gives the bases `F_i = G/P_i`. The zero locus `Z_i` of a
//! general section of `E_i = E_{P_i}(ω_a + ω_b)` is never built: its twisted
//! cohomology is read off the Koszul complex `∧^p E_i∨ ⊗ O_i(1)` on `F_i`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::bwb::{bundle_cohomology, BundleCohomology};
use crate::error::{Error, Result};
use crate::motive::{class_of_quotient, igr_class, roof_identity_residual, LPolynomial};
use crate::reps::{
    decompose_levi, dual_highest_weight, exterior_power, is_ample, require_dominant,
    weight_multiset, weyl_dimension,
};
use crate::rootsys::{CartanType, RootSystem, Weight};
use crate::serde_big::{self, Big};
use crate::weyl::ParabolicSubgroup;

/// Rows of the homogeneous roof classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RoofLabel {
    AxA,
    #[serde(rename = "A_M")]
    AM,
    #[serde(rename = "A_G")]
    AG,
    C,
    D,
    F4,
    G2,
}

impl RoofLabel {
    pub const ALL: [RoofLabel; 7] = [
        RoofLabel::AxA,
        RoofLabel::AM,
        RoofLabel::AG,
        RoofLabel::C,
        RoofLabel::D,
        RoofLabel::F4,
        RoofLabel::G2,
    ];

    pub fn takes_parameter(self) -> bool {
        !matches!(self, RoofLabel::F4 | RoofLabel::G2)
    }
}

impl fmt::Display for RoofLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RoofLabel::AxA => "AxA",
            RoofLabel::AM => "A_M",
            RoofLabel::AG => "A_G",
            RoofLabel::C => "C",
            RoofLabel::D => "D",
            RoofLabel::F4 => "F4",
            RoofLabel::G2 => "G2",
        })
    }
}

impl FromStr for RoofLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| *c != '_' && *c != '-')
            .collect::<String>()
            .to_ascii_uppercase();
        match norm.as_str() {
            "AXA" => Ok(RoofLabel::AxA),
            "AM" => Ok(RoofLabel::AM),
            "AG" => Ok(RoofLabel::AG),
            "C" => Ok(RoofLabel::C),
            "D" => Ok(RoofLabel::D),
            "F4" | "F" => Ok(RoofLabel::F4),
            "G2" | "G" => Ok(RoofLabel::G2),
            _ => Err(Error::UnknownLabel(s.to_string())),
        }
    }
}

/// One member of a roof family.
#[derive(Clone, Debug)]
pub struct RoofFamily {
    pub label: RoofLabel,
    pub r: Option<usize>,
    pub group: Vec<(CartanType, usize)>,
    /// The two crossed nodes defining `Q`; node `crossed_pair[i]` alone gives `P_{i+1}`.
    pub crossed_pair: [usize; 2],
    pub roof_rank: usize,
    pub base_dims: usize,
    pub bundle_rank: usize,
    pub bundle_weight: Weight,
    /// Reason the full pipeline does not apply, if any.
    pub ineligible: Option<String>,
    sys: Arc<RootSystem>,
}

impl RoofFamily {
    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.sys
    }

    pub fn group_label(&self) -> String {
        self.sys.label()
    }

    /// `P_1` or `P_2`.
    pub fn base(&self, side: usize) -> ParabolicSubgroup {
        assert!(side == 1 || side == 2);
        ParabolicSubgroup::new(self.sys.clone(), &[self.crossed_pair[side - 1]])
            .expect("catalog nodes are in range")
    }

    pub fn roof_parabolic(&self) -> ParabolicSubgroup {
        ParabolicSubgroup::new(self.sys.clone(), &self.crossed_pair)
            .expect("catalog nodes are in range")
    }

    /// `O_i(1)`, the ample generator on `F_i`.
    pub fn twist(&self, side: usize) -> Weight {
        Weight::fundamental(self.sys.rank(), self.crossed_pair[side - 1])
    }

    pub fn lefschetz_applicable(&self) -> bool {
        self.base_dims > self.bundle_rank + 2
    }
}

fn need_r(label: RoofLabel, r: Option<usize>, min: usize) -> Result<usize> {
    match r {
        None => Err(Error::InvalidParameter(format!(
            "roof family {label} needs a parameter r >= {min}"
        ))),
        Some(r) if r < min => Err(Error::InvalidParameter(format!(
            "roof family {label} requires r >= {min}, got {r}"
        ))),
        Some(r) => Ok(r),
    }
}

/// Builds a catalog entry and checks it against the geometry it encodes.
pub fn roof_data(label: RoofLabel, r: Option<usize>) -> Result<RoofFamily> {
    use CartanType::*;
    let (group, crossed_pair, roof_rank, base_dims, bundle_rank, ineligible) = match label {
        RoofLabel::AxA => {
            let r = need_r(label, r, 1)?;
            let why = "zero loci of type AxA are empty".to_string();
            (vec![(A, r), (A, r)], [1, r + 1], r + 1, r, r + 1, Some(why))
        }
        RoofLabel::AM => {
            let r = need_r(label, r, 2)?;
            let why = "roofs of type A_M give finite zero loci and no non-trivial L-equivalence"
                .to_string();
            (vec![(A, r)], [1, r], r, r, r, Some(why))
        }
        RoofLabel::AG => {
            let r = need_r(label, r, 2)?;
            (vec![(A, 2 * r)], [r, r + 1], r + 1, r * r + r, r + 1, None)
        }
        RoofLabel::C => {
            let r = need_r(label, r, 1)?;
            let why = (r == 1).then(|| {
                "C2: Picard restriction to the zero loci is not guaranteed (dim F - rank E <= 2)".to_string()
            });
            (
                vec![(C, 3 * r - 1)],
                [2 * r - 1, 2 * r],
                2 * r,
                6 * r * r - 3 * r,
                2 * r,
                why,
            )
        }
        RoofLabel::D => {
            let r = need_r(label, r, 4)?;
            let why = (r == 4).then(|| {
                "D4: Picard restriction to the zero loci is not guaranteed (dim F - rank E <= 2)".to_string()
            });
            (vec![(D, r)], [r - 1, r], r, r * (r - 1) / 2, r, why)
        }
        RoofLabel::F4 | RoofLabel::G2 => {
            if r.is_some() {
                return Err(Error::InvalidParameter(format!(
                    "roof family {label} takes no parameter"
                )));
            }
            if label == RoofLabel::F4 {
                (vec![(F4, 4)], [2, 3], 3, 20, 3, None)
            } else {
                (vec![(G2, 2)], [1, 2], 2, 5, 2, None)
            }
        }
    };
    let sys = Arc::new(RootSystem::direct_sum(&group)?);
    let bundle_weight = Weight::sum_of_fundamentals(sys.rank(), &crossed_pair);
    let fam = RoofFamily {
        label,
        r,
        group,
        crossed_pair,
        roof_rank,
        base_dims,
        bundle_rank,
        bundle_weight,
        ineligible,
        sys,
    };
    check_family(&fam)?;
    Ok(fam)
}

fn check_family(fam: &RoofFamily) -> Result<()> {
    let bad = |what: String| {
        Err(Error::InvalidParameter(format!(
            "catalog entry {}: {what}",
            fam.label
        )))
    };
    for side in 1..=2 {
        let p = fam.base(side);
        if p.quotient_dimension() != fam.base_dims {
            return bad(format!("dim F{side} = {}", p.quotient_dimension()));
        }
        let rank = weyl_dimension(&p, &fam.bundle_weight)?;
        if rank != BigUint::from(fam.bundle_rank) {
            return bad(format!("rank E{side} = {rank}"));
        }
    }
    // fibres of G/Q -> F_i are P^{rank-1}
    if fam.roof_parabolic().quotient_dimension() != fam.base_dims + fam.roof_rank - 1 {
        return bad("fibre dimension".into());
    }
    if !is_ample(&fam.bundle_weight, &fam.roof_parabolic()) {
        return bad("bundle weight is not ample on G/Q".into());
    }
    Ok(())
}

/// Static description of the catalog for listings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub family: String,
    pub group: String,
    pub crossed: String,
    pub roof_rank: String,
    pub base_dim: String,
    pub bundle_rank: String,
    pub parameter: String,
}

pub fn catalog() -> Vec<CatalogRow> {
    let row = |f: &str, g: &str, x: &str, rr: &str, bd: &str, br: &str, p: &str| CatalogRow {
        family: f.into(),
        group: g.into(),
        crossed: x.into(),
        roof_rank: rr.into(),
        base_dim: bd.into(),
        bundle_rank: br.into(),
        parameter: p.into(),
    };
    vec![
        row("AxA", "A_r x A_r", "{1, r+1}", "r+1", "r", "r+1", "r >= 1"),
        row("A_M", "A_r", "{1, r}", "r", "r", "r", "r >= 2"),
        row("A_G", "A_2r", "{r, r+1}", "r+1", "r^2+r", "r+1", "r >= 2"),
        row(
            "C",
            "C_(3r-1)",
            "{2r-1, 2r}",
            "2r",
            "6r^2-3r",
            "2r",
            "r >= 1 (pipeline r >= 2)",
        ),
        row(
            "D",
            "D_r",
            "{r-1, r}",
            "r",
            "r(r-1)/2",
            "r",
            "r >= 4 (pipeline r >= 5)",
        ),
        row("F4", "F_4", "{2, 3}", "3", "20", "3", "-"),
        row("G2", "G_2", "{1, 2}", "2", "5", "2", "-"),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KoszulStatus {
    Determined,
    Inconclusive,
}

/// Term `∧^p E∨ ⊗ O(1)` of the Koszul complex, split into Levi irreducibles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulColumn {
    pub p: usize,
    /// Highest weights of the summands (after the twist) with multiplicity.
    pub summands: Vec<(Weight, u64)>,
    pub cohomology: BundleCohomology,
}

/// First page of the Koszul spectral sequence and, when it is forced to
/// degenerate, the cohomology of the zero locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroLocusCohomology {
    pub crossed: Vec<usize>,
    pub bundle_weight: Weight,
    pub twist: Weight,
    pub bundle_rank: usize,
    pub columns: Vec<KoszulColumn>,
    pub status: KoszulStatus,
    /// `H^n(Z, twist)` by degree `n`; empty unless `status` is `Determined`.
    pub per_degree: BTreeMap<i64, Big>,
}

impl ZeroLocusCohomology {
    pub fn h0(&self) -> Option<BigUint> {
        match self.status {
            KoszulStatus::Determined => Some(
                self.per_degree
                    .get(&0)
                    .map(|b| b.0.clone())
                    .unwrap_or_default(),
            ),
            KoszulStatus::Inconclusive => None,
        }
    }

    /// True when every column with `p >= 1` has no cohomology at all.
    pub fn higher_columns_vanish(&self) -> bool {
        self.columns
            .iter()
            .filter(|c| c.p >= 1)
            .all(|c| c.cohomology.is_zero())
    }
}

/// Cohomology of `O_Z ⊗ twist` for the zero locus `Z` of a general section
/// of `E_P(bundle_hw)`.
///
/// Term `p` sits in column `−p`; an entry `H^q` of it contributes to total
/// degree `q − p`. A differential can only join an entry in column `−p` to
/// one in column `−p'` with `p' < p` whose total degree is one higher. When no
/// pair of nonzero entries is positioned like that, the first page is the
/// limit and degrees are summed directly; otherwise the result is
/// `Inconclusive`.
pub fn koszul_zero_locus_cohomology(
    p: &ParabolicSubgroup,
    bundle_hw: &Weight,
    twist: &Weight,
    cap: usize,
) -> Result<ZeroLocusCohomology> {
    require_dominant(bundle_hw, p)?;
    require_dominant(twist, p)?;
    let rank = weyl_dimension(p, bundle_hw)?
        .to_usize()
        .ok_or(Error::ResourceLimit {
            cap,
            what: "bundle rank",
        })?;
    let dual = dual_highest_weight(bundle_hw, p)?;
    let dual_weights = weight_multiset(p, &dual, cap)?;

    let mut columns = Vec::with_capacity(rank + 1);
    for k in 0..=rank {
        let pieces = if k == 0 {
            vec![(Weight::zero(p.rank()), 1)]
        } else {
            decompose_levi(&exterior_power(&dual_weights, k, cap)?, p, cap)?
        };
        let summands: Vec<(Weight, u64)> =
            pieces.into_iter().map(|(w, m)| (&w + twist, m)).collect();
        let flat: Vec<Weight> = summands
            .iter()
            .flat_map(|(w, m)| std::iter::repeat_n(w.clone(), *m as usize))
            .collect();
        let cohomology = bundle_cohomology(p, &flat)?;
        columns.push(KoszulColumn {
            p: k,
            summands,
            cohomology,
        });
    }

    // nonzero first-page entries as (p, q, dim)
    let entries: Vec<(usize, usize, &BigUint)> = columns
        .iter()
        .flat_map(|c| {
            c.cohomology
                .per_degree
                .iter()
                .map(move |(&q, e)| (c.p, q, &e.dimension))
        })
        .collect();
    let total = |p: usize, q: usize| q as i64 - p as i64;
    let collides = entries.iter().any(|&(p1, q1, _)| {
        entries
            .iter()
            .any(|&(p2, q2, _)| p2 < p1 && total(p2, q2) == total(p1, q1) + 1)
    });
    let negative = entries.iter().any(|&(p, q, _)| total(p, q) < 0);

    let (status, per_degree) = if collides || negative {
        (KoszulStatus::Inconclusive, BTreeMap::new())
    } else {
        let mut out: BTreeMap<i64, Big> = BTreeMap::new();
        for &(p, q, d) in &entries {
            out.entry(total(p, q))
                .or_insert_with(|| Big(BigUint::default()))
                .0 += d;
        }
        (KoszulStatus::Determined, out)
    };

    Ok(ZeroLocusCohomology {
        crossed: p.crossed().to_vec(),
        bundle_weight: bundle_hw.clone(),
        twist: twist.clone(),
        bundle_rank: rank,
        columns,
        status,
        per_degree,
    })
}

/// Verdict for one roof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoofReport {
    pub family: RoofLabel,
    pub r: Option<usize>,
    pub group: String,
    pub crossed_pair: [usize; 2],
    pub roof_rank: usize,
    pub base_dims: usize,
    pub bundle_rank: usize,
    pub bundle_weight: Weight,
    pub class_f1: LPolynomial,
    pub class_f2: LPolynomial,
    pub classes_equal: bool,
    /// For type C: whether the point-count backend agrees with the coset
    /// backend on both bases.
    pub igr_cross_check: Option<bool>,
    pub residual: LPolynomial,
    pub koszul_status_z1: KoszulStatus,
    pub koszul_status_z2: KoszulStatus,
    #[serde(with = "serde_big::opt_uint")]
    pub h0_z1: Option<BigUint>,
    #[serde(with = "serde_big::opt_uint")]
    pub h0_z2: Option<BigUint>,
    pub cohomology_z1: ZeroLocusCohomology,
    pub cohomology_z2: ZeroLocusCohomology,
    pub lefschetz_applicable: bool,
    pub pipeline_eligible: bool,
    pub certificate: Option<String>,
    /// `Some(true)` when `h0_z1 != h0_z2`, so `Z_1` and `Z_2` cannot be isomorphic
    /// by an isomorphism matching their ample generators.
    /// Withheld when the pipeline or the Koszul computation does not apply.
    pub distinctness: Option<bool>,
    /// Facts taken as given when `distinctness` is reported.
    pub conditional_on: Vec<String>,
    /// A certificate together with a positive distinctness verdict.
    pub nontrivial: bool,
    pub notes: Vec<String>,
}

const CONDITIONS: [&str; 3] = [
    "the zero loci Z1, Z2 of a general section are smooth connected Calabi-Yau varieties",
    "restriction Pic(F_i) -> Pic(Z_i) is an isomorphism preserving the ample generator (Lefschetz, dim F - rank E > 2)",
    "smooth projective Calabi-Yau varieties of Picard number one with equal classes are isomorphic (Liu-Sebag)",
];

/// `L^k([Z1]-[Z2]) = 0` with the exponent written out.
pub fn certificate_text(exponent: usize) -> String {
    format!("L^{exponent}([Z1]-[Z2]) = 0")
}

/// Runs the whole pipeline for one roof.
pub fn verify_roof(label: RoofLabel, r: Option<usize>, cap: usize) -> Result<RoofReport> {
    let fam = roof_data(label, r)?;
    let p1 = fam.base(1);
    let p2 = fam.base(2);
    let class_f1 = class_of_quotient(&p1, cap)?;
    let class_f2 = class_of_quotient(&p2, cap)?;
    let classes_equal = class_f1 == class_f2;

    let igr_cross_check = match (label, fam.r) {
        (RoofLabel::C, Some(r)) => {
            let n = 3 * r - 1;
            Some(igr_class(2 * r - 1, n)? == class_f1 && igr_class(2 * r, n)? == class_f2)
        }
        _ => None,
    };

    let residual = roof_identity_residual(&class_f1, &class_f2, fam.roof_rank);
    let certificate =
        (classes_equal && residual.is_zero()).then(|| certificate_text(fam.roof_rank - 1));

    let t1 = fam.twist(1);
    let (z1, z2) = std::thread::scope(|s| {
        let side1 = s.spawn(|| koszul_zero_locus_cohomology(&p1, &fam.bundle_weight, &t1, cap));
        let z2 = koszul_zero_locus_cohomology(&p2, &fam.bundle_weight, &fam.twist(2), cap);
        (side1.join().expect("Koszul worker panicked"), z2)
    });
    let (z1, z2) = (z1?, z2?);

    let lefschetz_applicable = fam.lefschetz_applicable();
    let pipeline_eligible = fam.ineligible.is_none();
    let both_determined =
        z1.status == KoszulStatus::Determined && z2.status == KoszulStatus::Determined;

    let mut notes = Vec::new();
    if let Some(why) = &fam.ineligible {
        notes.push(format!("distinctness withheld: {why}"));
    }
    if !lefschetz_applicable && fam.ineligible.is_none() {
        notes.push("distinctness withheld: dim F - rank E <= 2".into());
    }
    if !both_determined {
        notes.push(
            "distinctness withheld: Koszul spectral sequence not forced to degenerate".into(),
        );
    }
    if matches!(label, RoofLabel::G2 | RoofLabel::D) {
        notes.push(
            "equality of base classes for this family is known from earlier work; verdict is informational".into(),
        );
    }
    if matches!(
        label,
        RoofLabel::AG | RoofLabel::D | RoofLabel::AxA | RoofLabel::AM
    ) {
        notes.push("the two bases are isomorphic".into());
    }

    let distinctness =
        (pipeline_eligible && lefschetz_applicable && both_determined).then(|| z1.h0() != z2.h0());
    let conditional_on = if distinctness.is_some() {
        CONDITIONS.iter().map(|s| s.to_string()).collect()
    } else {
        Vec::new()
    };
    let nontrivial = certificate.is_some() && distinctness == Some(true);

    Ok(RoofReport {
        family: label,
        r: fam.r,
        group: fam.group_label(),
        crossed_pair: fam.crossed_pair,
        roof_rank: fam.roof_rank,
        base_dims: fam.base_dims,
        bundle_rank: fam.bundle_rank,
        bundle_weight: fam.bundle_weight.clone(),
        class_f1,
        class_f2,
        classes_equal,
        igr_cross_check,
        residual,
        koszul_status_z1: z1.status,
        koszul_status_z2: z2.status,
        h0_z1: z1.h0(),
        h0_z2: z2.h0(),
        cohomology_z1: z1,
        cohomology_z2: z2,
        lefschetz_applicable,
        pipeline_eligible,
        certificate,
        distinctness,
        conditional_on,
        nontrivial,
        notes,
    })
}

impl fmt::Display for RoofReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let param = self.r.map(|r| format!(" (r = {r})")).unwrap_or_default();
        writeln!(
            f,
            "roof {}{param}: group {}, crossed {:?}",
            self.family, self.group, self.crossed_pair
        )?;
        writeln!(
            f,
            "  roof rank {}, dim F_i = {}, rank E_i = {}, E = E_P({})",
            self.roof_rank, self.base_dims, self.bundle_rank, self.bundle_weight
        )?;
        writeln!(f, "  [F1] = {}", self.class_f1)?;
        writeln!(f, "  [F2] = {}", self.class_f2)?;
        writeln!(f, "  classes equal: {}", self.classes_equal)?;
        if let Some(ok) = self.igr_cross_check {
            writeln!(f, "  point-count backend agrees: {ok}")?;
        }
        writeln!(
            f,
            "  residual [P^{}]([F2]-[F1]) = {}",
            self.roof_rank - 2,
            self.residual
        )?;
        for (name, z) in [("Z1", &self.cohomology_z1), ("Z2", &self.cohomology_z2)] {
            writeln!(f, "  {name}: Koszul {:?}", z.status)?;
            for col in &z.columns {
                let dims: Vec<String> = col
                    .cohomology
                    .per_degree
                    .iter()
                    .map(|(q, e)| format!("H^{q}={}", e.dimension))
                    .collect();
                let shown = if dims.is_empty() {
                    "0".to_string()
                } else {
                    dims.join(", ")
                };
                writeln!(f, "    p = {}: {}", col.p, shown)?;
            }
            let table: Vec<String> = z
                .per_degree
                .iter()
                .map(|(n, d)| format!("h^{n} = {}", d.0))
                .collect();
            if z.status == KoszulStatus::Determined {
                let shown = if table.is_empty() {
                    "0".to_string()
                } else {
                    table.join(", ")
                };
                writeln!(f, "    H*({name}, O(1)): {shown}")?;
            }
        }
        let show = |h: &Option<BigUint>| h.as_ref().map_or("-".to_string(), |x| x.to_string());
        writeln!(
            f,
            "  h0 pair: ({}, {})",
            show(&self.h0_z1),
            show(&self.h0_z2)
        )?;
        writeln!(f, "  lefschetz applicable: {}", self.lefschetz_applicable)?;
        writeln!(
            f,
            "  certificate: {}",
            self.certificate.as_deref().unwrap_or("none")
        )?;
        let dist = match self.distinctness {
            Some(true) => "[Z1] != [Z2] (conditional)",
            Some(false) => "not established",
            None => "withheld",
        };
        writeln!(f, "  distinctness: {dist}")?;
        for c in &self.conditional_on {
            writeln!(f, "    assuming: {c}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        write!(f, "  non-trivial L-equivalence: {}", self.nontrivial)
    }
}
