//! Weyl group elements, parabolic subgroups, orbits and minimal coset
//! representatives.
//!
//! An element is identified by the image of `ρ`, which is regular, so the
//! image determines the element. Reduced words are recovered from the image by
//! descending to the dominant chamber.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Default cap on the number of elements any single enumeration may produce.
pub const DEFAULT_CAP: usize = 10_000_000;

/// An element of the Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    word: Vec<usize>,
    key: Weight,
}

impl WeylElement {
    /// Reduced word as 1-based node labels; `[1, 3]` is `s_1 s_3`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The image of `ρ`, which identifies the element.
    pub fn canonical_key(&self) -> &Weight {
        &self.key
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("id");
        }
        for (k, s) in self.word.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "s{s}")?;
        }
        Ok(())
    }
}

impl RootSystem {
    pub fn identity(&self) -> WeylElement {
        WeylElement {
            word: Vec::new(),
            key: self.rho().clone(),
        }
    }

    /// Builds the element `s_{w_1} ⋯ s_{w_k}`; the word need not be reduced.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        for &s in word {
            self.check_node(s)?;
        }
        let mut key = self.rho().clone();
        for &s in word.iter().rev() {
            self.reflect_in_place(s, &mut key);
        }
        Ok(self.element_from_key(key))
    }

    /// Recovers the element whose image of `ρ` is `key`.
    ///
    /// Panics in debug builds if `key` is not in the orbit of `ρ`.
    pub fn element_from_key(&self, key: Weight) -> WeylElement {
        let (word, end) = descend_to_dominant(self, &key);
        debug_assert_eq!(&end, self.rho());
        WeylElement { word, key }
    }

    /// Applies `w` to `χ`, rightmost reflection first.
    pub fn act(&self, w: &WeylElement, chi: &Weight) -> Weight {
        self.act_word(w.word(), chi)
    }

    pub fn act_word(&self, word: &[usize], chi: &Weight) -> Weight {
        let mut out = chi.clone();
        for &s in word.iter().rev() {
            self.reflect_in_place(s, &mut out);
        }
        out
    }

    /// Product `v w`.
    pub fn compose(&self, v: &WeylElement, w: &WeylElement) -> WeylElement {
        let key = self.act(v, w.canonical_key());
        self.element_from_key(key)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut word = w.word().to_vec();
        word.reverse();
        let key = self.act_word(&word, self.rho());
        self.element_from_key(key)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        // w⁻¹β < 0 exactly when ⟨wρ, β∨⟩ < 0, and ℓ(w) = ℓ(w⁻¹)
        self.positive_roots()
            .iter()
            .filter(|r| self.pair_root(w.canonical_key(), r) < 0)
            .count()
    }

    /// `|W|`, computed from the classification.
    pub fn weyl_group_order(&self) -> u128 {
        use crate::rootsys::CartanType::*;
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        self.components()
            .iter()
            .map(|&(t, n)| match t {
                A => fact(n + 1),
                C => (1u128 << n) * fact(n),
                D => (1u128 << (n - 1)) * fact(n),
                F4 => 1152,
                G2 => 12,
            })
            .product()
    }
}

/// Repeatedly reflects the lowest-index negative coordinate. Returns the
/// nodes used, in order, and the dominant endpoint.
fn descend_to_dominant(sys: &RootSystem, start: &Weight) -> (Vec<usize>, Weight) {
    let mut cur = start.clone();
    let mut word = Vec::new();
    while let Some(i) = cur.coords().iter().position(|&c| c < 0) {
        sys.reflect_in_place(i + 1, &mut cur);
        word.push(i + 1);
    }
    (word, cur)
}

/// The parabolic subgroup obtained by crossing out some Dynkin nodes.
#[derive(Clone, Debug)]
pub struct ParabolicSubgroup {
    sys: Arc<RootSystem>,
    crossed: Vec<usize>,
    retained: Vec<usize>,
    retained_mask: Vec<bool>,
    levi_roots: Vec<usize>,
}

impl PartialEq for ParabolicSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.sys.cartan() == other.sys.cartan() && self.crossed == other.crossed
    }
}

impl ParabolicSubgroup {
    /// `crossed` holds the 1-based labels of the crossed-out nodes.
    pub fn new(sys: Arc<RootSystem>, crossed: &[usize]) -> Result<Self> {
        for &c in crossed {
            sys.check_node(c)?;
        }
        let mut crossed = crossed.to_vec();
        crossed.sort_unstable();
        crossed.dedup();
        let retained: Vec<usize> = (1..=sys.rank()).filter(|n| !crossed.contains(n)).collect();
        let mut retained_mask = vec![false; sys.rank()];
        for &n in &retained {
            retained_mask[n - 1] = true;
        }
        let levi_roots = sys
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, r)| r.supported_on(&retained_mask))
            .map(|(k, _)| k)
            .collect();
        Ok(ParabolicSubgroup {
            sys,
            crossed,
            retained,
            retained_mask,
            levi_roots,
        })
    }

    /// The whole group (nothing crossed).
    pub fn full(sys: Arc<RootSystem>) -> Self {
        Self::new(sys, &[]).expect("empty crossing is always valid")
    }

    /// The Borel subgroup (everything crossed).
    pub fn borel(sys: Arc<RootSystem>) -> Self {
        let all: Vec<usize> = (1..=sys.rank()).collect();
        Self::new(sys, &all).expect("all nodes are in range")
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.sys
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    pub fn crossed(&self) -> &[usize] {
        &self.crossed
    }

    pub fn retained(&self) -> &[usize] {
        &self.retained
    }

    pub fn is_retained(&self, node: usize) -> bool {
        self.retained_mask[node - 1]
    }

    /// Indices into `root_system().positive_roots()` of the Levi roots.
    pub fn levi_root_indices(&self) -> &[usize] {
        &self.levi_roots
    }

    pub fn levi_roots(&self) -> impl Iterator<Item = &crate::rootsys::Root> {
        self.levi_roots
            .iter()
            .map(|&k| &self.sys.positive_roots()[k])
    }

    /// `dim G/P`, the number of positive roots outside the Levi factor.
    pub fn quotient_dimension(&self) -> usize {
        self.sys.positive_roots().len() - self.levi_roots.len()
    }

    /// Sum of the positive roots outside the Levi factor, i.e. `2ρ − 2ρ_L`.
    pub fn nilradical_weight(&self) -> Weight {
        let mut out = Weight::zero(self.rank());
        for (k, r) in self.sys.positive_roots().iter().enumerate() {
            if !self.levi_roots.contains(&k) {
                out += &r.weight;
            }
        }
        out
    }

    /// Conjugates `χ` under `W_I` into the retained-dominant chamber.
    pub fn dominant_conjugate(&self, chi: &Weight) -> Weight {
        let mut cur = chi.clone();
        while let Some(&n) = self.retained.iter().find(|&&n| cur[n - 1] < 0) {
            self.sys.reflect_in_place(n, &mut cur);
        }
        cur
    }

    /// `w_0` of `W_I`.
    pub fn longest_element(&self) -> WeylElement {
        let mut key = self.sys.rho().clone();
        while let Some(&n) = self.retained.iter().find(|&&n| key[n - 1] > 0) {
            self.sys.reflect_in_place(n, &mut key);
        }
        self.sys.element_from_key(key)
    }

    /// The full `W_I`-orbit of `χ`, sorted lexicographically.
    pub fn orbit(&self, chi: &Weight, cap: usize) -> Result<Vec<Weight>> {
        self.sys.check_weight(chi)?;
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(chi.clone());
        queue.push_back(chi.clone());
        while let Some(cur) = queue.pop_front() {
            for &n in &self.retained {
                if cur[n - 1] == 0 {
                    continue;
                }
                let next = self.sys.reflect(n, &cur);
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        return Err(Error::ResourceLimit { cap, what: "orbit" });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Weight with coefficient 1 on crossed nodes and 0 elsewhere; its
    /// stabilizer in `W` is exactly `W_I`.
    pub fn probe_weight(&self) -> Weight {
        Weight::sum_of_fundamentals(self.rank(), &self.crossed)
    }

    /// Lengths of the minimal representatives of `W/W_I`, sorted ascending.
    ///
    /// The orbit of the probe weight is walked breadth-first from the dominant
    /// point; the BFS depth of an orbit point is the length of the minimal
    /// representative of its coset.
    pub fn coset_lengths(&self, cap: usize) -> Result<Vec<u32>> {
        Ok(self.probe_orbit(cap)?.into_iter().map(|(_, d)| d).collect())
    }

    fn probe_orbit(&self, cap: usize) -> Result<Vec<(Weight, u32)>> {
        let start = self.probe_weight();
        let mut depth: HashMap<Weight, u32> = HashMap::new();
        let mut order = vec![(start.clone(), 0u32)];
        depth.insert(start, 0);
        let mut head = 0;
        while head < order.len() {
            let (cur, d) = order[head].clone();
            head += 1;
            for n in 1..=self.rank() {
                // only upward steps: a positive coordinate reflects to a longer coset
                if cur[n - 1] <= 0 {
                    continue;
                }
                let next = self.sys.reflect(n, &cur);
                if !depth.contains_key(&next) {
                    if depth.len() >= cap {
                        return Err(Error::ResourceLimit {
                            cap,
                            what: "coset representatives",
                        });
                    }
                    depth.insert(next.clone(), d + 1);
                    order.push((next, d + 1));
                }
            }
        }
        Ok(order)
    }

    /// One minimal-length representative per coset `wW_I`, with its length,
    /// sorted by length and then by reduced word.
    pub fn minimal_coset_reps(&self, cap: usize) -> Result<Vec<(WeylElement, u32)>> {
        let mut out: Vec<(WeylElement, u32)> = self
            .probe_orbit(cap)?
            .into_iter()
            .map(|(mu, d)| {
                let (word, _) = descend_to_dominant(&self.sys, &mu);
                let elem = self.sys.element_from_word(&word).expect("nodes in range");
                debug_assert_eq!(elem.word().len(), d as usize);
                (elem, d)
            })
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.word().cmp(b.0.word())));
        Ok(out)
    }

    /// Key for on-disk caches, e.g. `C5_x3` or `F4_x2-3`.
    pub fn cache_key(&self) -> String {
        let nodes: Vec<String> = self.crossed.iter().map(|n| n.to_string()).collect();
        format!("{}_x{}", self.sys.label(), nodes.join("-"))
    }
}

/// Length generating function of `W^I` as a coefficient vector.
pub fn length_histogram(lengths: &[u32]) -> Vec<u64> {
    let top = lengths.iter().copied().max().unwrap_or(0) as usize;
    let mut h = vec![0u64; top + 1];
    for &l in lengths {
        h[l as usize] += 1;
    }
    if lengths.is_empty() {
        h.clear();
    }
    h
}

/// Directory of plain-text coset length files, one per parabolic.
///
/// Each file holds the sorted lengths as whitespace-separated integers.
#[derive(Clone, Debug)]
pub struct CosetCache {
    dir: PathBuf,
}

impl CosetCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CosetCache { dir: dir.into() }
    }

    pub fn path_for(&self, p: &ParabolicSubgroup) -> PathBuf {
        self.dir.join(format!("{}.txt", p.cache_key()))
    }

    /// Reads cached lengths, computing and storing them on a miss.
    pub fn coset_lengths(&self, p: &ParabolicSubgroup, cap: usize) -> Result<Vec<u32>> {
        let path = self.path_for(p);
        if path.exists() {
            return read_lengths(&path);
        }
        let lengths = p.coset_lengths(cap)?;
        write_lengths(&self.dir, &path, &lengths)?;
        Ok(lengths)
    }
}

fn cache_err(path: &Path, reason: impl ToString) -> Error {
    Error::Cache {
        path: path.display().to_string(),
        reason: reason.to_string(),
    }
}

fn read_lengths(path: &Path) -> Result<Vec<u32>> {
    let text = fs::read_to_string(path).map_err(|e| cache_err(path, e))?;
    let lengths = text
        .split_whitespace()
        .map(|t| t.parse::<u32>().map_err(|e| cache_err(path, e)))
        .collect::<Result<Vec<_>>>()?;
    if lengths.windows(2).any(|w| w[0] > w[1]) {
        return Err(cache_err(path, "lengths are not sorted"));
    }
    Ok(lengths)
}

fn write_lengths(dir: &Path, path: &Path, lengths: &[u32]) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| cache_err(dir, e))?;
    let mut text = lengths
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    text.push('\n');
    fs::write(path, text).map_err(|e| cache_err(path, e))
}
