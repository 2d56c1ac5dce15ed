//! Weyl's SU(N) → SU(N−1) branching rule and its iteration down to SU(3).
//!
//! An SU(N) label `(P₁, …, P_{N−1})` branches into one SU(N−1) label per tuple
//! `(k₁, …, k_{N−1})` with `1 ≤ kⱼ ≤ Pⱼ`:
//!
//! ```text
//! Qⱼ = Pⱼ − kⱼ + kⱼ₊₁,   j = 1 … N−2
//! ```
//!
//! Every `Qⱼ ≥ 1`, and there are exactly `∏ Pⱼ` tuples.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::irrep::IrrepLabel;

/// Multiset of labels of one group SU(M), iterated in lexicographic label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchMultiset {
    group: usize,
    entries: BTreeMap<IrrepLabel, BigUint>,
}

impl BranchMultiset {
    fn empty(group: usize) -> Self {
        Self {
            group,
            entries: BTreeMap::new(),
        }
    }

    pub fn singleton(label: IrrepLabel) -> Self {
        let mut set = Self::empty(label.group());
        set.entries.insert(label, BigUint::one());
        set
    }

    fn add(&mut self, label: IrrepLabel, multiplicity: BigUint) {
        debug_assert_eq!(label.group(), self.group);
        if multiplicity.is_zero() {
            return;
        }
        *self.entries.entry(label).or_default() += multiplicity;
    }

    /// M of SU(M) shared by every label in the multiset.
    pub fn group(&self) -> usize {
        self.group
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, label: &IrrepLabel) -> Option<&BigUint> {
        self.entries.get(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IrrepLabel, &BigUint)> {
        self.entries.iter()
    }

    /// Sum of all multiplicities.
    pub fn total_multiplicity(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// `Σ multiplicity · f(label)`.
    pub fn weighted_sum<F>(&self, mut f: F) -> BigUint
    where
        F: FnMut(&IrrepLabel) -> BigUint,
    {
        self.entries.iter().map(|(label, m)| m * f(label)).sum()
    }
}

impl<'a> IntoIterator for &'a BranchMultiset {
    type Item = (&'a IrrepLabel, &'a BigUint);
    type IntoIter = std::collections::btree_map::Iter<'a, IrrepLabel, BigUint>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

fn require_branchable(label: &IrrepLabel) -> Result<()> {
    if label.group() < 3 {
        return Err(Error::RankTooSmall {
            group: label.group(),
            minimum: 3,
        });
    }
    Ok(())
}

/// Calls `f` with the child label entries of every branching tuple, one call per
/// tuple, in lexicographic tuple order. Caller guarantees `p.len() >= 2`.
pub(crate) fn for_each_branch<F>(p: &[u32], mut f: F)
where
    F: FnMut(&[u32]),
{
    debug_assert!(p.len() >= 2);
    let mut k = vec![1u32; p.len()];
    let mut q = vec![0u32; p.len() - 1];
    loop {
        for j in 0..q.len() {
            q[j] = p[j] - k[j] + k[j + 1];
        }
        f(&q);

        // odometer, last index fastest
        let mut pos = k.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if k[pos] < p[pos] {
                k[pos] += 1;
                break;
            }
            k[pos] = 1;
        }
    }
}

/// Memo tables for branching steps and chain masses.
///
/// Entries are inserted whole behind a lock, so concurrent readers never see a
/// partially built value. Results are identical with or without the cache.
#[derive(Debug, Default)]
pub struct BranchCache {
    steps: RwLock<HashMap<IrrepLabel, Arc<BranchMultiset>>>,
    masses: RwLock<HashMap<IrrepLabel, BigUint>>,
}

impl BranchCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn branch_step(&self, label: &IrrepLabel) -> Result<Arc<BranchMultiset>> {
        require_branchable(label)?;
        if let Some(hit) = self.steps.read().expect("cache lock poisoned").get(label) {
            return Ok(Arc::clone(hit));
        }
        let computed = Arc::new(compute_branch_step(label));
        self.steps
            .write()
            .expect("cache lock poisoned")
            .insert(label.clone(), Arc::clone(&computed));
        Ok(computed)
    }

    pub fn su3_content(&self, label: &IrrepLabel) -> Result<BranchMultiset> {
        require_branchable(label)?;
        let mut level = BranchMultiset::singleton(label.clone());
        while level.group() > 3 {
            let mut next = BranchMultiset::empty(level.group() - 1);
            for (parent, mult) in &level {
                for (child, child_mult) in self.branch_step(parent)?.iter() {
                    next.add(child.clone(), mult * child_mult);
                }
            }
            level = next;
        }
        Ok(level)
    }

    pub fn chain_multiplicity_mass(&self, label: &IrrepLabel) -> Result<BigUint> {
        require_branchable(label)?;
        if label.group() == 3 {
            return Ok(BigUint::one());
        }
        if let Some(hit) = self.masses.read().expect("cache lock poisoned").get(label) {
            return Ok(hit.clone());
        }
        let step = self.branch_step(label)?;
        let mut mass = BigUint::zero();
        for (child, mult) in step.iter() {
            mass += mult * self.chain_multiplicity_mass(child)?;
        }
        self.masses
            .write()
            .expect("cache lock poisoned")
            .insert(label.clone(), mass.clone());
        Ok(mass)
    }
}

fn compute_branch_step(label: &IrrepLabel) -> BranchMultiset {
    // ∏Pⱼ tuples are enumerated one by one, so every count fits in u64.
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for_each_branch(label.entries(), |q| {
        if let Some(c) = counts.get_mut(q) {
            *c += 1;
        } else {
            counts.insert(q.to_vec(), 1);
        }
    });
    let mut set = BranchMultiset::empty(label.group() - 1);
    for (q, c) in counts {
        set.add(IrrepLabel::from_vec_unchecked(q), BigUint::from(c));
    }
    set
}

/// One SU(N) → SU(N−1) branching step with identical children merged.
pub fn branch_step(label: &IrrepLabel) -> Result<BranchMultiset> {
    require_branchable(label)?;
    Ok(compute_branch_step(label))
}

/// SU(3) content of an SU(N) label: branching iterated down to SU(3), with
/// multiplicities multiplied along each chain and added across chains.
pub fn su3_content(label: &IrrepLabel) -> Result<BranchMultiset> {
    BranchCache::new().su3_content(label)
}

/// Number of complete branching chains from `label` down to SU(3), i.e. the number
/// of terms in the unaggregated nested sum. 1 for SU(3) labels.
pub fn chain_multiplicity_mass(label: &IrrepLabel) -> Result<BigUint> {
    BranchCache::new().chain_multiplicity_mass(label)
}

/// Closed form `(N + 2)(N − 3)/2` for the number of summation indices in the
/// nested sum reducing SU(N) to SU(3).
pub fn summation_count(group: usize) -> Result<u64> {
    if group < 3 {
        return Err(Error::RankTooSmall { group, minimum: 3 });
    }
    let n = group as u64;
    Ok((n + 2) * (n - 3) / 2)
}

/// The same count obtained by walking the chain: the SU(M) → SU(M−1) step has
/// `M − 1` indices, for M = N down to 4.
pub fn summation_indices_counted(group: usize) -> Result<u64> {
    if group < 3 {
        return Err(Error::RankTooSmall { group, minimum: 3 });
    }
    Ok((4..=group).map(|m| (m - 1) as u64).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irrep::{su2_dim, weyl_dim};

    fn label(p: &[u32]) -> IrrepLabel {
        IrrepLabel::new(p.len() + 1, p.to_vec()).unwrap()
    }

    fn as_pairs(set: &BranchMultiset) -> Vec<(Vec<u32>, u64)> {
        set.iter()
            .map(|(l, m)| (l.entries().to_vec(), u64::try_from(m).unwrap()))
            .collect()
    }

    #[test]
    fn su3_to_su2() {
        let set = branch_step(&label(&[2, 2])).unwrap();
        assert_eq!(set.group(), 2);
        assert_eq!(
            as_pairs(&set),
            vec![(vec![1], 1), (vec![2], 2), (vec![3], 1)]
        );
        let dims = set.weighted_sum(|l| su2_dim(l.entries()[0]).unwrap().into_inner());
        assert_eq!(dims, BigUint::from(8u32));
    }

    #[test]
    fn trivial_branches_to_trivial() {
        for n in 3..=9 {
            let set = branch_step(&IrrepLabel::trivial(n).unwrap()).unwrap();
            assert_eq!(as_pairs(&set), vec![(vec![1; n - 2], 1)]);
        }
    }

    #[test]
    fn su4_fundamental() {
        let set = branch_step(&label(&[2, 1, 1])).unwrap();
        assert_eq!(as_pairs(&set), vec![(vec![1, 1], 1), (vec![2, 1], 1)]);
    }

    #[test]
    fn su2_cannot_branch() {
        let err = branch_step(&label(&[4])).unwrap_err();
        assert_eq!(
            err,
            Error::RankTooSmall {
                group: 2,
                minimum: 3
            }
        );
        assert!(su3_content(&label(&[4])).is_err());
        assert!(chain_multiplicity_mass(&label(&[4])).is_err());
    }

    #[test]
    fn su3_content_examples() {
        let set = su3_content(&label(&[5, 2])).unwrap();
        assert_eq!(as_pairs(&set), vec![(vec![5, 2], 1)]);

        let set = su3_content(&label(&[2, 1, 1])).unwrap();
        assert_eq!(as_pairs(&set), vec![(vec![1, 1], 1), (vec![2, 1], 1)]);

        let set = su3_content(&label(&[2, 1, 1, 1])).unwrap();
        assert_eq!(set.group(), 3);
        let dims = set.weighted_sum(|l| weyl_dim(l).into_inner());
        assert_eq!(dims, BigUint::from(5u32));
    }

    #[test]
    fn trivial_su3_content() {
        for n in 3..=9 {
            let set = su3_content(&IrrepLabel::trivial(n).unwrap()).unwrap();
            assert_eq!(as_pairs(&set), vec![(vec![1, 1], 1)]);
        }
    }

    #[test]
    fn chain_mass_examples() {
        assert_eq!(
            chain_multiplicity_mass(&label(&[7, 3])).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            chain_multiplicity_mass(&label(&[2, 1, 1])).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            chain_multiplicity_mass(&label(&[2, 2, 2])).unwrap(),
            BigUint::from(8u32)
        );
    }

    #[test]
    fn chain_mass_is_total_su3_multiplicity() {
        let cache = BranchCache::new();
        for p in [[2u32, 1, 2, 1], [3, 1, 1, 2], [2, 2, 2, 2]] {
            let l = label(&p);
            assert_eq!(
                cache.chain_multiplicity_mass(&l).unwrap(),
                su3_content(&l).unwrap().total_multiplicity()
            );
        }
    }

    #[test]
    fn cached_and_uncached_agree() {
        let cache = BranchCache::new();
        for p in [[3u32, 2, 1, 2], [1, 2, 3, 1], [3, 2, 1, 2]] {
            let l = label(&p);
            assert_eq!(*cache.branch_step(&l).unwrap(), branch_step(&l).unwrap());
            assert_eq!(cache.su3_content(&l).unwrap(), su3_content(&l).unwrap());
        }
    }

    #[test]
    fn summation_counts() {
        assert_eq!(summation_count(3).unwrap(), 0);
        assert_eq!(summation_count(4).unwrap(), 3);
        assert_eq!(summation_count(5).unwrap(), 7);
        assert!(summation_count(2).is_err());
        for n in 3..=30 {
            assert_eq!(
                summation_count(n).unwrap(),
                summation_indices_counted(n).unwrap()
            );
        }
    }
}
