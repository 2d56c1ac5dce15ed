//! Dimensions through the Eisenstein lattice, and the three-way cross-check.
//!
//! An SU(N) label is reduced to its SU(3) content; each SU(3) label `(Q₁, Q₂)`
//! contributes `N(Q₁ + Q₂, Q₂) = Im(((Q₁ + Q₂) + Q₂ω)³)/(3√3)` times its
//! multiplicity. [`dim_via_eisenstein`] sums over the aggregated content,
//! [`dim_nested_literal`] walks every chain of branching tuples separately.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::branching::{for_each_branch, summation_count, BranchCache};
use crate::eisenstein::{lattice_number, lattice_number_via_cube};
use crate::error::{Error, Result};
use crate::irrep::{label_to_eisenstein, weyl_dim, Dimension, IrrepLabel};

/// Default budget for the literal nested sum.
pub const DEFAULT_TERM_CAP: u64 = 1_000_000;

/// Result of the literal nested sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiteralSum {
    pub dimension: Dimension,
    /// Number of terms enumerated, one per branching chain.
    pub terms: u64,
}

/// Per-label record of the three dimension routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub label: IrrepLabel,
    pub dim_weyl: Dimension,
    pub dim_eisenstein: Dimension,
    /// `None` when the literal sum would exceed the term cap.
    pub dim_literal: Option<Dimension>,
    pub agree: bool,
    /// Terms counted by the literal route, or the chain mass when it was skipped.
    pub term_count: BigUint,
    pub summation_indices: u64,
}

impl VerificationReport {
    pub fn literal_skipped(&self) -> bool {
        self.dim_literal.is_none()
    }
}

fn eisenstein_with(cache: &BranchCache, label: &IrrepLabel) -> Result<Dimension> {
    let content = cache.su3_content(label)?;
    let total: BigInt = content
        .iter()
        .map(|(q, mult)| {
            let (q1, q2) = (q.entries()[0], q.entries()[1]);
            BigInt::from(mult.clone()) * lattice_number(u64::from(q1) + u64::from(q2), q2)
        })
        .sum();
    Ok(Dimension::from_nonnegative(total))
}

/// `Σ multiplicity · N(Q₁ + Q₂, Q₂)` over the SU(3) content of `label`.
/// For an SU(3) label this is the single lattice value.
pub fn dim_via_eisenstein(label: &IrrepLabel) -> Result<Dimension> {
    eisenstein_with(&BranchCache::new(), label)
}

fn literal_with(cache: &BranchCache, label: &IrrepLabel, term_cap: u64) -> Result<LiteralSum> {
    let required = cache.chain_multiplicity_mass(label)?;
    if required > BigUint::from(term_cap) {
        return Err(Error::TermCapExceeded {
            required: required.to_string(),
            cap: term_cap,
        });
    }

    fn descend(p: &[u32], sum: &mut BigInt, terms: &mut u64) {
        if p.len() == 2 {
            let z = label_to_eisenstein(p[0], p[1]);
            *sum += lattice_number_via_cube(&z);
            *terms += 1;
        } else {
            for_each_branch(p, |q| descend(q, sum, terms));
        }
    }

    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    descend(label.entries(), &mut sum, &mut terms);
    Ok(LiteralSum {
        dimension: Dimension::from_nonnegative(sum),
        terms,
    })
}

/// The nested sum written out in full: every branching tuple at every level is
/// visited separately and each SU(3) endpoint contributes `Im(z³)/(3√3)` through
/// the cube of its Eisenstein integer. No aggregation takes place.
///
/// Fails with [`Error::TermCapExceeded`] before enumerating anything when the
/// number of chains exceeds `term_cap`.
pub fn dim_nested_literal(label: &IrrepLabel, term_cap: u64) -> Result<LiteralSum> {
    literal_with(&BranchCache::new(), label, term_cap)
}

fn verify_with(
    cache: &BranchCache,
    label: &IrrepLabel,
    term_cap: u64,
) -> Result<VerificationReport> {
    let dim_weyl = weyl_dim(label);
    let dim_eisenstein = eisenstein_with(cache, label)?;
    let (dim_literal, term_count) = match literal_with(cache, label, term_cap) {
        Ok(lit) => (Some(lit.dimension), BigUint::from(lit.terms)),
        Err(Error::TermCapExceeded { .. }) => (None, cache.chain_multiplicity_mass(label)?),
        Err(e) => return Err(e),
    };
    let agree = dim_weyl == dim_eisenstein && dim_literal.as_ref().is_none_or(|d| *d == dim_weyl);
    Ok(VerificationReport {
        label: label.clone(),
        dim_weyl,
        dim_eisenstein,
        dim_literal,
        agree,
        term_count,
        summation_indices: summation_count(label.group())?,
    })
}

/// Computes all three routes for one label. Disagreement is reported, never raised.
pub fn verify(label: &IrrepLabel, term_cap: u64) -> Result<VerificationReport> {
    verify_with(&BranchCache::new(), label, term_cap)
}

/// All SU(`group`) labels with `1 ≤ Pᵢ ≤ max_label`, in lexicographic order.
pub fn labels_up_to(group: usize, max_label: u32) -> Result<Vec<IrrepLabel>> {
    if group < 2 {
        return Err(Error::RankTooSmall { group, minimum: 2 });
    }
    let len = group - 1;
    let count = (max_label as usize)
        .checked_pow(len as u32)
        .expect("label sweep is too large to enumerate");
    let mut out = Vec::with_capacity(count);
    if max_label == 0 {
        return Ok(out);
    }
    let mut p = vec![1u32; len];
    loop {
        out.push(IrrepLabel::from_vec_unchecked(p.clone()));
        let Some(pos) = p.iter().rposition(|&x| x < max_label) else {
            break;
        };
        p[pos] += 1;
        p[pos + 1..].fill(1);
    }
    Ok(out)
}

/// [`verify`] over every label with `1 ≤ Pᵢ ≤ max_label`, evaluated in parallel.
/// Reports come back in lexicographic label order.
pub fn verify_sweep(
    group: usize,
    max_label: u32,
    term_cap: u64,
) -> Result<Vec<VerificationReport>> {
    if group < 3 {
        return Err(Error::RankTooSmall { group, minimum: 3 });
    }
    let labels = labels_up_to(group, max_label)?;
    let cache = BranchCache::new();
    labels
        .par_iter()
        .map(|label| verify_with(&cache, label, term_cap))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(p: &[u32]) -> IrrepLabel {
        IrrepLabel::new(p.len() + 1, p.to_vec()).unwrap()
    }

    #[test]
    fn eisenstein_route_examples() {
        assert_eq!(dim_via_eisenstein(&label(&[2, 2])).unwrap(), 8);
        assert_eq!(dim_via_eisenstein(&label(&[2, 1, 1])).unwrap(), 4);
        assert_eq!(dim_via_eisenstein(&label(&[2, 1, 1, 1])).unwrap(), 5);
        assert!(dim_via_eisenstein(&label(&[3])).is_err());
    }

    #[test]
    fn literal_examples() {
        let lit = dim_nested_literal(&label(&[3, 1]), DEFAULT_TERM_CAP).unwrap();
        assert_eq!(
            lit,
            LiteralSum {
                dimension: Dimension::from(6),
                terms: 1
            }
        );

        let lit = dim_nested_literal(&label(&[2, 2, 2]), DEFAULT_TERM_CAP).unwrap();
        assert_eq!(lit.dimension, 64);
        assert_eq!(lit.dimension, weyl_dim(&label(&[2, 2, 2])));
        assert_eq!(lit.terms, 8);

        let l = label(&[2, 1, 2, 1]);
        let lit = dim_nested_literal(&l, DEFAULT_TERM_CAP).unwrap();
        assert_eq!(lit.dimension, dim_via_eisenstein(&l).unwrap());
        assert_eq!(
            BigUint::from(lit.terms),
            crate::branching::chain_multiplicity_mass(&l).unwrap()
        );
    }

    #[test]
    fn literal_respects_cap() {
        let l = label(&[2, 2, 2]);
        assert_eq!(
            dim_nested_literal(&l, 7),
            Err(Error::TermCapExceeded {
                required: "8".into(),
                cap: 7
            })
        );
        assert!(dim_nested_literal(&l, 8).is_ok());
        assert!(dim_nested_literal(&label(&[1, 1]), 0).is_err());
    }

    #[test]
    fn verify_examples() {
        let r = verify(&label(&[1, 1]), DEFAULT_TERM_CAP).unwrap();
        assert!(r.agree);
        assert_eq!(r.dim_literal, Some(Dimension::from(1)));
        assert_eq!(r.summation_indices, 0);

        let r = verify(&label(&[2, 1, 2]), DEFAULT_TERM_CAP).unwrap();
        assert!(r.agree);
        assert_eq!(r.dim_weyl, 15);
        assert_eq!(r.dim_literal, Some(Dimension::from(15)));
        assert_eq!(r.term_count, BigUint::from(4u32));
        assert_eq!(r.summation_indices, 3);
    }

    #[test]
    fn verify_records_skipped_literal() {
        let l = label(&[2, 2, 2, 2, 2]);
        let r = verify(&l, 10).unwrap();
        assert!(r.literal_skipped());
        assert!(r.agree);
        assert_eq!(r.dim_weyl, r.dim_eisenstein);
        assert_eq!(
            r.term_count,
            crate::branching::chain_multiplicity_mass(&l).unwrap()
        );
    }

    #[test]
    fn sweep_order_and_size() {
        let reports = verify_sweep(3, 1, 5).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].dim_weyl, 1);

        let reports = verify_sweep(4, 3, DEFAULT_TERM_CAP).unwrap();
        assert_eq!(reports.len(), 27);
        assert!(reports.windows(2).all(|w| w[0].label < w[1].label));
        assert!(reports.iter().all(|r| r.agree));
        assert!(verify_sweep(2, 3, 5).is_err());
    }

    #[test]
    fn label_enumeration() {
        let labels = labels_up_to(3, 2).unwrap();
        let flat: Vec<_> = labels.iter().map(|l| l.entries().to_vec()).collect();
        assert_eq!(flat, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert!(labels_up_to(4, 0).unwrap().is_empty());
    }
}
