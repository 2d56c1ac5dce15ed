//! SU(N) representation labels and the Weyl product formula.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::eisenstein::{lattice_number, EisensteinInt};
use crate::error::{Error, Result};

/// Highest-weight label of an SU(N) irrep in the shifted convention:
/// `N − 1` entries `Pᵢ = aᵢ + 1 ≥ 1`, where `aᵢ` are the Dynkin labels.
///
/// Ordering is lexicographic in the entries, so labels of one group sort the
/// way they are printed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    p: Vec<u32>,
}

impl IrrepLabel {
    /// Builds an SU(`group`) label, checking the length and that every entry is at least 1.
    pub fn new(group: usize, p: Vec<u32>) -> Result<Self> {
        if group < 2 {
            return Err(Error::RankTooSmall { group, minimum: 2 });
        }
        if p.len() != group - 1 {
            return Err(Error::LengthMismatch {
                group,
                expected: group - 1,
                actual: p.len(),
            });
        }
        if let Some(i) = p.iter().position(|&x| x == 0) {
            return Err(Error::InvalidLabel {
                group,
                reason: format!("entry {} is 0, entries must be at least 1", i + 1),
            });
        }
        Ok(Self { p })
    }

    /// Accepts untrusted signed input in the shifted convention.
    pub fn from_signed(group: usize, p: &[i64]) -> Result<Self> {
        if group < 2 {
            return Err(Error::RankTooSmall { group, minimum: 2 });
        }
        if p.len() != group - 1 {
            return Err(Error::LengthMismatch {
                group,
                expected: group - 1,
                actual: p.len(),
            });
        }
        let entries = p
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                u32::try_from(x)
                    .ok()
                    .filter(|&x| x >= 1)
                    .ok_or_else(|| Error::InvalidLabel {
                        group,
                        reason: format!(
                            "entry {} is {x}, entries must lie in 1..={}",
                            i + 1,
                            u32::MAX
                        ),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, entries)
    }

    /// Converts Dynkin labels (`aᵢ ≥ 0`) into the shifted convention `Pᵢ = aᵢ + 1`.
    pub fn from_dynkin(group: usize, dynkin: &[i64]) -> Result<Self> {
        if group < 2 {
            return Err(Error::RankTooSmall { group, minimum: 2 });
        }
        if dynkin.len() != group - 1 {
            return Err(Error::LengthMismatch {
                group,
                expected: group - 1,
                actual: dynkin.len(),
            });
        }
        if let Some((position, &value)) = dynkin.iter().enumerate().find(|(_, &x)| x < 0) {
            return Err(Error::NegativeDynkinLabel {
                position: position + 1,
                value,
            });
        }
        let p = dynkin
            .iter()
            .map(|&x| {
                u32::try_from(x + 1).map_err(|_| Error::InvalidLabel {
                    group,
                    reason: format!("Dynkin label {x} is too large"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, p)
    }

    pub fn trivial(group: usize) -> Result<Self> {
        Self::new(group, vec![1; group.saturating_sub(1)])
    }

    /// The defining N-dimensional representation, Dynkin `[1, 0, …, 0]`.
    pub fn fundamental(group: usize) -> Result<Self> {
        let mut label = Self::trivial(group)?;
        label.p[0] = 2;
        Ok(label)
    }

    /// The adjoint representation, Dynkin `[1, 0, …, 0, 1]` (`[2]` for SU(2)).
    pub fn adjoint(group: usize) -> Result<Self> {
        let mut label = Self::trivial(group)?;
        label.p[0] = 2;
        *label.p.last_mut().expect("nonempty") = 2;
        if group == 2 {
            label.p[0] = 3;
        }
        Ok(label)
    }

    /// N of SU(N).
    pub fn group(&self) -> usize {
        self.p.len() + 1
    }

    /// The shifted labels `P₁, …, P_{N−1}`.
    pub fn entries(&self) -> &[u32] {
        &self.p
    }

    pub fn dynkin(&self) -> Vec<u32> {
        self.p.iter().map(|x| x - 1).collect()
    }

    /// The conjugate representation, whose label is the reverse.
    pub fn conjugate(&self) -> Self {
        Self {
            p: self.p.iter().rev().copied().collect(),
        }
    }

    /// Internal constructor for labels whose validity is guaranteed by construction.
    pub(crate) fn from_vec_unchecked(p: Vec<u32>) -> Self {
        debug_assert!(!p.is_empty() && p.iter().all(|&x| x >= 1));
        Self { p }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.p.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Dimension of an irrep, an arbitrary-precision nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Dimension(BigUint);

impl Dimension {
    pub fn new(value: BigUint) -> Self {
        Self(value)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    /// Converts a signed lattice sum that is known to be nonnegative.
    pub(crate) fn from_nonnegative(value: BigInt) -> Self {
        Self(
            value
                .to_biguint()
                .expect("dimension routes only produce nonnegative values"),
        )
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for Dimension {
    fn from(value: u64) -> Self {
        Self(BigUint::from(value))
    }
}

impl From<BigUint> for Dimension {
    fn from(value: BigUint) -> Self {
        Self(value)
    }
}

impl PartialEq<u64> for Dimension {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// SU(3) dimension `½P₁P₂(P₁ + P₂)`.
pub fn su3_dim(p1: u32, p2: u32) -> Result<Dimension> {
    if p1 == 0 || p2 == 0 {
        return Err(Error::InvalidLabel {
            group: 3,
            reason: format!("({p1},{p2}) has an entry below 1"),
        });
    }
    let (x, y) = (BigUint::from(p1), BigUint::from(p2));
    let twice = &x * &y * (&x + &y);
    let dim = twice >> 1u32;
    debug_assert_eq!(
        BigInt::from(dim.clone()),
        lattice_number(&x + &y, y.clone()),
        "SU(3) closed form and lattice number disagree"
    );
    Ok(Dimension(dim))
}

/// SU(2) dimension, equal to the single shifted label.
pub fn su2_dim(p1: u32) -> Result<Dimension> {
    if p1 == 0 {
        return Err(Error::InvalidLabel {
            group: 2,
            reason: "entry is 0, entries must be at least 1".into(),
        });
    }
    Ok(Dimension::from(u64::from(p1)))
}

/// Weyl product formula
/// `∏_{i ≤ j} (Pᵢ + … + Pⱼ) / ∏_{k=1}^{N−1} k!`.
///
/// The numerator and the superfactorial are built separately and divided once.
pub fn weyl_dim(label: &IrrepLabel) -> Dimension {
    let p = label.entries();
    let mut numerator = BigUint::one();
    for i in 0..p.len() {
        let mut run = 0u64;
        for &x in &p[i..] {
            run += u64::from(x);
            numerator *= run;
        }
    }
    let mut denominator = BigUint::one();
    let mut factorial = BigUint::one();
    for k in 1..=p.len() as u64 {
        factorial *= k;
        denominator *= &factorial;
    }
    let (dim, rem) = numerator.div_rem(&denominator);
    assert!(
        rem.is_zero(),
        "Weyl formula division is inexact for {label}"
    );
    Dimension(dim)
}

/// The Eisenstein integer `(P₁ + P₂) + P₂ω`, i.e. `z = (P₁ + P₂/2) + iP₂√3/2`.
pub fn label_to_eisenstein(p1: impl Into<BigInt>, p2: impl Into<BigInt>) -> EisensteinInt {
    let p2 = p2.into();
    EisensteinInt::new(p1.into() + &p2, p2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(group: usize, p: &[u32]) -> IrrepLabel {
        IrrepLabel::new(group, p.to_vec()).unwrap()
    }

    #[test]
    fn dynkin_conversion() {
        assert_eq!(
            IrrepLabel::from_dynkin(3, &[0, 0]).unwrap(),
            label(3, &[1, 1])
        );
        assert_eq!(
            IrrepLabel::from_dynkin(3, &[1, 0]).unwrap(),
            label(3, &[2, 1])
        );
        assert_eq!(
            IrrepLabel::from_dynkin(4, &[1, 0, 1]).unwrap(),
            label(4, &[2, 1, 2])
        );
    }

    #[test]
    fn dynkin_errors() {
        assert_eq!(
            IrrepLabel::from_dynkin(3, &[1, -2]),
            Err(Error::NegativeDynkinLabel {
                position: 2,
                value: -2
            })
        );
        assert!(matches!(
            IrrepLabel::from_dynkin(4, &[1, 0]),
            Err(Error::LengthMismatch {
                expected: 3,
                actual: 2,
                ..
            })
        ));
    }

    #[test]
    fn label_validation() {
        assert!(matches!(
            IrrepLabel::new(3, vec![1, 0]),
            Err(Error::InvalidLabel { .. })
        ));
        assert!(matches!(
            IrrepLabel::new(3, vec![1]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            IrrepLabel::new(1, vec![]),
            Err(Error::RankTooSmall { .. })
        ));
        assert!(matches!(
            IrrepLabel::from_signed(3, &[2, -1]),
            Err(Error::InvalidLabel { .. })
        ));
        assert!(matches!(
            IrrepLabel::from_signed(3, &[2, -1, 4]),
            Err(Error::LengthMismatch { .. })
        ));
        assert_eq!(
            IrrepLabel::from_signed(3, &[2, 5]).unwrap(),
            label(3, &[2, 5])
        );
    }

    #[test]
    fn su3_dimensions() {
        assert_eq!(su3_dim(1, 1).unwrap(), 1);
        assert_eq!(su3_dim(2, 1).unwrap(), 3);
        assert_eq!(su3_dim(2, 2).unwrap(), 8);
        assert!(su3_dim(0, 3).is_err());
    }

    #[test]
    fn su2_dimensions() {
        assert_eq!(su2_dim(1).unwrap(), 1);
        assert_eq!(su2_dim(2).unwrap(), 2);
        assert_eq!(su2_dim(7).unwrap(), 7);
        assert!(su2_dim(0).is_err());
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_dim(&label(3, &[2, 2])), 8);
        assert_eq!(weyl_dim(&label(4, &[2, 1, 2])), 15);
        for n in 2..=12 {
            assert_eq!(weyl_dim(&IrrepLabel::trivial(n).unwrap()), 1);
        }
    }

    #[test]
    fn fundamental_and_adjoint() {
        for n in 2..=8u64 {
            let n_us = n as usize;
            assert_eq!(weyl_dim(&IrrepLabel::fundamental(n_us).unwrap()), n);
            assert_eq!(weyl_dim(&IrrepLabel::adjoint(n_us).unwrap()), n * n - 1);
        }
        assert_eq!(
            IrrepLabel::adjoint(5).unwrap(),
            IrrepLabel::from_dynkin(5, &[1, 0, 0, 1]).unwrap()
        );
    }

    #[test]
    fn eisenstein_substitution() {
        assert_eq!(label_to_eisenstein(1, 1), EisensteinInt::new(2, 1));
        assert_eq!(label_to_eisenstein(9, 0), EisensteinInt::new(9, 0));
        assert_eq!(label_to_eisenstein(2, 2), EisensteinInt::new(4, 2));
    }

    #[test]
    fn display_and_conjugate() {
        let l = label(4, &[3, 1, 2]);
        assert_eq!(l.to_string(), "(3,1,2)");
        assert_eq!(l.conjugate().to_string(), "(2,1,3)");
        assert_eq!(l.dynkin(), vec![2, 0, 1]);
    }
}
