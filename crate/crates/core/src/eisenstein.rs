//! The ring of Eisenstein integers `ℤ[ω]`, `ω = (−1 + i√3)/2`, and the cubic
//! lattice function `N(a, b)`.
//!
//! Every value is stored as the integer pair `(a, b)` standing for `a + bω`.
//! The imaginary part of `a + bω` is `b·√3/2`, so it is carried as the integer
//! coefficient `b` and `√3` never appears in a computation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// An Eisenstein integer `a + bω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EisensteinInt {
    a: BigInt,
    b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// The primitive cube root of unity `ω`.
    pub fn omega() -> Self {
        Self::new(0, 1)
    }

    /// Coefficient of `1`.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Coefficient of `ω`.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn into_parts(self) -> (BigInt, BigInt) {
        (self.a, self.b)
    }

    /// `c` such that `Im(self) = c·√3/2`. This is just `b`.
    pub fn im_coeff(&self) -> &BigInt {
        &self.b
    }

    /// Twice the real part: `Re(a + bω) = (2a − b)/2`.
    pub fn twice_re(&self) -> BigInt {
        &self.a + &self.a - &self.b
    }

    /// Field norm `a² − ab + b² = |a + bω|²`, always nonnegative.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// `(a + bω)³ = (a³ + b³ − 3ab²) + 3ab(a − b)ω`, expanded in closed form.
    pub fn cube(&self) -> Self {
        let (a, b) = (&self.a, &self.b);
        let ab = a * b;
        let re = a * a * a + b * b * b - BigInt::from(3) * &ab * b;
        let om = BigInt::from(3) * &ab * (a - b);
        Self { a: re, b: om }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl Add<&EisensteinInt> for &EisensteinInt {
    type Output = EisensteinInt;

    fn add(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub<&EisensteinInt> for &EisensteinInt {
    type Output = EisensteinInt;

    fn sub(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

// (a₁ + b₁ω)(a₂ + b₂ω) = a₁a₂ + (a₁b₂ + a₂b₁)ω + b₁b₂ω², with ω² = −1 − ω.
impl Mul<&EisensteinInt> for &EisensteinInt {
    type Output = EisensteinInt;

    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        let bb = &self.b * &rhs.b;
        EisensteinInt {
            a: &self.a * &rhs.a - &bb,
            b: &self.a * &rhs.b + &rhs.a * &self.b - bb,
        }
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;

    fn neg(self) -> EisensteinInt {
        EisensteinInt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr<EisensteinInt> for EisensteinInt {
            type Output = EisensteinInt;
            fn $f(self, rhs: EisensteinInt) -> EisensteinInt {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&EisensteinInt> for EisensteinInt {
            type Output = EisensteinInt;
            fn $f(self, rhs: &EisensteinInt) -> EisensteinInt {
                (&self).$f(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for EisensteinInt {
    type Output = EisensteinInt;

    fn neg(self) -> EisensteinInt {
        -&self
    }
}

impl One for EisensteinInt {
    fn one() -> Self {
        EisensteinInt::one()
    }
}

impl Zero for EisensteinInt {
    fn zero() -> Self {
        EisensteinInt::zero()
    }

    fn is_zero(&self) -> bool {
        EisensteinInt::is_zero(self)
    }
}

/// The lattice number `N(a, b) = ab(a − b)/2`, defined on the whole lattice.
///
/// `ab(a − b)` is even for every pair of integers, so the result is exact. Debug
/// builds also evaluate the cube route [`lattice_number_via_cube`] and assert that
/// both agree.
pub fn lattice_number(a: impl Into<BigInt>, b: impl Into<BigInt>) -> BigInt {
    let (a, b) = (a.into(), b.into());
    let twice = &a * &b * (&a - &b);
    let (value, rem) = twice.div_rem(&BigInt::from(2));
    assert!(
        rem.is_zero(),
        "ab(a-b) odd at ({a}, {b}): lattice parity violated"
    );
    debug_assert_eq!(
        value,
        lattice_number_via_cube(&EisensteinInt::new(a, b)),
        "closed form and cube route disagree"
    );
    value
}

/// `Im(z³)/(3√3)` computed from the ω-coefficient of `z³`.
///
/// `Im(z³) = c·√3/2` where `c` is that coefficient, and `(c·√3/2)/(3√3) = c/6`.
pub fn lattice_number_via_cube(z: &EisensteinInt) -> BigInt {
    let cubed = z.cube();
    let (value, rem) = cubed.im_coeff().div_rem(&BigInt::from(6));
    assert!(
        rem.is_zero(),
        "Im coefficient of {z}³ is not divisible by 6: lattice parity violated"
    );
    value
}

/// Six-neighbour sum minus six times the centre value. Zero everywhere on the lattice.
///
/// The neighbours of `z` are `z ± 1`, `z ± ω` and `z ± (1 + ω)`.
pub fn harmonic_defect(a: impl Into<BigInt>, b: impl Into<BigInt>) -> BigInt {
    let (a, b) = (a.into(), b.into());
    let one = BigInt::one();
    let neighbours = [
        (&a + &one, b.clone()),
        (&a - &one, b.clone()),
        (a.clone(), &b + &one),
        (a.clone(), &b - &one),
        (&a + &one, &b + &one),
        (&a - &one, &b - &one),
    ];
    let sum: BigInt = neighbours
        .into_iter()
        .map(|(x, y)| lattice_number(x, y))
        .sum();
    sum - BigInt::from(6) * lattice_number(a, b)
}
