//! Local de Rham cohomology of the affine cone `C` over `V` at its vertex `P`,
//! computed from exact sequences alone.
//!
//! The cone and the variety are linked by
//!
//! ```text
//! 0 → k → H^0(V) → H^1_P(C) → 0
//! 0 → H^1(V) → H^2_P(C) → H^0(V) → H^2(V) → H^3_P(C) → H^1(V) → H^3(V) → ⋯
//! ```
//!
//! where each `H^i(V) → H^{i+2}(V)` is cup product with the hyperplane class.
//! Below the middle degree that map is injective (hard Lefschetz), so its rank
//! is the dimension of its source. Cutting the long sequence at the images and
//! kernels of the cup maps leaves, for each `j`,
//!
//! ```text
//! 0 → im(H^{j−3} → H^{j−1}) → H^{j−1}(V) → H^j_P(C) → ker(H^{j−2} → H^j) → 0
//! ```
//!
//! whose alternating dimension sum determines `dim H^j_P(C)`. This module does
//! not use the closed forms of [`crate::table`]; the two are compared in tests.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::betti::{BettiVector, Violation};
use crate::{Error, Result};

/// `dim_k H^j_P(C)` for `0 ≤ j ≤ r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConeLocalDims {
    dims: Vec<BigUint>,
}

impl ConeLocalDims {
    pub fn dims(&self) -> &[BigUint] {
        &self.dims
    }

    pub fn into_vec(self) -> Vec<BigUint> {
        self.dims
    }
}

/// A finite exact sequence `0 → V_1 → ⋯ → V_m → 0` of vector spaces in which
/// exactly one dimension is unknown.
struct ExactSequence {
    terms: Vec<Option<BigInt>>,
}

impl ExactSequence {
    /// Exactness forces `Σ (−1)^k dim V_k = 0`.
    fn solve(&self) -> BigInt {
        let mut known = BigInt::zero();
        let mut unknown_sign = None;
        for (k, term) in self.terms.iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            match term {
                Some(d) => known += d * sign,
                None => {
                    assert!(unknown_sign.is_none(), "more than one unknown term");
                    unknown_sign = Some(sign);
                }
            }
        }
        match unknown_sign.expect("no unknown term") {
            1 => -known,
            _ => known,
        }
    }
}

struct CupMaps<'a> {
    b: &'a BettiVector,
}

impl CupMaps<'_> {
    fn dim(&self, i: isize) -> BigInt {
        BigInt::from(self.b.get(i))
    }

    /// Rank of `H^i(V) → H^{i+2}(V)`: injective below the middle degree.
    fn rank(&self, i: isize) -> Result<BigInt> {
        if i < 0 {
            return Ok(BigInt::zero());
        }
        assert!(
            (i as usize) < self.b.dim(),
            "cup map from degree {i} is not covered by hard Lefschetz"
        );
        let (source, target) = (self.dim(i), self.dim(i + 2));
        if source > target {
            return Err(Error::Inadmissible(Violation::Lefschetz {
                j: i as usize,
                next: i as usize + 2,
            }));
        }
        Ok(source)
    }
}

/// `dim_k H^j_P(C)` for `0 ≤ j ≤ r`, from the exact sequences linking the
/// cone to `V` together with injectivity of the hyperplane cup product.
pub fn cone_local_derham_dims(b: &BettiVector) -> Result<ConeLocalDims> {
    let r = b.dim();
    if r == 0 {
        return Err(Error::ZeroDimension);
    }
    let cup = CupMaps { b };
    let mut dims = Vec::with_capacity(r + 1);
    dims.push(BigInt::zero());

    // 0 → k → H^0(V) → H^1_P(C) → 0
    if cup.dim(0).is_zero() {
        return Err(Error::Inadmissible(Violation::Empty));
    }
    dims.push(
        ExactSequence {
            terms: vec![Some(BigInt::one()), Some(cup.dim(0)), None],
        }
        .solve(),
    );

    for j in 2..=r as isize {
        let image = cup.rank(j - 3)?;
        let kernel = cup.dim(j - 2) - cup.rank(j - 2)?;
        dims.push(
            ExactSequence {
                terms: vec![Some(image), Some(cup.dim(j - 1)), None, Some(kernel)],
            }
            .solve(),
        );
    }

    let dims = dims
        .into_iter()
        .enumerate()
        .map(|(j, d)| match d.sign() {
            Sign::Minus => Err(Error::Internal(format!(
                "exact sequence gave dim H^{j}_P(C) = {d}"
            ))),
            _ => Ok(d.magnitude().clone()),
        })
        .collect::<Result<_>>()?;
    Ok(ConeLocalDims { dims })
}
