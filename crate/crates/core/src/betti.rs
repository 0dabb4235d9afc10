//! De Rham Betti vectors of the varieties described by [`VarietyExpr`].

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::dsl::VarietyExpr;
use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// `β_0, …, β_{2r}` for a variety of dimension `r`.
///
/// The constructor only checks the length; Poincaré duality and the hard
/// Lefschetz inequalities are checked by [`check_lefschetz_admissible`], so
/// that inadmissible vectors can be represented and rejected downstream.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector {
    dim: usize,
    betti: Vec<BigUint>,
}

impl BettiVector {
    pub fn new(dim: usize, betti: Vec<BigUint>) -> Result<Self> {
        if betti.len() != 2 * dim + 1 {
            return Err(Error::InvalidVariety(format!(
                "a Betti vector of dimension {dim} has {} entries, got {}",
                2 * dim + 1,
                betti.len()
            )));
        }
        Ok(BettiVector { dim, betti })
    }

    pub fn from_u64s(dim: usize, betti: &[u64]) -> Result<Self> {
        Self::new(dim, betti.iter().map(|&b| BigUint::from(b)).collect())
    }

    /// The Betti vector of a point: the unit for [`kunneth`].
    pub fn point() -> Self {
        BettiVector {
            dim: 0,
            betti: vec![BigUint::one()],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn betti(&self) -> &[BigUint] {
        &self.betti
    }

    /// `β_j`, or zero for `j` outside `0..=2r`.
    pub fn get(&self, j: isize) -> BigUint {
        usize::try_from(j)
            .ok()
            .and_then(|j| self.betti.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn into_vec(self) -> Vec<BigUint> {
        self.betti
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.betti
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (j, b)| {
                let b = BigInt::from(b.clone());
                if j % 2 == 0 {
                    acc + b
                } else {
                    acc - b
                }
            })
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, b) in self.betti.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

/// First invariant a Betti vector fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Length {
        dim: usize,
        len: usize,
    },
    /// `β_0 = 0`: the variety would be empty.
    Empty,
    /// `β_j ≠ β_{2r−j}`.
    Duality {
        j: usize,
        mirror: usize,
    },
    /// `β_j > β_{j+2}` with `j + 2 ≤ r`: cup product with the hyperplane
    /// class cannot be injective.
    Lefschetz {
        j: usize,
        next: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Length { dim, len } => {
                write!(
                    f,
                    "dimension {dim} needs {} entries, found {len}",
                    2 * dim + 1
                )
            }
            Violation::Empty => f.write_str("β_0 = 0"),
            Violation::Duality { j, mirror } => {
                write!(f, "Poincaré duality fails: β_{j} ≠ β_{mirror}")
            }
            Violation::Lefschetz { j, next } => {
                write!(f, "hard Lefschetz fails: β_{j} > β_{next}")
            }
        }
    }
}

/// Checks length, `β_0 ≥ 1`, Poincaré duality, and `β_j ≤ β_{j+2}` below
/// the middle degree, reporting the first violated index pair.
pub fn check_lefschetz_admissible(b: &BettiVector) -> std::result::Result<(), Violation> {
    let r = b.dim;
    let v = &b.betti;
    if v.len() != 2 * r + 1 {
        return Err(Violation::Length {
            dim: r,
            len: v.len(),
        });
    }
    if v[0].is_zero() {
        return Err(Violation::Empty);
    }
    for j in 0..r {
        if v[j] != v[2 * r - j] {
            return Err(Violation::Duality {
                j,
                mirror: 2 * r - j,
            });
        }
    }
    for j in 0..r.saturating_sub(1) {
        if v[j] > v[j + 2] {
            return Err(Violation::Lefschetz { j, next: j + 2 });
        }
    }
    Ok(())
}

/// Betti vector of any valid expression.
pub fn betti(expr: &VarietyExpr) -> Result<BettiVector> {
    expr.validate()?;
    betti_of_valid(expr)
}

fn betti_of_valid(expr: &VarietyExpr) -> Result<BettiVector> {
    Ok(match expr {
        VarietyExpr::ProjSpace(n) => betti_projective_space(*n),
        VarietyExpr::Grassmannian { k, n } => betti_grassmannian(*k, *n),
        VarietyExpr::Curve(g) => betti_curve(*g),
        VarietyExpr::Abelian(g) => betti_abelian(*g),
        VarietyExpr::Hypersurface { n, d } => betti_complete_intersection(*n, &[*d])?,
        VarietyExpr::CompleteIntersection { n, degrees } => {
            betti_complete_intersection(*n, degrees)?
        }
        VarietyExpr::Product(a, b) => kunneth(&betti_of_valid(a)?, &betti_of_valid(b)?),
        VarietyExpr::DisjointUnion(a, b) => {
            disjoint_union_betti(&betti_of_valid(a)?, &betti_of_valid(b)?)?
        }
    })
}

pub fn betti_projective_space(n: u32) -> BettiVector {
    let r = n as usize;
    let betti = (0..=2 * r)
        .map(|j| {
            if j % 2 == 0 {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        })
        .collect();
    BettiVector { dim: r, betti }
}

/// Even Betti numbers count partitions in a `k × (n−k)` box.
pub fn betti_grassmannian(k: u32, n: u32) -> BettiVector {
    assert!(0 < k && k < n, "Gr({k},{n}) needs 0 < k < n");
    let poly = partitions_in_box(k as usize, (n - k) as usize);
    let r = poly.len() - 1;
    let mut betti = vec![BigUint::zero(); 2 * r + 1];
    for (i, c) in poly.into_iter().enumerate() {
        betti[2 * i] = c;
    }
    BettiVector { dim: r, betti }
}

/// Coefficient `i` of the result counts partitions of `i` with at most
/// `rows` parts, each at most `cols`.
///
/// A partition in the `a × b` box either has fewer than `a` parts (so it fits
/// in `(a−1) × b`), or exactly `a` parts, in which case removing the first
/// column leaves a partition in `a × (b−1)` of size `i − a`.
fn partitions_in_box(rows: usize, cols: usize) -> Vec<BigUint> {
    // prev[b] = box (a−1) × b, cur[b] = box a × b.
    let mut prev: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]; cols + 1];
    for a in 1..=rows {
        let mut cur: Vec<Vec<BigUint>> = Vec::with_capacity(cols + 1);
        cur.push(vec![BigUint::one()]);
        for b in 1..=cols {
            let mut poly = vec![BigUint::zero(); a * b + 1];
            for (i, c) in prev[b].iter().enumerate() {
                poly[i] += c;
            }
            for (i, c) in cur[b - 1].iter().enumerate() {
                poly[i + a] += c;
            }
            cur.push(poly);
        }
        prev = cur;
    }
    prev.pop().expect("cols + 1 entries")
}

pub fn betti_curve(g: u32) -> BettiVector {
    BettiVector {
        dim: 1,
        betti: vec![
            BigUint::one(),
            BigUint::from(2 * u64::from(g)),
            BigUint::one(),
        ],
    }
}

/// `β_j = C(2g, j)`.
pub fn betti_abelian(g: u32) -> BettiVector {
    assert!(g >= 1, "Ab({g}) needs g >= 1");
    let top = 2 * g as usize;
    let mut betti = Vec::with_capacity(top + 1);
    let mut c = BigUint::one();
    for j in 0..=top {
        betti.push(c.clone());
        c = c * BigUint::from(top - j) / BigUint::from(j + 1);
    }
    BettiVector {
        dim: g as usize,
        betti,
    }
}

fn check_ci(n: u32, degrees: &[u32]) -> Result<()> {
    VarietyExpr::CompleteIntersection {
        n,
        degrees: degrees.to_vec(),
    }
    .validate()
}

/// Topological Euler characteristic of a smooth complete intersection of
/// the given degrees in `P^n`:
///
/// `χ = (∏ dᵢ) · [h^{n−c}] (1+h)^{n+1} / ∏ (1 + dᵢ h)`.
pub fn euler_char_ci(n: u32, degrees: &[u32]) -> Result<BigInt> {
    check_ci(n, degrees)?;
    let order = n as usize - degrees.len();
    let mut series = TruncatedSeries::linear(order, &BigInt::one()).pow(n + 1);
    let mut degree_product = BigInt::one();
    for &d in degrees {
        let d = BigInt::from(d);
        series = &series * &TruncatedSeries::inverse_of_linear(order, &d);
        degree_product *= d;
    }
    Ok(degree_product * series.coeff(order))
}

/// All Betti numbers off the middle degree agree with projective space; the
/// middle one is recovered from the Euler characteristic.
pub fn betti_complete_intersection(n: u32, degrees: &[u32]) -> Result<BettiVector> {
    let chi = euler_char_ci(n, degrees)?;
    let r = n as usize - degrees.len();
    // Σ_{j ≠ r} (−1)^j β_j: one for each even j in [0, 2r] other than r.
    let off_middle = BigInt::from(r + 1 - usize::from(r.is_multiple_of(2)));
    let mut middle = chi - off_middle;
    if r % 2 == 1 {
        middle = -middle;
    }
    let middle = match middle.sign() {
        Sign::Minus => {
            return Err(Error::Internal(format!(
                "middle Betti number of CI({n}; {degrees:?}) came out as {middle}"
            )))
        }
        _ => middle.magnitude().clone(),
    };
    let mut betti = betti_projective_space(r as u32).into_vec();
    betti[r] = middle;
    let b = BettiVector { dim: r, betti };
    check_lefschetz_admissible(&b)
        .map_err(|v| Error::Internal(format!("CI({n}; {degrees:?}) produced {b}: {v}")))?;
    Ok(b)
}

/// Betti vector of a product: the convolution of the factors.
pub fn kunneth(a: &BettiVector, b: &BettiVector) -> BettiVector {
    let mut betti = vec![BigUint::zero(); a.betti.len() + b.betti.len() - 1];
    for (p, x) in a.betti.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (q, y) in b.betti.iter().enumerate() {
            betti[p + q] += x * y;
        }
    }
    BettiVector {
        dim: a.dim + b.dim,
        betti,
    }
}

pub fn disjoint_union_betti(a: &BettiVector, b: &BettiVector) -> Result<BettiVector> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            left: a.dim,
            right: b.dim,
        });
    }
    Ok(BettiVector {
        dim: a.dim,
        betti: a.betti.iter().zip(&b.betti).map(|(x, y)| x + y).collect(),
    })
}
