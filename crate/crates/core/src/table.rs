//! The full table of Lyubeznik numbers `λ_{i,j}(A)` of the local ring `A` at
//! the vertex of the affine cone over a nonsingular projective variety.
//!
//! With `r = dim V`, all entries with `i` or `j` above `r + 1` vanish, so the
//! table is square of side `r + 2`. Below the top row `j = r + 1` only the
//! `i = 0` row is nonzero, and it is determined by the Betti numbers:
//!
//! ```text
//! λ_{0,0} = 0
//! λ_{0,1} = β_0 − 1
//! λ_{0,2} = β_1                    (2 ≤ r)
//! λ_{0,j} = β_{j−1} − β_{j−3}      (3 ≤ j ≤ r)
//! λ_{0,r+1} = λ_{1,r+1} = 0
//! λ_{ℓ,r+1} = λ_{0,r+2−ℓ}          (2 ≤ ℓ ≤ r)
//! λ_{r+1,r+1} = number of connected components of Γ_V
//! ```

use num_bigint::BigUint;
use num_traits::Zero;

use crate::betti::{check_lefschetz_admissible, BettiVector};
use crate::graph::{count_components, gamma_graph, ComponentGraph};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LyubeznikTable {
    dim_a: usize,
    /// Row-major, `(dim_a + 1)²` entries, row = `i`, column = `j`.
    entries: Vec<BigUint>,
}

impl LyubeznikTable {
    fn zeros(dim_a: usize) -> Self {
        LyubeznikTable {
            dim_a,
            entries: vec![BigUint::zero(); (dim_a + 1) * (dim_a + 1)],
        }
    }

    /// `d = dim A = r + 1`.
    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    /// Number of rows and columns, `d + 1`.
    pub fn size(&self) -> usize {
        self.dim_a + 1
    }

    /// `λ_{i,j}`, zero outside the stored range.
    pub fn get(&self, i: usize, j: usize) -> BigUint {
        if i > self.dim_a || j > self.dim_a {
            return BigUint::zero();
        }
        self.entries[i * self.size() + j].clone()
    }

    fn set(&mut self, i: usize, j: usize, v: BigUint) {
        let n = self.size();
        self.entries[i * n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigUint] {
        let n = self.size();
        &self.entries[i * n..(i + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> {
        self.entries.chunks(self.size())
    }

    /// Nonzero entries as `(i, j, λ_{i,j})`, row-major.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> + '_ {
        let n = self.size();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / n, k % n, v))
    }

    /// The `i = 0` row restricted to `0 ≤ j ≤ r`.
    pub fn socle_column(&self) -> &[BigUint] {
        &self.row(0)[..self.dim_a]
    }
}

/// Fills the table from an admissible Betti vector of dimension `r ≥ 1`.
///
/// The corner `λ_{r+1,r+1}` is `β_0`: the varieties here are nonsingular and
/// equidimensional, so their irreducible components are the connected
/// components, pairwise disjoint, and `Γ_V` has no edges.
pub fn lyubeznik_table(b: &BettiVector) -> Result<LyubeznikTable> {
    check_lefschetz_admissible(b).map_err(Error::Inadmissible)?;
    let r = b.dim();
    if r == 0 {
        return Err(Error::ZeroDimension);
    }
    let beta = |j: usize| &b.betti()[j];
    let mut t = LyubeznikTable::zeros(r + 1);

    t.set(0, 1, beta(0) - 1u32);
    if r >= 2 {
        t.set(0, 2, beta(1).clone());
    }
    for j in 3..=r {
        t.set(0, j, beta(j - 1) - beta(j - 3));
    }
    for l in 2..=r {
        t.set(l, r + 1, t.get(0, r + 2 - l));
    }
    t.set(r + 1, r + 1, beta(0).clone());
    Ok(t)
}

/// `λ_{r+1,r+1}` of a possibly reducible or singular variety, from the
/// dimensions of its irreducible components and their pairwise intersections.
pub fn corner_from_graph(g: &ComponentGraph) -> Result<usize> {
    Ok(count_components(&gamma_graph(g)?))
}
