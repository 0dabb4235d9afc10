//! Independent brute-force oracles for the classical Betti computations.

use lyubeznik::{
    betti_abelian, betti_complete_intersection, betti_grassmannian, euler_char_ci, kunneth,
    BettiVector,
};
use num_bigint::{BigInt, BigUint};

fn binomial(n: u64, k: u64) -> BigInt {
    // Pascal's triangle row by row.
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = vec![BigInt::from(1); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

/// `(∏ dᵢ) · Σ C(n+1, a) ∏ (−dᵢ)^{bᵢ}` over all `a + Σ bᵢ = n − c`.
fn euler_by_enumeration(n: u64, degrees: &[u64]) -> BigInt {
    fn walk(degrees: &[u64], remaining: u64, acc: BigInt, n: u64, out: &mut BigInt) {
        match degrees.split_first() {
            None => *out += acc * binomial(n + 1, remaining),
            Some((&d, rest)) => {
                let mut power = BigInt::from(1);
                for b in 0..=remaining {
                    walk(rest, remaining - b, &acc * &power, n, out);
                    power *= -BigInt::from(d);
                }
            }
        }
    }
    let mut total = BigInt::from(0);
    walk(
        degrees,
        n - degrees.len() as u64,
        BigInt::from(1),
        n,
        &mut total,
    );
    total * degrees.iter().map(|&d| BigInt::from(d)).product::<BigInt>()
}

/// Partitions of each size fitting in a `rows × cols` box, by listing them.
fn box_partition_counts(rows: usize, cols: usize) -> Vec<u64> {
    fn walk(rows_left: usize, max_part: usize, size: usize, counts: &mut [u64]) {
        counts[size] += 1;
        if rows_left == 0 {
            return;
        }
        for part in 1..=max_part {
            walk(rows_left - 1, part, size + part, counts);
        }
    }
    let mut counts = vec![0; rows * cols + 1];
    walk(rows, cols, 0, &mut counts);
    counts
}

#[test]
fn euler_characteristic_matches_enumeration() {
    // Frozen values from the enumeration oracle.
    assert_eq!(euler_by_enumeration(4, &[5]), BigInt::from(-200));
    assert_eq!(euler_by_enumeration(3, &[2]), BigInt::from(4));
    assert_eq!(euler_by_enumeration(3, &[4]), BigInt::from(24));
    assert_eq!(euler_by_enumeration(2, &[3]), BigInt::from(0));

    for n in 2..=9u32 {
        for c in 1..n.min(4) {
            for first in 1..=5u32 {
                let degrees: Vec<u32> = (0..c).map(|i| first + i).collect();
                let wide: Vec<u64> = degrees.iter().map(|&d| d.into()).collect();
                assert_eq!(
                    euler_char_ci(n, &degrees).unwrap(),
                    euler_by_enumeration(n.into(), &wide),
                    "CI({n}; {degrees:?})"
                );
            }
        }
    }
}

#[test]
fn hypersurface_closed_form() {
    // χ(X_d ⊂ P^n) = ((1 − d)^{n+1} − 1)/d + n + 1
    for n in 2..=10i64 {
        for d in 1..=8i64 {
            let expected = (BigInt::from(1 - d).pow(n as u32 + 1) - 1) / d + n + 1;
            assert_eq!(euler_char_ci(n as u32, &[d as u32]).unwrap(), expected);
        }
    }
}

#[test]
fn grassmannian_matches_partition_listing() {
    assert_eq!(box_partition_counts(2, 2), vec![1, 1, 2, 1, 1]);
    assert_eq!(box_partition_counts(2, 3), vec![1, 1, 2, 2, 2, 1, 1]);
    for n in 2..=9u32 {
        for k in 1..n {
            let b = betti_grassmannian(k, n);
            let counts = box_partition_counts(k as usize, (n - k) as usize);
            for (j, beta) in b.betti().iter().enumerate() {
                let expected = if j % 2 == 0 { counts[j / 2] } else { 0 };
                assert_eq!(*beta, BigUint::from(expected), "Gr({k},{n}) β_{j}");
            }
        }
    }
}

#[test]
fn abelian_is_power_of_elliptic_curve() {
    let elliptic = BettiVector::from_u64s(1, &[1, 2, 1]).unwrap();
    let mut power = elliptic.clone();
    for g in 1..=8 {
        assert_eq!(betti_abelian(g), power);
        power = kunneth(&power, &elliptic);
    }
}

#[test]
fn complete_intersection_middle_entries() {
    let middle = |n, ds: &[u32]| {
        let b = betti_complete_intersection(n, ds).unwrap();
        b.betti()[b.dim()].clone()
    };
    // Quintic threefold, K3, cubic surface, genus-5 and genus-4 curves.
    assert_eq!(middle(4, &[5]), BigUint::from(204u32));
    assert_eq!(middle(3, &[4]), BigUint::from(22u32));
    assert_eq!(middle(3, &[3]), BigUint::from(7u32));
    assert_eq!(middle(4, &[2, 2, 2]), BigUint::from(10u32));
    assert_eq!(middle(3, &[2, 3]), BigUint::from(8u32));
}
