#![allow(dead_code)]

use lyubeznik::VarietyExpr;
use proptest::prelude::*;

/// Atoms of exactly dimension `d >= 1`.
fn atom_of_dim(d: u32) -> BoxedStrategy<VarietyExpr> {
    let mut options: Vec<BoxedStrategy<VarietyExpr>> = vec![
        Just(VarietyExpr::ProjSpace(d)).boxed(),
        Just(VarietyExpr::Abelian(d)).boxed(),
        (1u32..=7)
            .prop_map(move |deg| VarietyExpr::Hypersurface { n: d + 1, d: deg })
            .boxed(),
        prop::collection::vec(1u32..=4, 1..=3)
            .prop_map(move |degrees| VarietyExpr::CompleteIntersection {
                n: d + degrees.len() as u32,
                degrees,
            })
            .boxed(),
    ];
    if d == 1 {
        options.push((0u32..=6).prop_map(VarietyExpr::Curve).boxed());
    }
    let grassmannians: Vec<VarietyExpr> = (1..=d)
        .filter(|k| d.is_multiple_of(*k))
        .map(|k| VarietyExpr::Grassmannian { k, n: k + d / k })
        .collect();
    options.push(prop::sample::select(grassmannians).boxed());
    prop::strategy::Union::new(options).boxed()
}

/// Valid expressions of exactly dimension `d`, nesting at most `depth` operators deep.
pub fn expr_of_dim(d: u32, depth: u32) -> BoxedStrategy<VarietyExpr> {
    if depth == 0 {
        return atom_of_dim(d);
    }
    let mut options = vec![
        atom_of_dim(d),
        (expr_of_dim(d, depth - 1), expr_of_dim(d, depth - 1))
            .prop_map(|(a, b)| VarietyExpr::disjoint_union(a, b))
            .boxed(),
    ];
    if d >= 2 {
        options.push(
            (1..d)
                .prop_flat_map(move |a| (expr_of_dim(a, depth - 1), expr_of_dim(d - a, depth - 1)))
                .prop_map(|(a, b)| VarietyExpr::product(a, b))
                .boxed(),
        );
    }
    prop::strategy::Union::new(options).boxed()
}

/// Valid expressions with `1 <= r <= max_dim`.
pub fn expr(max_dim: u32) -> BoxedStrategy<VarietyExpr> {
    (1..=max_dim).prop_flat_map(|d| expr_of_dim(d, 2)).boxed()
}
