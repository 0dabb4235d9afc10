//! Benchmark inputs shared by the criterion targets.

/// Expressions spanning every constructor, from tiny to large tables.
pub const CORPUS: &[&str] = &[
    "P(2)",
    "Curve(1) x P(1)",
    "Hyp(4,5)",
    "CI(7; 2,3,4)",
    "Gr(5,10)",
    "Ab(6) x Curve(3)",
    "Hyp(12,40)",
    "Gr(3,7) + P(12) + Ab(12)",
];
