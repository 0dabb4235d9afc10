//! Textual variety descriptions.
//!
//! ```text
//! expr   := sum ;
//! sum    := prod { "+" prod } ;
//! prod   := atom { "x" atom } ;
//! atom   := ctor "(" args ")" | "(" expr ")" ;
//! ctor   := "P" | "Gr" | "Curve" | "Ab" | "Hyp" | "CI" ;
//! args   := integer { "," integer } | integer ";" integer { "," integer } ;
//! ```
//!
//! `x` is the product and binds tighter than `+`, the disjoint union. Both
//! are left-associative. Whitespace is ignored everywhere.

use std::fmt;

use thiserror::Error;

use crate::{Error, Result};

/// Parenthesised nesting deeper than this is rejected instead of recursing.
const MAX_DEPTH: usize = 200;

/// A nonsingular projective variety, built from a few classical families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VarietyExpr {
    /// Projective space `P^n`.
    ProjSpace(u32),
    /// Grassmannian of `k`-planes in `n`-space.
    Grassmannian {
        k: u32,
        n: u32,
    },
    /// Smooth projective curve of genus `g`.
    Curve(u32),
    /// Abelian variety of dimension `g`.
    Abelian(u32),
    /// Smooth hypersurface of degree `d` in `P^n`.
    Hypersurface {
        n: u32,
        d: u32,
    },
    /// Smooth complete intersection in `P^n` of hypersurfaces of the given degrees.
    CompleteIntersection {
        n: u32,
        degrees: Vec<u32>,
    },
    Product(Box<VarietyExpr>, Box<VarietyExpr>),
    /// Disjoint union of two varieties of equal dimension.
    DisjointUnion(Box<VarietyExpr>, Box<VarietyExpr>),
}

impl VarietyExpr {
    pub fn product(left: VarietyExpr, right: VarietyExpr) -> Self {
        VarietyExpr::Product(Box::new(left), Box::new(right))
    }

    pub fn disjoint_union(left: VarietyExpr, right: VarietyExpr) -> Self {
        VarietyExpr::DisjointUnion(Box::new(left), Box::new(right))
    }

    /// Checks every structural invariant, including equal dimensions across
    /// disjoint unions and a total dimension of at least one.
    pub fn validate(&self) -> Result<()> {
        let dim = self.checked_dimension()?;
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(())
    }

    fn checked_dimension(&self) -> Result<usize> {
        match self {
            VarietyExpr::Product(a, b) => {
                let (da, db) = (a.checked_dimension()?, b.checked_dimension()?);
                da.checked_add(db)
                    .ok_or_else(|| Error::InvalidVariety("dimension overflow".into()))
            }
            VarietyExpr::DisjointUnion(a, b) => {
                let (da, db) = (a.checked_dimension()?, b.checked_dimension()?);
                if da != db {
                    return Err(Error::DimensionMismatch {
                        left: da,
                        right: db,
                    });
                }
                Ok(da)
            }
            atom => {
                check_atom(atom).map_err(Error::InvalidVariety)?;
                Ok(atom_dimension(atom))
            }
        }
    }

    /// The connected pieces at the top level of nested disjoint unions.
    pub fn summands(&self) -> Vec<&VarietyExpr> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            match e {
                VarietyExpr::DisjointUnion(a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
                other => out.push(other),
            }
        }
        out
    }
    /// Connected components, with products distributed over disjoint unions:
    /// `(A + B) x C` has the two pieces `A x C` and `B x C`.
    pub fn connected_pieces(&self) -> Vec<VarietyExpr> {
        match self {
            VarietyExpr::DisjointUnion(a, b) => {
                let mut out = a.connected_pieces();
                out.extend(b.connected_pieces());
                out
            }
            VarietyExpr::Product(a, b) => {
                let right = b.connected_pieces();
                a.connected_pieces()
                    .into_iter()
                    .flat_map(|l| {
                        right
                            .iter()
                            .map(move |r| VarietyExpr::product(l.clone(), r.clone()))
                    })
                    .collect()
            }
            atom => vec![atom.clone()],
        }
    }
}

fn check_atom(e: &VarietyExpr) -> std::result::Result<(), String> {
    match *e {
        VarietyExpr::ProjSpace(n) if n < 1 => Err(format!("P({n}) needs n >= 1")),
        VarietyExpr::Grassmannian { k, n } if k == 0 || k >= n => {
            Err(format!("Gr({k},{n}) needs 0 < k < n"))
        }
        VarietyExpr::Abelian(g) if g < 1 => Err(format!("Ab({g}) needs g >= 1")),
        VarietyExpr::Hypersurface { n, d } if n < 2 || d < 1 => {
            Err(format!("Hyp({n},{d}) needs n >= 2 and d >= 1"))
        }
        VarietyExpr::CompleteIntersection { n, ref degrees } => {
            let c = degrees.len();
            if c == 0 {
                Err("CI needs at least one degree".into())
            } else if c as u64 >= u64::from(n) {
                Err(format!(
                    "CI({n}; ...) with {c} degrees has dimension < 1 (needs fewer than n degrees)"
                ))
            } else if degrees.contains(&0) {
                Err("CI degrees must be >= 1".into())
            } else {
                Ok(())
            }
        }
        _ => Ok(()),
    }
}

fn atom_dimension(e: &VarietyExpr) -> usize {
    match *e {
        VarietyExpr::ProjSpace(n) => n as usize,
        VarietyExpr::Grassmannian { k, n } => k as usize * (n - k) as usize,
        VarietyExpr::Curve(_) => 1,
        VarietyExpr::Abelian(g) => g as usize,
        VarietyExpr::Hypersurface { n, .. } => n as usize - 1,
        VarietyExpr::CompleteIntersection { n, ref degrees } => n as usize - degrees.len(),
        VarietyExpr::Product(..) | VarietyExpr::DisjointUnion(..) => {
            unreachable!("compound expression passed as atom")
        }
    }
}

/// Dimension `r` of the variety. The expression must be valid.
pub fn dimension(expr: &VarietyExpr) -> usize {
    match expr {
        VarietyExpr::Product(a, b) => dimension(a) + dimension(b),
        VarietyExpr::DisjointUnion(a, _) => dimension(a),
        atom => atom_dimension(atom),
    }
}

/// Canonical rendering; `parse_variety` reads it back to the same tree.
impl fmt::Display for VarietyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyExpr::ProjSpace(n) => write!(f, "P({n})"),
            VarietyExpr::Grassmannian { k, n } => write!(f, "Gr({k},{n})"),
            VarietyExpr::Curve(g) => write!(f, "Curve({g})"),
            VarietyExpr::Abelian(g) => write!(f, "Ab({g})"),
            VarietyExpr::Hypersurface { n, d } => write!(f, "Hyp({n},{d})"),
            VarietyExpr::CompleteIntersection { n, degrees } => {
                write!(f, "CI({n}; ")?;
                for (i, d) in degrees.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{d}")?;
                }
                f.write_str(")")
            }
            VarietyExpr::Product(a, b) => {
                let left_parens = matches!(**a, VarietyExpr::DisjointUnion(..));
                let right_parens = matches!(
                    **b,
                    VarietyExpr::DisjointUnion(..) | VarietyExpr::Product(..)
                );
                write_operand(f, a, left_parens)?;
                f.write_str(" x ")?;
                write_operand(f, b, right_parens)
            }
            VarietyExpr::DisjointUnion(a, b) => {
                write_operand(f, a, false)?;
                f.write_str(" + ")?;
                write_operand(f, b, matches!(**b, VarietyExpr::DisjointUnion(..)))
            }
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &VarietyExpr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Where and why parsing failed. Positions are byte offsets into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        position: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("invalid constructor at position {position}: {message}")]
    Semantic { position: usize, message: String },
    #[error("disjoint union at position {position} joins dimensions {left} and {right}")]
    DimensionMismatch {
        position: usize,
        left: usize,
        right: usize,
    },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match *self {
            ParseError::Syntax { position, .. }
            | ParseError::Semantic { position, .. }
            | ParseError::DimensionMismatch { position, .. } => position,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    LParen,
    RParen,
    Comma,
    Semi,
    Plus,
    Times,
    Unexpected(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(s) => format!("integer `{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Times => "`x`".into(),
            Tok::Unexpected(c) => format!("`{c}`"),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Vec<(usize, Tok)> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '+' => Tok::Plus,
            // No constructor starts with a lowercase `x`, so `P(1)xP(1)` lexes.
            'x' => Tok::Times,
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    s.push(d);
                    chars.next();
                }
                out.push((pos, Tok::Int(s)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_alphabetic() {
                        break;
                    }
                    s.push(d);
                    chars.next();
                }
                out.push((pos, Tok::Ident(s)));
                continue;
            }
            other => Tok::Unexpected(other),
        };
        chars.next();
        out.push((pos, tok));
    }
    out.push((text.len(), Tok::End));
    out
}

const CONSTRUCTORS: [&str; 6] = ["P", "Gr", "Curve", "Ab", "Hyp", "CI"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    depth: usize,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected<T>(&self, expected: &[&'static str]) -> PResult<T> {
        Err(ParseError::Syntax {
            position: self.pos(),
            expected: expected.to_vec(),
            found: self.peek().describe(),
        })
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&[name])
        }
    }

    /// Returns the expression together with its dimension.
    fn sum(&mut self) -> PResult<(VarietyExpr, usize)> {
        let (mut left, dim) = self.prod()?;
        while *self.peek() == Tok::Plus {
            let (position, _) = self.bump();
            let (right, rdim) = self.prod()?;
            if rdim != dim {
                return Err(ParseError::DimensionMismatch {
                    position,
                    left: dim,
                    right: rdim,
                });
            }
            left = VarietyExpr::disjoint_union(left, right);
        }
        Ok((left, dim))
    }

    fn prod(&mut self) -> PResult<(VarietyExpr, usize)> {
        let (mut left, mut dim) = self.atom()?;
        while *self.peek() == Tok::Times {
            let (position, _) = self.bump();
            let (right, rdim) = self.atom()?;
            dim = dim.checked_add(rdim).ok_or_else(|| ParseError::Semantic {
                position,
                message: "dimension overflow".into(),
            })?;
            left = VarietyExpr::product(left, right);
        }
        Ok((left, dim))
    }

    fn atom(&mut self) -> PResult<(VarietyExpr, usize)> {
        match self.peek().clone() {
            Tok::LParen => {
                if self.depth >= MAX_DEPTH {
                    return Err(ParseError::Semantic {
                        position: self.pos(),
                        message: format!("parentheses nested deeper than {MAX_DEPTH}"),
                    });
                }
                self.bump();
                self.depth += 1;
                let inner = self.sum()?;
                self.depth -= 1;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Ident(name) if CONSTRUCTORS.contains(&name.as_str()) => {
                let (position, _) = self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let (head, tail) = self.args()?;
                self.expect(Tok::RParen, "`)`")?;
                let expr = build_atom(&name, head, tail)
                    .map_err(|message| ParseError::Semantic { position, message })?;
                check_atom(&expr).map_err(|message| ParseError::Semantic { position, message })?;
                let dim = atom_dimension(&expr);
                Ok((expr, dim))
            }
            _ => self.unexpected(&["P", "Gr", "Curve", "Ab", "Hyp", "CI", "`(`"]),
        }
    }

    fn int(&mut self) -> PResult<u32> {
        match self.peek().clone() {
            Tok::Int(digits) => {
                let position = self.pos();
                self.bump();
                digits.parse().map_err(|_| ParseError::Semantic {
                    position,
                    message: format!("integer {digits} is too large"),
                })
            }
            _ => self.unexpected(&["integer"]),
        }
    }

    fn int_list(&mut self) -> PResult<Vec<u32>> {
        let mut out = vec![self.int()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn args(&mut self) -> PResult<(Vec<u32>, Option<Vec<u32>>)> {
        let first = self.int()?;
        match self.peek() {
            Tok::Semi => {
                self.bump();
                Ok((vec![first], Some(self.int_list()?)))
            }
            Tok::Comma => {
                self.bump();
                let mut head = vec![first];
                head.extend(self.int_list()?);
                Ok((head, None))
            }
            _ => Ok((vec![first], None)),
        }
    }
}

fn build_atom(
    name: &str,
    head: Vec<u32>,
    tail: Option<Vec<u32>>,
) -> std::result::Result<VarietyExpr, String> {
    match (name, head.as_slice(), tail) {
        ("CI", &[n], Some(degrees)) => Ok(VarietyExpr::CompleteIntersection { n, degrees }),
        ("CI", _, _) => Err("expected CI(n; d1,...,dc)".into()),
        (_, _, Some(_)) => Err(format!("`;` is only allowed in CI, not {name}")),
        ("P", &[n], None) => Ok(VarietyExpr::ProjSpace(n)),
        ("Gr", &[k, n], None) => Ok(VarietyExpr::Grassmannian { k, n }),
        ("Curve", &[g], None) => Ok(VarietyExpr::Curve(g)),
        ("Ab", &[g], None) => Ok(VarietyExpr::Abelian(g)),
        ("Hyp", &[n, d], None) => Ok(VarietyExpr::Hypersurface { n, d }),
        (name, args, None) => {
            let arity = match name {
                "Gr" | "Hyp" => 2,
                _ => 1,
            };
            Err(format!(
                "{name} takes {arity} argument{}, got {}",
                if arity == 1 { "" } else { "s" },
                args.len()
            ))
        }
    }
}

/// Parses a variety expression and checks every constructor constraint.
pub fn parse_variety(text: &str) -> std::result::Result<VarietyExpr, ParseError> {
    let mut p = Parser {
        toks: lex(text),
        at: 0,
        depth: 0,
    };
    let (expr, dim) = p.sum()?;
    if *p.peek() != Tok::End {
        return p.unexpected(&["`+`", "`x`", "end of input"]);
    }
    // Unreachable with the current constructors, which all have r >= 1.
    if dim == 0 {
        return Err(ParseError::Semantic {
            position: 0,
            message: "dimension-0 varieties are not supported".into(),
        });
    }
    Ok(expr)
}

impl std::str::FromStr for VarietyExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_variety(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use VarietyExpr::*;

    fn p(s: &str) -> VarietyExpr {
        parse_variety(s).unwrap()
    }

    #[test]
    fn constructors() {
        assert_eq!(p("P(2)"), ProjSpace(2));
        assert_eq!(p("Gr(2,5)"), Grassmannian { k: 2, n: 5 });
        assert_eq!(p("Curve(0)"), Curve(0));
        assert_eq!(p("Ab(3)"), Abelian(3));
        assert_eq!(p("Hyp(4,5)"), Hypersurface { n: 4, d: 5 });
        assert_eq!(
            p("CI(5; 2,2)"),
            CompleteIntersection {
                n: 5,
                degrees: vec![2, 2]
            }
        );
    }

    #[test]
    fn operators_and_precedence() {
        assert_eq!(
            p("Curve(1) x P(1)"),
            VarietyExpr::product(Curve(1), ProjSpace(1))
        );
        assert_eq!(p("Curve(1)xP(1)"), p("Curve(1) x P(1)"));
        assert_eq!(
            p("P(2) + P(1) x P(1)"),
            VarietyExpr::disjoint_union(
                ProjSpace(2),
                VarietyExpr::product(ProjSpace(1), ProjSpace(1))
            )
        );
        assert_eq!(
            p("P(1) x P(1) x P(1)"),
            VarietyExpr::product(
                VarietyExpr::product(ProjSpace(1), ProjSpace(1)),
                ProjSpace(1)
            )
        );
        assert_eq!(
            p("(P(1) + Curve(2)) x P(1)"),
            VarietyExpr::product(
                VarietyExpr::disjoint_union(ProjSpace(1), Curve(2)),
                ProjSpace(1)
            )
        );
        assert_eq!(p("  ( ( P ( 2 ) ) )  "), ProjSpace(2));
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&p("Gr(2,5)")), 6);
        assert_eq!(dimension(&p("Curve(1) x P(1)")), 2);
        assert_eq!(dimension(&p("CI(5; 2,2)")), 3);
        assert_eq!(dimension(&p("Hyp(4,5)")), 3);
        assert_eq!(dimension(&p("P(2) + Ab(2)")), 2);
    }

    #[test]
    fn semantic_errors() {
        let err = parse_variety("Gr(3,3)").unwrap_err();
        assert!(
            matches!(err, ParseError::Semantic { position: 0, .. }),
            "{err}"
        );
        for bad in [
            "P(0)",
            "Gr(0,3)",
            "Ab(0)",
            "Hyp(1,2)",
            "Hyp(3,0)",
            "CI(2; 1,1)",
            "CI(3; 0)",
            "CI(3,2)",
            "P(1;2)",
            "Gr(2)",
            "P(1,2)",
            "P(99999999999)",
        ] {
            assert!(
                matches!(parse_variety(bad), Err(ParseError::Semantic { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_variety("P(").unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax {
                position: 2,
                expected: vec!["integer"],
                found: "end of input".into()
            }
        );
        assert_eq!(parse_variety("").unwrap_err().position(), 0);
        assert_eq!(parse_variety("P(1) P(1)").unwrap_err().position(), 5);
        assert_eq!(parse_variety("Q(1)").unwrap_err().position(), 0);
        assert_eq!(parse_variety("P(1) ^ P(1)").unwrap_err().position(), 5);
    }

    #[test]
    fn disjoint_union_needs_equal_dimensions() {
        assert_eq!(
            parse_variety("P(1) + P(2)").unwrap_err(),
            ParseError::DimensionMismatch {
                position: 5,
                left: 1,
                right: 2
            }
        );
        assert!(parse_variety("P(2) + P(1) x Curve(3)").is_ok());
    }

    #[test]
    fn deep_nesting_is_an_error_not_a_crash() {
        let s = format!("{}P(1){}", "(".repeat(5000), ")".repeat(5000));
        assert!(parse_variety(&s).is_err());
        let s = format!("{}P(1){}", "(".repeat(50), ")".repeat(50));
        assert!(parse_variety(&s).is_ok());
    }

    #[test]
    fn render_is_canonical() {
        let e = p("(P(1)+P(1)) x (P(1) x P(1)) + (P(3) + P(1)xP(2))");
        assert_eq!(
            e.to_string(),
            "(P(1) + P(1)) x (P(1) x P(1)) + (P(3) + P(1) x P(2))"
        );
        assert_eq!(p(&e.to_string()), e);
        assert_eq!(p("CI(3;4)").to_string(), "CI(3; 4)");
    }

    #[test]
    fn validate_catches_hand_built_trees() {
        assert!(VarietyExpr::disjoint_union(ProjSpace(1), ProjSpace(2))
            .validate()
            .is_err());
        assert!(Grassmannian { k: 3, n: 3 }.validate().is_err());
        assert!(VarietyExpr::product(Curve(0), Abelian(2))
            .validate()
            .is_ok());
    }

    #[test]
    fn summands_flatten_unions() {
        let e = p("P(1) + (Curve(1) + Curve(2)) + P(1)");
        assert_eq!(
            e.summands(),
            vec![&ProjSpace(1), &Curve(1), &Curve(2), &ProjSpace(1)]
        );
        assert_eq!(p("P(1) x P(1)").summands().len(), 1);
        let e = p("(P(1) + Curve(2)) x (P(1) + P(1) + Ab(1))");
        assert_eq!(e.summands().len(), 1);
        assert_eq!(e.connected_pieces().len(), 6);
        assert_eq!(e.connected_pieces()[3], p("Curve(2) x P(1)"));
    }
}
