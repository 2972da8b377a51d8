//! Textual forms for weights and bundle objects.
//!
//! Weights parse from either a bracketed coordinate vector `[1,-4,0,0,0,1]`
//! (exact rationals allowed, e.g. `1/2`) or the symbolic form `w1+w6-4w2`.
//! Both forms denote fundamental-weight coordinates. Objects additionally
//! parse as `O`, `O(-3)`, `S[w1+w6](-1)` or a named filtered bundle such as
//! `Ttilde(2)`. The printers produce canonical forms that re-parse to the
//! same value.

use crate::bundles::{BundleExpr, ObjectSpec};
use crate::error::{KernelError, Result};
use crate::levi::ParabolicData;
use crate::root_system::{q, Q, Weight};
use crate::tensor::Decomposition;
use num::{One, Zero};
use std::str::FromStr;

fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = i64::from_str(n.trim()).map_err(|_| bad_num(s))?;
        let d = i64::from_str(d.trim()).map_err(|_| bad_num(s))?;
        if d == 0 {
            return Err(bad_num(s));
        }
        Ok(crate::root_system::qr(n, d))
    } else {
        Ok(q(i64::from_str(s).map_err(|_| bad_num(s))?))
    }
}

fn bad_num(s: &str) -> KernelError {
    KernelError::Parse(format!("invalid number {s:?}"))
}

/// Parse a weight literal in either accepted form.
pub fn parse_weight(s: &str, rank: usize) -> Result<Weight> {
    let s = s.trim();
    if s.is_empty() {
        return Err(KernelError::Parse("empty weight".into()));
    }
    if let Some(body) = s.strip_prefix('[') {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| KernelError::Parse(format!("unterminated vector {s:?}")))?;
        let coords: Vec<Q> = body
            .split(',')
            .map(parse_rational)
            .collect::<Result<_>>()?;
        if coords.len() != rank {
            return Err(KernelError::Parse(format!(
                "expected {rank} coordinates, got {} in {s:?}",
                coords.len()
            )));
        }
        return Ok(Weight::new(coords));
    }
    if s == "0" {
        return Ok(Weight::zero(rank));
    }
    parse_symbolic(s, rank)
}

fn parse_symbolic(s: &str, rank: usize) -> Result<Weight> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coords = vec![Q::zero(); rank];
    let bytes = compact.as_bytes();
    let mut i = 0usize;
    let err = || KernelError::Parse(format!("invalid weight literal {s:?}"));
    while i < bytes.len() {
        let mut sign = Q::one();
        if bytes[i] == b'+' {
            i += 1;
        } else if bytes[i] == b'-' {
            sign = -sign;
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff = if i > start {
            q(i64::from_str(&compact[start..i]).map_err(|_| err())?)
        } else {
            Q::one()
        };
        if i >= bytes.len() || bytes[i] != b'w' {
            return Err(err());
        }
        i += 1;
        let vstart = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == vstart {
            return Err(err());
        }
        let vertex = usize::from_str(&compact[vstart..i]).map_err(|_| err())?;
        if vertex < 1 || vertex > rank {
            return Err(KernelError::IndexOutOfRange(vertex, rank));
        }
        coords[vertex - 1] += sign * coeff;
    }
    Ok(Weight::new(coords))
}

fn split_twist(s: &str) -> Result<(&str, i64)> {
    let s = s.trim();
    if let Some(open) = s.rfind('(') {
        if s.ends_with(')') {
            let inner = &s[open + 1..s.len() - 1];
            let t = i64::from_str(inner.trim())
                .map_err(|_| KernelError::Parse(format!("invalid twist in {s:?}")))?;
            return Ok((s[..open].trim(), t));
        }
    }
    Ok((s, 0))
}

/// Parse an object literal: a line bundle, an irreducible `S[...]`, a plain
/// weight, or a named filtered bundle, each with an optional twist.
pub fn parse_object(parab: &ParabolicData, s: &str) -> Result<ObjectSpec> {
    let rank = parab.ambient().rank();
    let (head, twist) = split_twist(s)?;
    if head == "O" {
        return Ok(ObjectSpec::Expr(BundleExpr::irreducible(
            parab.line_bundle(twist),
        )));
    }
    if let Some(body) = head.strip_prefix("S[") {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| KernelError::Parse(format!("unterminated S[...] in {s:?}")))?;
        let w = parse_weight(body, rank)?;
        return Ok(ObjectSpec::Expr(BundleExpr::irreducible(
            w.add(&parab.line_bundle(twist)),
        )));
    }
    let first = head
        .chars()
        .next()
        .ok_or_else(|| KernelError::Parse("empty object".into()))?;
    let looks_like_weight = first == '['
        || first == '-'
        || first == '+'
        || first.is_ascii_digit()
        || (first == 'w' && head.len() > 1 && head.as_bytes()[1].is_ascii_digit());
    if looks_like_weight {
        let w = parse_weight(head, rank)?;
        return Ok(ObjectSpec::Expr(BundleExpr::irreducible(
            w.add(&parab.line_bundle(twist)),
        )));
    }
    if head.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Ok(ObjectSpec::Named {
            name: head.to_string(),
            twist,
        });
    }
    Err(KernelError::Parse(format!("invalid object literal {s:?}")))
}

/// `O(t)` / `S[levi-lift](t)` form of a single irreducible weight. The twist
/// is the coefficient at the marked vertex; it must be an integer.
pub fn display_irreducible(parab: &ParabolicData, w: &Weight) -> String {
    let k = parab.marked_vertex();
    let t = w.coeff(k).clone();
    let base = w.sub(&parab.line_bundle(1).scale(&t));
    let twist = if t.is_integer() && !t.is_zero() {
        format!("({t})")
    } else if t.is_zero() {
        String::new()
    } else {
        // non-integral marked coefficient: fall back to raw coordinates
        return format!("S[{w}]");
    };
    if base.is_zero() {
        if twist.is_empty() {
            "O".to_string()
        } else {
            format!("O{twist}")
        }
    } else {
        format!("S[{base}]{twist}")
    }
}

pub fn display_expr(parab: &ParabolicData, e: &BundleExpr) -> String {
    if e.is_empty() {
        return "0".to_string();
    }
    let parts: Vec<String> = e
        .iter()
        .map(|(w, m)| {
            let body = display_irreducible(parab, w);
            if m == 1 {
                body
            } else {
                format!("{m}*{body}")
            }
        })
        .collect();
    parts.join(" + ")
}

pub fn display_object(parab: &ParabolicData, spec: &ObjectSpec) -> String {
    match spec {
        ObjectSpec::Named { name, twist } => {
            if *twist == 0 {
                name.clone()
            } else {
                format!("{name}({twist})")
            }
        }
        ObjectSpec::Expr(e) => display_expr(parab, e),
    }
}

/// Decomposition printed in bundle notation, e.g. `O + S[w1+w6](-1)`.
pub fn display_decomposition(parab: &ParabolicData, d: &Decomposition) -> String {
    if d.is_empty() {
        return "0".to_string();
    }
    let parts: Vec<String> = d
        .iter()
        .map(|(w, m)| {
            let body = display_irreducible(parab, w);
            if m == 1 {
                body
            } else {
                format!("{m}*{body}")
            }
        })
        .collect();
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_forms_agree() {
        let a = parse_weight("w1+w6-4w2", 6).unwrap();
        let b = parse_weight("[1,-4,0,0,0,1]", 6).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_weight("0", 6).unwrap(), Weight::zero(6));
        assert_eq!(parse_weight("3w1", 6).unwrap(), Weight::from_ints(&[3, 0, 0, 0, 0, 0]));
        assert_eq!(parse_weight("-w2", 6).unwrap(), Weight::from_ints(&[0, -1, 0, 0, 0, 0]));
    }

    #[test]
    fn weight_print_parse_round_trip() {
        let w = Weight::from_ints(&[2, -7, 0, 1, 0, 3]);
        assert_eq!(parse_weight(&w.to_string(), 6).unwrap(), w);
    }

    #[test]
    fn rational_vector_form() {
        let w = parse_weight("[1/2,0,0,0,0,-3/2]", 6).unwrap();
        assert!(!w.is_integral());
    }

    #[test]
    fn object_forms() {
        let p = ParabolicData::e6_p2();
        let o3 = parse_object(p, "O(3)").unwrap();
        assert_eq!(
            o3,
            ObjectSpec::Expr(BundleExpr::irreducible(p.line_bundle(3)))
        );
        let s = parse_object(p, "S[w4](-1)").unwrap();
        assert_eq!(
            s,
            ObjectSpec::Expr(BundleExpr::irreducible(Weight::from_ints(&[
                0, -1, 0, 1, 0, 0
            ])))
        );
        let named = parse_object(p, "Ttilde(2)").unwrap();
        assert_eq!(
            named,
            ObjectSpec::Named {
                name: "Ttilde".into(),
                twist: 2
            }
        );
        let raw = parse_object(p, "w1+w6-4w2").unwrap();
        assert_eq!(
            raw,
            ObjectSpec::Expr(BundleExpr::irreducible(Weight::from_ints(&[
                1, -4, 0, 0, 0, 1
            ])))
        );
    }

    #[test]
    fn object_print_parse_round_trip() {
        let p = ParabolicData::e6_p2();
        for text in ["O", "O(-4)", "S[w4](-1)", "S[w1+w6](-1)", "Ttilde", "Etilde(3)"] {
            let spec = parse_object(p, text).unwrap();
            assert_eq!(display_object(p, &spec), text);
        }
    }

    #[test]
    fn display_splits_twist() {
        let p = ParabolicData::e6_p2();
        assert_eq!(
            display_irreducible(p, &Weight::from_ints(&[1, -4, 0, 0, 0, 1])),
            "S[w1+w6](-4)"
        );
        assert_eq!(display_irreducible(p, &Weight::zero(6)), "O");
        assert_eq!(display_irreducible(p, &Weight::from_ints(&[0, 2, 0, 0, 0, 0])), "O(2)");
    }
}
