//! Human-readable rendering in terms of basis labels.

use lcplie_core::scalar::format_scalar;
use lcplie_core::{Scalar, Subspace};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

/// `v` as a combination of basis labels, e.g. `u - 1/2 b`.
pub fn combination(labels: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let term = if mag.is_one() {
            l.clone()
        } else {
            format!("{} {l}", format_scalar(&mag))
        };
        match (out.is_empty(), c.is_negative()) {
            (true, false) => out.push_str(&term),
            (true, true) => out.push_str(&format!("-{term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// `0`, `g`, or `span{...}` over the canonical basis.
pub fn subspace(labels: &[String], s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    if s.is_full() {
        return "g".into();
    }
    let parts: Vec<String> = s.basis().rows().map(|r| combination(labels, r)).collect();
    format!("span{{{}}}", parts.join(", "))
}

pub fn tuple(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("({})", parts.join(", "))
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn json_vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| json!(format_scalar(x))).collect())
}

pub fn json_subspace(s: &Subspace) -> Value {
    Value::Array(s.basis().rows().map(json_vector).collect())
}
