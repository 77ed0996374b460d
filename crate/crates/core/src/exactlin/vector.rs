//! Small helpers on coordinate vectors (`&[Scalar]`).

use super::{Field, Scalar, Vector};

pub fn zeros(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

pub fn from_i64(field: Field, coords: &[i64]) -> Vector {
    coords.iter().map(|&c| field.from_i64(c)).collect()
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`, skipping the work when `c` is zero.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    let field = a.first().map(Scalar::field).unwrap_or(Field::Rational);
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Rescales so the first nonzero coordinate is 1. The zero vector is returned unchanged.
pub fn normalize_leading(v: &[Scalar]) -> Vector {
    match v.iter().find(|x| !x.is_zero()) {
        None => v.to_vec(),
        Some(lead) => {
            let inv = lead.inv().expect("leading coordinate is nonzero");
            scale(&inv, v)
        }
    }
}

/// Formats as `(a, b, c)`.
pub fn display(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Formats as a linear combination of labelled basis vectors, e.g. `x - 2*cx`.
pub fn display_in_basis(v: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels).filter(|(c, _)| !c.is_zero()) {
        let text = c.to_string();
        let (negative, magnitude) = match text.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, text.as_str()),
        };
        let term = if magnitude == "1" {
            l.clone()
        } else {
            format!("{magnitude}*{l}")
        };
        match (out.is_empty(), negative) {
            (true, false) => out.push_str(&term),
            (true, true) => out.push_str(&format!("-{term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}
