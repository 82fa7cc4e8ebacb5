//! Exact adjacency spectra: characteristic polynomials over `Z`, distinct
//! eigenvalue counts from the square-free part, and integer roots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::graphkit::{iter_set, SimpleGraph};

/// Integer polynomial, coefficients in ascending degree.
type Poly = Vec<BigInt>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn degree(p: &Poly) -> Option<usize> {
    p.len().checked_sub(1)
}

fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
}

fn primitive(p: Poly) -> Poly {
    let p = trim(p);
    let Some(lead) = p.last() else { return p };
    let content = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let sign = if lead.is_negative() { -BigInt::one() } else { BigInt::one() };
    let d = content * sign;
    p.into_iter().map(|c| c / &d).collect()
}

/// `lc(b)^k · a mod b` for the smallest sufficient `k`.
fn pseudo_rem(a: &Poly, b: &Poly) -> Poly {
    let db = degree(b).expect("nonzero divisor");
    let lb = &b[db];
    let mut r = a.clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * c;
        }
        r = trim(r);
    }
    r
}

/// Primitive gcd with positive leading coefficient.
fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (primitive(a.clone()), primitive(b.clone()));
    while !b.is_empty() {
        let r = primitive(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// Exact quotient `a / b`; `b` must divide `a` over `Z`.
fn exact_div(a: &Poly, b: &Poly) -> Poly {
    let db = degree(b).expect("nonzero divisor");
    let mut r = a.clone();
    let Some(da) = degree(&r) else { return r };
    if da < db {
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let (c, rem) = r[k + db].div_rem(&b[db]);
        assert!(rem.is_zero(), "inexact polynomial division");
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &c * bc;
        }
        q[k] = c;
    }
    assert!(trim(r).is_empty(), "inexact polynomial division");
    q
}

fn eval(p: &Poly, x: i64) -> BigInt {
    let x = BigInt::from(x);
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
}

/// Monic characteristic polynomial `det(xI − A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolynomial {
    coefficients: Poly,
}

impl CharPolynomial {
    /// Ascending coefficients; the last one is 1.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Coefficients as decimal strings, highest degree first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree(),
            "coefficients": self.coefficients.iter().rev().map(|c| c.to_string()).collect::<Vec<_>>(),
            "text": self.to_string(),
        })
    }
}

impl fmt::Display for CharPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Faddeev–LeVerrier over the integers; every division is exact.
pub fn char_poly(g: &SimpleGraph) -> CharPolynomial {
    let n = g.n();
    let a: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| g.has_edge(i, j) as i64).collect())
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in iter_set(g.neighbors(i)) {
                for (c, x) in next[i].iter_mut().zip(&m[j]) {
                    *c += x;
                }
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        m = next;
        // c_{n−k} = −tr(A·M_k) / k
        let mut tr = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                if a[i][j] == 1 {
                    tr += &m[j][i];
                }
            }
        }
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs[n - k] = -q;
    }
    CharPolynomial { coefficients: coeffs }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumSummary {
    pub distinct_count: usize,
    /// Integer eigenvalues with multiplicity, in decreasing order.
    pub integer_eigenvalues: Vec<(i64, usize)>,
    pub has_irrational_part: bool,
    /// Number of eigenvalues (with multiplicity) that are not integers.
    pub irrational_multiplicity: usize,
}

pub fn spectrum_summary(p: &CharPolynomial, max_abs: i64) -> SpectrumSummary {
    let poly = &p.coefficients;
    let squarefree = exact_div(poly, &gcd(poly, &derivative(poly)));
    let distinct_count = degree(&squarefree).unwrap_or(0);

    let mut rest = poly.clone();
    let mut integer_eigenvalues = Vec::new();
    for r in (-max_abs..=max_abs).rev() {
        let mut mult = 0;
        while degree(&rest).unwrap_or(0) > 0 && eval(&rest, r).is_zero() {
            rest = exact_div(&rest, &vec![BigInt::from(-r), BigInt::one()]);
            mult += 1;
        }
        if mult > 0 {
            integer_eigenvalues.push((r, mult));
        }
    }
    let irrational_multiplicity = degree(&rest).unwrap_or(0);
    SpectrumSummary {
        distinct_count,
        integer_eigenvalues,
        has_irrational_part: irrational_multiplicity > 0,
        irrational_multiplicity,
    }
}

/// Spectrum of the adjacency matrix; eigenvalues are bounded by the maximum
/// degree, which bounds the integer root search.
pub fn distinct_eigenvalue_count(g: &SimpleGraph) -> SpectrumSummary {
    let max_deg = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0) as i64;
    spectrum_summary(&char_poly(g), max_deg)
}
