//! Irreducible character degrees.
//!
//! Degrees are recovered from the common eigenvectors of the class matrices
//! over a prime field `F_ℓ` with `ℓ ≡ 1 (mod exponent)`, so every central
//! character value lives in `F_ℓ`. Only degrees are reconstructed, never
//! character values.

mod modp;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permgroup::{PermGroup, Subgroup};

/// Class-count limit for the eigenvector method.
pub const DEGREE_CLASS_CAP: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeSource {
    Group,
    External,
}

/// A multiset of character degrees: sorted `(degree, multiplicity)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMultiset {
    entries: Vec<(u64, u64)>,
    source: DegreeSource,
}

impl DegreeMultiset {
    fn from_counts(counts: BTreeMap<u64, u64>, source: DegreeSource) -> Self {
        DegreeMultiset {
            entries: counts.into_iter().collect(),
            source,
        }
    }

    /// Ingests user-supplied degrees. Group identities are not asserted.
    pub fn from_list(values: &[u64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        if values.contains(&0) {
            return Err(Error::InvalidArgument("degrees must be positive".into()));
        }
        let mut counts = BTreeMap::new();
        for &v in values {
            *counts.entry(v).or_insert(0) += 1;
        }
        Ok(Self::from_counts(counts, DegreeSource::External))
    }

    /// Parses `"1,15,16,17"` or a JSON array `[1, 15, 16, 17]`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let values: Vec<u64> = if t.starts_with('[') {
            serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?
        } else {
            t.split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad degree `{}`", s.trim())))
                })
                .collect::<Result<_>>()?
        };
        Self::from_list(&values)
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn source(&self) -> DegreeSource {
        self.source
    }

    /// Distinct degrees, ascending.
    pub fn degree_set(&self) -> Vec<u64> {
        self.entries.iter().map(|&(d, _)| d).collect()
    }

    pub fn multiplicity(&self, degree: u64) -> u64 {
        self.entries
            .iter()
            .find(|&&(d, _)| d == degree)
            .map_or(0, |&(_, m)| m)
    }

    /// Number of characters counted with multiplicity.
    pub fn count(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn sum_of_squares(&self) -> u128 {
        self.entries
            .iter()
            .map(|&(d, m)| m as u128 * d as u128 * d as u128)
            .sum()
    }

    /// All degrees with repetition, ascending.
    pub fn expanded(&self) -> Vec<u64> {
        self.entries
            .iter()
            .flat_map(|&(d, m)| std::iter::repeat_n(d, m as usize))
            .collect()
    }
}

impl fmt::Display for DegreeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|&(d, m)| if m == 1 { d.to_string() } else { format!("{d}×{m}") })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `{1, 2ⁿ, 2ⁿ-1, 2ⁿ+1}`, the degree set of `PSL(2, 2ⁿ)`.
pub fn psl2_2n_degrees(n: u32) -> Result<DegreeMultiset> {
    if !(2..=62).contains(&n) {
        return Err(Error::InvalidArgument(format!("n = {n} must lie in 2..=62")));
    }
    let q = 1u64 << n;
    DegreeMultiset::from_list(&[1, q - 1, q, q + 1])
}

/// Degrees of a direct product: pairwise products, multiplicities multiplied.
pub fn direct_product_degrees(a: &DegreeMultiset, b: &DegreeMultiset) -> DegreeMultiset {
    let mut counts = BTreeMap::new();
    for &(da, ma) in &a.entries {
        for &(db, mb) in &b.entries {
            *counts.entry(da * db).or_insert(0) += ma * mb;
        }
    }
    let source = if a.source == DegreeSource::Group && b.source == DegreeSource::Group {
        DegreeSource::Group
    } else {
        DegreeSource::External
    };
    DegreeMultiset::from_counts(counts, source)
}

/// Structure constants of the class algebra for one class `C_i`.
///
/// `coefficients[k][j]` counts pairs `(x, y) ∈ C_i × C_j` with `xy` equal to
/// the representative of `C_k`; each row therefore sums to `|C_i|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMatrix {
    pub class_index: usize,
    pub coefficients: Vec<Vec<u64>>,
}

pub fn class_matrix(g: &PermGroup, i: usize) -> ClassMatrix {
    let classes = g.conjugacy_classes();
    let class_of = g.class_of();
    let r = classes.len();
    let mut coefficients = vec![vec![0u64; r]; r];
    for (k, ck) in classes.iter().enumerate() {
        let z = ck.representative;
        for &x in &classes[i].members {
            let y = g.mul(g.inv(x), z);
            coefficients[k][class_of[y]] += 1;
        }
    }
    ClassMatrix {
        class_index: i,
        coefficients,
    }
}

/// Smallest prime `ℓ ≡ 1 (mod exponent)` with `ℓ > 2√order`.
pub fn dixon_prime(order: u64, exponent: u64) -> u64 {
    let mut candidate = exponent + 1;
    loop {
        if (candidate as u128) * (candidate as u128) > 4 * order as u128 && modp::is_prime(candidate) {
            return candidate;
        }
        candidate += exponent;
    }
}

/// The multiset of irreducible character degrees of `g`.
pub fn character_degrees(g: &PermGroup) -> Result<DegreeMultiset> {
    let order = g.order();
    if g.is_abelian() {
        return Ok(DegreeMultiset::from_counts(BTreeMap::from([(1, order)]), DegreeSource::Group));
    }
    let classes = g.conjugacy_classes();
    let r = classes.len();
    if r > DEGREE_CLASS_CAP {
        return Err(Error::TooManyClasses {
            classes: r,
            cap: DEGREE_CLASS_CAP,
        });
    }
    let p = dixon_prime(order, g.exponent());

    // Common eigenspaces, each an RREF basis of row vectors in F_p^r.
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity];

    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let cm = class_matrix(g, i);
        // Acting matrix: (A w)_j = sum_k a_ijk w_k.
        let a: Vec<Vec<u64>> = (0..r)
            .map(|j| (0..r).map(|k| cm.coefficients[k][j] % p).collect())
            .collect();
        let mut next = Vec::with_capacity(spaces.len());
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split_space(&a, basis, p)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::DegreeRecoveryFailure(0));
    }

    let inverse_class: Vec<usize> = classes
        .iter()
        .map(|c| g.class_of()[g.inv(c.representative)])
        .collect();
    let max_degree = isqrt(order);
    let mut counts = BTreeMap::new();
    for (idx, space) in spaces.iter().enumerate() {
        let w = &space[0];
        if w[0] != 1 {
            return Err(Error::DegreeRecoveryFailure(idx));
        }
        // sum_k w_k w_k' / |C_k| = |G| / d^2
        let s = (0..r).fold(0u64, |acc, k| {
            let term = w[k] * w[inverse_class[k]] % p * modp::inv_mod(classes[k].size as u64 % p, p) % p;
            (acc + term) % p
        });
        if s == 0 {
            return Err(Error::DegreeRecoveryFailure(idx));
        }
        let d2 = order % p * modp::inv_mod(s, p) % p;
        let d = (1..=max_degree)
            .find(|&d| d * d % p == d2)
            .ok_or(Error::DegreeRecoveryFailure(idx))?;
        *counts.entry(d).or_insert(0u64) += 1;
    }
    let result = DegreeMultiset::from_counts(counts, DegreeSource::Group);
    let consistent = result.sum_of_squares() == order as u128
        && result.count() == r as u64
        && result.entries.iter().all(|&(d, _)| order.is_multiple_of(d));
    if !consistent {
        return Err(Error::DegreeRecoveryFailure(r));
    }
    Ok(result)
}

/// Splits an invariant subspace into eigenspaces of `a`.
fn split_space(a: &[Vec<u64>], basis: Vec<Vec<u64>>, p: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let (basis, pivots) = modp::rref(basis, p);
    // Column t of the restriction holds the coordinates of A b_t.
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            (0..a.len())
                .map(|j| a[j].iter().zip(b).fold(0u64, |s, (&x, &y)| (s + x * y) % p))
                .collect()
        })
        .collect();
    let restricted: Vec<Vec<u64>> = (0..d)
        .map(|s| (0..d).map(|t| images[t][pivots[s]]).collect())
        .collect();
    let cp = modp::char_poly(&restricted, p);
    let roots: Vec<u64> = (0..p).filter(|&x| modp::eval_poly(&cp, x, p) == 0).collect();
    if roots.len() <= 1 {
        return Ok(vec![basis]);
    }
    let mut pieces = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|s| {
                (0..d)
                    .map(|t| {
                        let v = restricted[s][t];
                        if s == t {
                            (v + p - lambda) % p
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        let coords = modp::kernel(&shifted, p);
        let vectors: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                (0..a.len())
                    .map(|j| c.iter().zip(&basis).fold(0u64, |s, (&ct, b)| (s + ct * b[j]) % p))
                    .collect()
            })
            .collect();
        total += vectors.len();
        pieces.push(modp::rref(vectors, p).0);
    }
    if total != d {
        return Err(Error::DegreeRecoveryFailure(d));
    }
    Ok(pieces)
}

fn isqrt(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// `cd(G/N)` for every normal subgroup `N`.
pub fn quotient_degree_survey(g: &PermGroup) -> Result<Vec<(Subgroup, DegreeMultiset)>> {
    g.normal_subgroups()?
        .into_iter()
        .map(|n| {
            let q = g.quotient(&n)?;
            let cd = character_degrees(&q)?;
            Ok((n, cd))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ItoMichlerEntry {
    pub prime: u64,
    pub divides_some_degree: bool,
    pub sylow_normal_abelian: bool,
    pub consistent: bool,
}

/// For each prime `p` dividing `|G|`: `p` divides no degree exactly when the
/// Sylow p-subgroup is normal and abelian.
pub fn ito_michler_check(g: &PermGroup, degrees: &DegreeMultiset) -> Result<Vec<ItoMichlerEntry>> {
    g.prime_divisors()
        .into_iter()
        .map(|p| {
            let divides = degrees.degree_set().iter().any(|d| d % p == 0);
            let sylow = g.sylow_subgroup(p)?;
            let normal_abelian = sylow.is_normal() && g.is_abelian_subgroup(&sylow);
            Ok(ItoMichlerEntry {
                prime: p,
                divides_some_degree: divides,
                sylow_normal_abelian: normal_abelian,
                consistent: divides != normal_abelian,
            })
        })
        .collect()
}
