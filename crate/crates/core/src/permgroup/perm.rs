use std::fmt;

use num_integer::Integer;
use serde::Deserialize;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, rejecting anything that is
    /// not a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::MalformedPermutation(format!(
                    "image array {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::MalformedPermutation(format!(
                        "point {} outside degree {degree}",
                        p + 1
                    )));
                }
                if touched[p] {
                    return Err(Error::MalformedPermutation(format!(
                        "point {} repeated across cycles",
                        p + 1
                    )));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Product that applies `self` first and then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.image(start);
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.image(j);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Element order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Same permutation acting on `degree` points (extra points fixed).
    pub(crate) fn extended(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Permutation { images }
    }

    pub(crate) fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[i + offset] = j + offset as u32;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses comma-separated generators in 1-based cycle notation, e.g.
/// `"(1 2)(3 4),(1 2 3)"`. Inside a cycle, points may be separated by spaces
/// or commas. Returns permutations of a common degree (the largest point).
pub fn parse_cycle_generators(text: &str) -> Result<Vec<Permutation>> {
    let mut generators: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    let mut cycle: Option<Vec<usize>> = None;
    let mut token = String::new();
    let mut seen_any = false;

    let flush_token = |token: &mut String, cycle: &mut Option<Vec<usize>>| -> Result<()> {
        if token.is_empty() {
            return Ok(());
        }
        let p: usize = token
            .parse()
            .map_err(|_| Error::Parse(format!("bad point `{token}`")))?;
        if p == 0 {
            return Err(Error::Parse("points are 1-based".into()));
        }
        match cycle {
            Some(c) => c.push(p - 1),
            None => return Err(Error::Parse(format!("point `{token}` outside a cycle"))),
        }
        token.clear();
        Ok(())
    };

    for ch in text.chars() {
        match ch {
            '(' => {
                if cycle.is_some() {
                    return Err(Error::Parse("nested parenthesis".into()));
                }
                cycle = Some(Vec::new());
                seen_any = true;
            }
            ')' => {
                flush_token(&mut token, &mut cycle)?;
                let c = cycle
                    .take()
                    .ok_or_else(|| Error::Parse("unbalanced `)`".into()))?;
                if c.len() > 1 {
                    current.push(c);
                }
            }
            ',' if cycle.is_none() => {
                generators.push(std::mem::take(&mut current));
            }
            ',' => flush_token(&mut token, &mut cycle)?,
            c if c.is_ascii_digit() => token.push(c),
            c if c.is_whitespace() => flush_token(&mut token, &mut cycle)?,
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    if cycle.is_some() {
        return Err(Error::Parse("unterminated cycle".into()));
    }
    if !seen_any {
        if text.trim().is_empty() {
            return Ok(Vec::new());
        }
        return Err(Error::Parse("no cycles found".into()));
    }
    generators.push(current);
    let degree = generators
        .iter()
        .flatten()
        .flatten()
        .map(|&p| p + 1)
        .max()
        .unwrap_or(0);
    generators
        .iter()
        .map(|g| Permutation::from_cycles(degree, g))
        .collect()
}

#[derive(Deserialize)]
struct GroupJson {
    degree: usize,
    generators: Vec<Vec<Vec<usize>>>,
}

/// Parses `{"degree": n, "generators": [[[1,2],[3,4]], [[1,2,3]]]}`, cycles
/// given as 1-based point arrays.
pub fn parse_group_json(text: &str) -> Result<Vec<Permutation>> {
    let g: GroupJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    g.generators
        .iter()
        .map(|cycles| {
            let zero: Vec<Vec<usize>> = cycles
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|&p| {
                            p.checked_sub(1)
                                .ok_or_else(|| Error::Parse("points are 1-based".into()))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?;
            Permutation::from_cycles(g.degree, &zero)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_normalizes_to_zero_based() {
        let gens = parse_cycle_generators("(1 2)(3 4),(1 2 3)").unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].images(), &[1, 0, 3, 2]);
        assert_eq!(gens[1].images(), &[1, 2, 0, 3]);
        assert_eq!(gens[1].to_string(), "(1 2 3)");
    }

    #[test]
    fn parse_accepts_gap_style_commas() {
        let gens = parse_cycle_generators("(1,2),(1,2,3)").unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].order(), 2);
        assert_eq!(gens[1].order(), 3);
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(parse_cycle_generators("(1 2").is_err());
        assert!(parse_cycle_generators("(0 1)").is_err());
        assert!(parse_cycle_generators("(1 2)(2 3)").is_err());
        assert!(parse_cycle_generators("(1 x)").is_err());
        assert!(parse_cycle_generators("").unwrap().is_empty());
    }

    #[test]
    fn json_group_format() {
        let gens = parse_group_json(r#"{"degree": 4, "generators": [[[1,2]], [[1,2,3,4]]]}"#).unwrap();
        assert_eq!(gens[0].images(), &[1, 0, 2, 3]);
        assert_eq!(gens[1].order(), 4);
        assert!(parse_group_json(r#"{"degree": 2, "generators": [[[1,3]]]}"#).is_err());
    }

    #[test]
    fn from_images_checks_bijection() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
        let p = Permutation::from_images(vec![2, 0, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
    }
}
