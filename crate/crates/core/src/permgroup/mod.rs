//! Finite permutation groups held as explicit element lists.
//!
//! Every algorithm here enumerates elements, so groups are limited to a
//! configurable order cap (10 000 by default). Subgroups are index sets into
//! the parent's element list.

mod perm;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::OnceLock;

use num_integer::Integer;
use serde::Serialize;

use crate::chargraph::factorize;
use crate::error::{Error, Result};

pub use perm::{parse_cycle_generators, parse_group_json, Permutation};

pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Cap on the number of conjugacy classes for normal-subgroup enumeration
/// and degree computation (class sets are tracked as 64-bit masks).
pub const CLASS_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub size: usize,
    /// Sorted indices into the parent's element list.
    pub members: Vec<usize>,
}

/// A subgroup of a [`PermGroup`], stored as sorted element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Vec<usize>,
    is_normal: bool,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    pub fn contains(&self, element: usize) -> bool {
        self.elements.binary_search(&element).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }
}

/// Frobenius structure of a group: kernel and one complement.
#[derive(Clone, Debug, Serialize)]
pub struct Frobenius {
    pub kernel: Subgroup,
    pub complement: Subgroup,
    /// `Some(p)` when the kernel is an elementary abelian p-group.
    pub kernel_elementary_abelian: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    exponent: u64,
    classes: OnceLock<(Vec<ConjugacyClass>, Vec<usize>)>,
    inverses: OnceLock<Vec<usize>>,
}

impl PermGroup {
    /// Breadth-first closure of `generators`. The identity is always element 0.
    pub fn from_generators(generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        let degree = generators.first().map_or(0, Permutation::degree);
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::MalformedPermutation(
                "generators act on different numbers of points".into(),
            ));
        }
        let cap = cap.max(1);
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let p = elements[i].compose(g);
                if !index.contains_key(&p) {
                    if elements.len() == cap {
                        return Err(Error::ClosureExceedsCap { cap });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let exponent = elements.iter().fold(1u64, |acc, e| acc.lcm(&e.order()));
        Ok(PermGroup {
            degree,
            generators,
            elements,
            index,
            exponent,
            classes: OnceLock::new(),
            inverses: OnceLock::new(),
        })
    }

    pub fn parse(text: &str, cap: usize) -> Result<Self> {
        let trimmed = text.trim();
        let gens = if trimmed.starts_with('{') {
            parse_group_json(trimmed)?
        } else {
            parse_cycle_generators(trimmed)?
        };
        PermGroup::from_generators(gens, cap)
    }

    /// Direct product acting on the disjoint union of both point sets.
    pub fn direct_product(&self, other: &PermGroup, cap: usize) -> Result<PermGroup> {
        let degree = self.degree + other.degree;
        let mut gens: Vec<Permutation> = self.generators.iter().map(|g| g.extended(degree)).collect();
        gens.extend(other.generators.iter().map(|g| g.shifted(self.degree, degree)));
        PermGroup::from_generators(gens, cap)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Primes dividing the group order.
    pub fn prime_divisors(&self) -> Vec<u64> {
        factorize(self.order()).into_iter().map(|(p, _)| p).collect()
    }

    pub(crate) fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub(crate) fn inv(&self, a: usize) -> usize {
        self.inverses.get_or_init(|| {
            self.elements
                .iter()
                .map(|e| self.index[&e.inverse()])
                .collect()
        })[a]
    }

    /// `c⁻¹ x c`
    fn conj(&self, x: usize, c: usize) -> usize {
        self.mul(self.mul(self.inv(c), x), c)
    }

    /// `a⁻¹ b⁻¹ a b`
    fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    fn generator_indices(&self) -> Vec<usize> {
        self.generators
            .iter()
            .map(|g| self.index[g])
            .filter(|&i| i != 0)
            .collect()
    }

    // ---------------------------------------------------------------------
    // Subgroup machinery
    // ---------------------------------------------------------------------

    /// Membership vector of the subgroup generated by `gens`, or `None` once
    /// it grows beyond `limit` elements.
    fn closure_mask(&self, gens: &[usize], limit: usize) -> Option<(Vec<bool>, usize)> {
        let mut member = vec![false; self.elements.len()];
        member[0] = true;
        let mut count = 1;
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for &g in gens {
                let m = self.mul(e, g);
                if !member[m] {
                    member[m] = true;
                    count += 1;
                    if count > limit {
                        return None;
                    }
                    queue.push_back(m);
                }
            }
        }
        Some((member, count))
    }

    fn mask_to_indices(mask: &[bool]) -> Vec<usize> {
        mask.iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }

    fn make_subgroup(&self, elements: Vec<usize>, generators: Vec<usize>) -> Subgroup {
        let parent_gens = self.generator_indices();
        let member: Vec<bool> = {
            let mut m = vec![false; self.elements.len()];
            for &e in &elements {
                m[e] = true;
            }
            m
        };
        let is_normal = generators
            .iter()
            .all(|&h| parent_gens.iter().all(|&g| member[self.conj(h, g)]));
        Subgroup {
            elements,
            generators,
            is_normal,
        }
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup_generated_by(&self, gens: &[usize]) -> Subgroup {
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        let (mask, _) = self
            .closure_mask(&gens, usize::MAX)
            .expect("closure without limit");
        self.make_subgroup(Self::mask_to_indices(&mask), gens)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: (0..self.elements.len()).collect(),
            generators: self.generator_indices(),
            is_normal: true,
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            elements: vec![0],
            generators: Vec::new(),
            is_normal: true,
        }
    }

    /// Smallest subgroup containing `seeds` and normalized by `conj_by`.
    fn normal_closure(&self, seeds: &[usize], conj_by: &[usize]) -> (Vec<bool>, Vec<usize>) {
        let mut gens: Vec<usize> = seeds.iter().copied().filter(|&s| s != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        loop {
            let (mask, _) = self.closure_mask(&gens, usize::MAX).expect("no limit");
            let missing = gens
                .iter()
                .flat_map(|&s| conj_by.iter().map(move |&c| (s, c)))
                .map(|(s, c)| self.conj(s, c))
                .find(|&t| !mask[t]);
            match missing {
                Some(t) => gens.push(t),
                None => return (mask, gens),
            }
        }
    }

    fn normal_closure_subgroup(&self, seeds: &[usize], conj_by: &[usize]) -> Subgroup {
        let (mask, gens) = self.normal_closure(seeds, conj_by);
        self.make_subgroup(Self::mask_to_indices(&mask), gens)
    }

    pub fn is_abelian_subgroup(&self, h: &Subgroup) -> bool {
        let g = &h.generators;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_abelian(&self) -> bool {
        self.is_abelian_subgroup(&self.whole())
    }

    /// `[H, H]`
    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let gens = &h.generators;
        let seeds: Vec<usize> = gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.normal_closure_subgroup(&seeds, gens)
    }

    /// `G ⊇ G′ ⊇ G″ ⊇ …` down to the first repeated term.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("non-empty");
            let next = self.derived_subgroup(last);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_none_or(Subgroup::is_trivial)
    }

    /// Lower central series of `h`: `γ₁ = H`, `γᵢ₊₁ = [γᵢ, H]`.
    pub fn lower_central_series(&self, h: &Subgroup) -> Vec<Subgroup> {
        let mut series = vec![h.clone()];
        loop {
            let last = series.last().expect("non-empty");
            let seeds: Vec<usize> = last
                .generators
                .iter()
                .flat_map(|&x| h.generators.iter().map(move |&y| (x, y)))
                .map(|(x, y)| self.commutator(x, y))
                .collect();
            let next = self.normal_closure_subgroup(&seeds, &h.generators);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_nilpotent(&self, h: &Subgroup) -> bool {
        self.lower_central_series(h)
            .last()
            .is_none_or(Subgroup::is_trivial)
    }

    pub fn center(&self) -> Subgroup {
        let gens = self.generator_indices();
        let elems: Vec<usize> = (0..self.elements.len())
            .filter(|&x| gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x)))
            .collect();
        let sub_gens = self.greedy_generators(&elems);
        self.make_subgroup(elems, sub_gens)
    }

    /// A small generating set for the subgroup with the given (sorted) elements.
    fn greedy_generators(&self, elements: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut mask = vec![false; self.elements.len()];
        mask[0] = true;
        for &x in elements {
            if !mask[x] {
                gens.push(x);
                mask = self.closure_mask(&gens, usize::MAX).expect("no limit").0;
            }
        }
        gens
    }

    // ---------------------------------------------------------------------
    // Conjugacy classes and normal subgroups
    // ---------------------------------------------------------------------

    fn class_data(&self) -> &(Vec<ConjugacyClass>, Vec<usize>) {
        self.classes.get_or_init(|| {
            let n = self.elements.len();
            let gens = self.generator_indices();
            let mut class_id = vec![usize::MAX; n];
            let mut raw: Vec<Vec<usize>> = Vec::new();
            for start in 0..n {
                if class_id[start] != usize::MAX {
                    continue;
                }
                let id = raw.len();
                let mut members = vec![start];
                class_id[start] = id;
                let mut k = 0;
                while k < members.len() {
                    let x = members[k];
                    for &g in &gens {
                        let y = self.conj(x, g);
                        if class_id[y] == usize::MAX {
                            class_id[y] = id;
                            members.push(y);
                        }
                    }
                    k += 1;
                }
                members.sort_unstable();
                raw.push(members);
            }
            raw.sort_by_key(|m| (m.len(), m[0]));
            let mut class_of = vec![0usize; n];
            let classes = raw
                .into_iter()
                .enumerate()
                .map(|(i, members)| {
                    for &m in &members {
                        class_of[m] = i;
                    }
                    ConjugacyClass {
                        representative: members[0],
                        size: members.len(),
                        members,
                    }
                })
                .collect();
            (classes, class_of)
        })
    }

    /// Conjugacy classes sorted by size, then by smallest member index. The
    /// identity class is always first.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().0
    }

    /// Class index of every element.
    pub fn class_of(&self) -> &[usize] {
        &self.class_data().1
    }

    fn class_mask(&self, elements: &[usize]) -> u64 {
        let class_of = self.class_of();
        elements.iter().fold(0u64, |m, &e| m | (1u64 << class_of[e]))
    }

    /// All normal subgroups, sorted by order (ties by class set).
    ///
    /// A normal subgroup is a union of classes, and it is the product of the
    /// normal closures of the classes it contains; the search closes the set
    /// of such products under pairwise joins.
    pub fn normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        let classes = self.conjugacy_classes();
        if classes.len() > CLASS_CAP {
            return Err(Error::TooManyClasses {
                classes: classes.len(),
                cap: CLASS_CAP,
            });
        }
        let gens = self.generator_indices();
        let mut atoms: Vec<(u64, Subgroup)> = Vec::new();
        for c in classes.iter().skip(1) {
            let n = self.normal_closure_subgroup(&[c.representative], &gens);
            let mask = self.class_mask(&n.elements);
            if !atoms.iter().any(|(m, _)| *m == mask) {
                atoms.push((mask, n));
            }
        }
        let mut found: BTreeMap<u64, Subgroup> = BTreeMap::new();
        found.insert(1, self.trivial_subgroup());
        let mut frontier: Vec<u64> = vec![1];
        while let Some(mask) = frontier.pop() {
            for (amask, atom) in &atoms {
                if mask & amask == *amask {
                    continue;
                }
                let current = &found[&mask];
                let mut joined_gens = current.generators.clone();
                joined_gens.extend(&atom.generators);
                let (m, _) = self.closure_mask(&joined_gens, usize::MAX).expect("no limit");
                let elems = Self::mask_to_indices(&m);
                let jmask = self.class_mask(&elems);
                if let std::collections::btree_map::Entry::Vacant(v) = found.entry(jmask) {
                    let sub_gens = self.greedy_generators(&elems);
                    v.insert(Subgroup {
                        elements: elems,
                        generators: sub_gens,
                        is_normal: true,
                    });
                    frontier.push(jmask);
                }
            }
        }
        let mut out: Vec<(u64, Subgroup)> = found.into_iter().collect();
        out.sort_by_key(|(mask, s)| (s.order(), *mask));
        Ok(out.into_iter().map(|(_, s)| s).collect())
    }

    /// The largest nilpotent normal subgroup.
    pub fn fitting_subgroup(&self) -> Result<Subgroup> {
        let nilpotent: Vec<Subgroup> = self
            .normal_subgroups()?
            .into_iter()
            .filter(|n| self.is_nilpotent(n))
            .collect();
        let fitting = nilpotent
            .iter()
            .max_by_key(|n| n.order())
            .cloned()
            .expect("trivial subgroup is nilpotent");
        debug_assert!(nilpotent.iter().all(|n| n.is_subgroup_of(&fitting)));
        Ok(fitting)
    }

    /// One Sylow p-subgroup, grown greedily: any p-subgroup of index divisible
    /// by p is normalized by a further p-element, so repeated passes terminate.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup> {
        let order = self.order();
        if p < 2 || !order.is_multiple_of(p) {
            return Err(Error::PrimeDoesNotDivideOrder { p, order });
        }
        let target = p_part(order, p) as usize;
        let p_elements: Vec<usize> = (1..self.elements.len())
            .filter(|&i| is_power_of(self.elements[i].order(), p))
            .collect();
        let mut gens: Vec<usize> = Vec::new();
        let mut mask = vec![false; self.elements.len()];
        mask[0] = true;
        let mut size = 1usize;
        while size < target {
            let before = size;
            for &x in &p_elements {
                if mask[x] {
                    continue;
                }
                let mut trial = gens.clone();
                trial.push(x);
                if let Some((m, count)) = self.closure_mask(&trial, target) {
                    if is_power_of(count as u64, p) {
                        gens = trial;
                        mask = m;
                        size = count;
                        if size == target {
                            break;
                        }
                    }
                }
            }
            assert!(size > before, "Sylow search stalled");
        }
        Ok(self.make_subgroup(Self::mask_to_indices(&mask), gens))
    }

    /// The normal subgroup of order `|G| / p^a`, if it exists.
    pub fn normal_p_complement(&self, p: u64) -> Result<Option<Subgroup>> {
        let target = (self.order() / p_part(self.order(), p)) as usize;
        Ok(self
            .normal_subgroups()?
            .into_iter()
            .find(|n| n.order() == target))
    }

    /// `G / N` as a permutation group on the cosets of `N`.
    pub fn quotient(&self, n: &Subgroup) -> Result<PermGroup> {
        if !n.is_normal() {
            return Err(Error::NotNormal);
        }
        let cap = self.elements.len();
        if n.is_trivial() {
            return PermGroup::from_generators(self.generators.clone(), cap);
        }
        let size = self.elements.len();
        let mut coset_of = vec![usize::MAX; size];
        let mut reps = Vec::new();
        for g in 0..size {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &x in &n.elements {
                coset_of[self.mul(g, x)] = id;
            }
        }
        let gens = self
            .generator_indices()
            .into_iter()
            .map(|g| {
                let images = reps.iter().map(|&r| coset_of[self.mul(r, g)]).collect();
                Permutation::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        let gens = if gens.is_empty() {
            vec![Permutation::identity(reps.len())]
        } else {
            gens
        };
        PermGroup::from_generators(gens, cap)
    }

    /// The subgroup as a group in its own right.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Result<PermGroup> {
        let gens = if h.generators.is_empty() {
            vec![Permutation::identity(self.degree)]
        } else {
            h.generators.iter().map(|&i| self.elements[i].clone()).collect()
        };
        PermGroup::from_generators(gens, self.elements.len())
    }

    /// `Some(p)` if `h` is a non-trivial elementary abelian p-group.
    pub fn elementary_abelian_prime(&self, h: &Subgroup) -> Option<u64> {
        if h.is_trivial() || !self.is_abelian_subgroup(h) {
            return None;
        }
        let p = self.elements[h.elements[1]].order();
        let prime = factorize(p).len() == 1 && factorize(p)[0].1 == 1;
        (prime && h.elements[1..].iter().all(|&e| self.elements[e].order() == p)).then_some(p)
    }

    /// Frobenius kernel and complement, if `G` is a Frobenius group.
    ///
    /// A proper non-trivial normal subgroup `F` is a Frobenius kernel exactly
    /// when no non-identity element of `F` commutes with an element outside
    /// `F`. The complement is grown greedily from elements outside `F`, and the
    /// defining property `H ∩ Hᵍ = 1` for `g ∉ H` is then checked directly.
    pub fn frobenius(&self) -> Result<Option<Frobenius>> {
        let order = self.elements.len();
        for kernel in self.normal_subgroups()? {
            if kernel.is_trivial() || kernel.order() == order {
                continue;
            }
            let in_kernel = membership(order, &kernel.elements);
            let self_centralizing = kernel.elements[1..].iter().all(|&x| {
                (0..order)
                    .filter(|&g| !in_kernel[g])
                    .all(|g| self.mul(x, g) != self.mul(g, x))
            });
            if !self_centralizing {
                continue;
            }
            let target = order / kernel.order();
            let Some(complement) = self.find_complement(&in_kernel, target) else {
                continue;
            };
            if self.is_malnormal(&complement) {
                let p = self.elementary_abelian_prime(&kernel);
                return Ok(Some(Frobenius {
                    kernel,
                    complement,
                    kernel_elementary_abelian: p,
                }));
            }
        }
        Ok(None)
    }

    fn find_complement(&self, in_kernel: &[bool], target: usize) -> Option<Subgroup> {
        let mut gens: Vec<usize> = Vec::new();
        let mut mask = vec![false; self.elements.len()];
        mask[0] = true;
        let mut size = 1;
        while size < target {
            let before = size;
            for x in 0..self.elements.len() {
                if in_kernel[x] || mask[x] {
                    continue;
                }
                let mut trial = gens.clone();
                trial.push(x);
                if let Some((m, count)) = self.closure_mask(&trial, target) {
                    let meets_kernel = m.iter().enumerate().skip(1).any(|(i, &b)| b && in_kernel[i]);
                    if target.is_multiple_of(count) && !meets_kernel {
                        gens = trial;
                        mask = m;
                        size = count;
                        if size == target {
                            break;
                        }
                    }
                }
            }
            if size == before {
                return None;
            }
        }
        Some(self.make_subgroup(Self::mask_to_indices(&mask), gens))
    }

    /// `H ∩ Hᵍ = 1` for every `g ∉ H`.
    fn is_malnormal(&self, h: &Subgroup) -> bool {
        let order = self.elements.len();
        let in_h = membership(order, &h.elements);
        (0..order).filter(|&g| !in_h[g]).all(|g| {
            h.elements[1..]
                .iter()
                .all(|&x| !in_h[self.conj(x, g)])
        })
    }
}

fn membership(size: usize, elements: &[usize]) -> Vec<bool> {
    let mut m = vec![false; size];
    for &e in elements {
        m[e] = true;
    }
    m
}

/// Largest power of `p` dividing `n`.
pub(crate) fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    if p < 2 {
        return 1;
    }
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
