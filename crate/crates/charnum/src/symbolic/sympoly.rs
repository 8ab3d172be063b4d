//! Symmetric polynomials in the Chern roots and their reduction to the
//! elementary symmetric basis.
//!
//! A symmetric polynomial in `N` root variables is stored by orbit
//! representatives: one weakly decreasing exponent vector (a partition)
//! per monomial orbit, i.e. the coefficients of the monomial symmetric
//! functions `m_λ`. This keeps the product over Chern roots at partition
//! scale instead of exponent-vector scale.
//!
//! `elementary_reduce` is lex leading-term elimination: the lex-greatest
//! orbit `λ` of a symmetric `S` is killed by subtracting
//! `coeff · e_1^{λ_1-λ_2} e_2^{λ_2-λ_3} ···`, whose own lex-leading
//! monomial is `x^λ` with coefficient 1. Each step strictly decreases the
//! leading partition, so the loop terminates with `S` rewritten as a
//! polynomial in `e_1..e_N`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{Coeff, Rat, TruncatedSeries};
use crate::partitions::{enumerate_partitions, Partition};
use crate::{Error, Result};

/// A symmetric polynomial in `arity` root variables, keyed by the
/// partition of each monomial orbit. Zero coefficients are absent.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiSymmetricPoly<C: Coeff> {
    arity: usize,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coeff> MultiSymmetricPoly<C> {
    /// Builds from explicit exponent vectors (length = arity), verifying
    /// that the input is invariant under permutation of the variables:
    /// every orbit must be complete and constant-coefficient.
    pub fn from_exponents(
        arity: usize,
        entries: impl IntoIterator<Item = (Vec<u32>, C)>,
    ) -> Result<Self> {
        let mut raw: BTreeMap<Vec<u32>, C> = BTreeMap::new();
        for (vector, coeff) in entries {
            if vector.len() != arity {
                return Err(Error::ArityMismatch {
                    arity,
                    got: vector.len(),
                });
            }
            match raw.get_mut(&vector) {
                Some(c) => *c = c.clone() + coeff,
                None => {
                    raw.insert(vector, coeff);
                }
            }
        }
        raw.retain(|_, c| !c.is_zero());

        let mut orbits: BTreeMap<Partition, (C, usize)> = BTreeMap::new();
        for (vector, coeff) in &raw {
            let nonzero: Vec<u32> = vector.iter().copied().filter(|&e| e > 0).collect();
            let key = Partition::new(nonzero).expect("zero entries filtered");
            match orbits.get_mut(&key) {
                Some((c, count)) => {
                    if c != coeff {
                        return Err(Error::NotSymmetric);
                    }
                    *count += 1;
                }
                None => {
                    orbits.insert(key, (coeff.clone(), 1));
                }
            }
        }
        let mut terms = BTreeMap::new();
        for (key, (coeff, count)) in orbits {
            if BigInt::from(count) != orbit_size(&key, arity) {
                return Err(Error::NotSymmetric);
            }
            terms.insert(key, coeff);
        }
        Ok(MultiSymmetricPoly { arity, terms })
    }

    /// Builds directly from monomial-symmetric coefficients. Every key
    /// must fit in `arity` variables.
    pub fn from_monomial_coeffs(arity: usize, terms: BTreeMap<Partition, C>) -> Result<Self> {
        for key in terms.keys() {
            if key.len() > arity {
                return Err(Error::ArityMismatch {
                    arity,
                    got: key.len(),
                });
            }
        }
        let mut terms = terms;
        terms.retain(|_, c| !c.is_zero());
        Ok(MultiSymmetricPoly { arity, terms })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Monomial-symmetric coefficients, keyed by orbit partition.
    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplication by the elementary symmetric polynomial `e_k`.
    pub fn mul_elementary(&self, k: usize) -> Self {
        MultiSymmetricPoly {
            arity: self.arity,
            terms: mul_elementary_terms(self.arity, &self.terms, k),
        }
    }

    /// Rewrites the polynomial in the elementary symmetric basis. The
    /// result maps each multiset of `e`-indices (as a partition) to its
    /// coefficient: the key `[2,1,1]` stands for `e_2·e_1·e_1`.
    pub fn elementary_reduce(&self) -> Result<BTreeMap<Partition, C>> {
        let max_degree = self
            .terms
            .keys()
            .map(|p| p.weight())
            .max()
            .unwrap_or(0);
        let budget: u64 = 4 + 4 * (0..=max_degree).map(crate::partitions::partition_count).sum::<u64>();

        let mut remainder = self.terms.clone();
        let mut out = BTreeMap::new();
        let mut steps = 0u64;
        while let Some((lead, coeff)) = remainder.pop_last() {
            steps += 1;
            if steps > budget {
                return Err(Error::NotSymmetric);
            }
            if coeff.is_zero() {
                continue;
            }
            if lead.is_empty() {
                out.insert(lead, coeff);
                continue;
            }
            let e_indices = lead.conjugate();
            let expansion = elementary_monomial_expansion(self.arity, &e_indices);
            debug_assert_eq!(expansion.get(&lead), Some(&super::rat(1)));
            for (mu, factor) in &expansion {
                if *mu == lead {
                    continue;
                }
                let delta = coeff.scale(factor);
                match remainder.get_mut(mu) {
                    Some(c) => {
                        *c = c.clone() - delta;
                        if c.is_zero() {
                            remainder.remove(mu);
                        }
                    }
                    None => {
                        remainder.insert(mu.clone(), -delta);
                    }
                }
            }
            out.insert(e_indices, coeff);
        }
        Ok(out)
    }
}

/// `N! / Π mult_v!` over the values of the padded vector, zeros included.
fn orbit_size(key: &Partition, arity: usize) -> BigInt {
    let mut size = factorial(arity);
    for (_, mult) in key.multiplicities() {
        size /= factorial(mult);
    }
    size /= factorial(arity - key.len());
    size
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::from(1), |acc, i| acc * i)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Core of multiplication by `e_k` in the monomial-symmetric basis: each
/// orbit `λ` spawns the orbits `μ = λ + (vertical strip of size k)`. The
/// integer coefficient of `μ` is
/// `(Π mult_μ(v)! / Π mult_λ(v)!) · Π_v C(mult_λ(v), t_v)`,
/// where `t_v` parts of value `v` (the value 0 included) were raised to
/// `v + 1`.
fn mul_elementary_terms<C: Coeff>(
    arity: usize,
    terms: &BTreeMap<Partition, C>,
    k: usize,
) -> BTreeMap<Partition, C> {
    let mut out: BTreeMap<Partition, C> = BTreeMap::new();
    if k > arity {
        return out;
    }
    if k == 0 {
        return terms.clone();
    }
    for (lambda, coeff) in terms {
        // Value classes of the padded vector, zero class last.
        let mut classes: Vec<(u32, usize)> = lambda.multiplicities();
        let zero_slots = arity - lambda.len();
        if zero_slots > 0 {
            classes.push((0, zero_slots));
        }

        let mut choice = vec![0usize; classes.len()];
        enumerate_strips(&classes, k, 0, &mut choice, &mut |t| {
            let mut parts: Vec<u32> = Vec::with_capacity(lambda.len() + t[classes.len() - 1]);
            let mut strip_ways = BigInt::from(1);
            for (i, &(v, mult)) in classes.iter().enumerate() {
                strip_ways *= binomial(mult, t[i]);
                for _ in 0..t[i] {
                    parts.push(v + 1);
                }
                if v > 0 {
                    for _ in 0..mult - t[i] {
                        parts.push(v);
                    }
                }
            }
            let mu = Partition::new(parts).expect("parts are positive");
            let mut ratio = Rat::from_integer(strip_ways);
            for (_, m) in mu.multiplicities() {
                ratio *= Rat::from_integer(factorial(m));
            }
            ratio *= Rat::from_integer(factorial(arity - mu.len()));
            for &(_, m) in &classes {
                ratio /= Rat::from_integer(factorial(m));
            }
            debug_assert!(ratio.is_integer());

            let delta = coeff.scale(&ratio);
            match out.get_mut(&mu) {
                Some(c) => *c = c.clone() + delta,
                None => {
                    out.insert(mu, delta);
                }
            }
        });
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Enumerates the ways to pick `remaining` strip cells across the value
/// classes, at most `mult` per class.
fn enumerate_strips(
    classes: &[(u32, usize)],
    remaining: usize,
    index: usize,
    choice: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if index == classes.len() {
        if remaining == 0 {
            visit(choice);
        }
        return;
    }
    let cap = classes[index].1.min(remaining);
    for t in 0..=cap {
        choice[index] = t;
        enumerate_strips(classes, remaining - t, index + 1, choice, visit);
    }
    choice[index] = 0;
}

/// Expansion of `Π_j e_{d_j}` (indices given as a partition) in the
/// monomial-symmetric basis; coefficients are integers, kept as rationals.
fn elementary_monomial_expansion(arity: usize, e_indices: &Partition) -> BTreeMap<Partition, Rat> {
    let mut acc = BTreeMap::new();
    acc.insert(Partition::empty(), super::rat(1));
    for &d in e_indices.parts() {
        acc = mul_elementary_terms(arity, &acc, d as usize);
    }
    acc
}

/// The degree-`n` characteristic polynomial of the multiplicative sequence
/// attached to a normalized series `q`: the degree-`n` homogeneous part of
/// `Π_{i=1}^{n} q(x_i)`, reduced to the elementary symmetric basis. Keys of
/// the result are Chern monomials (partitions of `n`, `e_j ↔ c_j`).
///
/// The coefficient of the orbit `m_λ` in the product over `n` roots is
/// `Π_j q_{λ_j}` (slots off the partition contribute the constant term 1),
/// which is how the product is materialized here.
pub fn multiplicative_sequence_term<C: Coeff>(
    q: &TruncatedSeries<C>,
    n: u32,
) -> Result<BTreeMap<Partition, C>> {
    if q.coeff(0) != C::one() {
        return Err(Error::NotNormalizedSeries);
    }
    assert!(n >= 1, "degree must be at least 1");
    if q.trunc() < n as usize {
        return Err(Error::TruncationTooSmall {
            trunc: q.trunc(),
            degree: n as usize,
        });
    }
    let mut terms = BTreeMap::new();
    for lambda in enumerate_partitions(n) {
        let coeff = lambda
            .parts()
            .iter()
            .fold(C::one(), |acc, &j| acc * q.coeff(j as usize));
        if !coeff.is_zero() {
            terms.insert(lambda, coeff);
        }
    }
    MultiSymmetricPoly::from_monomial_coeffs(n as usize, terms)?.elementary_reduce()
}
