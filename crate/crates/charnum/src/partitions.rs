//! Integer partitions and the canonical basis order.
//!
//! A partition of `n` indexes both a Chern monomial (the basis of `C_n`)
//! and a product of projective spaces of total dimension `n`. The
//! canonical order used everywhere in this crate is reverse-lexicographic
//! on the weakly decreasing part sequences, largest first:
//! `[4] > [3,1] > [2,2] > [2,1,1] > [1,1,1,1]`.

use std::fmt;
use std::str::FromStr;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A partition: weakly decreasing positive parts. The empty partition is
/// legal and has weight 0.
///
/// The derived `Ord` is lexicographic on the part sequence, so canonical
/// order is *descending* `Ord` order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts given in any order; zero parts are
    /// rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        let mut row = 0usize;
        loop {
            let count = self.parts.iter().filter(|&&p| p as usize > row).count();
            if count == 0 {
                break;
            }
            parts.push(count as u32);
            row += 1;
        }
        Partition { parts }
    }

    /// Multiset union of parts (the exponent bookkeeping of a Chern
    /// monomial product).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Distinct part values with multiplicities, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[3,1]`, `[]`, or bare `3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(s.trim());
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::ParsePartition(s.to_string()))
            })
            .collect::<Result<Vec<u32>>>()?;
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::ParsePartition(s.to_string()));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PartsVisitor;

        impl<'de> Visitor<'de> for PartsVisitor {
            type Value = Partition;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of positive integers in decreasing order")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Partition, A::Error> {
                let mut parts = Vec::new();
                while let Some(p) = seq.next_element::<u32>()? {
                    parts.push(p);
                }
                Partition::new(parts).map_err(serde::de::Error::custom)
            }
        }

        deserializer.deserialize_seq(PartsVisitor)
    }
}

/// All partitions of `n` in canonical order. `n = 0` yields the single
/// empty partition.
///
/// Iterative largest-first generation: decrement the rightmost part
/// exceeding 1 and redistribute the remainder greedily.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition::empty()];
    }
    let mut out = Vec::new();
    let mut cur = vec![n];
    loop {
        out.push(Partition { parts: cur.clone() });
        let Some(i) = cur.iter().rposition(|&p| p > 1) else {
            break;
        };
        let v = cur[i] - 1;
        // Everything after position i is a run of 1s; fold it into the
        // remainder and refill with parts of size at most v.
        let mut rem = (cur.len() - i - 1) as u32 + 1;
        cur.truncate(i);
        cur.push(v);
        while rem > 0 {
            let part = rem.min(v);
            cur.push(part);
            rem -= part;
        }
    }
    out
}

/// Position of `p` in the canonical list of partitions of `n`.
pub fn partition_index(p: &Partition, n: u32) -> Result<usize> {
    if p.weight() != n {
        return Err(Error::WeightMismatch {
            expected: n,
            got: p.weight(),
        });
    }
    let all = enumerate_partitions(n);
    // The list is strictly descending in `Ord`.
    all.binary_search_by(|probe| p.cmp(probe))
        .map_err(|_| Error::WeightMismatch {
            expected: n,
            got: p.weight(),
        })
}

/// The partition count π(n), by the bounded-largest-part recurrence.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute-force enumeration by recursive descent over the largest part.
    fn brute_force(n: u32, max_part: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=max_part.min(n)).rev() {
            for mut rest in brute_force(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    /// Euler's pentagonal-number recurrence for π(n).
    fn pentagonal_count(n: u32) -> u64 {
        let n = n as usize;
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut acc = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * table[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    acc += sign * table[i - g2];
                }
                k += 1;
            }
            table[i] = acc;
        }
        table[n] as u64
    }

    #[test]
    fn zero_has_one_empty_partition() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(partition_count(0), 1);
    }

    #[test]
    fn canonical_order_of_four() {
        let got = enumerate_partitions(4);
        let want = vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])];
        assert_eq!(got, want);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 0..=10 {
            let got: Vec<Vec<u32>> = enumerate_partitions(n)
                .iter()
                .map(|q| q.parts().to_vec())
                .collect();
            assert_eq!(got, brute_force(n, n.max(1)), "n = {n}");
        }
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn counts_match_enumeration_and_pentagonal_recurrence() {
        for n in 0..=20 {
            let by_enum = enumerate_partitions(n).len() as u64;
            assert_eq!(partition_count(n), by_enum, "n = {n}");
            assert_eq!(partition_count(n), pentagonal_count(n), "n = {n}");
        }
        assert_eq!(partition_count(6), 11);
        assert_eq!(partition_count(14), 135);
    }

    #[test]
    fn index_is_inverse_of_enumeration() {
        for n in 0..=12 {
            for (i, q) in enumerate_partitions(n).iter().enumerate() {
                assert_eq!(partition_index(q, n).unwrap(), i);
            }
        }
        assert_eq!(partition_index(&p(&[4]), 4).unwrap(), 0);
        assert_eq!(partition_index(&p(&[2, 1, 1]), 4).unwrap(), 3);
    }

    #[test]
    fn index_rejects_weight_mismatch() {
        let err = partition_index(&p(&[1, 1, 1]), 4).unwrap_err();
        assert!(matches!(err, Error::WeightMismatch { expected: 4, got: 3 }));
    }

    #[test]
    fn enumeration_is_deterministic() {
        for n in [5, 9, 13] {
            assert_eq!(enumerate_partitions(n), enumerate_partitions(n));
        }
    }

    #[test]
    fn enumeration_handles_large_n_iteratively() {
        assert_eq!(enumerate_partitions(30).len() as u64, partition_count(30));
    }

    #[test]
    fn conjugate_and_union() {
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[2]).conjugate(), p(&[1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).union(&p(&[2, 1])), p(&[3, 2, 1, 1]));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for n in 0..=8 {
            for q in enumerate_partitions(n) {
                let shown = q.to_string();
                assert_eq!(shown.parse::<Partition>().unwrap(), q);
            }
        }
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert!("[3,0]".parse::<Partition>().is_err());
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(matches!(Partition::new(vec![2, 0]), Err(Error::ZeroPart)));
    }
}
