//! Partitions, k-colored partitions and rim hooks.
//!
//! Enumeration order is reverse-lexicographic throughout, so `(3)` comes
//! before `(2,1)` before `(1,1,1)`. Colored partitions are ordered first by
//! the composition of constituent sizes (reverse-lex), then constituent by
//! constituent with the first color varying slowest.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

/// One border-strip removal from a plain partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RimHook {
    pub remaining: Partition,
    /// Rows occupied minus one.
    pub height: usize,
    pub hook_size: usize,
}

/// One border-strip removal from a single constituent of a colored partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredRimHook {
    pub remaining: ColoredPartition,
    pub color: usize,
    pub height: usize,
    pub hook_size: usize,
}

/// A choice of parts of `rho` by index subset, together with what is left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubPartition {
    pub chosen: Partition,
    pub complement: Partition,
    pub chosen_len: usize,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts descending and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(1^n)`
    pub fn column(n: usize) -> Self {
        Self(vec![1; n])
    }

    /// `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n as u32])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.largest().unwrap_or(0);
        Self((1..=width).map(|c| self.0.iter().take_while(|&&p| p >= c).count() as u32).collect())
    }

    /// Leg length `b` when this is a hook `(a, 1^b)`.
    pub fn hook_leg(&self) -> Option<usize> {
        match self.0.split_first() {
            Some((_, rest)) if rest.iter().all(|&p| p == 1) => Some(rest.len()),
            _ => None,
        }
    }

    /// `(part, multiplicity)` pairs in decreasing order of part.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z = prod_i i^{m_i} m_i!`, the centralizer order in `S_n`.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, mult) in self.multiplicities() {
            for j in 1..=mult {
                z *= BigUint::from(part) * BigUint::from(j);
            }
        }
        z
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> BigUint {
        let conj = self.conjugate();
        let mut h = BigUint::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let hook = row as usize - j + conj.0[j] as usize - i - 1;
                h *= BigUint::from(hook);
            }
        }
        h
    }

    /// All partitions `mu` such that `self / mu` is a border strip of `m` cells.
    ///
    /// Scans each possible top row and walks down the boundary. Results are
    /// ordered by top row, then by bottom row.
    pub fn rim_hooks(&self, m: usize) -> Vec<RimHook> {
        let lam = &self.0;
        let l = lam.len();
        let mut out = Vec::new();
        if m == 0 {
            return out;
        }
        for top in 0..l {
            let mut used = 0usize;
            for bottom in top..l {
                let here = lam[bottom] as usize;
                let below = lam.get(bottom + 1).copied().unwrap_or(0) as usize;
                let last_row = m - used;
                if last_row >= 1 && last_row <= here - below {
                    let mut rest = lam.clone();
                    for t in top..bottom {
                        rest[t] = lam[t + 1] - 1;
                    }
                    rest[bottom] = (here - last_row) as u32;
                    out.push(RimHook { remaining: Partition::from_unsorted(rest), height: bottom - top, hook_size: m });
                }
                if below == 0 {
                    break;
                }
                used += here - below + 1;
                if used >= m {
                    break;
                }
            }
        }
        out
    }

    /// Removes the part at `index`.
    pub fn without_index(&self, index: usize) -> Self {
        let mut parts = self.0.clone();
        parts.remove(index);
        Self(parts)
    }

    /// Merges the parts of both partitions.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_unsorted(parts)
    }

    /// One entry per index subset of the parts (`2^len` entries, repeats kept).
    pub fn sub_partitions_indexed(&self) -> Vec<SubPartition> {
        let l = self.len();
        assert!(l < 63, "too many parts to enumerate subsets");
        (0u64..1 << l)
            .map(|mask| {
                let (mut chosen, mut complement) = (Vec::new(), Vec::new());
                for (i, &p) in self.0.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        chosen.push(p);
                    } else {
                        complement.push(p);
                    }
                }
                SubPartition { chosen_len: chosen.len(), chosen: Self(chosen), complement: Self(complement) }
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
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

    /// Parses `[5,3,2]`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<u32> = serde_json::from_str(s.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            prefix.push(p as u32);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A k-tuple of partitions. Statistics are computed once at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPartition {
    parts: Vec<Partition>,
    size: usize,
    length: usize,
    eta: usize,
    deg: usize,
}

impl ColoredPartition {
    pub fn new(parts: Vec<Partition>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::ZeroOrder);
        }
        Ok(Self::build(parts))
    }

    fn build(parts: Vec<Partition>) -> Self {
        let size = parts.iter().map(Partition::size).sum();
        let length = parts.iter().map(Partition::len).sum();
        let eta = parts.iter().enumerate().map(|(i, p)| i * p.len()).sum();
        let deg = parts.iter().enumerate().map(|(i, p)| i * p.size()).sum();
        Self { parts, size, length, eta, deg }
    }

    pub fn from_vecs(parts: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(parts.into_iter().map(Partition::new).collect::<Result<_>>()?)
    }

    /// Parses `[[4,1],[3,1,1],[2]]` and checks there are exactly `k` constituents.
    pub fn parse_with_k(s: &str, k: usize) -> Result<Self> {
        let cp: Self = s.parse()?;
        if cp.k() != k {
            return Err(Error::ConstituentCount { expected: k, found: cp.k() });
        }
        Ok(cp)
    }

    pub fn empty(k: usize) -> Self {
        assert!(k > 0, "k must be positive");
        Self::build(vec![Partition::empty(); k])
    }

    /// The colored partition supported only at `color`.
    pub fn single(k: usize, color: usize, p: Partition) -> Self {
        let mut parts = vec![Partition::empty(); k];
        parts[color] = p;
        Self::build(parts)
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn constituents(&self) -> &[Partition] {
        &self.parts
    }

    pub fn constituent(&self, color: usize) -> &Partition {
        &self.parts[color]
    }

    /// Total size `||lambda||`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Total number of parts.
    pub fn length(&self) -> usize {
        self.length
    }

    /// `sum_i i * l(lambda^(i))`
    pub fn eta(&self) -> usize {
        self.eta
    }

    /// `sum_i i * |lambda^(i)|`
    pub fn deg(&self) -> usize {
        self.deg
    }

    /// Colors with a nonempty constituent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().enumerate().filter(|(_, p)| !p.is_empty()).map(|(i, _)| i)
    }

    /// `Some((color, p))` when exactly one constituent is nonempty.
    pub fn single_support(&self) -> Option<(usize, &Partition)> {
        let mut it = self.support();
        match (it.next(), it.next()) {
            (Some(c), None) => Some((c, &self.parts[c])),
            _ => None,
        }
    }

    /// All parts, colors forgotten, sorted descending.
    pub fn flatten(&self) -> Partition {
        Partition::from_unsorted(self.parts.iter().flat_map(|p| p.0.iter().copied()).collect())
    }

    /// Color-wise union.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.k() != other.k() {
            return Err(Error::ConstituentCount { expected: self.k(), found: other.k() });
        }
        Ok(Self::build(self.parts.iter().zip(&other.parts).map(|(a, b)| a.union(b)).collect()))
    }

    pub fn with_constituent(&self, color: usize, p: Partition) -> Self {
        let mut parts = self.parts.clone();
        parts[color] = p;
        Self::build(parts)
    }

    /// Deletes the part at `index` of constituent `color`.
    pub fn remove_part(&self, color: usize, index: usize) -> Result<Self> {
        match self.parts.get(color) {
            Some(p) if index < p.len() => Ok(self.with_constituent(color, p.without_index(index))),
            _ => Err(Error::InvalidPartChoice { color, index }),
        }
    }

    /// Deletes the largest part of constituent `color`.
    pub fn remove_first_part(&self, color: usize) -> Result<Self> {
        match self.parts.get(color) {
            Some(p) if !p.is_empty() => Ok(self.with_constituent(color, p.without_index(0))),
            Some(_) => Err(Error::EmptyConstituent(color)),
            None => Err(Error::InvalidPartChoice { color, index: 0 }),
        }
    }

    /// Union over colors of the `m`-rim hooks of each constituent.
    pub fn colored_rim_hooks(&self, m: usize) -> Vec<ColoredRimHook> {
        let mut out = Vec::new();
        for (color, p) in self.parts.iter().enumerate() {
            for hook in p.rim_hooks(m) {
                out.push(ColoredRimHook {
                    remaining: self.with_constituent(color, hook.remaining),
                    color,
                    height: hook.height,
                    hook_size: m,
                });
            }
        }
        out
    }

    /// Cartesian product of per-color indexed sub-partitions, as
    /// `(chosen, complement)` pairs; `2^length` entries.
    pub fn colored_sub_partitions(&self) -> Vec<(ColoredPartition, ColoredPartition)> {
        let per_color: Vec<Vec<SubPartition>> = self.parts.iter().map(Partition::sub_partitions_indexed).collect();
        let mut out = vec![(Vec::new(), Vec::new())];
        for subs in &per_color {
            let mut next = Vec::with_capacity(out.len() * subs.len());
            for (chosen, rest) in &out {
                for sub in subs {
                    let mut c: Vec<Partition> = chosen.clone();
                    let mut r: Vec<Partition> = rest.clone();
                    c.push(sub.chosen.clone());
                    r.push(sub.complement.clone());
                    next.push((c, r));
                }
            }
            out = next;
        }
        out.into_iter().map(|(c, r)| (Self::build(c), Self::build(r))).collect()
    }

    /// Relabels color `i` as `-i mod k`; the type of the inverse class.
    pub fn negate_colors(&self) -> Self {
        let k = self.k();
        Self::build((0..k).map(|i| self.parts[(k - i) % k].clone()).collect())
    }
}

impl fmt::Display for ColoredPartition {
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

impl FromStr for ColoredPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<Vec<u32>> = serde_json::from_str(s.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        Self::from_vecs(parts)
    }
}

impl Serialize for ColoredPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// Compositions of `n` into `k` nonnegative parts, reverse-lexicographic.
pub fn compositions(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() + 1 == k {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=remaining).rev() {
            prefix.push(first);
            rec(k, remaining - first, prefix, out);
            prefix.pop();
        }
    }
    assert!(k > 0, "k must be positive");
    let mut out = Vec::new();
    rec(k, n, &mut Vec::with_capacity(k), &mut out);
    out
}

/// All k-colored partitions of total size `n`, in canonical order.
pub fn enumerate_colored(k: usize, n: usize) -> Vec<ColoredPartition> {
    let by_size: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    for sizes in compositions(k, n) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::with_capacity(k)];
        for &size in &sizes {
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    by_size[size].iter().map(move |p| {
                        let mut next = prefix.clone();
                        next.push(p.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(ColoredPartition::build));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cp(s: &str) -> ColoredPartition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("[3,1,1]".parse::<Partition>().is_ok());
        assert!("[3,-1]".parse::<Partition>().is_err());
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(5).len(), 7);
    }

    #[test]
    fn enumerate_colored_counts() {
        assert_eq!(enumerate_colored(3, 1).len(), 3);
        assert_eq!(enumerate_colored(3, 2).len(), 9);
        assert_eq!(enumerate_colored(3, 3).len(), 22);
        assert_eq!(enumerate_colored(3, 0), vec![ColoredPartition::empty(3)]);
    }

    #[test]
    fn colored_order_is_composition_first() {
        let got: Vec<String> = enumerate_colored(3, 2).iter().map(ToString::to_string).collect();
        let want = [
            "[[2],[],[]]",
            "[[1,1],[],[]]",
            "[[1],[1],[]]",
            "[[1],[],[1]]",
            "[[],[2],[]]",
            "[[],[1,1],[]]",
            "[[],[1],[1]]",
            "[[],[],[2]]",
            "[[],[],[1,1]]",
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn colored_order_within_three() {
        let got: Vec<String> = enumerate_colored(3, 3).iter().skip(3).take(4).map(ToString::to_string).collect();
        assert_eq!(got, ["[[2],[1],[]]", "[[1,1],[1],[]]", "[[2],[],[1]]", "[[1,1],[],[1]]"]);
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[2, 2]).z(), BigUint::from(8u32));
        assert_eq!(Partition::empty().z(), BigUint::from(1u32));
        assert_eq!(p(&[3, 1, 1]).z(), BigUint::from(6u32));
    }

    #[test]
    fn hook_products() {
        assert_eq!(p(&[2, 1]).hook_product(), BigUint::from(3u32));
        assert_eq!(p(&[4]).hook_product(), BigUint::from(24u32));
        assert_eq!(p(&[1]).hook_product(), BigUint::from(1u32));
        assert_eq!(p(&[3, 2]).hook_product(), BigUint::from(24u32));
    }

    fn hooks(lam: &[u32], m: usize) -> Vec<(Partition, usize)> {
        p(lam).rim_hooks(m).into_iter().map(|h| (h.remaining, h.height)).collect()
    }

    #[test]
    fn rim_hook_examples() {
        assert_eq!(hooks(&[5, 3, 2], 4), vec![(p(&[2, 2, 2]), 1), (p(&[5, 1]), 1)]);
        assert_eq!(hooks(&[6], 6), vec![(Partition::empty(), 0)]);
        assert!(hooks(&[5, 3, 2, 2], 8).contains(&(p(&[2, 1, 1]), 3)));
        assert_eq!(hooks(&[2, 2], 3), vec![(p(&[1]), 1)]);
        assert!(hooks(&[2, 2], 4).is_empty());
        assert!(hooks(&[3], 4).is_empty());
    }

    #[test]
    fn colored_rim_hook_examples() {
        let lam = cp("[[2,1],[5,3,2,2],[4]]");
        let found = lam.colored_rim_hooks(8);
        assert!(found.iter().any(|h| h.color == 1 && h.height == 3 && h.remaining == cp("[[2,1],[2,1,1],[4]]")));
        assert!(cp("[[2],[1],[3]]").colored_rim_hooks(4).is_empty());
        let ones = cp("[[1],[1],[1]]").colored_rim_hooks(1);
        assert_eq!(ones.len(), 3);
        assert!(ones.iter().all(|h| h.height == 0));
    }

    #[test]
    fn sub_partition_examples() {
        let subs = p(&[4, 2, 2, 1]).sub_partitions_indexed();
        assert_eq!(subs.len(), 16);
        assert!(subs.iter().any(|s| s.chosen == p(&[2, 1]) && s.complement == p(&[4, 2])));
        let empty = Partition::empty().sub_partitions_indexed();
        assert_eq!(empty, vec![SubPartition { chosen: Partition::empty(), complement: Partition::empty(), chosen_len: 0 }]);
        let twos = p(&[2, 2]).sub_partitions_indexed();
        assert_eq!(twos.len(), 4);
        assert_eq!(twos.iter().filter(|s| s.chosen == p(&[2])).count(), 2);
    }

    #[test]
    fn colored_sub_partition_examples() {
        let rho = cp("[[5,3,1],[4,2,2,1],[4]]");
        let subs = rho.colored_sub_partitions();
        assert_eq!(subs.len(), 1 << 8);
        assert!(subs.contains(&(cp("[[3],[2,1],[4]]"), cp("[[5,1],[4,2],[]]"))));
        assert_eq!(ColoredPartition::empty(3).colored_sub_partitions().len(), 1);
        assert_eq!(cp("[[1],[1],[1]]").colored_sub_partitions().len(), 8);
    }

    #[test]
    fn flatten_union_remove() {
        assert_eq!(cp("[[5,1],[],[4,2]]").flatten(), p(&[5, 4, 2, 1]));
        let mu = cp("[[3],[2,1],[4]]");
        assert_eq!(mu.union(&ColoredPartition::empty(3)).unwrap(), mu);
        assert_eq!(cp("[[1],[3],[]]").remove_first_part(1).unwrap(), cp("[[1],[],[]]"));
        assert_eq!(cp("[[1],[],[]]").remove_first_part(2).unwrap_err(), Error::EmptyConstituent(2));
    }

    #[test]
    fn statistics() {
        let lam = cp("[[4,1],[3,1,1],[2]]");
        assert_eq!((lam.size(), lam.length(), lam.eta(), lam.deg()), (12, 6, 5, 9));
        assert_eq!(lam.k(), 3);
        assert_eq!(lam.to_string(), "[[4,1],[3,1,1],[2]]");
        assert!(ColoredPartition::parse_with_k("[[1],[1]]", 3).is_err());
    }
}
