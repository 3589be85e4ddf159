//! Character values of `C_k wr S_n` by the colored Murnaghan-Nakayama rule,
//! by the first-row recursion, and by closed forms for special shapes.

use std::fmt;
use std::str::FromStr;

use dashmap::DashMap;
use indexmap::IndexMap;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::oracle;
use crate::partitions::{enumerate_partitions, ColoredPartition, Partition};

/// Character `lam` evaluated at class `rho`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CharKey {
    pub lam: ColoredPartition,
    pub rho: ColoredPartition,
}

impl CharKey {
    pub fn new(lam: ColoredPartition, rho: ColoredPartition) -> Result<Self> {
        if lam.k() != rho.k() {
            return Err(Error::ConstituentCount { expected: lam.k(), found: rho.k() });
        }
        if lam.size() != rho.size() {
            return Err(Error::SizeMismatch(lam.size(), rho.size()));
        }
        Ok(Self { lam, rho })
    }

    /// Parses both colored partitions and checks them against `k`.
    pub fn parse(k: usize, lam: &str, rho: &str) -> Result<Self> {
        Self::new(ColoredPartition::parse_with_k(lam, k)?, ColoredPartition::parse_with_k(rho, k)?)
    }

    pub fn k(&self) -> usize {
        self.lam.k()
    }

    pub fn size(&self) -> usize {
        self.lam.size()
    }

    /// Stable text key, e.g. `3;[[1],[1],[1]];[[1,1,1],[],[]]`.
    pub fn cache_key(&self) -> String {
        format!("{};{};{}", self.k(), self.lam, self.rho)
    }

    pub fn from_cache_key(s: &str) -> Result<Self> {
        let mut it = s.splitn(3, ';');
        let (Some(k), Some(lam), Some(rho)) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse(format!("bad cache key {s:?}")));
        };
        let k = k.parse().map_err(|_| Error::Parse(format!("bad cache key {s:?}")))?;
        Self::parse(k, lam, rho)
    }
}

impl fmt::Display for CharKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi^{}_{}", self.lam, self.rho)
    }
}

/// One summand `coefficient * chi^lam_rho` of a recursion step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionTerm {
    pub coefficient: CyclotomicNumber,
    pub lam: ColoredPartition,
    pub rho: ColoredPartition,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Method {
    Mn,
    Row,
    Oracle,
    #[default]
    Auto,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Mn, Method::Row, Method::Oracle, Method::Auto];

    pub fn name(self) -> &'static str {
        match self {
            Method::Mn => "mn",
            Method::Row => "row",
            Method::Oracle => "oracle",
            Method::Auto => "auto",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

fn sign(height: usize) -> i64 {
    if height % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(-1)^height * w^e`
fn signed_omega(k: usize, height: usize, e: i64) -> CyclotomicNumber {
    let w = CyclotomicNumber::omega_power(k, e).expect("k validated by key");
    if sign(height) < 0 {
        -w
    } else {
        w
    }
}

/// Color holding the largest part of `p`, ties to the lowest color. The
/// default pivot: applied to `rho` for the MN rule and to `lam` for the row
/// rule.
pub fn largest_part_color(p: &ColoredPartition) -> Option<usize> {
    let mut best: Option<(usize, u32)> = None;
    for (color, c) in p.constituents().iter().enumerate() {
        if let Some(top) = c.largest() {
            if best.map_or(true, |(_, b)| top > b) {
                best = Some((color, top));
            }
        }
    }
    best.map(|(c, _)| c)
}

/// One step of the colored Murnaghan-Nakayama rule, removing part `index` of
/// `rho^(color)`.
pub fn mn_expand_step(key: &CharKey, color: usize, index: usize) -> Result<Vec<ExpansionTerm>> {
    let k = key.k();
    let part =
        key.rho.constituents().get(color).and_then(|c| c.parts().get(index)).copied().ok_or(Error::InvalidPartChoice { color, index })?;
    let rho = key.rho.remove_part(color, index)?;
    Ok(key
        .lam
        .colored_rim_hooks(part as usize)
        .into_iter()
        .map(|hook| ExpansionTerm {
            coefficient: signed_omega(k, hook.height, -((color * hook.color) as i64)),
            lam: hook.remaining,
            rho: rho.clone(),
        })
        .collect())
}

/// Colorings `t` of the parts of `tau`, as `(|t|, colored tau)` pairs.
fn colorings(k: usize, tau: &Partition) -> Vec<(usize, ColoredPartition)> {
    let mut out = vec![(0usize, vec![Vec::<u32>::new(); k])];
    for &part in tau.parts() {
        let mut next = Vec::with_capacity(out.len() * k);
        for (sum, cols) in &out {
            for c in 0..k {
                let mut cols = cols.clone();
                cols[c].push(part);
                next.push((sum + c, cols));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(sum, cols)| {
            let parts = cols.into_iter().map(Partition::from_unsorted).collect();
            (sum, ColoredPartition::new(parts).expect("k > 0"))
        })
        .collect()
}

/// An uncolored `tau`, its weight `(-1)^l / (k^l z_tau)` and its colorings.
type TauTerm = (Partition, BigRational, Vec<(usize, ColoredPartition)>);

/// One step of the first-row recursion, removing the largest part of
/// `lam^(color)`.
///
/// Sums over index subsets `mu` of `rho`, uncolored `tau` of `||mu|| - s` and
/// colorings `t` of the parts of `tau`. Terms with equal `(lam, rho)` are
/// merged and zero terms dropped; the order is first occurrence.
pub fn row_expand_step(key: &CharKey, color: usize) -> Result<Vec<ExpansionTerm>> {
    let k = key.k();
    let s = key
        .lam
        .constituents()
        .get(color)
        .ok_or(Error::InvalidPartChoice { color, index: 0 })?
        .largest()
        .ok_or(Error::EmptyConstituent(color))? as usize;
    let lam = key.lam.remove_first_part(color)?;
    let kk = BigInt::from(k);
    let mut merged: IndexMap<ColoredPartition, CyclotomicNumber> = IndexMap::new();
    let mut tau_cache: Vec<Option<Vec<TauTerm>>> = vec![None; key.size() + 1];
    for (mu, rest) in key.rho.colored_sub_partitions() {
        if mu.size() < s {
            continue;
        }
        let r = mu.size() - s;
        let taus = tau_cache[r].get_or_insert_with(|| {
            enumerate_partitions(r)
                .into_iter()
                .map(|tau| {
                    let l = tau.len();
                    let denom = BigInt::from(tau.z()) * num_traits::pow(kk.clone(), l);
                    let weight = BigRational::new(BigInt::from(sign(l)), denom);
                    let cols = colorings(k, &tau);
                    (tau, weight, cols)
                })
                .collect()
        });
        for (_, weight, cols) in taus.iter() {
            for (t, colored) in cols {
                let e = (*t as i64 - mu.eta() as i64) * color as i64;
                let coeff = CyclotomicNumber::omega_power(k, e)?.scale(weight);
                let rho = rest.union(colored)?;
                match merged.get_mut(&rho) {
                    Some(c) => *c += &coeff,
                    None => {
                        merged.insert(rho, coeff);
                    }
                }
            }
        }
    }
    Ok(merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(rho, c)| ExpansionTerm { coefficient: c.sparse_form(), lam: lam.clone(), rho })
        .collect())
}

/// `n! / prod h(lam^(i))`
pub fn degree(lam: &ColoredPartition) -> BigUint {
    let mut fact = BigUint::one();
    for i in 2..=lam.size() {
        fact *= BigUint::from(i);
    }
    let hooks: BigUint = lam.constituents().iter().map(Partition::hook_product).product();
    let (q, r) = num_integer::Integer::div_rem(&fact, &hooks);
    assert!(r.is_zero(), "hook product does not divide n!");
    q
}

/// Closed forms for four families of keys, or `None` when none applies.
///
/// * class one `n`-cycle at color `i`: `(-1)^r w^{-ij}` on colored hooks at
///   color `j` with leg `r`, zero on everything else;
/// * character `(n)` at color `i`: `w^{-eta(rho) i}`;
/// * class `(1^n)` at color `j`: `w^{-deg(lam) j}` times the degree;
/// * character `(1^n)` at color `j`: `w^{-eta(rho) j} (-1)^{l(rho)+n}`.
pub fn special_value(key: &CharKey) -> Option<CyclotomicNumber> {
    let (k, n) = (key.k(), key.size());
    if n == 0 {
        return None;
    }
    let omega = |e: usize| CyclotomicNumber::omega_power(k, -(e as i64)).expect("k > 0");
    if let Some((i, p)) = key.rho.single_support() {
        if p.len() == 1 {
            return Some(match key.lam.single_support() {
                Some((j, q)) => match q.hook_leg() {
                    Some(r) => signed_omega(k, r, -((i * j) as i64)),
                    None => CyclotomicNumber::zero(k),
                },
                None => CyclotomicNumber::zero(k),
            });
        }
    }
    if let Some((i, p)) = key.lam.single_support() {
        if p.len() == 1 {
            return Some(omega(key.rho.eta() * i));
        }
    }
    if let Some((j, p)) = key.rho.single_support() {
        if p.largest() == Some(1) {
            let d = BigInt::from(degree(&key.lam));
            return Some(omega(key.lam.deg() * j).scale(&BigRational::from_integer(d)));
        }
    }
    if let Some((j, p)) = key.lam.single_support() {
        if p.largest() == Some(1) {
            return Some(signed_omega(k, key.rho.length() + n, -((key.rho.eta() * j) as i64)));
        }
    }
    None
}

/// Memoizing evaluator. Safe to share between threads.
///
/// The MN and row recursions keep separate memo tables so they stay
/// independent of each other; the value cache behind [`CharacterEngine::chi`]
/// with [`Method::Auto`] is the one that can be exported and imported.
#[derive(Default)]
pub struct CharacterEngine {
    mn_memo: DashMap<CharKey, CyclotomicNumber>,
    row_memo: DashMap<CharKey, CyclotomicNumber>,
    values: DashMap<CharKey, CyclotomicNumber>,
}

impl CharacterEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// The MN sum as accumulated, without reduction. Its coefficients are the
    /// signed path counts per power of `w`.
    pub fn mn_value_formal(&self, key: &CharKey) -> CyclotomicNumber {
        if let Some(v) = self.mn_memo.get(key) {
            return v.clone();
        }
        let k = key.k();
        let value = match largest_part_color(&key.rho) {
            None => CyclotomicNumber::one(k),
            Some(color) => self.mn_sum(key, color, 0),
        };
        self.mn_memo.insert(key.clone(), value.clone());
        value
    }

    fn mn_sum(&self, key: &CharKey, color: usize, index: usize) -> CyclotomicNumber {
        let mut acc = CyclotomicNumber::zero(key.k());
        for term in mn_expand_step(key, color, index).expect("pivot exists") {
            let child = CharKey { lam: term.lam, rho: term.rho };
            acc += &(&term.coefficient * &self.mn_value_formal(&child));
        }
        acc
    }

    pub fn mn_value(&self, key: &CharKey) -> CyclotomicNumber {
        self.mn_value_formal(key).standard_form().expect("MN values are integral")
    }

    /// Expands once on part `index` of `rho^(color)`, then recurses with the
    /// default pivot.
    pub fn mn_value_via(&self, key: &CharKey, color: usize, index: usize) -> Result<CyclotomicNumber> {
        key.rho.remove_part(color, index)?;
        self.mn_sum(key, color, index).standard_form()
    }

    pub fn row_value(&self, key: &CharKey) -> Result<CyclotomicNumber> {
        if let Some(v) = self.row_memo.get(key) {
            return Ok(v.clone());
        }
        let k = key.k();
        let value = match largest_part_color(&key.lam) {
            None => CyclotomicNumber::one(k),
            Some(color) => {
                let mut acc = CyclotomicNumber::zero(k);
                for term in row_expand_step(key, color)? {
                    let child = CharKey { lam: term.lam, rho: term.rho };
                    acc += &(&term.coefficient * &self.row_value(&child)?);
                }
                acc.standard_form()?
            }
        };
        self.row_memo.insert(key.clone(), value.clone());
        Ok(value)
    }

    /// Evaluates with the given method; the result is in standard form.
    pub fn chi(&self, key: &CharKey, method: Method) -> Result<CyclotomicNumber> {
        match method {
            Method::Mn => Ok(self.mn_value(key)),
            Method::Row => self.row_value(key),
            Method::Oracle => oracle::specht_value(key),
            Method::Auto => {
                if let Some(v) = self.values.get(key) {
                    return Ok(v.clone());
                }
                let value = match special_value(key) {
                    Some(v) => v.standard_form()?,
                    None => self.mn_value(key),
                };
                self.values.insert(key.clone(), value.clone());
                Ok(value)
            }
        }
    }

    /// Snapshot of the value cache.
    pub fn cached_values(&self) -> Vec<(CharKey, CyclotomicNumber)> {
        self.values.iter().map(|e| (e.key().clone(), e.value().clone())).collect()
    }

    pub fn insert_cached(&self, key: CharKey, value: CyclotomicNumber) {
        self.values.insert(key, value);
    }

    pub fn cache_len(&self) -> usize {
        self.values.len()
    }
}
