//! k-cores, k-quotients and the sign of a k-hook removal path, on the abacus.
//!
//! A partition with `m` beads has beta-set `lam_i + m - i` (`i = 1..m`).
//! Bead `b` sits on runner `b mod k` at level `b div k`. Removing a k-rim hook
//! slides one bead up one level on its runner, so the core is what remains
//! once every runner is pushed flush, and the quotient records how far each
//! runner's beads sit above flush.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::characters::{CharKey, CharacterEngine};
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::oracle::classical_mn;
use crate::partitions::{ColoredPartition, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreQuotient {
    pub k: usize,
    pub core: Partition,
    pub quotient: ColoredPartition,
    /// `+1` or `-1`
    pub sign: i8,
}

/// Follows one canonical removal path: at each step the k-rim hook whose
/// removal leaves the lexicographically largest partition. Returns the core and
/// the total height.
pub fn removal_path(lam: &Partition, k: usize) -> (Partition, usize) {
    assert!(k > 0, "k must be positive");
    let mut cur = lam.clone();
    let mut height = 0;
    while let Some(h) = cur.rim_hooks(k).into_iter().max_by(|a, b| a.remaining.cmp(&b.remaining)) {
        height += h.height;
        cur = h.remaining;
    }
    (cur, height)
}

/// Every `(core, height parity)` reachable over all removal paths.
pub fn removal_outcomes(lam: &Partition, k: usize) -> BTreeSet<(Partition, usize)> {
    fn rec(lam: &Partition, k: usize, memo: &mut HashMap<Partition, BTreeSet<(Partition, usize)>>) -> BTreeSet<(Partition, usize)> {
        if let Some(v) = memo.get(lam) {
            return v.clone();
        }
        let hooks = lam.rim_hooks(k);
        let out = if hooks.is_empty() {
            BTreeSet::from([(lam.clone(), 0)])
        } else {
            hooks.iter().flat_map(|h| rec(&h.remaining, k, memo).into_iter().map(move |(c, par)| (c, (par + h.height) % 2))).collect()
        };
        memo.insert(lam.clone(), out.clone());
        out
    }
    rec(lam, k, &mut HashMap::new())
}

pub fn k_core(lam: &Partition, k: usize) -> Partition {
    removal_path(lam, k).0
}

/// `sigma_lam`, the sign `(-1)^height` of any removal path to the core.
pub fn sigma(lam: &Partition, k: usize) -> i8 {
    if removal_path(lam, k).1 % 2 == 0 {
        1
    } else {
        -1
    }
}

fn least_beads(len: usize, k: usize) -> usize {
    len.div_ceil(k) * k
}

/// k-quotient read from an abacus with `beads` beads; `beads` must be a
/// multiple of `k` and at least the length of `lam`.
pub fn k_quotient_with_beads(lam: &Partition, k: usize, beads: usize) -> Result<ColoredPartition> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    if beads % k != 0 || beads < lam.len() {
        return Err(Error::InvalidBeadCount { beads, k, len: lam.len() });
    }
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); k];
    for i in 0..beads {
        let part = lam.parts().get(i).copied().unwrap_or(0) as usize;
        let b = part + beads - 1 - i;
        levels[b % k].push(b / k);
    }
    let parts = levels
        .into_iter()
        .map(|xs| {
            // xs is strictly decreasing; subtract the flush positions
            let count = xs.len();
            Partition::from_unsorted(xs.iter().enumerate().map(|(s, &x)| (x + s + 1 - count) as u32).collect())
        })
        .collect();
    ColoredPartition::new(parts)
}

pub fn k_quotient(lam: &Partition, k: usize) -> ColoredPartition {
    k_quotient_with_beads(lam, k, least_beads(lam.len(), k)).expect("valid bead count")
}

pub fn core_quotient(lam: &Partition, k: usize) -> CoreQuotient {
    let (core, height) = removal_path(lam, k);
    CoreQuotient { k, core, quotient: k_quotient(lam, k), sign: if height % 2 == 0 { 1 } else { -1 } }
}

fn partition_from_beads(mut beads: Vec<usize>) -> Partition {
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let m = beads.len();
    Partition::from_unsorted(beads.iter().enumerate().map(|(i, &b)| (b + 1 + i - m) as u32).collect())
}

/// The unique partition with the given k-core and k-quotient.
pub fn from_core_quotient(core: &Partition, quotient: &ColoredPartition, k: usize) -> Result<Partition> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    if quotient.k() != k {
        return Err(Error::ConstituentCount { expected: k, found: quotient.k() });
    }
    if !core.rim_hooks(k).is_empty() {
        return Err(Error::NotACore(core.to_string(), k));
    }
    let mut beads = least_beads(core.len(), k);
    loop {
        let mut per_runner: Vec<usize> = vec![0; k];
        for i in 0..beads {
            let part = core.parts().get(i).copied().unwrap_or(0) as usize;
            per_runner[(part + beads - 1 - i) % k] += 1;
        }
        let fits = quotient.constituents().iter().zip(&per_runner).all(|(q, &c)| q.len() <= c);
        if !fits {
            beads += k;
            continue;
        }
        let mut out = Vec::with_capacity(beads);
        for (r, (q, &count)) in quotient.constituents().iter().zip(&per_runner).enumerate() {
            for s in 0..count {
                let extra = q.parts().get(s).copied().unwrap_or(0) as usize;
                // flush runner: levels count-1, ..., 0
                let level = extra + count - 1 - s;
                out.push(r + k * level);
            }
        }
        return Ok(partition_from_beads(out));
    }
}

/// Both sides of the congruence between a character of `C_k wr S_n` and one
/// of `S_{kn}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularCheck {
    pub value: CyclotomicNumber,
    /// Partition of `kn` with empty core and quotient `lam`.
    pub lambda: Partition,
    /// `rho` with colors forgotten and every part multiplied by `k`.
    pub rho: Partition,
    pub sigma: i8,
    #[serde(serialize_with = "as_decimal")]
    pub classical: BigInt,
    pub lhs: u64,
    pub rhs: u64,
    pub ok: bool,
}

fn as_decimal<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Checks `d(chi^lam_rho) = sigma_lambda * chi^lambda_rho mod k`.
///
/// The left side is the coefficient sum, mod `k`, of the MN sum over removal
/// paths. For prime `k` this is the digit sum of the standard form; for
/// composite `k` the standard form reduces modulo `Phi_k` and can change that
/// sum, so the path sum is used directly.
pub fn verify_modular_relation(engine: &CharacterEngine, lam: &ColoredPartition, rho: &ColoredPartition) -> Result<ModularCheck> {
    let key = CharKey::new(lam.clone(), rho.clone())?;
    let k = key.k();
    let formal = engine.mn_value_formal(&key);
    let kk = BigInt::from(k);
    let lhs = formal.coefficient_sum().to_integer().mod_floor(&kk);
    let lambda = from_core_quotient(&Partition::empty(), lam, k)?;
    let flat = Partition::from_unsorted(rho.flatten().parts().iter().map(|&p| p * k as u32).collect());
    let sgn = sigma(&lambda, k);
    let classical = classical_mn(&lambda, &flat)?;
    let rhs = (BigInt::from(sgn) * &classical).mod_floor(&kk);
    let to_u64 = |x: BigInt| -> u64 { x.try_into().expect("residue fits") };
    let (lhs, rhs) = (to_u64(lhs), to_u64(rhs));
    Ok(ModularCheck { value: formal.standard_form()?, lambda, rho: flat, sigma: sgn, classical, lhs, rhs, ok: lhs == rhs })
}
