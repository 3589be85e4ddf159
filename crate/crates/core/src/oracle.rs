//! Brute-force reference values.
//!
//! [`specht_value`] pairs a wreath Schur function with a colored power sum by
//! expanding each colored power sum into plain ones and multiplying classical
//! `S_n` characters. [`classical_mn`] is a bead-moving Murnaghan-Nakayama rule
//! on beta-sets. Nothing here calls into the `characters` module or into
//! [`Partition::rim_hooks`], so agreement with them is meaningful.
//!
//! The coloring enumeration is exponential in the number of parts of `rho`;
//! it is meant for `n <= 6` or so.

use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::characters::CharKey;
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::partitions::Partition;

fn beta_set(lam: &Partition) -> Vec<i64> {
    let l = lam.len() as i64;
    lam.parts().iter().enumerate().map(|(i, &p)| p as i64 + l - 1 - i as i64).collect()
}

fn from_beta_set(mut beta: Vec<i64>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len() as i64;
    Partition::from_unsorted(beta.iter().enumerate().map(|(i, &b)| (b - (l - 1 - i as i64)) as u32).collect())
}

/// Irreducible character `chi^lam` of `S_n` at cycle type `rho`.
pub fn classical_mn(lam: &Partition, rho: &Partition) -> Result<BigInt> {
    if lam.size() != rho.size() {
        return Err(Error::SizeMismatch(lam.size(), rho.size()));
    }
    Ok(classical(lam, rho))
}

fn classical(lam: &Partition, rho: &Partition) -> BigInt {
    static MEMO: OnceLock<DashMap<(Partition, Partition), BigInt>> = OnceLock::new();
    let memo = MEMO.get_or_init(DashMap::new);
    let Some(r) = rho.largest() else {
        return BigInt::one();
    };
    if let Some(v) = memo.get(&(lam.clone(), rho.clone())) {
        return v.clone();
    }
    let r = r as i64;
    let rest = rho.without_index(0);
    let beta = beta_set(lam);
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        let v = classical(&from_beta_set(moved), &rest);
        if jumped % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert((lam.clone(), rho.clone()), total.clone());
    total
}

/// Sum over all ways of assigning a color to each part of `rho`, before any
/// reduction of the result.
pub fn specht_value_formal(key: &CharKey) -> CyclotomicNumber {
    let k = key.k();
    let targets: Vec<usize> = key.lam.constituents().iter().map(Partition::size).collect();
    // (class color s, part) for every part of rho
    let parts: Vec<(usize, u32)> =
        key.rho.constituents().iter().enumerate().flat_map(|(s, p)| p.parts().iter().map(move |&m| (s, m))).collect();
    let mut coeffs = vec![BigInt::zero(); k];
    let mut assigned: Vec<Vec<u32>> = vec![Vec::new(); k];
    let mut sizes = vec![0usize; k];
    assign(key, &parts, 0, 0, &targets, &mut sizes, &mut assigned, &mut coeffs);
    CyclotomicNumber::from_coeffs(k, coeffs.into_iter().map(BigRational::from_integer).collect()).expect("length k")
}

#[allow(clippy::too_many_arguments)]
fn assign(
    key: &CharKey,
    parts: &[(usize, u32)],
    next: usize,
    exponent: usize,
    targets: &[usize],
    sizes: &mut Vec<usize>,
    assigned: &mut Vec<Vec<u32>>,
    coeffs: &mut Vec<BigInt>,
) {
    let k = targets.len();
    if next == parts.len() {
        let mut weight = BigInt::one();
        for (c, lam_c) in key.lam.constituents().iter().enumerate() {
            weight *= classical(lam_c, &Partition::from_unsorted(assigned[c].clone()));
            if weight.is_zero() {
                return;
            }
        }
        // w^{-exponent}
        coeffs[(k - exponent % k) % k] += weight;
        return;
    }
    let (s, m) = parts[next];
    for c in 0..k {
        if sizes[c] + m as usize > targets[c] {
            continue;
        }
        sizes[c] += m as usize;
        assigned[c].push(m);
        assign(key, parts, next + 1, exponent + s * c, targets, sizes, assigned, coeffs);
        assigned[c].pop();
        sizes[c] -= m as usize;
    }
}

/// The Frobenius-type inner product value, in standard form.
pub fn specht_value(key: &CharKey) -> Result<CyclotomicNumber> {
    specht_value_formal(key).standard_form()
}

/// Rim-hook removals found by subtracting `m` from one row and straightening.
///
/// Returns `(remaining, swaps)` for every row whose straightening does not
/// cancel. Whenever an entry is smaller than the next one, equal-plus-one
/// cancels the whole term, otherwise the pair `(a, b)` becomes `(b-1, a+1)`
/// and the sign flips.
pub fn straightened_rim_hooks(lam: &Partition, m: usize) -> Vec<(Partition, usize)> {
    let rows: Vec<i64> = lam.parts().iter().map(|&p| p as i64).collect();
    let mut out = Vec::new();
    'rows: for i in 0..rows.len() {
        let mut v = rows.clone();
        v[i] -= m as i64;
        let mut at = i;
        let mut swaps = 0;
        while at + 1 < v.len() && v[at] < v[at + 1] {
            if v[at] + 1 == v[at + 1] {
                continue 'rows;
            }
            let (a, b) = (v[at], v[at + 1]);
            v[at] = b - 1;
            v[at + 1] = a + 1;
            swaps += 1;
            at += 1;
        }
        if v[at] < 0 {
            continue;
        }
        out.push((Partition::from_unsorted(v.into_iter().map(|x| x as u32).collect()), swaps));
    }
    out
}
