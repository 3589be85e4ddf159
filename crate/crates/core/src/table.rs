//! Full character tables and the checks run against them.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{degree, CharKey, CharacterEngine, Method};
use crate::cores_quotients::{from_core_quotient, verify_modular_relation};
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_colored, ColoredPartition, Partition};

/// Default cap on the number of colored partitions in a table.
pub const DEFAULT_CLASS_LIMIT: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub k: usize,
    pub n: usize,
    pub characters: Vec<ColoredPartition>,
    pub classes: Vec<ColoredPartition>,
    /// `values[i][j]` is character `i` at class `j`, in standard form.
    pub values: Vec<Vec<CyclotomicNumber>>,
    pub centralizers: Vec<BigUint>,
}

/// Number of k-colored partitions of `n`, from the coefficients of
/// `prod_m (1 - q^m)^{-k}`.
pub fn count_colored(k: usize, n: usize) -> BigUint {
    let p: Vec<BigUint> = (0..=n).map(|i| BigUint::from(enumerate_partitions_count(i))).collect();
    let mut acc = vec![BigUint::from(0u32); n + 1];
    acc[0] = BigUint::one();
    for _ in 0..k {
        let mut next = vec![BigUint::from(0u32); n + 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, pj) in p.iter().enumerate().take(n + 1 - i) {
                next[i + j] += a * pj;
            }
        }
        acc = next;
    }
    acc.swap_remove(n)
}

fn enumerate_partitions_count(n: usize) -> u64 {
    // Euler's pentagonal recurrence
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut total: i128 = 0;
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > i {
                break;
            }
            let sgn = if j % 2 == 1 { 1 } else { -1 };
            total += sgn * p[i - g1] as i128;
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= i {
                total += sgn * p[i - g2] as i128;
            }
        }
        p[i] = total as u64;
    }
    p[n]
}

/// `Z(rho) = prod_i z_{rho^(i)} k^{l(rho^(i))}`, the centralizer order.
pub fn centralizer(rho: &ColoredPartition) -> BigUint {
    let k = BigUint::from(rho.k());
    rho.constituents().iter().map(|p| p.z() * k.pow(p.len() as u32)).product()
}

/// `k^n n!`
pub fn group_order(k: usize, n: usize) -> BigUint {
    let fact: BigUint = (1..=n).map(BigUint::from).product();
    BigUint::from(k).pow(n as u32) * fact
}

/// Column order: the reverse of the character order for `k = 3, n <= 3`
/// (matching the printed tables), the canonical order otherwise.
pub fn class_order(k: usize, n: usize) -> Vec<ColoredPartition> {
    let mut classes = enumerate_colored(k, n);
    if k == 3 && n <= 3 {
        classes.reverse();
    }
    classes
}

fn check_limit(k: usize, n: usize, limit: Option<usize>) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    if let Some(limit) = limit {
        let count = count_colored(k, n);
        if count > BigUint::from(limit) {
            let count = usize::try_from(count).unwrap_or(usize::MAX);
            return Err(Error::ResourceLimit { count, limit });
        }
    }
    Ok(())
}

/// Evaluates every cell, rows in parallel. `limit` caps the number of
/// colored partitions; `None` disables the guard.
pub fn build_table(engine: &CharacterEngine, k: usize, n: usize, method: Method, limit: Option<usize>) -> Result<CharacterTable> {
    check_limit(k, n, limit)?;
    let characters = enumerate_colored(k, n);
    let classes = class_order(k, n);
    let values = characters
        .par_iter()
        .map(|lam| {
            classes.iter().map(|rho| engine.chi(&CharKey { lam: lam.clone(), rho: rho.clone() }, method)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let centralizers = classes.iter().map(centralizer).collect();
    Ok(CharacterTable { k, n, characters, classes, values, centralizers })
}

impl CharacterTable {
    pub fn value(&self, lam: &ColoredPartition, rho: &ColoredPartition) -> Option<&CyclotomicNumber> {
        let i = self.characters.iter().position(|c| c == lam)?;
        let j = self.classes.iter().position(|c| c == rho)?;
        Some(&self.values[i][j])
    }

    pub fn to_json(&self) -> Value {
        let strings = |xs: &[ColoredPartition]| xs.iter().map(|c| json!(c)).collect::<Vec<_>>();
        json!({
            "k": self.k,
            "n": self.n,
            "characters": strings(&self.characters),
            "classes": strings(&self.classes),
            "values": self.values.iter()
                .map(|row| row.iter().map(|v| v.to_poly_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "centralizers": self.centralizers.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }

    /// Header row of class labels, then one row per character.
    pub fn to_rows(&self) -> Vec<Vec<String>> {
        let mut rows = Vec::with_capacity(self.characters.len() + 1);
        let mut header = vec!["character".to_string()];
        header.extend(self.classes.iter().map(ToString::to_string));
        rows.push(header);
        for (lam, row) in self.characters.iter().zip(&self.values) {
            let mut r = vec![lam.to_string()];
            r.extend(row.iter().map(CyclotomicNumber::to_poly_string));
            rows.push(r);
        }
        rows
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub k: usize,
    pub n: usize,
    pub checks: Vec<CheckResult>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn check_orthogonality(t: &CharacterTable) -> CheckResult {
    let order = group_order(t.k, t.n);
    let weights: Vec<BigRational> = t.centralizers.iter().map(|z| BigRational::from_integer((&order / z).into())).collect();
    let conj: Vec<Vec<CyclotomicNumber>> = t.values.iter().map(|r| r.iter().map(CyclotomicNumber::conj).collect()).collect();
    let failures = (0..t.characters.len())
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut bad = Vec::new();
            for (b, conj_b) in conj.iter().enumerate().skip(a) {
                let mut sum = CyclotomicNumber::zero(t.k);
                for (c, w) in weights.iter().enumerate() {
                    sum += &(&t.values[a][c] * &conj_b[c]).scale(w);
                }
                let want = if a == b { CyclotomicNumber::from_integer(t.k, order.clone()) } else { CyclotomicNumber::zero(t.k) };
                if sum != want {
                    bad.push(format!(
                        "rows {} and {}: inner product {} times |G|",
                        t.characters[a],
                        t.characters[b],
                        sum.sparse_form().to_poly_string()
                    ));
                }
            }
            bad
        })
        .collect();
    CheckResult { name: "orthogonality", failures }
}

pub fn check_degrees(t: &CharacterTable) -> CheckResult {
    let mut failures = Vec::new();
    let identity = ColoredPartition::single(t.k, 0, Partition::column(t.n));
    let Some(col) = t.classes.iter().position(|c| *c == identity) else {
        return CheckResult { name: "degrees", failures: vec!["identity class missing".into()] };
    };
    let mut squares = BigUint::from(0u32);
    for (lam, row) in t.characters.iter().zip(&t.values) {
        let d = degree(lam);
        if row[col] != CyclotomicNumber::from_integer(t.k, d.clone()) {
            failures.push(format!("{lam}: identity value {} but degree {d}", row[col]));
        }
        squares += &d * &d;
    }
    let order = group_order(t.k, t.n);
    if squares != order {
        failures.push(format!("sum of squared degrees {squares} differs from group order {order}"));
    }
    CheckResult { name: "degrees", failures }
}

pub fn check_class_sizes(t: &CharacterTable) -> CheckResult {
    let order = group_order(t.k, t.n);
    let mut failures = Vec::new();
    let mut total = BigUint::from(0u32);
    for (rho, z) in t.classes.iter().zip(&t.centralizers) {
        if &order % z != BigUint::from(0u32) {
            failures.push(format!("{rho}: centralizer {z} does not divide {order}"));
        }
        total += &order / z;
    }
    if total != order {
        failures.push(format!("class sizes sum to {total}, not {order}"));
    }
    CheckResult { name: "class_sizes", failures }
}

/// The inverse of an element of class `rho` has class `rho` with colors
/// negated, so the character there is the complex conjugate.
pub fn check_conjugation(t: &CharacterTable) -> CheckResult {
    let mut failures = Vec::new();
    for (j, rho) in t.classes.iter().enumerate() {
        let Some(jbar) = t.classes.iter().position(|c| *c == rho.negate_colors()) else {
            failures.push(format!("{rho}: inverse class missing"));
            continue;
        };
        for (lam, row) in t.characters.iter().zip(&t.values) {
            if row[jbar] != row[j].conj() {
                failures.push(format!("{lam} at {rho}: inverse class value {} is not the conjugate of {}", row[jbar], row[j]));
            }
        }
    }
    CheckResult { name: "conjugation", failures }
}

pub fn verify_table(t: &CharacterTable) -> TableReport {
    TableReport { k: t.k, n: t.n, checks: vec![check_orthogonality(t), check_degrees(t), check_class_sizes(t), check_conjugation(t)] }
}

/// Cross-method comparison over every cell.
pub fn check_methods(engine: &CharacterEngine, k: usize, n: usize, methods: &[Method]) -> Result<CheckResult> {
    let chars = enumerate_colored(k, n);
    let keys: Vec<CharKey> =
        chars.iter().flat_map(|lam| chars.iter().map(move |rho| CharKey { lam: lam.clone(), rho: rho.clone() })).collect();
    let failures = keys
        .par_iter()
        .map(|key| -> Result<Option<String>> {
            let vals = methods.iter().map(|&m| engine.chi(key, m)).collect::<Result<Vec<_>>>()?;
            if vals.windows(2).all(|w| w[0] == w[1]) {
                return Ok(None);
            }
            let shown: Vec<String> = methods.iter().zip(&vals).map(|(m, v)| format!("{m}={v}")).collect();
            Ok(Some(format!("{key}: {}", shown.join(", "))))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(CheckResult { name: "methods", failures })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularReport {
    pub k: usize,
    pub n: usize,
    pub characters: Vec<ColoredPartition>,
    /// Partition of `kn` with empty core and quotient `characters[i]`.
    pub lambdas: Vec<Partition>,
    pub classes: Vec<ColoredPartition>,
    /// `d[i][j]`, the digit sum of character `i` at class `j`.
    pub d: Vec<Vec<u64>>,
    /// Distinct classes `k * rho` with colors forgotten.
    pub flat_classes: Vec<Partition>,
    /// `residues[i][c]`, `chi^lambda_rho mod k` for `lambdas[i]` and `flat_classes[c]`.
    pub residues: Vec<Vec<u64>>,
    /// `signed[i][c]`, `sigma_lambda * chi^lambda_rho mod k`; equal to `d` on
    /// every colored class with that flattening.
    pub signed: Vec<Vec<u64>>,
    pub sigmas: Vec<i8>,
    pub failures: Vec<String>,
}

impl ModularReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the modular check on every pair of colored partitions of `n`.
pub fn modular_report(engine: &CharacterEngine, k: usize, n: usize, limit: Option<usize>) -> Result<ModularReport> {
    check_limit(k, n, limit)?;
    let characters = enumerate_colored(k, n);
    let classes = class_order(k, n);
    let rows = characters
        .par_iter()
        .map(|lam| classes.iter().map(|rho| verify_modular_relation(engine, lam, rho)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let lambdas = characters.iter().map(|c| from_core_quotient(&Partition::empty(), c, k)).collect::<Result<Vec<_>>>()?;
    let mut flat_classes: Vec<Partition> = Vec::new();
    for check in rows.first().into_iter().flatten() {
        if !flat_classes.contains(&check.rho) {
            flat_classes.push(check.rho.clone());
        }
    }
    flat_classes.sort_by(|a, b| b.cmp(a));
    let kk = BigInt::from(k);
    let mut failures = Vec::new();
    let mut d = Vec::with_capacity(rows.len());
    let mut residues = Vec::with_capacity(rows.len());
    let mut signed = Vec::with_capacity(rows.len());
    let mut sigmas = Vec::with_capacity(rows.len());
    for (lam, row) in characters.iter().zip(&rows) {
        let mut raw = vec![0u64; flat_classes.len()];
        let mut with_sign = vec![0u64; flat_classes.len()];
        for (rho, check) in classes.iter().zip(row) {
            if !check.ok {
                failures.push(format!("{lam} at {rho}: d = {} but sigma * chi mod k = {}", check.lhs, check.rhs));
            }
            let c = flat_classes.iter().position(|f| *f == check.rho).expect("collected above");
            raw[c] = check.classical.mod_floor(&kk).try_into().expect("residue fits");
            with_sign[c] = check.rhs;
        }
        d.push(row.iter().map(|c| c.lhs).collect());
        residues.push(raw);
        signed.push(with_sign);
        sigmas.push(row.first().map_or(1, |c| c.sigma));
    }
    Ok(ModularReport { k, n, characters, lambdas, classes, d, flat_classes, residues, signed, sigmas, failures })
}
