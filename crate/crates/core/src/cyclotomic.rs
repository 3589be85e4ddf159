//! Exact arithmetic in `Z[w]` and `Q(w)` for a primitive k-th root of unity `w`.
//!
//! Values are stored in the redundant basis `1, w, ..., w^(k-1)`. Since
//! `1 + w + ... + w^(k-1) = 0` for `k >= 2`, a value has many coefficient
//! representatives. Nothing is canonicalised eagerly; [`CyclotomicNumber::standard_form`]
//! picks the integer representative whose coefficient sum lies in `0..k`.
//!
//! For prime `k` the kernel of the basis map is spanned by `(1, 1, ..., 1)` and
//! the standard form is unique. For composite `k` the kernel is larger (for
//! `k = 4`, `1 + w^2 = 0`), so equality and the standard form first reduce
//! modulo the cyclotomic polynomial `Phi_k`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of `Q(w_k)` as a length-k rational coefficient sequence.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    k: usize,
    coeffs: Vec<BigRational>,
}

fn check_order(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::ZeroOrder)
    } else {
        Ok(())
    }
}

/// Integer coefficients of `Phi_k`, lowest degree first.
pub fn cyclotomic_polynomial(k: usize) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&k) {
        return p.clone();
    }
    assert!(k > 0, "Phi_0 is undefined");
    // x^k - 1 divided by Phi_d for every proper divisor d.
    let mut poly = vec![BigInt::zero(); k + 1];
    poly[0] = -BigInt::one();
    poly[k] = BigInt::one();
    for d in (1..k).filter(|d| k % d == 0) {
        poly = exact_monic_division(&poly, &cyclotomic_polynomial(d));
    }
    let poly = Arc::new(poly);
    cache.lock().unwrap().insert(k, poly.clone());
    poly
}

fn exact_monic_division(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (dd..num.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i - dd + j] -= &c * dj;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl CyclotomicNumber {
    pub fn zero(k: usize) -> Self {
        assert!(k > 0, "k must be positive");
        Self { k, coeffs: vec![BigRational::zero(); k] }
    }

    pub fn one(k: usize) -> Self {
        Self::from_integer(k, 1)
    }

    pub fn from_integer(k: usize, n: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(k);
        z.coeffs[0] = int(n);
        z
    }

    pub fn from_rational(k: usize, q: BigRational) -> Self {
        let mut z = Self::zero(k);
        z.coeffs[0] = q;
        z
    }

    /// Builds a value from exactly `k` rational coefficients.
    pub fn from_coeffs(k: usize, coeffs: Vec<BigRational>) -> Result<Self> {
        check_order(k)?;
        if coeffs.len() != k {
            return Err(Error::OrderMismatch(k, coeffs.len()));
        }
        Ok(Self { k, coeffs })
    }

    pub fn from_int_coeffs(k: usize, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(k, coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `w^e` with the exponent taken mod `k`.
    pub fn omega_power(k: usize, e: i64) -> Result<Self> {
        check_order(k)?;
        let mut z = Self::zero(k);
        z.coeffs[e.rem_euclid(k as i64) as usize] = BigRational::one();
        Ok(z)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.k == other.k {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.k, other.k))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { k: self.k, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { k: self.k, coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let k = self.k;
        let mut out = vec![BigRational::zero(); k];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out[(i + j) % k] += a * b;
            }
        }
        Ok(Self { k, coeffs: out })
    }

    /// Multiplies by `w^e`; a cyclic rotation of the coefficients.
    pub fn mul_omega_power(&self, e: i64) -> Self {
        let k = self.k;
        let shift = e.rem_euclid(k as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); k];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(i + shift) % k] = c.clone();
        }
        Self { k, coeffs }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self { k: self.k, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Complex conjugation, `w -> w^{-1}`.
    pub fn conj(&self) -> Self {
        let k = self.k;
        let mut coeffs = vec![BigRational::zero(); k];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(k - i) % k] = c.clone();
        }
        Self { k, coeffs }
    }

    /// The representative with zero coefficients at positions `>= phi(k)`,
    /// i.e. the remainder modulo `Phi_k`. Unique for every value.
    pub fn reduced(&self) -> Self {
        let phi = cyclotomic_polynomial(self.k);
        let deg = phi.len() - 1;
        let mut c = self.coeffs.clone();
        for i in (deg..self.k).rev() {
            if c[i].is_zero() {
                continue;
            }
            let lead = c[i].clone();
            for (j, pj) in phi.iter().enumerate() {
                if !pj.is_zero() {
                    c[i - deg + j] -= &lead * int(pj.clone());
                }
            }
        }
        Self { k: self.k, coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().coeffs.iter().all(Zero::is_zero)
    }

    /// Whether the value lies in `Z[w]`.
    pub fn is_integral(&self) -> bool {
        self.reduced().coeffs.iter().all(BigRational::is_integer)
    }

    /// The integer representative whose coefficient sum lies in `0..k`.
    ///
    /// For `k = 1` this is the (integer) value itself.
    pub fn standard_form(&self) -> Result<Self> {
        let mut r = self.reduced();
        if !r.coeffs.iter().all(BigRational::is_integer) {
            return Err(Error::NotIntegral(self.to_poly_string()));
        }
        if self.k >= 2 {
            let sum: BigInt = r.coeffs.iter().map(|c| c.to_integer()).sum();
            let shift = int(sum.div_floor(&BigInt::from(self.k)));
            for c in &mut r.coeffs {
                *c -= &shift;
            }
        }
        Ok(r)
    }

    /// Sum of the standard-form coefficients, in `0..k`.
    pub fn digit_sum_d(&self) -> Result<u64> {
        let sf = self.standard_form()?;
        let sum: BigInt = sf.coeffs.iter().map(|c| c.to_integer()).sum();
        Ok(sum.mod_floor(&BigInt::from(self.k)).to_u64().expect("residue fits"))
    }

    /// Sum of the stored coefficients (the value at `w = 1` of this representative).
    pub fn coefficient_sum(&self) -> BigRational {
        self.coeffs.iter().sum()
    }

    /// A representative with as many zero coefficients as a constant shift allows.
    /// Used for display of non-integral values such as expansion coefficients.
    pub fn sparse_form(&self) -> Self {
        let r = self.reduced();
        if self.k == 1 {
            return r;
        }
        // most zeros first, then smallest l1 norm
        let score = |t: &BigRational| {
            let shifted: Vec<BigRational> = r.coeffs.iter().map(|c| c + t).collect();
            let zeros = shifted.iter().filter(|c| c.is_zero()).count();
            let l1: BigRational = shifted.iter().map(|c| c.abs()).sum();
            (zeros, l1)
        };
        let mut best = BigRational::zero();
        let mut best_score = score(&best);
        for c in &r.coeffs {
            let t = -c.clone();
            let sc = score(&t);
            if sc.0 > best_score.0 || (sc.0 == best_score.0 && sc.1 < best_score.1) {
                best = t;
                best_score = sc;
            }
        }
        Self { k: self.k, coeffs: r.coeffs.iter().map(|c| c + &best).collect() }
    }

    /// Renders the stored coefficients as a polynomial in `w`, e.g. `-w+w^2`.
    pub fn to_poly_string(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => fmt_rational(c),
                _ => {
                    let mono = if i == 1 { "w".to_string() } else { format!("w^{i}") };
                    if c.is_one() {
                        mono
                    } else if (-c).is_one() {
                        format!("-{mono}")
                    } else {
                        format!("{}*{mono}", fmt_rational(c))
                    }
                }
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses the polynomial notation produced by [`Self::to_poly_string`].
    /// Implicit products such as `2w` and exponents `>= k` are accepted.
    pub fn parse_poly(k: usize, s: &str) -> Result<Self> {
        check_order(k)?;
        let err = || Error::Parse(format!("bad cyclotomic literal {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err());
        }
        let mut value = Self::zero(k);
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            rest = tail;
            let (coef_str, power) = match term.find('w') {
                Some(pos) => {
                    let exp = &term[pos + 1..];
                    let power =
                        if exp.is_empty() { 1 } else { exp.strip_prefix('^').ok_or_else(err)?.parse::<i64>().map_err(|_| err())? };
                    (term[..pos].trim_end_matches('*'), power)
                }
                None => (term, 0),
            };
            let mut coef = if coef_str.is_empty() {
                if power == 0 && term.is_empty() {
                    return Err(err());
                }
                BigRational::one()
            } else {
                parse_rational(coef_str).ok_or_else(err)?
            };
            if negative {
                coef = -coef;
            }
            value.coeffs[power.rem_euclid(k as i64) as usize] += coef;
        }
        Ok(value)
    }

    /// Numeric embedding at `w = exp(2 pi i / k)` as `(re, im)`.
    /// Display only; never used for decisions.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let theta = std::f64::consts::TAU * i as f64 / self.k as f64;
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.parse().ok()?, d))
        }
        None => Some(int(s.parse::<BigInt>().ok()?)),
    }
}

impl PartialEq for CyclotomicNumber {
    /// Equality of field elements, not of coefficient sequences.
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.try_sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    /// Standard form when integral, otherwise the sparse representative.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = self.standard_form().unwrap_or_else(|_| self.sparse_form());
        f.write_str(&shown.to_poly_string())
    }
}

impl FromStr for CyclotomicNumber {
    type Err = Error;

    /// Parses the JSON object form `{"k": 3, "coeffs": ["0", "-1", "1"]}`.
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    k: usize,
    coeffs: Vec<String>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let shown = self.standard_form().unwrap_or_else(|_| self.clone());
        CyclotomicRepr { k: self.k, coeffs: shown.coeffs.iter().map(fmt_rational).collect() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CyclotomicRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| parse_rational(c).ok_or_else(|| D::Error::custom(format!("bad rational {c:?}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Self::from_coeffs(repr.k, coeffs).map_err(D::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                self.$checked(rhs).expect("operands must share the same k")
            }
        }
        impl $trait for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn add_assign(&mut self, rhs: &CyclotomicNumber) {
        assert_eq!(self.k, rhs.k, "operands must share the same k");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { k: self.k, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}
