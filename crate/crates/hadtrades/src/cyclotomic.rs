//! Exact arithmetic over roots of unity and the cyclotomic fields Q(ζ_m).
//!
//! Root-of-unity sums are decided by forming the integer polynomial
//! Σ x^{k_i} and testing divisibility by the cyclotomic polynomial Φ_m(x);
//! field elements of Q(ζ_m) are rational-coefficient polynomials reduced
//! modulo Φ_m, which is a canonical representation because Φ_m is the minimal
//! polynomial of ζ_m. No floating point enters any verdict; floats appear
//! only in cross-check tests.

use crate::{limits, Error, Result};
use num::{BigInt, BigRational, One, Zero};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Euler's totient, by trial counting. Fine for moduli up to the limit.
pub fn phi(m: usize) -> usize {
    (1..=m).filter(|k| gcd(*k, m) == 1).count()
}

fn check_modulus(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    if m > limits::MAX_MODULUS {
        return Err(Error::SizeLimit {
            what: "modulus",
            got: m,
            limit: limits::MAX_MODULUS,
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers (ascending-degree coefficient vectors)
// ---------------------------------------------------------------------------

fn poly_trim(v: &mut Vec<BigInt>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Euclidean division by a monic divisor; returns (quotient, remainder).
fn poly_div_rem(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    debug_assert!(den.last().is_some_and(|c| c.is_one()));
    let mut rem: Vec<BigInt> = num.to_vec();
    let d = den.len() - 1;
    if rem.len() <= d {
        return (vec![BigInt::zero()], rem);
    }
    let qlen = rem.len() - d;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + d].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            let t = &c * dc;
            rem[i + j] -= t;
        }
    }
    rem.truncate(d.max(1));
    poly_trim(&mut rem);
    poly_trim(&mut quot);
    (quot, rem)
}

/// The m-th cyclotomic polynomial Φ_m(x), ascending degree, integer
/// coefficients. Computed as (x^m − 1) divided by Φ_d for every proper
/// divisor d of m.
pub fn cyclotomic_poly(m: usize) -> Result<Vec<BigInt>> {
    check_modulus(m)?;
    Ok(cyclotomic_poly_unchecked(m))
}

fn cyclotomic_poly_unchecked(m: usize) -> Vec<BigInt> {
    if m == 1 {
        return vec![BigInt::from(-1), BigInt::from(1)];
    }
    // x^m - 1
    let mut num = vec![BigInt::zero(); m + 1];
    num[0] = BigInt::from(-1);
    num[m] = BigInt::from(1);
    for d in 1..m {
        if m.is_multiple_of(d) {
            let (q, r) = poly_div_rem(&num, &cyclotomic_poly_unchecked(d));
            debug_assert!(r.iter().all(|c| c.is_zero()));
            num = q;
        }
    }
    num
}

/// Decides whether Σ_i ζ_m^{k_i} = 0, exactly.
///
/// The exponent multiset is reduced mod m, turned into the integer polynomial
/// Σ x^{k_i}, and tested for divisibility by Φ_m(x). An empty multiset sums
/// to zero.
pub fn is_vanishing_sum(exponents: &[usize], m: usize) -> Result<bool> {
    check_modulus(m)?;
    if exponents.is_empty() {
        return Ok(true);
    }
    if m == 1 {
        // Every term is 1; a nonempty sum is the positive count.
        return Ok(false);
    }
    if m == 2 {
        let ones = exponents.iter().filter(|&&k| k % 2 == 1).count();
        return Ok(2 * ones == exponents.len());
    }
    let mut coeffs = vec![BigInt::zero(); m];
    for &k in exponents {
        coeffs[k % m] += 1;
    }
    poly_trim(&mut coeffs);
    let (_, rem) = poly_div_rem(&coeffs, &cyclotomic_poly_unchecked(m));
    Ok(rem.iter().all(|c| c.is_zero()))
}

// ---------------------------------------------------------------------------
// RootExp
// ---------------------------------------------------------------------------

/// A root of unity e^{2πik/m}, stored as the exponent k modulo m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootExp {
    k: usize,
    m: usize,
}

impl RootExp {
    pub fn new(k: i64, m: usize) -> Result<Self> {
        check_modulus(m)?;
        let k = k.rem_euclid(m as i64) as usize;
        Ok(RootExp { k, m })
    }

    pub fn one(m: usize) -> Result<Self> {
        Self::new(0, m)
    }

    /// −1, which needs an even modulus.
    pub fn minus_one(m: usize) -> Result<Self> {
        if !m.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "-1 is not an {m}-th root of unity"
            )));
        }
        Self::new((m / 2) as i64, m)
    }

    pub fn exponent(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn is_one(&self) -> bool {
        self.k == 0
    }

    pub fn is_minus_one(&self) -> bool {
        self.m.is_multiple_of(2) && self.k == self.m / 2
    }

    pub fn is_real(&self) -> bool {
        self.is_one() || self.is_minus_one()
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        self.m / gcd(self.k, self.m)
    }

    pub fn mul(&self, other: &RootExp) -> Result<RootExp> {
        if self.m != other.m {
            return Err(Error::ModulusMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(RootExp {
            k: (self.k + other.k) % self.m,
            m: self.m,
        })
    }

    pub fn conj(&self) -> RootExp {
        RootExp {
            k: (self.m - self.k) % self.m,
            m: self.m,
        }
    }

    /// Injective re-embedding into a multiple of the current modulus.
    pub fn re_embed(&self, m2: usize) -> Result<RootExp> {
        check_modulus(m2)?;
        if !m2.is_multiple_of(self.m) {
            return Err(Error::InvalidArgument(format!(
                "cannot embed modulus {} into {}",
                self.m, m2
            )));
        }
        Ok(RootExp {
            k: self.k * (m2 / self.m),
            m: m2,
        })
    }

    /// Floating-point value, for cross-check tests only.
    pub fn value_f64(&self) -> (f64, f64) {
        let t = 2.0 * std::f64::consts::PI * (self.k as f64) / (self.m as f64);
        (t.cos(), t.sin())
    }
}

impl std::fmt::Display for RootExp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "z[{}]^{}", self.m, self.k)
    }
}

// ---------------------------------------------------------------------------
// CycloNumber
// ---------------------------------------------------------------------------

/// An element of Q(ζ_m): a rational polynomial in ζ_m of degree < φ(m),
/// reduced modulo Φ_m. The representation is canonical, so an element is zero
/// iff all coefficients are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloNumber {
    m: usize,
    coeffs: Vec<BigRational>,
}

fn phi_as_rational(m: usize) -> Vec<BigRational> {
    cyclotomic_poly_unchecked(m)
        .into_iter()
        .map(BigRational::from_integer)
        .collect()
}

/// Remainder of a rational polynomial modulo the monic divisor `den`.
fn rat_poly_rem(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let d = den.len() - 1;
    let mut rem: Vec<BigRational> = num.to_vec();
    if rem.len() <= d {
        return rem;
    }
    for i in (d..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in den.iter().enumerate() {
            let t = &c * dc;
            rem[i - d + j] -= t;
        }
    }
    rem.truncate(d);
    rem
}

impl CycloNumber {
    fn reduce(m: usize, poly: Vec<BigRational>) -> CycloNumber {
        let phi_m = phi_as_rational(m);
        let deg = phi_m.len() - 1;
        let mut coeffs = rat_poly_rem(&poly, &phi_m);
        coeffs.resize(deg, BigRational::zero());
        CycloNumber { m, coeffs }
    }

    pub fn zero(m: usize) -> Result<CycloNumber> {
        check_modulus(m)?;
        Ok(CycloNumber {
            coeffs: vec![BigRational::zero(); phi(m)],
            m,
        })
    }

    pub fn one(m: usize) -> Result<CycloNumber> {
        Self::from_rational(BigRational::one(), m)
    }

    pub fn from_rational(q: BigRational, m: usize) -> Result<CycloNumber> {
        check_modulus(m)?;
        let mut coeffs = vec![BigRational::zero(); phi(m)];
        if m == 1 {
            // phi(1) = 1 and zeta_1 = 1, so the constant sits in position 0.
            coeffs[0] = q;
            return Ok(CycloNumber { m, coeffs });
        }
        coeffs[0] = q;
        Ok(CycloNumber { m, coeffs })
    }

    pub fn from_integer(n: i64, m: usize) -> Result<CycloNumber> {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)), m)
    }

    /// The root ζ_m^k as a field element.
    pub fn from_root(r: &RootExp) -> CycloNumber {
        let mut poly = vec![BigRational::zero(); r.k + 1];
        poly[r.k] = BigRational::one();
        CycloNumber::reduce(r.m, poly)
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Some(q) when the element is the rational number q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &CycloNumber) -> Result<()> {
        if self.m != other.m {
            return Err(Error::ModulusMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CycloNumber) -> Result<CycloNumber> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloNumber { m: self.m, coeffs })
    }

    pub fn sub(&self, other: &CycloNumber) -> Result<CycloNumber> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloNumber { m: self.m, coeffs })
    }

    pub fn neg(&self) -> CycloNumber {
        CycloNumber {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycloNumber) -> Result<CycloNumber> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return CycloNumber::zero(self.m);
        }
        let mut poly = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                poly[i + j] += t;
            }
        }
        Ok(CycloNumber::reduce(self.m, poly))
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm on the
    /// coefficient polynomial and Φ_m over the rationals.
    pub fn inv(&self) -> Result<CycloNumber> {
        if self.is_zero() {
            return Err(Error::DivisionByZero { m: self.m });
        }
        // Maintain r = s * self (mod phi_m); when r reaches a nonzero
        // constant, s / r is the inverse.
        let phi_m = phi_as_rational(self.m);
        let mut r0 = phi_m.clone();
        let mut r1 = self.coeffs.clone();
        trim_rat(&mut r1);
        let mut s0: Vec<BigRational> = vec![BigRational::zero()];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while poly_deg(&r1) > 0 {
            let (q, r) = rat_poly_div_rem(&r0, &r1);
            let s = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            if r1.iter().all(|c| c.is_zero()) {
                // gcd with positive degree: impossible since phi_m is
                // irreducible and self != 0.
                unreachable!("nonzero element of Q(zeta) has an inverse");
            }
        }
        let c = r1[0].clone();
        let inv_c = BigRational::one() / c;
        let poly: Vec<BigRational> = s1.iter().map(|x| x * &inv_c).collect();
        Ok(CycloNumber::reduce(self.m, poly))
    }

    pub fn div(&self, other: &CycloNumber) -> Result<CycloNumber> {
        self.mul(&other.inv()?)
    }

    /// Complex conjugate: ζ ↦ ζ^{m−1}.
    pub fn conj(&self) -> CycloNumber {
        let m = self.m;
        if m <= 2 {
            return self.clone();
        }
        let mut poly = vec![BigRational::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let pos = (m - i) % m;
            poly[pos] = &poly[pos] + a;
        }
        CycloNumber::reduce(m, poly)
    }

    /// Re-embedding into Q(ζ_{m2}) for m | m2 (ζ_m ↦ ζ_{m2}^{m2/m}).
    pub fn re_embed(&self, m2: usize) -> Result<CycloNumber> {
        check_modulus(m2)?;
        if !m2.is_multiple_of(self.m) {
            return Err(Error::InvalidArgument(format!(
                "cannot embed modulus {} into {}",
                self.m, m2
            )));
        }
        if m2 == self.m {
            return Ok(self.clone());
        }
        let t = m2 / self.m;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * t + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                poly[i * t] = a.clone();
            }
        }
        Ok(CycloNumber::reduce(m2, poly))
    }

    /// Floating-point value, for cross-check tests only.
    pub fn value_f64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = rational_to_f64(c);
            let t = 2.0 * std::f64::consts::PI * (i as f64) / (self.m as f64);
            re += cf * t.cos();
            im += cf * t.sin();
        }
        (re, im)
    }
}

fn rational_to_f64(q: &BigRational) -> f64 {
    let n = q.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = q.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}

impl std::fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{i}")?,
            }
        }
        Ok(())
    }
}

// Rational polynomial helpers for the extended Euclidean algorithm.

fn trim_rat(v: &mut Vec<BigRational>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn poly_deg(v: &[BigRational]) -> usize {
    let mut d = v.len();
    while d > 1 && v[d - 1].is_zero() {
        d -= 1;
    }
    d - 1
}

fn rat_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let t = x * y;
            out[i + j] += t;
        }
    }
    out
}

fn rat_poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim_rat(&mut out);
    out
}

fn rat_poly_div_rem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let dd = poly_deg(den);
    let lead = den[dd].clone();
    debug_assert!(!lead.is_zero());
    let mut rem = num.to_vec();
    trim_rat(&mut rem);
    if poly_deg(&rem) < dd || rem.iter().all(|c| c.is_zero()) {
        return (vec![BigRational::zero()], rem);
    }
    let qlen = poly_deg(&rem) - dd + 1;
    let mut quot = vec![BigRational::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = &rem[i + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for j in 0..=dd {
            let t = &c * &den[j];
            rem[i + j] -= t;
        }
    }
    rem.truncate(dd.max(1));
    trim_rat(&mut rem);
    trim_rat(&mut quot);
    (quot, rem)
}

// ---------------------------------------------------------------------------
// CycloVector
// ---------------------------------------------------------------------------

/// A vector over Q(ζ_m) with a consistent modulus.
#[derive(Clone, Debug, PartialEq)]
pub struct CycloVector {
    m: usize,
    entries: Vec<CycloNumber>,
}

impl CycloVector {
    pub fn new(entries: Vec<CycloNumber>) -> Result<CycloVector> {
        let m = match entries.first() {
            Some(e) => e.modulus(),
            None => return Err(Error::InvalidArgument("empty vector".into())),
        };
        if entries.iter().any(|e| e.modulus() != m) {
            return Err(Error::InvalidArgument(
                "vector entries have mixed moduli".into(),
            ));
        }
        Ok(CycloVector { m, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &[CycloNumber] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Hermitian inner product Σ x_i · conj(y_i).
    pub fn hermitian_inner(&self, other: &CycloVector) -> Result<CycloNumber> {
        if self.len() != other.len() {
            return Err(Error::InvalidArgument("vector length mismatch".into()));
        }
        if self.m != other.m {
            return Err(Error::ModulusMismatch {
                left: self.m,
                right: other.m,
            });
        }
        let mut acc = CycloNumber::zero(self.m)?;
        for (x, y) in self.entries.iter().zip(&other.entries) {
            acc = acc.add(&x.mul(&y.conj())?)?;
        }
        Ok(acc)
    }
}

// ---------------------------------------------------------------------------
// Exact rank and nullspace over Q(ζ_m)
// ---------------------------------------------------------------------------

fn check_rectangular(mat: &[Vec<CycloNumber>]) -> Result<Option<usize>> {
    if mat.is_empty() || mat[0].is_empty() {
        return Ok(None);
    }
    let cols = mat[0].len();
    let m = mat[0][0].modulus();
    for row in mat {
        if row.len() != cols {
            return Err(Error::InvalidArgument("ragged matrix".into()));
        }
        if row.iter().any(|e| e.modulus() != m) {
            return Err(Error::InvalidArgument("matrix entries have mixed moduli".into()));
        }
    }
    Ok(Some(m))
}

/// Rank over Q(ζ_m), by Gaussian elimination with exact zero tests.
/// An empty matrix has rank 0.
#[allow(clippy::needless_range_loop)] // elimination reads one row while writing another
pub fn cyclo_rank(mat: &[Vec<CycloNumber>]) -> Result<usize> {
    if check_rectangular(mat)?.is_none() {
        return Ok(0);
    }
    let mut work: Vec<Vec<CycloNumber>> = mat.to_vec();
    let rows = work.len();
    let cols = work[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(rank, p);
        let pivot_inv = work[rank][col].inv()?;
        for r in rank + 1..rows {
            if work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].mul(&pivot_inv)?;
            for c in col..cols {
                let t = factor.mul(&work[rank][c])?;
                work[r][c] = work[r][c].sub(&t)?;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// One nonzero kernel vector v with M·v = 0, or None when M has full column
/// rank. The vector is deterministic: the first free column is set to 1 and
/// pivot variables are back-substituted.
#[allow(clippy::needless_range_loop)] // elimination reads one row while writing another
pub fn cyclo_nullspace_vector(mat: &[Vec<CycloNumber>], ncols: usize, m: usize) -> Result<Option<Vec<CycloNumber>>> {
    check_modulus(m)?;
    if ncols == 0 {
        return Ok(None);
    }
    if mat.is_empty() {
        let mut v = vec![CycloNumber::zero(m)?; ncols];
        v[0] = CycloNumber::one(m)?;
        return Ok(Some(v));
    }
    check_rectangular(mat)?;
    if mat[0].len() != ncols {
        return Err(Error::InvalidArgument("column count mismatch".into()));
    }
    // Reduced row echelon form.
    let mut work: Vec<Vec<CycloNumber>> = mat.to_vec();
    let rows = work.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(rank, p);
        let pivot_inv = work[rank][col].inv()?;
        for c in col..ncols {
            work[rank][c] = work[rank][c].mul(&pivot_inv)?;
        }
        for r in 0..rows {
            if r == rank || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            for c in col..ncols {
                let t = factor.mul(&work[rank][c])?;
                work[r][c] = work[r][c].sub(&t)?;
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    if rank == ncols {
        return Ok(None);
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free = (0..ncols).find(|c| !pivot_cols.contains(c)).unwrap();
    let mut v = vec![CycloNumber::zero(m)?; ncols];
    v[free] = CycloNumber::one(m)?;
    for &(r, c) in &pivots {
        v[c] = work[r][free].neg();
    }
    Ok(Some(v))
}
