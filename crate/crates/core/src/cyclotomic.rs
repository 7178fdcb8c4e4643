//! Exact arithmetic in cyclotomic fields.
//!
//! A [`CycloNumber`] is stored at a level `N` as its coordinates in the power
//! basis `1, ζ_N, …, ζ_N^{φ(N)-1}` of `ℚ(ζ_N)`, i.e. as the remainder of a
//! rational polynomial modulo the cyclotomic polynomial `Φ_N`. Numbers at
//! different levels are compared after embedding both into the lcm level.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient, the degree of `Φ_n`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi: n must be positive");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Exact quotient of `num` by the monic polynomial `den` (coefficients low to high).
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

fn cyclotomic_shared(n: u64) -> Arc<Vec<BigInt>> {
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        let mut p = vec![BigInt::zero(); n as usize + 1];
        p[0] = BigInt::from(-1);
        p[n as usize] = BigInt::one();
        for d in divisors(n) {
            if d == n {
                continue;
            }
            p = div_monic(&p, &cyclotomic_shared(d));
        }
        p
    };
    let poly = Arc::new(poly);
    phi_cache().lock().unwrap().insert(n, Arc::clone(&poly));
    poly
}

/// The `n`-th cyclotomic polynomial, coefficients from the constant term upward.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_poly: n must be positive");
    cyclotomic_shared(n).as_ref().clone()
}

/// Remainder of a rational polynomial modulo the monic integer polynomial `phi`.
fn reduce(mut p: Vec<Rational>, phi: &[BigInt]) -> Vec<Rational> {
    let deg = phi.len() - 1;
    while p.len() > deg {
        let top = p.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let base = p.len() - deg;
        for (i, c) in phi[..deg].iter().enumerate() {
            p[base + i] -= &top * Rational::from_integer(c.clone());
        }
    }
    p.resize(deg, Rational::zero());
    p
}

/// An exact element of `ℚ(ζ_N)` in canonical power-basis form.
#[derive(Clone, Debug)]
pub struct CycloNumber {
    level: u64,
    coeffs: Vec<Rational>,
}

impl CycloNumber {
    /// Builds `Σ coeffs[k]·ζ_level^k` for a coefficient list of any length.
    pub fn from_power_basis(level: u64, coeffs: Vec<Rational>) -> Self {
        assert!(level >= 1, "level must be positive");
        let phi = cyclotomic_shared(level);
        CycloNumber {
            level,
            coeffs: reduce(coeffs, &phi),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloNumber {
            level: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `ζ_n^a`, with `a` taken modulo `n`.
    pub fn root_of_unity(n: u64, a: i64) -> Self {
        assert!(n >= 1, "root_of_unity: n must be positive");
        let k = a.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Self::from_power_basis(n, coeffs)
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Power-basis coordinates, `φ(level)` of them.
    pub fn coords(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, when it lies in `ℚ`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the number at level `m`; `self.level()` must divide `m`.
    pub fn embed(&self, m: u64) -> Self {
        assert!(
            m >= 1 && m.is_multiple_of(self.level),
            "cannot embed level {} into level {}",
            self.level,
            m
        );
        if m == self.level {
            return self.clone();
        }
        let step = (m / self.level) as usize;
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * step] = c.clone();
        }
        Self::from_power_basis(m, coeffs)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let l = self.level.lcm(&other.level);
        (self.embed(l), other.embed(l))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloNumber {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CycloNumber::one().embed(self.level);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Total order on values at a common level: coordinates compared
    /// lexicographically after embedding both numbers into the lcm level.
    ///
    /// Only transitive among numbers that share that level, which is how
    /// orbit representatives are chosen.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.aligned(other);
        a.coeffs.cmp(&b.coeffs)
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNumber {}

impl From<Rational> for CycloNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for CycloNumber {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        let (a, b) = self.aligned(rhs);
        CycloNumber {
            level: a.level,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        let (a, b) = self.aligned(rhs);
        CycloNumber {
            level: a.level,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        let (a, b) = self.aligned(rhs);
        let mut prod = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        CycloNumber::from_power_basis(a.level, prod)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Signed monomials `r·ζ^k` making up the number, as printable strings.
pub(crate) fn signed_terms(z: &CycloNumber) -> Vec<String> {
    let mut out = Vec::new();
    for (k, c) in z.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let root = match k {
            0 => None,
            1 => Some(format!("z{}", z.level)),
            _ => Some(format!("z{}^{}", z.level, k)),
        };
        out.push(match root {
            None => fmt_rational(c),
            Some(root) if c.is_one() => root,
            Some(root) if (-c).is_one() => format!("-{root}"),
            Some(root) => format!("{}*{}", fmt_rational(c), root),
        });
    }
    out
}

pub(crate) fn join_signed(terms: &[String]) -> String {
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        match (i, t.strip_prefix('-')) {
            (0, _) => s.push_str(t),
            (_, Some(rest)) => {
                s.push_str(" - ");
                s.push_str(rest);
            }
            (_, None) => {
                s.push_str(" + ");
                s.push_str(t);
            }
        }
    }
    s
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = signed_terms(self);
        if terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&join_signed(&terms))
    }
}
