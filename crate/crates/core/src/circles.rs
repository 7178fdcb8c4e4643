//! Exponential factors, their Galois orbits (circles) and Hom classes.
//!
//! An [`ExpFactor`] is a Puiseux polynomial `Σ c_e x^e` with positive
//! rational exponents and cyclotomic coefficients. Substituting
//! `x^{1/r} ↦ ζ_r x^{1/r}` (with `r` the ramification) permutes the
//! determinations of `q`; the orbit is the circle `⟨q⟩`, which covers the
//! circle of directions `r` times.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::cyclotomic::{join_signed, signed_terms, CycloNumber};
use crate::error::{Error, Result};

/// Exponent of `x` in an exponential factor; always strictly positive.
pub type Exponent = Ratio<i64>;

/// A Puiseux polynomial with no constant term.
#[derive(Clone, Debug, Default)]
pub struct ExpFactor {
    terms: BTreeMap<Exponent, CycloNumber>,
}

impl ExpFactor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: CycloNumber, exponent: Exponent) -> Result<Self> {
        Self::from_terms([(exponent, coeff)])
    }

    /// Sums like terms and drops zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, CycloNumber)>) -> Result<Self> {
        let mut out = ExpFactor::zero();
        for (e, c) in terms {
            if e <= Exponent::zero() {
                return Err(Error::validation(format!("exponent {e} is not positive")));
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, e: Exponent, c: CycloNumber) {
        let sum = match self.terms.remove(&e) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &CycloNumber)> {
        self.terms.iter()
    }

    /// The ramification degree: lcm of the exponent denominators.
    pub fn ram(&self) -> u64 {
        self.terms.keys().fold(1i64, |acc, e| acc.lcm(e.denom())) as u64
    }

    /// Largest exponent, zero for `q = 0`.
    pub fn slope(&self) -> Exponent {
        self.terms
            .keys()
            .next_back()
            .copied()
            .unwrap_or_else(Exponent::zero)
    }

    /// lcm of the coefficient levels.
    pub fn level(&self) -> u64 {
        self.terms.values().fold(1, |acc, c| acc.lcm(&c.level()))
    }

    fn embed(&self, level: u64) -> Self {
        ExpFactor {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.embed(level)))
                .collect(),
        }
    }

    /// Applies `x^{1/r} ↦ ζ_r^a x^{1/r}`, `r = ram(q)`.
    pub fn conjugate(&self, a: i64) -> Self {
        let r = self.ram() as i64;
        ExpFactor {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let k = e.numer() * (r / e.denom());
                    let twist = CycloNumber::root_of_unity(r as u64, a * k);
                    (*e, c * &twist)
                })
                .collect(),
        }
    }

    pub fn scale(&self, gamma: &CycloNumber) -> Self {
        let mut out = ExpFactor::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c * gamma);
        }
        out
    }

    /// Total order used to pick orbit representatives: descending exponent
    /// lists first, then coefficients (highest exponent first).
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let ea: Vec<_> = self.terms.keys().rev().collect();
        let eb: Vec<_> = other.terms.keys().rev().collect();
        ea.cmp(&eb).then_with(|| {
            self.terms
                .values()
                .rev()
                .zip(other.terms.values().rev())
                .map(|(x, y)| x.canonical_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }

    /// Signed printable summands `c*x^e`, highest exponent first.
    pub(crate) fn signed_summands(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let xpow = fmt_xpow(e);
            for t in signed_terms(c) {
                out.push(match t.as_str() {
                    "1" => xpow.clone(),
                    "-1" => format!("-{xpow}"),
                    _ => format!("{t}*{xpow}"),
                });
            }
        }
        out
    }
}

fn fmt_xpow(e: &Exponent) -> String {
    if e.is_one() {
        "x".to_string()
    } else if e.is_integer() {
        format!("x^{}", e.numer())
    } else {
        format!("x^({}/{})", e.numer(), e.denom())
    }
}

impl PartialEq for ExpFactor {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|((e1, c1), (e2, c2))| e1 == e2 && c1 == c2)
    }
}

impl Eq for ExpFactor {}

impl Add for &ExpFactor {
    type Output = ExpFactor;
    fn add(self, rhs: &ExpFactor) -> ExpFactor {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Neg for &ExpFactor {
    type Output = ExpFactor;
    fn neg(self) -> ExpFactor {
        ExpFactor {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &ExpFactor {
    type Output = ExpFactor;
    fn sub(self, rhs: &ExpFactor) -> ExpFactor {
        self + &(-rhs)
    }
}

impl fmt::Display for ExpFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&join_signed(&self.signed_summands()))
    }
}

/// The Galois orbit `⟨q⟩` of an exponential factor.
#[derive(Clone, Debug)]
pub struct Circle {
    rep: ExpFactor,
    ram: u64,
}

impl Circle {
    /// The tame circle `⟨0⟩`.
    pub fn zero() -> Self {
        Circle {
            rep: ExpFactor::zero(),
            ram: 1,
        }
    }

    /// All `ram` conjugates of `q`, at a common coefficient level.
    fn orbit(q: &ExpFactor) -> Vec<ExpFactor> {
        let r = q.ram();
        let level = q.level().lcm(&r);
        let q = q.embed(level);
        (0..r as i64).map(|a| q.conjugate(a)).collect()
    }

    pub fn of(q: &ExpFactor) -> Self {
        let rep = Self::orbit(q)
            .into_iter()
            .min_by(|a, b| a.canonical_cmp(b))
            .expect("orbit is never empty");
        Circle {
            ram: rep.ram(),
            rep,
        }
    }

    /// Canonical orbit representative.
    pub fn rep(&self) -> &ExpFactor {
        &self.rep
    }

    pub fn ram(&self) -> u64 {
        self.ram
    }

    pub fn slope(&self) -> Exponent {
        self.rep.slope()
    }

    /// The conjugates of the representative, `ram` of them, all distinct.
    pub fn conjugates(&self) -> Vec<ExpFactor> {
        Self::orbit(&self.rep)
    }

    /// Irregularity `ram · slope`.
    pub fn irr(&self) -> u64 {
        let v = self.slope() * Exponent::from_integer(self.ram as i64);
        debug_assert!(v.is_integer());
        *v.numer() as u64
    }

    pub fn is_tame(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn contains(&self, q: &ExpFactor) -> bool {
        q.ram() == self.ram && self.conjugates().iter().any(|c| c == q)
    }

    pub fn scale(&self, gamma: &CycloNumber) -> Self {
        Circle::of(&self.rep.scale(gamma))
    }
}

impl PartialEq for Circle {
    fn eq(&self, other: &Self) -> bool {
        self.ram == other.ram && self.contains(&other.rep)
    }
}

impl Eq for Circle {}

impl fmt::Display for Circle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.rep)
    }
}

/// A formal sum `Σ n_i⟨q_i⟩` of distinct circles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IrregularClass {
    entries: Vec<(Circle, u64)>,
}

impl IrregularClass {
    /// Merges repeated circles, returning a warning for each merge.
    pub fn new(entries: impl IntoIterator<Item = (Circle, u64)>) -> (Self, Vec<String>) {
        let mut out: Vec<(Circle, u64)> = Vec::new();
        let mut warnings = Vec::new();
        for (c, n) in entries {
            if n == 0 {
                continue;
            }
            match out.iter_mut().find(|(d, _)| *d == c) {
                Some((d, m)) => {
                    warnings.push(format!(
                        "circle {c} listed more than once; multiplicities merged into {d}"
                    ));
                    *m += n;
                }
                None => out.push((c, n)),
            }
        }
        (IrregularClass { entries: out }, warnings)
    }

    pub fn entries(&self) -> &[(Circle, u64)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, c: &Circle) -> u64 {
        self.entries
            .iter()
            .find(|(d, _)| d == c)
            .map_or(0, |(_, n)| *n)
    }

    /// `Σ n_i · ram(q_i)`.
    pub fn rank(&self) -> u64 {
        self.entries.iter().map(|(c, n)| n * c.ram()).sum()
    }

    /// `Σ n_i · Irr(q_i)`.
    pub fn irr(&self) -> u64 {
        self.entries.iter().map(|(c, n)| n * c.irr()).sum()
    }

    /// `Irr End(Θ) = Σ_{i,j} n_i n_j Irr Hom(⟨q_i⟩, ⟨q_j⟩)`.
    pub fn end_irr(&self) -> Result<u64> {
        let mut total = 0;
        for (ci, ni) in &self.entries {
            for (cj, nj) in &self.entries {
                total += ni * nj * hom_class(ci, cj)?.irr();
            }
        }
        Ok(total)
    }
}

impl fmt::Display for IrregularClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, n)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *n != 1 {
                write!(f, "{n}")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The irregular class `Hom(⟨q_1⟩, ⟨q_2⟩)`.
///
/// Differences `q_2^{(a)} - q_1^{(b)}` over all conjugate pairs form a
/// Galois-stable multiset of `r_1 r_2` factors; each circle occurring in it
/// gets multiplicity (occurrences / ram).
pub fn hom_class(c1: &Circle, c2: &Circle) -> Result<IrregularClass> {
    let left = c1.conjugates();
    let right = c2.conjugates();
    let mut counts: Vec<(Circle, u64)> = Vec::new();
    for q2 in &right {
        for q1 in &left {
            let d = q2 - q1;
            match counts.iter_mut().find(|(c, _)| c.contains(&d)) {
                Some((_, k)) => *k += 1,
                None => counts.push((Circle::of(&d), 1)),
            }
        }
    }
    let mut entries = Vec::with_capacity(counts.len());
    for (c, k) in counts {
        if k % c.ram() != 0 {
            return Err(Error::invariant(format!(
                "Hom({c1}, {c2}): circle {c} occurs {k} times, not a multiple of its ramification {}",
                c.ram()
            )));
        }
        let n = k / c.ram();
        entries.push((c, n));
    }
    entries.sort_by_key(|(c, _)| (std::cmp::Reverse(c.slope()), c.ram(), c.to_string()));
    let hom = IrregularClass { entries };
    if hom.rank() != c1.ram() * c2.ram() {
        return Err(Error::invariant(format!(
            "Hom({c1}, {c2}) has rank {} instead of {}",
            hom.rank(),
            c1.ram() * c2.ram()
        )));
    }
    Ok(hom)
}
