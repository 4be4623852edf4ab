//! Exact normal form for expressions built from ℚ(√5) by field operations and
//! square roots of ℚ(√5) elements.
//!
//! A [`RadicalForm`] is a sum of terms `c · √r₁ · √r₂ ⋯` where `c ∈ ℚ(√5)` and
//! each `√rᵢ` is an [`Atom`]: the square root of a positive element of ℚ(√5)
//! that has no square root inside ℚ(√5). Products of atoms reduce with
//! `√r · √r = r`, two atoms or monomials whose radicand product is a square
//! in ℚ(√5) are folded together, and division rationalizes one atom at a time
//! through conjugates.
//!
//! The form is sound but not canonical: two equal forms always denote equal
//! values, while distinct forms may still be equal when atoms are related in
//! ways the pairwise checks miss. Callers use it to prove equalities, and to
//! prove inequalities only when a difference collapses to a single nonzero
//! term.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::golden::{GoldenNumber, Sign};
use super::rational::{split_square_factor, Rational};

/// Forms with more terms than this are abandoned rather than expanded.
const MAX_TERMS: usize = 512;

/// `√(p + q√5)` for integers with `p + q√5 > 0` and no square root in ℚ(√5).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    p: BigInt,
    q: BigInt,
}

impl Atom {
    pub fn radicand(&self) -> GoldenNumber {
        GoldenNumber::new(Rational::from_integer(self.p.clone()), Rational::from_integer(self.q.clone()))
    }
}

type Monomial = BTreeSet<Atom>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalForm {
    terms: BTreeMap<Monomial, GoldenNumber>,
}

impl RadicalForm {
    pub fn zero() -> Self {
        RadicalForm { terms: BTreeMap::new() }
    }

    pub fn constant(g: GoldenNumber) -> Self {
        let mut terms = BTreeMap::new();
        if !g.is_zero() {
            terms.insert(Monomial::new(), g);
        }
        RadicalForm { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The value as an element of ℚ(√5), when no atoms remain.
    pub fn as_golden(&self) -> Option<GoldenNumber> {
        match self.terms.len() {
            0 => Some(GoldenNumber::zero()),
            1 => self.terms.get(&Monomial::new()).cloned(),
            _ => None,
        }
    }

    /// Exact sign for constants and single terms (atoms are positive).
    pub fn sign(&self) -> Option<Sign> {
        match self.terms.len() {
            0 => Some(Sign::Zero),
            1 => self.terms.values().next().map(GoldenNumber::sign),
            _ => None,
        }
    }

    fn insert(&mut self, mut m: Monomial, mut c: GoldenNumber) {
        if c.is_zero() {
            return;
        }
        if !m.is_empty() && !self.terms.contains_key(&m) {
            // ∏m · ∏m' = s with s ∈ ℚ(√5) means ∏m = (s / rad m')·∏m'
            let pm = radicand_product(&m);
            let dependent = self.terms.keys().filter(|k| !k.is_empty()).find_map(|k| {
                let pk = radicand_product(k);
                let s = (&pm * &pk).sqrt()?;
                Some((k.clone(), s.checked_div(&pk).ok()?))
            });
            if let Some((k, factor)) = dependent {
                m = k;
                c = &c * &factor;
            }
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn checked(self) -> Option<Self> {
        (self.terms.len() <= MAX_TERMS).then_some(self)
    }

    pub fn add(&self, other: &Self) -> Option<Self> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out.checked()
    }

    pub fn neg(&self) -> Self {
        RadicalForm { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Option<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Option<Self> {
        if self.terms.len().saturating_mul(other.terms.len()) > MAX_TERMS * MAX_TERMS {
            return None;
        }
        let mut out = RadicalForm::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let (factor, m) = multiply_monomials(m1, m2);
                out.insert(m, &(c1 * c2) * &factor);
            }
        }
        out.checked()
    }

    /// Exact reciprocal. `None` for zero, or when rationalizing fails because
    /// the atoms involved are not independent.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next()?;
            let mut denom = c.clone();
            for atom in m {
                denom = &denom * &atom.radicand();
            }
            let inv = denom.recip().ok()?;
            let mut out = RadicalForm::zero();
            out.insert(m.clone(), inv);
            return Some(out);
        }
        let mut num = RadicalForm::constant(GoldenNumber::one());
        let mut den = self.clone();
        while let Some(atom) = den.terms.keys().flat_map(|m| m.iter()).max().cloned() {
            let conj = den.conjugate_in(&atom);
            den = den.mul(&conj)?;
            num = num.mul(&conj)?;
            if den.is_zero() {
                return None;
            }
        }
        let g = den.as_golden()?.recip().ok()?;
        num.mul(&RadicalForm::constant(g))
    }

    /// Negates every term that contains `atom`.
    fn conjugate_in(&self, atom: &Atom) -> Self {
        RadicalForm {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), if m.contains(atom) { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Square root of a constant form. Non-constant radicands are not supported.
    pub fn sqrt(&self) -> Option<Self> {
        let g = self.as_golden()?;
        match g.sign() {
            Sign::Negative => None,
            Sign::Zero => Some(RadicalForm::zero()),
            Sign::Positive => Some(sqrt_of_positive(&g)),
        }
    }
}

fn radicand_product(m: &Monomial) -> GoldenNumber {
    m.iter().fold(GoldenNumber::one(), |acc, a| &acc * &a.radicand())
}

/// `∏m1 · ∏m2` as a field factor times a monomial. Equal atoms square to
/// their radicand; two atoms whose radicands multiply to a square in ℚ(√5)
/// collapse to that square's root.
fn multiply_monomials(m1: &Monomial, m2: &Monomial) -> (GoldenNumber, Monomial) {
    let mut m = m1.clone();
    let mut factor = GoldenNumber::one();
    for x in m2 {
        if m.remove(x) {
            factor = &factor * &x.radicand();
            continue;
        }
        let partner = m.iter().find_map(|y| Some((y.clone(), (&x.radicand() * &y.radicand()).sqrt()?)));
        match partner {
            Some((y, s)) => {
                m.remove(&y);
                factor = &factor * &s;
            }
            None => {
                m.insert(x.clone());
            }
        }
    }
    (factor, m)
}

fn sqrt_of_positive(g: &GoldenNumber) -> RadicalForm {
    if let Some(root) = g.sqrt() {
        return RadicalForm::constant(root);
    }
    // √g = (1/D)·√(g·D²) with g·D² integral
    let d = g.a.denom().lcm(g.b.denom());
    let d2 = Rational::from_integer(&d * &d);
    let mut p = (&g.a * &d2).to_integer();
    let mut q = (&g.b * &d2).to_integer();
    let common = p.gcd(&q);
    let (s, _) = split_square_factor(&common);
    let s2 = &s * &s;
    p /= &s2;
    q /= &s2;
    let mut coeff = GoldenNumber::from_rational(Rational::new(s, d));
    let five = BigInt::from(5u32);
    if q.is_zero() && p.is_multiple_of(&five) {
        p /= &five;
        coeff = &coeff * &GoldenNumber::sqrt5();
    }
    if q.is_zero() && p.is_one() {
        return RadicalForm::constant(coeff);
    }
    debug_assert!(p.is_positive() || q.is_positive());
    let mut m = Monomial::new();
    m.insert(Atom { p, q });
    let mut out = RadicalForm::zero();
    out.insert(m, coeff);
    out
}
