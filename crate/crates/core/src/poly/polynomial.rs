use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, UniPoly, VarId};
use crate::{Error, Result};

/// Sparse multivariate polynomial with big-integer coefficients.
///
/// Terms are kept in a map ordered by the graded lexicographic monomial
/// order; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: VarId) -> Self {
        Self::term(1, Monomial::var(v))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant value, if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += c · m · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &BigInt, m: &Monomial) {
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), oc * c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Leading term under the monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `top(f)`, the component of degree `deg f`.
    pub fn top(&self) -> Self {
        self.degree()
            .map(|d| self.homogeneous_component(d))
            .unwrap_or_default()
    }

    /// `snd(f)`, the component of degree `deg f − 1`.
    pub fn snd(&self) -> Self {
        match self.degree() {
            Some(d) if d > 0 => self.homogeneous_component(d - 1),
            _ => Self::zero(),
        }
    }

    /// Nonzero homogeneous components as `(degree, component)` pairs, highest
    /// degree first.
    pub fn components(&self) -> Vec<(u32, Self)> {
        let mut by_degree: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_degree
                .entry(m.degree())
                .or_default()
                .terms
                .insert(m.clone(), c.clone());
        }
        by_degree.into_iter().rev().collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|p| p.0))
            .collect()
    }

    /// Replaces the assigned variables; unassigned ones stay symbolic.
    pub fn substitute(&self, assignment: &BTreeMap<VarId, Polynomial>) -> Self {
        let mut cache: BTreeMap<(VarId, u32), Polynomial> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = Self::constant(c.clone());
            for &(v, e) in m.powers() {
                match assignment.get(&v) {
                    Some(value) => {
                        let power = cache.entry((v, e)).or_insert_with(|| value.pow(e));
                        acc = &acc * &*power;
                    }
                    None => kept.push((v, e)),
                }
            }
            let rest = Monomial::from_powers(kept);
            for (am, ac) in acc.terms {
                out.add_term(am.mul(&rest), ac);
            }
        }
        out
    }

    /// Value at an integer point covering every variable.
    pub fn evaluate(&self, point: &BTreeMap<VarId, BigInt>) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.powers() {
                let x = point
                    .get(&v)
                    .ok_or_else(|| Error::MissingValue(v.to_string()))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// `f(base + t·direction)` expanded in `t`.
    pub fn restrict_to_line(
        &self,
        base: &BTreeMap<VarId, BigInt>,
        direction: &BTreeMap<VarId, BigInt>,
    ) -> Result<UniPoly> {
        let mut linear: BTreeMap<VarId, UniPoly> = BTreeMap::new();
        for v in self.variables() {
            let b = base
                .get(&v)
                .ok_or_else(|| Error::MissingValue(v.to_string()))?;
            let d = direction
                .get(&v)
                .ok_or_else(|| Error::MissingValue(v.to_string()))?;
            linear.insert(v, UniPoly::new(alloc::vec![b.clone(), d.clone()]));
        }
        let mut powers: BTreeMap<(VarId, u32), UniPoly> = BTreeMap::new();
        let mut out = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for &(v, e) in m.powers() {
                let p = powers
                    .entry((v, e))
                    .or_insert_with(|| linear[&v].pow(e));
                t = &t * &*p;
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (dm, dc) = divisor.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm.div(&dm)?;
            let (c, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            rem.add_scaled(divisor, &-c.clone(), &m);
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// `f` or `−f`, whichever has a positive leading coefficient.
    pub fn sign_normalized(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// `f = ±g`.
    pub fn unit_eq(&self, other: &Self) -> bool {
        self.sign_normalized() == other.sign_normalized()
    }

    /// Greatest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.gcd(m))
    }

    /// Text form with an explicit choice of Plücker index style.
    pub fn display_with(&self, wide: bool) -> PolyDisplay<'_> {
        PolyDisplay { poly: self, wide }
    }

    pub fn to_text(&self, wide: bool) -> String {
        self.display_with(wide).to_string()
    }
}

/// [`fmt::Display`] adaptor returned by [`Polynomial::display_with`].
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    wide: bool,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for &(v, e) in m.powers() {
                let label = v.label(self.wide);
                factors.push(if e == 1 {
                    label
                } else {
                    alloc::format!("{label}^{e}")
                });
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(false).fmt(f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = Polynomial::zero();
        for (m, c) in &small.terms {
            out.add_scaled(large, c, m);
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<VarId> for Polynomial {
    fn from(v: VarId) -> Self {
        Self::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}
