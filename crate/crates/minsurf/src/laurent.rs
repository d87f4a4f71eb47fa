//! Finite complex Laurent polynomials.
//!
//! The carrier algebra for Weierstrass pairs `(g, ω)`. Supports exact
//! termwise arithmetic, differentiation and antidifferentiation, so that
//! surface evaluation needs no numerical quadrature.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A finite sum `Σ c_e z^e` with integer exponents of either sign.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, Complex64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    /// The single term `c z^e`.
    pub fn monomial(exp: i32, c: Complex64) -> Self {
        let mut terms = BTreeMap::new();
        if c != Complex64::new(0.0, 0.0) {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds from `(exponent, coefficient)` pairs, rejecting duplicates.
    pub fn from_terms<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i32, Complex64)>,
    {
        let mut terms = BTreeMap::new();
        for (e, c) in pairs {
            if terms.insert(e, c).is_some() {
                return Err(Error::Parse(format!("duplicate exponent {e}")));
            }
        }
        terms.retain(|_, c| *c != Complex64::new(0.0, 0.0));
        Ok(Self { terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> Complex64 {
        self.terms
            .get(&exp)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, Complex64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Largest coefficient magnitude; 0 for the zero polynomial.
    pub fn max_coeff_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&e, &c) in &other.terms {
            let entry = terms.entry(e).or_insert(Complex64::new(0.0, 0.0));
            *entry += c;
            if *entry == Complex64::new(0.0, 0.0) {
                terms.remove(&e);
            }
        }
        Self { terms }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i32, Complex64> = BTreeMap::new();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                let entry = terms.entry(e1 + e2).or_insert(Complex64::new(0.0, 0.0));
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| *c != Complex64::new(0.0, 0.0));
        Self { terms }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        if s == Complex64::new(0.0, 0.0) {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e, c * s)).collect(),
        }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn derivative(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (&e, &c) in &self.terms {
            if e != 0 {
                terms.insert(e - 1, c * e as f64);
            }
        }
        Self { terms }
    }

    /// Termwise antiderivative.
    ///
    /// Returns the polynomial part and the residue, i.e. the coefficient of
    /// `z^{-1}`, whose antiderivative is `residue * log z`.
    pub fn antiderivative(&self) -> (Self, Complex64) {
        let mut terms = BTreeMap::new();
        let mut residue = Complex64::new(0.0, 0.0);
        for (&e, &c) in &self.terms {
            if e == -1 {
                residue = c;
            } else {
                terms.insert(e + 1, c / (e + 1) as f64);
            }
        }
        (Self { terms }, residue)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&e, &c) in &self.terms {
            acc += c * z.powi(e);
        }
        acc
    }

    /// Coefficients of `z^{-min_exp} * self` as a dense ascending-degree
    /// vector, suitable for root finding. Empty for the zero polynomial.
    pub fn shifted_coeffs(&self) -> Vec<Complex64> {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Vec::new(),
        };
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (hi - lo + 1) as usize];
        for (&e, &c) in &self.terms {
            coeffs[(e - lo) as usize] = c;
        }
        coeffs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:.6}{:+.6}i)z^{}", c.re, c.im, e)?;
        }
        Ok(())
    }
}
