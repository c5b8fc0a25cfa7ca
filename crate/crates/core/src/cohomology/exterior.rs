use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};

use super::Monomial;

/// Exact coefficient ring for [`ExteriorElement`].
pub trait Coefficient:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Add<Output = Self> + Mul<Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Add<Output = T> + Mul<Output = T>
{
}

/// An element of the exterior algebra `Λ[du_0, …, du_{n-1}]` with exact
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorElement<T> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Coefficient> Default for ExteriorElement<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coefficient> ExteriorElement<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::term(Monomial::ONE, T::one())
    }

    pub fn term(m: Monomial, c: T) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, T)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: Monomial) -> T {
        self.terms.get(&m).cloned().unwrap_or_else(T::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &T)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `None` for zero or mixed-degree elements.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms().map(|(m, x)| (m, x.clone() * c.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c.clone());
        }
        out
    }

    /// The exterior product, bilinear over the monomial rule in [`Monomial::wedge`].
    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, x) in self.terms() {
            for (k, y) in other.terms() {
                if let Some((negative, mk)) = m.wedge(k) {
                    let c = x.clone() * y.clone();
                    out.add_term(mk, if negative { -c } else { c });
                }
            }
        }
        out
    }

    /// `self^exponent` by repeated wedge; `self^0 = 1`.
    pub fn pow(&self, exponent: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..exponent {
            out = out.wedge(self);
            if out.is_zero() {
                break;
            }
        }
        out
    }

    /// Homogeneous component of the given degree.
    pub fn component(&self, degree: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(&m, c)| (m, c.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> ExteriorElement<U> {
        ExteriorElement::from_terms(self.terms().map(|(m, c)| (m, f(c))))
    }

    pub fn into_terms(self) -> Vec<(Monomial, T)> {
        self.terms.into_iter().collect()
    }
}
