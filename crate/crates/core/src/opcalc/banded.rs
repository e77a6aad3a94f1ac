use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::numcore::{Degree, Poly};
use crate::scalar::{Rational, Scalar};

/// A linear operator on polynomials, stored by its exact action on each
/// monomial `x^n` for `n = 0..=safe_degree`.
///
/// `max_raise` bounds how far the operator can push the degree up. A
/// composition only stays exact on monomials whose image under the inner
/// operator is still inside the outer operator's range, so `safe_degree`
/// shrinks by the inner raise on every composition.
#[derive(Debug, Clone, PartialEq)]
pub struct BandedOp<T> {
    trunc_degree: usize,
    safe_degree: usize,
    max_raise: usize,
    columns: Vec<Poly<T>>,
}

impl<T: Scalar> BandedOp<T> {
    /// Build from the image of each monomial `x^n`, `n = 0..=trunc_degree`.
    pub fn from_fn(trunc_degree: usize, max_raise: usize, image: impl Fn(usize) -> Poly<T>) -> Self {
        let columns: Vec<_> = (0..=trunc_degree).map(image).collect();
        for (n, col) in columns.iter().enumerate() {
            if let Degree::Finite(d) = col.degree() {
                assert!(d <= n + max_raise, "image of x^{n} has degree {d}, above declared raise {max_raise}");
            }
        }
        Self { trunc_degree, safe_degree: trunc_degree, max_raise, columns }
    }

    pub fn identity(trunc_degree: usize) -> Self {
        Self::from_fn(trunc_degree, 0, |n| Poly::monomial(n, T::one()))
    }

    pub fn zero(trunc_degree: usize) -> Self {
        Self::from_fn(trunc_degree, 0, |_| Poly::zero())
    }

    /// `f(x) -> f(-x)`
    pub fn reflection(trunc_degree: usize) -> Self {
        Self::from_fn(trunc_degree, 0, |n| {
            let s = if n % 2 == 0 { T::one() } else { -T::one() };
            Poly::monomial(n, s)
        })
    }

    pub fn derivative(trunc_degree: usize) -> Self {
        Self::from_fn(trunc_degree, 0, |n| match n {
            0 => Poly::zero(),
            _ => Poly::monomial(n - 1, T::from_int(n as i64)),
        })
    }

    /// Multiplication by a fixed polynomial.
    pub fn multiply_by(p: &Poly<T>, trunc_degree: usize) -> Self {
        let raise = p.degree().finite().unwrap_or(0);
        Self::from_fn(trunc_degree, raise, |n| p.shift_up(n))
    }

    pub fn mult_x(trunc_degree: usize) -> Self {
        Self::multiply_by(&Poly::x(), trunc_degree)
    }

    pub fn trunc_degree(&self) -> usize {
        self.trunc_degree
    }

    /// Largest `n` for which the stored image of `x^n` is exact.
    pub fn safe_degree(&self) -> usize {
        self.safe_degree
    }

    pub fn max_raise(&self) -> usize {
        self.max_raise
    }

    /// Image of `x^n`.
    pub fn column(&self, n: usize) -> Option<&Poly<T>> {
        self.columns.get(n)
    }

    pub fn columns(&self) -> &[Poly<T>] {
        &self.columns
    }

    pub fn apply(&self, p: &Poly<T>) -> Result<Poly<T>> {
        if let Degree::Finite(d) = p.degree() {
            if d > self.safe_degree {
                return Err(Error::Truncation { degree: d, safe_degree: self.safe_degree });
            }
        }
        Ok(p.coeffs()
            .iter()
            .zip(&self.columns)
            .filter(|(c, _)| !c.is_zero())
            .fold(Poly::zero(), |acc, (c, col)| &acc + &col.scale(c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            columns: self.columns.iter().map(|c| c.scale(s)).collect(),
            ..self.clone()
        }
    }

    /// `self + s * I`
    pub fn add_scalar(&self, s: &T) -> Self {
        self.add(&Self::identity(self.trunc_degree).scale(s))
    }

    /// `self ∘ inner`: apply `inner` first.
    ///
    /// Panics if `inner` raises every monomial out of `self`'s exact range.
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(
            self.safe_degree >= inner.max_raise,
            "composition leaves no exact range (outer safe degree {}, inner raise {})",
            self.safe_degree,
            inner.max_raise
        );
        let safe = inner.safe_degree.min(self.safe_degree - inner.max_raise);
        let columns = inner.columns[..=safe]
            .iter()
            .map(|col| self.apply(col).expect("inner image within outer range"))
            .collect();
        Self {
            trunc_degree: self.trunc_degree.min(inner.trunc_degree),
            safe_degree: safe,
            max_raise: self.max_raise + inner.max_raise,
            columns,
        }
    }

    /// `AB - BA`
    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// `AB + BA`
    pub fn anticommutator(&self, other: &Self) -> Self {
        self.compose(other).add(&other.compose(self))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.trunc_degree), |acc, _| acc.compose(self))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Poly::is_zero)
    }

    /// `Some(s)` if the operator acts as `s * I` on every exact column.
    pub fn as_scalar_identity(&self) -> Option<T> {
        let s = self.columns.first()?.coeff(0);
        self.columns
            .iter()
            .enumerate()
            .all(|(n, col)| *col == Poly::monomial(n, s.clone()))
            .then_some(s)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Poly<T>, &Poly<T>) -> Poly<T>) -> Self {
        let safe = self.safe_degree.min(other.safe_degree);
        Self {
            trunc_degree: self.trunc_degree.min(other.trunc_degree),
            safe_degree: safe,
            max_raise: self.max_raise.max(other.max_raise),
            columns: (0..=safe).map(|n| f(&self.columns[n], &other.columns[n])).collect(),
        }
    }
}

impl BandedOp<Rational> {
    /// Golden-test dump: `n -> [[k, "num/den"], ...]` over nonzero entries.
    pub fn dump(&self) -> BTreeMap<usize, Vec<(usize, String)>> {
        self.columns
            .iter()
            .enumerate()
            .map(|(n, col)| {
                let entries = col
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| (k, c.to_string()))
                    .collect();
                (n, entries)
            })
            .collect()
    }

    pub fn dump_json(&self) -> String {
        serde_json::to_string(&self.dump()).expect("string-keyed map serializes")
    }
}
