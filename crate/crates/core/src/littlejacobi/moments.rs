use num_traits::{One, Zero};

use super::ParamPair;
use crate::error::{Error, Result};
use crate::numcore::{pochhammer, Degree, Poly};
use crate::scalar::{int, Rational};

/// Moment sequence `c_0, ..., c_M` of the orthogonality functional.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentFunctional {
    moments: Vec<Rational>,
}

/// `c_{2n} = c_{2n-1} = (α/2+1/2)_n / (α/2+β/2+1)_n`, `c_0 = 1`.
pub fn moments(p: &ParamPair, max_index: usize) -> MomentFunctional {
    let half = |r: Rational| r / int(2);
    let top = half(p.alpha() + int(1));
    let bottom = half(p.alpha() + p.beta() + int(2));
    let moments = (0..=max_index)
        .map(|k| {
            let n = k.div_ceil(2);
            pochhammer(&top, n) / pochhammer(&bottom, n)
        })
        .collect();
    MomentFunctional { moments }
}

impl MomentFunctional {
    pub fn from_moments(moments: Vec<Rational>) -> Self {
        Self { moments }
    }

    pub fn moments(&self) -> &[Rational] {
        &self.moments
    }

    pub fn max_index(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn get(&self, k: usize) -> Result<&Rational> {
        self.moments
            .get(k)
            .ok_or(Error::MomentOverflow { index: k, available: self.max_index() })
    }

    /// Apply the functional to a polynomial: `Σ p_k c_k`.
    pub fn apply(&self, p: &Poly<Rational>) -> Result<Rational> {
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .try_fold(Rational::zero(), |acc, (k, c)| Ok(acc + c * self.get(k)?))
    }

    /// `<p, q> = Σ_ij p_i q_j c_{i+j}`
    pub fn inner_product(&self, p: &Poly<Rational>, q: &Poly<Rational>) -> Result<Rational> {
        if let (Degree::Finite(dp), Degree::Finite(dq)) = (p.degree(), q.degree()) {
            if dp + dq > self.max_index() {
                return Err(Error::MomentOverflow { index: dp + dq, available: self.max_index() });
            }
        }
        self.apply(&(p * q))
    }

    /// All pairwise inner products of `family`.
    ///
    /// Each polynomial is first reduced to its moment row `L[p x^k]`, so a
    /// pair costs one dot product instead of a full polynomial product.
    pub fn gram(&self, family: &[Poly<Rational>]) -> Result<Vec<Vec<Rational>>> {
        let top = family.iter().filter_map(|p| p.degree().finite()).max().unwrap_or(0);
        if 2 * top > self.max_index() {
            return Err(Error::MomentOverflow { index: 2 * top, available: self.max_index() });
        }
        let rows: Vec<Vec<Rational>> = family
            .iter()
            .map(|p| (0..=top).map(|k| self.apply(&p.shift_up(k))).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let dot = |row: &[Rational], q: &Poly<Rational>| {
            q.coeffs()
                .iter()
                .zip(row)
                .filter(|(c, _)| !c.is_zero())
                .fold(Rational::zero(), |acc, (c, m)| acc + c * m)
        };
        Ok(rows.iter().map(|row| family.iter().map(|q| dot(row, q)).collect()).collect())
    }

    /// Hankel matrix `[c_{i+j}]_{i,j=0..=n}`.
    pub fn hankel(&self, n: usize) -> Result<Vec<Vec<Rational>>> {
        (0..=n)
            .map(|i| (0..=n).map(|j| self.get(i + j).cloned()).collect())
            .collect()
    }

    /// `Δ_n = det [c_{i+j}]_{i,j=0..=n}`
    pub fn hankel_determinant(&self, n: usize) -> Result<Rational> {
        Ok(exact_determinant(self.hankel(n)?))
    }
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn exact_determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}
