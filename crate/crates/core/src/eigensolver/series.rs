use num_traits::Float;

/// Terms beyond this count are dropped even if the tail has not converged.
pub const MAX_TERMS: usize = 400;
/// Relative size of the next term, measured at `|x| = 0.95`, below which a
/// series is cut.
pub const TRUNCATION_REL: f64 = 1e-16;
/// `x² = 0.95²`, the reference point for the truncation rule.
pub const REFERENCE_Z: f64 = 0.9025;

pub(crate) fn cast<T: Float>(x: f64) -> T {
    T::from(x).expect("f64 constant fits the float type")
}

/// Truncated power series `Σ c_k z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Float> PowerSeries<T> {
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scaled(mut self, s: T) -> Self {
        for c in &mut self.coeffs {
            *c = *c * s;
        }
        self
    }

    pub fn eval(&self, z: T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * z + c)
    }

    /// First derivative in `z`.
    pub fn eval_d1(&self, z: T) -> T {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(T::zero(), |acc, (k, &c)| acc * z + c * cast(k as f64))
    }

    /// Second derivative in `z`.
    pub fn eval_d2(&self, z: T) -> T {
        self.coeffs
            .iter()
            .enumerate()
            .skip(2)
            .rev()
            .fold(T::zero(), |acc, (k, &c)| acc * z + c * cast((k * (k - 1)) as f64))
    }
}

/// Gauss series `2F1(a, b; c; z)` built by the term ratio
/// `t_{k+1}/t_k = (a+k)(b+k) / ((c+k)(k+1)) z`.
///
/// Stops at an exactly vanishing term (terminating case), when the next
/// term at `z = 0.95²` is below `1e-16` of the accumulated absolute sum, or
/// after [`MAX_TERMS`] terms.
pub fn hyp2f1_series<T: Float>(a: T, b: T, c: T) -> PowerSeries<T> {
    let z_ref: T = cast(REFERENCE_Z);
    let rel: T = cast(TRUNCATION_REL);
    let mut coeffs = vec![T::one()];
    let mut term = T::one();
    let mut power = T::one();
    let mut abs_sum = T::one();
    for k in 0..MAX_TERMS - 1 {
        let kk: T = cast(k as f64);
        term = term * (a + kk) * (b + kk) / ((c + kk) * (kk + T::one()));
        if term == T::zero() {
            break;
        }
        power = power * z_ref;
        let size = (term * power).abs();
        coeffs.push(term);
        if size < rel * abs_sum {
            break;
        }
        abs_sum = abs_sum + size;
    }
    PowerSeries { coeffs }
}
