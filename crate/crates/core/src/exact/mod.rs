//! Exact arithmetic substrate: rationals, dense matrices and subspaces,
//! sparse multivariate polynomials, truncated power series and integer
//! polynomials in `q` (and `t`).

mod det;
mod matrix;
mod poly;
mod qpoly;
mod series;

pub use det::{bareiss_det, cofactor_det, poly_matrix_det};
pub use matrix::{bilinear, dot, RatMatrix, Subspace};
pub use poly::{elementary_symmetric, elementary_symmetric_of, Monomial, MultiPoly};
pub use qpoly::{BiPoly, QPoly};
pub use series::TruncatedSeries;

pub type Rational = num_rational::BigRational;

/// Largest number of polynomial variables supported by [`Monomial`].
pub const MAX_VARS: usize = 12;

#[inline]
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rat_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

/// Binomial coefficient as `u64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
