use num_traits::{One, Zero};

use super::levi::{cartan_natural_dim, LeviDecomposition};
use crate::error::{Error, Result};
use crate::exact::{rat, RatMatrix, Rational, Subspace};
use crate::root_data::Family;
use crate::springer::Partition;

/// A concrete nilpotent matrix together with the invariant form and the
/// decomposition `C^N = U + U'' + U'` it is built from.
///
/// In type A there is no form and only `e` is meaningful; the subspaces
/// are then `U = C^N` and zero.
#[derive(Clone, Debug)]
pub struct NilpotentRealization {
    pub family: Family,
    pub n: usize,
    pub e: RatMatrix,
    pub form: Option<RatMatrix>,
    pub u: Subspace,
    pub u_prime: Subspace,
    pub u_dprime: Subspace,
    /// `ker e^m` inside `U''`: the first `m` basis vectors of that block.
    pub u_tprime: Subspace,
}

impl NilpotentRealization {
    /// `e^T B + B e == 0`.
    pub fn preserves_form(&self) -> bool {
        match &self.form {
            None => true,
            Some(b) => {
                let lhs = self.e.transpose().try_mul(b).expect("square");
                let rhs = b.try_mul(&self.e).expect("square");
                (0..self.n).all(|i| (0..self.n).all(|j| (&lhs[(i, j)] + &rhs[(i, j)]).is_zero()))
            }
        }
    }
}

/// Block-diagonal Jordan matrix with `e v_{j+1} = v_j` inside each block.
fn jordan_blocks(blocks: &[usize]) -> RatMatrix {
    let n: usize = blocks.iter().sum();
    let mut e = RatMatrix::zeros(n, n);
    let mut start = 0;
    for &b in blocks {
        for j in start..start + b - 1 {
            e[(j, j + 1)] = Rational::one();
        }
        start += b;
    }
    e
}

/// Realizes the regular nilpotent of the Levi described by `decomp`.
///
/// Types B and C use the basis `U`, then `U''`, then `U'` with the form
/// antidiagonal between `U` and `U'`. On `U` the matrix is the Jordan
/// matrix `A` with blocks `lambda`, on `U'` it is `-F A^T F` (`F` the
/// antidiagonal), and on `U''` a single block with superdiagonal entries
/// `1` then `-1` chosen so `e` preserves the form there.
pub fn realize(decomp: &LeviDecomposition) -> Result<NilpotentRealization> {
    let n = cartan_natural_dim(decomp.cartan());
    match decomp.family {
        Family::A => Ok(NilpotentRealization {
            family: Family::A,
            n,
            e: jordan_blocks(&decomp.lambda),
            form: None,
            u: Subspace::full(n),
            u_prime: Subspace::zero(n),
            u_dprime: Subspace::zero(n),
            u_tprime: Subspace::zero(n),
        }),
        Family::B | Family::C => {
            let m = decomp.m.expect("B and C decompositions carry m");
            let l: usize = decomp.lambda.iter().sum();
            let mid = if decomp.family == Family::B { 2 * m + 1 } else { 2 * m };
            assert_eq!(2 * l + mid, n);
            let a = jordan_blocks(&decomp.lambda);
            let mut e = RatMatrix::zeros(n, n);
            let mut form = RatMatrix::zeros(n, n);
            let off = l + mid;
            for i in 0..l {
                for j in 0..l {
                    e[(i, j)] = a[(i, j)].clone();
                    // (-F A^T F)_{ij} = -A_{l-1-j, l-1-i}
                    e[(off + i, off + j)] = -a[(l - 1 - j, l - 1 - i)].clone();
                }
                form[(i, n - 1 - i)] = Rational::one();
                form[(n - 1 - i, i)] = if decomp.family == Family::B { rat(1) } else { rat(-1) };
            }
            for p in 0..mid.saturating_sub(1) {
                e[(l + p, l + p + 1)] = if p < m { rat(1) } else { rat(-1) };
            }
            for i in 0..mid {
                let v = match decomp.family {
                    Family::B => rat(1),
                    _ if i < m => rat(1),
                    _ => rat(-1),
                };
                form[(l + i, l + mid - 1 - i)] = v;
            }
            let real = NilpotentRealization {
                family: decomp.family,
                n,
                e,
                form: Some(form),
                u: Subspace::coordinate(n, 0..l),
                u_prime: Subspace::coordinate(n, off..n),
                u_dprime: Subspace::coordinate(n, l..off),
                u_tprime: Subspace::coordinate(n, l..l + m),
            };
            debug_assert!(real.preserves_form());
            Ok(real)
        }
        Family::D => Err(Error::InvalidJordanType {
            family: Family::D,
            rank: decomp.rank,
            jordan_type: decomp.jordan_type.parts().to_vec(),
        }),
    }
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
pub fn jordan_type_of(e: &RatMatrix) -> Result<Partition> {
    let n = e.rows();
    if e.cols() != n {
        return Err(Error::Shape(format!("{}x{} is not square", e.rows(), e.cols())));
    }
    let mut ranks = vec![n];
    let mut power = RatMatrix::identity(n);
    while *ranks.last().expect("nonempty") > 0 {
        if ranks.len() > n {
            return Err(Error::NotNilpotent);
        }
        power = power.try_mul(e)?;
        let r = power.rank();
        if r == *ranks.last().expect("nonempty") {
            return Err(Error::NotNilpotent);
        }
        ranks.push(r);
    }
    // Blocks of size >= k number rank(e^{k-1}) - rank(e^k).
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat(k).take(exactly));
    }
    Partition::new(parts)
}
