use num_traits::Zero;

use super::space::ambient_lift;
use crate::error::{Error, Result};
use crate::exact::{poly_matrix_det, rat_vec, MultiPoly, Rational};
use crate::root_data::{RootSystem, WeylGroup};

/// Product of the positive roots of `Phi_K` as linear forms on the
/// coordinate space. `K` holds one-based simple-root indices.
pub fn pi_k(root_system: &RootSystem, k: &[usize]) -> MultiPoly {
    let n = root_system.ambient_dim();
    root_system
        .positive_roots_in(k)
        .iter()
        .fold(MultiPoly::one(n), |acc, b| &acc * &root_system.root_form(b))
}

/// `det(d f_i / d v_j)`: the matrix of directional derivatives of the
/// `f_i` along the vectors `v_j`. The empty determinant is 1.
pub fn delta(fs: &[MultiPoly], vk_basis: &[Vec<Rational>], nvars: usize) -> Result<MultiPoly> {
    if fs.len() != vk_basis.len() {
        return Err(Error::SizeMismatch {
            left: fs.len(),
            right: vk_basis.len(),
        });
    }
    let mut rows = Vec::with_capacity(fs.len());
    for f in fs {
        if f.nvars() != nvars {
            return Err(Error::VariableMismatch {
                left: f.nvars(),
                right: nvars,
            });
        }
        let row = vk_basis
            .iter()
            .map(|v| f.directional_derivative(v))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(poly_matrix_det(&rows, nvars))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaCertificate {
    pub delta: MultiPoly,
    pub pi_k: MultiPoly,
    /// `Delta / pi_K` when that quotient is a constant.
    pub c: Option<Rational>,
    pub skew_invariant: bool,
    pub passed: bool,
}

/// Computes `Delta` for the witnesses `fs` along the simple roots of `K`,
/// checks `w . Delta = sign(w) Delta` on every element of `W_K`, and
/// divides by `pi_K`. Passes when the quotient is a nonzero constant.
///
/// Type A chart witnesses are first lifted to `W`-invariant ambient
/// polynomials so that the whole computation happens in the coordinate
/// ring, where `W_K` acts by signed permutations.
pub fn delta_certificate(weyl: &WeylGroup, k: &[usize], fs: &[MultiPoly]) -> Result<DeltaCertificate> {
    let rs = weyl.root_system();
    let n = rs.ambient_dim();
    let mut k = k.to_vec();
    k.sort_unstable();
    let fs = fs
        .iter()
        .map(|f| ambient_lift(weyl, f))
        .collect::<Result<Vec<_>>>()?;
    let basis: Vec<Vec<Rational>> = k.iter().map(|&i| rat_vec(rs.simple_root(i))).collect();
    let d = delta(&fs, &basis, n)?;
    let pk = pi_k(rs, &k);

    let subgroup = weyl.subgroup_generated_by(&k);
    let skew_invariant = subgroup.iter().all(|&i| {
        let w = weyl.element(i);
        w.acts_by(&d, w.sign())
    });

    let c = if d.is_zero() {
        None
    } else {
        d.exact_divide(&pk)?
            .and_then(|q| q.as_constant())
            .filter(|c| !c.is_zero())
    };
    Ok(DeltaCertificate {
        passed: skew_invariant && c.is_some(),
        delta: d,
        pi_k: pk,
        c,
        skew_invariant,
    })
}
