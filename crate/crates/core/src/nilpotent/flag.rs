use serde::{Deserialize, Serialize};

use super::levi::LeviDecomposition;
use super::realize::{jordan_type_of, NilpotentRealization};
use crate::error::Result;
use crate::exact::{RatMatrix, Subspace};
use crate::root_data::Family;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagCheck {
    pub name: String,
    pub passed: bool,
}

/// Evidence that `U_1 < ... < U_r` is an `e`-stable isotropic flag with
/// the required terminal conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagCertificate {
    pub dims: Vec<usize>,
    pub checks: Vec<FlagCheck>,
    /// Name of the first failed check.
    pub failed_step: Option<String>,
    pub passed: bool,
}

/// Builds `U_r` and a full flag inside it, then checks every property.
///
/// `U_r = e(C^N)` in type A and `e(U) + U'''` otherwise. The flag is read
/// off the kernel filtration `U_r ∩ ker e^k`: each step extends a basis of
/// the previous level, so `e U_i` lands in `U_{i-1}`.
pub fn condition2_certificate(real: &NilpotentRealization, decomp: &LeviDecomposition) -> Result<FlagCertificate> {
    let n = real.n;
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool| {
        checks.push(FlagCheck {
            name: name.to_string(),
            passed,
        })
    };

    push("jordan_type", jordan_type_of(&real.e)? == decomp.jordan_type);
    push("preserves_form", real.preserves_form());

    let full = Subspace::full(n);
    let u_r = match real.family {
        Family::A => full.image_under(&real.e)?,
        _ => real.u.image_under(&real.e)?.sum(&real.u_tprime)?,
    };
    push("dim_u_r", u_r.dim() == decomp.r);

    let flag = kernel_filtration(&u_r, &real.e)?;
    let dims: Vec<usize> = flag.iter().map(Subspace::dim).collect();
    push("dims", dims.iter().enumerate().all(|(i, &d)| d == i + 1));
    push("nested", flag.windows(2).all(|w| w[1].contains_subspace(&w[0])));
    let mut stable = true;
    for i in 0..flag.len() {
        let image = flag[i].image_under(&real.e)?;
        let prev = if i == 0 { Subspace::zero(n) } else { flag[i - 1].clone() };
        stable &= prev.contains_subspace(&image);
    }
    push("e_stable", stable);
    push("top_is_u_r", flag.last().map_or(u_r.dim() == 0, |top| *top == u_r));

    match (&real.form, real.family) {
        (None, _) => {
            push("contains_image", u_r.contains_subspace(&full.image_under(&real.e)?));
        }
        (Some(b), family) => {
            push("decomposition_isotropic", real.u.is_isotropic(b) && real.u_prime.is_isotropic(b));
            push(
                "decomposition_orthogonal",
                real.u_dprime.is_orthogonal_to(&real.u, b) && real.u_dprime.is_orthogonal_to(&real.u_prime, b),
            );
            push("isotropic", u_r.is_isotropic(b));
            let perp = u_r.perp(b)?;
            let e_perp = perp.image_under(&real.e)?;
            let ker_e = real.e.kernel();
            let ker_on_u_prime = real.u_prime.intersection(&ker_e)?;
            match family {
                Family::B => {
                    push("e_perp_equals_u_r", e_perp == u_r);
                    let pre = real.u_tprime.preimage_under(&real.e)?.intersection(&real.u_dprime)?;
                    let expected = real.u.sum(&ker_on_u_prime)?.sum(&pre)?;
                    push("perp_shape", perp == expected);
                }
                _ => {
                    push("e_perp_in_u_r", u_r.contains_subspace(&e_perp));
                    let expected = real.u.sum(&ker_on_u_prime)?.sum(&real.u_tprime)?;
                    push("perp_shape", perp == expected);
                }
            }
        }
    }

    let failed_step = checks.iter().find(|c| !c.passed).map(|c| c.name.clone());
    Ok(FlagCertificate {
        dims,
        passed: failed_step.is_none(),
        failed_step,
        checks,
    })
}

/// `U_1 < ... < U_d` with `d = dim V`, adding basis vectors of
/// `V ∩ ker e^k` for `k = 1, 2, ...` one at a time.
fn kernel_filtration(v: &Subspace, e: &RatMatrix) -> Result<Vec<Subspace>> {
    let n = v.ambient();
    let mut flag = Vec::with_capacity(v.dim());
    let mut current = Subspace::zero(n);
    let mut power = e.clone();
    while current.dim() < v.dim() {
        let level = v.intersection(&power.kernel())?;
        for b in level.basis() {
            if !current.contains(b) {
                current = current.sum(&Subspace::span(n, vec![b.clone()]))?;
                flag.push(current.clone());
            }
        }
        if power.is_zero() {
            break;
        }
        power = power.try_mul(e)?;
    }
    Ok(flag)
}
