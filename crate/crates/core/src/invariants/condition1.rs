use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::degrees::CoexponentVector;
use super::space::{invariant_space, is_invariant, restrict_to};
use super::SEARCH_LIMIT;
use crate::error::{Error, Result};
use crate::exact::{poly_matrix_det, rat, rat_vec, MultiPoly, Rational};
use crate::root_data::WeylGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Condition1Status {
    Pass,
    Fail,
    /// No nonzero invariant exists in the given degree.
    DegreeObstruction { degree: u32 },
    /// The coefficient grid was exhausted without finding witnesses.
    NotFound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition1Report {
    pub status: Condition1Status,
    pub witnesses: Vec<MultiPoly>,
    /// Restrictions of the witnesses to `V_K`, in coordinates along the
    /// simple roots of `K`.
    pub restrictions: Vec<MultiPoly>,
    pub degrees_ok: bool,
    pub invariant_ok: bool,
    pub jacobian_nonzero: bool,
    pub degree_product_ok: bool,
    /// Number of grid points examined by [`search_condition1`].
    pub tried: usize,
}

impl Condition1Report {
    fn blank(status: Condition1Status) -> Condition1Report {
        Condition1Report {
            status,
            witnesses: Vec::new(),
            restrictions: Vec::new(),
            degrees_ok: false,
            invariant_ok: false,
            jacobian_nonzero: false,
            degree_product_ok: false,
            tried: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Condition1Status::Pass
    }
}

fn vk_basis(weyl: &WeylGroup, k: &[usize]) -> Vec<Vec<Rational>> {
    let mut k = k.to_vec();
    k.sort_unstable();
    k.iter()
        .map(|&i| rat_vec(weyl.root_system().simple_root(i)))
        .collect()
}

fn jacobian(restrictions: &[MultiPoly]) -> MultiPoly {
    let s = restrictions.len();
    let rows: Vec<Vec<MultiPoly>> = restrictions
        .iter()
        .map(|f| (0..s).map(|j| f.derivative(j)).collect())
        .collect();
    poly_matrix_det(&rows, s)
}

/// Checks that `fs` restrict to fundamental invariants of `W_K` on `V_K`:
/// each `f_i` is `W`-invariant and homogeneous of degree `m_i + 1`, the
/// restrictions have nonzero Jacobian determinant, and
/// `prod (m_i + 1) = |W_K|`.
pub fn check_condition1(
    weyl: &WeylGroup,
    k: &[usize],
    m: &CoexponentVector,
    fs: &[MultiPoly],
) -> Result<Condition1Report> {
    if fs.len() != k.len() || m.len() != k.len() {
        return Err(Error::SizeMismatch {
            left: fs.len().max(m.len()),
            right: k.len(),
        });
    }
    let degrees_ok = fs
        .iter()
        .zip(m.degrees())
        .all(|(f, d)| f.is_homogeneous() && f.degree() == Some(d));
    let invariant_ok = fs.iter().all(|f| is_invariant(weyl, f));
    let basis = vk_basis(weyl, k);
    let restrictions = fs
        .iter()
        .map(|f| restrict_to(f, &basis))
        .collect::<Result<Vec<_>>>()?;
    let jacobian_nonzero = !jacobian(&restrictions).is_zero();
    let degree_product_ok = m.degree_product() == weyl.subgroup_generated_by(k).len() as u128;
    let all = degrees_ok && invariant_ok && jacobian_nonzero && degree_product_ok;
    Ok(Condition1Report {
        status: if all {
            Condition1Status::Pass
        } else {
            Condition1Status::Fail
        },
        witnesses: fs.to_vec(),
        restrictions,
        degrees_ok,
        invariant_ok,
        jacobian_nonzero,
        degree_product_ok,
        tried: 0,
    })
}

/// Grid coefficients in the order they are tried.
const GRID: [i64; 5] = [0, 1, -1, 2, -2];

/// Looks for witnesses among combinations of invariant-space basis
/// elements with coefficients in `{0, 1, -1, 2, -2}`, at most
/// [`SEARCH_LIMIT`] grid points. An empty invariant space in a required
/// degree is reported as a degree obstruction.
pub fn search_condition1(weyl: &WeylGroup, k: &[usize], m: &CoexponentVector) -> Result<Condition1Report> {
    if m.len() != k.len() {
        return Err(Error::SizeMismatch {
            left: m.len(),
            right: k.len(),
        });
    }
    if k.is_empty() {
        return check_condition1(weyl, k, m, &[]);
    }
    let mut spaces: BTreeMap<u32, Vec<MultiPoly>> = BTreeMap::new();
    for d in m.degrees() {
        if let std::collections::btree_map::Entry::Vacant(slot) = spaces.entry(d) {
            slot.insert(invariant_space(weyl, d)?);
        }
        if spaces[&d].is_empty() {
            return Ok(Condition1Report::blank(Condition1Status::DegreeObstruction { degree: d }));
        }
    }
    if m.degree_product() != weyl.subgroup_generated_by(k).len() as u128 {
        return Ok(Condition1Report::blank(Condition1Status::Fail));
    }

    let basis = vk_basis(weyl, k);
    let blocks: Vec<&Vec<MultiPoly>> = m.degrees().iter().map(|d| &spaces[d]).collect();
    let restricted: Vec<Vec<MultiPoly>> = blocks
        .iter()
        .map(|b| b.iter().map(|p| restrict_to(p, &basis)).collect())
        .collect::<Result<_>>()?;
    let dim: usize = blocks.iter().map(|b| b.len()).sum();
    let total = (0..dim)
        .try_fold(1usize, |acc, _| acc.checked_mul(GRID.len()))
        .map_or(SEARCH_LIMIT, |t| t.min(SEARCH_LIMIT));

    let combine = |parts: &[MultiPoly], coeffs: &[i64], nvars: usize| {
        parts
            .iter()
            .zip(coeffs)
            .filter(|(_, &c)| c != 0)
            .fold(MultiPoly::zero(nvars), |acc, (p, &c)| &acc + &p.scale(&rat(c)))
    };

    let s = k.len();
    for t in 0..total {
        let mut digits = Vec::with_capacity(dim);
        let mut rest = t;
        for _ in 0..dim {
            digits.push(GRID[rest % GRID.len()]);
            rest /= GRID.len();
        }
        let mut offset = 0;
        let mut coeff_blocks = Vec::with_capacity(s);
        for b in &blocks {
            coeff_blocks.push(&digits[offset..offset + b.len()]);
            offset += b.len();
        }
        if coeff_blocks.iter().any(|c| c.iter().all(|&x| x == 0)) {
            continue;
        }
        let restrictions: Vec<MultiPoly> = restricted
            .iter()
            .zip(&coeff_blocks)
            .map(|(r, c)| combine(r, c, s))
            .collect();
        if jacobian(&restrictions).is_zero() {
            continue;
        }
        let witnesses: Vec<MultiPoly> = blocks
            .iter()
            .zip(&coeff_blocks)
            .map(|(b, c)| combine(b, c, b[0].nvars()))
            .collect();
        let mut report = check_condition1(weyl, k, m, &witnesses)?;
        report.tried = t + 1;
        return Ok(report);
    }
    let mut report = Condition1Report::blank(Condition1Status::NotFound);
    report.tried = total;
    report.degree_product_ok = true;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{elementary_symmetric, elementary_symmetric_of};
    use crate::root_data::{Family, DEFAULT_GUARD};

    fn group(f: Family, l: usize) -> WeylGroup {
        WeylGroup::of_type(f, l, DEFAULT_GUARD).unwrap()
    }

    #[test]
    fn type_a_hook_witness() {
        let w = group(Family::A, 2);
        let m = CoexponentVector::closed_form(Family::A, 1).unwrap();
        let r = check_condition1(&w, &[2], &m, &[elementary_symmetric(3, 2)]).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn type_b_witnesses() {
        let w = group(Family::B, 3);
        let squares: Vec<MultiPoly> = (0..3).map(|i| MultiPoly::var(3, i).pow(2)).collect();
        let fs: Vec<MultiPoly> = (1..=2).map(|i| elementary_symmetric_of(&squares, i, 3)).collect();
        let m = CoexponentVector::closed_form(Family::B, 2).unwrap();
        assert!(check_condition1(&w, &[2, 3], &m, &fs).unwrap().passed());
        // Wrong order of witnesses breaks the degree check.
        let swapped = [fs[1].clone(), fs[0].clone()];
        let r = check_condition1(&w, &[2, 3], &m, &swapped).unwrap();
        assert!(!r.degrees_ok && r.status == Condition1Status::Fail);
    }

    #[test]
    fn dependent_witnesses_fail_jacobian() {
        let w = group(Family::A, 3);
        let e2 = elementary_symmetric(4, 2);
        let m = CoexponentVector::new(Family::A, vec![1, 3]);
        let r = check_condition1(&w, &[2, 3], &m, &[e2.clone(), e2.pow(2)]).unwrap();
        assert!(!r.jacobian_nonzero);
        assert!(!r.degree_product_ok);
    }

    #[test]
    fn empty_k_is_vacuous() {
        let w = group(Family::C, 2);
        let m = CoexponentVector::closed_form(Family::C, 0).unwrap();
        assert!(check_condition1(&w, &[], &m, &[]).unwrap().passed());
        assert!(search_condition1(&w, &[], &m).unwrap().passed());
    }

    #[test]
    fn d4_degree_obstruction() {
        let w = group(Family::D, 4);
        let m = CoexponentVector::new(Family::D, vec![1, 2]);
        let r = search_condition1(&w, &[3, 4], &m).unwrap();
        assert_eq!(r.status, Condition1Status::DegreeObstruction { degree: 3 });
    }

    #[test]
    fn search_finds_e2_in_a2() {
        let w = group(Family::A, 2);
        let m = CoexponentVector::closed_form(Family::A, 1).unwrap();
        let r = search_condition1(&w, &[2], &m).unwrap();
        assert!(r.passed());
        let e2 = elementary_symmetric(3, 2).sum_zero_normalize().with_nvars(2).unwrap();
        let f = &r.witnesses[0];
        let ratio = e2.leading_term().unwrap().1 / f.leading_term().unwrap().1;
        assert_eq!(f.scale(&ratio), e2);
    }

    #[test]
    fn search_in_b3() {
        let w = group(Family::B, 3);
        let m = CoexponentVector::closed_form(Family::B, 2).unwrap();
        let r = search_condition1(&w, &[2, 3], &m).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
