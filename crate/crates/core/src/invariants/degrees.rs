use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_data::{Family, WeylGroup};

/// Fundamental degrees `d_1 <= ... <= d_l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMultiset {
    degrees: Vec<u32>,
}

impl DegreeMultiset {
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Exponents `d_i - 1`.
    pub fn exponents(&self) -> Vec<u32> {
        self.degrees.iter().map(|d| d - 1).collect()
    }

    pub fn product(&self) -> u128 {
        self.degrees.iter().map(|&d| d as u128).product()
    }

    pub fn exponent_sum(&self) -> usize {
        self.degrees.iter().map(|&d| d as usize - 1).sum()
    }
}

impl fmt::Display for DegreeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Factors the length generating function `sum_w q^{l(w)}` as a product of
/// q-integers `[d_i]_q = 1 + q + ... + q^{d_i - 1}`.
///
/// Multiplying by `(1 - q)^l` turns the product into `prod (1 - q^{d_i})`;
/// the lowest nonconstant term of what remains is always `-q^{d}` for the
/// smallest remaining degree, which is then divided out.
pub fn fundamental_degrees(weyl: &WeylGroup) -> Result<DegreeMultiset> {
    let l = weyl.rank();
    let mut q: Vec<i128> = weyl.length_polynomial().iter().map(|&c| c as i128).collect();
    for _ in 0..l {
        let mut next = vec![0i128; q.len() + 1];
        for (i, &c) in q.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c;
        }
        q = next;
    }
    trim(&mut q);
    let mut degrees = Vec::with_capacity(l);
    while q.len() > 1 {
        let d = (1..q.len())
            .find(|&i| q[i] != 0)
            .expect("nonconstant polynomial has a nonzero term");
        if q[0] != 1 || q[d] >= 0 {
            return Err(Error::Factorization(format!("unexpected coefficients {q:?}")));
        }
        q = divide_by_one_minus_power(&q, d)
            .ok_or_else(|| Error::Factorization(format!("1 - q^{d} does not divide {q:?}")))?;
        degrees.push(d as u32);
    }
    if degrees.len() != l {
        return Err(Error::Factorization(format!(
            "found {} degrees for rank {l}",
            degrees.len()
        )));
    }
    Ok(DegreeMultiset { degrees })
}

fn trim(p: &mut Vec<i128>) {
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
}

fn divide_by_one_minus_power(p: &[i128], d: usize) -> Option<Vec<i128>> {
    let top = p.len() - 1;
    if top < d {
        return None;
    }
    let mut out = vec![0i128; top - d + 1];
    for k in 0..out.len() {
        out[k] = p[k] + if k >= d { out[k - d] } else { 0 };
    }
    // Multiply back and compare.
    let mut check = vec![0i128; p.len()];
    for (k, &c) in out.iter().enumerate() {
        check[k] += c;
        check[k + d] -= c;
    }
    (check == p).then(|| {
        let mut out = out;
        trim(&mut out);
        out
    })
}

/// The coexponents `m_1 <= ... <= m_s` attached to a parabolic nilpotent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoexponentVector {
    pub family: Family,
    pub values: Vec<u32>,
}

impl CoexponentVector {
    /// Closed forms: `m_i = i` in type A and `m_i = 2i - 1` in types B, C.
    /// Type D has no closed form here.
    pub fn closed_form(family: Family, s: usize) -> Option<CoexponentVector> {
        let values = match family {
            Family::A => (1..=s as u32).collect(),
            Family::B | Family::C => (1..=s as u32).map(|i| 2 * i - 1).collect(),
            Family::D => return None,
        };
        Some(CoexponentVector { family, values })
    }

    pub fn new(family: Family, mut values: Vec<u32>) -> CoexponentVector {
        values.sort_unstable();
        CoexponentVector { family, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Degrees `m_i + 1` the witnesses must have.
    pub fn degrees(&self) -> Vec<u32> {
        self.values.iter().map(|m| m + 1).collect()
    }

    pub fn degree_product(&self) -> u128 {
        self.values.iter().map(|&m| m as u128 + 1).product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::DEFAULT_GUARD;

    fn degs(f: Family, l: usize) -> Vec<u32> {
        let w = WeylGroup::of_type(f, l, DEFAULT_GUARD).unwrap();
        fundamental_degrees(&w).unwrap().degrees().to_vec()
    }

    #[test]
    fn small_cases() {
        assert_eq!(degs(Family::A, 1), vec![2]);
        assert_eq!(degs(Family::A, 2), vec![2, 3]);
        assert_eq!(degs(Family::B, 2), vec![2, 4]);
        assert_eq!(degs(Family::C, 3), vec![2, 4, 6]);
        assert_eq!(degs(Family::D, 4), vec![2, 4, 4, 6]);
        assert_eq!(degs(Family::D, 5), vec![2, 4, 5, 6, 8]);
    }

    #[test]
    fn product_and_sum() {
        for f in Family::ALL {
            for l in f.min_rank().max(2)..=5 {
                let w = WeylGroup::of_type(f, l, DEFAULT_GUARD).unwrap();
                let d = fundamental_degrees(&w).unwrap();
                assert_eq!(d.product(), w.order() as u128, "{f}{l}");
                assert_eq!(d.exponent_sum(), w.root_system().positive_roots().len());
            }
        }
    }

    #[test]
    fn division_rejects_non_factor() {
        assert!(divide_by_one_minus_power(&[1, 0, 1], 1).is_none());
        assert_eq!(divide_by_one_minus_power(&[1, 0, -1], 2), Some(vec![1]));
    }

    #[test]
    fn coexponent_closed_forms() {
        assert_eq!(CoexponentVector::closed_form(Family::A, 3).unwrap().values, vec![1, 2, 3]);
        assert_eq!(CoexponentVector::closed_form(Family::C, 3).unwrap().values, vec![1, 3, 5]);
        assert!(CoexponentVector::closed_form(Family::D, 2).is_none());
        assert_eq!(CoexponentVector::closed_form(Family::B, 2).unwrap().degree_product(), 8);
    }
}
