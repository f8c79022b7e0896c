//! Polynomials in `q` (and `t`) with nonnegative integer coefficients, used
//! for graded multiplicities.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Wire form shared by [`QPoly`] and [`BiPoly`]: explicit variable names and
/// ascending `(exponents, coefficient)` pairs.
#[derive(Serialize, Deserialize)]
struct PolyRecord {
    vars: Vec<String>,
    terms: Vec<(Vec<u32>, u64)>,
}

/// `sum_j c_j q^j`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<u64>,
}

impl QPoly {
    pub fn zero() -> QPoly {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> QPoly {
        QPoly::monomial(0, 1)
    }

    pub fn monomial(degree: usize, c: u64) -> QPoly {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        QPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> QPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> u64 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn add_monomial(&mut self, degree: usize, c: u64) {
        if c == 0 {
            return;
        }
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, 0);
        }
        self.coeffs[degree] += c;
    }

    /// `e_i(q^{m_1}, ..., q^{m_s})`; zero when `i > s`.
    pub fn elementary_in_powers(exponents: &[usize], i: usize) -> QPoly {
        let mut table = vec![QPoly::zero(); i + 1];
        table[0] = QPoly::one();
        for &m in exponents {
            let qm = QPoly::monomial(m, 1);
            for j in (1..=i).rev() {
                let add = &table[j - 1] * &qm;
                table[j] = &table[j] + &add;
            }
        }
        table.swap_remove(i)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (j, &c) in rhs.coeffs.iter().enumerate() {
            out.add_monomial(j, c);
        }
        out
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

fn fmt_term(out: &mut String, c: u64, var_part: &str) {
    if !out.is_empty() {
        out.push_str(" + ");
    }
    if var_part.is_empty() {
        out.push_str(&c.to_string());
    } else if c == 1 {
        out.push_str(var_part);
    } else {
        out.push_str(&format!("{c}*{var_part}"));
    }
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                fmt_term(&mut out, c, &power("q", j));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRecord {
            vars: vec!["q".into()],
            terms: self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(j, &c)| (vec![j as u32], c))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = PolyRecord::deserialize(d)?;
        if rec.vars != ["q"] {
            return Err(serde::de::Error::custom("expected vars [\"q\"]"));
        }
        let mut p = QPoly::zero();
        for (e, c) in rec.terms {
            if e.len() != 1 {
                return Err(serde::de::Error::custom("expected one exponent per term"));
            }
            p.add_monomial(e[0] as usize, c);
        }
        Ok(p)
    }
}

/// `sum_{i,j} c_{ij} t^i q^j`, stored as one [`QPoly`] per power of `t`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    rows: Vec<QPoly>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly { rows: Vec::new() }
    }

    pub fn one() -> BiPoly {
        BiPoly::from_rows(vec![QPoly::one()])
    }

    pub fn from_rows(mut rows: Vec<QPoly>) -> BiPoly {
        while rows.last().is_some_and(QPoly::is_zero) {
            rows.pop();
        }
        BiPoly { rows }
    }

    /// `prod_k (1 + t q^{m_k})`.
    pub fn exterior_product(exponents: &[usize]) -> BiPoly {
        exponents.iter().fold(BiPoly::one(), |acc, &m| {
            let factor = BiPoly::from_rows(vec![QPoly::one(), QPoly::monomial(m, 1)]);
            &acc * &factor
        })
    }

    pub fn t_coefficient(&self, i: usize) -> QPoly {
        self.rows.get(i).cloned().unwrap_or_default()
    }

    pub fn rows(&self) -> &[QPoly] {
        &self.rows
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.rows.len().max(rhs.rows.len());
        BiPoly::from_rows(
            (0..n)
                .map(|i| &self.t_coefficient(i) + &rhs.t_coefficient(i))
                .collect(),
        )
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.rows.is_empty() || rhs.rows.is_empty() {
            return BiPoly::zero();
        }
        let mut rows = vec![QPoly::zero(); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in rhs.rows.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        BiPoly::from_rows(rows)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &c) in row.coeffs().iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let vars: Vec<String> = [power("t", i), power("q", j)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect();
                fmt_term(&mut out, c, &vars.join("*"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut terms = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &c) in row.coeffs().iter().enumerate() {
                if c != 0 {
                    terms.push((vec![i as u32, j as u32], c));
                }
            }
        }
        PolyRecord {
            vars: vec!["t".into(), "q".into()],
            terms,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = PolyRecord::deserialize(d)?;
        if rec.vars != ["t", "q"] {
            return Err(serde::de::Error::custom("expected vars [\"t\", \"q\"]"));
        }
        let mut rows: Vec<QPoly> = Vec::new();
        for (e, c) in rec.terms {
            if e.len() != 2 {
                return Err(serde::de::Error::custom("expected two exponents per term"));
            }
            let i = e[0] as usize;
            if rows.len() <= i {
                rows.resize(i + 1, QPoly::zero());
            }
            rows[i].add_monomial(e[1] as usize, c);
        }
        Ok(BiPoly::from_rows(rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_in_powers_matches_hand_values() {
        // e_2(q, q^2, q^3) = q^3 + q^4 + q^5
        assert_eq!(
            QPoly::elementary_in_powers(&[1, 2, 3], 2),
            QPoly::from_coeffs(vec![0, 0, 0, 1, 1, 1])
        );
        assert!(QPoly::elementary_in_powers(&[1], 2).is_zero());
        assert_eq!(QPoly::elementary_in_powers(&[], 0), QPoly::one());
    }

    #[test]
    fn exterior_product_and_wire_format() {
        let p = BiPoly::exterior_product(&[1]);
        assert_eq!(p.to_string(), "1 + t*q");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"vars":["t","q"],"terms":[[[0,0],1],[[1,1],1]]}"#);
        let back: BiPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn qpoly_display() {
        assert_eq!(QPoly::from_coeffs(vec![0, 1, 1]).to_string(), "q + q^2");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_coeffs(vec![2]).to_string(), "2");
    }
}
