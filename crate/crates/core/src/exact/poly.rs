//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with `x1 > x2 > ... > xn`. The last key is therefore
//! the leading monomial, which is what [`MultiPoly::exact_divide`] reduces
//! against.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::matrix::RatMatrix;
use super::{rat, Rational, MAX_VARS};
use crate::error::{Error, Result};

/// Exponent vector of a monomial in at most [`MAX_VARS`] variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    degree: u16,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        degree: 0,
    };

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u8::try_from(e).expect("exponent exceeds 255");
            m.degree += e as u16;
        }
        m
    }

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent exceeds 255");
        }
        out.degree += other.degree;
        out
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = *other;
        for i in 0..MAX_VARS {
            out.exps[i] -= self.exps[i];
        }
        out.degree -= self.degree;
        out
    }

    fn uses_vars_beyond(&self, nvars: usize) -> bool {
        self.exps[nvars..].iter().any(|&e| e != 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self
            .exps
            .iter()
            .rposition(|&e| e != 0)
            .map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// A polynomial in `nvars` variables `x1..xn` over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> MultiPoly {
        assert!(nvars <= MAX_VARS, "too many variables");
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> MultiPoly {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn one(nvars: usize) -> MultiPoly {
        MultiPoly::constant(nvars, Rational::one())
    }

    /// The coordinate function `x_{i+1}` (zero-based index `i`).
    pub fn var(nvars: usize, i: usize) -> MultiPoly {
        assert!(i < nvars, "variable index out of range");
        let mut p = MultiPoly::zero(nvars);
        p.terms.insert(Monomial::var(i), Rational::one());
        p
    }

    /// The linear form `sum_i coeffs[i] * x_{i+1}`.
    pub fn linear_form(coeffs: &[Rational]) -> MultiPoly {
        let mut p = MultiPoly::zero(coeffs.len());
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Monomial::var(i), c.clone());
            }
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> MultiPoly
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in terms {
            assert!(!m.uses_vars_beyond(nvars), "monomial uses too many variables");
            p.add_term(m, c);
        }
        p
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term under graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .get(&Monomial::ONE)
                .cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero(self.nvars));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity((self.terms.len() * other.terms.len()).min(1 << 16));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(MultiPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Partial derivative with respect to `x_{i+1}`.
    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut dm = *m;
            dm.exps[i] -= 1;
            dm.degree -= 1;
            out.add_term(dm, c * rat(e as i64));
        }
        out
    }

    /// Directional derivative `sum_j d_j * dp/dx_j`.
    pub fn directional_derivative(&self, direction: &[Rational]) -> Result<MultiPoly> {
        if direction.len() != self.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: direction.len(),
            });
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (j, d) in direction.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            for (m, c) in self.derivative(j).terms {
                out.add_term(m, c * d);
            }
        }
        Ok(out)
    }

    /// Composes with the linear map `x = M y`: old variable `x_i` becomes
    /// `sum_j M[i][j] y_j`. The result has `M.cols()` variables.
    pub fn linear_substitute(&self, m: &RatMatrix) -> Result<MultiPoly> {
        if m.rows() != self.nvars {
            return Err(Error::Shape(format!(
                "substitution matrix has {} rows, polynomial has {} variables",
                m.rows(),
                self.nvars
            )));
        }
        let new_vars = m.cols();
        if new_vars > MAX_VARS {
            return Err(Error::TooManyVariables(new_vars));
        }
        let forms: Vec<MultiPoly> = (0..self.nvars)
            .map(|i| MultiPoly::linear_form(m.row(i)))
            .collect();
        let mut powers: Vec<Vec<MultiPoly>> = forms
            .iter()
            .map(|f| vec![MultiPoly::one(new_vars), f.clone()])
            .collect();
        let mut out = MultiPoly::zero(new_vars);
        for (mono, c) in &self.terms {
            let mut term = MultiPoly::constant(new_vars, c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = mono.exps[i] as usize;
                if e == 0 {
                    continue;
                }
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * &forms[i];
                    pw.push(next);
                }
                term = &term * &pw[e];
                if term.is_zero() {
                    break;
                }
            }
            for (m2, c2) in term.terms {
                out.add_term(m2, c2);
            }
        }
        Ok(out)
    }

    /// Substitution by a signed permutation of variables: old variable
    /// `x_i` becomes `signs[i] * y_{targets[i]}`. Much cheaper than
    /// [`MultiPoly::linear_substitute`] for Weyl group elements.
    pub fn signed_permute(&self, targets: &[usize], negate: &[bool]) -> MultiPoly {
        debug_assert_eq!(targets.len(), self.nvars);
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let (img, odd) = signed_permute_monomial(m, targets, negate);
                    (img, if odd { -c.clone() } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Checks `self` composed with a signed permutation equals `sign * self`
    /// without materializing the image.
    pub fn is_signed_permute_eigen(&self, targets: &[usize], negate: &[bool], sign: i8) -> bool {
        self.terms.iter().all(|(m, c)| {
            let (img, odd) = signed_permute_monomial(m, targets, negate);
            let flip = odd ^ (sign < 0);
            match self.terms.get(&img) {
                Some(d) => {
                    if flip {
                        *d == -c.clone()
                    } else {
                        d == c
                    }
                }
                None => false,
            }
        })
    }

    /// Exact division. Returns `Ok(None)` when `d` does not divide `self`.
    pub fn exact_divide(&self, d: &MultiPoly) -> Result<Option<MultiPoly>> {
        self.check_vars(d)?;
        let (ld, lc) = match d.leading_term() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((lp, cp)) = rem.leading_term() {
            if !ld.divides(lp) {
                return Ok(None);
            }
            let qm = ld.quotient_of(lp);
            let qc = cp / &lc;
            for (m, c) in &d.terms {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    /// Canonical representative modulo `x1 + ... + xn = 0`, obtained by
    /// substituting `xn = -(x1 + ... + x(n-1))`.
    pub fn sum_zero_normalize(&self) -> MultiPoly {
        let n = self.nvars;
        if n == 0 {
            return self.clone();
        }
        let last = n - 1;
        if self.terms.keys().all(|m| m.exps[last] == 0) {
            return self.clone();
        }
        let mut neg_sum = MultiPoly::zero(n);
        for i in 0..last {
            neg_sum.terms.insert(Monomial::var(i), -Rational::one());
        }
        let mut powers = vec![MultiPoly::one(n)];
        let mut out = MultiPoly::zero(n);
        for (m, c) in &self.terms {
            let e = m.exps[last] as usize;
            while powers.len() <= e {
                let next = &powers[powers.len() - 1] * &neg_sum;
                powers.push(next);
            }
            let mut rest = *m;
            rest.exps[last] = 0;
            rest.degree -= e as u16;
            for (pm, pc) in &powers[e].terms {
                out.add_term(rest.mul(pm), pc * c);
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.exps[i] {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Number of variables actually occurring is at most `nvars`; this
    /// reinterprets the polynomial in a different variable count.
    pub fn with_nvars(&self, nvars: usize) -> Result<MultiPoly> {
        if self.terms.keys().any(|m| m.uses_vars_beyond(nvars)) {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: nvars,
            });
        }
        Ok(MultiPoly {
            nvars,
            terms: self.terms.clone(),
        })
    }

    /// Renders with the given variable names.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (name, &e) in names.iter().zip(&m.exps[..self.nvars]) {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

fn signed_permute_monomial(m: &Monomial, targets: &[usize], negate: &[bool]) -> (Monomial, bool) {
    let mut img = Monomial::ONE;
    img.degree = m.degree;
    let mut odd = false;
    for (i, &t) in targets.iter().enumerate() {
        let e = m.exps[i];
        img.exps[t] = e;
        if negate[i] && e % 2 == 1 {
            odd = !odd;
        }
    }
    (img, odd)
}

/// Elementary symmetric polynomial `e_k` of the given polynomials.
pub fn elementary_symmetric_of(polys: &[MultiPoly], k: usize, nvars: usize) -> MultiPoly {
    // e_j of the first i inputs, built by the usual recurrence.
    let mut table = vec![MultiPoly::zero(nvars); k + 1];
    table[0] = MultiPoly::one(nvars);
    for p in polys {
        for j in (1..=k).rev() {
            let add = &table[j - 1] * p;
            table[j] = &table[j] + &add;
        }
    }
    table.swap_remove(k)
}

/// Elementary symmetric polynomial `e_k(x1, ..., xn)`.
pub fn elementary_symmetric(nvars: usize, k: usize) -> MultiPoly {
    let vars: Vec<MultiPoly> = (0..nvars).map(|i| MultiPoly::var(nvars, i)).collect();
    elementary_symmetric_of(&vars, k, nvars)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn square_of_variable() {
        let p = &x(1, 0) * &x(1, 0);
        assert_eq!(p.terms().count(), 1);
        assert_eq!(p.coeff(&Monomial::from_exponents(&[2])), rat(1));
    }

    #[test]
    fn add_negation_is_zero() {
        let p = &(&x(2, 0) * &x(2, 1)) + &x(2, 0);
        let q = p.scale(&rat(-1));
        assert!((&p + &q).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let a = &x(2, 0) - &x(2, 1);
        let b = &x(2, 0) + &x(2, 1);
        let expect = &(&x(2, 0) * &x(2, 0)) - &(&x(2, 1) * &x(2, 1));
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn mismatched_variables_error() {
        assert!(matches!(
            x(2, 0).try_add(&x(3, 0)),
            Err(Error::VariableMismatch { .. })
        ));
    }

    #[test]
    fn derivative_of_square() {
        let p = x(1, 0).pow(2);
        assert_eq!(p.derivative(0), x(1, 0).scale(&rat(2)));
        assert!(MultiPoly::constant(3, rat(5)).derivative(1).is_zero());
    }

    #[test]
    fn directional_derivative_of_e2() {
        // d/dv e2(x1,x2,x3) for v = (0,1,-1) is x3 - x2
        let e2 = elementary_symmetric(3, 2);
        let d = e2
            .directional_derivative(&[rat(0), rat(1), rat(-1)])
            .unwrap();
        assert_eq!(d, &x(3, 2) - &x(3, 1));
    }

    #[test]
    fn restriction_of_e2_to_line() {
        // x1 = 0, x2 = -t, x3 = t  gives e2 = -t^2
        let m = RatMatrix::from_i64(&[vec![0], vec![-1], vec![1]]);
        let r = elementary_symmetric(3, 2).linear_substitute(&m).unwrap();
        assert_eq!(r, x(1, 0).pow(2).scale(&rat(-1)));
    }

    #[test]
    fn transposition_negates_root() {
        let root = &x(3, 0) - &x(3, 1);
        let m = RatMatrix::from_i64(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(root.linear_substitute(&m).unwrap(), root.scale(&rat(-1)));
        let fast = root.signed_permute(&[1, 0, 2], &[false; 3]);
        assert_eq!(fast, root.scale(&rat(-1)));
        assert!(root.is_signed_permute_eigen(&[1, 0, 2], &[false; 3], -1));
    }

    #[test]
    fn identity_substitution() {
        let p = &elementary_symmetric(3, 2) + &x(3, 1).pow(3);
        assert_eq!(p.linear_substitute(&RatMatrix::identity(3)).unwrap(), p);
    }

    #[test]
    fn divide_exact_and_not() {
        let a = &x(2, 0) - &x(2, 1);
        let b = &x(2, 0) + &x(2, 1);
        let p = &a * &b;
        assert_eq!(p.exact_divide(&a).unwrap(), Some(b));
        assert_eq!(x(2, 0).exact_divide(&x(2, 1)).unwrap(), None);
        assert_eq!(
            x(2, 0).exact_divide(&MultiPoly::zero(2)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn sum_zero_normalization() {
        // e1 vanishes on the hyperplane
        assert!(elementary_symmetric(3, 1).sum_zero_normalize().is_zero());
        let e2 = elementary_symmetric(3, 2).sum_zero_normalize();
        // x1 x2 - (x1 + x2)^2
        let expect = &(&x(3, 0) * &x(3, 1)) - &(&x(3, 0) + &x(3, 1)).pow(2);
        assert_eq!(e2, expect);
    }

    #[test]
    fn display() {
        let p = &x(2, 0).pow(2).scale(&rat(3)) - &x(2, 1);
        assert_eq!(p.to_string(), "3*x1^2 - x2");
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn grlex_leading_term() {
        let p = &x(2, 1).pow(2) + &(&x(2, 0) * &x(2, 1));
        let p = &p + &x(2, 0);
        assert_eq!(*p.leading_term().unwrap().0, Monomial::from_exponents(&[1, 1]));
    }
}
