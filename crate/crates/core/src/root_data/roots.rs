use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::{CartanType, Family};
use crate::error::Result;
use crate::exact::{rat_vec, MultiPoly, RatMatrix, Rational, Subspace};

/// A classical root system in the standard coordinates `x_1, ..., x_n`:
/// `alpha_i = x_i - x_{i+1}` for `i < l`, and the last simple root
/// `x_l - x_{l+1}` (A), `x_l` (B), `2 x_l` (C) or `x_{l-1} + x_l` (D).
/// Type A lives on the hyperplane `x_1 + ... + x_{l+1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    cartan: CartanType,
    simple_roots: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(cartan: CartanType) -> Result<RootSystem> {
        let n = cartan.ambient_dim();
        let l = cartan.rank;
        let unit = |i: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        };
        let diff = |i: usize, j: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[j] = -1;
            v
        };
        let mut simple: Vec<Vec<i64>> = (0..l - 1).map(|i| diff(i, i + 1)).collect();
        simple.push(match cartan.family {
            Family::A => diff(l - 1, l),
            Family::B => unit(l - 1),
            Family::C => unit(l - 1).into_iter().map(|x| 2 * x).collect(),
            Family::D => {
                let mut v = unit(l - 1);
                v[l - 2] = 1;
                v
            }
        });

        // Close the simple roots under the simple reflections.
        let mut all: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut frontier: Vec<Vec<i64>> = simple.clone();
        while let Some(beta) = frontier.pop() {
            for alpha in &simple {
                let img = reflect(&beta, alpha);
                if all.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        let rho = regular_vector(n);
        let mut positive: Vec<Vec<i64>> = all
            .into_iter()
            .filter(|b| dot_i(b, &rho) > 0)
            .collect();

        let mut rs = RootSystem {
            cartan,
            simple_roots: simple,
            positive_roots: Vec::new(),
        };
        positive.sort_by_key(|b| (rs.height_unchecked(b), std::cmp::Reverse(b.clone())));
        rs.positive_roots = positive;
        Ok(rs)
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.cartan.ambient_dim()
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    /// Simple root `alpha_i` for one-based `i`.
    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.simple_roots[i - 1]
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// The regular vector `(N, N-1, ..., 1)` used to decide positivity.
    pub fn regular_vector(&self) -> Vec<i64> {
        regular_vector(self.ambient_dim())
    }

    pub fn is_positive(&self, v: &[i64]) -> bool {
        dot_i(v, &self.regular_vector()) > 0
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.positive_roots.iter().any(|b| b == v || *b == neg)
    }

    /// Coordinates of `v` in the basis of simple roots.
    pub fn simple_coordinates(&self, v: &[i64]) -> Option<Vec<Rational>> {
        let n = self.ambient_dim();
        let l = self.rank();
        let mut cols: Vec<Vec<Rational>> = self.simple_roots.iter().map(|a| rat_vec(a)).collect();
        cols.push(rat_vec(v));
        let m = RatMatrix::from_columns(n, &cols);
        let (r, pivots) = m.rref();
        if pivots.contains(&l) {
            return None;
        }
        let mut out = vec![Rational::zero(); l];
        for (row, &p) in pivots.iter().enumerate() {
            out[p] = r[(row, l)].clone();
        }
        Some(out)
    }

    fn height_unchecked(&self, v: &[i64]) -> Rational {
        self.simple_coordinates(v)
            .expect("roots lie in the span of the simple roots")
            .into_iter()
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn height(&self, v: &[i64]) -> Option<Rational> {
        self.simple_coordinates(v)
            .map(|c| c.into_iter().fold(Rational::zero(), |a, b| a + b))
    }

    /// Positive roots whose simple-root support lies in `subset` (one-based).
    pub fn positive_roots_in(&self, subset: &[usize]) -> Vec<Vec<i64>> {
        self.positive_roots
            .iter()
            .filter(|b| {
                let c = self.simple_coordinates(b).expect("root");
                c.iter()
                    .enumerate()
                    .all(|(i, x)| x.is_zero() || subset.contains(&(i + 1)))
            })
            .cloned()
            .collect()
    }

    /// The reflection representation `V` inside the coordinate space:
    /// the sum-zero hyperplane for type A, everything otherwise.
    pub fn reflection_space(&self) -> Subspace {
        Subspace::span(
            self.ambient_dim(),
            self.simple_roots.iter().map(|a| rat_vec(a)).collect(),
        )
    }

    /// A root as a linear form on the coordinate space.
    pub fn root_form(&self, v: &[i64]) -> MultiPoly {
        MultiPoly::linear_form(&rat_vec(v))
    }

    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut out = self.positive_roots.clone();
        out.extend(
            self.positive_roots
                .iter()
                .map(|b| b.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        out
    }

    /// Whether every simple-root coordinate of `v` is a nonnegative integer.
    pub fn is_nonnegative_integral_combination(&self, v: &[i64]) -> bool {
        self.simple_coordinates(v).is_some_and(|c| {
            c.iter().all(|x| x.is_integer() && !x.is_negative())
        })
    }
}

pub(crate) fn regular_vector(n: usize) -> Vec<i64> {
    (0..n).map(|i| (n - i) as i64).collect()
}

pub(crate) fn dot_i(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `s_alpha(beta) = beta - 2 (beta, alpha) / (alpha, alpha) alpha`.
pub(crate) fn reflect(beta: &[i64], alpha: &[i64]) -> Vec<i64> {
    let num = 2 * dot_i(beta, alpha);
    let den = dot_i(alpha, alpha);
    assert_eq!(num % den, 0, "non-crystallographic reflection");
    let k = num / den;
    beta.iter().zip(alpha).map(|(b, a)| b - k * a).collect()
}
