use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{rat, rat_frac, Monomial, MultiPoly, RatMatrix, Rational};
use crate::root_data::{Family, WeylGroup};

/// Basis of the `W`-invariant homogeneous polynomials of degree `d` on `V`.
///
/// Each monomial orbit is averaged over the full element list, then the
/// averages are row-reduced. In type A the results are expressed in the
/// chart `x_1, ..., x_l` of the sum-zero hyperplane (the last coordinate is
/// eliminated). Either way the results have `l` variables.
pub fn invariant_space(weyl: &WeylGroup, d: u32) -> Result<Vec<MultiPoly>> {
    let n = weyl.root_system().ambient_dim();
    let is_a = weyl.cartan().family == Family::A;
    let out_vars = weyl.rank();
    let order = rat(weyl.order() as i64);

    let mut visited: HashSet<Monomial> = HashSet::new();
    let mut averages = Vec::new();
    for exps in compositions(d, n) {
        let m = Monomial::from_exponents(&exps);
        if visited.contains(&m) {
            continue;
        }
        let mut sum: HashMap<Monomial, i64> = HashMap::new();
        for w in weyl.elements() {
            let (img, odd) = act_on_monomial(w.targets(), w.negations(), &exps);
            visited.insert(img);
            *sum.entry(img).or_insert(0) += if odd { -1 } else { 1 };
        }
        let avg = MultiPoly::from_terms(
            n,
            sum.into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(m, c)| (m, rat(c) / &order)),
        );
        if avg.is_zero() {
            continue;
        }
        let avg = if is_a {
            avg.sum_zero_normalize().with_nvars(out_vars)?
        } else {
            avg
        };
        if !avg.is_zero() {
            averages.push(avg);
        }
    }
    Ok(row_reduce(&averages, out_vars))
}

/// All exponent vectors of total degree `d` in `n` variables, in
/// lexicographically decreasing order.
fn compositions(d: u32, n: usize) -> Vec<Vec<u32>> {
    fn go(d: u32, n: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(d - e, n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(d, n, &mut Vec::with_capacity(n), &mut out);
    out
}

fn act_on_monomial(targets: &[usize], negate: &[bool], exps: &[u32]) -> (Monomial, bool) {
    let mut img = vec![0u32; exps.len()];
    let mut odd = false;
    for (i, &e) in exps.iter().enumerate() {
        img[targets[i]] = e;
        odd ^= negate[i] && e % 2 == 1;
    }
    (Monomial::from_exponents(&img), odd)
}

/// Reduced row echelon basis of the span of `polys`.
fn row_reduce(polys: &[MultiPoly], nvars: usize) -> Vec<MultiPoly> {
    let monos: BTreeSet<Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| *m))
        .collect();
    // Leading monomials first so pivots land on them.
    let cols: Vec<Monomial> = monos.into_iter().rev().collect();
    let rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| cols.iter().map(|m| p.coeff(m)).collect())
        .collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let (r, pivots) = RatMatrix::from_rows(rows).rref();
    (0..pivots.len())
        .map(|i| {
            MultiPoly::from_terms(
                nvars,
                cols.iter()
                    .zip(r.row(i))
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (*m, c.clone())),
            )
        })
        .collect()
}

/// Whether `p` is fixed by every simple reflection (hence by `W`). Accepts
/// both ambient polynomials and, in type A, polynomials in the chart of
/// the sum-zero hyperplane.
pub fn is_invariant(weyl: &WeylGroup, p: &MultiPoly) -> bool {
    let n = weyl.root_system().ambient_dim();
    if p.nvars() == n {
        return weyl.generators().iter().all(|g| g.acts_by(p, 1));
    }
    if weyl.cartan().family != Family::A || p.nvars() != n - 1 {
        return false;
    }
    let lifted = p.with_nvars(n).expect("chart fits in ambient");
    weyl.generators().iter().all(|g| {
        g.act(&lifted)
            .sum_zero_normalize()
            .with_nvars(n - 1)
            .is_ok_and(|q| &q == p)
    })
}

/// An ambient polynomial that is `W`-invariant and restricts to `p` on `V`.
/// Ambient inputs are returned unchanged; type A chart polynomials are
/// extended by averaging over `W`.
pub fn ambient_lift(weyl: &WeylGroup, p: &MultiPoly) -> Result<MultiPoly> {
    let n = weyl.root_system().ambient_dim();
    if p.nvars() == n {
        return Ok(p.clone());
    }
    let lifted = p.with_nvars(n)?;
    let mut acc: HashMap<Monomial, Rational> = HashMap::new();
    for w in weyl.elements() {
        for (m, c) in w.act(&lifted).terms() {
            *acc.entry(*m).or_insert_with(Rational::zero) += c;
        }
    }
    let scale = rat_frac(1, weyl.order() as i64);
    Ok(MultiPoly::from_terms(
        n,
        acc.into_iter().map(|(m, c)| (m, c * &scale)),
    ))
}

/// Pulls `p` back along `y -> sum_j y_j b_j`, giving a polynomial in
/// `basis.len()` variables. A type A chart polynomial (one variable fewer
/// than the basis vectors) reads only the first coordinates.
pub fn restrict_to(p: &MultiPoly, basis: &[Vec<Rational>]) -> Result<MultiPoly> {
    let k = basis.len();
    if k == 0 {
        let c = p.terms().find(|(m, _)| m.degree() == 0).map(|(_, c)| c.clone());
        return Ok(MultiPoly::constant(0, c.unwrap_or_else(Rational::zero)));
    }
    let len = basis[0].len();
    if p.nvars() != len && p.nvars() + 1 != len {
        return Err(Error::VariableMismatch {
            left: p.nvars(),
            right: len,
        });
    }
    let rows: Vec<Vec<Rational>> = (0..p.nvars())
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    p.linear_substitute(&RatMatrix::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::elementary_symmetric;
    use crate::root_data::DEFAULT_GUARD;

    fn group(f: Family, l: usize) -> WeylGroup {
        WeylGroup::of_type(f, l, DEFAULT_GUARD).unwrap()
    }

    #[test]
    fn constants_in_degree_zero() {
        for (f, l) in [(Family::A, 2), (Family::B, 3), (Family::D, 4)] {
            let sp = invariant_space(&group(f, l), 0).unwrap();
            assert_eq!(sp.len(), 1);
            assert!(sp[0].as_constant().is_some());
        }
    }

    #[test]
    fn a2_degree_two_is_a_line() {
        let w = group(Family::A, 2);
        let sp = invariant_space(&w, 2).unwrap();
        assert_eq!(sp.len(), 1);
        assert_eq!(sp[0].nvars(), 2);
        // e_2 on the hyperplane, normalized, spans the same line.
        let e2 = elementary_symmetric(3, 2).sum_zero_normalize().with_nvars(2).unwrap();
        let ratio = e2.leading_term().unwrap().1 / sp[0].leading_term().unwrap().1;
        assert_eq!(sp[0].scale(&ratio), e2);
        assert!(invariant_space(&w, 1).unwrap().is_empty());
    }

    #[test]
    fn d4_has_no_cubic_invariants() {
        let w = group(Family::D, 4);
        assert!(invariant_space(&w, 3).unwrap().is_empty());
        // p2^2, e2(x^2) and x1 x2 x3 x4.
        assert_eq!(invariant_space(&w, 4).unwrap().len(), 3);
    }

    #[test]
    fn basis_elements_are_invariant() {
        for (f, l, d) in [(Family::A, 3, 4), (Family::B, 3, 4), (Family::C, 2, 6), (Family::D, 4, 6)] {
            let w = group(f, l);
            for p in invariant_space(&w, d).unwrap() {
                assert!(is_invariant(&w, &p), "{f}{l} degree {d}: {p}");
                assert!(p.is_homogeneous());
            }
        }
    }

    #[test]
    fn lift_restricts_back() {
        let w = group(Family::A, 3);
        for p in invariant_space(&w, 3).unwrap() {
            let lift = ambient_lift(&w, &p).unwrap();
            assert!(is_invariant(&w, &lift));
            assert_eq!(lift.sum_zero_normalize().with_nvars(3).unwrap(), p);
        }
    }

    #[test]
    fn restriction_to_a_line() {
        // x1^2 + x2^2 on the line spanned by (0, 1) is y^2.
        let p = &MultiPoly::var(2, 0).pow(2) + &MultiPoly::var(2, 1).pow(2);
        let r = restrict_to(&p, &[vec![rat(0), rat(1)]]).unwrap();
        assert_eq!(r, MultiPoly::var(1, 0).pow(2));
    }

    #[test]
    fn composition_count() {
        assert_eq!(compositions(3, 4).len(), 20);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
    }
}
