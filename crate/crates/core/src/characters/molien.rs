use num_traits::{One, Signed, ToPrimitive, Zero};

use super::classes::{ClassFunction, ConjugacyClasses};
use crate::error::{Error, Result};
use crate::exact::{binomial, rat, BiPoly, QPoly, Rational, TruncatedSeries};
use crate::invariants::fundamental_degrees;
use crate::root_data::{Family, WeylElement, WeylGroup};

/// `det(1 + t w)` on the reflection representation, as ascending integer
/// coefficients in `t`.
///
/// A signed cycle of length `k` and sign `e` contributes `1 - e (-t)^k`.
/// In type A the coordinate space is `V` plus the trivial line, so one
/// factor `1 + t` is divided out.
pub fn reflection_charpoly(weyl: &WeylGroup, w: &WeylElement) -> Vec<i64> {
    let mut poly = vec![1i64];
    for (k, e) in w.signed_cycles() {
        let mut factor = vec![0i64; k + 1];
        factor[0] = 1;
        let sign_k = if k % 2 == 0 { 1 } else { -1 };
        factor[k] = -(e as i64) * sign_k;
        let mut next = vec![0i64; poly.len() + k];
        for (i, &a) in poly.iter().enumerate() {
            for (j, &b) in factor.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        poly = next;
    }
    if weyl.cartan().family == Family::A {
        // Synthetic division by 1 + t.
        let mut quot = vec![0i64; poly.len() - 1];
        let mut carry = 0i64;
        for i in 0..quot.len() {
            quot[i] = poly[i] - carry;
            carry = quot[i];
        }
        debug_assert_eq!(poly[poly.len() - 1], carry, "1 + t divides det(1 + t w)");
        poly = quot;
    }
    poly
}

/// Character of `Lambda^i V`: the coefficient of `t^i` in `det(1 + t w)`.
pub fn exterior_character(weyl: &WeylGroup, classes: &ConjugacyClasses, i: usize) -> Result<ClassFunction> {
    let l = weyl.rank();
    if i > l {
        return Err(Error::ExteriorPower { i, rank: l });
    }
    ClassFunction::from_fn(weyl, classes, |w| rat(reflection_charpoly(weyl, w)[i]))
}

/// `Ind_{W_J}^W 1`, from `chi(w) = |W| |cl(w) ∩ W_J| / (|cl(w)| |W_J|)`.
pub fn induced_trivial(weyl: &WeylGroup, classes: &ConjugacyClasses, j: &[usize]) -> ClassFunction {
    let sub = weyl.subgroup_generated_by(j);
    let mut hits = vec![0usize; classes.len()];
    for &x in &sub {
        hits[classes.class_of(x)] += 1;
    }
    let order = weyl.order() as i64;
    let values = hits
        .iter()
        .enumerate()
        .map(|(c, &h)| rat(order * h as i64) / rat((classes.size(c) * sub.len()) as i64))
        .collect();
    ClassFunction::from_values(weyl, classes, values)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPowerReport {
    pub s: usize,
    /// `<Ind 1 (x) Lambda^i V, 1>` for `i = 0..=l`.
    pub per_i: Vec<Rational>,
    pub total: Rational,
    pub passed: bool,
}

/// Checks `sum_i <Ind_{W_J}^W 1 (x) Lambda^i V, 1> = 2^s` together with the
/// refinement that the `i`-th term is `binomial(s, i)`.
pub fn two_power_check(weyl: &WeylGroup, classes: &ConjugacyClasses, j: &[usize]) -> Result<TwoPowerReport> {
    let l = weyl.rank();
    let mut jj = j.to_vec();
    jj.sort_unstable();
    jj.dedup();
    let s = l - jj.len();
    let ind = induced_trivial(weyl, classes, &jj);
    let mut per_i = Vec::with_capacity(l + 1);
    for i in 0..=l {
        per_i.push(ind.tensor(&exterior_character(weyl, classes, i)?).invariants());
    }
    let total = per_i.iter().fold(Rational::zero(), |a, b| a + b);
    let refined = per_i
        .iter()
        .enumerate()
        .all(|(i, v)| *v == rat(binomial(s as u64, i as u64) as i64));
    Ok(TwoPowerReport {
        passed: refined && total == rat(1i64 << s),
        s,
        per_i,
        total,
    })
}

/// Per-class series `1 / det(1 - q w)` truncated at `order`.
fn inverse_dets(weyl: &WeylGroup, classes: &ConjugacyClasses, order: usize) -> Vec<TruncatedSeries> {
    classes
        .reps()
        .iter()
        .map(|&r| {
            let cp = reflection_charpoly(weyl, weyl.element(r));
            // det(1 - q w) is det(1 + t w) at t = -q.
            let coeffs: Vec<Rational> = cp
                .iter()
                .enumerate()
                .map(|(k, &c)| rat(if k % 2 == 0 { c } else { -c }))
                .collect();
            TruncatedSeries::from_coeffs(order, &coeffs)
                .inverse()
                .expect("constant term is 1")
        })
        .collect()
}

fn check_real_classes(weyl: &WeylGroup, classes: &ConjugacyClasses) -> Result<()> {
    for c in 0..classes.len() {
        let inv = weyl.inverse_index(classes.rep(c));
        if classes.class_of(inv) != c {
            return Err(Error::NotClassFunction(format!(
                "class {c} is not closed under inversion"
            )));
        }
    }
    Ok(())
}

/// `|W|^{-1} sum_w chi(w) / det(1 - q w)` for several characters at once.
fn molien_sums(
    weyl: &WeylGroup,
    classes: &ConjugacyClasses,
    chars: &[&ClassFunction],
    order: usize,
) -> Result<Vec<TruncatedSeries>> {
    check_real_classes(weyl, classes)?;
    let inv = inverse_dets(weyl, classes, order);
    let w_order = rat(weyl.order() as i64);
    Ok(chars
        .iter()
        .map(|chi| {
            let mut acc = TruncatedSeries::zero(order);
            for (c, series) in inv.iter().enumerate() {
                let weight = &chi.values[c] * rat(classes.size(c) as i64);
                if !weight.is_zero() {
                    acc = &acc + &series.scale(&weight);
                }
            }
            acc.scale(&(Rational::one() / &w_order))
        })
        .collect())
}

fn to_qpoly(series: &TruncatedSeries, top: usize) -> Result<QPoly> {
    let mut coeffs = Vec::with_capacity(top + 1);
    for (k, c) in series.coeffs().iter().enumerate() {
        let bad = || Error::NonIntegralSeries {
            degree: k,
            value: c.to_string(),
        };
        if k > top {
            if !c.is_zero() {
                return Err(bad());
            }
            continue;
        }
        if !c.is_integer() || c.is_negative() {
            return Err(bad());
        }
        coeffs.push(c.to_integer().to_u64().ok_or_else(bad)?);
    }
    Ok(QPoly::from_coeffs(coeffs))
}

/// Graded multiplicity of `chi` in the coinvariant algebra:
/// `prod_i (1 - q^{d_i}) |W|^{-1} sum_w chi(w) / det(1 - q w)`.
///
/// Series are carried to degree `2N + 1` (`N` the number of positive
/// roots) and every coefficient above `N` must vanish.
pub fn coinvariant_graded_multiplicity(
    weyl: &WeylGroup,
    classes: &ConjugacyClasses,
    chi: &ClassFunction,
) -> Result<QPoly> {
    Ok(graded_multiplicities(weyl, classes, &[chi])?.remove(0))
}

fn graded_multiplicities(
    weyl: &WeylGroup,
    classes: &ConjugacyClasses,
    chars: &[&ClassFunction],
) -> Result<Vec<QPoly>> {
    let n = weyl.root_system().positive_roots().len();
    let order = 2 * n + 1;
    let degrees = fundamental_degrees(weyl)?;
    let mut prefactor = TruncatedSeries::from_coeffs(order, &[rat(1)]);
    for &d in degrees.degrees() {
        let mut f = vec![Rational::zero(); d as usize + 1];
        f[0] = rat(1);
        f[d as usize] = rat(-1);
        prefactor = &prefactor * &TruncatedSeries::from_coeffs(order, &f);
    }
    molien_sums(weyl, classes, chars, order)?
        .iter()
        .map(|s| to_qpoly(&(&prefactor * s), n))
        .collect()
}

/// Dimensions of the invariant polynomials of degree `0..=max_degree`,
/// from the Molien series of the trivial character.
pub fn invariant_dimensions(weyl: &WeylGroup, classes: &ConjugacyClasses, max_degree: usize) -> Result<Vec<u64>> {
    let trivial = ClassFunction::trivial(weyl, classes);
    let series = molien_sums(weyl, classes, &[&trivial], max_degree)?.remove(0);
    Ok(to_qpoly(&series, max_degree)?
        .coeffs()
        .iter()
        .copied()
        .chain(std::iter::repeat(0))
        .take(max_degree + 1)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolomonReport {
    pub exponents: Vec<u32>,
    /// `sum_i t^i` times the graded multiplicity of `Lambda^i V`.
    pub table: BiPoly,
    /// `prod_k (1 + t q^{m_k})` over the exponents.
    pub expected: BiPoly,
    pub passed: bool,
}

pub fn solomon_check(weyl: &WeylGroup, classes: &ConjugacyClasses) -> Result<SolomonReport> {
    let l = weyl.rank();
    let chars = (0..=l)
        .map(|i| exterior_character(weyl, classes, i))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&ClassFunction> = chars.iter().collect();
    let table = BiPoly::from_rows(graded_multiplicities(weyl, classes, &refs)?);
    let exponents = fundamental_degrees(weyl)?.exponents();
    let exps: Vec<usize> = exponents.iter().map(|&e| e as usize).collect();
    let expected = BiPoly::exterior_product(&exps);
    Ok(SolomonReport {
        passed: table == expected,
        exponents,
        table,
        expected,
    })
}
