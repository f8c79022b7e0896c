use std::collections::HashMap;

use super::MultiPoly;

/// Determinant of a square matrix of polynomials. The empty matrix has
/// determinant 1.
///
/// Up to 10x10 this sums over column subsets row by row, keeping one
/// polynomial per subset of used columns. Every multiplication is then a
/// growing minor times a single (usually small) entry, which beats
/// fraction-free elimination on sparse inputs. Larger matrices fall back
/// to [`bareiss_det`].
pub fn poly_matrix_det(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix is not square");
    if n > 10 {
        return bareiss_det(m, nvars);
    }
    let mut layer: HashMap<u32, MultiPoly> = HashMap::from([(0, MultiPoly::one(nvars))]);
    for row in m {
        let mut next: HashMap<u32, MultiPoly> = HashMap::new();
        // Deterministic iteration keeps the arithmetic order fixed.
        let mut masks: Vec<u32> = layer.keys().copied().collect();
        masks.sort_unstable();
        for mask in masks {
            let minor = &layer[&mask];
            for (c, entry) in row.iter().enumerate() {
                if mask & (1 << c) != 0 || entry.is_zero() {
                    continue;
                }
                let mut term = minor * entry;
                if (mask >> (c + 1)).count_ones() % 2 == 1 {
                    term = -&term;
                }
                let key = mask | (1 << c);
                match next.get_mut(&key) {
                    Some(acc) => *acc = &*acc + &term,
                    None => {
                        next.insert(key, term);
                    }
                }
            }
        }
        next.retain(|_, p| !p.is_zero());
        layer = next;
    }
    layer
        .remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| MultiPoly::zero(nvars))
}

/// Fraction-free Bareiss elimination.
pub fn bareiss_det(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix is not square");
    if n == 0 {
        return MultiPoly::one(nvars);
    }
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut prev = MultiPoly::one(nvars);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return MultiPoly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .exact_divide(&prev)
                    .expect("same variable count")
                    .expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = m.len();
    match n {
        0 => MultiPoly::one(nvars),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = MultiPoly::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MultiPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &cofactor_det(&minor, nvars);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}
