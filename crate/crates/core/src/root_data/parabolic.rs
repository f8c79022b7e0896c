use super::{CartanType, Family, WeylGroup};
use crate::error::{Error, Result};
use crate::exact::{rat_vec, Subspace};

/// Parabolic data attached to a subset `J` of the simple roots.
#[derive(Clone, Debug)]
pub struct ParabolicDatum {
    /// One-based simple-root indices, sorted.
    pub j: Vec<usize>,
    /// Indices into the group's element list forming `W_J`.
    pub subgroup: Vec<usize>,
    pub positive_roots: Vec<Vec<i64>>,
    /// `V^J`: the common kernel of the roots in `J` inside `V`.
    pub fixed_space: Subspace,
    /// `V_J`: the span of the roots in `J`.
    pub complement: Subspace,
    pub r: usize,
    pub s: usize,
}

pub fn parabolic_data(weyl: &WeylGroup, j: &[usize]) -> Result<ParabolicDatum> {
    let rs = weyl.root_system();
    let l = rs.rank();
    let mut j: Vec<usize> = j.to_vec();
    j.sort_unstable();
    j.dedup();
    if let Some(&bad) = j.iter().find(|&&i| i == 0 || i > l) {
        return Err(Error::IndexOutOfRange { index: bad, max: l });
    }
    let n = rs.ambient_dim();
    let roots: Vec<_> = j.iter().map(|&i| rat_vec(rs.simple_root(i))).collect();
    let complement = Subspace::span(n, roots);
    let fixed_space = rs
        .reflection_space()
        .intersection(&complement.annihilator())?;
    Ok(ParabolicDatum {
        subgroup: weyl.subgroup_generated_by(&j),
        positive_roots: rs.positive_roots_in(&j),
        fixed_space,
        complement,
        r: j.len(),
        s: l - j.len(),
        j,
    })
}

/// Connected components of `subset` in the Dynkin diagram, each paired with
/// its Cartan type, read off from the number of positive roots it spans.
pub fn dynkin_components(weyl: &WeylGroup, subset: &[usize]) -> Vec<(Vec<usize>, CartanType)> {
    let rs = weyl.root_system();
    let connected = |a: usize, b: usize| {
        super::roots::dot_i(rs.simple_root(a), rs.simple_root(b)) != 0
    };
    let mut remaining: Vec<usize> = subset.to_vec();
    remaining.sort_unstable();
    let mut out = Vec::new();
    while let Some(start) = remaining.first().copied() {
        let mut comp = vec![start];
        remaining.retain(|&x| x != start);
        let mut k = 0;
        while k < comp.len() {
            let cur = comp[k];
            let (linked, rest): (Vec<usize>, Vec<usize>) =
                remaining.iter().partition(|&&x| connected(cur, x));
            comp.extend(linked);
            remaining = rest;
            k += 1;
        }
        comp.sort_unstable();
        let size = comp.len();
        let npos = rs.positive_roots_in(&comp).len();
        let family = if npos == size * (size + 1) / 2 {
            Family::A
        } else if npos == size * size {
            Family::B
        } else {
            Family::D
        };
        let cartan = CartanType {
            family,
            rank: size,
        };
        out.push((comp, cartan));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::DEFAULT_GUARD;

    fn g(f: Family, l: usize) -> WeylGroup {
        WeylGroup::of_type(f, l, DEFAULT_GUARD).unwrap()
    }

    #[test]
    fn empty_parabolic() {
        let w = g(Family::B, 3);
        let p = parabolic_data(&w, &[]).unwrap();
        assert_eq!(p.s, 3);
        assert_eq!(p.subgroup, vec![0]);
        assert_eq!(p.fixed_space, w.root_system().reflection_space());
    }

    #[test]
    fn full_parabolic() {
        let w = g(Family::A, 3);
        let p = parabolic_data(&w, &[1, 2, 3]).unwrap();
        assert_eq!(p.s, 0);
        assert_eq!(p.fixed_space.dim(), 0);
        assert_eq!(p.subgroup.len(), w.order());
    }

    #[test]
    fn a3_single_root() {
        let w = g(Family::A, 3);
        let p = parabolic_data(&w, &[1]).unwrap();
        assert_eq!((p.r, p.s, p.subgroup.len()), (1, 2, 2));
        assert_eq!(p.fixed_space.dim(), 2);
        assert_eq!(p.complement.dim(), 1);
    }

    #[test]
    fn out_of_range_index() {
        let w = g(Family::A, 2);
        assert!(parabolic_data(&w, &[3]).is_err());
    }

    #[test]
    fn subgroup_orders_match_component_types() {
        for f in Family::ALL {
            let w = g(f, 4);
            for mask in 0u32..16 {
                let j: Vec<usize> = (1..=4).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let p = parabolic_data(&w, &j).unwrap();
                let expect: u128 = dynkin_components(&w, &j)
                    .iter()
                    .map(|(_, t)| t.weyl_order())
                    .product();
                assert_eq!(p.subgroup.len() as u128, expect, "{f}4 J={j:?}");
                assert_eq!(w.order() % p.subgroup.len(), 0);
                let sum = p.fixed_space.sum(&p.complement).unwrap();
                assert_eq!(sum, w.root_system().reflection_space());
                assert!(p
                    .fixed_space
                    .is_orthogonal_to(&p.complement, &crate::exact::RatMatrix::identity(w.root_system().ambient_dim())));
            }
        }
    }
}
