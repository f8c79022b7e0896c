use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use super::roots::dot_i;
use super::{CartanType, Family, RootSystem};
use crate::error::Result;
use crate::exact::{rat, MultiPoly, RatMatrix};

/// A Weyl group element as a signed permutation of the coordinates:
/// `w(e_i) = sign_i * e_{target_i}`. Type A elements never carry signs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    target: Vec<usize>,
    negate: Vec<bool>,
    length: u32,
    matrix: Vec<i8>,
}

impl WeylElement {
    pub fn identity(n: usize) -> WeylElement {
        WeylElement::from_signed(n, (0..n).collect(), vec![false; n], 0)
    }

    fn from_signed(n: usize, target: Vec<usize>, negate: Vec<bool>, length: u32) -> WeylElement {
        let mut matrix = vec![0i8; n * n];
        for (i, (&t, &neg)) in target.iter().zip(&negate).enumerate() {
            matrix[t * n + i] = if neg { -1 } else { 1 };
        }
        WeylElement {
            target,
            negate,
            length,
            matrix,
        }
    }

    /// One-based signed images: `k` means `+e_k`, `-k` means `-e_k`.
    pub fn encoding(&self) -> Vec<i32> {
        self.target
            .iter()
            .zip(&self.negate)
            .map(|(&t, &neg)| if neg { -(t as i32 + 1) } else { t as i32 + 1 })
            .collect()
    }

    pub fn from_encoding(code: &[i32]) -> Option<WeylElement> {
        let n = code.len();
        let mut seen = vec![false; n];
        let mut target = Vec::with_capacity(n);
        let mut negate = Vec::with_capacity(n);
        for &c in code {
            let t = c.unsigned_abs() as usize;
            if t == 0 || t > n || seen[t - 1] {
                return None;
            }
            seen[t - 1] = true;
            target.push(t - 1);
            negate.push(c < 0);
        }
        Some(WeylElement::from_signed(n, target, negate, 0))
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    pub fn targets(&self) -> &[usize] {
        &self.target
    }

    pub fn negations(&self) -> &[bool] {
        &self.negate
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    /// Sign character `det(w|_V) = (-1)^length`.
    pub fn sign(&self) -> i8 {
        if self.length % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Matrix entry `(row, col)`, in `{-1, 0, 1}`.
    pub fn entry(&self, row: usize, col: usize) -> i8 {
        self.matrix[row * self.dim() + col]
    }

    pub fn matrix(&self) -> RatMatrix {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| rat(self.entry(i, j) as i64)).collect())
            .collect();
        RatMatrix::from_rows(rows)
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.target[i]] = if self.negate[i] { -x } else { x };
        }
        out
    }

    /// `self * other`, acting as `self(other(v))`. Length is not tracked.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.dim();
        let mut target = vec![0; n];
        let mut negate = vec![false; n];
        for i in 0..n {
            let mid = other.target[i];
            target[i] = self.target[mid];
            negate[i] = other.negate[i] ^ self.negate[mid];
        }
        WeylElement::from_signed(n, target, negate, 0)
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.dim();
        let mut target = vec![0; n];
        let mut negate = vec![false; n];
        for i in 0..n {
            target[self.target[i]] = i;
            negate[self.target[i]] = self.negate[i];
        }
        WeylElement::from_signed(n, target, negate, self.length)
    }

    /// `(w . p)(x) = p(w^{-1} x)` for a polynomial on the coordinate space.
    pub fn act(&self, p: &MultiPoly) -> MultiPoly {
        p.signed_permute(&self.target, &self.negate)
    }

    /// Whether `w . p = sign * p`.
    pub fn acts_by(&self, p: &MultiPoly, sign: i8) -> bool {
        p.is_signed_permute_eigen(&self.target, &self.negate, sign)
    }

    /// Signed cycles `(length, product of signs)`, used by characters.
    pub fn signed_cycles(&self) -> Vec<(usize, i8)> {
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut odd = false;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                odd ^= self.negate[i];
                i = self.target[i];
                len += 1;
            }
            cycles.push((len, if odd { -1 } else { 1 }));
        }
        cycles
    }

    pub(crate) fn with_length(mut self, length: u32) -> WeylElement {
        self.length = length;
        self
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}(len {})", self.encoding(), self.length)
    }
}

/// Complete element list of a classical Weyl group.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    root_system: RootSystem,
    elements: Vec<WeylElement>,
    generators: Vec<WeylElement>,
    index: HashMap<Vec<i32>, usize>,
}

impl WeylGroup {
    /// Enumerates every element by closing the simple reflections under
    /// multiplication, then orders by length with ties broken by the
    /// signed-permutation encoding.
    pub fn enumerate(root_system: &RootSystem, guard: u128) -> Result<WeylGroup> {
        root_system.cartan().check_guard(guard)?;
        let generators = simple_reflections(root_system);
        let n = root_system.ambient_dim();
        let id = WeylElement::identity(n);
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        seen.insert(id.encoding());
        let mut found = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for s in &generators {
                let ws = w.compose(s);
                if seen.insert(ws.encoding()) {
                    found.push(ws.clone());
                    queue.push_back(ws);
                }
            }
        }
        let elements = found
            .into_iter()
            .map(|w| {
                let len = length_of(root_system, &w);
                w.with_length(len)
            })
            .collect();
        Ok(WeylGroup::from_parts(root_system.clone(), elements, generators))
    }

    pub(crate) fn from_parts(
        root_system: RootSystem,
        mut elements: Vec<WeylElement>,
        generators: Vec<WeylElement>,
    ) -> WeylGroup {
        elements.sort_by_cached_key(|w| (w.length, w.encoding()));
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.encoding(), i))
            .collect();
        WeylGroup {
            root_system,
            elements,
            generators,
            index,
        }
    }

    /// Builds the root system and enumerates its Weyl group.
    pub fn of_type(family: Family, rank: usize, guard: u128) -> Result<WeylGroup> {
        let cartan = CartanType::new(family, rank)?;
        cartan.check_guard(guard)?;
        WeylGroup::enumerate(&RootSystem::new(cartan)?, guard)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn cartan(&self) -> CartanType {
        self.root_system.cartan()
    }

    pub fn rank(&self) -> usize {
        self.root_system.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    /// Simple reflection `s_i` for one-based `i`.
    pub fn generator(&self, i: usize) -> &WeylElement {
        &self.generators[i - 1]
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    /// Position of an element in the enumeration order.
    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.encoding()).copied()
    }

    pub fn index_of_encoding(&self, code: &[i32]) -> Option<usize> {
        self.index.get(code).copied()
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].compose(&self.elements[b]);
        self.index_of(&prod).expect("group is closed")
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        self.index_of(&self.elements[a].inverse())
            .expect("group is closed")
    }

    /// `sum_w q^{length(w)}` as ascending coefficients.
    pub fn length_polynomial(&self) -> Vec<u64> {
        let top = self.elements.last().map_or(0, |w| w.length as usize);
        let mut out = vec![0u64; top + 1];
        for w in &self.elements {
            out[w.length as usize] += 1;
        }
        out
    }

    /// Indices of the subgroup generated by the given simple reflections
    /// (one-based), in enumeration order.
    pub fn subgroup_generated_by(&self, simple: &[usize]) -> Vec<usize> {
        let gens: Vec<usize> = simple
            .iter()
            .map(|&i| self.index_of(self.generator(i)).expect("generator"))
            .collect();
        let id = 0;
        let mut seen = vec![false; self.order()];
        seen[id] = true;
        let mut queue = VecDeque::from([id]);
        let mut out = vec![id];
        while let Some(w) = queue.pop_front() {
            for &g in &gens {
                let x = self.multiply(w, g);
                if !seen[x] {
                    seen[x] = true;
                    out.push(x);
                    queue.push_back(x);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

pub(crate) fn simple_reflections(rs: &RootSystem) -> Vec<WeylElement> {
    let n = rs.ambient_dim();
    rs.simple_roots()
        .iter()
        .map(|alpha| {
            let mut target = vec![0; n];
            let mut negate = vec![false; n];
            for i in 0..n {
                let mut e = vec![0i64; n];
                e[i] = 1;
                let img = super::roots::reflect(&e, alpha);
                let (pos, val) = img
                    .iter()
                    .enumerate()
                    .find(|(_, &x)| x != 0)
                    .map(|(p, &x)| (p, x))
                    .expect("nonzero image");
                assert_eq!(val.abs(), 1, "reflection is not a signed permutation");
                target[i] = pos;
                negate[i] = val < 0;
            }
            WeylElement::from_signed(n, target, negate, 1)
        })
        .collect()
}

/// Number of positive roots sent to negative roots.
pub(crate) fn length_of(rs: &RootSystem, w: &WeylElement) -> u32 {
    let rho = rs.regular_vector();
    rs.positive_roots()
        .iter()
        .filter(|b| dot_i(&w.apply(b), &rho) < 0)
        .count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::DEFAULT_GUARD;

    fn group(f: Family, l: usize) -> WeylGroup {
        WeylGroup::of_type(f, l, DEFAULT_GUARD).unwrap()
    }

    #[test]
    fn orders_match_formulas() {
        assert_eq!(group(Family::A, 2).order(), 6);
        assert_eq!(group(Family::B, 2).order(), 8);
        assert_eq!(group(Family::D, 4).order(), 192);
        for f in Family::ALL {
            for l in f.min_rank()..=4 {
                let g = group(f, l);
                assert_eq!(g.order() as u128, g.cartan().weyl_order(), "{f}{l}");
            }
        }
    }

    #[test]
    fn guard_rejects_large_groups() {
        assert!(WeylGroup::of_type(Family::B, 4, 100).is_err());
    }

    #[test]
    fn order_is_by_length_then_encoding() {
        let g = group(Family::B, 3);
        assert_eq!(g.element(0).length(), 0);
        for pair in g.elements().windows(2) {
            assert!((pair[0].length(), pair[0].encoding()) < (pair[1].length(), pair[1].encoding()));
        }
    }

    #[test]
    fn matrices_are_signed_permutations() {
        let g = group(Family::D, 4);
        for w in g.elements() {
            let m = w.matrix();
            let mt = m.transpose();
            assert_eq!(m.try_mul(&mt).unwrap(), RatMatrix::identity(4));
        }
    }

    #[test]
    fn closed_under_products_and_inverses() {
        let g = group(Family::C, 3);
        for a in 0..g.order() {
            assert!(g.index_of(&g.element(a).inverse()).is_some());
            for b in (0..g.order()).step_by(7) {
                assert!(g.index_of(&g.element(a).compose(g.element(b))).is_some());
            }
        }
    }

    #[test]
    fn elements_permute_roots() {
        for f in Family::ALL {
            let g = group(f, 3);
            let rs = g.root_system();
            for w in g.elements() {
                for b in rs.positive_roots() {
                    assert!(rs.is_root(&w.apply(b)));
                }
            }
        }
    }

    #[test]
    fn length_polynomial_a2() {
        assert_eq!(group(Family::A, 2).length_polynomial(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn action_on_polynomials_is_left_action() {
        let g = group(Family::B, 2);
        let p = &MultiPoly::var(2, 0) + &MultiPoly::var(2, 1).pow(2);
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ab = g.element(a).compose(g.element(b));
                assert_eq!(ab.act(&p), g.element(a).act(&g.element(b).act(&p)));
            }
        }
    }

    #[test]
    fn action_matches_matrix_substitution() {
        let g = group(Family::B, 2);
        let p = &(&MultiPoly::var(2, 0) * &MultiPoly::var(2, 1).pow(2)) + &MultiPoly::var(2, 0);
        for w in g.elements() {
            let via_matrix = p.linear_substitute(&w.inverse().matrix()).unwrap();
            assert_eq!(w.act(&p), via_matrix);
        }
    }
}
