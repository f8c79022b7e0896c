use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::CoexponentVector;
use crate::root_data::{CartanType, Family};
use crate::springer::Partition;

/// How a nilpotent of a given Jordan type sits as a regular nilpotent in a
/// Levi subalgebra, with the associated index sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviDecomposition {
    pub family: Family,
    pub rank: usize,
    pub jordan_type: Partition,
    /// Block sizes: all parts in type A; one part from each pair of equal
    /// parts otherwise, weakly decreasing.
    pub lambda: Vec<usize>,
    /// Size parameter of the unpaired block (types B, C, D).
    pub m: Option<usize>,
    /// One-based simple-root indices of the Levi.
    pub j: Vec<usize>,
    pub r: usize,
    pub s: usize,
    /// `{r + 1, ..., l}`.
    pub k: Vec<usize>,
    pub coexponents: Option<CoexponentVector>,
    /// Whether the full verification pipeline applies (types A, B, C).
    pub supported: bool,
    pub note: Option<String>,
}

impl LeviDecomposition {
    pub fn cartan(&self) -> CartanType {
        CartanType {
            family: self.family,
            rank: self.rank,
        }
    }

    /// Short label such as `lambda=(2,1)` or `lambda=(1) m=1`.
    pub fn label(&self) -> String {
        let lam: Vec<String> = self.lambda.iter().map(usize::to_string).collect();
        match self.m {
            None => format!("lambda=({})", lam.join(",")),
            Some(m) => format!("lambda=({}) m={m}", lam.join(",")),
        }
    }
}

/// Checks that `jt` is the Jordan type of a nilpotent in the classical Lie
/// algebra of the given type and rank.
pub fn validate_jordan_type(family: Family, rank: usize, jt: &Partition) -> Result<()> {
    let cartan = CartanType::new(family, rank)?;
    let size_ok = jt.size() == cartan_natural_dim(cartan);
    let parity_ok = match family {
        Family::A => true,
        // Even parts come in pairs in orthogonal algebras, odd parts in
        // symplectic ones.
        Family::B | Family::D => jt.parts().iter().all(|&p| p % 2 == 1 || jt.multiplicity(p) % 2 == 0),
        Family::C => jt.parts().iter().all(|&p| p % 2 == 0 || jt.multiplicity(p) % 2 == 0),
    };
    if size_ok && parity_ok {
        Ok(())
    } else {
        Err(Error::InvalidJordanType {
            family,
            rank,
            jordan_type: jt.parts().to_vec(),
        })
    }
}

/// Dimension of the natural representation: `l + 1`, `2l + 1`, `2l`, `2l`.
pub fn cartan_natural_dim(cartan: CartanType) -> usize {
    match cartan.family {
        Family::A => cartan.rank + 1,
        Family::B => 2 * cartan.rank + 1,
        Family::C | Family::D => 2 * cartan.rank,
    }
}

/// All valid Jordan types for the family at this rank, in decreasing
/// lexicographic order.
pub fn jordan_types(family: Family, rank: usize) -> Result<Vec<Partition>> {
    let n = cartan_natural_dim(CartanType::new(family, rank)?);
    Ok(Partition::all(n)
        .into_iter()
        .filter(|p| validate_jordan_type(family, rank, p).is_ok())
        .collect())
}

/// Halves a multiset in which every part occurs an even number of times.
fn halve(parts: &[usize]) -> Option<Vec<usize>> {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    for pair in sorted.chunks(2) {
        if pair.len() != 2 || pair[0] != pair[1] {
            return None;
        }
        out.push(pair[0]);
    }
    Some(out)
}

fn remove_one(parts: &[usize], x: usize) -> Option<Vec<usize>> {
    let pos = parts.iter().position(|&p| p == x)?;
    let mut out = parts.to_vec();
    out.remove(pos);
    Some(out)
}

/// Removes the simple roots at the partial sums of `lambda`.
fn build(
    family: Family,
    rank: usize,
    jt: &Partition,
    lambda: Vec<usize>,
    m: Option<usize>,
    cuts: usize,
) -> LeviDecomposition {
    let mut removed = Vec::with_capacity(cuts);
    let mut acc = 0;
    for &p in lambda.iter().take(cuts) {
        acc += p;
        removed.push(acc);
    }
    let j: Vec<usize> = (1..=rank).filter(|i| !removed.contains(i)).collect();
    let r = j.len();
    let s = rank - r;
    LeviDecomposition {
        family,
        rank,
        jordan_type: jt.clone(),
        lambda,
        m,
        j,
        r,
        s,
        k: (r + 1..=rank).collect(),
        coexponents: CoexponentVector::closed_form(family, s),
        supported: family != Family::D,
        note: None,
    }
}

/// Every way of viewing a nilpotent of Jordan type `jt` as regular in a
/// Levi subalgebra of the shape handled here.
///
/// Type A has exactly one decomposition. In types B and C the type must
/// rearrange as `(l_1, l_1, ..., l_s, l_s, b)` with `b = 2m + 1` (B) or
/// `b = 2m` (C, where `m = 0` means no unpaired block); every choice of
/// `m` is reported, ordered by `m`. Type D uses the same pairing with an
/// unpaired `(2m - 1, 1)` for `m >= 2`; those entries are marked
/// unsupported because no flag construction is provided for them.
pub fn levi_decompositions(family: Family, jt: &Partition, rank: usize) -> Result<Vec<LeviDecomposition>> {
    validate_jordan_type(family, rank, jt)?;
    let parts = jt.parts();
    let mut out = Vec::new();
    match family {
        Family::A => {
            let cuts = parts.len() - 1;
            out.push(build(family, rank, jt, parts.to_vec(), None, cuts));
        }
        Family::B | Family::C => {
            let max_m = rank;
            for m in 0..=max_m {
                let block = if family == Family::B { 2 * m + 1 } else { 2 * m };
                let rest = if block == 0 {
                    Some(parts.to_vec())
                } else {
                    remove_one(parts, block)
                };
                if let Some(lambda) = rest.as_deref().and_then(halve) {
                    let cuts = lambda.len();
                    out.push(build(family, rank, jt, lambda, Some(m), cuts));
                }
            }
        }
        Family::D => {
            if let Some(lambda) = halve(parts) {
                let cuts = lambda.len();
                out.push(build(family, rank, jt, lambda, Some(0), cuts));
            }
            for m in 2..=rank {
                let rest = remove_one(parts, 2 * m - 1).and_then(|p| remove_one(&p, 1));
                if let Some(lambda) = rest.as_deref().and_then(halve) {
                    let cuts = lambda.len();
                    out.push(build(family, rank, jt, lambda, Some(m), cuts));
                }
            }
            for d in &mut out {
                if rank == 4 && jt.parts() == [3, 3, 1, 1] {
                    d.coexponents = Some(CoexponentVector::new(Family::D, vec![1, 2]));
                    d.note = Some(
                        "regular in a Levi of type A2; degree-3 invariants required by the \
                         coexponents do not exist"
                            .into(),
                    );
                } else {
                    d.note = Some("no closed-form coexponents or flag construction in type D".into());
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn type_a_recipe() {
        let ds = levi_decompositions(Family::A, &p(&[3, 1]), 3).unwrap();
        assert_eq!(ds.len(), 1);
        let d = &ds[0];
        assert_eq!((d.j.clone(), d.r, d.s), (vec![1, 2], 2, 1));
        assert_eq!(d.k, vec![3]);
        assert_eq!(d.coexponents.as_ref().unwrap().values, vec![1]);
        let zero = &levi_decompositions(Family::A, &p(&[1, 1, 1]), 2).unwrap()[0];
        assert_eq!((zero.r, zero.s), (0, 2));
        assert_eq!(zero.k, vec![1, 2]);
    }

    #[test]
    fn type_b_regular_and_zero() {
        let ds = levi_decompositions(Family::B, &p(&[5]), 2).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!((ds[0].lambda.clone(), ds[0].m, ds[0].s), (vec![], Some(2), 0));
        assert_eq!(ds[0].j, vec![1, 2]);
        let ds = levi_decompositions(Family::B, &p(&[1, 1, 1, 1, 1]), 2).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!((ds[0].lambda.clone(), ds[0].m, ds[0].r), (vec![1, 1], Some(0), 0));
    }

    #[test]
    fn type_b_multiple_decompositions() {
        // (3,1,1) in B2: unpaired 3 with pair (1,1), or unpaired 1 needs (3,1) paired: no.
        let ds = levi_decompositions(Family::B, &p(&[3, 1, 1]), 2).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!((ds[0].lambda.clone(), ds[0].m), (vec![1], Some(1)));
        // (3,3,1) in B3: unpaired 1 and pair (3,3).
        let ds = levi_decompositions(Family::B, &p(&[3, 3, 1]), 3).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!((ds[0].lambda.clone(), ds[0].m, ds[0].j.clone()), (vec![3], Some(0), vec![1, 2]));
        // (3,1,1,1,1) in B3: unpaired 3 with two pairs of 1, or unpaired 1 fails.
        let ds = levi_decompositions(Family::B, &p(&[3, 1, 1, 1, 1]), 3).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].lambda, vec![1, 1]);
    }

    #[test]
    fn type_c_examples() {
        let ds = levi_decompositions(Family::C, &p(&[2, 2]), 2).unwrap();
        // Pair (2,2) with m = 0, or unpaired 2 leaving a lone 2: only m = 0.
        assert_eq!(ds.len(), 1);
        assert_eq!((ds[0].lambda.clone(), ds[0].m, ds[0].s), (vec![2], Some(0), 1));
        let ds = levi_decompositions(Family::C, &p(&[2, 1, 1]), 2).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!((ds[0].lambda.clone(), ds[0].m), (vec![1], Some(1)));
        assert_eq!(ds[0].coexponents.as_ref().unwrap().values, vec![1]);
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(levi_decompositions(Family::B, &p(&[2, 2, 1]), 2).is_ok());
        assert!(levi_decompositions(Family::B, &p(&[2, 1, 1, 1]), 2).is_err());
        assert!(levi_decompositions(Family::C, &p(&[3, 1]), 2).is_err());
        assert!(levi_decompositions(Family::A, &p(&[2, 1]), 3).is_err());
    }

    #[test]
    fn d4_fixture() {
        let ds = levi_decompositions(Family::D, &p(&[3, 3, 1, 1]), 4).unwrap();
        assert_eq!(ds.len(), 1);
        let d = &ds[0];
        assert!(!d.supported);
        assert_eq!(d.j, vec![1, 2]);
        assert_eq!(d.k, vec![3, 4]);
        assert_eq!(d.coexponents.as_ref().unwrap().values, vec![1, 2]);
    }

    #[test]
    fn jordan_type_counts() {
        // Nilpotent orbits: B2 has 4, C2 has 4, C3 has 8, D4 has 10 Jordan types
        // (very even ones counted once).
        assert_eq!(jordan_types(Family::B, 2).unwrap().len(), 4);
        assert_eq!(jordan_types(Family::C, 2).unwrap().len(), 4);
        assert_eq!(jordan_types(Family::C, 3).unwrap().len(), 8);
        assert_eq!(jordan_types(Family::D, 4).unwrap().len(), 10);
    }

    #[test]
    fn j_and_k_sizes() {
        for f in [Family::A, Family::B, Family::C] {
            for l in 2..=4 {
                for jt in jordan_types(f, l).unwrap() {
                    for d in levi_decompositions(f, &jt, l).unwrap() {
                        assert_eq!(d.j.len(), d.r);
                        assert_eq!(d.k.len(), d.s);
                        assert_eq!(d.r + d.s, l);
                        assert_eq!(d.coexponents.as_ref().unwrap().len(), d.s);
                    }
                }
            }
        }
    }
}
