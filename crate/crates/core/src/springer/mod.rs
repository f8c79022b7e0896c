//! Type A graded multiplicities through tableaux: Kostka–Foulkes
//! polynomials in the cocharge normalization, and the hook identities
//! they satisfy.

mod partition;
mod tableau;

pub use partition::Partition;
pub use tableau::{charge, cocharge, ssyt, Tableau};

use crate::characters::{coinvariant_graded_multiplicity, conjugacy_classes, exterior_character};
use crate::error::{Error, Result};
use crate::exact::QPoly;
use crate::root_data::{Family, WeylGroup, DEFAULT_GUARD};

/// `sum_T q^{cocharge(T)}` over semistandard tableaux of shape `mu` and
/// content `lam`.
pub fn kostka_foulkes_bar(mu: &Partition, lam: &Partition) -> Result<QPoly> {
    let mut out = QPoly::zero();
    for t in ssyt(mu, lam)? {
        out.add_monomial(cocharge(&t), 1);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookRow {
    pub i: usize,
    /// Kostka–Foulkes polynomial of the hook `(n - i, 1^i)`.
    pub lhs: QPoly,
    /// `e_i(q, q^2, ..., q^s)`.
    pub rhs: QPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookReport {
    pub lam: Partition,
    pub s: usize,
    pub rows: Vec<HookRow>,
    pub passed: bool,
}

/// For `n = |lam|` and `s = len(lam) - 1`, compares the hook Kostka–Foulkes
/// polynomials with `e_i(q, ..., q^s)` for every `0 <= i < n`.
pub fn hook_identity_check(lam: &Partition) -> Result<HookReport> {
    let n = lam.size();
    if n == 0 {
        return Err(Error::InvalidPartition("empty partition".into()));
    }
    let s = lam.len() - 1;
    let exps: Vec<usize> = (1..=s).collect();
    let rows = (0..n)
        .map(|i| {
            Ok(HookRow {
                i,
                lhs: kostka_foulkes_bar(&Partition::hook(n, i), lam)?,
                rhs: QPoly::elementary_in_powers(&exps, i),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HookReport {
        passed: rows.iter().all(|r| r.lhs == r.rhs),
        lam: lam.clone(),
        s,
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub n: usize,
    /// `(tableau side, Molien side)` per hook `(n - i, 1^i)`.
    pub rows: Vec<(QPoly, QPoly)>,
    pub passed: bool,
}

/// Compares the Kostka–Foulkes polynomial of each hook at content `(1^n)`
/// with the Molien graded multiplicity of `Lambda^i V` for `S_n`.
pub fn fake_degree_crosscheck(n: usize) -> Result<CrosscheckReport> {
    if !(2..=8).contains(&n) {
        return Err(Error::RankOutOfRange {
            family: Family::A,
            rank: n.saturating_sub(1),
        });
    }
    let weyl = WeylGroup::of_type(Family::A, n - 1, DEFAULT_GUARD)?;
    let classes = conjugacy_classes(&weyl);
    let column = Partition::column(n);
    let rows = (0..n)
        .map(|i| {
            let tab = kostka_foulkes_bar(&Partition::hook(n, i), &column)?;
            let chi = exterior_character(&weyl, &classes, i)?;
            let mol = coinvariant_graded_multiplicity(&weyl, &classes, &chi)?;
            Ok((tab, mol))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CrosscheckReport {
        passed: rows.iter().all(|(a, b)| a == b),
        n,
        rows,
    })
}
