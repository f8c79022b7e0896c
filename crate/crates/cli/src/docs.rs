use serde::{Deserialize, Serialize};
use weylcert_core::characters::{conjugacy_classes, solomon_check};
use weylcert_core::nilpotent::{jordan_types, levi_decompositions};
use weylcert_core::springer::kostka_foulkes_bar;
use weylcert_core::verify::{load_group, Verdict, VerifyConfig, SCHEMA_VERSION};
use weylcert_core::{BiPoly, CartanType, Family, Partition, QPoly, Result};

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct SolomonDoc {
    pub schema: u32,
    pub family: Family,
    pub rank: usize,
    pub exponents: Vec<u32>,
    pub table: BiPoly,
    pub expected: BiPoly,
    pub verdict: Verdict,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct KostkaDoc {
    pub schema: u32,
    pub mu: Partition,
    pub lam: Partition,
    pub polynomial: QPoly,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct OrbitRow {
    pub jordan_type: Partition,
    pub decomposition: String,
    pub j: Vec<usize>,
    pub k: Vec<usize>,
    pub r: usize,
    pub s: usize,
    pub m: Vec<u32>,
    pub supported: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct OrbitsDoc {
    pub schema: u32,
    pub family: Family,
    pub rank: usize,
    pub orbits: Vec<OrbitRow>,
}

pub fn solomon(family: Family, rank: usize, config: &VerifyConfig) -> Result<SolomonDoc> {
    let weyl = load_group(CartanType::new(family, rank)?, config)?;
    let classes = conjugacy_classes(&weyl);
    let rep = solomon_check(&weyl, &classes)?;
    Ok(SolomonDoc {
        schema: SCHEMA_VERSION,
        family,
        rank,
        exponents: rep.exponents,
        table: rep.table,
        expected: rep.expected,
        verdict: if rep.passed { Verdict::Pass } else { Verdict::Fail },
    })
}

pub fn kostka(mu: &Partition, lam: &Partition) -> Result<KostkaDoc> {
    Ok(KostkaDoc {
        schema: SCHEMA_VERSION,
        mu: mu.clone(),
        lam: lam.clone(),
        polynomial: kostka_foulkes_bar(mu, lam)?,
    })
}

pub fn orbits(family: Family, rank: usize) -> Result<OrbitsDoc> {
    let mut rows = Vec::new();
    for jt in jordan_types(family, rank)? {
        for d in levi_decompositions(family, &jt, rank)? {
            rows.push(OrbitRow {
                decomposition: d.label(),
                m: d.coexponents.as_ref().map(|m| m.values.clone()).unwrap_or_default(),
                jordan_type: d.jordan_type,
                j: d.j,
                k: d.k,
                r: d.r,
                s: d.s,
                supported: d.supported,
            });
        }
    }
    Ok(OrbitsDoc {
        schema: SCHEMA_VERSION,
        family,
        rank,
        orbits: rows,
    })
}
