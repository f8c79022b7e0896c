use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{BiPoly, QPoly};
use crate::root_data::{CartanType, Family};
use crate::springer::Partition;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Condition1,
    Condition2,
    Delta,
    Solomon,
    TwoPower,
    HookIdentity,
    Crosscheck,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Condition1,
        Check::Condition2,
        Check::Delta,
        Check::Solomon,
        Check::TwoPower,
        Check::HookIdentity,
        Check::Crosscheck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Condition1 => "condition1",
            Check::Condition2 => "condition2",
            Check::Delta => "delta",
            Check::Solomon => "solomon",
            Check::TwoPower => "two_power",
            Check::HookIdentity => "hook_identity",
            Check::Crosscheck => "crosscheck",
        }
    }

    /// Checks that only make sense in type A.
    pub fn type_a_only(self) -> bool {
        matches!(self, Check::HookIdentity | Check::Crosscheck)
    }

    /// Everything applicable to the family, in canonical order.
    pub fn defaults(family: Family) -> Vec<Check> {
        Check::ALL
            .into_iter()
            .filter(|c| family == Family::A || !c.type_a_only())
            .collect()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Ordered by severity: a case's verdict is the most severe of its checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Inconclusive,
    Obstruction,
    NotSupported,
    Fail,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Obstruction => "obstruction",
            Verdict::NotSupported => "not_supported",
            Verdict::Fail => "fail",
        }
    }

    /// 0 pass, 3 inconclusive, 2 anything worse.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Inconclusive => 3,
            _ => 2,
        }
    }

    pub fn worst(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        verdicts.into_iter().max().unwrap_or(Verdict::Pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What to verify: one family and rank, one Jordan type or all of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseSpec {
    pub family: Family,
    pub rank: usize,
    pub jordan_type: Option<Partition>,
    pub checks: Vec<Check>,
}

impl CaseSpec {
    pub fn new(family: Family, rank: usize, jordan_type: Option<Partition>) -> CaseSpec {
        CaseSpec {
            family,
            rank,
            jordan_type,
            checks: Check::defaults(family),
        }
    }

    pub fn with_checks(mut self, checks: Vec<Check>) -> CaseSpec {
        self.checks = checks;
        self
    }

    pub fn validate(&self) -> Result<()> {
        CartanType::new(self.family, self.rank)?;
        if let Some(c) = self.checks.iter().find(|c| c.type_a_only() && self.family != Family::A) {
            return Err(Error::UnsupportedCheck {
                check: c.name().to_string(),
                family: self.family,
            });
        }
        if let Some(jt) = &self.jordan_type {
            crate::nilpotent::validate_jordan_type(self.family, self.rank, jt)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag_dims: Option<Vec<usize>>,
    /// Bivariate table (Solomon).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<BiPoly>,
    /// Per-degree values: multiplicities (two-power), or one polynomial
    /// per hook (hook identity, crosscheck).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub polys: Vec<QPoly>,
}

impl CheckOutcome {
    pub fn new(check: Check, verdict: Verdict, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome {
            check,
            verdict,
            detail: detail.into(),
            witnesses: Vec::new(),
            c: None,
            flag_dims: None,
            table: None,
            values: Vec::new(),
            polys: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub family: Family,
    pub rank: usize,
    pub jordan_type: Partition,
    pub decomposition: String,
    pub j: Vec<usize>,
    pub k: Vec<usize>,
    pub r: usize,
    pub s: usize,
    /// Empty when no coexponents are known.
    pub m: Vec<u32>,
    /// `prod_i (1 + t q^{m_i})`, absent without coexponents.
    pub product: Option<BiPoly>,
    pub checks: Vec<CheckOutcome>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl CaseReport {
    pub fn outcome(&self, check: Check) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.check == check)
    }
}

/// A batch of case reports in deterministic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub cases: Vec<CaseReport>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(cases: Vec<CaseReport>) -> Report {
        Report {
            schema: SCHEMA_VERSION,
            verdict: Verdict::worst(cases.iter().map(|c| c.verdict)),
            cases,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> std::result::Result<Report, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.name()));
        }
        assert!("bogus".parse::<Check>().is_err());
        assert_eq!(Check::defaults(Family::B).len(), 5);
        assert_eq!(Check::defaults(Family::A).len(), 7);
    }

    #[test]
    fn verdict_severity() {
        assert_eq!(Verdict::worst([]), Verdict::Pass);
        assert_eq!(Verdict::worst([Verdict::Obstruction, Verdict::NotSupported]), Verdict::NotSupported);
        assert_eq!(Verdict::worst([Verdict::Pass, Verdict::Inconclusive]), Verdict::Inconclusive);
        assert_eq!(Verdict::Inconclusive.exit_code(), 3);
        assert_eq!(Verdict::Obstruction.exit_code(), 2);
        assert_eq!(Verdict::Pass.exit_code(), 0);
    }

    #[test]
    fn spec_validation() {
        assert!(CaseSpec::new(Family::B, 2, None).validate().is_ok());
        let bad = CaseSpec::new(Family::B, 2, None).with_checks(vec![Check::HookIdentity]);
        assert!(matches!(bad.validate(), Err(Error::UnsupportedCheck { .. })));
        let jt = Partition::new(vec![2, 1]).unwrap();
        assert!(CaseSpec::new(Family::A, 3, Some(jt)).validate().is_err());
        assert!(CaseSpec::new(Family::D, 2, None).validate().is_err());
    }
}
