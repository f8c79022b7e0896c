use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;

use super::case::{CaseReport, CaseSpec, Check, CheckOutcome, Report, Verdict};
use crate::characters::{conjugacy_classes, solomon_check, two_power_check, ConjugacyClasses, SolomonReport};
use crate::error::Result;
use crate::exact::{elementary_symmetric, elementary_symmetric_of, BiPoly, MultiPoly};
use crate::invariants::{check_condition1, delta_certificate, search_condition1, Condition1Status};
use crate::nilpotent::{condition2_certificate, jordan_types, levi_decompositions, realize, LeviDecomposition};
use crate::root_data::cache::load_or_enumerate;
use crate::root_data::{CartanType, Family, WeylGroup, DEFAULT_GUARD};
use crate::springer::{fake_degree_crosscheck, hook_identity_check, CrosscheckReport, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub guard: u128,
    pub cache_dir: Option<PathBuf>,
    /// Record per-case wall time. Off by default so reports are
    /// reproducible byte for byte.
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            guard: DEFAULT_GUARD,
            cache_dir: None,
            timing: false,
        }
    }
}

pub fn load_group(cartan: CartanType, config: &VerifyConfig) -> Result<WeylGroup> {
    match &config.cache_dir {
        Some(dir) => load_or_enumerate(cartan, dir, config.guard),
        None => WeylGroup::of_type(cartan.family, cartan.rank, config.guard),
    }
}

/// Per-group data shared by every case of that group.
struct GroupContext {
    weyl: WeylGroup,
    classes: ConjugacyClasses,
    solomon: Option<SolomonReport>,
    /// `None` when not requested; `Some(None)` when out of range.
    crosscheck: Option<Option<CrosscheckReport>>,
}

enum Case<'a> {
    Decomposed(&'a CaseSpec, LeviDecomposition),
    Undecomposable(&'a CaseSpec, Partition),
}

/// The witnesses written down in closed form: `e_{i+1}(x_1, ..., x_{l+1})`
/// in type A and `e_i(x_1^2, ..., x_l^2)` in types B and C.
pub fn closed_form_witnesses(family: Family, rank: usize, s: usize) -> Option<Vec<MultiPoly>> {
    match family {
        Family::A => Some((1..=s).map(|i| elementary_symmetric(rank + 1, i + 1)).collect()),
        Family::B | Family::C => {
            let squares: Vec<MultiPoly> = (0..rank).map(|i| MultiPoly::var(rank, i).pow(2)).collect();
            Some((1..=s).map(|i| elementary_symmetric_of(&squares, i, rank)).collect())
        }
        Family::D => None,
    }
}

/// Runs every requested check on every decomposition selected by the
/// specs. Cases run in parallel on the current rayon pool; the report
/// keeps spec order, then Jordan types in decreasing lexicographic order,
/// then decompositions by `m`.
pub fn run_cases(specs: &[CaseSpec], config: &VerifyConfig) -> Result<Report> {
    let mut cases = Vec::new();
    let mut groups: BTreeMap<(Family, usize), Vec<Check>> = BTreeMap::new();
    for spec in specs {
        spec.validate()?;
        let needed = groups.entry((spec.family, spec.rank)).or_default();
        needed.extend(spec.checks.iter().copied());
        let types = match &spec.jordan_type {
            Some(jt) => vec![jt.clone()],
            None => jordan_types(spec.family, spec.rank)?,
        };
        for jt in types {
            let ds = levi_decompositions(spec.family, &jt, spec.rank)?;
            if ds.is_empty() {
                if spec.jordan_type.is_some() {
                    cases.push(Case::Undecomposable(spec, jt));
                }
                continue;
            }
            cases.extend(ds.into_iter().map(|d| Case::Decomposed(spec, d)));
        }
    }

    let contexts = groups
        .into_iter()
        .map(|((family, rank), checks)| {
            let weyl = load_group(CartanType::new(family, rank)?, config)?;
            let classes = conjugacy_classes(&weyl);
            let solomon = if checks.contains(&Check::Solomon) {
                Some(solomon_check(&weyl, &classes)?)
            } else {
                None
            };
            let crosscheck = if checks.contains(&Check::Crosscheck) {
                Some(fake_degree_crosscheck(rank + 1).ok())
            } else {
                None
            };
            let ctx = GroupContext {
                weyl,
                classes,
                solomon,
                crosscheck,
            };
            Ok(((family, rank), ctx))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;

    let reports = cases
        .par_iter()
        .map(|case| {
            let start = Instant::now();
            let mut report = match case {
                Case::Decomposed(spec, d) => run_decomposition(spec, d, &contexts[&(spec.family, spec.rank)])?,
                Case::Undecomposable(spec, jt) => undecomposable(spec, jt),
            };
            if config.timing {
                report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
            }
            Ok(report)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(reports))
}

fn undecomposable(spec: &CaseSpec, jt: &Partition) -> CaseReport {
    let checks: Vec<CheckOutcome> = spec
        .checks
        .iter()
        .map(|&c| CheckOutcome::new(c, Verdict::NotSupported, "Jordan type is not regular in a Levi of the handled shape"))
        .collect();
    CaseReport {
        family: spec.family,
        rank: spec.rank,
        jordan_type: jt.clone(),
        decomposition: "none".into(),
        j: Vec::new(),
        k: Vec::new(),
        r: 0,
        s: 0,
        m: Vec::new(),
        product: None,
        checks,
        verdict: Verdict::NotSupported,
        wall_time_ms: None,
    }
}

fn run_decomposition(spec: &CaseSpec, d: &LeviDecomposition, ctx: &GroupContext) -> Result<CaseReport> {
    let product = d.coexponents.as_ref().map(|m| {
        let exps: Vec<usize> = m.values.iter().map(|&x| x as usize).collect();
        BiPoly::exterior_product(&exps)
    });
    let mut witnesses: Option<Vec<MultiPoly>> = None;
    let mut checks = Vec::with_capacity(spec.checks.len());
    let mut requested = spec.checks.clone();
    requested.sort_unstable();
    requested.dedup();
    for check in requested {
        let outcome = match check {
            Check::Condition1 => {
                let (outcome, found) = condition1(ctx, d)?;
                witnesses = found;
                outcome
            }
            Check::Condition2 => condition2(d)?,
            Check::Delta => {
                if witnesses.is_none() && !spec.checks.contains(&Check::Condition1) {
                    witnesses = condition1(ctx, d)?.1;
                }
                delta_check(ctx, d, witnesses.as_deref())?
            }
            Check::Solomon => solomon(ctx, d, product.as_ref()),
            Check::TwoPower => {
                let rep = two_power_check(&ctx.weyl, &ctx.classes, &d.j)?;
                let mut o = CheckOutcome::new(
                    check,
                    if rep.passed { Verdict::Pass } else { Verdict::Fail },
                    format!("total {} against 2^{}", rep.total, rep.s),
                );
                o.values = rep.per_i.iter().map(ToString::to_string).collect();
                o
            }
            Check::HookIdentity => {
                let rep = hook_identity_check(&d.jordan_type)?;
                let mut o = CheckOutcome::new(
                    check,
                    if rep.passed { Verdict::Pass } else { Verdict::Fail },
                    format!("{} hooks against e_i(q, ..., q^{})", rep.rows.len(), rep.s),
                );
                o.polys = rep.rows.into_iter().map(|r| r.lhs).collect();
                o
            }
            Check::Crosscheck => match ctx.crosscheck.as_ref().and_then(Option::as_ref) {
                Some(rep) => {
                    let mut o = CheckOutcome::new(
                        check,
                        if rep.passed { Verdict::Pass } else { Verdict::Fail },
                        format!("tableaux against Molien for n = {}", rep.n),
                    );
                    o.polys = rep.rows.iter().map(|(a, _)| a.clone()).collect();
                    o
                }
                None => CheckOutcome::new(check, Verdict::NotSupported, "crosscheck covers 2 <= n <= 8"),
            },
        };
        checks.push(outcome);
    }
    Ok(CaseReport {
        family: d.family,
        rank: d.rank,
        jordan_type: d.jordan_type.clone(),
        decomposition: d.label(),
        j: d.j.clone(),
        k: d.k.clone(),
        r: d.r,
        s: d.s,
        m: d.coexponents.as_ref().map(|m| m.values.clone()).unwrap_or_default(),
        product,
        verdict: Verdict::worst(checks.iter().map(|c| c.verdict)),
        checks,
        wall_time_ms: None,
    })
}

/// Closed-form witnesses first, then the grid search.
fn condition1(ctx: &GroupContext, d: &LeviDecomposition) -> Result<(CheckOutcome, Option<Vec<MultiPoly>>)> {
    let Some(m) = &d.coexponents else {
        return Ok((
            CheckOutcome::new(Check::Condition1, Verdict::NotSupported, "no coexponents known"),
            None,
        ));
    };
    let mut detail = "closed-form witnesses";
    if let Some(fs) = closed_form_witnesses(d.family, d.rank, d.s) {
        let rep = check_condition1(&ctx.weyl, &d.k, m, &fs)?;
        if rep.passed() {
            let mut o = CheckOutcome::new(Check::Condition1, Verdict::Pass, detail);
            o.witnesses = fs.iter().map(ToString::to_string).collect();
            return Ok((o, Some(fs)));
        }
        detail = "closed-form witnesses failed; found by search";
    } else {
        detail = "found by search";
    }
    let rep = search_condition1(&ctx.weyl, &d.k, m)?;
    let (verdict, text) = match rep.status {
        Condition1Status::Pass => (Verdict::Pass, detail.to_string()),
        Condition1Status::Fail => (Verdict::Fail, "no fundamental invariants of W_K in these degrees".to_string()),
        Condition1Status::DegreeObstruction { degree } => {
            (Verdict::Obstruction, format!("no W-invariant polynomials of degree {degree}"))
        }
        Condition1Status::NotFound => (Verdict::Inconclusive, format!("search exhausted after {} points", rep.tried)),
    };
    let mut o = CheckOutcome::new(Check::Condition1, verdict, text);
    o.witnesses = rep.witnesses.iter().map(ToString::to_string).collect();
    let found = rep.passed().then_some(rep.witnesses);
    Ok((o, found))
}

fn condition2(d: &LeviDecomposition) -> Result<CheckOutcome> {
    if !d.supported {
        return Ok(CheckOutcome::new(
            Check::Condition2,
            Verdict::NotSupported,
            "no flag construction for this type",
        ));
    }
    let real = realize(d)?;
    let cert = condition2_certificate(&real, d)?;
    let detail = match &cert.failed_step {
        None => format!("{} checks", cert.checks.len()),
        Some(step) => format!("failed at {step}"),
    };
    let mut o = CheckOutcome::new(
        Check::Condition2,
        if cert.passed { Verdict::Pass } else { Verdict::Fail },
        detail,
    );
    o.flag_dims = Some(cert.dims);
    Ok(o)
}

fn delta_check(ctx: &GroupContext, d: &LeviDecomposition, fs: Option<&[MultiPoly]>) -> Result<CheckOutcome> {
    let Some(fs) = fs else {
        return Ok(CheckOutcome::new(
            Check::Delta,
            Verdict::NotSupported,
            "needs witnesses from condition1",
        ));
    };
    let cert = delta_certificate(&ctx.weyl, &d.k, fs)?;
    let detail = if cert.passed {
        format!("Delta = c * pi_K, {} terms", cert.delta.num_terms())
    } else if !cert.skew_invariant {
        "Delta is not skew-invariant under W_K".to_string()
    } else {
        "Delta is not a nonzero multiple of pi_K".to_string()
    };
    let mut o = CheckOutcome::new(
        Check::Delta,
        if cert.passed { Verdict::Pass } else { Verdict::Fail },
        detail,
    );
    o.c = cert.c.map(|c| c.to_string());
    Ok(o)
}

/// The Solomon table of the group; at `r = 0` it must also equal the
/// product attached to the decomposition.
fn solomon(ctx: &GroupContext, d: &LeviDecomposition, product: Option<&BiPoly>) -> CheckOutcome {
    let rep = ctx.solomon.as_ref().expect("computed when requested");
    let mut passed = rep.passed;
    let mut detail = format!("exponents {:?}", rep.exponents);
    if d.r == 0 {
        let agrees = product == Some(&rep.table);
        passed &= agrees;
        detail.push_str(if agrees {
            "; equals the product for this orbit"
        } else {
            "; differs from the product for this orbit"
        });
    }
    let mut o = CheckOutcome::new(Check::Solomon, if passed { Verdict::Pass } else { Verdict::Fail }, detail);
    o.table = Some(rep.table.clone());
    o
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(f: Family, l: usize, parts: &[usize]) -> Report {
        let jt = Partition::new(parts.to_vec()).unwrap();
        run_cases(&[CaseSpec::new(f, l, Some(jt))], &VerifyConfig::default()).unwrap()
    }

    #[test]
    fn a3_three_one_passes() {
        let rep = one(Family::A, 3, &[3, 1]);
        assert_eq!(rep.cases.len(), 1);
        let c = &rep.cases[0];
        assert_eq!(c.verdict, Verdict::Pass, "{c:#?}");
        assert_eq!(c.checks.len(), 7);
        assert_eq!(c.m, vec![1]);
        assert_eq!(c.product.as_ref().unwrap().to_string(), "1 + t*q");
    }

    #[test]
    fn d4_fixture_is_not_supported() {
        let rep = one(Family::D, 4, &[3, 3, 1, 1]);
        let c = &rep.cases[0];
        assert_eq!(c.outcome(Check::Condition1).unwrap().verdict, Verdict::Obstruction);
        assert!(c.outcome(Check::Condition1).unwrap().detail.contains("degree 3"));
        assert_eq!(c.outcome(Check::Condition2).unwrap().verdict, Verdict::NotSupported);
        assert_eq!(c.outcome(Check::Solomon).unwrap().verdict, Verdict::Pass);
        assert_eq!(c.verdict, Verdict::NotSupported);
        assert_eq!(rep.verdict.exit_code(), 2);
    }

    #[test]
    fn zero_orbit_matches_solomon() {
        let rep = one(Family::A, 2, &[1, 1, 1]);
        let c = &rep.cases[0];
        assert_eq!(c.verdict, Verdict::Pass);
        let sol = c.outcome(Check::Solomon).unwrap();
        assert_eq!(sol.table.as_ref(), c.product.as_ref());
        assert!(sol.detail.contains("equals"));
    }

    #[test]
    fn b2_all_orbits() {
        let rep = run_cases(&[CaseSpec::new(Family::B, 2, None)], &VerifyConfig::default()).unwrap();
        let labels: Vec<String> = rep
            .cases
            .iter()
            .map(|c| format!("{} {}", c.jordan_type, c.decomposition))
            .collect();
        assert_eq!(
            labels,
            vec![
                "5 lambda=() m=2",
                "3,1,1 lambda=(1) m=1",
                "2,2,1 lambda=(2) m=0",
                "1,1,1,1,1 lambda=(1,1) m=0",
            ]
        );
        assert_eq!(rep.verdict, Verdict::Pass);
    }

    #[test]
    fn json_round_trip_and_determinism() {
        let specs = [CaseSpec::new(Family::C, 2, None)];
        let a = run_cases(&specs, &VerifyConfig::default()).unwrap();
        let b = run_cases(&specs, &VerifyConfig::default()).unwrap();
        let text = a.to_json();
        assert_eq!(text, b.to_json());
        let parsed = Report::from_json(&text).unwrap();
        assert_eq!(parsed, a);
        assert_eq!(parsed.to_json(), text);
        assert!(text.contains("\"schema\": 1"));
        assert!(!text.contains("wall_time_ms"));
    }

    #[test]
    fn undecomposable_orbit() {
        let rep = one(Family::B, 4, &[5, 3, 1]);
        assert_eq!(rep.cases[0].decomposition, "none");
        assert_eq!(rep.verdict, Verdict::NotSupported);
    }

    #[test]
    fn timing_is_opt_in() {
        let config = VerifyConfig {
            timing: true,
            ..VerifyConfig::default()
        };
        let jt = Partition::new(vec![2]).unwrap();
        let rep = run_cases(&[CaseSpec::new(Family::A, 1, Some(jt))], &config).unwrap();
        assert!(rep.cases[0].wall_time_ms.is_some());
    }
}
