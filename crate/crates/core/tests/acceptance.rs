//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//! Runs without the libtest harness so the lines are always printed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use weylcert_core::characters::{
    coinvariant_graded_multiplicity, conjugacy_classes, exterior_character, solomon_check, two_power_check,
    ClassFunction,
};
use weylcert_core::exact::{elementary_symmetric, elementary_symmetric_of, rat, BiPoly, MultiPoly};
use weylcert_core::invariants::{
    check_condition1, delta_certificate, fundamental_degrees, invariant_space, search_condition1, Condition1Status,
};
use weylcert_core::nilpotent::{condition2_certificate, jordan_type_of, jordan_types, levi_decompositions, realize};
use weylcert_core::springer::{fake_degree_crosscheck, hook_identity_check};
use weylcert_core::{Family, Partition, WeylGroup, DEFAULT_GUARD};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn group(f: Family, l: usize) -> WeylGroup {
    WeylGroup::of_type(f, l, DEFAULT_GUARD).expect("group within guard")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Exponents written down per family, independent of the group.
fn known_exponents(f: Family, l: usize) -> Vec<usize> {
    let mut e: Vec<usize> = match f {
        Family::A => (1..=l).collect(),
        Family::B | Family::C => (1..=l).map(|i| 2 * i - 1).collect(),
        Family::D => (1..l).map(|i| 2 * i - 1).chain([l - 1]).collect(),
    };
    e.sort_unstable();
    e
}

fn solomon_suite() -> Outcome {
    let cases = [
        (Family::A, 1..=5),
        (Family::B, 2..=4),
        (Family::C, 2..=4),
        (Family::D, 3..=5),
    ];
    for (f, ranks) in cases {
        for l in ranks {
            let w = group(f, l);
            let rep = solomon_check(&w, &conjugacy_classes(&w)).map_err(|e| e.to_string())?;
            let expected = BiPoly::exterior_product(&known_exponents(f, l));
            ensure(rep.passed && rep.table == expected, || {
                format!("{f}{l}: table {} expected {}", rep.table, expected)
            })?;
        }
    }
    Ok(())
}

/// Condition (1) with the closed-form witnesses, the flag certificate, and
/// `Delta = c pi_K` for every decomposition selected.
fn pipeline(f: Family, l: usize, witnesses: impl Fn(usize) -> Vec<MultiPoly>) -> Outcome {
    let w = group(f, l);
    for jt in jordan_types(f, l).map_err(|e| e.to_string())? {
        for d in levi_decompositions(f, &jt, l).map_err(|e| e.to_string())? {
            let label = format!("{f}{l} ({jt}) {}", d.label());
            let m = d.coexponents.as_ref().ok_or_else(|| format!("{label}: no coexponents"))?;
            let fs = witnesses(d.s);
            let c1 = check_condition1(&w, &d.k, m, &fs).map_err(|e| e.to_string())?;
            ensure(c1.passed(), || format!("{label}: condition1 {:?}", c1.status))?;
            let real = realize(&d).map_err(|e| e.to_string())?;
            let cert = condition2_certificate(&real, &d).map_err(|e| e.to_string())?;
            ensure(cert.passed, || format!("{label}: condition2 failed at {:?}", cert.failed_step))?;
            let dc = delta_certificate(&w, &d.k, &fs).map_err(|e| e.to_string())?;
            let c_ok = dc.c.as_ref().is_some_and(|c| *c != rat(0));
            ensure(dc.passed && c_ok && dc.skew_invariant, || format!("{label}: delta c = {:?}", dc.c))?;
        }
    }
    Ok(())
}

fn type_a_pipeline() -> Outcome {
    for n in 2..=7 {
        let l = n - 1;
        pipeline(Family::A, l, |s| (1..=s).map(|i| elementary_symmetric(n, i + 1)).collect())?;
    }
    Ok(())
}

fn type_bc_pipeline() -> Outcome {
    for f in [Family::B, Family::C] {
        for l in 2..=4 {
            let squares: Vec<MultiPoly> = (0..l).map(|i| MultiPoly::var(l, i).pow(2)).collect();
            pipeline(f, l, |s| (1..=s).map(|i| elementary_symmetric_of(&squares, i, l)).collect())?;
        }
    }
    Ok(())
}

fn hook_identities() -> Outcome {
    for n in 1..=8 {
        for lam in Partition::all(n) {
            let rep = hook_identity_check(&lam).map_err(|e| e.to_string())?;
            ensure(rep.passed, || format!("lambda = ({lam})"))?;
        }
    }
    Ok(())
}

fn d4_obstruction() -> Outcome {
    let w = group(Family::D, 4);
    let space = invariant_space(&w, 3).map_err(|e| e.to_string())?;
    ensure(space.is_empty(), || format!("degree-3 invariants have dimension {}", space.len()))?;
    let jt = Partition::new(vec![3, 3, 1, 1]).unwrap();
    let ds = levi_decompositions(Family::D, &jt, 4).map_err(|e| e.to_string())?;
    ensure(ds.len() == 1, || format!("{} decompositions", ds.len()))?;
    let d = &ds[0];
    let m = d.coexponents.as_ref().ok_or("no coexponents")?;
    ensure(m.values == [1, 2], || format!("coexponents {:?}", m.values))?;
    let rep = search_condition1(&w, &d.k, m).map_err(|e| e.to_string())?;
    ensure(rep.status == Condition1Status::DegreeObstruction { degree: 3 }, || {
        format!("search status {:?}", rep.status)
    })
}

fn two_power_counts() -> Outcome {
    let cases = [
        (Family::A, 1..=5),
        (Family::B, 1..=5),
        (Family::C, 1..=5),
        (Family::D, 3..=5),
    ];
    for (f, ranks) in cases {
        for l in ranks {
            let w = group(f, l);
            let classes = conjugacy_classes(&w);
            for mask in 0u32..(1 << l) {
                let j: Vec<usize> = (1..=l).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let rep = two_power_check(&w, &classes, &j).map_err(|e| e.to_string())?;
                ensure(rep.passed, || format!("{f}{l} J = {j:?}: per-i {:?}", rep.per_i))?;
            }
        }
    }
    Ok(())
}

fn crosscheck() -> Outcome {
    for n in 2..=6 {
        let rep = fake_degree_crosscheck(n).map_err(|e| e.to_string())?;
        ensure(rep.passed, || format!("n = {n}: {:?}", rep.rows))?;
    }
    Ok(())
}

fn structural() -> Outcome {
    let cases = [
        (Family::A, 1..=7),
        (Family::B, 1..=6),
        (Family::C, 1..=6),
        (Family::D, 3..=6),
    ];
    for (f, ranks) in cases {
        for l in ranks {
            let w = group(f, l);
            let degrees = fundamental_degrees(&w).map_err(|e| e.to_string())?;
            let npos = w.root_system().positive_roots().len();
            ensure(degrees.product() == w.order() as u128 && degrees.exponent_sum() == npos, || {
                format!("{f}{l}: degrees {degrees}")
            })?;
            if w.order() <= 10_000 {
                let classes = conjugacy_classes(&w);
                let mut chars = vec![ClassFunction::trivial(&w, &classes), ClassFunction::sign(&w, &classes)];
                for i in 0..=l {
                    chars.push(exterior_character(&w, &classes, i).map_err(|e| e.to_string())?);
                }
                for chi in &chars {
                    // Errors if any coefficient is not a nonnegative integer.
                    coinvariant_graded_multiplicity(&w, &classes, chi).map_err(|e| format!("{f}{l}: {e}"))?;
                }
            }
        }
    }
    for f in [Family::A, Family::B, Family::C] {
        for l in 1..=5 {
            for jt in jordan_types(f, l).map_err(|e| e.to_string())? {
                for d in levi_decompositions(f, &jt, l).map_err(|e| e.to_string())? {
                    let real = realize(&d).map_err(|e| e.to_string())?;
                    let back = jordan_type_of(&real.e).map_err(|e| e.to_string())?;
                    ensure(back == jt, || format!("{f}{l}: ({jt}) realized as ({back})"))?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let minutes = |m: u64| Some(Duration::from_secs(60 * m));
    let criteria: [Criterion; 8] = [
        ("1 Solomon product formula A1-A5 B2-B4 C2-C4 D3-D5", solomon_suite, minutes(5)),
        ("2 type A pipeline n = 2..7", type_a_pipeline, minutes(5)),
        ("3 types B and C pipeline ranks 2..4", type_bc_pipeline, minutes(10)),
        ("4 hook identities n <= 8", hook_identities, minutes(5)),
        ("5 D4 (3,3,1,1) degree-3 obstruction", d4_obstruction, None),
        ("6 two-power count, every J, ranks <= 5", two_power_counts, None),
        ("7 tableau and Molien agreement n <= 6", crosscheck, None),
        ("8 structural suites", structural, None),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run, limit) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let mut result = run();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&result, limit) {
            if elapsed > limit {
                result = Err(format!("took {elapsed:.1?}, limit {limit:?}"));
            }
        }
        match result {
            Ok(()) => println!("PASS  criterion {name}  ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}  ({elapsed:.2?}): {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
