use std::fmt::Write;

use serde::Serialize;
use weylcert_core::verify::{CaseReport, Check, Report};

use crate::docs::{KostkaDoc, OrbitsDoc, SolomonDoc};
use crate::Format;

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("document serializes");
    s.push('\n');
    s
}

fn set(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn tuple<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn csv_rows(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn product(case: &CaseReport) -> String {
    case.product.as_ref().map_or("-".into(), ToString::to_string)
}

/// Verify and table output. `rows` selects one line per case instead of a
/// section per case in Markdown.
pub fn report(report: &Report, format: Format, rows: bool) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => {
            let mut out = Vec::new();
            for c in &report.cases {
                for o in &c.checks {
                    out.push(vec![
                        c.family.to_string(),
                        c.rank.to_string(),
                        c.jordan_type.to_string(),
                        c.decomposition.clone(),
                        o.check.to_string(),
                        o.verdict.to_string(),
                        o.detail.clone(),
                    ]);
                }
            }
            csv_rows(
                &["family", "rank", "orbit", "decomposition", "check", "verdict", "detail"],
                out,
            )
        }
        Format::Md if rows => markdown_table(report),
        Format::Md => markdown_sections(report),
    }
}

fn markdown_table(report: &Report) -> String {
    let checks: Vec<Check> = Check::ALL
        .into_iter()
        .filter(|c| report.cases.iter().any(|r| r.outcome(*c).is_some()))
        .collect();
    let mut s = String::from("| type | orbit | decomposition | J | K | s | m | product |");
    for c in &checks {
        write!(s, " {c} |").unwrap();
    }
    s.push_str(" verdict |\n|");
    for _ in 0..checks.len() + 9 {
        s.push_str("---|");
    }
    s.push('\n');
    for case in &report.cases {
        write!(
            s,
            "| {}{} | ({}) | {} | {} | {} | {} | {} | {} |",
            case.family,
            case.rank,
            case.jordan_type,
            case.decomposition,
            set(&case.j),
            set(&case.k),
            case.s,
            tuple(&case.m),
            product(case)
        )
        .unwrap();
        for c in &checks {
            let v = case.outcome(*c).map_or("-".to_string(), |o| o.verdict.to_string());
            write!(s, " {v} |").unwrap();
        }
        writeln!(s, " {} |", case.verdict).unwrap();
    }
    writeln!(s, "\noverall: {}", report.verdict).unwrap();
    s
}

fn markdown_sections(report: &Report) -> String {
    let mut s = String::new();
    for case in &report.cases {
        writeln!(s, "## {}{} orbit ({}) {}\n", case.family, case.rank, case.jordan_type, case.decomposition).unwrap();
        writeln!(
            s,
            "J = {}, K = {}, r = {}, s = {}, m = {}, product {}\n",
            set(&case.j),
            set(&case.k),
            case.r,
            case.s,
            tuple(&case.m),
            product(case)
        )
        .unwrap();
        s.push_str("| check | verdict | detail |\n|---|---|---|\n");
        for o in &case.checks {
            writeln!(s, "| {} | {} | {} |", o.check, o.verdict, o.detail).unwrap();
        }
        s.push('\n');
        for o in &case.checks {
            for (i, w) in o.witnesses.iter().enumerate() {
                writeln!(s, "- f_{} = {w}", i + 1).unwrap();
            }
            if let Some(c) = &o.c {
                writeln!(s, "- c = {c}").unwrap();
            }
            if let Some(d) = &o.flag_dims {
                writeln!(s, "- flag dimensions {}", tuple(d)).unwrap();
            }
            if let Some(t) = &o.table {
                writeln!(s, "- table {t}").unwrap();
            }
        }
        if let Some(ms) = case.wall_time_ms {
            writeln!(s, "- wall time {ms} ms").unwrap();
        }
        writeln!(s, "\nverdict: {}\n", case.verdict).unwrap();
    }
    writeln!(s, "overall: {}", report.verdict).unwrap();
    s
}

pub fn solomon(doc: &SolomonDoc, format: Format) -> String {
    match format {
        Format::Json => json(doc),
        Format::Csv => {
            let rows = doc
                .table
                .rows()
                .iter()
                .enumerate()
                .map(|(i, p)| vec![i.to_string(), p.to_string(), doc.expected.t_coefficient(i).to_string()])
                .collect();
            csv_rows(&["i", "table", "expected"], rows)
        }
        Format::Md => {
            let exps: Vec<usize> = doc.exponents.iter().map(|&e| e as usize).collect();
            let factors: Vec<String> = exps
                .iter()
                .map(|&e| match e {
                    1 => "(1 + t*q)".to_string(),
                    _ => format!("(1 + t*q^{e})"),
                })
                .collect();
            let mut s = format!("# Solomon table {}{}\n\n", doc.family, doc.rank);
            writeln!(s, "exponents {}\n", tuple(&doc.exponents)).unwrap();
            writeln!(s, "table = {}\n", doc.table).unwrap();
            writeln!(s, "expected = {} = {}\n", factors.join(""), doc.expected).unwrap();
            writeln!(s, "verdict: {}", doc.verdict).unwrap();
            s
        }
    }
}

pub fn kostka(doc: &KostkaDoc, format: Format) -> String {
    match format {
        Format::Json => json(doc),
        Format::Csv => csv_rows(
            &["mu", "lam", "polynomial"],
            vec![vec![doc.mu.to_string(), doc.lam.to_string(), doc.polynomial.to_string()]],
        ),
        Format::Md => format!("K({}; {}) = {}\n", doc.mu, doc.lam, doc.polynomial),
    }
}

pub fn orbits(doc: &OrbitsDoc, format: Format) -> String {
    match format {
        Format::Json => json(doc),
        Format::Csv | Format::Md => {
            let rows: Vec<Vec<String>> = doc
                .orbits
                .iter()
                .map(|o| {
                    vec![
                        o.jordan_type.to_string(),
                        o.decomposition.clone(),
                        set(&o.j),
                        set(&o.k),
                        o.r.to_string(),
                        o.s.to_string(),
                        tuple(&o.m),
                        o.supported.to_string(),
                    ]
                })
                .collect();
            let header = ["orbit", "decomposition", "J", "K", "r", "s", "m", "supported"];
            if format == Format::Csv {
                return csv_rows(&header, rows);
            }
            let mut s = format!("| {} |\n|", header.join(" | "));
            s.push_str(&"---|".repeat(header.len()));
            s.push('\n');
            for r in rows {
                writeln!(s, "| {} |", r.join(" | ")).unwrap();
            }
            s
        }
    }
}
