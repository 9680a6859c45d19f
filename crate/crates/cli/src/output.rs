use std::io::{self, Write};

use l2mcg::verify::{Column, DimsRow, Report};
use l2mcg::Status;
use serde::Serialize;

fn values_text(r: &l2mcg::Check) -> String {
    r.values
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn reports_text(w: &mut dyn Write, reports: &[Report]) -> io::Result<()> {
    let (mut pass, mut finding, mut fail) = (0, 0, 0);
    for r in reports {
        for c in &r.checks {
            match c.status {
                Status::Pass => pass += 1,
                Status::Finding => finding += 1,
                Status::Fail => fail += 1,
            }
            write!(w, "g={} {} {} {}", r.genus, r.suite, c.name, c.status)?;
            if !c.values.is_empty() {
                write!(w, " {}", values_text(c))?;
            }
            if let Some(d) = &c.detail {
                write!(w, " ({d})")?;
            }
            writeln!(w)?;
        }
        if let Some(ms) = r.wall_ms {
            writeln!(w, "g={} {} time_ms={ms}", r.genus, r.suite)?;
        }
    }
    writeln!(
        w,
        "summary: {pass} passed, {finding} findings, {fail} failed"
    )
}

#[derive(Serialize)]
struct ReportsJson<'a> {
    seed: u64,
    reports: &'a [Report],
}

pub fn reports_json(w: &mut dyn Write, seed: u64, reports: &[Report]) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, &ReportsJson { seed, reports })?;
    writeln!(w)
}

/// Long format: one line per numeric value; checks without values get one
/// line with empty key and value.
pub fn reports_csv(w: &mut dyn Write, reports: &[Report]) -> io::Result<()> {
    writeln!(w, "genus,suite,check,status,key,value")?;
    for r in reports {
        for c in &r.checks {
            let prefix = format!("{},{},{},{}", r.genus, r.suite, c.name, c.status);
            if c.values.is_empty() {
                writeln!(w, "{prefix},,")?;
            }
            for (k, v) in &c.values {
                writeln!(w, "{prefix},{k},{v}")?;
            }
        }
        if let Some(ms) = r.wall_ms {
            writeln!(w, "{},{},time,,ms,{ms}", r.genus, r.suite)?;
        }
    }
    Ok(())
}

fn cell(c: &Column) -> String {
    let computed = c.computed.map_or("-".to_string(), |v| v.to_string());
    let flag = if c.mismatch() { " !" } else { "" };
    format!("{}/{}{}", c.formula, computed, flag)
}

/// Each cell is `formula/computed`; `-` marks a value not computed at that
/// genus and `!` a mismatch.
pub fn dims_text(w: &mut dyn Write, rows: &[DimsRow]) -> io::Result<()> {
    let Some(first) = rows.first() else {
        return Ok(());
    };
    let names: Vec<&str> = first.columns().iter().map(|(n, _)| *n).collect();
    let mut table: Vec<Vec<String>> = vec![std::iter::once("g".to_string())
        .chain(names.iter().map(|s| s.to_string()))
        .collect()];
    for r in rows {
        let mut line = vec![r.genus.to_string()];
        line.extend(r.columns().iter().map(|(_, c)| cell(c)));
        table.push(line);
    }
    let widths: Vec<usize> = (0..table[0].len())
        .map(|i| table.iter().map(|l| l[i].len()).max().unwrap_or(0))
        .collect();
    for line in &table {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        writeln!(w, "{}", cells.join("  ").trim_end())?;
    }
    if rows.iter().any(|r| r.uses_derived_closed_form) {
        writeln!(
            w,
            "abelianization uses the derived closed form for T2(1,j,k,l)"
        )?;
    }
    Ok(())
}

pub fn dims_csv(w: &mut dyn Write, rows: &[DimsRow]) -> io::Result<()> {
    writeln!(w, "genus,column,formula,computed,mismatch")?;
    for r in rows {
        for (name, c) in r.columns() {
            let computed = c.computed.map_or(String::new(), |v| v.to_string());
            writeln!(
                w,
                "{},{},{},{},{}",
                r.genus,
                name,
                c.formula,
                computed,
                c.mismatch()
            )?;
        }
    }
    Ok(())
}
