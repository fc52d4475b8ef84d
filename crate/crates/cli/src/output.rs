use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use surfineq::{Error, InequalityReport, Result};

/// What a command produces: a flat table, a summary document, and the
/// failures that decide the exit status.
pub struct Output {
    pub csv: String,
    pub summary: Value,
    pub failures: Vec<String>,
    /// Extra files for `--out`, as `(name, contents)`.
    pub files: Vec<(String, String)>,
}

/// Flattens each row through its JSON form so nested and flattened fields
/// become plain columns in declaration order.
pub fn table<T: Serialize>(rows: &[T]) -> Result<String> {
    let err = |e: csv::Error| Error::Parse(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    for (k, r) in rows.iter().enumerate() {
        let Value::Object(obj) = serde_json::to_value(r).expect("row serializes") else {
            panic!("table rows must be records");
        };
        if k == 0 {
            w.write_record(obj.keys()).map_err(err)?;
        }
        w.write_record(obj.values().map(cell)).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn failure_line(r: &InequalityReport) -> String {
    format!("{} {}: lhs {} rhs {} deficit {} (tol {})", r.surface, r.id, r.lhs, r.rhs, r.deficit, r.tolerance)
}

/// Rows, failing records and the worst asserted margin per inequality.
pub fn reports(rows: Vec<InequalityReport>, extra: Value) -> Result<Output> {
    let failures: Vec<String> = rows.iter().filter(|r| r.asserted && !r.pass).map(failure_line).collect();
    let mut worst: BTreeMap<&str, &InequalityReport> = BTreeMap::new();
    for r in rows.iter().filter(|r| r.asserted) {
        let slot = worst.entry(&r.id).or_insert(r);
        if r.deficit < slot.deficit {
            *slot = r;
        }
    }
    let worst: BTreeMap<&str, Value> = worst
        .into_iter()
        .map(|(id, r)| (id, json!({ "surface": r.surface, "deficit": r.deficit, "lhs": r.lhs, "rhs": r.rhs })))
        .collect();
    let summary = json!({
        "records": rows.len(),
        "asserted": rows.iter().filter(|r| r.asserted).count(),
        "failed": failures.len(),
        "failures": failures,
        "worst_margins": worst,
        "details": extra,
    });
    Ok(Output { csv: table(&rows)?, summary, failures, files: Vec::new() })
}

pub fn write(out: &Path, command: &str, o: &Output) -> Result<()> {
    let io = |e: std::io::Error| Error::Parse(format!("{}: {e}", out.display()));
    fs::create_dir_all(out).map_err(io)?;
    fs::write(out.join(format!("{command}.csv")), &o.csv).map_err(io)?;
    let doc = serde_json::to_string_pretty(&o.summary).expect("summary serializes") + "\n";
    fs::write(out.join(format!("{command}.json")), doc).map_err(io)?;
    for (name, body) in &o.files {
        fs::write(out.join(name), body).map_err(io)?;
    }
    Ok(())
}
