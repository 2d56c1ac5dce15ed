use std::io::{self, Write};

use clap::ValueEnum;
use eisdim::eisenstein::harmonic_defect;
use eisdim::{
    branch_step, dim_nested_literal, dim_via_eisenstein, lattice_number, su3_content, verify_sweep,
    weyl_dim, Dimension, Error, IrrepLabel,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::output::{write_json, OutputFormat, Table};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Disagreement,
}

#[derive(Debug)]
pub enum CmdError {
    Usage(Error),
    Io(io::Error),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Usage(e)
    }
}

impl From<io::Error> for CmdError {
    fn from(e: io::Error) -> Self {
        CmdError::Io(e)
    }
}

pub type CmdResult = Result<Status, CmdError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Weyl,
    Eisenstein,
    Literal,
    All,
}

pub fn parse_label(group: usize, labels: &[i64], dynkin: bool) -> Result<IrrepLabel, Error> {
    if dynkin {
        IrrepLabel::from_dynkin(group, labels)
    } else {
        IrrepLabel::from_signed(group, labels)
    }
}

fn label_json(label: &IrrepLabel) -> Value {
    json!(label.entries())
}

fn dim_json(d: &Dimension) -> Value {
    Value::String(d.to_string())
}

pub fn cmd_dim(
    out: &mut dyn Write,
    label: &IrrepLabel,
    route: Route,
    term_cap: u64,
    format: OutputFormat,
) -> CmdResult {
    let mut results: Vec<(&str, Option<Dimension>)> = Vec::new();
    let mut literal_terms = None;
    let mut literal_required = None;

    if matches!(route, Route::Weyl | Route::All) {
        results.push(("weyl", Some(weyl_dim(label))));
    }
    if matches!(route, Route::Eisenstein | Route::All) {
        results.push(("eisenstein", Some(dim_via_eisenstein(label)?)));
    }
    if matches!(route, Route::Literal | Route::All) {
        match dim_nested_literal(label, term_cap) {
            Ok(lit) => {
                literal_terms = Some(lit.terms);
                results.push(("literal", Some(lit.dimension)));
            }
            Err(Error::TermCapExceeded { required, .. }) if route == Route::All => {
                literal_required = Some(required);
                results.push(("literal", None));
            }
            Err(e) => return Err(e.into()),
        }
    }

    let present: Vec<&Dimension> = results.iter().filter_map(|(_, d)| d.as_ref()).collect();
    let agree = present.windows(2).all(|w| w[0] == w[1]);

    match format {
        OutputFormat::Text => {
            writeln!(out, "SU({}) label {}", label.group(), label)?;
            let mut table = Table::new(["route", "dimension"]);
            for (name, d) in &results {
                let cell = match d {
                    Some(d) => d.to_string(),
                    None => format!(
                        "skipped ({} terms > cap {term_cap})",
                        literal_required.as_deref().unwrap_or("?")
                    ),
                };
                table.row([name.to_string(), cell]);
            }
            table.write_text(out)?;
            if route == Route::All {
                writeln!(
                    out,
                    "{}",
                    if agree {
                        "routes agree"
                    } else {
                        "ROUTES DISAGREE"
                    }
                )?;
            }
        }
        OutputFormat::Csv => {
            let mut table = Table::new(["route", "dimension"]);
            for (name, d) in &results {
                table.row([
                    name.to_string(),
                    d.as_ref().map(ToString::to_string).unwrap_or_default(),
                ]);
            }
            table.write_csv(out)?;
        }
        OutputFormat::Json => {
            let dims: serde_json::Map<String, Value> = results
                .iter()
                .map(|(name, d)| (name.to_string(), d.as_ref().map_or(Value::Null, dim_json)))
                .collect();
            let mut doc = json!({
                "group": label.group(),
                "labels_speiser": label_json(label),
                "dimensions": dims,
                "agree": agree,
            });
            if let Some(t) = literal_terms {
                doc["literal_terms"] = Value::String(t.to_string());
            }
            if let Some(r) = &literal_required {
                doc["literal_skipped_terms"] = Value::String(r.clone());
            }
            write_json(out, &doc)?;
        }
    }
    Ok(if agree {
        Status::Ok
    } else {
        Status::Disagreement
    })
}

pub fn cmd_branch(out: &mut dyn Write, label: &IrrepLabel, format: OutputFormat) -> CmdResult {
    let set = branch_step(label)?;
    let parent = weyl_dim(label);
    let rows: Vec<(&IrrepLabel, String, Dimension)> = set
        .iter()
        .map(|(child, m)| (child, m.to_string(), weyl_dim(child)))
        .collect();
    let children_sum = Dimension::new(set.weighted_sum(|child| weyl_dim(child).into_inner()));
    let conserved = children_sum == parent;

    match format {
        OutputFormat::Text | OutputFormat::Csv => {
            let mut table = Table::new(["label", "multiplicity", "dimension"]);
            for (child, m, d) in &rows {
                table.row([child.to_string(), m.clone(), d.to_string()]);
            }
            let check = format!(
                "check: sum of multiplicity x dimension = {children_sum}, SU({}) {} dimension = {parent}",
                label.group(),
                label
            );
            if format == OutputFormat::Text {
                writeln!(
                    out,
                    "SU({}) {} -> SU({})",
                    label.group(),
                    label,
                    set.group()
                )?;
                table.write_text(out)?;
                writeln!(out, "{check}")?;
            } else {
                table.write_csv(out)?;
                eprintln!("{check}");
            }
        }
        OutputFormat::Json => {
            let branches: Vec<Value> = rows
                .iter()
                .map(|(child, m, d)| {
                    json!({ "label": label_json(child), "multiplicity": m, "dimension": dim_json(d) })
                })
                .collect();
            let doc = json!({
                "group": label.group(),
                "labels_speiser": label_json(label),
                "target_group": set.group(),
                "branches": branches,
                "parent_dimension": dim_json(&parent),
                "children_dimension_sum": dim_json(&children_sum),
                "conserved": conserved,
            });
            write_json(out, &doc)?;
        }
    }
    Ok(if conserved {
        Status::Ok
    } else {
        Status::Disagreement
    })
}

pub fn cmd_su3_content(out: &mut dyn Write, label: &IrrepLabel, format: OutputFormat) -> CmdResult {
    let content = su3_content(label)?;
    let mut total = BigInt::from(0);
    let mut rows = Vec::new();
    for (q, m) in &content {
        let n = lattice_number(
            u64::from(q.entries()[0]) + u64::from(q.entries()[1]),
            q.entries()[1],
        );
        let weighted = BigInt::from(m.clone()) * &n;
        total += &weighted;
        rows.push((q, m.to_string(), n.to_string(), weighted.to_string()));
    }
    let weyl = weyl_dim(label);
    let agree = BigInt::from(weyl.value().clone()) == total;

    match format {
        OutputFormat::Text | OutputFormat::Csv => {
            let mut table = Table::new(["label", "multiplicity", "lattice_number", "weighted"]);
            for (q, m, n, w) in &rows {
                table.row([q.to_string(), m.clone(), n.clone(), w.clone()]);
            }
            let summary = format!("total {total} (weyl {weyl})");
            if format == OutputFormat::Text {
                writeln!(out, "SU(3) content of SU({}) {}", label.group(), label)?;
                table.write_text(out)?;
                writeln!(out, "{summary}")?;
            } else {
                table.write_csv(out)?;
                eprintln!("{summary}");
            }
        }
        OutputFormat::Json => {
            let entries: Vec<Value> = rows
                .iter()
                .map(|(q, m, n, w)| {
                    json!({ "label": label_json(q), "multiplicity": m, "lattice_number": n, "weighted": w })
                })
                .collect();
            let doc = json!({
                "group": label.group(),
                "labels_speiser": label_json(label),
                "content": entries,
                "total_dimension": total.to_string(),
                "weyl_dimension": dim_json(&weyl),
            });
            write_json(out, &doc)?;
        }
    }
    Ok(if agree {
        Status::Ok
    } else {
        Status::Disagreement
    })
}

pub fn cmd_verify(
    out: &mut dyn Write,
    group: usize,
    max_label: u32,
    term_cap: u64,
    format: OutputFormat,
) -> CmdResult {
    let reports = verify_sweep(group, max_label, term_cap)?;
    let checked = reports.len();
    let agreed = reports.iter().filter(|r| r.agree).count();
    let skipped = reports.iter().filter(|r| r.literal_skipped()).count();
    let summary = format!("{checked} checked, {agreed} agreed, {skipped} literal-skipped");

    match format {
        OutputFormat::Text | OutputFormat::Csv => {
            let mut table = Table::new([
                "label",
                "weyl",
                "eisenstein",
                "literal",
                "term_count",
                "summation_indices",
                "agree",
            ]);
            for r in &reports {
                table.row([
                    r.label.to_string(),
                    r.dim_weyl.to_string(),
                    r.dim_eisenstein.to_string(),
                    r.dim_literal.as_ref().map_or_else(
                        || {
                            if format == OutputFormat::Text {
                                "-".into()
                            } else {
                                String::new()
                            }
                        },
                        ToString::to_string,
                    ),
                    r.term_count.to_string(),
                    r.summation_indices.to_string(),
                    r.agree.to_string(),
                ]);
            }
            if format == OutputFormat::Text {
                table.write_text(out)?;
                writeln!(out, "{summary}")?;
            } else {
                table.write_csv(out)?;
                eprintln!("{summary}");
            }
        }
        OutputFormat::Json => {
            let list: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "labels_speiser": label_json(&r.label),
                        "weyl": dim_json(&r.dim_weyl),
                        "eisenstein": dim_json(&r.dim_eisenstein),
                        "literal": r.dim_literal.as_ref().map_or(Value::Null, dim_json),
                        "term_count": r.term_count.to_string(),
                        "summation_indices": r.summation_indices,
                        "agree": r.agree,
                    })
                })
                .collect();
            let doc = json!({
                "group": group,
                "max_label": max_label,
                "term_cap": term_cap,
                "reports": list,
                "summary": { "checked": checked, "agreed": agreed, "literal_skipped": skipped },
            });
            write_json(out, &doc)?;
        }
    }
    Ok(if agreed == checked {
        Status::Ok
    } else {
        Status::Disagreement
    })
}

pub fn cmd_lattice(out: &mut dyn Write, radius: i64, format: OutputFormat) -> CmdResult {
    let mut points = Vec::new();
    for a in -radius..=radius {
        for b in -radius..=radius {
            points.push((a, b, lattice_number(a, b), harmonic_defect(a, b)));
        }
    }
    let harmonic = points.iter().all(|(_, _, _, d)| d == &BigInt::from(0));

    match format {
        OutputFormat::Text | OutputFormat::Csv => {
            let mut table = Table::new(["a", "b", "n", "harmonic_check"]);
            for (a, b, n, d) in &points {
                table.row([a.to_string(), b.to_string(), n.to_string(), d.to_string()]);
            }
            if format == OutputFormat::Text {
                table.write_text(out)?;
            } else {
                table.write_csv(out)?;
            }
        }
        OutputFormat::Json => {
            let list: Vec<Value> = points
                .iter()
                .map(|(a, b, n, d)| {
                    json!({ "a": a, "b": b, "n": n.to_string(), "harmonic_check": d.to_string() })
                })
                .collect();
            let doc = json!({ "radius": radius, "points": list, "all_harmonic": harmonic });
            write_json(out, &doc)?;
        }
    }
    Ok(if harmonic {
        Status::Ok
    } else {
        Status::Disagreement
    })
}
