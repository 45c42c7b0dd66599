//! Table and CSV renderings of an [`OutputDocument`].

use std::fmt::Write as _;

use crate::document::{OutputDocument, Payload};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Summary lines plus one flat table, shared by the table and CSV renderers.
struct Tabular {
    summary: Vec<(String, String)>,
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn tabular(doc: &OutputDocument) -> Tabular {
    let mut summary = vec![("schema_version".to_string(), doc.schema_version.clone())];
    if let Some(s) = doc.spec {
        summary.push(("spec".into(), format!("G({},{},{})", s.m, s.n, s.k)));
    }
    let mut kv = |k: &str, v: String| summary.push((k.to_string(), v));
    let (headers, rows): (Vec<&'static str>, Vec<Vec<String>>) = match &doc.payload {
        Payload::Spectrum(p) => {
            kv("central_charge", p.central_charge.clone());
            kv("exp_size", p.exp_size.to_string());
            kv("vp_order", p.vp_order.to_string());
            kv("orbit_count", p.orbit_count.to_string());
            kv("irrep_count", p.irrep_count.to_string());
            (
                vec![
                    "lambda0",
                    "pi0",
                    "lam1",
                    "lam2",
                    "qdot",
                    "orbit_size",
                    "stabilizer_order",
                    "dimension",
                    "piece_dimension",
                    "h_mod1",
                ],
                p.rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.lambda0.clone(),
                            r.pi0.clone(),
                            r.lam1.clone(),
                            r.lam2.clone(),
                            r.qdot.clone(),
                            r.orbit_size.to_string(),
                            r.stabilizer_order.to_string(),
                            r.dimension.to_string(),
                            r.piece_dimension.to_string(),
                            r.h_mod1.clone(),
                        ]
                    })
                    .collect(),
            )
        }
        Payload::VpGroup(p) => {
            kv("order", p.order.to_string());
            kv("audit_passed", opt(p.audit_passed));
            (
                vec![
                    "j",
                    "i",
                    "lambda0",
                    "pi0",
                    "lam1",
                    "lam2",
                    "qdot",
                    "element_order",
                    "selection_rules",
                    "weight_gap",
                    "passed",
                ],
                p.elements
                    .iter()
                    .map(|e| {
                        let a = e.audit.as_ref();
                        vec![
                            e.j.to_string(),
                            e.i.to_string(),
                            e.lambda0.clone(),
                            e.pi0.clone(),
                            e.lam1.clone(),
                            e.lam2.clone(),
                            e.qdot.clone(),
                            e.element_order.to_string(),
                            opt(a.map(|a| a.selection_rules)),
                            opt(a.map(|a| a.weight_gap.clone())),
                            opt(a.map(|a| a.passed)),
                        ]
                    })
                    .collect(),
            )
        }
        Payload::DualityReport(p) => {
            for side in [&p.left, &p.right] {
                kv(
                    "side",
                    format!(
                        "G({},{},{}) c={} irreps={}",
                        side.spec.m,
                        side.spec.n,
                        side.spec.k,
                        side.central_charge,
                        side.irrep_count
                    ),
                );
            }
            for c in &p.checks {
                kv(
                    &c.name,
                    format!(
                        "{} vs {} ({})",
                        c.left,
                        c.right,
                        if c.equal { "equal" } else { "DIFFERENT" }
                    ),
                );
            }
            for m in &p.row_mismatches {
                kv("mismatch", m.clone());
            }
            kv("verdict", format!("{:?}", p.verdict).to_uppercase());
            let side_rows = |name: &str, fp: &crate::document::FingerprintDoc| {
                fp.rows
                    .iter()
                    .map(|r| {
                        vec![
                            name.to_string(),
                            r.h_mod1.clone(),
                            r.dimension.to_string(),
                            r.multiplicity.to_string(),
                        ]
                    })
                    .collect::<Vec<_>>()
            };
            let mut rows = side_rows("left", &p.left);
            rows.extend(side_rows("right", &p.right));
            (vec!["side", "h_mod1", "dimension", "multiplicity"], rows)
        }
        Payload::ModularData(p) => {
            for f in &p.factors {
                kv(
                    &f.name,
                    format!(
                        "primaries={} unitarity_residual={} symmetry_residual={}",
                        f.primaries.len(),
                        f.unitarity_residual,
                        f.symmetry_residual
                    ),
                );
            }
            (
                vec!["factor", "label", "h", "qdim"],
                p.factors
                    .iter()
                    .flat_map(|f| {
                        f.primaries.iter().map(move |q| {
                            vec![
                                f.name.clone(),
                                q.label.clone(),
                                q.h.clone(),
                                q.qdim.to_string(),
                            ]
                        })
                    })
                    .collect(),
            )
        }
        Payload::U1Coset(p) => {
            kv("a", p.a.to_string());
            kv("b", p.b.to_string());
            kv("gcd", p.gcd.to_string());
            kv("b_vacuum_summed", p.b_vacuum_summed.to_string());
            kv("b_vacuum_closed_form", p.b_vacuum_closed_form.to_string());
            (
                vec!["x", "y", "z", "weight_gap"],
                p.vacuum_pairs
                    .iter()
                    .map(|v| {
                        vec![
                            v.x.to_string(),
                            v.y.to_string(),
                            v.z.to_string(),
                            v.weight_gap.clone(),
                        ]
                    })
                    .collect(),
            )
        }
    };
    Tabular {
        summary,
        headers,
        rows,
    }
}

fn table(doc: &OutputDocument) -> String {
    let t = tabular(doc);
    let mut out = String::new();
    let key_width = t.summary.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in &t.summary {
        writeln!(out, "{k:<key_width$}  {v}").unwrap();
    }
    out.push('\n');
    let mut widths: Vec<usize> = t.headers.iter().map(|h| h.len()).collect();
    for row in &t.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        writeln!(out, "{}", parts.join("  ").trim_end()).unwrap();
    };
    line(&mut t.headers.iter().copied());
    line(
        &mut widths
            .iter()
            .map(|w| "-".repeat(*w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str),
    );
    for row in &t.rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

fn csv(doc: &OutputDocument) -> String {
    let t = tabular(doc);
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(&t.headers).expect("in-memory write");
    for row in &t.rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
}

pub fn render(doc: &OutputDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Table => table(doc),
        Format::Csv => csv(doc),
    }
}
