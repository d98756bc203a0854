//! Text renderings of distributions, enumerators and hierarchies: aligned
//! two-column tables, CSV, and a JSON report with counts as decimal strings.

use serde_json::{json, Map, Value};

use crate::closedform::{SupportWeightDistribution, WeightEnumerator, WeightHierarchy};

/// One "Support weight / Frequency" block per subcode dimension j.
pub fn swd_table(swd: &SupportWeightDistribution) -> String {
    let mut out = String::new();
    for (j, row) in swd.rows() {
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str(&format!("j = {j}\n"));
        let width = row
            .keys()
            .map(|i| i.to_string().len())
            .max()
            .unwrap_or(0)
            .max("Support weight".len());
        out.push_str(&format!("{:<width$}  {}\n", "Support weight", "Frequency"));
        for (i, c) in row {
            out.push_str(&format!("{i:<width$}  {c}\n"));
        }
    }
    out
}

/// One row per (j, i, count), with a header line.
pub fn swd_csv(swd: &SupportWeightDistribution) -> String {
    let mut out = String::from("j,i,count\n");
    for (j, row) in swd.rows() {
        for (i, c) in row {
            out.push_str(&format!("{j},{i},{c}\n"));
        }
    }
    out
}

pub fn enumerator_csv(we: &WeightEnumerator) -> String {
    let mut out = String::from("exp,coeff\n");
    for (e, c) in we.iter() {
        out.push_str(&format!("{e},{c}\n"));
    }
    out
}

pub fn hierarchy_csv(h: &WeightHierarchy) -> String {
    let mut out = String::from("r,d_r\n");
    for (r, d) in h.values.iter().enumerate() {
        out.push_str(&format!("{},{d}\n", r + 1));
    }
    out
}

/// JSON report; every count is a decimal string so arbitrary-precision
/// values survive any consumer. Keys are emitted in sorted order.
pub fn report_json(
    q: u64,
    k: usize,
    n: usize,
    swd: Option<&SupportWeightDistribution>,
    hierarchy: Option<&WeightHierarchy>,
    enumerator: Option<&WeightEnumerator>,
) -> String {
    let mut root = Map::new();
    root.insert("q".into(), json!(q));
    root.insert("k".into(), json!(k));
    root.insert("n".into(), json!(n));
    if let Some(swd) = swd {
        let mut table = Map::new();
        for (j, row) in swd.rows() {
            let mut jrow = Map::new();
            for (i, c) in row {
                jrow.insert(i.to_string(), Value::String(c.to_string()));
            }
            table.insert(j.to_string(), Value::Object(jrow));
        }
        root.insert("swd".into(), Value::Object(table));
    }
    if let Some(h) = hierarchy {
        root.insert("hierarchy".into(), json!(h.values));
    }
    if let Some(we) = enumerator {
        let mut terms = Map::new();
        for (e, c) in we.iter() {
            terms.insert(e.to_string(), Value::String(c.to_string()));
        }
        root.insert("enumerator".into(), Value::Object(terms));
    }
    serde_json::to_string_pretty(&Value::Object(root)).unwrap()
}
