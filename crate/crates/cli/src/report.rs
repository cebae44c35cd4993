use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA_ID: &str = "qwalk-report/1";

/// Integers with more digits than this are shortened in tables.
const TABLE_DIGITS: usize = 40;

/// A table column: header and JSON pointer into a result row.
pub type Column = (&'static str, &'static str);

/// Rows nested inside each result, rendered as a second table.
#[derive(Debug, Clone)]
pub struct Detail {
    pub pointer: &'static str,
    /// Column of the parent row repeated in front of each nested row.
    pub parent: Column,
    pub columns: Vec<Column>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: &'static str,
    pub results: Vec<Value>,
    pub summary: Map<String, Value>,
    #[serde(skip)]
    pub columns: Vec<Column>,
    #[serde(skip)]
    pub detail: Option<Detail>,
}

impl Report {
    pub fn new(command: &'static str, columns: Vec<Column>) -> Self {
        Report {
            schema: SCHEMA_ID,
            command,
            results: Vec::new(),
            summary: Map::new(),
            columns,
            detail: None,
        }
    }

    pub fn push<T: Serialize>(&mut self, row: &T) {
        self.results
            .push(serde_json::to_value(row).expect("report rows serialize"));
    }

    pub fn set<T: Serialize>(&mut self, key: &str, value: T) {
        self.summary.insert(
            key.to_string(),
            serde_json::to_value(value).expect("summary serializes"),
        );
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = render(
            &self.columns,
            self.results
                .iter()
                .map(|r| row_cells(&self.columns, r))
                .collect(),
        );
        if let Some(d) = &self.detail {
            let mut cols = vec![d.parent];
            cols.extend(d.columns.iter().copied());
            let mut rows = Vec::new();
            for r in &self.results {
                let parent = cell(r.pointer(d.parent.1));
                for nested in r
                    .pointer(d.pointer)
                    .and_then(Value::as_array)
                    .into_iter()
                    .flatten()
                {
                    let mut cells = vec![parent.clone()];
                    cells.extend(d.columns.iter().map(|c| cell(nested.pointer(c.1))));
                    rows.push(cells);
                }
            }
            if !rows.is_empty() {
                out.push('\n');
                out.push_str(&render(&cols, rows));
            }
        }
        out.push('\n');
        for (k, v) in &self.summary {
            out.push_str(&format!("{k}: {}\n", cell(Some(v))));
        }
        out
    }
}

fn row_cells(columns: &[Column], row: &Value) -> Vec<String> {
    columns.iter().map(|c| cell(row.pointer(c.1))).collect()
}

fn render(columns: &[Column], rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.0.chars().count()).collect();
    for r in &rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(columns.iter().map(|c| c.0).collect());
    out.push_str(&line(
        widths
            .iter()
            .map(|w| "-".repeat(*w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    ));
    for r in &rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn cell(v: Option<&Value>) -> String {
    match v {
        Some(Value::Object(m)) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", nested(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => nested(other.unwrap_or(&Value::Null)),
    }
}

fn nested(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => shorten_integer(s),
        Value::Array(items) => items.iter().map(nested).collect::<Vec<_>>().join("; "),
        Value::Object(m) => {
            format!(
                "{{{}}}",
                m.iter()
                    .map(|(k, v)| format!("{k}: {}", nested(v)))
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        }
        other => other.to_string(),
    }
}

/// `"…(Nd)"` replaces everything past the first 40 digits of a long integer.
pub fn shorten_integer(s: &str) -> String {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.len() <= TABLE_DIGITS || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return s.to_string();
    }
    let sign = if s.starts_with('-') { "-" } else { "" };
    format!("{sign}{}…({}d)", &digits[..TABLE_DIGITS], digits.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn long_integers_are_marked() {
        let long = "1".repeat(45);
        assert_eq!(shorten_integer(&long), format!("{}…(45d)", "1".repeat(40)));
        assert_eq!(
            shorten_integer(&format!("-{long}")),
            format!("-{}…(45d)", "1".repeat(40))
        );
        assert_eq!(shorten_integer("12345"), "12345");
        assert_eq!(shorten_integer(&"x".repeat(45)), "x".repeat(45));
    }

    #[test]
    fn table_aligns_columns() {
        let mut r = Report::new("walk", vec![("graph", "/graph"), ("det", "/det")]);
        r.push(&json!({"graph": "A_", "det": "0"}));
        r.push(&json!({"graph": "Elq?", "det": "-8192"}));
        r.set("graphs", 2);
        let t = r.to_table();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "graph  det");
        assert_eq!(lines[2], "A_     0");
        assert_eq!(lines[3], "Elq?   -8192");
        assert!(t.ends_with("graphs: 2\n"));
    }

    #[test]
    fn nested_rows_get_their_own_table() {
        let mut r = Report::new("certify", vec![("graph", "/graph")]);
        r.detail = Some(Detail {
            pointer: "/primes",
            parent: ("graph", "/graph"),
            columns: vec![("p", "/p")],
        });
        r.push(&json!({"graph": "X", "primes": [{"p": "5"}, {"p": "7"}]}));
        let t = r.to_table();
        assert!(t.contains("graph  p\n"));
        assert!(t.contains("X      7\n"));
    }
}
