//! CSV and manifest writers. Numbers use nine significant digits in
//! scientific notation, independent of locale.

use std::io::{self, Write};

use serde_json::{json, Map, Value};

/// Column names and numeric rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }
}

pub fn fmt_number(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else {
        format!("{x:.8e}")
    }
}

/// Result of one experiment run: the resolved parameters and the data.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub experiment: String,
    pub seed: u64,
    pub manifest: Vec<(String, String)>,
    pub table: Table,
}

impl RunOutput {
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "# experiment = {}", self.experiment)?;
        writeln!(w, "# seed = {}", self.seed)?;
        for (k, v) in &self.manifest {
            writeln!(w, "# {k} = {v}")?;
        }
        writeln!(w, "{}", self.table.columns.join(","))?;
        for row in &self.table.rows {
            let cells: Vec<String> = row.iter().map(|&x| fmt_number(x)).collect();
            writeln!(w, "{}", cells.join(","))?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    pub fn manifest_json(&self) -> Value {
        let params: Map<String, Value> = self
            .manifest
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        json!({
            "experiment": self.experiment,
            "seed": self.seed,
            "tool_version": env!("CARGO_PKG_VERSION"),
            "parameters": params,
            "columns": self.table.columns,
            "rows": self.table.rows.len(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(fmt_number(3.372560705234251e-3), "3.37256071e-3");
        assert_eq!(fmt_number(0.0), "0.00000000e0");
        assert_eq!(fmt_number(f64::NAN), "nan");
    }

    #[test]
    fn csv_layout() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec![1.0, 2.0]);
        let out = RunOutput {
            experiment: "x".into(),
            seed: 3,
            manifest: vec![("k".into(), "v".into())],
            table: t,
        };
        let s = out.to_csv_string();
        assert_eq!(
            s,
            "# experiment = x\n# seed = 3\n# k = v\na,b\n1.00000000e0,2.00000000e0\n"
        );
        assert_eq!(out.manifest_json()["parameters"]["k"], "v");
    }
}
