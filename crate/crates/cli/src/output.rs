//! Table assembly and byte-stable CSV/JSON emission.
//!
//! Floats are written in shortest round-trip decimal (std `Display` for CSV,
//! serde_json's ryu for JSON), rows keep a fixed order, and the JSON document
//! always carries a `meta` object sufficient to reproduce the run.

use std::io::Write;

use serde_json::{json, Map, Value};

#[derive(Clone, Debug)]
pub enum Cell {
    UInt(u64),
    Float(f64),
    Str(String),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::UInt(v) => v.to_string(),
            Cell::Float(v) => v.to_string(),
            Cell::Str(v) => v.clone(),
            Cell::Bool(v) => v.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::UInt(v) => json!(v),
            Cell::Float(v) => json!(v),
            Cell::Str(v) => json!(v),
            Cell::Bool(v) => json!(v),
        }
    }
}

/// A rectangular result table with named columns.
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            writeln!(w, "{}", line.join(","))?;
        }
        Ok(())
    }

    pub fn write_json<W: Write>(
        &self,
        mut w: W,
        meta: Map<String, Value>,
        extra: Option<(&str, Value)>,
    ) -> std::io::Result<()> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (name, cell) in self.columns.iter().zip(row) {
                    obj.insert((*name).to_string(), cell.json());
                }
                Value::Object(obj)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("meta".into(), Value::Object(meta));
        doc.insert("rows".into(), Value::Array(rows));
        if let Some((key, value)) = extra {
            doc.insert(key.into(), value);
        }
        serde_json::to_writer_pretty(&mut w, &Value::Object(doc))?;
        writeln!(w)?;
        Ok(())
    }
}
