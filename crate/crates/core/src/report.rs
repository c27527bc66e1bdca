//! Structured scan records and their CSV / JSON renderings.
//!
//! Numbers are rounded to 12 significant digits before rendering, so two
//! runs over the same inputs produce byte-identical output.

use std::fmt;

use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScanKind {
    Characters,
    LValue,
    Coefficients,
    Siegel,
    RealZeros,
    FBeta,
    LogBound,
    PrimeCount,
    SiegelWalfisz,
    FGrowth,
    Convexity,
    ZetaGrowth,
    FeRatio,
    PerronVerify,
    FloorSamples,
}

impl ScanKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ScanKind::Characters => "characters",
            ScanKind::LValue => "lvalue",
            ScanKind::Coefficients => "coefficients",
            ScanKind::Siegel => "siegel",
            ScanKind::RealZeros => "real_zeros",
            ScanKind::FBeta => "f_beta",
            ScanKind::LogBound => "l1_log_bound",
            ScanKind::PrimeCount => "prime_count",
            ScanKind::SiegelWalfisz => "siegel_walfisz",
            ScanKind::FGrowth => "f_growth",
            ScanKind::Convexity => "convexity",
            ScanKind::ZetaGrowth => "zeta_growth",
            ScanKind::FeRatio => "fe_ratio",
            ScanKind::PerronVerify => "perron_verify",
            ScanKind::FloorSamples => "floor_samples",
        }
    }
}

impl fmt::Display for ScanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub key: String,
    pub values: Vec<f64>,
}

/// Argmin / argmax of one column.
#[derive(Debug, Clone, PartialEq)]
pub struct Extrema {
    pub column: String,
    pub argmin: String,
    pub min: f64,
    pub argmax: String,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub kind: ScanKind,
    pub parameters: Vec<(String, String)>,
    pub key_column: String,
    pub columns: Vec<String>,
    pub rows: Vec<ScanRow>,
    pub extrema: Option<Extrema>,
    pub pass: bool,
}

impl ScanReport {
    pub fn new(kind: ScanKind, key_column: &str, columns: &[&str]) -> Self {
        Self {
            kind,
            parameters: Vec::new(),
            key_column: key_column.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            extrema: None,
            pass: true,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.set_param(key, value);
        self
    }

    pub fn set_param(&mut self, key: &str, value: impl fmt::Display) {
        let value = value.to_string();
        match self.parameters.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.parameters.push((key.to_string(), value)),
        }
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.parameters
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn push_row(&mut self, key: impl Into<String>, values: Vec<f64>) {
        debug_assert_eq!(values.len(), self.columns.len());
        self.rows.push(ScanRow {
            key: key.into(),
            values,
        });
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// All values of a named column, in row order.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r.values[i]).collect())
    }

    /// Sets `extrema` from a linear pass over `column`; ties keep the first
    /// row. Leaves `None` when the report has no rows.
    pub fn compute_extrema(&mut self, column: &str) {
        let Some(i) = self.column_index(column) else {
            self.extrema = None;
            return;
        };
        let mut best: Option<Extrema> = None;
        for row in &self.rows {
            let v = row.values[i];
            match &mut best {
                None => {
                    best = Some(Extrema {
                        column: column.to_string(),
                        argmin: row.key.clone(),
                        min: v,
                        argmax: row.key.clone(),
                        max: v,
                    })
                }
                Some(e) => {
                    if v < e.min {
                        e.min = v;
                        e.argmin = row.key.clone();
                    }
                    if v > e.max {
                        e.max = v;
                        e.argmax = row.key.clone();
                    }
                }
            }
        }
        self.extrema = best;
    }
}

/// Formats with 12 significant digits, using the shortest rendering of the
/// rounded value.
pub fn format_sig12(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    let r = round_sig12(v);
    let a = r.abs();
    if a == 0.0 || (1e-5..1e15).contains(&a) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

fn round_sig12(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.11e}").parse().unwrap_or(v)
}

pub(crate) fn json_number(v: f64) -> Value {
    Number::from_f64(round_sig12(v))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

/// Rendering to the two supported output formats.
pub trait Render {
    fn to_csv(&self) -> String;
    fn to_json(&self) -> String;
}

pub(crate) fn write_csv(header: &[String], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

impl Render for ScanReport {
    fn to_csv(&self) -> String {
        let mut header = vec![self.key_column.clone()];
        header.extend(self.columns.iter().cloned());
        write_csv(
            &header,
            self.rows.iter().map(|r| {
                std::iter::once(r.key.clone())
                    .chain(r.values.iter().map(|&v| format_sig12(v)))
                    .collect()
            }),
        )
    }

    fn to_json(&self) -> String {
        let mut obj = Map::new();
        obj.insert("scan_kind".into(), Value::String(self.kind.as_str().into()));
        let params: Map<String, Value> = self
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        obj.insert("parameters".into(), Value::Object(params));
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut m = Map::new();
                m.insert(self.key_column.clone(), Value::String(r.key.clone()));
                for (c, &v) in self.columns.iter().zip(&r.values) {
                    m.insert(c.clone(), json_number(v));
                }
                Value::Object(m)
            })
            .collect();
        obj.insert("rows".into(), Value::Array(rows));
        let extrema = match &self.extrema {
            None => Value::Null,
            Some(e) => {
                let mut m = Map::new();
                m.insert("column".into(), Value::String(e.column.clone()));
                m.insert("argmin".into(), Value::String(e.argmin.clone()));
                m.insert("min".into(), json_number(e.min));
                m.insert("argmax".into(), Value::String(e.argmax.clone()));
                m.insert("max".into(), json_number(e.max));
                Value::Object(m)
            }
        };
        obj.insert("extrema".into(), extrema);
        obj.insert("pass".into(), Value::Bool(self.pass));
        let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("json");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig12_formatting() {
        assert_eq!(format_sig12(std::f64::consts::PI / 4.0), "0.785398163397");
        assert_eq!(format_sig12(1.0), "1");
        assert_eq!(format_sig12(0.0), "0");
        assert_eq!(format_sig12(-2.5e-9), "-2.5e-9");
        assert_eq!(format_sig12(78498.0), "78498");
    }

    #[test]
    fn empty_report_csv_is_header_only() {
        let r = ScanReport::new(ScanKind::Siegel, "d", &["l1", "weighted"]);
        assert_eq!(r.to_csv(), "d,l1,weighted\n");
        let json: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["rows"].as_array().unwrap().len(), 0);
        assert!(json["extrema"].is_null());
        assert_eq!(json["pass"], Value::Bool(true));
    }

    #[test]
    fn json_keys_in_fixed_order() {
        let mut r = ScanReport::new(ScanKind::LogBound, "d", &["ratio"]).with_param("dmax", 10);
        r.push_row("-3", vec![0.55]);
        r.compute_extrema("ratio");
        let s = r.to_json();
        let pos: Vec<usize> = ["scan_kind", "parameters", "rows", "extrema", "pass"]
            .iter()
            .map(|k| s.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn csv_quotes_fields_with_commas() {
        let mut r = ScanReport::new(ScanKind::FGrowth, "point", &["ratio"]);
        r.push_row("0,10", vec![0.25]);
        assert_eq!(r.to_csv(), "point,ratio\n\"0,10\",0.25\n");
    }

    #[test]
    fn extrema_first_tie_wins() {
        let mut r = ScanReport::new(ScanKind::Siegel, "d", &["v"]);
        r.push_row("a", vec![2.0]);
        r.push_row("b", vec![1.0]);
        r.push_row("c", vec![1.0]);
        r.push_row("d", vec![3.0]);
        r.compute_extrema("v");
        let e = r.extrema.unwrap();
        assert_eq!((e.argmin.as_str(), e.min), ("b", 1.0));
        assert_eq!((e.argmax.as_str(), e.max), ("d", 3.0));
    }
}
