//! Tables, number formatting and the hand-written SVG emitter.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::CliError;

/// 17 significant digits, independent of locale.
pub fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        format!("{v}")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Num(v) => fmt_f64(*v),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => json!(i),
            // non-finite values have no JSON number form
            Cell::Num(v) if v.is_finite() => json!(v),
            Cell::Num(v) => json!(v.to_string()),
            Cell::Text(s) => json!(s),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

/// Column names carry units, e.g. `x (length)`; `keys` are the JSON field names.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub keys: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[(&str, &str)]) -> Self {
        Table {
            keys: columns.iter().map(|c| c.0.to_string()).collect(),
            headers: columns.iter().map(|c| c.1.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Rows as objects keyed by column key.
    pub fn to_json_rows(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let mut m = Map::new();
                    for (k, c) in self.keys.iter().zip(row) {
                        m.insert(k.clone(), c.json());
                    }
                    Value::Object(m)
                })
                .collect(),
        )
    }

    pub fn units_json(&self) -> Value {
        let mut m = Map::new();
        for (k, h) in self.keys.iter().zip(&self.headers) {
            m.insert(k.clone(), json!(h));
        }
        Value::Object(m)
    }
}

pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Writes to `path`, or to stdout when absent.
pub fn emit(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, content),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(content.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

pub fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    let mut f = File::create(path).map_err(|e| CliError::Output(path.display().to_string(), e))?;
    f.write_all(content.as_bytes())
        .map_err(|e| CliError::Output(path.display().to_string(), e))
}

/// Minimal SVG 1.1 document with a data-to-pixel map.
pub struct Svg {
    body: String,
    width: f64,
    height: f64,
    margin: f64,
    x_range: (f64, f64),
    y_range: (f64, f64),
}

impl Svg {
    pub fn new(width: f64, height: f64, x_range: (f64, f64), y_range: (f64, f64)) -> Self {
        Svg {
            body: String::new(),
            width,
            height,
            margin: 48.0,
            x_range,
            y_range,
        }
    }

    pub fn px(&self, x: f64) -> f64 {
        let (lo, hi) = self.x_range;
        self.margin + (x - lo) / (hi - lo) * (self.width - 2.0 * self.margin)
    }

    pub fn py(&self, y: f64) -> f64 {
        let (lo, hi) = self.y_range;
        self.height - self.margin - (y - lo) / (hi - lo) * (self.height - 2.0 * self.margin)
    }

    pub fn polyline(&mut self, pts: &[(f64, f64)], stroke: &str) {
        let mut p = String::new();
        for (i, &(x, y)) in pts.iter().enumerate() {
            if i > 0 {
                p.push(' ');
            }
            let _ = write!(p, "{:.2},{:.2}", self.px(x), self.py(y));
        }
        let _ = writeln!(
            self.body,
            r#"<polyline points="{p}" fill="none" stroke="{stroke}" stroke-width="1.5" clip-path="url(#plot)"/>"#
        );
    }

    pub fn line(&mut self, (x0, y0): (f64, f64), (x1, y1): (f64, f64), stroke: &str) {
        let _ = writeln!(
            self.body,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{stroke}" stroke-width="1"/>"#,
            self.px(x0),
            self.py(y0),
            self.px(x1),
            self.py(y1)
        );
    }

    /// Text at pixel coordinates.
    pub fn text(&mut self, x: f64, y: f64, anchor: &str, s: &str) {
        let s = s
            .replace('&', "&amp;")
            .replace('<', "&lt;")
            .replace('>', "&gt;");
        let _ = writeln!(
            self.body,
            r#"<text x="{x:.2}" y="{y:.2}" text-anchor="{anchor}" font-family="sans-serif" font-size="12">{s}</text>"#
        );
    }

    pub fn axes(&mut self, x_label: &str, y_label: &str) {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        self.line((x0, y0), (x1, y0), "black");
        self.line((x0, y0), (x0, y1), "black");
        let bottom = self.height - self.margin;
        for (v, anchor) in [(x0, "start"), (x1, "end")] {
            let px = self.px(v);
            self.text(px, bottom + 16.0, anchor, &format!("{v:.2}"));
        }
        let left = self.margin;
        self.text(left - 4.0, self.py(y1) + 4.0, "end", &format!("{y1:.2}"));
        self.text(left - 4.0, self.py(y0) + 4.0, "end", &format!("{y0:.2}"));
        self.text(self.width / 2.0, bottom + 30.0, "middle", x_label);
        self.text(14.0, self.height / 2.0, "middle", y_label);
    }

    pub fn finish(self) -> String {
        let m = self.margin;
        format!(
            concat!(
                "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n",
                "<!DOCTYPE svg PUBLIC \"-//W3C//DTD SVG 1.1//EN\" \"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd\">\n",
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
                "<defs><clipPath id=\"plot\"><rect x=\"{m}\" y=\"{m}\" width=\"{pw}\" height=\"{ph}\"/></clipPath></defs>\n",
                "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
                "{body}</svg>\n"
            ),
            w = self.width,
            h = self.height,
            m = m,
            pw = self.width - 2.0 * m,
            ph = self.height - 2.0 * m,
            body = self.body
        )
    }
}
