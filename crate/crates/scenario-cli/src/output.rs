//! Time-series serialization.
//!
//! Both formats carry the same fields: a header (solver id, code version,
//! optional frame tag and seed, ordered parameter echo) and the sampled
//! Bloch components. Floats are written with 17 significant digits in a
//! fixed locale-independent layout, so emitted files are byte-deterministic
//! and parse back bit-exactly.

use std::path::Path;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::config::{FrameTag, OutputFormat};
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesHeader {
    /// Solver id, or a descriptive tag for derived series.
    pub solver: String,
    pub version: String,
    pub frame: Option<FrameTag>,
    pub seed: Option<u64>,
    /// Ordered parameter echo (name, rendered value).
    pub params: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub header: SeriesHeader,
    pub times: Vec<f64>,
    pub values: Vec<Vector3<f64>>,
}

impl TimeSeries {
    pub fn new(header: SeriesHeader, times: Vec<f64>, values: Vec<Vector3<f64>>) -> Self {
        assert_eq!(times.len(), values.len(), "times and values must have equal length");
        TimeSeries { header, times, values }
    }
}

fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn render_csv(series: &TimeSeries) -> String {
    let h = &series.header;
    let mut out = String::new();
    out.push_str(&format!("# solver: {}\n", h.solver));
    out.push_str(&format!("# version: {}\n", h.version));
    if let Some(frame) = h.frame {
        out.push_str(&format!("# frame: {frame}\n"));
    }
    if let Some(seed) = h.seed {
        out.push_str(&format!("# seed: {seed}\n"));
    }
    for (k, v) in &h.params {
        out.push_str(&format!("# param {k}: {v}\n"));
    }
    match h.frame {
        Some(_) => out.push_str("# columns: t,r_x,r_y,r_z,frame\n"),
        None => out.push_str("# columns: t,r_x,r_y,r_z\n"),
    }
    for (t, r) in series.times.iter().zip(&series.values) {
        out.push_str(&fmt_float(*t));
        for c in r.iter() {
            out.push(',');
            out.push_str(&fmt_float(*c));
        }
        if let Some(frame) = h.frame {
            out.push(',');
            out.push_str(frame.as_str());
        }
        out.push('\n');
    }
    out
}

/// Serde mirror of [`TimeSeries`] used for the JSON format.
#[derive(Serialize, Deserialize)]
struct JsonSeries {
    solver: String,
    version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    frame: Option<FrameTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    params: Vec<(String, String)>,
    times: Vec<f64>,
    values: Vec<[f64; 3]>,
}

pub fn render_json(series: &TimeSeries) -> String {
    let mirror = JsonSeries {
        solver: series.header.solver.clone(),
        version: series.header.version.clone(),
        frame: series.header.frame,
        seed: series.header.seed,
        params: series.header.params.clone(),
        times: series.times.clone(),
        values: series.values.iter().map(|v| [v.x, v.y, v.z]).collect(),
    };
    let mut text = serde_json::to_string_pretty(&mirror)
        .expect("time series serialization cannot fail");
    text.push('\n');
    text
}

pub fn emit_timeseries(
    series: &TimeSeries,
    path: &Path,
    format: OutputFormat,
) -> Result<(), CliError> {
    let text = match format {
        OutputFormat::Csv => render_csv(series),
        OutputFormat::Json => render_json(series),
    };
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn parse_float(path: &Path, line_no: usize, field: &str) -> Result<f64, CliError> {
    field.trim().parse::<f64>().map_err(|_| CliError::Parse {
        path: path.display().to_string(),
        message: format!("line {line_no}: `{field}` is not a number"),
    })
}

fn parse_frame(path: &Path, text: &str) -> Result<FrameTag, CliError> {
    match text.trim() {
        "lab" => Ok(FrameTag::Lab),
        "rotating" => Ok(FrameTag::Rotating),
        other => Err(CliError::Parse {
            path: path.display().to_string(),
            message: format!("unknown frame tag `{other}`"),
        }),
    }
}

fn parse_csv(path: &Path, text: &str) -> Result<TimeSeries, CliError> {
    let bad = |line_no: usize, message: String| CliError::Parse {
        path: path.display().to_string(),
        message: format!("line {line_no}: {message}"),
    };
    let mut header = SeriesHeader {
        solver: String::new(),
        version: String::new(),
        frame: None,
        seed: None,
        params: Vec::new(),
    };
    let mut times = Vec::new();
    let mut values = Vec::new();

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim_start();
            let Some((key, value)) = rest.split_once(':') else {
                continue;
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "solver" => header.solver = value.to_string(),
                "version" => header.version = value.to_string(),
                "frame" => header.frame = Some(parse_frame(path, value)?),
                "seed" => {
                    header.seed = Some(value.parse::<u64>().map_err(|_| {
                        bad(line_no, format!("`{value}` is not a valid seed"))
                    })?);
                }
                "columns" => {}
                _ => {
                    if let Some(name) = key.strip_prefix("param ") {
                        header.params.push((name.to_string(), value.to_string()));
                    }
                }
            }
            continue;
        }

        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 && fields.len() != 5 {
            return Err(bad(line_no, format!("expected 4 or 5 fields, got {}", fields.len())));
        }
        times.push(parse_float(path, line_no, fields[0])?);
        values.push(Vector3::new(
            parse_float(path, line_no, fields[1])?,
            parse_float(path, line_no, fields[2])?,
            parse_float(path, line_no, fields[3])?,
        ));
        if fields.len() == 5 {
            let frame = parse_frame(path, fields[4])?;
            match header.frame {
                None => header.frame = Some(frame),
                Some(h) if h != frame => {
                    return Err(bad(
                        line_no,
                        format!("row frame `{frame}` contradicts header frame `{h}`"),
                    ));
                }
                Some(_) => {}
            }
        }
    }
    Ok(TimeSeries { header, times, values })
}

fn parse_json(path: &Path, text: &str) -> Result<TimeSeries, CliError> {
    let mirror: JsonSeries = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    if mirror.times.len() != mirror.values.len() {
        return Err(CliError::Parse {
            path: path.display().to_string(),
            message: format!(
                "times has {} entries but values has {}",
                mirror.times.len(),
                mirror.values.len()
            ),
        });
    }
    Ok(TimeSeries {
        header: SeriesHeader {
            solver: mirror.solver,
            version: mirror.version,
            frame: mirror.frame,
            seed: mirror.seed,
            params: mirror.params,
        },
        times: mirror.times,
        values: mirror.values.iter().map(|v| Vector3::new(v[0], v[1], v[2])).collect(),
    })
}

/// Reads either format back; the format is sniffed from the content.
pub fn read_timeseries(path: &Path) -> Result<TimeSeries, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    if text.trim_start().starts_with('{') {
        parse_json(path, &text)
    } else {
        parse_csv(path, &text)
    }
}
