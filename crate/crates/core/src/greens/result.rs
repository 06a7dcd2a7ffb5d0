use std::fmt::Write as _;
use std::io::{self, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::lattice::Family;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GreenMeta {
    pub lattice: Family,
    pub z: u32,
    pub displacement: Vec<i64>,
    pub terms_used: usize,
    /// Kaiser `beta`, or `None` for the rectangular window.
    pub window_beta: Option<f64>,
    pub model: Option<String>,
    pub fitted_coefficient: Option<f64>,
    /// `|h_N|` for the subtracted series, `|g_N|` for the raw one.
    pub residual_tail_estimate: f64,
    pub edge_eps: f64,
    pub failed_points: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GreenPoint {
    pub omega: f64,
    pub green: Option<Complex64>,
    pub spectral: Option<f64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GreenResult {
    pub meta: GreenMeta,
    pub points: Vec<GreenPoint>,
}

/// Significant digits used by [`GreenResult::to_csv`].
pub const CSV_DIGITS: usize = 17;

fn cell(out: &mut String, v: Option<f64>, digits: usize) {
    if let Some(v) = v {
        let _ = write!(out, "{:.*e}", digits.saturating_sub(1), v);
    }
}

impl GreenResult {
    pub fn omega(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.omega).collect()
    }

    pub fn spectral(&self) -> Vec<Option<f64>> {
        self.points.iter().map(|p| p.spectral).collect()
    }

    pub fn to_csv(&self) -> String {
        self.to_csv_digits(CSV_DIGITS)
    }

    pub fn to_csv_digits(&self, digits: usize) -> String {
        let mut out = String::from("omega,re_g,im_g,spectral\n");
        for p in &self.points {
            cell(&mut out, Some(p.omega), digits);
            out.push(',');
            cell(&mut out, p.green.map(|g| g.re), digits);
            out.push(',');
            cell(&mut out, p.green.map(|g| g.im), digits);
            out.push(',');
            cell(&mut out, p.spectral, digits);
            out.push('\n');
        }
        out
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(self.to_csv().as_bytes())
    }

    pub fn meta_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.meta).expect("meta is plain data")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let data: Vec<serde_json::Value> = self
            .points
            .iter()
            .map(|p| {
                let mut v = json!({
                    "omega": p.omega,
                    "re_g": p.green.map(|g| g.re),
                    "im_g": p.green.map(|g| g.im),
                    "spectral": p.spectral,
                });
                if let Some(e) = &p.error {
                    v["error"] = json!(e);
                }
                v
            })
            .collect();
        json!({ "meta": self.meta_json(), "data": data })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_leaves_failed_cells_empty() {
        let r = GreenResult {
            meta: GreenMeta {
                lattice: Family::Chain,
                z: 2,
                displacement: vec![0],
                terms_used: 3,
                window_beta: None,
                model: None,
                fitted_coefficient: None,
                residual_tail_estimate: 0.0,
                edge_eps: 1e-12,
                failed_points: 1,
            },
            points: vec![
                GreenPoint {
                    omega: 2.0,
                    green: Some(Complex64::new(0.5, 0.0)),
                    spectral: Some(0.0),
                    error: None,
                },
                GreenPoint {
                    omega: 1.0,
                    green: None,
                    spectral: None,
                    error: Some("edge".into()),
                },
            ],
        };
        let csv = r.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "omega,re_g,im_g,spectral");
        assert_eq!(
            lines[1],
            "2.0000000000000000e0,5.0000000000000000e-1,0.0000000000000000e0,0.0000000000000000e0"
        );
        assert_eq!(lines[2], "1.0000000000000000e0,,,");
        assert_eq!(r.to_json()["data"][1]["re_g"], serde_json::Value::Null);
    }
}
