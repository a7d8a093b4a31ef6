//! Output records and their three renderings.
//!
//! Exact values are serialized straight from `Rat` as "numerator/denominator"
//! strings (or bare integers); they never pass through floats. Polynomials
//! are coefficient arrays with the constant term first.

use cbs_core::exact::{BiPoly, Poly, Rat};
use cbs_core::lehmer::ZetaValue;
use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OutputRecord {
    Sequence {
        name: String,
        index: i64,
        value: String,
    },
    Zeta {
        index: i64,
        rational_part: String,
        pi_sqrt3_part: String,
    },
    Polynomial {
        family: String,
        index: i64,
        coeffs: Vec<String>,
    },
    /// Bivariate polynomial: `coeffs[i][j]` is the x^i y^j coefficient.
    #[serde(rename = "polynomial")]
    Bivariate {
        family: String,
        index: i64,
        coeffs: Vec<Vec<String>>,
        display: String,
    },
    Numeric {
        target: String,
        closed_form: f64,
        series: f64,
        abs_diff: f64,
    },
}

impl OutputRecord {
    pub fn sequence(name: &str, index: i64, value: &Rat) -> Self {
        OutputRecord::Sequence {
            name: name.to_string(),
            index,
            value: value.to_string(),
        }
    }

    pub fn zeta(index: i64, z: &ZetaValue) -> Self {
        OutputRecord::Zeta {
            index,
            rational_part: z.rational_part.to_string(),
            pi_sqrt3_part: z.pi_sqrt3_part.to_string(),
        }
    }

    pub fn polynomial(family: &str, index: i64, poly: &Poly) -> Self {
        OutputRecord::Polynomial {
            family: family.to_string(),
            index,
            coeffs: poly.coeffs().iter().map(Rat::to_string).collect(),
        }
    }

    pub fn bivariate(family: &str, index: i64, poly: &BiPoly) -> Self {
        // rectangular matrix, rows indexed by x-degree, entries by y-degree
        let rows = poly.deg_x().map_or(0, |d| d + 1);
        let cols = poly.deg_y().map_or(0, |d| d + 1);
        let coeffs = (0..rows)
            .map(|i| (0..cols).map(|j| poly.coeff(i, j).to_string()).collect())
            .collect();
        OutputRecord::Bivariate {
            family: family.to_string(),
            index,
            coeffs,
            display: poly.to_string(),
        }
    }

    pub fn numeric(target: &str, closed_form: f64, series: f64) -> Self {
        OutputRecord::Numeric {
            target: target.to_string(),
            closed_form,
            series,
            abs_diff: (closed_form - series).abs(),
        }
    }

    /// One line in the requested format.
    pub fn render(&self, format: Format) -> String {
        if format == Format::Json {
            return serde_json::to_string(self).expect("record serialization");
        }
        let fields: Vec<String> = match self {
            OutputRecord::Sequence { index, value, .. } => {
                vec![index.to_string(), value.clone()]
            }
            OutputRecord::Zeta {
                index,
                rational_part,
                pi_sqrt3_part,
            } => vec![
                index.to_string(),
                rational_part.clone(),
                pi_sqrt3_part.clone(),
            ],
            OutputRecord::Polynomial { coeffs, .. } => coeffs.clone(),
            OutputRecord::Bivariate {
                coeffs, display, ..
            } => {
                if format == Format::Plain {
                    return display.clone();
                }
                // csv: matrix rows separated by ';'
                return coeffs
                    .iter()
                    .map(|row| row.join(","))
                    .collect::<Vec<_>>()
                    .join(";");
            }
            OutputRecord::Numeric {
                closed_form,
                series,
                abs_diff,
                ..
            } => {
                if format == Format::Plain {
                    return format!(
                        "closed_form={closed_form} series={series} abs_diff={abs_diff:e}"
                    );
                }
                vec![
                    closed_form.to_string(),
                    series.to_string(),
                    format!("{abs_diff:e}"),
                ]
            }
        };
        match format {
            Format::Plain => fields.join(" "),
            Format::Csv => fields.join(","),
            Format::Json => unreachable!(),
        }
    }
}
