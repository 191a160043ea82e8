//! CSV serialization. Every number is written with 17 significant digits so
//! values round-trip exactly and repeated runs are byte-identical.

use std::path::Path;

use crate::coefficients::CoefficientReport;
use crate::error::{Error, Result};
use crate::force::{ForcePoint, TrajectoryPoint};
use crate::susceptibility::SusceptibilityValue;

pub const SWEEP_HEADER: [&str; 9] = [
    "temperature",
    "lambda_spectral",
    "lambda_entropic",
    "mu_spectral",
    "mu_entropic",
    "A",
    "B",
    "err_lambda",
    "err_mu",
];

pub const CHI_HEADER: [&str; 8] = [
    "omega",
    "re_chi_vacuum",
    "im_chi_vacuum",
    "re_chi_thermal",
    "im_chi_thermal",
    "re_chi_total",
    "im_chi_total",
    "err",
];

pub const FORCE_HEADER: [&str; 2] = ["t", "F"];

/// Scientific notation with 17 significant digits.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_rows<I>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = Vec<f64>>,
{
    let mut writer = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    writer.write_record(header).map_err(io)?;
    for row in rows {
        writer.write_record(row.iter().map(|v| format_number(*v))).map_err(io)?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

pub fn sweep_csv(reports: &[CoefficientReport]) -> Result<String> {
    write_rows(
        &SWEEP_HEADER,
        reports.iter().map(|r| {
            vec![
                r.temp,
                r.lambda_spectral,
                r.lambda_entropic,
                r.mu_spectral,
                r.mu_entropic,
                r.energy_flux,
                r.stocked_quantity,
                r.errors.lambda(),
                r.errors.mu(),
            ]
        }),
    )
}

pub fn chi_csv(values: &[SusceptibilityValue]) -> Result<String> {
    write_rows(
        &CHI_HEADER,
        values.iter().map(|v| {
            vec![
                v.omega,
                v.chi_vacuum.re,
                v.chi_vacuum.im,
                v.chi_thermal.re,
                v.chi_thermal.im,
                v.chi_total.re,
                v.chi_total.im,
                v.error_estimate,
            ]
        }),
    )
}

pub fn force_csv(points: &[ForcePoint]) -> Result<String> {
    write_rows(&FORCE_HEADER, points.iter().map(|p| vec![p.t, p.force]))
}

/// Parses a `t,q` trajectory table.
pub fn parse_trajectory(text: &str) -> Result<Vec<TrajectoryPoint>> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| Error::Config(format!("trajectory: {e}")))?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Config(format!("trajectory needs a `{name}` column")))
    };
    let (t_col, q_col) = (column("t")?, column("q")?);
    let mut points = Vec::new();
    for (k, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Config(format!("trajectory row {}: {e}", k + 1)))?;
        let field = |col: usize| -> Result<f64> {
            record
                .get(col)
                .and_then(|s| s.parse::<f64>().ok())
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::Config(format!("trajectory row {}: malformed number", k + 1)))
        };
        points.push(TrajectoryPoint {
            t: field(t_col)?,
            q: field(q_col)?,
        });
    }
    Ok(points)
}

pub fn read_trajectory(path: &Path) -> Result<Vec<TrajectoryPoint>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_trajectory(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_number(1.0), "1.0000000000000000e0");
        assert_eq!(format_number(0.1), "1.0000000000000001e-1");
        assert_eq!(format_number(-2.5e-300), "-2.5000000000000000e-300");
        for x in [std::f64::consts::PI, 1.0 / 3.0, 6.02214076e23, -1e-17] {
            assert_eq!(format_number(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn chi_layout() {
        let v = SusceptibilityValue {
            omega: 1.0,
            chi_vacuum: Complex64::new(0.0, 0.5),
            chi_thermal: Complex64::new(0.25, 0.0),
            chi_total: Complex64::new(0.25, 0.5),
            error_estimate: 1e-12,
        };
        let text = chi_csv(&[v]).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CHI_HEADER.join(","));
        let row: Vec<f64> = lines.next().unwrap().split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(row, vec![1.0, 0.0, 0.5, 0.25, 0.0, 0.25, 0.5, 1e-12]);
        assert!(lines.next().is_none());
    }

    #[test]
    fn trajectory_round_trip() {
        let points = parse_trajectory("t, q\n0, 1\n0.5, 2\n").unwrap();
        assert_eq!(points, vec![TrajectoryPoint { t: 0.0, q: 1.0 }, TrajectoryPoint { t: 0.5, q: 2.0 }]);
        let force = force_csv(&[ForcePoint { t: 0.5, force: -1.0 }]).unwrap();
        assert_eq!(force, "t,F\n5.0000000000000000e-1,-1.0000000000000000e0\n");
        assert!(parse_trajectory("t,x\n0,1\n").is_err());
        assert!(parse_trajectory("t,q\n0,abc\n").is_err());
    }
}
