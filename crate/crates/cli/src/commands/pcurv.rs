use anyhow::Result;
use dormancy::connection::{
    check_p_trivial_determinant, level, p_curvature, radius_at, residue_matrix, traceless_part,
};
use dormancy::RatFunc;
use serde::Serialize;

use crate::cli::PcurvArgs;
use crate::connection_file::ConnectionFile;
use crate::output::{csv_string, json_string, Execution, EXIT_OK};

#[derive(Serialize)]
struct Entry {
    numerator: Vec<u32>,
    denominator: Vec<u32>,
    text: String,
}

impl From<&RatFunc> for Entry {
    fn from(f: &RatFunc) -> Entry {
        Entry {
            numerator: f.numerator().values(),
            denominator: f.denominator().values(),
            text: f.to_string(),
        }
    }
}

#[derive(Serialize)]
struct PointReport {
    point: u32,
    residue: [[u32; 2]; 2],
    residue_trace: u32,
    radius_squared: u32,
    /// Empty when the squared radius is a non-square mod p.
    radius: Option<u32>,
    kodaira_spencer_iso: Option<bool>,
}

#[derive(Serialize)]
struct KsReport {
    entry: Entry,
    nonzero: bool,
}

#[derive(Serialize)]
struct PcurvReport {
    p: u32,
    splitting: [i64; 2],
    points: Vec<PointReport>,
    p_curvature: [[Entry; 2]; 2],
    dormant: bool,
    projectively_dormant: bool,
    p_trivial_determinant: bool,
    level_doubled: i64,
    indigenous_level: bool,
    meets_level_conditions: bool,
    kodaira_spencer: Option<KsReport>,
}

pub fn run(args: &PcurvArgs) -> Result<Execution> {
    let conn = ConnectionFile::load(&args.file)?.build()?;
    let psi = p_curvature(&conn);
    let lv = level(&conn);
    let mut points = Vec::new();
    for &pt in conn.points() {
        let r = residue_matrix(&conn, pt)?;
        let rad = radius_at(&conn, pt)?;
        let iso = lv
            .kodaira_spencer
            .as_ref()
            .map(|ks| ks.iso_at.iter().any(|&(q, iso)| q == pt && iso));
        points.push(PointReport {
            point: pt.value(),
            residue: r.entries.map(|row| row.map(|x| x.value())),
            residue_trace: r.trace().value(),
            radius_squared: rad.squared.value(),
            radius: rad.representative,
            kodaira_spencer_iso: iso,
        });
    }
    let e = psi.entries();
    let (a, b) = conn.splitting();
    let report = PcurvReport {
        p: conn.p(),
        splitting: [a, b],
        points,
        p_curvature: [
            [(&e[0][0]).into(), (&e[0][1]).into()],
            [(&e[1][0]).into(), (&e[1][1]).into()],
        ],
        dormant: psi.is_zero(),
        projectively_dormant: traceless_part(&psi).is_zero(),
        p_trivial_determinant: check_p_trivial_determinant(&conn),
        level_doubled: lv.doubled,
        indigenous_level: lv.indigenous,
        meets_level_conditions: lv.meets_level_conditions(),
        kodaira_spencer: lv.kodaira_spencer.as_ref().map(|ks| KsReport {
            entry: (&ks.entry).into(),
            nonzero: ks.nonzero,
        }),
    };

    let mut stdout = format!("p = {}, splitting ({a}, {b})\n", report.p);
    for pr in &report.points {
        let [[r11, r12], [r21, r22]] = pr.residue;
        stdout += &format!(
            "point {}: residue [[{r11}, {r12}], [{r21}, {r22}]], trace {}, rho^2 {}, rho {}\n",
            pr.point,
            pr.residue_trace,
            pr.radius_squared,
            pr.radius.map_or("non-split".to_string(), |r| r.to_string())
        );
    }
    for (i, row) in report.p_curvature.iter().enumerate() {
        for (j, ent) in row.iter().enumerate() {
            stdout += &format!("psi[{}][{}] = {}\n", i + 1, j + 1, ent.text);
        }
    }
    stdout += &format!("dormant: {}\n", report.dormant);
    stdout += &format!("projectively dormant: {}\n", report.projectively_dormant);
    stdout += &format!("p-trivial determinant: {}\n", report.p_trivial_determinant);
    stdout += &format!(
        "level: {}/2, indigenous: {}, level conditions: {}\n",
        report.level_doubled, report.indigenous_level, report.meets_level_conditions
    );
    if let Some(ks) = &report.kodaira_spencer {
        stdout += &format!(
            "kodaira-spencer: {} (nonzero: {})\n",
            ks.entry.text, ks.nonzero
        );
    }

    #[derive(Serialize)]
    struct Row {
        point: u32,
        r11: u32,
        r12: u32,
        r21: u32,
        r22: u32,
        trace: u32,
        radius_squared: u32,
        radius: Option<u32>,
        kodaira_spencer_iso: Option<bool>,
    }
    let rows: Vec<Row> = report
        .points
        .iter()
        .map(|p| Row {
            point: p.point,
            r11: p.residue[0][0],
            r12: p.residue[0][1],
            r21: p.residue[1][0],
            r22: p.residue[1][1],
            trace: p.residue_trace,
            radius_squared: p.radius_squared,
            radius: p.radius,
            kodaira_spencer_iso: p.kodaira_spencer_iso,
        })
        .collect();
    Ok(Execution {
        stdout,
        files: vec![
            ("pcurv.csv".into(), csv_string(&rows)?),
            ("pcurv.json".into(), json_string(&report)?),
        ],
        code: EXIT_OK,
    })
}
