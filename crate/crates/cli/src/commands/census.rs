use anyhow::Result;
use dormancy::census::{census, census_sweep, CensusResult, CensusStatus, RamProfile};
use serde::Serialize;

use super::join;
use crate::cli::CensusArgs;
use crate::output::{csv_string, json_string, Execution, EXIT_BUDGET, EXIT_OK};

#[derive(Serialize)]
struct CensusRecord {
    p: u32,
    k: u32,
    points: String,
    orders: String,
    degree: u64,
    status: &'static str,
    orbit_count: Option<usize>,
    raw_count: Option<u64>,
    branches: u64,
    candidates: u64,
    wild_rejections: u64,
    method: &'static str,
}

fn record(r: &CensusResult) -> CensusRecord {
    CensusRecord {
        p: r.p,
        k: r.k,
        points: join(r.profile.points(), ","),
        orders: join(r.profile.orders(), ","),
        degree: r.degree,
        status: if r.is_complete() {
            "complete"
        } else {
            "incomplete"
        },
        orbit_count: r.orbit_count,
        raw_count: r.raw_count,
        branches: r.branches,
        candidates: r.candidates,
        wild_rejections: r.wild_rejections,
        method: "census",
    }
}

fn describe(r: &CensusResult) -> String {
    let mut s = format!("F_{}^{}: ", r.p, r.k);
    match r.status {
        CensusStatus::Complete => {
            s += &format!(
                "orbit_count {} (raw {}, {} candidates, {} wild)\n",
                r.orbit_count.unwrap_or(0),
                r.raw_count.unwrap_or(0),
                r.candidates,
                r.wild_rejections
            );
            for rep in &r.representatives {
                s += &format!("  {}\n", rep.map);
            }
        }
        CensusStatus::Incomplete { required, budget } => {
            s += &format!("incomplete: needs {required} steps, budget {budget}\n");
        }
    }
    s
}

pub fn run(args: &CensusArgs) -> Result<Execution> {
    let profile = RamProfile::new(args.points.clone(), args.orders.clone())?;
    let mut stdout = format!(
        "points {} orders {} degree {}\n",
        join(profile.points(), ","),
        join(profile.orders(), ","),
        profile.degree()
    );
    let (results, json) = if args.sweep.is_empty() {
        let r = census(args.p, args.k, &profile, args.budget)?;
        let json = json_string(&r)?;
        (vec![r], json)
    } else {
        let s = census_sweep(args.p, &args.sweep, &profile, args.budget)?;
        let json = json_string(&s)?;
        for r in &s.results {
            stdout += &describe(r);
        }
        stdout += &format!(
            "monotone along subfields: {}; stabilized: {}\n",
            s.monotone,
            s.stabilized.map_or("no".to_string(), |c| c.to_string())
        );
        (s.results, json)
    };
    if args.sweep.is_empty() {
        stdout += &describe(&results[0]);
    }
    let code = if results.iter().all(CensusResult::is_complete) {
        EXIT_OK
    } else {
        EXIT_BUDGET
    };
    let rows: Vec<CensusRecord> = results.iter().map(record).collect();
    Ok(Execution {
        stdout,
        files: vec![
            ("census.csv".into(), csv_string(&rows)?),
            ("census.json".into(), json),
        ],
        code,
    })
}
